/*
   Copyright 2026 The schur-cyclic Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "schur/cyclic_code.hpp"

#include <algorithm>
#include <stdexcept>

namespace schur {

namespace {

Poly generator_from_defining_set(const ExtensionCtx& ext, const IndexSet& j_set)
{
    const auto& base = ext.base();
    if (j_set.empty()) return Poly::one(base);
    if (j_set.size() == j_set.n()) return Poly::x_pow_n_minus_one(base, j_set.n());

    const auto& big = ext.big();
    Poly acc = Poly::one(big);
    for (uint64_t j : j_set.members()) {
        const Poly lin = Poly::from_coeffs(big, {big->neg(ext.beta_pow(j)), big->one()});
        acc = acc.times(lin);
    }
    std::vector<FqElem> down(acc.coeffs().size());
    for (size_t i = 0; i < down.size(); ++i) down[i] = ext.project(acc.coeff(i));
    return Poly::from_coeffs(base, std::move(down));
}

}  // namespace

CyclicCode::CyclicCode(std::shared_ptr<const ExtensionCtx> ext, IndexSet gen)
    : ext_(std::move(ext)),
      I_(std::move(gen)),
      J_(complement(I_)),
      g_(generator_from_defining_set(*ext_, J_))
{
}

CyclicCode CyclicCode::from_generating_set(std::shared_ptr<const FieldCtx> base,
                                           const IndexSet& gen, bool auto_close)
{
    if (!base) throw std::invalid_argument("code construction needs a field context");
    if (base->q() > max_q) throw std::invalid_argument("base field too large for codes");
    if (gen.q() != base->q())
        throw std::invalid_argument("generating set was built for a different field size");
    IndexSet i_set = gen;
    if (!i_set.is_coset_union()) {
        if (!auto_close)
            throw std::invalid_argument("generating set is not a union of cyclotomic cosets");
        i_set = closure(i_set);
    }
    auto ext = ExtensionCtx::build(std::move(base), i_set.n());
    return CyclicCode(std::move(ext), std::move(i_set));
}

CyclicCode CyclicCode::square() const
{
    IndexSet s = sumset(I_, I_);
    if (!I_.empty() && !s.is_coset_union())
        throw std::logic_error("sumset of a coset union stopped being coset-closed");
    return CyclicCode(ext_, std::move(s));
}

CyclicCode CyclicCode::dual() const { return CyclicCode(ext_, negate(J_)); }

BoundsReport CyclicCode::bounds() const
{
    if (is_zero_code()) throw std::invalid_argument("bounds of the zero code");
    const uint64_t n = length();
    const IndexSet sq = sumset(I_, I_);
    BoundsReport r;
    r.n = n;
    r.dim_c = dim();
    r.d_c_lower = n - amplitude(I_) + 1;
    r.dim_csq = sq.size();
    r.d_csq_lower = n - amplitude(sq) + 1;
    const int64_t cap = int64_t(n) - 2 * int64_t(dim()) + 2;
    r.singleton_cap = cap > 1 ? uint64_t(cap) : 1;
    return r;
}

GenMatrix CyclicCode::generator_matrix() const
{
    const uint64_t n = length();
    GenMatrix m(field(), n);
    const auto& gc = g_.coeffs();
    std::vector<FqElem> row(static_cast<size_t>(n), FqElem{0});
    for (uint64_t i = 0; i < dim(); ++i) {
        std::fill(row.begin(), row.end(), FqElem{0});
        for (size_t t = 0; t < gc.size(); ++t) row[static_cast<size_t>(i) + t] = gc[t];
        m.append_row(row);
    }
    return m;
}

bool CyclicCode::contains(const std::vector<FqElem>& word) const
{
    if (word.size() != length()) throw std::invalid_argument("word length mismatch");
    const Poly w = Poly::from_coeffs(field(), word);
    for (uint64_t j : J_.members())
        if (ext_->eval_lifted(w, ext_->beta_pow(j)).v != 0) return false;
    return true;
}

GenMatrix subfield_subcode(const IndexSet& m, const ExtensionCtx& ext)
{
    if (m.n() != ext.n())
        throw std::invalid_argument("index set and extension disagree on the length");
    const auto& base = ext.base();
    const uint64_t n = ext.n();
    const uint32_t r = ext.r();
    const auto support = m.members();

    if (support.empty()) return GenMatrix(base, n);

    if (r == 1) {
        /* the evaluation code already lives in the base field */
        std::vector<std::vector<FqElem>> rows;
        for (uint64_t u : support) {
            std::vector<FqElem> row(static_cast<size_t>(n));
            for (uint64_t j = 0; j < n; ++j)
                row[static_cast<size_t>(j)] = ext.beta_pow(j * u % n);
            rows.push_back(std::move(row));
        }
        return GenMatrix::from_rows(base, n, rows).normalized();
    }

    /* unknowns: r base-field coordinates per monomial coefficient f_u */
    const auto& big = ext.big();
    std::vector<FqElem> basis(r);
    for (uint32_t t = 0; t < r; ++t) {
        std::vector<FqElem> e(r, base->zero());
        e[t] = base->one();
        basis[t] = ext.unflatten(e);
    }

    const uint64_t cols = uint64_t(support.size()) * r;
    GenMatrix constraints(base, cols);
    std::vector<FqElem> crow;
    for (uint64_t j = 0; j < n; ++j) {
        /* flatten(b_t beta^{ju}) gives the column of unknown (u, t) */
        std::vector<std::vector<FqElem>> flat(support.size() * r);
        for (size_t ui = 0; ui < support.size(); ++ui) {
            const FqElem w = ext.beta_pow(j * support[ui] % n);
            for (uint32_t t = 0; t < r; ++t)
                flat[ui * r + t] = ext.flatten(big->mul(basis[t], w));
        }
        for (uint32_t h = 1; h < r; ++h) {
            crow.assign(static_cast<size_t>(cols), FqElem{0});
            for (size_t c = 0; c < flat.size(); ++c) crow[c] = flat[c][h];
            constraints.append_row(crow);
        }
    }

    const GenMatrix sols = constraints.nullspace();
    std::vector<std::vector<FqElem>> words;
    for (size_t i = 0; i < sols.row_count(); ++i) {
        const auto c = sols.row(i);
        std::vector<FqElem> f(support.size());
        for (size_t ui = 0; ui < support.size(); ++ui) {
            std::vector<FqElem> coords(c.begin() + int64_t(ui * r),
                                       c.begin() + int64_t(ui * r + r));
            f[ui] = ext.unflatten(coords);
        }
        std::vector<FqElem> word(static_cast<size_t>(n));
        for (uint64_t j = 0; j < n; ++j) {
            FqElem v = big->zero();
            for (size_t ui = 0; ui < support.size(); ++ui)
                v = big->add(v, big->mul(f[ui], ext.beta_pow(j * support[ui] % n)));
            word[static_cast<size_t>(j)] = ext.project(v);
        }
        words.push_back(std::move(word));
    }
    return GenMatrix::from_rows(base, n, words).normalized();
}

Poly mir12_square_generator(const CyclicCode& c)
{
    const auto& base = c.field();
    const uint64_t n = c.length();
    const auto& g = c.generator_poly();
    std::vector<FqElem> gv(static_cast<size_t>(n), FqElem{0});
    for (size_t t = 0; t < g.coeffs().size(); ++t) gv[t] = g.coeff(t);

    Poly acc = Poly::zero(base);
    for (uint64_t j = 0; j < c.dim(); ++j) {
        std::vector<FqElem> prod(static_cast<size_t>(n), FqElem{0});
        for (uint64_t t = 0; t + j < n; ++t)
            prod[static_cast<size_t>(t + j)] = base->mul(gv[static_cast<size_t>(t + j)],
                                                         gv[static_cast<size_t>(t)]);
        acc = poly_gcd(acc, Poly::from_coeffs(base, std::move(prod)));
    }
    if (acc.is_zero()) return Poly::x_pow_n_minus_one(base, n);
    return acc.make_monic();
}

}  // namespace schur
