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

#include "schur/gen_matrix.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

namespace schur {

namespace {

size_t words_for(uint64_t n) { return size_t((n + 63) / 64); }

uint64_t popcount_row(const std::vector<uint64_t>& r)
{
    uint64_t w = 0;
    for (uint64_t x : r) w += uint64_t(std::popcount(x));
    return w;
}

/*
 * Incremental GF(2) row reducer.  Rows are inserted one at a time and reduced
 * against the pivots seen so far; this keeps the Schur-square rank oracle at
 * O(rows * rank * words) without materializing the full product list.
 */
struct BitEchelon {
    uint64_t ncols;
    size_t words;
    std::vector<std::vector<uint64_t>> rows;
    std::vector<uint64_t> pivots;
    std::vector<int64_t> row_of_pivot;

    explicit BitEchelon(uint64_t n)
        : ncols(n), words(words_for(n)), row_of_pivot(size_t(n), -1)
    {
    }

    bool insert(std::vector<uint64_t> r)
    {
        size_t w = 0;
        while (true) {
            while (w < words && r[w] == 0) ++w;
            if (w == words) return false;
            const uint64_t b = w * 64 + uint64_t(std::countr_zero(r[w]));
            const int64_t owner = row_of_pivot[size_t(b)];
            if (owner < 0) {
                row_of_pivot[size_t(b)] = int64_t(rows.size());
                pivots.push_back(b);
                rows.push_back(std::move(r));
                return true;
            }
            const auto& other = rows[size_t(owner)];
            for (size_t i = w; i < words; ++i) r[i] ^= other[i];
        }
    }

    void back_substitute()
    {
        std::vector<size_t> order(rows.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](size_t a, size_t b) { return pivots[a] < pivots[b]; });
        for (size_t oi = order.size(); oi-- > 0;) {
            const size_t i = order[oi];
            const uint64_t p = pivots[i];
            for (size_t oj = 0; oj < oi; ++oj) {
                const size_t j = order[oj];
                if ((rows[j][size_t(p / 64)] >> (p % 64)) & 1)
                    for (size_t t = 0; t < words; ++t) rows[j][t] ^= rows[i][t];
            }
        }
    }

    std::vector<std::vector<uint64_t>> sorted_rows() const
    {
        std::vector<size_t> order(rows.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](size_t a, size_t b) { return pivots[a] < pivots[b]; });
        std::vector<std::vector<uint64_t>> out;
        out.reserve(rows.size());
        for (size_t i : order) out.push_back(rows[i]);
        return out;
    }
};

/* Generic-field counterpart of BitEchelon; rows hold encoded elements and
 * pivot entries are normalized to 1 on insertion. */
struct GenEchelon {
    const FieldCtx* f;
    uint64_t ncols;
    std::vector<std::vector<uint32_t>> rows;
    std::vector<uint64_t> pivots;
    std::vector<int64_t> row_of_pivot;

    GenEchelon(const FieldCtx* field, uint64_t n)
        : f(field), ncols(n), row_of_pivot(size_t(n), -1)
    {
    }

    bool insert(std::vector<uint32_t> r)
    {
        for (uint64_t c = 0; c < ncols; ++c) {
            if (r[size_t(c)] == 0) continue;
            const int64_t owner = row_of_pivot[size_t(c)];
            if (owner < 0) {
                const FqElem s = f->inv(FqElem{r[size_t(c)]});
                for (uint64_t j = c; j < ncols; ++j)
                    r[size_t(j)] = f->mul(FqElem{r[size_t(j)]}, s).v;
                row_of_pivot[size_t(c)] = int64_t(rows.size());
                pivots.push_back(c);
                rows.push_back(std::move(r));
                return true;
            }
            const auto& other = rows[size_t(owner)];
            const FqElem t = FqElem{r[size_t(c)]};
            for (uint64_t j = c; j < ncols; ++j)
                r[size_t(j)] = f->sub(FqElem{r[size_t(j)]},
                                      f->mul(t, FqElem{other[size_t(j)]})).v;
        }
        return false;
    }

    void back_substitute()
    {
        std::vector<size_t> order(rows.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](size_t a, size_t b) { return pivots[a] < pivots[b]; });
        for (size_t oi = order.size(); oi-- > 0;) {
            const size_t i = order[oi];
            const uint64_t p = pivots[i];
            for (size_t oj = 0; oj < oi; ++oj) {
                const size_t j = order[oj];
                const FqElem c = FqElem{rows[j][size_t(p)]};
                if (c.v == 0) continue;
                for (uint64_t t = p; t < ncols; ++t)
                    rows[j][size_t(t)] = f->sub(FqElem{rows[j][size_t(t)]},
                                                f->mul(c, FqElem{rows[i][size_t(t)]})).v;
            }
        }
    }

    std::vector<std::vector<uint32_t>> sorted_rows() const
    {
        std::vector<size_t> order(rows.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](size_t a, size_t b) { return pivots[a] < pivots[b]; });
        std::vector<std::vector<uint32_t>> out;
        out.reserve(rows.size());
        for (size_t i : order) out.push_back(rows[i]);
        return out;
    }
};

bool enumeration_fits(uint32_t q, uint64_t k, uint32_t cap_bits)
{
    unsigned __int128 total = 1;
    const unsigned __int128 cap = (unsigned __int128)1 << cap_bits;
    for (uint64_t i = 0; i < k; ++i) {
        total *= q;
        if (total > cap) return false;
    }
    return true;
}

}  // namespace

GenMatrix::GenMatrix(std::shared_ptr<const FieldCtx> f, uint64_t n)
    : f_(std::move(f)), n_(n)
{
    if (!f_) throw std::invalid_argument("matrix needs a field context");
    if (n_ == 0) throw std::invalid_argument("matrix length must be positive");
    packed_ = (f_->q() == 2);
}

GenMatrix GenMatrix::from_rows(std::shared_ptr<const FieldCtx> f, uint64_t n,
                               const std::vector<std::vector<FqElem>>& rows)
{
    GenMatrix m(std::move(f), n);
    for (const auto& r : rows) m.append_row(r);
    return m;
}

GenMatrix GenMatrix::identity(std::shared_ptr<const FieldCtx> f, uint64_t n)
{
    GenMatrix m(std::move(f), n);
    std::vector<FqElem> row(size_t(n), FqElem{0});
    for (uint64_t i = 0; i < n; ++i) {
        row[size_t(i)] = FqElem{1};
        m.append_row(row);
        row[size_t(i)] = FqElem{0};
    }
    return m;
}

size_t GenMatrix::row_count() const { return packed_ ? wrows_.size() : grows_.size(); }

void GenMatrix::pack_row(const std::vector<FqElem>& r)
{
    std::vector<uint64_t> w(words_for(n_), 0);
    for (uint64_t j = 0; j < n_; ++j)
        if (r[size_t(j)].v) w[size_t(j / 64)] |= uint64_t(1) << (j % 64);
    wrows_.push_back(std::move(w));
}

void GenMatrix::append_row(const std::vector<FqElem>& r)
{
    if (r.size() != n_) throw std::invalid_argument("row length does not match the matrix");
    for (FqElem c : r)
        if (c.v >= f_->q()) throw std::invalid_argument("entry outside the field");
    if (packed_) {
        pack_row(r);
    } else {
        std::vector<uint32_t> g(static_cast<size_t>(n_));
        for (uint64_t j = 0; j < n_; ++j) g[size_t(j)] = r[size_t(j)].v;
        grows_.push_back(std::move(g));
    }
}

std::vector<FqElem> GenMatrix::row(size_t i) const
{
    std::vector<FqElem> out(static_cast<size_t>(n_));
    if (packed_) {
        const auto& w = wrows_.at(i);
        for (uint64_t j = 0; j < n_; ++j)
            out[size_t(j)] = FqElem{uint32_t((w[size_t(j / 64)] >> (j % 64)) & 1)};
    } else {
        const auto& g = grows_.at(i);
        for (uint64_t j = 0; j < n_; ++j) out[size_t(j)] = FqElem{g[size_t(j)]};
    }
    return out;
}

std::vector<std::vector<uint32_t>> GenMatrix::generic_rows() const
{
    if (!packed_) return grows_;
    std::vector<std::vector<uint32_t>> out;
    out.reserve(wrows_.size());
    for (size_t i = 0; i < wrows_.size(); ++i) {
        std::vector<uint32_t> g(static_cast<size_t>(n_));
        for (uint64_t j = 0; j < n_; ++j)
            g[size_t(j)] = uint32_t((wrows_[i][size_t(j / 64)] >> (j % 64)) & 1);
        out.push_back(std::move(g));
    }
    return out;
}

GenMatrix GenMatrix::force_generic() const
{
    GenMatrix m(f_, n_);
    m.packed_ = false;
    m.grows_ = generic_rows();
    return m;
}

GenMatrix GenMatrix::normalized() const
{
    GenMatrix out(f_, n_);
    out.packed_ = packed_;
    if (packed_) {
        BitEchelon ech(n_);
        for (const auto& r : wrows_) ech.insert(r);
        ech.back_substitute();
        out.wrows_ = ech.sorted_rows();
    } else {
        GenEchelon ech(f_.get(), n_);
        for (const auto& r : grows_) ech.insert(r);
        ech.back_substitute();
        out.grows_ = ech.sorted_rows();
    }
    return out;
}

uint64_t GenMatrix::rank() const
{
    if (packed_) {
        BitEchelon ech(n_);
        for (const auto& r : wrows_) ech.insert(r);
        return ech.rows.size();
    }
    GenEchelon ech(f_.get(), n_);
    for (const auto& r : grows_) ech.insert(r);
    return ech.rows.size();
}

bool GenMatrix::row_space_equals(const GenMatrix& other) const
{
    if (f_.get() != other.f_.get() || n_ != other.n_) return false;
    const GenMatrix a = normalized();
    const GenMatrix b = other.normalized();
    if (a.packed_ == b.packed_)
        return a.packed_ ? a.wrows_ == b.wrows_ : a.grows_ == b.grows_;
    return a.generic_rows() == b.generic_rows();
}

GenMatrix GenMatrix::schur_square() const
{
    const GenMatrix basis = normalized();
    GenMatrix out(f_, n_);
    out.packed_ = packed_;
    if (packed_) {
        BitEchelon ech(n_);
        const auto& rows = basis.wrows_;
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = i; j < rows.size(); ++j) {
                std::vector<uint64_t> prod(rows[i].size());
                for (size_t t = 0; t < prod.size(); ++t) prod[t] = rows[i][t] & rows[j][t];
                ech.insert(std::move(prod));
            }
        ech.back_substitute();
        out.wrows_ = ech.sorted_rows();
    } else {
        GenEchelon ech(f_.get(), n_);
        const auto& rows = basis.grows_;
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = i; j < rows.size(); ++j) {
                std::vector<uint32_t> prod(static_cast<size_t>(n_));
                for (uint64_t t = 0; t < n_; ++t)
                    prod[size_t(t)] = f_->mul(FqElem{rows[i][size_t(t)]},
                                              FqElem{rows[j][size_t(t)]}).v;
                ech.insert(std::move(prod));
            }
        ech.back_substitute();
        out.grows_ = ech.sorted_rows();
    }
    return out;
}

uint64_t GenMatrix::schur_square_rank() const
{
    const GenMatrix basis = normalized();
    if (packed_) {
        BitEchelon ech(n_);
        const auto& rows = basis.wrows_;
        for (size_t i = 0; i < rows.size(); ++i) {
            for (size_t j = i; j < rows.size(); ++j) {
                std::vector<uint64_t> prod(rows[i].size());
                for (size_t t = 0; t < prod.size(); ++t) prod[t] = rows[i][t] & rows[j][t];
                ech.insert(std::move(prod));
                if (ech.rows.size() == n_) return n_;
            }
        }
        return ech.rows.size();
    }
    GenEchelon ech(f_.get(), n_);
    const auto& rows = basis.grows_;
    for (size_t i = 0; i < rows.size(); ++i) {
        for (size_t j = i; j < rows.size(); ++j) {
            std::vector<uint32_t> prod(static_cast<size_t>(n_));
            for (uint64_t t = 0; t < n_; ++t)
                prod[size_t(t)] = f_->mul(FqElem{rows[i][size_t(t)]},
                                          FqElem{rows[j][size_t(t)]}).v;
            ech.insert(std::move(prod));
            if (ech.rows.size() == n_) return n_;
        }
    }
    return ech.rows.size();
}

namespace {

std::vector<uint64_t> checked_positions(const std::vector<uint64_t>& positions, uint64_t n)
{
    std::vector<uint64_t> pos = positions;
    std::sort(pos.begin(), pos.end());
    pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
    if (!pos.empty() && pos.back() >= n)
        throw std::invalid_argument("coordinate position out of range");
    if (pos.size() >= n)
        throw std::invalid_argument("cannot delete every coordinate");
    return pos;
}

}  // namespace

GenMatrix GenMatrix::puncture(const std::vector<uint64_t>& positions) const
{
    const auto pos = checked_positions(positions, n_);
    std::vector<bool> drop(size_t(n_), false);
    for (uint64_t p : pos) drop[size_t(p)] = true;
    const auto rows = generic_rows();
    std::vector<std::vector<FqElem>> kept;
    kept.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<FqElem> nr;
        nr.reserve(size_t(n_) - pos.size());
        for (uint64_t j = 0; j < n_; ++j)
            if (!drop[size_t(j)]) nr.push_back(FqElem{r[size_t(j)]});
        kept.push_back(std::move(nr));
    }
    return from_rows(f_, n_ - pos.size(), kept).normalized();
}

GenMatrix GenMatrix::shorten(const std::vector<uint64_t>& positions) const
{
    const auto pos = checked_positions(positions, n_);
    auto rows = generic_rows();
    for (uint64_t p : pos) {
        size_t pivot = rows.size();
        for (size_t i = 0; i < rows.size(); ++i)
            if (rows[i][size_t(p)] != 0) { pivot = i; break; }
        if (pivot == rows.size()) continue;  // already zero on this coordinate
        const FqElem inv_p = f_->inv(FqElem{rows[pivot][size_t(p)]});
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == pivot || rows[i][size_t(p)] == 0) continue;
            const FqElem c = f_->mul(FqElem{rows[i][size_t(p)]}, inv_p);
            for (uint64_t j = 0; j < n_; ++j)
                rows[i][size_t(j)] = f_->sub(FqElem{rows[i][size_t(j)]},
                                             f_->mul(c, FqElem{rows[pivot][size_t(j)]})).v;
        }
        rows.erase(rows.begin() + int64_t(pivot));
    }
    std::vector<bool> drop(size_t(n_), false);
    for (uint64_t p : pos) drop[size_t(p)] = true;
    std::vector<std::vector<FqElem>> kept;
    kept.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<FqElem> nr;
        for (uint64_t j = 0; j < n_; ++j)
            if (!drop[size_t(j)]) nr.push_back(FqElem{r[size_t(j)]});
        kept.push_back(std::move(nr));
    }
    return from_rows(f_, n_ - pos.size(), kept).normalized();
}

GenMatrix GenMatrix::repeat(uint32_t copies) const
{
    if (copies == 0) throw std::invalid_argument("need at least one copy");
    const auto rows = generic_rows();
    std::vector<std::vector<FqElem>> out;
    out.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<FqElem> nr(size_t(n_) * copies);
        for (uint32_t c = 0; c < copies; ++c)
            for (uint64_t j = 0; j < n_; ++j)
                nr[size_t(c * n_ + j)] = FqElem{r[size_t(j)]};
        out.push_back(std::move(nr));
    }
    return from_rows(f_, n_ * copies, out);
}

GenMatrix GenMatrix::nullspace() const
{
    GenEchelon ech(f_.get(), n_);
    for (const auto& r : generic_rows()) ech.insert(r);
    ech.back_substitute();
    const auto rref = ech.sorted_rows();
    std::vector<bool> is_pivot(size_t(n_), false);
    std::vector<uint64_t> pivot_col(rref.size());
    {
        auto piv = ech.pivots;
        std::sort(piv.begin(), piv.end());
        for (size_t i = 0; i < piv.size(); ++i) {
            pivot_col[i] = piv[i];
            is_pivot[size_t(piv[i])] = true;
        }
    }
    std::vector<std::vector<FqElem>> basis;
    for (uint64_t fc = 0; fc < n_; ++fc) {
        if (is_pivot[size_t(fc)]) continue;
        std::vector<FqElem> x(size_t(n_), FqElem{0});
        x[size_t(fc)] = FqElem{1};
        for (size_t i = 0; i < rref.size(); ++i)
            x[size_t(pivot_col[i])] = f_->neg(FqElem{rref[i][size_t(fc)]});
        basis.push_back(std::move(x));
    }
    return from_rows(f_, n_, basis).normalized();
}

DistanceResult GenMatrix::min_distance(const DistanceBudget& budget) const
{
    const GenMatrix basis = normalized();
    const uint64_t k = basis.row_count();
    if (k == 0) throw std::invalid_argument("minimum distance of the zero code");

    DistanceResult res;
    res.seed = budget.seed;

    if (enumeration_fits(f_->q(), k, budget.exhaustive_cap_bits)) {
        res.method = DistanceMethod::exhaustive;
        res.exact = true;
        uint64_t best = ~uint64_t(0);
        if (packed_) {
            const auto& rows = basis.wrows_;
            std::vector<uint64_t> cur(words_for(n_), 0), bestw;
            const uint64_t total = uint64_t(1) << k;
            for (uint64_t i = 1; i < total; ++i) {
                const auto& r = rows[size_t(std::countr_zero(i))];
                for (size_t t = 0; t < cur.size(); ++t) cur[t] ^= r[t];
                const uint64_t w = popcount_row(cur);
                if (w < best) {
                    best = w;
                    bestw = cur;
                }
            }
            res.value = best;
            res.witness.resize(static_cast<size_t>(n_));
            for (uint64_t j = 0; j < n_; ++j)
                res.witness[size_t(j)] = FqElem{uint32_t((bestw[size_t(j / 64)] >> (j % 64)) & 1)};
        } else {
            const auto& rows = basis.grows_;
            const uint32_t q = f_->q();
            std::vector<uint32_t> digits(size_t(k), 0), cur(size_t(n_), 0), bestv;
            unsigned __int128 total = 1;
            for (uint64_t i = 0; i < k; ++i) total *= q;
            for (unsigned __int128 step = 1; step < total; ++step) {
                size_t pos = 0;
                while (true) {
                    const uint32_t old = digits[pos];
                    const uint32_t nv = (old + 1 == q) ? 0 : old + 1;
                    digits[pos] = nv;
                    const FqElem delta = f_->sub(FqElem{nv}, FqElem{old});
                    for (uint64_t j = 0; j < n_; ++j)
                        cur[size_t(j)] = f_->add(FqElem{cur[size_t(j)]},
                                                 f_->mul(delta, FqElem{rows[pos][size_t(j)]})).v;
                    if (nv != 0) break;
                    ++pos;
                }
                uint64_t w = 0;
                for (uint64_t j = 0; j < n_; ++j) w += (cur[size_t(j)] != 0);
                if (w < best) {
                    best = w;
                    bestv = cur;
                }
            }
            res.value = best;
            res.witness.resize(static_cast<size_t>(n_));
            for (uint64_t j = 0; j < n_; ++j) res.witness[size_t(j)] = FqElem{bestv[size_t(j)]};
        }
        return res;
    }

    if (budget.samples == 0) {
        res.method = DistanceMethod::bound_only;
        res.value = budget.known_lower.value_or(0);
        res.exact = false;
        return res;
    }

    /* random codewords; the recorded seed makes the run reproducible */
    res.method = DistanceMethod::witness;
    std::mt19937_64 rng(budget.seed);
    uint64_t best = ~uint64_t(0);
    if (packed_) {
        const auto& rows = basis.wrows_;
        std::vector<uint64_t> cur(words_for(n_)), bestw;
        for (uint64_t trial = 0; trial < budget.samples; ++trial) {
            bool nonzero = false;
            while (!nonzero) {
                std::fill(cur.begin(), cur.end(), 0);
                uint64_t ent = 0;
                int avail = 0;
                for (uint64_t i = 0; i < k; ++i) {
                    if (avail == 0) {
                        ent = rng();
                        avail = 64;
                    }
                    if (ent & 1) {
                        nonzero = true;
                        for (size_t t = 0; t < cur.size(); ++t) cur[t] ^= rows[size_t(i)][t];
                    }
                    ent >>= 1;
                    --avail;
                }
            }
            const uint64_t w = popcount_row(cur);
            if (w < best) {
                best = w;
                bestw = cur;
            }
        }
        res.value = best;
        res.witness.resize(static_cast<size_t>(n_));
        for (uint64_t j = 0; j < n_; ++j)
            res.witness[size_t(j)] = FqElem{uint32_t((bestw[size_t(j / 64)] >> (j % 64)) & 1)};
    } else {
        const uint32_t q = f_->q();
        const auto& rows = basis.grows_;
        std::vector<uint32_t> bestv;
        std::vector<uint32_t> cur(static_cast<size_t>(n_));
        std::vector<uint32_t> msg(static_cast<size_t>(k));
        for (uint64_t trial = 0; trial < budget.samples; ++trial) {
            bool nonzero = false;
            while (!nonzero) {
                for (auto& d : msg) {
                    d = uint32_t(rng() % q);
                    nonzero |= (d != 0);
                }
            }
            std::fill(cur.begin(), cur.end(), 0);
            for (uint64_t i = 0; i < k; ++i) {
                if (msg[size_t(i)] == 0) continue;
                const FqElem c{msg[size_t(i)]};
                for (uint64_t j = 0; j < n_; ++j)
                    cur[size_t(j)] = f_->add(FqElem{cur[size_t(j)]},
                                             f_->mul(c, FqElem{rows[size_t(i)][size_t(j)]})).v;
            }
            uint64_t w = 0;
            for (uint64_t j = 0; j < n_; ++j) w += (cur[size_t(j)] != 0);
            if (w < best) {
                best = w;
                bestv = cur;
            }
        }
        res.value = best;
        res.witness.resize(static_cast<size_t>(n_));
        for (uint64_t j = 0; j < n_; ++j) res.witness[size_t(j)] = FqElem{bestv[size_t(j)]};
    }
    res.exact = budget.known_lower.has_value() && best == *budget.known_lower;
    return res;
}

GenMatrix reed_solomon(std::shared_ptr<const FieldCtx> f,
                       const std::vector<FqElem>& points, uint32_t m)
{
    if (points.empty()) throw std::invalid_argument("need at least one evaluation point");
    if (uint64_t(m) >= points.size())
        throw std::invalid_argument("degree bound must be below the length");
    {
        auto sorted = points;
        std::sort(sorted.begin(), sorted.end());
        for (size_t i = 0; i + 1 < sorted.size(); ++i)
            if (sorted[i] == sorted[i + 1])
                throw std::invalid_argument("evaluation points must be distinct");
    }
    std::vector<std::vector<FqElem>> rows;
    for (uint32_t i = 0; i <= m; ++i) {
        std::vector<FqElem> r(points.size());
        for (size_t j = 0; j < points.size(); ++j) r[j] = f->pow(points[j], i);
        rows.push_back(std::move(r));
    }
    return GenMatrix::from_rows(std::move(f), points.size(), rows);
}

GenMatrix reed_muller(uint32_t r, uint32_t k)
{
    if (k == 0 || k > 26) throw std::invalid_argument("k out of supported range");
    if (r > k) throw std::invalid_argument("order exceeds the number of variables");
    auto f2 = FieldCtx::get(2, 1);
    const uint64_t n = uint64_t(1) << k;
    std::vector<std::vector<FqElem>> rows;
    for (uint32_t d = 0; d <= r; ++d) {
        for (uint64_t mask = 0; mask < n; ++mask) {
            if (uint32_t(std::popcount(mask)) != d) continue;
            std::vector<FqElem> row(static_cast<size_t>(n));
            for (uint64_t j = 0; j < n; ++j)
                row[size_t(j)] = FqElem{uint32_t((j & mask) == mask)};
            rows.push_back(std::move(row));
        }
    }
    return GenMatrix::from_rows(f2, n, rows);
}

ConcatParams concat_params(uint32_t q, uint32_t s, uint64_t m)
{
    if (q < 2 || s < 1) throw std::invalid_argument("bad concatenation parameters");
    unsigned __int128 n = 1;
    for (uint32_t i = 0; i < 2 * s + 1; ++i) {
        n *= q;
        if (n > (unsigned __int128)1 << 62)
            throw std::invalid_argument("concatenation parameters out of range");
    }
    unsigned __int128 inner = 1;
    for (uint32_t i = 0; i < s; ++i) inner *= q;
    inner += 1;
    if ((unsigned __int128)m * inner >= n)
        throw std::invalid_argument("outer degree too large for a positive distance bound");
    const unsigned __int128 len = (unsigned __int128)(s + 1) * (2 * s + 1) * n;
    if (len > (unsigned __int128)1 << 62)
        throw std::invalid_argument("concatenation parameters out of range");
    ConcatParams out;
    out.length = uint64_t(len);
    out.dim = uint64_t(2 * s + 1) * (m + 1);
    out.d_square_lower = uint64_t(n - (unsigned __int128)m * inner);
    return out;
}

}  // namespace schur
