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

#include "schur/extension.hpp"

#include <numeric>
#include <stdexcept>

namespace schur {

namespace {

constexpr uint64_t kMaxN = uint64_t(1) << 26;

uint64_t powmod_int(uint64_t b, uint64_t k, uint64_t m)
{
    uint64_t r = 1 % m;
    b %= m;
    while (k) {
        if (k & 1) r = (unsigned __int128)r * b % m;
        b = (unsigned __int128)b * b % m;
        k >>= 1;
    }
    return r;
}

/* Invert a dim x dim matrix over F_p (row-major).  Throws if singular. */
std::vector<uint32_t> invert_mod_p(std::vector<uint32_t> m, uint32_t dim, uint32_t p)
{
    std::vector<uint32_t> inv(size_t(dim) * dim, 0);
    for (uint32_t i = 0; i < dim; ++i) inv[size_t(i) * dim + i] = 1;
    for (uint32_t col = 0; col < dim; ++col) {
        uint32_t pivot = col;
        while (pivot < dim && m[size_t(pivot) * dim + col] == 0) ++pivot;
        if (pivot == dim) throw std::logic_error("basis matrix is singular");
        if (pivot != col) {
            for (uint32_t j = 0; j < dim; ++j) {
                std::swap(m[size_t(pivot) * dim + j], m[size_t(col) * dim + j]);
                std::swap(inv[size_t(pivot) * dim + j], inv[size_t(col) * dim + j]);
            }
        }
        const uint64_t s = powmod_int(m[size_t(col) * dim + col], p - 2, p);
        for (uint32_t j = 0; j < dim; ++j) {
            m[size_t(col) * dim + j] = uint32_t(m[size_t(col) * dim + j] * s % p);
            inv[size_t(col) * dim + j] = uint32_t(inv[size_t(col) * dim + j] * s % p);
        }
        for (uint32_t row = 0; row < dim; ++row) {
            if (row == col) continue;
            const uint64_t c = m[size_t(row) * dim + col];
            if (c == 0) continue;
            for (uint32_t j = 0; j < dim; ++j) {
                m[size_t(row) * dim + j] = uint32_t(
                    (m[size_t(row) * dim + j] + (p - c) * m[size_t(col) * dim + j]) % p);
                inv[size_t(row) * dim + j] = uint32_t(
                    (inv[size_t(row) * dim + j] + (p - c) * inv[size_t(col) * dim + j]) % p);
            }
        }
    }
    return inv;
}

}  // namespace

uint32_t ord_mod(uint64_t q, uint64_t n)
{
    if (n == 0) throw std::invalid_argument("n must be positive");
    if (std::gcd(n, q) != 1) throw std::invalid_argument("gcd(n, q) must be 1");
    if (n == 1) return 1;
    uint64_t acc = q % n;
    for (uint64_t r = 1; r <= n; ++r) {
        if (acc == 1) return uint32_t(r);
        acc = uint64_t((unsigned __int128)acc * q % n);
    }
    throw std::logic_error("multiplicative order not found");  // unreachable
}

std::shared_ptr<const ExtensionCtx> ExtensionCtx::build(std::shared_ptr<const FieldCtx> base,
                                                        uint64_t n, uint32_t r_cap)
{
    if (!base) throw std::invalid_argument("missing base field");
    if (n == 0 || n > kMaxN) throw std::invalid_argument("n out of supported range");

    auto ext = std::shared_ptr<ExtensionCtx>(new ExtensionCtx());
    ext->base_ = std::move(base);
    ext->n_ = n;
    ext->r_ = ord_mod(ext->base_->q(), n);
    if (ext->r_ > r_cap)
        throw std::invalid_argument("splitting field degree exceeds the configured cap");

    const uint32_t p = ext->base_->p();
    const uint32_t e = ext->base_->e();
    const uint32_t q = ext->base_->q();
    ext->big_ = (ext->r_ == 1) ? ext->base_ : FieldCtx::get(p, e * ext->r_);
    const auto& big = ext->big_;

    /* embedding table */
    ext->embed_.resize(q);
    if (ext->r_ == 1 || e == 1) {
        /* constants (and the r = 1 identity) keep their encoding */
        for (uint32_t v = 0; v < q; ++v) ext->embed_[v] = FqElem{v};
    } else {
        Poly lifted = Poly::from_coeffs(big, [&] {
            std::vector<FqElem> c;
            for (uint32_t d : ext->base_->modulus()) c.push_back(FqElem{d});
            return c;
        }());
        FqElem theta{0};
        bool found = false;
        for (uint32_t v = 0; v < big->q(); ++v)
            if (lifted.eval(FqElem{v}) == big->zero()) { theta = FqElem{v}; found = true; break; }
        if (!found) throw std::logic_error("base modulus has no root in the extension");

        std::vector<FqElem> tp(e, big->one());
        for (uint32_t j = 1; j < e; ++j) tp[j] = big->mul(tp[j - 1], theta);
        for (uint32_t v = 0; v < q; ++v) {
            FqElem acc{0};
            uint32_t rest = v;
            for (uint32_t j = 0; j < e; ++j) {
                acc = big->add(acc, big->mul(FqElem{rest % p}, tp[j]));
                rest /= p;
            }
            ext->embed_[v] = acc;
        }

        /* change of basis {theta^j x^i} -> packed digits, inverted once */
        const uint32_t dim = e * ext->r_;
        std::vector<uint32_t> m(size_t(dim) * dim, 0);
        const FqElem xbig = big->from_value(p);
        FqElem xp = big->one();
        for (uint32_t i = 0; i < ext->r_; ++i) {
            for (uint32_t j = 0; j < e; ++j) {
                const auto digits = big->coeffs(big->mul(xp, tp[j]));
                for (uint32_t t = 0; t < dim; ++t)
                    m[size_t(t) * dim + (i * e + j)] = digits[t];
            }
            xp = big->mul(xp, xbig);
        }
        ext->flat_ = invert_mod_p(std::move(m), dim, p);
    }

    /* primitive n-th root of unity */
    ext->beta_ = big->pow(big->generator(), (uint64_t(big->q()) - 1) / n);
    if (big->ord(ext->beta_) != n) throw std::logic_error("beta has wrong order");
    if (n <= (uint64_t(1) << 20)) {
        ext->beta_pow_.resize(n);
        FqElem acc = big->one();
        for (uint64_t i = 0; i < n; ++i) {
            ext->beta_pow_[i] = acc;
            acc = big->mul(acc, ext->beta_);
        }
    }
    return ext;
}

FqElem ExtensionCtx::beta_pow(uint64_t i) const
{
    i %= n_;
    if (!beta_pow_.empty()) return beta_pow_[i];
    return big_->pow(beta_, i);
}

FqElem ExtensionCtx::embed(FqElem a) const
{
    if (a.v >= base_->q()) throw std::invalid_argument("element outside the base field");
    return embed_[a.v];
}

std::vector<FqElem> ExtensionCtx::flatten(FqElem z) const
{
    if (r_ == 1) return {z};
    const uint32_t e = base_->e(), p = base_->p();
    if (e == 1) {
        std::vector<FqElem> out(r_);
        const auto digits = big_->coeffs(z);
        for (uint32_t i = 0; i < r_; ++i) out[i] = FqElem{digits[i]};
        return out;
    }
    const uint32_t dim = e * r_;
    const auto y = big_->coeffs(z);
    std::vector<FqElem> out(r_);
    for (uint32_t i = 0; i < r_; ++i) {
        std::vector<uint32_t> digits(e);
        for (uint32_t j = 0; j < e; ++j) {
            uint64_t s = 0;
            const uint32_t t = i * e + j;
            for (uint32_t u = 0; u < dim; ++u)
                s += uint64_t(flat_[size_t(t) * dim + u]) * y[u];
            digits[j] = uint32_t(s % p);
        }
        out[i] = base_->from_coeffs(digits);
    }
    return out;
}

FqElem ExtensionCtx::unflatten(const std::vector<FqElem>& coords) const
{
    if (coords.size() != r_) throw std::invalid_argument("expected r coordinates");
    if (r_ == 1) return coords[0];
    const FqElem xbig = big_->from_value(base_->p());
    FqElem acc{0}, xp = big_->one();
    for (uint32_t i = 0; i < r_; ++i) {
        acc = big_->add(acc, big_->mul(embed(coords[i]), xp));
        xp = big_->mul(xp, xbig);
    }
    return acc;
}

bool ExtensionCtx::in_base(FqElem z) const
{
    if (r_ == 1) return true;
    const auto coords = flatten(z);
    for (uint32_t i = 1; i < r_; ++i)
        if (coords[i].v != 0) return false;
    return true;
}

FqElem ExtensionCtx::project(FqElem z) const
{
    const auto coords = flatten(z);
    for (uint32_t i = 1; i < r_; ++i)
        if (coords[i].v != 0)
            throw std::invalid_argument("element does not lie in the embedded base field");
    return coords[0];
}

FqElem ExtensionCtx::eval_lifted(const Poly& f, FqElem point) const
{
    if (f.field().get() != base_.get())
        throw std::invalid_argument("polynomial is not over the base field");
    FqElem acc{0};
    const auto& c = f.coeffs();
    for (size_t i = c.size(); i-- > 0;)
        acc = big_->add(big_->mul(acc, point), embed(c[i]));
    return acc;
}

Poly minimal_poly(const ExtensionCtx& ext, uint64_t i)
{
    const uint64_t n = ext.n();
    const uint64_t q = ext.base()->q();
    i %= n;
    const auto& big = ext.big();
    Poly m = Poly::one(big);
    uint64_t j = i;
    do {
        m = m.times(Poly::from_coeffs(big, {big->neg(ext.beta_pow(j)), big->one()}));
        j = j * q % n;
    } while (j != i);

    std::vector<FqElem> down(size_t(m.degree()) + 1);
    for (size_t t = 0; t < down.size(); ++t) {
        const FqElem c = m.coeff(t);
        if (!ext.in_base(c))
            throw std::logic_error("minimal polynomial coefficient escaped the base field");
        down[t] = ext.project(c);
    }
    return Poly::from_coeffs(ext.base(), std::move(down));
}

}  // namespace schur
