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

#include "schur/gf.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace schur {

namespace {

constexpr uint32_t kTableLimit = uint32_t(1) << 20;
constexpr uint32_t kNoLog = 0xFFFFFFFFu;

bool is_prime_u32(uint32_t v)
{
    if (v < 2) return false;
    for (uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

std::vector<uint64_t> distinct_prime_factors(uint64_t v)
{
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

uint64_t powmod_u64(uint64_t b, uint64_t k, uint64_t m)
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

uint32_t least_primitive_root(uint32_t p)
{
    if (p == 2) return 1;
    const auto factors = distinct_prime_factors(p - 1);
    for (uint32_t g = 2; g < p; ++g) {
        bool ok = true;
        for (uint64_t f : factors)
            if (powmod_u64(g, (p - 1) / f, p) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root found");  // unreachable for prime p
}

/* Dense F_p[x] helpers; coefficient vectors run low to high and are trimmed. */
using PVec = std::vector<uint32_t>;

void pv_trim(PVec& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PVec pv_mul(const PVec& a, const PVec& b, uint32_t p)
{
    if (a.empty() || b.empty()) return {};
    PVec c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = uint32_t((c[i + j] + uint64_t(a[i]) * b[j]) % p);
    }
    pv_trim(c);
    return c;
}

/* Reduce a modulo monic f, in place. */
void pv_mod(PVec& a, const PVec& f, uint32_t p)
{
    const size_t df = f.size() - 1;
    while (a.size() > df) {
        const uint32_t c = a.back();
        const size_t shift = a.size() - 1 - df;
        if (c != 0)
            for (size_t j = 0; j < df; ++j)
                a[shift + j] = uint32_t((a[shift + j] + uint64_t(c) * (p - f[j])) % p);
        a.pop_back();
        pv_trim(a);
        if (a.size() <= df) break;
    }
    pv_trim(a);
}

PVec pv_powmod_x(uint64_t k, const PVec& f, uint32_t p)
{
    PVec result{1};
    PVec base{0, 1};
    pv_mod(base, f, p);
    while (k) {
        if (k & 1) {
            result = pv_mul(result, base, p);
            pv_mod(result, f, p);
        }
        base = pv_mul(base, base, p);
        pv_mod(base, f, p);
        k >>= 1;
    }
    return result;
}

/* Trial division by every monic polynomial of degree <= deg(f)/2. */
bool pv_is_irreducible(const PVec& f, uint32_t p)
{
    const size_t d = f.size() - 1;
    if (d == 0) return false;
    if (d == 1) return true;
    for (size_t t = 1; 2 * t <= d; ++t) {
        uint64_t count = 1;
        for (size_t i = 0; i < t; ++i) count *= p;
        for (uint64_t c = 0; c < count; ++c) {
            PVec g(t + 1, 0);
            uint64_t v = c;
            for (size_t i = 0; i < t; ++i) { g[i] = uint32_t(v % p); v /= p; }
            g[t] = 1;
            PVec r = f;
            pv_mod(r, g, p);
            if (r.empty()) return false;
        }
    }
    return true;
}

bool pv_x_is_primitive(const PVec& f, uint32_t p, uint64_t group,
                       const std::vector<uint64_t>& factors)
{
    if (f[0] == 0) return false;  // x divides f
    if (pv_powmod_x(group, f, p) != PVec{1}) return false;
    for (uint64_t ell : factors)
        if (pv_powmod_x(group / ell, f, p) == PVec{1}) return false;
    return true;
}

/* Least packed monic primitive modulus of degree e over F_p. */
PVec canonical_modulus(uint32_t p, uint32_t e)
{
    if (e == 1) return {(p - least_primitive_root(p)) % p, 1};
    uint64_t q = 1;
    for (uint32_t i = 0; i < e; ++i) q *= p;
    const uint64_t group = q - 1;
    const auto factors = distinct_prime_factors(group);
    for (uint64_t c = 1; c < q; ++c) {
        if (c % p == 0) continue;  // x would divide the candidate
        PVec f(e + 1, 0);
        uint64_t v = c;
        for (uint32_t i = 0; i < e; ++i) { f[i] = uint32_t(v % p); v /= p; }
        f[e] = 1;
        if (!pv_is_irreducible(f, p)) continue;
        if (!pv_x_is_primitive(f, p, group, factors)) continue;
        return f;
    }
    throw std::logic_error("no primitive modulus found");  // unreachable
}

}  // namespace

std::shared_ptr<const FieldCtx> FieldCtx::get(uint32_t p, uint32_t e)
{
    if (!is_prime_u32(p)) throw std::invalid_argument("p must be prime");
    if (e < 1) throw std::invalid_argument("e must be >= 1");
    uint64_t q = 1;
    for (uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > max_q) throw std::invalid_argument("field too large: p^e exceeds 2^24");
    }
    static std::mutex mtx;
    static std::map<std::pair<uint32_t, uint32_t>, std::shared_ptr<const FieldCtx>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto& slot = cache[{p, e}];
    if (!slot)
        slot = std::shared_ptr<const FieldCtx>(new FieldCtx(p, e, canonical_modulus(p, e)));
    return slot;
}

std::shared_ptr<const FieldCtx> FieldCtx::with_modulus(uint32_t p,
                                                       const std::vector<uint32_t>& modulus)
{
    if (modulus.size() < 2)
        throw std::invalid_argument("modulus must have degree >= 1");
    return std::shared_ptr<const FieldCtx>(
        new FieldCtx(p, uint32_t(modulus.size() - 1), modulus));
}

FieldCtx::FieldCtx(uint32_t p, uint32_t e, std::vector<uint32_t> modulus)
    : p_(p), e_(e), mod_(std::move(modulus))
{
    if (!is_prime_u32(p_)) throw std::invalid_argument("p must be prime");
    if (e_ < 1) throw std::invalid_argument("e must be >= 1");
    uint64_t q = 1;
    for (uint32_t i = 0; i < e_; ++i) {
        q *= p_;
        if (q > max_q) throw std::invalid_argument("field too large: p^e exceeds 2^24");
    }
    q_ = uint32_t(q);

    if (mod_.size() != size_t(e_) + 1 || mod_.back() != 1)
        throw std::invalid_argument("modulus must be monic of degree e");
    for (uint32_t c : mod_)
        if (c >= p_) throw std::invalid_argument("modulus coefficient out of range");
    if (!pv_is_irreducible(mod_, p_))
        throw std::invalid_argument("modulus is reducible");

    group_factors_ = distinct_prime_factors(q_ - 1);

    if (e_ == 1) {
        gen_ = FqElem{least_primitive_root(p_)};
    } else {
        auto full_order = [&](FqElem a) {
            for (uint64_t ell : group_factors_)
                if (pow_generic(a, (q_ - 1) / ell) == one()) return false;
            return true;
        };
        gen_ = FqElem{0};
        for (uint32_t v = 2; v < q_; ++v) {
            if (full_order(FqElem{v})) { gen_ = FqElem{v}; break; }
        }
        if (gen_.v == 0) throw std::logic_error("no generator found");  // unreachable
    }

    if (q_ <= kTableLimit) {
        exp_.resize(q_ - 1);
        log_.assign(q_, kNoLog);
        FqElem acc = one();
        for (uint32_t i = 0; i < q_ - 1; ++i) {
            exp_[i] = acc.v;
            log_[acc.v] = i;
            acc = mul_generic(acc, gen_);
        }
        if (acc != one()) throw std::logic_error("generator order mismatch");
    }
}

FqElem FieldCtx::from_value(uint32_t v) const
{
    if (v >= q_) throw std::invalid_argument("element value out of range");
    return {v};
}

std::vector<uint32_t> FieldCtx::coeffs(FqElem a) const
{
    std::vector<uint32_t> c(e_);
    uint32_t v = a.v;
    for (uint32_t i = 0; i < e_; ++i) { c[i] = v % p_; v /= p_; }
    return c;
}

FqElem FieldCtx::from_coeffs(const std::vector<uint32_t>& c) const
{
    if (c.size() != e_) throw std::invalid_argument("coefficient vector must have length e");
    uint32_t v = 0;
    for (uint32_t i = e_; i-- > 0;) {
        if (c[i] >= p_) throw std::invalid_argument("coefficient out of range");
        v = v * p_ + c[i];
    }
    return {v};
}

FqElem FieldCtx::add(FqElem a, FqElem b) const
{
    if (p_ == 2) return {a.v ^ b.v};
    uint32_t out = 0, mult = 1, av = a.v, bv = b.v;
    for (uint32_t i = 0; i < e_; ++i) {
        out += ((av + bv) % p_) * mult;
        av /= p_;
        bv /= p_;
        mult *= p_;
    }
    return {out};
}

FqElem FieldCtx::sub(FqElem a, FqElem b) const { return add(a, neg(b)); }

FqElem FieldCtx::neg(FqElem a) const
{
    if (p_ == 2) return a;
    uint32_t out = 0, mult = 1, av = a.v;
    for (uint32_t i = 0; i < e_; ++i) {
        const uint32_t d = av % p_;
        out += (d == 0 ? 0 : p_ - d) * mult;
        av /= p_;
        mult *= p_;
    }
    return {out};
}

FqElem FieldCtx::add_generic(FqElem a, FqElem b) const
{
    uint32_t out = 0, mult = 1, av = a.v, bv = b.v;
    for (uint32_t i = 0; i < e_; ++i) {
        out += ((av + bv) % p_) * mult;
        av /= p_;
        bv /= p_;
        mult *= p_;
    }
    return {out};
}

FqElem FieldCtx::mul_generic(FqElem a, FqElem b) const
{
    if (a.v == 0 || b.v == 0) return {0};
    uint32_t ad[32], bd[32];
    uint64_t prod[63] = {0};
    uint32_t av = a.v, bv = b.v;
    for (uint32_t i = 0; i < e_; ++i) { ad[i] = av % p_; av /= p_; }
    for (uint32_t i = 0; i < e_; ++i) { bd[i] = bv % p_; bv /= p_; }
    for (uint32_t i = 0; i < e_; ++i) {
        if (ad[i] == 0) continue;
        for (uint32_t j = 0; j < e_; ++j)
            prod[i + j] += uint64_t(ad[i]) * bd[j];
    }
    /* fold x^t for t >= e down using x^e = -sum mod_[j] x^j */
    for (uint32_t t = 2 * e_ - 2; t >= e_ && t < 63; --t) {
        const uint64_t c = prod[t] % p_;
        if (c != 0)
            for (uint32_t j = 0; j < e_; ++j)
                prod[t - e_ + j] += c * (p_ - mod_[j]);
        prod[t] = 0;
        if (t == e_) break;
    }
    uint32_t out = 0, mult = 1;
    for (uint32_t i = 0; i < e_; ++i) {
        out += uint32_t(prod[i] % p_) * mult;
        mult *= p_;
    }
    return {out};
}

FqElem FieldCtx::pow_generic(FqElem a, uint64_t k) const
{
    if (a.v == 0) return k == 0 ? one() : zero();
    if (q_ > 2) k %= (q_ - 1);
    FqElem r = one(), b = a;
    while (k) {
        if (k & 1) r = mul_generic(r, b);
        b = mul_generic(b, b);
        k >>= 1;
    }
    return r;
}

FqElem FieldCtx::inv_generic(FqElem a) const
{
    if (a.v == 0) throw std::domain_error("inverse of zero");
    return pow_generic(a, q_ - 2);
}

FqElem FieldCtx::mul(FqElem a, FqElem b) const
{
    if (exp_.empty()) return mul_generic(a, b);
    if (a.v == 0 || b.v == 0) return {0};
    const uint64_t s = uint64_t(log_[a.v]) + log_[b.v];
    return {exp_[s % (q_ - 1)]};
}

FqElem FieldCtx::inv(FqElem a) const
{
    if (a.v == 0) throw std::domain_error("inverse of zero");
    if (exp_.empty()) return pow_generic(a, q_ - 2);
    return {exp_[(q_ - 1 - log_[a.v]) % (q_ - 1)]};
}

FqElem FieldCtx::div(FqElem a, FqElem b) const { return mul(a, inv(b)); }

FqElem FieldCtx::pow(FqElem a, uint64_t k) const
{
    if (a.v == 0) return k == 0 ? one() : zero();
    if (exp_.empty()) return pow_generic(a, k);
    const uint64_t r = (uint64_t(log_[a.v]) * (k % (q_ - 1))) % (q_ - 1);
    return {exp_[r]};
}

uint64_t FieldCtx::ord(FqElem a) const
{
    if (a.v == 0) throw std::domain_error("order of zero");
    uint64_t t = q_ - 1;
    for (uint64_t ell : group_factors_)
        while (t % ell == 0 && pow(a, t / ell) == one())
            t /= ell;
    return t;
}

}  // namespace schur
