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

#include "schur/index_set.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

namespace schur {

namespace {

size_t word_count(uint64_t n) { return size_t((n + 63) / 64); }

void mask_top(std::vector<uint64_t>& bits, uint64_t n)
{
    const uint32_t used = uint32_t(n % 64);
    if (used != 0) bits.back() &= (uint64_t(1) << used) - 1;
}

/* dst |= src rotated left by s (indices mod n).  src must have no bits >= n. */
void rotate_or(std::vector<uint64_t>& dst, const std::vector<uint64_t>& src,
               uint64_t s, uint64_t n)
{
    const size_t words = src.size();
    if (s == 0) {
        for (size_t i = 0; i < words; ++i) dst[i] |= src[i];
        return;
    }
    const size_t ws = size_t(s / 64);
    const uint32_t bs = uint32_t(s % 64);
    /* src << s */
    for (size_t i = words; i-- > 0;) {
        const uint64_t lo = (i >= ws) ? src[i - ws] : 0;
        const uint64_t lo2 = (i >= ws + 1) ? src[i - ws - 1] : 0;
        uint64_t w = (bs != 0) ? (lo << bs) | (lo2 >> (64 - bs)) : lo;
        if (i + 1 == words && n % 64 != 0) w &= (uint64_t(1) << (n % 64)) - 1;
        dst[i] |= w;
    }
    /* src >> (n - s) */
    const uint64_t k = n - s;
    const size_t wk = size_t(k / 64);
    const uint32_t bk = uint32_t(k % 64);
    for (size_t i = 0; i < words; ++i) {
        const uint64_t hi = (i + wk < words) ? src[i + wk] : 0;
        const uint64_t hi2 = (i + wk + 1 < words) ? src[i + wk + 1] : 0;
        uint64_t w = (bk != 0) ? (hi >> bk) | (hi2 << (64 - bk)) : hi;
        if (i + 1 == words && n % 64 != 0) w &= (uint64_t(1) << (n % 64)) - 1;
        dst[i] |= w;
    }
}

}  // namespace

IndexSet::IndexSet(uint64_t n, uint32_t q) : n_(n), q_(q)
{
    if (n == 0 || n > max_n) throw std::invalid_argument("n out of supported range");
    if (q < 2) throw std::invalid_argument("q must be at least 2");
    if (std::gcd(n, uint64_t(q)) != 1) throw std::invalid_argument("gcd(n, q) must be 1");
    bits_.assign(word_count(n), 0);
}

IndexSet IndexSet::from_members(uint64_t n, uint32_t q, const std::vector<uint64_t>& members)
{
    IndexSet s(n, q);
    for (uint64_t u : members) s.insert(u);
    return s;
}

IndexSet IndexSet::full(uint64_t n, uint32_t q)
{
    IndexSet s(n, q);
    s.bits_.assign(word_count(n), ~uint64_t(0));
    mask_top(s.bits_, n);
    s.count_ = n;
    return s;
}

bool IndexSet::contains(uint64_t u) const
{
    if (u >= n_) return false;
    return (bits_[size_t(u / 64)] >> (u % 64)) & 1;
}

void IndexSet::insert(uint64_t u)
{
    if (u >= n_) throw std::invalid_argument("member out of range");
    uint64_t& w = bits_[size_t(u / 64)];
    const uint64_t m = uint64_t(1) << (u % 64);
    if (!(w & m)) {
        w |= m;
        ++count_;
        coset_cache_ = -1;
    }
}

std::vector<uint64_t> IndexSet::members() const
{
    std::vector<uint64_t> out;
    out.reserve(size_t(count_));
    for (size_t i = 0; i < bits_.size(); ++i) {
        uint64_t w = bits_[i];
        while (w) {
            out.push_back(i * 64 + uint64_t(std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

bool IndexSet::is_coset_union() const
{
    if (coset_cache_ < 0) {
        bool ok = true;
        for (size_t i = 0; i < bits_.size() && ok; ++i) {
            uint64_t w = bits_[i];
            while (w) {
                const uint64_t u = i * 64 + uint64_t(std::countr_zero(w));
                w &= w - 1;
                if (!contains(u * q_ % n_)) { ok = false; break; }
            }
        }
        coset_cache_ = ok ? 1 : 0;
    }
    return coset_cache_ == 1;
}

IndexSet coset(uint64_t n, uint32_t q, uint64_t u)
{
    IndexSet s(n, q);
    if (u >= n) throw std::invalid_argument("representative out of range");
    uint64_t j = u;
    do {
        s.insert(j);
        j = j * q % n;
    } while (j != u);
    return s;
}

IndexSet closure(const IndexSet& a)
{
    IndexSet out = a;
    std::vector<uint64_t> stack = a.members();
    while (!stack.empty()) {
        const uint64_t u = stack.back();
        stack.pop_back();
        const uint64_t v = u * a.q() % a.n();
        if (!out.contains(v)) {
            out.insert(v);
            stack.push_back(v);
        }
    }
    return out;
}

IndexSet sumset(const IndexSet& a, const IndexSet& b)
{
    if (a.n() != b.n() || a.q() != b.q())
        throw std::invalid_argument("sumset operands live in different rings");
    IndexSet out(a.n(), a.q());
    if (a.empty() || b.empty()) return out;
    const IndexSet& small = a.size() <= b.size() ? a : b;
    const IndexSet& large = a.size() <= b.size() ? b : a;
    std::vector<uint64_t> acc(large.words().size(), 0);
    for (uint64_t s : small.members())
        rotate_or(acc, large.words(), s, a.n());
    for (size_t i = 0; i < acc.size(); ++i) {
        uint64_t w = acc[i];
        while (w) {
            out.insert(i * 64 + uint64_t(std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

IndexSet negate(const IndexSet& a)
{
    IndexSet out(a.n(), a.q());
    for (uint64_t u : a.members())
        out.insert(u == 0 ? 0 : a.n() - u);
    return out;
}

IndexSet complement(const IndexSet& a)
{
    IndexSet out(a.n(), a.q());
    for (uint64_t u = 0; u < a.n(); ++u)
        if (!a.contains(u)) out.insert(u);
    return out;
}

uint64_t amplitude(const IndexSet& a)
{
    if (a.empty()) throw std::invalid_argument("amplitude of the empty set");
    const auto m = a.members();
    uint64_t max_gap = 0;
    for (size_t i = 0; i + 1 < m.size(); ++i)
        max_gap = std::max(max_gap, m[i + 1] - m[i] - 1);
    max_gap = std::max(max_gap, a.n() - m.back() + m.front() - 1);
    return a.n() - max_gap;
}

bool is_subset(const IndexSet& a, const IndexSet& b)
{
    if (a.n() != b.n() || a.q() != b.q())
        throw std::invalid_argument("subset operands live in different rings");
    for (size_t i = 0; i < a.words().size(); ++i)
        if (a.words()[i] & ~b.words()[i]) return false;
    return true;
}

}  // namespace schur
