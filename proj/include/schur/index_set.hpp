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

#pragma once

#include <cstdint>
#include <vector>

namespace schur {

/*
 * Subset of Z/nZ tagged with the field size q against which cyclotomic
 * closure is judged.  Stored as a dense bitset; n is capped at 2^26, which
 * covers the whole supported code-length envelope, so no sparse fallback
 * is kept around.
 *
 * gcd(n, q) = 1 is required at construction: multiplication by q must
 * permute Z/nZ for cosets to partition the residues.
 */
class IndexSet {
public:
    static constexpr uint64_t max_n = uint64_t(1) << 26;

    IndexSet(uint64_t n, uint32_t q);
    static IndexSet from_members(uint64_t n, uint32_t q, const std::vector<uint64_t>& members);
    static IndexSet full(uint64_t n, uint32_t q);

    uint64_t n() const { return n_; }
    uint32_t q() const { return q_; }
    uint64_t size() const { return count_; }
    bool empty() const { return count_ == 0; }
    bool contains(uint64_t u) const;
    void insert(uint64_t u);
    std::vector<uint64_t> members() const;

    /* true iff the set is a union of q-cyclotomic cosets (cached) */
    bool is_coset_union() const;

    const std::vector<uint64_t>& words() const { return bits_; }

    friend bool operator==(const IndexSet& a, const IndexSet& b)
    {
        return a.n_ == b.n_ && a.q_ == b.q_ && a.bits_ == b.bits_;
    }

private:
    uint64_t n_;
    uint32_t q_;
    uint64_t count_ = 0;
    std::vector<uint64_t> bits_;
    mutable int8_t coset_cache_ = -1;
};

/* The q-cyclotomic coset of u modulo n. */
IndexSet coset(uint64_t n, uint32_t q, uint64_t u);
/* Smallest coset union containing the set. */
IndexSet closure(const IndexSet& a);
/* {a + b mod n : a in A, b in B}; empty if either operand is empty. */
IndexSet sumset(const IndexSet& a, const IndexSet& b);
/* {-a mod n : a in A} */
IndexSet negate(const IndexSet& a);
IndexSet complement(const IndexSet& a);
/* Length of the shortest contiguous cyclic run containing the set;
 * throws on the empty set. */
uint64_t amplitude(const IndexSet& a);
bool is_subset(const IndexSet& a, const IndexSet& b);

}  // namespace schur
