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
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "schur/cyclic_code.hpp"
#include "schur/gf.hpp"
#include "schur/index_set.hpp"

// Restricted-weight machinery over Z/nZ with n = q^k - 1.
//
// An exponent t < q^k is viewed through its k base-q digits, and its
// restricted weight is the largest digit sum found in any of the k cyclic
// windows of s consecutive digits.  Capping that weight at m carves out an
// exponent set W whose cyclic code has dimension |W|, distance at least
// n - max(W), and a square whose distance is controlled the same way.  The
// functions here build those sets, the extremal elements, the walk graph
// that counts |W| without enumeration, and the resulting codes.

namespace schur {

using bigint = boost::multiprecision::cpp_int;

// Parameter bundle (q, k, s, m): digits base q, k of them, window length s,
// window weight cap m.
struct RWParams {
    uint32_t q = 2;
    uint32_t k = 0;
    uint32_t s = 0;
    uint32_t m = 0;
};

// Digit sum of t in base q, t < q^k.
uint32_t wq(uint64_t t, uint32_t q, uint32_t k);

// Restricted weight: max digit sum over the k cyclic windows of s
// consecutive base-q digits of t.  Requires 1 <= s <= k.  With s == k this
// collapses to wq.
uint32_t wqs(uint64_t t, uint32_t q, uint32_t k, uint32_t s);

// W_{k,s,m} = { t in [0, q^k - 1) : wqs(t) <= m } as a dense IndexSet over
// n = q^k - 1.  Scans all q^k values; requires q^k <= 2^26.  The result is
// closed under multiplication by q mod n (asserted).
IndexSet w_set(const RWParams& p);

// Same member list produced by walking the digit DFS instead of scanning
// [0, q^k).  Output-sensitive, so it stays cheap long after the full scan
// becomes infeasible.  Sorted ascending.
std::vector<uint64_t> walk_members(uint32_t q, uint32_t k, uint32_t s,
                                   uint32_t m);

// B_{k,s,m} = max W_{k,s,m}, built greedily digit by digit from the most
// significant end.  For q = 2 the closed formula is evaluated as well and a
// mismatch throws logic_error.
uint64_t b_max(const RWParams& p);

// Bhat_{k,s,2m} = max { t in W_{k,s,2m} : wq(t) <= 2*floor(mk/s) }.  The
// argument carries the original m; the doubled window cap and the digit
// budget are derived internally.  Greedy plus the q = 2 closed-form
// cross-check, as above.
uint64_t bhat_max(const RWParams& p);

// De Bruijn-style walk graph on the (s-1)-digit strings of digit sum at
// most m.  Vertices are listed in increasing numeric value, most
// significant digit first.  Closed walks of length k >= s are in bijection
// with W_{k,s,m}.
struct WalkGraph {
    uint32_t q = 0;
    uint32_t s = 0;
    uint32_t m = 0;
    std::vector<std::vector<uint32_t>> vertices;
    std::vector<std::vector<uint8_t>> adj;
    // Characteristic polynomial of the adjacency matrix, p[0] + p[1] X +
    // ... + p[g] X^g with p[g] = 1, and the traces Tr(A^0) .. Tr(A^g).
    std::vector<bigint> charpoly;
    std::vector<bigint> traces;
};

// Requires 1 <= m < s and at most 4096 vertices.  The characteristic
// polynomial is computed exactly from the traces; a non-integral quotient
// in that computation throws logic_error.
WalkGraph build_graph(uint32_t q, uint32_t s, uint32_t m);

// N'_{k,s,m} = Tr(A^k).  Stored traces answer k <= g directly; larger k
// use the characteristic-polynomial recurrence.  Equals |W_{k,s,m}| for
// k >= s.
bigint n_count(const WalkGraph& g, uint32_t k);
bigint n_count(uint32_t q, uint32_t s, uint32_t m, uint32_t k);

// One row of the summary tables.  Distances are lower bounds unless the
// matching flag says otherwise.
struct TableRow {
    uint32_t k = 0;
    uint64_t n = 0;
    uint64_t dim_c = 0;
    uint64_t d_c_lower = 0;
    uint64_t dim_csq = 0;
    uint64_t d_csq_lower = 0;
    // "dsq_exact" when d_csq_lower is the true square distance,
    // "drop_zero" when the index 0 was removed from the generating set.
    std::vector<std::string> flags;

    bool operator==(const TableRow&) const = default;
};

// Cyclic code with generating set W_{k,s,m} (minus {0} when drop_zero),
// plus the row of guaranteed parameters.  Requires 1 <= m <= (s-1)/2 and
// s <= k; drop_zero additionally requires 2*floor(mk/s) < k.  Under
// drop_zero the dimension shrinks by one and both distance bounds gain one.
std::pair<CyclicCode, TableRow> construct_restricted(
    std::shared_ptr<const FieldCtx> base, uint32_t k, uint32_t s, uint32_t m,
    bool drop_zero = false);

// Cyclic code whose defining exponents are the q-cosets mod n contained in
// {0, ..., t}, 0 < t <= n-1.  Guarantees d(C) >= n - t and
// d(C*2) >= max(1, n - 2t).  The dimension is checked against the general
// lower bound n - (n-t-1)*ord_n(q) and, for q = 2, against
// dim >= n - (n-t)*ord_n(2)/2; a violation throws logic_error.
std::pair<CyclicCode, TableRow> construct_bch_t(
    std::shared_ptr<const FieldCtx> base, uint64_t n, uint64_t t);

// Cyclic code with generating set { t < q^k - 1 : wq(t) <= (q-1)h },
// 1 <= h, 2h <= k.  Guarantees d(C) >= q^(k-h) - 1 and
// d(C*2) >= max(1, q^(k-2h) - 1).
std::pair<CyclicCode, TableRow> construct_qweight(
    std::shared_ptr<const FieldCtx> base, uint32_t k, uint32_t h);

// Explicit word of weight n/p in the square of the binary restricted code,
// where (family_s, p) is (3, 7) or (5, 31) and family_s divides k.  The
// word evaluates (X^n - 1)/(X^(n/p) - 1) at the powers of the primitive
// root; weight and membership in the square are asserted (logic_error).
// Its existence pins the square distance bound as exact for these k.
std::vector<FqElem> special_low_weight_word(uint32_t k, uint32_t family_s);

// The two published binary families: t1 is (s, m) = (3, 1), t2 is (5, 2).
enum class TableId { t1, t2 };

// Rows for k in [k_min, k_max] (clamped below at k = s).  Dimension comes
// from the walk-graph recurrence and the distance columns from the doubling
// recurrences; only the square dimension, which has no recurrence, is
// computed from the walk members.  Requires k_max <= 26.
std::vector<TableRow> table(TableId which, uint32_t k_min, uint32_t k_max);

}  // namespace schur
