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

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "schur/extension.hpp"
#include "schur/gen_matrix.hpp"
#include "schur/restricted.hpp"

using schur::bigint;
using schur::build_graph;
using schur::FieldCtx;
using schur::IndexSet;
using schur::RWParams;
using schur::TableId;
using schur::TableRow;
using schur::WalkGraph;

namespace {

std::vector<uint64_t> scan_members(uint32_t q, uint32_t k, uint32_t s, uint32_t m)
{
    return schur::w_set(RWParams{q, k, s, m}).members();
}

uint64_t enumerated_max(const std::vector<uint64_t>& v)
{
    REQUIRE(!v.empty());
    return *std::max_element(v.begin(), v.end());
}

}  // namespace

TEST_SUITE("restricted") {

TEST_CASE("digit weights match hand-checked values")
{
    CHECK(schur::wq(26, 2, 5) == 3);   /* 11010 */
    CHECK(schur::wq(0, 2, 5) == 0);
    CHECK(schur::wq(80, 3, 4) == 8);   /* 2222 in base 3 */

    CHECK(schur::wqs(26, 2, 5, 3) == 2);
    CHECK(schur::wqs(0, 2, 5, 2) == 0);
    CHECK(schur::wqs(26, 2, 5, 5) == schur::wq(26, 2, 5));

    /* s = k collapses to the plain digit sum */
    for (uint64_t t = 0; t < 64; ++t)
        CHECK(schur::wqs(t, 2, 6, 6) == schur::wq(t, 2, 6));
    for (uint64_t t = 0; t < 81; ++t)
        CHECK(schur::wqs(t, 3, 4, 4) == schur::wq(t, 3, 4));

    CHECK_THROWS_AS(schur::wq(32, 2, 5), std::invalid_argument);
    CHECK_THROWS_AS(schur::wqs(3, 2, 5, 0), std::invalid_argument);
    CHECK_THROWS_AS(schur::wqs(3, 2, 5, 6), std::invalid_argument);
    CHECK_THROWS_AS(schur::wqs(3, 1, 5, 2), std::invalid_argument);
}

TEST_CASE("restricted weight is invariant on cyclotomic cosets")
{
    struct Range { uint32_t q, k; } ranges[] = {{2, 10}, {3, 6}, {5, 4}};
    for (auto [q, k] : ranges) {
        uint64_t n = 1;
        for (uint32_t i = 0; i < k; ++i) n *= q;
        n -= 1;
        for (uint32_t s = 1; s <= k; ++s)
            for (uint64_t t = 0; t < n; ++t)
                CHECK(schur::wqs(t, q, k, s) == schur::wqs(t * q % n, q, k, s));
    }
}

TEST_CASE("weight sets match hand-enumerated members")
{
    CHECK(scan_members(2, 5, 3, 1) == std::vector<uint64_t>{0, 1, 2, 4, 8, 16});
    CHECK(scan_members(2, 4, 3, 1) == std::vector<uint64_t>{0, 1, 2, 4, 8});
    CHECK(schur::w_set(RWParams{2, 10, 5, 2}).size() == 126);

    /* with s = k the window cap degenerates to a digit-sum cap */
    {
        IndexSet w = schur::w_set(RWParams{3, 3, 3, 2});
        for (uint64_t t = 0; t < w.n(); ++t)
            CHECK(w.contains(t) == (schur::wq(t, 3, 3) <= 2));
    }

    /* 26 separates the doubled cap from the sumset */
    {
        IndexSet w1 = schur::w_set(RWParams{2, 5, 3, 1});
        IndexSet w2 = schur::w_set(RWParams{2, 5, 3, 2});
        IndexSet sum = schur::sumset(w1, w1);
        CHECK(w2.contains(26));
        CHECK(!sum.contains(26));
        CHECK(schur::is_subset(sum, w2));
    }

    CHECK_THROWS_AS(schur::w_set(RWParams{2, 27, 3, 1}), std::invalid_argument);
}

TEST_CASE("sumsets stay inside the doubled cap")
{
    struct Params { uint32_t q, k, s, m; } cases[] = {
        {2, 5, 3, 1}, {2, 7, 3, 1}, {2, 8, 5, 2}, {3, 5, 3, 1}};
    for (auto [q, k, s, m] : cases) {
        IndexSet w = schur::w_set(RWParams{q, k, s, m});
        IndexSet doubled = schur::w_set(RWParams{q, k, s, 2 * m});
        IndexSet sum = schur::sumset(w, w);
        CHECK(schur::is_subset(sum, doubled));

        uint64_t budget = 2 * ((uint64_t(m) * k) / s);
        for (uint64_t t : w.members())
            CHECK(schur::wq(t, q, k) <= (uint64_t(m) * k) / s);
        for (uint64_t t : sum.members())
            CHECK(schur::wq(t, q, k) <= budget);
    }
}

TEST_CASE("restricted weight is subadditive modulo n")
{
    struct Range { uint32_t q, k; } ranges[] = {{2, 7}, {3, 4}};
    for (auto [q, k] : ranges) {
        uint64_t n = 1;
        for (uint32_t i = 0; i < k; ++i) n *= q;
        n -= 1;
        for (uint32_t s = 1; s <= k; ++s)
            for (uint64_t t = 0; t < n; ++t)
                for (uint64_t u = t; u < n; ++u)
                    CHECK(schur::wqs((t + u) % n, q, k, s) <=
                          schur::wqs(t, q, k, s) + schur::wqs(u, q, k, s));
    }
}

TEST_CASE("digit walks enumerate the same members as the full scan")
{
    struct Params { uint32_t q, k, s, m; } cases[] = {
        {2, 6, 3, 1}, {2, 7, 3, 2}, {2, 8, 5, 2}, {2, 5, 5, 2},
        {2, 9, 3, 1}, {3, 4, 3, 1}, {3, 5, 4, 2}, {5, 3, 2, 1}};
    for (auto [q, k, s, m] : cases) {
        std::vector<uint64_t> walked = schur::walk_members(q, k, s, m);
        CHECK(std::is_sorted(walked.begin(), walked.end()));
        CHECK(walked == scan_members(q, k, s, m));
    }
}

TEST_CASE("extremal members match enumeration and the closed formulas")
{
    CHECK(schur::b_max(RWParams{2, 5, 3, 1}) == 16);
    CHECK(schur::b_max(RWParams{2, 4, 3, 1}) == 8);
    CHECK(schur::b_max(RWParams{2, 5, 5, 2}) == 24);
    CHECK(schur::b_max(RWParams{2, 12, 3, 1}) == 2340);
    CHECK(schur::b_max(RWParams{2, 12, 5, 2}) == 3168);

    CHECK(schur::bhat_max(RWParams{2, 5, 5, 2}) == 30);
    CHECK(schur::bhat_max(RWParams{2, 6, 3, 1}) == 54);
    CHECK(schur::bhat_max(RWParams{2, 9, 5, 2}) == 492);
    CHECK(schur::bhat_max(RWParams{2, 12, 5, 2}) == 3960);

    /* the greedy result is the true maximum at every enumerable size */
    struct Params { uint32_t q, k, s, m; } cases[] = {
        {2, 6, 3, 1}, {2, 8, 3, 1}, {2, 9, 5, 2}, {2, 10, 5, 2},
        {2, 7, 7, 3}, {3, 5, 3, 1}, {3, 6, 5, 2}, {5, 4, 3, 1}};
    for (auto [q, k, s, m] : cases) {
        RWParams p{q, k, s, m};
        CHECK(schur::b_max(p) == enumerated_max(scan_members(q, k, s, m)));

        uint64_t budget = 2 * ((uint64_t(m) * k) / s);
        std::vector<uint64_t> capped;
        for (uint64_t t : scan_members(q, k, s, 2 * m))
            if (schur::wq(t, q, k) <= budget) capped.push_back(t);
        CHECK(schur::bhat_max(p) == enumerated_max(capped));
    }

    /* far beyond enumeration range the internal cross-check still passes */
    CHECK(schur::b_max(RWParams{2, 40, 3, 1}) > (uint64_t(1) << 38));
    CHECK(schur::bhat_max(RWParams{2, 40, 5, 2}) > (uint64_t(1) << 38));
}

TEST_CASE("walk graphs carry the expected characteristic polynomials")
{
    for (uint32_t s : {3u, 4u, 5u, 7u}) {
        WalkGraph g = build_graph(2, s, 1);
        CHECK(g.vertices.size() == s);
        std::vector<bigint> expect(s + 1, 0);
        expect[0] = -1;
        expect[s - 1] = -1;
        expect[s] = 1;
        CHECK(g.charpoly == expect);
    }

    WalkGraph g52 = build_graph(2, 5, 2);
    REQUIRE(g52.vertices.size() == 11);
    std::vector<std::vector<uint32_t>> expect_vertices = {
        {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 0, 1, 1},
        {0, 1, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {1, 0, 0, 0},
        {1, 0, 0, 1}, {1, 0, 1, 0}, {1, 1, 0, 0}};
    CHECK(g52.vertices == expect_vertices);
    std::vector<bigint> expect_cp = {0, 1, 0, 1, 0, 0, -2, 0, -1, 0, -1, 1};
    CHECK(g52.charpoly == expect_cp);

    /* every edge respects the overlap and the combined window weight */
    for (size_t i = 0; i < g52.vertices.size(); ++i)
        for (size_t j = 0; j < g52.vertices.size(); ++j) {
            if (!g52.adj[i][j]) continue;
            const auto& x = g52.vertices[i];
            const auto& y = g52.vertices[j];
            for (size_t t = 1; t < x.size(); ++t) CHECK(x[t] == y[t - 1]);
            uint32_t w = y.back();
            for (uint32_t d : x) w += d;
            CHECK(w <= g52.m);
        }

    CHECK_THROWS_AS(build_graph(2, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(2, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(2, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(1, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(2, 14, 12), std::invalid_argument);
}

TEST_CASE("closed-walk counts follow the trace recurrence")
{
    for (uint32_t s : {3u, 5u}) {
        CHECK(schur::n_count(2, s, 1, 0) == s);
        for (uint32_t k = 1; k < s; ++k) CHECK(schur::n_count(2, s, 1, k) == 1);
    }

    WalkGraph g52 = build_graph(2, 5, 2);
    std::vector<int64_t> seeds = {1, 1, 4, 5, 16, 22, 29, 45, 76, 126};
    for (uint32_t k = 1; k <= 10; ++k)
        CHECK(schur::n_count(g52, k) == seeds[k - 1]);
    CHECK(schur::n_count(g52, 12) == 338);
    CHECK(schur::n_count(2, 3, 1, 12) == 98);

    /* membership scan, digit walk, stored trace, and recurrence all agree */
    struct Params { uint32_t s, m; } cases[] = {{3, 1}, {4, 1}, {5, 2}};
    for (auto [s, m] : cases) {
        WalkGraph g = build_graph(2, s, m);
        for (uint32_t k = s; k <= 14; ++k) {
            bigint counted(schur::walk_members(2, k, s, m).size());
            CHECK(schur::n_count(g, k) == counted);
            if (k <= g.vertices.size()) CHECK(g.traces[k] == counted);
            if (k <= 12) CHECK(bigint(schur::w_set(RWParams{2, k, s, m}).size()) == counted);
        }
    }
}

TEST_CASE("restricted construction reproduces the frozen rows")
{
    auto f2 = FieldCtx::get(2, 1);

    auto [c10, r10] = schur::construct_restricted(f2, 10, 3, 1);
    CHECK(r10 == TableRow{10, 1023, 46, 439, 441, 147, {}});
    CHECK(c10.dim() == 46);
    CHECK(c10.square().dim() == 441);

    auto [c9, r9] = schur::construct_restricted(f2, 9, 5, 2);
    CHECK(r9 == TableRow{9, 511, 76, 119, 430, 19, {}});

    auto [c6, r6] = schur::construct_restricted(f2, 6, 3, 1);
    CHECK(r6 == TableRow{6, 63, 10, 27, 37, 9, {"dsq_exact"}});

    /* the amplitude bound of the code layer is never weaker */
    auto b6 = c6.bounds();
    CHECK(b6.d_c_lower >= r6.d_c_lower);
    CHECK(b6.d_csq_lower >= r6.d_csq_lower);
    CHECK(b6.dim_csq == r6.dim_csq);

    auto [cz, rz] = schur::construct_restricted(f2, 10, 3, 1, true);
    CHECK(rz == TableRow{10, 1023, 45, 440, 440, 148, {"drop_zero"}});
    CHECK(!cz.generating_set().contains(0));

    auto f3 = FieldCtx::get(3, 1);
    auto [c3, r3] = schur::construct_restricted(f3, 4, 3, 1);
    CHECK(r3.n == 80);
    CHECK(r3.dim_c == schur::w_set(RWParams{3, 4, 3, 1}).size());
    CHECK(r3.d_c_lower == 80 - schur::b_max(RWParams{3, 4, 3, 1}));
    CHECK(c3.square().dim() == r3.dim_csq);

    CHECK_THROWS_AS(schur::construct_restricted(f2, 6, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(schur::construct_restricted(f2, 6, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(schur::construct_restricted(f2, 2, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(schur::construct_restricted(nullptr, 6, 3, 1), std::invalid_argument);
}

TEST_CASE("small restricted codes hit their distance bounds exactly")
{
    auto f2 = FieldCtx::get(2, 1);

    auto [c4, r4] = schur::construct_restricted(f2, 4, 3, 1);
    auto d4 = c4.generator_matrix().min_distance();
    REQUIRE(d4.exact);
    CHECK(d4.value == 7);
    CHECK(d4.value == r4.d_c_lower);

    auto sq4 = c4.square().generator_matrix().min_distance();
    REQUIRE(sq4.exact);
    CHECK(sq4.value == 3);
    CHECK(sq4.value == r4.d_csq_lower);
}

TEST_CASE("threshold construction keeps only contained cosets")
{
    auto f2 = FieldCtx::get(2, 1);

    auto [c7, r7] = schur::construct_bch_t(f2, 7, 3);
    CHECK(c7.generating_set().members() == std::vector<uint64_t>{0});
    CHECK(r7.dim_c == 1);
    CHECK(r7.d_c_lower == 4);
    CHECK(r7.d_csq_lower == 1);

    /* at n=15, t=8 the contained cosets are exactly the weight-one set */
    auto [c15, r15] = schur::construct_bch_t(f2, 15, 8);
    auto [w15, rw15] = schur::construct_restricted(f2, 4, 3, 1);
    CHECK(c15.generating_set() == w15.generating_set());
    CHECK(c15.generator_poly() == w15.generator_poly());
    CHECK(r15.dim_c == 5);
    CHECK(r15.d_c_lower == 7);
    CHECK(r15.dim_csq == c15.square().dim());

    /* singleton cosets make the threshold code Reed-Solomon shaped */
    auto f7 = FieldCtx::get(7, 1);
    auto [rs, rrs] = schur::construct_bch_t(f7, 6, 2);
    CHECK(rrs.dim_c == 3);
    CHECK(rrs.k == 1);
    auto [full, rfull] = schur::construct_bch_t(f7, 6, 5);
    CHECK(rfull.dim_c == 6);
    CHECK(rfull.d_c_lower == 1);

    auto f3 = FieldCtx::get(3, 1);
    auto [c8, r8] = schur::construct_bch_t(f3, 8, 3);
    CHECK(c8.generating_set().members() == std::vector<uint64_t>{0, 1, 3});
    CHECK(r8.d_c_lower == 5);
    CHECK(r8.d_csq_lower == 2);

    CHECK_THROWS_AS(schur::construct_bch_t(f2, 7, 0), std::invalid_argument);
    CHECK_THROWS_AS(schur::construct_bch_t(f2, 7, 7), std::invalid_argument);
}

TEST_CASE("digit-sum construction matches the punctured evaluation code")
{
    auto f2 = FieldCtx::get(2, 1);

    auto [c41, r41] = schur::construct_qweight(f2, 4, 1);
    CHECK(r41.dim_c == 5);
    CHECK(r41.d_c_lower == 7);
    CHECK(r41.d_csq_lower == 3);
    auto [w41, rw41] = schur::construct_restricted(f2, 4, 3, 1);
    CHECK(c41.generator_poly() == w41.generator_poly());

    schur::GenMatrix rm = schur::reed_muller(1, 4).puncture({0});
    CHECK(rm.rank() == r41.dim_c);
    auto drm = rm.min_distance();
    auto dcq = c41.generator_matrix().min_distance();
    REQUIRE(drm.exact);
    REQUIRE(dcq.exact);
    CHECK(drm.value == 7);
    CHECK(dcq.value == 7);

    auto [c61, r61] = schur::construct_qweight(f2, 6, 1);
    CHECK(r61.dim_c == 7);
    CHECK(r61.d_c_lower == 31);
    CHECK(r61.d_csq_lower == 15);

    auto [c42, r42] = schur::construct_qweight(f2, 4, 2);
    CHECK(r42.dim_c == 11);
    CHECK(r42.d_c_lower == 3);
    CHECK(r42.d_csq_lower == 1);

    auto f3 = FieldCtx::get(3, 1);
    auto [c31, r31] = schur::construct_qweight(f3, 2, 1);
    CHECK(r31.dim_c == 6);
    CHECK(r31.d_c_lower == 2);
    CHECK(r31.d_csq_lower == 1);

    CHECK_THROWS_AS(schur::construct_qweight(f2, 4, 0), std::invalid_argument);
    CHECK_THROWS_AS(schur::construct_qweight(f2, 4, 3), std::invalid_argument);
}

TEST_CASE("special evaluation words certify the square distances")
{
    auto weight_of = [](const std::vector<schur::FqElem>& w) {
        uint64_t c = 0;
        for (auto e : w)
            if (e.v != 0) ++c;
        return c;
    };

    std::vector<schur::FqElem> w3 = schur::special_low_weight_word(3, 3);
    CHECK(w3.size() == 7);
    CHECK(weight_of(w3) == 1);

    std::vector<schur::FqElem> w6 = schur::special_low_weight_word(6, 3);
    CHECK(w6.size() == 63);
    CHECK(weight_of(w6) == 9);

    std::vector<schur::FqElem> w5 = schur::special_low_weight_word(5, 5);
    CHECK(w5.size() == 31);
    CHECK(weight_of(w5) == 1);

    std::vector<schur::FqElem> w9 = schur::special_low_weight_word(9, 3);
    CHECK(w9.size() == 511);
    CHECK(weight_of(w9) == 73);

    CHECK_THROWS_AS(schur::special_low_weight_word(7, 3), std::invalid_argument);
    CHECK_THROWS_AS(schur::special_low_weight_word(8, 4), std::invalid_argument);
}

TEST_CASE("published tables come out of the recurrences")
{
    std::vector<TableRow> t1 = schur::table(TableId::t1, 3, 12);
    std::vector<TableRow> expect1 = {
        {3, 7, 4, 3, 7, 1, {"dsq_exact"}},
        {4, 15, 5, 7, 11, 3, {}},
        {5, 31, 6, 15, 16, 7, {}},
        {6, 63, 10, 27, 37, 9, {"dsq_exact"}},
        {7, 127, 15, 55, 71, 19, {}},
        {8, 255, 21, 111, 123, 39, {}},
        {9, 511, 31, 219, 232, 73, {"dsq_exact"}},
        {10, 1023, 46, 439, 441, 147, {}},
        {11, 2047, 67, 879, 804, 295, {}},
        {12, 4095, 98, 1755, 1475, 585, {"dsq_exact"}}};
    CHECK(t1 == expect1);

    std::vector<TableRow> t2 = schur::table(TableId::t2, 5, 12);
    std::vector<TableRow> expect2 = {
        {5, 31, 16, 7, 31, 1, {"dsq_exact"}},
        {6, 63, 22, 15, 57, 3, {}},
        {7, 127, 29, 31, 99, 7, {}},
        {8, 255, 45, 63, 223, 9, {}},
        {9, 511, 76, 119, 430, 19, {}},
        {10, 1023, 126, 231, 863, 33, {"dsq_exact"}},
        {11, 2047, 210, 463, 1695, 67, {}},
        {12, 4095, 338, 927, 3293, 135, {}}};
    CHECK(t2 == expect2);

    /* sub-ranges clamp below at k = s */
    std::vector<TableRow> one = schur::table(TableId::t1, 8, 8);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == TableRow{8, 255, 21, 111, 123, 39, {}});
    CHECK(schur::table(TableId::t1, 1, 4).size() == 2);

    /* recurrence rows equal enumeration rows */
    auto f2 = FieldCtx::get(2, 1);
    CHECK(schur::table(TableId::t1, 7, 7)[0] ==
          schur::construct_restricted(f2, 7, 3, 1).second);
    CHECK(schur::table(TableId::t2, 6, 6)[0] ==
          schur::construct_restricted(f2, 6, 5, 2).second);

    CHECK_THROWS_AS(schur::table(TableId::t1, 9, 8), std::invalid_argument);
    CHECK_THROWS_AS(schur::table(TableId::t1, 3, 27), std::invalid_argument);
}

}
