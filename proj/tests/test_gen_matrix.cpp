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
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "schur/gen_matrix.hpp"

using schur::ConcatParams;
using schur::DistanceBudget;
using schur::DistanceMethod;
using schur::FieldCtx;
using schur::FqElem;
using schur::GenMatrix;

namespace {

std::vector<FqElem> bits(std::initializer_list<uint32_t> vs)
{
    std::vector<FqElem> out;
    for (uint32_t v : vs) out.push_back(FqElem{v});
    return out;
}

GenMatrix hamming74()
{
    auto f2 = FieldCtx::get(2, 1);
    return GenMatrix::from_rows(f2, 7,
                                {bits({1, 1, 0, 1, 0, 0, 0}),
                                 bits({0, 1, 1, 0, 1, 0, 0}),
                                 bits({0, 0, 1, 1, 0, 1, 0}),
                                 bits({0, 0, 0, 1, 1, 0, 1})});
}

GenMatrix random_matrix(std::shared_ptr<const FieldCtx> f, uint64_t n, size_t rows,
                        std::mt19937_64& rng)
{
    GenMatrix m(f, n);
    std::vector<FqElem> r(static_cast<size_t>(n));
    for (size_t i = 0; i < rows; ++i) {
        for (auto& c : r) c = FqElem{uint32_t(rng() % f->q())};
        m.append_row(r);
    }
    return m;
}

/* rebuilds a full codeword list by mixed-radix message enumeration; the
 * independent path against which min_distance and schur ranks are checked */
uint64_t naive_distance(const GenMatrix& g)
{
    const auto f = g.field();
    const uint64_t q = f->q();
    const size_t k = g.row_count();
    std::vector<std::vector<FqElem>> rows;
    for (size_t i = 0; i < k; ++i) rows.push_back(g.row(i));
    std::vector<uint32_t> msg(k, 0);
    uint64_t best = ~uint64_t(0);
    while (true) {
        size_t pos = 0;
        while (pos < k && msg[pos] + 1 == q) msg[pos++] = 0;
        if (pos == k) break;
        ++msg[pos];
        std::vector<FqElem> w(size_t(g.length()), FqElem{0});
        for (size_t i = 0; i < k; ++i) {
            if (msg[i] == 0) continue;
            for (uint64_t j = 0; j < g.length(); ++j)
                w[size_t(j)] = f->add(w[size_t(j)], f->mul(FqElem{msg[i]}, rows[i][size_t(j)]));
        }
        uint64_t wt = 0;
        for (auto c : w) wt += (c.v != 0);
        if (wt > 0 && wt < best) best = wt;
    }
    return best;
}

}  // namespace

TEST_SUITE("linear")
{
    TEST_CASE("hamming code: rank, distance, square")
    {
        auto g = hamming74();
        CHECK(g.rank() == 4);
        auto d = g.min_distance();
        CHECK(d.value == 3);
        CHECK(d.exact);
        CHECK(d.method == DistanceMethod::exhaustive);
        uint64_t wt = 0;
        for (auto c : d.witness) wt += (c.v != 0);
        CHECK(wt == 3);

        auto sq = g.schur_square();
        CHECK(sq.rank() == 7);
        CHECK(g.schur_square_rank() == 7);
        CHECK(sq.row_space_equals(GenMatrix::identity(g.field(), 7)));
        CHECK(sq.min_distance().value == 1);
    }

    TEST_CASE("full space squares to itself")
    {
        auto f2 = FieldCtx::get(2, 1);
        auto id = GenMatrix::identity(f2, 9);
        CHECK(id.schur_square().row_space_equals(id));
        auto f5 = FieldCtx::get(5, 1);
        auto id5 = GenMatrix::identity(f5, 6);
        CHECK(id5.schur_square().row_space_equals(id5));
    }

    TEST_CASE("repetition code distance equals the length")
    {
        auto f3 = FieldCtx::get(3, 1);
        for (uint64_t m : {1, 4, 9}) {
            GenMatrix g(f3, m);
            g.append_row(std::vector<FqElem>(size_t(m), FqElem{1}));
            auto d = g.min_distance();
            CHECK(d.value == m);
            CHECK(d.exact);
        }
    }

    TEST_CASE("tetracode over GF(3)")
    {
        auto f3 = FieldCtx::get(3, 1);
        auto g = GenMatrix::from_rows(f3, 4, {bits({1, 1, 1, 0}), bits({0, 1, 2, 1})});
        CHECK(g.rank() == 2);
        auto d = g.min_distance();
        CHECK(d.value == 3);
        CHECK(d.exact);
        CHECK(naive_distance(g) == 3);
    }

    TEST_CASE("normalization is canonical and idempotent")
    {
        std::mt19937_64 rng(11);
        auto f4 = FieldCtx::get(2, 2);
        auto m = random_matrix(f4, 12, 7, rng);
        auto n1 = m.normalized();
        auto n2 = n1.normalized();
        CHECK(n1.row_space_equals(n2));
        CHECK(n1.rank() == n1.row_count());
        for (size_t i = 0; i < n1.row_count(); ++i) CHECK(n1.row(i) == n2.row(i));
    }

    TEST_CASE("row operations preserve the row space")
    {
        std::mt19937_64 rng(7);
        for (auto [p, e] : {std::pair<uint32_t, uint32_t>{2, 1}, {3, 1}, {2, 3}}) {
            auto f = FieldCtx::get(p, e);
            auto m = random_matrix(f, 20, 6, rng);
            // simulate invertible row operations by appending sums of rows
            auto shuffled = m;
            for (int t = 0; t < 10; ++t) {
                const size_t a = rng() % m.row_count();
                const size_t b = rng() % m.row_count();
                auto ra = shuffled.row(a);
                auto rb = shuffled.row(b);
                std::vector<FqElem> sum(ra.size());
                const FqElem c{uint32_t(1 + rng() % (f->q() - 1))};
                for (size_t j = 0; j < ra.size(); ++j)
                    sum[j] = f->add(ra[j], f->mul(c, rb[j]));
                shuffled.append_row(sum);
            }
            CHECK(m.row_space_equals(shuffled));
            CHECK(m.normalized().rank() == shuffled.rank());
        }
    }

    TEST_CASE("packed and generic paths agree")
    {
        std::mt19937_64 rng(1234);
        auto f2 = FieldCtx::get(2, 1);
        for (uint64_t n : {10, 63, 64, 65, 130}) {
            auto m = random_matrix(f2, n, 8, rng);
            REQUIRE(m.packed());
            auto gm = m.force_generic();
            REQUIRE(!gm.packed());
            CHECK(m.rank() == gm.rank());
            CHECK(m.schur_square_rank() == gm.schur_square_rank());
            CHECK(m.row_space_equals(gm));
            auto na = m.normalized();
            auto nb = gm.normalized();
            REQUIRE(na.row_count() == nb.row_count());
            for (size_t i = 0; i < na.row_count(); ++i) CHECK(na.row(i) == nb.row(i));
            if (m.rank() > 0) {
                auto da = m.min_distance();
                auto db = gm.min_distance();
                CHECK(da.value == db.value);
            }
        }
    }

    TEST_CASE("distance agrees with plain enumeration")
    {
        std::mt19937_64 rng(99);
        for (auto [p, e] : {std::pair<uint32_t, uint32_t>{2, 1}, {3, 1}, {2, 2}}) {
            auto f = FieldCtx::get(p, e);
            for (int rep = 0; rep < 4; ++rep) {
                auto m = random_matrix(f, 9, 4, rng);
                if (m.rank() == 0) continue;
                CHECK(m.min_distance().value == naive_distance(m));
            }
        }
    }

    TEST_CASE("square dimension bounds")
    {
        std::mt19937_64 rng(5);
        for (auto [p, e] : {std::pair<uint32_t, uint32_t>{2, 1}, {3, 1}, {2, 2}}) {
            auto f = FieldCtx::get(p, e);
            auto m = random_matrix(f, 16, 5, rng).normalized();
            const uint64_t k = m.rank();
            if (k == 0) continue;
            const uint64_t ks = m.schur_square_rank();
            CHECK(ks >= k);
            CHECK(ks <= k * (k + 1) / 2);
        }
    }

    TEST_CASE("reed-solomon squares have rank 2m+1")
    {
        auto f8 = FieldCtx::get(2, 3);
        std::vector<FqElem> pts;
        for (uint32_t i = 1; i < 8; ++i) pts.push_back(f8->from_value(i));
        for (uint32_t m = 0; m <= 3; ++m) {
            auto rs = schur::reed_solomon(f8, pts, m);
            CHECK(rs.rank() == m + 1);
            CHECK(rs.schur_square_rank() == std::min<uint64_t>(7, 2 * m + 1));
            // MDS distance n-m as a sanity check on the evaluation rows
            CHECK(rs.min_distance().value == 7 - m);
        }
        CHECK_THROWS_AS(schur::reed_solomon(f8, {f8->one(), f8->one()}, 0),
                        std::invalid_argument);
    }

    TEST_CASE("reed-muller parameters and square")
    {
        auto rm14 = schur::reed_muller(1, 4);
        CHECK(rm14.rank() == 5);
        auto d14 = rm14.min_distance();
        CHECK(d14.value == 8);
        CHECK(d14.exact);

        auto rm24 = schur::reed_muller(2, 4);
        CHECK(rm24.rank() == 11);
        CHECK(rm24.min_distance().value == 4);

        auto sq = rm14.schur_square();
        CHECK(sq.row_space_equals(rm24));
        CHECK(sq.min_distance().value == 4);

        CHECK_THROWS_AS(schur::reed_muller(5, 4), std::invalid_argument);
        CHECK_THROWS_AS(schur::reed_muller(1, 0), std::invalid_argument);
    }

    TEST_CASE("puncture and shorten the hamming code")
    {
        auto g = hamming74();
        auto p = g.puncture({0});
        CHECK(p.length() == 6);
        CHECK(p.rank() == 4);
        CHECK(p.min_distance().value == 2);

        auto s = g.shorten({0});
        CHECK(s.length() == 6);
        CHECK(s.rank() == 3);
        CHECK(s.min_distance().value == 3);

        CHECK(g.puncture({}).row_space_equals(g));
        CHECK_THROWS_AS(g.puncture({0, 1, 2, 3, 4, 5, 6}), std::invalid_argument);
        CHECK_THROWS_AS(g.puncture({7}), std::invalid_argument);
        CHECK_THROWS_AS(g.shorten({9}), std::invalid_argument);
    }

    TEST_CASE("shortened words vanish on the removed support")
    {
        // every shortened-code word extends (by zeros) to a word of the parent
        auto g = hamming74();
        auto s = g.shorten({2, 5});
        auto f = g.field();
        for (size_t i = 0; i < s.row_count(); ++i) {
            auto r = s.row(i);
            std::vector<FqElem> ext(7, FqElem{0});
            size_t t = 0;
            for (uint64_t j = 0; j < 7; ++j)
                if (j != 2 && j != 5) ext[size_t(j)] = r[t++];
            GenMatrix probe = g;
            probe.append_row(ext);
            CHECK(probe.rank() == g.rank());
        }
    }

    TEST_CASE("repeat scales length and square distance")
    {
        auto g = hamming74();
        CHECK(g.repeat(1).row_space_equals(g));
        auto r2 = g.repeat(2);
        CHECK(r2.length() == 14);
        CHECK(r2.rank() == 4);
        CHECK(r2.min_distance().value == 6);
        CHECK(r2.schur_square().min_distance().value == 2);

        auto f2 = FieldCtx::get(2, 1);
        auto full4 = GenMatrix::identity(f2, 4);
        auto rep3 = full4.repeat(3);
        CHECK(rep3.length() == 12);
        CHECK(rep3.rank() == 4);
        CHECK(rep3.min_distance().value == 3);
        CHECK_THROWS_AS(g.repeat(0), std::invalid_argument);
    }

    TEST_CASE("nullspace is the orthogonal complement")
    {
        std::mt19937_64 rng(42);
        for (auto [p, e] : {std::pair<uint32_t, uint32_t>{2, 1}, {3, 1}, {2, 2}}) {
            auto f = FieldCtx::get(p, e);
            auto m = random_matrix(f, 11, 5, rng);
            auto h = m.nullspace();
            CHECK(h.rank() + m.rank() == 11);
            for (size_t i = 0; i < m.row_count(); ++i) {
                auto a = m.row(i);
                for (size_t j = 0; j < h.row_count(); ++j) {
                    auto b = h.row(j);
                    FqElem dot{0};
                    for (size_t t = 0; t < a.size(); ++t)
                        dot = f->add(dot, f->mul(a[t], b[t]));
                    CHECK(dot == f->zero());
                }
            }
        }
        auto f2 = FieldCtx::get(2, 1);
        CHECK(GenMatrix::identity(f2, 5).nullspace().row_count() == 0);
    }

    TEST_CASE("sampled distance search and bound-only reporting")
    {
        auto g = hamming74();
        DistanceBudget tight;
        tight.exhaustive_cap_bits = 2;  // force the sampling path
        tight.samples = 2000;
        tight.seed = 17;
        tight.known_lower = 3;
        auto d = g.min_distance(tight);
        CHECK(d.method == DistanceMethod::witness);
        CHECK(d.value == 3);
        CHECK(d.exact);
        CHECK(d.seed == 17);

        auto gg = g.force_generic();
        auto dg = gg.min_distance(tight);
        CHECK(dg.method == DistanceMethod::witness);
        CHECK(dg.value == 3);

        DistanceBudget none;
        none.exhaustive_cap_bits = 2;
        none.samples = 0;
        none.known_lower = 5;
        auto b = g.min_distance(none);
        CHECK(b.method == DistanceMethod::bound_only);
        CHECK(b.value == 5);
        CHECK(!b.exact);
    }

    TEST_CASE("concatenation parameter arithmetic")
    {
        auto a = schur::concat_params(2, 3, 6);
        CHECK(a.length == 3584);
        CHECK(a.dim == 49);
        CHECK(a.d_square_lower == 74);

        auto b = schur::concat_params(2, 3, 7);
        CHECK(b.length == 3584);
        CHECK(b.dim == 56);
        CHECK(b.d_square_lower == 65);

        CHECK_THROWS_AS(schur::concat_params(2, 3, 15), std::invalid_argument);
        CHECK_THROWS_AS(schur::concat_params(1, 3, 1), std::invalid_argument);
    }

    TEST_CASE("input validation")
    {
        auto f3 = FieldCtx::get(3, 1);
        GenMatrix m(f3, 4);
        CHECK_THROWS_AS(m.append_row(bits({1, 2})), std::invalid_argument);
        CHECK_THROWS_AS(m.append_row(bits({1, 2, 3, 0})), std::invalid_argument);
        CHECK_THROWS_AS(m.min_distance(), std::invalid_argument);
        CHECK_THROWS_AS(GenMatrix(f3, 0), std::invalid_argument);
        CHECK_THROWS_AS(GenMatrix(nullptr, 4), std::invalid_argument);
    }
}
