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

#include "doctest.h"
#include "schur/extension.hpp"

#include <random>
#include <set>

using namespace schur;

TEST_SUITE_BEGIN("algebra");

TEST_CASE("multiplicative orders")
{
    CHECK(ord_mod(2, 1) == 1);
    CHECK(ord_mod(2, 7) == 3);
    CHECK(ord_mod(2, 15) == 4);
    CHECK(ord_mod(2, 31) == 5);
    CHECK(ord_mod(2, 9) == 6);
    CHECK(ord_mod(3, 8) == 2);
    CHECK(ord_mod(4, 5) == 2);
    CHECK_THROWS_AS(ord_mod(2, 8), std::invalid_argument);
}

TEST_CASE("splitting field of X^7 - 1 over GF(2)")
{
    auto ext = ExtensionCtx::build(FieldCtx::get(2, 1), 7);
    CHECK(ext->r() == 3);
    CHECK(ext->big()->q() == 8);
    CHECK(ext->big()->ord(ext->beta()) == 7);
    /* (8-1)/7 = 1, so beta is the canonical generator x itself */
    CHECK(ext->beta() == ext->big()->generator());

    /* the two degree-3 factors of X^7 - 1 */
    auto f2 = ext->base();
    CHECK(minimal_poly(*ext, 1) == Poly::from_coeffs(f2, {{1}, {1}, {0}, {1}}));
    CHECK(minimal_poly(*ext, 3) == Poly::from_coeffs(f2, {{1}, {0}, {1}, {1}}));
    CHECK(minimal_poly(*ext, 0) == Poly::from_coeffs(f2, {{1}, {1}}));
}

TEST_CASE("minimal polynomial of beta^5 for n = 15")
{
    auto ext = ExtensionCtx::build(FieldCtx::get(2, 1), 15);
    CHECK(ext->r() == 4);
    CHECK(minimal_poly(*ext, 5) == Poly::from_coeffs(ext->base(), {{1}, {1}, {1}}));
}

TEST_CASE("minimal polynomials multiply back to X^n - 1")
{
    for (auto [p, e, n] : {std::tuple<uint32_t, uint32_t, uint64_t>{2, 1, 7},
                           {2, 1, 15},
                           {2, 1, 31},
                           {3, 1, 13},
                           {2, 2, 5},
                           {5, 1, 8}}) {
        auto base = FieldCtx::get(p, e);
        auto ext = ExtensionCtx::build(base, n);
        Poly prod = Poly::one(base);
        std::set<uint64_t> seen;
        for (uint64_t i = 0; i < n; ++i) {
            if (seen.count(i)) continue;
            uint64_t j = i;
            do {
                seen.insert(j);
                j = j * base->q() % n;
            } while (j != i);
            const Poly m = minimal_poly(*ext, i);
            CHECK(m.is_monic());
            prod = prod.times(m);
        }
        CHECK(prod == Poly::x_pow_n_minus_one(base, n));
    }
}

TEST_CASE("minimal polynomials vanish exactly on their coset")
{
    auto ext = ExtensionCtx::build(FieldCtx::get(2, 1), 15);
    const Poly m = minimal_poly(*ext, 3);
    std::set<uint64_t> coset{3, 6, 12, 9};
    for (uint64_t j = 0; j < 15; ++j) {
        const FqElem v = ext->eval_lifted(m, ext->beta_pow(j));
        if (coset.count(j))
            CHECK(v == ext->big()->zero());
        else
            CHECK(v != ext->big()->zero());
    }
}

TEST_CASE("embedding is a field homomorphism")
{
    for (auto [p, e, n] : {std::tuple<uint32_t, uint32_t, uint64_t>{2, 1, 15},
                           {2, 2, 5},     // GF(4) -> GF(16), exercises the basis solver
                           {3, 1, 8},
                           {2, 2, 255}}) {  // GF(4) -> GF(256), r = 4
        auto base = FieldCtx::get(p, e);
        auto ext = ExtensionCtx::build(base, n);
        std::mt19937_64 rng(99);
        for (int t = 0; t < 200; ++t) {
            const FqElem a{uint32_t(rng() % base->q())};
            const FqElem b{uint32_t(rng() % base->q())};
            CHECK(ext->embed(base->add(a, b)) == ext->big()->add(ext->embed(a), ext->embed(b)));
            CHECK(ext->embed(base->mul(a, b)) == ext->big()->mul(ext->embed(a), ext->embed(b)));
            CHECK(ext->in_base(ext->embed(a)));
            CHECK(ext->project(ext->embed(a)) == a);
        }
        CHECK(ext->embed(base->one()) == ext->big()->one());
    }
}

TEST_CASE("flatten is linear over the base field and round-trips")
{
    auto base = FieldCtx::get(2, 2);
    auto ext = ExtensionCtx::build(base, 17);  // ord_17(4) = 4, big field GF(4^4)
    REQUIRE(ext->r() == 4);
    auto big = ext->big();
    std::mt19937_64 rng(100);
    for (int t = 0; t < 300; ++t) {
        const FqElem z{uint32_t(rng() % big->q())};
        const FqElem w{uint32_t(rng() % big->q())};
        const FqElem c{uint32_t(rng() % base->q())};
        const auto fz = ext->flatten(z), fw = ext->flatten(w);
        REQUIRE(fz.size() == 4);
        CHECK(ext->unflatten(fz) == z);
        const auto fsum = ext->flatten(big->add(z, w));
        const auto fscaled = ext->flatten(big->mul(ext->embed(c), z));
        for (uint32_t i = 0; i < 4; ++i) {
            CHECK(fsum[i] == base->add(fz[i], fw[i]));
            CHECK(fscaled[i] == base->mul(c, fz[i]));
        }
    }
    /* beta is not a base element for a proper extension */
    CHECK_FALSE(ext->in_base(ext->beta()));
    CHECK_THROWS_AS(ext->project(ext->beta()), std::invalid_argument);
}

TEST_CASE("extension construction is deterministic")
{
    auto a = ExtensionCtx::build(FieldCtx::get(2, 1), 63);
    auto b = ExtensionCtx::build(FieldCtx::get(2, 1), 63);
    CHECK(a->beta() == b->beta());
    CHECK(a->r() == 6);
    CHECK(a->big().get() == b->big().get());
}

TEST_CASE("extension error paths")
{
    auto f2 = FieldCtx::get(2, 1);
    CHECK_THROWS_AS(ExtensionCtx::build(f2, 6), std::invalid_argument);   // gcd(6, 2) = 2
    CHECK_THROWS_AS(ExtensionCtx::build(f2, 0), std::invalid_argument);
    /* ord_{2^25-1}(2) = 25 exceeds the default cap */
    CHECK_THROWS_AS(ExtensionCtx::build(f2, (uint64_t(1) << 25) - 1), std::invalid_argument);
    CHECK_THROWS_AS(ExtensionCtx::build(f2, 7, 2), std::invalid_argument);  // explicit cap
}

TEST_SUITE_END();
