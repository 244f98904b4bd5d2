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
#include "schur/verify.hpp"

using schur::SuiteResult;

TEST_SUITE("verify") {

TEST_CASE("square oracles agree on every coset union")
{
    SuiteResult r = schur::verify_theorem1({7, 15});
    CHECK(r.pass());
    CHECK(r.cases == 8 + 32);
    CHECK(r.first_failure.empty());

    /* worker count changes timings only */
    SuiteResult parallel = schur::verify_theorem1({7, 15}, 4);
    CHECK(parallel.pass());
    CHECK(parallel.cases == r.cases);
    CHECK(parallel.failures == r.failures);
}

TEST_CASE("subadditivity holds exhaustively and under sampling")
{
    SuiteResult ex = schur::verify_srw(6, 1, 0, 0, 0);
    CHECK(ex.pass());
    CHECK(ex.cases == 21);

    SuiteResult sampled = schur::verify_srw(0, 10, 10, 2000, 42, 2);
    CHECK(sampled.pass());
    CHECK(sampled.cases == 10);
}

TEST_CASE("recurrence rows equal enumeration rows for both families")
{
    SuiteResult r = schur::verify_tables(false, 4);
    CHECK(r.pass());
    CHECK(r.cases == 10 + 8);
}

TEST_CASE("exact distances sit between the published bounds and the caps")
{
    SuiteResult r = schur::verify_distances(2);
    CHECK(r.pass());
    CHECK(r.cases == 7);
}

}
