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
#include <string>
#include <vector>

// Cross-checking suites.  Each suite runs a batch of independent cases
// against redundant computation paths and reports the first disagreement.
// Workers split the cases when jobs > 1; results are reduced in case order,
// so the outcome is deterministic regardless of the worker count.

namespace schur {

struct SuiteResult {
    std::string suite;
    uint64_t cases = 0;
    uint64_t failures = 0;
    std::string first_failure;
    double ms = 0;

    bool pass() const { return failures == 0; }
};

// For each length and every union of 2-cyclotomic cosets: the Schur-square
// row space, the square code's generator matrix, and the subfield subcode
// of the negated square exponents must span the same space, and the
// coordinatewise gcd oracle must reproduce the square's generator
// polynomial.
SuiteResult verify_theorem1(const std::vector<uint64_t>& lengths, unsigned jobs = 1);

// Subadditivity of the restricted weight mod 2^k - 1: exhaustive over all
// pairs for k <= exhaustive_max_k, then samples_per_case seeded random
// pairs for each (k, s) with sampled_min_k <= k <= sampled_max_k.  Every s
// in 1..k is covered either way.
SuiteResult verify_srw(uint32_t exhaustive_max_k, uint32_t sampled_min_k,
                       uint32_t sampled_max_k, uint64_t samples_per_case,
                       uint64_t seed, unsigned jobs = 1);

// Recurrence-generated rows must equal enumeration-generated rows for both
// binary families (k up to 12).  With the rank oracle on, the generator
// matrix rank and the Schur-square rank recompute both dimension columns.
SuiteResult verify_tables(bool rank_oracle, unsigned jobs = 1);

// Exhaustive distances of the small family codes and their squares, plus
// the explicit low-weight square words, against the published values; every
// exact distance is also wedged between the amplitude bound and the
// Singleton-style caps.
SuiteResult verify_distances(unsigned jobs = 1);

// The four suites above with their default parameters.
std::vector<SuiteResult> verify_all(uint64_t seed, unsigned jobs = 1);

}  // namespace schur
