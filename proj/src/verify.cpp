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

#include "schur/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <thread>
#include <utility>

#include <fmt/format.h>

#include "schur/cyclic_code.hpp"
#include "schur/gen_matrix.hpp"
#include "schur/index_set.hpp"
#include "schur/restricted.hpp"

namespace schur {

namespace {

using clock_type = std::chrono::steady_clock;

double elapsed_ms(clock_type::time_point start) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - start).count();
}

/* Runs fn over [0, count); failure strings land at their case index, so
 * the reduction below is deterministic for any worker count. */
std::vector<std::string> run_cases(size_t count, unsigned jobs,
                                   const std::function<std::string(size_t)>& fn) {
    std::vector<std::string> msgs(count);
    auto guarded = [&](size_t i) {
        try {
            msgs[i] = fn(i);
        } catch (const std::exception& e) {
            msgs[i] = fmt::format("case {} raised: {}", i, e.what());
        }
    };
    if (jobs <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) guarded(i);
        return msgs;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> workers;
    size_t n_workers = std::min<size_t>(jobs, count);
    for (size_t w = 0; w < n_workers; ++w)
        workers.emplace_back([&] {
            for (size_t i; (i = next.fetch_add(1)) < count;) guarded(i);
        });
    for (auto& t : workers) t.join();
    return msgs;
}

SuiteResult reduce(std::string suite, const std::vector<std::string>& msgs,
                   double ms) {
    SuiteResult r;
    r.suite = std::move(suite);
    r.cases = msgs.size();
    r.ms = ms;
    for (const auto& m : msgs) {
        if (m.empty()) continue;
        if (r.failures == 0) r.first_failure = m;
        ++r.failures;
    }
    return r;
}

/* every union of q-cyclotomic cosets mod n, the empty set included */
std::vector<IndexSet> coset_unions(uint64_t n, uint32_t q) {
    std::vector<IndexSet> reps;
    IndexSet seen(n, q);
    for (uint64_t u = 0; u < n; ++u) {
        if (seen.contains(u)) continue;
        reps.push_back(coset(n, q, u));
        for (uint64_t v : reps.back().members()) seen.insert(v);
    }
    std::vector<IndexSet> unions;
    for (uint64_t mask = 0; mask < (uint64_t(1) << reps.size()); ++mask) {
        IndexSet gen(n, q);
        for (size_t t = 0; t < reps.size(); ++t)
            if ((mask >> t) & 1)
                for (uint64_t v : reps[t].members()) gen.insert(v);
        unions.push_back(std::move(gen));
    }
    return unions;
}

}  // namespace

SuiteResult verify_theorem1(const std::vector<uint64_t>& lengths, unsigned jobs) {
    auto start = clock_type::now();
    auto base = FieldCtx::get(2, 1);
    std::vector<std::pair<uint64_t, IndexSet>> cases;
    for (uint64_t n : lengths)
        for (auto& gen : coset_unions(n, 2)) cases.emplace_back(n, std::move(gen));

    auto msgs = run_cases(cases.size(), jobs, [&](size_t i) -> std::string {
        const auto& [n, gen] = cases[i];
        CyclicCode code = CyclicCode::from_generating_set(base, gen);
        CyclicCode sq = code.square();
        GenMatrix products = code.generator_matrix().schur_square();
        GenMatrix via_sumset = sq.generator_matrix();
        GenMatrix subcode = subfield_subcode(negate(sq.generating_set()), *code.ext());
        if (!products.row_space_equals(via_sumset))
            return fmt::format("n={} |I|={}: product span differs from the sumset code",
                               n, gen.size());
        if (!via_sumset.row_space_equals(subcode))
            return fmt::format("n={} |I|={}: subfield subcode spans a different space",
                               n, gen.size());
        if (!(mir12_square_generator(code) == sq.generator_poly()))
            return fmt::format("n={} |I|={}: gcd oracle missed the square generator",
                               n, gen.size());
        return {};
    });
    return reduce("theorem1", msgs, elapsed_ms(start));
}

SuiteResult verify_srw(uint32_t exhaustive_max_k, uint32_t sampled_min_k,
                       uint32_t sampled_max_k, uint64_t samples_per_case,
                       uint64_t seed, unsigned jobs) {
    auto start = clock_type::now();
    struct Case {
        uint32_t k, s;
        bool exhaustive;
    };
    std::vector<Case> cases;
    for (uint32_t k = 1; k <= exhaustive_max_k; ++k)
        for (uint32_t s = 1; s <= k; ++s) cases.push_back({k, s, true});
    for (uint32_t k = std::max(sampled_min_k, 1u); k <= sampled_max_k; ++k)
        for (uint32_t s = 1; s <= k; ++s) cases.push_back({k, s, false});

    auto msgs = run_cases(cases.size(), jobs, [&](size_t i) -> std::string {
        auto [k, s, exhaustive] = cases[i];
        uint64_t n = (uint64_t(1) << k) - 1;
        std::vector<uint32_t> w(static_cast<size_t>(n));
        for (uint64_t t = 0; t < n; ++t) w[t] = wqs(t, 2, k, s);
        auto violated = [&](uint64_t t, uint64_t u) {
            return w[(t + u) % n] > w[t] + w[u];
        };
        if (exhaustive) {
            for (uint64_t t = 0; t < n; ++t)
                for (uint64_t u = t; u < n; ++u)
                    if (violated(t, u))
                        return fmt::format("k={} s={}: pair ({}, {})", k, s, t, u);
        } else {
            std::mt19937_64 rng(seed ^ (uint64_t(k) * 0x9e3779b97f4a7c15ull + s));
            for (uint64_t it = 0; it < samples_per_case; ++it) {
                uint64_t t = rng() % n, u = rng() % n;
                if (violated(t, u))
                    return fmt::format("k={} s={}: pair ({}, {})", k, s, t, u);
            }
        }
        return {};
    });
    return reduce("srw", msgs, elapsed_ms(start));
}

SuiteResult verify_tables(bool rank_oracle, unsigned jobs) {
    auto start = clock_type::now();
    struct Case {
        TableId id;
        uint32_t k, s, m;
    };
    std::vector<Case> cases;
    for (uint32_t k = 3; k <= 12; ++k) cases.push_back({TableId::t1, k, 3, 1});
    for (uint32_t k = 5; k <= 12; ++k) cases.push_back({TableId::t2, k, 5, 2});

    auto msgs = run_cases(cases.size(), jobs, [&](size_t i) -> std::string {
        auto [id, k, s, m] = cases[i];
        TableRow recurrence = table(id, k, k).at(0);
        auto [code, enumerated] = construct_restricted(FieldCtx::get(2, 1), k, s, m);
        if (recurrence != enumerated)
            return fmt::format("k={} s={}: recurrence row differs from enumeration",
                               k, s);
        if (rank_oracle) {
            GenMatrix gm = code.generator_matrix();
            if (gm.rank() != enumerated.dim_c)
                return fmt::format("k={} s={}: generator rank is not the dimension",
                                   k, s);
            if (gm.schur_square_rank() != enumerated.dim_csq)
                return fmt::format("k={} s={}: product rank is not the square dimension",
                                   k, s);
        }
        return {};
    });
    return reduce("tables", msgs, elapsed_ms(start));
}

SuiteResult verify_distances(unsigned jobs) {
    auto start = clock_type::now();
    auto base = FieldCtx::get(2, 1);

    auto exact_code = [&](uint32_t k, uint32_t s, uint32_t m,
                          uint64_t expect) -> std::string {
        auto [code, row] = construct_restricted(base, k, s, m);
        auto d = code.generator_matrix().min_distance();
        if (!d.exact) return fmt::format("k={}: search was not exhaustive", k);
        if (d.value != expect)
            return fmt::format("k={}: distance {} instead of {}", k, d.value, expect);
        auto b = code.bounds();
        if (b.d_c_lower > d.value || row.d_c_lower > d.value)
            return fmt::format("k={}: a lower bound beats the exact distance", k);
        if (d.value > row.n - row.dim_c + 1)
            return fmt::format("k={}: distance above the Singleton bound", k);
        return {};
    };
    auto exact_square = [&](uint32_t k, uint32_t s, uint32_t m,
                            uint64_t expect) -> std::string {
        auto [code, row] = construct_restricted(base, k, s, m);
        auto d = code.square().generator_matrix().min_distance();
        if (!d.exact) return fmt::format("k={} square: search was not exhaustive", k);
        if (d.value != expect)
            return fmt::format("k={} square: distance {} instead of {}", k, d.value,
                               expect);
        auto b = code.bounds();
        if (b.d_csq_lower > d.value || row.d_csq_lower > d.value)
            return fmt::format("k={} square: a lower bound beats the distance", k);
        if (d.value > b.singleton_cap)
            return fmt::format("k={} square: distance above the Singleton cap", k);
        return {};
    };
    auto witness = [&](uint32_t k, uint32_t family_s,
                       uint64_t expect) -> std::string {
        std::vector<FqElem> word = special_low_weight_word(k, family_s);
        uint64_t weight = 0;
        for (FqElem e : word)
            if (e.v != 0) ++weight;
        if (weight != expect)
            return fmt::format("k={}: witness weight {} instead of {}", k, weight,
                               expect);
        uint32_t m = family_s == 3 ? 1 : 2;
        TableRow row = construct_restricted(base, k, family_s, m).second;
        if (row.d_csq_lower != expect)
            return fmt::format("k={}: witness weight misses the bound {}", k,
                               row.d_csq_lower);
        return {};
    };

    std::vector<std::function<std::string()>> probes = {
        [&] { return exact_code(3, 3, 1, 3); },
        [&] { return exact_square(3, 3, 1, 1); },
        [&] { return exact_code(4, 3, 1, 7); },
        [&] { return exact_square(4, 3, 1, 3); },
        [&] { return exact_code(5, 3, 1, 15); },
        [&] { return witness(6, 3, 9); },
        [&] { return witness(10, 5, 33); }};
    auto msgs = run_cases(probes.size(), jobs,
                          [&](size_t i) { return probes[i](); });
    return reduce("distances", msgs, elapsed_ms(start));
}

std::vector<SuiteResult> verify_all(uint64_t seed, unsigned jobs) {
    std::vector<SuiteResult> out;
    out.push_back(verify_theorem1({7, 15, 31}, jobs));
    out.push_back(verify_srw(9, 10, 12, 1000000, seed, jobs));
    out.push_back(verify_tables(true, jobs));
    out.push_back(verify_distances(jobs));
    return out;
}

}  // namespace schur
