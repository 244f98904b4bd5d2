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

#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "schur/cyclic_code.hpp"
#include "schur/gen_matrix.hpp"
#include "schur/report.hpp"
#include "schur/restricted.hpp"
#include "schur/verify.hpp"

namespace {

using schur::CyclicCode;
using schur::FieldCtx;
using schur::RunReport;
using schur::TableRow;

/* Flags shared by the subcommands that pick a code.  Exactly one route
 * must be complete: the restricted family (k, s, m), explicit cosets
 * (n, cosets), the threshold construction (n, bch-t), or the digit-sum
 * construction (k, qweight-h). */
struct Selection {
    uint32_t q = 2;
    std::optional<uint32_t> k, s, m;
    bool drop_zero = false;
    std::optional<uint64_t> n;
    std::vector<uint64_t> cosets;
    std::optional<uint64_t> bch_t;
    std::optional<uint32_t> qweight_h;
};

struct Options {
    Selection sel;
    std::string format = "text";
    std::string table_id = "t1";
    uint32_t kmin = 0;
    uint32_t kmax = 12;
    std::string suite = "all";
    std::optional<uint64_t> verify_n;
    std::optional<uint32_t> verify_k;
    uint64_t seed = 0;
    unsigned jobs = 1;
    std::optional<uint32_t> cap_bits;
    uint64_t samples = 100000;
    bool square_of = false;
    bool oracle = false;
    uint32_t graph_s = 3;
    uint32_t graph_m = 1;
    std::optional<uint32_t> graph_kmax;
};

std::pair<uint32_t, uint32_t> prime_power(uint32_t q) {
    if (q < 2) throw std::invalid_argument("field size must be at least 2");
    for (uint32_t p = 2; uint64_t(p) * p <= q; ++p) {
        if (q % p != 0) continue;
        uint32_t e = 0, rest = q;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (rest != 1)
            throw std::invalid_argument(fmt::format("{} is not a prime power", q));
        return {p, e};
    }
    return {q, 1};
}

void add_selection_flags(CLI::App* cmd, Selection& sel) {
    cmd->add_option("--q", sel.q, "field size (prime power)")->capture_default_str();
    cmd->add_option("--k", sel.k, "extension degree, length n = q^k - 1");
    cmd->add_option("--s", sel.s, "window length of the restricted weight");
    cmd->add_option("--m", sel.m, "window weight cap");
    cmd->add_flag("--drop-zero", sel.drop_zero, "remove index 0 from the generating set");
    cmd->add_option("--n", sel.n, "code length (coprime to q)");
    cmd->add_option("--cosets", sel.cosets, "generating coset representatives")
        ->delimiter(',');
    cmd->add_option("--bch-t", sel.bch_t, "keep cosets contained in 0..t");
    cmd->add_option("--qweight-h", sel.qweight_h, "digit-sum cap level h");
}

/* Code plus the published parameter row when the route has one. */
struct Built {
    CyclicCode code;
    std::optional<TableRow> row;
};

Built build_code(const Selection& sel) {
    auto [p, e] = prime_power(sel.q);
    auto base = FieldCtx::get(p, e);
    bool family = sel.k && sel.s && sel.m;
    bool explicit_cosets = sel.n && !sel.cosets.empty();
    bool threshold = sel.n && sel.bch_t;
    bool digit_sum = sel.k && sel.qweight_h;
    int routes = int(family) + int(explicit_cosets) + int(threshold) + int(digit_sum);
    if (routes != 1)
        throw std::invalid_argument(
            "pick exactly one of: --k/--s/--m, --n/--cosets, --n/--bch-t, "
            "--k/--qweight-h");
    if (family) {
        auto [code, row] = schur::construct_restricted(base, *sel.k, *sel.s, *sel.m,
                                                       sel.drop_zero);
        return {std::move(code), std::move(row)};
    }
    if (threshold) {
        auto [code, row] = schur::construct_bch_t(base, *sel.n, *sel.bch_t);
        return {std::move(code), std::move(row)};
    }
    if (digit_sum) {
        auto [code, row] = schur::construct_qweight(base, *sel.k, *sel.qweight_h);
        return {std::move(code), std::move(row)};
    }
    schur::IndexSet gen(*sel.n, base->q());
    for (uint64_t u : sel.cosets)
        for (uint64_t v : schur::coset(*sel.n, base->q(), u % *sel.n).members())
            gen.insert(v);
    return {CyclicCode::from_generating_set(base, gen), std::nullopt};
}

nlohmann::json bounds_result(const schur::BoundsReport& b, const std::string& provenance) {
    return {{"type", "bounds"},         {"n", b.n},
            {"dim_c", b.dim_c},         {"d_c_lb", b.d_c_lower},
            {"dim_csq", b.dim_csq},     {"d_csq_lb", b.d_csq_lower},
            {"singleton_cap", b.singleton_cap}, {"provenance", provenance}};
}

std::string charpoly_text(const std::vector<schur::bigint>& p) {
    std::string out;
    for (size_t idx = p.size(); idx-- > 0;) {
        if (p[idx] == 0) continue;
        schur::bigint c = p[idx];
        bool negative = c < 0;
        if (negative) c = -c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (c != 1 || idx == 0) out += c.str() + (idx > 0 ? " " : "");
        if (idx == 1)
            out += "X";
        else if (idx > 1)
            out += fmt::format("X^{}", idx);
    }
    return out.empty() ? "0" : out;
}

void emit(const RunReport& report, const Options& opt,
          const std::vector<TableRow>& rows) {
    if (opt.format == "json") {
        nlohmann::json j = report;
        fmt::print("{}\n", j.dump(2));
        return;
    }
    if (opt.format == "csv") {
        if (rows.empty())
            throw std::invalid_argument("csv output needs tabular results");
        fmt::print("{}", schur::to_csv(rows));
        return;
    }
    if (!rows.empty()) fmt::print("{}", schur::render_text(rows));
}

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
}

uint32_t effective_cap(const Options& opt) {
    if (opt.cap_bits) return *opt.cap_bits;
    if (const char* env = std::getenv("SCHUR_CYCLIC_CAP"))
        return uint32_t(std::strtoul(env, nullptr, 10));
    return schur::DistanceBudget{}.exhaustive_cap_bits;
}

int cmd_construct(const Options& opt, RunReport& report) {
    auto start = std::chrono::steady_clock::now();
    Built built = build_code(opt.sel);
    std::vector<TableRow> rows;
    if (built.row) {
        rows.push_back(*built.row);
        report.results.push_back(schur::row_result(*built.row, "enumeration"));
    }
    const CyclicCode& code = built.code;
    if (!code.is_zero_code())
        report.results.push_back(bounds_result(code.bounds(), "enumeration"));
    report.timings_ms["total"] = ms_since(start);

    if (opt.format == "text") {
        fmt::print("code: n={} over GF({}), dimension {}, generator degree {}\n",
                   code.length(), opt.sel.q, code.dim(),
                   code.generator_poly().degree());
        if (!code.is_zero_code()) {
            auto b = code.bounds();
            fmt::print(
                "bounds: d(C) >= {}; square: dim {} d >= {} (singleton cap {})\n",
                b.d_c_lower, b.dim_csq, b.d_csq_lower, b.singleton_cap);
        }
    }
    emit(report, opt, rows);
    return 0;
}

int cmd_square(const Options& opt, RunReport& report) {
    auto start = std::chrono::steady_clock::now();
    Built built = build_code(opt.sel);
    const CyclicCode& code = built.code;
    CyclicCode sq = code.square();
    if (!code.is_zero_code())
        report.results.push_back(bounds_result(code.bounds(), "enumeration"));

    bool all_ok = true;
    if (opt.oracle) {
        schur::GenMatrix products = code.generator_matrix().schur_square();
        schur::GenMatrix direct = sq.generator_matrix();
        bool rank_ok = products.rank() == sq.dim();
        bool span_ok = products.row_space_equals(direct);
        bool gcd_ok = schur::mir12_square_generator(code) == sq.generator_poly();
        report.oracle_flags = {{"rank", rank_ok}, {"span", span_ok}, {"gcd", gcd_ok}};
        nlohmann::json j{{"type", "square_oracle"},
                         {"rank", products.rank()},
                         {"provenance", "rank-oracle"}};
        report.results.push_back(j);
        all_ok = rank_ok && span_ok && gcd_ok;
    }
    report.ok = all_ok;
    report.timings_ms["total"] = ms_since(start);

    if (opt.format == "text") {
        fmt::print("square: n={} dimension {} generator degree {}\n", sq.length(),
                   sq.dim(), sq.generator_poly().degree());
        if (!code.is_zero_code()) {
            auto b = code.bounds();
            fmt::print("bounds: d >= {} (singleton cap {})\n", b.d_csq_lower,
                       b.singleton_cap);
        }
        for (auto& [name, ok] : report.oracle_flags)
            fmt::print("oracle {}: {}\n", name, ok ? "agrees" : "DISAGREES");
    }
    emit(report, opt, {});
    return all_ok ? 0 : 1;
}

int cmd_table(const Options& opt, RunReport& report) {
    auto start = std::chrono::steady_clock::now();
    schur::TableId id;
    if (opt.table_id == "t1")
        id = schur::TableId::t1;
    else if (opt.table_id == "t2")
        id = schur::TableId::t2;
    else
        throw std::invalid_argument("table must be t1 or t2");
    std::vector<TableRow> rows = schur::table(id, opt.kmin, opt.kmax);
    for (const TableRow& row : rows)
        report.results.push_back(schur::row_result(row, "recurrence"));
    report.timings_ms["total"] = ms_since(start);
    emit(report, opt, rows);
    return 0;
}

int cmd_verify(const Options& opt, RunReport& report) {
    auto start = std::chrono::steady_clock::now();
    std::vector<schur::SuiteResult> results;
    std::vector<uint64_t> lengths =
        opt.verify_n ? std::vector<uint64_t>{*opt.verify_n}
                     : std::vector<uint64_t>{7, 15, 31};
    if (opt.suite == "theorem1") {
        results.push_back(schur::verify_theorem1(lengths, opt.jobs));
    } else if (opt.suite == "srw") {
        if (opt.verify_k)
            results.push_back(schur::verify_srw(*opt.verify_k, 1, 0, 0, opt.seed, opt.jobs));
        else
            results.push_back(schur::verify_srw(9, 10, 12, 1000000, opt.seed, opt.jobs));
    } else if (opt.suite == "tables") {
        results.push_back(schur::verify_tables(true, opt.jobs));
    } else if (opt.suite == "distances") {
        results.push_back(schur::verify_distances(opt.jobs));
    } else if (opt.suite == "all") {
        results = schur::verify_all(opt.seed, opt.jobs);
    } else {
        throw std::invalid_argument(
            "suite must be one of theorem1, srw, tables, distances, all");
    }

    uint64_t failures = 0;
    for (const auto& r : results) {
        failures += r.failures;
        report.results.push_back({{"type", "suite"},
                                  {"suite", r.suite},
                                  {"cases", r.cases},
                                  {"failures", r.failures},
                                  {"first_failure", r.first_failure},
                                  {"ms", r.ms},
                                  {"provenance", "enumeration"}});
        report.timings_ms[r.suite] = r.ms;
        if (opt.format == "text") {
            fmt::print("[{}] {}: {} cases in {:.1f} ms\n",
                       r.pass() ? "PASS" : "FAIL", r.suite, r.cases, r.ms);
            if (!r.pass())
                fmt::print("  {} failures; first: {}\n", r.failures, r.first_failure);
        }
    }
    report.ok = failures == 0;
    report.timings_ms["total"] = ms_since(start);
    emit(report, opt, {});
    return failures == 0 ? 0 : 1;
}

int cmd_distance(const Options& opt, RunReport& report) {
    auto start = std::chrono::steady_clock::now();
    Built built = build_code(opt.sel);
    const CyclicCode& target_code = built.code;
    CyclicCode sq = opt.square_of ? target_code.square() : target_code;
    const CyclicCode& measured = opt.square_of ? sq : target_code;

    schur::DistanceBudget budget;
    budget.exhaustive_cap_bits = effective_cap(opt);
    budget.samples = opt.samples;
    budget.seed = opt.seed;
    if (built.row)
        budget.known_lower =
            opt.square_of ? built.row->d_csq_lower : built.row->d_c_lower;
    else if (!target_code.is_zero_code()) {
        auto b = target_code.bounds();
        budget.known_lower = opt.square_of ? b.d_csq_lower : b.d_c_lower;
    }

    auto d = measured.generator_matrix().min_distance(budget);
    std::string provenance = d.exact ? "exhaustive-distance" : "bound-only";
    report.results.push_back({{"type", "distance"},
                              {"n", measured.length()},
                              {"dim", measured.dim()},
                              {"value", d.value},
                              {"exact", d.exact},
                              {"provenance", provenance}});
    report.seed = opt.seed;
    report.timings_ms["total"] = ms_since(start);

    if (opt.format == "text") {
        if (d.exact)
            fmt::print("distance {} (certified, n={} dim={})\n", d.value,
                       measured.length(), measured.dim());
        else
            fmt::print("min weight found {} (not certified, lower bound {}; n={} dim={})\n",
                       d.value, budget.known_lower.value_or(0), measured.length(),
                       measured.dim());
    }
    emit(report, opt, {});
    return 0;
}

int cmd_graph(const Options& opt, RunReport& report) {
    auto start = std::chrono::steady_clock::now();
    schur::WalkGraph graph = schur::build_graph(opt.sel.q, opt.graph_s, opt.graph_m);
    size_t g = graph.vertices.size();
    uint32_t kmax = opt.graph_kmax.value_or(uint32_t(2 * g));
    std::string cp = charpoly_text(graph.charpoly);
    report.results.push_back({{"type", "walk_graph"},
                              {"vertices", g},
                              {"charpoly", cp},
                              {"provenance", "enumeration"}});
    for (uint32_t k = 0; k <= kmax; ++k) {
        schur::bigint v = schur::n_count(graph, k);
        report.results.push_back(
            {{"type", "n_count"},
             {"k", k},
             {"value", v.str()},
             {"provenance", k <= g ? "enumeration" : "recurrence"}});
    }
    report.timings_ms["total"] = ms_since(start);

    if (opt.format == "text") {
        fmt::print("graph: {} vertices, charpoly {}\n", g, cp);
        fmt::print("counts:");
        for (uint32_t k = 0; k <= kmax; ++k)
            fmt::print(" {}", schur::n_count(graph, k).str());
        fmt::print("\n");
    }
    emit(report, opt, {});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclic codes with controlled Schur squares"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "text, csv, or json")
            ->check(CLI::IsMember({"text", "csv", "json"}))
            ->capture_default_str();
        cmd->add_option("--seed", opt.seed, "PRNG seed")->capture_default_str();
        cmd->add_option("--jobs", opt.jobs, "worker threads")->capture_default_str();
    };

    CLI::App* construct = app.add_subcommand("construct", "build a code and report bounds");
    add_selection_flags(construct, opt.sel);
    add_common(construct);

    CLI::App* square = app.add_subcommand("square", "build the Schur square of a code");
    add_selection_flags(square, opt.sel);
    square->add_flag("--oracle", opt.oracle, "re-derive the square three independent ways");
    add_common(square);

    CLI::App* tbl = app.add_subcommand("table", "emit a parameter table family");
    tbl->add_option("id", opt.table_id, "t1 (windows of 3) or t2 (windows of 5)")
        ->required();
    tbl->add_option("--kmin", opt.kmin, "first k");
    tbl->add_option("--kmax", opt.kmax, "last k")->capture_default_str();
    add_common(tbl);

    CLI::App* verify = app.add_subcommand("verify", "run a cross-check suite");
    verify->add_option("suite", opt.suite, "theorem1, srw, tables, distances, all")
        ->required();
    verify->add_option("--n", opt.verify_n, "restrict theorem1 to one length");
    verify->add_option("--k", opt.verify_k, "restrict srw to one exhaustive k");
    add_common(verify);

    CLI::App* distance = app.add_subcommand("distance", "measure a minimum distance");
    add_selection_flags(distance, opt.sel);
    distance->add_flag("--square", opt.square_of, "measure the square instead");
    distance->add_option("--exhaustive-cap", opt.cap_bits,
                         "enumerate when dim fits in this many bits");
    distance->add_option("--samples", opt.samples, "random message count otherwise")
        ->capture_default_str();
    add_common(distance);

    CLI::App* graph = app.add_subcommand("graph", "walk graph and closed-walk counts");
    graph->add_option("--q", opt.sel.q, "digit base")->capture_default_str();
    graph->add_option("--s", opt.graph_s, "window length")->required();
    graph->add_option("--m", opt.graph_m, "weight cap")->required();
    graph->add_option("--kmax", opt.graph_kmax, "report counts up to this k");
    add_common(graph);

    CLI11_PARSE(app, argc, argv);

    RunReport report;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) report.command += ' ';
        report.command += argv[i];
    }
    report.seed = opt.seed;
    report.parameters = {{"format", opt.format}, {"jobs", opt.jobs}};

    try {
        if (construct->parsed()) return cmd_construct(opt, report);
        if (square->parsed()) return cmd_square(opt, report);
        if (tbl->parsed()) return cmd_table(opt, report);
        if (verify->parsed()) return cmd_verify(opt, report);
        if (distance->parsed()) return cmd_distance(opt, report);
        if (graph->parsed()) return cmd_graph(opt, report);
    } catch (const std::invalid_argument& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        fmt::print(stderr, "internal check failed: {}\n", e.what());
        return 1;
    }
    return 0;
}
