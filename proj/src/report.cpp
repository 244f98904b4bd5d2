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

#include "schur/report.hpp"

#include <fmt/format.h>

namespace schur {

void to_json(nlohmann::json& j, const RunReport& r) {
    j = nlohmann::json{{"schema", r.schema},
                       {"command", r.command},
                       {"parameters", r.parameters},
                       {"results", r.results},
                       {"oracle_flags", r.oracle_flags},
                       {"seed", r.seed},
                       {"timings_ms", r.timings_ms},
                       {"ok", r.ok}};
}

void from_json(const nlohmann::json& j, RunReport& r) {
    j.at("schema").get_to(r.schema);
    j.at("command").get_to(r.command);
    r.parameters = j.at("parameters");
    r.results = j.at("results");
    j.at("oracle_flags").get_to(r.oracle_flags);
    j.at("seed").get_to(r.seed);
    j.at("timings_ms").get_to(r.timings_ms);
    j.at("ok").get_to(r.ok);
}

void to_json(nlohmann::json& j, const TableRow& row) {
    j = nlohmann::json{{"k", row.k},
                       {"n", row.n},
                       {"dim_c", row.dim_c},
                       {"d_c_lb", row.d_c_lower},
                       {"dim_csq", row.dim_csq},
                       {"d_csq_lb", row.d_csq_lower},
                       {"flags", row.flags}};
}

void from_json(const nlohmann::json& j, TableRow& row) {
    j.at("k").get_to(row.k);
    j.at("n").get_to(row.n);
    j.at("dim_c").get_to(row.dim_c);
    j.at("d_c_lb").get_to(row.d_c_lower);
    j.at("dim_csq").get_to(row.dim_csq);
    j.at("d_csq_lb").get_to(row.d_csq_lower);
    j.at("flags").get_to(row.flags);
}

nlohmann::json row_result(const TableRow& row, const std::string& provenance) {
    nlohmann::json j = row;
    j["type"] = "table_row";
    j["provenance"] = provenance;
    return j;
}

namespace {

std::string joined_flags(const TableRow& row) {
    std::string out;
    for (const auto& f : row.flags) {
        if (!out.empty()) out += ';';
        out += f;
    }
    return out;
}

}  // namespace

std::string to_csv(const std::vector<TableRow>& rows) {
    std::string out = "k,n,dim_c,d_c_lb,dim_csq,d_csq_lb,exact_flags\n";
    for (const auto& r : rows)
        out += fmt::format("{},{},{},{},{},{},{}\n", r.k, r.n, r.dim_c,
                           r.d_c_lower, r.dim_csq, r.d_csq_lower, joined_flags(r));
    return out;
}

std::string render_text(const std::vector<TableRow>& rows) {
    std::string out = fmt::format("{:>3} {:>8} {:>7} {:>8} {:>8} {:>9}  {}\n", "k",
                                  "n", "dim C", "d(C) >=", "dim C^2", "d(C^2) >=",
                                  "flags");
    for (const auto& r : rows)
        out += fmt::format("{:>3} {:>8} {:>7} {:>8} {:>8} {:>9}  {}\n", r.k, r.n,
                           r.dim_c, r.d_c_lower, r.dim_csq, r.d_csq_lower,
                           joined_flags(r));
    return out;
}

}  // namespace schur
