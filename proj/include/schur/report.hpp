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
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "schur/restricted.hpp"

// Serialization of run results.  A RunReport captures one CLI invocation:
// the command line, the parameters it resolved to, a list of result
// objects, and bookkeeping that makes the run reproducible (seed, timings,
// oracle agreement).  Every numeric result entry carries a "provenance"
// string naming how it was obtained: recurrence, enumeration, rank-oracle,
// exhaustive-distance, or bound-only.

namespace schur {

struct RunReport {
    std::string schema = "schur-cyclic/1";
    std::string command;
    nlohmann::json parameters = nlohmann::json::object();
    nlohmann::json results = nlohmann::json::array();
    std::map<std::string, bool> oracle_flags;
    uint64_t seed = 0;
    std::map<std::string, double> timings_ms;
    bool ok = true;

    bool operator==(const RunReport&) const = default;
};

void to_json(nlohmann::json& j, const RunReport& r);
void from_json(const nlohmann::json& j, RunReport& r);

void to_json(nlohmann::json& j, const TableRow& row);
void from_json(const nlohmann::json& j, TableRow& row);

// Result entry for a table row; provenance is one of the strings above.
nlohmann::json row_result(const TableRow& row, const std::string& provenance);

// CSV with header k,n,dim_c,d_c_lb,dim_csq,d_csq_lb,exact_flags; flags are
// joined with ';' inside the last column.
std::string to_csv(const std::vector<TableRow>& rows);

// Fixed-width columns for terminal output.
std::string render_text(const std::vector<TableRow>& rows);

}  // namespace schur
