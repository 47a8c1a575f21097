/*
   Copyright 2026 The ore-diamond Authors

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

// Acceptance suite shared by the `reproduce-paper` subcommand and the acceptance test binary.

#ifndef ORE_TOOLS_REPRODUCE_HPP
#define ORE_TOOLS_REPRODUCE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace ore::reproduce {

struct Options {
    std::uint32_t seed = 2026;
    int threads = 1;
    /// Adds the degree-bound-4 run to criterion 5.
    bool extended = true;
    /// Criteria to run (1..9); empty runs all.
    std::vector<int> only;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    double seconds = 0;
    /// Runtime budget in seconds; 0 when none applies.
    double budget = 0;
    std::string summary;
    /// First failures, capped.
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    /// "criterion N: PASS|FAIL title (t s) summary"
    std::string line() const;
};

constexpr int criterion_count = 9;

CriterionResult run_criterion(int id, const Options& opts);
std::vector<CriterionResult> run(const Options& opts);
/// JSON manifest with schema_version.
std::string manifest_json(const std::vector<CriterionResult>& results, const Options& opts);

}  // namespace ore::reproduce

#endif  // ORE_TOOLS_REPRODUCE_HPP
