/*
 * Copyright 2026 The envy-census Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ENVY_CLI_HPP
#define ENVY_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "envy/set_system.hpp"

namespace envy::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kValidation = 2,
    kTheoremFailure = 3,
};

/// One verify row. Column order is fixed by csv_header().
struct ExperimentRow {
    int m = 0;
    std::uint64_t seed = 0;
    std::uint64_t ef1_count = 0;
    std::uint64_t efx_count = 0;
    std::string bound;
    bool ef1_ok = false;
    bool efx_ok = false;
    bool separation_ok = false;
    double elapsed_ms = 0.0;

    bool ok() const { return ef1_ok && efx_ok && separation_ok; }
};

std::string csv_header();
std::string to_csv(const ExperimentRow& row);

/// Seed of row `trial` at item count m; independent of how many trials run.
std::uint64_t row_seed(std::uint64_t master, int m, std::uint64_t trial);

/// Census of random_monotone_instance(m, seed) as a verify row.
ExperimentRow run_row(int m, std::uint64_t seed);

/// Random nonempty set system pair for the harper subcommand.
std::pair<SetSystem, SetSystem> random_system_pair(int m, std::uint64_t seed);

/// Entry point shared by the envy-census binary and the tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace envy::cli

#endif
