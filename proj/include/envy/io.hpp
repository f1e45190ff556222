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

#ifndef ENVY_IO_HPP
#define ENVY_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "envy/census.hpp"
#include "envy/combinatorics.hpp"
#include "envy/valuation.hpp"

namespace envy {

/// One agent as written in an instance file. Additive agents list m item
/// values; table agents list all 2^m bundle values, indexed by bundle bits.
struct AgentSpec {
    enum class Kind { Additive, Table };
    Kind kind = Kind::Additive;
    std::vector<Value> values;

    Valuation build(int m) const;
};

/// {"m": int, "agents": [agent, agent]}.
struct InstanceFile {
    int m = 0;
    std::vector<AgentSpec> agents;

    Instance build() const;
    static InstanceFile additive(std::vector<Value> first, std::vector<Value> second);
    static InstanceFile tables(const Instance& inst);
};

/// Throws InvalidInput on schema errors.
InstanceFile instance_from_json(const nlohmann::json& j);
nlohmann::json to_json(const InstanceFile& file);

/// Parses and validates, including monotonicity. Throws InvalidInput.
Instance read_instance(std::istream& in);
Instance load_instance(const std::string& path);

/// Values render as JSON integers when whole, otherwise as decimals;
/// inputs may also be strings such as "7/4".
nlohmann::json value_to_json(Value v);
Value value_from_json(const nlohmann::json& j);

/// Counts are emitted as decimal strings.
nlohmann::json to_json(const CensusReport& report);
nlohmann::json to_json(const HarperReport& report);

} // namespace envy

#endif
