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

#include "envy/io.hpp"

#include <fstream>
#include <istream>

#include "envy/error.hpp"

namespace envy {

using nlohmann::json;

namespace {

json count_or_null(const std::optional<std::uint64_t>& c) {
    return c ? json(std::to_string(*c)) : json(nullptr);
}

} // namespace

json value_to_json(Value v) {
    if (v.is_integral()) return v.units() / Value::kDenominator;
    return v.to_double();
}

Value value_from_json(const json& j) {
    if (j.is_number_unsigned() || j.is_number_integer()) {
        return Value::from_integer(j.get<std::int64_t>());
    }
    if (j.is_number_float()) return Value::from_double(j.get<double>());
    if (j.is_string()) return Value::parse(j.get<std::string>());
    throw InvalidInput("expected a number, got " + j.dump());
}

Valuation AgentSpec::build(int m) const {
    if (kind == Kind::Additive) {
        if (static_cast<int>(values.size()) != m) {
            throw InvalidInput("additive agent lists " + std::to_string(values.size()) + " values, expected " +
                               std::to_string(m));
        }
        return make_additive(values);
    }
    if (values.size() != (std::size_t{1} << m)) {
        throw InvalidInput("table agent lists " + std::to_string(values.size()) + " values, expected 2^" +
                           std::to_string(m));
    }
    return Valuation::from_table(values);
}

Instance InstanceFile::build() const {
    if (m < 1 || m > kMaxItems) throw InvalidInput("m must be in [1, 24], got " + std::to_string(m));
    if (agents.size() != 2) throw InvalidInput("an instance needs exactly two agents");
    return Instance{agents[0].build(m), agents[1].build(m)};
}

InstanceFile InstanceFile::additive(std::vector<Value> first, std::vector<Value> second) {
    InstanceFile f;
    f.m = static_cast<int>(first.size());
    f.agents = {AgentSpec{AgentSpec::Kind::Additive, std::move(first)},
                AgentSpec{AgentSpec::Kind::Additive, std::move(second)}};
    return f;
}

InstanceFile InstanceFile::tables(const Instance& inst) {
    InstanceFile f;
    f.m = inst.items();
    for (int i = 0; i < 2; ++i) {
        const auto t = inst.agent(i).table();
        f.agents.push_back(AgentSpec{AgentSpec::Kind::Table, {t.begin(), t.end()}});
    }
    return f;
}

InstanceFile instance_from_json(const json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("agents")) {
        throw InvalidInput("instance must be an object with \"m\" and \"agents\"");
    }
    if (!j["m"].is_number_integer()) throw InvalidInput("\"m\" must be an integer");
    if (!j["agents"].is_array()) throw InvalidInput("\"agents\" must be an array");
    InstanceFile f;
    f.m = j["m"].get<int>();
    for (const auto& a : j["agents"]) {
        if (!a.is_object() || !a.contains("kind") || !a.contains("values") || !a["values"].is_array()) {
            throw InvalidInput("each agent needs \"kind\" and a \"values\" array");
        }
        AgentSpec spec;
        const auto kind = a["kind"].get<std::string>();
        if (kind == "additive") {
            spec.kind = AgentSpec::Kind::Additive;
        } else if (kind == "table") {
            spec.kind = AgentSpec::Kind::Table;
        } else {
            throw InvalidInput("unknown agent kind \"" + kind + "\"");
        }
        for (const auto& v : a["values"]) spec.values.push_back(value_from_json(v));
        f.agents.push_back(std::move(spec));
    }
    return f;
}

json to_json(const InstanceFile& file) {
    json agents = json::array();
    for (const auto& a : file.agents) {
        json values = json::array();
        for (Value v : a.values) values.push_back(value_to_json(v));
        agents.push_back({{"kind", a.kind == AgentSpec::Kind::Additive ? "additive" : "table"},
                          {"values", std::move(values)}});
    }
    return {{"m", file.m}, {"agents", std::move(agents)}};
}

Instance read_instance(std::istream& in) {
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed instance JSON: ") + e.what());
    }
    try {
        return instance_from_json(j).build();
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("bad instance field: ") + e.what());
    }
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    return read_instance(in);
}

json to_json(const CensusReport& report) {
    json good = json::array(), small = json::array(), large = json::array(), sep = json::array();
    for (const auto& a : report.agents) {
        good.push_back(std::to_string(a.good_count));
        small.push_back(std::to_string(a.too_small_count));
        large.push_back(std::to_string(a.too_large_count));
        sep.push_back(a.separation_ok);
    }
    return {{"m", report.m},
            {"ef1_count", count_or_null(report.ef1_count)},
            {"efx_count", count_or_null(report.efx_count)},
            {"bound", report.bound.str()},
            {"good_count", good},
            {"too_small_count", small},
            {"too_large_count", large},
            {"separation_ok", report.separation_ok()},
            {"separation_ok_per_agent", sep}};
}

json to_json(const HarperReport& report) {
    auto dist = [](int d) { return d == kInfiniteDistance ? json("inf") : json(d); };
    return {{"d_original", dist(report.original_distance)},
            {"d_balls", dist(report.ball_distance)},
            {"ok", report.ok}};
}

} // namespace envy
