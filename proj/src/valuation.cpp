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

#include "envy/valuation.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "envy/error.hpp"
#include "envy/seed.hpp"

namespace envy {

namespace {

int items_for_length(std::size_t length) {
    if (length < 2 || !std::has_single_bit(length) || length > (std::size_t{1} << kMaxItems)) {
        throw InvalidInput("table length must be 2^m with 1 <= m <= " + std::to_string(kMaxItems) +
                           ", got " + std::to_string(length));
    }
    return std::countr_zero(length);
}

void require_items(int m) {
    if (m < 1 || m > kMaxItems) {
        throw InvalidInput("item count must be in [1, " + std::to_string(kMaxItems) + "], got " +
                           std::to_string(m));
    }
}

} // namespace

std::string MonotoneViolation::describe() const {
    if (is_normalization()) {
        return "u(empty) = " + subset_value.to_string() + ", expected 0";
    }
    return "u(" + std::to_string(subset.bits()) + ") = " + subset_value.to_string() + " > u(" +
           std::to_string(superset.bits()) + ") = " + superset_value.to_string();
}

std::optional<MonotoneViolation> check_monotone(std::span<const Value> table) {
    const int m = items_for_length(table.size());
    if (table[0] != Value{}) {
        return MonotoneViolation{Bundle{}, Bundle{}, table[0], table[0]};
    }
    const std::uint32_t n = std::uint32_t{1} << m;
    for (std::uint32_t s = 1; s < n; ++s) {
        const Bundle super{s};
        std::optional<MonotoneViolation> found;
        for_each_item(super, [&](int i) {
            const Bundle sub = super.without(i);
            if (!found && table[sub.bits()] > table[s]) {
                found = MonotoneViolation{sub, super, table[sub.bits()], table[s]};
            }
        });
        if (found) return found;
    }
    return std::nullopt;
}

Valuation Valuation::from_table(std::vector<Value> table) {
    const int m = items_for_length(table.size());
    if (auto bad = check_monotone(table)) {
        throw InvalidInput("valuation is not monotone: " + bad->describe());
    }
    return Valuation{m, std::make_shared<const std::vector<Value>>(std::move(table))};
}

Value Valuation::value(Bundle b) const {
    if (!b.fits(m_)) {
        throw InvalidBundle("bundle " + std::to_string(b.bits()) + " out of range for m = " +
                            std::to_string(m_));
    }
    return (*this)[b];
}

Valuation make_additive(std::span<const Value> item_values) {
    const int m = static_cast<int>(item_values.size());
    require_items(m);
    Value total;
    for (Value v : item_values) total = checked_add(total, v);

    std::vector<Value> table(std::size_t{1} << m);
    for (std::uint32_t s = 1; s < table.size(); ++s) {
        const int low = std::countr_zero(s);
        table[s] = table[s & (s - 1)] + item_values[low];
    }
    return Valuation::from_table(std::move(table));
}

Valuation make_additive(std::initializer_list<std::int64_t> whole_values) {
    std::vector<Value> values;
    for (auto v : whole_values) values.push_back(Value::from_integer(v));
    return make_additive(values);
}

Valuation random_monotone(int m, std::uint64_t seed) {
    require_items(m);
    std::mt19937_64 rng(mix_seed(seed));
    const std::uint32_t n = std::uint32_t{1} << m;
    std::vector<Value> table(n);
    // rng() % (D + 1) keeps the stream independent of the standard library's
    // distribution implementations.
    for (auto& raw : table) {
        raw = Value::from_units(static_cast<std::int64_t>(rng() % (Value::kDenominator + 1)));
    }
    for (std::uint32_t s = 1; s < n; ++s) {
        Value best = table[s];
        for_each_item(Bundle{s}, [&](int i) { best = std::max(best, table[s & ~(1u << i)]); });
        table[s] = best;
    }
    table[0] = Value{};
    return Valuation::from_table(std::move(table));
}

Instance::Instance(Valuation first, Valuation second)
    : agents_{std::move(first), std::move(second)} {
    if (agents_[0].items() != agents_[1].items()) {
        throw InvalidInput("agents disagree on the item count: " + std::to_string(agents_[0].items()) +
                           " vs " + std::to_string(agents_[1].items()));
    }
}

Instance tight_ef1_instance(int m) {
    require_items(m);
    std::vector<Value> values(m, Value::from_integer(1));
    if (m % 2 == 1) values.back() = Value{};
    auto v = make_additive(values);
    return Instance{v, v};
}

Instance tight_efx_instance(int m) {
    require_items(m);
    std::vector<Value> values(m, Value::from_integer(1));
    values.back() = Value::from_integer(m);
    auto v = make_additive(values);
    return Instance{v, v};
}

Instance random_monotone_instance(int m, std::uint64_t seed) {
    return Instance{random_monotone(m, derive_seed(seed, {1})), random_monotone(m, derive_seed(seed, {2}))};
}

} // namespace envy
