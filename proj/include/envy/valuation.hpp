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

#ifndef ENVY_VALUATION_HPP
#define ENVY_VALUATION_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "envy/bundle.hpp"
#include "envy/value.hpp"

namespace envy {

/// A failed monotonicity check. For a normalization failure (u(empty) != 0)
/// both bundles are empty.
struct MonotoneViolation {
    Bundle subset;
    Bundle superset;
    Value subset_value;
    Value superset_value;

    bool is_normalization() const { return superset.is_empty(); }
    std::string describe() const;
};

/// Checks u(empty) = 0 and u(S \ {i}) <= u(S) for every S and i in S.
/// Covering pairs suffice: monotonicity on them extends by transitivity.
/// Returns the first offending pair in increasing-S order, or nullopt.
/// Throws InvalidInput if the length is not 2^m for some 1 <= m <= kMaxItems.
std::optional<MonotoneViolation> check_monotone(std::span<const Value> table);

/// Monotone set function over m items. Immutable once built; copies share
/// the underlying table.
class Valuation {
public:
    /// Throws InvalidInput if the table is not a normalized monotone
    /// function on 2^m bundles.
    static Valuation from_table(std::vector<Value> table);

    int items() const { return m_; }
    Bundle all_items() const { return Bundle::full(m_); }
    std::uint32_t bundle_count() const { return std::uint32_t{1} << m_; }

    /// Throws InvalidBundle if b has bits at or above m.
    Value value(Bundle b) const;
    /// Unchecked lookup.
    Value operator[](Bundle b) const { return (*table_)[b.bits()]; }

    std::span<const Value> table() const { return *table_; }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.table_ == b.table_ || *a.table_ == *b.table_;
    }

private:
    Valuation(int m, std::shared_ptr<const std::vector<Value>> table)
        : m_(m), table_(std::move(table)) {}

    int m_;
    std::shared_ptr<const std::vector<Value>> table_;
};

/// u(S) = sum of item_values over S. Throws InvalidInput for an empty list,
/// more than kMaxItems items, or a sum that overflows.
Valuation make_additive(std::span<const Value> item_values);
Valuation make_additive(std::initializer_list<std::int64_t> whole_values);

/// Deterministic random monotone valuation. Draws raw[S] uniformly from
/// [0, 1] on the 10^-6 grid, applies the monotone closure
/// table[S] = max(raw[S], max_i table[S \ {i}]) in increasing order of S,
/// then sets table[empty] = 0.
Valuation random_monotone(int m, std::uint64_t seed);

/// Two agents over the same m items.
class Instance {
public:
    /// Throws InvalidInput if the item counts differ.
    Instance(Valuation first, Valuation second);

    int items() const { return agents_[0].items(); }
    const Valuation& agent(int i) const { return agents_[i]; }
    const Valuation& v1() const { return agents_[0]; }
    const Valuation& v2() const { return agents_[1]; }

private:
    Valuation agents_[2];
};

/// Identical additive valuations on which the number of EF1 allocations
/// meets the lower bound: every item worth 1 for even m; for odd m the
/// last item is worth 0.
Instance tight_ef1_instance(int m);

/// Identical additive valuations (1, ..., 1, m) admitting exactly two EFX
/// allocations.
Instance tight_efx_instance(int m);

/// Both agents drawn with random_monotone from seeds derived from `seed`.
Instance random_monotone_instance(int m, std::uint64_t seed);

} // namespace envy

#endif
