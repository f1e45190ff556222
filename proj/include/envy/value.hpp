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

#ifndef ENVY_VALUE_HPP
#define ENVY_VALUE_HPP

#include <compare>
#include <cstdint>
#include <string>

namespace envy {

/// Exact nonnegative fixed-point number: an integer count of 1/kDenominator
/// units. Every valuation shares the same denominator, so comparisons are
/// plain integer comparisons and ties are exact.
class Value {
public:
    static constexpr std::int64_t kDenominator = 1'000'000;

    constexpr Value() = default;

    static constexpr Value from_units(std::int64_t units) { return Value{units}; }
    /// Throws InvalidInput when the value is negative or does not fit.
    static Value from_integer(std::int64_t whole);
    /// Converts a decimal with at most six fractional digits. Throws
    /// InvalidInput for negative, non-finite or over-precise input.
    static Value from_double(double x);
    /// Parses "3", "0.25" or "7/4" exactly. Throws InvalidInput.
    static Value parse(const std::string& text);

    constexpr std::int64_t units() const { return units_; }
    constexpr bool is_integral() const { return units_ % kDenominator == 0; }
    double to_double() const { return static_cast<double>(units_) / kDenominator; }
    /// Exact decimal rendering, e.g. "3" or "0.125".
    std::string to_string() const;

    /// Throws InvalidInput on overflow.
    friend Value checked_add(Value a, Value b);

    friend constexpr Value operator+(Value a, Value b) { return Value{a.units_ + b.units_}; }
    friend constexpr auto operator<=>(Value, Value) = default;

private:
    constexpr explicit Value(std::int64_t units) : units_(units) {}
    std::int64_t units_ = 0;
};

} // namespace envy

#endif
