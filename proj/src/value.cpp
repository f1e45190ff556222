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

#include "envy/value.hpp"

#include <charconv>
#include <cmath>
#include <limits>

#include "envy/error.hpp"

namespace envy {

namespace {

constexpr std::int64_t kMaxUnits = std::numeric_limits<std::int64_t>::max();

std::int64_t parse_int(std::string_view text, const std::string& whole) {
    std::int64_t out = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, out);
    if (ec != std::errc{} || ptr != end || text.empty()) {
        throw InvalidInput("not a valid value: '" + whole + "'");
    }
    return out;
}

} // namespace

Value Value::from_integer(std::int64_t whole) {
    if (whole < 0) throw InvalidInput("values must be nonnegative, got " + std::to_string(whole));
    if (whole > kMaxUnits / kDenominator) throw InvalidInput("value too large: " + std::to_string(whole));
    return Value{whole * kDenominator};
}

Value Value::from_double(double x) {
    if (!std::isfinite(x) || x < 0.0) {
        throw InvalidInput("values must be finite and nonnegative");
    }
    const double scaled = x * static_cast<double>(kDenominator);
    if (scaled >= 9.0e18) throw InvalidInput("value too large");
    const double rounded = std::round(scaled);
    if (std::abs(scaled - rounded) > 1e-6 * std::max(1.0, rounded)) {
        throw InvalidInput("value has more than six fractional digits; use an integer or a ratio string");
    }
    return Value{static_cast<std::int64_t>(rounded)};
}

Value Value::parse(const std::string& text) {
    std::string_view sv(text);
    if (auto slash = sv.find('/'); slash != std::string_view::npos) {
        const std::int64_t num = parse_int(sv.substr(0, slash), text);
        const std::int64_t den = parse_int(sv.substr(slash + 1), text);
        if (den <= 0 || num < 0) throw InvalidInput("not a valid nonnegative ratio: '" + text + "'");
        if (num > kMaxUnits / kDenominator) throw InvalidInput("value too large: '" + text + "'");
        const std::int64_t scaled = num * kDenominator;
        if (scaled % den != 0) {
            throw InvalidInput("ratio '" + text + "' is not representable with denominator 10^6");
        }
        return Value{scaled / den};
    }
    if (auto dot = sv.find('.'); dot != std::string_view::npos) {
        const std::int64_t whole = parse_int(sv.substr(0, dot), text);
        std::string_view frac = sv.substr(dot + 1);
        if (frac.empty() || frac.size() > 6) {
            throw InvalidInput("value '" + text + "' needs 1 to 6 fractional digits");
        }
        std::int64_t frac_units = parse_int(frac, text);
        for (auto i = frac.size(); i < 6; ++i) frac_units *= 10;
        const Value w = from_integer(whole);
        return checked_add(w, Value{frac_units});
    }
    return from_integer(parse_int(sv, text));
}

std::string Value::to_string() const {
    std::string out = std::to_string(units_ / kDenominator);
    std::int64_t frac = units_ % kDenominator;
    if (frac == 0) return out;
    std::string digits = std::to_string(frac);
    digits.insert(0, 6 - digits.size(), '0');
    while (digits.back() == '0') digits.pop_back();
    return out + "." + digits;
}

Value checked_add(Value a, Value b) {
    if (a.units_ > kMaxUnits - b.units_) throw InvalidInput("value overflow");
    return Value{a.units_ + b.units_};
}

} // namespace envy
