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

#ifndef ENVY_BUNDLE_HPP
#define ENVY_BUNDLE_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>

namespace envy {

/// Largest supported item count. Valuation tables hold 2^m entries.
inline constexpr int kMaxItems = 24;

/// A subset of the items {0, ..., m-1} stored as a bitmask; item i is
/// present iff bit i is set. The ambient m is not stored: callers pass it
/// where it matters (complement, range checks).
class Bundle {
public:
    constexpr Bundle() = default;
    constexpr explicit Bundle(std::uint32_t bits) : bits_(bits) {}
    /// Bundle::of({0, 2}) holds items 0 and 2.
    static constexpr Bundle of(std::initializer_list<int> items) {
        std::uint32_t bits = 0;
        for (int i : items) bits |= std::uint32_t{1} << i;
        return Bundle{bits};
    }

    static constexpr Bundle empty() { return Bundle{}; }
    static constexpr Bundle full(int m) { return Bundle{(std::uint32_t{1} << m) - 1u}; }

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool is_empty() const { return bits_ == 0; }
    constexpr bool contains(int item) const { return (bits_ >> item) & 1u; }
    constexpr bool is_subset_of(Bundle other) const { return (bits_ & ~other.bits_) == 0; }

    constexpr Bundle with(int item) const { return Bundle{bits_ | (std::uint32_t{1} << item)}; }
    constexpr Bundle without(int item) const { return Bundle{bits_ & ~(std::uint32_t{1} << item)}; }
    constexpr Bundle complement(int m) const { return Bundle{bits_ ^ full(m).bits_}; }

    /// True iff bits < 2^m.
    constexpr bool fits(int m) const { return (bits_ >> m) == 0; }

    friend constexpr Bundle operator|(Bundle a, Bundle b) { return Bundle{a.bits_ | b.bits_}; }
    friend constexpr Bundle operator&(Bundle a, Bundle b) { return Bundle{a.bits_ & b.bits_}; }
    friend constexpr Bundle operator^(Bundle a, Bundle b) { return Bundle{a.bits_ ^ b.bits_}; }
    friend constexpr auto operator<=>(Bundle, Bundle) = default;

private:
    std::uint32_t bits_ = 0;
};

/// Size of the symmetric difference.
constexpr int hamming_distance(Bundle a, Bundle b) { return (a ^ b).size(); }

/// Representative of the unordered partition {b, M \ b}: the side that does
/// not contain item m-1. It is also the side with the smaller bit value.
constexpr Bundle canonical_part(Bundle b, int m) {
    return b.contains(m - 1) ? b.complement(m) : b;
}

/// Calls fn(item) for each item in b, in increasing order.
template <typename Fn>
constexpr void for_each_item(Bundle b, Fn&& fn) {
    for (std::uint32_t rest = b.bits(); rest != 0; rest &= rest - 1) {
        fn(std::countr_zero(rest));
    }
}

} // namespace envy

#endif
