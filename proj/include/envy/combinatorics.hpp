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

#ifndef ENVY_COMBINATORICS_HPP
#define ENVY_COMBINATORICS_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "envy/bundle.hpp"
#include "envy/set_system.hpp"

namespace envy {

using BigInt = boost::multiprecision::cpp_int;

/// C(n, k); zero when k > n.
BigInt binom(const BigInt& n, std::uint64_t k);
inline BigInt binom(std::uint64_t n, std::uint64_t k) { return binom(BigInt{n}, k); }

// ---------------------------------------------------------------------------
// Hamming geometry on 2^X.

/// Distance between systems when one of them is empty. Compares greater than
/// every real distance.
inline constexpr int kInfiniteDistance = std::numeric_limits<int>::max();

/// min over cross pairs of hamming_distance; kInfiniteDistance if either
/// system is empty. Throws InvalidInput if the ground sets differ.
int system_distance(const SetSystem& a, const SetSystem& b);

/// H_r(center): every bundle within distance r of center.
/// Throws InvalidInput unless 0 <= r <= m.
SetSystem the_hamming_ball(Bundle center, int radius, int m);

/// A Hamming ball of exactly `size` members: H_{r-1}(center) plus the first
/// bundles of the distance-r shell, where r is the least radius with
/// |H_r| >= size. The shell is taken in colexicographic order of the
/// symmetric difference with the center.
/// Throws InvalidInput unless 1 <= size <= 2^m.
SetSystem a_hamming_ball(Bundle center, std::uint64_t size, int m);

struct HarperReport {
    int original_distance = 0;  // d(A, B)
    int ball_distance = 0;      // d(A0, B0)
    bool ok = false;            // ball_distance >= original_distance
};

/// Replaces A by a Hamming ball of the same size centred on the full set
/// and B by one centred on the empty set, and checks that the distance did
/// not shrink. Throws InvalidInput if either system is empty or the ground
/// sets differ.
HarperReport verify_harper(const SetSystem& a, const SetSystem& b);

// ---------------------------------------------------------------------------
// Cascades and the shadow operator.

/// One term C(top, level).
struct CascadeTerm {
    BigInt top;
    int level = 0;

    friend bool operator==(const CascadeTerm&, const CascadeTerm&) = default;
};

/// n = C(a_k, k) + C(a_{k-1}, k-1) + ... + C(a_i, i) with
/// a_k > a_{k-1} > ... > a_i >= i >= 1.
struct Cascade {
    int k = 0;
    std::vector<CascadeTerm> terms;

    BigInt sum() const;
    /// "C(4,3)+C(3,2)+C(1,1)"; "0" for the empty cascade.
    std::string to_string() const;
};

/// Greedy k-binomial decomposition: the largest a_k with C(a_k, k) <= n,
/// then the remainder at level k-1, until nothing remains. n = 0 yields an
/// empty cascade. Throws InvalidInput if n < 0 or k < 1.
Cascade cascade_decompose(const BigInt& n, int k);

/// The shadow bound: for n = sum C(a_t, t) at level k, returns
/// sum C(a_t, t-1). Zero for n = 0. Throws InvalidInput if n < 0 or k < 1.
BigInt shadow(const BigInt& n, int k);

/// shadow(n, k) <= shadow(n + 1, k) for all 0 <= n < n_max.
bool shadow_is_monotone(int k, std::uint64_t n_max);

// ---------------------------------------------------------------------------
// Sperner families.

/// Size profile of a family over an n-element ground set: counts[i] is the
/// number of members of size i + 1, for i = 0 .. n-1.
struct SpernerProfile {
    int n = 0;
    std::vector<std::uint64_t> counts;
};

/// Whether some Sperner family has exactly this profile. Folds the counts
/// from the top level down, shadowing the running total at each step, and
/// compares against C(n, j+1) at the lowest nonzero level j.
/// Throws InvalidInput for an all-zero profile or counts.size() != n.
bool bjorner_feasible(const SpernerProfile& profile);

/// No member is a proper subset of another.
bool is_sperner(const SetSystem& family);

} // namespace envy

#endif
