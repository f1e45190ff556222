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

#ifndef ENVY_CENSUS_HPP
#define ENVY_CENSUS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "envy/bundle.hpp"
#include "envy/combinatorics.hpp"
#include "envy/fairness.hpp"
#include "envy/set_system.hpp"
#include "envy/valuation.hpp"

namespace envy {

/// Ordered allocation: `first` to agent 1, `second` to agent 2.
struct Allocation {
    Bundle first;
    Bundle second;

    friend auto operator<=>(const Allocation&, const Allocation&) = default;
};

/// Unordered partition {part, rest} stored canonically: `part` is the side
/// without item m-1.
struct Partition {
    Bundle part;
    Bundle rest;

    static Partition of(Bundle side, int m) {
        const Bundle p = canonical_part(side, m);
        return {p, p.complement(m)};
    }
    friend auto operator<=>(const Partition&, const Partition&) = default;
};

struct CountOptions {
    /// Worker threads for the per-bundle sweeps; 0 or 1 runs inline.
    /// Results do not depend on this value.
    unsigned workers = 1;
};

/// One bit per bundle: bit S set iff S is EF1 (or EFX) for the valuation.
class BundleFlags {
public:
    BundleFlags(int m, std::vector<std::uint64_t> words) : m_(m), words_(std::move(words)) {}

    int items() const { return m_; }
    bool test(Bundle b) const { return (words_[b.bits() >> 6] >> (b.bits() & 63)) & 1u; }
    std::uint64_t count() const;
    std::span<const std::uint64_t> words() const { return words_; }

private:
    int m_;
    std::vector<std::uint64_t> words_;
};

enum class Notion { EF1, EFX };

BundleFlags fair_bundle_flags(const Valuation& v, Notion notion, CountOptions opts = {});

/// Number of bundles S with first.test(S) and second.test(M \ S).
std::uint64_t count_complementary_pairs(const BundleFlags& first, const BundleFlags& second);

/// Exact number of ordered EF1 allocations (M1, M \ M1).
std::uint64_t count_ef1_allocations(const Instance& inst, CountOptions opts = {});
/// Exact number of ordered EFX allocations.
std::uint64_t count_efx_allocations(const Instance& inst, CountOptions opts = {});

/// Lower bound on the EF1 count: C(m, m/2) for even m, 2 C(m-1, (m-1)/2)
/// for odd m. Throws InvalidInput for m < 1.
BigInt f_ef1(int m);

struct SetSystems {
    SetSystem too_small;
    SetSystem too_large;
    SetSystem good;
};

/// Splits 2^M by classify_bundle.
SetSystems extract_set_systems(const Valuation& v);

/// d(too small, too large) >= 2; true when either side is empty.
bool verify_separation(const Valuation& v);

/// Every unordered partition with both sides EF1 for v, as the canonical
/// parts (the side without item m-1).
SetSystem list_ef1_partitions(const Valuation& v);

/// Turns partitions that are EF1 for agent 1 (for_first) and for agent 2
/// (for_second) into EF1 allocations. A partition in both lists yields
/// both orderings; one in a single list goes to the agent that listed it
/// after the other agent takes a weakly preferred side (ties: the canonical
/// part). Returns the allocations sorted and deduplicated.
/// Throws InvalidInput if a listed partition is not EF1 for its agent or
/// the systems do not match the instance's m.
std::vector<Allocation> combine_ef1_partitions(const SetSystem& for_first, const SetSystem& for_second,
                                               const Instance& inst);

/// First partition, scanning bundles in increasing bit order, with both
/// sides EFX for v. Throws InternalInvariant if there is none, which cannot
/// happen for a monotone valuation.
Partition efx_partition(const Valuation& v);

/// Two distinct EFX allocations by cut-and-choose: each agent proposes
/// efx_partition; equal proposals give both orderings, otherwise each agent
/// in turn picks a weakly preferred side of the other's proposal.
std::array<Allocation, 2> cut_and_choose_efx(const Instance& inst);

/// Per-agent classification tallies.
struct AgentCensus {
    std::uint64_t good_count = 0;
    std::uint64_t too_small_count = 0;
    std::uint64_t too_large_count = 0;
    bool separation_ok = true;
};

struct CensusReport {
    int m = 0;
    std::optional<std::uint64_t> ef1_count;
    std::optional<std::uint64_t> efx_count;
    std::array<AgentCensus, 2> agents;
    BigInt bound;

    bool separation_ok() const { return agents[0].separation_ok && agents[1].separation_ok; }
};

CensusReport run_census(const Instance& inst, bool with_ef1, bool with_efx, CountOptions opts = {});

} // namespace envy

#endif
