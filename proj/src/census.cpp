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

#include "envy/census.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <thread>

#include "envy/error.hpp"

namespace envy {

namespace {

std::uint64_t reverse_bits(std::uint64_t x) {
    x = ((x >> 1) & 0x5555555555555555ULL) | ((x & 0x5555555555555555ULL) << 1);
    x = ((x >> 2) & 0x3333333333333333ULL) | ((x & 0x3333333333333333ULL) << 2);
    x = ((x >> 4) & 0x0f0f0f0f0f0f0f0fULL) | ((x & 0x0f0f0f0f0f0f0f0fULL) << 4);
    x = ((x >> 8) & 0x00ff00ff00ff00ffULL) | ((x & 0x00ff00ff00ff00ffULL) << 8);
    x = ((x >> 16) & 0x0000ffff0000ffffULL) | ((x & 0x0000ffff0000ffffULL) << 16);
    return (x >> 32) | (x << 32);
}

// Runs body(begin, end) over contiguous chunks of [0, n). Each index is
// handled by exactly one worker.
template <typename Body>
void parallel_chunks(std::size_t n, unsigned workers, Body body) {
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n)));
    if (workers == 1) {
        body(std::size_t{0}, n);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t begin = 0; begin < n; begin += chunk) {
        pool.emplace_back([=] { body(begin, std::min(n, begin + chunk)); });
    }
}

struct ClassFlags {
    const BundleFlags& ef1;

    BundleClass operator()(Bundle s) const {
        if (!ef1.test(s)) return BundleClass::TooSmall;
        return ef1.test(s.complement(ef1.items())) ? BundleClass::Good : BundleClass::TooLarge;
    }
};

bool separated(const BundleFlags& ef1) {
    const ClassFlags cls{ef1};
    const int m = ef1.items();
    const std::uint32_t n = std::uint32_t{1} << m;
    for (std::uint32_t s = 0; s < n; ++s) {
        if (cls(Bundle{s}) != BundleClass::TooSmall) continue;
        for (int i = 0; i < m; ++i) {
            if (cls(Bundle{s ^ (1u << i)}) == BundleClass::TooLarge) return false;
        }
    }
    return true;
}

AgentCensus tally(const BundleFlags& ef1) {
    const ClassFlags cls{ef1};
    AgentCensus out;
    const std::uint32_t n = std::uint32_t{1} << ef1.items();
    for (std::uint32_t s = 0; s < n; ++s) {
        switch (cls(Bundle{s})) {
        case BundleClass::Good: ++out.good_count; break;
        case BundleClass::TooSmall: ++out.too_small_count; break;
        case BundleClass::TooLarge: ++out.too_large_count; break;
        }
    }
    out.separation_ok = separated(ef1);
    return out;
}

Bundle weakly_preferred(const Valuation& v, const Partition& p) {
    return v[p.part] >= v[p.rest] ? p.part : p.rest;
}

} // namespace

std::uint64_t BundleFlags::count() const {
    std::uint64_t total = 0;
    for (auto w : words_) total += static_cast<std::uint64_t>(std::popcount(w));
    return total;
}

BundleFlags fair_bundle_flags(const Valuation& v, Notion notion, CountOptions opts) {
    const std::uint32_t n = v.bundle_count();
    const std::size_t word_count = std::max<std::size_t>(1, n / 64);
    std::vector<std::uint64_t> words(word_count, 0);
    parallel_chunks(word_count, opts.workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t w = begin; w < end; ++w) {
            std::uint64_t bits = 0;
            const std::uint32_t base = static_cast<std::uint32_t>(w * 64);
            const std::uint32_t stop = std::min<std::uint32_t>(n, base + 64);
            for (std::uint32_t s = base; s < stop; ++s) {
                const bool fair = notion == Notion::EF1 ? is_ef1_bundle(v, Bundle{s}) : is_efx_bundle(v, Bundle{s});
                bits |= std::uint64_t{fair} << (s - base);
            }
            words[w] = bits;
        }
    });
    return BundleFlags{v.items(), std::move(words)};
}

std::uint64_t count_complementary_pairs(const BundleFlags& first, const BundleFlags& second) {
    if (first.items() != second.items()) throw InvalidInput("flag vectors over different item counts");
    const int m = first.items();
    if (m < 6) {
        std::uint64_t total = 0;
        const std::uint32_t n = std::uint32_t{1} << m;
        for (std::uint32_t s = 0; s < n; ++s) {
            total += first.test(Bundle{s}) && second.test(Bundle{s}.complement(m));
        }
        return total;
    }
    // Complementing a bundle index maps bit position p to 2^m - 1 - p, which
    // reverses the whole vector: word w pairs with word W-1-w, bit-reversed.
    const auto a = first.words();
    const auto b = second.words();
    const std::size_t w_count = a.size();
    std::uint64_t total = 0;
    for (std::size_t w = 0; w < w_count; ++w) {
        total += static_cast<std::uint64_t>(std::popcount(a[w] & reverse_bits(b[w_count - 1 - w])));
    }
    return total;
}

std::uint64_t count_ef1_allocations(const Instance& inst, CountOptions opts) {
    return count_complementary_pairs(fair_bundle_flags(inst.v1(), Notion::EF1, opts),
                                     fair_bundle_flags(inst.v2(), Notion::EF1, opts));
}

std::uint64_t count_efx_allocations(const Instance& inst, CountOptions opts) {
    return count_complementary_pairs(fair_bundle_flags(inst.v1(), Notion::EFX, opts),
                                     fair_bundle_flags(inst.v2(), Notion::EFX, opts));
}

BigInt f_ef1(int m) {
    if (m < 1) throw InvalidInput("f_ef1 needs m >= 1, got " + std::to_string(m));
    const auto um = static_cast<std::uint64_t>(m);
    if (m % 2 == 0) return binom(um, um / 2);
    return 2 * binom(um - 1, (um - 1) / 2);
}

SetSystems extract_set_systems(const Valuation& v) {
    const BundleFlags ef1 = fair_bundle_flags(v, Notion::EF1);
    const ClassFlags cls{ef1};
    std::vector<Bundle> small, large, good;
    for (std::uint32_t s = 0; s < v.bundle_count(); ++s) {
        switch (cls(Bundle{s})) {
        case BundleClass::Good: good.emplace_back(s); break;
        case BundleClass::TooSmall: small.emplace_back(s); break;
        case BundleClass::TooLarge: large.emplace_back(s); break;
        }
    }
    const int m = v.items();
    return {SetSystem{m, std::move(small)}, SetSystem{m, std::move(large)}, SetSystem{m, std::move(good)}};
}

bool verify_separation(const Valuation& v) {
    return separated(fair_bundle_flags(v, Notion::EF1));
}

SetSystem list_ef1_partitions(const Valuation& v) {
    const int m = v.items();
    const BundleFlags ef1 = fair_bundle_flags(v, Notion::EF1);
    std::vector<Bundle> parts;
    const std::uint32_t half = std::uint32_t{1} << (m - 1);
    for (std::uint32_t s = 0; s < half; ++s) {
        const Bundle b{s};
        if (ef1.test(b) && ef1.test(b.complement(m))) parts.push_back(b);
    }
    return SetSystem{m, std::move(parts)};
}

std::vector<Allocation> combine_ef1_partitions(const SetSystem& for_first, const SetSystem& for_second,
                                               const Instance& inst) {
    const int m = inst.items();
    if (for_first.items() != m || for_second.items() != m) {
        throw InvalidInput("partition lists and instance disagree on the item count");
    }
    auto canonicalize = [&](const SetSystem& listed, const Valuation& v, int agent) {
        std::set<Partition> out;
        for (Bundle b : listed) {
            const Partition p = Partition::of(b, m);
            if (!is_ef1_bundle(v, p.part) || !is_ef1_bundle(v, p.rest)) {
                throw InvalidInput("partition {" + std::to_string(p.part.bits()) + ", " +
                                   std::to_string(p.rest.bits()) + "} is not EF1 for agent " +
                                   std::to_string(agent));
            }
            out.insert(p);
        }
        return out;
    };
    const std::set<Partition> first = canonicalize(for_first, inst.v1(), 1);
    const std::set<Partition> second = canonicalize(for_second, inst.v2(), 2);

    std::vector<Allocation> out;
    for (const Partition& p : first) {
        if (second.contains(p)) {
            out.push_back({p.part, p.rest});
            out.push_back({p.rest, p.part});
        } else {
            const Bundle pick = weakly_preferred(inst.v2(), p);
            out.push_back({pick.complement(m), pick});
        }
    }
    for (const Partition& p : second) {
        if (first.contains(p)) continue;
        const Bundle pick = weakly_preferred(inst.v1(), p);
        out.push_back({pick, pick.complement(m)});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Partition efx_partition(const Valuation& v) {
    const int m = v.items();
    const std::uint32_t half = std::uint32_t{1} << (m - 1);
    for (std::uint32_t s = 0; s < half; ++s) {
        const Bundle b{s};
        if (is_efx_bundle(v, b) && is_efx_bundle(v, b.complement(m))) return Partition::of(b, m);
    }
    throw InternalInvariant("no EFX partition found; the valuation table is corrupt");
}

std::array<Allocation, 2> cut_and_choose_efx(const Instance& inst) {
    const int m = inst.items();
    const Partition alice = efx_partition(inst.v1());
    const Partition bob = efx_partition(inst.v2());
    if (alice == bob) {
        return {Allocation{alice.part, alice.rest}, Allocation{alice.rest, alice.part}};
    }
    const Bundle bob_pick = weakly_preferred(inst.v2(), alice);
    const Bundle alice_pick = weakly_preferred(inst.v1(), bob);
    return {Allocation{bob_pick.complement(m), bob_pick}, Allocation{alice_pick, alice_pick.complement(m)}};
}

CensusReport run_census(const Instance& inst, bool with_ef1, bool with_efx, CountOptions opts) {
    CensusReport report;
    report.m = inst.items();
    report.bound = f_ef1(report.m);
    const BundleFlags ef1_first = fair_bundle_flags(inst.v1(), Notion::EF1, opts);
    const BundleFlags ef1_second = fair_bundle_flags(inst.v2(), Notion::EF1, opts);
    if (with_ef1) report.ef1_count = count_complementary_pairs(ef1_first, ef1_second);
    if (with_efx) report.efx_count = count_efx_allocations(inst, opts);
    report.agents = {tally(ef1_first), tally(ef1_second)};
    return report;
}

} // namespace envy
