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

#include <doctest.h>

#include "envy/census.hpp"
#include "envy/error.hpp"
#include "oracles.hpp"

using namespace envy;

namespace {

Instance identical(std::initializer_list<std::int64_t> values) {
    auto v = make_additive(values);
    return Instance{v, v};
}

std::vector<Bundle> bundles(std::initializer_list<std::uint32_t> bits) {
    std::vector<Bundle> out;
    for (auto b : bits) out.emplace_back(b);
    return out;
}

} // namespace

TEST_CASE("count_ef1_allocations") {
    CHECK(count_ef1_allocations(tight_ef1_instance(4)) == 6);
    CHECK(count_ef1_allocations(tight_ef1_instance(5)) == 12);
    CHECK(count_ef1_allocations(identical({1})) == 2);
}

TEST_CASE("count_efx_allocations") {
    for (int m = 1; m <= 9; ++m) CHECK(count_efx_allocations(tight_efx_instance(m)) == 2);
    CHECK(count_efx_allocations(identical({1, 1, 1, 1})) == 6);
    CHECK(count_efx_allocations(identical({1, 1})) == 2);
}

TEST_CASE("bit-vector counting matches the per-bundle reference") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const int m = 1 + static_cast<int>(seed % 10);
        const auto inst = random_monotone_instance(m, seed);
        CHECK(count_ef1_allocations(inst) == oracle::count_allocations(inst, false));
        CHECK(count_efx_allocations(inst) == oracle::count_allocations(inst, true));
    }
}

TEST_CASE("counting does not depend on the worker count") {
    const auto inst = random_monotone_instance(13, 77);
    const auto base_ef1 = count_ef1_allocations(inst, {1});
    const auto base_efx = count_efx_allocations(inst, {1});
    for (unsigned w : {2u, 3u, 7u, 64u}) {
        CHECK(count_ef1_allocations(inst, {w}) == base_ef1);
        CHECK(count_efx_allocations(inst, {w}) == base_efx);
        CHECK(std::ranges::equal(fair_bundle_flags(inst.v1(), Notion::EF1, {w}).words(),
                                 fair_bundle_flags(inst.v1(), Notion::EF1, {1}).words()));
    }
}

TEST_CASE("f_ef1") {
    CHECK(f_ef1(4) == 6);
    CHECK(f_ef1(5) == 12);
    CHECK(f_ef1(1) == 2);
    for (int m = 1; m <= 40; ++m) {
        const auto expected = m % 2 == 0 ? oracle::pascal(m, m / 2) : 2 * oracle::pascal(m - 1, (m - 1) / 2);
        CHECK(f_ef1(m) == expected);
        CHECK(f_ef1(m) % 2 == 0);
    }
    CHECK_THROWS_AS(f_ef1(0), InvalidInput);
}

TEST_CASE("extract_set_systems") {
    const auto two = extract_set_systems(make_additive({1, 1}));
    CHECK(two.good.members() == bundles({1, 2}));
    CHECK(two.too_small.members() == bundles({0}));
    CHECK(two.too_large.members() == bundles({3}));

    const auto one = extract_set_systems(make_additive({1}));
    CHECK(one.good.members() == bundles({0, 1}));
    CHECK(one.too_small.empty());
    CHECK(one.too_large.empty());

    const auto four = extract_set_systems(make_additive({1, 1, 1, 1}));
    CHECK(four.good.size() == 6);
    for (Bundle b : four.good) CHECK(b.size() == 2);
}

TEST_CASE("verify_separation") {
    CHECK(verify_separation(make_additive({1, 1, 1, 1})));
    CHECK(verify_separation(make_additive({1})));
    for (std::uint64_t seed = 0; seed < 20; ++seed) CHECK(verify_separation(random_monotone(8, seed)));
}

TEST_CASE("set-system invariants on random valuations") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const int m = 1 + static_cast<int>(seed % 9);
        const auto v = random_monotone(m, seed);
        const auto sys = extract_set_systems(v);
        CHECK(sys.too_small.size() == sys.too_large.size());
        CHECK(sys.too_small.size() + sys.too_large.size() + sys.good.size() == (std::size_t{1} << m));
        if (!sys.too_small.empty()) {
            CHECK(oracle::min_cross_distance(sys.too_small.members(), sys.too_large.members()) >= 2);
        }
        CHECK(verify_separation(v));
        CHECK(2 * list_ef1_partitions(v).size() == sys.good.size());
    }
}

TEST_CASE("list_ef1_partitions") {
    const auto four = list_ef1_partitions(make_additive({1, 1, 1, 1}));
    CHECK(four.size() == 3);
    CHECK(BigInt{2 * four.size()} == f_ef1(4));

    const auto odd = list_ef1_partitions(make_additive({1, 1, 0}));
    CHECK(odd.members() == bundles({0b001, 0b010}));
    CHECK(BigInt{2 * odd.size()} >= f_ef1(3));

    const auto one = list_ef1_partitions(make_additive({1}));
    CHECK(one.members() == bundles({0}));

    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const int m = 1 + static_cast<int>(seed % 10);
        const auto parts = list_ef1_partitions(random_monotone(m, seed));
        CHECK(BigInt{2 * parts.size()} >= f_ef1(m));
        for (Bundle p : parts) CHECK_FALSE(p.contains(m - 1));
    }
}

TEST_CASE("combine_ef1_partitions") {
    const auto pair = identical({1, 1});
    const SetSystem shared{2, bundles({0b01})};
    const auto both = combine_ef1_partitions(shared, shared, pair);
    REQUIRE(both.size() == 2);
    CHECK(both[0] == Allocation{Bundle::of({0}), Bundle::of({1})});
    CHECK(both[1] == Allocation{Bundle::of({1}), Bundle::of({0})});

    const auto four = identical({1, 1, 1, 1});
    const SetSystem p{4, bundles({0b0011})};
    const SetSystem q{4, bundles({0b0101})};
    const auto split = combine_ef1_partitions(p, q, four);
    CHECK(split.size() == 2);
    for (const auto& a : split) CHECK(is_ef1_allocation(four, a.first));

    CHECK(combine_ef1_partitions(SetSystem{2}, SetSystem{2}, pair).empty());

    // Listing either side of a partition means the same partition.
    CHECK(combine_ef1_partitions(SetSystem{2, bundles({0b10})}, shared, pair).size() == 2);
}

TEST_CASE("combine_ef1_partitions rejects partitions that are not EF1") {
    const auto four = identical({1, 1, 1, 1});
    const SetSystem unbalanced{4, bundles({0b0001})};
    CHECK_THROWS_AS(combine_ef1_partitions(unbalanced, SetSystem{4}, four), InvalidInput);
    CHECK_THROWS_AS(combine_ef1_partitions(SetSystem{4}, unbalanced, four), InvalidInput);
    CHECK_THROWS_AS(combine_ef1_partitions(SetSystem{3}, SetSystem{4}, four), InvalidInput);
}

TEST_CASE("combination meets the bound on random instances") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const int m = 1 + static_cast<int>(seed % 9);
        const auto inst = random_monotone_instance(m, seed);
        const auto pa = list_ef1_partitions(inst.v1());
        const auto pb = list_ef1_partitions(inst.v2());
        const auto out = combine_ef1_partitions(pa, pb, inst);
        CHECK(out.size() >= pa.size() + pb.size());
        CHECK(BigInt{out.size()} >= f_ef1(m));
        for (const auto& a : out) {
            CHECK(a.second == a.first.complement(m));
            CHECK(is_ef1_allocation(inst, a.first));
        }
    }
}

TEST_CASE("efx_partition") {
    const auto tight = efx_partition(tight_efx_instance(3).v1());
    CHECK(tight.part == Bundle::of({0, 1}));
    CHECK(tight.rest == Bundle::of({2}));

    const auto sym = efx_partition(make_additive({1, 1}));
    CHECK(sym.part == Bundle::of({0}));
    CHECK(sym.rest == Bundle::of({1}));

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto v = random_monotone(6, seed);
        const auto p = efx_partition(v);
        CHECK(is_efx_bundle(v, p.part));
        CHECK(is_efx_bundle(v, p.rest));
        CHECK(p.rest == p.part.complement(6));
    }
}

TEST_CASE("cut_and_choose_efx") {
    const auto tight = cut_and_choose_efx(tight_efx_instance(3));
    CHECK(tight[0] == Allocation{Bundle::of({0, 1}), Bundle::of({2})});
    CHECK(tight[1] == Allocation{Bundle::of({2}), Bundle::of({0, 1})});

    const auto sym = cut_and_choose_efx(identical({1, 1}));
    CHECK(sym[0] == Allocation{Bundle::of({0}), Bundle::of({1})});
    CHECK(sym[1] == Allocation{Bundle::of({1}), Bundle::of({0})});

    // Alice proposes {0}|{1,2}, Bob proposes {0,1}|{2}.
    const Instance mixed{make_additive({3, 1, 1}), make_additive({1, 1, 3})};
    const auto picks = cut_and_choose_efx(mixed);
    CHECK(picks[0] == Allocation{Bundle::of({0}), Bundle::of({1, 2})});
    CHECK(picks[1] == Allocation{Bundle::of({0, 1}), Bundle::of({2})});
    for (const auto& a : picks) CHECK(is_efx_allocation(mixed, a.first));
    CHECK(picks[0] != picks[1]);
}

TEST_CASE("theorem bounds hold on random instances") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        const int m = 1 + static_cast<int>(seed % 10);
        const auto inst = random_monotone_instance(m, seed);
        const auto ef1 = count_ef1_allocations(inst);
        const auto efx = count_efx_allocations(inst);
        CHECK(efx >= 2);
        CHECK(efx <= ef1);
        CHECK(BigInt{ef1} >= f_ef1(m));
        const auto cc = cut_and_choose_efx(inst);
        CHECK(cc[0] != cc[1]);
        CHECK(is_efx_allocation(inst, cc[0].first));
        CHECK(is_efx_allocation(inst, cc[1].first));
    }
}

TEST_CASE("run_census") {
    const auto report = run_census(tight_ef1_instance(4), true, true);
    CHECK(report.m == 4);
    CHECK(report.ef1_count == 6u);
    CHECK(report.efx_count == 6u);
    CHECK(report.bound == 6);
    CHECK(report.agents[0].good_count == 6);
    CHECK(report.agents[0].too_small_count == 5);
    CHECK(report.agents[0].too_large_count == 5);
    CHECK(report.separation_ok());

    const auto ef1_only = run_census(tight_efx_instance(5), true, false);
    CHECK(ef1_only.ef1_count.has_value());
    CHECK_FALSE(ef1_only.efx_count.has_value());
}
