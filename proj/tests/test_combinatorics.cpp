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

#include <random>

#include "envy/census.hpp"
#include "envy/combinatorics.hpp"
#include "envy/error.hpp"
#include "oracles.hpp"

using namespace envy;

namespace {

SetSystem family(int m, std::initializer_list<std::uint32_t> bits) {
    std::vector<Bundle> members;
    for (auto b : bits) members.emplace_back(b);
    return SetSystem{m, std::move(members)};
}

std::vector<std::pair<int, int>> terms_of(const Cascade& c) {
    std::vector<std::pair<int, int>> out;
    for (const auto& t : c.terms) out.emplace_back(static_cast<int>(t.top), t.level);
    return out;
}

} // namespace

TEST_CASE("binom") {
    CHECK(binom(4, 2) == 6);
    CHECK(binom(9, 0) == 1);
    CHECK(binom(3, 5) == 0);
    CHECK(binom(0, 0) == 1);
    for (int n = 0; n <= 60; ++n) {
        for (int k = 0; k <= n + 1; ++k) CHECK(binom(n, k) == oracle::pascal(n, k));
    }
    CHECK(binom(100, 50) == BigInt{"100891344545564193334812497256"});
}

TEST_CASE("hamming and system distance") {
    CHECK(hamming_distance(Bundle::of({0, 1}), Bundle::of({1, 2})) == 2);
    CHECK(hamming_distance(Bundle::of({0, 3}), Bundle::of({0, 3})) == 0);
    CHECK(system_distance(family(3, {0b001}), family(3, {0b011, 0b100})) == 1);
    CHECK(system_distance(SetSystem{3}, family(3, {1})) == kInfiniteDistance);
    CHECK(system_distance(family(3, {1}), SetSystem{3}) == kInfiniteDistance);
    CHECK_THROWS_AS(system_distance(family(3, {1}), family(4, {1})), InvalidInput);
}

TEST_CASE("system distance matches cross-pair enumeration on both code paths") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 9);
        const std::uint32_t n = 1u << m;
        auto draw = [&] {
            // Alternate sparse and dense systems so both strategies run.
            const std::uint64_t keep = trial % 2 == 0 ? 3 : 60;
            std::vector<Bundle> members;
            for (std::uint32_t s = 0; s < n; ++s) {
                if (rng() % 100 < keep) members.emplace_back(s);
            }
            if (members.empty()) members.emplace_back(static_cast<std::uint32_t>(rng() % n));
            return SetSystem{m, std::move(members)};
        };
        const auto a = draw();
        const auto b = draw();
        CHECK(system_distance(a, b) == oracle::min_cross_distance(a.members(), b.members()));
    }
}

TEST_CASE("the_hamming_ball") {
    CHECK(the_hamming_ball(Bundle::of({0, 2}), 0, 4).members() == std::vector<Bundle>{Bundle::of({0, 2})});
    CHECK(the_hamming_ball(Bundle{}, 1, 3) == family(3, {0, 1, 2, 4}));
    CHECK(the_hamming_ball(Bundle::of({1}), 4, 4).size() == 16);
    for (int m = 1; m <= 8; ++m) {
        for (int r = 0; r <= m; ++r) {
            std::uint64_t expected = 0;
            for (int t = 0; t <= r; ++t) expected += oracle::pascal(m, t);
            CHECK(the_hamming_ball(Bundle::full(m), r, m).size() == expected);
        }
    }
    CHECK_THROWS_AS(the_hamming_ball(Bundle{}, 4, 3), InvalidInput);
    CHECK_THROWS_AS(the_hamming_ball(Bundle{}, -1, 3), InvalidInput);
}

TEST_CASE("a_hamming_ball") {
    CHECK(a_hamming_ball(Bundle::of({1, 2}), 1, 4).members() == std::vector<Bundle>{Bundle::of({1, 2})});
    CHECK(a_hamming_ball(Bundle{}, 8, 3).size() == 8);
    CHECK(a_hamming_ball(Bundle{}, 5, 3) == family(3, {0, 1, 2, 4, 3}));
    // Centre at the full set: distance-1 shell in colex order of the removed item.
    CHECK(a_hamming_ball(Bundle::full(3), 3, 3) == family(3, {7, 6, 5}));
    CHECK_THROWS_AS(a_hamming_ball(Bundle{}, 0, 3), InvalidInput);
    CHECK_THROWS_AS(a_hamming_ball(Bundle{}, 9, 3), InvalidInput);

    for (int m = 1; m <= 6; ++m) {
        for (Bundle center : {Bundle{}, Bundle::full(m), Bundle::of({0})}) {
            for (std::uint64_t size = 1; size <= (1u << m); ++size) {
                const auto ball = a_hamming_ball(center, size, m);
                CHECK(ball.size() == size);
                int r = 0;
                while (the_hamming_ball(center, r, m).size() < size) ++r;
                if (r > 0) {
                    for (Bundle b : the_hamming_ball(center, r - 1, m)) CHECK(ball.contains(b));
                }
                for (Bundle b : ball) CHECK(hamming_distance(b, center) <= r);
            }
        }
    }
}

TEST_CASE("verify_harper") {
    const auto single = verify_harper(family(3, {7}), family(3, {0}));
    CHECK(single.original_distance == 3);
    CHECK(single.ball_distance == 3);
    CHECK(single.ok);

    const auto sys = extract_set_systems(make_additive({1, 1, 1, 1}));
    const auto r = verify_harper(sys.too_small, sys.too_large);
    CHECK(r.ok);
    CHECK(r.ball_distance >= 2);

    CHECK_THROWS_AS(verify_harper(SetSystem{3}, family(3, {1})), InvalidInput);
}

TEST_CASE("verify_harper on every pair of systems over two items") {
    // 15 x 15 nonempty systems over 2^{0,1}.
    for (std::uint32_t fa = 1; fa < 16; ++fa) {
        for (std::uint32_t fb = 1; fb < 16; ++fb) {
            std::vector<Bundle> a, b;
            for (std::uint32_t s = 0; s < 4; ++s) {
                if (fa >> s & 1u) a.emplace_back(s);
                if (fb >> s & 1u) b.emplace_back(s);
            }
            CHECK(verify_harper(SetSystem{2, a}, SetSystem{2, b}).ok);
        }
    }
}

TEST_CASE("verify_harper on every pair of systems over three items") {
    std::size_t failures = 0;
    for (std::uint32_t fa = 1; fa < 256; ++fa) {
        for (std::uint32_t fb = 1; fb < 256; ++fb) {
            std::vector<Bundle> a, b;
            for (std::uint32_t s = 0; s < 8; ++s) {
                if (fa >> s & 1u) a.emplace_back(s);
                if (fb >> s & 1u) b.emplace_back(s);
            }
            failures += !verify_harper(SetSystem{3, a}, SetSystem{3, b}).ok;
        }
    }
    CHECK(failures == 0);
}

TEST_CASE("cascade_decompose") {
    CHECK(terms_of(cascade_decompose(4, 3)) == std::vector<std::pair<int, int>>{{4, 3}});
    CHECK(terms_of(cascade_decompose(8, 3)) == std::vector<std::pair<int, int>>{{4, 3}, {3, 2}, {1, 1}});
    for (int k = 1; k <= 10; ++k) {
        CHECK(terms_of(cascade_decompose(1, k)) == std::vector<std::pair<int, int>>{{k, k}});
    }
    CHECK(cascade_decompose(8, 3).to_string() == "C(4,3)+C(3,2)+C(1,1)");
    CHECK(cascade_decompose(0, 3).terms.empty());
    CHECK_THROWS_AS(cascade_decompose(5, 0), InvalidInput);
    CHECK_THROWS_AS(cascade_decompose(-1, 2), InvalidInput);
}

TEST_CASE("cascade matches the brute-force enumeration") {
    for (int n = 1; n <= 30; ++n) {
        for (int k = 1; k <= 30; ++k) {
            const auto all = oracle::all_cascades(n, k);
            REQUIRE(all.size() == 1);
            CHECK(terms_of(cascade_decompose(n, k)) == all.front());
        }
    }
}

TEST_CASE("cascade invariants for large inputs") {
    const BigInt huge = binom(200, 100) + 12345;
    for (int k : {1, 2, 5, 17, 60}) {
        const auto c = cascade_decompose(huge, k);
        CHECK(c.sum() == huge);
        for (std::size_t i = 0; i < c.terms.size(); ++i) {
            CHECK(c.terms[i].top >= c.terms[i].level);
            CHECK(c.terms[i].level >= 1);
            if (i > 0) CHECK(c.terms[i].top < c.terms[i - 1].top);
        }
    }
}

TEST_CASE("shadow") {
    for (int k = 1; k <= 6; ++k) CHECK(shadow(0, k) == 0);
    CHECK(shadow(4, 3) == 6);
    CHECK(shadow(10, 3) == 10);
    CHECK(shadow(7, 1) == 1);
    // shadow of C(a, k) is C(a, k-1).
    for (int a = 3; a <= 20; ++a) CHECK(shadow(binom(a, 3), 3) == binom(a, 2));
}

TEST_CASE("shadow_is_monotone") {
    CHECK(shadow_is_monotone(3, 1000));
    CHECK(shadow_is_monotone(1, 100));
    CHECK(shadow_is_monotone(8, 500));
}

TEST_CASE("bjorner_feasible") {
    CHECK(bjorner_feasible({3, {0, 3, 0}}));
    CHECK_FALSE(bjorner_feasible({3, {0, 1, 1}}));
    CHECK_FALSE(bjorner_feasible({4, {0, 7, 0, 0}}));
    CHECK(bjorner_feasible({4, {0, 6, 0, 0}}));
    CHECK(bjorner_feasible({3, {0, 0, 1}}));
    CHECK_FALSE(bjorner_feasible({3, {0, 0, 2}}));
    CHECK_THROWS_AS(bjorner_feasible({3, {0, 0, 0}}), InvalidInput);
    CHECK_THROWS_AS(bjorner_feasible({3, {1, 0}}), InvalidInput);
}

TEST_CASE("bjorner_feasible agrees with exhaustive search for n <= 3") {
    for (int n = 1; n <= 3; ++n) {
        const auto realised = oracle::sperner_profiles(n);
        std::vector<std::uint64_t> c(n, 0);
        // Odometer over 0 <= c_i <= C(n, i+1).
        while (true) {
            if (std::any_of(c.begin(), c.end(), [](auto x) { return x != 0; })) {
                CHECK(bjorner_feasible({n, c}) == realised.contains(c));
            }
            int i = 0;
            while (i < n && c[i] == oracle::pascal(n, i + 1)) c[i++] = 0;
            if (i == n) break;
            ++c[i];
        }
    }
}

TEST_CASE("is_sperner") {
    CHECK(is_sperner(family(2, {0b01, 0b10})));
    CHECK_FALSE(is_sperner(family(2, {0b01, 0b11})));
    for (int m = 1; m <= 10; ++m) {
        for (int k = 0; k <= m; ++k) {
            std::vector<Bundle> level;
            for (std::uint32_t s = 0; s < (1u << m); ++s) {
                if (std::popcount(s) == k) level.emplace_back(s);
            }
            CHECK(is_sperner(SetSystem{m, level}));
        }
    }
}

TEST_CASE("is_sperner agrees on both code paths and obeys the size bound") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 5);
        const std::uint32_t n = 1u << m;
        std::vector<Bundle> members;
        const std::uint64_t keep = 5 + rng() % 60;
        for (std::uint32_t s = 0; s < n; ++s) {
            if (rng() % 100 < keep) members.emplace_back(s);
        }
        const SetSystem f{m, members};
        bool brute = true;
        for (Bundle a : f) {
            for (Bundle b : f) {
                if (a != b && a.is_subset_of(b)) brute = false;
            }
        }
        CHECK(is_sperner(f) == brute);
        if (brute) CHECK(f.size() <= oracle::pascal(m, m / 2));
    }
    // A large family forces the superset-sweep path.
    std::vector<Bundle> dense;
    for (std::uint32_t s = 0; s < (1u << 12); ++s) {
        if (std::popcount(s) == 6) dense.emplace_back(s);
    }
    CHECK(is_sperner(SetSystem{12, dense}));
    dense.emplace_back(0b111111u | (1u << 11));
    CHECK_FALSE(is_sperner(SetSystem{12, dense}));
}
