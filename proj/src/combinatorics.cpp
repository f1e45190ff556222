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

#include "envy/combinatorics.hpp"

#include <algorithm>

#include "envy/error.hpp"

namespace envy {

namespace {

void require_same_ground(const SetSystem& a, const SetSystem& b) {
    if (a.items() != b.items()) {
        throw InvalidInput("set systems live on different ground sets: m = " + std::to_string(a.items()) +
                           " vs " + std::to_string(b.items()));
    }
}

void require_level(int k) {
    if (k < 1) throw InvalidInput("cascade level must be positive, got " + std::to_string(k));
}

// Next integer with the same popcount (Gosper's hack).
std::uint32_t next_same_popcount(std::uint32_t x) {
    const std::uint32_t low = x & (~x + 1);
    const std::uint32_t ripple = x + low;
    return ripple | (((x ^ ripple) >> 2) / low);
}

int distance_bruteforce(const SetSystem& a, const SetSystem& b) {
    int best = kInfiniteDistance;
    for (Bundle x : a) {
        for (Bundle y : b) best = std::min(best, hamming_distance(x, y));
    }
    return best;
}

// Multi-source BFS on the hypercube from every member of `a`.
int distance_bfs(const SetSystem& a, const SetSystem& b) {
    const int m = a.items();
    constexpr std::uint8_t kUnseen = 0xff;
    std::vector<std::uint8_t> dist(std::size_t{1} << m, kUnseen);
    std::vector<std::uint32_t> frontier;
    for (Bundle x : a) {
        dist[x.bits()] = 0;
        frontier.push_back(x.bits());
    }
    std::vector<std::uint32_t> next;
    for (std::uint8_t d = 1; !frontier.empty(); ++d) {
        next.clear();
        for (std::uint32_t x : frontier) {
            for (int i = 0; i < m; ++i) {
                const std::uint32_t y = x ^ (1u << i);
                if (dist[y] == kUnseen) {
                    dist[y] = d;
                    next.push_back(y);
                }
            }
        }
        frontier.swap(next);
    }
    int best = kInfiniteDistance;
    for (Bundle y : b) best = std::min<int>(best, dist[y.bits()]);
    return best;
}

} // namespace

BigInt binom(const BigInt& n, std::uint64_t k) {
    if (n < 0) throw InvalidInput("binom: n must be nonnegative");
    if (BigInt{k} > n) return 0;
    const BigInt rest = n - k;
    if (rest < k) k = static_cast<std::uint64_t>(rest);
    BigInt out = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        out *= n - i;
        out /= i + 1;
    }
    return out;
}

int system_distance(const SetSystem& a, const SetSystem& b) {
    require_same_ground(a, b);
    if (a.empty() || b.empty()) return kInfiniteDistance;
    const std::uint64_t pairs = std::uint64_t{a.size()} * b.size();
    const std::uint64_t sweep = (std::uint64_t{1} << a.items()) * static_cast<std::uint64_t>(a.items());
    return pairs <= sweep ? distance_bruteforce(a, b) : distance_bfs(a, b);
}

SetSystem the_hamming_ball(Bundle center, int radius, int m) {
    if (radius < 0 || radius > m) {
        throw InvalidInput("radius must be in [0, m], got " + std::to_string(radius));
    }
    if (!center.fits(m)) throw InvalidInput("ball center out of range");
    std::vector<Bundle> members;
    const std::uint32_t n = std::uint32_t{1} << m;
    for (std::uint32_t s = 0; s < n; ++s) {
        if (std::popcount(s ^ center.bits()) <= radius) members.emplace_back(s);
    }
    return SetSystem{m, std::move(members)};
}

SetSystem a_hamming_ball(Bundle center, std::uint64_t size, int m) {
    if (m < 1 || m > kMaxItems) throw InvalidInput("item count out of range");
    if (!center.fits(m)) throw InvalidInput("ball center out of range");
    const std::uint64_t total = std::uint64_t{1} << m;
    if (size < 1 || size > total) {
        throw InvalidInput("ball size must be in [1, 2^m], got " + std::to_string(size));
    }
    std::vector<Bundle> members;
    members.reserve(size);
    // Shells in order of distance; within a shell, same-popcount masks in
    // increasing numeric order are exactly colex order.
    for (int r = 0; r <= m && members.size() < size; ++r) {
        if (r == 0) {
            members.push_back(center);
            continue;
        }
        std::uint32_t diff = (std::uint32_t{1} << r) - 1;
        const std::uint64_t limit = total;
        while (diff < limit && members.size() < size) {
            members.push_back(Bundle{center.bits() ^ diff});
            if (r == m) break;
            diff = next_same_popcount(diff);
        }
    }
    return SetSystem{m, std::move(members)};
}

HarperReport verify_harper(const SetSystem& a, const SetSystem& b) {
    require_same_ground(a, b);
    if (a.empty() || b.empty()) throw InvalidInput("verify_harper needs two nonempty set systems");
    const int m = a.items();
    const SetSystem a0 = a_hamming_ball(Bundle::full(m), a.size(), m);
    const SetSystem b0 = a_hamming_ball(Bundle::empty(), b.size(), m);
    HarperReport report;
    report.original_distance = system_distance(a, b);
    report.ball_distance = system_distance(a0, b0);
    report.ok = report.ball_distance >= report.original_distance;
    return report;
}

BigInt Cascade::sum() const {
    BigInt total = 0;
    for (const auto& t : terms) total += binom(t.top, static_cast<std::uint64_t>(t.level));
    return total;
}

std::string Cascade::to_string() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& t : terms) {
        if (!out.empty()) out += '+';
        out += "C(" + t.top.str() + "," + std::to_string(t.level) + ")";
    }
    return out;
}

Cascade cascade_decompose(const BigInt& n, int k) {
    require_level(k);
    if (n < 0) throw InvalidInput("cascade_decompose: n must be nonnegative");
    Cascade out{k, {}};
    BigInt rest = n;
    for (int level = k; level >= 1 && rest > 0; --level) {
        // Largest a with C(a, level) <= rest. C(level, level) = 1 <= rest.
        const auto lvl = static_cast<std::uint64_t>(level);
        BigInt lo = level;
        BigInt step = 1;
        while (binom(lo + step, lvl) <= rest) {
            lo += step;
            step *= 2;
        }
        BigInt hi = lo + step;  // C(hi, level) > rest
        while (hi - lo > 1) {
            BigInt mid = (lo + hi) / 2;
            if (binom(mid, lvl) <= rest) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        rest -= binom(lo, lvl);
        out.terms.push_back({lo, level});
    }
    if (rest != 0) throw InternalInvariant("cascade did not exhaust its input");
    return out;
}

BigInt shadow(const BigInt& n, int k) {
    const Cascade c = cascade_decompose(n, k);
    BigInt total = 0;
    for (const auto& t : c.terms) total += binom(t.top, static_cast<std::uint64_t>(t.level - 1));
    return total;
}

bool shadow_is_monotone(int k, std::uint64_t n_max) {
    require_level(k);
    BigInt prev = shadow(0, k);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        BigInt cur = shadow(n, k);
        if (cur < prev) return false;
        prev = std::move(cur);
    }
    return true;
}

bool bjorner_feasible(const SpernerProfile& profile) {
    const int n = profile.n;
    if (n < 1 || static_cast<int>(profile.counts.size()) != n) {
        throw InvalidInput("profile must list exactly n counts");
    }
    const auto& c = profile.counts;
    const auto lowest = std::find_if(c.begin(), c.end(), [](std::uint64_t x) { return x != 0; });
    if (lowest == c.end()) throw InvalidInput("profile has no nonzero count");
    const int j = static_cast<int>(lowest - c.begin());

    BigInt acc = c[n - 1];
    for (int i = n - 2; i >= j; --i) {
        acc = shadow(acc, i + 2) + c[i];
    }
    return acc <= binom(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(j + 1));
}

bool is_sperner(const SetSystem& family) {
    const auto& members = family.members();
    const int m = family.items();
    const std::uint64_t pairs = std::uint64_t{members.size()} * members.size();
    const std::uint64_t sweep = (std::uint64_t{1} << m) * static_cast<std::uint64_t>(m);
    if (pairs <= sweep) {
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = 0; j < members.size(); ++j) {
                if (i != j && members[i].is_subset_of(members[j])) return false;
            }
        }
        return true;
    }
    // above[S] = some member contains S.
    std::vector<std::uint8_t> above(std::size_t{1} << m, 0);
    for (Bundle b : members) above[b.bits()] = 1;
    for (int i = 0; i < m; ++i) {
        for (std::uint32_t s = 0; s < above.size(); ++s) {
            if (!(s & (1u << i))) above[s] |= above[s | (1u << i)];
        }
    }
    for (Bundle b : members) {
        const Bundle missing = b.complement(m);
        bool strict = false;
        for_each_item(missing, [&](int i) { strict = strict || above[b.with(i).bits()]; });
        if (strict) return false;
    }
    return true;
}

} // namespace envy
