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

#ifndef ENVY_FAIRNESS_HPP
#define ENVY_FAIRNESS_HPP

#include <string_view>

#include "envy/bundle.hpp"
#include "envy/valuation.hpp"

namespace envy {

// All predicates take S as the evaluating agent's own bundle; the other
// agent holds M \ S. Comparisons are weak (>=), so ties never count as envy.
// Bundles are not range-checked here; callers pass S < 2^m.

/// u(S) >= u(M \ S), or u(S) >= u(M \ (S + j)) for some j outside S.
bool is_ef1_bundle(const Valuation& v, Bundle own);

/// u(S) >= u(M \ (S + j)) for every j outside S. True when S = M.
bool is_efx_bundle(const Valuation& v, Bundle own);

/// Agent 1 receives `first`, agent 2 the complement.
bool is_ef1_allocation(const Instance& inst, Bundle first);
bool is_efx_allocation(const Instance& inst, Bundle first);

enum class BundleClass {
    Good,      // S and M \ S both EF1
    TooSmall,  // S not EF1; its complement then is
    TooLarge,  // S EF1, M \ S not
};

BundleClass classify_bundle(const Valuation& v, Bundle own);

std::string_view to_string(BundleClass c);

} // namespace envy

#endif
