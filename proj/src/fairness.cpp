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

#include "envy/fairness.hpp"

namespace envy {

bool is_ef1_bundle(const Valuation& v, Bundle own) {
    const Bundle other = own.complement(v.items());
    const Value mine = v[own];
    if (mine >= v[other]) return true;
    for (std::uint32_t rest = other.bits(); rest != 0; rest &= rest - 1) {
        const std::uint32_t item_bit = rest & (~rest + 1);
        if (mine >= v[Bundle{other.bits() ^ item_bit}]) return true;
    }
    return false;
}

bool is_efx_bundle(const Valuation& v, Bundle own) {
    const Bundle other = own.complement(v.items());
    const Value mine = v[own];
    for (std::uint32_t rest = other.bits(); rest != 0; rest &= rest - 1) {
        const std::uint32_t item_bit = rest & (~rest + 1);
        if (mine < v[Bundle{other.bits() ^ item_bit}]) return false;
    }
    return true;
}

bool is_ef1_allocation(const Instance& inst, Bundle first) {
    return is_ef1_bundle(inst.v1(), first) && is_ef1_bundle(inst.v2(), first.complement(inst.items()));
}

bool is_efx_allocation(const Instance& inst, Bundle first) {
    return is_efx_bundle(inst.v1(), first) && is_efx_bundle(inst.v2(), first.complement(inst.items()));
}

BundleClass classify_bundle(const Valuation& v, Bundle own) {
    if (!is_ef1_bundle(v, own)) return BundleClass::TooSmall;
    return is_ef1_bundle(v, own.complement(v.items())) ? BundleClass::Good : BundleClass::TooLarge;
}

std::string_view to_string(BundleClass c) {
    switch (c) {
    case BundleClass::Good: return "good";
    case BundleClass::TooSmall: return "too-small";
    case BundleClass::TooLarge: return "too-large";
    }
    return "?";
}

} // namespace envy
