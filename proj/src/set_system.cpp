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

#include "envy/set_system.hpp"

#include <string>

#include "envy/error.hpp"

namespace envy {

SetSystem::SetSystem(int m, std::vector<Bundle> members) : m_(m), members_(std::move(members)) {
    if (m < 1 || m > kMaxItems) throw InvalidInput("set system item count out of range: " + std::to_string(m));
    for (Bundle b : members_) {
        if (!b.fits(m)) {
            throw InvalidInput("bundle " + std::to_string(b.bits()) + " out of range for m = " + std::to_string(m));
        }
    }
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

} // namespace envy
