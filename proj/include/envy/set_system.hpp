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

#ifndef ENVY_SET_SYSTEM_HPP
#define ENVY_SET_SYSTEM_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

#include "envy/bundle.hpp"

namespace envy {

/// A family of bundles over a ground set of m items, kept sorted by bits
/// and free of duplicates.
class SetSystem {
public:
    explicit SetSystem(int m) : SetSystem(m, {}) {}
    /// Sorts and deduplicates. Throws InvalidInput if a member has bits >= 2^m.
    SetSystem(int m, std::vector<Bundle> members);

    int items() const { return m_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const std::vector<Bundle>& members() const { return members_; }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    bool contains(Bundle b) const { return std::binary_search(members_.begin(), members_.end(), b); }

    friend bool operator==(const SetSystem&, const SetSystem&) = default;

private:
    int m_;
    std::vector<Bundle> members_;
};

} // namespace envy

#endif
