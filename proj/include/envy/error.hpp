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

#ifndef ENVY_ERROR_HPP
#define ENVY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace envy {

// Bundle index outside [0, 2^m).
class InvalidBundle : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Malformed arguments, tables or instance files.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A guarantee that should hold for every monotone valuation did not.
// Seeing one of these means a bug in table construction or in this library.
class InternalInvariant : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace envy

#endif
