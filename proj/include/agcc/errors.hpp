/*
   Copyright 2026 the agcc authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef AGCC_ERRORS_HPP
#define AGCC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace agcc {

/// Invalid input: bad preconditions, malformed data, mixed fields. CLI exit 2.
class validation_error : public std::runtime_error {
   public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration guard was hit. Distinct from validation so harnesses can
/// widen guards and retry. CLI exit 3.
class guard_exceeded : public std::runtime_error {
   public:
    explicit guard_exceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace agcc

#endif
