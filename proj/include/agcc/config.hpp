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

#ifndef AGCC_CONFIG_HPP
#define AGCC_CONFIG_HPP

#include <cstdint>

namespace agcc {

/// Enumeration guards. All exhaustive searches in the library are bounded by
/// one of these; exceeding a guard raises guard_exceeded instead of silently
/// approximating.
struct Guards {
    std::uint64_t max_codewords = std::uint64_t(1) << 24;   ///< message enumeration in min_distance
    std::uint64_t max_states = std::uint64_t(1) << 12;      ///< trellis states in free_distance
    std::uint64_t max_cosets = std::uint64_t(1) << 20;      ///< free-input enumeration per trellis edge
    std::uint64_t max_trunc_space = std::uint64_t(1) << 26; ///< input sequences in free_distance_truncated
    std::uint64_t max_minor_count = 100000;                 ///< C(n, kappa) limit for the minor-gcd route
    std::uint64_t max_field_order = std::uint64_t(1) << 16; ///< largest constructible field

    /// Reads AGCC_MAX_CODEWORDS, AGCC_MAX_STATES, AGCC_MAX_COSETS,
    /// AGCC_MAX_TRUNC, AGCC_MAX_MINORS from the environment on top of the
    /// defaults.
    static Guards from_env();
};

}  // namespace agcc

#endif
