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

#ifndef AGCC_COMBINATORS_HPP
#define AGCC_COMBINATORS_HPP

#include <optional>
#include <string>

#include "agcc/linear_code.hpp"

namespace agcc {

/// Provenance of a code transformation: which operation with which
/// parameters, and the parameter/distance claims it carries.
struct TransformRecord {
    std::string kind;                 // expand|extend|puncture|direct_sum|u_u_plus_v|product|dual
    std::size_t n_out = 0, k_out = 0;
    std::size_t d_lo = 0, d_hi = 0;   // claimed distance interval
    std::optional<std::size_t> coord; // puncture coordinate (1-based)
    std::optional<std::uint32_t> expand_m;
};

/// Coordinate-wise basis expansion of a code over GF(q^m) into a code over
/// GF(q). Parameters [mn, mk], distance at least the input distance.
LinearCode expand_code(const LinearCode& c, const SubfieldEmbedding& emb,
                       TransformRecord* rec = nullptr);

/// Appends the overall parity coordinate c_{n+1} = -sum c_i. Parameters
/// [n+1, k], distance d or d+1.
LinearCode extend_code(const LinearCode& c, TransformRecord* rec = nullptr);

/// Deletes coordinate i (1-based; default the last). Parameters [n-1, k],
/// distance d-1 or d. Rejects inputs whose dimension would drop.
LinearCode puncture_code(const LinearCode& c, std::optional<std::size_t> coord = std::nullopt,
                         TransformRecord* rec = nullptr);

/// Block-diagonal sum, [n1+n2, k1+k2, min(d1, d2)].
LinearCode direct_sum(const LinearCode& a, const LinearCode& b, TransformRecord* rec = nullptr);

/// (u, u+v) construction for equal lengths, [2n, k1+k2, min(2 d1, d2)].
LinearCode u_u_plus_v(const LinearCode& a, const LinearCode& b, TransformRecord* rec = nullptr);

/// Kronecker product code, [n1 n2, k1 k2, d1 d2] (exact distance claim).
LinearCode product_code(const LinearCode& a, const LinearCode& b, TransformRecord* rec = nullptr);

}  // namespace agcc

#endif
