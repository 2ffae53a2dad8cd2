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

#ifndef AGCC_LINEAR_CODE_HPP
#define AGCC_LINEAR_CODE_HPP

#include <optional>
#include <string>

#include "agcc/config.hpp"
#include "agcc/matrix.hpp"

namespace agcc {

/// Minimum-distance knowledge carried with a code: an interval [lo, hi],
/// collapsed to lo == hi once an exact value is established.
struct DistInterval {
    std::size_t lo = 1;
    std::size_t hi = 0;
    bool exact() const { return lo == hi; }
};

/// A linear [n, k] block code given by a generator matrix, stored in reduced
/// row echelon form (the canonical row order every construction relies on).
/// The parity check matrix is the RREF of a null space basis. Values are
/// immutable apart from the cached exact distance.
class LinearCode {
   public:
    /// Canonicalizes M (RREF), computes k = rank and the parity check.
    /// Rejects the zero matrix; use LinearCode::zero for the zero code.
    static LinearCode from_generator(const MatrixGF& m);
    /// Explicit zero-code sentinel (k = 0); most operations reject it.
    static LinearCode zero(const FieldPtr& f, std::size_t n);

    const FieldPtr& field() const { return f_; }
    std::size_t length() const { return n_; }
    std::size_t dim() const { return k_; }
    bool is_zero_code() const { return k_ == 0; }
    bool is_full_code() const { return k_ == n_; }
    const MatrixGF& generator() const { return gen_; }
    const MatrixGF& parity_check() const { return par_; }

    LinearCode dual() const;
    /// Exact minimum distance by enumerating all q^k - 1 nonzero messages.
    std::size_t min_distance(const Guards& g = Guards()) const;
    const DistInterval& distance_interval() const { return dist_; }
    /// Narrows the carried distance claim (intersection with the current one).
    void claim_distance(std::size_t lo, std::size_t hi);

    bool is_self_orthogonal() const;
    bool is_self_dual() const;
    /// True iff the right cyclic shift of every generator row stays in the
    /// code. Certifies a transitive (cyclic) automorphism subgroup.
    bool is_cyclic() const;

    std::vector<Elem> encode(const std::vector<Elem>& msg) const;
    bool contains(const std::vector<Elem>& v) const;

    /// Set-level equality: same length and row space.
    bool same_code(const LinearCode& o) const;

   private:
    LinearCode(FieldPtr f, std::size_t n, MatrixGF gen, MatrixGF par);
    FieldPtr f_;
    std::size_t n_ = 0, k_ = 0;
    MatrixGF gen_;
    MatrixGF par_;
    mutable DistInterval dist_{1, 0};
};

}  // namespace agcc

#endif
