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

#ifndef AGCC_CONV_HPP
#define AGCC_CONV_HPP

#include <optional>

#include "agcc/linear_code.hpp"
#include "agcc/poly_matrix.hpp"

namespace agcc {

/// s = (n-k)(floor(gamma/k)+1) + gamma + 1 (the degree-aware Singleton
/// bound) and r = max(n, s).
struct SingletonData {
    std::size_t s = 0;
    std::size_t r = 0;
};
SingletonData generalized_singleton(std::size_t n, std::size_t k, std::size_t gamma);

/// A convolutional code with a certified reduced basic generator matrix and
/// parameters (n, k, gamma; m, d_f).
class ConvCode {
   public:
    /// Certifies the generator (basic + reduced) and derives the parameters.
    /// Certification failure is a validation error for free-form input;
    /// constructions backed by a guarantee re-verify and treat failure as an
    /// internal fault at the call site.
    static ConvCode from_generator(PolyMatrix g,
                                   std::optional<std::size_t> df_lower = std::nullopt,
                                   const Guards& guards = Guards());

    const PolyMatrix& generator() const { return gen_; }
    std::size_t length() const { return n_; }
    std::size_t dim() const { return k_; }
    std::size_t degree() const { return gamma_; }
    std::size_t memory() const { return m_; }
    const SingletonData& singleton() const { return sing_; }
    /// Construction-backed lower bound on the free distance, when known.
    std::optional<std::size_t> df_lower() const { return df_lb_; }
    std::optional<std::size_t> df_exact() const { return df_; }
    void set_df_exact(std::size_t d) { df_ = d; }

   private:
    ConvCode(PolyMatrix g, std::optional<std::size_t> lb);
    PolyMatrix gen_;
    std::size_t n_, k_, gamma_, m_;
    SingletonData sing_;
    std::optional<std::size_t> df_lb_;
    std::optional<std::size_t> df_;
};

/// Splits a full-row-rank matrix H into row blocks of the given sizes
/// (part 0 first) and zero-pads parts 1..m at the bottom to kappa =
/// rows(part 0) rows. Part 0 must have full rank kappa and every later part
/// rank at most kappa.
std::vector<MatrixGF> parity_split(const MatrixGF& h, const std::vector<std::size_t>& row_counts);

/// G(D) = H~_0 + H~_1 D + ... + H~_m D^m from padded split parts. The result
/// is re-certified reduced and basic; failure is an internal fault since the
/// split hypotheses guarantee it.
PolyMatrix generator_from_split(const std::vector<MatrixGF>& parts);

/// Unit-memory construction from a block code: the first k - gamma0 rows of
/// the canonical generator form A_0 and the last gamma0 rows (padded with
/// k - 2*gamma0 zero rows) form A_1. Parameters (n, k-gamma0, gamma0; 1, d_f)
/// with d_f >= min_distance(C). Requires k >= 2*gamma0.
ConvCode unit_memory_from_block(const LinearCode& c, std::size_t gamma0,
                                const Guards& g = Guards());

struct FreeDistResult {
    std::size_t distance = 0;
    /// Input blocks of a minimum-weight witness; a valid horizon for
    /// free_distance_truncated to reproduce the distance.
    std::size_t witness_blocks = 0;
};

/// Exact free distance for memory <= 1 via a coset-leader-weighted state
/// graph: d_f = min(d_zero, d_loop) where d_zero covers memoryless inputs and
/// d_loop is the lightest diverge/remerge path.
FreeDistResult free_distance(const ConvCode& v, const Guards& g = Guards());

/// Independent oracle: minimum output weight over all input sequences of at
/// most L blocks with a nonzero first block, by direct enumeration
/// (branch-and-bound pruned, exact).
std::size_t free_distance_truncated(const ConvCode& v, std::size_t horizon,
                                    const Guards& g = Guards());

}  // namespace agcc

#endif
