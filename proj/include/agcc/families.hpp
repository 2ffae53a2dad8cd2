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

#ifndef AGCC_FAMILIES_HPP
#define AGCC_FAMILIES_HPP

#include <string>
#include <utility>

#include "agcc/combinators.hpp"
#include "agcc/conv.hpp"

namespace agcc {

/// Exact nonnegative rational, kept reduced. Report ratios are stored this
/// way; decimals appear only at the presentation layer.
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;
    static Rational make(std::uint64_t n, std::uint64_t d);
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator<(const Rational& o) const { return num * o.den < o.num * den; }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

enum class FamilyKind { cyclic_catalog, bch, reed_solomon, reed_muller, user_files };
FamilyKind family_kind_from_string(const std::string& s);
std::string to_string(FamilyKind k);

/// One step of a transform chain. Binary combinators (sum, uv, product) pair
/// the code with itself.
struct ChainStep {
    std::string kind;  // expand|extend|puncture|sum|uv|product|dual
    std::optional<std::size_t> coord;       // puncture (1-based)
    std::optional<std::uint32_t> expand_m;  // expected extension degree, checked
};

struct FamilySpec {
    FamilyKind kind = FamilyKind::user_files;
    std::uint32_t p = 2, e = 1;  // field of the generated codes
    /// Inclusive index range; the index meaning depends on the kind:
    /// bch = block length, reed_solomon = dimension, reed_muller = number of
    /// variables m, cyclic_catalog = Hamming parameter m (length 2^m - 1).
    std::size_t index_lo = 0, index_hi = 0;
    std::size_t bch_delta = 3;  // BCH design distance
    std::size_t rs_length = 0;  // Reed-Solomon length (must divide q-1; 0 = q-1)
    std::uint32_t rm_order = 1; // Reed-Muller order r
    std::size_t gamma0 = 1;
    std::vector<ChainStep> chain;
    std::vector<LinearCode> user_codes;
    std::vector<std::string> user_names;  // optional, parallel to user_codes
};

/// A generated code with certified labels. Labels are only ever set by the
/// corresponding certification; false means "not certified", not "disproved".
struct FamilyEntry {
    std::string name;
    LinearCode code;
    bool transitive_certified = false;
    bool self_orthogonal = false;
    bool self_dual = false;
};

/// Deterministic code sequence for the spec. Distances are computed exactly
/// where the guard allows and otherwise carried as design-distance intervals.
std::vector<FamilyEntry> family_generate(const FamilySpec& spec, const Guards& g = Guards());

struct PipelineRow {
    std::size_t index;  // position in the generated sequence
    std::string name;
    LinearCode block;  // block code after the transform chain
    std::vector<TransformRecord> records;
    ConvCode conv;
    bool transitive_certified = false;
    bool self_orthogonal = false;
    bool self_dual = false;
};

struct PipelineOutcome {
    std::vector<PipelineRow> rows;
    /// (index, reason) for every entry whose preconditions failed.
    std::vector<std::pair<std::size_t, std::string>> skipped;
};

/// Applies the transform chain and the unit-memory construction to each
/// entry. Entries violating a precondition (k < 2*gamma0, puncturing a
/// distance-1 code, an expand step on a non-tower field) are skipped with a
/// recorded reason rather than failing the whole run.
PipelineOutcome apply_pipeline(const std::vector<FamilyEntry>& entries, const FamilySpec& spec,
                               const Guards& g = Guards());

struct ReportRow {
    std::size_t j = 0;
    std::size_t n = 0, k = 0, gamma = 0, memory = 0;  // convolutional parameters
    std::size_t d_block_lo = 0, d_block_hi = 0;
    std::size_t d_dual = 0;  // exact distance of the split row space; 0 = not computed
    std::size_t df_lb = 0;   // 0 = none
    std::optional<std::size_t> df_exact;
    std::size_t s = 0, r = 0;
    Rational rate;   // k/n
    Rational ratio;  // d_f / r, or df_lb / r when only the bound is known
    bool ratio_is_lower_bound = false;
    std::string labels;  // certified labels joined with '|', "-" when none
};

struct FamilyReport {
    std::vector<ReportRow> rows;
    std::vector<std::pair<std::size_t, std::string>> skipped;
};

/// Builds the metric table. Exact free distances are filled where the guards
/// allow; otherwise the ratio column carries the lower bound and is flagged.
FamilyReport family_report(const PipelineOutcome& out, const Guards& g = Guards());

/// Finite-prefix goodness diagnostic. This never claims a limit: it reports
/// row-wise minima of the rate and distance ratio against the given floors.
struct TrendDiagnostic {
    bool rate_pass = false;
    bool ratio_pass = false;
    bool pass = false;
    Rational min_rate;
    Rational min_ratio;
    bool ratio_includes_lower_bounds = false;
    std::string note;  // always "finite-prefix evidence, not a limit statement"
};
TrendDiagnostic goodness_trend(const FamilyReport& report, double rate_floor, double ratio_floor);

/// Minimal polynomial of beta over the base field of ext (Frobenius orbit
/// product); every coefficient lands in the base field by construction.
Poly minimal_polynomial(const FieldPtr& ext, Elem beta);

}  // namespace agcc

#endif
