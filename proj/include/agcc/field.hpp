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

#ifndef AGCC_FIELD_HPP
#define AGCC_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "agcc/config.hpp"
#include "agcc/errors.hpp"

namespace agcc {

/// A field element, encoded as an integer in [0, order). For a prime field
/// GF(p) the encoding is the residue itself; for an extension of degree e
/// over a base field of order b it packs the e coefficients base-b
/// little-endian (coefficient of the lowest power first).
using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Exact arithmetic in a finite field GF(p^e), constructed either directly
/// over the prime field or as an extension of another Field (subfield
/// towers). Immutable after construction; all operations are pure.
///
/// Multiplication runs through precomputed log/antilog tables, so the total
/// order is capped at 2^16 elements.
class Field {
   public:
    /// GF(p), p prime.
    static FieldPtr prime(std::uint32_t p);

    /// GF(p^e) over the prime field. The modulus, when given, is the
    /// irreducible polynomial over GF(p), coefficients low-to-high, monic of
    /// degree e. Without one, the lexicographically smallest monic
    /// irreducible of degree e is used (a fixed, deterministic choice).
    static FieldPtr make(std::uint32_t p, std::uint32_t e,
                         const std::optional<std::vector<Elem>>& modulus = std::nullopt);

    /// Degree-`degree` extension of an existing field. Modulus coefficients
    /// are elements of `base`.
    static FieldPtr extension(const FieldPtr& base, std::uint32_t degree,
                              const std::optional<std::vector<Elem>>& modulus = std::nullopt);

    std::uint64_t order() const { return order_; }
    std::uint32_t characteristic() const { return p_; }
    /// Degree over the immediate base field (e for GF(p^e) over GF(p)).
    std::uint32_t ext_degree() const { return deg_; }
    std::uint32_t degree_over_prime() const;
    /// Immediate base field; null for prime fields.
    const FieldPtr& base() const { return base_; }
    /// Modulus coefficients (over the base field), low-to-high.
    const std::vector<Elem>& modulus() const { return modulus_; }
    /// A fixed multiplicative generator (primitive element).
    Elem generator() const { return gen_; }

    bool valid(Elem a) const { return a < order_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const;
    Elem pow(Elem a, std::uint64_t e) const;

    /// Discrete log w.r.t. generator(); a must be nonzero.
    std::uint64_t log(Elem a) const;
    Elem exp(std::uint64_t e) const { return exp_[e % (order_ - 1)]; }

    /// Coefficient digits of a over the base field, length ext_degree().
    std::vector<Elem> digits(Elem a) const;
    Elem from_digits(const std::vector<Elem>& d) const;
    /// Embeds a base-field element as the constant digit.
    Elem from_base(Elem a) const;
    /// True iff a lies in the image of from_base.
    bool is_base_element(Elem a) const;

    /// Structural equality: same characteristic, tower shape and moduli.
    bool same(const Field& other) const;
    bool same(const FieldPtr& other) const { return other && same(*other); }

    /// Throws validation_error unless a is a valid encoding.
    void check(Elem a) const;

   private:
    Field() = default;

    FieldPtr base_;  // null for prime fields
    std::uint32_t p_ = 0;
    std::uint32_t deg_ = 1;
    std::uint64_t order_ = 0;
    std::uint64_t base_order_ = 0;
    std::vector<Elem> modulus_;
    std::vector<Elem> exp_;
    std::vector<std::uint32_t> log_;
    Elem gen_ = 0;

    Elem raw_mul(Elem a, Elem b) const;  // table-free multiply, used to build tables
    void build_tables();
};

/// A basis of GF(q^m) over GF(q) together with the coordinate maps. The big
/// field is represented as a degree-m extension of the small field, so the
/// polynomial basis is the canonical default.
class SubfieldEmbedding {
   public:
    /// Builds GF(q^m) on top of `small` with the default modulus and the
    /// polynomial basis, or a user basis (big-field elements, checked for
    /// GF(q)-linear independence).
    static SubfieldEmbedding create(const FieldPtr& small, std::uint32_t m,
                                    const std::optional<std::vector<Elem>>& basis = std::nullopt);

    /// Same, but over an already-constructed extension field.
    static SubfieldEmbedding over(const FieldPtr& big,
                                  const std::optional<std::vector<Elem>>& basis = std::nullopt);

    const FieldPtr& small() const { return small_; }
    const FieldPtr& big() const { return big_; }
    std::uint32_t m() const { return m_; }
    const std::vector<Elem>& basis() const { return basis_; }

    /// Coordinates (c_1..c_m) over GF(q) with x = sum c_i * b_i.
    std::vector<Elem> expand(Elem x) const;
    /// Inverse of expand.
    Elem recombine(const std::vector<Elem>& coords) const;

   private:
    FieldPtr small_;
    FieldPtr big_;
    std::uint32_t m_ = 0;
    std::vector<Elem> basis_;
    // inverse of the m x m matrix whose columns are the digit vectors of the
    // basis elements; row-major over small_
    std::vector<Elem> coord_map_;
};

}  // namespace agcc

#endif
