/*
   Copyright 2026 The ore-diamond Authors

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

/**
 * @file scalar.hpp
 * @brief Exact scalar fields: ℚ, finite fields 𝔽_{p^m}, and rational functions k(q) over either.
 *
 * Fields are interned: every call to Field::finite(13) returns the same object, and a Field
 * lives for the whole program. Scalars therefore carry a plain `const Field*` and compare
 * fields by address.
 *
 * Finite fields are represented by integer codes. For m = 1 the code is the residue in
 * [0, p). For m > 1 the code is the base-p digit vector of the element in the basis
 * 1, w, w², … where w is a root of a fixed primitive modulus, and multiplication runs
 * through exp/log tables.
 *
 * Rational functions in q are stored as coprime pairs of polynomials over the base field
 * with a monic denominator.
 */

#ifndef ORE_SCALAR_HPP
#define ORE_SCALAR_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ore {

class Scalar;
struct QFrac;

enum class FieldKind { rationals, finite, rational_functions };

class Field {
   public:
    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    static const Field& rationals();
    /// 𝔽_{p^m}. Requires p prime; for m > 1 the field size is capped at 2^20.
    static const Field& finite(std::uint32_t p, unsigned m = 1);
    /// k(q) over a base field that is ℚ or finite.
    static const Field& rational_functions(const Field& base);

    FieldKind kind() const noexcept { return kind_; }
    bool is_finite() const noexcept { return kind_ == FieldKind::finite; }
    std::uint32_t characteristic() const noexcept { return p_; }
    unsigned extension_degree() const noexcept { return m_; }
    /// Number of elements for finite fields, 0 otherwise.
    std::uint64_t size() const noexcept { return size_; }
    const Field* base() const noexcept { return base_; }
    std::string name() const;

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long v) const;
    Scalar from_rational(const mpq_class& v) const;
    /// The element with the given code (finite fields only).
    Scalar element(std::uint32_t code) const;
    /// All elements in code order (finite fields only).
    std::vector<Scalar> elements() const;
    /// Primitive element w of 𝔽_{p^m} (m > 1), or the indeterminate q of k(q).
    Scalar generator() const;
    /// Monic modulus of 𝔽_{p^m} over 𝔽_p, lowest degree first (m > 1 only).
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    // Raw code arithmetic for finite fields.
    std::uint32_t add_code(std::uint32_t a, std::uint32_t b) const noexcept;
    std::uint32_t neg_code(std::uint32_t a) const noexcept;
    std::uint32_t mul_code(std::uint32_t a, std::uint32_t b) const noexcept;
    std::uint32_t inv_code(std::uint32_t a) const;
    /// Base-p digits of a code, lowest first, length m.
    std::vector<std::uint32_t> digits(std::uint32_t code) const;

   private:
    Field() = default;
    friend struct FieldRegistry;

    void build_extension_tables();

    FieldKind kind_ = FieldKind::rationals;
    std::uint32_t p_ = 0;
    unsigned m_ = 1;
    std::uint64_t size_ = 0;
    const Field* base_ = nullptr;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
};

/// Immutable element of an interned Field.
class Scalar {
   public:
    using Value = std::variant<std::uint32_t, mpq_class, std::shared_ptr<const QFrac>>;

    Scalar() = default;
    Scalar(const Field& f, Value v) : field_(&f), value_(std::move(v)) {}

    const Field& field() const;
    bool valid() const noexcept { return field_ != nullptr; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar inverse() const;
    /// Integer power; negative exponents require a nonzero base.
    Scalar pow(long long e) const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    /// Canonical total order; used for deterministic enumeration, not field structure.
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

    // Representation access.
    std::uint32_t code() const;
    const mpq_class& rational() const;
    const QFrac& qfrac() const;

    /// Standalone form: `p/q` (ℚ), `r mod p` (𝔽_p), `(w^2+1) mod 2^4`, or `num/den` in q.
    std::string to_string() const;
    /// Form used inside polynomial expressions; no field suffix, parseable by the expression grammar.
    std::string expr_string() const;
    /// True when expr_string() is a single atom that needs no parentheses as a factor.
    bool is_atomic_expr() const;

   private:
    const Field* field_ = nullptr;
    Value value_;
};

/// Maps s into `target`: ℚ → 𝔽_p (fails if p divides the denominator), k(q) → k'(q) coefficient-wise,
/// identity when the fields agree.
Scalar reduce(const Scalar& s, const Field& target);

/// Substitutes a value for q in an element of k(q). The value must live in the base field
/// (or a field the base reduces into) and must not be a pole.
Scalar specialize(const Scalar& s, const Scalar& q_value);

bool is_prime(std::uint64_t n);

// ---------------------------------------------------------------------------------------------

enum class QMode { symbolic, explicit_value };

/// The working scalar field together with the twist parameter q of α(X) = qX.
struct FieldConfig {
    const Field* field = nullptr;
    Scalar q;
    QMode q_mode = QMode::explicit_value;

    static FieldConfig rationals(const mpq_class& q);
    static FieldConfig prime(std::uint32_t p, long q);
    /// 𝔽_{p^m} with an explicit q; pass an invalid Scalar to use the primitive element w.
    static FieldConfig finite(std::uint32_t p, unsigned m, Scalar q = {});
    /// q an indeterminate over ℚ (characteristic 0) or 𝔽_p.
    static FieldConfig symbolic(std::uint32_t characteristic);

    std::uint32_t characteristic() const { return field->characteristic(); }
    std::string describe() const;
};

struct QOrder {
    enum class Kind { finite, infinite, symbolic } kind = Kind::symbolic;
    std::uint64_t order = 0;

    std::string to_string() const;
};

QOrder q_order(const FieldConfig& cfg);

/// Multiplicative order of a nonzero element of a finite field.
std::uint64_t multiplicative_order(const Scalar& s);

}  // namespace ore

#endif  // ORE_SCALAR_HPP
