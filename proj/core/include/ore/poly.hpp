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

#ifndef ORE_POLY_HPP
#define ORE_POLY_HPP

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ore/scalar.hpp"

namespace ore {

/// Dense univariate polynomial over a Field, lowest degree first, no trailing zeros.
///
/// Used for polynomials in X (PolyX), for the q-polynomials inside k(q), and for
/// polynomials in θ with constant coefficients.
class Poly {
   public:
    explicit Poly(const Field& f) : field_(&f) {}
    Poly(const Field& f, std::vector<Scalar> coeffs);
    static Poly constant(const Scalar& c);
    static Poly monomial(const Scalar& c, std::size_t degree);
    /// The variable itself.
    static Poly variable(const Field& f);
    /// Π (X − r) over the given roots.
    static Poly from_roots(const Field& f, std::span<const Scalar> roots);

    const Field& field() const noexcept { return *field_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// −1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    std::span<const Scalar> coefficients() const noexcept { return c_; }
    /// Coefficient of X^i, zero beyond the degree.
    Scalar coeff(std::size_t i) const;
    const Scalar& lead() const;
    /// Lowest exponent with a nonzero coefficient; throws on zero.
    int valuation() const;
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_monic() const;

    Scalar eval(const Scalar& x) const;
    /// p(c·X).
    Poly scale_variable(const Scalar& c) const;
    Poly monic() const;
    /// Divides by X^k; the low coefficients must vanish.
    Poly shift_down(std::size_t k) const;
    Poly shift_up(std::size_t k) const;
    /// Truncation modulo X^n.
    Poly truncate(std::size_t n) const;
    /// Applies f to every coefficient (result over `target`).
    template <class F>
    Poly map(const Field& target, F&& f) const {
        std::vector<Scalar> out;
        out.reserve(c_.size());
        for (const auto& c : c_) out.push_back(f(c));
        return Poly(target, std::move(out));
    }

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Scalar& s, const Poly& a);
    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    friend bool operator==(const Poly& a, const Poly& b);
    /// Canonical order: by degree, then coefficients from the top.
    friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

    /// Sum of terms in ascending degree, e.g. `1 - q*X + X^2`; parseable by the expression grammar.
    std::string to_string(std::string_view var = "X") const;

   private:
    void trim();

    const Field* field_;
    std::vector<Scalar> c_;
};

struct PolyDivMod {
    Poly quot;
    Poly rem;
};

PolyDivMod divmod(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly pow(const Poly& a, unsigned e);
/// a^e mod m.
Poly powmod(const Poly& a, std::uint64_t e, const Poly& m);
bool divides(const Poly& d, const Poly& a);

/// Irreducibility over a finite field (Ben-Or); over ℚ decided for degree ≤ 3 only.
bool is_irreducible(const Poly& f);

/// Roots of f lying in the working field, with multiplicity and in canonical order, plus the
/// cofactor that has no roots in the field.
struct RootSplit {
    std::vector<Scalar> roots;
    Poly remainder;
};

/// Exhaustive evaluation over finite fields, rational-root search over ℚ.
/// Fields of rational functions are not supported.
RootSplit roots_in_field(const Poly& f);

}  // namespace ore

#endif  // ORE_POLY_HPP
