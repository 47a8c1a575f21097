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
 * @file spectra.hpp
 * @brief Orbits of maximal ideals of k[X] under an automorphism, α-special products, and a
 *        budgeted refutation of speciality for the Frobenius-on-constants automorphism.
 */

#ifndef ORE_SPECTRA_HPP
#define ORE_SPECTRA_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ore/ratx.hpp"

namespace ore {

/// α on k[X]: X ↦ qX with constants fixed, or constants c ↦ c^p with X fixed.
struct Automorphism {
    enum class Kind { q_shift, frobenius } kind = Kind::q_shift;
    /// Twist parameter for q_shift; unused for frobenius.
    Scalar q;

    static Automorphism shift(const Scalar& q) { return {Kind::q_shift, q}; }
    static Automorphism frobenius() { return {Kind::frobenius, {}}; }

    Poly apply(const Poly& p) const;
    std::string to_string() const;
};

/// Maximal ideal ⟨g⟩ of k[X] with g monic irreducible.
struct MaxIdeal {
    Poly generator;
    Automorphism alpha;

    /// ⟨X − a⟩.
    static MaxIdeal from_root(const Scalar& a, const Automorphism& alpha);
    /// Requires g monic and irreducible (decided over finite fields and for degree ≤ 3 over ℚ).
    static MaxIdeal from_generator(const Poly& g, const Automorphism& alpha);

    /// α(⟨g⟩) = ⟨α(g)⟩ with the generator made monic.
    MaxIdeal image() const;
    std::string to_string() const;
    friend bool operator==(const MaxIdeal& a, const MaxIdeal& b) { return a.generator == b.generator; }
};

struct OrbitReport {
    MaxIdeal representative;
    /// Representative first, then its successive images.
    std::vector<MaxIdeal> elements;
    bool finite = false;
    /// Orbit size when finite, otherwise the bound that was exceeded.
    std::size_t size = 0;

    /// "finite(s)" or "exceeded(b)".
    std::string status() const;
};

/// Iterates α until the representative recurs or after bound images have been taken.
OrbitReport orbit(const MaxIdeal& m, std::size_t bound);

/// a·α(a)·…·α^{n−1}(a) under the q-shift.
RatX special_product(const RatX& a, const Scalar& q, unsigned n);
Poly special_product(const Poly& a, const Scalar& q, unsigned n);

struct SpecialResult {
    bool special = false;
    /// Smallest n when special, otherwise the n_max searched.
    unsigned n = 0;
    std::string to_string() const;
};

/// Smallest n ≤ n_max with 0 ≠ special_product(a, n) ∈ X^m·R.
SpecialResult is_special_for(const RatX& a, int m, unsigned n_max, const Scalar& q);

struct FrobeniusEvidence {
    bool refuted = false;
    /// Number of distinct finite orbits of points of 𝔽_{p^m} enumerated.
    std::size_t orbits = 0;
    int degree = 0;
    /// Orbits containing no root of the candidate (each one alone already blocks speciality).
    std::size_t orbits_without_root = 0;
    /// One line per orbit: its points and whether the candidate vanishes on it.
    std::vector<std::string> orbit_lines;
    std::string summary;
};

/// Over 𝔽_{p^m} with α(c) = c^p on constants and α(x) = x: speciality would need a distinct
/// linear divisor of the candidate in every finite orbit of points, so more orbits than the
/// degree refutes it. Throws on a zero candidate and when the budget runs out first.
FrobeniusEvidence frobenius_nonspecial_witness(std::uint32_t p, unsigned m, const Poly& candidate,
                                               std::size_t orbit_budget);

}  // namespace ore

#endif  // ORE_SPECTRA_HPP
