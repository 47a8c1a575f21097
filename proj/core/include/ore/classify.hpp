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
 * @file classify.hpp
 * @brief Splitting z ∈ S as z = f + X·s and sorting it into the normalized shapes A, B, C.
 *
 * The tags describe the *shape* of the unit-normalized element, not irreducibility:
 *
 *   A     z_norm ∈ {X, θ}
 *   B     z_norm = 1 + X·s with s ∈ S ∖ R
 *   C     z_norm = f + X·s with f ∈ k[θ] monic nonconstant, z_norm ≠ θ
 *   Unit  z is invertible in S
 *   Unnormalized  z = X·s with s not a unit (a shape outside the list)
 *
 * The normalizing unit is the coefficient of z at θ^{deg f} (θ⁰ for shape B); for z ∈ XS it is
 * c_i/X^v with c_i the first coefficient of least X-valuation v. That makes z_norm the unique
 * representative with a fixed coefficient there, so the result does not change when z is
 * replaced by u·z for a unit u of R.
 */

#ifndef ORE_CLASSIFY_HPP
#define ORE_CLASSIFY_HPP

#include <string>

#include "ore/skew_poly.hpp"

namespace ore {

enum class TypeTag { A, B, C, Unit, Zero, Unnormalized };

std::string to_string(TypeTag t);

struct Decomposition {
    /// Polynomial in θ with scalar coefficients: z evaluated at X = 0.
    Poly f;
    SkewPoly s;
};

/// z = f + X·s; requires in_S(z).
Decomposition decompose(const SkewPoly& z);

struct Classification {
    RatX unit;
    SkewPoly z_norm;
    TypeTag tag;
};

/// Throws on z = 0 and on z ∉ S.
Classification normalize_and_classify(const SkewPoly& z);

/// Tag only; Zero for z = 0. Still throws on z ∉ S.
TypeTag shape_of(const SkewPoly& z);

}  // namespace ore

#endif  // ORE_CLASSIFY_HPP
