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

// Planted degree-3 factorizations h = b′·c′ with b′ of type B and c′ of type C.

#ifndef ORE_TESTS_PLANT_HPP
#define ORE_TESTS_PLANT_HPP

#include "ore/master.hpp"
#include "random.hpp"

namespace ore::testing {

struct Planted {
    SkewPoly h;
    RatX t;
    SkewPoly b_prime, c_prime;
};

/// Element of R with numerator and denominator degree ≤ d; unit when asked.
inline RatX local_element(Gen& gen, const Field& f, int d, bool unit) {
    for (;;) {
        Poly num = gen.poly(f, d);
        Poly den = gen.nonzero_poly(f, d);
        if (den.coeff(0).is_zero() || num.is_zero()) continue;
        if (unit && num.coeff(0).is_zero()) continue;
        return RatX(num, den);
    }
}

/// h = (1 + X·t·θ)(a + bθ + cθ²) with a and c units of R, so the right factor is type C.
inline Planted plant_left(Gen& gen, const Scalar& q, int tdeg) {
    const Field& f = q.field();
    RatX t = local_element(gen, f, tdeg, false);
    SkewPoly bp(q, {RatX::constant(f.one()), RatX::x(f) * t});
    SkewPoly cp(q, {local_element(gen, f, 1, true), RatX(gen.poly(f, 1)), local_element(gen, f, 1, true)});
    return {bp * cp, t, bp, cp};
}

/// h = (a + X·r₁θ + X·r₂θ²)(1 + t·θ) with a, r₂ and t units of R, so the left factor is type B.
inline Planted plant_right(Gen& gen, const Scalar& q, int tdeg) {
    const Field& f = q.field();
    RatX t = local_element(gen, f, tdeg, true);
    const RatX X = RatX::x(f);
    SkewPoly bp(q, {local_element(gen, f, 1, true), X * RatX(gen.poly(f, 1)), X * local_element(gen, f, 1, true)});
    SkewPoly cp(q, {RatX::constant(f.one()), t});
    return {bp * cp, t, bp, cp};
}

}  // namespace ore::testing

#endif  // ORE_TESTS_PLANT_HPP
