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

#ifndef ORE_SRC_QFRAC_HPP
#define ORE_SRC_QFRAC_HPP

#include "ore/poly.hpp"

namespace ore {

/// num/den over the base field of k(q); coprime, den monic.
struct QFrac {
    Poly num;
    Poly den;
};

/// Builds the canonical element num/den of `f` = k(q). den must be nonzero.
Scalar make_qfrac(const Field& f, Poly num, Poly den);

}  // namespace ore

#endif
