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
 * @file oracle.hpp
 * @brief Brute-force cross-check for the factorization ansätze that never forms the master
 *        equation: t is enumerated coefficient by coefficient as a truncated power series and the
 *        product is compared with h in k[[X]][θ; α] modulo a power of X.
 */

#ifndef ORE_ORACLE_HPP
#define ORE_ORACLE_HPP

#include <cstdint>

#include "ore/diamond.hpp"

namespace ore {

struct OracleConfig {
    /// Guard on the exhaustive part of the search: p^(coeff_bound + 1) must not exceed it.
    std::uint64_t cap = 10'000'000;
    /// Guard on the number of series nodes visited.
    std::size_t max_nodes = 5'000'000;
};

/// All t mod X^prec satisfying the coefficient equations of the ansatz modulo X^(prec + s), where
/// s is the X-adic delay with which t enters the last equation; then every truncation that agrees
/// with a rational function of numerator and denominator degree ≤ coeff_bound is listed in
/// `consistent` and verified exactly. Finite fields only.
FactorReport truncated_oracle(const SkewPoly& h, Shape shape, std::size_t prec, int coeff_bound,
                              const OracleConfig& cfg = {});

}  // namespace ore

#endif  // ORE_ORACLE_HPP
