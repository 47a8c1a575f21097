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
 * @file diamond.hpp
 * @brief Bounded deciders for the two degree-3 factorization ansätze h = b′·c′ with b′ of type B
 *        and c′ of type C, and the monoid-commutativity check built on them.
 *
 * Search strategy (both ansätze): the master equation is solved for y as a power series modulo
 * X^K, branching over every admissible value at each X-adic level; each surviving truncation is
 * turned into the unique rational function with numerator degree ≤ N and denominator degree
 * ≤ N + 1 that matches it (Padé), which is then verified exactly. Every rational solution within
 * the bound has its truncation among the branches, so over a finite field the search is complete
 * for that bound and covers every λ and every degree pair at once.
 */

#ifndef ORE_DIAMOND_HPP
#define ORE_DIAMOND_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ore/classify.hpp"
#include "ore/master.hpp"

namespace ore {

enum class Status { witness_found, no_solution_up_to_bound, identity_verified, inconclusive };

std::string to_string(Status s);

/// A verified factorization h = b_prime · c_prime.
struct Witness {
    RatX t;
    /// Coefficients of the degree-2 cofactor a + bθ + cθ².
    RatX a, b, c;
    SkewPoly b_prime, c_prime;
    TypeTag b_tag, c_tag;

    bool is_BC() const { return b_tag == TypeTag::B && c_tag == TypeTag::C; }
};

struct CheckConfig {
    int degree_bound = 4;
    std::vector<std::uint32_t> primes = {11, 13, 19, 23};
    /// Keep only primes where ord(q mod p) > 2N + 2.
    bool filter_primes = true;
    /// Over ℚ, refutation needs at least this many primes without modular solutions. A ℚ witness
    /// with p-integral coefficients survives reduction modulo every usable prime, so one suffices
    /// in principle; primes with modular solutions are reported and left out.
    std::size_t min_certifying_primes = 1;
    unsigned threads = 1;
    /// Cap on the number of series truncations examined per search.
    std::size_t max_branches = 200000;
};

struct FactorReport {
    Shape shape = Shape::left_B1;
    Status status = Status::inconclusive;
    /// First verified solution with tags (B, C), if any.
    std::optional<Witness> witness;
    /// Every verified solution within the bound, whatever its tags.
    std::vector<Witness> solutions;
    int bound = 0;
    std::string field;
    std::string master;
    /// Primes whose modular search found nothing (the certificate over ℚ).
    std::vector<std::uint32_t> primes;
    std::vector<std::string> lambda_branches;
    std::vector<std::string> skipped_branches;
    std::vector<std::string> regime_flags;
    std::vector<std::string> transcript;
    /// Oracle only: truncated series solutions found, and rational t consistent with them.
    std::size_t truncated_solutions = 0;
    std::vector<RatX> consistent;
};

/// Bounded search over 𝔽_{p^m} (complete) or ℚ (modular refutation plus a direct search on
/// determinate branches). Throws for symbolic q and for an empty usable prime set over ℚ.
FactorReport solve_master(const MasterEquation& m, const CheckConfig& cfg);

/// Checks t against the ansatz of m exactly and, when it solves the master, rebuilds the factors.
std::optional<Witness> verify_candidate(const MasterEquation& m, const RatX& t);

struct CommutativityReport {
    SkewPoly h;
    FactorReport left;
    FactorReport right;
    Status overall = Status::inconclusive;
};

/// Requires tags C for c and B for b and θ-degree 3 for c·b. Over k(q) only the identity
/// candidates t = 1/(1 + qX) (left_B1) and t = 1 (right_deg1) are checked.
CommutativityReport check_monoid_commutativity(const SkewPoly& c, const SkewPoly& b, const CheckConfig& cfg);

}  // namespace ore

#endif  // ORE_DIAMOND_HPP
