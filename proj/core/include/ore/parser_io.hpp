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
 * @file parser_io.hpp
 * @brief Text expressions for skew polynomials and JSON encoding of reports.
 *
 * Grammar (whitespace insignificant):
 *   expr    := term (("+" | "-") term)*
 *   term    := factor (("*" | "/") factor)*
 *   factor  := atom ("^" uint)? | "-" factor
 *   atom    := primary ("/" primary)*
 *   primary := "X" | "theta" | "θ" | "q" | "w" | uint | "(" expr ")"
 * `w` is the primitive element of an extension field 𝔽_{p^m}. Divisors must be free of θ.
 * Juxtaposition is rejected.
 */

#ifndef ORE_PARSER_IO_HPP
#define ORE_PARSER_IO_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ore/classify.hpp"
#include "ore/diamond.hpp"
#include "ore/presentation.hpp"
#include "ore/spectra.hpp"

namespace ore {

/// Thrown with the 0-based byte offset of the offending token.
class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string& what, std::size_t position);
    std::size_t position() const noexcept { return position_; }

   private:
    std::size_t position_;
};

struct ExprAST {
    enum class Kind { constant, q, X, theta, w, add, sub, mul, div, pow, neg, paren };
    Kind kind = Kind::constant;
    /// Decimal digits for constants.
    std::string literal;
    /// Exponent for pow.
    unsigned exponent = 0;
    std::vector<ExprAST> children;
    std::size_t position = 0;

    /// Fully parenthesized debugging form.
    std::string to_string() const;
};

ExprAST parse(std::string_view text);

struct EvalOptions {
    /// Divisors must be units of R = k[X]_⟨X⟩.
    bool local_ring = false;
    unsigned max_exponent = 4096;
};

/// Evaluates to left-coefficient canonical form. Throws ParseError on semantic errors.
SkewPoly evaluate(const ExprAST& ast, const FieldConfig& cfg, const EvalOptions& opts = {});
SkewPoly parse_skew(std::string_view text, const FieldConfig& cfg, const EvalOptions& opts = {});
/// θ-free expression.
RatX parse_ratx(std::string_view text, const FieldConfig& cfg, const EvalOptions& opts = {});
/// X- and θ-free expression in `f`; `q` is allowed only when f is k(q).
Scalar parse_scalar(std::string_view text, const Field& f);

/// Ascending θ-powers, each coefficient parenthesized; "0" for zero. Round-trips through parse.
std::string print_canonical(const SkewPoly& p);
std::string print_canonical(const RatX& r);

/// Version of every JSON document emitted below.
inline constexpr int json_schema_version = 1;

std::string encode_json(const SkewPoly& p);
std::string encode_json(const SkewDivMod& d);
std::string encode_json(const Classification& c);
std::string encode_json(const std::vector<Presentation>& ps);
std::string encode_json(const FactorReport& r);
std::string encode_json(const CommutativityReport& r);
std::string encode_json(const OrbitReport& r);
std::string encode_json(const SpecialResult& r);
std::string encode_json(const FrobeniusEvidence& e);

}  // namespace ore

#endif  // ORE_PARSER_IO_HPP
