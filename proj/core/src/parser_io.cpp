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

#include "ore/parser_io.hpp"

#include <cctype>
#include <gmpxx.h>

#include "json.hpp"

namespace ore {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

namespace {

// ---------------------------------------------------------------------------------------------
// Tokens

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        if (std::isdigit(c)) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Tok::number, std::string(s.substr(i, j - i)), i});
            i = j;
            continue;
        }
        if (std::isalpha(c)) {
            std::size_t j = i;
            while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Tok::ident, std::string(s.substr(i, j - i)), i});
            i = j;
            continue;
        }
        if (s.substr(i, 2) == "\xCE\xB8") {  // θ
            out.push_back({Tok::ident, "theta", i});
            i += 2;
            continue;
        }
        Tok k;
        switch (c) {
            case '+': k = Tok::plus; break;
            case '-': k = Tok::minus; break;
            case '*': k = Tok::star; break;
            case '/': k = Tok::slash; break;
            case '^': k = Tok::caret; break;
            case '(': k = Tok::lparen; break;
            case ')': k = Tok::rparen; break;
            default: throw ParseError("unexpected character '" + std::string(1, s[i]) + "'", i);
        }
        out.push_back({k, std::string(1, s[i]), i});
        ++i;
    }
    out.push_back({Tok::end, "", s.size()});
    return out;
}

// ---------------------------------------------------------------------------------------------
// Recursive descent

class Parser {
   public:
    explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

    ExprAST run() {
        if (peek().kind == Tok::end) throw ParseError("empty expression", peek().pos);
        ExprAST e = expr();
        if (peek().kind != Tok::end) {
            if (starts_atom(peek())) throw ParseError("implicit multiplication is not allowed; use '*'", peek().pos);
            throw ParseError("unexpected '" + peek().text + "'", peek().pos);
        }
        return e;
    }

   private:
    const Token& peek() const { return toks_[i_]; }
    Token take() { return toks_[i_++]; }

    static bool starts_atom(const Token& t) {
        return t.kind == Tok::number || t.kind == Tok::ident || t.kind == Tok::lparen;
    }

    static ExprAST node(ExprAST::Kind k, std::size_t pos, std::vector<ExprAST> ch) {
        ExprAST a;
        a.kind = k;
        a.position = pos;
        a.children = std::move(ch);
        return a;
    }

    ExprAST expr() {
        ExprAST lhs = term();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            Token op = take();
            ExprAST rhs = term();
            lhs = node(op.kind == Tok::plus ? ExprAST::Kind::add : ExprAST::Kind::sub, op.pos,
                       {std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    ExprAST term() {
        ExprAST lhs = factor();
        for (;;) {
            if (peek().kind == Tok::star || peek().kind == Tok::slash) {
                Token op = take();
                ExprAST rhs = factor();
                lhs = node(op.kind == Tok::star ? ExprAST::Kind::mul : ExprAST::Kind::div, op.pos,
                           {std::move(lhs), std::move(rhs)});
            } else if (starts_atom(peek())) {
                throw ParseError("implicit multiplication is not allowed; use '*'", peek().pos);
            } else {
                return lhs;
            }
        }
    }

    ExprAST factor() {
        if (peek().kind == Tok::minus) {
            Token op = take();
            return node(ExprAST::Kind::neg, op.pos, {factor()});
        }
        ExprAST base = atom();
        if (peek().kind != Tok::caret) return base;
        Token op = take();
        if (peek().kind != Tok::number)
            throw ParseError("exponent must be a nonnegative integer literal", peek().pos);
        Token n = take();
        if (n.text.size() > 9) throw ParseError("exponent " + n.text + " is too large", n.pos);
        ExprAST p = node(ExprAST::Kind::pow, op.pos, {std::move(base)});
        p.exponent = static_cast<unsigned>(std::stoul(n.text));
        p.literal = n.text;
        if (peek().kind == Tok::caret) throw ParseError("chained exponents need parentheses", peek().pos);
        return p;
    }

    ExprAST atom() {
        ExprAST lhs = primary();
        while (peek().kind == Tok::slash) {
            Token op = take();
            ExprAST rhs = primary();
            lhs = node(ExprAST::Kind::div, op.pos, {std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    ExprAST primary() {
        Token t = take();
        switch (t.kind) {
            case Tok::number: {
                ExprAST a = node(ExprAST::Kind::constant, t.pos, {});
                a.literal = t.text;
                return a;
            }
            case Tok::ident:
                if (t.text == "X") return node(ExprAST::Kind::X, t.pos, {});
                if (t.text == "theta") return node(ExprAST::Kind::theta, t.pos, {});
                if (t.text == "q") return node(ExprAST::Kind::q, t.pos, {});
                if (t.text == "w") return node(ExprAST::Kind::w, t.pos, {});
                throw ParseError("unknown identifier '" + t.text + "'", t.pos);
            case Tok::lparen: {
                ExprAST inner = expr();
                if (peek().kind != Tok::rparen) throw ParseError("expected ')'", peek().pos);
                take();
                return node(ExprAST::Kind::paren, t.pos, {std::move(inner)});
            }
            case Tok::end:
                throw ParseError("unexpected end of input", t.pos);
            default:
                throw ParseError("unexpected '" + t.text + "'", t.pos);
        }
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
};

// ---------------------------------------------------------------------------------------------
// Evaluation

struct Context {
    const Field& field;
    Scalar q;
    bool allow_X;
    bool allow_theta;
    bool allow_q;
    EvalOptions opts;
};

SkewPoly power(SkewPoly base, unsigned e) {
    SkewPoly out = SkewPoly::one(base.q());
    while (e) {
        if (e & 1U) out = out * base;
        e >>= 1U;
        if (e) base = base * base;
    }
    return out;
}

SkewPoly eval(const ExprAST& a, const Context& cx) {
    using K = ExprAST::Kind;
    auto constant = [&](const Scalar& s) { return SkewPoly::constant(cx.q, RatX::constant(s)); };
    switch (a.kind) {
        case K::constant:
            return constant(cx.field.from_rational(mpq_class(mpz_class(a.literal))));
        case K::q:
            if (!cx.allow_q) throw ParseError("'q' is not allowed here", a.position);
            return constant(cx.q);
        case K::w:
            if (!cx.field.is_finite() || cx.field.extension_degree() < 2)
                throw ParseError("'w' needs an extension field", a.position);
            return constant(cx.field.generator());
        case K::X:
            if (!cx.allow_X) throw ParseError("'X' is not allowed here", a.position);
            return SkewPoly::constant(cx.q, RatX::x(cx.field));
        case K::theta:
            if (!cx.allow_theta) throw ParseError("'theta' is not allowed here", a.position);
            return SkewPoly::theta(cx.q);
        case K::paren:
            return eval(a.children[0], cx);
        case K::neg:
            return -eval(a.children[0], cx);
        case K::add:
            return eval(a.children[0], cx) + eval(a.children[1], cx);
        case K::sub:
            return eval(a.children[0], cx) - eval(a.children[1], cx);
        case K::mul:
            return eval(a.children[0], cx) * eval(a.children[1], cx);
        case K::pow:
            if (a.exponent > cx.opts.max_exponent)
                throw ParseError("exponent " + std::to_string(a.exponent) + " exceeds the limit " +
                                     std::to_string(cx.opts.max_exponent),
                                 a.position);
            return power(eval(a.children[0], cx), a.exponent);
        case K::div: {
            SkewPoly num = eval(a.children[0], cx);
            SkewPoly den = eval(a.children[1], cx);
            if (den.degree() > 0) throw ParseError("divisor must be free of theta", a.children[1].position);
            if (den.is_zero()) throw ParseError("division by zero", a.children[1].position);
            const RatX& d = den.lead();
            if (cx.opts.local_ring && !d.is_local_unit())
                throw ParseError("division by " + d.to_string() + ", not a unit of the local ring",
                                 a.children[1].position);
            return num * SkewPoly::constant(cx.q, d.inverse());
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

std::string ExprAST::to_string() const {
    using K = Kind;
    auto bin = [&](const char* op) {
        return "(" + children[0].to_string() + " " + op + " " + children[1].to_string() + ")";
    };
    switch (kind) {
        case K::constant: return literal;
        case K::q: return "q";
        case K::X: return "X";
        case K::theta: return "theta";
        case K::w: return "w";
        case K::add: return bin("+");
        case K::sub: return bin("-");
        case K::mul: return bin("*");
        case K::div: return bin("/");
        case K::pow: return "(" + children[0].to_string() + ")^" + std::to_string(exponent);
        case K::neg: return "(-" + children[0].to_string() + ")";
        case K::paren: return children[0].to_string();
    }
    return "?";
}

ExprAST parse(std::string_view text) { return Parser(text).run(); }

SkewPoly evaluate(const ExprAST& ast, const FieldConfig& cfg, const EvalOptions& opts) {
    if (cfg.field == nullptr) throw std::invalid_argument("field configuration is empty");
    return eval(ast, Context{*cfg.field, cfg.q, true, true, true, opts});
}

SkewPoly parse_skew(std::string_view text, const FieldConfig& cfg, const EvalOptions& opts) {
    return evaluate(parse(text), cfg, opts);
}

RatX parse_ratx(std::string_view text, const FieldConfig& cfg, const EvalOptions& opts) {
    SkewPoly p = parse_skew(text, cfg, opts);
    if (p.degree() > 0) throw ParseError("expected an expression free of theta", 0);
    return p.is_zero() ? RatX(Poly(*cfg.field)) : p.lead();
}

Scalar parse_scalar(std::string_view text, const Field& f) {
    bool has_q = f.kind() == FieldKind::rational_functions;
    Scalar q = has_q ? f.generator() : f.one();
    SkewPoly p = eval(parse(text), Context{f, q, false, false, has_q, {}});
    return p.is_zero() ? f.zero() : p.lead().as_scalar();
}

std::string print_canonical(const SkewPoly& p) { return p.to_string(); }
std::string print_canonical(const RatX& r) { return r.to_string(); }

// ---------------------------------------------------------------------------------------------
// JSON

namespace {

using Json = nlohmann::ordered_json;

Json header(const char* kind) {
    Json j;
    j["schema_version"] = json_schema_version;
    j["kind"] = kind;
    return j;
}

Json skew_json(const SkewPoly& p) {
    Json j;
    j["text"] = print_canonical(p);
    j["degree"] = p.degree();
    Json cs = Json::array();
    for (const auto& c : p.coefficients()) cs.push_back(c.to_string());
    j["coefficients"] = cs;
    return j;
}

template <class T>
Json strings(const std::vector<T>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.to_string());
    return a;
}

Json witness_json(const Witness& w) {
    Json j;
    j["t"] = w.t.to_string();
    j["a"] = w.a.to_string();
    j["b"] = w.b.to_string();
    j["c"] = w.c.to_string();
    j["b_prime"] = print_canonical(w.b_prime);
    j["c_prime"] = print_canonical(w.c_prime);
    j["b_tag"] = to_string(w.b_tag);
    j["c_tag"] = to_string(w.c_tag);
    return j;
}

Json factor_json(const FactorReport& r) {
    Json j;
    j["shape"] = to_string(r.shape);
    j["status"] = to_string(r.status);
    j["bound"] = r.bound;
    j["field"] = r.field;
    j["master"] = r.master;
    j["witness"] = r.witness ? witness_json(*r.witness) : Json(nullptr);
    Json sols = Json::array();
    for (const auto& w : r.solutions) sols.push_back(witness_json(w));
    j["solutions"] = sols;
    j["certifying_primes"] = r.primes;
    j["lambda_branches"] = r.lambda_branches;
    j["skipped_branches"] = r.skipped_branches;
    j["regime_flags"] = r.regime_flags;
    j["transcript"] = r.transcript;
    j["truncated_solutions"] = r.truncated_solutions;
    j["consistent"] = strings(r.consistent);
    return j;
}

}  // namespace

std::string encode_json(const SkewPoly& p) {
    Json j = header("skew_poly");
    j["value"] = skew_json(p);
    return j.dump(2);
}

std::string encode_json(const SkewDivMod& d) {
    Json j = header("division");
    j["quotient"] = skew_json(d.quot);
    j["remainder"] = skew_json(d.rem);
    return j.dump(2);
}

std::string encode_json(const Classification& c) {
    Json j = header("classification");
    j["tag"] = to_string(c.tag);
    j["unit"] = c.unit.to_string();
    j["normalized"] = skew_json(c.z_norm);
    return j.dump(2);
}

std::string encode_json(const std::vector<Presentation>& ps) {
    Json j = header("presentations");
    Json a = Json::array();
    for (const auto& p : ps) {
        Json e;
        e["xi"] = p.xi.to_string();
        e["Zg"] = strings(p.Zg);
        e["A"] = strings(p.A);
        e["B"] = strings(p.B);
        e["A0"] = strings(p.A0);
        e["B0"] = strings(p.B0);
        e["C"] = strings(p.C);
        e["D"] = strings(p.D);
        e["f_A"] = p.f_A.to_string();
        e["f_B"] = p.f_B.to_string();
        e["irrepresentation"] = check_irrepresentation(p);
        a.push_back(e);
    }
    j["count"] = ps.size();
    j["presentations"] = a;
    return j.dump(2);
}

std::string encode_json(const FactorReport& r) {
    Json j = header("factor_report");
    j["report"] = factor_json(r);
    return j.dump(2);
}

std::string encode_json(const CommutativityReport& r) {
    Json j = header("commutativity_report");
    j["h"] = skew_json(r.h);
    j["overall"] = to_string(r.overall);
    j["left"] = factor_json(r.left);
    j["right"] = factor_json(r.right);
    return j.dump(2);
}

std::string encode_json(const OrbitReport& r) {
    Json j = header("orbit");
    j["representative"] = r.representative.to_string();
    j["automorphism"] = r.representative.alpha.to_string();
    j["status"] = r.status();
    j["finite"] = r.finite;
    j["size"] = r.size;
    j["elements"] = strings(r.elements);
    return j.dump(2);
}

std::string encode_json(const SpecialResult& r) {
    Json j = header("special");
    j["result"] = r.to_string();
    j["special"] = r.special;
    j["n"] = r.n;
    return j.dump(2);
}

std::string encode_json(const FrobeniusEvidence& e) {
    Json j = header("frobenius_witness");
    j["refuted"] = e.refuted;
    j["orbits"] = e.orbits;
    j["degree"] = e.degree;
    j["orbits_without_root"] = e.orbits_without_root;
    j["orbit_lines"] = e.orbit_lines;
    j["summary"] = e.summary;
    return j.dump(2);
}

}  // namespace ore
