#pragma once

#include <cctype>
#include <stdexcept>
#include <string>

#include "blocksym.hpp"
#include "combinat.hpp"
#include "mpoly.hpp"

namespace weylpoly {

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

// Raised when a parsed expression is not invariant under the block
// permutation group; names the adjacent transposition that moves it.
struct SymmetryError : std::runtime_error {
    int var;  // the swap X_var <-> X_{var+1}
    SymmetryError(int v, const Composition& nu)
        : std::runtime_error("polynomial is not block-symmetric for nu=(" + nu.str() +
                             "): changed by swapping X(" + std::to_string(v) + ") and X(" +
                             std::to_string(v + 1) + ")"),
          var(v) {}
};

namespace detail {

class PolyParser {
  public:
    PolyParser(const std::string& text, const Composition& nu)
        : text_(text), nu_(nu), nvars_(nu.total()) {}

    MPoly parse() {
        MPoly p = expr();
        skip();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return p;
    }

  private:
    const std::string& text_;
    const Composition& nu_;
    int nvars_;
    std::size_t pos_ = 0;

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
    }

    long long integer() {
        skip();
        bool neg = false;
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            neg = text_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("expected integer", start);
        long long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return neg ? -v : v;
    }

    MPoly expr() {
        MPoly p = term();
        for (;;) {
            skip();
            if (eat('+'))
                p += term();
            else if (eat('-'))
                p -= term();
            else
                return p;
        }
    }

    MPoly term() {
        MPoly p = factor();
        for (;;) {
            skip();
            if (eat('*'))
                p = p * factor();
            else
                return p;
        }
    }

    MPoly factor() {
        skip();
        if (eat('-')) return -factor();
        MPoly p = base();
        while (true) {
            skip();
            if (!eat('^')) break;
            std::size_t at = pos_;
            long long e = integer();
            if (e < 0) throw ParseError("exponent must be non-negative", at);
            p = p.pow(static_cast<int>(e));
        }
        return p;
    }

    MPoly base() {
        skip();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)))
            return MPoly::constant(nvars_, BigInt(integer()));
        if (c == '(') {
            ++pos_;
            MPoly p = expr();
            expect(')');
            return p;
        }
        if (c == 'X') {
            ++pos_;
            expect('(');
            std::size_t at = pos_;
            long long k = integer();
            expect(')');
            if (k < 1 || k > nvars_)
                throw ParseError("variable index out of range 1.." + std::to_string(nvars_), at);
            return MPoly::var(nvars_, static_cast<int>(k));
        }
        if (c == 'e' || c == 'h' || c == 'p') {
            ++pos_;
            expect('(');
            long long r = integer();
            expect(',');
            std::size_t at = pos_;
            long long i = integer();
            expect(')');
            if (i < 1 || i > nu_.n())
                throw ParseError("block index out of range 1.." + std::to_string(nu_.n()), at);
            return gen_poly(c, static_cast<int>(r), nu_, static_cast<int>(i));
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }
};

}  // namespace detail

// Find the first adjacent in-block transposition that moves p; -1 when p is
// block-symmetric.
inline int symmetry_violation(const MPoly& p, const Composition& nu) {
    const int N = nu.total();
    for (int block = 1; block <= nu.n(); ++block) {
        const int lo = nu.prefix(block - 1) + 1;
        const int hi = nu.prefix(block);
        for (int v = lo; v < hi; ++v) {
            std::vector<int> perm(static_cast<std::size_t>(N));
            for (int k = 0; k < N; ++k) perm[static_cast<std::size_t>(k)] = k + 1;
            std::swap(perm[static_cast<std::size_t>(v - 1)], perm[static_cast<std::size_t>(v)]);
            if (p.permuted(perm) != p) return v;
        }
    }
    return -1;
}

// Parse an expression over X(k), e(r,i), h(r,i), p(r,i) into an expanded
// polynomial, rejecting results outside the block-symmetric ring of nu.
inline BlockSymPoly parse_poly(const std::string& text, const Composition& nu) {
    if (nu.is_empty()) throw std::invalid_argument("parse_poly: empty weight");
    MPoly p = detail::PolyParser(text, nu).parse();
    const int bad = symmetry_violation(p, nu);
    if (bad >= 0) throw SymmetryError(bad, nu);
    return BlockSymPoly{std::move(p), nu};
}

// Canonical textual form accepted back by parse_poly: terms in the monomial
// order of the underlying map, coefficients explicit.
inline std::string render_poly(const MPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms) {
        BigInt a = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string body;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (!body.empty()) body += "*";
            body += "X(" + std::to_string(k + 1) + ")";
            if (e[k] > 1) body += "^" + std::to_string(e[k]);
        }
        if (a != 1 || body.empty()) {
            std::string num = a.str();
            out += body.empty() ? num : num + "*" + body;
        } else {
            out += body;
        }
        first = false;
    }
    return out;
}

}  // namespace weylpoly
