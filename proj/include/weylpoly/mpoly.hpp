#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "combinat.hpp"

namespace weylpoly {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

using Expvec = std::vector<int>;

// Exact multivariate polynomial in X_1..X_N, fully expanded, deg X_k = 2.
// Terms are kept in a sorted map with no zero coefficients, so equality and
// serialization are canonical.
struct MPoly {
    int nvars = 0;
    std::map<Expvec, BigInt> terms;

    MPoly() = default;
    explicit MPoly(int nv) : nvars(nv) {}

    static MPoly zero(int nv) { return MPoly(nv); }
    static MPoly constant(int nv, const BigInt& c) {
        MPoly p(nv);
        if (c != 0) p.terms[Expvec(static_cast<size_t>(nv), 0)] = c;
        return p;
    }
    static MPoly one(int nv) { return constant(nv, 1); }
    // X_k, 1-based.
    static MPoly var(int nv, int k, int power = 1) {
        if (k < 1 || k > nv) throw std::out_of_range("variable index");
        MPoly p(nv);
        Expvec e(static_cast<size_t>(nv), 0);
        e[static_cast<size_t>(k - 1)] = power;
        p.terms[std::move(e)] = 1;
        return p;
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(const Expvec& e, const BigInt& c) {
        if (c == 0) return;
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    MPoly operator+(const MPoly& o) const {
        check(o);
        MPoly r = *this;
        for (auto& [e, c] : o.terms) r.add_term(e, c);
        return r;
    }
    MPoly operator-(const MPoly& o) const {
        check(o);
        MPoly r = *this;
        for (auto& [e, c] : o.terms) r.add_term(e, -c);
        return r;
    }
    MPoly operator-() const {
        MPoly r(nvars);
        for (auto& [e, c] : terms) r.terms[e] = -c;
        return r;
    }
    MPoly operator*(const MPoly& o) const {
        check(o);
        MPoly r(nvars);
        for (auto& [e1, c1] : terms)
            for (auto& [e2, c2] : o.terms) {
                Expvec e = e1;
                for (size_t k = 0; k < e.size(); ++k) e[k] += e2[k];
                r.add_term(e, c1 * c2);
            }
        return r;
    }
    MPoly operator*(const BigInt& s) const {
        MPoly r(nvars);
        if (s == 0) return r;
        for (auto& [e, c] : terms) r.terms[e] = c * s;
        return r;
    }
    MPoly& operator+=(const MPoly& o) {
        check(o);
        for (auto& [e, c] : o.terms) add_term(e, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        check(o);
        for (auto& [e, c] : o.terms) add_term(e, -c);
        return *this;
    }

    bool operator==(const MPoly& o) const { return nvars == o.nvars && terms == o.terms; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }
    bool operator<(const MPoly& o) const {
        if (nvars != o.nvars) return nvars < o.nvars;
        return terms < o.terms;
    }

    MPoly pow(int e) const {
        if (e < 0) throw std::invalid_argument("negative power");
        MPoly r = one(nvars);
        for (int k = 0; k < e; ++k) r = r * (*this);
        return r;
    }

    // Half-degree of a monomial (sum of exponents); full degree is twice this.
    static int half_degree(const Expvec& e) {
        int s = 0;
        for (int x : e) s += x;
        return s;
    }

    // Homogeneous component of total degree 2r.
    MPoly graded_piece(int r) const {
        MPoly p(nvars);
        for (auto& [e, c] : terms)
            if (half_degree(e) == r) p.terms[e] = c;
        return p;
    }

    int max_half_degree() const {
        int m = 0;
        for (auto& [e, c] : terms) m = std::max(m, half_degree(e));
        return m;
    }
    int min_half_degree() const {
        if (terms.empty()) return 0;
        int m = half_degree(terms.begin()->first);
        for (auto& [e, c] : terms) m = std::min(m, half_degree(e));
        return m;
    }

    bool is_homogeneous(int r) const {
        for (auto& [e, c] : terms)
            if (half_degree(e) != r) return false;
        return true;
    }

    // q(X_{perm(1)}, ..., X_{perm(N)}) for a 1-based permutation vector.
    MPoly permuted(const std::vector<int>& perm) const {
        MPoly r(nvars);
        for (auto& [e, c] : terms) {
            Expvec f(static_cast<size_t>(nvars), 0);
            for (int k = 0; k < nvars; ++k)
                f[static_cast<size_t>(k)] = e[static_cast<size_t>(perm[static_cast<size_t>(k)] - 1)];
            r.add_term(f, c);
        }
        return r;
    }

    std::string str() const {
        if (terms.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [e, c] : terms) {
            BigInt a = c < 0 ? BigInt(-c) : c;
            if (!first) os << (c < 0 ? " - " : " + ");
            else if (c < 0) os << "-";
            bool printed = false;
            if (a != 1) {
                os << a.str();
                printed = true;
            }
            for (size_t k = 0; k < e.size(); ++k)
                if (e[k] > 0) {
                    if (printed) os << "*";
                    os << "X" << (k + 1);
                    if (e[k] > 1) os << "^" << e[k];
                    printed = true;
                }
            if (!printed) os << a.str();
            first = false;
        }
        return os.str();
    }

  private:
    void check(const MPoly& o) const {
        if (nvars != o.nvars) throw std::invalid_argument("variable count mismatch");
    }
};

inline MPoly operator*(const BigInt& s, const MPoly& p) { return p * s; }

} // namespace weylpoly
