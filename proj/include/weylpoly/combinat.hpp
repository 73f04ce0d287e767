#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylpoly {

// Composition: ordered tuple of non-negative integers. The EMPTY sentinel
// stands for an invalid weight (a part pushed below zero); every map out of
// or into EMPTY is the zero map.
struct Composition {
    std::vector<int> parts;
    bool empty_sentinel = false;

    Composition() = default;
    explicit Composition(std::vector<int> p) : parts(std::move(p)) {
        for (int x : parts)
            if (x < 0) throw std::invalid_argument("negative part");
    }

    static Composition empty() {
        Composition c;
        c.empty_sentinel = true;
        return c;
    }

    bool is_empty() const { return empty_sentinel; }
    int n() const { return static_cast<int>(parts.size()); }
    int total() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    int operator[](int i) const { return parts[static_cast<size_t>(i)]; }

    bool is_partition() const {
        if (empty_sentinel) return false;
        for (size_t i = 0; i + 1 < parts.size(); ++i)
            if (parts[i] < parts[i + 1]) return false;
        return true;
    }

    // k_i = nu_1 + ... + nu_i (1-based i; k_0 = 0).
    int prefix(int i) const {
        int s = 0;
        for (int l = 0; l < i; ++l) s += parts[static_cast<size_t>(l)];
        return s;
    }

    bool operator==(const Composition& o) const {
        return empty_sentinel == o.empty_sentinel && parts == o.parts;
    }
    bool operator!=(const Composition& o) const { return !(*this == o); }
    bool operator<(const Composition& o) const {
        if (empty_sentinel != o.empty_sentinel) return empty_sentinel < o.empty_sentinel;
        return parts < o.parts;
    }

    std::string str() const {
        if (empty_sentinel) return "EMPTY";
        std::ostringstream os;
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) os << ',';
            os << parts[i];
        }
        return os.str();
    }
};

using Partition = Composition;

// sl_n weight: entries nu_i - nu_{i+1}, length n-1.
struct Weight {
    std::vector<int> entries;
    bool operator==(const Weight& o) const { return entries == o.entries; }
};

inline Weight weight_of(const Composition& nu) {
    Weight w;
    for (int i = 0; i + 1 < nu.n(); ++i) w.entries.push_back(nu[i] - nu[i + 1]);
    return w;
}

// nu +- alpha_i adjusts parts (i, i+1) by (+-1, -+1); EMPTY when a part would
// go negative. i is 1-based, 1 <= i <= n-1.
inline Composition add_root(const Composition& nu, int i, int sign) {
    if (nu.is_empty()) return Composition::empty();
    if (i < 1 || i >= nu.n()) throw std::out_of_range("root index");
    std::vector<int> p = nu.parts;
    p[static_cast<size_t>(i - 1)] += sign;
    p[static_cast<size_t>(i)] -= sign;
    if (p[static_cast<size_t>(i - 1)] < 0 || p[static_cast<size_t>(i)] < 0)
        return Composition::empty();
    return Composition(std::move(p));
}

// True iff nu <= mu in dominance order: mu - nu is a non-negative integer
// combination of simple roots, i.e. all prefix sums of mu - nu are >= 0.
inline bool dominance_leq(const Composition& nu, const Composition& mu) {
    if (nu.n() != mu.n() || nu.total() != mu.total())
        throw std::invalid_argument("dominance: mismatched shapes");
    int s = 0;
    for (int i = 0; i + 1 < nu.n(); ++i) {
        s += mu[i] - nu[i];
        if (s < 0) return false;
    }
    return true;
}

// Conjugate partition; result has lambda_1 parts.
inline Partition transpose(const Partition& lam) {
    if (!lam.is_partition()) throw std::invalid_argument("transpose: not a partition");
    int cols = lam.n() ? lam[0] : 0;
    std::vector<int> t(static_cast<size_t>(cols), 0);
    for (int i = 0; i < lam.n(); ++i)
        for (int j = 0; j < lam[i]; ++j) t[static_cast<size_t>(j)] += 1;
    return Partition(std::move(t));
}

// d^lambda_nu = max{(lambda,lambda) - (nu,nu), 0}; always even when the
// totals agree.
inline long long degree_gap(const Composition& lam, const Composition& nu) {
    if (lam.total() != nu.total()) throw std::invalid_argument("degree_gap: totals differ");
    long long d = 0;
    for (int i = 0; i < lam.n(); ++i) d += 1LL * lam[i] * lam[i];
    for (int i = 0; i < nu.n(); ++i) d -= 1LL * nu[i] * nu[i];
    return d > 0 ? d : 0;
}

// Univariate polynomial in t with integer coefficients. Exponents may be
// negative while intermediate (Laurent) values are being assembled.
struct TPoly {
    std::map<int, long long> coeffs;

    TPoly() = default;
    static TPoly zero() { return TPoly(); }
    static TPoly one() { return monomial(0, 1); }
    static TPoly monomial(int e, long long c) {
        TPoly p;
        if (c != 0) p.coeffs[e] = c;
        return p;
    }

    bool is_zero() const { return coeffs.empty(); }
    long long coeff(int e) const {
        auto it = coeffs.find(e);
        return it == coeffs.end() ? 0 : it->second;
    }
    int min_exp() const { return coeffs.empty() ? 0 : coeffs.begin()->first; }
    int max_exp() const { return coeffs.empty() ? 0 : coeffs.rbegin()->first; }

    void set(int e, long long c) {
        if (c == 0)
            coeffs.erase(e);
        else
            coeffs[e] = c;
    }
    void add_term(int e, long long c) { set(e, coeff(e) + c); }

    TPoly operator+(const TPoly& o) const {
        TPoly r = *this;
        for (auto& [e, c] : o.coeffs) r.add_term(e, c);
        return r;
    }
    TPoly operator-(const TPoly& o) const {
        TPoly r = *this;
        for (auto& [e, c] : o.coeffs) r.add_term(e, -c);
        return r;
    }
    TPoly operator*(const TPoly& o) const {
        TPoly r;
        for (auto& [e1, c1] : coeffs)
            for (auto& [e2, c2] : o.coeffs) r.add_term(e1 + e2, c1 * c2);
        return r;
    }
    bool operator==(const TPoly& o) const { return coeffs == o.coeffs; }
    bool operator!=(const TPoly& o) const { return !(*this == o); }

    long long eval_at_one() const {
        long long s = 0;
        for (auto& [e, c] : coeffs) s += c;
        return s;
    }

    // t^shift * p(1/t).
    TPoly reversed(int shift) const {
        TPoly r;
        for (auto& [e, c] : coeffs) r.set(shift - e, c);
        return r;
    }

    bool is_palindromic() const {
        if (coeffs.empty()) return true;
        return *this == reversed(min_exp() + max_exp());
    }

    bool nonneg_exponents() const { return coeffs.empty() || min_exp() >= 0; }

    std::string str() const {
        if (coeffs.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
            long long c = it->second;
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            long long a = c < 0 ? -c : c;
            int e = it->first;
            if (a != 1 || e == 0) os << a;
            if (e != 0) {
                if (a != 1) os << "*";
                os << "t";
                if (e != 1) os << "^" << e;
            }
            first = false;
        }
        return os.str();
    }
};

// Gaussian binomial [m choose k]_t via the q-Pascal recurrence.
inline TPoly t_binomial(int m, int k) {
    if (k < 0 || k > m) return TPoly::zero();
    std::vector<TPoly> row(static_cast<size_t>(k) + 1);
    row[0] = TPoly::one();
    for (int mm = 1; mm <= m; ++mm)
        for (int kk = std::min(mm, k); kk >= 1; --kk) {
            // [mm kk] = [mm-1 kk-1] + t^kk [mm-1 kk]
            TPoly shifted = row[static_cast<size_t>(kk)] * TPoly::monomial(kk, 1);
            row[static_cast<size_t>(kk)] = row[static_cast<size_t>(kk) - 1] + shifted;
        }
    return row[static_cast<size_t>(k)];
}

// [N]_t! / prod [nu_i]_t!  as a product of Gaussian binomials over prefixes.
inline TPoly t_multinomial(int N, const Composition& nu) {
    if (nu.total() != N) throw std::invalid_argument("t_multinomial: total mismatch");
    TPoly r = TPoly::one();
    int s = 0;
    for (int i = 0; i < nu.n(); ++i) {
        s += nu[i];
        r = r * t_binomial(s, nu[i]);
    }
    return r;
}

namespace detail {
inline void enum_comp_rec(int n, int N, std::vector<int>& cur,
                          std::vector<Composition>& out, bool partitions, int cap) {
    if (static_cast<int>(cur.size()) == n - 1) {
        if (!partitions || N <= cap) {
            cur.push_back(N);
            out.push_back(Composition(cur));
            cur.pop_back();
        }
        return;
    }
    int hi = partitions ? std::min(N, cap) : N;
    for (int v = 0; v <= hi; ++v) {
        cur.push_back(v);
        enum_comp_rec(n, N - v, cur, out, partitions, partitions ? v : cap);
        cur.pop_back();
    }
}
} // namespace detail

// All n-part compositions of N in ascending lexicographic order.
inline std::vector<Composition> enumerate_compositions(int n, int N) {
    std::vector<Composition> out;
    if (n <= 0) return out;
    std::vector<int> cur;
    detail::enum_comp_rec(n, N, cur, out, false, N);
    return out;
}

// All n-part partitions of N (weakly decreasing), ascending lexicographic.
inline std::vector<Composition> enumerate_partitions(int n, int N) {
    std::vector<Composition> out;
    if (n <= 0) return out;
    std::vector<int> cur;
    detail::enum_comp_rec(n, N, cur, out, true, N);
    std::vector<Composition> kept;
    for (auto& c : out)
        if (c.is_partition()) kept.push_back(c);
    return kept;
}

// Sort a composition's parts into the partition it permutes to.
inline Partition sorted_partition(const Composition& mu) {
    std::vector<int> p = mu.parts;
    std::sort(p.begin(), p.end(), std::greater<int>());
    return Partition(std::move(p));
}

inline Composition zero_pad(const Composition& c, int len) {
    std::vector<int> p = c.parts;
    while (static_cast<int>(p.size()) < len) p.push_back(0);
    return Composition(std::move(p));
}

inline Composition parse_composition(const std::string& csv) {
    std::vector<int> parts;
    std::string tok;
    std::istringstream is(csv);
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("bad composition: " + csv);
        parts.push_back(std::stoi(tok));
    }
    if (parts.empty()) throw std::invalid_argument("bad composition: " + csv);
    return Composition(std::move(parts));
}

} // namespace weylpoly
