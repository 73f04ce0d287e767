#pragma once

// Reference implementations used only by the test suite. Each one computes
// its quantity by a different route than the library so agreement is
// meaningful: dominance by bounded search over root multiplicities, Kostka
// numbers by semistandard tableau enumeration, Kostka-Foulkes polynomials by
// the charge statistic, irreducible dimensions by the product formula, and
// coinvariant dimensions by monomial-orbit linear algebra.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include <weylpoly/combinat.hpp>
#include <weylpoly/linalg.hpp>
#include <weylpoly/mpoly.hpp>

namespace oracle {

using weylpoly::BigInt;
using weylpoly::BigRat;
using weylpoly::Composition;
using weylpoly::Expvec;
using weylpoly::MPoly;
using weylpoly::Partition;
using weylpoly::TPoly;

// mu >= nu iff mu - nu = sum c_i alpha_i with all c_i >= 0: search the c_i
// directly (they are bounded by the total).
inline bool dominance_geq_search(const Composition& mu, const Composition& nu) {
    int n = mu.n();
    int bound = mu.total();
    std::vector<int> c(static_cast<size_t>(n - 1), 0);
    std::function<bool(int)> rec = [&](int idx) -> bool {
        if (idx == n - 1) {
            for (int i = 0; i < n; ++i) {
                int delta = (i < n - 1 ? c[static_cast<size_t>(i)] : 0) -
                            (i > 0 ? c[static_cast<size_t>(i - 1)] : 0);
                if (mu[i] - nu[i] != delta) return false;
            }
            return true;
        }
        for (int v = 0; v <= bound; ++v) {
            c[static_cast<size_t>(idx)] = v;
            if (rec(idx + 1)) return true;
        }
        return false;
    };
    return rec(0);
}

// Semistandard Young tableaux of shape lambda and content mu, enumerated
// row by row as weakly increasing rows with strict column increase.
inline long long ssyt_count(const Partition& lambda, const Composition& mu) {
    if (lambda.total() != mu.total()) return 0;
    int rows = lambda.n();
    int maxv = mu.n();
    std::vector<std::vector<int>> tab(static_cast<size_t>(rows));
    std::vector<int> used(static_cast<size_t>(maxv), 0);
    long long count = 0;

    std::function<void(int, int)> fill = [&](int r, int col) {
        if (r == rows) {
            ++count;
            return;
        }
        int len = lambda[r];
        if (col == len) {
            fill(r + 1, 0);
            return;
        }
        int lo = 1;
        if (col > 0) lo = std::max(lo, tab[static_cast<size_t>(r)][static_cast<size_t>(col - 1)]);
        if (r > 0) lo = std::max(lo, tab[static_cast<size_t>(r - 1)][static_cast<size_t>(col)] + 1);
        for (int v = lo; v <= maxv; ++v) {
            if (used[static_cast<size_t>(v - 1)] >= mu[v - 1]) continue;
            used[static_cast<size_t>(v - 1)] += 1;
            tab[static_cast<size_t>(r)].push_back(v);
            fill(r, col + 1);
            tab[static_cast<size_t>(r)].pop_back();
            used[static_cast<size_t>(v - 1)] -= 1;
        }
    };
    for (int r = 0; r < rows; ++r)
        if (r + 1 < rows && lambda[r] < lambda[r + 1]) return 0;
    fill(0, 0);
    return count;
}

namespace detail {

// Charge of a word with partition content: repeatedly extract a standard
// subword (rightmost 1, then the nearest 2 cyclically to its left, ...) and
// add up the standard charges.
inline int standard_charge(const std::vector<int>& w) {
    int m = static_cast<int>(w.size());
    std::vector<int> pos(static_cast<size_t>(m) + 1, -1);
    for (int idx = 0; idx < m; ++idx) pos[static_cast<size_t>(w[static_cast<size_t>(idx)])] = idx;
    int charge = 0, cur = 0;
    for (int k = 2; k <= m; ++k) {
        if (pos[static_cast<size_t>(k)] > pos[static_cast<size_t>(k - 1)]) cur += 1;
        charge += cur;
    }
    return charge;
}

inline int word_charge(std::vector<int> w) {
    int charge = 0;
    while (!w.empty()) {
        int maxletter = *std::max_element(w.begin(), w.end());
        std::vector<int> subpos;
        int curpos = static_cast<int>(w.size()) - 1;
        for (int letter = 1; letter <= maxletter; ++letter) {
            // nearest occurrence of `letter` at or left of curpos, cyclic
            int found = -1;
            for (int off = 0; off < static_cast<int>(w.size()); ++off) {
                int idx = curpos - off;
                if (idx < 0) idx += static_cast<int>(w.size());
                if (w[static_cast<size_t>(idx)] == letter) {
                    bool taken = false;
                    for (int sp : subpos)
                        if (sp == idx) taken = true;
                    if (!taken) {
                        found = idx;
                        break;
                    }
                }
            }
            if (found < 0) return -1; // content not a partition
            subpos.push_back(found);
            curpos = found;
        }
        std::vector<int> sub;
        std::vector<int> order = subpos;
        std::sort(order.begin(), order.end());
        for (int idx : order) sub.push_back(w[static_cast<size_t>(idx)]);
        charge += standard_charge(sub);
        std::vector<int> rest;
        for (int idx = 0; idx < static_cast<int>(w.size()); ++idx)
            if (std::find(subpos.begin(), subpos.end(), idx) == subpos.end())
                rest.push_back(w[static_cast<size_t>(idx)]);
        w = std::move(rest);
    }
    return charge;
}

} // namespace detail

// Kostka-Foulkes polynomial via the charge statistic over SSYT: requires mu
// to be a partition (the library sorts compositions first; this oracle is
// called on sorted content).
inline TPoly kostka_foulkes_charge(const Partition& lambda, const Partition& mu) {
    TPoly result;
    if (lambda.total() != mu.total()) return result;
    int rows = lambda.n();
    int maxv = mu.n();
    std::vector<std::vector<int>> tab(static_cast<size_t>(rows));
    std::vector<int> used(static_cast<size_t>(maxv), 0);

    std::function<void(int, int)> fill = [&](int r, int col) {
        if (r == rows) {
            // reading word: rows bottom to top, left to right
            std::vector<int> w;
            for (int rr = rows - 1; rr >= 0; --rr)
                for (int v : tab[static_cast<size_t>(rr)]) w.push_back(v);
            int c = detail::word_charge(std::move(w));
            if (c >= 0) result.add_term(c, 1);
            return;
        }
        int len = lambda[r];
        if (col == len) {
            fill(r + 1, 0);
            return;
        }
        int lo = 1;
        if (col > 0) lo = std::max(lo, tab[static_cast<size_t>(r)][static_cast<size_t>(col - 1)]);
        if (r > 0) lo = std::max(lo, tab[static_cast<size_t>(r - 1)][static_cast<size_t>(col)] + 1);
        for (int v = lo; v <= maxv; ++v) {
            if (used[static_cast<size_t>(v - 1)] >= mu[v - 1]) continue;
            used[static_cast<size_t>(v - 1)] += 1;
            tab[static_cast<size_t>(r)].push_back(v);
            fill(r, col + 1);
            tab[static_cast<size_t>(r)].pop_back();
            used[static_cast<size_t>(v - 1)] -= 1;
        }
    };
    fill(0, 0);
    return result;
}

// dim V(tau) for sl_n by the Weyl product formula.
inline long long weyl_dim_product(const Partition& tau, int n) {
    Composition t = weylpoly::zero_pad(tau, n);
    long long num = 1, den = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            num *= t[i] - t[j] + j - i;
            den *= j - i;
        }
    return num / den;
}

// Monomial basis of the degree-2r piece of P_nu as orbit sums (sums of each
// S_nu-orbit of monomials), independent of any generator presentation.
inline std::vector<MPoly> orbit_basis(const Composition& nu, int r) {
    int N = nu.total();
    std::set<Expvec> seen;
    std::vector<MPoly> out;
    std::vector<int> e(static_cast<size_t>(N), 0);
    std::function<void(int, int)> rec = [&](int k, int rem) {
        if (k == N) {
            if (rem != 0) return;
            // canonical representative: exponents sorted descending inside blocks
            Expvec canon = e;
            int off = 0;
            for (int b = 0; b < nu.n(); ++b) {
                std::sort(canon.begin() + off, canon.begin() + off + nu[b], std::greater<int>());
                off += nu[b];
            }
            if (!seen.insert(canon).second) return;
            // orbit sum: all distinct per-block permutations of canon
            MPoly orb(N);
            std::vector<std::vector<Expvec>> blockperms;
            int off2 = 0;
            for (int b = 0; b < nu.n(); ++b) {
                std::vector<int> part(canon.begin() + off2, canon.begin() + off2 + nu[b]);
                std::sort(part.begin(), part.end());
                std::vector<Expvec> alts;
                do {
                    alts.push_back(Expvec(part.begin(), part.end()));
                } while (std::next_permutation(part.begin(), part.end()));
                blockperms.push_back(std::move(alts));
                off2 += nu[b];
            }
            std::function<void(size_t, Expvec&)> build = [&](size_t b, Expvec& acc) {
                if (b == blockperms.size()) {
                    orb.add_term(acc, 1);
                    return;
                }
                for (const Expvec& alt : blockperms[b]) {
                    Expvec nxt = acc;
                    nxt.insert(nxt.end(), alt.begin(), alt.end());
                    build(b + 1, nxt);
                }
            };
            Expvec acc;
            build(0, acc);
            out.push_back(std::move(orb));
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            e[static_cast<size_t>(k)] = v;
            rec(k + 1, rem - v);
        }
        e[static_cast<size_t>(k)] = 0;
    };
    rec(0, r);
    return out;
}

// h_r of an arbitrary variable subset by direct monomial enumeration.
inline MPoly complete_direct(int N, const std::vector<int>& vars, int r) {
    MPoly p(N);
    if (r < 0) return p;
    std::function<void(size_t, int, Expvec&)> rec = [&](size_t idx, int rem, Expvec& e) {
        if (idx == vars.size()) {
            if (rem == 0) p.add_term(e, 1);
            return;
        }
        if (idx + 1 == vars.size()) {
            e[static_cast<size_t>(vars[idx] - 1)] = rem;
            p.add_term(e, 1);
            e[static_cast<size_t>(vars[idx] - 1)] = 0;
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            e[static_cast<size_t>(vars[idx] - 1)] = v;
            rec(idx + 1, rem - v, e);
            e[static_cast<size_t>(vars[idx] - 1)] = 0;
        }
    };
    if (vars.empty()) {
        if (r == 0) return MPoly::one(N);
        return p;
    }
    Expvec e(static_cast<size_t>(N), 0);
    rec(0, r, e);
    return p;
}

// Graded dimension of P_nu / I for the ideal generated in P_nu by the
// degree-truncated generator list, computed with the orbit-monomial basis
// and exact rank counts. `gens` must already be elements of P_nu.
inline TPoly quotient_graded_dim(const Composition& nu, const std::vector<MPoly>& gens,
                                 int max_half_degree) {
    TPoly dims;
    for (int r = 0; r <= max_half_degree; ++r) {
        std::vector<MPoly> span;
        for (const MPoly& g : gens) {
            if (g.is_zero()) continue;
            int gd = g.max_half_degree();
            if (gd > r) continue;
            for (const MPoly& b : orbit_basis(nu, r - gd)) span.push_back(g * b);
        }
        const std::vector<MPoly> basis = orbit_basis(nu, r);
        size_t dim_full = basis.size();
        // rank of span inside the degree-r piece
        std::map<Expvec, size_t> rows;
        for (const MPoly& s : span)
            for (auto& [e, c] : s.terms)
                rows.emplace(e, rows.size());
        weylpoly::RatMatrix m(span.size(), rows.size());
        for (size_t i = 0; i < span.size(); ++i)
            for (auto& [e, c] : span[i].terms) m.at(i, rows[e]) = BigRat(c);
        size_t rk = weylpoly::rank(std::move(m));
        long long d = static_cast<long long>(dim_full) - static_cast<long long>(rk);
        if (d != 0) dims.add_term(r, d);
    }
    return dims;
}

// Number of weak compositions of N into n parts.
inline long long stars_and_bars(int n, int N) {
    long long num = 1, den = 1;
    for (int k = 1; k <= n - 1; ++k) {
        num *= N + k;
        den *= k;
    }
    return num / den;
}

} // namespace oracle
