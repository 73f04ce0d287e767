#pragma once

// The current algebra generators E_{i,j}, F_{i,j}, H_{i,j} acting on the
// direct sum of the block-symmetric rings P_nu, plus the brute-force
// verification of the defining relations on graded bases.

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <weylpoly/blocksym.hpp>
#include <weylpoly/combinat.hpp>
#include <weylpoly/mpoly.hpp>
#include <weylpoly/report.hpp>
#include <weylpoly/theta.hpp>

namespace weylpoly {

struct WeightVector {
    Composition nu = Composition::empty();
    MPoly p;

    static WeightVector vacuum() { return WeightVector{}; }

    bool is_zero() const { return nu.is_empty() || p.is_zero(); }

    bool operator==(const WeightVector& o) const {
        if (is_zero() && o.is_zero()) return true;
        if (is_zero() != o.is_zero()) return false;
        return nu == o.nu && p == o.p;
    }
    bool operator!=(const WeightVector& o) const { return !(*this == o); }
};

struct GeneratorSymbol {
    char kind = 'H'; // 'E' | 'F' | 'H'
    int i = 1;
    int j = 0;
};

inline WeightVector apply_F(int i, int j, const WeightVector& v) {
    if (v.is_zero()) return WeightVector::vacuum();
    const Composition& nu = v.nu;
    Refinement r = refine_minus(nu, i);
    if (!r.valid) return WeightVector::vacuum();
    int N = nu.total();
    Composition tgt = add_root(nu, i, -1);
    std::vector<MPoly> q =
        free_decompose(v.p, r.sep_var, tgt, rank_minus_over_target(nu, i));
    MPoly out = MPoly::zero(N);
    for (size_t m = 0; m < q.size(); ++m) {
        if (q[m].is_zero()) continue;
        MPoly img = MPoly::zero(N);
        for (int l = 0; l <= nu[i - 1] - 1; ++l) {
            int hidx = static_cast<int>(m) + j + nu[i - 1] - nu[i] - 1 - l;
            MPoly term = gen_poly('e', l, tgt, i) * gen_poly('h', hidx, tgt, i + 1);
            if (l % 2 == 1) term = -term;
            img += term;
        }
        out += q[m] * img;
    }
    if (norm_sign(i, nu) < 0) out = -out;
    return WeightVector{tgt, std::move(out)};
}

inline WeightVector apply_E(int i, int j, const WeightVector& v) {
    if (v.is_zero()) return WeightVector::vacuum();
    const Composition& nu = v.nu;
    Refinement r = refine_plus(nu, i);
    if (!r.valid) return WeightVector::vacuum();
    int N = nu.total();
    Composition tgt = add_root(nu, i, +1);
    std::vector<MPoly> q =
        free_decompose(v.p, r.sep_var, tgt, rank_plus_over_target(nu, i));
    MPoly out = MPoly::zero(N);
    for (size_t m = 0; m < q.size(); ++m) {
        if (q[m].is_zero()) continue;
        MPoly img = MPoly::zero(N);
        for (int l = 0; l <= nu[i] - 1; ++l) {
            int hidx = static_cast<int>(m) + j + nu[i] - nu[i - 1] - 1 - l;
            MPoly term = gen_poly('e', l, tgt, i + 1) * gen_poly('h', hidx, tgt, i);
            if (l % 2 == 1) term = -term;
            img += term;
        }
        out += q[m] * img;
    }
    if (norm_sign(i, nu) < 0) out = -out;
    return WeightVector{tgt, std::move(out)};
}

inline WeightVector apply_H(int i, int j, const WeightVector& v) {
    if (v.is_zero()) return WeightVector::vacuum();
    const Composition& nu = v.nu;
    int N = nu.total();
    if (j == 0) {
        BigInt wt = nu[i - 1] - nu[i];
        return WeightVector{nu, v.p * wt};
    }
    MPoly mult = gen_poly('p', j, nu, i) - gen_poly('p', j, nu, i + 1);
    return WeightVector{nu, v.p * mult};
}

inline WeightVector apply_generator(const GeneratorSymbol& g, const WeightVector& v) {
    switch (g.kind) {
        case 'E': return apply_E(g.i, g.j, v);
        case 'F': return apply_F(g.i, g.j, v);
        case 'H': return apply_H(g.i, g.j, v);
        default: throw std::invalid_argument("apply_generator: unknown kind");
    }
}

// Rightmost symbol acts first.
inline WeightVector apply_word(const std::vector<GeneratorSymbol>& word,
                               const WeightVector& v) {
    WeightVector cur = v;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (cur.is_zero()) return WeightVector::vacuum();
        cur = apply_generator(*it, cur);
    }
    return cur;
}

namespace detail {

inline WeightVector wv_add(const WeightVector& a, const WeightVector& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.nu != b.nu) throw std::invalid_argument("wv_add: weight mismatch");
    return WeightVector{a.nu, a.p + b.p};
}

inline WeightVector wv_scale(const BigInt& c, const WeightVector& a) {
    if (a.is_zero() || c == 0) return WeightVector::vacuum();
    return WeightVector{a.nu, a.p * c};
}

inline WeightVector wv_sub(const WeightVector& a, const WeightVector& b) {
    return wv_add(a, wv_scale(-1, b));
}

inline std::string wv_str(const WeightVector& v) {
    return "(" + v.nu.str() + "; " + v.p.str() + ")";
}

} // namespace detail

inline int cartan_entry(int i, int j) {
    if (i == j) return 2;
    if (i == j + 1 || i == j - 1) return -1;
    return 0;
}

// Brute-force check of the defining relations C1-C5 on all graded basis
// elements of every P_nu, nu in P(n,N), half-degree <= cutoff, t-degrees
// <= jmax. Failures are reported with the first witness, never corrected.
inline CheckReport verify_current_relations(int n, int N, int cutoff, int jmax) {
    using detail::wv_str;
    using detail::wv_sub;
    CheckReport report;
    {
        std::ostringstream name;
        name << "current(n=" << n << ",N=" << N << ",cutoff=" << cutoff
             << ",jmax=" << jmax << ")";
        report.suite = name.str();
    }

    std::vector<WeightVector> inputs;
    for (const Composition& nu : enumerate_compositions(n, N))
        for (int r = 0; r <= cutoff; ++r)
            for (const MPoly& b : graded_basis(nu, r)) inputs.push_back(WeightVector{nu, b});

    auto check = [&](const std::string& name,
                     const std::function<std::string()>& body) {
        CheckResult res;
        res.name = name;
        res.witness = body();
        res.pass = res.witness.empty();
        report.checks.push_back(std::move(res));
    };

    auto E = [](int i, int j) {
        return [i, j](const WeightVector& v) { return apply_E(i, j, v); };
    };
    auto F = [](int i, int j) {
        return [i, j](const WeightVector& v) { return apply_F(i, j, v); };
    };
    auto H = [](int i, int j) {
        return [i, j](const WeightVector& v) { return apply_H(i, j, v); };
    };
    using Op = std::function<WeightVector(const WeightVector&)>;
    auto commut = [](const Op& a, const Op& b, const WeightVector& v) {
        return detail::wv_sub(a(b(v)), b(a(v)));
    };

    check("C1 [H,H]=0", [&]() -> std::string {
        for (int i = 1; i < n; ++i)
            for (int j = 1; j < n; ++j)
                for (int r = 0; r <= jmax; ++r)
                    for (int s = 0; s <= jmax; ++s)
                        for (const WeightVector& v : inputs) {
                            WeightVector lhs = commut(H(i, r), H(j, s), v);
                            if (!lhs.is_zero()) {
                                std::ostringstream w;
                                w << "i=" << i << " j=" << j << " r=" << r << " s=" << s
                                  << " v=" << wv_str(v) << " -> " << wv_str(lhs);
                                return w.str();
                            }
                        }
        return "";
    });

    check("C2 [H,E]=a*E and [H,F]=-a*F", [&]() -> std::string {
        for (int i = 1; i < n; ++i)
            for (int j = 1; j < n; ++j) {
                int a = cartan_entry(i, j);
                for (int r = 0; r <= jmax; ++r)
                    for (int s = 0; s <= jmax; ++s)
                        for (const WeightVector& v : inputs) {
                            WeightVector le = commut(H(i, r), E(j, s), v);
                            WeightVector re = detail::wv_scale(a, apply_E(j, r + s, v));
                            if (le != re) {
                                std::ostringstream w;
                                w << "E-case i=" << i << " j=" << j << " r=" << r
                                  << " s=" << s << " v=" << wv_str(v);
                                return w.str();
                            }
                            WeightVector lf = commut(H(i, r), F(j, s), v);
                            WeightVector rf = detail::wv_scale(-a, apply_F(j, r + s, v));
                            if (lf != rf) {
                                std::ostringstream w;
                                w << "F-case i=" << i << " j=" << j << " r=" << r
                                  << " s=" << s << " v=" << wv_str(v);
                                return w.str();
                            }
                        }
            }
        return "";
    });

    check("C3 [X_{i,r+1},X_{j,s}]=[X_{i,r},X_{j,s+1}]", [&]() -> std::string {
        for (int i = 1; i < n; ++i)
            for (int j = 1; j < n; ++j)
                for (int r = 0; r + 1 <= jmax; ++r)
                    for (int s = 0; s + 1 <= jmax; ++s)
                        for (const WeightVector& v : inputs) {
                            WeightVector le = wv_sub(commut(E(i, r + 1), E(j, s), v),
                                                     commut(E(i, r), E(j, s + 1), v));
                            if (!le.is_zero()) {
                                std::ostringstream w;
                                w << "E-case i=" << i << " j=" << j << " r=" << r
                                  << " s=" << s << " v=" << wv_str(v);
                                return w.str();
                            }
                            WeightVector lf = wv_sub(commut(F(i, r + 1), F(j, s), v),
                                                     commut(F(i, r), F(j, s + 1), v));
                            if (!lf.is_zero()) {
                                std::ostringstream w;
                                w << "F-case i=" << i << " j=" << j << " r=" << r
                                  << " s=" << s << " v=" << wv_str(v);
                                return w.str();
                            }
                        }
        return "";
    });

    check("C4 [E_{i,r},F_{j,s}]=delta_{ij}H_{i,r+s}", [&]() -> std::string {
        for (int i = 1; i < n; ++i)
            for (int j = 1; j < n; ++j)
                for (int r = 0; r <= jmax; ++r)
                    for (int s = 0; s <= jmax; ++s)
                        for (const WeightVector& v : inputs) {
                            WeightVector lhs = commut(E(i, r), F(j, s), v);
                            WeightVector rhs = (i == j) ? apply_H(i, r + s, v)
                                                        : WeightVector::vacuum();
                            if (lhs != rhs) {
                                std::ostringstream w;
                                w << "i=" << i << " j=" << j << " r=" << r << " s=" << s
                                  << " v=" << wv_str(v) << " lhs=" << wv_str(lhs)
                                  << " rhs=" << wv_str(rhs);
                                return w.str();
                            }
                        }
        return "";
    });

    check("C5 Serre m=2, t-degree 0", [&]() -> std::string {
        for (int i = 1; i < n; ++i)
            for (int j = 1; j < n; ++j) {
                if (cartan_entry(i, j) != -1) continue;
                for (const WeightVector& v : inputs) {
                    WeightVector se = wv_sub(
                        detail::wv_add(apply_E(i, 0, apply_E(i, 0, apply_E(j, 0, v))),
                                       apply_E(j, 0, apply_E(i, 0, apply_E(i, 0, v)))),
                        detail::wv_scale(2, apply_E(i, 0, apply_E(j, 0, apply_E(i, 0, v)))));
                    if (!se.is_zero()) {
                        std::ostringstream w;
                        w << "E-case i=" << i << " j=" << j << " v=" << wv_str(v);
                        return w.str();
                    }
                    WeightVector sf = wv_sub(
                        detail::wv_add(apply_F(i, 0, apply_F(i, 0, apply_F(j, 0, v))),
                                       apply_F(j, 0, apply_F(i, 0, apply_F(i, 0, v)))),
                        detail::wv_scale(2, apply_F(i, 0, apply_F(j, 0, apply_F(i, 0, v)))));
                    if (!sf.is_zero()) {
                        std::ostringstream w;
                        w << "F-case i=" << i << " j=" << j << " v=" << wv_str(v);
                        return w.str();
                    }
                }
            }
        return "";
    });

    return report;
}

} // namespace weylpoly
