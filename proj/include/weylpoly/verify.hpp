#pragma once

// Consolidated property suites behind the `verify` subcommand. Each suite
// maps one to one onto a module's invariants; grids are exact in (n, N),
// nothing is sampled. Every check reports its first failing witness and is
// never corrected silently.

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <weylpoly/blocksym.hpp>
#include <weylpoly/coinvariants.hpp>
#include <weylpoly/combinat.hpp>
#include <weylpoly/current.hpp>
#include <weylpoly/kostka.hpp>
#include <weylpoly/linalg.hpp>
#include <weylpoly/mpoly.hpp>
#include <weylpoly/report.hpp>
#include <weylpoly/theta.hpp>
#include <weylpoly/weylchar.hpp>

namespace weylpoly {

namespace detail {

inline std::string suite_name(const char* base, int n, int N, int cutoff, int jmax) {
    std::ostringstream s;
    s << base << "(n=" << n << ",N=" << N << ",cutoff=" << cutoff << ",jmax=" << jmax
      << ")";
    return s.str();
}

class SuiteTimer {
  public:
    explicit SuiteTimer(CheckReport& r)
        : report_(r), start_(std::chrono::steady_clock::now()) {}
    ~SuiteTimer() {
        auto stop = std::chrono::steady_clock::now();
        report_.wall_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(stop - start_).count();
    }
    SuiteTimer(const SuiteTimer&) = delete;
    SuiteTimer& operator=(const SuiteTimer&) = delete;

  private:
    CheckReport& report_;
    std::chrono::steady_clock::time_point start_;
};

inline void add_check(CheckReport& rep, const std::string& name,
                      const std::function<std::string()>& body) {
    CheckResult res;
    res.name = name;
    res.witness = body();
    res.pass = res.witness.empty();
    rep.checks.push_back(std::move(res));
}

inline Composition shifted(const Composition& c, int m) {
    std::vector<int> p(c.parts);
    for (int& x : p) x += m;
    return Composition(p);
}

// Slot-wise homogeneity of a two-leg tensor: slot m must be homogeneous of
// half-degree total - m (or zero).
inline bool slots_homogeneous(const Tensor2& x, const TensorContext& c, int total) {
    std::vector<MPoly> slots = tensor_slots(x, c);
    for (size_t m = 0; m < slots.size(); ++m) {
        if (slots[m].is_zero()) continue;
        int d = total - static_cast<int>(m);
        if (d < 0 || !slots[m].is_homogeneous(d)) return false;
    }
    return true;
}

} // namespace detail

// ------------------------------------------------------------------ theta --

// `only` restricts the run to the named checks; empty means the full suite.
inline CheckReport verify_theta(int n, int N, int cutoff, int jmax,
                                const std::vector<std::string>& only) {
    CheckReport rep;
    rep.suite = detail::suite_name("theta", n, N, cutoff, jmax);
    detail::SuiteTimer timer(rep);

    const std::vector<Composition> comps = enumerate_compositions(n, N);
    const int xmax = cutoff;

    auto check = [&](const std::string& name,
                     const std::function<std::string()>& body) {
        if (!only.empty() &&
            std::find(only.begin(), only.end(), name) == only.end())
            return;
        detail::add_check(rep, name, body);
    };
    auto pure = [N](const TensorContext& c, int r1, int r2) {
        return tensor_of(MPoly::var(N, c.left_sep, r1), MPoly::var(N, c.right_sep, r2));
    };
    auto spot = [](const char* tag, const Composition& nu, int i, int j, int r1,
                   int r2) {
        std::ostringstream w;
        w << tag << " nu=(" << nu.str() << ") i=" << i;
        if (j >= 0) w << " j=" << j;
        if (r1 >= 0) w << " r1=" << r1;
        if (r2 >= 0) w << " r2=" << r2;
        return w.str();
    };

    check("Grassmannian bubble equations", [&]() -> std::string {
        for (const Composition& nu : comps)
            for (int i = 1; i < n; ++i)
                for (int r = 0; r <= 5; ++r) {
                    MPoly acc = MPoly::zero(N);
                    for (int a = 0; a <= r; ++a)
                        acc += bubble_image(i, nu, a, BubbleDir::cw) *
                               bubble_image(i, nu, r - a, BubbleDir::ccw);
                    MPoly want = (r == 0) ? MPoly::one(N) : MPoly::zero(N);
                    if (acc != want) return spot("convolution", nu, i, -1, r, -1);
                }
        return "";
    });

    check("snake identities", [&]() -> std::string {
        for (const Composition& nu : comps)
            for (int i = 1; i < n; ++i) {
                Refinement rp = refine_plus(nu, i);
                if (rp.valid) {
                    Composition mu = add_root(nu, i, +1);
                    int top = nu[i - 1];
                    int sg = norm_sign(i, nu);
                    for (int m = 0; m <= xmax; ++m) {
                        MPoly x = MPoly::var(N, rp.sep_var, m);
                        MPoly acc1 = MPoly::zero(N), acc2 = MPoly::zero(N);
                        for (int s = 0; s <= top; ++s) {
                            const MPoly& e = gen_poly('e', top - s, nu, i);
                            MPoly c1 =
                                cap_fe_image(i, mu,
                                             tensor_of(x, MPoly::var(N, rp.sep_var, s))) *
                                e;
                            MPoly c2 = MPoly::var(N, rp.sep_var, s) *
                                       cap_fe_image(i, mu, tensor_of(e, x));
                            if (((top - s) % 2 == 1) == (sg > 0)) {
                                c1 = -c1;
                                c2 = -c2;
                            }
                            acc1 += c1;
                            acc2 += c2;
                        }
                        if (acc1 != x) return spot("left snake on E", nu, i, -1, m, -1);
                        if (acc2 != x) return spot("right snake on E", nu, i, -1, m, -1);
                    }
                }
                Refinement rm = refine_minus(nu, i);
                if (rm.valid) {
                    Composition mu = add_root(nu, i, -1);
                    int top = nu[i];
                    for (int m = 0; m <= xmax; ++m) {
                        MPoly x = MPoly::var(N, rm.sep_var, m);
                        MPoly acc1 = MPoly::zero(N), acc2 = MPoly::zero(N);
                        for (int s = 0; s <= top; ++s) {
                            const MPoly& e = gen_poly('e', top - s, nu, i + 1);
                            MPoly c1 =
                                cap_ef_image(i, mu,
                                             tensor_of(x, MPoly::var(N, rm.sep_var, s))) *
                                e;
                            MPoly c2 = MPoly::var(N, rm.sep_var, s) *
                                       cap_ef_image(i, mu, tensor_of(e, x));
                            if ((top - s) % 2 == 1) {
                                c1 = -c1;
                                c2 = -c2;
                            }
                            acc1 += c1;
                            acc2 += c2;
                        }
                        if (acc1 != x) return spot("left snake on F", nu, i, -1, m, -1);
                        if (acc2 != x) return spot("right snake on F", nu, i, -1, m, -1);
                    }
                }
            }
        return "";
    });

    check("nilHecke square is zero", [&]() -> std::string {
        for (const Composition& nu : comps)
            for (int i = 1; i < n; ++i) {
                TensorContext up = ee_context(i, i, nu);
                if (up.valid)
                    for (int r1 = 0; r1 <= xmax; ++r1)
                        for (int r2 = 0; r2 <= xmax; ++r2) {
                            Tensor2 y = crossing_up_image(
                                i, i, nu, crossing_up_image(i, i, nu, pure(up, r1, r2)));
                            if (!tensor_is_zero(y, up))
                                return spot("up", nu, i, -1, r1, r2);
                        }
                TensorContext dn = ff_context(i, i, nu);
                if (dn.valid)
                    for (int r1 = 0; r1 <= xmax; ++r1)
                        for (int r2 = 0; r2 <= xmax; ++r2) {
                            Tensor2 y = crossing_down_image(
                                i, i, nu, crossing_down_image(i, i, nu, pure(dn, r1, r2)));
                            if (!tensor_is_zero(y, dn))
                                return spot("down", nu, i, -1, r1, r2);
                        }
            }
        return "";
    });

    check("dotted nilHecke relations", [&]() -> std::string {
        for (const Composition& nu : comps)
            for (int i = 1; i < n; ++i) {
                TensorContext up = ee_context(i, i, nu);
                if (up.valid) {
                    MPoly u = MPoly::var(N, up.left_sep, 1);
                    MPoly v = MPoly::var(N, up.right_sep, 1);
                    for (int r1 = 0; r1 <= xmax; ++r1)
                        for (int r2 = 0; r2 <= xmax; ++r2) {
                            Tensor2 x = pure(up, r1, r2);
                            Tensor2 px = crossing_up_image(i, i, nu, x);
                            Tensor2 a = crossing_up_image(i, i, nu, x.mul_left(u)) -
                                        px.mul_right(v);
                            Tensor2 b = px.mul_left(u) -
                                        crossing_up_image(i, i, nu, x.mul_right(v));
                            if (!tensors_equal(a, x, up))
                                return spot("up left-dot", nu, i, -1, r1, r2);
                            if (!tensors_equal(b, x, up))
                                return spot("up right-dot", nu, i, -1, r1, r2);
                        }
                }
                TensorContext dn = ff_context(i, i, nu);
                if (dn.valid) {
                    MPoly u = MPoly::var(N, dn.left_sep, 1);
                    MPoly v = MPoly::var(N, dn.right_sep, 1);
                    for (int r1 = 0; r1 <= xmax; ++r1)
                        for (int r2 = 0; r2 <= xmax; ++r2) {
                            Tensor2 x = pure(dn, r1, r2);
                            Tensor2 px = crossing_down_image(i, i, nu, x);
                            Tensor2 a = crossing_down_image(i, i, nu, x.mul_right(v)) -
                                        px.mul_left(u);
                            Tensor2 b = px.mul_right(v) -
                                        crossing_down_image(i, i, nu, x.mul_left(u));
                            if (!tensors_equal(a, x, dn))
                                return spot("down right-dot", nu, i, -1, r1, r2);
                            if (!tensors_equal(b, x, dn))
                                return spot("down left-dot", nu, i, -1, r1, r2);
                        }
                }
            }
        return "";
    });

    check("dot slide through double crossing", [&]() -> std::string {
        const int rmax = std::min(xmax, 2);
        for (const Composition& nu : comps)
            for (int i = 1; i < n; ++i) {
                TensorContext c = ee_context(i, i, nu);
                if (!c.valid) continue;
                auto psi = [&](const Tensor2& t) {
                    return crossing_up_image(i, i, nu, t);
                };
                for (int k = 0; k + 0 <= 4; ++k)
                    for (int l = 0; k + l <= 4; ++l) {
                        if (k + l == 0) continue;
                        // signed exponents of the divided difference of u^k v^l
                        std::vector<std::tuple<int, int, int>> dd;
                        for (int s = 0; s < k; ++s) dd.emplace_back(k + l - 1 - s, s, +1);
                        for (int s = 0; s < l; ++s) dd.emplace_back(k + l - 1 - s, s, -1);
                        auto apply_dd = [&](const Tensor2& t) {
                            Tensor2 acc = Tensor2::zero(N);
                            for (const auto& [a, b, sg] : dd) {
                                Tensor2 term = t.mul_left(MPoly::var(N, c.left_sep, a))
                                                   .mul_right(MPoly::var(N, c.right_sep, b));
                                acc = (sg > 0) ? acc + term : acc - term;
                            }
                            return acc;
                        };
                        for (int r1 = 0; r1 <= rmax; ++r1)
                            for (int r2 = 0; r2 <= rmax; ++r2) {
                                Tensor2 x = pure(c, r1, r2);
                                Tensor2 px = psi(x);
                                Tensor2 lhs =
                                    psi(px.mul_left(MPoly::var(N, c.left_sep, k))
                                            .mul_right(MPoly::var(N, c.right_sep, l)));
                                Tensor2 mid = apply_dd(px);
                                Tensor2 rhs = psi(apply_dd(x));
                                if (!tensors_equal(lhs, mid, c) ||
                                    !tensors_equal(mid, rhs, c)) {
                                    std::ostringstream w;
                                    w << "nu=(" << nu.str() << ") i=" << i << " k=" << k
                                      << " l=" << l << " r1=" << r1 << " r2=" << r2;
                                    return w.str();
                                }
                            }
                    }
            }
        return "";
    });

    check("pitchfork naturality", [&]() -> std::string {
        for (const Composition& nu : comps)
            for (int i = 1; i < n; ++i)
                for (int j = 1; j < n; ++j) {
                    if (i == j) continue;
                    {
                        TensorContext src = ee_context(i, j, nu);
                        TensorContext dst = ee_context(j, i, nu);
                        if (src.valid && dst.valid) {
                            MPoly ui = MPoly::var(N, src.left_sep, 1);
                            MPoly vi = MPoly::var(N, src.right_sep, 1);
                            MPoly lo = MPoly::var(N, dst.left_sep, 1);
                            MPoly ro = MPoly::var(N, dst.right_sep, 1);
                            for (int r1 = 0; r1 <= xmax; ++r1)
                                for (int r2 = 0; r2 <= xmax; ++r2) {
                                    Tensor2 x = pure(src, r1, r2);
                                    Tensor2 px = crossing_up_image(i, j, nu, x);
                                    if (!tensors_equal(
                                            crossing_up_image(i, j, nu, x.mul_left(ui)),
                                            px.mul_right(ro), dst))
                                        return spot("up left-strand", nu, i, j, r1, r2);
                                    if (!tensors_equal(
                                            crossing_up_image(i, j, nu, x.mul_right(vi)),
                                            px.mul_left(lo), dst))
                                        return spot("up right-strand", nu, i, j, r1, r2);
                                }
                        }
                    }
                    {
                        TensorContext src = ff_context(i, j, nu);
                        TensorContext dst = ff_context(j, i, nu);
                        if (src.valid && dst.valid) {
                            MPoly ui = MPoly::var(N, src.left_sep, 1);
                            MPoly vi = MPoly::var(N, src.right_sep, 1);
                            MPoly lo = MPoly::var(N, dst.left_sep, 1);
                            MPoly ro = MPoly::var(N, dst.right_sep, 1);
                            for (int r1 = 0; r1 <= xmax; ++r1)
                                for (int r2 = 0; r2 <= xmax; ++r2) {
                                    Tensor2 x = pure(src, r1, r2);
                                    Tensor2 px = crossing_down_image(i, j, nu, x);
                                    if (!tensors_equal(
                                            crossing_down_image(i, j, nu, x.mul_left(ui)),
                                            px.mul_right(ro), dst))
                                        return spot("down left-strand", nu, i, j, r1, r2);
                                    if (!tensors_equal(
                                            crossing_down_image(i, j, nu, x.mul_right(vi)),
                                            px.mul_left(lo), dst))
                                        return spot("down right-strand", nu, i, j, r1, r2);
                                }
                        }
                    }
                }
        return "";
    });

    check("distant and adjacent square relations",
                      [&]() -> std::string {
        for (const Composition& nu : comps)
            for (int i = 1; i < n; ++i)
                for (int j = 1; j < n; ++j) {
                    if (i == j) continue;
                    int a = cartan_entry(i, j);
                    {
                        TensorContext src = ee_context(i, j, nu);
                        TensorContext dst = ee_context(j, i, nu);
                        if (src.valid && dst.valid)
                            for (int r1 = 0; r1 <= xmax; ++r1)
                                for (int r2 = 0; r2 <= xmax; ++r2) {
                                    Tensor2 x = pure(src, r1, r2);
                                    Tensor2 y = crossing_up_image(
                                        j, i, nu, crossing_up_image(i, j, nu, x));
                                    Tensor2 ml =
                                        x.mul_left(MPoly::var(N, src.left_sep, 1));
                                    Tensor2 mr =
                                        x.mul_right(MPoly::var(N, src.right_sep, 1));
                                    Tensor2 want = (a == 0)  ? x
                                                   : (i < j) ? ml - mr
                                                             : mr - ml;
                                    if (!tensors_equal(y, want, src))
                                        return spot("up", nu, i, j, r1, r2);
                                }
                    }
                    {
                        TensorContext src = ff_context(i, j, nu);
                        TensorContext dst = ff_context(j, i, nu);
                        if (src.valid && dst.valid)
                            for (int r1 = 0; r1 <= xmax; ++r1)
                                for (int r2 = 0; r2 <= xmax; ++r2) {
                                    Tensor2 x = pure(src, r1, r2);
                                    Tensor2 y = crossing_down_image(
                                        j, i, nu, crossing_down_image(i, j, nu, x));
                                    Tensor2 ml =
                                        x.mul_left(MPoly::var(N, src.left_sep, 1));
                                    Tensor2 mr =
                                        x.mul_right(MPoly::var(N, src.right_sep, 1));
                                    Tensor2 want = (a == 0)  ? x
                                                   : (i < j) ? ml - mr
                                                             : mr - ml;
                                    if (!tensors_equal(y, want, src))
                                        return spot("down", nu, i, j, r1, r2);
                                }
                    }
                }
        return "";
    });

    check("pi polynomial identity", [&]() -> std::string {
        for (const Composition& nu : comps)
            for (int i = 1; i < n; ++i)
                for (int j = 0; j <= jmax; ++j) {
                    MPoly lhs = pi_image(i, j, nu);
                    MPoly rhs = MPoly::zero(N);
                    if (j == 0) {
                        rhs = MPoly::constant(N, nu[i - 1] - nu[i]);
                    } else {
                        rhs = gen_poly('p', j, nu, i) - gen_poly('p', j, nu, i + 1);
                    }
                    if (lhs != rhs) return spot("pi", nu, i, j, -1, -1);
                }
        return "";
    });

    check("degree audit", [&]() -> std::string {
        const int rmax = std::min(xmax, 2);
        for (const Composition& nu : comps) {
            for (int i = 1; i < n; ++i) {
                TensorContext ef = ef_context(i, nu);
                if (ef.valid) {
                    if (!detail::slots_homogeneous(cup_ef_image(i, nu), ef,
                                                   cup_ef_shift(nu, i) / 2))
                        return spot("cup on EF", nu, i, -1, -1, -1);
                    for (int r1 = 0; r1 <= rmax; ++r1)
                        for (int r2 = 0; r2 <= rmax; ++r2) {
                            MPoly out = cap_ef_image(i, nu, pure(ef, r1, r2));
                            int d = r1 + r2 + cap_ef_shift(nu, i) / 2;
                            if (!out.is_zero() && (d < 0 || !out.is_homogeneous(d)))
                                return spot("cap on EF", nu, i, -1, r1, r2);
                        }
                }
                TensorContext fe = fe_context(i, nu);
                if (fe.valid) {
                    if (!detail::slots_homogeneous(cup_fe_image(i, nu), fe,
                                                   cup_fe_shift(nu, i) / 2))
                        return spot("cup on FE", nu, i, -1, -1, -1);
                    for (int r1 = 0; r1 <= rmax; ++r1)
                        for (int r2 = 0; r2 <= rmax; ++r2) {
                            MPoly out = cap_fe_image(i, nu, pure(fe, r1, r2));
                            int d = r1 + r2 + cap_fe_shift(nu, i) / 2;
                            if (!out.is_zero() && (d < 0 || !out.is_homogeneous(d)))
                                return spot("cap on FE", nu, i, -1, r1, r2);
                        }
                }
                for (int r = 0; r <= 5; ++r) {
                    MPoly cw = bubble_image(i, nu, r, BubbleDir::cw);
                    MPoly ccw = bubble_image(i, nu, r, BubbleDir::ccw);
                    if (!cw.is_zero() && !cw.is_homogeneous(r))
                        return spot("cw bubble", nu, i, -1, r, -1);
                    if (!ccw.is_zero() && !ccw.is_homogeneous(r))
                        return spot("ccw bubble", nu, i, -1, r, -1);
                }
                for (int j = 1; j <= jmax; ++j) {
                    MPoly p = pi_image(i, j, nu);
                    if (!p.is_zero() && !p.is_homogeneous(j))
                        return spot("pi", nu, i, j, -1, -1);
                }
            }
            for (int i = 1; i < n; ++i)
                for (int j = 1; j < n; ++j) {
                    TensorContext usrc = ee_context(i, j, nu);
                    TensorContext udst = ee_context(j, i, nu);
                    if (usrc.valid && udst.valid)
                        for (int r1 = 0; r1 <= rmax; ++r1)
                            for (int r2 = 0; r2 <= rmax; ++r2) {
                                Tensor2 y =
                                    crossing_up_image(i, j, nu, pure(usrc, r1, r2));
                                if (!detail::slots_homogeneous(
                                        y, udst, r1 + r2 + crossing_up_shift(i, j) / 2))
                                    return spot("up crossing", nu, i, j, r1, r2);
                            }
                    TensorContext dsrc = ff_context(i, j, nu);
                    TensorContext ddst = ff_context(j, i, nu);
                    if (dsrc.valid && ddst.valid)
                        for (int r1 = 0; r1 <= rmax; ++r1)
                            for (int r2 = 0; r2 <= rmax; ++r2) {
                                Tensor2 y =
                                    crossing_down_image(i, j, nu, pure(dsrc, r1, r2));
                                if (!detail::slots_homogeneous(
                                        y, ddst, r1 + r2 + crossing_down_shift(i, j) / 2))
                                    return spot("down crossing", nu, i, j, r1, r2);
                            }
                }
        }
        return "";
    });

    return rep;
}

inline CheckReport verify_theta(int n, int N, int cutoff, int jmax) {
    return verify_theta(n, N, cutoff, jmax, {});
}

// ---------------------------------------------------------------- current --

inline CheckReport verify_current(int n, int N, int cutoff, int jmax) {
    CheckReport rep;
    rep.suite = detail::suite_name("current", n, N, cutoff, jmax);
    detail::SuiteTimer timer(rep);

    {
        CheckReport rel = verify_current_relations(n, N, cutoff, jmax);
        for (CheckResult& c : rel.checks) rep.checks.push_back(std::move(c));
    }

    const std::vector<Composition> comps = enumerate_compositions(n, N);

    detail::add_check(rep, "weight grading and Cartan scalar", [&]() -> std::string {
        for (const Composition& nu : comps)
            for (int r = 0; r <= cutoff; ++r)
                for (const MPoly& b : graded_basis(nu, r)) {
                    WeightVector v{nu, b};
                    for (int i = 1; i < n; ++i) {
                        int wt = nu[i - 1] - nu[i];
                        WeightVector h0 = apply_H(i, 0, v);
                        if (h0.p != b * BigInt(wt)) {
                            std::ostringstream w;
                            w << "H_{" << i << ",0} is not the weight scalar at nu=("
                              << nu.str() << ")";
                            return w.str();
                        }
                        bool can_raise = refine_plus(nu, i).valid;
                        bool can_lower = refine_minus(nu, i).valid;
                        for (int j = 0; j <= jmax; ++j) {
                            WeightVector h = apply_H(i, j, v);
                            if (!h.is_zero() && h.nu != nu) {
                                std::ostringstream w;
                                w << "H_{" << i << "," << j << "} moved the weight at nu=("
                                  << nu.str() << ")";
                                return w.str();
                            }
                            WeightVector e = apply_E(i, j, v);
                            if (!e.is_zero() &&
                                (!can_raise || e.nu != add_root(nu, i, +1))) {
                                std::ostringstream w;
                                w << "E_{" << i << "," << j
                                  << "} landed off-weight at nu=(" << nu.str() << ")";
                                return w.str();
                            }
                            WeightVector f = apply_F(i, j, v);
                            if (!f.is_zero() &&
                                (!can_lower || f.nu != add_root(nu, i, -1))) {
                                std::ostringstream w;
                                w << "F_{" << i << "," << j
                                  << "} landed off-weight at nu=(" << nu.str() << ")";
                                return w.str();
                            }
                        }
                    }
                }
        return "";
    });

    detail::add_check(rep, "degree shifts", [&]() -> std::string {
        for (const Composition& nu : comps)
            for (int r = 0; r <= cutoff; ++r)
                for (const MPoly& b : graded_basis(nu, r)) {
                    WeightVector v{nu, b};
                    for (int i = 1; i < n; ++i) {
                        int wt = nu[i - 1] - nu[i];
                        for (int j = 0; j <= jmax; ++j) {
                            WeightVector f = apply_F(i, j, v);
                            if (!f.is_zero()) {
                                int d = r + j + wt - 1;
                                if (d < 0 || !f.p.is_homogeneous(d)) {
                                    std::ostringstream w;
                                    w << "F_{" << i << "," << j << "} at nu=(" << nu.str()
                                      << ") degree " << r;
                                    return w.str();
                                }
                            }
                            WeightVector e = apply_E(i, j, v);
                            if (!e.is_zero()) {
                                int d = r + j - wt - 1;
                                if (d < 0 || !e.p.is_homogeneous(d)) {
                                    std::ostringstream w;
                                    w << "E_{" << i << "," << j << "} at nu=(" << nu.str()
                                      << ") degree " << r;
                                    return w.str();
                                }
                            }
                            WeightVector h = apply_H(i, j, v);
                            if (!h.is_zero() && !h.p.is_homogeneous(r + j)) {
                                std::ostringstream w;
                                w << "H_{" << i << "," << j << "} at nu=(" << nu.str()
                                  << ") degree " << r;
                                return w.str();
                            }
                        }
                    }
                }
        return "";
    });

    detail::add_check(rep, "linearity over the target ring", [&]() -> std::string {
        const int rmax = std::min(cutoff, 2);
        for (const Composition& nu : comps)
            for (int i = 1; i < n; ++i)
                for (int sign : {-1, +1}) {
                    Refinement ref =
                        (sign < 0) ? refine_minus(nu, i) : refine_plus(nu, i);
                    if (!ref.valid) continue;
                    Composition tgt = add_root(nu, i, sign);
                    std::vector<MPoly> qs;
                    for (int bl = 1; bl <= n; ++bl)
                        for (int qr = 1; qr <= 2; ++qr) {
                            const MPoly& q = gen_poly('e', qr, tgt, bl);
                            if (!q.is_zero()) qs.push_back(q);
                        }
                    for (int r = 0; r <= rmax; ++r)
                        for (const MPoly& b : graded_basis(nu, r))
                            for (int j = 0; j <= jmax; ++j)
                                for (const MPoly& q : qs) {
                                    WeightVector lhs =
                                        (sign < 0) ? apply_F(i, j, WeightVector{nu, q * b})
                                                   : apply_E(i, j, WeightVector{nu, q * b});
                                    WeightVector base =
                                        (sign < 0) ? apply_F(i, j, WeightVector{nu, b})
                                                   : apply_E(i, j, WeightVector{nu, b});
                                    MPoly want =
                                        base.is_zero() ? MPoly::zero(N) : q * base.p;
                                    MPoly got = lhs.is_zero() ? MPoly::zero(N) : lhs.p;
                                    if (got != want) {
                                        std::ostringstream w;
                                        w << (sign < 0 ? "F" : "E") << "_{" << i << ","
                                          << j << "} at nu=(" << nu.str()
                                          << ") is not linear over the target ring";
                                        return w.str();
                                    }
                                }
                }
        return "";
    });

    detail::add_check(rep, "closed diagram consistency", [&]() -> std::string {
        for (const Composition& nu : comps)
            for (int i = 1; i < n; ++i) {
                int wt = nu[i - 1] - nu[i];
                for (int j = 0; j <= jmax; ++j) {
                    WeightVector f1 = apply_F(i, j, WeightVector{nu, MPoly::one(N)});
                    Refinement rm = refine_minus(nu, i);
                    MPoly fwant = rm.valid ? bubble_image(i, add_root(nu, i, -1),
                                                          wt - 1 + j, BubbleDir::ccw)
                                           : MPoly::zero(N);
                    MPoly fgot = f1.is_zero() ? MPoly::zero(N) : f1.p;
                    if (fgot != fwant) {
                        std::ostringstream w;
                        w << "F_{" << i << "," << j << "}(1) at nu=(" << nu.str()
                          << ") differs from the ccw bubble";
                        return w.str();
                    }
                    WeightVector e1 = apply_E(i, j, WeightVector{nu, MPoly::one(N)});
                    Refinement rp = refine_plus(nu, i);
                    MPoly ewant = rp.valid ? bubble_image(i, add_root(nu, i, +1),
                                                          -wt - 1 + j, BubbleDir::cw)
                                           : MPoly::zero(N);
                    MPoly egot = e1.is_zero() ? MPoly::zero(N) : e1.p;
                    if (egot != ewant) {
                        std::ostringstream w;
                        w << "E_{" << i << "," << j << "}(1) at nu=(" << nu.str()
                          << ") differs from the cw bubble";
                        return w.str();
                    }
                }
            }
        return "";
    });

    return rep;
}

// ------------------------------------------------------------------ coinv --

inline CheckReport verify_coinv(int n, int N, int cutoff, int jmax) {
    CheckReport rep;
    rep.suite = detail::suite_name("coinv", n, N, cutoff, jmax);
    detail::SuiteTimer timer(rep);

    const std::vector<Partition> lambdas = enumerate_partitions(n, N);
    const std::vector<Composition> comps = enumerate_compositions(n, N);

    detail::add_check(rep, "linear and formula methods agree", [&]() -> std::string {
        for (const Partition& la : lambdas)
            for (const Composition& nu : comps) {
                TPoly lin = coinv_graded_dim_linear(la, nu);
                TPoly frm = coinv_graded_dim_formula(la, nu);
                if (lin != frm) {
                    std::ostringstream w;
                    w << "lambda=(" << la.str() << ") nu=(" << nu.str() << ") linear="
                      << lin.str() << " formula=" << frm.str();
                    return w.str();
                }
            }
        return "";
    });

    detail::add_check(rep, "row ideal equals the symmetric ideal", [&]() -> std::string {
        std::vector<int> p0(static_cast<size_t>(n), 0);
        p0[0] = N;
        Partition lambda0{std::vector<int>(p0)};
        std::vector<int> all_blocks(static_cast<size_t>(n));
        std::iota(all_blocks.begin(), all_blocks.end(), 1);
        for (const Composition& nu : comps)
            for (int r = 1; r <= 6; ++r) {
                const auto& span = detail::ideal_span(lambda0, nu, r);
                Echelon sym;
                std::vector<std::vector<BigRat>> vecs;
                for (int k = 1; k <= r; ++k) {
                    MPoly hk = multi_block_poly('h', k, nu, all_blocks);
                    for (const MPoly& b : graded_basis(nu, r - k)) {
                        vecs.push_back(
                            detail::monomial_coords(hk * b, span.index, span.where));
                        sym.insert(vecs.back());
                    }
                }
                bool ok = sym.rank() == span.ech.rank();
                for (size_t t = 0; ok && t < vecs.size(); ++t)
                    ok = span.ech.contains(vecs[t]);
                if (!ok) {
                    std::ostringstream w;
                    w << "nu=(" << nu.str() << ") half-degree " << r;
                    return w.str();
                }
            }
        return "";
    });

    detail::add_check(rep, "top degree", [&]() -> std::string {
        for (const Partition& la : lambdas)
            for (const Composition& nu : comps) {
                if (!coinv_nonzero_predicted(la, nu)) continue;
                TPoly s = coinv_graded_dim_formula(la, nu);
                long long top = degree_gap(la, nu) / 2;
                if (s.is_zero() || s.max_exp() != top) {
                    std::ostringstream w;
                    w << "lambda=(" << la.str() << ") nu=(" << nu.str() << ") series="
                      << s.str() << " expected top " << top;
                    return w.str();
                }
            }
        return "";
    });

    detail::add_check(rep, "vanishing criterion", [&]() -> std::string {
        for (const Partition& la : lambdas)
            for (const Composition& nu : comps) {
                bool nz = !coinv_graded_dim_formula(la, nu).is_zero();
                if (nz != coinv_nonzero_predicted(la, nu)) {
                    std::ostringstream w;
                    w << "lambda=(" << la.str() << ") nu=(" << nu.str() << ")";
                    return w.str();
                }
            }
        return "";
    });

    detail::add_check(rep, "stability under uniform shift", [&]() -> std::string {
        for (const Partition& la : lambdas)
            for (const Composition& nu : comps)
                for (int m = 1; m <= 2; ++m) {
                    TPoly base = coinv_graded_dim_formula(la, nu);
                    TPoly moved = coinv_graded_dim_formula(detail::shifted(la, m),
                                                           detail::shifted(nu, m));
                    if (base != moved) {
                        std::ostringstream w;
                        w << "lambda=(" << la.str() << ") nu=(" << nu.str()
                          << ") shift m=" << m;
                        return w.str();
                    }
                }
        return "";
    });

    detail::add_check(rep, "descent into the shifted ideal", [&]() -> std::string {
        for (const Partition& la : lambdas) {
            CheckReport d = check_descent(la, jmax, cutoff);
            for (const CheckResult& c : d.checks)
                if (!c.pass) return c.name + ": " + c.witness;
        }
        return "";
    });

    return rep;
}

// ----------------------------------------------------------------- kostka --

inline CheckReport verify_kostka(int n, int N, int cutoff, int jmax) {
    CheckReport rep;
    rep.suite = detail::suite_name("kostka", n, N, cutoff, jmax);
    detail::SuiteTimer timer(rep);

    const std::vector<Partition> lambdas = enumerate_partitions(n, N);
    const std::vector<Composition> comps = enumerate_compositions(n, N);

    detail::add_check(rep, "specialization at t=1", [&]() -> std::string {
        for (const Partition& la : lambdas)
            for (const Composition& mu : comps) {
                long long kf1 = kostka_foulkes(la, mu).eval_at_one();
                long long kn = kostka_number(la, mu);
                if (kf1 != kn) {
                    std::ostringstream w;
                    w << "lambda=(" << la.str() << ") mu=(" << mu.str() << ") t=1 value "
                      << kf1 << " vs count " << kn;
                    return w.str();
                }
            }
        return "";
    });

    detail::add_check(rep, "stability under uniform shift", [&]() -> std::string {
        for (const Partition& la : lambdas)
            for (const Partition& mu : lambdas)
                for (int m = 1; m <= 3; ++m) {
                    Partition lam = detail::shifted(la, m);
                    Partition mum = detail::shifted(mu, m);
                    if (kostka_foulkes(lam, mum) != kostka_foulkes(la, mu)) {
                        std::ostringstream w;
                        w << "direct form lambda=(" << la.str() << ") mu=(" << mu.str()
                          << ") m=" << m;
                        return w.str();
                    }
                    if (kostka_foulkes(transpose(mu), transpose(la)) !=
                        kostka_foulkes(transpose(mum), transpose(lam))) {
                        std::ostringstream w;
                        w << "transposed form lambda=(" << la.str() << ") mu=("
                          << mu.str() << ") m=" << m;
                        return w.str();
                    }
                }
        return "";
    });

    detail::add_check(rep, "vanishing outside dominance", [&]() -> std::string {
        for (const Partition& la : lambdas)
            for (const Composition& mu : comps) {
                bool nz = !kostka_foulkes(la, mu).is_zero();
                bool dom = dominance_leq(sorted_partition(mu), la);
                if (nz != dom) {
                    std::ostringstream w;
                    w << "lambda=(" << la.str() << ") mu=(" << mu.str() << ")";
                    return w.str();
                }
            }
        return "";
    });

    detail::add_check(rep, "content permutation invariance", [&]() -> std::string {
        for (const Partition& la : lambdas)
            for (const Composition& mu : comps) {
                Partition muhat = sorted_partition(mu);
                if (kostka_number(la, mu) != kostka_number(la, muhat) ||
                    kostka_foulkes(la, mu) != kostka_foulkes(la, muhat)) {
                    std::ostringstream w;
                    w << "lambda=(" << la.str() << ") mu=(" << mu.str() << ")";
                    return w.str();
                }
            }
        return "";
    });

    return rep;
}

// ------------------------------------------------------------------- weyl --

inline CheckReport verify_weyl(int n, int N, int cutoff, int jmax) {
    CheckReport rep;
    rep.suite = detail::suite_name("weyl", n, N, cutoff, jmax);
    detail::SuiteTimer timer(rep);

    const std::vector<Partition> lambdas = enumerate_partitions(n, N);
    const std::vector<Composition> comps = enumerate_compositions(n, N);

    detail::add_check(rep, "dual reflection", [&]() -> std::string {
        for (const Partition& la : lambdas)
            for (const Composition& nu : comps)
                if (!dual_reflection_check(la, nu)) {
                    std::ostringstream w;
                    w << "lambda=(" << la.str() << ") nu=(" << nu.str() << ")";
                    return w.str();
                }
        return "";
    });

    detail::add_check(rep, "fusion product dimension", [&]() -> std::string {
        for (const Partition& la : lambdas)
            if (!fusion_dim_check(la)) return "lambda=(" + la.str() + ")";
        return "";
    });

    detail::add_check(rep, "highest weight space", [&]() -> std::string {
        for (const Partition& la : lambdas)
            if (weyl_weight_graded_dim(la, la) != TPoly::one())
                return "lambda=(" + la.str() + ")";
        return "";
    });

    detail::add_check(rep, "top degree", [&]() -> std::string {
        for (const Partition& la : lambdas)
            for (const Composition& nu : comps) {
                if (!coinv_nonzero_predicted(la, nu)) continue;
                TPoly s = weyl_weight_graded_dim(la, nu);
                long long top = degree_gap(la, nu) / 2;
                if (s.is_zero() || s.max_exp() != top) {
                    std::ostringstream w;
                    w << "lambda=(" << la.str() << ") nu=(" << nu.str() << ") series="
                      << s.str();
                    return w.str();
                }
            }
        return "";
    });

    detail::add_check(rep, "translation stability", [&]() -> std::string {
        for (const Partition& la : lambdas)
            for (int m = 1; m <= 2; ++m) {
                Partition lam = detail::shifted(la, m);
                for (const Composition& nup : enumerate_compositions(n, N + m * n)) {
                    bool inside = true;
                    for (int k = 0; k < n; ++k)
                        if (nup[k] < m) inside = false;
                    TPoly moved = weyl_weight_graded_dim(lam, nup);
                    TPoly want = inside ? weyl_weight_graded_dim(
                                              la, detail::shifted(nup, -m))
                                        : TPoly::zero();
                    if (moved != want) {
                        std::ostringstream w;
                        w << "lambda=(" << la.str() << ") nu'=(" << nup.str()
                          << ") m=" << m;
                        return w.str();
                    }
                }
            }
        return "";
    });

    return rep;
}

// -------------------------------------------------------------- dispatcher --

inline std::vector<CheckReport> run_verify(const std::string& suite, int n, int N,
                                           int cutoff, int jmax) {
    if (suite == "current") return {verify_current(n, N, cutoff, jmax)};
    if (suite == "theta") return {verify_theta(n, N, cutoff, jmax)};
    if (suite == "coinv") return {verify_coinv(n, N, cutoff, jmax)};
    if (suite == "kostka") return {verify_kostka(n, N, cutoff, jmax)};
    if (suite == "weyl") return {verify_weyl(n, N, cutoff, jmax)};
    if (suite == "all")
        return {verify_current(n, N, cutoff, jmax), verify_theta(n, N, cutoff, jmax),
                verify_coinv(n, N, cutoff, jmax), verify_kostka(n, N, cutoff, jmax),
                verify_weyl(n, N, cutoff, jmax)};
    throw std::invalid_argument("unknown verify suite: " + suite);
}

} // namespace weylpoly
