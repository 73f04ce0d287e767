#pragma once

// Images of the generating 2-morphisms between the refined bimodules: dots,
// cups, caps and crossings, together with the closed-diagram bubble and pi
// polynomials. A two-leg tensor product over a middle ring is stored as an
// explicit sum of pure tensors and compared through its canonical slot
// decomposition (right leg decomposed over the middle ring, coefficients
// absorbed into the left leg).

#include <stdexcept>
#include <utility>
#include <vector>

#include <weylpoly/blocksym.hpp>
#include <weylpoly/combinat.hpp>
#include <weylpoly/mpoly.hpp>

namespace weylpoly {

enum class Orient { up, down };
enum class BubbleDir { cw, ccw };

struct Tensor2 {
    int nvars = 0;
    std::vector<std::pair<MPoly, MPoly>> terms;

    static Tensor2 zero(int nv) {
        Tensor2 t;
        t.nvars = nv;
        return t;
    }

    void add(MPoly a, MPoly b) {
        if (a.is_zero() || b.is_zero()) return;
        if (nvars == 0) nvars = a.nvars;
        terms.emplace_back(std::move(a), std::move(b));
    }

    Tensor2 operator+(const Tensor2& o) const {
        Tensor2 t = *this;
        if (t.nvars == 0) t.nvars = o.nvars;
        t.terms.insert(t.terms.end(), o.terms.begin(), o.terms.end());
        return t;
    }

    Tensor2 operator-() const {
        Tensor2 t = *this;
        for (auto& [a, b] : t.terms) a = -a;
        return t;
    }

    Tensor2 operator-(const Tensor2& o) const { return *this + (-o); }

    // left leg times u^s, right leg times v^s
    Tensor2 mul_left(const MPoly& u) const {
        Tensor2 t = *this;
        for (auto& [a, b] : t.terms) a = a * u;
        return t;
    }
    Tensor2 mul_right(const MPoly& v) const {
        Tensor2 t = *this;
        for (auto& [a, b] : t.terms) b = b * v;
        return t;
    }
};

inline Tensor2 tensor_of(MPoly a, MPoly b) {
    Tensor2 t;
    t.nvars = a.nvars;
    t.add(std::move(a), std::move(b));
    return t;
}

// Legs of a product A (x)_{P_mid} B of refined bimodules between the outer
// weights top (left) and bot (right).
struct TensorContext {
    Composition top, mid, bot;
    int left_sep = 0, right_sep = 0;
    int left_rank_over_top = 0;  // A is free over P_top with X_left powers
    int right_rank_over_mid = 0; // B is free over P_mid with X_right powers
    bool valid = false;
};

// E_i E_j 1_nu : legs P_{nu+a_i+a_j, nu+a_j} (x) P_{nu+a_j, nu}
inline TensorContext ee_context(int i, int j, const Composition& nu) {
    TensorContext c;
    Refinement right = refine_plus(nu, j);
    if (!right.valid) return c;
    Composition mid = add_root(nu, j, +1);
    Refinement left = refine_plus(mid, i);
    if (!left.valid) return c;
    c.top = add_root(mid, i, +1);
    c.mid = mid;
    c.bot = nu;
    c.left_sep = left.sep_var;
    c.right_sep = right.sep_var;
    c.left_rank_over_top = rank_plus_over_target(mid, i);
    c.right_rank_over_mid = rank_plus_over_target(nu, j);
    c.valid = true;
    return c;
}

// F_i F_j 1_nu : legs P_{nu-a_i-a_j, nu-a_j} (x) P_{nu-a_j, nu}
inline TensorContext ff_context(int i, int j, const Composition& nu) {
    TensorContext c;
    Refinement right = refine_minus(nu, j);
    if (!right.valid) return c;
    Composition mid = add_root(nu, j, -1);
    Refinement left = refine_minus(mid, i);
    if (!left.valid) return c;
    c.top = add_root(mid, i, -1);
    c.mid = mid;
    c.bot = nu;
    c.left_sep = left.sep_var;
    c.right_sep = right.sep_var;
    c.left_rank_over_top = rank_minus_over_target(mid, i);
    c.right_rank_over_mid = rank_minus_over_target(nu, j);
    c.valid = true;
    return c;
}

// F_i E_i 1_nu : legs P_{nu, nu+a_i} (x) P_{nu+a_i, nu}
inline TensorContext ef_context(int i, const Composition& nu) {
    TensorContext c;
    Refinement r = refine_plus(nu, i);
    if (!r.valid) return c;
    c.top = nu;
    c.mid = add_root(nu, i, +1);
    c.bot = nu;
    c.left_sep = r.sep_var;
    c.right_sep = r.sep_var;
    c.left_rank_over_top = rank_plus_over_base(nu, i);
    c.right_rank_over_mid = rank_plus_over_target(nu, i);
    c.valid = true;
    return c;
}

// E_i F_i 1_nu : legs P_{nu, nu-a_i} (x) P_{nu-a_i, nu}
inline TensorContext fe_context(int i, const Composition& nu) {
    TensorContext c;
    Refinement r = refine_minus(nu, i);
    if (!r.valid) return c;
    c.top = nu;
    c.mid = add_root(nu, i, -1);
    c.bot = nu;
    c.left_sep = r.sep_var;
    c.right_sep = r.sep_var;
    c.left_rank_over_top = rank_minus_over_base(nu, i);
    c.right_rank_over_mid = rank_minus_over_target(nu, i);
    c.valid = true;
    return c;
}

// Canonical slots: x = sum_m slots[m] (x) X_right^m with slots[m] in the
// left leg. Well defined because the right leg is free over the middle ring.
inline std::vector<MPoly> tensor_slots(const Tensor2& x, const TensorContext& c) {
    int N = c.mid.total();
    std::vector<MPoly> slots(static_cast<size_t>(c.right_rank_over_mid), MPoly::zero(N));
    for (const auto& [a, b] : x.terms) {
        std::vector<MPoly> q = free_decompose(b, c.right_sep, c.mid, c.right_rank_over_mid);
        for (size_t m = 0; m < q.size(); ++m)
            if (!q[m].is_zero()) slots[m] += a * q[m];
    }
    return slots;
}

inline bool tensors_equal(const Tensor2& x, const Tensor2& y, const TensorContext& c) {
    std::vector<MPoly> sx = tensor_slots(x, c), sy = tensor_slots(y, c);
    for (size_t m = 0; m < sx.size(); ++m)
        if (sx[m] != sy[m]) return false;
    return true;
}

inline bool tensor_is_zero(const Tensor2& x, const TensorContext& c) {
    for (const MPoly& s : tensor_slots(x, c))
        if (!s.is_zero()) return false;
    return true;
}

// Dots: multiplication by a power of the separated variable.
inline MPoly dot_image(int i, const Composition& nu, int s, Orient o, const MPoly& x) {
    if (s < 0) throw std::invalid_argument("dot_image: negative dot count");
    Refinement r = (o == Orient::up) ? refine_plus(nu, i) : refine_minus(nu, i);
    if (!r.valid) return MPoly::zero(nu.is_empty() ? 0 : nu.total());
    return x * MPoly::var(nu.total(), r.sep_var, s);
}

// Normalization sign for the i-th adjacent block pair. Invariant under
// adding or removing a root at i, flips under a root at i+1; this is the
// sign system that makes the mixed-label relations close.
inline int norm_sign(int i, const Composition& nu) {
    return nu.prefix(i + 1) % 2 == 0 ? 1 : -1;
}

// Cups: the canonical coevaluation elements.
inline Tensor2 cup_ef_image(int i, const Composition& nu) {
    Refinement r = refine_plus(nu, i);
    if (!r.valid) return Tensor2::zero(nu.is_empty() ? 0 : nu.total());
    int N = nu.total();
    int top = nu[i - 1];
    Tensor2 t = Tensor2::zero(N);
    for (int s = 0; s <= top; ++s) {
        MPoly left = MPoly::var(N, r.sep_var, s);
        if ((top - s) % 2 == 1) left = -left;
        t.add(std::move(left), gen_poly('e', top - s, nu, i));
    }
    return norm_sign(i, nu) < 0 ? -t : t;
}

inline Tensor2 cup_fe_image(int i, const Composition& nu) {
    Refinement r = refine_minus(nu, i);
    if (!r.valid) return Tensor2::zero(nu.is_empty() ? 0 : nu.total());
    int N = nu.total();
    int top = nu[i];
    Tensor2 t = Tensor2::zero(N);
    for (int s = 0; s <= top; ++s) {
        MPoly left = MPoly::var(N, r.sep_var, s);
        if ((top - s) % 2 == 1) left = -left;
        t.add(std::move(left), gen_poly('e', top - s, nu, i + 1));
    }
    return t;
}

// Caps: evaluate on the slot decomposition, then expand the left leg over
// the outer ring; pure powers go to complete homogeneous generators.
inline MPoly cap_ef_image(int i, const Composition& nu, const Tensor2& x) {
    int N = nu.total();
    TensorContext c = ef_context(i, nu);
    if (!c.valid) return MPoly::zero(N);
    MPoly out = MPoly::zero(N);
    std::vector<MPoly> slots = tensor_slots(x, c);
    for (size_t m = 0; m < slots.size(); ++m) {
        if (slots[m].is_zero()) continue;
        std::vector<MPoly> q =
            free_decompose(slots[m], c.left_sep, nu, c.left_rank_over_top);
        for (size_t mm = 0; mm < q.size(); ++mm) {
            if (q[mm].is_zero()) continue;
            int hidx = static_cast<int>(m + mm) + 1 - nu[i];
            out += q[mm] * gen_poly('h', hidx, nu, i + 1);
        }
    }
    return out;
}

inline MPoly cap_fe_image(int i, const Composition& nu, const Tensor2& x) {
    int N = nu.total();
    TensorContext c = fe_context(i, nu);
    if (!c.valid) return MPoly::zero(N);
    MPoly out = MPoly::zero(N);
    std::vector<MPoly> slots = tensor_slots(x, c);
    for (size_t m = 0; m < slots.size(); ++m) {
        if (slots[m].is_zero()) continue;
        std::vector<MPoly> q =
            free_decompose(slots[m], c.left_sep, nu, c.left_rank_over_top);
        for (size_t mm = 0; mm < q.size(); ++mm) {
            if (q[mm].is_zero()) continue;
            int hidx = static_cast<int>(m + mm) + 1 - nu[i - 1];
            out += q[mm] * gen_poly('h', hidx, nu, i);
        }
    }
    return norm_sign(i, nu) < 0 ? -out : out;
}

namespace detail {

// Branch formula for an upward crossing on a pure tensor u^{r1} (x) v^{r2},
// written in the output legs' separated variables. Adjacent labels are
// asymmetric: the term raising the left input exponent carries -1 when
// i = j+1 (and +1 when i = j-1), matching norm_sign's translation behavior.
inline Tensor2 crossing_up_pure(int i, int j, int N, int out_left, int out_right,
                                int r1, int r2) {
    Tensor2 t = Tensor2::zero(N);
    if (i == j) {
        for (int f = 0; f < r1; ++f)
            t.add(MPoly::var(N, out_left, r1 + r2 - 1 - f), MPoly::var(N, out_right, f));
        for (int g = 0; g < r2; ++g)
            t.add(-MPoly::var(N, out_left, r1 + r2 - 1 - g), MPoly::var(N, out_right, g));
    } else if (i == j + 1) {
        t.add(-MPoly::var(N, out_left, r2), MPoly::var(N, out_right, r1 + 1));
        t.add(MPoly::var(N, out_left, r2 + 1), MPoly::var(N, out_right, r1));
    } else {
        t.add(MPoly::var(N, out_left, r2), MPoly::var(N, out_right, r1));
    }
    return t;
}

inline Tensor2 crossing_down_pure(int i, int j, int N, int out_left, int out_right,
                                  int r1, int r2) {
    Tensor2 t = Tensor2::zero(N);
    if (i == j) {
        for (int f = 0; f < r2; ++f)
            t.add(MPoly::var(N, out_left, r1 + r2 - 1 - f), MPoly::var(N, out_right, f));
        for (int g = 0; g < r1; ++g)
            t.add(-MPoly::var(N, out_left, r1 + r2 - 1 - g), MPoly::var(N, out_right, g));
    } else if (i == j - 1) {
        t.add(-MPoly::var(N, out_left, r2 + 1), MPoly::var(N, out_right, r1));
        t.add(MPoly::var(N, out_left, r2), MPoly::var(N, out_right, r1 + 1));
    } else {
        t.add(MPoly::var(N, out_left, r2), MPoly::var(N, out_right, r1));
    }
    return t;
}

} // namespace detail

// Crossing on E_i E_j 1_nu -> E_j E_i 1_nu: decompose the input over the
// middle and top rings down to pure power tensors, apply the branch formula,
// and multiply the outer coefficients back (the map is left linear over the
// common top ring and right linear over P_nu).
inline Tensor2 crossing_up_image(int i, int j, const Composition& nu, const Tensor2& x) {
    int N = nu.is_empty() ? 0 : nu.total();
    TensorContext src = ee_context(i, j, nu);
    TensorContext dst = ee_context(j, i, nu);
    if (!src.valid || !dst.valid) return Tensor2::zero(N);
    Tensor2 out = Tensor2::zero(N);
    std::vector<MPoly> slots = tensor_slots(x, src);
    for (size_t m = 0; m < slots.size(); ++m) {
        if (slots[m].is_zero()) continue;
        std::vector<MPoly> q =
            free_decompose(slots[m], src.left_sep, src.top, src.left_rank_over_top);
        for (size_t mm = 0; mm < q.size(); ++mm) {
            if (q[mm].is_zero()) continue;
            Tensor2 pure = detail::crossing_up_pure(i, j, N, dst.left_sep, dst.right_sep,
                                                    static_cast<int>(mm),
                                                    static_cast<int>(m));
            out = out + pure.mul_left(q[mm]);
        }
    }
    return out;
}

inline Tensor2 crossing_down_image(int i, int j, const Composition& nu, const Tensor2& x) {
    int N = nu.is_empty() ? 0 : nu.total();
    TensorContext src = ff_context(i, j, nu);
    TensorContext dst = ff_context(j, i, nu);
    if (!src.valid || !dst.valid) return Tensor2::zero(N);
    Tensor2 out = Tensor2::zero(N);
    std::vector<MPoly> slots = tensor_slots(x, src);
    for (size_t m = 0; m < slots.size(); ++m) {
        if (slots[m].is_zero()) continue;
        std::vector<MPoly> q =
            free_decompose(slots[m], src.left_sep, src.top, src.left_rank_over_top);
        for (size_t mm = 0; mm < q.size(); ++mm) {
            if (q[mm].is_zero()) continue;
            Tensor2 pure = detail::crossing_down_pure(i, j, N, dst.left_sep, dst.right_sep,
                                                      static_cast<int>(mm),
                                                      static_cast<int>(m));
            out = out + pure.mul_left(q[mm]);
        }
    }
    return out;
}

// Declared degree shifts (polynomial degree, i.e. deg X = 2).
inline int dot_shift(int s) { return 2 * s; }
inline int cup_ef_shift(const Composition& nu, int i) { return 2 * nu[i - 1]; }
inline int cup_fe_shift(const Composition& nu, int i) { return 2 * nu[i]; }
inline int cap_ef_shift(const Composition& nu, int i) { return 2 * (1 - nu[i]); }
inline int cap_fe_shift(const Composition& nu, int i) { return 2 * (1 - nu[i - 1]); }
inline int crossing_up_shift(int i, int j) {
    if (i == j) return -2;
    if (i == j + 1) return 2;
    return 0;
}
inline int crossing_down_shift(int i, int j) {
    if (i == j) return -2;
    if (i == j - 1) return 2;
    return 0;
}

// Bubble images in P_nu, degree labels in the spade-plus-r convention.
inline MPoly bubble_image(int i, const Composition& nu, int r, BubbleDir dir) {
    int N = nu.total();
    MPoly out = MPoly::zero(N);
    if (r < 0) return out;
    for (int l = 0; l <= r; ++l) {
        const MPoly& e = (dir == BubbleDir::cw) ? gen_poly('e', l, nu, i + 1)
                                                : gen_poly('e', l, nu, i);
        const MPoly& h = (dir == BubbleDir::cw) ? gen_poly('h', r - l, nu, i)
                                                : gen_poly('h', r - l, nu, i + 1);
        MPoly term = e * h;
        if (l % 2 == 1) term = -term;
        out += term;
    }
    return norm_sign(i, nu) < 0 ? -out : out;
}

// pi_{i,j}: the closed-diagram polynomial acting on P_nu by multiplication.
inline MPoly pi_image(int i, int j, const Composition& nu) {
    int N = nu.total();
    if (j < 0) throw std::invalid_argument("pi_image: negative t-degree");
    if (j == 0) {
        int wt = nu[i - 1] - nu[i];
        return MPoly::constant(N, wt);
    }
    MPoly out = MPoly::zero(N);
    for (int l = 0; l <= j; ++l) {
        MPoly term = bubble_image(i, nu, l, BubbleDir::cw) *
                     bubble_image(i, nu, j - l, BubbleDir::ccw);
        out += BigInt(l + 1) * term;
    }
    return out;
}

} // namespace weylpoly
