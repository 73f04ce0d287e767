#pragma once

#include <functional>
#include <list>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "combinat.hpp"
#include "linalg.hpp"
#include "mpoly.hpp"

namespace weylpoly {

// An MPoly tagged with the (possibly refined) composition whose block
// permutation group leaves it invariant.
struct BlockSymPoly {
    MPoly poly;
    Composition blocks;
};

// Variables of block i (1-based): X_{prefix(i-1)+1} .. X_{prefix(i)}.
inline std::vector<int> block_vars(const Composition& nu, int block) {
    if (block < 1 || block > nu.n()) throw std::out_of_range("block index");
    std::vector<int> vs;
    for (int k = nu.prefix(block - 1) + 1; k <= nu.prefix(block); ++k) vs.push_back(k);
    return vs;
}

namespace detail {

inline MPoly elementary_in(int nvars, const std::vector<int>& vars, int r) {
    if (r < 0) return MPoly::zero(nvars);
    if (r == 0) return MPoly::one(nvars);
    if (r > static_cast<int>(vars.size())) return MPoly::zero(nvars);
    // e[j] over a growing variable set.
    std::vector<MPoly> e(static_cast<size_t>(r) + 1, MPoly::zero(nvars));
    e[0] = MPoly::one(nvars);
    for (int v : vars)
        for (int j = r; j >= 1; --j)
            e[static_cast<size_t>(j)] += MPoly::var(nvars, v) * e[static_cast<size_t>(j) - 1];
    return e[static_cast<size_t>(r)];
}

inline MPoly complete_in(int nvars, const std::vector<int>& vars, int r) {
    if (r < 0) return MPoly::zero(nvars);
    if (r == 0) return MPoly::one(nvars);
    if (vars.empty()) return MPoly::zero(nvars);
    std::vector<MPoly> h(static_cast<size_t>(r) + 1, MPoly::zero(nvars));
    h[0] = MPoly::one(nvars);
    for (size_t idx = 0; idx < vars.size(); ++idx) {
        // After step idx: h[j] = h_j(vars[0..idx]).
        std::vector<MPoly> nh(static_cast<size_t>(r) + 1, MPoly::zero(nvars));
        nh[0] = MPoly::one(nvars);
        MPoly x = MPoly::var(nvars, vars[idx]);
        for (int j = 1; j <= r; ++j)
            nh[static_cast<size_t>(j)] = h[static_cast<size_t>(j)] + x * nh[static_cast<size_t>(j) - 1];
        h = std::move(nh);
    }
    return h[static_cast<size_t>(r)];
}

inline MPoly powersum_in(int nvars, const std::vector<int>& vars, int r) {
    if (r < 0) return MPoly::zero(nvars);
    if (r == 0) return MPoly::one(nvars);
    MPoly p(nvars);
    for (int v : vars) p += MPoly::var(nvars, v, r);
    return p;
}

} // namespace detail

// e_r / h_r / p_r of one block of nu, with the standard conventions:
// zero for r < 0, one for r = 0, e_r = 0 beyond the block size.
inline const MPoly& gen_poly(char kind, int r, const Composition& nu, int block) {
    static std::map<std::string, MPoly> cache;
    std::string key;
    key += kind;
    key += ':' + std::to_string(r) + ':' + nu.str() + ':' + std::to_string(block);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    int N = nu.total();
    std::vector<int> vs = block_vars(nu, block);
    MPoly p(N);
    switch (kind) {
        case 'e': p = detail::elementary_in(N, vs, r); break;
        case 'h': p = detail::complete_in(N, vs, r); break;
        case 'p': p = detail::powersum_in(N, vs, r); break;
        default: throw std::invalid_argument("generator kind");
    }
    return cache.emplace(std::move(key), std::move(p)).first->second;
}

inline BlockSymPoly generator(char kind, int r, const Composition& nu, int block) {
    return BlockSymPoly{gen_poly(kind, r, nu, block), nu};
}

// Convolution extension across several blocks: the r-th e/h of the union of
// the blocks' variables.
inline MPoly multi_block_poly(char kind, int r, const Composition& nu,
                              const std::vector<int>& blocks) {
    if (kind != 'e' && kind != 'h') throw std::invalid_argument("multi_block kind");
    for (size_t t = 0; t + 1 < blocks.size(); ++t)
        if (blocks[t] >= blocks[t + 1])
            throw std::invalid_argument("block list must be strictly increasing");
    int N = nu.total();
    if (r < 0) return MPoly::zero(N);
    MPoly acc = MPoly::zero(N);
    // acc over partial compositions r_1 + ... + r_m = r.
    std::function<void(size_t, int, const MPoly&)> rec = [&](size_t idx, int rem, const MPoly& cur) {
        if (idx + 1 == blocks.size()) {
            acc += cur * gen_poly(kind, rem, nu, blocks[idx]);
            return;
        }
        for (int s = 0; s <= rem; ++s) {
            const MPoly& g = gen_poly(kind, s, nu, blocks[idx]);
            if (g.is_zero()) continue;
            rec(idx + 1, rem - s, cur * g);
        }
    };
    if (blocks.empty()) return r == 0 ? MPoly::one(N) : MPoly::zero(N);
    rec(0, r, MPoly::one(N));
    return acc;
}

inline BlockSymPoly multi_block(char kind, int r, const Composition& nu,
                                const std::vector<int>& blocks) {
    return BlockSymPoly{multi_block_poly(kind, r, nu, blocks), nu};
}

// Invariance under each block's adjacent transpositions.
inline bool is_block_symmetric(const MPoly& p, const Composition& blocks) {
    int N = blocks.total();
    if (p.nvars != N) return false;
    for (int b = 1; b <= blocks.n(); ++b) {
        std::vector<int> vs = block_vars(blocks, b);
        for (size_t t = 0; t + 1 < vs.size(); ++t) {
            std::vector<int> perm(static_cast<size_t>(N));
            for (int k = 1; k <= N; ++k) perm[static_cast<size_t>(k - 1)] = k;
            std::swap(perm[static_cast<size_t>(vs[t] - 1)], perm[static_cast<size_t>(vs[t + 1] - 1)]);
            if (p.permuted(perm) != p) return false;
        }
    }
    return true;
}

// Monomials in the free generators {e_s(nu;i) : 1 <= s <= nu_i} of total
// half-degree r, in a fixed deterministic order. They form a basis of the
// degree-2r piece of P_nu.
inline const std::vector<MPoly>& graded_basis(const Composition& nu, int r) {
    static std::map<std::string, std::vector<MPoly>> cache;
    std::string key = nu.str() + ':' + std::to_string(r);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::vector<std::pair<int, int>> gens; // (block, s)
    for (int b = 1; b <= nu.n(); ++b)
        for (int s = 1; s <= nu[b - 1]; ++s) gens.emplace_back(b, s);

    std::vector<MPoly> out;
    int N = nu.total();
    std::function<void(size_t, int, const MPoly&)> rec = [&](size_t idx, int rem, const MPoly& cur) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        if (idx == gens.size()) return;
        auto [b, s] = gens[idx];
        // multiplicity of e_s(nu;b) from 0 upward
        MPoly power = cur;
        for (int m = 0; s * m <= rem; ++m) {
            if (m > 0) power = power * gen_poly('e', s, nu, b);
            rec(idx + 1, rem - s * m, power);
        }
    };
    rec(0, r, MPoly::one(N));
    return cache.emplace(std::move(key), std::move(out)).first->second;
}

inline size_t graded_dim(const Composition& nu, int r) { return graded_basis(nu, r).size(); }

// Refined compositions carrying the separated variable.
struct Refinement {
    Composition refined; // n+1 parts, singleton block at position i+1
    int sep_var = 0;     // X index of the singleton
    bool valid = false;
};

// (nu - alpha_i, nu) = (nu_1,...,nu_{i-1}, nu_i - 1, 1, nu_{i+1},...,nu_n),
// separated variable X_{k_i}.
inline Refinement refine_minus(const Composition& nu, int i) {
    Refinement r;
    if (nu.is_empty() || i < 1 || i >= nu.n() || nu[i - 1] < 1) return r;
    std::vector<int> p;
    for (int t = 0; t < nu.n(); ++t) {
        if (t == i - 1) {
            p.push_back(nu[t] - 1);
            p.push_back(1);
        } else {
            p.push_back(nu[t]);
        }
    }
    r.refined = Composition(std::move(p));
    r.sep_var = nu.prefix(i);
    r.valid = true;
    return r;
}

// (nu + alpha_i, nu) = (nu_1,...,nu_i, 1, nu_{i+1} - 1,...,nu_n),
// separated variable X_{k_i + 1}.
inline Refinement refine_plus(const Composition& nu, int i) {
    Refinement r;
    if (nu.is_empty() || i < 1 || i >= nu.n() || nu[i] < 1) return r;
    std::vector<int> p;
    for (int t = 0; t < nu.n(); ++t) {
        p.push_back(t == i ? nu[t] - 1 : nu[t]);
        if (t == i - 1) p.push_back(1);
    }
    r.refined = Composition(std::move(p));
    r.sep_var = nu.prefix(i) + 1;
    r.valid = true;
    return r;
}

// Reduced solve table for one graded piece of a decomposition problem: the
// spanning set {X_k^m * graded_basis(base, d - m)} depends only on
// (base, k, rank, d), so its echelon form is computed once and shared by
// every polynomial decomposed against it. Each column is inserted with a
// trace block appended (column j carries -e_j), which makes the row space
// annihilate "value minus traced combination": reducing (piece | 0) to
// (0 | t) reads off piece = sum_j t_j * column_j directly.
struct DecomposeTable {
    std::map<Expvec, size_t> rows;
    std::vector<std::pair<int, size_t>> col_id; // (power of X_k, basis index)
    size_t nrows = 0, ncols = 0;
    Echelon ech;
};

// Tables are large at the top of the parameter range, so the cache is a
// small LRU rather than unbounded; within one relation sweep the same table
// is hit many times in a row.
inline std::shared_ptr<const DecomposeTable> decompose_table(const Composition& base,
                                                             int sep_var, int rank,
                                                             int d) {
    using Entry = std::pair<std::string, std::shared_ptr<const DecomposeTable>>;
    static std::list<Entry> lru;
    static std::map<std::string, std::list<Entry>::iterator> index;
    static constexpr size_t capacity = 64;

    std::string key = base.str() + "|" + std::to_string(sep_var) + "|" +
                      std::to_string(rank) + "|" + std::to_string(d);
    if (auto hit = index.find(key); hit != index.end()) {
        lru.splice(lru.begin(), lru, hit->second);
        return lru.front().second;
    }

    int N = base.total();
    auto t = std::make_shared<DecomposeTable>();
    std::vector<MPoly> col_poly;
    for (int m = 0; m < rank && m <= d; ++m) {
        const std::vector<MPoly>& basis = graded_basis(base, d - m);
        MPoly xm = MPoly::var(N, sep_var).pow(m);
        for (size_t bi = 0; bi < basis.size(); ++bi) {
            t->col_id.emplace_back(m, bi);
            col_poly.push_back(xm * basis[bi]);
        }
    }
    for (const MPoly& cp : col_poly)
        for (const auto& [e, c] : cp.terms) t->rows.emplace(e, t->rows.size());
    t->nrows = t->rows.size();
    t->ncols = col_poly.size();
    for (size_t j = 0; j < t->ncols; ++j) {
        std::vector<BigRat> v(t->nrows + t->ncols, BigRat(0));
        for (const auto& [e, c] : col_poly[j].terms) v[t->rows.at(e)] = BigRat(c);
        v[t->nrows + j] = BigRat(-1);
        if (!t->ech.insert(std::move(v)) || t->ech.pivots.back() >= t->nrows)
            throw std::runtime_error("free_decompose: dependent spanning set");
    }

    lru.emplace_front(key, t);
    index.emplace(std::move(key), lru.begin());
    if (lru.size() > capacity) {
        index.erase(lru.back().first);
        lru.pop_back();
    }
    return t;
}

// Write p = sum_{m=0}^{rank-1} q_m X_k^m with every q_m in the base ring,
// by an exact per-degree linear solve against {X_k^m * graded_basis(base)}.
// The decomposition must exist and be integral on valid inputs; violations
// throw, they are never corrected silently.
inline std::vector<MPoly> free_decompose(const MPoly& p, int sep_var,
                                         const Composition& base, int rank) {
    int N = base.total();
    if (p.nvars != N) throw std::invalid_argument("free_decompose: variable count");
    if (rank < 1) throw std::invalid_argument("free_decompose: rank");
    std::vector<MPoly> q(static_cast<size_t>(rank), MPoly::zero(N));
    if (p.is_zero()) return q;

    for (int d = p.min_half_degree(); d <= p.max_half_degree(); ++d) {
        MPoly piece = p.graded_piece(d);
        if (piece.is_zero()) continue;

        std::shared_ptr<const DecomposeTable> T = decompose_table(base, sep_var, rank, d);
        std::vector<BigRat> u(T->nrows + T->ncols, BigRat(0));
        for (const auto& [e, c] : piece.terms) {
            auto row = T->rows.find(e);
            if (row == T->rows.end())
                throw std::runtime_error(
                    "free_decompose: infeasible (rank/convention violation)");
            u[row->second] = BigRat(c);
        }
        T->ech.reduce(u);
        for (size_t i = 0; i < T->nrows; ++i)
            if (u[i] != 0)
                throw std::runtime_error(
                    "free_decompose: infeasible (rank/convention violation)");

        for (size_t j = 0; j < T->ncols; ++j) {
            const BigRat& cj = u[T->nrows + j];
            if (cj == 0) continue;
            BigInt ci = cj.convert_to<BigInt>();
            if (BigRat(ci) != cj)
                throw std::runtime_error("free_decompose: non-integral coefficient");
            auto [m, bi] = T->col_id[j];
            q[static_cast<size_t>(m)] += graded_basis(base, d - m)[bi] * ci;
        }
    }

    // Recomposition check: exactness is part of the contract.
    MPoly recomposed = MPoly::zero(N);
    for (int m = 0; m < rank; ++m)
        if (!q[static_cast<size_t>(m)].is_zero())
            recomposed += q[static_cast<size_t>(m)] * MPoly::var(N, sep_var).pow(m);
    if (recomposed != p) throw std::runtime_error("free_decompose: recomposition mismatch");
    return q;
}

// Basis ranks fixed by invariant theory (see module notes): the minus
// refinement is free over P_nu with ranks nu_i and over P_{nu-alpha_i} with
// rank nu_{i+1}+1; the plus refinement is free over P_{nu+alpha_i} with rank
// nu_i+1 and over P_nu with rank nu_{i+1}.
inline int rank_minus_over_base(const Composition& nu, int i) { return nu[i - 1]; }
inline int rank_minus_over_target(const Composition& nu, int i) { return nu[i] + 1; }
inline int rank_plus_over_target(const Composition& nu, int i) { return nu[i - 1] + 1; }
inline int rank_plus_over_base(const Composition& nu, int i) { return nu[i]; }

} // namespace weylpoly
