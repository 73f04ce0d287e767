#pragma once

#include <functional>
#include <map>
#include <vector>

#include "combinat.hpp"
#include "mpoly.hpp"

namespace weylpoly {

// One-line notation, 0-based values. w[pos] = value.
using Perm = std::vector<int>;

inline int perm_length(const Perm& w) {
    int inv = 0;
    for (std::size_t a = 0; a < w.size(); ++a)
        for (std::size_t b = a + 1; b < w.size(); ++b)
            if (w[a] > w[b]) ++inv;
    return inv;
}

// Exact divided difference (p - s_i p) / (x_i - x_{i+1}), i 0-based.
inline MPoly divided_difference(const MPoly& p, int i) {
    MPoly out(p.nvars);
    for (const auto& [e, c] : p.terms) {
        const int a = e[static_cast<std::size_t>(i)];
        const int b = e[static_cast<std::size_t>(i) + 1];
        if (a == b) continue;
        Expvec f = e;
        if (a > b) {
            for (int s = 0; s < a - b; ++s) {
                f[static_cast<std::size_t>(i)] = a - 1 - s;
                f[static_cast<std::size_t>(i) + 1] = b + s;
                out.add_term(f, c);
            }
        } else {
            for (int s = 0; s < b - a; ++s) {
                f[static_cast<std::size_t>(i)] = a + s;
                f[static_cast<std::size_t>(i) + 1] = b - 1 - s;
                out.add_term(f, -c);
            }
        }
    }
    return out;
}

// Schubert polynomial, computed by descending divided differences from the
// staircase monomial of the longest element. Memoized globally.
inline const MPoly& schubert_poly(const Perm& w) {
    static std::map<Perm, MPoly> cache;
    auto it = cache.find(w);
    if (it != cache.end()) return it->second;
    const int N = static_cast<int>(w.size());
    int ascent = -1;
    for (int i = 0; i + 1 < N; ++i)
        if (w[static_cast<std::size_t>(i)] < w[static_cast<std::size_t>(i) + 1]) {
            ascent = i;
            break;
        }
    MPoly result(N);
    if (ascent < 0) {
        Expvec e(static_cast<std::size_t>(N));
        for (int k = 0; k < N; ++k) e[static_cast<std::size_t>(k)] = N - 1 - k;
        result.add_term(e, 1);
    } else {
        Perm v = w;
        std::swap(v[static_cast<std::size_t>(ascent)], v[static_cast<std::size_t>(ascent) + 1]);
        result = divided_difference(schubert_poly(v), ascent);
    }
    return cache.emplace(w, std::move(result)).first->second;
}

// Permutations of S_N increasing within each nu-block; these index the free
// basis of the block-symmetric ring over the full symmetric functions.
inline std::vector<Perm> block_increasing_perms(const Composition& nu) {
    const int N = nu.total();
    std::vector<Perm> out;
    Perm current(static_cast<std::size_t>(N), -1);
    std::vector<bool> used(static_cast<std::size_t>(N), false);

    std::function<void(int, int)> place = [&](int block, int filled) {
        if (block == nu.n()) {
            out.push_back(current);
            return;
        }
        const int m = nu[block];
        std::vector<int> pick;
        std::function<void(int)> choose = [&](int from) {
            if (static_cast<int>(pick.size()) == m) {
                for (int t = 0; t < m; ++t) {
                    current[static_cast<std::size_t>(filled + t)] = pick[static_cast<std::size_t>(t)];
                    used[static_cast<std::size_t>(pick[static_cast<std::size_t>(t)])] = true;
                }
                place(block + 1, filled + m);
                for (int t = 0; t < m; ++t)
                    used[static_cast<std::size_t>(pick[static_cast<std::size_t>(t)])] = false;
                return;
            }
            for (int v = from; v < N; ++v) {
                if (used[static_cast<std::size_t>(v)]) continue;
                pick.push_back(v);
                choose(v + 1);
                pick.pop_back();
            }
        };
        choose(0);
    };
    place(0, 0);
    return out;
}

// Coefficients of the length-r Schubert basis elements in a homogeneous
// polynomial of power degree r: for each target w the scalar given by the
// full divided difference along w. Intermediate results are shared across
// targets through a per-call memo keyed by the remaining permutation.
inline std::vector<BigInt> schubert_top_coords(const MPoly& p, const std::vector<Perm>& targets) {
    std::map<Perm, MPoly> memo;
    const int N = targets.empty() ? 0 : static_cast<int>(targets[0].size());
    Perm id(static_cast<std::size_t>(N));
    for (int k = 0; k < N; ++k) id[static_cast<std::size_t>(k)] = k;
    memo.emplace(id, p);

    std::function<const MPoly&(const Perm&)> dd = [&](const Perm& w) -> const MPoly& {
        auto it = memo.find(w);
        if (it != memo.end()) return it->second;
        // smallest left descent: value i sits right of value i+1
        std::vector<int> pos(w.size());
        for (std::size_t k = 0; k < w.size(); ++k) pos[static_cast<std::size_t>(w[k])] = static_cast<int>(k);
        int i = -1;
        for (int v = 0; v + 1 < N; ++v)
            if (pos[static_cast<std::size_t>(v)] > pos[static_cast<std::size_t>(v) + 1]) {
                i = v;
                break;
            }
        Perm lower = w;
        std::swap(lower[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)])],
                  lower[static_cast<std::size_t>(pos[static_cast<std::size_t>(i) + 1])]);
        MPoly result = divided_difference(dd(lower), i);
        return memo.emplace(w, std::move(result)).first->second;
    };

    std::vector<BigInt> coords;
    coords.reserve(targets.size());
    for (const auto& w : targets) {
        const MPoly& q = dd(w);
        if (q.is_zero()) {
            coords.push_back(0);
        } else {
            Expvec zero(static_cast<std::size_t>(q.nvars), 0);
            auto it = q.terms.find(zero);
            coords.push_back(it == q.terms.end() ? BigInt(0) : it->second);
        }
    }
    return coords;
}

}  // namespace weylpoly
