#pragma once

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "blocksym.hpp"
#include "combinat.hpp"
#include "current.hpp"
#include "kostka.hpp"
#include "linalg.hpp"
#include "mpoly.hpp"
#include "report.hpp"
#include "schubert.hpp"

namespace weylpoly {

// One defining relation of the coinvariant algebra: the complete homogeneous
// generator of degree r over the listed blocks.
struct IdealGen {
    std::vector<int> blocks;  // 1-based, strictly increasing
    int r = 0;                // power degree of the generator
    MPoly poly;
};

namespace detail {

inline void validate_coinv_pair(const Partition& lambda, const Composition& nu) {
    if (lambda.is_empty() || nu.is_empty())
        throw std::invalid_argument("coinvariants: empty weight");
    if (!lambda.is_partition())
        throw std::invalid_argument("coinvariants: lambda must be a partition");
    if (lambda.n() != nu.n() || lambda.total() != nu.total())
        throw std::invalid_argument("coinvariants: lambda and nu must have the same length and total");
}

}  // namespace detail

// Generators of the defining ideal with degree at most rmax: for every
// nonempty increasing index set {i_1 < ... < i_m} the polynomials
// h_r(nu; i_1..i_m) with r > lambda_1 + ... + lambda_m - nu_{i_1} - ... -
// nu_{i_m}. A negative slack admits r = 0, whose generator is the unit.
inline std::vector<IdealGen> ideal_generator_data(const Partition& lambda, const Composition& nu,
                                                  int rmax) {
    detail::validate_coinv_pair(lambda, nu);
    const int n = nu.n();
    std::vector<IdealGen> out;
    std::map<MPoly, bool> seen;
    for (int r = 0; r <= rmax; ++r) {
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            std::vector<int> blocks;
            int sub = 0;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) {
                    blocks.push_back(i + 1);
                    sub += nu[i];
                }
            int slack = 0;
            for (int m = 0; m < static_cast<int>(blocks.size()); ++m) slack += lambda[m];
            slack -= sub;
            if (r <= slack) continue;
            MPoly g = multi_block_poly('h', r, nu, blocks);
            if (g.is_zero()) continue;
            if (seen.count(g)) continue;
            seen[g] = true;
            out.push_back({blocks, r, std::move(g)});
        }
    }
    return out;
}

inline std::vector<MPoly> ideal_generators(const Partition& lambda, const Composition& nu,
                                           int rmax) {
    std::vector<MPoly> polys;
    for (auto& g : ideal_generator_data(lambda, nu, rmax)) polys.push_back(g.poly);
    return polys;
}

inline std::vector<MPoly> ideal_generators(const Partition& lambda, const Composition& nu) {
    detail::validate_coinv_pair(lambda, nu);
    return ideal_generators(lambda, nu, static_cast<int>(degree_gap(lambda, nu) / 2) + nu.n());
}

// The quotient is nonzero exactly when lambda dominates the partition
// rearrangement of nu (every generator then has positive degree).
inline bool coinv_nonzero_predicted(const Partition& lambda, const Composition& nu) {
    detail::validate_coinv_pair(lambda, nu);
    return dominance_leq(sorted_partition(nu), lambda);
}

namespace detail {

struct BlockPermTable {
    std::vector<Perm> perms;
    std::vector<int> length;
    std::map<int, std::vector<std::size_t>> by_length;
};

inline const BlockPermTable& block_perm_table(const Composition& nu) {
    static std::map<std::string, BlockPermTable> cache;
    const std::string key = nu.str();
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    BlockPermTable tab;
    tab.perms = block_increasing_perms(nu);
    tab.length.reserve(tab.perms.size());
    for (std::size_t k = 0; k < tab.perms.size(); ++k) {
        tab.length.push_back(perm_length(tab.perms[k]));
        tab.by_length[tab.length.back()].push_back(k);
    }
    return cache.emplace(key, std::move(tab)).first->second;
}

// Coordinates, on the degree-r Schubert basis of the block-symmetric ring,
// of the image of generator * Schubert(w'). Shared across every lambda whose
// ideal contains the same generator.
inline const std::vector<BigInt>& ideal_vector_coords(const Composition& nu, const IdealGen& gen,
                                                      int r, std::size_t wprime) {
    static std::map<std::string, std::vector<BigInt>> cache;
    std::ostringstream key;
    key << nu.str() << '|';
    for (int b : gen.blocks) key << b << '.';
    key << '|' << gen.r << '|' << wprime;
    auto it = cache.find(key.str());
    if (it != cache.end()) return it->second;

    const auto& tab = block_perm_table(nu);
    std::vector<Perm> targets;
    for (std::size_t idx : tab.by_length.at(r)) targets.push_back(tab.perms[idx]);
    MPoly product = gen.poly * schubert_poly(tab.perms[wprime]);
    auto coords = schubert_top_coords(product, targets);
    return cache.emplace(key.str(), std::move(coords)).first->second;
}

}  // namespace detail

// Graded dimensions of the coinvariant algebra by exact linear algebra: per
// degree, the corank of the ideal inside the free-basis coordinates of the
// block-symmetric ring over the full symmetric functions. Degrees are probed
// up to d/2 plus an n-step margin; any nonzero dimension found above d/2 is
// reported as-is.
inline TPoly coinv_graded_dim_linear(const Partition& lambda, const Composition& nu) {
    detail::validate_coinv_pair(lambda, nu);
    const int n = nu.n();
    const int d2 = static_cast<int>(degree_gap(lambda, nu) / 2);
    const int probe = d2 + n;
    auto gens = ideal_generator_data(lambda, nu, probe);
    for (const auto& g : gens)
        if (g.r == 0) return TPoly::zero();

    const auto& tab = detail::block_perm_table(nu);
    TPoly out;
    for (int r = 0; r <= probe; ++r) {
        auto itL = tab.by_length.find(r);
        if (itL == tab.by_length.end() || itL->second.empty()) continue;
        const std::size_t dimC = itL->second.size();
        Echelon ech;
        for (const auto& g : gens) {
            if (g.r < 1 || g.r > r) continue;
            auto itW = tab.by_length.find(r - g.r);
            if (itW == tab.by_length.end()) continue;
            for (std::size_t wprime : itW->second) {
                const auto& coords = detail::ideal_vector_coords(nu, g, r, wprime);
                std::vector<BigRat> v(coords.size());
                for (std::size_t k = 0; k < coords.size(); ++k) v[k] = BigRat(coords[k]);
                ech.insert(std::move(v));
                if (ech.rank() == dimC) break;
            }
            if (ech.rank() == dimC) break;
        }
        const long long dim = static_cast<long long>(dimC) - static_cast<long long>(ech.rank());
        if (dim > 0) out.add_term(r, dim);
    }
    return out;
}

// Graded dimensions through the symmetric-function route: reflection at d/2
// of the content-weighted sum of transposed Kostka-Foulkes polynomials.
inline TPoly coinv_graded_dim_formula(const Partition& lambda, const Composition& nu) {
    detail::validate_coinv_pair(lambda, nu);
    const int n = nu.n();
    const int N = nu.total();
    const int d2 = static_cast<int>(degree_gap(lambda, nu) / 2);
    const Partition lamT = transpose(lambda);
    TPoly acc;
    for (const auto& tau : enumerate_partitions(n, N)) {
        const long long kn = kostka_number(tau, nu);
        if (kn == 0) continue;
        TPoly kf = kostka_foulkes(transpose(tau), lamT);
        acc = acc + kf * TPoly::monomial(0, kn);
    }
    return acc.reversed(d2);
}

namespace detail {

inline const std::vector<Expvec>& all_monomials(int nvars, int r) {
    static std::map<std::pair<int, int>, std::vector<Expvec>> cache;
    auto key = std::make_pair(nvars, r);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<Expvec> out;
    Expvec cur(static_cast<std::size_t>(nvars), 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos + 1 == nvars) {
            cur[static_cast<std::size_t>(pos)] = left;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, left - v);
        }
    };
    if (nvars > 0) rec(0, r);
    return cache.emplace(key, std::move(out)).first->second;
}

inline std::vector<BigRat> monomial_coords(const MPoly& p, const std::vector<Expvec>& index,
                                           const std::map<Expvec, std::size_t>& where) {
    std::vector<BigRat> v(index.size(), BigRat(0));
    for (const auto& [e, c] : p.terms) v[where.at(e)] = BigRat(c);
    return v;
}

struct IdealSpan {
    std::vector<Expvec> index;
    std::map<Expvec, std::size_t> where;
    Echelon ech;
};

// Row space of the degree-r piece of the ideal in full monomial coordinates.
// Small scales only; the graded-dimension path uses Schubert coordinates.
inline const IdealSpan& ideal_span(const Partition& lambda, const Composition& nu, int r) {
    static std::map<std::string, IdealSpan> cache;
    const std::string key = lambda.str() + "|" + nu.str() + "|" + std::to_string(r);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    IdealSpan span;
    span.index = all_monomials(nu.total(), r);
    for (std::size_t k = 0; k < span.index.size(); ++k) span.where[span.index[k]] = k;
    for (const auto& g : ideal_generator_data(lambda, nu, r)) {
        if (g.r > r) continue;
        for (const auto& b : graded_basis(nu, r - g.r)) {
            span.ech.insert(monomial_coords(g.poly * b, span.index, span.where));
            if (span.ech.rank() == span.index.size()) break;
        }
        if (span.ech.rank() == span.index.size()) break;
    }
    return cache.emplace(key, std::move(span)).first->second;
}

}  // namespace detail

// Membership of a homogeneous element in the defining ideal, decided by
// exact reduction against the degree piece of the ideal's row space.
inline bool in_ideal_span(const MPoly& p, const Partition& lambda, const Composition& nu) {
    if (p.is_zero()) return true;
    const int r = p.max_half_degree();
    if (!p.is_homogeneous(r))
        throw std::invalid_argument("in_ideal_span: element must be homogeneous");
    const auto& span = detail::ideal_span(lambda, nu, r);
    return span.ech.contains(detail::monomial_coords(p, span.index, span.where));
}

// The raising and lowering operators send each defining ideal into the
// defining ideal of the shifted weight. Checked on all products of a
// generator with a graded basis element up to the degree cutoff.
inline CheckReport check_descent(const Partition& lambda, int jmax, int cutoff) {
    if (!lambda.is_partition()) throw std::invalid_argument("check_descent: lambda must be a partition");
    const int n = lambda.n();
    const int N = lambda.total();
    CheckReport rep;
    rep.suite = "coinv-descent";
    for (const auto& nu : enumerate_compositions(n, N)) {
        CheckResult res;
        res.name = "descent nu=(" + nu.str() + ") lambda=(" + lambda.str() + ")";
        res.pass = true;
        auto gens = ideal_generator_data(lambda, nu, cutoff);
        for (const auto& g : gens) {
            if (!res.pass) break;
            for (int s = 0; g.r + s <= cutoff && res.pass; ++s) {
                for (const auto& b : graded_basis(nu, s)) {
                    if (!res.pass) break;
                    WeightVector x{nu, g.poly * b};
                    for (int i = 1; i <= n - 1 && res.pass; ++i) {
                        for (int j = 0; j <= jmax && res.pass; ++j) {
                            for (char kind : {'E', 'F'}) {
                                WeightVector img = apply_generator({kind, i, j}, x);
                                if (img.is_zero()) continue;
                                if (!in_ideal_span(img.p, lambda, img.nu)) {
                                    res.pass = false;
                                    res.witness = std::string(1, kind) + "_{" + std::to_string(i) +
                                                  "," + std::to_string(j) + "} of h_" +
                                                  std::to_string(g.r) + " * basis at degree " +
                                                  std::to_string(s) + " leaves the ideal at nu=(" +
                                                  img.nu.str() + ")";
                                    break;
                                }
                            }
                        }
                    }
                }
            }
        }
        rep.checks.push_back(std::move(res));
    }
    return rep;
}

}  // namespace weylpoly
