#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "combinat.hpp"

namespace weylpoly {

namespace detail {

// Positive roots e_a - e_b (0-based a < b) in the processing order used by
// the t-analog counter: grouped by a ascending, then b ascending. Once the
// group for coordinate a is exhausted, no later root touches coordinate a.
inline std::vector<std::pair<int, int>> positive_roots(int len) {
    std::vector<std::pair<int, int>> roots;
    for (int a = 0; a < len; ++a)
        for (int b = a + 1; b < len; ++b) roots.push_back({a, b});
    return roots;
}

inline void p_poly_rec(const std::vector<std::pair<int, int>>& roots, std::size_t idx,
                       std::vector<long long>& residual, long long used, TPoly& acc) {
    const int len = static_cast<int>(residual.size());
    if (idx == roots.size()) {
        for (long long v : residual)
            if (v != 0) return;
        acc.add_term(static_cast<int>(used), 1);
        return;
    }
    auto [a, b] = roots[idx];
    if (a > 0 && (idx == 0 || roots[idx - 1].first < a)) {
        for (int s = 0; s < a; ++s)
            if (residual[s] != 0) return;
    }
    // prefix sums of the residual must stay nonnegative: every remaining root
    // only moves value from an earlier coordinate to a later one
    long long run = 0, cap = -1;
    for (int s = 0; s < len; ++s) {
        run += residual[s];
        if (run < 0) return;
        if (s >= a && s < b && (cap < 0 || run < cap)) cap = run;
    }
    for (long long m = 0; m <= cap; ++m) {
        if (m > 0) {
            residual[a] -= 1;
            residual[b] += 1;
        }
        p_poly_rec(roots, idx + 1, residual, used + m, acc);
    }
    residual[a] += cap;
    residual[b] -= cap;
}

// Count Gelfand-Tsetlin patterns below `row` (length k) whose row sums step
// down by the prescribed content.
inline long long gt_rows(const std::vector<int>& row, const std::vector<int>& content, int k) {
    if (k == 1) return row[0] == content[0] ? 1 : 0;
    const int want = std::accumulate(row.begin(), row.end(), 0) - content[k - 1];
    if (want < 0) return 0;
    std::vector<int> next(static_cast<std::size_t>(k - 1), 0);
    long long total = 0;
    std::vector<int> lo(next.size()), hi(next.size());
    for (std::size_t i = 0; i < next.size(); ++i) {
        hi[i] = row[i];
        lo[i] = row[i + 1];
    }
    std::vector<int> sufLo(next.size() + 1, 0), sufHi(next.size() + 1, 0);
    for (std::size_t i = next.size(); i-- > 0;) {
        sufLo[i] = sufLo[i + 1] + lo[i];
        sufHi[i] = sufHi[i + 1] + hi[i];
    }
    std::vector<std::pair<std::size_t, int>> stack;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int sum) {
        if (i == next.size()) {
            if (sum == want) total += gt_rows(next, content, k - 1);
            return;
        }
        for (int v = lo[i]; v <= hi[i]; ++v) {
            const int rest = want - sum - v;
            if (rest < sufLo[i + 1] || rest > sufHi[i + 1]) continue;
            next[i] = v;
            rec(i + 1, sum + v);
        }
    };
    rec(0, 0);
    return total;
}

}  // namespace detail

// Number of ways to write xi (sum zero) as a nonnegative integer combination
// of positive roots, graded by the total number of roots used.
inline TPoly p_polynomial(const std::vector<long long>& xi) {
    long long total = 0;
    for (long long v : xi) total += v;
    if (total != 0) throw std::invalid_argument("p_polynomial: entries must sum to zero");
    TPoly acc;
    auto roots = detail::positive_roots(static_cast<int>(xi.size()));
    std::vector<long long> residual = xi;
    detail::p_poly_rec(roots, 0, residual, 0, acc);
    return acc;
}

// Kostka number K_{lambda,nu}: Gelfand-Tsetlin patterns with top row lambda
// and row sums prescribed by the content nu.
inline long long kostka_number(const Partition& lambda, const Composition& nu) {
    if (lambda.is_empty() || nu.is_empty()) return 0;
    if (!lambda.is_partition()) throw std::invalid_argument("kostka_number: lambda must be a partition");
    if (lambda.total() != nu.total()) return 0;
    static std::map<std::string, long long> cache;
    const std::string key = lambda.str() + "|" + nu.str();
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const int L = std::max(lambda.n(), nu.n());
    auto lam = zero_pad(lambda, L);
    auto con = zero_pad(nu, L);
    std::vector<int> top(lam.parts.begin(), lam.parts.end());
    std::vector<int> content(con.parts.begin(), con.parts.end());
    const long long value = detail::gt_rows(top, content, L);
    cache[key] = value;
    return value;
}

// Kostka-Foulkes polynomial K_{lambda,mu}(t): alternating sum over the
// symmetric group of graded root-combination counts. mu is sorted first;
// both shapes are zero-padded to a common length.
inline TPoly kostka_foulkes(const Partition& lambda, const Composition& mu) {
    if (lambda.is_empty() || mu.is_empty()) return TPoly::zero();
    if (!lambda.is_partition()) throw std::invalid_argument("kostka_foulkes: lambda must be a partition");
    if (lambda.total() != mu.total()) return TPoly::zero();
    static std::map<std::string, TPoly> cache;
    const std::string key = lambda.str() + "|" + mu.str();
    auto cached = cache.find(key);
    if (cached != cache.end()) return cached->second;
    const auto muhat = sorted_partition(mu);
    const int L = std::max(lambda.n(), muhat.n());
    auto lam = zero_pad(lambda, L);
    auto mus = zero_pad(muhat, L);

    std::vector<long long> shifted(L), target(L);
    for (int k = 0; k < L; ++k) {
        shifted[k] = lam[k] + (L - 1 - k);
        target[k] = mus[k] + (L - 1 - k);
    }

    TPoly acc;
    std::vector<int> idx(L);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end());
    do {
        int inv = 0;
        for (int a = 0; a < L; ++a)
            for (int b = a + 1; b < L; ++b)
                if (idx[a] > idx[b]) ++inv;
        std::vector<long long> xi(L);
        bool feasible = true;
        long long run = 0;
        for (int k = 0; k < L; ++k) {
            xi[k] = shifted[idx[k]] - target[k];
            run += xi[k];
            if (run < 0) {
                feasible = false;
                break;
            }
        }
        if (!feasible || run != 0) continue;
        TPoly part = p_polynomial(xi);
        if ((inv & 1) != 0) part = TPoly::zero() - part;
        acc = acc + part;
    } while (std::next_permutation(idx.begin(), idx.end()));
    cache[key] = acc;
    return acc;
}

}  // namespace weylpoly
