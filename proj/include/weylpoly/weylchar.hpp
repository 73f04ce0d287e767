#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "combinat.hpp"
#include "coinvariants.hpp"
#include "kostka.hpp"

namespace weylpoly {

struct CharacterEntry {
    Composition nu;
    TPoly dim;
};

// Graded character table of a local Weyl module, indexed by all n-part
// compositions of N in ascending lexicographic order.
struct CharacterTable {
    Partition lambda;
    int n = 0;
    int N = 0;
    std::vector<CharacterEntry> entries;
};

// Weight multiplicities of the irreducible with highest weight tau.
inline std::vector<std::pair<Composition, long long>> irr_weight_multiplicities(const Partition& tau) {
    if (!tau.is_partition()) throw std::invalid_argument("irr_weight_multiplicities: not a partition");
    std::vector<std::pair<Composition, long long>> out;
    for (const auto& nu : enumerate_compositions(tau.n(), tau.total()))
        out.push_back({nu, kostka_number(tau, nu)});
    return out;
}

// Graded dimension of one weight space of the local Weyl module.
inline TPoly weyl_weight_graded_dim(const Partition& lambda, const Composition& nu) {
    if (!lambda.is_partition())
        throw std::invalid_argument("weyl_weight_graded_dim: lambda must be a partition");
    if (lambda.n() != nu.n() || lambda.total() != nu.total())
        throw std::invalid_argument("weyl_weight_graded_dim: shapes must share length and total");
    const Partition lamT = transpose(lambda);
    TPoly acc;
    for (const auto& tau : enumerate_partitions(lambda.n(), lambda.total())) {
        const long long kn = kostka_number(tau, nu);
        if (kn == 0) continue;
        acc = acc + kostka_foulkes(transpose(tau), lamT) * TPoly::monomial(0, kn);
    }
    return acc;
}

inline CharacterTable weyl_graded_character(const Partition& lambda) {
    if (!lambda.is_partition())
        throw std::invalid_argument("weyl_graded_character: lambda must be a partition");
    CharacterTable table;
    table.lambda = lambda;
    table.n = lambda.n();
    table.N = lambda.total();
    for (const auto& nu : enumerate_compositions(table.n, table.N))
        table.entries.push_back({nu, weyl_weight_graded_dim(lambda, nu)});
    return table;
}

// Graded-dimension shadow of the duality between the coinvariant algebra and
// the local Weyl module weight space: C^lambda_nu matches the reflection of
// the weight space series at d/2.
inline bool dual_reflection_check(const Partition& lambda, const Composition& nu) {
    const int d2 = static_cast<int>(degree_gap(lambda, nu) / 2);
    return coinv_graded_dim_formula(lambda, nu) == weyl_weight_graded_dim(lambda, nu).reversed(d2);
}

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int s = 1; s <= k; ++s) r = r * (n - s + 1) / s;
    return r;
}

// Total dimension consistency with the fusion-product description: the sum
// of all weight-space dimensions equals the product of exterior-power
// dimensions cut out by the transpose parts.
inline bool fusion_dim_check(const Partition& lambda) {
    if (!lambda.is_partition()) throw std::invalid_argument("fusion_dim_check: not a partition");
    const int n = lambda.n();
    long long total = 0;
    for (const auto& nu : enumerate_compositions(n, lambda.total()))
        total += weyl_weight_graded_dim(lambda, nu).eval_at_one();
    long long expected = 1;
    for (const auto part : transpose(lambda).parts) expected *= binomial(n, part);
    return total == expected;
}

}  // namespace weylpoly
