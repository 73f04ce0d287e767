#include <catch2/catch_amalgamated.hpp>

#include <weylpoly/weylchar.hpp>

#include "oracles.hpp"

using namespace weylpoly;

namespace {
Composition C(std::vector<int> p) { return Composition(std::move(p)); }

TPoly tp(std::initializer_list<std::pair<int, long long>> terms) {
    TPoly p;
    for (auto [e, c] : terms) p.add_term(e, c);
    return p;
}
}

TEST_CASE("irreducible weight multiplicities") {
    auto mults = irr_weight_multiplicities(C({2, 1, 0}));
    long long total = 0;
    for (const auto& [nu, m] : mults) {
        if (nu == C({2, 1, 0})) CHECK(m == 1);
        total += m;
    }
    CHECK(total == oracle::weyl_dim_product(C({2, 1, 0}), 3));

    for (const auto& [nu, m] : irr_weight_multiplicities(C({1, 0, 0}))) {
        bool is_unit_weight = sorted_partition(nu) == C({1, 0, 0});
        CHECK(m == (is_unit_weight ? 1 : 0));
    }

    for (int n = 2; n <= 4; ++n)
        for (int N = 1; N <= 5; ++N)
            for (const auto& tau : enumerate_partitions(n, N)) {
                long long s = 0;
                for (const auto& [nu, m] : irr_weight_multiplicities(tau)) s += m;
                CHECK(s == oracle::weyl_dim_product(tau, n));
            }
}

TEST_CASE("weight space series") {
    CHECK(weyl_weight_graded_dim(C({5, 0, 0}), C({3, 1, 1})) ==
          tp({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 4}, {5, 3}, {6, 2}, {7, 1}}));
    CHECK(weyl_weight_graded_dim(C({3, 2}), C({3, 2})) == TPoly::one());
    CHECK(weyl_weight_graded_dim(C({2, 1, 0}), C({0, 0, 3})).is_zero());
    CHECK(weyl_weight_graded_dim(C({2, 1, 0}), C({3, 0, 0})).is_zero());
    CHECK_FALSE(weyl_weight_graded_dim(C({2, 1, 0}), C({0, 2, 1})).is_zero());
}

TEST_CASE("character table layout") {
    CharacterTable table = weyl_graded_character(C({2, 1}));
    CHECK(table.n == 2);
    CHECK(table.N == 3);
    const auto comps = enumerate_compositions(2, 3);
    REQUIRE(table.entries.size() == comps.size());
    for (size_t k = 0; k < comps.size(); ++k) {
        CHECK(table.entries[k].nu == comps[k]);
        CHECK(table.entries[k].dim == weyl_weight_graded_dim(C({2, 1}), comps[k]));
    }
}

TEST_CASE("duality with the coinvariant series") {
    CHECK(dual_reflection_check(C({5, 2, 1, 1}), C({3, 1, 2, 3})));
    CHECK(dual_reflection_check(C({3, 1}), C({3, 1})));
    CHECK(dual_reflection_check(C({5, 0, 0}), C({3, 1, 1})));
    for (int n = 2; n <= 3; ++n)
        for (int N = 1; N <= 5; ++N)
            for (const auto& lam : enumerate_partitions(n, N))
                for (const auto& nu : enumerate_compositions(n, N)) {
                    INFO("lambda=(" << lam.str() << ") nu=(" << nu.str() << ")");
                    CHECK(dual_reflection_check(lam, nu));
                }
}

TEST_CASE("fusion product dimensions") {
    CHECK(fusion_dim_check(C({5, 0, 0})));
    long long total = 0;
    for (const auto& nu : enumerate_compositions(3, 5))
        total += weyl_weight_graded_dim(C({5, 0, 0}), nu).eval_at_one();
    CHECK(total == 243);

    CHECK(fusion_dim_check(C({1, 0, 0})));
    long long n_total = 0;
    for (const auto& nu : enumerate_compositions(3, 1))
        n_total += weyl_weight_graded_dim(C({1, 0, 0}), nu).eval_at_one();
    CHECK(n_total == 3);

    CHECK(fusion_dim_check(C({2, 1})));
    long long f21 = 0;
    for (const auto& nu : enumerate_compositions(2, 3))
        f21 += weyl_weight_graded_dim(C({2, 1}), nu).eval_at_one();
    CHECK(f21 == 2);
}
