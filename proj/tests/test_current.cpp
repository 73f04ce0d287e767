#include <catch2/catch_amalgamated.hpp>

#include <weylpoly/current.hpp>

using namespace weylpoly;

namespace {
Composition C(std::vector<int> p) { return Composition(std::move(p)); }
WeightVector wv(Composition nu, MPoly p) { return WeightVector{std::move(nu), std::move(p)}; }
}

TEST_CASE("lowering operator values") {
    Composition nu11 = C({1, 1});
    CHECK(apply_F(1, 0, wv(nu11, MPoly::one(2))).is_zero());
    CHECK(apply_F(1, 0, wv(nu11, MPoly::var(2, 1))) == wv(C({0, 2}), MPoly::one(2)));

    Composition nu20 = C({2, 0});
    CHECK(apply_F(1, 0, wv(nu20, MPoly::one(2))) ==
          wv(C({1, 1}), MPoly::var(2, 2) - MPoly::var(2, 1)));
}

TEST_CASE("raising operator values") {
    Composition nu11 = C({1, 1});
    CHECK(apply_E(1, 0, wv(nu11, MPoly::var(2, 2))) == wv(C({2, 0}), MPoly::one(2)));
    CHECK(apply_E(1, 0, wv(nu11, MPoly::one(2))).is_zero());
    CHECK(apply_E(1, 0, wv(C({2, 0}), MPoly::one(2))).is_zero());
}

TEST_CASE("diagonal operator values") {
    Composition nu = C({3, 1});
    MPoly p = gen_poly('h', 1, nu, 1);
    WeightVector out = apply_H(1, 0, wv(nu, p));
    CHECK(out == wv(nu, p * MPoly::constant(4, 2)));

    Composition nu11 = C({1, 1});
    CHECK(apply_H(1, 1, wv(nu11, MPoly::one(2))) ==
          wv(nu11, MPoly::var(2, 1) - MPoly::var(2, 2)));

    Composition top = C({3, 0});
    CHECK(apply_H(1, 1, wv(top, MPoly::one(3))) ==
          wv(top, gen_poly('p', 1, top, 1)));
}

TEST_CASE("EMPTY absorbs and words compose right to left") {
    WeightVector z = WeightVector::vacuum();
    CHECK(apply_F(1, 0, z).is_zero());
    CHECK(apply_word({}, wv(C({1, 1}), MPoly::var(2, 1))) ==
          wv(C({1, 1}), MPoly::var(2, 1)));

    WeightVector x1 = wv(C({1, 1}), MPoly::var(2, 1));
    MPoly want = MPoly::var(2, 1) - MPoly::var(2, 2);
    CHECK(apply_word({{'E', 1, 0}, {'F', 1, 0}}, x1) == wv(C({1, 1}), want));
    CHECK(apply_word({{'F', 1, 0}, {'E', 1, 0}}, x1) == wv(C({1, 1}), want));
}

TEST_CASE("hand-checked commutator instance") {
    // [E_{1,1}, F_{1,0}](X_1) at nu = (1,1) equals H_{1,1}(X_1)
    WeightVector x1 = wv(C({1, 1}), MPoly::var(2, 1));
    WeightVector lhs = detail::wv_sub(apply_word({{'E', 1, 1}, {'F', 1, 0}}, x1),
                                      apply_word({{'F', 1, 0}, {'E', 1, 1}}, x1));
    CHECK(lhs == apply_H(1, 1, x1));
    MPoly x1sq = MPoly::var(2, 1, 2) - MPoly::var(2, 1) * MPoly::var(2, 2);
    CHECK(lhs == wv(C({1, 1}), x1sq));
}

TEST_CASE("relations at small sizes") {
    for (auto [n, N, cut, jm] : {std::tuple{2, 2, 3, 2}, {3, 3, 2, 1}}) {
        CheckReport rep = verify_current_relations(n, N, cut, jm);
        for (const CheckResult& c : rep.checks) {
            INFO(rep.suite << ": " << c.name << " " << c.witness);
            CHECK(c.pass);
        }
    }
}
