#include <catch2/catch_amalgamated.hpp>

#include <weylpoly/theta.hpp>
#include <weylpoly/verify.hpp>

using namespace weylpoly;

namespace {
Composition C(std::vector<int> p) { return Composition(std::move(p)); }
}

TEST_CASE("dots multiply by the separated variable") {
    Composition nu = C({1, 2});
    Refinement up = refine_plus(nu, 1);
    REQUIRE(up.valid);
    MPoly x = MPoly::var(3, up.sep_var, 2);
    CHECK(dot_image(1, nu, 1, Orient::up, x) == MPoly::var(3, up.sep_var, 3));
    CHECK(dot_image(1, nu, 0, Orient::up, x) == x);
    Refinement dn = refine_minus(nu, 1);
    REQUIRE(dn.valid);
    CHECK(dot_image(1, nu, 2, Orient::down, MPoly::one(3)) ==
          MPoly::var(3, dn.sep_var, 2));
    CHECK_THROWS_AS(dot_image(1, nu, -1, Orient::up, x), std::invalid_argument);
}

TEST_CASE("cup images") {
    Composition nu = C({1, 1});
    Tensor2 fe = cup_fe_image(1, nu);
    Tensor2 fe_want = tensor_of(-MPoly::one(2), MPoly::var(2, 2)) +
                      tensor_of(MPoly::var(2, 1), MPoly::one(2));
    CHECK(tensors_equal(fe, fe_want, fe_context(1, nu)));

    Tensor2 ef = cup_ef_image(1, nu);
    Tensor2 ef_want = tensor_of(-MPoly::one(2), MPoly::var(2, 1)) +
                      tensor_of(MPoly::var(2, 2), MPoly::one(2));
    CHECK(tensors_equal(ef, ef_want, ef_context(1, nu)));

    // nu_{i+1} = 0: single term 1 (x) 1
    Composition nu20 = C({2, 0});
    CHECK(tensors_equal(cup_fe_image(1, nu20),
                        tensor_of(MPoly::one(2), MPoly::one(2)), fe_context(1, nu20)));
    // nu + alpha_1 invalid: zero
    CHECK(cup_ef_image(1, nu20).terms.empty());
}

TEST_CASE("cap images") {
    Composition nu = C({1, 1});
    Tensor2 unit = tensor_of(MPoly::one(2), MPoly::one(2));
    CHECK(cap_ef_image(1, nu, unit) == MPoly::one(2));
    CHECK(cap_fe_image(1, nu, unit) == MPoly::one(2));
    CHECK(cap_fe_image(1, nu, tensor_of(MPoly::one(2), MPoly::var(2, 1))) ==
          MPoly::var(2, 1));
}

TEST_CASE("crossing branch values") {
    // same label: divided-difference branch
    Composition nu = C({1, 2});
    TensorContext src = ee_context(1, 1, nu);
    REQUIRE(src.valid);
    auto pure = [&](int r1, int r2) {
        return tensor_of(MPoly::var(3, src.left_sep, r1), MPoly::var(3, src.right_sep, r2));
    };
    CHECK(tensor_is_zero(crossing_up_image(1, 1, nu, pure(0, 0)), ee_context(1, 1, nu)));
    CHECK(tensors_equal(crossing_up_image(1, 1, nu, pure(1, 0)),
                        tensor_of(MPoly::one(3), MPoly::one(3)), ee_context(1, 1, nu)));

    // distant labels: plain swap
    Composition far = C({1, 1, 0, 1});
    TensorContext fsrc = ee_context(1, 3, far);
    TensorContext fdst = ee_context(3, 1, far);
    REQUIRE((fsrc.valid && fdst.valid));
    Tensor2 x = tensor_of(MPoly::var(3, fsrc.left_sep, 2), MPoly::var(3, fsrc.right_sep, 1));
    Tensor2 want = tensor_of(MPoly::var(3, fdst.left_sep, 1), MPoly::var(3, fdst.right_sep, 2));
    CHECK(tensors_equal(crossing_up_image(1, 3, far, x), want, fdst));
}

TEST_CASE("bubble values") {
    Composition nu = C({1, 1});
    CHECK(bubble_image(1, nu, 0, BubbleDir::cw) == MPoly::one(2));
    CHECK(bubble_image(1, nu, 0, BubbleDir::ccw) == MPoly::one(2));
    CHECK(bubble_image(1, nu, 1, BubbleDir::cw) == MPoly::var(2, 1) - MPoly::var(2, 2));
    CHECK(bubble_image(1, nu, -1, BubbleDir::cw).is_zero());
    // the normalization sign scales the degree-zero bubble
    Composition odd = C({1, 2});
    CHECK(norm_sign(1, odd) == -1);
    CHECK(bubble_image(1, odd, 0, BubbleDir::cw) == MPoly::constant(3, -1));
    CHECK(norm_sign(1, C({2, 2, 1})) == 1);
    CHECK(norm_sign(2, C({2, 2, 1})) == -1);
}

TEST_CASE("pi values") {
    CHECK(pi_image(1, 0, C({3, 1})) == MPoly::constant(4, 2));
    CHECK(pi_image(1, 0, C({1, 2, 0})) == MPoly::constant(3, -1));
    Composition nu = C({1, 1});
    CHECK(pi_image(1, 1, nu) == MPoly::var(2, 1) - MPoly::var(2, 2));
    // closed form: p_j of the left block minus p_j of the right block
    for (int j = 1; j <= 5; ++j)
        for (const Composition& c : {C({1, 1}), C({2, 1}), C({1, 2}), C({0, 3})})
            CHECK(pi_image(1, j, c) ==
                  gen_poly('p', j, c, 1) - gen_poly('p', j, c, 2));
}

TEST_CASE("degree shifts") {
    Composition nu = C({2, 1, 3});
    CHECK(dot_shift(2) == 4);
    CHECK(cup_ef_shift(nu, 1) == 4);
    CHECK(cup_fe_shift(nu, 1) == 2);
    CHECK(cap_ef_shift(nu, 1) == 0);
    CHECK(cap_fe_shift(nu, 1) == -2);
    CHECK(crossing_up_shift(1, 1) == -2);
    CHECK(crossing_up_shift(2, 1) == 2);
    CHECK(crossing_up_shift(1, 2) == 0);
    CHECK(crossing_down_shift(1, 2) == 2);
    CHECK(crossing_down_shift(2, 1) == 0);
}

TEST_CASE("relation suite at small sizes") {
    for (auto [n, N] : {std::pair{2, 2}, {2, 3}, {3, 3}}) {
        CheckReport rep = verify_theta(n, N, 2, 2);
        for (const CheckResult& c : rep.checks) {
            INFO(rep.suite << ": " << c.name << " " << c.witness);
            CHECK(c.pass);
        }
    }
}
