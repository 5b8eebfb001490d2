#include <doctest.h>

#include <complex>
#include <vector>

#include "qslice/sampling.hpp"
#include "qslice/slice_function.hpp"
#include "qslice/stem.hpp"
#include "support/oracles.hpp"

using namespace qslice;
using qslice::testing::approx;
using qslice::testing::direct_eval;

namespace {

std::vector<OrderedMonomial> golden_terms() {
    return {{{1, 3}, RQuat::one()}, {{2, 3, 3}, RQuat::unit_k()}};
}

StemFunction golden_cubic() { return from_ordered_monomials(golden_terms(), 3); }

const DQuat I = DQuat::unit_i();
const DQuat J = DQuat::unit_j();
const DQuat K = DQuat::unit_k();

}  // namespace

TEST_CASE("evaluation basics") {
    RQuat q(Rational(1), Rational(-2), Rational(0), Rational(3));
    PointHn x = {DQuat(0.3, 1.2, -0.5, 0.25), DQuat::real(-2.0)};
    CHECK(evaluate(const_stem(q, 2), x) == to_double(q));

    // x_h at a real point is that real number
    CHECK(evaluate(coordinate_stem(2, 2), x) == DQuat::real(-2.0));

    // f(i, j, k) = (i k) + j k^2 k = -j - i, by the pointwise product oracle
    PointHn ijk = {I, J, K};
    DQuat expected = direct_eval(golden_terms(), ijk);
    CHECK(approx(expected, DQuat(0, -1, -1, 0), 1e-15));
    CHECK(approx(evaluate(golden_cubic(), ijk), expected, 1e-14));
}

TEST_CASE("ordered-monomial evaluation oracle") {
    Rng rng(79);
    for (int t = 0; t < 60; ++t) {
        std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.integer(4));
        auto terms = random_ordered_monomials(rng, n, 4, 6);
        StemFunction f = from_ordered_monomials(terms, n);
        for (int s = 0; s < 16; ++s) {
            PointHn x = random_point(rng, n, 2.0, 0.0);  // |x_h| <= 2
            CHECK(approx(evaluate(f, x), direct_eval(terms, x), 1e-10));
        }
    }
}

TEST_CASE("evaluation is well defined under the opposite decomposition") {
    Rng rng(83);
    for (int t = 0; t < 40; ++t) {
        StemFunction f = random_parity_stem(rng, 2, 3, 2);
        std::vector<double> alphas = {rng.uniform(-2, 2), rng.uniform(-2, 2)};
        std::vector<double> betas = {rng.uniform(0.1, 2), rng.uniform(0.1, 2)};
        std::vector<DQuat> units = {random_imaginary_unit(rng), random_imaginary_unit(rng)};
        DQuat base = evaluate_frame(f, alphas, betas, units);
        for (std::uint32_t h = 0; h < 2; ++h) {
            auto flipped_b = betas;
            auto flipped_u = units;
            flipped_b[h] = -betas[h];
            flipped_u[h] = -units[h];
            CHECK(approx(evaluate_frame(f, alphas, flipped_b, flipped_u), base, 1e-8));
        }
    }
}

TEST_CASE("value at the real fiber ignores the unit convention") {
    Rng rng(89);
    for (int t = 0; t < 40; ++t) {
        StemFunction f = random_parity_stem(rng, 2, 3, 2);
        std::vector<double> alphas = {rng.uniform(-2, 2), rng.uniform(-2, 2)};
        std::vector<double> betas = {rng.uniform(0.1, 2), 0.0};
        std::vector<DQuat> u1 = {random_imaginary_unit(rng), random_imaginary_unit(rng)};
        std::vector<DQuat> u2 = u1;
        u2[1] = random_imaginary_unit(rng);
        CHECK(approx(evaluate_frame(f, alphas, betas, u1),
                     evaluate_frame(f, alphas, betas, u2), 1e-8));
    }
}

TEST_CASE("slice product") {
    StemFunction f = golden_cubic();
    CHECK(slice_product(f, const_stem(RQuat::one(), 3)) == f);

    StemFunction x1x2 = slice_product(coordinate_stem(1, 2), coordinate_stem(2, 2));
    CHECK(x1x2.component(SubsetIndex::of({1, 2})) ==
          QPolynomial::beta(2, 1) * QPolynomial::beta(2, 2));

    // ordered product x1 (.) x3 evaluates pointwise: at (i, ., k) it is i k = -j
    StemFunction x1x3 = slice_product(coordinate_stem(1, 3), coordinate_stem(3, 3));
    PointHn x = {I, DQuat(0.7, -0.1, 0.4, 0.0), K};
    CHECK(approx(evaluate(x1x3, x), I * K, 1e-14));
}

TEST_CASE("the slice product is not the pointwise product") {
    // x2 (.) x1 evaluated against x2 * x1 pointwise: they differ at
    // generic points (the tensor product acts on stems, not on values).
    StemFunction f = slice_product(coordinate_stem(2, 2), coordinate_stem(1, 2));
    PointHn x = {DQuat(0.0, 1.0, 0.0, 0.0), DQuat(0.0, 0.0, 1.0, 0.0)};  // (i, j)
    DQuat product_of_values = J * I;  // -k
    CHECK_FALSE(approx(evaluate(f, x), product_of_values, 1e-6));
}

TEST_CASE("pointwise spherical value") {
    StemFunction x2 = coordinate_stem(2, 2);
    PointHn x = {DQuat::real(1.0), DQuat(2, 3, 0, 0)};
    CHECK(approx(spherical_value_pointwise(x2, 2, x), DQuat::real(2.0), 1e-15));

    StemFunction f = golden_cubic();
    PointHn real2 = {I, DQuat::real(0.75), K};
    CHECK(approx(spherical_value_pointwise(f, 2, real2), evaluate(f, real2), 1e-14));

    PointHn ijk = {I, J, K};
    DQuat expected = (direct_eval(golden_terms(), ijk) +
                      direct_eval(golden_terms(), {I, -J, K})) *
                     0.5;
    CHECK(approx(spherical_value_pointwise(f, 2, ijk), expected, 1e-14));
    CHECK(approx(expected, DQuat(0, 0, -1, 0), 1e-15));
}

TEST_CASE("pointwise spherical value agrees with the stem route everywhere") {
    Rng rng(97);
    for (int t = 0; t < 30; ++t) {
        StemFunction f = random_parity_stem(rng, 3, 3, 2);
        for (int s = 0; s < 8; ++s) {
            PointHn x = random_point(rng, 3, 2.0, 0.0);
            for (std::uint32_t h = 1; h <= 3; ++h)
                CHECK(approx(spherical_value_pointwise(f, h, x),
                             evaluate(spherical_value_stem(f, h), x), 1e-10));
        }
    }
}

TEST_CASE("pointwise spherical derivative") {
    StemFunction x2 = coordinate_stem(2, 2);
    PointHn x = {DQuat::real(0.5), DQuat(2, 3, 0, 0)};
    CHECK(approx(spherical_derivative_pointwise(x2, 2, x), DQuat::one(), 1e-15));

    // x_h^2 has spherical derivative 2 alpha
    Rng rng(101);
    StemFunction sq = from_ordered_monomials({{{1, 1}, RQuat::one()}}, 1);
    for (int t = 0; t < 20; ++t) {
        PointHn p = {random_point(rng, 1, 2.0, 0.25)[0]};
        CHECK(approx(spherical_derivative_pointwise(sq, 1, p),
                     DQuat::real(2.0 * p[0].w), 1e-12));
    }

    PointHn on_fiber = {DQuat::real(0.5), DQuat::real(-1.0)};
    CHECK_THROWS_AS(spherical_derivative_pointwise(x2, 2, on_fiber), RealFiber);
}

TEST_CASE("pointwise spherical derivative agrees with the stem route on S_h") {
    Rng rng(103);
    for (int t = 0; t < 30; ++t) {
        std::uint32_t h = 1 + static_cast<std::uint32_t>(rng.integer(3));
        StemFunction f = random_stem_slice_wrt(rng, 3, h, 3, 4);
        for (int s = 0; s < 8; ++s) {
            PointHn x = random_point(rng, 3, 2.0, 0.25);
            CHECK(approx(spherical_derivative_pointwise(f, h, x),
                         evaluate(spherical_derivative_stem(f, h), x), 1e-9));
        }
    }
}

TEST_CASE("outside S_h the raw quotient and the stem route disagree") {
    StemFunction f = slice_product(coordinate_stem(1, 2), coordinate_stem(2, 2));
    PointHn x = {DQuat(0.5, 1.0, 0.0, 0.0), DQuat(0.25, 0.0, 1.0, 0.0)};
    DQuat raw = spherical_derivative_pointwise(f, 2, x);
    DQuat via_stem = evaluate(spherical_derivative_stem(f, 2), x);
    CHECK(norm(raw - via_stem) > 0.1);
}

TEST_CASE("restriction of the golden cubic in x2") {
    StemFunction f = golden_cubic();
    Rng rng(107);
    for (int t = 0; t < 8; ++t) {
        PointHn y = random_point(rng, 3, 2.0, 0.25);
        OneVarRestriction r = restrict_slice(f, 2, y);
        DQuat y1 = y[0], y3 = y[2];
        for (int s = 0; s < 8; ++s) {
            std::complex<double> w(rng.uniform(-2, 2), rng.uniform(0, 2));
            DQuat c1 = y1 * y3 + (y3 * y3) * K * w.real();
            DQuat c2 = (y3 * y3) * K * w.imag();
            CHECK(approx(r.component1(w), c1, 1e-10));
            CHECK(approx(r.component2(w), c2, 1e-10));
        }
    }
}

TEST_CASE("restriction of coordinates and constants") {
    PointHn y = {DQuat(0.5, 1, 0, 0), DQuat(1, 0, 2, 0)};
    OneVarRestriction r = restrict_slice(coordinate_stem(2, 2), 2, y);
    std::complex<double> w(0.75, 1.25);
    CHECK(approx(r.component1(w), DQuat::real(0.75), 1e-15));
    CHECK(approx(r.component2(w), DQuat::real(1.25), 1e-15));

    RQuat q(Rational(1), Rational(0), Rational(-2), Rational(1));
    OneVarRestriction rc = restrict_slice(const_stem(q, 2), 1, y);
    CHECK(approx(rc.component1(w), to_double(q), 1e-15));
    CHECK(rc.component2(w).is_zero());
}

TEST_CASE("restrict refuses functions that are not slice in the variable") {
    StemFunction f = slice_product(coordinate_stem(1, 2), coordinate_stem(2, 2));
    PointHn y = {DQuat(0, 1, 0, 0), DQuat(0, 0, 1, 0)};
    CHECK_THROWS_AS(restrict_slice(f, 2, y), NotSliceInVariable);
    CHECK_NOTHROW(restrict_slice(f, 1, y));
}

TEST_CASE("restriction pair has the intrinsic parity") {
    Rng rng(109);
    StemFunction f = golden_cubic();
    PointHn y = random_point(rng, 3, 2.0, 0.25);
    for (auto maker : {&restrict_slice, &restrict_raw}) {
        OneVarRestriction r = maker(f, 2, y);
        for (int s = 0; s < 10; ++s) {
            std::complex<double> w(rng.uniform(-2, 2), rng.uniform(0.1, 2));
            CHECK(approx(r.component1(std::conj(w)), r.component1(w), 1e-11));
            CHECK(approx(r.component2(std::conj(w)), -r.component2(w), 1e-11));
        }
    }
}

TEST_CASE("raw and exact restrictions agree on S_h members") {
    Rng rng(113);
    for (int t = 0; t < 10; ++t) {
        std::uint32_t h = 1 + static_cast<std::uint32_t>(rng.integer(3));
        StemFunction f = random_stem_slice_wrt(rng, 3, h, 3, 3);
        PointHn y = random_point(rng, 3, 2.0, 0.25);
        OneVarRestriction exact = restrict_slice(f, h, y);
        OneVarRestriction raw = restrict_raw(f, h, y);
        for (int s = 0; s < 8; ++s) {
            std::complex<double> w(rng.uniform(-2, 2), rng.uniform(0.1, 2));
            CHECK(approx(exact.component1(w), raw.component1(w), 1e-9));
            CHECK(approx(exact.component2(w), raw.component2(w), 1e-9));
        }
    }
}

TEST_CASE("one-variable representation formula") {
    Rng rng(127);

    // any restriction of an S_h member satisfies it
    for (int t = 0; t < 6; ++t) {
        std::uint32_t h = 1 + static_cast<std::uint32_t>(rng.integer(3));
        StemFunction f = random_stem_slice_wrt(rng, 3, h, 3, 3);
        PointHn y = random_point(rng, 3, 2.0, 0.25);
        CHECK(onevar_representation_check(restrict_slice(f, h, y), 32, 1000 + t) <= 1e-10);
        CHECK(onevar_representation_check(restrict_raw(f, h, y), 32, 2000 + t) <= 1e-10);
    }

    // constants trivially satisfy it
    PointHn y0 = {DQuat(0, 1, 0, 0), DQuat(0.5, 0, 1, 0)};
    OneVarRestriction rc = restrict_slice(const_stem(RQuat::unit_k(), 2), 2, y0);
    CHECK(onevar_representation_check(rc, 32, 3) <= 1e-12);

    // negative control: x1 (.) x2 is not slice w.r.t. x2
    StemFunction bad = slice_product(coordinate_stem(1, 2), coordinate_stem(2, 2));
    PointHn y = {DQuat(0.5, 1.0, 0.25, 0.0), DQuat(0.25, 0.0, 1.5, 0.0)};
    CHECK(onevar_representation_check(restrict_raw(bad, 2, y), 64, 42) > 0.1);
}

TEST_CASE("evaluation is not multiplicative across the slice product") {
    StemFunction f = coordinate_stem(2, 2);
    StemFunction g = coordinate_stem(1, 2);
    PointHn x = {DQuat(0, 1, 0, 0), DQuat(0, 0, 1, 0)};
    DQuat through_product = evaluate(slice_product(f, g), x);
    DQuat of_values = evaluate(f, x) * evaluate(g, x);
    CHECK(norm(through_product - of_values) > 0.5);
}
