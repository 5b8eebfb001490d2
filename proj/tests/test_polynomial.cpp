#include <doctest.h>

#include <vector>

#include "qslice/polynomial.hpp"
#include "qslice/sampling.hpp"
#include "qslice/text.hpp"
#include "support/oracles.hpp"

using namespace qslice;
using qslice::testing::approx;

namespace {

QPolynomial random_poly(Rng& rng, std::uint32_t arity, std::uint32_t max_terms = 4,
                        std::uint32_t max_exp = 2) {
    QPolynomial p(arity);
    std::uint32_t count = 1 + static_cast<std::uint32_t>(rng.integer(max_terms));
    for (std::uint32_t t = 0; t < count; ++t) {
        QPolynomial::Exponents e(2 * arity);
        for (auto& exp : e) exp = static_cast<std::uint32_t>(rng.integer(max_exp + 1));
        p.add_term(e, random_rational_quaternion(rng));
    }
    return p;
}

std::vector<double> random_eval_point(Rng& rng, std::uint32_t arity) {
    std::vector<double> point(2 * arity);
    for (double& v : point) v = rng.uniform(-2.0, 2.0);
    return point;
}

}  // namespace

TEST_CASE("ring basics") {
    QPolynomial zero(2);
    QPolynomial a1 = QPolynomial::alpha(2, 1);
    QPolynomial b1 = QPolynomial::beta(2, 1);
    CHECK(a1 + zero == a1);

    QPolynomial prod = a1 * b1;
    QPolynomial expected(2);
    expected.add_term({1, 0, 1, 0}, RQuat::one());
    CHECK(prod == expected);

    // central variables, quaternion coefficients: (i a1)(j a1) = k a1^2
    QPolynomial ia1 = a1.scale_left(RQuat::unit_i());
    QPolynomial ja1 = a1.scale_left(RQuat::unit_j());
    QPolynomial ka1sq(2);
    ka1sq.add_term({2, 0, 0, 0}, RQuat::unit_k());
    CHECK(ia1 * ja1 == ka1sq);

    CHECK_THROWS_AS(QPolynomial(2) + QPolynomial(3), ArityMismatch);
}

TEST_CASE("formal derivative") {
    QPolynomial a1b1 = QPolynomial::alpha(2, 1) * QPolynomial::beta(2, 1);
    CHECK(a1b1.d_beta(1) == QPolynomial::alpha(2, 1));
    CHECK(QPolynomial::constant(2, RQuat::unit_k()).d_alpha(1).is_zero());

    // d/db3 (a3^2 - b3^2) = -2 b3
    QPolynomial p = QPolynomial::alpha(3, 3) * QPolynomial::alpha(3, 3) -
                    QPolynomial::beta(3, 3) * QPolynomial::beta(3, 3);
    CHECK(p.d_beta(3) == QPolynomial::beta(3, 3).scale_left(RQuat::real(Rational(-2))));
}

TEST_CASE("derivatives in distinct variables commute") {
    Rng rng(37);
    for (int t = 0; t < 50; ++t) {
        QPolynomial p = random_poly(rng, 3);
        CHECK(p.d_alpha(1).d_beta(2) == p.d_beta(2).d_alpha(1));
        CHECK(p.d_beta(1).d_beta(3) == p.d_beta(3).d_beta(1));
        CHECK(p.d_alpha(2).d_alpha(3) == p.d_alpha(3).d_alpha(2));
    }
}

TEST_CASE("exact division by beta") {
    QPolynomial b1a3 = QPolynomial::beta(3, 1) * QPolynomial::alpha(3, 3);
    CHECK(b1a3.divide_beta(1) == QPolynomial::alpha(3, 3));

    // 2 b2 a3 b3 / b2 = 2 a3 b3
    QPolynomial p = QPolynomial::beta(3, 2) * QPolynomial::alpha(3, 3) *
                    QPolynomial::beta(3, 3);
    p = p.scale_left(RQuat::real(Rational(2)));
    QPolynomial expected = (QPolynomial::alpha(3, 3) * QPolynomial::beta(3, 3))
                               .scale_left(RQuat::real(Rational(2)));
    CHECK(p.divide_beta(2) == expected);

    CHECK(QPolynomial(3).divide_beta(2).is_zero());
    CHECK_THROWS_AS(QPolynomial::alpha(3, 1).divide_beta(1), NotDivisible);
}

TEST_CASE("division then multiplication is the identity on its domain") {
    Rng rng(41);
    for (int t = 0; t < 50; ++t) {
        QPolynomial p = random_poly(rng, 2);
        QPolynomial divisible = p * QPolynomial::beta(2, 1);
        CHECK(divisible.divide_beta(1) == p);
    }
}

TEST_CASE("evaluation") {
    std::vector<double> point = {2.0, 0.0};  // arity 1: (a1, b1)
    CHECK(QPolynomial::alpha(1, 1).eval(point) == DQuat::real(2.0));

    // a3^2 - b3^2 at a3 = b3 = 1
    QPolynomial sym = QPolynomial::alpha(3, 3) * QPolynomial::alpha(3, 3) -
                      QPolynomial::beta(3, 3) * QPolynomial::beta(3, 3);
    std::vector<double> p3 = {0, 0, 1, 0, 0, 1};
    CHECK(sym.eval(p3) == DQuat::zero());

    // a1 a3 + a2 (a3^2 - b3^2) k at alpha = (1,1,1), beta = (0,0,1):
    // the k-term vanishes (1 - 1 = 0), leaving 1.
    QPolynomial f = QPolynomial::alpha(3, 1) * QPolynomial::alpha(3, 3) +
                    (QPolynomial::alpha(3, 2) * sym).scale_right(RQuat::unit_k());
    std::vector<double> pt = {1, 1, 1, 0, 0, 1};
    CHECK(f.eval(pt) == DQuat::one());
}

TEST_CASE("evaluation is a homomorphism") {
    Rng rng(43);
    for (int t = 0; t < 50; ++t) {
        QPolynomial p = random_poly(rng, 2), q = random_poly(rng, 2);
        auto point = random_eval_point(rng, 2);
        CHECK(approx((p * q).eval(point), p.eval(point) * q.eval(point), 1e-10));
        CHECK(approx((p + q).eval(point), p.eval(point) + q.eval(point), 1e-12));
    }
}

TEST_CASE("beta parity") {
    QPolynomial even = QPolynomial::alpha(2, 1) * QPolynomial::beta(2, 1) *
                       QPolynomial::beta(2, 1);
    CHECK(even.beta_parity(1).even);
    CHECK_FALSE(even.beta_parity(1).odd);

    QPolynomial odd = QPolynomial::beta(3, 1) * QPolynomial::alpha(3, 3);
    CHECK(odd.beta_parity(1).odd);
    CHECK_FALSE(odd.beta_parity(1).even);

    QPolynomial mixed = QPolynomial::alpha(2, 1) + QPolynomial::beta(2, 1);
    CHECK_FALSE(mixed.beta_parity(1).even);
    CHECK_FALSE(mixed.beta_parity(1).odd);

    QPolynomial zero(2);  // both
    CHECK(zero.beta_parity(1).even);
    CHECK(zero.beta_parity(1).odd);
}

TEST_CASE("canonical text round-trips") {
    Rng rng(47);
    for (int t = 0; t < 40; ++t) {
        QPolynomial p = random_poly(rng, 3);
        CHECK(parse_polynomial(p.to_string(), 3) == p);
    }
    CHECK(QPolynomial(2).to_string() == "0");
    CHECK(parse_polynomial("0", 2).is_zero());

    QPolynomial f23 = (QPolynomial::alpha(3, 3) * QPolynomial::beta(3, 2) *
                       QPolynomial::beta(3, 3))
                          .scale_right(RQuat::unit_k())
                          .scale_left(RQuat::real(Rational(2)));
    CHECK(f23.to_string() == "(2)*a3*b2*b3*k");
}
