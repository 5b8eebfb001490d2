#include <doctest.h>

#include <json.hpp>

#include "qslice/json_io.hpp"
#include "qslice/sampling.hpp"
#include "qslice/text.hpp"

using namespace qslice;

TEST_CASE("quaternion literals") {
    CHECK(parse_quaternion_literal("1+2i") ==
          RQuat(Rational(1), Rational(2), Rational(0), Rational(0)));
    CHECK(parse_quaternion_literal("3/4-k") ==
          RQuat(rational(3, 4), Rational(0), Rational(0), Rational(-1)));
    CHECK(parse_quaternion_literal("1.5") == RQuat::real(rational(3, 2)));
    CHECK(parse_quaternion_literal("(1,2,3,4)") ==
          RQuat(Rational(1), Rational(2), Rational(3), Rational(4)));
    CHECK(parse_quaternion_literal("(1/2,-1,0,0.25)") ==
          RQuat(rational(1, 2), Rational(-1), Rational(0), rational(1, 4)));
    CHECK(parse_quaternion_literal("-j") == -RQuat::unit_j());
    CHECK_THROWS_AS(parse_quaternion_literal("1+"), SyntaxError);
    CHECK_THROWS_AS(parse_quaternion_literal("(1,2)"), SyntaxError);
    CHECK_THROWS_AS(parse_quaternion_literal("2/0"), SyntaxError);

    Rng rng(199);
    for (int t = 0; t < 40; ++t) {
        RQuat q = random_rational_quaternion(rng);
        CHECK(parse_quaternion_literal(quaternion_literal(q)) == q);
    }
}

TEST_CASE("expression parsing") {
    Expression e = parse_expression("x1*x3 + x2*x3^2*k", 3);
    REQUIRE(e.terms.size() == 2);
    CHECK(e.terms[0].vars == std::vector<std::uint32_t>{1, 3});
    CHECK(e.terms[0].coeff == RQuat::one());
    CHECK(e.terms[1].vars == std::vector<std::uint32_t>{2, 3, 3});
    CHECK(e.terms[1].coeff == RQuat::unit_k());

    CHECK_THROWS_AS(parse_expression("x2*x1", 2), NonOrderedMonomial);

    Expression c = parse_expression("k", 1);
    REQUIRE(c.terms.size() == 1);
    CHECK(c.terms[0].vars.empty());
    CHECK(c.terms[0].coeff == RQuat::unit_k());

    Expression neg = parse_expression("-x1*2i + 3/4", 1);
    REQUIRE(neg.terms.size() == 2);
    CHECK(neg.terms[0].coeff == RQuat(Rational(0), Rational(-2), Rational(0), Rational(0)));
    CHECK(neg.terms[1].coeff == RQuat::real(rational(3, 4)));

    // constants fold into the right coefficient in written order
    Expression mid = parse_expression("i*x1*j", 1);
    REQUIRE(mid.terms.size() == 1);
    CHECK(mid.terms[0].vars == std::vector<std::uint32_t>{1});
    CHECK(mid.terms[0].coeff == RQuat::unit_k());

    Expression tup = parse_expression("x1*(0,1,1,0)", 2);
    CHECK(tup.terms[0].coeff == RQuat(Rational(0), Rational(1), Rational(1), Rational(0)));

    Expression pow = parse_expression("x2^3", 2);
    CHECK(pow.terms[0].vars == std::vector<std::uint32_t>{2, 2, 2});
    CHECK(parse_expression("k^2", 1).terms[0].coeff == -RQuat::one());

    CHECK_THROWS_AS(parse_expression("x5", 3), SyntaxError);
    CHECK_THROWS_AS(parse_expression("x1 +", 1), SyntaxError);
    CHECK_THROWS_AS(parse_expression("x1 x2", 2), SyntaxError);
    try {
        parse_expression("x1 * $", 1);
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& err) {
        CHECK(err.position() == 5);
    }
}

TEST_CASE("expression printing canonicalizes and round-trips") {
    Expression e = parse_expression("x1*x3+x2*x3*x3*k", 3);
    std::string printed = print_expression(e.terms);
    CHECK(printed == "x1*x3 + x2*x3^2*k");
    Expression again = parse_expression(printed, 3);
    CHECK(print_expression(again.terms) == printed);

    Rng rng(211);
    for (int t = 0; t < 40; ++t) {
        auto terms = random_ordered_monomials(rng, 3, 3, 4);
        std::string text = print_expression(terms);
        Expression parsed = parse_expression(text, 3);
        REQUIRE(parsed.terms.size() == terms.size());
        for (std::size_t s = 0; s < terms.size(); ++s) {
            CHECK(parsed.terms[s].vars == terms[s].vars);
            CHECK(parsed.terms[s].coeff == terms[s].coeff);
        }
        CHECK(print_expression(parsed.terms) == text);
    }
}

TEST_CASE("point list parsing") {
    auto pts = parse_point_list("(0,1,0,0);(0,0,1,0);(0,0,0,1)", 3);
    REQUIRE(pts.size() == 3);
    CHECK(pts[0] == DQuat::unit_i());
    CHECK(pts[1] == DQuat::unit_j());
    CHECK(pts[2] == DQuat::unit_k());

    auto mixed = parse_point_list("(1/2,-0.25,1e-3,2)", 1);
    CHECK(mixed[0].w == doctest::Approx(0.5));
    CHECK(mixed[0].x == doctest::Approx(-0.25));
    CHECK(mixed[0].y == doctest::Approx(1e-3));

    CHECK_THROWS_AS(parse_point_list("(0,1,0,0)", 2), ArityMismatch);
    CHECK_THROWS_AS(parse_point_list("(0,1,0)", 1), SyntaxError);
}

TEST_CASE("subset parsing and rendering") {
    CHECK(to_string(SubsetIndex::of({1, 3})) == "{1,3}");
    CHECK(to_string(SubsetIndex::empty()) == "{}");
    CHECK(parse_subset("{1,3}", 3) == SubsetIndex::of({1, 3}));
    CHECK(parse_subset("{}", 3) == SubsetIndex::empty());
    CHECK_THROWS_AS(parse_subset("{4}", 3), IndexOutOfRange);
    CHECK_THROWS_AS(parse_subset("{1,", 3), SyntaxError);
}

TEST_CASE("stem JSON dump and reload") {
    StemFunction f = from_ordered_monomials(
        {{{1, 3}, RQuat::one()}, {{2, 3, 3}, RQuat::unit_k()}}, 3);
    std::string dump = stem_to_json(f);

    auto parsed = nlohmann::json::parse(dump);
    CHECK(parsed["arity"] == 3);
    CHECK(parsed["components"].size() == 8);  // all subsets listed
    CHECK(parsed["components"]["{1,3}"] == "(1)*b1*b3");
    CHECK(parsed["components"]["{1,2}"] == "0");
    CHECK(parsed["components"]["{2,3}"] == "(2)*a3*b2*b3*k");

    CHECK(stem_from_json(dump) == f);

    Rng rng(223);
    for (int t = 0; t < 20; ++t) {
        StemFunction g = random_parity_stem(rng, 3, 4, 2);
        CHECK(stem_from_json(stem_to_json(g)) == g);
    }
}

TEST_CASE("classification report JSON shape") {
    StemFunction f = stem_tensor(coordinate_stem(1, 2), coordinate_stem(2, 2));
    auto parsed = nlohmann::json::parse(classification_to_json(classify(f)));
    CHECK(parsed["arity"] == 2);
    CHECK(parsed["slice_regular"] == true);
    REQUIRE(parsed["variables"].size() == 2);
    CHECK(parsed["variables"][1]["h"] == 2);
    CHECK(parsed["variables"][1]["slice_wrt"] == false);
    CHECK(parsed["variables"][1]["witnesses"][0]["component"] == "{1,2}");
}

TEST_CASE("verification and evaluation JSON") {
    VerificationReport report;
    report.theorem = "leibniz";
    report.statement = "(f(*)g)'_h = f'_h(*)g°_h + f°_h(*)g'_h";
    report.samples = 200;
    report.max_residual = 0.0;
    report.tolerance = 0.0;
    report.pass = true;
    report.seed = 42;
    auto parsed = nlohmann::json::parse(verification_to_json(report));
    CHECK(parsed["theorem"] == "leibniz");
    CHECK(parsed["pass"] == true);
    CHECK(parsed["seed"] == 42);

    PointHn x = {DQuat(0, 1, 0, 0)};
    auto ev = nlohmann::json::parse(evaluation_to_json(x, DQuat(0, 0, -1, 0)));
    CHECK(ev["value"][2] == -1.0);
}
