#include "doctest.h"

#include "mincone/polynomial.hpp"

using namespace mincone;

TEST_CASE("parse and format round-trip in the canonical grammar") {
    Polynomial f = parse_poly("3/2*s3*x4*x1^2 - x2^2", 4);
    CHECK(f.dimension() == 4);
    CHECK(f.term_count() == 2);
    CHECK(format_poly(f) == "3/2*s3*x1^2*x4 - x2^2");
    CHECK(parse_poly(format_poly(f), 4) == f);

    Polynomial g = parse_poly("x1^2*x3 - x2^2*x3 + 2*x1*x2*x4", -1);
    CHECK(g.dimension() == 4);
    CHECK(format_poly(g) == "x1^2*x3 - x2^2*x3 + 2*x1*x2*x4");
}

TEST_CASE("parser rejects malformed input") {
    CHECK_THROWS_AS(parse_poly("x1*x1", 2), std::invalid_argument);   // repeated factor
    CHECK_THROWS_AS(parse_poly("x0", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("x3", 2), std::invalid_argument);      // out of dimension
    CHECK_THROWS_AS(parse_poly("1 +", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("x1^300", 2), std::invalid_argument);  // exponent cap
}

TEST_CASE("grevlex ordering, x1 most significant") {
    Polynomial f = parse_poly("x2^2 + x1*x3 + x1^3", 3);
    auto it = f.terms().begin();
    CHECK(total_degree(it->first) == 3);      // x1^3 first
    ++it;
    CHECK(it->first == Monomial{0, 2, 0});    // x2^2 beats x1*x3 in grevlex
    ++it;
    CHECK(it->first == Monomial{1, 0, 1});
}

TEST_CASE("arithmetic, derivative, evaluation") {
    Polynomial f = parse_poly("x1^2 + 2*x1*x2", 2);
    CHECK(f.derivative(1) == parse_poly("2*x1 + 2*x2", 2));
    CHECK(f.derivative(2) == parse_poly("2*x1", 2));
    std::vector<Coefficient> pt = {Coefficient(3), Coefficient::sqrt2()};
    CHECK(f.evaluate(pt) == Coefficient(9) + Coefficient(6) * Coefficient::sqrt2());
    CHECK((f - f).is_zero());
    CHECK(f.is_homogeneous());
    CHECK_FALSE(parse_poly("x1^2 + x2", 2).is_homogeneous());
}

TEST_CASE("exact division with witness") {
    Polynomial f = parse_poly("x1 + x2", 2);
    Polynomial q = parse_poly("x1^2 - x2^2 + 3*x1", 2);
    auto res = exact_divide(f * q, f);
    REQUIRE(res.ok);
    CHECK(res.quotient == q);

    auto bad = exact_divide(parse_poly("x1^2 + x2", 2), parse_poly("x1", 2));
    CHECK_FALSE(bad.ok);
    CHECK_FALSE(bad.witness.empty());
}

TEST_CASE("polynomial square root") {
    Polynomial f = parse_poly("x1^2 + 2*x1*x2 + x2^2", 2);
    auto root = poly_sqrt(f);
    REQUIRE(root);
    CHECK(*root == parse_poly("x1 + x2", 2));
    CHECK_FALSE(poly_sqrt(parse_poly("x1^2 + x2^2", 2)));
    // field-coefficient leading term: 2 x1^2 has sqrt s2 x1
    auto r2 = poly_sqrt(parse_poly("2*x1^2", 2));
    REQUIRE(r2);
    CHECK(*r2 == parse_poly("s2*x1", 2));
}

TEST_CASE("linear substitution") {
    Polynomial f = parse_poly("x1^2 + x2^2", 2);
    // rotation by the rational-orthogonal (3/5, 4/5; -4/5, 3/5)
    std::vector<Coefficient> m = {Coefficient::rational(3, 5), Coefficient::rational(4, 5),
                                  Coefficient::rational(-4, 5), Coefficient::rational(3, 5)};
    CHECK(f.substitute_linear(m) == f);
}
