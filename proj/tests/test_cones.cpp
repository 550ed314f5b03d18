#include "doctest.h"

#include "mincone/cones.hpp"
#include "mincone/diffgeom.hpp"

#include <sstream>

using namespace mincone;

TEST_CASE("Lawson cubic from the canonical q=1 system") {
    auto cone = clifford_cubic(irreducible_system(1));
    CHECK(cone.n == 4);
    CHECK(format_poly(cone.polynomial) == "x1^2*x3 - x2^2*x3 + 2*x1*x2*x4");
}

TEST_CASE("Clifford cubic gradient identity") {
    auto s = irreducible_system(2);
    auto cone = clifford_cubic(s);
    const int n = cone.n;
    // |grad Phi|^2 = 4|y|^2|z|^2 + sum_i (y^T A_i y)^2
    Polynomial y2(n), z2(n);
    for (int i = 1; i <= 2 * s.m; ++i) y2 += Polynomial::variable(n, i) * Polynomial::variable(n, i);
    for (int i = 2 * s.m + 1; i <= n; ++i) z2 += Polynomial::variable(n, i) * Polynomial::variable(n, i);
    Polynomial rhs = (y2 * z2).scaled(Coefficient(4));
    for (int i = 0; i <= s.q; ++i) {
        Polynomial form(n);
        for (int r = 0; r < 2 * s.m; ++r)
            for (int c = 0; c < 2 * s.m; ++c)
                if (!s.matrices[i].at(r, c).is_zero()) {
                    Monomial mono(n, 0);
                    mono[r] += 1;
                    mono[c] += 1;
                    form.add_term(mono, s.matrices[i].at(r, c));
                }
        rhs += form * form;
    }
    CHECK(gradient_norm_sq(cone.polynomial) == rhs);
    CHECK(laplacian(cone.polynomial).is_zero());
}

TEST_CASE("quadric cones") {
    auto cone = quadric_cone(2, 3);
    CHECK(cone.n == 5);
    CHECK(cone.polynomial == parse_poly("2*x1^2 + 2*x2^2 - x3^2 - x4^2 - x5^2", 5));
    CHECK_THROWS_AS(quadric_cone(1, 3), std::invalid_argument);
}

TEST_CASE("determinant cone and its weight formula") {
    auto psi2 = determinant_cone(2);
    CHECK(psi2.polynomial == parse_poly("x1*x4 - x2*x3", 4));
    auto rep = verify_eigenfunction(psi2.polynomial);
    CHECK(rep.is_eigenfunction);
    CHECK(rep.weight == det_weight_formula(2));
    CHECK(rep.weight == Polynomial::constant(4, Coefficient(-2)));

    auto rep3 = verify_eigenfunction(determinant_cone(3).polynomial);
    REQUIRE(rep3.tau);
    CHECK(*rep3.tau == Coefficient(-1));
    CHECK(rep3.is_radial);
    REQUIRE(rep3.radial_constant);
    CHECK(*rep3.radial_constant == Coefficient(-2));
    CHECK_THROWS_AS(determinant_cone(7), std::invalid_argument);
}

TEST_CASE("Cartan cubics are harmonic radial eigenfunctions") {
    for (int d : {1, 2}) {
        auto cone = cartan_cubic(d);
        CHECK(cone.n == 3 * d + 2);
        auto rep = verify_eigenfunction(cone.polynomial);
        CHECK(rep.is_eigenfunction);
        CHECK(rep.is_harmonic);
        REQUIRE(rep.radial_constant);
        CHECK(*rep.radial_constant == Coefficient(-54));
        REQUIRE(rep.tau);
        CHECK(*rep.tau == Coefficient(d));
    }
    CHECK_THROWS_AS(cartan_cubic(3), std::invalid_argument);
}

TEST_CASE("Hsiang cubic") {
    auto cone = hsiang_cubic();
    CHECK(cone.n == 9);
    auto rep = verify_eigenfunction(cone.polynomial);
    CHECK(rep.is_eigenfunction);
    CHECK(rep.is_harmonic);
    REQUIRE(rep.radial_constant);
    CHECK(*rep.radial_constant == Coefficient(-2));
    REQUIRE(rep.tau);
    CHECK(*rep.tau == Coefficient(-1));
}

TEST_CASE("reducible example is a non-radial eigenfunction") {
    auto rep = verify_eigenfunction(reducible_example().polynomial);
    CHECK(rep.is_eigenfunction);
    CHECK_FALSE(rep.is_radial);
    CHECK(rep.weight == parse_poly("-28*x1^2 - 28*x2^2 - 10*x3^2 - 10*x4^2 - 10*x5^2 - 16*x6^2", 6));
}

TEST_CASE("FKM quartic construction") {
    auto cone = fkm_quartic(irreducible_system(1));
    CHECK(cone.n == 2);
    CHECK(cone.polynomial.degree() == 4);
    CHECK(cone.polynomial.is_homogeneous());
}

TEST_CASE("irreducibility certificate") {
    for (int q = 1; q <= 6; ++q) {
        auto cert = irreducibility_certificate(irreducible_system(q));
        CHECK(cert.pass);
        CHECK(cert.discriminant == parse_poly("4*x1^2*x4^2 + 4*x2^2*x4^2", 4));
    }
    // mixed-sign direct sums leave the canonical chart
    auto cert = irreducibility_certificate(direct_sum(1, 1, 1));
    CHECK_FALSE(cert.pass);
    CHECK(cert.diagnostic == "non-canonical coordinates");
}

TEST_CASE("cone serialization round-trip") {
    for (auto cone : {clifford_cubic(irreducible_system(2)), quadric_cone(3, 4),
                      determinant_cone(3), cartan_cubic(2), hsiang_cubic(), reducible_example()}) {
        std::istringstream in(format_cone(cone));
        ConeSpec back = parse_cone(in);
        CHECK(back.family == cone.family);
        CHECK(back.n == cone.n);
        CHECK(back.params == cone.params);
        CHECK(back.polynomial == cone.polynomial);
    }
    std::istringstream bad("not a header\n");
    CHECK_THROWS_AS(parse_cone(bad), std::invalid_argument);
}
