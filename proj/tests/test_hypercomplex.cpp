#include "doctest.h"

#include "mincone/hypercomplex.hpp"

using namespace mincone;

TEST_CASE("basis multiplication tables") {
    // complex: e1*e1 = -1
    CHECK(cd_basis_mul(2, 1, 1) == std::pair{-1, 0});
    // quaternions: e1 e2 = e3, e2 e1 = -e3
    CHECK(cd_basis_mul(4, 1, 2) == std::pair{1, 3});
    CHECK(cd_basis_mul(4, 2, 1) == std::pair{-1, 3});
    CHECK(cd_basis_mul(4, 3, 3) == std::pair{-1, 0});
    // octonions: imaginary units square to -1, unit acts as identity
    for (int i = 1; i < 8; ++i) CHECK(cd_basis_mul(8, i, i) == std::pair{-1, 0});
    for (int i = 0; i < 8; ++i) {
        CHECK(cd_basis_mul(8, 0, i) == std::pair{1, i});
        CHECK(cd_basis_mul(8, i, 0) == std::pair{1, i});
    }
}

TEST_CASE("symbolic multiplication matches the basis table") {
    for (int d : {2, 4, 8}) {
        CDElement x = CDElement::from_variables(2 * d, 0, d);
        CDElement y = CDElement::from_variables(2 * d, d, d);
        CDElement xy = cd_multiply(x, y);
        // coefficient of x_{i+1} x_{d+j+1} in component k must match cd_basis_mul
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                auto [sign, k] = cd_basis_mul(d, i, j);
                Monomial m(2 * d, 0);
                m[i] += 1;
                m[d + j] += 1;
                CHECK(xy.components[k].coefficient(m) == Coefficient(sign));
            }
    }
}

TEST_CASE("conjugation and norm") {
    CDElement x = CDElement::from_variables(8, 0, 4);
    CDElement xc = cd_conjugate(x);
    CHECK(xc.components[0] == x.components[0]);
    CHECK(xc.components[1] == -x.components[1]);
    Polynomial n = cd_norm(x);
    CHECK(cd_real(cd_multiply(x, cd_conjugate(x))) == n);
    CHECK(n == parse_poly("x1^2 + x2^2 + x3^2 + x4^2", 8));
}

TEST_CASE("norm composition for all four algebras") {
    for (int d : {1, 2, 4, 8}) {
        CDElement x = CDElement::from_variables(2 * d, 0, d);
        CDElement y = CDElement::from_variables(2 * d, d, d);
        CHECK(cd_norm(cd_multiply(x, y)) == cd_norm(x) * cd_norm(y));
    }
}

TEST_CASE("quaternions associate, octonions do not") {
    CDElement x = CDElement::from_variables(12, 0, 4);
    CDElement y = CDElement::from_variables(12, 4, 4);
    CDElement z = CDElement::from_variables(12, 8, 4);
    CHECK(cd_multiply(cd_multiply(x, y), z) == cd_multiply(x, cd_multiply(y, z)));

    auto [s12, i12] = cd_basis_mul(8, 1, 2);
    auto [sl, il] = cd_basis_mul(8, i12, 4);
    auto [s24, i24] = cd_basis_mul(8, 2, 4);
    auto [sr, ir] = cd_basis_mul(8, 1, i24);
    CHECK(il == ir);
    CHECK(s12 * sl == -s24 * sr);
}
