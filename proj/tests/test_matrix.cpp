#include "doctest.h"

#include "mincone/matrix.hpp"

using namespace mincone;

TEST_CASE("exact inverse and orthogonality") {
    Matrix m(2, 2);
    m.at(0, 0) = Coefficient(1) + Coefficient::sqrt2();
    m.at(0, 1) = Coefficient(1);
    m.at(1, 0) = Coefficient(0);
    m.at(1, 1) = Coefficient::rational(1, 3);
    Matrix inv = m.inverse();
    CHECK(m * inv == Matrix::identity(2));
    CHECK_THROWS_AS(Matrix(2, 2).inverse(), std::domain_error);
}

TEST_CASE("rational_orthogonal is exactly orthogonal and deterministic") {
    for (std::uint64_t seed : {1ull, 7ull, 424242ull}) {
        Matrix u = rational_orthogonal(seed, 5);
        CHECK(u.is_orthogonal());
        CHECK(u == rational_orthogonal(seed, 5));
    }
    CHECK_FALSE(rational_orthogonal(1, 4) == rational_orthogonal(2, 4));
}

TEST_CASE("block placement and transpose") {
    Matrix a(4, 4);
    a.set_block(0, 2, Matrix::identity(2));
    CHECK(a.at(0, 2) == Coefficient(1));
    CHECK(a.at(1, 3) == Coefficient(1));
    CHECK(a.transpose().at(2, 0) == Coefficient(1));
    CHECK(a.trace() == Coefficient(0));
}
