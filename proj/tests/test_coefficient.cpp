#include "doctest.h"

#include "mincone/coefficient.hpp"

using namespace mincone;

TEST_CASE("field arithmetic on the basis 1, s2, s3, s6") {
    Coefficient s2 = Coefficient::sqrt2(), s3 = Coefficient::sqrt3(), s6 = Coefficient::sqrt6();
    CHECK(s2 * s2 == Coefficient(2));
    CHECK(s3 * s3 == Coefficient(3));
    CHECK(s6 * s6 == Coefficient(6));
    CHECK(s2 * s3 == s6);
    CHECK(s2 * s6 == Coefficient(2) * s3);
    CHECK(s3 * s6 == Coefficient(3) * s2);
}

TEST_CASE("inverse via Galois conjugates") {
    Coefficient x(mpq_class(3, 2), mpq_class(-1), mpq_class(1, 3), mpq_class(2));
    CHECK(x * x.inverse() == Coefficient(1));
    CHECK(Coefficient::sqrt2().inverse() == Coefficient(mpq_class(0), mpq_class(1, 2), mpq_class(0), mpq_class(0)));
    CHECK_THROWS_AS(Coefficient().inverse(), std::domain_error);
}

TEST_CASE("exact sign without floating point") {
    // s2 + s3 - s6 + 1/10 > 0; s6 - s2 - s3 + ... borderline combinations
    Coefficient a = Coefficient::sqrt2() + Coefficient::sqrt3() - Coefficient::sqrt6();
    CHECK(a.sign() > 0);  // 1.414 + 1.732 - 2.449 > 0
    Coefficient b = Coefficient::sqrt6() - Coefficient::sqrt2() - Coefficient::sqrt3();
    CHECK(b.sign() < 0);
    CHECK(Coefficient().sign() == 0);
    // 140/99 < sqrt2 < 99/70 (continued-fraction bounds)
    CHECK((Coefficient::sqrt2() - Coefficient::rational(140, 99)).sign() > 0);
    CHECK((Coefficient::sqrt2() - Coefficient::rational(99, 70)).sign() < 0);
}

TEST_CASE("square roots inside the field") {
    Coefficient two(2);
    REQUIRE(two.sqrt_in_field());
    CHECK(*two.sqrt_in_field() == Coefficient::sqrt2());
    // (1 + s2)^2 = 3 + 2 s2
    Coefficient sq = (Coefficient(1) + Coefficient::sqrt2()) * (Coefficient(1) + Coefficient::sqrt2());
    REQUIRE(sq.sqrt_in_field());
    CHECK(*sq.sqrt_in_field() == Coefficient(1) + Coefficient::sqrt2());
    CHECK_FALSE(Coefficient(5).sqrt_in_field());
    CHECK_FALSE(Coefficient(-1).sqrt_in_field());
    CHECK(*Coefficient(mpq_class(9, 4)).sqrt_in_field() == Coefficient::rational(3, 2));
}

TEST_CASE("string rendering") {
    CHECK(Coefficient::rational(3, 2).to_string() == "3/2");
    CHECK((Coefficient::rational(-1, 2) * Coefficient::sqrt3()).to_string() == "-1/2*s3");
    CHECK(Coefficient(0).to_string() == "0");
    Coefficient mix = Coefficient(1) + Coefficient::rational(1, 3) * Coefficient::sqrt6();
    CHECK(mix.to_string() == "1+1/3*s6");
}
