#include "doctest.h"

#include "mincone/classify.hpp"
#include "mincone/clifford.hpp"

#include <sstream>

using namespace mincone;

TEST_CASE("hr_family produces anticommuting skew complex structures") {
    for (int k = 0; k <= 9; ++k) {
        HRFamily fam = hr_family(k);
        CHECK(fam.dim == delta(k + 1));
        CHECK(static_cast<int>(fam.matrices.size()) == k);
        Matrix id = Matrix::identity(fam.dim);
        for (std::size_t i = 0; i < fam.matrices.size(); ++i) {
            const Matrix& e = fam.matrices[i];
            CHECK(e.transpose() == -e);
            CHECK(e * e == -id);
            for (std::size_t j = i + 1; j < fam.matrices.size(); ++j)
                CHECK((e * fam.matrices[j] + fam.matrices[j] * e).is_zero());
        }
    }
}

TEST_CASE("irreducible systems satisfy the Clifford relations") {
    for (int q = 1; q <= 9; ++q) {
        CliffordSystem s = irreducible_system(q);
        CHECK(s.m == delta(q));
        CHECK(verify_system(s).pass);
    }
}

TEST_CASE("direct sums verify and count dimensions") {
    CliffordSystem s = direct_sum(2, 2, 1);
    CHECK(s.m == 6);
    CHECK(verify_system(s).pass);
    CHECK_THROWS_AS(direct_sum(1, 0, 0), std::invalid_argument);
}

TEST_CASE("verify_system reports precise witnesses") {
    CliffordSystem s = irreducible_system(1);
    s.matrices[1].at(0, 0) += Coefficient(1);
    auto check = verify_system(s);
    CHECK_FALSE(check.pass);
    CHECK_FALSE(check.witness.empty());
}

TEST_CASE("omega trace separates direct-sum sign classes for q = 4") {
    auto inv_40 = system_invariants(direct_sum(4, 2, 0));
    auto inv_31 = system_invariants(direct_sum(4, 1, 1));
    REQUIRE(inv_40.omega_trace_abs);
    REQUIRE(inv_31.omega_trace_abs);
    CHECK(*inv_40.omega_trace_abs != *inv_31.omega_trace_abs);
    // q not divisible by 4: no omega invariant
    CHECK_FALSE(system_invariants(irreducible_system(3)).omega_trace_abs);
}

TEST_CASE("conjugation preserves the relations and invariants") {
    CliffordSystem s = irreducible_system(4);
    Matrix a = rational_orthogonal(11, 2 * s.m);
    Matrix d = rational_orthogonal(12, s.q + 1);
    CliffordSystem t = conjugate_system(s, a, d);
    CHECK(verify_system(t).pass);
    CHECK(system_invariants(t).omega_trace_abs == system_invariants(s).omega_trace_abs);
    CHECK_THROWS_AS(conjugate_system(s, Matrix::identity(3), d), std::invalid_argument);
}

TEST_CASE("serialization round-trip") {
    CliffordSystem s = direct_sum(2, 1, 1);
    std::istringstream in(format_system(s));
    CliffordSystem t = parse_system(in);
    CHECK(t.q == s.q);
    CHECK(t.m == s.m);
    for (int i = 0; i <= s.q; ++i) CHECK(t.matrices[i] == s.matrices[i]);

    std::istringstream bad("clifford q=0 m=1\n");
    CHECK_THROWS_AS(parse_system(bad), std::invalid_argument);
}
