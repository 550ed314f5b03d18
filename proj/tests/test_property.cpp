#include "doctest.h"

#include "mincone/cones.hpp"
#include "mincone/diffgeom.hpp"

#include <random>

using namespace mincone;

namespace {

Coefficient random_coeff(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3), part(0, 3);
    mpq_class comps[4] = {0, 0, 0, 0};
    comps[part(rng)] = mpq_class(num(rng), den(rng));
    for (auto& c : comps) c.canonicalize();
    return Coefficient(comps[0], comps[1], comps[2], comps[3]);
}

Polynomial random_poly(std::mt19937_64& rng, int n, int max_deg, int terms) {
    Polynomial f(n);
    std::uniform_int_distribution<int> deg(0, max_deg), var(0, n - 1);
    for (int t = 0; t < terms; ++t) {
        Monomial m(n, 0);
        int d = deg(rng);
        for (int i = 0; i < d; ++i) m[var(rng)] += 1;
        f.add_term(m, random_coeff(rng));
    }
    return f;
}

std::vector<Coefficient> rowmajor(const Matrix& m) {
    return m.data();
}

} // namespace

TEST_CASE("ring laws on random polynomials") {
    std::mt19937_64 rng(101);
    for (int t = 0; t < 100; ++t) {
        Polynomial a = random_poly(rng, 3, 3, 4);
        Polynomial b = random_poly(rng, 3, 3, 4);
        Polynomial c = random_poly(rng, 3, 3, 4);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a + b).derivative(1) == a.derivative(1) + b.derivative(1));
        CHECK((a * b).derivative(2) == a.derivative(2) * b + a * b.derivative(2));
    }
}

TEST_CASE("substitution is a ring homomorphism") {
    std::mt19937_64 rng(202);
    Matrix u = rational_orthogonal(5, 3);
    for (int t = 0; t < 40; ++t) {
        Polynomial a = random_poly(rng, 3, 2, 3);
        Polynomial b = random_poly(rng, 3, 2, 3);
        CHECK((a * b).substitute_linear(rowmajor(u))
              == a.substitute_linear(rowmajor(u)) * b.substitute_linear(rowmajor(u)));
        CHECK((a + b).substitute_linear(rowmajor(u))
              == a.substitute_linear(rowmajor(u)) + b.substitute_linear(rowmajor(u)));
    }
}

TEST_CASE("exact_divide and poly_sqrt round-trips") {
    std::mt19937_64 rng(303);
    for (int t = 0; t < 100; ++t) {
        Polynomial f = random_poly(rng, 3, 2, 3);
        Polynomial q = random_poly(rng, 3, 2, 3);
        if (f.is_zero()) continue;
        auto res = exact_divide(f * q, f);
        REQUIRE(res.ok);
        CHECK(res.quotient == q);
        auto root = poly_sqrt(f * f);
        REQUIRE(root);
        CHECK((*root == f || *root == -f));
    }
}

TEST_CASE("L is invariant under orthogonal substitution") {
    Polynomial lawson = clifford_cubic(irreducible_system(1)).polynomial;
    auto base = verify_eigenfunction(lawson);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Matrix u = rational_orthogonal(seed, 4);
        Polynomial g = lawson.substitute_linear(rowmajor(u));
        auto rep = verify_eigenfunction(g);
        CHECK(rep.is_eigenfunction);
        CHECK(rep.radial_constant == base.radial_constant);
        CHECK(rep.tau == base.tau);
        // weight corresponds under the substitution
        Polynomial lf = mean_curvature_operator(lawson);
        CHECK(mean_curvature_operator(g) == lf.substitute_linear(rowmajor(u)));
    }
}
