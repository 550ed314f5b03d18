#include "mincone/acceptance.hpp"

#include "mincone/classify.hpp"
#include "mincone/cones.hpp"
#include "mincone/diffgeom.hpp"
#include "mincone/hypercomplex.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

namespace mincone {

namespace {

using Clock = std::chrono::steady_clock;

CliffordSystem system_for(int q, int m) {
    int d = delta(q);
    return m == d ? irreducible_system(q) : direct_sum(q, m / d, 0);
}

// (q, m) with delta(q) | m and 2m+q+1 <= 24, plus (9, 16).
std::vector<std::pair<int, int>> clifford_test_pairs() {
    std::vector<std::pair<int, int>> out;
    for (int q = 1; q <= 20; ++q) {
        int d = delta(q);
        for (int m = d; 2 * m + q + 1 <= 24; m += d) out.emplace_back(q, m);
    }
    out.emplace_back(9, 16);
    return out;
}

Polynomial norm_sq_poly(int n) {
    Polynomial out(n);
    for (int i = 0; i < n; ++i) {
        Monomial mono(n, 0);
        mono[i] = 2;
        out.add_term(mono, Coefficient(1));
    }
    return out;
}

// Row-major entries of blockdiag(blocks...) padded with identity to n.
std::vector<Coefficient> embed_block(const Matrix& block, int n, int offset) {
    std::vector<Coefficient> m(n * n);
    for (int i = 0; i < n; ++i) m[i * n + i] = Coefficient(1);
    for (int i = 0; i < block.rows(); ++i)
        for (int j = 0; j < block.cols(); ++j)
            m[(offset + i) * n + (offset + j)] = block.at(i, j);
    return m;
}

CriterionResult criterion1() {
    CriterionResult r{1, true, "", 0};
    std::ostringstream detail;
    int checked = 0;
    for (auto [q, m] : clifford_test_pairs()) {
        auto cone = clifford_cubic(system_for(q, m));
        auto rep = verify_eigenfunction(cone.polynomial);
        Polynomial trh = hessian_trace_cube(cone.polynomial);
        bool ok = rep.is_eigenfunction && rep.is_radial && rep.is_harmonic
               && rep.radial_constant && *rep.radial_constant == Coefficient(-8)
               && rep.tau && *rep.tau == Coefficient(q - 1)
               && trh == cone.polynomial.scaled(Coefficient(24 * (1 - q)));
        if (!ok) {
            r.pass = false;
            detail << "(q=" << q << ",m=" << m << ") failed; ";
        }
        ++checked;
    }
    detail << checked << " pairs checked";
    r.detail = detail.str();
    return r;
}

CriterionResult criterion2() {
    CriterionResult r{2, true, "", 0};
    std::ostringstream detail;
    for (int m = 2; m <= 5; ++m) {
        auto cone = determinant_cone(m);
        auto rep = verify_eigenfunction(cone.polynomial);
        if (!rep.is_eigenfunction || rep.weight != det_weight_formula(m)) {
            r.pass = false;
            detail << "m=" << m << " eigenfunction/formula failed; ";
        }
        if (m == 3) {
            Polynomial pinned = norm_sq_poly(9).scaled(Coefficient::rational(-1, 2));
            if (rep.weight != pinned) {
                r.pass = false;
                detail << "m=3 pinned weight -(1/2)|x|^2 does not hold: actual weight is "
                       << format_poly(rep.weight).substr(0, 24) << "...; ";
            }
        }
    }
    if (r.pass) detail << "m=2..5 eigenfunctions match closed formula";
    r.detail = detail.str();
    return r;
}

CriterionResult criterion3(double budget_seconds) {
    CriterionResult r{3, true, "", 0};
    std::ostringstream detail;
    for (int d : {1, 2, 4}) {
        auto cone = cartan_cubic(d);
        auto rep = verify_eigenfunction(cone.polynomial);
        bool ok = rep.is_eigenfunction && rep.is_harmonic && rep.is_radial
               && rep.radial_constant && *rep.radial_constant == Coefficient(-54);
        // Invariance under an exact orthogonal change of X-coordinates;
        // a sub-block of bounded size keeps the rotated cubic sparse.
        int block = std::min(3 * d, 6);
        Matrix rot = rational_orthogonal(4242 + d, block);
        Polynomial g = cone.polynomial.substitute_linear(embed_block(rot, cone.n, 0));
        auto rep2 = verify_eigenfunction(g);
        ok = ok && rep2.is_radial && rep2.radial_constant
                && *rep2.radial_constant == Coefficient(-54) && rep2.is_harmonic;
        if (!ok) {
            r.pass = false;
            detail << "d=" << d << " failed; ";
        }
    }
    if (budget_seconds >= 30.0) {
        auto rep = verify_eigenfunction(cartan_cubic(8).polynomial);
        bool ok = rep.is_eigenfunction && rep.is_harmonic && rep.is_radial
               && rep.radial_constant && *rep.radial_constant == Coefficient(-54);
        if (!ok) {
            r.pass = false;
            detail << "d=8 failed; ";
        } else {
            detail << "d=1,2,4,8 radial with c=-54, rotation-invariant";
        }
    } else {
        detail << "d=1,2,4 radial with c=-54, rotation-invariant; d=8 skipped (budget)";
    }
    r.detail = detail.str();
    return r;
}

CriterionResult criterion4() {
    CriterionResult r{4, true, "", 0};
    auto rep = verify_eigenfunction(hsiang_cubic().polynomial);
    auto rep_det = verify_eigenfunction(determinant_cone(3).polynomial);
    bool ok = rep.is_eigenfunction && rep.is_radial && rep.tau && rep_det.tau
           && *rep.tau == *rep_det.tau;
    r.pass = ok;
    std::ostringstream detail;
    if (ok)
        detail << "radial with c=" << rep.radial_constant->to_string()
               << ", tau = tau(det cubic) = " << rep.tau->to_string();
    else
        detail << "Hsiang cubic check failed";
    r.detail = detail.str();
    return r;
}

CriterionResult criterion5() {
    CriterionResult r{5, true, "", 0};
    for (int p = 2; p <= 6; ++p)
        for (int q = 2; q <= 6; ++q) {
            auto cone = quadric_cone(p, q);
            auto rep = verify_eigenfunction(cone.polynomial);
            Polynomial expected = Polynomial::constant(cone.n, Coefficient(-8 * (p - 1) * (q - 1)));
            if (!rep.is_eigenfunction || rep.weight != expected) r.pass = false;
        }
    r.detail = r.pass ? "2<=p,q<=6: constant weight -8(p-1)(q-1)" : "quadric weight mismatch";
    return r;
}

CriterionResult criterion6() {
    CriterionResult r{6, true, "", 0};
    static const int expected[18] = {1, 0, 1, 1, 1, 0, 1, 1, 2, 1, 1, 1, 1, 0, 1, 1, 2, 2};
    std::ostringstream got;
    for (long n = 4; n <= 21; ++n) {
        int c = congruence_class_count(n).class_count;
        got << c << (n < 21 ? "," : "");
        if (c != expected[n - 4]) r.pass = false;
    }
    r.detail = (r.pass ? "counts n=4..21: " : "MISMATCH n=4..21: ") + got.str();
    return r;
}

CriterionResult criterion7() {
    CriterionResult r{7, true, "", 0};
    auto listed = realizability_scan(4, 2066);
    bool only_expected_shape = true;
    for (long n : listed)
        if (n != 5 && n != 9 && n % 16 != 1) only_expected_shape = false;
    std::vector<long> missing;
    for (long k = 1; k <= 128; ++k) {
        long n = 16 * k + 1;
        if (!std::binary_search(listed.begin(), listed.end(), n)) missing.push_back(n);
    }
    bool all_listed = missing.empty();
    bool r2065 = is_realizable(2065);
    r.pass = only_expected_shape && all_listed && r2065;
    std::ostringstream detail;
    detail << "shape {5,9}+{16k+1}: " << (only_expected_shape ? "pass" : "fail")
           << "; all k<=128 listed: " << (all_listed ? "pass" : "fail");
    if (!all_listed) {
        detail << " (realizable via (q,m)=(16,128p), rho(128)=16:";
        for (long n : missing) detail << " " << n;
        detail << ")";
    }
    detail << "; 2065 realizable: " << (r2065 ? "pass" : "fail");
    r.detail = detail.str();
    return r;
}

CriterionResult criterion8() {
    CriterionResult r{8, true, "", 0};
    auto rep = verify_eigenfunction(reducible_example().polynomial);
    Polynomial expected = parse_poly(
        "-28*x1^2 - 28*x2^2 - 10*x3^2 - 10*x4^2 - 10*x5^2 - 16*x6^2", 6);
    r.pass = rep.is_eigenfunction && !rep.is_radial && rep.weight == expected;
    r.detail = r.pass ? "eigenfunction, weight as pinned, flagged non-radial"
                      : "reducible example mismatch";
    return r;
}

CriterionResult criterion9() {
    CriterionResult r{9, true, "", 0};
    const std::pair<int, int> pairs[3] = {{1, 2}, {2, 2}, {3, 4}};
    int checked = 0;
    for (auto [q, m] : pairs) {
        CliffordSystem base = system_for(q, m);
        Polynomial phi = clifford_cubic(base).polynomial;
        const int n = 2 * m + q + 1;
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            Matrix a = rational_orthogonal(seed, 2 * m);
            Matrix d = rational_orthogonal(seed + 1000, q + 1);
            CliffordSystem conj = conjugate_system(base, a, d);
            if (!verify_system(conj).pass) {
                r.pass = false;
                continue;
            }
            Polynomial phi_b = clifford_cubic(conj).polynomial;
            std::vector<Coefficient> mix(n * n);
            for (int i = 0; i < 2 * m; ++i)
                for (int j = 0; j < 2 * m; ++j) mix[i * n + j] = a.at(i, j);
            for (int i = 0; i <= q; ++i)
                for (int j = 0; j <= q; ++j) mix[(2 * m + i) * n + (2 * m + j)] = d.at(i, j);
            if (phi_b.substitute_linear(mix) != phi) r.pass = false;
            auto inv_a = system_invariants(base), inv_b = system_invariants(conj);
            if (inv_a.q != inv_b.q || inv_a.m != inv_b.m
                || inv_a.omega_trace_abs != inv_b.omega_trace_abs)
                r.pass = false;
            ++checked;
        }
    }
    std::ostringstream detail;
    detail << (r.pass ? "transport identity and invariants hold, " : "transport FAILED, ")
           << checked << " seeded conjugations";
    r.detail = detail.str();
    return r;
}

CriterionResult criterion10() {
    CriterionResult r{10, true, "", 0};
    Polynomial expected_disc = parse_poly("4*x1^2*x4^2 + 4*x2^2*x4^2", 4);
    int checked = 0;
    for (auto [q, m] : clifford_test_pairs()) {
        auto cert = irreducibility_certificate(system_for(q, m));
        if (!cert.pass || cert.discriminant != expected_disc) r.pass = false;
        ++checked;
    }
    std::ostringstream detail;
    detail << (r.pass ? "discriminant 4 v1^2 (z0^2+z1^2) not a square, "
                      : "certificate FAILED, ")
           << checked << " canonical systems";
    r.detail = detail.str();
    return r;
}

CriterionResult criterion11() {
    CriterionResult r{11, true, "", 0};
    for (int d : {1, 2, 4, 8}) {
        CDElement x = CDElement::from_variables(2 * d, 0, d);
        CDElement y = CDElement::from_variables(2 * d, d, d);
        if (cd_norm(cd_multiply(x, y)) != cd_norm(x) * cd_norm(y)) r.pass = false;
    }
    // Octonion associativity fails on basis elements: (e1 e2) e4 vs e1 (e2 e4).
    auto [s12, i12] = cd_basis_mul(8, 1, 2);
    auto [sl, il] = cd_basis_mul(8, i12, 4);
    auto [s24, i24] = cd_basis_mul(8, 2, 4);
    auto [sr, ir] = cd_basis_mul(8, 1, i24);
    bool witness = (il == ir) && (s12 * sl != s24 * sr);
    if (!witness) r.pass = false;
    std::ostringstream detail;
    if (r.pass)
        detail << "|XY|^2 = |X|^2|Y|^2 for d=1,2,4,8; witness: (e1 e2) e4 = "
               << (s12 * sl < 0 ? "-" : "") << "e" << il << " but e1 (e2 e4) = "
               << (s24 * sr < 0 ? "-" : "") << "e" << ir;
    else
        detail << "hypercomplex kernel check failed";
    r.detail = detail.str();
    return r;
}

Coefficient random_coeff(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3), part(0, 3);
    mpq_class comps[4] = {0, 0, 0, 0};
    comps[part(rng)] = mpq_class(num(rng), den(rng));
    comps[part(rng)] += mpq_class(num(rng), den(rng));
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

CriterionResult criterion12() {
    CriterionResult r{12, true, "", 0};
    std::mt19937_64 rng(20260823);
    int cases = 0;
    std::ostringstream detail;

    for (int t = 0; t < 400 && r.pass; ++t) {
        Polynomial a = random_poly(rng, 3, 3, 4);
        Polynomial b = random_poly(rng, 3, 3, 4);
        Polynomial c = random_poly(rng, 3, 3, 4);
        if (a * (b + c) != a * b + a * c) { r.pass = false; detail << "distributivity failed; "; }
        if (a * b != b * a) { r.pass = false; detail << "commutativity failed; "; }
        if ((a * b) * c != a * (b * c)) { r.pass = false; detail << "associativity failed; "; }
        ++cases;
    }
    for (int t = 0; t < 300 && r.pass; ++t) {
        Polynomial f = random_poly(rng, 3, 2, 3);
        Polynomial q = random_poly(rng, 3, 2, 3);
        if (f.is_zero()) continue;
        auto div = exact_divide(f * q, f);
        if (!div.ok || div.quotient != q) { r.pass = false; detail << "exact_divide round-trip failed; "; }
        ++cases;
    }
    for (int t = 0; t < 300 && r.pass; ++t) {
        Polynomial f = random_poly(rng, 3, 2, 3);
        if (f.is_zero()) continue;
        auto root = poly_sqrt(f * f);
        if (!root || (*root != f && *root != -f)) { r.pass = false; detail << "poly_sqrt(f^2) failed; "; }
        ++cases;
    }
    // Orthogonal invariance of the verification report on reference cones.
    const Polynomial lawson = clifford_cubic(irreducible_system(1)).polynomial;
    const Polynomial quad = quadric_cone(2, 3).polynomial;
    const Polynomial red = reducible_example().polynomial;
    auto base_l = verify_eigenfunction(lawson);
    auto base_q = verify_eigenfunction(quad);
    for (std::uint64_t seed = 1; seed <= 40 && r.pass; ++seed) {
        Matrix rot4 = rational_orthogonal(seed, 4);
        auto rep = verify_eigenfunction(lawson.substitute_linear(embed_block(rot4, 4, 0)));
        if (!rep.is_eigenfunction || rep.radial_constant != base_l.radial_constant
            || rep.tau != base_l.tau) {
            r.pass = false;
            detail << "rotation invariance (cubic) failed; ";
        }
        Matrix rot5 = rational_orthogonal(seed, 5);
        auto rep2 = verify_eigenfunction(quad.substitute_linear(embed_block(rot5, 5, 0)));
        if (!rep2.is_eigenfunction || rep2.weight != base_q.weight) {
            r.pass = false;
            detail << "rotation invariance (quadric) failed; ";
        }
        // Rotations mixing the factors of a reducible eigenfunction
        // must break the eigenfunction property detectably or keep it;
        // the report itself must stay deterministic.
        Matrix rot6 = rational_orthogonal(seed, 6);
        auto rep3a = verify_eigenfunction(red.substitute_linear(embed_block(rot6, 6, 0)));
        auto rep3b = verify_eigenfunction(red.substitute_linear(embed_block(rot6, 6, 0)));
        if (rep3a.is_eigenfunction != rep3b.is_eigenfunction || rep3a.witness != rep3b.witness) {
            r.pass = false;
            detail << "determinism failed; ";
        }
        cases += 3;
    }
    detail << cases << " randomized cases, fixed seed";
    r.detail = detail.str();
    return r;
}

} // namespace

std::vector<CriterionResult> run_acceptance(double budget_seconds) {
    std::vector<CriterionResult> out;
    auto timed = [&](CriterionResult (*fn)()) {
        auto t0 = Clock::now();
        CriterionResult r = fn();
        r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        out.push_back(std::move(r));
    };
    timed(&criterion1);
    timed(&criterion2);
    {
        auto t0 = Clock::now();
        CriterionResult r = criterion3(budget_seconds);
        r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        out.push_back(std::move(r));
    }
    timed(&criterion4);
    timed(&criterion5);
    timed(&criterion6);
    timed(&criterion7);
    timed(&criterion8);
    timed(&criterion9);
    timed(&criterion10);
    timed(&criterion11);
    timed(&criterion12);
    return out;
}

std::string render_acceptance(const std::vector<CriterionResult>& results) {
    std::ostringstream out;
    int failed = 0;
    for (const auto& r : results) {
        out << "criterion " << r.id << ": " << (r.pass ? "pass" : "FAIL")
            << " (" << r.detail << ") [" << static_cast<long>(r.elapsed_ms) << " ms]\n";
        if (!r.pass) ++failed;
    }
    out << "summary: " << (results.size() - failed) << "/" << results.size() << " criteria pass\n";
    return out.str();
}

} // namespace mincone
