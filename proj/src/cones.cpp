#include "mincone/cones.hpp"

#include "mincone/hypercomplex.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mincone {

namespace {

const char* family_tag(ConeFamily f) {
    switch (f) {
        case ConeFamily::Clifford: return "clifford";
        case ConeFamily::Quadric: return "quadric";
        case ConeFamily::Determinant: return "det";
        case ConeFamily::Cartan: return "cartan";
        case ConeFamily::Hsiang: return "hsiang";
        case ConeFamily::ReducibleExample: return "reducible";
        case ConeFamily::FkmQuartic: return "fkm";
    }
    return "?";
}

// y^T A y as a polynomial in variables x_{y_offset+1} .. x_{y_offset+rows}.
Polynomial quadratic_form(const Matrix& a, int n, int y_offset) {
    Polynomial out(n);
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) {
            const Coefficient& v = a.at(r, c);
            if (v.is_zero()) continue;
            Monomial m(n, 0);
            m[y_offset + r] += 1;
            m[y_offset + c] += 1;
            out.add_term(m, v);
        }
    return out;
}

// Determinant of the submatrix of the m x m variable matrix
// (entry (i,j) -> x_{i*m+j+1}) on the given rows and columns.
Polynomial var_minor_det(int n, int m, const std::vector<int>& rows, const std::vector<int>& cols) {
    const int k = static_cast<int>(rows.size());
    Polynomial out(n);
    if (k == 0) return Polynomial::constant(n, Coefficient(1));
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inversions = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Monomial mono(n, 0);
        for (int i = 0; i < k; ++i) mono[rows[i] * m + cols[perm[i]]] += 1;
        out.add_term(mono, Coefficient(inversions % 2 == 0 ? 1 : -1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

} // namespace

ConeSpec clifford_cubic(const CliffordSystem& s) {
    auto check = verify_system(s);
    if (!check.pass) throw std::invalid_argument("clifford_cubic: invalid system: " + check.witness);
    const int n = 2 * s.m + s.q + 1;
    Polynomial phi(n);
    for (int i = 0; i <= s.q; ++i) {
        Polynomial form = quadratic_form(s.matrices[i], n, 0);
        Polynomial zi = Polynomial::variable(n, 2 * s.m + i + 1);
        phi += zi * form;
    }
    std::ostringstream params;
    params << "q=" << s.q << " m=" << s.m;
    return {ConeFamily::Clifford, params.str(), n, std::move(phi)};
}

ConeSpec quadric_cone(int p, int q) {
    if (p < 2 || q < 2) throw std::invalid_argument("quadric_cone: p, q must be >= 2");
    const int n = p + q;
    Polynomial f(n);
    for (int i = 0; i < n; ++i) {
        Monomial m(n, 0);
        m[i] = 2;
        f.add_term(m, Coefficient(i < p ? q - 1 : -(p - 1)));
    }
    std::ostringstream params;
    params << "p=" << p << " q=" << q;
    return {ConeFamily::Quadric, params.str(), n, std::move(f)};
}

ConeSpec determinant_cone(int m) {
    if (m < 2) throw std::invalid_argument("determinant_cone: m must be >= 2");
    if (m > 6) throw std::invalid_argument("determinant_cone: resource guard m <= 6");
    const int n = m * m;
    std::vector<int> all(m);
    std::iota(all.begin(), all.end(), 0);
    Polynomial psi = var_minor_det(n, m, all, all);
    return {ConeFamily::Determinant, "m=" + std::to_string(m), n, std::move(psi)};
}

Polynomial det_weight_formula(int m) {
    if (m < 2 || m > 6) throw std::invalid_argument("det_weight_formula: m out of range");
    const int n = m * m;
    Polynomial sum(n);
    for (int i = 0; i < m; ++i)
        for (int k = i + 1; k < m; ++k)
            for (int j = 0; j < m; ++j)
                for (int l = j + 1; l < m; ++l) {
                    std::vector<int> rows, cols;
                    for (int r = 0; r < m; ++r)
                        if (r != i && r != k) rows.push_back(r);
                    for (int c = 0; c < m; ++c)
                        if (c != j && c != l) cols.push_back(c);
                    Polynomial d = var_minor_det(n, m, rows, cols);
                    sum += d * d;
                }
    // Each unordered (row-pair, column-pair) choice appears four times in
    // the ordered sum over (i-k)(j-l) != 0.
    return sum.scaled(Coefficient(-2));
}

ConeSpec cartan_cubic(int d) {
    if (d != 1 && d != 2 && d != 4 && d != 8)
        throw std::invalid_argument("cartan_cubic: d must be 1, 2, 4 or 8");
    const int n = 3 * d + 2;
    CDElement x0 = CDElement::from_variables(n, 0, d);
    CDElement x1 = CDElement::from_variables(n, d, d);
    CDElement x2 = CDElement::from_variables(n, 2 * d, d);
    Polynomial xm = Polynomial::variable(n, n - 1);
    Polynomial xn = Polynomial::variable(n, n);

    Polynomial n0 = cd_norm(x0), n1 = cd_norm(x1), n2 = cd_norm(x2);
    Coefficient half3 = Coefficient::rational(3, 2);
    Coefficient half3s3 = half3 * Coefficient::sqrt3();

    Polynomial f = xn * xn * xn - (xn * xm * xm).scaled(Coefficient(3));
    f += (xn * (n0 + n1 - n2.scaled(Coefficient(2)))).scaled(half3);
    f += (xm * (n0 - n1)).scaled(half3s3);
    // (X0 X1) X2 + its conjugate is twice the real part.
    Polynomial re = cd_real(cd_multiply(cd_multiply(x0, x1), x2));
    f += re.scaled(half3s3 * Coefficient(2));
    return {ConeFamily::Cartan, "d=" + std::to_string(d), n, std::move(f)};
}

ConeSpec hsiang_cubic() {
    const int n = 9;
    // Orthonormal coordinates for trace-free symmetric 4x4 matrices under
    // <A,B> = trace(AB).
    Coefficient inv_s2 = Coefficient::sqrt2() * Coefficient::rational(1, 2);
    Coefficient inv_s6 = Coefficient::sqrt6() * Coefficient::rational(1, 6);
    Coefficient inv_2s3 = Coefficient::sqrt3() * Coefficient::rational(1, 6);

    std::vector<std::vector<Polynomial>> y(4, std::vector<Polynomial>(4, Polynomial(n)));
    const std::pair<int, int> pairs[6] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    for (int k = 0; k < 6; ++k) {
        auto [i, j] = pairs[k];
        Polynomial v = Polynomial::variable(n, k + 1).scaled(inv_s2);
        y[i][j] += v;
        y[j][i] += v;
    }
    const int diag7[4] = {1, -1, 0, 0};
    const int diag8[4] = {1, 1, -2, 0};
    const int diag9[4] = {1, 1, 1, -3};
    for (int i = 0; i < 4; ++i) {
        y[i][i] += Polynomial::variable(n, 7).scaled(inv_s2 * Coefficient(diag7[i]));
        y[i][i] += Polynomial::variable(n, 8).scaled(inv_s6 * Coefficient(diag8[i]));
        y[i][i] += Polynomial::variable(n, 9).scaled(inv_2s3 * Coefficient(diag9[i]));
    }
    // Coefficient of t in det(Y - tI) equals minus the sum of principal
    // 3x3 minors; the overall sign does not affect the eigenfunction test.
    Polynomial b3(n);
    for (int omit = 0; omit < 4; ++omit) {
        std::vector<int> idx;
        for (int i = 0; i < 4; ++i)
            if (i != omit) idx.push_back(i);
        // det of the principal 3x3 minor on rows/cols idx
        Polynomial det(n);
        std::vector<int> perm = {0, 1, 2};
        do {
            int inversions = 0;
            for (int a = 0; a < 3; ++a)
                for (int b = a + 1; b < 3; ++b)
                    if (perm[a] > perm[b]) ++inversions;
            Polynomial prod = y[idx[0]][idx[perm[0]]] * y[idx[1]][idx[perm[1]]] * y[idx[2]][idx[perm[2]]];
            det += inversions % 2 == 0 ? prod : -prod;
        } while (std::next_permutation(perm.begin(), perm.end()));
        b3 -= det;
    }
    return {ConeFamily::Hsiang, "", n, std::move(b3)};
}

ConeSpec reducible_example() {
    Polynomial f = parse_poly("2*x6*x1^2 + 2*x6*x2^2 - x6*x3^2 - x6*x4^2 - x6*x5^2", 6);
    return {ConeFamily::ReducibleExample, "", 6, std::move(f)};
}

ConeSpec fkm_quartic(const CliffordSystem& s) {
    auto check = verify_system(s);
    if (!check.pass) throw std::invalid_argument("fkm_quartic: invalid system: " + check.witness);
    const int n = 2 * s.m;
    Polynomial norm(n);
    for (int i = 0; i < n; ++i) {
        Monomial m(n, 0);
        m[i] = 2;
        norm.add_term(m, Coefficient(1));
    }
    Polynomial f = norm * norm;
    for (int i = 0; i <= s.q; ++i) {
        Polynomial form = quadratic_form(s.matrices[i], n, 0);
        f -= (form * form).scaled(Coefficient(2));
    }
    std::ostringstream params;
    params << "q=" << s.q << " m=" << s.m;
    return {ConeFamily::FkmQuartic, params.str(), n, std::move(f)};
}

IrreducibilityCertificate irreducibility_certificate(const CliffordSystem& s) {
    IrreducibilityCertificate cert;
    const int m = s.m;
    Matrix a0_expect(2 * m, 2 * m), a1_expect(2 * m, 2 * m);
    Matrix id = Matrix::identity(m);
    a0_expect.set_block(0, 0, id);
    a0_expect.set_block(m, m, -id);
    a1_expect.set_block(0, m, id);
    a1_expect.set_block(m, 0, id);
    if (!(s.matrices[0] == a0_expect) || !(s.matrices[1] == a1_expect)) {
        cert.diagnostic = "non-canonical coordinates";
        return cert;
    }
    // Specialize: keep z0, z1, u1 := y_1, v1 := y_{m+1}. Variables of the
    // specialized cubic: x1 = z0, x2 = z1, x3 = u1, x4 = v1.
    const int sn = 4;
    auto entry_poly = [&](const Matrix& a) {
        // y^T A y restricted to (u1, v1)
        Polynomial u = Polynomial::variable(sn, 3), v = Polynomial::variable(sn, 4);
        Polynomial out = (u * u).scaled(a.at(0, 0)) + (v * v).scaled(a.at(m, m));
        out += (u * v).scaled(a.at(0, m) + a.at(m, 0));
        return out;
    };
    Polynomial g = Polynomial::variable(sn, 1) * entry_poly(s.matrices[0])
                 + Polynomial::variable(sn, 2) * entry_poly(s.matrices[1]);
    Polynomial expected = parse_poly("x1*x3^2 - x1*x4^2 + 2*x2*x3*x4", sn);
    if (g != expected && g != -expected) {
        cert.diagnostic = "specialization does not match z0(u1^2-v1^2) + 2 z1 u1 v1";
        return cert;
    }
    // Discriminant of g in u1: g = a u1^2 + b u1 + c.
    Polynomial za = Polynomial::variable(sn, 1);                       // coefficient of u1^2
    Polynomial zb = (Polynomial::variable(sn, 2) * Polynomial::variable(sn, 4)).scaled(Coefficient(2));
    Polynomial zc = -(za * Polynomial::variable(sn, 4) * Polynomial::variable(sn, 4));
    cert.discriminant = zb * zb - (za * zc).scaled(Coefficient(4));
    if (poly_sqrt(cert.discriminant)) {
        cert.diagnostic = "discriminant unexpectedly a perfect square";
        return cert;
    }
    cert.pass = true;
    return cert;
}

std::string format_cone(const ConeSpec& c) {
    std::ostringstream out;
    out << "cone family=" << family_tag(c.family) << " n=" << c.n;
    if (!c.params.empty()) out << " params=" << c.params;
    out << "\n" << format_poly(c.polynomial) << "\n";
    return out.str();
}

ConeSpec parse_cone(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw std::invalid_argument("parse_cone: empty input");
    int n = -1;
    char tag[32] = {0};
    if (sscanf(header.c_str(), "cone family=%31s n=%d", tag, &n) != 2 || n < 1)
        throw std::invalid_argument("parse_cone: bad header '" + header + "'");
    std::string tagstr(tag);
    ConeFamily fam = ConeFamily::Clifford;
    for (ConeFamily f : {ConeFamily::Clifford, ConeFamily::Quadric, ConeFamily::Determinant,
                         ConeFamily::Cartan, ConeFamily::Hsiang, ConeFamily::ReducibleExample,
                         ConeFamily::FkmQuartic})
        if (tagstr == family_tag(f)) fam = f;
    std::string params;
    auto ppos = header.find("params=");
    if (ppos != std::string::npos) params = header.substr(ppos + 7);
    std::string body, line;
    while (std::getline(in, line)) body += line + " ";
    return {fam, params, n, parse_poly(body, n)};
}

} // namespace mincone
