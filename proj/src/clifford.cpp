#include "mincone/clifford.hpp"

#include "mincone/classify.hpp"
#include "mincone/hypercomplex.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

namespace mincone {

namespace {

constexpr int kMaxDim = 1 << 10;

// Left multiplication by the imaginary unit e_idx in the division
// algebra of dimension d, as a matrix on the standard basis.
Matrix left_mul_matrix(int d, int idx) {
    Matrix out(d, d);
    for (int c = 0; c < d; ++c) {
        auto [sign, r] = cd_basis_mul(d, idx, c);
        out.at(r, c) = Coefficient(sign);
    }
    return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (int r = 0; r < b.rows(); ++r)
                for (int c = 0; c < b.cols(); ++c)
                    out.at(i * b.rows() + r, j * b.cols() + c) = a.at(i, j) * b.at(r, c);
        }
    return out;
}

} // namespace

HRFamily hr_family(int k) {
    if (k < 0) throw std::invalid_argument("hr_family: k must be >= 0");
    HRFamily fam;
    fam.k = k;
    if (k == 0) {
        fam.dim = 1;
        return fam;
    }
    if (k <= 3) {
        // Complex / quaternion left multiplications.
        fam.dim = (k == 1) ? 2 : 4;
        for (int i = 1; i <= k; ++i) fam.matrices.push_back(left_mul_matrix(fam.dim, i));
        return fam;
    }
    if (k <= 7) {
        fam.dim = 8;
        for (int i = 1; i <= k; ++i) fam.matrices.push_back(left_mul_matrix(8, i));
        return fam;
    }
    if (k == 8) {
        // Double the octonion family: F_j = [[0,L_j],[L_j,0]], F_8 = [[0,I],[-I,0]].
        fam.dim = 16;
        Matrix id8 = Matrix::identity(8);
        for (int i = 1; i <= 7; ++i) {
            Matrix l = left_mul_matrix(8, i);
            Matrix f(16, 16);
            f.set_block(0, 8, l);
            f.set_block(8, 0, l);
            fam.matrices.push_back(std::move(f));
        }
        Matrix f8(16, 16);
        f8.set_block(0, 8, id8);
        f8.set_block(8, 0, -id8);
        fam.matrices.push_back(std::move(f8));
        return fam;
    }
    // Period-8 tensor recursion.
    HRFamily base = hr_family(8);
    HRFamily tail = hr_family(k - 8);
    long dim = static_cast<long>(tail.dim) * base.dim;
    if (dim > kMaxDim) throw std::invalid_argument("hr_family: dimension exceeds resource guard");
    fam.dim = static_cast<int>(dim);
    Matrix omega = Matrix::identity(base.dim);
    for (const auto& f : base.matrices) omega = omega * f;
    Matrix id_t = Matrix::identity(tail.dim);
    for (const auto& f : base.matrices) fam.matrices.push_back(kron(id_t, f));
    for (const auto& e : tail.matrices) fam.matrices.push_back(kron(e, omega));
    return fam;
}

CliffordSystem irreducible_system(int q) {
    if (q < 1) throw std::invalid_argument("irreducible_system: q must be >= 1");
    const int m = delta(q);
    if (2 * m > kMaxDim) throw std::invalid_argument("irreducible_system: dimension exceeds resource guard");
    CliffordSystem s;
    s.q = q;
    s.m = m;
    s.provenance = Provenance::CanonicalIrreducible;
    Matrix id = Matrix::identity(m);

    Matrix a0(2 * m, 2 * m);
    a0.set_block(0, 0, id);
    a0.set_block(m, m, -id);
    s.matrices.push_back(std::move(a0));

    Matrix a1(2 * m, 2 * m);
    a1.set_block(0, m, id);
    a1.set_block(m, 0, id);
    s.matrices.push_back(std::move(a1));

    HRFamily fam = hr_family(q - 1);
    if (fam.dim != m) throw std::logic_error("irreducible_system: HR dimension mismatch");
    for (const auto& e : fam.matrices) {
        Matrix a(2 * m, 2 * m);
        a.set_block(0, m, e);
        a.set_block(m, 0, -e);
        s.matrices.push_back(std::move(a));
    }
    return s;
}

CliffordSystem direct_sum(int q, int k_plus, int k_minus) {
    if (k_plus < 0 || k_minus < 0 || k_plus + k_minus < 1)
        throw std::invalid_argument("direct_sum: need k_plus + k_minus >= 1");
    CliffordSystem base = irreducible_system(q);
    const int copies = k_plus + k_minus;
    const int d = base.m;
    const int m = copies * d;
    if (2 * m > kMaxDim) throw std::invalid_argument("direct_sum: dimension exceeds resource guard");

    CliffordSystem s;
    s.q = q;
    s.m = m;
    s.provenance = Provenance::DirectSum;
    s.k_plus = k_plus;
    s.k_minus = k_minus;
    // u-major layout: local index l of copy c goes to
    // c*d + l (l < d) or m + c*d + (l - d) (l >= d).
    auto global = [&](int c, int l) { return l < d ? c * d + l : m + c * d + (l - d); };
    for (const auto& a_local : base.matrices) {
        Matrix a(2 * m, 2 * m);
        for (int c = 0; c < copies; ++c) {
            Coefficient sign(c < k_plus ? 1 : -1);
            for (int i = 0; i < 2 * d; ++i)
                for (int j = 0; j < 2 * d; ++j) {
                    const Coefficient& v = a_local.at(i, j);
                    if (!v.is_zero()) a.at(global(c, i), global(c, j)) = v * sign;
                }
        }
        s.matrices.push_back(std::move(a));
    }
    return s;
}

SystemCheck verify_system(const CliffordSystem& s) {
    const int n = 2 * s.m;
    if (static_cast<int>(s.matrices.size()) != s.q + 1)
        return {false, "matrix count != q+1"};
    for (std::size_t i = 0; i < s.matrices.size(); ++i) {
        const Matrix& a = s.matrices[i];
        if (a.rows() != n || a.cols() != n)
            return {false, "A_" + std::to_string(i) + " has wrong shape"};
        if (!a.is_symmetric())
            return {false, "A_" + std::to_string(i) + " not symmetric"};
        if (!a.trace().is_zero())
            return {false, "A_" + std::to_string(i) + " not trace free"};
    }
    Matrix two_id = Matrix::identity(n).scaled(Coefficient(2));
    for (std::size_t i = 0; i < s.matrices.size(); ++i)
        for (std::size_t j = i; j < s.matrices.size(); ++j) {
            Matrix anti = s.matrices[i] * s.matrices[j] + s.matrices[j] * s.matrices[i];
            if (i == j ? !(anti == two_id) : !anti.is_zero())
                return {false, "anticommutation fails at (" + std::to_string(i) + "," + std::to_string(j) + ")"};
        }
    return {true, ""};
}

SystemInvariants system_invariants(const CliffordSystem& s) {
    SystemInvariants inv;
    inv.q = s.q;
    inv.m = s.m;
    if (s.q % 4 == 0) {
        Matrix omega = s.matrices[0];
        for (int i = 1; i <= s.q; ++i) omega = omega * s.matrices[i];
        Coefficient t = omega.trace();
        inv.omega_trace_abs = t.sign() < 0 ? -t : t;
    }
    return inv;
}

CliffordSystem conjugate_system(const CliffordSystem& s, const Matrix& a, const Matrix& d) {
    if (!a.is_orthogonal() || a.rows() != 2 * s.m)
        throw std::invalid_argument("conjugate_system: a must be orthogonal of size 2m");
    if (!d.is_orthogonal() || d.rows() != s.q + 1)
        throw std::invalid_argument("conjugate_system: d must be orthogonal of size q+1");
    CliffordSystem out;
    out.q = s.q;
    out.m = s.m;
    out.provenance = Provenance::Conjugated;
    Matrix at = a.transpose();
    for (int j = 0; j <= s.q; ++j) {
        Matrix mix(2 * s.m, 2 * s.m);
        for (int k = 0; k <= s.q; ++k) {
            const Coefficient& w = d.at(j, k);
            if (!w.is_zero()) mix = mix + s.matrices[k].scaled(w);
        }
        out.matrices.push_back(a * mix * at);
    }
    return out;
}

std::string format_system(const CliffordSystem& s) {
    std::ostringstream out;
    out << "clifford q=" << s.q << " m=" << s.m << "\n";
    for (const auto& a : s.matrices)
        for (int i = 0; i < a.rows(); ++i) {
            for (int j = 0; j < a.cols(); ++j) {
                if (j) out << ",";
                out << a.at(i, j).to_string();
            }
            out << "\n";
        }
    return out.str();
}

namespace {

// Coefficient literal: sum of signed parts "3/2", "s2", "1/3*s6".
Coefficient parse_coefficient(const std::string& text) {
    Coefficient acc;
    std::size_t pos = 0;
    auto fail = [&] { throw std::invalid_argument("bad coefficient literal: " + text); };
    bool first = true;
    while (pos < text.size()) {
        int sign = 1;
        if (text[pos] == '+') { ++pos; }
        else if (text[pos] == '-') { sign = -1; ++pos; }
        else if (!first) fail();
        first = false;
        mpq_class rat(1);
        bool have_rat = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            std::size_t j = pos;
            while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '/')) ++j;
            rat = mpq_class(text.substr(pos, j - pos));
            rat.canonicalize();
            pos = j;
            have_rat = true;
        }
        Coefficient part(rat * sign);
        if (pos < text.size() && text[pos] == '*') {
            if (!have_rat) fail();
            ++pos;
        }
        if (pos < text.size() && text[pos] == 's') {
            if (pos + 1 >= text.size()) fail();
            char c = text[pos + 1];
            Coefficient rad = c == '2' ? Coefficient::sqrt2()
                            : c == '3' ? Coefficient::sqrt3()
                            : c == '6' ? Coefficient::sqrt6()
                            : (fail(), Coefficient());
            part *= rad;
            pos += 2;
        } else if (!have_rat) {
            fail();
        }
        acc += part;
    }
    return acc;
}

} // namespace

CliffordSystem parse_system(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw std::invalid_argument("parse_system: empty input");
    int q = -1, m = -1;
    if (sscanf(header.c_str(), "clifford q=%d m=%d", &q, &m) != 2 || q < 1 || m < 1)
        throw std::invalid_argument("parse_system: bad header '" + header + "'");
    CliffordSystem s;
    s.q = q;
    s.m = m;
    s.provenance = Provenance::Conjugated;  // unknown origin
    const int n = 2 * m;
    for (int mat = 0; mat <= q; ++mat) {
        Matrix a(n, n);
        for (int i = 0; i < n; ++i) {
            std::string line;
            if (!std::getline(in, line)) throw std::invalid_argument("parse_system: truncated matrix data");
            std::istringstream row(line);
            std::string cell;
            for (int j = 0; j < n; ++j) {
                if (!std::getline(row, cell, ',')) throw std::invalid_argument("parse_system: short row");
                a.at(i, j) = parse_coefficient(cell);
            }
        }
        s.matrices.push_back(std::move(a));
    }
    return s;
}

} // namespace mincone
