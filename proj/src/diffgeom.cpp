#include "mincone/diffgeom.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace mincone {

namespace {

std::vector<Polynomial> gradient(const Polynomial& f) {
    std::vector<Polynomial> g;
    g.reserve(f.dimension());
    for (int i = 1; i <= f.dimension(); ++i) g.push_back(f.derivative(i));
    return g;
}

// Upper-triangular sparse Hessian: entries (i, j), i <= j, 0-based.
struct SparseHessian {
    int n;
    std::vector<std::vector<std::pair<int, Polynomial>>> row;  // row[i]: (j, f_ij) for all j with f_ij != 0

    explicit SparseHessian(const Polynomial& f) : n(f.dimension()), row(n) {
        auto g = gradient(f);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                Polynomial h = g[i].derivative(j + 1);
                if (h.is_zero()) continue;
                row[i].emplace_back(j, h);
                if (j != i) row[j].emplace_back(i, std::move(h));
            }
    }
    const Polynomial* entry(int i, int j) const {
        for (const auto& [k, p] : row[i])
            if (k == j) return &p;
        return nullptr;
    }
};

Polynomial sum_squares(int n) {
    Polynomial r2(n);
    for (int i = 0; i < n; ++i) {
        Monomial m(n, 0);
        m[i] = 2;
        r2.add_term(m, Coefficient(1));
    }
    return r2;
}

} // namespace

Polynomial laplacian(const Polynomial& f) {
    Polynomial out(f.dimension());
    for (int i = 1; i <= f.dimension(); ++i) out += f.derivative(i).derivative(i);
    return out;
}

Polynomial gradient_norm_sq(const Polynomial& f) {
    Polynomial out(f.dimension());
    for (int i = 1; i <= f.dimension(); ++i) {
        Polynomial fi = f.derivative(i);
        out += fi * fi;
    }
    return out;
}

Polynomial mean_curvature_operator(const Polynomial& f) {
    const int n = f.dimension();
    auto g = gradient(f);
    Polynomial lap(n), gns(n);
    for (int i = 0; i < n; ++i) {
        lap += g[i].derivative(i + 1);
        gns += g[i] * g[i];
    }
    Polynomial hess_term(n);
    SparseHessian H(f);
    for (int i = 0; i < n; ++i) {
        if (g[i].is_zero()) continue;
        for (const auto& [j, fij] : H.row[i]) {
            if (g[j].is_zero()) continue;
            hess_term += g[i] * g[j] * fij;
        }
    }
    return gns * lap - hess_term;
}

Polynomial hessian_trace_cube(const Polynomial& f) {
    const int n = f.dimension();
    SparseHessian H(f);
    Polynomial out(n);
    for (int i = 0; i < n; ++i)
        for (const auto& [j, fij] : H.row[i]) {
            Polynomial fij_block = fij;
            for (const auto& [k, fjk] : H.row[j]) {
                const Polynomial* fki = H.entry(k, i);
                if (fki) out += fij_block * fjk * *fki;
            }
        }
    return out;
}

std::optional<Coefficient> tau_invariant(const Polynomial& f) {
    Polynomial lf = mean_curvature_operator(f);
    if (lf.is_zero()) return std::nullopt;
    Polynomial num = sum_squares(f.dimension()) * hessian_trace_cube(f);
    Polynomial den = lf.scaled(Coefficient(3));
    if (num.is_zero()) return Coefficient(0);
    auto div = exact_divide(num, den);
    if (!div.ok || !div.quotient.is_constant()) return std::nullopt;
    return div.quotient.constant_value();
}

VerificationReport verify_eigenfunction(const Polynomial& f) {
    if (f.is_constant()) throw std::invalid_argument("verify_eigenfunction: constant input");
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.weight = Polynomial(f.dimension());
    rep.is_harmonic = laplacian(f).is_zero();

    Polynomial lf = mean_curvature_operator(f);
    if (lf.is_zero()) {
        rep.is_eigenfunction = true;
        rep.is_radial = true;
        rep.radial_constant = Coefficient(0);
    } else {
        auto div = exact_divide(lf, f);
        if (div.ok) {
            rep.is_eigenfunction = true;
            rep.weight = div.quotient;
            // Radial iff weight = c * sum x_i^2, with c read off the x1^2 slot.
            Monomial x1sq(f.dimension(), 0);
            if (f.dimension() > 0) x1sq[0] = 2;
            Coefficient c = rep.weight.coefficient(x1sq);
            Polynomial diff = rep.weight - sum_squares(f.dimension()).scaled(c);
            if (diff.is_zero()) {
                rep.is_radial = true;
                rep.radial_constant = c;
            }
            rep.tau = tau_invariant(f);
        } else {
            rep.witness = div.witness;
        }
    }
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::string VerificationReport::render() const {
    std::ostringstream out;
    out << "eigenfunction: " << (is_eigenfunction ? "true" : "false") << "\n";
    out << "weight: " << format_poly(weight) << "\n";
    out << "radial: " << (is_radial ? "true" : "false") << "\n";
    out << "radial_constant: " << (radial_constant ? radial_constant->to_string() : "undefined") << "\n";
    out << "tau: " << (tau ? tau->to_string() : "undefined") << "\n";
    out << "harmonic: " << (is_harmonic ? "true" : "false") << "\n";
    out << "witness: " << (witness.empty() ? "none" : witness) << "\n";
    out << "elapsed_ms: " << elapsed_ms << "\n";
    return out.str();
}

std::string VerificationReport::render_json() const {
    auto jstr = [](const std::string& s) { return "\"" + s + "\""; };
    std::ostringstream out;
    out << "{\n";
    out << "  \"eigenfunction\": " << (is_eigenfunction ? "true" : "false") << ",\n";
    out << "  \"weight\": " << jstr(format_poly(weight)) << ",\n";
    out << "  \"radial\": " << (is_radial ? "true" : "false") << ",\n";
    out << "  \"radial_constant\": " << (radial_constant ? jstr(radial_constant->to_string()) : "null") << ",\n";
    out << "  \"tau\": " << (tau ? jstr(tau->to_string()) : "null") << ",\n";
    out << "  \"harmonic\": " << (is_harmonic ? "true" : "false") << ",\n";
    out << "  \"witness\": " << (witness.empty() ? "null" : jstr(witness)) << ",\n";
    out << "  \"elapsed_ms\": " << elapsed_ms << "\n";
    out << "}\n";
    return out.str();
}

} // namespace mincone
