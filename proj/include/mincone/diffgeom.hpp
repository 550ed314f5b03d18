#pragma once

#include "mincone/polynomial.hpp"

#include <optional>
#include <string>

namespace mincone {

// Outcome of the minimality check L(f) = lambda(f) * f.
struct VerificationReport {
    bool is_eigenfunction = false;
    Polynomial weight;                         // lambda(f), when divisible
    bool is_radial = false;
    std::optional<Coefficient> radial_constant;  // c with lambda = c|x|^2
    std::optional<Coefficient> tau;
    bool is_harmonic = false;
    std::string witness;                       // offending term when not an eigenfunction
    double elapsed_ms = 0.0;

    // Stable "key: value" rendering; keys: eigenfunction, weight, radial,
    // radial_constant, tau, harmonic, witness, elapsed_ms.
    std::string render() const;
    std::string render_json() const;
};

Polynomial laplacian(const Polynomial& f);
Polynomial gradient_norm_sq(const Polynomial& f);

// L(f) = |grad f|^2 * laplacian(f) - sum_{i,j} f_i f_j f_ij.
Polynomial mean_curvature_operator(const Polynomial& f);

// sum_{i,j,k} f_ij f_jk f_ki, iterated over the sparse Hessian.
Polynomial hessian_trace_cube(const Polynomial& f);

// Constant c with (sum x_i^2) * trace H^3(f) = 3c * L(f), when it exists.
std::optional<Coefficient> tau_invariant(const Polynomial& f);

VerificationReport verify_eigenfunction(const Polynomial& f);

} // namespace mincone
