#pragma once

#include "mincone/clifford.hpp"
#include "mincone/polynomial.hpp"

#include <iosfwd>
#include <string>

namespace mincone {

enum class ConeFamily { Clifford, Quadric, Determinant, Cartan, Hsiang, ReducibleExample, FkmQuartic };

struct ConeSpec {
    ConeFamily family;
    std::string params;  // human-readable parameter summary, e.g. "q=1 m=1"
    int n = 0;
    Polynomial polynomial;
};

// Phi(y, z) = y^T A_z y on variables (x1..x_{2m}, x_{2m+1}..x_{2m+q+1}).
ConeSpec clifford_cubic(const CliffordSystem& s);

// (q-1) sum_{i<=p} x_i^2 - (p-1) sum_{i>p} x_i^2.
ConeSpec quadric_cone(int p, int q);

// Psi_m = det(x_{(i-1)m+j}).
ConeSpec determinant_cone(int m);
// -(1/2) sum over ordered (i,k,j,l), i != k, j != l, of (det X^{ik|jl})^2.
Polynomial det_weight_formula(int m);

// Isoparametric cubic over the division algebra of dimension d on R^{3d+2}.
ConeSpec cartan_cubic(int d);

// Coefficient of t in det(Y - tI) on trace-free symmetric 4x4 matrices,
// in orthonormal coordinates for <A,B> = trace(AB); 9 variables.
ConeSpec hsiang_cubic();

// x6(2x1^2 + 2x2^2 - x3^2 - x4^2 - x5^2): eigenfunction, not radial.
ConeSpec reducible_example();

// F(y) = |y|^4 - 2 sum_i (y^T A_i y)^2 on R^{2m}; construction only.
ConeSpec fkm_quartic(const CliffordSystem& s);

struct IrreducibilityCertificate {
    bool pass = false;
    Polynomial discriminant;  // 4 v1^2 (z0^2 + z1^2) in (z0, z1, u1, v1)
    std::string diagnostic;
};

// Specializes Phi to g = z0(u1^2 - v1^2) + 2 z1 u1 v1 and certifies that
// the u1-discriminant of g is not a square. Requires (A_0, A_1) in the
// canonical normal form.
IrreducibilityCertificate irreducibility_certificate(const CliffordSystem& s);

std::string format_cone(const ConeSpec& c);
ConeSpec parse_cone(std::istream& in);

} // namespace mincone
