#pragma once

#include "mincone/matrix.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mincone {

// k anticommuting skew complex structures with entries in {-1,0,1}
// on the minimal dimension delta(k+1).
struct HRFamily {
    int k = 0;
    int dim = 1;
    std::vector<Matrix> matrices;
};

enum class Provenance { CanonicalIrreducible, DirectSum, Conjugated };

// Symmetric Clifford system: A_i A_j + A_j A_i = 2 delta_ij I on R^{2m}.
struct CliffordSystem {
    int q = 0;
    int m = 0;
    std::vector<Matrix> matrices;  // A_0 .. A_q, each (2m)x(2m)
    Provenance provenance = Provenance::CanonicalIrreducible;
    int k_plus = 1, k_minus = 0;   // meaningful for DirectSum
};

struct SystemCheck {
    bool pass = true;
    std::string witness;  // first violated relation
};

struct SystemInvariants {
    int q = 0;
    int m = 0;
    std::optional<Coefficient> omega_trace_abs;  // |trace(A_0...A_q)|, q = 0 mod 4 only
};

HRFamily hr_family(int k);

CliffordSystem irreducible_system(int q);

// Block sum of k_plus canonical copies and k_minus fully negated copies,
// coordinates grouped u-major so a pure-positive sum stays in the
// (A_0, A_1) normal form.
CliffordSystem direct_sum(int q, int k_plus, int k_minus);

SystemCheck verify_system(const CliffordSystem& s);

SystemInvariants system_invariants(const CliffordSystem& s);

// B_j = a * A_{row_j(d)} * a^T with exact orthogonal a (2m) and d (q+1).
CliffordSystem conjugate_system(const CliffordSystem& s, const Matrix& a, const Matrix& d);

std::string format_system(const CliffordSystem& s);
CliffordSystem parse_system(std::istream& in);

} // namespace mincone
