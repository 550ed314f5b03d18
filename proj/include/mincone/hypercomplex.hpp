#pragma once

#include "mincone/polynomial.hpp"

#include <vector>

namespace mincone {

// Element of the Cayley-Dickson algebra of dimension d in {1,2,4,8},
// with polynomial components. Convention: (a,b)(c,d) = (ac - d̄b, da + bc̄).
struct CDElement {
    std::vector<Polynomial> components;

    int algebra_dim() const { return static_cast<int>(components.size()); }
    int ambient_dim() const { return components.empty() ? 0 : components[0].dimension(); }

    // Element whose components are the consecutive variables
    // x_{offset+1} .. x_{offset+d} of an n-dimensional ambient space.
    static CDElement from_variables(int n, int offset, int d);

    bool operator==(const CDElement& o) const { return components == o.components; }
};

CDElement cd_multiply(const CDElement& x, const CDElement& y);
CDElement cd_conjugate(const CDElement& x);
CDElement cd_add(const CDElement& x, const CDElement& y);
CDElement cd_sub(const CDElement& x, const CDElement& y);
Polynomial cd_real(const CDElement& x);
Polynomial cd_norm(const CDElement& x);

// Product of basis elements e_i * e_j in dimension d: (sign, index).
std::pair<int, int> cd_basis_mul(int d, int i, int j);

} // namespace mincone
