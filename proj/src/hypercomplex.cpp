#include "mincone/hypercomplex.hpp"

#include <stdexcept>

namespace mincone {

namespace {

void check_dim(int d) {
    if (d != 1 && d != 2 && d != 4 && d != 8)
        throw std::invalid_argument("CDElement: algebra dimension must be 1, 2, 4 or 8");
}

using Span = std::pair<std::size_t, std::size_t>;  // [begin, end) into components

CDElement slice(const CDElement& x, std::size_t begin, std::size_t end) {
    CDElement out;
    out.components.assign(x.components.begin() + begin, x.components.begin() + end);
    return out;
}

CDElement join(CDElement lo, const CDElement& hi) {
    for (const auto& c : hi.components) lo.components.push_back(c);
    return lo;
}

} // namespace

CDElement CDElement::from_variables(int n, int offset, int d) {
    check_dim(d);
    CDElement out;
    for (int k = 0; k < d; ++k)
        out.components.push_back(Polynomial::variable(n, offset + k + 1));
    return out;
}

CDElement cd_add(const CDElement& x, const CDElement& y) {
    if (x.algebra_dim() != y.algebra_dim())
        throw std::invalid_argument("CDElement: dimension mismatch");
    CDElement out = x;
    for (std::size_t i = 0; i < out.components.size(); ++i) out.components[i] += y.components[i];
    return out;
}

CDElement cd_sub(const CDElement& x, const CDElement& y) {
    if (x.algebra_dim() != y.algebra_dim())
        throw std::invalid_argument("CDElement: dimension mismatch");
    CDElement out = x;
    for (std::size_t i = 0; i < out.components.size(); ++i) out.components[i] -= y.components[i];
    return out;
}

CDElement cd_conjugate(const CDElement& x) {
    CDElement out = x;
    for (std::size_t i = 1; i < out.components.size(); ++i) out.components[i] = -out.components[i];
    return out;
}

CDElement cd_multiply(const CDElement& x, const CDElement& y) {
    const int d = x.algebra_dim();
    if (d != y.algebra_dim()) throw std::invalid_argument("CDElement: dimension mismatch");
    if (d == 1) {
        CDElement out;
        out.components.push_back(x.components[0] * y.components[0]);
        return out;
    }
    const std::size_t h = d / 2;
    CDElement a = slice(x, 0, h), b = slice(x, h, d);
    CDElement c = slice(y, 0, h), e = slice(y, h, d);
    // (a,b)(c,e) = (ac - ē b, e a + b c̄)
    CDElement lo = cd_sub(cd_multiply(a, c), cd_multiply(cd_conjugate(e), b));
    CDElement hi = cd_add(cd_multiply(e, a), cd_multiply(b, cd_conjugate(c)));
    return join(std::move(lo), hi);
}

Polynomial cd_real(const CDElement& x) {
    if (x.components.empty()) throw std::invalid_argument("CDElement: empty element");
    return x.components[0];
}

Polynomial cd_norm(const CDElement& x) {
    if (x.components.empty()) throw std::invalid_argument("CDElement: empty element");
    Polynomial out(x.ambient_dim());
    for (const auto& c : x.components) out += c * c;
    return out;
}

std::pair<int, int> cd_basis_mul(int d, int i, int j) {
    if (i < 0 || i >= d || j < 0 || j >= d) throw std::invalid_argument("cd_basis_mul: index out of range");
    if (d == 1) return {1, 0};
    const int h = d / 2;
    auto conj_sign = [](int idx) { return idx == 0 ? 1 : -1; };
    if (i < h && j < h) {
        return cd_basis_mul(h, i, j);  // (a,0)(c,0) = (ac, 0)
    }
    if (i < h && j >= h) {
        // (a,0)(0,e) = (0, ea)
        auto [s, k] = cd_basis_mul(h, j - h, i);
        return {s, k + h};
    }
    if (i >= h && j < h) {
        // (0,b)(c,0) = (0, b c̄)
        auto [s, k] = cd_basis_mul(h, i - h, j);
        return {s * conj_sign(j), k + h};
    }
    // (0,b)(0,e) = (-ē b, 0)
    auto [s, k] = cd_basis_mul(h, j - h, i - h);
    return {-s * conj_sign(j - h), k};
}

} // namespace mincone
