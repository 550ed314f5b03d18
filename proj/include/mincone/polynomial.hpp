#pragma once

#include "mincone/coefficient.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace mincone {

// Dense exponent vector, one entry per ambient variable x1..xn.
using Monomial = std::vector<std::uint8_t>;

inline int total_degree(const Monomial& m) {
    int d = 0;
    for (auto e : m) d += e;
    return d;
}

// Graded reverse lexicographic, x1 most significant, descending:
// the map iterates from the leading term down.
struct GrevlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        // grevlex: a > b iff the last nonzero entry of a-b is negative.
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    }
};

inline constexpr int kMaxVariables = 64;

// Sparse exact multivariate polynomial over Q(sqrt2, sqrt3).
class Polynomial {
public:
    using TermMap = std::map<Monomial, Coefficient, GrevlexDescending>;

    Polynomial() : n_(0) {}
    explicit Polynomial(int n);

    static Polynomial zero(int n) { return Polynomial(n); }
    static Polynomial constant(int n, Coefficient c);
    // The variable x_i, 1-based.
    static Polynomial variable(int n, int i);

    int dimension() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    int degree() const;  // -1 for the zero polynomial
    bool is_homogeneous() const;
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0); }
    Coefficient constant_value() const;

    const TermMap& terms() const { return terms_; }
    // Leading term in grevlex order; polynomial must be nonzero.
    const std::pair<const Monomial, Coefficient>& leading() const;
    Coefficient coefficient(const Monomial& m) const;

    void add_term(const Monomial& m, const Coefficient& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial l, const Polynomial& r) { return l += r; }
    friend Polynomial operator-(Polynomial l, const Polynomial& r) { return l -= r; }
    friend Polynomial operator*(const Polynomial& l, const Polynomial& r);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial scaled(const Coefficient& c) const;

    bool operator==(const Polynomial& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial derivative(int i) const;  // d/dx_i, 1-based

    // Exact value at a point of field elements, point.size() == n.
    Coefficient evaluate(std::span<const Coefficient> point) const;

    // f(Mx) for a square matrix M given row-major, size n*n.
    Polynomial substitute_linear(std::span<const Coefficient> m_rowmajor) const;

    std::string to_string() const;

private:
    int n_;
    TermMap terms_;
};

// g = q*f exactly, or the offending leading term as witness.
struct DivisionResult {
    bool ok;
    Polynomial quotient;       // valid when ok
    std::string witness;       // first non-reducible leading term when !ok
};
DivisionResult exact_divide(const Polynomial& g, const Polynomial& f);

// g with g^2 = f, leading coefficient positive; nullopt when f is not
// a square over Q(sqrt2, sqrt3).
std::optional<Polynomial> poly_sqrt(const Polynomial& f);

// Text grammar of the workbench: "3/2*s3*x4*x1^2 - x2^2" etc.
// Throws std::invalid_argument with a position on syntax errors.
Polynomial parse_poly(const std::string& text, int n);
std::string format_poly(const Polynomial& f);

} // namespace mincone
