#pragma once

#include <gmpxx.h>
#include <array>
#include <optional>
#include <string>

namespace mincone {

// An element of the real quadratic tower Q(sqrt2, sqrt3), stored on the
// basis {1, sqrt2, sqrt3, sqrt6}. Components are GMP rationals kept in
// canonical form (lowest terms, positive denominator).
class Coefficient {
public:
    Coefficient() : a_(0), b_(0), c_(0), d_(0) {}
    Coefficient(long v) : a_(v), b_(0), c_(0), d_(0) {}
    Coefficient(const mpq_class& rat) : a_(rat), b_(0), c_(0), d_(0) { a_.canonicalize(); }
    Coefficient(mpq_class a, mpq_class b, mpq_class c, mpq_class d);

    static Coefficient rational(long num, long den);
    static Coefficient sqrt2() { return Coefficient(0, 1, 0, 0); }
    static Coefficient sqrt3() { return Coefficient(0, 0, 1, 0); }
    static Coefficient sqrt6() { return Coefficient(0, 0, 0, 1); }

    const mpq_class& rat_part() const { return a_; }
    const mpq_class& s2_part() const { return b_; }
    const mpq_class& s3_part() const { return c_; }
    const mpq_class& s6_part() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }
    bool is_rational() const { return b_ == 0 && c_ == 0 && d_ == 0; }
    bool is_one() const { return a_ == 1 && is_rational(); }

    Coefficient operator-() const;
    Coefficient& operator+=(const Coefficient& o);
    Coefficient& operator-=(const Coefficient& o);
    Coefficient& operator*=(const Coefficient& o);
    Coefficient& operator/=(const Coefficient& o);

    friend Coefficient operator+(Coefficient l, const Coefficient& r) { return l += r; }
    friend Coefficient operator-(Coefficient l, const Coefficient& r) { return l -= r; }
    friend Coefficient operator*(Coefficient l, const Coefficient& r) { return l *= r; }
    friend Coefficient operator/(Coefficient l, const Coefficient& r) { return l /= r; }

    bool operator==(const Coefficient& o) const {
        return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
    }
    bool operator!=(const Coefficient& o) const { return !(*this == o); }

    // Inverse via the product of the three nontrivial Galois conjugates;
    // throws std::domain_error on zero.
    Coefficient inverse() const;

    // Galois conjugation: flip the sign of sqrt2 and/or sqrt3.
    Coefficient conj_s2() const { return Coefficient(a_, -b_, c_, -d_); }
    Coefficient conj_s3() const { return Coefficient(a_, b_, -c_, -d_); }

    // Exact sign of the real value under the embedding sqrt2, sqrt3 > 0.
    int sign() const;

    // Square root within the field, if it exists. Result has sign() >= 0.
    std::optional<Coefficient> sqrt_in_field() const;

    // Literal like "3/2", "-1/2*s2", "1+1/3*s6" (sum of basis parts).
    std::string to_string() const;

private:
    mpq_class a_, b_, c_, d_;
};

} // namespace mincone
