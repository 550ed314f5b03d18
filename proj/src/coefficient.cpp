#include "mincone/coefficient.hpp"

#include <stdexcept>
#include <utility>

namespace mincone {

Coefficient::Coefficient(mpq_class a, mpq_class b, mpq_class c, mpq_class d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    a_.canonicalize();
    b_.canonicalize();
    c_.canonicalize();
    d_.canonicalize();
}

Coefficient Coefficient::rational(long num, long den) {
    mpq_class q(num, den);
    q.canonicalize();
    return Coefficient(q);
}

Coefficient Coefficient::operator-() const {
    return Coefficient(-a_, -b_, -c_, -d_);
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
    a_ += o.a_;
    b_ += o.b_;
    c_ += o.c_;
    d_ += o.d_;
    return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    c_ -= o.c_;
    d_ -= o.d_;
    return *this;
}

Coefficient& Coefficient::operator*=(const Coefficient& o) {
    if (is_rational() && o.is_rational()) {
        a_ *= o.a_;
        return *this;
    }
    mpq_class a = a_ * o.a_ + 2 * b_ * o.b_ + 3 * c_ * o.c_ + 6 * d_ * o.d_;
    mpq_class b = a_ * o.b_ + b_ * o.a_ + 3 * (c_ * o.d_ + d_ * o.c_);
    mpq_class c = a_ * o.c_ + c_ * o.a_ + 2 * (b_ * o.d_ + d_ * o.b_);
    mpq_class d = a_ * o.d_ + d_ * o.a_ + b_ * o.c_ + c_ * o.b_;
    a_ = std::move(a);
    b_ = std::move(b);
    c_ = std::move(c);
    d_ = std::move(d);
    return *this;
}

Coefficient& Coefficient::operator/=(const Coefficient& o) {
    return *this *= o.inverse();
}

Coefficient Coefficient::inverse() const {
    if (is_zero()) throw std::domain_error("Coefficient: division by zero");
    if (is_rational()) return Coefficient(mpq_class(1) / a_);
    Coefficient num = conj_s2() * conj_s3() * Coefficient(a_, -b_, -c_, d_);
    Coefficient norm = *this * num;
    // The full conjugate product lies in Q.
    if (norm.b_ != 0 || norm.c_ != 0 || norm.d_ != 0)
        throw std::logic_error("Coefficient: non-rational field norm");
    mpq_class inv_n = mpq_class(1) / norm.a_;
    return Coefficient(num.a_ * inv_n, num.b_ * inv_n, num.c_ * inv_n, num.d_ * inv_n);
}

namespace {

// sign of a + b*sqrt(r) with rational a, b and square-free r.
int sign_quad(const mpq_class& a, const mpq_class& b, int r) {
    int sa = sgn(a), sb = sgn(b);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    mpq_class n = a * a - r * b * b;
    return sa * sgn(n);
}

} // namespace

int Coefficient::sign() const {
    // Write x = A + B*sqrt3 with A, B in Q(sqrt2).
    int sB = sign_quad(c_, d_, 2);
    if (sB == 0) return sign_quad(a_, b_, 2);
    int sA = sign_quad(a_, b_, 2);
    if (sA == 0 || sA == sB) return sB;
    // sign(A + B*sqrt3) = sign(A - B*sqrt3) * sign(A^2 - 3B^2); the conjugate
    // has both parts of sign sA here.
    Coefficient n = Coefficient(a_, b_, 0, 0) * Coefficient(a_, b_, 0, 0)
                  - Coefficient(3) * Coefficient(c_, d_, 0, 0) * Coefficient(c_, d_, 0, 0);
    return sA * sign_quad(n.a_, n.b_, 2);
}

namespace {

std::optional<mpq_class> sqrt_rat(const mpq_class& r) {
    if (r < 0) return std::nullopt;
    if (r == 0) return mpq_class(0);
    if (!mpz_perfect_square_p(r.get_num_mpz_t()) ||
        !mpz_perfect_square_p(r.get_den_mpz_t()))
        return std::nullopt;
    mpq_class out;
    mpz_sqrt(out.get_num_mpz_t(), r.get_num_mpz_t());
    mpz_sqrt(out.get_den_mpz_t(), r.get_den_mpz_t());
    return out;
}

// Element of Q(sqrt2) as a pair (rational, sqrt2) of parts.
struct QS2 {
    mpq_class a, b;
    bool zero() const { return a == 0 && b == 0; }
    QS2 operator*(const QS2& o) const { return {a * o.a + 2 * b * o.b, a * o.b + b * o.a}; }
    QS2 operator+(const QS2& o) const { return {a + o.a, b + o.b}; }
    QS2 operator-(const QS2& o) const { return {a - o.a, b - o.b}; }
};

std::optional<QS2> sqrt_qs2(const QS2& x) {
    if (x.zero()) return QS2{0, 0};
    if (sign_quad(x.a, x.b, 2) < 0) return std::nullopt;
    if (x.b == 0) {
        if (auto s = sqrt_rat(x.a)) return QS2{*s, 0};
        if (auto s = sqrt_rat(x.a / 2)) return QS2{0, *s};
        return std::nullopt;
    }
    // (p + q*sqrt2)^2 = x forces (p^2 - 2q^2)^2 = a^2 - 2b^2.
    auto s = sqrt_rat(x.a * x.a - 2 * x.b * x.b);
    if (!s) return std::nullopt;
    for (int sg : {1, -1}) {
        mpq_class c2 = (x.a + sg * *s) / 2;
        auto p = sqrt_rat(c2);
        if (!p || *p == 0) continue;
        mpq_class q = x.b / (2 * *p);
        QS2 cand{*p, q};
        QS2 sq = cand * cand;
        if (sq.a == x.a && sq.b == x.b) return cand;
    }
    return std::nullopt;
}

} // namespace

std::optional<Coefficient> Coefficient::sqrt_in_field() const {
    if (is_zero()) return Coefficient();
    if (sign() < 0) return std::nullopt;
    // x = A + B*sqrt3 with A, B in Q(sqrt2).
    QS2 A{a_, b_}, B{c_, d_};
    auto verify = [this](const Coefficient& y) -> std::optional<Coefficient> {
        if (y * y == *this) return y.sign() >= 0 ? y : -y;
        return std::nullopt;
    };
    if (B.zero()) {
        if (auto s = sqrt_qs2(A))
            if (auto r = verify(Coefficient(s->a, s->b, 0, 0))) return r;
        QS2 A3{a_ / 3, b_ / 3};
        if (auto s = sqrt_qs2(A3))
            if (auto r = verify(Coefficient(0, 0, s->a, s->b))) return r;
        return std::nullopt;
    }
    // y = C + D*sqrt3 with (C^2 - 3D^2)^2 = A^2 - 3B^2.
    QS2 n = A * A - QS2{3, 0} * B * B;
    auto s = sqrt_qs2(n);
    if (!s) return std::nullopt;
    for (int sg : {1, -1}) {
        QS2 half{mpq_class(1, 2), 0};
        QS2 c2 = (sg > 0 ? A + *s : A - *s) * half;
        auto C = sqrt_qs2(c2);
        if (!C || C->zero()) continue;
        Coefficient Cc(C->a, C->b, 0, 0);
        Coefficient D = Coefficient(c_, d_, 0, 0) / (Coefficient(2) * Cc);
        Coefficient cand = Cc + Coefficient(0, 0, D.a_, D.b_);
        if (auto r = verify(cand)) return r;
    }
    return std::nullopt;
}

std::string Coefficient::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    auto emit = [&out](const mpq_class& r, const char* rad) {
        if (r == 0) return;
        mpq_class mag = abs(r);
        std::string part;
        if (mag == 1 && rad)
            part = rad;
        else {
            part = mag.get_str();
            if (rad) part += std::string("*") + rad;
        }
        if (out.empty())
            out = (r < 0 ? "-" : "") + part;
        else
            out += (r < 0 ? "-" : "+") + part;
    };
    emit(a_, nullptr);
    emit(b_, "s2");
    emit(c_, "s3");
    emit(d_, "s6");
    return out;
}

} // namespace mincone
