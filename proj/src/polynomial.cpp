#include "mincone/polynomial.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace mincone {

Polynomial::Polynomial(int n) : n_(n) {
    if (n < 0 || n > kMaxVariables)
        throw std::invalid_argument("Polynomial: dimension out of range");
}

Polynomial Polynomial::constant(int n, Coefficient c) {
    Polynomial p(n);
    p.add_term(Monomial(n, 0), c);
    return p;
}

Polynomial Polynomial::variable(int n, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("Polynomial: variable index out of range");
    Polynomial p(n);
    Monomial m(n, 0);
    m[i - 1] = 1;
    p.add_term(m, Coefficient(1));
    return p;
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.begin()->first);
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = total_degree(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (total_degree(m) != d) return false;
    return true;
}

Coefficient Polynomial::constant_value() const {
    if (terms_.empty()) return Coefficient();
    if (!is_constant()) throw std::logic_error("Polynomial: not a constant");
    return terms_.begin()->second;
}

const std::pair<const Monomial, Coefficient>& Polynomial::leading() const {
    if (terms_.empty()) throw std::logic_error("Polynomial: leading term of zero");
    return *terms_.begin();
}

Coefficient Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coefficient() : it->second;
}

void Polynomial::add_term(const Monomial& m, const Coefficient& c) {
    if (static_cast<int>(m.size()) != n_)
        throw std::invalid_argument("Polynomial: monomial length mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial out(n_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (n_ != o.n_) throw std::invalid_argument("Polynomial: dimension mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (n_ != o.n_) throw std::invalid_argument("Polynomial: dimension mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& l, const Polynomial& r) {
    if (l.n_ != r.n_) throw std::invalid_argument("Polynomial: dimension mismatch");
    Polynomial out(l.n_);
    if (l.is_zero() || r.is_zero()) return out;
    Monomial prod(l.n_);
    for (const auto& [ml, cl] : l.terms_) {
        for (const auto& [mr, cr] : r.terms_) {
            for (int i = 0; i < l.n_; ++i) {
                unsigned e = unsigned(ml[i]) + unsigned(mr[i]);
                if (e > 255) throw std::overflow_error("Polynomial: exponent overflow");
                prod[i] = static_cast<std::uint8_t>(e);
            }
            out.add_term(prod, cl * cr);
        }
    }
    return out;
}

Polynomial Polynomial::scaled(const Coefficient& c) const {
    Polynomial out(n_);
    if (c.is_zero()) return out;
    for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
    return out;
}

Polynomial Polynomial::derivative(int i) const {
    if (i < 1 || i > n_) throw std::invalid_argument("Polynomial: derivative index out of range");
    Polynomial out(n_);
    for (const auto& [m, c] : terms_) {
        if (m[i - 1] == 0) continue;
        Monomial dm = m;
        long e = dm[i - 1]--;
        out.add_term(dm, c * Coefficient(e));
    }
    return out;
}

Coefficient Polynomial::evaluate(std::span<const Coefficient> point) const {
    if (static_cast<int>(point.size()) != n_)
        throw std::invalid_argument("Polynomial: evaluation point length mismatch");
    Coefficient acc;
    for (const auto& [m, c] : terms_) {
        Coefficient t = c;
        for (int i = 0; i < n_; ++i)
            for (int e = 0; e < m[i]; ++e) t *= point[i];
        acc += t;
    }
    return acc;
}

Polynomial Polynomial::substitute_linear(std::span<const Coefficient> m_rowmajor) const {
    if (static_cast<int>(m_rowmajor.size()) != n_ * n_)
        throw std::invalid_argument("Polynomial: substitution matrix dimension mismatch");
    // Row i of M gives the image of x_{i+1}.
    std::vector<Polynomial> image;
    image.reserve(n_);
    for (int i = 0; i < n_; ++i) {
        Polynomial li(n_);
        for (int j = 0; j < n_; ++j) {
            const Coefficient& c = m_rowmajor[i * n_ + j];
            if (!c.is_zero()) {
                Monomial mm(n_, 0);
                mm[j] = 1;
                li.add_term(mm, c);
            }
        }
        image.push_back(std::move(li));
    }
    // Cache powers of each image form as needed.
    std::vector<std::vector<Polynomial>> powers(n_);
    auto power = [&](int i, int e) -> const Polynomial& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Polynomial::constant(n_, Coefficient(1)));
        while (static_cast<int>(cache.size()) <= e)
            cache.push_back(cache.back() * image[i]);
        return cache[e];
    };
    Polynomial out(n_);
    for (const auto& [m, c] : terms_) {
        Polynomial t = Polynomial::constant(n_, c);
        for (int i = 0; i < n_; ++i)
            if (m[i] > 0) t = t * power(i, m[i]);
        out += t;
    }
    return out;
}

namespace {

std::string monomial_str(const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += "x" + std::to_string(i + 1);
        if (m[i] > 1) s += "^" + std::to_string(int(m[i]));
    }
    return s;
}

} // namespace

DivisionResult exact_divide(const Polynomial& g, const Polynomial& f) {
    if (g.dimension() != f.dimension())
        throw std::invalid_argument("exact_divide: dimension mismatch");
    if (f.is_zero()) throw std::invalid_argument("exact_divide: division by zero polynomial");
    const int n = g.dimension();
    Polynomial rem = g;
    Polynomial quot(n);
    const auto& [lf, cf] = f.leading();
    Coefficient cf_inv = cf.inverse();
    while (!rem.is_zero()) {
        const auto& [lr, cr] = rem.leading();
        Monomial qm(n);
        bool divisible = true;
        for (int i = 0; i < n; ++i) {
            if (lr[i] < lf[i]) { divisible = false; break; }
            qm[i] = static_cast<std::uint8_t>(lr[i] - lf[i]);
        }
        if (!divisible) {
            std::string w = (cr.is_one() ? "" : cr.to_string() + "*") + monomial_str(lr);
            return {false, Polynomial(n), w};
        }
        Coefficient qc = cr * cf_inv;
        Polynomial t(n);
        t.add_term(qm, qc);
        quot += t;
        rem -= t * f;
    }
    return {true, quot, ""};
}

std::optional<Polynomial> poly_sqrt(const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("poly_sqrt: zero input");
    const int n = f.dimension();
    const auto& [lf, cf] = f.leading();
    Monomial root_m(n);
    for (int i = 0; i < n; ++i) {
        if (lf[i] % 2 != 0) return std::nullopt;
        root_m[i] = static_cast<std::uint8_t>(lf[i] / 2);
    }
    auto root_c = cf.sqrt_in_field();
    if (!root_c) return std::nullopt;
    // Peel terms: maintain g with the invariant that g^2 agrees with f on
    // every monomial at or above the current remainder's leading one.
    Polynomial g(n);
    g.add_term(root_m, *root_c);
    const Coefficient twice_lead_inv = (Coefficient(2) * *root_c).inverse();
    Polynomial rem = f - g * g;
    while (!rem.is_zero()) {
        const auto& [lr, cr] = rem.leading();
        // Next term t of g must satisfy 2*lead(g)*t = leading of rem.
        Monomial tm(n);
        for (int i = 0; i < n; ++i) {
            if (lr[i] < root_m[i]) return std::nullopt;
            tm[i] = static_cast<std::uint8_t>(lr[i] - root_m[i]);
        }
        if (GrevlexDescending{}(tm, root_m)) return std::nullopt;  // t would outrank lead(g)
        Polynomial t(n);
        t.add_term(tm, cr * twice_lead_inv);
        g += t;
        rem = f - g * g;
    }
    if (!(g * g == f)) return std::nullopt;
    return g;
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    int n;

    explicit Parser(const std::string& text, int dim) : s(text), n(dim) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + msg);
    }
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    bool accept(char c) {
        if (peek(c)) { ++pos; return true; }
        return false;
    }
    bool at_digit() {
        skip_ws();
        return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
    }

    unsigned long parse_uint() {
        skip_ws();
        if (!at_digit()) fail("expected number");
        unsigned long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > 1000000000UL) fail("number too large");
            ++pos;
        }
        return v;
    }

    // 's2' | 's3' | 's6', assuming s[pos] == 's'
    Coefficient parse_radical() {
        ++pos;
        if (pos >= s.size()) fail("truncated radical");
        char c = s[pos++];
        if (c == '2') return Coefficient::sqrt2();
        if (c == '3') return Coefficient::sqrt3();
        if (c == '6') return Coefficient::sqrt6();
        fail("unknown radical (expected s2, s3 or s6)");
    }

    // var index (1-based), assuming s[pos] == 'x'
    int parse_var() {
        ++pos;
        unsigned long i = parse_uint();
        if (i < 1) fail("variable index must be >= 1");
        if (static_cast<int>(i) > n) fail("unknown variable x" + std::to_string(i));
        return static_cast<int>(i);
    }

    // term := coeff ('*' factor)* | factor ('*' factor)*
    void parse_term(Polynomial& out, bool negate) {
        skip_ws();
        Coefficient coeff(1);
        Monomial mono(n, 0);
        std::vector<bool> seen(n, false);
        bool any = false;

        bool expect_factor_only = false;
        if (at_digit()) {
            mpq_class num(parse_uint());
            if (accept('/')) {
                unsigned long den = parse_uint();
                if (den == 0) fail("zero denominator");
                num /= mpq_class(den);
            }
            coeff = Coefficient(num);
            any = true;
            while (accept('*')) {
                skip_ws();
                if (pos < s.size() && s[pos] == 's')
                    coeff *= parse_radical();
                else { expect_factor_only = true; break; }
            }
        } else if (peek('s')) {
            coeff = parse_radical();
            any = true;
            while (accept('*')) {
                skip_ws();
                if (pos < s.size() && s[pos] == 's')
                    coeff *= parse_radical();
                else { expect_factor_only = true; break; }
            }
        }

        auto parse_factor = [&] {
            skip_ws();
            if (pos >= s.size() || s[pos] != 'x') fail("expected variable factor");
            int i = parse_var();
            if (seen[i - 1]) fail("repeated factor x" + std::to_string(i) + " (use ^)");
            seen[i - 1] = true;
            unsigned long e = 1;
            if (accept('^')) e = parse_uint();
            if (e > 255) fail("exponent overflow");
            mono[i - 1] = static_cast<std::uint8_t>(e);
            any = true;
        };

        if (expect_factor_only || (!any && pos < s.size())) {
            parse_factor();
            while (accept('*')) parse_factor();
        } else if (any) {
            // coefficient-only term already consumed; nothing more to do
        } else {
            fail("expected term");
        }
        out.add_term(mono, negate ? -coeff : coeff);
    }

    Polynomial parse() {
        Polynomial out(n);
        skip_ws();
        if (pos == s.size()) fail("empty polynomial");
        bool neg = accept('-');
        parse_term(out, neg);
        while (true) {
            skip_ws();
            if (pos == s.size()) break;
            if (accept('+'))
                parse_term(out, false);
            else if (accept('-'))
                parse_term(out, true);
            else
                fail("expected '+' or '-'");
        }
        return out;
    }
};

int infer_dimension(const std::string& text) {
    int n = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == 'x' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
            int v = 0;
            std::size_t j = i + 1;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
                v = v * 10 + (text[j++] - '0');
            if (v > n) n = v;
        }
    }
    return n;
}

} // namespace

Polynomial parse_poly(const std::string& text, int n) {
    if (n < 0) n = infer_dimension(text);
    if (n > kMaxVariables) throw std::invalid_argument("parse_poly: dimension out of range");
    return Parser(text, n).parse();
}

std::string format_poly(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    auto emit = [&](const mpq_class& r, const char* rad, const Monomial& m) {
        if (r == 0) return;
        bool neg = r < 0;
        mpq_class mag = abs(r);
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        std::string vars = monomial_str(m);
        std::string head;
        if (mag != 1 || (!rad && vars.empty()))
            head = mag.get_str();
        if (rad) {
            if (!head.empty()) head += "*";
            head += rad;
        }
        if (!vars.empty()) {
            if (!head.empty()) head += "*";
            head += vars;
        }
        out << head;
    };
    for (const auto& [m, c] : f.terms()) {
        emit(c.rat_part(), nullptr, m);
        emit(c.s2_part(), "s2", m);
        emit(c.s3_part(), "s3", m);
        emit(c.s6_part(), "s6", m);
    }
    return out.str();
}

std::string Polynomial::to_string() const { return format_poly(*this); }

} // namespace mincone
