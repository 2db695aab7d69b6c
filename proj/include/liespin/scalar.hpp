#pragma once

#include <gmpxx.h>

#include <array>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace liespin {

using Rational = mpq_class;

/// Parses "p" or "p/q" into an exact rational.
inline Rational rational_from_string(const std::string& text) {
    if (text.empty()) {
        throw std::invalid_argument("rational_from_string: empty literal");
    }
    for (char ch : text) {
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '/')) {
            throw std::invalid_argument("rational_from_string: bad character in \"" + text + "\"");
        }
    }
    mpq_class value;
    if (value.set_str(text, 10) != 0) {
        throw std::invalid_argument("rational_from_string: cannot parse \"" + text + "\"");
    }
    if (value.get_den() == 0) {
        throw std::invalid_argument("rational_from_string: zero denominator in \"" + text + "\"");
    }
    value.canonicalize();
    return value;
}

inline std::string rational_to_string(const Rational& x) {
    return x.get_str();
}

/// True iff x is the square of a rational (x >= 0 and numerator/denominator are perfect squares).
inline bool rational_is_square(const Rational& x) {
    if (sgn(x) < 0) return false;
    return mpz_perfect_square_p(x.get_num().get_mpz_t()) != 0 &&
           mpz_perfect_square_p(x.get_den().get_mpz_t()) != 0;
}

/// Exact square root of a rational square.
inline Rational rational_sqrt(const Rational& x) {
    if (!rational_is_square(x)) {
        throw std::domain_error("rational_sqrt: " + x.get_str() + " is not a rational square");
    }
    mpz_class num, den;
    mpz_sqrt(num.get_mpz_t(), x.get_num().get_mpz_t());
    mpz_sqrt(den.get_mpz_t(), x.get_den().get_mpz_t());
    return Rational(num, den);
}

/**
 * Scalar: an element of the field Q(i, sqrt2), stored as
 *     a + b*sqrt2 + c*i + d*i*sqrt2
 * with exact rational components. Every number in the library is one of these;
 * equality is component-wise and exact.
 */
class Scalar {
public:
    Scalar() : a_(0), b_(0), c_(0), d_(0) {}
    Scalar(int v) : a_(v), b_(0), c_(0), d_(0) {}            // NOLINT(google-explicit-constructor)
    Scalar(const Rational& v) : a_(v), b_(0), c_(0), d_(0) { a_.canonicalize(); }  // NOLINT(google-explicit-constructor)
    Scalar(Rational a, Rational b, Rational c, Rational d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
        // mpq_class values built from raw numerator/denominator pairs are not
        // reduced; exact comparison needs the canonical form.
        a_.canonicalize();
        b_.canonicalize();
        c_.canonicalize();
        d_.canonicalize();
    }

    static Scalar sqrt2() { return Scalar(0, 1, 0, 0); }
    static Scalar i() { return Scalar(0, 0, 1, 0); }
    static Scalar i_sqrt2() { return Scalar(0, 0, 0, 1); }
    static Scalar half() { return Scalar(Rational(1, 2)); }
    static Scalar inv_sqrt2() { return Scalar(0, Rational(1, 2), 0, 0); }  // sqrt2/2

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    const Rational& d() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }
    bool is_real() const { return c_ == 0 && d_ == 0; }
    bool is_rational() const { return is_real() && b_ == 0; }

    bool operator==(const Scalar& o) const {
        return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar operator+(const Scalar& o) const {
        return Scalar(raw_tag{}, a_ + o.a_, b_ + o.b_, c_ + o.c_, d_ + o.d_);
    }
    Scalar operator-(const Scalar& o) const {
        return Scalar(raw_tag{}, a_ - o.a_, b_ - o.b_, c_ - o.c_, d_ - o.d_);
    }
    Scalar operator-() const { return Scalar(raw_tag{}, -a_, -b_, -c_, -d_); }

    Scalar operator*(const Scalar& o) const {
        // (a + b s + c i + d s i)(a' + b' s + c' i + d' s i), s^2 = 2, i^2 = -1.
        return Scalar(raw_tag{}, a_ * o.a_ + 2 * b_ * o.b_ - c_ * o.c_ - 2 * d_ * o.d_,
                      a_ * o.b_ + b_ * o.a_ - c_ * o.d_ - d_ * o.c_,
                      a_ * o.c_ + c_ * o.a_ + 2 * (b_ * o.d_ + d_ * o.b_),
                      a_ * o.d_ + d_ * o.a_ + b_ * o.c_ + c_ * o.b_);
    }

    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

    /// Complex conjugation, i -> -i. A ring homomorphism.
    Scalar conj() const { return Scalar(raw_tag{}, a_, b_, -c_, -d_); }

    /// The real involution sqrt2 -> -sqrt2. A ring homomorphism.
    Scalar sqrt2_involution() const { return Scalar(raw_tag{}, a_, -b_, c_, -d_); }

    Scalar inverse() const {
        if (is_zero()) {
            throw std::domain_error("Scalar::inverse: division by zero");
        }
        // x * conj(x) lies in Q(sqrt2); multiplying by its sqrt2-involution
        // gives the rational field norm.
        const Scalar z = *this * conj();
        const Scalar zc = z.sqrt2_involution();
        const Scalar norm = z * zc;  // rational, nonzero for nonzero x
        const Rational n = norm.a();
        Scalar out = conj() * zc;
        return Scalar(raw_tag{}, out.a_ / n, out.b_ / n, out.c_ / n, out.d_ / n);
    }

    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    /// Exact sign of a real scalar a + b*sqrt2.
    int sign() const {
        if (!is_real()) {
            throw std::domain_error("Scalar::sign: value is not real");
        }
        const int sa = sgn(a_);
        const int sb = sgn(b_);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // Opposite signs: a + b*sqrt2 has the sign of whichever of a^2, 2b^2 wins.
        const int c = cmp(a_ * a_, 2 * b_ * b_);
        return c > 0 ? sa : sb;
    }

    /// Exact square root within Q(sqrt2) of a non-negative real scalar, if one exists.
    static std::optional<Scalar> sqrt_real(const Scalar& x) {
        if (!x.is_real()) return std::nullopt;
        if (x.is_zero()) return Scalar(0);
        if (x.sign() < 0) return std::nullopt;
        const Rational& a = x.a();
        const Rational& b = x.b();
        if (b == 0) {
            if (rational_is_square(a)) return Scalar(rational_sqrt(a));
            const Rational half_a = a / 2;
            if (rational_is_square(half_a)) return Scalar(0, rational_sqrt(half_a), 0, 0);
            return std::nullopt;
        }
        // (p + q*sqrt2)^2 = p^2 + 2q^2 + 2pq*sqrt2: solve p^2 + 2q^2 = a, 2pq = b.
        const Rational disc = a * a - 2 * b * b;
        if (sgn(disc) < 0 || !rational_is_square(disc)) return std::nullopt;
        const Rational e = rational_sqrt(disc);
        const Rational roots[2] = {Rational((a + e) / 2), Rational((a - e) / 2)};
        for (const Rational& t : roots) {
            if (sgn(t) <= 0 || !rational_is_square(t)) continue;
            const Rational p = rational_sqrt(t);
            const Rational q = b / (2 * p);
            Scalar s(p, q, 0, 0);
            if (s * s == x) {
                return s.sign() > 0 ? s : -s;
            }
        }
        return std::nullopt;
    }

    /// JSON literal form: four rational strings [a, b, c, d].
    std::array<std::string, 4> to_strings() const {
        return {rational_to_string(a_), rational_to_string(b_), rational_to_string(c_),
                rational_to_string(d_)};
    }

    static Scalar from_strings(const std::array<std::string, 4>& parts) {
        return Scalar(rational_from_string(parts[0]), rational_from_string(parts[1]),
                      rational_from_string(parts[2]), rational_from_string(parts[3]));
    }

    /// Human-readable form, e.g. "1 - 3/2*sqrt2 + i*sqrt2".
    std::string str() const {
        std::ostringstream out;
        bool first = true;
        auto term = [&](const Rational& coeff, const char* unit) {
            if (coeff == 0) return;
            if (first) {
                if (coeff == -1 && unit[0] != '\0') out << "-";
                else if (!(coeff == 1 && unit[0] != '\0')) out << coeff.get_str() << (unit[0] ? "*" : "");
            } else {
                out << (sgn(coeff) < 0 ? " - " : " + ");
                const Rational mag = abs(coeff);
                if (!(mag == 1 && unit[0] != '\0')) out << mag.get_str() << (unit[0] ? "*" : "");
            }
            out << unit;
            first = false;
        };
        term(a_, "");
        term(b_, "sqrt2");
        term(c_, "i");
        term(d_, "i*sqrt2");
        if (first) return "0";
        return out.str();
    }

private:
    struct raw_tag {};
    // Fast path for arithmetic: operands are already canonical, so results are.
    Scalar(raw_tag, Rational a, Rational b, Rational c, Rational d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

    Rational a_, b_, c_, d_;
};

inline Scalar operator*(int lhs, const Scalar& rhs) { return Scalar(lhs) * rhs; }
inline Scalar operator+(int lhs, const Scalar& rhs) { return Scalar(lhs) + rhs; }
inline Scalar operator-(int lhs, const Scalar& rhs) { return Scalar(lhs) - rhs; }

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace liespin
