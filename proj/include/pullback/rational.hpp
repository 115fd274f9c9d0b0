#pragma once

// Exact scalars: arbitrary-precision rationals and rational multiples of
// powers of pi.

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <cstdint>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pullback {

using Integer = mpz_class;

class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("division by zero") {}
};

class ExponentMismatch : public std::domain_error {
public:
    ExponentMismatch(std::int64_t lhs, std::int64_t rhs)
        : std::domain_error("pi exponent mismatch: pi^" + std::to_string(lhs) +
                            " + pi^" + std::to_string(rhs)) {}
};

///
/// Signed rational in lowest terms with positive denominator. Zero is 0/1.
///
class Rational {
public:
    Rational() = default;
    Rational(long v) : value_(v) {}  // NOLINT(implicit)
    Rational(int v) : value_(v) {}   // NOLINT(implicit)
    Rational(const Integer& v) : value_(v) {}  // NOLINT(implicit)

    Rational(const Integer& num, const Integer& den) {
        if (den == 0)
            throw DivisionByZero();
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    /// Parses "p/q" or "p".
    static Rational parse(std::string_view text) {
        mpq_class v;
        if (v.set_str(std::string(text), 10) != 0)
            throw std::invalid_argument("not a rational: " + std::string(text));
        if (v.get_den() == 0)
            throw DivisionByZero();
        v.canonicalize();
        return Rational(std::move(v));
    }

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    double to_double() const { return value_.get_d(); }
    const mpq_class& raw() const { return value_; }

    std::string str() const { return value_.get_str(10); }

    Rational abs() const { return Rational(mpq_class(::abs(value_))); }

    Rational pow(long e) const {
        if (e < 0) {
            if (is_zero())
                throw DivisionByZero();
            return Rational(1) / pow(-e);
        }
        Integer n, d;
        mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(e));
        return Rational(n, d);
    }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw DivisionByZero();
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}

    mpq_class value_{0};
};

enum class ArithOp { add, sub, mul, div };

inline Rational rational_arith(const Rational& a, const Rational& b, ArithOp op) {
    switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
    }
    throw std::logic_error("unknown op");
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Integer ipow(long base, unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base), e);
    if (base < 0 && (e & 1))
        r = -r;
    return r;
}

///
/// coeff * pi^pi_exp. The exponent is signed so intermediate quotients by pi
/// can be represented; values handed to callers are expected to have
/// pi_exp >= 0. Zero is always stored as (0, 0).
///
class PiMonomial {
public:
    PiMonomial() = default;
    PiMonomial(Rational coeff, std::int64_t pi_exp) : coeff_(std::move(coeff)), pi_exp_(pi_exp) {
        if (coeff_.is_zero())
            pi_exp_ = 0;
    }

    const Rational& coeff() const { return coeff_; }
    std::int64_t pi_exp() const { return pi_exp_; }
    bool is_zero() const { return coeff_.is_zero(); }

    double to_double() const {
        if (is_zero())
            return 0.0;
        // The rational part can over/underflow a double on its own (e.g. alpha_k
        // for k near 40), so combine logarithms.
        const auto& q = coeff_.raw();
        long en = 0, ed = 0;
        const double mn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
        const double md = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
        const double log2v = std::log2(std::abs(mn)) - std::log2(md) + double(en - ed) +
                             double(pi_exp_) * std::log2(std::numbers::pi);
        return (mn < 0 ? -1.0 : 1.0) * std::exp2(log2v);
    }

    friend PiMonomial operator*(const PiMonomial& x, const PiMonomial& y) {
        return PiMonomial(x.coeff_ * y.coeff_, x.pi_exp_ + y.pi_exp_);
    }
    friend PiMonomial operator/(const PiMonomial& x, const PiMonomial& y) {
        return PiMonomial(x.coeff_ / y.coeff_, x.pi_exp_ - y.pi_exp_);
    }
    friend PiMonomial operator+(const PiMonomial& x, const PiMonomial& y) {
        if (x.is_zero())
            return y;
        if (y.is_zero())
            return x;
        if (x.pi_exp_ != y.pi_exp_)
            throw ExponentMismatch(x.pi_exp_, y.pi_exp_);
        return PiMonomial(x.coeff_ + y.coeff_, x.pi_exp_);
    }
    friend PiMonomial operator-(const PiMonomial& x) { return PiMonomial(-x.coeff_, x.pi_exp_); }

    friend bool operator==(const PiMonomial&, const PiMonomial&) = default;

    friend std::ostream& operator<<(std::ostream& os, const PiMonomial& m) {
        os << m.coeff_;
        if (m.pi_exp_ != 0)
            os << "*pi^" << m.pi_exp_;
        return os;
    }

private:
    Rational coeff_;
    std::int64_t pi_exp_ = 0;
};

inline PiMonomial pim_mul(const PiMonomial& x, const PiMonomial& y) { return x * y; }
inline PiMonomial pim_add(const PiMonomial& x, const PiMonomial& y) { return x + y; }

}  // namespace pullback
