#pragma once

// Truncated q-expansions over Q: Eisenstein series, Delta, the Miller basis
// of level-one cusp forms and the two binary theta series.

#include "pullback/bernoulli.hpp"
#include "pullback/rational.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pullback {

inline constexpr std::size_t kDefaultPrecision = 64;

class RequiresAlgebraicEigenvalues : public std::domain_error {
public:
    RequiresAlgebraicEigenvalues(int k, std::size_t dim)
        : std::domain_error("weight " + std::to_string(k) + ": dim S_k = " + std::to_string(dim) +
                            " > 1, eigenforms need algebraic coefficients") {}
};

///
/// Coefficients of q^0 .. q^{N-1}. Products truncate to the smaller precision.
///
class QSeries {
public:
    QSeries() = default;
    explicit QSeries(std::size_t precision) : coeffs_(precision) {
        if (precision == 0)
            throw std::invalid_argument("QSeries precision must be positive");
    }
    explicit QSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty())
            throw std::invalid_argument("QSeries precision must be positive");
    }

    static QSeries one(std::size_t precision) {
        QSeries s(precision);
        s.coeffs_[0] = Rational(1);
        return s;
    }

    std::size_t precision() const { return coeffs_.size(); }
    const Rational& operator[](std::size_t n) const { return coeffs_.at(n); }
    Rational& operator[](std::size_t n) { return coeffs_.at(n); }
    std::span<const Rational> coeffs() const { return coeffs_; }

    QSeries truncated(std::size_t precision) const {
        return QSeries(std::vector<Rational>(coeffs_.begin(),
                                             coeffs_.begin() + std::ptrdiff_t(std::min(precision, this->precision()))));
    }

    std::vector<double> to_doubles() const {
        std::vector<double> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_)
            out.push_back(c.to_double());
        return out;
    }

    QSeries& operator+=(const QSeries& o) {
        coeffs_.resize(std::min(precision(), o.precision()));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    QSeries& operator-=(const QSeries& o) {
        coeffs_.resize(std::min(precision(), o.precision()));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    QSeries& operator*=(const Rational& c) {
        for (auto& x : coeffs_)
            x *= c;
        return *this;
    }

    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(QSeries a, const Rational& c) { return a *= c; }
    friend QSeries operator*(const Rational& c, QSeries a) { return a *= c; }

    // Schoolbook; precisions here stay in the low thousands.
    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        const std::size_t n = std::min(a.precision(), b.precision());
        std::vector<mpq_class> acc(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (a.coeffs_[i].is_zero())
                continue;
            const mpq_class& ai = a.coeffs_[i].raw();
            for (std::size_t j = 0; i + j < n; ++j)
                if (!b.coeffs_[j].is_zero())
                    acc[i + j] += ai * b.coeffs_[j].raw();
        }
        QSeries out(n);
        for (std::size_t i = 0; i < n; ++i) {
            acc[i].canonicalize();
            out.coeffs_[i] = Rational(acc[i].get_num(), acc[i].get_den());
        }
        return out;
    }

    QSeries pow(unsigned e) const {
        QSeries result = one(precision());
        QSeries base = *this;
        while (e) {
            if (e & 1)
                result = result * base;
            e >>= 1;
            if (e)
                base = base * base;
        }
        return result;
    }

    friend bool operator==(const QSeries&, const QSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

inline QSeries qs_mul(const QSeries& a, const QSeries& b) { return a * b; }

/// sum_{d | n} d^e
inline Integer sigma_power(unsigned e, long n) {
    if (n <= 0)
        throw std::domain_error("sigma_power: n must be positive");
    Integer acc;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        acc += ipow(d, e);
        if (d != n / d)
            acc += ipow(n / d, e);
    }
    return acc;
}

/// E_k = 1 + (2/zeta(1-k)) sum sigma_{k-1}(n) q^n, with zeta(1-k) = -B_k/k.
inline QSeries eisenstein_qexp(int k, std::size_t precision = kDefaultPrecision) {
    if (k < 4 || k % 2 != 0)
        throw std::domain_error("eisenstein_qexp: k must be even and >= 4, got " + std::to_string(k));
    const Rational zeta_1mk = -bernoulli_number(unsigned(k)) / Rational(k);
    const Rational c = Rational(2) / zeta_1mk;
    QSeries e(precision);
    e[0] = Rational(1);
    for (std::size_t n = 1; n < precision; ++n)
        e[n] = c * Rational(sigma_power(unsigned(k - 1), long(n)));
    return e;
}

/// Delta = q prod (1 - q^n)^24. The product P = prod(1-q^n)^24 satisfies
/// n p_n = -24 sum_{m=1}^{n} sigma_1(m) p_{n-m} (logarithmic derivative).
inline QSeries delta_qexp(std::size_t precision = kDefaultPrecision) {
    if (precision < 2)
        throw std::domain_error("delta_qexp: precision must be >= 2");
    const std::size_t n_max = precision - 1;
    std::vector<long> sigma1(n_max + 1, 0);
    for (std::size_t d = 1; d <= n_max; ++d)
        for (std::size_t m = d; m <= n_max; m += d)
            sigma1[m] += long(d);
    std::vector<Integer> p(n_max, 0);
    p[0] = 1;
    Integer acc;
    for (std::size_t n = 1; n < n_max; ++n) {
        acc = 0;
        for (std::size_t m = 1; m <= n; ++m)
            acc += sigma1[m] * p[n - m];
        acc *= -24;
        mpz_divexact_ui(p[n].get_mpz_t(), acc.get_mpz_t(), n);
    }
    QSeries d(precision);
    for (std::size_t n = 1; n < precision; ++n)
        d[n] = Rational(p[n - 1]);
    return d;
}

/// dim S_k(SL_2(Z)) for even k >= 0.
inline std::size_t cusp_form_dimension(int k) {
    if (k < 0 || k % 2 != 0)
        return 0;
    if (k < 12)
        return 0;
    const std::size_t q = std::size_t(k / 12);
    return (k % 12 == 2) ? q - 1 : q;
}

///
/// Miller basis of S_k: Delta^c E_4^a E_6^b with 4a + 6b = k - 12c for
/// c = 1..dim, reduced so element i has q^{i+1} coefficient 1 and q^{j+1}
/// coefficient 0 for every other j < dim.
///
inline std::vector<QSeries> miller_basis(int k, std::size_t precision = kDefaultPrecision) {
    if (k < 12 || k % 2 != 0)
        throw std::domain_error("miller_basis: k must be even and >= 12, got " + std::to_string(k));
    const std::size_t dim = cusp_form_dimension(k);
    if (dim == 0)
        return {};
    if (precision <= dim)
        throw std::domain_error("miller_basis: precision must exceed dim S_k");

    const QSeries delta = delta_qexp(precision);
    const QSeries e4 = eisenstein_qexp(4, precision);
    const QSeries e6 = eisenstein_qexp(6, precision);

    std::vector<QSeries> basis;
    for (std::size_t c = 1; c <= dim; ++c) {
        const int rest = k - 12 * int(c);
        const int b = (rest % 4 == 0) ? 0 : 1;
        const int a = (rest - 6 * b) / 4;
        QSeries g = delta.pow(unsigned(c));
        if (a > 0)
            g = g * e4.pow(unsigned(a));
        if (b > 0)
            g = g * e6;
        basis.push_back(std::move(g));
    }
    // Leading terms are q^1..q^dim with unit coefficient: back-substitute.
    for (std::size_t i = dim; i-- > 0;) {
        const Rational lead = basis[i][i + 1];
        if (lead != Rational(1))
            basis[i] *= Rational(1) / lead;
        for (std::size_t j = 0; j < i; ++j) {
            const Rational c = basis[j][i + 1];
            if (!c.is_zero())
                basis[j] -= basis[i] * c;
        }
    }
    return basis;
}

/// The normalized eigenform of weight k when dim S_k = 1; nullopt when
/// dim S_k = 0.
inline std::optional<QSeries> eigenform(int k, std::size_t precision = kDefaultPrecision) {
    const std::size_t dim = cusp_form_dimension(k);
    if (dim == 0)
        return std::nullopt;
    if (dim > 1)
        throw RequiresAlgebraicEigenvalues(k, dim);
    return miller_basis(k, precision).front();
}

enum class Theta { sum_of_two_squares = 1, hexagonal = 2 };

/// Representation numbers of m^2 + n^2 (theta 1) or m^2 + mn + n^2 (theta 2).
inline std::vector<long> theta_counts(Theta which, std::size_t precision) {
    std::vector<long> r(precision, 0);
    if (precision == 0)
        return r;
    const long n_max = long(precision) - 1;
    // m^2 + mn + n^2 >= (m^2 + n^2)/2, so |m|, |n| <= sqrt(2N) covers both forms.
    const long bound = long(std::ceil(std::sqrt(2.0 * double(n_max)))) + 1;
    for (long m = -bound; m <= bound; ++m) {
        for (long n = -bound; n <= bound; ++n) {
            const long v = which == Theta::sum_of_two_squares ? m * m + n * n : m * m + m * n + n * n;
            if (v <= n_max)
                ++r[std::size_t(v)];
        }
    }
    return r;
}

inline QSeries theta_qexp(Theta which, std::size_t precision = kDefaultPrecision) {
    const auto r = theta_counts(which, precision);
    QSeries s(precision);
    for (std::size_t n = 0; n < precision; ++n)
        s[n] = Rational(r[n]);
    return s;
}

}  // namespace pullback
