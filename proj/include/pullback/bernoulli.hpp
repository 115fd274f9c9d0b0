#pragma once

// Bernoulli numbers and polynomials, Kronecker characters of fundamental
// discriminants, generalized Bernoulli numbers and Cohen's class numbers.

#include "pullback/rational.hpp"

#include <cstdint>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace pullback {

class NotFundamental : public std::domain_error {
public:
    explicit NotFundamental(long D)
        : std::domain_error("not a fundamental discriminant: " + std::to_string(D)) {}
};

class NonFundamentalIndex : public std::domain_error {
public:
    NonFundamentalIndex(long r, long n)
        : std::domain_error("H(" + std::to_string(r) + ", " + std::to_string(n) +
                            "): (-1)^r n is not a fundamental discriminant and n != 0") {}
};

namespace detail {

inline bool squarefree(long m) {
    m = std::labs(m);
    if (m == 0)
        return false;
    for (long p = 2; p * p <= m; ++p) {
        if (m % (p * p) == 0)
            return false;
        if (m % p == 0)
            m /= p;
    }
    return true;
}

inline long mod(long a, long m) {
    const long r = a % m;
    return r < 0 ? r + m : r;
}

// Jacobi symbol (a/n) for odd n > 0.
inline int jacobi(long a, long n) {
    a = mod(a, n);
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const long r = n % 8;
            if (r == 3 || r == 5)
                result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3)
            result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

}  // namespace detail

///
/// Memoized Bernoulli numbers, B_1 = -1/2 convention. The cache is guarded by
/// a mutex, so concurrent callers are safe. `seed` overwrites entries without
/// validation; it exists so a persisted cache can be loaded (and so the
/// verification suites can be shown to catch a corrupted one).
///
class BernoulliCache {
public:
    static BernoulliCache& instance() {
        static BernoulliCache cache;
        return cache;
    }

    Rational get(unsigned n) {
        std::lock_guard lock(mutex_);
        extend_locked(n);
        return values_[n];
    }

    void seed(const std::map<unsigned, Rational>& entries) {
        std::lock_guard lock(mutex_);
        for (const auto& [n, v] : entries) {
            extend_locked(n);
            values_[n] = v;
        }
    }

    std::vector<Rational> snapshot() const {
        std::lock_guard lock(mutex_);
        return values_;
    }

    void clear() {
        std::lock_guard lock(mutex_);
        values_.assign(1, Rational(1));
    }

private:
    BernoulliCache() : values_{Rational(1)} {}

    // sum_{j=0}^{n} C(n+1, j) B_j = 0
    void extend_locked(unsigned n) {
        while (values_.size() <= n) {
            const auto m = static_cast<unsigned long>(values_.size());
            if (m >= 3 && (m & 1)) {
                values_.emplace_back(0);
                continue;
            }
            Rational acc;
            for (unsigned long j = 0; j < m; ++j)
                if (!values_[j].is_zero())
                    acc += Rational(binomial(m + 1, j)) * values_[j];
            values_.push_back(-acc / Rational(long(m + 1)));
        }
    }

    mutable std::mutex mutex_;
    std::vector<Rational> values_;
};

inline Rational bernoulli_number(unsigned n) { return BernoulliCache::instance().get(n); }

/// B_r(x) = sum_{k=0}^{r} C(r,k) B_k x^{r-k}
inline Rational bernoulli_polynomial(unsigned r, const Rational& x) {
    Rational acc;
    Rational xpow(1);
    for (unsigned k = r + 1; k-- > 0;) {
        const Rational b = bernoulli_number(k);
        if (!b.is_zero())
            acc += Rational(binomial(r, k)) * b * xpow;
        xpow *= x;
    }
    return acc;
}

inline bool is_fundamental_discriminant(long D) {
    if (D == 0 || D == 1)
        return false;
    const long r4 = detail::mod(D, 4);
    if (r4 == 1)
        return detail::squarefree(D);
    if (r4 == 0) {
        const long m = D / 4;
        const long rm = detail::mod(m, 4);
        return (rm == 2 || rm == 3) && detail::squarefree(m);
    }
    return false;
}

///
/// Kronecker character chi_D(j) = (D/j) of a fundamental discriminant.
///
class DiscriminantCharacter {
public:
    explicit DiscriminantCharacter(long D) : D_(D) {
        if (!is_fundamental_discriminant(D))
            throw NotFundamental(D);
        const long m = modulus();
        table_.resize(static_cast<std::size_t>(m));
        for (long j = 0; j < m; ++j)
            table_[static_cast<std::size_t>(j)] = static_cast<std::int8_t>(kronecker(D, j));
    }

    long discriminant() const { return D_; }
    long modulus() const { return std::labs(D_); }
    bool is_odd() const { return D_ < 0; }

    int operator()(long j) const {
        return table_[static_cast<std::size_t>(detail::mod(j, modulus()))];
    }

    /// Kronecker symbol (D/j) for any integer j, computed from the definition
    /// (rules at -1, 2 and the Jacobi symbol at odd primes).
    static int kronecker(long D, long j) {
        if (j == 0)
            return std::labs(D) == 1 ? 1 : 0;
        int result = 1;
        if (j < 0) {
            j = -j;
            if (D < 0)
                result = -result;
        }
        while (j % 2 == 0) {
            j /= 2;
            if (D % 2 == 0)
                return 0;
            const long r = detail::mod(D, 8);
            if (r == 3 || r == 5)
                result = -result;
        }
        if (j == 1)
            return result;
        if (std::gcd(std::labs(D), j) != 1)
            return 0;
        return result * detail::jacobi(D, j);
    }

private:
    long D_;
    std::vector<std::int8_t> table_;
};

inline int kronecker_chi(long D, long j) { return DiscriminantCharacter(D)(j); }

/// B_{r,chi_D} = |D|^{r-1} sum_{j=0}^{|D|} chi_D(j) B_r(j/|D|).
/// Both endpoints carry chi_D = 0 when |D| > 1, so this agrees with the
/// usual 1..|D| range.
inline Rational generalized_bernoulli(unsigned r, long D) {
    const DiscriminantCharacter chi(D);
    const long m = chi.modulus();
    Rational acc;
    for (long j = 0; j <= m; ++j) {
        const int c = chi(j);
        if (c != 0)
            acc += Rational(c) * bernoulli_polynomial(r, Rational(Integer(j), Integer(m)));
    }
    return Rational(ipow(m, r - 1)) * acc;
}

/// L(1-r, chi_D) = -B_{r,chi_D} / r
inline Rational dirichlet_L_exact_negative(unsigned r, long D) {
    return -generalized_bernoulli(r, D) / Rational(long(r));
}

///
/// Cohen's H(r, n) for n = 0 (zeta(1-2r)) and for (-1)^r n a fundamental
/// discriminant. Other indices are rejected.
///
inline Rational cohen_H(unsigned r, long n) {
    if (r == 0)
        throw std::domain_error("cohen_H: r must be positive");
    if (n == 0)
        return -bernoulli_number(2 * r) / Rational(long(2 * r));
    const long D = (r % 2 == 0) ? n : -n;
    if (n < 0 || !is_fundamental_discriminant(D))
        throw NonFundamentalIndex(long(r), n);
    return dirichlet_L_exact_negative(r, D);
}

}  // namespace pullback
