#pragma once

// Exact zeta values at negative odd and positive even integers.

#include "pullback/bernoulli.hpp"
#include "pullback/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pullback {

/// zeta(-n) = -B_{n+1}/(n+1) for odd n >= 1.
inline Rational zeta_exact_negative_odd(long m) {
    if (m >= 0 || (-m) % 2 == 0)
        throw std::domain_error("zeta_exact_negative_odd: argument must be a negative odd integer, got " +
                                std::to_string(m));
    const long n = -m;
    return -bernoulli_number(unsigned(n + 1)) / Rational(n + 1);
}

/// zeta(2n) = (-1)^{n+1} (2 pi)^{2n} B_{2n} / (2 (2n)!)
inline PiMonomial zeta_exact_even(unsigned n) {
    if (n == 0)
        throw std::domain_error("zeta_exact_even: n must be positive");
    const Rational sign(n % 2 == 1 ? 1 : -1);
    const Rational coeff = sign * Rational(ipow(2, 2 * n)) * bernoulli_number(2 * n) /
                           Rational(Integer(2 * factorial(2 * n)));
    return PiMonomial(coeff, 2 * std::int64_t(n));
}

}  // namespace pullback
