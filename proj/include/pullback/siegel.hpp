#pragma once

// Fourier coefficients of the degree-2 Siegel Eisenstein series, its
// restriction to the diagonal, and the q1 q2 q3 coefficients of the degree-3
// pullback.

#include "pullback/bernoulli.hpp"
#include "pullback/rational.hpp"
#include "pullback/zeta_values.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pullback {

class IndefiniteIndex : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

///
/// Half-integral 2x2 index [[a, b/2], [b/2, c]].
///
struct HalfIntegralIndex {
    long a = 0;
    long b = 0;
    long c = 0;

    /// 4ac - b^2 = det(2T)
    long discriminant() const { return 4 * a * c - b * b; }
    bool is_positive_semidefinite() const { return a >= 0 && c >= 0 && discriminant() >= 0; }
    bool is_zero() const { return a == 0 && b == 0 && c == 0; }
    long content() const { return std::gcd(std::gcd(std::labs(a), std::labs(b)), std::labs(c)); }

    friend bool operator==(const HalfIntegralIndex&, const HalfIntegralIndex&) = default;
};

inline void require_even_weight(int k, int minimum, const char* what) {
    if (k % 2 != 0 || k < minimum)
        throw std::domain_error(std::string(what) + ": k must be even and >= " + std::to_string(minimum) +
                                ", got " + std::to_string(k));
}

///
/// A_{2,k}(T) = 2/(zeta(3-2k) zeta(1-k)) sum_{d | (a,b,c)} d^{k-1} H(k-1, (4ac-b^2)/d^2),
/// with A(0) = 1.
///
inline Rational siegel_A2k(int k, const HalfIntegralIndex& T) {
    require_even_weight(k, 4, "siegel_A2k");
    if (!T.is_positive_semidefinite())
        throw IndefiniteIndex("siegel_A2k: index is not positive semidefinite");
    if (T.is_zero())
        return Rational(1);
    const long g = T.content();
    const long disc = T.discriminant();
    Rational sum;
    for (long d = 1; d <= g; ++d) {
        if (g % d != 0)
            continue;
        sum += Rational(ipow(d, unsigned(k - 1))) * cohen_H(unsigned(k - 1), disc / (d * d));
    }
    const Rational prefactor = Rational(2) / (zeta_exact_negative_odd(3 - 2 * k) * zeta_exact_negative_odd(1 - k));
    return prefactor * sum;
}

/// q2^{n2} q3^{n3} coefficient of E_{2,k} restricted to the diagonal:
/// the sum of A_{2,k}((n2, b, n3)) over b^2 <= 4 n2 n3.
inline Rational e2_restricted_coef(int k, long n2, long n3) {
    if (n2 < 0 || n3 < 0)
        throw std::domain_error("e2_restricted_coef: exponents must be non-negative");
    const long bound = 4 * n2 * n3;
    Rational sum;
    for (long b = 0; b * b <= bound; ++b) {
        const Rational v = siegel_A2k(k, {n2, b, n3});
        sum += b == 0 ? v : v + siegel_A2k(k, {n2, -b, n3});
    }
    return sum;
}

/// 2^{2k-4} + 2*3^{k-1} + 2^{k+2} - 23
inline Integer diagonal_power_sum(int k) {
    return ipow(2, unsigned(2 * k - 4)) + 2 * ipow(3, unsigned(k - 1)) + ipow(2, unsigned(k + 2)) - 23;
}

///
/// Coefficient of q1 q2 q3 in E_{3,k}(z1, z2, z3):
///   -8k/B_k + 8k(k-1)/(B_k B_{2k-2}) (8 H(k-1,3) + 3 H(k-1,4))
///   + (-1)^{k/2} 8k(k-1)/|B_k B_{2k-2}| (2^{2k-4} + 2*3^{k-1} + 2^{k+2} - 23)
///
inline Rational e3_q1q2q3_coef(int k) {
    require_even_weight(k, 12, "e3_q1q2q3_coef");
    const unsigned r = unsigned(k - 1);
    const Rational bk = bernoulli_number(unsigned(k));
    const Rational b2k2 = bernoulli_number(unsigned(2 * k - 2));
    const Rational kk(k);
    const Rational sign((k / 2) % 2 == 0 ? 1 : -1);

    const Rational t1 = Rational(-8) * kk / bk;
    const Rational t2 = Rational(8) * kk * Rational(k - 1) / (bk * b2k2) *
                        (Rational(8) * cohen_H(r, 3) + Rational(3) * cohen_H(r, 4));
    const Rational t3 = sign * Rational(8) * kk * Rational(k - 1) / (bk * b2k2).abs() *
                        Rational(diagonal_power_sum(k));
    return t1 + t2 + t3;
}

/// sum_{b=-2}^{2} H(k-1, 4-b^2) = 2H(k-1,0) + 2H(k-1,3) + H(k-1,4)
inline Rational class_number_sum(int k) {
    Rational s;
    for (long b = -2; b <= 2; ++b)
        s += cohen_H(unsigned(k - 1), 4 - b * b);
    return s;
}

/// Coefficient of q1 q2 q3 in E_{1,k}(z1) E_{2,k}(z2, z3):
///   4/(zeta(3-2k) zeta(1-k)^2) sum_{b=-2}^{2} H(k-1, 4-b^2)
inline Rational e1e2_q1q2q3_coef(int k) {
    require_even_weight(k, 12, "e1e2_q1q2q3_coef");
    const Rational z1 = zeta_exact_negative_odd(1 - k);
    const Rational z3 = zeta_exact_negative_odd(3 - 2 * k);
    return Rational(4) / (z3 * z1 * z1) * class_number_sum(k);
}

/// The same coefficient as the product of the q1 coefficient of E_{1,k} and
/// the q2 q3 coefficient of the restricted E_{2,k}.
inline Rational e1e2_q1q2q3_coef_by_product(int k) {
    require_even_weight(k, 12, "e1e2_q1q2q3_coef");
    return Rational(2) / zeta_exact_negative_odd(1 - k) * e2_restricted_coef(k, 1, 1);
}

}  // namespace pullback
