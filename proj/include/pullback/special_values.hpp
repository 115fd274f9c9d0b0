#pragma once

// The weighted-average constant alpha_k, computed by two independent routes,
// and the two tables built from them.

#include "pullback/bernoulli.hpp"
#include "pullback/rational.hpp"
#include "pullback/siegel.hpp"
#include "pullback/zeta_values.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace pullback {

enum class AlphaRoute { direct, pieces };

inline const char* to_string(AlphaRoute r) { return r == AlphaRoute::direct ? "direct" : "pieces"; }

struct AlphaResult {
    int k = 0;
    PiMonomial value;
    AlphaRoute route = AlphaRoute::direct;
};

/// 2^{4k-4} / ((k-1)! (2k-3)!), the rational part of the pi^{3k-3} prefactor.
inline Rational alpha_prefactor(int k) {
    return Rational(ipow(2, unsigned(4 * k - 4))) /
           Rational(Integer(factorial(unsigned(k - 1)) * factorial(unsigned(2 * k - 3))));
}

///
/// Closed form of alpha_k:
///
///   2^{4k-4} pi^{3k-3} / ((k-1)! (2k-3)!) * k / (2(k-1)) *
///     [ B_{2k-2} + (k-1)(2^{2k-4} + 2*3^{k-1} + 2^{k+2} - 23 - 8H(k-1,3) - 3H(k-1,4))
///       - k(k-1)/B_k * sum_{b=-2}^{2} H(k-1, 4-b^2) ]
///
/// This is the form that reproduces the reference alpha_k table; see
/// alpha_as_printed for the bracket taken at face value.
///
inline AlphaResult alpha_direct(int k) {
    require_even_weight(k, 12, "alpha_direct");
    const unsigned r = unsigned(k - 1);
    const Rational bk = bernoulli_number(unsigned(k));
    const Rational km1(k - 1);

    Rational bracket = bernoulli_number(unsigned(2 * k - 2));
    bracket += km1 * (Rational(diagonal_power_sum(k)) - Rational(8) * cohen_H(r, 3) - Rational(3) * cohen_H(r, 4));
    bracket -= Rational(k) * km1 / bk * class_number_sum(k);

    const Rational coeff = alpha_prefactor(k) * Rational(k) / (Rational(2) * km1) * bracket;
    return {k, PiMonomial(coeff, 3 * std::int64_t(k) - 3), AlphaRoute::direct};
}

///
/// alpha_k with the bracket
///   k/(2B_k) sum H(k-1, 4-b^2) + B_{2k-2} + (k-1)(2^{2k-4} + ... - 8H(k-1,3) - 3H(k-1,4))
/// taken literally. It does not vanish at k = 14 and does not match the
/// table; kept so the discrepancy can be reported.
///
inline AlphaResult alpha_as_printed(int k) {
    require_even_weight(k, 12, "alpha_as_printed");
    const unsigned r = unsigned(k - 1);
    const Rational bk = bernoulli_number(unsigned(k));
    Rational bracket = Rational(k) / (Rational(2) * bk) * class_number_sum(k);
    bracket += bernoulli_number(unsigned(2 * k - 2));
    bracket += Rational(k - 1) *
               (Rational(diagonal_power_sum(k)) - Rational(8) * cohen_H(r, 3) - Rational(3) * cohen_H(r, 4));
    return {k, PiMonomial(alpha_prefactor(k) * bracket, 3 * std::int64_t(k) - 3), AlphaRoute::direct};
}

///
/// alpha_k from the coefficient comparison: the cuspidal part of the
/// q1 q2 q3 coefficient, e3 - e1e2, divided by the inner-product constant
///   (-1)^{k/2} 2^{3-k} pi zeta(k-1) / ((k-1) zeta(k) zeta(2k-2)).
/// The odd value zeta(k-1) cancels against the one in A_k(f), leaving
///   (e3 - e1e2) (k-1) zeta(k) zeta(2k-2) (-1)^{k/2} 2^{k-3} / pi.
///
inline AlphaResult alpha_from_pieces(int k) {
    require_even_weight(k, 12, "alpha_from_pieces");
    const Rational cusp = e3_q1q2q3_coef(k) - e1e2_q1q2q3_coef(k);
    const Rational sign((k / 2) % 2 == 0 ? 1 : -1);
    const PiMonomial scalar(cusp * Rational(k - 1) * sign * Rational(ipow(2, unsigned(k - 3))), 0);
    const PiMonomial inv_pi(Rational(1), -1);
    PiMonomial value = scalar * zeta_exact_even(unsigned(k / 2)) * zeta_exact_even(unsigned(k - 1)) * inv_pi;
    if (value.pi_exp() < 0)
        throw std::logic_error("alpha_from_pieces: negative pi exponent");
    return {k, std::move(value), AlphaRoute::pieces};
}

// ---------------------------------------------------------------------------
// factorization for display

struct PrimePower {
    Integer prime;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

using Factorization = std::vector<PrimePower>;

namespace detail {

/// Pollard rho (Brent's variant). Returns a non-trivial factor of composite
/// n, or 0 once `budget` iterations are spent.
inline Integer rho_factor(const Integer& n, unsigned long& budget) {
    if (mpz_even_p(n.get_mpz_t()))
        return 2;
    for (unsigned long c = 1; budget > 0; ++c) {
        auto step = [&](const Integer& x) {
            Integer y = x * x + c;
            mpz_mod(y.get_mpz_t(), y.get_mpz_t(), n.get_mpz_t());
            return y;
        };
        Integer x = 2, y = 2, d = 1, q = 1, ys;
        const unsigned long m = 128;
        for (unsigned long r = 1; d == 1; r *= 2) {
            if (r > budget) {
                budget = 0;
                return 0;
            }
            budget -= r;
            x = y;
            for (unsigned long i = 0; i < r; ++i)
                y = step(y);
            for (unsigned long k = 0; k < r && d == 1; k += m) {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = step(y);
                    Integer diff = abs(x - y);
                    q = (q * diff) % n;
                }
                mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (d == n) {
            do {
                ys = step(ys);
                Integer diff = abs(x - ys);
                mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (d == 1);
        }
        if (d != n)
            return d;
    }
    return 0;
}

inline void split_cofactor(const Integer& n, std::map<Integer, unsigned>& out, unsigned long& budget) {
    if (n == 1)
        return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
        ++out[n];
        return;
    }
    const Integer d = rho_factor(n, budget);
    if (d == 0) {
        ++out[n];
        return;
    }
    split_cofactor(d, out, budget);
    split_cofactor(n / d, out, budget);
}

}  // namespace detail

/// Trial division to 10^6, then Pollard rho on whatever remains. A cofactor
/// that rho cannot split within its budget is kept whole, so the product is
/// always exact even when the last entry is composite.
inline Factorization factorize(Integer n, unsigned long trial_limit = 1000000, unsigned long rho_budget = 1UL << 20) {
    Factorization out;
    if (n < 0)
        n = -n;
    if (n <= 1)
        return out;
    for (unsigned long p = 2; p <= trial_limit; p += (p == 2 ? 1 : 2)) {
        if (Integer(p) * p > n)
            break;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p) == 0)
            continue;
        PrimePower pp{Integer(p), 0};
        while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++pp.exponent;
        }
        out.push_back(pp);
    }
    std::map<Integer, unsigned> large;
    detail::split_cofactor(n, large, rho_budget);
    for (const auto& [p, e] : large)
        out.push_back({p, e});
    return out;
}

inline Integer expand(const Factorization& f) {
    Integer n = 1;
    for (const auto& pp : f) {
        Integer t;
        mpz_pow_ui(t.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
        n *= t;
    }
    return n;
}

inline std::string render_factors(const Factorization& f) {
    std::ostringstream os;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i)
            os << " * ";
        os << f[i].prime.get_str();
        if (f[i].exponent != 1)
            os << '^' << f[i].exponent;
    }
    return os.str();
}

/// "2^31 * pi^33 / (3^6 * 5^3 * ... * 691)"; "0" for zero.
inline std::string render_factored(const PiMonomial& m) {
    if (m.is_zero())
        return "0";
    const Rational& c = m.coeff();
    std::string out = c.sign() < 0 ? "-" : "";
    const auto num = factorize(c.numerator());
    const auto den = factorize(c.denominator());
    std::string top = render_factors(num);
    if (m.pi_exp() != 0) {
        const std::string pi = m.pi_exp() == 1 ? "pi" : "pi^" + std::to_string(m.pi_exp());
        top = top.empty() ? pi : top + " * " + pi;
    }
    if (top.empty())
        top = "1";
    out += top;
    if (!den.empty())
        out += den.size() == 1 ? " / " + render_factors(den) : " / (" + render_factors(den) + ")";
    return out;
}

struct Table1Row {
    int k = 0;
    Rational h3;  // H(k-1, 3)
    Rational h4;  // H(k-1, 4)
};

struct Table2Row {
    int k = 0;
    AlphaResult alpha;
    std::string factored;
};

inline std::vector<Table1Row> emit_table1(const std::vector<int>& ks) {
    std::vector<Table1Row> rows;
    for (int k : ks) {
        require_even_weight(k, 12, "table 1");
        rows.push_back({k, cohen_H(unsigned(k - 1), 3), cohen_H(unsigned(k - 1), 4)});
    }
    return rows;
}

inline std::vector<Table2Row> emit_table2(const std::vector<int>& ks, AlphaRoute route = AlphaRoute::direct) {
    std::vector<Table2Row> rows;
    for (int k : ks) {
        auto a = route == AlphaRoute::direct ? alpha_direct(k) : alpha_from_pieces(k);
        auto text = render_factored(a.value);
        rows.push_back({k, std::move(a), std::move(text)});
    }
    return rows;
}

}  // namespace pullback
