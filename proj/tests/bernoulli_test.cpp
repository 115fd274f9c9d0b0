#include "pullback/bernoulli.hpp"
#include "pullback/zeta_values.hpp"

#include <gtest/gtest.h>

#include <thread>
#include <vector>

using namespace pullback;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

// Akiyama-Tanigawa algorithm; yields B_1 = +1/2, so flip it.
std::vector<Rational> akiyama_tanigawa(unsigned n_max) {
    std::vector<Rational> out;
    std::vector<Rational> a(n_max + 1);
    for (unsigned m = 0; m <= n_max; ++m) {
        a[m] = Rational(Integer(1), Integer(m + 1));
        for (unsigned j = m; j >= 1; --j)
            a[j - 1] = Rational(long(j)) * (a[j - 1] - a[j]);
        out.push_back(a[0]);
    }
    out[1] = -out[1];
    return out;
}

// Horner evaluation of sum_k C(r,k) B_k x^{r-k} with Bernoulli numbers from the
// Akiyama-Tanigawa table.
Rational horner_bernoulli_poly(unsigned r, const Rational& x, const std::vector<Rational>& b) {
    Rational acc;
    for (unsigned k = 0; k <= r; ++k)
        acc = acc * x + Rational(binomial(r, k)) * b[k];
    return acc;
}

// B_{r,chi} from the generating-function definition restricted to 1..|D|-1.
Rational direct_generalized_bernoulli(unsigned r, long D, const std::vector<Rational>& b) {
    const long m = std::labs(D);
    Rational acc;
    for (long a = 1; a < m; ++a) {
        const int c = DiscriminantCharacter::kronecker(D, a);
        if (c)
            acc += Rational(c) * horner_bernoulli_poly(r, Rational(Integer(a), Integer(m)), b);
    }
    return Rational(ipow(m, r - 1)) * acc;
}

}  // namespace

TEST(Bernoulli, Examples) {
    EXPECT_EQ(bernoulli_number(0), Rational(1));
    EXPECT_EQ(bernoulli_number(1), q("-1/2"));
    EXPECT_EQ(bernoulli_number(12), q("-691/2730"));
    EXPECT_EQ(bernoulli_number(22), q("854513/138"));
    EXPECT_EQ(bernoulli_number(18), q("43867/798"));
    EXPECT_TRUE(bernoulli_number(13).is_zero());
}

TEST(Bernoulli, MatchesAkiyamaTanigawa) {
    const auto oracle = akiyama_tanigawa(80);
    for (unsigned n = 0; n <= 80; ++n)
        EXPECT_EQ(bernoulli_number(n), oracle[n]) << "n=" << n;
}

TEST(Bernoulli, ConcurrentAccessIsConsistent) {
    const auto oracle = akiyama_tanigawa(60);
    BernoulliCache::instance().clear();
    std::vector<std::thread> threads;
    std::vector<int> ok(8, 1);
    for (int t = 0; t < 8; ++t)
        threads.emplace_back([&, t] {
            for (unsigned n = 60; n-- > 0;)
                if (bernoulli_number(n) != oracle[n])
                    ok[std::size_t(t)] = 0;
        });
    for (auto& th : threads)
        th.join();
    for (int v : ok)
        EXPECT_EQ(v, 1);
}

TEST(Bernoulli, SeedOverridesAndClearRestores) {
    BernoulliCache::instance().seed({{12, Rational(5)}});
    EXPECT_EQ(bernoulli_number(12), Rational(5));
    BernoulliCache::instance().clear();
    EXPECT_EQ(bernoulli_number(12), q("-691/2730"));
}

TEST(BernoulliPolynomial, Examples) {
    EXPECT_EQ(bernoulli_polynomial(1, q("1/4")), q("-1/4"));
    EXPECT_EQ(bernoulli_polynomial(2, Rational(0)), q("1/6"));
    EXPECT_EQ(bernoulli_polynomial(11, q("1/3")), q("20317/177147"));
}

TEST(BernoulliPolynomial, MatchesHornerOracle) {
    const auto b = akiyama_tanigawa(30);
    for (unsigned r = 0; r <= 30; ++r)
        for (const char* x : {"0", "1/3", "1/4", "2/3", "-5/7", "3/2"})
            EXPECT_EQ(bernoulli_polynomial(r, q(x)), horner_bernoulli_poly(r, q(x), b)) << r << " " << x;
}

TEST(BernoulliPolynomial, DifferenceEquation) {
    // B_r(x + 1) - B_r(x) = r x^{r-1}
    for (unsigned r = 1; r <= 25; ++r) {
        const Rational x = q("2/7");
        EXPECT_EQ(bernoulli_polynomial(r, x + Rational(1)) - bernoulli_polynomial(r, x),
                  Rational(long(r)) * x.pow(long(r) - 1));
    }
}

TEST(Discriminant, Fundamental) {
    for (long D : {-3L, -4L, -7L, -8L, -11L, -15L, -20L, -24L, 5L, 8L, 12L, 13L, 21L})
        EXPECT_TRUE(is_fundamental_discriminant(D)) << D;
    for (long D : {-1L, -2L, -12L, -16L, 0L, 1L, 4L, 9L, 16L, -27L})
        EXPECT_FALSE(is_fundamental_discriminant(D)) << D;
    EXPECT_THROW(DiscriminantCharacter(-12), NotFundamental);
}

TEST(Kronecker, Examples) {
    EXPECT_EQ(kronecker_chi(-4, 3), -1);
    EXPECT_EQ(kronecker_chi(-4, 2), 0);
    EXPECT_EQ(kronecker_chi(-3, 2), -1);
    EXPECT_EQ(kronecker_chi(-3, 1), 1);
    EXPECT_EQ(kronecker_chi(-3, 3), 0);
}

TEST(Kronecker, IsACharacter) {
    for (long D : {-3L, -4L, -7L, -8L, 5L, 12L, -20L}) {
        const DiscriminantCharacter chi(D);
        for (long a = -30; a <= 30; ++a) {
            EXPECT_EQ(chi(a), chi(a + chi.modulus()));
            for (long b = 1; b <= 30; ++b)
                EXPECT_EQ(chi(a * b), chi(a) * chi(b));
        }
        EXPECT_EQ(chi(-1), chi.is_odd() ? -1 : 1);
    }
}

TEST(GeneralizedBernoulli, Examples) {
    EXPECT_EQ(generalized_bernoulli(1, -4), q("-1/2"));
    EXPECT_EQ(generalized_bernoulli(1, -3), q("-1/3"));
    EXPECT_EQ(generalized_bernoulli(11, -4), q("555731/2"));
    EXPECT_EQ(-generalized_bernoulli(11, -4) / Rational(11), q("-50521/2"));
}

TEST(GeneralizedBernoulli, MatchesDirectSum) {
    const auto b = akiyama_tanigawa(25);
    for (long D : {-3L, -4L, -7L, -8L, 5L, 8L, 12L})
        for (unsigned r = 1; r <= 25; ++r)
            EXPECT_EQ(generalized_bernoulli(r, D), direct_generalized_bernoulli(r, D, b)) << D << " " << r;
}

TEST(GeneralizedBernoulli, ParityVanishing) {
    // B_{r,chi} = 0 when chi(-1) != (-1)^r (r > 1)
    for (unsigned r = 2; r <= 20; r += 2)
        EXPECT_TRUE(generalized_bernoulli(r, -4).is_zero());
    for (unsigned r = 3; r <= 21; r += 2)
        EXPECT_TRUE(generalized_bernoulli(r, 5).is_zero());
}

TEST(DirichletExact, Examples) {
    EXPECT_EQ(dirichlet_L_exact_negative(1, -4), q("1/2"));
    EXPECT_EQ(dirichlet_L_exact_negative(11, -4), q("-50521/2"));
    EXPECT_EQ(dirichlet_L_exact_negative(13, -3), q("111202/3"));
}

TEST(CohenH, Examples) {
    EXPECT_EQ(cohen_H(11, 3), q("-3694/3"));
    EXPECT_EQ(cohen_H(11, 4), q("-50521/2"));
    EXPECT_EQ(cohen_H(21, 3), q("4577258092006/9"));
    EXPECT_EQ(cohen_H(11, 0), q("-854513/3036"));
    EXPECT_EQ(cohen_H(11, 0), zeta_exact_negative_odd(-21));
}

TEST(CohenH, RejectsNonFundamental) {
    EXPECT_THROW(cohen_H(11, 12), NonFundamentalIndex);
    EXPECT_THROW(cohen_H(11, 1), NonFundamentalIndex);
    EXPECT_THROW(cohen_H(12, 3), NonFundamentalIndex);  // +3 is not a discriminant
    EXPECT_NO_THROW(cohen_H(12, 5));
}

TEST(ZetaValues, Examples) {
    EXPECT_EQ(zeta_exact_negative_odd(-11), q("691/32760"));
    EXPECT_EQ(zeta_exact_negative_odd(-1), q("-1/12"));
    EXPECT_EQ(zeta_exact_negative_odd(-21), -bernoulli_number(22) / Rational(22));
    EXPECT_EQ(zeta_exact_even(1), PiMonomial(q("1/6"), 2));
    EXPECT_EQ(zeta_exact_even(2), PiMonomial(q("1/90"), 4));
    EXPECT_EQ(zeta_exact_even(6), PiMonomial(q("691/638512875"), 12));
}
