#include "pullback/special_values.hpp"

#include <gtest/gtest.h>

using namespace pullback;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

Integer z(const char* s) { return Integer(s); }

}  // namespace

TEST(Alpha, Examples) {
    const Integer den12 = ipow(3, 6) * ipow(5, 3) * ipow(7, 3) * ipow(11, 2) * 13 * 17 * 19 * 23 * 691;
    EXPECT_EQ(alpha_direct(12).value, PiMonomial(Rational(ipow(2, 31), den12), 33));
    EXPECT_TRUE(alpha_direct(14).value.is_zero());
    const Integer den16 = ipow(3, 13) * ipow(5, 6) * ipow(7, 3) * ipow(11, 2) * ipow(13, 2) * 17 * 19 * 23 * 29 * 31 *
                          3617;
    EXPECT_EQ(alpha_direct(16).value, PiMonomial(Rational(ipow(2, 40), den16), 45));
    const Integer den22 = ipow(3, 21) * ipow(5, 8) * ipow(7, 5) * ipow(11, 3) * ipow(13, 2) * ipow(17, 2) *
                          ipow(19, 2) * 23 * 29 * 31 * 37 * 41 * 131 * 593;
    EXPECT_EQ(alpha_direct(22).value, PiMonomial(Rational(ipow(2, 42) * 4409, den22), 63));
}

TEST(Alpha, EighteenCarriesTheNumeratorOfB18) {
    // the large denominator prime is the numerator of B_18 = 43867/798
    const auto f = factorize(alpha_direct(18).value.coeff().denominator());
    ASSERT_FALSE(f.empty());
    EXPECT_EQ(f.back().prime, 43867);
    EXPECT_EQ(bernoulli_number(18).numerator(), 43867);
    EXPECT_EQ(alpha_direct(18).value.pi_exp(), 51);
}

TEST(Alpha, PiExponentAndSign) {
    for (int k = 12; k <= 40; k += 2) {
        const auto a = alpha_direct(k).value;
        if (k == 14)
            continue;
        EXPECT_EQ(a.pi_exp(), 3 * k - 3);
        EXPECT_GT(a.coeff().sign(), 0) << "k=" << k;
    }
}

TEST(Alpha, PiecesRouteVanishesAtFourteen) {
    EXPECT_TRUE(alpha_from_pieces(14).value.is_zero());
    EXPECT_EQ(alpha_from_pieces(12).value, PiMonomial(q("536870912/68833104785069625"), 33));
}

TEST(Alpha, PiecesToDirectRatio) {
    // measured relation between the two routes (see criterion 3 in the acceptance run)
    for (int k = 12; k <= 40; k += 2) {
        if (k == 14)
            continue;
        const auto d = alpha_direct(k).value;
        const auto p = alpha_from_pieces(k).value;
        EXPECT_EQ(p.pi_exp(), d.pi_exp());
        EXPECT_EQ(p.coeff() / d.coeff(), Rational(Integer(k - 1), Integer(k))) << "k=" << k;
    }
}

TEST(Alpha, LiteralBracketDoesNotVanishAtFourteen) {
    EXPECT_EQ(alpha_as_printed(12).value, PiMonomial(q("799614697472/5379850558201494375"), 33));
    EXPECT_FALSE(alpha_as_printed(14).value.is_zero());
}

TEST(Alpha, RejectsOddOrSmallWeight) {
    EXPECT_THROW(alpha_direct(13), std::domain_error);
    EXPECT_THROW(alpha_direct(10), std::domain_error);
    EXPECT_THROW(alpha_from_pieces(11), std::domain_error);
}

TEST(Factorize, SmallAndLarge) {
    EXPECT_TRUE(factorize(1).empty());
    EXPECT_TRUE(factorize(0).empty());
    EXPECT_EQ(render_factors(factorize(360)), "2^3 * 3^2 * 5");
    EXPECT_EQ(render_factors(factorize(-43687)), "7 * 79^2");
    // product of two primes above the trial-division limit
    const Integer p = z("1000003"), r = z("998244353");
    const auto f = factorize(p * r * p);
    ASSERT_EQ(f.size(), 2u);
    EXPECT_EQ(f[0], (PrimePower{p, 2}));
    EXPECT_EQ(f[1], (PrimePower{r, 1}));
    const Integer n = z("261082718496449122051");
    EXPECT_EQ(expand(factorize(n)), n);
    EXPECT_GT(factorize(n).size(), 1u);
}

TEST(Factorize, ExpandRoundTrip) {
    for (int k = 12; k <= 30; k += 2) {
        const auto c = alpha_direct(k).value.coeff();
        if (c.is_zero())
            continue;
        EXPECT_EQ(expand(factorize(c.numerator())), c.numerator());
        EXPECT_EQ(expand(factorize(c.denominator())), c.denominator());
    }
}

TEST(Render, Format) {
    EXPECT_EQ(render_factored(alpha_direct(12).value),
              "2^31 * pi^33 / (3^6 * 5^3 * 7^3 * 11^2 * 13 * 17 * 19 * 23 * 691)");
    EXPECT_EQ(render_factored(PiMonomial()), "0");
    EXPECT_EQ(render_factored(PiMonomial(q("-1/6"), 2)), "-pi^2 / (2 * 3)");
    EXPECT_EQ(render_factored(PiMonomial(q("1/7"), 0)), "1 / 7");
    EXPECT_EQ(render_factored(PiMonomial(Rational(12), 1)), "2^2 * 3 * pi");
}

TEST(Tables, TableOne) {
    const auto rows = emit_table1({12, 22});
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[0].h3, q("-3694/3"));
    EXPECT_EQ(rows[0].h4, q("-50521/2"));
    EXPECT_EQ(rows[1].h3, q("4577258092006/9"));
    EXPECT_EQ(rows[1].h4, q("370371188237525/2"));
    EXPECT_THROW(emit_table1({13}), std::domain_error);
}

TEST(Tables, TableTwo) {
    const auto rows = emit_table2({14, 12});
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[0].factored, "0");
    EXPECT_EQ(rows[1].k, 12);
    EXPECT_EQ(rows[1].alpha.route, AlphaRoute::direct);
    EXPECT_EQ(emit_table2({12}, AlphaRoute::pieces)[0].alpha.route, AlphaRoute::pieces);
}
