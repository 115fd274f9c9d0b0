#include "pullback/io.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace pullback;

TEST(Json, RationalRoundTrip) {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> d(-1000000000, 1000000000);
    for (int i = 0; i < 200; ++i) {
        const long den = d(rng);
        if (den == 0)
            continue;
        const Rational r(Integer(d(rng)), Integer(den));
        EXPECT_EQ(rational_from_json(json::parse(to_json(r).dump())), r);
    }
    EXPECT_EQ(to_json(Rational(3)).get<std::string>(), "3");
    EXPECT_EQ(to_json(Rational::parse("-3694/3")).get<std::string>(), "-3694/3");
}

TEST(Json, PiMonomialRoundTrip) {
    for (int k = 12; k <= 22; k += 2) {
        const auto v = alpha_direct(k).value;
        EXPECT_EQ(pi_monomial_from_json(json::parse(to_json(v).dump())), v);
    }
    const auto j = to_json(PiMonomial(Rational(1, 6), 2));
    EXPECT_EQ(j.dump(), R"({"coeff":"1/6","pi_exp":2})");
}

TEST(Json, QSeriesRoundTrip) {
    const auto s = eisenstein_qexp(12, 30);
    EXPECT_EQ(qseries_from_json(json::parse(to_json(s).dump())), s);
    json bad = to_json(s);
    bad["precision"] = 5;
    EXPECT_THROW(qseries_from_json(bad), std::invalid_argument);
}

TEST(Json, TheoremReportFields) {
    const auto j = numeric::to_json(numeric::theorem_check_num(12));
    for (const char* key : {"k", "lhs", "rhs", "rel_err", "flags", "sub_values"})
        EXPECT_TRUE(j.contains(key)) << key;
    const auto& sub = j.at("sub_values");
    ASSERT_TRUE(sub.contains("L(k-1,f)"));
    EXPECT_TRUE(sub.at("L(k-1,f)").contains("abs_error_bound"));
    EXPECT_EQ(j.at("flags").at("sym2_zeta_factor"), true);
}
