#pragma once

// JSON encodings: Rational as "p/q" (q omitted when 1), PiMonomial as
// {"coeff", "pi_exp"}, QSeries as {"precision", "coeffs"}, numeric results
// with their error bounds.

#include "pullback/numeric.hpp"
#include "pullback/qseries.hpp"
#include "pullback/rational.hpp"
#include "pullback/special_values.hpp"

#include <json.hpp>

#include <string>

namespace pullback {

using json = nlohmann::ordered_json;

inline json to_json(const Rational& r) { return r.str(); }

inline Rational rational_from_json(const json& j) { return Rational::parse(j.get<std::string>()); }

inline json to_json(const PiMonomial& m) { return json{{"coeff", m.coeff().str()}, {"pi_exp", m.pi_exp()}}; }

inline PiMonomial pi_monomial_from_json(const json& j) {
    return PiMonomial(Rational::parse(j.at("coeff").get<std::string>()), j.at("pi_exp").get<std::int64_t>());
}

inline json to_json(const QSeries& s) {
    json coeffs = json::array();
    for (const auto& c : s.coeffs())
        coeffs.push_back(c.str());
    return json{{"precision", s.precision()}, {"coeffs", std::move(coeffs)}};
}

inline QSeries qseries_from_json(const json& j) {
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs"))
        coeffs.push_back(Rational::parse(c.get<std::string>()));
    if (coeffs.size() != j.at("precision").get<std::size_t>())
        throw std::invalid_argument("QSeries JSON: precision does not match coefficient count");
    return QSeries(std::move(coeffs));
}

inline json to_json(const AlphaResult& a) {
    return json{{"k", a.k}, {"route", to_string(a.route)}, {"value", to_json(a.value)}};
}

namespace numeric {

inline json to_json(const LValueResult& r) {
    return json{{"value", r.value}, {"abs_error_bound", r.abs_error_bound}, {"method", to_string(r.method)}};
}

inline json to_json(const NormalizationFlags& f) {
    return json{{"rankin_zeta_factor", f.rankin_zeta_factor}, {"sym2_zeta_factor", f.sym2_zeta_factor}};
}

inline json to_json(const TheoremCheck& c) {
    json sub = json::object();
    for (const auto& [name, v] : c.sub_values)
        sub[name] = to_json(v);
    json settings = json::array();
    for (const auto& s : c.settings)
        settings.push_back({{"flags", to_json(s.flags)}, {"lhs", s.lhs}, {"lhs_bound", s.lhs_bound}, {"rel_err", s.rel_err}});
    json passing = json::array();
    for (const auto& f : c.passing)
        passing.push_back(to_json(f));
    return json{{"k", c.k},
                {"lhs", c.lhs},
                {"rhs", c.rhs},
                {"rel_err", c.rel_err},
                {"flags", to_json(c.flags)},
                {"sub_values", std::move(sub)},
                {"lhs_bound", c.lhs_bound},
                {"rhs_pieces", c.rhs_pieces},
                {"tolerance", c.tolerance},
                {"settings", std::move(settings)},
                {"passing_settings", std::move(passing)}};
}

}  // namespace numeric

}  // namespace pullback
