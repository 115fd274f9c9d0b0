// pullback: exact tables, alpha_k, q-expansions and the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include "pullback/io.hpp"
#include "pullback/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace pullback;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "12" or "12..22". Ranges keep only even k; a single k must itself be even.
std::vector<int> parse_weights(const std::string& text, int minimum = 12, int maximum = 100) {
    auto to_int = [&](const std::string& s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            throw UsageError("invalid weight '" + s + "'");
        }
        if (used != s.size())
            throw UsageError("invalid weight '" + s + "'");
        return v;
    };
    std::vector<int> ks;
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int k = to_int(text);
        if (k % 2 != 0)
            throw UsageError("weight must be even, got " + text);
        ks.push_back(k);
    } else {
        const int lo = to_int(text.substr(0, dots));
        const int hi = to_int(text.substr(dots + 2));
        if (lo > hi)
            throw UsageError("empty weight range " + text);
        ks = verify::even_range(lo, hi);
    }
    for (int k : ks)
        if (k < minimum || k > maximum)
            throw UsageError("weight " + std::to_string(k) + " outside [" + std::to_string(minimum) + ", " +
                             std::to_string(maximum) + "]");
    if (ks.empty())
        throw UsageError("no even weight in " + text);
    return ks;
}

std::size_t default_precision() {
    if (const char* env = std::getenv("PULLBACK_LVALUES_PRECISION")) {
        try {
            const long v = std::stol(env);
            if (v > 0)
                return std::size_t(v);
        } catch (const std::exception&) {
        }
        throw UsageError(std::string("PULLBACK_LVALUES_PRECISION must be a positive integer, got '") + env + "'");
    }
    return kDefaultPrecision;
}

void load_cache(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        return;
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw UsageError("cache " + path + ": " + e.what());
    }
    std::map<unsigned, Rational> entries;
    for (const auto& [key, value] : j.items())
        entries[unsigned(std::stoul(key))] = rational_from_json(value);
    BernoulliCache::instance().seed(entries);
}

void save_cache(const std::string& path) {
    json j = json::object();
    const auto values = BernoulliCache::instance().snapshot();
    for (std::size_t n = 0; n < values.size(); ++n)
        j[std::to_string(n)] = to_json(values[n]);
    std::ofstream(path) << j.dump(1) << '\n';
}

int cmd_tables(int which, const std::string& k, const std::string& format) {
    const auto ks = parse_weights(k);
    if (which == 1) {
        const auto rows = emit_table1(ks);
        if (format == "json") {
            json out = json::array();
            for (const auto& r : rows)
                out.push_back({{"k", r.k}, {"H(k-1,3)", to_json(r.h3)}, {"H(k-1,4)", to_json(r.h4)}});
            std::cout << out.dump(2) << '\n';
        } else if (format == "csv") {
            std::cout << "k,H(k-1;3),H(k-1;4)\n";
            for (const auto& r : rows)
                std::cout << r.k << ',' << r.h3 << ',' << r.h4 << '\n';
        } else {
            std::cout << std::left << std::setw(4) << "k" << std::setw(24) << "H(k-1,3)" << "H(k-1,4)\n";
            for (const auto& r : rows)
                std::cout << std::setw(4) << r.k << std::setw(24) << r.h3.str() << r.h4 << '\n';
        }
        return kExitOk;
    }
    const auto rows = emit_table2(ks);
    if (format == "json") {
        json out = json::array();
        for (const auto& r : rows) {
            auto j = to_json(r.alpha);
            j["factored"] = r.factored;
            out.push_back(std::move(j));
        }
        std::cout << out.dump(2) << '\n';
    } else if (format == "csv") {
        std::cout << "k,coeff,pi_exp,factored\n";
        for (const auto& r : rows)
            std::cout << r.k << ',' << r.alpha.value.coeff() << ',' << r.alpha.value.pi_exp() << ",\""
                      << r.factored << "\"\n";
    } else {
        for (const auto& r : rows)
            std::cout << "alpha_" << r.k << " = " << r.factored << '\n';
    }
    return kExitOk;
}

int cmd_alpha(const std::string& k, const std::string& route, const std::string& format) {
    const auto ks = parse_weights(k);
    json out = json::array();
    for (int w : ks) {
        if (route == "both") {
            const auto d = alpha_direct(w);
            const auto p = alpha_from_pieces(w);
            const bool equal = d.value == p.value;
            if (format == "json") {
                out.push_back({{"k", w}, {"direct", to_json(d.value)}, {"pieces", to_json(p.value)},
                               {"verdict", equal ? "EQUAL" : "UNEQUAL"}});
            } else if (format == "csv") {
                std::cout << w << ",\"" << render_factored(d.value) << "\",\"" << render_factored(p.value) << "\","
                          << (equal ? "EQUAL" : "UNEQUAL") << '\n';
            } else {
                std::cout << "alpha_" << w << " direct = " << render_factored(d.value) << '\n'
                          << "alpha_" << w << " pieces = " << render_factored(p.value) << '\n'
                          << (equal ? "EQUAL" : "UNEQUAL") << '\n';
            }
            continue;
        }
        const auto a = route == "pieces" ? alpha_from_pieces(w) : alpha_direct(w);
        if (format == "json") {
            auto j = to_json(a);
            j["factored"] = render_factored(a.value);
            out.push_back(std::move(j));
        } else if (format == "csv") {
            std::cout << w << ',' << a.value.coeff() << ',' << a.value.pi_exp() << ",\"" << render_factored(a.value)
                      << "\"\n";
        } else {
            std::cout << "alpha_" << w << " = " << render_factored(a.value) << '\n';
        }
    }
    if (format == "json")
        std::cout << out.dump(2) << '\n';
    return kExitOk;
}

int cmd_verify(const std::string& suite, std::optional<int> k, const std::string& format) {
    if (k && (*k % 2 != 0 || *k < 12))
        throw UsageError("verify --k must be even and >= 12");
    std::vector<verify::Check> checks;
    if (suite == "exact" || suite == "all")
        for (auto& c : verify::exact_suite())
            checks.push_back(std::move(c));
    if (suite == "numeric" || suite == "all")
        for (auto& c : verify::numeric_suite(k.value_or(12)))
            checks.push_back(std::move(c));

    bool all = true;
    json out = json::array();
    for (const auto& c : checks) {
        all = all && c.passed;
        if (format == "json") {
            out.push_back({{"criterion", c.criterion}, {"name", c.name}, {"passed", c.passed},
                           {"detail", c.detail}, {"seconds", c.seconds}});
            continue;
        }
        std::cout << (c.passed ? "PASS" : "FAIL") << "  [" << c.criterion << "] " << c.name << " ("
                  << std::fixed << std::setprecision(3) << c.seconds << " s)\n"
                  << std::defaultfloat << "      " << c.detail << '\n';
    }
    if (format == "json")
        std::cout << out.dump(2) << '\n';
    else
        std::cout << (all ? "all checks passed" : "some checks FAILED") << '\n';
    return all ? kExitOk : kExitFail;
}

int cmd_qexp(const std::string& form, std::optional<int> k, std::optional<int> index, std::optional<std::size_t> terms,
             const std::string& format) {
    const std::size_t n = terms.value_or(default_precision());
    if (n == 0)
        throw UsageError("--terms must be positive");
    auto need_k = [&] {
        if (!k)
            throw UsageError("--form " + form + " needs --k");
        if (*k % 2 != 0 || *k < 2)
            throw UsageError("weight must be even and positive");
        return *k;
    };
    QSeries s = QSeries::one(1);
    if (form == "eisenstein") {
        s = eisenstein_qexp(need_k(), n);
    } else if (form == "delta") {
        s = delta_qexp(n);
    } else if (form == "theta1") {
        s = theta_qexp(Theta::sum_of_two_squares, n);
    } else if (form == "theta2") {
        s = theta_qexp(Theta::hexagonal, n);
    } else if (form == "miller") {
        const auto basis = miller_basis(need_k(), n);
        const int i = index.value_or(1);
        if (i < 1 || std::size_t(i) > basis.size())
            throw UsageError("--i must lie in [1, " + std::to_string(basis.size()) + "] for k = " +
                             std::to_string(*k));
        s = basis[std::size_t(i - 1)];
    } else {
        throw UsageError("unknown form '" + form + "'");
    }
    if (format == "json") {
        std::cout << to_json(s).dump(2) << '\n';
    } else {
        const char* sep = format == "csv" ? "," : ", ";
        for (std::size_t i = 0; i < s.precision(); ++i)
            std::cout << (i ? sep : "") << s[i];
        std::cout << '\n';
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and numeric special values for pullbacks of Siegel Eisenstein series"};
    app.require_subcommand(1);
    std::string cache;
    app.add_option("--cache", cache, "Bernoulli number cache (JSON), read if present and rewritten on exit");

    const std::vector<std::string> formats = {"text", "json", "csv"};
    std::string format = "text";

    int which = 1;
    std::string k_text;
    auto* tables = app.add_subcommand("tables", "Generalized class numbers (1) or alpha_k (2)");
    tables->add_option("--which", which)->check(CLI::IsMember({1, 2}))->required();
    tables->add_option("--k", k_text, "even weight or range such as 12..22")->required();
    tables->add_option("--format", format)->check(CLI::IsMember(formats));

    std::string route = "direct";
    auto* alpha = app.add_subcommand("alpha", "alpha_k by the closed form, the coefficient comparison, or both");
    alpha->add_option("--k", k_text)->required();
    alpha->add_option("--route", route)->check(CLI::IsMember({"direct", "pieces", "both"}));
    alpha->add_option("--format", format)->check(CLI::IsMember(formats));

    std::string suite = "all";
    std::optional<int> k_opt;
    auto* verify_cmd = app.add_subcommand("verify", "Run verification checks");
    verify_cmd->add_option("--suite", suite)->check(CLI::IsMember({"exact", "numeric", "all"}));
    verify_cmd->add_option("--k", k_opt, "weight for the end-to-end numeric check");
    verify_cmd->add_option("--format", format)->check(CLI::IsMember(formats));

    std::string form;
    std::optional<int> index;
    std::optional<std::size_t> terms;
    auto* qexp = app.add_subcommand("qexp", "Exact q-expansion coefficients");
    qexp->add_option("--form", form)->required();
    qexp->add_option("--k", k_opt);
    qexp->add_option("--i", index, "Miller basis index, 1-based");
    qexp->add_option("--terms", terms);
    qexp->add_option("--format", format)->check(CLI::IsMember(formats));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (!cache.empty())
            load_cache(cache);
        int rc = kExitOk;
        if (*tables)
            rc = cmd_tables(which, k_text, format);
        else if (*alpha)
            rc = cmd_alpha(k_text, route, format);
        else if (*verify_cmd)
            rc = cmd_verify(suite, k_opt, format);
        else if (*qexp)
            rc = cmd_qexp(form, k_opt, index, terms, format);
        if (!cache.empty())
            save_cache(cache);
        return rc;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFail;
    }
}
