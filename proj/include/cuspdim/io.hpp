#pragma once

#include <cstdio>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cuspdim/classifier.hpp"
#include "cuspdim/coset_oracle.hpp"
#include "cuspdim/gamma0.hpp"
#include "cuspdim/qseries.hpp"
#include "cuspdim/verify.hpp"

namespace cuspdim::io {

using nlohmann::ordered_json;

// Exact values are written as strings "p" or "p/q".

inline constexpr const char* kRepresentativeConvention =
    "a/d with the least a >= 0 coprime to d in its class modulo gcd(d, n/d)";

inline ordered_json to_json(const CuspClass& c) {
    return ordered_json{{"a", c.a}, {"d", c.d}, {"representative", c.representative.str()}, {"width", c.width}};
}

inline ordered_json cusps_to_json(std::int64_t n, const std::vector<CuspClass>& classes) {
    ordered_json rows = ordered_json::array();
    for (const auto& c : classes) rows.push_back(to_json(c));
    return ordered_json{{"level", n},
                        {"index", index(n)},
                        {"cusp_count", static_cast<std::int64_t>(classes.size())},
                        {"representative_convention", kRepresentativeConvention},
                        {"cusps", rows}};
}

inline ordered_json to_json(const FracQSeries& f) {
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : f.coeffs()) coeffs.push_back(c.str());
    return ordered_json{{"offset", f.offset().str()}, {"step", f.step().str()}, {"coeffs", coeffs}};
}

inline FracQSeries series_from_json(const ordered_json& j) {
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(Rational::parse(c.get<std::string>()));
    return FracQSeries(Rational::parse(j.at("offset").get<std::string>()),
                       Rational::parse(j.at("step").get<std::string>()), std::move(coeffs));
}

/// exponent <tab> coefficient, one grid point per row.
inline std::string series_to_tsv(const FracQSeries& f) {
    std::ostringstream os;
    os << "exponent\tcoeff\n";
    for (std::size_t k = 0; k < f.precision(); ++k) os << f.exponent(k) << '\t' << f[k] << '\n';
    return os.str();
}

inline ordered_json to_json(const Certificate& c) {
    ordered_json j{{"n", c.level},
                   {"verdict", std::string(to_string(c.verdict))},
                   {"rule", std::string(to_string(c.rule))},
                   {"bound", c.bound.str()},
                   {"genus", c.genus},
                   {"deg_D", c.degree_D},
                   {"witness_divisor", nullptr},
                   {"index", c.index},
                   {"cusp_count", c.cusp_count},
                   {"mu2", c.mu2},
                   {"mu3", c.mu3},
                   {"support_size", c.support_size}};
    if (c.witness_divisor) j["witness_divisor"] = *c.witness_divisor;
    if (c.pole_cusp) j["pole_cusp"] = to_json(*c.pole_cusp);
    if (c.form_order_at_pole) j["form_order_at_pole"] = c.form_order_at_pole->str();
    if (c.differential_order_at_pole) j["differential_order_at_pole"] = c.differential_order_at_pole->str();
    return j;
}

inline ordered_json to_json(const ClassificationReport& r) {
    ordered_json certs = ordered_json::array();
    for (const auto& c : r.certificates) certs.push_back(to_json(c));
    return ordered_json{{"n_max", r.n_max},
                        {"dim_one", r.dim_one},
                        {"expected_dim_one", r.expected_dim_one},
                        {"matches_m23", r.matches_m23()},
                        {"undecided", r.undecided},
                        {"representative_convention", kRepresentativeConvention},
                        {"certificates", certs}};
}

inline std::string report_to_tsv(const ClassificationReport& r) {
    std::ostringstream os;
    os << "n\tverdict\trule\tbound\tgenus\tdeg_D\twitness_divisor\n";
    for (const auto& c : r.certificates) {
        os << c.level << '\t' << to_string(c.verdict) << '\t' << to_string(c.rule) << '\t' << c.bound << '\t'
           << c.genus << '\t' << c.degree_D << '\t';
        if (c.witness_divisor)
            os << *c.witness_divisor;
        else
            os << '-';
        os << '\n';
    }
    return os.str();
}

/// Fixed-width table: n, i(n), c(n), mu2, mu3, genus, deg D, bound, verdict, rule.
inline std::string report_to_text(const ClassificationReport& r) {
    std::ostringstream os;
    os << std::setw(6) << "n" << std::setw(8) << "i(n)" << std::setw(6) << "c(n)" << std::setw(5) << "mu2"
       << std::setw(5) << "mu3" << std::setw(7) << "genus" << std::setw(7) << "deg D" << std::setw(10) << "bound"
       << "  " << std::left << std::setw(14) << "verdict" << "rule" << std::right << '\n';
    for (const auto& c : r.certificates) {
        os << std::setw(6) << c.level << std::setw(8) << c.index << std::setw(6) << c.cusp_count << std::setw(5)
           << c.mu2 << std::setw(5) << c.mu3 << std::setw(7) << c.genus << std::setw(7) << c.degree_D
           << std::setw(10) << c.bound.str() << "  " << std::left << std::setw(14) << to_string(c.verdict)
           << to_string(c.rule);
        if (c.witness_divisor) os << " (divisor " << *c.witness_divisor << ")";
        os << std::right << '\n';
    }
    os << "dim 1 levels:";
    for (auto n : r.dim_one) os << ' ' << n;
    os << '\n';
    if (!r.undecided.empty()) {
        os << "UNDECIDED:";
        for (auto n : r.undecided) os << ' ' << n;
        os << '\n';
    }
    return os.str();
}

inline std::string format_residual(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

/// matrix <tab> tau <tab> residual <tab> bound <tab> PASS/FAIL
inline std::string suite_to_text(const SuiteReport& s) {
    std::ostringstream os;
    for (const auto& l : s.lines)
        os << s.name << '\t' << l.subject << '\t' << l.point << '\t' << format_residual(l.residual) << '\t'
           << format_residual(l.bound) << '\t' << (l.pass ? "PASS" : "FAIL") << '\n';
    os << s.name << ": " << (s.passed() ? "PASS" : "FAIL") << " (" << s.checks << " checks, " << s.failures
       << " failures, max residual " << format_residual(s.max_residual) << ")\n";
    return os.str();
}

inline ordered_json to_json(const SuiteReport& s) {
    ordered_json lines = ordered_json::array();
    for (const auto& l : s.lines)
        lines.push_back({{"subject", l.subject},
                         {"point", l.point},
                         {"residual", format_residual(l.residual)},
                         {"bound", format_residual(l.bound)},
                         {"pass", l.pass}});
    return ordered_json{{"suite", s.name},
                        {"passed", s.passed()},
                        {"checks", s.checks},
                        {"failures", s.failures},
                        {"max_residual", format_residual(s.max_residual)},
                        {"lines", lines}};
}

}  // namespace cuspdim::io
