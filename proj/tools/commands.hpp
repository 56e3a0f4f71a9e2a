#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cuspdim/cuspdim.hpp"
#include "cuspdim/io.hpp"

namespace cuspdim::cli {

enum class Format { Json, Tsv, Text };

enum ExitCode : int { kOk = 0, kMathFailure = 1, kUsage = 2 };

/// Bad arguments; maps to exit status 2.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CliConfig {
    std::size_t precision = 200;
    double tolerance = 1e-9;
    std::int64_t oracle_cutoff = kDefaultOracleCutoff;
    std::uint64_t seed = 20120517;
    Format format = Format::Text;

    void validate() const {
        if (precision < 16) throw UsageError("--precision must be at least 16");
        if (!(tolerance > 0.0)) throw UsageError("--tolerance must be positive");
        if (oracle_cutoff < 1) throw UsageError("--oracle-cutoff must be positive");
    }
};

inline Format parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "tsv") return Format::Tsv;
    if (s == "text") return Format::Text;
    throw UsageError("unknown format '" + s + "' (json, tsv, text)");
}

inline std::int64_t parse_positive(const std::string& s, const char* what) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || s.empty() || v < 1)
        throw UsageError(std::string(what) + " must be a positive integer, got '" + s + "'");
    return v;
}

/// "N" or "A..B".
inline std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        const auto n = parse_positive(s, "level");
        return {n, n};
    }
    const auto lo = parse_positive(s.substr(0, dots), "range start");
    const auto hi = parse_positive(s.substr(dots + 2), "range end");
    if (hi < lo) throw UsageError("empty range '" + s + "'");
    return {lo, hi};
}

/// Exit status 1 iff some verdict is Undecided.
inline int cmd_classify(const std::string& range, const CliConfig& cfg, std::ostream& out) {
    cfg.validate();
    const auto [lo, hi] = parse_range(range);
    const ClassificationReport report = classify_range(lo, hi);
    switch (cfg.format) {
        case Format::Json: out << io::to_json(report).dump(2) << '\n'; break;
        case Format::Tsv: out << io::report_to_tsv(report); break;
        case Format::Text: out << io::report_to_text(report); break;
    }
    return report.complete() ? kOk : kMathFailure;
}

inline int cmd_cusps(const std::string& level, bool oracle, const CliConfig& cfg, std::ostream& out) {
    cfg.validate();
    const std::int64_t n = parse_positive(level, "level");
    if (oracle && n > cfg.oracle_cutoff)
        throw UsageError("oracle refused: level " + std::to_string(n) + " exceeds --oracle-cutoff " +
                         std::to_string(cfg.oracle_cutoff));
    const auto classes = cusps(n);
    std::optional<OracleComparison> cmp;
    if (oracle) cmp = compare_with_oracle(n, cfg.oracle_cutoff);

    switch (cfg.format) {
        case Format::Json: {
            auto j = io::cusps_to_json(n, classes);
            if (cmp) {
                j["oracle"] = {{"cusp_count", cmp->oracle_count},
                               {"cosets", cmp->oracle_index},
                               {"verdict", cmp->agree() ? "AGREE" : "DISAGREE"}};
            }
            out << j.dump(2) << '\n';
            break;
        }
        case Format::Tsv:
        case Format::Text: {
            const char sep = cfg.format == Format::Tsv ? '\t' : ' ';
            out << "a" << sep << "d" << sep << "representative" << sep << "width\n";
            for (const auto& c : classes)
                out << c.a << sep << c.d << sep << c.representative.str() << sep << c.width << '\n';
            if (cmp)
                out << "oracle" << sep << (cmp->agree() ? "AGREE" : "DISAGREE") << sep << cmp->oracle_count
                    << " orbits" << sep << cmp->oracle_index << " cosets\n";
            break;
        }
    }
    return (cmp && !cmp->agree()) ? kMathFailure : kOk;
}

/// eta [P] | eta3 [P] | theta l r [P] | etaq N d:r,... [P]
inline FracQSeries build_series(const std::vector<std::string>& args, std::size_t default_precision) {
    if (args.empty()) throw UsageError("qexp needs a series: eta | eta3 | theta l r | etaq N d:r,...");
    const std::string& kind = args[0];
    std::size_t fixed = 0;
    if (kind == "eta" || kind == "eta3")
        fixed = 1;
    else if (kind == "theta" || kind == "etaq")
        fixed = 3;
    else
        throw UsageError("unknown series '" + kind + "'");
    if (args.size() < fixed || args.size() > fixed + 1)
        throw UsageError("wrong number of arguments for '" + kind + "'");
    const std::size_t precision = args.size() == fixed + 1
                                      ? static_cast<std::size_t>(parse_positive(args[fixed], "precision"))
                                      : default_precision;

    if (kind == "eta") return eta_expansion(precision);
    if (kind == "eta3") return eta_cubed(precision);
    if (kind == "theta") {
        const auto l = parse_positive(args[1], "l");
        const auto r = parse_positive(args[2], "r");
        if (l < 2 || r >= l) throw UsageError("theta needs l >= 2 and 0 < r < l");
        return theta_S(l, r, precision);
    }
    const auto N = parse_positive(args[1], "level");
    std::map<std::int64_t, int> exps;
    std::string item;
    std::istringstream items(args[2]);
    while (std::getline(items, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw UsageError("eta quotient factor '" + item + "' is not d:r");
        const auto delta = parse_positive(item.substr(0, colon), "eta quotient divisor");
        int e = 0;
        try {
            std::size_t used = 0;
            e = std::stoi(item.substr(colon + 1), &used);
            if (used != item.size() - colon - 1) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw UsageError("eta quotient exponent in '" + item + "' is not an integer");
        }
        exps[delta] += e;
    }
    try {
        return eta_quotient_expansion(EtaQuotient(N, exps), precision);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

inline int cmd_qexp(const std::vector<std::string>& args, const CliConfig& cfg, std::ostream& out) {
    cfg.validate();
    const FracQSeries f = build_series(args, cfg.precision);
    switch (cfg.format) {
        case Format::Json:
        case Format::Text: out << io::to_json(f).dump() << '\n'; break;
        case Format::Tsv: out << io::series_to_tsv(f); break;
    }
    return kOk;
}

struct VerifyOptions {
    std::size_t samples = 1000;
    std::int64_t max_entry = 50;
    std::int64_t max_level = 100000;  // rr-identity
    std::int64_t rho_max_n = 60;
    std::size_t rho_pairs = 10000;
};

inline std::vector<std::string> verify_suites() {
    return {"eta-law", "eta3-law", "cocycle", "rho", "euler-identity", "rr-identity"};
}

inline SuiteReport run_suite(const std::string& what, const CliConfig& cfg, const VerifyOptions& opt) {
    if (what == "eta-law") return eta_law_suite(opt.samples, opt.max_entry, cfg.tolerance, cfg.seed);
    if (what == "eta3-law") return eta_cubed_law_suite(opt.samples, opt.max_entry, cfg.tolerance, cfg.seed);
    if (what == "cocycle") return cocycle_suite(opt.samples, opt.max_entry, cfg.tolerance / 10.0, cfg.seed);
    if (what == "rho") return rho_suite(opt.rho_max_n, opt.rho_pairs, cfg.seed);
    if (what == "euler-identity") return euler_identity_suite(cfg.precision);
    if (what == "rr-identity") return rr_identity_suite(opt.max_level);
    throw UsageError("unknown verification suite '" + what + "'");
}

inline int cmd_verify(const std::string& what, const CliConfig& cfg, const VerifyOptions& opt, std::ostream& out) {
    cfg.validate();
    const SuiteReport s = run_suite(what, cfg, opt);
    if (cfg.format == Format::Json)
        out << io::to_json(s).dump(2) << '\n';
    else
        out << io::suite_to_text(s);
    return s.passed() ? kOk : kMathFailure;
}

}  // namespace cuspdim::cli
