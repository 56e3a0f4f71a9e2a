#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cuspdim/classifier.hpp"
#include "cuspdim/gamma0.hpp"
#include "cuspdim/multiplier.hpp"
#include "cuspdim/qseries.hpp"

namespace cuspdim {

using Rng = std::mt19937_64;

/// Random element of Gamma0(level) with every entry bounded by max_entry in
/// absolute value. Requires max_entry >= level.
inline UnimodularMatrix random_gamma0(Rng& rng, std::int64_t max_entry, std::int64_t level = 1) {
    detail::require_positive(level, "random_gamma0");
    if (max_entry < level) throw std::invalid_argument("cuspdim: random_gamma0 needs max_entry >= level");
    std::uniform_int_distribution<std::int64_t> kdist(-max_entry / level, max_entry / level);
    std::uniform_int_distribution<std::int64_t> entry(-max_entry, max_entry);
    for (;;) {
        const std::int64_t c = level * kdist(rng);
        if (c == 0) {
            const std::int64_t d = (entry(rng) >= 0) ? 1 : -1;
            return {d, entry(rng), 0, d};
        }
        const std::int64_t d = entry(rng);
        if (std::gcd(c, d) != 1) continue;
        // a d - b c = 1 from d x + c y = 1, then shift (a, b) by multiples of (c, d)
        const auto bz = extended_gcd(d, c);
        std::int64_t a = bz.x, b = -bz.y;
        const std::int64_t t = static_cast<std::int64_t>(std::llround(-static_cast<double>(a) / static_cast<double>(c)));
        a += t * c;
        b += t * d;
        if (std::abs(a) > max_entry || std::abs(b) > max_entry) continue;
        return {a, b, c, d};
    }
}

/// A point tau with c tau + d = +-(x + iy), x in [-1/2, 1/2], y in [1/2, 3/2], so
/// that both tau and gamma tau keep imaginary part of order 1/|c|.
inline std::complex<double> random_tau_for(Rng& rng, const UnimodularMatrix& gamma) {
    std::uniform_real_distribution<double> xs(-0.5, 0.5), ys(0.5, 1.5);
    const std::complex<double> z(xs(rng), ys(rng));
    if (gamma.c() == 0) return z;
    const double c = static_cast<double>(gamma.c());
    return -static_cast<double>(gamma.d()) / c + z / std::abs(c);
}

/// One line of a verification suite.
struct CheckLine {
    std::string subject;
    std::string point;
    double residual = 0.0;
    double bound = 0.0;
    bool pass = false;
};

struct SuiteReport {
    explicit SuiteReport(std::string suite = {}) : name(std::move(suite)) {}

    std::string name;
    std::vector<CheckLine> lines;
    std::size_t checks = 0;
    std::size_t failures = 0;
    double max_residual = 0.0;
    bool passed() const { return failures == 0 && checks > 0; }

    void record(CheckLine line, bool keep = true) {
        ++checks;
        if (!line.pass) ++failures;
        max_residual = std::max(max_residual, line.residual);
        if (keep || !line.pass) lines.push_back(std::move(line));
    }
};

namespace detail {

inline std::string matrix_str(const UnimodularMatrix& m) {
    std::ostringstream os;
    os << m;
    return os.str();
}

inline std::string tau_str(std::complex<double> t) {
    std::ostringstream os;
    os.precision(6);
    os << t.real() << (t.imag() < 0 ? "-" : "+") << std::abs(t.imag()) << "i";
    return os.str();
}

}  // namespace detail

/// |eta(gamma tau) eps(gamma) j(gamma, tau)^{1/2} - eta(tau)| over random (gamma, tau).
inline SuiteReport eta_law_suite(std::size_t samples, std::int64_t max_entry, double tolerance, std::uint64_t seed) {
    SuiteReport report{"eta-law"};
    Rng rng(seed);
    const SeriesFamily eta = [](std::size_t p) { return eta_expansion(p); };
    const AutomorphyContext ctx = AutomorphyContext::eta();
    for (std::size_t i = 0; i < samples; ++i) {
        const UnimodularMatrix g = random_gamma0(rng, max_entry);
        const std::complex<double> tau = random_tau_for(rng, g);
        CheckLine line{detail::matrix_str(g), detail::tau_str(tau)};
        try {
            const TransformationCheck chk = verify_transformation(eta, ctx, g, tau, tolerance);
            line.residual = chk.residual;
            line.bound = chk.error_bound;
            line.pass = chk.passes(tolerance);
        } catch (const InsufficientPrecision&) {
            line.residual = line.bound = std::numeric_limits<double>::infinity();
        }
        report.record(std::move(line));
    }
    return report;
}

/// Same law for eta^3 = S^(2)_1 with eps^3 at weight 3/2, on random elements of Gamma0(level).
inline SuiteReport eta_cubed_law_suite(std::size_t samples, std::int64_t max_entry, double tolerance,
                                       std::uint64_t seed, std::int64_t level = 1) {
    SuiteReport report{"eta3-law"};
    Rng rng(seed);
    const SeriesFamily eta3 = [](std::size_t p) { return theta_S(2, 1, p); };
    const AutomorphyContext ctx = AutomorphyContext::eta_cubed(level);
    for (std::size_t i = 0; i < samples; ++i) {
        const UnimodularMatrix g = random_gamma0(rng, std::max(max_entry, level), level);
        const std::complex<double> tau = random_tau_for(rng, g);
        CheckLine line{detail::matrix_str(g), detail::tau_str(tau)};
        try {
            const TransformationCheck chk = verify_transformation(eta3, ctx, g, tau, tolerance);
            line.residual = chk.residual;
            line.bound = chk.error_bound;
            line.pass = chk.passes(tolerance);
        } catch (const InsufficientPrecision&) {
            line.residual = line.bound = std::numeric_limits<double>::infinity();
        }
        report.record(std::move(line));
    }
    return report;
}

/// Multiplier cocycle relation at tau = i for eps at weight 1/2, plus the
/// consistency condition psi(-Id) = e^{pi i w}.
inline SuiteReport cocycle_suite(std::size_t samples, std::int64_t max_entry, double tolerance, std::uint64_t seed,
                                 const AutomorphyContext& ctx = AutomorphyContext::eta()) {
    SuiteReport report{"cocycle " + ctx.multiplier.describe() + " w=" + ctx.weight.str()};
    Rng rng(seed);
    const std::complex<double> tau(0.0, 1.0);
    for (std::size_t i = 0; i < samples; ++i) {
        const UnimodularMatrix g1 = random_gamma0(rng, std::max(max_entry, ctx.level), ctx.level);
        const UnimodularMatrix g2 = random_gamma0(rng, std::max(max_entry, ctx.level), ctx.level);
        const CocycleCheck chk = verify_cocycle(ctx, g1, g2, tau);
        CheckLine line{detail::matrix_str(g1) + "*" + detail::matrix_str(g2), detail::tau_str(tau), chk.residual, 0.0,
                       chk.consistent && chk.residual < tolerance};
        report.record(std::move(line));
    }
    return report;
}

/// rho_{n|h} is a homomorphism on Gamma0(n) and trivial on Gamma0(nh), for
/// every n <= max_n and h | gcd(n, 12). Exact phase arithmetic.
inline SuiteReport rho_suite(std::int64_t max_n, std::size_t pairs, std::uint64_t seed) {
    SuiteReport report{"rho"};
    Rng rng(seed);
    for (std::int64_t n = 1; n <= max_n; ++n) {
        for (std::int64_t h = 1; h <= 12; ++h) {
            if (!valid_rho_index(n, h)) continue;
            const std::int64_t bound = std::max<std::int64_t>(50, 4 * n * h);
            std::size_t bad_hom = 0, bad_kernel = 0, bad_order = 0;
            for (std::size_t i = 0; i < pairs; ++i) {
                const UnimodularMatrix g1 = random_gamma0(rng, bound, n);
                const UnimodularMatrix g2 = random_gamma0(rng, bound, n);
                const UnitPhase r1 = rho(n, h, g1);
                if (rho(n, h, g1 * g2) != r1 * rho(n, h, g2)) ++bad_hom;
                if ((n * h) % r1.order() != 0) ++bad_order;
                if (!rho(n, h, random_gamma0(rng, bound, n * h)).is_one()) ++bad_kernel;
            }
            CheckLine line{"rho(" + std::to_string(n) + "|" + std::to_string(h) + ")",
                           std::to_string(pairs) + " pairs",
                           static_cast<double>(bad_hom + bad_kernel + bad_order), 0.0,
                           bad_hom == 0 && bad_kernel == 0 && bad_order == 0};
            report.record(std::move(line));
        }
    }
    return report;
}

/// eta^3 as a cube against the unary theta series, and S^(2)_1 against eta^3.
inline SuiteReport euler_identity_suite(std::size_t depth) {
    SuiteReport report{"euler-identity"};
    const std::string where = std::to_string(depth) + " coefficients";
    const FracQSeries eta = eta_expansion(depth);
    const FracQSeries cube = eta * eta * eta;
    FracQSeries theta;
    bool ok = true;
    try {
        theta = eta_cubed(depth);
    } catch (const std::logic_error&) {
        ok = false;
    }
    report.record({"eta^3 product = sum (4m+1) q^{(4m+1)^2/8}", where, ok ? 0.0 : 1.0, 0.0, ok && cube == theta});
    const FracQSeries s21 = theta_S(2, 1, depth);
    report.record({"S^(2)_1 = eta^3", where, 0.0, 0.0, ok && s21 == theta});
    return report;
}

/// Riemann-Roch coherence and cusp bookkeeping for every level up to max_n:
/// strong = deg D + 1 - genus, crude <= weak <= strong, sum of widths = index.
inline SuiteReport rr_identity_suite(std::int64_t max_n) {
    SuiteReport report{"rr-identity"};
    std::size_t bad = 0;
    for (std::int64_t n = 1; n <= max_n; ++n) {
        bool ok = true;
        try {
            const GroupProfile g = profile(n);
            const Rational strong = bound_strong(g), weak = bound_weak(g), crude = bound_crude(g);
            const CuspDivisor D = divisor_D(g);
            std::int64_t width_sum = 0;
            for (const auto& c : g.cusps) width_sum += c.width;
            ok = strong == Rational(D.degree() + 1 - g.genus) && crude <= weak && weak <= strong &&
                 width_sum == g.index && static_cast<std::int64_t>(g.cusps.size()) == cusp_count(n);
        } catch (const std::logic_error&) {
            ok = false;
        }
        if (!ok) {
            ++bad;
            report.record({"level " + std::to_string(n), "", 1.0, 0.0, false});
        } else {
            report.record({"level " + std::to_string(n), "", 0.0, 0.0, true}, false);
        }
    }
    report.lines.push_back({"levels 1.." + std::to_string(max_n), std::to_string(bad) + " failures", 0.0, 0.0, bad == 0});
    return report;
}

}  // namespace cuspdim
