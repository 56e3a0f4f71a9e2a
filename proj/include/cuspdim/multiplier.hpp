#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

#include "cuspdim/arith.hpp"
#include "cuspdim/gamma0.hpp"
#include "cuspdim/qseries.hpp"
#include "cuspdim/rational.hpp"

namespace cuspdim {

/// j(gamma, tau)^w for j(gamma, tau) = (c tau + d)^{-1}.
///
/// Evaluated as exp(-w Log(c tau + d)) with the principal logarithm of c tau + d.
/// For c != 0 this is the principal power of j itself; for gamma = -Id it gives
/// e^{-pi i w}, the value entering the consistency condition psi(-Id) = e^{pi i w}.
inline std::complex<double> j_factor(const UnimodularMatrix& gamma, std::complex<double> tau, const Rational& w) {
    if (!(tau.imag() > 0.0)) throw std::invalid_argument("cuspdim: j_factor needs Im(tau) > 0");
    const std::complex<double> denom =
        gamma.c() == 0 ? std::complex<double>(double(gamma.d()), 0.0) : double(gamma.c()) * tau + double(gamma.d());
    if (denom == std::complex<double>(0.0, 0.0)) throw std::logic_error("cuspdim: c tau + d vanished");
    return std::exp(-w.to_double() * std::log(denom));
}

/// Multiplier system of the Dedekind eta function:
/// eta(gamma tau) epsilon(gamma) j(gamma, tau)^{1/2} = eta(tau).
inline UnitPhase epsilon(const UnimodularMatrix& gamma) {
    const std::int64_t a = gamma.a(), b = gamma.b(), c = gamma.c(), d = gamma.d();
    if (c == 0) {
        if (d == 1) return UnitPhase::e(Rational(-b, 24));
        return epsilon(-gamma) * UnitPhase::e(Rational(1, 4));
    }
    if (c < 0) return epsilon(-gamma) * UnitPhase::e(Rational(-1, 4));
    return UnitPhase::e(Rational(-(a + d), 24 * c) + dedekind_sum(d, c) / Rational(2) + Rational(1, 8));
}

/// Checks h | gcd(n, 12).
inline bool valid_rho_index(std::int64_t n, std::int64_t h) {
    return n >= 1 && h >= 1 && std::gcd(n, std::int64_t{12}) % h == 0;
}

/// rho_{n|h}(gamma) = exp(-2 pi i c d / (n h)) on Gamma0(n).
inline UnitPhase rho(std::int64_t n, std::int64_t h, const UnimodularMatrix& gamma) {
    if (!valid_rho_index(n, h))
        throw std::invalid_argument("cuspdim: rho needs h | gcd(n, 12), got n=" + std::to_string(n) +
                                    " h=" + std::to_string(h));
    if (!is_member(gamma, n)) throw std::invalid_argument("cuspdim: rho argument is not in Gamma0(n)");
    const std::int64_t m = n * h;
    const std::int64_t cd = static_cast<std::int64_t>(detail::i128(detail::mod_floor(gamma.c(), m)) *
                                                      detail::mod_floor(gamma.d(), m) % m);
    return UnitPhase::e(Rational(-cd, m));
}

/// psi = rho_{n|h} * epsilon^k, with the rho factor optional.
struct Multiplier {
    struct RhoIndex {
        std::int64_t n = 1;
        std::int64_t h = 1;
    };

    std::int64_t epsilon_power = 0;
    std::optional<RhoIndex> rho_index;

    static Multiplier epsilon_pow(std::int64_t k) { return {k, std::nullopt}; }
    static Multiplier rho_times_epsilon_pow(std::int64_t n, std::int64_t h, std::int64_t k) {
        if (!valid_rho_index(n, h)) throw std::invalid_argument("cuspdim: rho needs h | gcd(n, 12)");
        return {k, RhoIndex{n, h}};
    }

    UnitPhase operator()(const UnimodularMatrix& gamma) const {
        UnitPhase value = epsilon(gamma).pow(epsilon_power);
        if (rho_index) value *= rho(rho_index->n, rho_index->h, gamma);
        return value;
    }

    std::string describe() const {
        std::string s = "eps^" + std::to_string(epsilon_power);
        if (rho_index) s = "rho(" + std::to_string(rho_index->n) + "|" + std::to_string(rho_index->h) + ")*" + s;
        return s;
    }
};

/// Weight, group and multiplier of a (psi, w)-action of Gamma0(level).
struct AutomorphyContext {
    Rational weight;
    std::int64_t level = 1;
    Multiplier multiplier;

    AutomorphyContext(Rational w, std::int64_t n, Multiplier psi) : weight(w), level(n), multiplier(psi) {
        detail::require_positive(level, "AutomorphyContext");
        if (multiplier.rho_index && level % multiplier.rho_index->n != 0)
            throw std::invalid_argument("cuspdim: rho_{n|h} needs Gamma0(level) inside Gamma0(n)");
    }

    static AutomorphyContext eta() { return {Rational(1, 2), 1, Multiplier::epsilon_pow(1)}; }
    static AutomorphyContext eta_cubed(std::int64_t level = 1) {
        return {Rational(3, 2), level, Multiplier::epsilon_pow(3)};
    }

    bool contains(const UnimodularMatrix& gamma) const { return is_member(gamma, level); }
    UnitPhase psi(const UnimodularMatrix& gamma) const { return multiplier(gamma); }

    /// psi(-Id) = e^{pi i w}.
    bool consistent() const { return psi(UnimodularMatrix::minus_identity()) == UnitPhase::e(weight / Rational(2)); }
};

struct TransformationCheck {
    double residual = 0.0;     // |f(gamma tau) psi(gamma) j^w - f(tau)|
    double error_bound = 0.0;  // truncation and rounding in both evaluations
    std::size_t precision = 0; // series precision that certified the larger evaluation
    double guarantee() const { return residual + error_bound; }
    bool passes(double tolerance) const { return guarantee() < tolerance; }
};

namespace detail {

inline TransformationCheck combine(const Evaluation& at_gamma_tau, const Evaluation& at_tau, std::complex<double> factor,
                                   std::size_t precision) {
    TransformationCheck out;
    out.residual = std::abs(at_gamma_tau.value * factor - at_tau.value);
    out.error_bound = std::abs(factor) * at_gamma_tau.error_bound + at_tau.error_bound;
    out.precision = precision;
    return out;
}

inline void require_in_group(const AutomorphyContext& ctx, const UnimodularMatrix& gamma) {
    if (!ctx.contains(gamma))
        throw std::invalid_argument("cuspdim: matrix is not in Gamma0(" + std::to_string(ctx.level) + ")");
}

}  // namespace detail

/// Residual of the transformation law for a fixed truncated series. Throws
/// InsufficientPrecision if either evaluation cannot be certified below tolerance/10.
inline TransformationCheck verify_transformation(const FracQSeries& f, const AutomorphyContext& ctx,
                                                 const UnimodularMatrix& gamma, std::complex<double> tau,
                                                 double tolerance) {
    detail::require_in_group(ctx, gamma);
    const Evaluation at_tau = evaluate(f, tau);
    const Evaluation at_gamma_tau = evaluate(f, gamma.apply(tau));
    const double target = tolerance / 10.0;
    if (!(at_tau.error_bound < target) || !(at_gamma_tau.error_bound < target))
        throw InsufficientPrecision("cuspdim: precision " + std::to_string(f.precision()) +
                                    " cannot certify the transformation check");
    const std::complex<double> factor = ctx.psi(gamma).to_complex() * j_factor(gamma, tau, ctx.weight);
    return detail::combine(at_gamma_tau, at_tau, factor, f.precision());
}

/// Same check with the series precision raised until both evaluations are
/// certified below tolerance/10.
inline TransformationCheck verify_transformation(const SeriesFamily& family, const AutomorphyContext& ctx,
                                                 const UnimodularMatrix& gamma, std::complex<double> tau,
                                                 double tolerance, std::size_t start_precision = 16) {
    detail::require_in_group(ctx, gamma);
    const double target = tolerance / 10.0;
    std::size_t used = 0;
    auto certified = [&](std::complex<double> z) {
        for (std::size_t p = std::max<std::size_t>(start_precision, 1); p <= kMaxAutoPrecision; p *= 2) {
            Evaluation e = evaluate(family(p), z);
            if (e.error_bound < target) {
                used = std::max(used, p);
                return e;
            }
        }
        throw InsufficientPrecision("cuspdim: cannot certify series value for the transformation check");
    };
    const Evaluation at_tau = certified(tau);
    const Evaluation at_gamma_tau = certified(gamma.apply(tau));
    const std::complex<double> factor = ctx.psi(gamma).to_complex() * j_factor(gamma, tau, ctx.weight);
    return detail::combine(at_gamma_tau, at_tau, factor, used);
}

struct CocycleCheck {
    double residual = 0.0;  // |lhs - rhs| / |rhs|
    bool consistent = false;
};

/// psi(g1) psi(g2) j(g1, g2 tau)^w j(g2, tau)^w against psi(g1 g2) j(g1 g2, tau)^w,
/// plus the consistency condition at -Id.
inline CocycleCheck verify_cocycle(const AutomorphyContext& ctx, const UnimodularMatrix& g1, const UnimodularMatrix& g2,
                                   std::complex<double> tau) {
    detail::require_in_group(ctx, g1);
    detail::require_in_group(ctx, g2);
    const UnimodularMatrix g12 = g1 * g2;
    const std::complex<double> lhs = (ctx.psi(g1) * ctx.psi(g2)).to_complex() *
                                     j_factor(g1, g2.apply(tau), ctx.weight) * j_factor(g2, tau, ctx.weight);
    const std::complex<double> rhs = ctx.psi(g12).to_complex() * j_factor(g12, tau, ctx.weight);
    return {std::abs(lhs - rhs) / std::abs(rhs), ctx.consistent()};
}

}  // namespace cuspdim
