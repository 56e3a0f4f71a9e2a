#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cuspdim/gamma0.hpp"
#include "cuspdim/rational.hpp"

namespace cuspdim {

/// Majorant |a_k| <= A (k+1)^B exp(C sqrt(k)) for every coefficient index k,
/// including indices beyond the stored precision.
struct CoefficientBound {
    double A = 1.0;
    double B = 0.0;
    double C = 0.0;

    double at(std::size_t k) const {
        const double kk = static_cast<double>(k);
        return A * std::pow(kk + 1.0, B) * std::exp(C * std::sqrt(kk));
    }
};

/// Truncated expansion sum_k coeffs[k] q^{offset + k*step} with exact coefficients.
/// Coefficients past precision() are unknown, never implicitly zero.
class FracQSeries {
public:
    FracQSeries() = default;
    FracQSeries(Rational offset, Rational step, std::vector<Rational> coeffs,
                std::optional<CoefficientBound> bound = std::nullopt)
        : offset_(offset), step_(step), coeffs_(std::move(coeffs)), bound_(bound) {
        if (step_ <= Rational(0)) throw std::invalid_argument("cuspdim: q-series step must be positive");
    }

    const Rational& offset() const { return offset_; }
    const Rational& step() const { return step_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    std::size_t precision() const { return coeffs_.size(); }
    const std::optional<CoefficientBound>& bound() const { return bound_; }

    Rational exponent(std::size_t k) const { return offset_ + step_ * Rational(static_cast<std::int64_t>(k)); }
    /// End of the known range: every exponent below this is represented.
    Rational horizon() const { return exponent(coeffs_.size()); }

    const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }

    /// Coefficient of q^e; zero for grid points below the offset, throws past the horizon
    /// or off the grid.
    Rational coefficient_at(const Rational& e) const {
        Rational k = (e - offset_) / step_;
        if (!k.is_integer()) throw std::invalid_argument("cuspdim: exponent " + e.str() + " is off the series grid");
        if (k.num() < 0) return Rational(0);
        if (static_cast<std::size_t>(k.num()) >= coeffs_.size())
            throw std::out_of_range("cuspdim: exponent " + e.str() + " beyond series precision");
        return coeffs_[static_cast<std::size_t>(k.num())];
    }

    FracQSeries truncated(std::size_t precision) const {
        FracQSeries out = *this;
        if (precision < out.coeffs_.size()) out.coeffs_.resize(precision);
        return out;
    }

    FracQSeries with_bound(std::optional<CoefficientBound> b) const {
        FracQSeries out = *this;
        out.bound_ = b;
        return out;
    }

    friend bool operator==(const FracQSeries& x, const FracQSeries& y) {
        return x.offset_ == y.offset_ && x.step_ == y.step_ && x.coeffs_ == y.coeffs_;
    }

    friend FracQSeries operator+(const FracQSeries& f, const FracQSeries& g) {
        if (f.step_ != g.step_) throw std::invalid_argument("cuspdim: adding q-series on different steps");
        Rational shift = (g.offset_ - f.offset_) / f.step_;
        if (!shift.is_integer()) throw std::invalid_argument("cuspdim: adding q-series on incompatible grids");
        const FracQSeries& lo = shift.sign() >= 0 ? f : g;
        const FracQSeries& hi = shift.sign() >= 0 ? g : f;
        const auto s = static_cast<std::size_t>(shift.sign() >= 0 ? shift.num() : -shift.num());
        const std::size_t precision = std::min(lo.precision(), hi.precision() + s);
        std::vector<Rational> c(precision);
        for (std::size_t k = 0; k < precision; ++k) {
            c[k] = lo.coeffs_[k];
            if (k >= s) c[k] += hi.coeffs_[k - s];
        }
        std::optional<CoefficientBound> b;
        if (f.bound_ && g.bound_)
            b = CoefficientBound{f.bound_->A + g.bound_->A, std::max(f.bound_->B, g.bound_->B),
                                 std::max(f.bound_->C, g.bound_->C)};
        return FracQSeries(lo.offset_, lo.step_, std::move(c), b);
    }

    FracQSeries operator-() const { return scaled(Rational(-1)); }
    friend FracQSeries operator-(const FracQSeries& f, const FracQSeries& g) { return f + (-g); }

    FracQSeries scaled(const Rational& lambda) const {
        FracQSeries out = *this;
        for (auto& c : out.coeffs_) c *= lambda;
        if (out.bound_) out.bound_->A *= std::abs(lambda.to_double());
        return out;
    }

    friend FracQSeries operator*(const FracQSeries& f, const FracQSeries& g) {
        if (f.step_ != g.step_) throw std::invalid_argument("cuspdim: multiplying q-series on different steps");
        const std::size_t precision = std::min(f.precision(), g.precision());
        std::vector<Rational> c(precision);
        for (std::size_t i = 0; i < precision; ++i) {
            if (f.coeffs_[i].num() == 0) continue;
            for (std::size_t j = 0; i + j < precision; ++j) {
                if (g.coeffs_[j].num() == 0) continue;
                c[i + j] += f.coeffs_[i] * g.coeffs_[j];
            }
        }
        std::optional<CoefficientBound> b;
        if (f.bound_ && g.bound_)
            b = CoefficientBound{f.bound_->A * g.bound_->A, f.bound_->B + g.bound_->B + 1.0,
                                 std::hypot(f.bound_->C, g.bound_->C)};
        return FracQSeries(f.offset_ + g.offset_, f.step_, std::move(c), b);
    }

    /// Multiplicative inverse; needs a nonzero leading coefficient.
    FracQSeries inverse() const {
        if (coeffs_.empty() || coeffs_[0].num() == 0)
            throw std::domain_error("cuspdim: q-series inverse needs a nonzero leading coefficient");
        const std::size_t precision = coeffs_.size();
        std::vector<Rational> c(precision);
        const Rational lead_inv = Rational(1) / coeffs_[0];
        c[0] = lead_inv;
        for (std::size_t k = 1; k < precision; ++k) {
            Rational acc;
            for (std::size_t i = 1; i <= k; ++i)
                if (coeffs_[i].num() != 0) acc += coeffs_[i] * c[k - i];
            c[k] = -acc * lead_inv;
        }
        return FracQSeries(-offset_, step_, std::move(c));
    }

    FracQSeries pow(std::int64_t e) const {
        if (e < 0) return inverse().pow(-e);
        FracQSeries result(offset_ * Rational(0), step_, std::vector<Rational>(precision()), CoefficientBound{1, 0, 0});
        if (precision() > 0) result.coeffs_[0] = Rational(1);
        FracQSeries base = *this;
        while (e > 0) {
            if (e & 1) result = result * base;
            e >>= 1;
            if (e > 0) base = base * base;
        }
        return result;
    }

private:
    Rational offset_;
    Rational step_{1};
    std::vector<Rational> coeffs_;
    std::optional<CoefficientBound> bound_;
};

/// prod_delta eta(delta tau)^{r_delta} at level N; every delta divides N.
struct EtaQuotient {
    std::int64_t level = 1;
    std::map<std::int64_t, int> exponents;

    EtaQuotient() = default;
    EtaQuotient(std::int64_t n, std::map<std::int64_t, int> r) : level(n), exponents(std::move(r)) {
        detail::require_positive(level, "EtaQuotient");
        for (auto [delta, e] : exponents)
            if (delta < 1 || level % delta != 0)
                throw std::invalid_argument("cuspdim: eta quotient factor " + std::to_string(delta) +
                                            " does not divide level " + std::to_string(level));
    }

    /// sum delta r_delta / 24, the exponent of the leading term.
    Rational leading_exponent() const {
        Rational s;
        for (auto [delta, e] : exponents) s += Rational(delta * e, 24);
        return s;
    }

    /// sum r_delta / 2
    Rational weight() const {
        Rational s;
        for (auto [delta, e] : exponents) s += Rational(e, 2);
        return s;
    }
};

/// eta(tau)^2 eta(23 tau)^2, the weight 2 cusp form on Gamma0(23).
inline EtaQuotient level23_weight2_form() { return EtaQuotient(23, {{1, 2}, {23, 2}}); }

namespace detail {

inline void require_precision(std::size_t precision) {
    if (precision < 1) throw std::invalid_argument("cuspdim: q-series precision must be >= 1");
}

// coefficients of prod (1 - q^{delta n}) up to (but excluding) index `precision`
inline std::vector<Rational> euler_product_coeffs(std::size_t precision, std::int64_t delta) {
    std::vector<Rational> c(precision);
    const auto P = static_cast<std::int64_t>(precision);
    // pentagonal numbers k(3k-1)/2 for k = 0, 1, -1, 2, -2, ...
    for (std::int64_t k = 0;; ++k) {
        bool any = false;
        for (std::int64_t s : {k, -k}) {
            if (k == 0 && s < 0) continue;
            const std::int64_t idx = delta * (s * (3 * s - 1) / 2);
            if (idx < P) {
                c[static_cast<std::size_t>(idx)] = Rational(k % 2 == 0 ? 1 : -1);
                any = true;
            }
        }
        if (!any) break;
    }
    return c;
}

}  // namespace detail

/// eta(tau) = q^{1/24} prod (1 - q^n), first `precision` grid terms.
inline FracQSeries eta_expansion(std::size_t precision) {
    detail::require_precision(precision);
    return FracQSeries(Rational(1, 24), Rational(1), detail::euler_product_coeffs(precision, 1), CoefficientBound{1, 0, 0});
}

/// eta(delta tau) on the unit-step grid.
inline FracQSeries eta_scaled(std::int64_t delta, std::size_t precision) {
    detail::require_positive(delta, "eta_scaled");
    detail::require_precision(precision);
    return FracQSeries(Rational(delta, 24), Rational(1), detail::euler_product_coeffs(precision, delta),
                       CoefficientBound{1, 0, 0});
}

/// S^(l)_r = sum_m (2lm + r) q^{(2lm+r)^2 / 4l}, for 0 < r < l.
inline FracQSeries theta_S(std::int64_t l, std::int64_t r, std::size_t precision) {
    if (l < 2) throw std::invalid_argument("cuspdim: theta_S requires l >= 2");
    if (r <= 0 || r >= l) throw std::invalid_argument("cuspdim: theta_S requires 0 < r < l");
    detail::require_precision(precision);
    std::vector<Rational> c(precision);
    const auto P = static_cast<std::int64_t>(precision);
    // (2lm+r)^2/4l = r^2/4l + (l m^2 + r m); the index l m^2 + r m is injective in m
    for (std::int64_t m = 0;; ++m) {
        bool any = false;
        for (std::int64_t s : {m, -m - 1}) {
            const std::int64_t idx = l * s * s + r * s;
            if (idx < P) {
                c[static_cast<std::size_t>(idx)] = Rational(2 * l * s + r);
                any = true;
            }
        }
        if (!any) break;
    }
    const double A = std::sqrt(static_cast<double>(4 * l + r * r));
    return FracQSeries(Rational(r * r, 4 * l), Rational(1), std::move(c), CoefficientBound{A, 0.5, 0});
}

/// eta^3, computed as a cube of the product expansion and as the unary theta
/// sum sum_m (4m+1) q^{(4m+1)^2/8}. Throws std::logic_error if they differ.
inline FracQSeries eta_cubed(std::size_t precision) {
    detail::require_precision(precision);
    const FracQSeries eta = eta_expansion(precision);
    const FracQSeries cube = eta * eta * eta;

    std::vector<Rational> c(precision);
    const auto P = static_cast<std::int64_t>(precision);
    for (std::int64_t m = 0;; ++m) {
        bool any = false;
        for (std::int64_t s : {m, -m - 1}) {
            const std::int64_t idx = s * (2 * s + 1);  // (4s+1)^2/8 - 1/8
            if (idx < P) {
                c[static_cast<std::size_t>(idx)] = Rational(4 * s + 1);
                any = true;
            }
        }
        if (!any) break;
    }
    FracQSeries theta(Rational(1, 8), Rational(1), std::move(c), CoefficientBound{3, 0.5, 0});
    if (!(cube == theta)) throw std::logic_error("cuspdim: eta^3 product and theta expansions disagree");
    return theta;
}

inline FracQSeries eta_quotient_expansion(const EtaQuotient& eq, std::size_t precision) {
    detail::require_precision(precision);
    std::vector<Rational> one(precision);
    one[0] = Rational(1);
    FracQSeries result(Rational(0), Rational(1), std::move(one));
    int total = 0;
    for (auto [delta, e] : eq.exponents) {
        if (e == 0) continue;
        result = result * eta_scaled(delta, precision).pow(e);
        total += std::abs(e);
    }
    // |coeffs| are dominated by those of prod (1 - q^n)^{-total}, whose k-th
    // coefficient is at most exp(pi sqrt(2 total k / 3))
    const double C = std::numbers::pi * std::sqrt(2.0 * total / 3.0);
    return result.with_bound(CoefficientBound{1, 0, C});
}

/// Vanishing order of an eta quotient at a cusp of Gamma0(level), in the local
/// uniformizer q^{1/w} of the cusp's width w.
inline Rational eta_quotient_cusp_order(const EtaQuotient& eq, const CuspClass& cusp) {
    if (cusp.level != eq.level)
        throw std::invalid_argument("cuspdim: cusp of level " + std::to_string(cusp.level) +
                                    " used with eta quotient of level " + std::to_string(eq.level));
    const std::int64_t N = eq.level;
    const std::int64_t c = cusp.d;
    if (c < 1 || N % c != 0) throw std::invalid_argument("cuspdim: cusp denominator does not divide the level");
    const std::int64_t g = static_cast<std::int64_t>(detail::gcd128(detail::i128(c) * c, N));
    Rational sum;
    for (auto [delta, e] : eq.exponents) {
        const std::int64_t gd = std::gcd(c, delta);
        sum += Rational(gd * gd * e, delta);
    }
    return Rational(N / g, 24) * sum;
}

struct Evaluation {
    std::complex<double> value;
    double error_bound = std::numeric_limits<double>::infinity();  // truncation plus rounding
    bool bounded() const { return std::isfinite(error_bound); }
};

/// Thrown when a requested accuracy cannot be certified.
class InsufficientPrecision : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Evaluation evaluate(const FracQSeries& f, std::complex<double> tau) {
    if (!(tau.imag() > 0.0)) throw std::invalid_argument("cuspdim: evaluate needs Im(tau) > 0");
    const std::complex<double> two_pi_i(0.0, 2.0 * std::numbers::pi);
    const double eps = std::numeric_limits<double>::epsilon();

    std::complex<double> sum = 0.0;
    double abs_sum = 0.0;
    std::size_t terms = 0;
    for (std::size_t k = 0; k < f.precision(); ++k) {
        const Rational& c = f[k];
        if (c.num() == 0) continue;
        const std::complex<double> term = c.to_double() * std::exp(two_pi_i * tau * f.exponent(k).to_double());
        sum += term;
        abs_sum += std::abs(term);
        ++terms;
    }

    Evaluation out{sum};
    if (!f.bound()) return out;
    const CoefficientBound& b = *f.bound();
    const std::size_t P = f.precision();
    const double x = std::exp(-2.0 * std::numbers::pi * tau.imag() * f.step().to_double());
    const double Pd = static_cast<double>(std::max<std::size_t>(P, 1));
    const double ratio = x * std::pow((Pd + 2.0) / (Pd + 1.0), b.B) * std::exp(b.C / (2.0 * std::sqrt(Pd)));
    if (ratio >= 1.0) return out;
    const double lead = std::exp(-2.0 * std::numbers::pi * tau.imag() * f.offset().to_double());
    const double tail = lead * b.at(P) * std::pow(x, static_cast<double>(P)) / (1.0 - ratio);
    const double rounding = 4.0 * eps * (abs_sum + std::abs(sum)) * std::max<std::size_t>(terms, 1);
    out.error_bound = tail + rounding;
    return out;
}

using SeriesFamily = std::function<FracQSeries(std::size_t)>;

inline constexpr std::size_t kMaxAutoPrecision = std::size_t{1} << 16;

/// Raises the precision (doubling from `start`) until the certified error is
/// below `target`. Throws InsufficientPrecision past kMaxAutoPrecision.
inline Evaluation evaluate_to(const SeriesFamily& family, std::complex<double> tau, double target,
                              std::size_t start = 16) {
    for (std::size_t p = std::max<std::size_t>(start, 1); p <= kMaxAutoPrecision; p *= 2) {
        Evaluation e = evaluate(family(p), tau);
        if (e.error_bound < target) return e;
    }
    throw InsufficientPrecision("cuspdim: cannot certify error below " + std::to_string(target) + " at tau = (" +
                                std::to_string(tau.real()) + ", " + std::to_string(tau.imag()) + ")");
}

}  // namespace cuspdim
