#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cuspdim {

namespace detail {

__extension__ typedef __int128 i128;

inline std::int64_t narrow(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw std::overflow_error("cuspdim: 64-bit overflow in exact arithmetic");
    return static_cast<std::int64_t>(v);
}

inline i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// floor division for a signed numerator and positive denominator
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace detail

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den) { assign(num, den); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    int sign() const { return (num_ > 0) - (num_ < 0); }

    std::int64_t floor() const { return detail::floor_div(num_, den_); }
    std::int64_t ceil() const { return -detail::floor_div(-num_, den_); }

    /// Fractional part x - floor(x), in [0, 1).
    Rational frac() const { return Rational(detail::mod_floor(num_, den_), den_); }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// "p" for integers, "p/q" otherwise.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    static Rational parse(std::string_view text);

    Rational operator-() const { return from_wide(-static_cast<detail::i128>(num_), den_); }

    friend Rational operator+(const Rational& x, const Rational& y) {
        using detail::i128;
        return from_wide(i128(x.num_) * y.den_ + i128(y.num_) * x.den_, i128(x.den_) * y.den_);
    }
    friend Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }
    friend Rational operator*(const Rational& x, const Rational& y) {
        using detail::i128;
        return from_wide(i128(x.num_) * y.num_, i128(x.den_) * y.den_);
    }
    friend Rational operator/(const Rational& x, const Rational& y) {
        using detail::i128;
        if (y.num_ == 0) throw std::domain_error("cuspdim: rational division by zero");
        return from_wide(i128(x.num_) * y.den_, i128(x.den_) * y.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
        using detail::i128;
        i128 lhs = i128(x.num_) * y.den_;
        i128 rhs = i128(y.num_) * x.den_;
        return lhs <=> rhs;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    static Rational from_wide(detail::i128 num, detail::i128 den) {
        if (den == 0) throw std::domain_error("cuspdim: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        detail::i128 g = detail::gcd128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        Rational r;
        r.num_ = detail::narrow(num);
        r.den_ = detail::narrow(den);
        return r;
    }

    void assign(std::int64_t num, std::int64_t den) { *this = from_wide(num, den); }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline Rational Rational::parse(std::string_view text) {
    auto to_int = [&](std::string_view s) -> std::int64_t {
        if (s.empty()) throw std::invalid_argument("cuspdim: malformed rational '" + std::string(text) + "'");
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(std::string(s), &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != s.size())
            throw std::invalid_argument("cuspdim: malformed rational '" + std::string(text) + "'");
        return v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(to_int(text));
    return Rational(to_int(text.substr(0, slash)), to_int(text.substr(slash + 1)));
}

/// A root of unity e^{2 pi i turns}, stored exactly with turns reduced into [0, 1).
class UnitPhase {
public:
    UnitPhase() = default;
    explicit UnitPhase(const Rational& turns) : turns_(turns.frac()) {}

    /// e(x) = exp(2 pi i x)
    static UnitPhase e(const Rational& x) { return UnitPhase(x); }
    static UnitPhase one() { return UnitPhase(); }

    const Rational& turns() const { return turns_; }

    /// Multiplicative order; the denominator of the reduced turns.
    std::int64_t order() const { return turns_.den(); }

    bool is_one() const { return turns_.num() == 0; }

    UnitPhase inverse() const { return UnitPhase(-turns_); }
    UnitPhase pow(std::int64_t k) const { return UnitPhase(turns_ * Rational(k)); }

    std::complex<double> to_complex() const {
        // reduce to (-1/2, 1/2] before evaluating to keep the angle small
        double t = turns_.to_double();
        if (t > 0.5) t -= 1.0;
        double angle = 2.0 * std::numbers::pi * t;
        return {std::cos(angle), std::sin(angle)};
    }

    friend UnitPhase operator*(const UnitPhase& x, const UnitPhase& y) { return UnitPhase(x.turns_ + y.turns_); }
    UnitPhase& operator*=(const UnitPhase& o) { return *this = *this * o; }
    friend UnitPhase operator/(const UnitPhase& x, const UnitPhase& y) { return x * y.inverse(); }

    friend bool operator==(const UnitPhase&, const UnitPhase&) = default;

    friend std::ostream& operator<<(std::ostream& os, const UnitPhase& p) { return os << "e(" << p.turns_ << ")"; }

private:
    Rational turns_;
};

}  // namespace cuspdim
