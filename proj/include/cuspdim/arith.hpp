#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "cuspdim/rational.hpp"

namespace cuspdim {

/// Prime factorization of a positive integer. `factors` maps p to nu_p(value).
struct Factorization {
    std::int64_t value = 1;
    std::map<std::int64_t, int> factors;

    int valuation(std::int64_t p) const {
        auto it = factors.find(p);
        return it == factors.end() ? 0 : it->second;
    }

    std::int64_t product() const {
        std::int64_t v = 1;
        for (auto [p, e] : factors)
            for (int i = 0; i < e; ++i) v *= p;
        return v;
    }
};

namespace detail {

inline void require_positive(std::int64_t n, const char* what) {
    if (n < 1) throw std::invalid_argument(std::string("cuspdim: ") + what + " requires n >= 1, got " + std::to_string(n));
}

inline std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
    i128 result = 1 % mod;
    i128 b = mod_floor(base, mod);
    while (exp > 0) {
        if (exp & 1) result = result * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<std::int64_t>(result);
}

}  // namespace detail

struct BezoutResult {
    std::int64_t g, x, y;  // g = gcd(a, b) = a*x + b*y, g >= 0
};

inline BezoutResult extended_gcd(std::int64_t a, std::int64_t b) {
    std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

/// Trial division up to sqrt(n).
inline Factorization factorize(std::int64_t n) {
    detail::require_positive(n, "factorize");
    Factorization f;
    f.value = n;
    std::int64_t m = n;
    for (std::int64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        while (m % p == 0) {
            ++f.factors[p];
            m /= p;
        }
    }
    if (m > 1) ++f.factors[m];
    return f;
}

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

/// Positive divisors in increasing order.
inline std::vector<std::int64_t> divisors(std::int64_t n) {
    detail::require_positive(n, "divisors");
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d * d != n) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline std::int64_t euler_phi(const Factorization& f) {
    std::int64_t phi = f.value;
    for (auto [p, e] : f.factors) phi = phi / p * (p - 1);
    return phi;
}

inline std::int64_t euler_phi(std::int64_t n) { return euler_phi(factorize(n)); }

/// Kronecker symbol (a/n), extended multiplicatively from the Legendre symbol
/// with the usual rules at -1 and 2. (a/0) is 1 when a = +-1 and 0 otherwise.
inline int kronecker(std::int64_t a, std::int64_t n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        if (a < 0) result = -1;
        n = -n;
    }
    for (auto [p, e] : factorize(n).factors) {
        int symbol;
        if (p == 2) {
            std::int64_t r = detail::mod_floor(a, 8);
            if (r % 2 == 0)
                symbol = 0;
            else
                symbol = (r == 1 || r == 7) ? 1 : -1;
        } else {
            if (detail::mod_floor(a, p) == 0) {
                symbol = 0;
            } else {
                std::int64_t euler = detail::powmod(a, (p - 1) / 2, p);
                symbol = euler == 1 ? 1 : -1;
            }
        }
        if (symbol == 0) return 0;
        if (symbol == -1 && (e % 2 == 1)) result = -result;
    }
    return result;
}

/// ((x)): 0 on integers, x - floor(x) - 1/2 otherwise.
inline Rational sawtooth(const Rational& x) {
    if (x.is_integer()) return Rational(0);
    return x.frac() - Rational(1, 2);
}

/// Classical Dedekind sum s(d, c) = sum_{m=1}^{c-1} ((m/c)) ((md/c)).
inline Rational dedekind_sum(std::int64_t d, std::int64_t c) {
    if (c < 1) throw std::invalid_argument("cuspdim: dedekind_sum requires c >= 1");
    if (std::gcd(d, c) != 1)
        throw std::invalid_argument("cuspdim: dedekind_sum requires gcd(d, c) = 1, got (" + std::to_string(d) + ", " +
                                    std::to_string(c) + ")");
    if (c == 1) return Rational(0);
    // every term has denominator 4c^2; accumulate the integer numerators
    const std::int64_t dr = detail::mod_floor(d, c);
    detail::i128 acc = 0;
    std::int64_t r = 0;
    for (std::int64_t m = 1; m < c; ++m) {
        r += dr;
        if (r >= c) r -= c;
        acc += detail::i128(2 * m - c) * (2 * r - c);
    }
    return Rational(detail::narrow(acc), 4 * c * c);
}

}  // namespace cuspdim
