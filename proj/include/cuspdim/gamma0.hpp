#pragma once

#include <complex>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cuspdim/arith.hpp"
#include "cuspdim/rational.hpp"

namespace cuspdim {

/// Integer 2x2 matrix (a b; c d) with determinant 1.
class UnimodularMatrix {
public:
    UnimodularMatrix() = default;
    UnimodularMatrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) : a_(a), b_(b), c_(c), d_(d) {
        if (detail::i128(a) * d - detail::i128(b) * c != 1)
            throw std::invalid_argument("cuspdim: matrix (" + std::to_string(a) + " " + std::to_string(b) + "; " +
                                        std::to_string(c) + " " + std::to_string(d) + ") is not unimodular");
    }

    static UnimodularMatrix identity() { return {}; }
    static UnimodularMatrix T(std::int64_t h = 1) { return {1, h, 0, 1}; }
    static UnimodularMatrix S() { return {0, -1, 1, 0}; }
    static UnimodularMatrix minus_identity() { return {-1, 0, 0, -1}; }

    std::int64_t a() const { return a_; }
    std::int64_t b() const { return b_; }
    std::int64_t c() const { return c_; }
    std::int64_t d() const { return d_; }

    UnimodularMatrix inverse() const { return {d_, -b_, -c_, a_}; }
    UnimodularMatrix operator-() const { return {-a_, -b_, -c_, -d_}; }

    friend UnimodularMatrix operator*(const UnimodularMatrix& x, const UnimodularMatrix& y) {
        using detail::i128;
        using detail::narrow;
        return {narrow(i128(x.a_) * y.a_ + i128(x.b_) * y.c_), narrow(i128(x.a_) * y.b_ + i128(x.b_) * y.d_),
                narrow(i128(x.c_) * y.a_ + i128(x.d_) * y.c_), narrow(i128(x.c_) * y.b_ + i128(x.d_) * y.d_)};
    }

    /// Moebius action on the upper half-plane.
    std::complex<double> apply(std::complex<double> tau) const {
        return (double(a_) * tau + double(b_)) / (double(c_) * tau + double(d_));
    }

    friend bool operator==(const UnimodularMatrix&, const UnimodularMatrix&) = default;

    friend std::ostream& operator<<(std::ostream& os, const UnimodularMatrix& m) {
        return os << "(" << m.a_ << "," << m.b_ << ";" << m.c_ << "," << m.d_ << ")";
    }

private:
    std::int64_t a_ = 1, b_ = 0, c_ = 0, d_ = 1;
};

/// Point of Q u {oo}: num/den in lowest terms with den >= 0; oo is 1/0.
struct CuspPoint {
    std::int64_t num = 1;
    std::int64_t den = 0;

    static CuspPoint infinity() { return {1, 0}; }
    static CuspPoint make(std::int64_t num, std::int64_t den) {
        if (num == 0 && den == 0) throw std::invalid_argument("cuspdim: 0/0 is not a cusp");
        std::int64_t g = std::gcd(num, den);
        num /= g;
        den /= g;
        if (den < 0 || (den == 0 && num < 0)) {
            num = -num;
            den = -den;
        }
        return {num, den};
    }

    bool is_infinity() const { return den == 0; }
    std::string str() const {
        if (den == 0) return "oo";
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    friend bool operator==(const CuspPoint&, const CuspPoint&) = default;
};

inline CuspPoint apply(const UnimodularMatrix& m, const CuspPoint& x) {
    using detail::i128;
    using detail::narrow;
    return CuspPoint::make(narrow(i128(m.a()) * x.num + i128(m.b()) * x.den),
                           narrow(i128(m.c()) * x.num + i128(m.d()) * x.den));
}

/// A cusp of Gamma0(level): the class of pairs (a, d) with d | level, gcd(a, d) = 1,
/// a taken modulo gcd(d, level/d).
struct CuspClass {
    std::int64_t level = 1;
    std::int64_t a = 0;
    std::int64_t d = 1;
    std::int64_t width = 1;
    CuspPoint representative{0, 1};

    friend bool operator==(const CuspClass&, const CuspClass&) = default;
};

/// Invariants of Gamma0(n) used by the genus formula and the dimension bounds.
struct GroupProfile {
    std::int64_t level = 1;
    std::int64_t index = 1;
    std::vector<CuspClass> cusps;
    std::int64_t mu2 = 0;
    std::int64_t mu3 = 0;
    std::int64_t genus = 0;
};

inline bool is_member(const UnimodularMatrix& gamma, std::int64_t n) {
    detail::require_positive(n, "is_member");
    return gamma.c() % n == 0;
}

inline std::int64_t index(const Factorization& f) {
    std::int64_t i = 1;
    for (auto [p, e] : f.factors) {
        std::int64_t pe1 = 1;
        for (int k = 1; k < e; ++k) pe1 *= p;
        i *= pe1 * p + pe1;
    }
    return i;
}

inline std::int64_t index(std::int64_t n) { return index(factorize(n)); }

inline std::int64_t cusp_count(std::int64_t n) {
    detail::require_positive(n, "cusp_count");
    std::int64_t count = 0;
    for (auto d : divisors(n)) count += euler_phi(std::gcd(d, n / d));
    return count;
}

/// Width of the cusp class with denominator d: prod_p p^{max(nu_p(n) - 2 nu_p(d), 0)}.
inline std::int64_t cusp_width(const Factorization& level, std::int64_t d) {
    std::int64_t w = 1;
    for (auto [p, e] : level.factors) {
        int vd = 0;
        for (std::int64_t t = d; t % p == 0; t /= p) ++vd;
        int excess = e - 2 * vd;
        for (int k = 0; k < excess; ++k) w *= p;
    }
    return w;
}

inline std::vector<CuspClass> cusps(std::int64_t n) {
    const Factorization f = factorize(n);
    std::vector<CuspClass> out;
    for (auto d : divisors(n)) {
        const std::int64_t g = std::gcd(d, n / d);
        const std::int64_t width = cusp_width(f, d);
        for (std::int64_t r = 0; r < g; ++r) {
            if (std::gcd(r, g) != 1) continue;
            // least a >= 0 in the residue class r mod g that is coprime to d
            std::int64_t a = r;
            while (std::gcd(a, d) != 1) a += g;
            out.push_back({n, a, d, width, CuspPoint::make(a, d)});
        }
    }
    return out;
}

inline std::int64_t mu2(const Factorization& f) {
    if (f.value % 4 == 0) return 0;
    std::int64_t m = 1;
    for (auto [p, e] : f.factors) m *= 1 + kronecker(-4, p);
    return m;
}

inline std::int64_t mu3(const Factorization& f) {
    if (f.value % 2 == 0 || f.value % 9 == 0) return 0;
    std::int64_t m = 1;
    for (auto [p, e] : f.factors) m *= 1 + kronecker(-3, p);
    return m;
}

inline std::int64_t mu2(std::int64_t n) { return mu2(factorize(n)); }
inline std::int64_t mu3(std::int64_t n) { return mu3(factorize(n)); }

/// Genus from index, elliptic points and cusp count. Throws std::logic_error
/// if the formula does not land on an integer.
inline std::int64_t genus_from(std::int64_t index, std::int64_t mu2, std::int64_t mu3, std::int64_t cusp_count) {
    Rational g = Rational(1) + Rational(index, 12) - Rational(mu2, 4) - Rational(mu3, 3) - Rational(cusp_count, 2);
    if (!g.is_integer() || g.sign() < 0)
        throw std::logic_error("cuspdim: genus formula evaluated to " + g.str());
    return g.num();
}

inline std::int64_t genus(std::int64_t n) {
    const Factorization f = factorize(n);
    return genus_from(index(f), mu2(f), mu3(f), cusp_count(n));
}

inline GroupProfile profile(std::int64_t n) {
    const Factorization f = factorize(n);
    GroupProfile p;
    p.level = n;
    p.index = index(f);
    p.cusps = cusps(n);
    p.mu2 = mu2(f);
    p.mu3 = mu3(f);
    p.genus = genus_from(p.index, p.mu2, p.mu3, static_cast<std::int64_t>(p.cusps.size()));
    return p;
}

}  // namespace cuspdim
