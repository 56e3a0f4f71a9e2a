#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cuspdim/gamma0.hpp"
#include "cuspdim/qseries.hpp"
#include "cuspdim/rational.hpp"

namespace cuspdim {

// Dimension bounds and certificates for the space of weight 3/2 cusp forms on
// Gamma0(n) with multiplier eps^3. Division by eta^3 identifies that space with
// the meromorphic functions f on X0(n) with (f) + D >= 0, where D puts
// ceil(w/8) - 1 at each cusp of width w; Riemann-Roch then gives
//   dim >= deg D + 1 - genus.

/// Integer combination of the cusps of Gamma0(level).
struct CuspDivisor {
    std::int64_t level = 1;
    std::vector<std::pair<CuspClass, std::int64_t>> coefficients;

    std::int64_t degree() const {
        std::int64_t s = 0;
        for (const auto& [cusp, m] : coefficients) s += m;
        return s;
    }

    /// Cusps carrying a nonzero coefficient.
    std::vector<std::pair<CuspClass, std::int64_t>> support() const {
        std::vector<std::pair<CuspClass, std::int64_t>> out;
        for (const auto& entry : coefficients)
            if (entry.second != 0) out.push_back(entry);
        return out;
    }
};

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

inline CuspDivisor divisor_D(const GroupProfile& g) {
    CuspDivisor D;
    D.level = g.level;
    for (const auto& c : g.cusps) D.coefficients.emplace_back(c, ceil_div(c.width, 8) - 1);
    return D;
}

inline CuspDivisor divisor_D(std::int64_t n) { return divisor_D(profile(n)); }

namespace detail {

inline Rational ceil_width_sum(const GroupProfile& g) {
    std::int64_t s = 0;
    for (const auto& c : g.cusps) s += ceil_div(c.width, 8);
    return Rational(s);
}

}  // namespace detail

/// sum ceil(w/8) - i/12 - c/2 + mu2/4 + mu3/3
inline Rational bound_strong(const GroupProfile& g) {
    return detail::ceil_width_sum(g) - Rational(g.index, 12) - Rational(static_cast<std::int64_t>(g.cusps.size()), 2) +
           Rational(g.mu2, 4) + Rational(g.mu3, 3);
}

/// Strong bound without the elliptic terms.
inline Rational bound_weak(const GroupProfile& g) {
    return detail::ceil_width_sum(g) - Rational(g.index, 12) - Rational(static_cast<std::int64_t>(g.cusps.size()), 2);
}

/// i/24 - c/2, using sum ceil(w/8) >= sum w / 8 = i/8.
inline Rational bound_crude(const GroupProfile& g) {
    return Rational(g.index, 24) - Rational(static_cast<std::int64_t>(g.cusps.size()), 2);
}

inline Rational bound_strong(std::int64_t n) { return bound_strong(profile(n)); }
inline Rational bound_weak(std::int64_t n) { return bound_weak(profile(n)); }
inline Rational bound_crude(std::int64_t n) { return bound_crude(profile(n)); }

enum class Verdict { DimOne, DimAtLeastTwo, Undecided };

enum class Rule {
    StrongBound,          // R1: strong bound > 1
    DivisorClosure,       // R2: a proper divisor already has dim >= 2
    ZeroDivisor,          // R3: D = 0, only constants
    SinglePole,           // R4: D = x and genus >= 1
    Level23Differential,  // R5: D = 2x, genus 2, eta(tau)^2 eta(23 tau)^2 differential
    None,
};

inline std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::DimOne: return "DimOne";
        case Verdict::DimAtLeastTwo: return "DimAtLeastTwo";
        case Verdict::Undecided: return "Undecided";
    }
    return "?";
}

inline std::string_view to_string(Rule r) {
    switch (r) {
        case Rule::StrongBound: return "R1";
        case Rule::DivisorClosure: return "R2";
        case Rule::ZeroDivisor: return "R3";
        case Rule::SinglePole: return "R4";
        case Rule::Level23Differential: return "R5";
        case Rule::None: return "none";
    }
    return "?";
}

inline std::string_view describe(Rule r) {
    switch (r) {
        case Rule::StrongBound: return "Riemann-Roch strong bound exceeds 1";
        case Rule::DivisorClosure: return "contains the space of a proper divisor level of dimension >= 2";
        case Rule::ZeroDivisor: return "D = 0: only constant functions";
        case Rule::SinglePole: return "D is a single cusp on a curve of positive genus";
        case Rule::Level23Differential: return "D = 2x on a genus 2 curve; the eta(tau)^2 eta(23 tau)^2 differential is not in Omega(D)";
        case Rule::None: return "no rule applies";
    }
    return "?";
}

/// Proof object for the dimension of S_{eps^3, 3/2}(n).
struct Certificate {
    std::int64_t level = 1;
    Verdict verdict = Verdict::Undecided;
    Rule rule = Rule::None;

    // data every certificate carries
    std::int64_t index = 1;
    std::int64_t cusp_count = 1;
    std::int64_t mu2 = 0;
    std::int64_t mu3 = 0;
    std::int64_t genus = 0;
    std::int64_t degree_D = 0;
    std::int64_t support_size = 0;  // cusps with nonzero coefficient in D
    Rational bound;                 // bound_strong(n) = deg D + 1 - genus

    // rule-dependent witnesses
    std::optional<std::int64_t> witness_divisor;       // R2
    std::optional<CuspClass> pole_cusp;                // R4, R5
    std::optional<Rational> form_order_at_pole;        // R5, order of the weight 2 form at the pole
    std::optional<Rational> differential_order_at_pole;  // R5, form order - 1
};

/// Memoizing rule engine. Rules are tried in the order R1..R5.
class Classifier {
public:
    const Certificate& classify(std::int64_t n) {
        detail::require_positive(n, "classify");
        if (auto it = memo_.find(n); it != memo_.end()) return it->second;
        Certificate cert = decide(n);
        return memo_.emplace(n, std::move(cert)).first->second;
    }

private:
    Certificate decide(std::int64_t n) {
        const GroupProfile g = profile(n);
        const CuspDivisor D = divisor_D(g);
        const auto support = D.support();

        Certificate cert;
        cert.level = n;
        cert.index = g.index;
        cert.cusp_count = static_cast<std::int64_t>(g.cusps.size());
        cert.mu2 = g.mu2;
        cert.mu3 = g.mu3;
        cert.genus = g.genus;
        cert.degree_D = D.degree();
        cert.support_size = static_cast<std::int64_t>(support.size());
        cert.bound = bound_strong(g);

        if (cert.bound > Rational(1)) return settle(cert, Verdict::DimAtLeastTwo, Rule::StrongBound);

        for (auto m : divisors(n)) {
            if (m == n) break;
            if (classify(m).verdict == Verdict::DimAtLeastTwo) {
                cert.witness_divisor = m;
                return settle(cert, Verdict::DimAtLeastTwo, Rule::DivisorClosure);
            }
        }

        if (cert.degree_D == 0) return settle(cert, Verdict::DimOne, Rule::ZeroDivisor);

        if (cert.degree_D == 1 && support.size() == 1 && cert.genus >= 1) {
            cert.pole_cusp = support.front().first;
            return settle(cert, Verdict::DimOne, Rule::SinglePole);
        }

        if (level23_pattern(g, support, cert)) return settle(cert, Verdict::DimOne, Rule::Level23Differential);

        return settle(cert, Verdict::Undecided, Rule::None);
    }

    // D = 2x at one cusp on a genus 2 curve. With D' = x, K(D') = C forces
    // dim Omega(D') = 1, so Omega(D') is spanned by any nonzero holomorphic
    // differential vanishing at x. eta(tau)^2 eta(23 tau)^2 dtau is one when its
    // order at x is >= 1; it spans, and Omega(D) = 0 iff that order is < 2.
    static bool level23_pattern(const GroupProfile& g, const std::vector<std::pair<CuspClass, std::int64_t>>& support,
                                Certificate& cert) {
        if (cert.genus != 2 || cert.degree_D != 2 || support.size() != 1 || g.level % 23 != 0) return false;
        const EtaQuotient form(g.level, {{1, 2}, {23, 2}});
        const CuspClass& x = support.front().first;
        for (const auto& cusp : g.cusps) {
            const Rational ord = eta_quotient_cusp_order(form, cusp);
            // holomorphic differential: form order - 1 >= 0 everywhere
            if (!ord.is_integer() || ord < Rational(1)) return false;
        }
        const Rational form_order = eta_quotient_cusp_order(form, x);
        const Rational diff_order = form_order - Rational(1);
        cert.pole_cusp = x;
        cert.form_order_at_pole = form_order;
        cert.differential_order_at_pole = diff_order;
        return diff_order >= Rational(1) && diff_order < Rational(2);
    }

    static Certificate settle(Certificate cert, Verdict v, Rule r) {
        cert.verdict = v;
        cert.rule = r;
        return cert;
    }

    std::unordered_map<std::int64_t, Certificate> memo_;
};

inline Certificate classify(std::int64_t n) {
    Classifier c;
    return c.classify(n);
}

/// The element orders of M23.
inline std::set<std::int64_t> m23_orders() { return {1, 2, 3, 4, 5, 6, 7, 8, 11, 14, 15, 23}; }

/// Primes dividing |M24|; equivalently the primes p with (p + 1) | 24.
inline std::set<std::int64_t> m24_prime_divisors() { return {2, 3, 5, 7, 11, 23}; }

struct ClassificationReport {
    std::int64_t n_max = 0;
    std::vector<Certificate> certificates;  // increasing level
    std::set<std::int64_t> dim_one;
    std::vector<std::int64_t> undecided;
    std::set<std::int64_t> expected_dim_one;  // M23 orders up to n_max

    bool matches_m23() const { return dim_one == expected_dim_one; }
    bool complete() const { return undecided.empty(); }
};

inline ClassificationReport classify_range(std::int64_t first, std::int64_t last) {
    detail::require_positive(first, "classify_range");
    if (last < first) throw std::invalid_argument("cuspdim: empty classification range");
    Classifier engine;
    ClassificationReport report;
    report.n_max = last;
    // divisors are settled before multiples, so the memo is filled bottom-up
    for (std::int64_t n = 1; n <= last; ++n) {
        const Certificate& cert = engine.classify(n);
        if (n < first) continue;
        report.certificates.push_back(cert);
        if (cert.verdict == Verdict::DimOne) report.dim_one.insert(n);
        if (cert.verdict == Verdict::Undecided) report.undecided.push_back(n);
    }
    for (auto m : m23_orders())
        if (m >= first && m <= last) report.expected_dim_one.insert(m);
    return report;
}

inline ClassificationReport classify_range(std::int64_t n_max) { return classify_range(1, n_max); }

}  // namespace cuspdim
