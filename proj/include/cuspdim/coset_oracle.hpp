#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cuspdim/gamma0.hpp"

namespace cuspdim {

inline constexpr std::int64_t kDefaultOracleCutoff = 300;

/// Brute-force description of Gamma0(n)\SL2(Z) and its cusps, built only from
/// matrix products and the membership test. Used to cross-check the closed
/// formulas in gamma0.hpp.
class CosetOracle {
public:
    struct Orbit {
        CuspPoint point;          // sigma(oo) for the first coset of the orbit
        std::int64_t width = 0;   // least h with sigma T^h sigma^-1 in Gamma0(n)
        std::vector<std::size_t> cosets;
    };

    explicit CosetOracle(std::int64_t n, std::int64_t cutoff = kDefaultOracleCutoff) : level_(n) {
        detail::require_positive(n, "CosetOracle");
        if (n > cutoff)
            throw std::out_of_range("cuspdim: coset oracle refused level " + std::to_string(n) + " above cutoff " +
                                    std::to_string(cutoff));
        enumerate_cosets();
        build_orbits();
    }

    std::int64_t level() const { return level_; }
    const std::vector<UnimodularMatrix>& representatives() const { return reps_; }
    const std::vector<Orbit>& orbits() const { return orbits_; }

    /// Index of the right coset Gamma0(n) * gamma among the representatives.
    std::size_t coset_of(const UnimodularMatrix& gamma) const {
        if (auto i = find(gamma)) return *i;
        throw std::logic_error("cuspdim: coset table is incomplete");
    }

    /// Orbit containing the cusp x.
    std::size_t orbit_of(const CuspPoint& x) const {
        return coset_orbit_[coset_of(moving_infinity_to(x))];
    }

    /// A matrix sigma with sigma(oo) = x.
    static UnimodularMatrix moving_infinity_to(const CuspPoint& x) {
        if (x.is_infinity()) return UnimodularMatrix::identity();
        // (num u; den v) with num*v - u*den = 1
        auto bz = extended_gcd(x.num, x.den);
        return {x.num, -bz.y, x.den, bz.x};
    }

private:
    std::optional<std::size_t> find(const UnimodularMatrix& gamma) const {
        for (std::size_t i = 0; i < reps_.size(); ++i)
            if (is_member(gamma * reps_[i].inverse(), level_)) return i;
        return std::nullopt;
    }

    void enumerate_cosets() {
        const UnimodularMatrix gens[] = {UnimodularMatrix::S(), UnimodularMatrix::T()};
        reps_.push_back(UnimodularMatrix::identity());
        std::deque<std::size_t> queue{0};
        while (!queue.empty()) {
            const UnimodularMatrix base = reps_[queue.front()];
            queue.pop_front();
            for (const auto& g : gens) {
                UnimodularMatrix next = base * g;
                if (find(next)) continue;
                reps_.push_back(next);
                queue.push_back(reps_.size() - 1);
            }
        }
    }

    void build_orbits() {
        const std::size_t count = reps_.size();
        // right multiplication by T permutes the cosets; its cycles are the cusps
        std::vector<std::size_t> shift(count);
        for (std::size_t i = 0; i < count; ++i) shift[i] = coset_of(reps_[i] * UnimodularMatrix::T());

        coset_orbit_.assign(count, count);
        for (std::size_t start = 0; start < count; ++start) {
            if (coset_orbit_[start] != count) continue;
            Orbit orbit;
            for (std::size_t i = start; coset_orbit_[i] == count; i = shift[i]) {
                coset_orbit_[i] = orbits_.size();
                orbit.cosets.push_back(i);
            }
            const UnimodularMatrix& sigma = reps_[start];
            orbit.point = apply(sigma, CuspPoint::infinity());
            orbit.width = stabilizer_width(sigma);
            if (orbit.width != static_cast<std::int64_t>(orbit.cosets.size()))
                throw std::logic_error("cuspdim: orbit length disagrees with stabilizer width at " + orbit.point.str());
            orbits_.push_back(std::move(orbit));
        }
    }

    std::int64_t stabilizer_width(const UnimodularMatrix& sigma) const {
        const UnimodularMatrix inv = sigma.inverse();
        for (std::int64_t h = 1; h <= level_; ++h)
            if (is_member(sigma * UnimodularMatrix::T(h) * inv, level_)) return h;
        throw std::logic_error("cuspdim: no cusp width <= level found for " + apply(sigma, CuspPoint::infinity()).str());
    }

    std::int64_t level_;
    std::vector<UnimodularMatrix> reps_;
    std::vector<std::size_t> coset_orbit_;
    std::vector<Orbit> orbits_;
};

struct OracleCusp {
    CuspPoint point;
    std::int64_t width = 0;
};

inline std::vector<OracleCusp> oracle_cusps(std::int64_t n, std::int64_t cutoff = kDefaultOracleCutoff) {
    CosetOracle oracle(n, cutoff);
    std::vector<OracleCusp> out;
    for (const auto& o : oracle.orbits()) out.push_back({o.point, o.width});
    return out;
}

/// Outcome of matching formula cusp classes against oracle orbits.
struct OracleComparison {
    std::int64_t level = 0;
    std::size_t formula_count = 0;
    std::size_t oracle_count = 0;
    std::int64_t formula_index = 0;
    std::size_t oracle_index = 0;  // number of cosets found by enumeration
    bool widths_agree = false;     // as multisets
    bool bijective = false;        // each class lands in its own orbit with the same width
    bool agree() const {
        return widths_agree && bijective && formula_count == oracle_count &&
               static_cast<std::size_t>(formula_index) == oracle_index;
    }
};

inline OracleComparison compare_with_oracle(std::int64_t n, std::int64_t cutoff = kDefaultOracleCutoff) {
    CosetOracle oracle(n, cutoff);
    const auto classes = cusps(n);
    OracleComparison cmp;
    cmp.level = n;
    cmp.formula_count = classes.size();
    cmp.oracle_count = oracle.orbits().size();
    cmp.formula_index = index(n);
    cmp.oracle_index = oracle.representatives().size();

    std::vector<std::int64_t> fw, ow;
    for (const auto& c : classes) fw.push_back(c.width);
    for (const auto& o : oracle.orbits()) ow.push_back(o.width);
    std::sort(fw.begin(), fw.end());
    std::sort(ow.begin(), ow.end());
    cmp.widths_agree = fw == ow;

    std::vector<bool> hit(oracle.orbits().size(), false);
    cmp.bijective = classes.size() == oracle.orbits().size();
    for (const auto& c : classes) {
        const std::size_t k = oracle.orbit_of(c.representative);
        if (hit[k] || oracle.orbits()[k].width != c.width) cmp.bijective = false;
        hit[k] = true;
    }
    return cmp;
}

}  // namespace cuspdim
