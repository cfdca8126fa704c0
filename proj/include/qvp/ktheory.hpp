#pragma once

#include <optional>
#include <vector>

#include "qvp/character.hpp"
#include "qvp/linform.hpp"
#include "qvp/ratfun.hpp"

namespace qvp {

// The line bundle O(degree) on P^1 with its canonical linearization, tensored
// by q^qtwist * flavor.
struct LineData {
    int degree = 0;
    int qtwist = 0;
    Character flavor;

    LineData() = default;
    LineData(int d, int w, Character f) : degree(d), qtwist(w), flavor(std::move(f)) {}

    friend LineData operator*(const LineData& x, const LineData& y) {
        return {x.degree + y.degree, x.qtwist + y.qtwist, x.flavor * y.flavor};
    }
    LineData dual() const { return {-degree, -qtwist, flavor.inverse()}; }

    friend bool operator==(const LineData&, const LineData&) = default;
};

// First Chern classes of the torus coordinates: c1(q) = -hbar plus one linear
// form per flavor basis character. The form assigned to the potential's weight
// character must vanish (Calabi-Yau relation of F_0).
struct WeightRelation {
    std::vector<LinearForm> flavor_c1;

    LinearForm c1(const Character& ch) const {
        if (ch.flavor.size() > flavor_c1.size()) throw UnknownBasisCharacter();
        LinearForm out(hbar(), Rat(-ch.q));
        for (std::size_t i = 0; i < ch.flavor.size(); ++i) {
            if (ch.flavor[i] == 0) continue;
            out += flavor_c1[i] * Rat(ch.flavor[i]);
        }
        return out;
    }
};

inline LinearForm c1(const Character& ch, const WeightRelation& rel) { return rel.c1(ch); }

// R-charge data: the sigma_R exponent attached to each flavor basis character
// (t_i -> -sigma_i, e^{a_i} -> -alpha_i).
struct RChargeData {
    std::vector<int> sigma_exp;

    int pairing(const Character& ch) const {
        if (ch.flavor.size() > sigma_exp.size()) throw UnknownBasisCharacter();
        int out = 0;
        for (std::size_t i = 0; i < ch.flavor.size(); ++i) out += sigma_exp[i] * ch.flavor[i];
        return out;
    }
};

inline LineData line_for_weight(const Character& flavor, const RChargeData& r) {
    return {r.pairing(flavor), 0, flavor};
}

// Cohomology of O(D) q^w a on P^1 as a K-class of the torus:
//   D >= 0 : sum_{j=0..D} q^{w-D+2j} a
//   D = -1 : 0
//   D <= -2: -sum_{j=1..-D-1} q^{w-D-2j} a
inline KClass chi_p1(const LineData& line) {
    KClass out;
    if (line.degree >= 0) {
        for (int j = 0; j <= line.degree; ++j)
            out.add(line.flavor.qshift(line.qtwist - line.degree + 2 * j), +1);
    } else if (line.degree <= -2) {
        for (int j = 1; j <= -line.degree - 1; ++j)
            out.add(line.flavor.qshift(line.qtwist - line.degree - 2 * j), -1);
    }
    return out;
}

// Equivariant Euler class with the zero-weight ledger: after cancelling
// multiplicities, a residual zero-weight character with positive multiplicity
// makes the whole localization term vanish (nullopt); a negative one signals a
// non-reduced fixed point.
inline std::optional<FactoredValue> euler_factored(const KClass& k, const WeightRelation& rel,
                                                   const LinearForm& shift = {}) {
    FactoredValue out;
    for (const auto& [ch, mult] : k.terms()) {
        LinearForm u = rel.c1(ch) + shift;
        if (u.is_zero()) {
            if (mult > 0) return std::nullopt;
            throw PoleAtZeroWeight();
        }
        out.mul_form(u, mult);
    }
    return out;
}

inline std::optional<RationalFunction> euler(const KClass& k, const WeightRelation& rel,
                                             const LinearForm& shift = {}) {
    auto f = euler_factored(k, rel, shift);
    if (!f) return std::nullopt;
    return f->to_ratfun();
}

}  // namespace qvp
