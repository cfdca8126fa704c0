#pragma once

#include <random>

#include "qvp/linform.hpp"
#include "qvp/poly.hpp"
#include "qvp/ratfun.hpp"

namespace qvp::testing {

inline LinearForm lf_hbar(long c = 1) { return LinearForm(hbar(), Rat(c)); }
inline LinearForm lf_h1(long c = 1) { return LinearForm(var_h1(), Rat(c)); }
inline LinearForm lf_h2(long c = 1) { return LinearForm(var_h2(), Rat(c)); }

inline Polynomial P(const LinearForm& f) { return Polynomial(f); }
inline Polynomial P(long c) { return Polynomial(Rat(c)); }

// Small random polynomial over {hbar, h1, h2} with degree <= 2.
inline Polynomial random_poly(std::mt19937& rng, bool nonzero = false) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> pick(0, 2);
    Var vars[3] = {hbar(), var_h1(), var_h2()};
    Polynomial p;
    for (int t = 0; t < 4; ++t) {
        Monomial m;
        int v1 = pick(rng), v2 = pick(rng);
        if (v1 > v2) std::swap(v1, v2);
        if (v1 == v2) {
            if (pick(rng) != 0) m.push_back({vars[v1], 2});
        } else {
            m.push_back({vars[v1], 1});
            m.push_back({vars[v2], 1});
        }
        p.add_term(m, Rat(coeff(rng)));
    }
    if (nonzero && p.is_zero()) p += Polynomial(Rat(1));
    return p;
}

inline RationalFunction random_ratfun(std::mt19937& rng) {
    return RationalFunction::normalized(random_poly(rng), random_poly(rng, true));
}

}  // namespace qvp::testing
