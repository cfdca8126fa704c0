#pragma once

#include <map>
#include <string>
#include <vector>

#include "qvp/linform.hpp"
#include "qvp/ratfun.hpp"

namespace qvp {

// (2h)^d * Gamma_2h(u) / Gamma_2h(u - 2d*hbar) as a rational function:
//   d >= 0 : prod_{j=1..d} (u - 2j*hbar)
//   d <  0 : 1 / prod_{j=0..-d-1} (u + 2j*hbar)
inline RationalFunction gamma_factor(const LinearForm& u, int d) {
    FactoredValue out;
    LinearForm two_hbar(hbar(), Rat(2));
    if (d >= 0) {
        for (int j = 1; j <= d; ++j) out.mul_form(u - two_hbar * Rat(j), +1);
    } else {
        for (int j = 0; j <= -d - 1; ++j) out.mul_form(u + two_hbar * Rat(j), -1);
    }
    return out.to_ratfun();
}

// Res_{u = -2d*hbar} Gamma_2h(u) = (-1)^d (2 hbar) / d!
inline RationalFunction gamma_residue(int d) {
    if (d < 0) throw NegativeIndex();
    Rat c(2, 1);
    for (int j = 1; j <= d; ++j) c /= j;
    if (d % 2 == 1) c = -c;
    Polynomial p(hbar());
    return RationalFunction(p * c);
}

namespace detail {
inline FactoredValue gamma_residue_factored(int d) {
    if (d < 0) throw NegativeIndex();
    FactoredValue out;
    out.mul_form(LinearForm(hbar(), Rat(2)), +1);
    Rat c(1);
    for (int j = 1; j <= d; ++j) c /= j;
    if (d % 2 == 1) c = -c;
    out.mul_scalar(c);
    return out;
}
}  // namespace detail

// Product of Gamma_2h factors and formal powers z^{l/2hbar}, with an exact
// rational prefactor. Two Gamma factors whose arguments differ by an element
// of 2*hbar*Z belong to the same reduction class.
class GammaExpression {
  public:
    GammaExpression() = default;

    const FactoredValue& prefactor() const { return prefactor_; }
    const std::map<LinearForm, int>& gammas() const { return gammas_; }
    const std::map<std::string, LinearForm>& powers() const { return powers_; }
    bool is_zero() const { return prefactor_.is_zero(); }

    void mul_gamma(const LinearForm& arg, int exp) {
        if (exp == 0) return;
        auto [it, inserted] = gammas_.try_emplace(arg, exp);
        if (!inserted) {
            it->second += exp;
            if (it->second == 0) gammas_.erase(it);
        }
    }
    void mul_power(const std::string& base, const LinearForm& exp_numerator) {
        auto [it, inserted] = powers_.try_emplace(base, exp_numerator);
        if (!inserted) it->second += exp_numerator;
    }
    // remove and return the exponent numerator of a power factor
    LinearForm take_power(const std::string& base) {
        auto it = powers_.find(base);
        if (it == powers_.end()) return {};
        LinearForm out = it->second;
        powers_.erase(it);
        return out;
    }
    void mul_scalar(const Rat& k) { prefactor_.mul_scalar(k); }
    void div_scalar(const Rat& k) { prefactor_.div_scalar(k); }
    void mul_form(const LinearForm& f, int e) { prefactor_.mul_form(f, e); }
    void mul_value(const FactoredValue& v) { prefactor_.mul(v); }

    // canonical representative of the reduction class of u: shift the hbar
    // coefficient into [0, 2)
    static LinearForm class_key(const LinearForm& u) {
        Rat c = u.coeff(hbar());
        Rat half = c / 2;
        Int k;
        mpz_fdiv_q(k.get_mpz_t(), half.get_num().get_mpz_t(), half.get_den().get_mpz_t());
        LinearForm out = u;
        out.add_term(hbar(), Rat(-2) * Rat(k));
        return out;
    }

  private:
    FactoredValue prefactor_;
    std::map<LinearForm, int> gammas_;
    std::map<std::string, LinearForm> powers_;
};

namespace detail {

// Shift index of u relative to the class key: u = key + 2*k*hbar.
inline long hbar_shift(const LinearForm& u, const LinearForm& key) {
    auto k = as_even_hbar_multiple(u - key);
    if (!k) throw Error("hbar_shift: forms not in one reduction class");
    return *k;
}

}  // namespace detail

// Class-wise quasi-periodic reduction. Every reduction class must have
// exponent sum zero; each ratio Gamma(x+2k*hbar)/Gamma(x) unfolds into
// prod_{j=0..k-1} (x + 2j*hbar)/(2 hbar), with all cancellations inside a
// class performed before any factor is evaluated (the 0/0 convention).
inline FactoredValue gamma_reduce_factored(const GammaExpression& e) {
    if (e.is_zero()) return FactoredValue::zero();
    for (const auto& [base, exp] : e.powers())
        if (!exp.is_constant() || exp.constant() != 0)
            throw Error("gamma_reduce: unresolved power factor");

    // group by reduction class
    std::map<LinearForm, std::vector<std::pair<long, int>>> classes;  // key -> (shift, exp)
    for (const auto& [arg, exp] : e.gammas()) {
        LinearForm key = GammaExpression::class_key(arg);
        classes[key].emplace_back(detail::hbar_shift(arg, key), exp);
    }

    FactoredValue out = e.prefactor();
    LinearForm two_hbar(hbar(), Rat(2));
    for (const auto& [key, members] : classes) {
        long exp_sum = 0;
        long kmin = members.front().first;
        for (const auto& [k, exp] : members) {
            exp_sum += exp;
            kmin = std::min(kmin, k);
        }
        if (exp_sum != 0) throw UnmatchedGamma("reduction class of " + key.str() + " has exponent sum " + std::to_string(exp_sum));
        LinearForm anchor = key + two_hbar * Rat(kmin);
        std::map<long, long> net;  // j -> net exponent of (anchor + 2j*hbar)
        long hbar_pow = 0;
        for (const auto& [k, exp] : members) {
            long steps = k - kmin;
            for (long j = 0; j < steps; ++j) net[j] += exp;
            hbar_pow -= steps * exp;
        }
        for (const auto& [j, n] : net) {
            if (n == 0) continue;
            LinearForm f = anchor + two_hbar * Rat(j);
            if (f.is_zero()) {
                if (n > 0) return FactoredValue::zero();
                throw ZeroDenominator();
            }
            out.mul_form(f, static_cast<int>(n));
        }
        if (hbar_pow != 0) out.mul_form(two_hbar, static_cast<int>(hbar_pow));
        if (out.is_zero()) return out;
    }
    return out;
}

inline RationalFunction gamma_reduce(const GammaExpression& e) {
    return gamma_reduce_factored(e).to_ratfun();
}

// Residue in v at v = pole_position. Exactly one Gamma factor with positive
// exponent may be singular there; it is replaced by
// gamma_residue(d) / (d arg / d v), every other factor gets v substituted, and
// power factors accumulate the substituted exponent.
inline GammaExpression gamma_take_residue(const GammaExpression& e, Var v, const LinearForm& pole_position) {
    if (pole_position.depends_on(v)) throw Error("gamma_take_residue: pole position depends on the variable");

    // locate factors whose argument lands in 2*hbar*Z at v = pole
    struct Hit {
        LinearForm arg;
        int exp;
        long k;  // value at the pole as multiple of 2*hbar
    };
    std::vector<Hit> hits;
    for (const auto& [arg, exp] : e.gammas()) {
        if (!arg.depends_on(v)) continue;
        auto k = as_even_hbar_multiple(arg.subst(v, pole_position));
        if (k) hits.push_back({arg, exp, *k});
    }
    if (hits.empty()) throw NoPole();
    if (hits.size() > 1) throw HigherOrderPole("several gamma factors meet the pole class at " + pole_position.str());
    const Hit& hit = hits.front();
    if (hit.exp != 1) {
        if (hit.exp > 1) throw HigherOrderPole("gamma factor has exponent " + std::to_string(hit.exp));
        throw NoPole("the only class member at the pole is a reciprocal factor");
    }
    if (hit.k > 0) throw NoPole("gamma argument lands at a regular point");

    GammaExpression out;
    out.mul_value(e.prefactor());
    out.mul_value(detail::gamma_residue_factored(static_cast<int>(-hit.k)));
    out.div_scalar(hit.arg.coeff(v));
    for (const auto& [arg, exp] : e.gammas()) {
        if (arg == hit.arg) continue;
        out.mul_gamma(arg.subst(v, pole_position), exp);
    }
    for (const auto& [base, exp] : e.powers()) out.mul_power(base, exp.subst(v, pole_position));
    return out;
}

}  // namespace qvp
