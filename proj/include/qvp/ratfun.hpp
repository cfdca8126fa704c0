#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qvp/error.hpp"
#include "qvp/poly.hpp"

namespace qvp {

// Canonical form: numerator and denominator coprime, denominator with integer
// coefficients, content 1 and positive leading coefficient. Zero is 0/1.
class RationalFunction {
  public:
    RationalFunction() : den_(Polynomial::one()) {}
    explicit RationalFunction(Rat constant) : num_(Polynomial(std::move(constant))), den_(Polynomial::one()) {}
    explicit RationalFunction(Polynomial p) : num_(std::move(p)), den_(Polynomial::one()) {}

    // Full normalizer: gcd reduction plus canonical scaling.
    static RationalFunction normalized(Polynomial n, Polynomial d) {
        if (d.is_zero()) throw ZeroDenominator();
        if (n.is_zero()) return {};
        Polynomial g = gcd(n, d);
        if (!g.is_constant() || g.constant_value() != 1) {
            n = *exact_divide(n, g);
            d = *exact_divide(d, g);
        }
        return scaled(std::move(n), std::move(d));
    }

    // Trusted path: caller guarantees n and d are coprime.
    static RationalFunction from_coprime(Polynomial n, Polynomial d) {
        if (d.is_zero()) throw ZeroDenominator();
        if (n.is_zero()) return {};
        return scaled(std::move(n), std::move(d));
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return normalized(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return normalized(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return normalized(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw ZeroDenominator();
        return normalized(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
    friend RationalFunction operator-(const RationalFunction& a) {
        RationalFunction out = a;
        out.num_ = -out.num_;
        return out;
    }

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

    // Substitution by an invertible linear change of variables (keeps the pair
    // coprime, so no gcd pass is needed).
    RationalFunction subst_linear(const std::map<Var, LinearForm>& repl) const {
        Polynomial n = num_, d = den_;
        // two-phase rename through fresh slots is unnecessary: substitute on
        // copies of the originals
        Polynomial n2, d2;
        n2 = substitute_all(num_, repl);
        d2 = substitute_all(den_, repl);
        return from_coprime(std::move(n2), std::move(d2));
    }

    template <typename Num>
    Num eval(const std::map<Var, Num>& values) const {
        return num_.eval(values) / den_.eval(values);
    }
    Rat eval_exact(const std::map<Var, Rat>& values) const {
        Rat d = den_.eval_exact(values);
        if (d == 0) throw ZeroDenominator();
        return num_.eval_exact(values) / d;
    }

    std::string str() const { return num_.str() + " / " + den_.str(); }

  private:
    static Polynomial substitute_all(const Polynomial& p, const std::map<Var, LinearForm>& repl) {
        // simultaneous substitution
        Polynomial out;
        for (const auto& [m, c] : p.terms()) {
            Polynomial t(c);
            for (const auto& [v, e] : m) {
                auto it = repl.find(v);
                Polynomial base = it == repl.end() ? Polynomial(v) : Polynomial(it->second);
                t *= base.pow(e);
            }
            out += t;
        }
        return out;
    }

    static RationalFunction scaled(Polynomial n, Polynomial d) {
        // scale so that d has integer coefficients, content 1, positive lead
        Int l = 1;
        for (const auto& [m, c] : d.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
        Polynomial dc = d * Rat(l);
        Int cont = int_content(dc);
        Rat k = Rat(l) / Rat(cont);
        if (dc.leading_coeff() < 0) k = -k;
        RationalFunction out;
        out.num_ = n * k;
        out.den_ = d * k;
        return out;
    }

    Polynomial num_;
    Polynomial den_;
};

inline RationalFunction ratfun_normalize(const Polynomial& n, const Polynomial& d) {
    return RationalFunction::normalized(n, d);
}

// ---------------------------------------------------------------------------
// Factored values: scalar * extra * prod_i f_i^{e_i} with monic linear forms
// f_i. Euler classes and reduced gamma quotients are built in this shape; it
// keeps products exactly cancelled so that conversion to the canonical
// RationalFunction never needs a general gcd.

inline std::pair<LinearForm, Rat> monic_linear(const LinearForm& f) {
    if (f.is_zero()) throw Error("monic_linear: zero form");
    Rat lead = f.coeffs().empty() ? f.constant() : f.coeffs().begin()->second;
    return {f * (Rat(1) / lead), lead};
}

class FactoredValue {
  public:
    FactoredValue() = default;
    explicit FactoredValue(Rat scalar) : scalar_(std::move(scalar)) {}

    static FactoredValue zero() { return FactoredValue(Rat(0)); }

    bool is_zero() const { return scalar_ == 0; }
    const Rat& scalar() const { return scalar_; }
    const std::map<LinearForm, int>& powers() const { return powers_; }
    const Polynomial& extra() const { return extra_; }
    bool has_extra() const { return !(extra_ == Polynomial::one()); }

    // multiply by f^e
    void mul_form(const LinearForm& f, int e) {
        if (is_zero() || e == 0) return;
        if (f.is_constant()) {
            if (f.constant() == 0) {
                if (e > 0) {
                    *this = zero();
                    return;
                }
                throw ZeroDenominator();
            }
            for (int i = 0; i < e; ++i) scalar_ *= f.constant();
            for (int i = 0; i < -e; ++i) scalar_ /= f.constant();
            return;
        }
        auto [monic, lead] = monic_linear(f);
        for (int i = 0; i < e; ++i) scalar_ *= lead;
        for (int i = 0; i < -e; ++i) scalar_ /= lead;
        auto [it, inserted] = powers_.try_emplace(monic, e);
        if (!inserted) {
            it->second += e;
            if (it->second == 0) powers_.erase(it);
        }
    }

    void mul_scalar(const Rat& k) {
        scalar_ *= k;
        if (scalar_ == 0) *this = zero();
    }

    void div_scalar(const Rat& k) {
        if (k == 0) throw ZeroDenominator();
        scalar_ /= k;
    }

    // multiply by a general polynomial (descendent insertions)
    void mul_poly(const Polynomial& p) {
        if (is_zero()) return;
        if (p.is_zero()) {
            *this = zero();
            return;
        }
        if (p.is_constant()) {
            mul_scalar(p.constant_value());
            return;
        }
        extra_ *= p;
    }

    void mul(const FactoredValue& o) {
        if (is_zero()) return;
        if (o.is_zero()) {
            *this = zero();
            return;
        }
        scalar_ *= o.scalar_;
        for (const auto& [f, e] : o.powers_) {
            auto [it, inserted] = powers_.try_emplace(f, e);
            if (!inserted) {
                it->second += e;
                if (it->second == 0) powers_.erase(it);
            }
        }
        if (o.has_extra()) extra_ *= o.extra_;
    }

    RationalFunction to_ratfun() const {
        if (is_zero()) return {};
        Polynomial num = extra_ * Rat(scalar_);
        std::vector<std::pair<LinearForm, int>> denominators;
        for (const auto& [f, e] : powers_) {
            if (e > 0) {
                Polynomial fp(f);
                for (int i = 0; i < e; ++i) num *= fp;
            } else {
                denominators.emplace_back(f, -e);
            }
        }
        Polynomial den = Polynomial::one();
        for (auto& [f, e] : denominators) {
            // the numerator extra may share linear factors with the denominator
            Polynomial fp(f);
            while (e > 0) {
                auto q = exact_divide(num, fp);
                if (!q) break;
                num = *q;
                --e;
            }
            for (int i = 0; i < e; ++i) den *= fp;
        }
        return RationalFunction::from_coprime(std::move(num), std::move(den));
    }

    // Deterministic fold of a list of factored values into one canonical
    // rational function, over the least common denominator.
    static RationalFunction sum(const std::vector<FactoredValue>& terms) {
        std::map<LinearForm, int> common;  // max denominator multiplicity per form
        for (const auto& t : terms) {
            if (t.is_zero()) continue;
            for (const auto& [f, e] : t.powers_)
                if (e < 0) {
                    int& m = common[f];
                    m = std::max(m, -e);
                }
        }
        Polynomial num;
        for (const auto& t : terms) {
            if (t.is_zero()) continue;
            Polynomial part = t.extra_ * Rat(t.scalar_);
            for (const auto& [f, need] : common) {
                auto it = t.powers_.find(f);
                int have = it == t.powers_.end() ? 0 : it->second;
                for (int i = 0; i < have + need; ++i) part *= Polynomial(f);
            }
            for (const auto& [f, e] : t.powers_) {
                if (e <= 0) continue;
                if (common.count(f)) continue;  // already handled above
                for (int i = 0; i < e; ++i) part *= Polynomial(f);
            }
            num += part;
        }
        if (num.is_zero()) return {};
        Polynomial den = Polynomial::one();
        for (auto& [f, e] : common) {
            Polynomial fp(f);
            while (e > 0) {
                auto q = exact_divide(num, fp);
                if (!q) break;
                num = *q;
                --e;
            }
            for (int i = 0; i < e; ++i) den *= fp;
        }
        return RationalFunction::from_coprime(std::move(num), std::move(den));
    }

  private:
    Rat scalar_{1};
    std::map<LinearForm, int> powers_;
    Polynomial extra_{Polynomial::one()};
};

}  // namespace qvp
