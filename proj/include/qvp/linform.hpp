#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "qvp/rational.hpp"
#include "qvp/var.hpp"

namespace qvp {

// Rational linear form c0 + sum c_v * v over the session variables.
// Zero coefficients are never stored.
class LinearForm {
  public:
    LinearForm() = default;
    explicit LinearForm(Rat constant) : constant_(std::move(constant)) {}
    LinearForm(Var v, Rat coeff = 1) {
        if (coeff != 0) coeffs_[v] = std::move(coeff);
    }

    static LinearForm zero() { return {}; }

    const Rat& constant() const { return constant_; }
    const std::map<Var, Rat>& coeffs() const { return coeffs_; }

    Rat coeff(Var v) const {
        auto it = coeffs_.find(v);
        return it == coeffs_.end() ? Rat(0) : it->second;
    }

    bool is_zero() const { return constant_ == 0 && coeffs_.empty(); }
    bool is_constant() const { return coeffs_.empty(); }
    bool depends_on(Var v) const { return coeffs_.count(v) != 0; }

    LinearForm& operator+=(const LinearForm& o) {
        constant_ += o.constant_;
        for (const auto& [v, c] : o.coeffs_) add_term(v, c);
        return *this;
    }
    LinearForm& operator-=(const LinearForm& o) {
        constant_ -= o.constant_;
        for (const auto& [v, c] : o.coeffs_) add_term(v, -c);
        return *this;
    }
    LinearForm& operator*=(const Rat& k) {
        if (k == 0) return *this = LinearForm{};
        constant_ *= k;
        for (auto& [v, c] : coeffs_) c *= k;
        return *this;
    }

    friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
    friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
    friend LinearForm operator-(LinearForm a) { return a *= Rat(-1); }
    friend LinearForm operator*(LinearForm a, const Rat& k) { return a *= k; }
    friend LinearForm operator*(const Rat& k, LinearForm a) { return a *= k; }

    friend bool operator==(const LinearForm&, const LinearForm&) = default;
    friend bool operator<(const LinearForm& a, const LinearForm& b) {
        if (a.constant_ != b.constant_) return a.constant_ < b.constant_;
        return a.coeffs_ < b.coeffs_;
    }

    // Substitute v := value (value must not involve v).
    LinearForm subst(Var v, const LinearForm& value) const {
        LinearForm out = *this;
        auto it = out.coeffs_.find(v);
        if (it == out.coeffs_.end()) return out;
        Rat c = it->second;
        out.coeffs_.erase(it);
        out += value * c;
        return out;
    }

    void add_term(Var v, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = coeffs_.try_emplace(v, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [v, c] : coeffs_) {
            if (!first) os << " + ";
            first = false;
            if (c == 1)
                os << name(v);
            else if (c == -1)
                os << "-" << name(v);
            else
                os << to_string(c) << "*" << name(v);
        }
        if (constant_ != 0) {
            if (!first) os << " + ";
            os << to_string(constant_);
        }
        return os.str();
    }

  private:
    Rat constant_{0};
    std::map<Var, Rat> coeffs_;
};

// 2*k*hbar test used by the gamma layer: returns k when f == 2k*hbar with
// k an integer, nothing otherwise.
inline std::optional<long> as_even_hbar_multiple(const LinearForm& f) {
    if (f.constant() != 0) return std::nullopt;
    const auto& cs = f.coeffs();
    if (cs.empty()) return 0L;
    if (cs.size() != 1) return std::nullopt;
    const auto& [v, c] = *cs.begin();
    if (v != hbar()) return std::nullopt;
    Rat half = c / 2;
    if (half.get_den() != 1) return std::nullopt;
    if (!half.get_num().fits_slong_p()) return std::nullopt;
    return half.get_num().get_si();
}

}  // namespace qvp
