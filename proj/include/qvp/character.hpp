#pragma once

#include <compare>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qvp/error.hpp"

namespace qvp {

// Laurent monomial in the torus coordinates: q-exponent plus an integer
// exponent vector over the flavor basis of the active family
// (t1,t2,t3 for Hilb/conifold; t1,t2,e^{a_1}..e^{a_N} for the spin chain).
struct Character {
    int q = 0;
    std::vector<int> flavor;

    Character() = default;
    Character(int q_exp, std::vector<int> f) : q(q_exp), flavor(std::move(f)) {}

    static Character trivial(int basis_size) { return Character(0, std::vector<int>(basis_size, 0)); }
    static Character basis(int basis_size, int i, int exp = 1) {
        Character c = trivial(basis_size);
        c.flavor[static_cast<std::size_t>(i)] = exp;
        return c;
    }

    bool is_trivial() const {
        if (q != 0) return false;
        for (int e : flavor)
            if (e != 0) return false;
        return true;
    }

    friend Character operator*(const Character& x, const Character& y) {
        if (x.flavor.size() != y.flavor.size()) throw Error("character basis mismatch");
        Character out = x;
        out.q += y.q;
        for (std::size_t i = 0; i < y.flavor.size(); ++i) out.flavor[i] += y.flavor[i];
        return out;
    }
    Character inverse() const {
        Character out = *this;
        out.q = -out.q;
        for (int& e : out.flavor) e = -e;
        return out;
    }
    Character pow(int e) const {
        Character out = *this;
        out.q *= e;
        for (int& x : out.flavor) x *= e;
        return out;
    }
    Character qshift(int dq) const {
        Character out = *this;
        out.q += dq;
        return out;
    }

    friend auto operator<=>(const Character&, const Character&) = default;

    std::string str(const std::vector<std::string>& flavor_names = {}) const {
        std::ostringstream os;
        bool any = false;
        auto emit = [&](const std::string& nm, int e) {
            if (e == 0) return;
            if (any) os << "*";
            any = true;
            os << nm;
            if (e != 1) os << "^" << e;
        };
        emit("q", q);
        for (std::size_t i = 0; i < flavor.size(); ++i) {
            std::string nm = i < flavor_names.size() ? flavor_names[i] : ("t" + std::to_string(i + 1));
            emit(nm, flavor[i]);
        }
        return any ? os.str() : "1";
    }
};

// Integer-multiplicity formal sum of characters. Zero multiplicities are
// dropped eagerly.
class KClass {
  public:
    KClass() = default;

    const std::map<Character, int>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add(const Character& c, int mult) {
        if (mult == 0) return;
        auto [it, inserted] = terms_.try_emplace(c, mult);
        if (!inserted) {
            it->second += mult;
            if (it->second == 0) terms_.erase(it);
        }
    }

    KClass& operator+=(const KClass& o) {
        for (const auto& [c, m] : o.terms_) add(c, m);
        return *this;
    }
    KClass& operator-=(const KClass& o) {
        for (const auto& [c, m] : o.terms_) add(c, -m);
        return *this;
    }
    friend KClass operator+(KClass a, const KClass& b) { return a += b; }
    friend KClass operator-(KClass a, const KClass& b) { return a -= b; }
    friend KClass operator-(const KClass& a) {
        KClass out;
        for (const auto& [c, m] : a.terms_) out.terms_[c] = -m;
        return out;
    }

    friend bool operator==(const KClass&, const KClass&) = default;

    int total_multiplicity() const {
        int t = 0;
        for (const auto& [c, m] : terms_) t += m;
        return t;
    }

    // sorted "character:multiplicity" pairs, for debugging output
    std::string str(const std::vector<std::string>& flavor_names = {}) const {
        std::ostringstream os;
        bool first = true;
        for (const auto& [c, m] : terms_) {
            if (!first) os << ", ";
            first = false;
            os << c.str(flavor_names) << ":" << m;
        }
        return first ? "0" : os.str();
    }

  private:
    std::map<Character, int> terms_;
};

}  // namespace qvp
