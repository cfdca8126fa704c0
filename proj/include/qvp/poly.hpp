#pragma once

#include <algorithm>
#include <complex>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "qvp/linform.hpp"
#include "qvp/rational.hpp"
#include "qvp/var.hpp"

namespace qvp {

// Sparse exponent vector, sorted by variable; exponents are > 0.
using Monomial = std::vector<std::pair<Var, int>>;

inline int total_degree(const Monomial& m) {
    int d = 0;
    for (const auto& [v, e] : m) d += e;
    return d;
}

// Graded-lexicographic order in the session variable order. Among equal total
// degrees the monomial with the higher exponent on the earliest differing
// variable is the larger one.
struct GradedLexLess {
    bool operator()(const Monomial& x, const Monomial& y) const {
        int dx = total_degree(x), dy = total_degree(y);
        if (dx != dy) return dx < dy;
        auto ix = x.begin();
        auto iy = y.begin();
        while (ix != x.end() && iy != y.end()) {
            if (ix->first != iy->first) return iy->first < ix->first;
            if (ix->second != iy->second) return ix->second < iy->second;
            ++ix, ++iy;
        }
        return ix == x.end() && iy != y.end();
    }
};

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            out.push_back(*ia++);
        } else if (ia == a.end() || ib->first < ia->first) {
            out.push_back(*ib++);
        } else {
            out.emplace_back(ia->first, ia->second + ib->second);
            ++ia, ++ib;
        }
    }
    return out;
}

// a / b, or nothing when some exponent would go negative.
inline std::optional<Monomial> mono_div(const Monomial& a, const Monomial& b) {
    Monomial out;
    auto ia = a.begin();
    for (const auto& [v, e] : b) {
        while (ia != a.end() && ia->first < v) out.push_back(*ia++);
        if (ia == a.end() || ia->first != v || ia->second < e) return std::nullopt;
        if (ia->second > e) out.emplace_back(v, ia->second - e);
        ++ia;
    }
    out.insert(out.end(), ia, a.end());
    return out;
}

class Polynomial {
  public:
    using Terms = std::map<Monomial, Rat, GradedLexLess>;

    Polynomial() = default;
    explicit Polynomial(Rat constant) {
        if (constant != 0) terms_[{}] = std::move(constant);
    }
    explicit Polynomial(Var v, int exp = 1) {
        if (exp != 0)
            terms_[{{v, exp}}] = 1;
        else
            terms_[{}] = 1;
    }
    explicit Polynomial(const LinearForm& f) {
        if (f.constant() != 0) terms_[{}] = f.constant();
        for (const auto& [v, c] : f.coeffs()) terms_[{{v, 1}}] = c;
    }

    static Polynomial one() { return Polynomial(Rat(1)); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }
    Rat constant_value() const {
        auto it = terms_.find({});
        return it == terms_.end() ? Rat(0) : it->second;
    }

    int total_deg() const {
        return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first);
    }

    const Monomial& leading_monomial() const { return terms_.rbegin()->first; }
    const Rat& leading_coeff() const { return terms_.rbegin()->second; }

    void add_term(const Monomial& m, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(const Polynomial& a) {
        Polynomial out;
        for (const auto& [m, c] : a.terms_) out.terms_[m] = -c;
        return out;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_term(mono_mul(ma, mb), ca * cb);
        return out;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial& operator*=(const Rat& k) {
        if (k == 0) return *this = Polynomial{};
        for (auto& [m, c] : terms_) c *= k;
        return *this;
    }
    friend Polynomial operator*(Polynomial a, const Rat& k) { return a *= k; }
    friend Polynomial operator*(const Rat& k, Polynomial a) { return a *= k; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    Polynomial pow(int e) const {
        Polynomial out = one();
        for (int i = 0; i < e; ++i) out *= *this;
        return out;
    }

    bool depends_on(Var v) const {
        for (const auto& [m, c] : terms_)
            for (const auto& [mv, me] : m)
                if (mv == v) return true;
        return false;
    }

    std::vector<Var> variables() const {
        std::vector<Var> out;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m)
                if (!std::binary_search(out.begin(), out.end(), v)) {
                    out.insert(std::upper_bound(out.begin(), out.end(), v), v);
                }
        return out;
    }

    int degree_in(Var v) const {
        int d = 0;
        for (const auto& [m, c] : terms_)
            for (const auto& [mv, me] : m)
                if (mv == v) d = std::max(d, me);
        return d;
    }

    // Coefficient of v^k, a polynomial in the other variables.
    Polynomial coeff_of(Var v, int k) const {
        Polynomial out;
        for (const auto& [m, c] : terms_) {
            int e = 0;
            Monomial rest;
            for (const auto& [mv, me] : m) {
                if (mv == v)
                    e = me;
                else
                    rest.push_back({mv, me});
            }
            if (e == k) out.add_term(rest, c);
        }
        return out;
    }

    Polynomial derivative(Var v) const {
        Polynomial out;
        for (const auto& [m, c] : terms_) {
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i].first != v) continue;
                Monomial d = m;
                if (d[i].second == 1)
                    d.erase(d.begin() + static_cast<long>(i));
                else
                    d[i].second -= 1;
                out.add_term(d, c * m[i].second);
            }
        }
        return out;
    }

    Polynomial subst(Var v, const LinearForm& value) const {
        Polynomial value_poly(value);
        Polynomial out;
        for (const auto& [m, c] : terms_) {
            Polynomial t(c);
            Monomial rest;
            int e = 0;
            for (const auto& [mv, me] : m) {
                if (mv == v)
                    e = me;
                else
                    rest.push_back({mv, me});
            }
            if (e > 0) t *= value_poly.pow(e);
            Polynomial rest_poly;
            rest_poly.terms_[rest] = 1;
            out += t * rest_poly;
        }
        return out;
    }

    template <typename Num>
    Num eval(const std::map<Var, Num>& values) const {
        Num acc{};
        for (const auto& [m, c] : terms_) {
            Num t = Num(c.get_d());
            for (const auto& [v, e] : m) {
                auto it = values.find(v);
                if (it == values.end()) throw Error("eval: missing value for " + name(v));
                for (int i = 0; i < e; ++i) t *= it->second;
            }
            acc += t;
        }
        return acc;
    }

    Rat eval_exact(const std::map<Var, Rat>& values) const {
        Rat acc{0};
        for (const auto& [m, c] : terms_) {
            Rat t = c;
            for (const auto& [v, e] : m) {
                auto it = values.find(v);
                if (it == values.end()) throw Error("eval: missing value for " + name(v));
                for (int i = 0; i < e; ++i) t *= it->second;
            }
            acc += t;
        }
        return acc;
    }

    bool is_homogeneous(int deg) const {
        for (const auto& [m, c] : terms_)
            if (total_degree(m) != deg) return false;
        return true;
    }

    // Canonical text form: monomials in descending graded-lex order, joined by
    // " + ", coefficients as exact rationals with the sign attached.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!first) os << " + ";
            first = false;
            const auto& [m, c] = *it;
            if (m.empty()) {
                os << to_string(c);
                continue;
            }
            if (c == -1)
                os << "-";
            else if (c != 1)
                os << to_string(c) << "*";
            bool fv = true;
            for (const auto& [v, e] : m) {
                if (!fv) os << "*";
                fv = false;
                os << name(v);
                if (e > 1) os << "^" << e;
            }
        }
        return os.str();
    }

  private:
    Terms terms_;
};

// ---------------------------------------------------------------------------
// Exact division and gcd.

// a / b when the division is exact; nothing otherwise.
inline std::optional<Polynomial> exact_divide(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) return std::nullopt;
    Polynomial rem = a;
    Polynomial quot;
    const Monomial& lb = b.leading_monomial();
    const Rat& cb = b.leading_coeff();
    while (!rem.is_zero()) {
        auto q = mono_div(rem.leading_monomial(), lb);
        if (!q) return std::nullopt;
        Rat c = rem.leading_coeff() / cb;
        Polynomial t;
        t.add_term(*q, c);
        quot += t;
        rem -= t * b;
    }
    return quot;
}

inline Int int_content(const Polynomial& p) {
    Int g = 0;
    for (const auto& [m, c] : p.terms()) {
        if (c.get_den() != 1) throw Error("int_content: non-integer coefficient");
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

// Scale to integer coefficients (returns the cleared polynomial only; gcds are
// defined up to units).
inline Polynomial clear_denominators(const Polynomial& p) {
    Int l = 1;
    for (const auto& [m, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    return p * Rat(l);
}

namespace detail {

// Pseudo-remainder of a by b in the variable x: lc(b)^(deg a - deg b + 1) * a mod b.
inline Polynomial prem(const Polynomial& a, const Polynomial& b, Var x) {
    int db = b.degree_in(x);
    Polynomial lb = b.coeff_of(x, db);
    Polynomial r = a;
    int e = a.degree_in(x) - db + 1;
    while (!r.is_zero() && r.degree_in(x) >= db) {
        int dr = r.degree_in(x);
        Polynomial lr = r.coeff_of(x, dr);
        Polynomial shift(Rat(1));
        if (dr - db > 0) shift = Polynomial(x, dr - db);
        r = lb * r - lr * shift * b;
        --e;
    }
    for (int i = 0; i < e; ++i) r = lb * r;
    return r;
}

}  // namespace detail

Polynomial gcd(const Polynomial& a, const Polynomial& b);

namespace detail {

// Integer coefficients and positive leading coefficient; integer content is
// kept (gcds here follow the Z[x..] convention, e.g. gcd(6x, 4x) = 2x).
inline Polynomial make_integer(const Polynomial& p) {
    if (p.is_zero()) return p;
    Polynomial q = clear_denominators(p);
    if (q.leading_coeff() < 0) q *= Rat(-1);
    return q;
}

// gcd of x-coefficients, i.e. the content of p viewed in (coeff ring)[x].
inline Polynomial content_in(const Polynomial& p, Var x) {
    Polynomial g;
    for (int k = 0; k <= p.degree_in(x); ++k) {
        Polynomial ck = p.coeff_of(x, k);
        if (ck.is_zero()) continue;
        g = g.is_zero() ? make_integer(ck) : gcd(g, ck);
        if (g == Polynomial::one()) break;
    }
    return g;
}

}  // namespace detail

// gcd with integer primitive-times-content normalization and positive leading
// coefficient, via the subresultant PRS.
inline Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    using detail::make_integer;
    if (a.is_zero()) return make_integer(b);
    if (b.is_zero()) return make_integer(a);
    Polynomial A = make_integer(a);
    Polynomial B = make_integer(b);
    if (A.is_constant() || B.is_constant()) {
        if (A.is_constant() && B.is_constant()) {
            Int g;
            mpz_gcd(g.get_mpz_t(), A.constant_value().get_num().get_mpz_t(),
                    B.constant_value().get_num().get_mpz_t());
            return Polynomial(Rat(g));
        }
        // gcd(constant, poly) = gcd(constant, content of poly)
        const Polynomial& c = A.is_constant() ? A : B;
        const Polynomial& p = A.is_constant() ? B : A;
        Int g = int_content(p);
        Int cc = c.constant_value().get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), cc.get_mpz_t());
        return Polynomial(Rat(g));
    }

    // main variable: the largest variable present in either
    Var x = std::max(A.variables().back(), B.variables().back());
    if (!A.depends_on(x) || !B.depends_on(x)) {
        const Polynomial& free = A.depends_on(x) ? B : A;
        const Polynomial& dep = A.depends_on(x) ? A : B;
        return gcd(free, detail::content_in(dep, x));
    }

    Polynomial contA = detail::content_in(A, x);
    Polynomial contB = detail::content_in(B, x);
    Polynomial F = *exact_divide(A, contA);
    Polynomial G = *exact_divide(B, contB);
    Polynomial cont_gcd = gcd(contA, contB);

    if (F.degree_in(x) < G.degree_in(x)) std::swap(F, G);
    Polynomial g(Rat(1)), h(Rat(1));
    while (true) {
        int delta = F.degree_in(x) - G.degree_in(x);
        Polynomial R = detail::prem(F, G, x);
        if (R.is_zero()) break;
        if (R.degree_in(x) == 0) {
            // coprime primitive parts
            return cont_gcd;
        }
        F = G;
        Polynomial divisor = g;
        for (int i = 0; i < delta; ++i) divisor *= h;
        G = *exact_divide(R, divisor);
        g = F.coeff_of(x, F.degree_in(x));
        if (delta > 0) {
            Polynomial gd = g;
            for (int i = 1; i < delta; ++i) gd *= g;
            Polynomial hd(Rat(1));
            for (int i = 1; i < delta; ++i) hd *= h;
            h = *exact_divide(gd, hd);
        }
    }
    Polynomial pp = *exact_divide(G, detail::content_in(G, x));
    return make_integer(cont_gcd * pp);
}

}  // namespace qvp
