#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "qvp/gamma.hpp"

using namespace qvp;
using namespace qvp::testing;

namespace {
RationalFunction rf(const Polynomial& n, const Polynomial& d) { return ratfun_normalize(n, d); }
}  // namespace

TEST_CASE("gamma_factor") {
    LinearForm u = lf_h1();
    CHECK(gamma_factor(u, 0) == RationalFunction(Rat(1)));
    CHECK(gamma_factor(u, 2) == RationalFunction((P(u) - P(lf_hbar(2))) * (P(u) - P(lf_hbar(4)))));
    CHECK(gamma_factor(u, -2) == rf(Polynomial::one(), P(u) * (P(u) + P(lf_hbar(2)))));
    // a zero value is fine: callers manage zero weights
    CHECK(gamma_factor(lf_hbar(2), 1).is_zero());
}

TEST_CASE("gamma_factor cocycle identity") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (int trial = 0; trial < 8; ++trial) {
        LinearForm u = lf_h1(coeff(rng)) + lf_h2(coeff(rng)) + lf_hbar(coeff(rng)) + LinearForm(Rat(coeff(rng)));
        if (u.is_zero()) u = lf_h1();
        for (int d = -4; d <= 4; ++d) {
            for (int e = -4; e <= 4; ++e) {
                LinearForm shifted = u - lf_hbar(2 * d);
                RationalFunction lhs = gamma_factor(u, d) * gamma_factor(shifted, e);
                CHECK(lhs == gamma_factor(u, d + e));
            }
        }
    }
}

TEST_CASE("gamma_residue") {
    CHECK(gamma_residue(0) == RationalFunction(P(lf_hbar(2))));
    CHECK(gamma_residue(1) == RationalFunction(P(lf_hbar(-2))));
    CHECK(gamma_residue(3) == RationalFunction(Rat(-1, 3) * P(lf_hbar())));
    CHECK_THROWS_AS(gamma_residue(-1), NegativeIndex);
}

TEST_CASE("gamma_take_residue single factor with power") {
    GammaExpression e;
    e.mul_gamma(LinearForm(var_s(1)), 1);
    e.mul_power("z", LinearForm(var_s(1)));  // z^{s/2hbar}
    GammaExpression r = gamma_take_residue(e, var_s(1), lf_hbar(-2));
    CHECK(r.gammas().empty());
    CHECK(r.prefactor().to_ratfun() == RationalFunction(P(lf_hbar(-2))));
    CHECK(r.powers().at("z") == lf_hbar(-2));  // z^{-2hbar/2hbar} = z^{-1}
}

TEST_CASE("gamma_take_residue substitutes the spectator factor") {
    GammaExpression e;
    e.mul_gamma(LinearForm(var_s(1)), 1);
    e.mul_gamma(lf_h1() - LinearForm(var_s(1)), 1);
    GammaExpression r = gamma_take_residue(e, var_s(1), LinearForm::zero());
    REQUIRE(r.gammas().size() == 1);
    CHECK(r.gammas().begin()->first == lf_h1());
    CHECK(r.gammas().begin()->second == 1);
    CHECK(r.prefactor().to_ratfun() == RationalFunction(P(lf_hbar(2))));
}

TEST_CASE("gamma_take_residue error paths") {
    GammaExpression e;
    e.mul_gamma(LinearForm(var_s(1)), 1);
    e.mul_gamma(LinearForm(var_s(1)) + lf_hbar(2), 1);
    CHECK_THROWS_AS(gamma_take_residue(e, var_s(1), LinearForm::zero()), HigherOrderPole);

    GammaExpression f;
    f.mul_gamma(LinearForm(var_s(1)) + lf_h1(), 1);
    CHECK_THROWS_AS(gamma_take_residue(f, var_s(1), LinearForm::zero()), NoPole);

    GammaExpression g;  // argument lands at the regular point 2hbar
    g.mul_gamma(LinearForm(var_s(1)), 1);
    CHECK_THROWS_AS(gamma_take_residue(g, var_s(1), lf_hbar(2)), NoPole);
}

TEST_CASE("gamma_reduce quasi-periodic ratios") {
    GammaExpression e;  // Gamma(u+4h)/Gamma(u) -> u(u+2h)/(2h)^2
    e.mul_gamma(lf_h1() + lf_hbar(4), 1);
    e.mul_gamma(lf_h1(), -1);
    CHECK(gamma_reduce(e) == rf(P(lf_h1()) * (P(lf_h1()) + P(lf_hbar(2))), P(lf_hbar(2)) * P(lf_hbar(2))));

    GammaExpression id;
    id.mul_gamma(lf_h1(), 1);
    id.mul_gamma(lf_h1(), -1);
    CHECK(gamma_reduce(id) == RationalFunction(Rat(1)));

    GammaExpression lone;
    lone.mul_gamma(lf_h1(), 1);
    CHECK_THROWS_AS(gamma_reduce(lone), UnmatchedGamma);
}

TEST_CASE("gamma_reduce zero class and the 0/0 convention") {
    // Gamma(-4h)/Gamma(0) = 1/2 (all cancellations before evaluation)
    GammaExpression e;
    e.mul_gamma(lf_hbar(-4), 1);
    e.mul_gamma(LinearForm::zero(), -1);
    CHECK(gamma_reduce(e) == RationalFunction(Rat(1, 2)));

    // Gamma(2h)/Gamma(0) carries the zero form upstairs
    GammaExpression z;
    z.mul_gamma(lf_hbar(2), 1);
    z.mul_gamma(LinearForm::zero(), -1);
    CHECK(gamma_reduce(z).is_zero());

    // Gamma(0)/Gamma(2h) would be a bare pole
    GammaExpression p;
    p.mul_gamma(LinearForm::zero(), 1);
    p.mul_gamma(lf_hbar(2), -1);
    CHECK_THROWS_AS(gamma_reduce(p), ZeroDenominator);
}

TEST_CASE("iterated residues are order independent") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> dpick(0, 3);
    std::uniform_int_distribution<int> cpick(0, 2);
    LinearForm cs[3] = {lf_h1(), lf_h2(), lf_h1() + lf_h2()};
    for (int trial = 0; trial < 10; ++trial) {
        int d1 = dpick(rng), d2 = dpick(rng);
        LinearForm c = cs[cpick(rng)];
        LinearForm s1(var_s(1)), s2(var_s(2));

        GammaExpression e;
        e.mul_gamma(s1, 1);
        e.mul_gamma(s2, 1);
        e.mul_gamma(s1 + s2 + c, 1);
        e.mul_gamma(c - lf_hbar(2 * (d1 + d2)), -1);
        e.mul_gamma(s1 - s2 + c, 1);
        e.mul_gamma(c - lf_hbar(2 * (d1 - d2)), -1);
        e.mul_power("z", s1 + s2);

        auto run = [&](bool order12) {
            GammaExpression r = e;
            if (order12) {
                r = gamma_take_residue(r, var_s(1), lf_hbar(-2 * d1));
                r = gamma_take_residue(r, var_s(2), lf_hbar(-2 * d2));
            } else {
                r = gamma_take_residue(r, var_s(2), lf_hbar(-2 * d2));
                r = gamma_take_residue(r, var_s(1), lf_hbar(-2 * d1));
            }
            LinearForm power = r.take_power("z");
            return std::pair{gamma_reduce(r), power};
        };
        auto [v12, p12] = run(true);
        auto [v21, p21] = run(false);
        CHECK(v12 == v21);
        CHECK(p12 == p21);
        CHECK(p12 == lf_hbar(-2 * (d1 + d2)));
    }
}
