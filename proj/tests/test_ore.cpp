#include "doctest.h"

#include "gauge2d/ore.hpp"
#include "helpers.hpp"

using namespace gauge2d;
using namespace testutil;

namespace {

SystemPtr sys()
{
    static SystemPtr s = quadratic_system();
    return s;
}

OreOp C(const FieldElem& f) { return OreOp::coeff(f, sys()); }
OreOp D(int p = 1) { return OreOp::d(sys(), p); }
OreOp Dbar(int q = 1) { return OreOp::dbar(sys(), q); }

FieldElem phi() { return jet(JetKind::PhiA, 0); }
FieldElem lam() { return jet(JetKind::Lambda, 0); }
FieldElem g() { return param("g"); }

} // namespace

TEST_CASE("multiplication normal-orders coefficients to the left")
{
    // Dbar f = f Dbar + dbar(f)
    CHECK(Dbar() * C(phi()) == C(phi()) * Dbar() + C(jet(JetKind::PhiA, 0, 0, 1)));
    // D f = f D + d(f)
    CHECK(D() * C(lam()) == C(lam()) * D() + C(jet(JetKind::Lambda, 0, 1, 0)));
    // The two derivatives commute over a compatible system.
    CHECK(D() * Dbar() == Dbar() * D());
    CHECK((D() * Dbar()) * C(phi()) == D() * (Dbar() * C(phi())));
}

TEST_CASE("product of first-order spatial operators")
{
    // (Dbar + g lam)(Dbar - g lam) = Dbar^2 - g dbar(lam) - g^2 lam^2
    OreOp a = Dbar() + C(g() * lam());
    OreOp b = Dbar() - C(g() * lam());
    OreOp expect = Dbar(2) - C(g() * jet(JetKind::Lambda, 0, 0, 1)) - C(g() * g() * lam() * lam());
    CHECK(a * b == expect);
}

TEST_CASE("applying a product equals applying the factors in sequence")
{
    OreOp a = D() * C(phi()) + Dbar(2) - C(lam());
    OreOp b = Dbar() * C(g() * phi()) + D();
    FieldElem f = phi() * lam() / (jet(JetKind::Lambda, 0, 0, 1) + rat(1));
    CHECK((a * b).apply(f) == a.apply(b.apply(f)));
    CHECK((a + b).apply(f) == a.apply(f) + b.apply(f));
}

TEST_CASE("ring laws and degree bookkeeping")
{
    OreOp a = D() * C(phi()) + Dbar();
    OreOp b = Dbar() * C(lam()) - C(rat(3));
    OreOp c = D(2) + C(g());
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((b + c) * a == b * a + c * a);
    CHECK((a * b).degree() == a.degree() + b.degree());
    CHECK((a * b).order() == a.order() + b.order());
    CHECK((a - a).is_zero());
    CHECK((a * OreOp::zero(sys())).is_zero());
}

TEST_CASE("euclidean division on spatial operators")
{
    // divide_right(Dbar^2, Dbar - g lam): Q = Dbar + g lam, R = g dbar(lam) + g^2 lam^2
    OreOp b = Dbar() - C(g() * lam());
    auto [q, r] = divide_right(Dbar(2), b);
    CHECK(q == Dbar() + C(g() * lam()));
    CHECK(r == C(g() * jet(JetKind::Lambda, 0, 0, 1) + g() * g() * lam() * lam()));
    CHECK(Dbar(2) == q * b + r);

    auto [ql, rl] = divide_left(Dbar(2), b);
    CHECK(Dbar(2) == b * ql + rl);
    CHECK(rl.order() < b.order());

    OreOp big = Dbar(3) * C(phi()) + Dbar() * C(lam() + rat(1)) + C(g());
    auto [q2, r2] = divide_right(big, b);
    CHECK(big == q2 * b + r2);
    CHECK((r2.is_zero() || r2.order() < b.order()));

    CHECK_THROWS_AS(divide_right(Dbar(), OreOp::zero(sys())), DivisionByZero);
    CHECK_THROWS_AS(divide_right(D(), Dbar()), std::invalid_argument);
}

TEST_CASE("transpose flips signs and reorders")
{
    // (g lam Dbar)* = -Dbar g lam = -g lam Dbar - g dbar(lam)
    OreOp a = C(g() * lam()) * Dbar();
    OreOp expect = -(C(g() * lam()) * Dbar()) - C(g() * jet(JetKind::Lambda, 0, 0, 1));
    CHECK(a.transpose() == expect);
    // Pure coefficients are fixed points.
    CHECK(C(phi() * lam()).transpose() == C(phi() * lam()));
    // (Dbar)* = -Dbar, (D Dbar)* = D Dbar.
    CHECK(Dbar().transpose() == -Dbar());
    CHECK((D() * Dbar()).transpose() == D() * Dbar());
}

TEST_CASE("transpose is an involution and an anti-homomorphism")
{
    OreOp a = D() * C(phi()) + Dbar(2) * C(lam()) - C(g());
    OreOp b = Dbar() * C(phi() * phi()) + D() * Dbar() - C(rat(2));
    CHECK(a.transpose().transpose() == a);
    CHECK((a * b).transpose() == b.transpose() * a.transpose());
    CHECK((a + b).transpose() == a.transpose() + b.transpose());
}

TEST_CASE("coefficient-wise time derivative and regrouping by D-power")
{
    OreOp a = C(g() * lam()) * D() + C(phi()) * Dbar();
    OreOp dt = a.dtime_coeffs();
    CHECK(dt == C(g() * jet(JetKind::Lambda, 0, 1, 0)) * D()
                + C(sys()->z_evolution(0)) * Dbar());

    OreOp mixed = D(2) * C(phi()) + Dbar();
    auto parts = mixed.by_degree();
    OreOp rebuilt = OreOp::zero(sys());
    for (const auto& [p, spatial] : parts) {
        CHECK(spatial.is_spatial());
        rebuilt = rebuilt + spatial * D(p);
    }
    CHECK(rebuilt == mixed);
}
