#include "doctest.h"

#include "gauge2d/verify.hpp"
#include "helpers.hpp"

using namespace gauge2d;
using namespace testutil;

namespace {

OreOp C(const FieldElem& c, const SystemPtr& s) { return OreOp::coeff(c, s); }

Resolution resolve(const SystemPtr& s)
{
    ConstraintHistory h = stabilize(primary_constraints(s), s);
    SyzygyGenSet gen = syzygy_generating_set(h);
    return dualize(gen, second_syzygies(gen), h);
}

std::vector<SystemPtr> bundled()
{
    return {quadratic_system(), quadratic_system_g0(), linear_lambda_system(),
            integrable_pair_system(), gaugeless_system()};
}

} // namespace

TEST_CASE("linearization of the bundled systems")
{
    SystemPtr quad = quadratic_system();
    OreMatrix E = linearize(quad).E;
    REQUIRE(E.rows() == 1);
    REQUIRE(E.cols() == 2);
    CHECK(E.at(0, 0) == OreOp::d(quad) - C(param("g") * jet(JetKind::PhiA, 0), quad));
    CHECK(E.at(0, 1) == OreOp::dbar(quad) + C(param("g") * jet(JetKind::Lambda, 0), quad));

    SystemPtr lin = linear_lambda_system();
    OreMatrix El = linearize(lin).E;
    CHECK(El.at(0, 0) == OreOp::d(lin));
    CHECK(El.at(0, 1) == C(rat(-1), lin));

    SystemPtr free = gaugeless_system();
    CHECK(linearize(free).E.at(0, 0) == OreOp::d(free) - OreOp::dbar(free));

    SystemPtr pair = integrable_pair_system();
    OreMatrix Ep = linearize(pair).E;
    REQUIRE(Ep.rows() == 3);
    REQUIRE(Ep.cols() == 3);
    CHECK(Ep.at(0, 0) == OreOp::d(pair));
    CHECK(Ep.at(0, 1).is_zero());
    CHECK(Ep.at(0, 2) == C(rat(-2), pair));
    CHECK(Ep.at(1, 0).is_zero());
    CHECK(Ep.at(1, 1) == OreOp::d(pair));
    CHECK(Ep.at(1, 2) == C(rat(-1), pair));
    // constraint row: dbar on the constrained field, no lambda entry
    CHECK(Ep.at(2, 0) == OreOp::dbar(pair));
    CHECK(Ep.at(2, 1) == OreOp::dbar(pair).scaled(rat(-2)));
    CHECK(Ep.at(2, 2).is_zero());
}

TEST_CASE("gauge check passes on every computed resolution")
{
    for (const SystemPtr& s : bundled()) {
        Resolution res = resolve(s);
        CheckReport rep = check_gauge(linearize(s), res);
        CHECK(rep.ok());
        CHECK(rep.residuals.empty());
    }
}

TEST_CASE("reducibility check passes on every computed resolution")
{
    for (const SystemPtr& s : bundled()) {
        CheckReport rep = check_reducibility(resolve(s));
        CHECK(rep.ok());
    }
    Resolution quad = resolve(quadratic_system());
    CHECK(quad.r1 == 2);
    CHECK(quad.r2 == 1);
}

TEST_CASE("corrupted generators are caught with a nonzero residual")
{
    SystemPtr s = quadratic_system();
    Resolution res = resolve(s);

    Resolution bad = res;
    bad.R_gen.set(0, 0, -bad.R_gen.at(0, 0));
    CheckReport gauge = check_gauge(linearize(s), bad);
    CHECK(!gauge.ok());
    REQUIRE(!gauge.residuals.empty());
    CHECK(!gauge.residuals.front().value.is_zero());

    Resolution badz = res;
    badz.Z_gen.set(0, 0, badz.Z_gen.at(0, 0) + OreOp::identity(s));
    CheckReport red = check_reducibility(badz);
    CHECK(!red.residuals.empty());
}

TEST_CASE("a dependent relation column is caught by the kernel check")
{
    SystemPtr s = quadratic_system();
    Resolution res = resolve(s);
    // zeroing the relation column keeps R*Z = 0 but kills injectivity
    for (int i = 0; i < res.Z_gen.rows(); ++i)
        res.Z_gen.set(i, 0, OreOp::zero(s));
    CheckReport rep = check_reducibility(res);
    CHECK(rep.residuals.empty());
    CHECK(rep.kernel_rank > 0);
    CHECK(!rep.ok());
}

TEST_CASE("the rank law is re-asserted on the counts")
{
    SystemPtr s = quadratic_system();
    Resolution res = resolve(s);
    res.r2 = 0; // counts out of step with the matrices
    CHECK(!check_reducibility(res).rank_law);
}

TEST_CASE("degree of freedom counts of the bundled systems")
{
    struct Expected {
        SystemPtr sys;
        int rank_rbar;
        int dof;
    };
    std::vector<Expected> table = {{quadratic_system(), 1, 0},
                                   {quadratic_system_g0(), 1, 0},
                                   {linear_lambda_system(), 1, 0},
                                   {integrable_pair_system(), 1, 0},
                                   {gaugeless_system(), 0, 1}};
    for (const Expected& ex : table) {
        DofReport rep = dof_count(resolve(ex.sys), ex.sys);
        CHECK(rep.rank_rbar == ex.rank_rbar);
        CHECK(rep.dof == ex.dof);
        CHECK(rep.conjectural);
        CHECK(rep.consistent);
        CHECK(rep.n - rep.m - rep.rank_rbar == rep.dof);
    }
}
