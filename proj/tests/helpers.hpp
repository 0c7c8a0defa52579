#pragma once

#include "gauge2d/system.hpp"

namespace testutil {

using namespace gauge2d;

inline FieldElem jet(JetKind kind, int index, int p = 0, int q = 0)
{
    return FieldElem::coordinate(make_jet(kind, index, p, q));
}

inline FieldElem param(const std::string& name) { return FieldElem::parameter(name); }

inline FieldElem rat(long num, long den = 1) { return FieldElem::constant(Rat(num, den)); }

// d phi = g/2 phi^2 - g/2 lam^2 - dbar lam, one unconstrained field, one
// lambda, one coupling.
inline SystemPtr quadratic_system()
{
    FieldElem phi = jet(JetKind::PhiA, 0);
    FieldElem lam = jet(JetKind::Lambda, 0);
    FieldElem dbar_lam = jet(JetKind::Lambda, 0, 0, 1);
    FieldElem g = param("g");
    FieldElem z = g * rat(1, 2) * phi * phi - g * rat(1, 2) * lam * lam - dbar_lam;
    return CartanSystem::create({{"phi", false}}, {"lam"}, {"g"}, {z}, {});
}

// The same system at g = 0: d phi = -dbar lam.
inline SystemPtr quadratic_system_g0()
{
    return CartanSystem::create({{"phi", false}}, {"lam"}, {},
                                {-jet(JetKind::Lambda, 0, 0, 1)}, {});
}

// d phi = lam.
inline SystemPtr linear_lambda_system()
{
    return CartanSystem::create({{"phi", false}}, {"lam"}, {}, {jet(JetKind::Lambda, 0)}, {});
}

// d phi = dbar phi: no lambdas, no gauge freedom.
inline SystemPtr gaugeless_system()
{
    return CartanSystem::create({{"phi", false}}, {}, {}, {jet(JetKind::PhiA, 0, 0, 1)}, {});
}

// Completely integrable pair: d u = 2 lam, d x = lam, dbar u = 2 dbar x.
inline SystemPtr integrable_pair_system()
{
    FieldElem lam = jet(JetKind::Lambda, 0);
    FieldElem dbar_x = jet(JetKind::PhiA, 0, 0, 1);
    return CartanSystem::create({{"u", true}, {"x", false}}, {"lam"}, {},
                                {rat(2) * lam, lam}, {rat(2) * dbar_x});
}

} // namespace testutil
