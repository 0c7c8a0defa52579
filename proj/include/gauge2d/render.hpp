#pragma once

#include "gauge2d/cartan.hpp"
#include "gauge2d/ore.hpp"
#include "gauge2d/system.hpp"

#include <string>

namespace gauge2d {

// Canonical text for coefficients and operators.  Everything rendered here
// re-parses under the expression grammar to an equal value: jets as
// d^p(dbar^q(name)) applications, fractions as (num)/(den), operators as
// coefficient-times-monomial terms in descending derivative order.
std::string render(const Var& v, const CartanSystem& sys);
std::string render(const Poly& p, const CartanSystem& sys);
std::string render(const FieldElem& f, const CartanSystem& sys);
std::string render(const OreOp& op);

// One-line-per-violation account of a failed validation, empty when ok.
std::string describe(const ValidationReport& report, const CartanSystem& sys);

} // namespace gauge2d
