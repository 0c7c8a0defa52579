#pragma once

#include "gauge2d/system.hpp"

namespace gauge2d {

// Total derivatives on the on-shell coefficient field.  Everything the field
// equations determine is substituted on the fly:
//
//   dbar phi^J        -> Z^J
//   d    phi^i        -> Z^i
//   d (dbar^q phi^a)  -> dbar^q Z^a   (memoized per system)
//
// and the remaining jets shift their (p, q) orders.  Parameters are constant.
FieldElem jet_dbar(const JetCoord& j, const CartanSystem& sys);
FieldElem jet_dtime(const JetCoord& j, const CartanSystem& sys);

FieldElem dbar(const FieldElem& a, const CartanSystem& sys);
FieldElem dtime(const FieldElem& a, const CartanSystem& sys);

FieldElem dbar_pow(FieldElem a, int q, const CartanSystem& sys);
FieldElem dtime_pow(FieldElem a, int p, const CartanSystem& sys);

} // namespace gauge2d
