#pragma once

#include "gauge2d/derivation.hpp"

#include <map>

namespace gauge2d {

// Differential operator in the noncommutative ring generated over the
// on-shell coefficient field by the two total derivatives.  Terms are kept in
// normal order, coefficients to the left of the derivative powers:
//
//   A = sum_{p,q} c_{pq} D^p Dbar^q,   D = d, Dbar = dbar.
//
// Multiplication commutes derivatives past coefficients with
//
//   Dbar f = f Dbar + dbar(f),   D f = f D + d(f),   D Dbar = Dbar D,
//
// the last relation holding because the system's compatibility condition
// makes the two total derivatives commute on shell.  Operators with no
// D-powers ("spatial" operators) form a left and right Euclidean subring.
class OreOp {
public:
    OreOp() = default; // zero with no ambient system

    static OreOp zero(SystemPtr sys);
    static OreOp coeff(FieldElem c, SystemPtr sys);
    static OreOp identity(SystemPtr sys) { return coeff(FieldElem::one(), sys); }
    static OreOp d(SystemPtr sys, int p = 1) { return monomial(FieldElem::one(), p, 0, sys); }
    static OreOp dbar(SystemPtr sys, int q = 1) { return monomial(FieldElem::one(), 0, q, sys); }
    static OreOp monomial(FieldElem c, int p, int q, SystemPtr sys);

    bool is_zero() const { return terms_.empty(); }
    // True when no term carries a D-power.
    bool is_spatial() const;
    // Max D-power and max Dbar-power; -1 on the zero operator.
    int degree() const;
    int order() const;

    const std::map<std::pair<int, int>, FieldElem>& terms() const { return terms_; }
    FieldElem coefficient(int p, int q) const;
    std::size_t coefficient_term_count() const;
    SystemPtr system() const { return sys_; }

    OreOp operator-() const;
    OreOp operator+(const OreOp& other) const;
    OreOp operator-(const OreOp& other) const;
    OreOp operator*(const OreOp& other) const;
    OreOp scaled(const FieldElem& c) const; // left multiplication by a coefficient
    bool operator==(const OreOp& other) const;
    bool operator!=(const OreOp& other) const { return !(*this == other); }

    // Action on a field element.
    FieldElem apply(const FieldElem& a) const;

    // Formal transpose: (c D^p Dbar^q)* = (-1)^(p+q) D^p Dbar^q c, reordered
    // to normal form.  An anti-automorphism and an involution.
    OreOp transpose() const;

    // Coefficient-wise time derivative, sum of d(c_pq) D^p Dbar^q.
    OreOp dtime_coeffs() const;

    // Regroup by D-power; every value in the map is spatial.
    std::map<int, OreOp> by_degree() const;

private:
    void insert_term(int p, int q, const FieldElem& c);

    SystemPtr sys_;
    std::map<std::pair<int, int>, FieldElem> terms_; // (p, q) -> nonzero coefficient
};

struct OreDivision {
    OreOp quotient;
    OreOp remainder;
};

// Euclidean division among spatial operators: a = q b + r with
// order(r) < order(b).  Throws DivisionByZero on zero divisor and
// std::invalid_argument when an operand carries a D-power.
OreDivision divide_right(const OreOp& a, const OreOp& b);
// Same with the quotient on the right: a = b q + r.
OreDivision divide_left(const OreOp& a, const OreOp& b);

} // namespace gauge2d
