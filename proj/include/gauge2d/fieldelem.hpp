#pragma once

#include "gauge2d/errors.hpp"
#include "gauge2d/poly.hpp"

#include <utility>
#include <vector>

namespace gauge2d {

// Element of the on-shell coefficient field: a quotient of polynomials in the
// reduced jet coordinates and parameters.  The denominator is stored as a
// product of primitive non-constant factors with positive leading
// coefficients.  Keeping it factored means quotient-rule derivatives only bump
// one factor exponent instead of squaring the whole denominator, and
// cancellation is trial division of the numerator against small bases (plus a
// size-capped gcd pass).  Full reduction is still not guaranteed, so equality
// always cross-multiplies.
class FieldElem {
public:
    using DenFactors = std::vector<std::pair<Poly, int>>;

    FieldElem() = default;
    FieldElem(Poly num, Poly den);

    static FieldElem zero() { return FieldElem(); }
    static FieldElem one() { return constant(1); }
    static FieldElem constant(const Rat& c) { return from_poly(Poly::constant(c)); }
    static FieldElem coordinate(const JetCoord& j) { return from_poly(Poly::variable(Var(j))); }
    static FieldElem parameter(const std::string& name) { return from_poly(Poly::variable(Var(name))); }
    static FieldElem from_poly(Poly p)
    {
        FieldElem out;
        out.num_ = std::move(p);
        return out;
    }

    const Poly& num() const { return num_; }
    // Expanded denominator; always has a positive leading coefficient.
    Poly den() const;
    const DenFactors& den_factors() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return *this == one(); }

    FieldElem operator-() const;
    FieldElem operator+(const FieldElem& other) const;
    FieldElem operator-(const FieldElem& other) const;
    FieldElem operator*(const FieldElem& other) const;
    FieldElem operator/(const FieldElem& other) const; // throws DivisionByZero
    FieldElem inverse() const;                         // throws DivisionByZero
    FieldElem pow(int n) const;

    // Exact equality of field elements (cross-multiplied).
    bool operator==(const FieldElem& other) const;
    bool operator!=(const FieldElem& other) const { return !(*this == other); }

    // Formal partial derivative with respect to one variable.
    FieldElem partial(const Var& v) const;
    // Replace a parameter by a rational constant; throws DivisionByZero when
    // the denominator vanishes under the substitution.
    FieldElem substituted(const std::string& param, const Rat& value) const;

    std::set<Var> variables() const;
    std::size_t term_count() const;

private:
    FieldElem(Poly num, DenFactors den);
    void canonicalize();

    Poly num_;
    DenFactors den_; // sorted bases, exponents >= 1; empty means denominator 1
};

} // namespace gauge2d
