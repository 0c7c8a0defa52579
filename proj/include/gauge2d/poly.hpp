#pragma once

#include "gauge2d/jetcoord.hpp"

#include <gmpxx.h>

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace gauge2d {

using Rat = mpq_class;

// A polynomial variable: a named parameter (coupling constant) or a jet
// coordinate.  Parameters order before jets, so jets are the high variables
// picked first for cancellation attempts.
using Var = std::variant<std::string, JetCoord>;

inline bool is_param(const Var& v) { return v.index() == 0; }
inline bool is_jet(const Var& v) { return v.index() == 1; }

// Power product with factors sorted by descending variable.
class Monomial {
public:
    Monomial() = default;
    static Monomial variable(const Var& v, int exp = 1);

    bool is_unit() const { return factors_.empty(); }
    int degree(const Var& v) const;
    int total_degree() const;
    const std::vector<std::pair<Var, int>>& factors() const { return factors_; }

    Monomial times(const Monomial& other) const;
    // Exact quotient, or nullopt when some exponent would go negative.
    std::optional<Monomial> divide(const Monomial& other) const;
    Monomial gcd(const Monomial& other) const;

    bool operator==(const Monomial& other) const { return factors_ == other.factors_; }

    // Lexicographic order: the monomial with the higher exponent on the
    // greatest variable where they differ is the greater one.
    static std::strong_ordering cmp(const Monomial& a, const Monomial& b);

private:
    std::vector<std::pair<Var, int>> factors_;
};

// Sparse multivariate polynomial with exact rational coefficients.  Terms are
// kept sorted by descending monomial and never carry a zero coefficient, so
// equal polynomials have identical representations.
class Poly {
public:
    Poly() = default;

    static Poly zero() { return Poly(); }
    static Poly constant(const Rat& c);
    static Poly variable(const Var& v, int exp = 1);
    static Poly term(const Rat& c, const Monomial& m);
    // Build from an arbitrary term list: sorts, merges, drops zeros.
    static Poly from_terms(std::vector<std::pair<Monomial, Rat>> terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Defined only for nonzero polynomials.
    const Monomial& leading_monomial() const { return terms_.front().first; }
    const Rat& leading_coeff() const { return terms_.front().second; }
    // The coefficient of the unit monomial.
    Rat constant_coeff() const;
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<std::pair<Monomial, Rat>>& terms() const { return terms_; }

    int degree(const Var& v) const;
    std::set<Var> variables() const;
    bool depends_on(const Var& v) const { return degree(v) > 0; }

    Poly operator-() const;
    Poly operator+(const Poly& other) const;
    Poly operator-(const Poly& other) const;
    Poly operator*(const Poly& other) const;
    Poly scaled(const Rat& c) const;
    Poly pow(int n) const;

    bool operator==(const Poly& other) const { return terms_ == other.terms_; }

    // Formal partial derivative with respect to one variable.
    Poly partial(const Var& v) const;
    // Replace a variable by a rational constant.
    Poly substituted(const Var& v, const Rat& value) const;

    // Positive rational c such that (*this)/c has coprime integer
    // coefficients; returns 1 for the zero polynomial.
    Rat content() const;

    // Exact quotient, or nullopt when the division does not come out even.
    static std::optional<Poly> try_divide(const Poly& num, const Poly& den);

    // Nontrivial common polynomial factor, or nullopt.  Keeping fractions
    // fully reduced is what stops repeated quotient-rule derivatives and
    // elimination chains from blowing up.
    static std::optional<Poly> common_factor(const Poly& a, const Poly& b);

    // Primitive positive multivariate gcd; returns 1 when either argument is
    // constant and the primitive part of the other when one is zero.  Found
    // by mapping one variable at a time to a large integer and reading the
    // result back off the digits, verified by exact division, so a heuristic
    // miss can only under-cancel, never produce a wrong divisor.
    static Poly gcd(const Poly& a, const Poly& b);

private:
    void normalize();
    std::vector<std::pair<Monomial, Rat>> terms_;
};

} // namespace gauge2d
