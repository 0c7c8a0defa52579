#pragma once

#include "gauge2d/ore.hpp"

#include <string>
#include <vector>

namespace gauge2d {

// Parsed expression tree.  Printing and reparsing reproduces the tree node
// for node; source positions are carried for error reporting and ignored by
// equality.
struct Expr {
    enum class Kind { Number, Ident, Call, Neg, Binary };
    Kind kind = Kind::Number;
    Rat value;          // Number
    std::string name;   // Ident; Call ("d" or "dbar")
    int power = 1;      // Call: derivative power
    char op = 0;        // Binary: one of + - * / ^
    std::vector<Expr> args;
    int line = 0, col = 0;

    bool operator==(const Expr& other) const;
    bool operator!=(const Expr& other) const { return !(*this == other); }
};

// Grammar, loosest to tightest: + -, * /, unary -, ^ with integer literal
// exponents.  Atoms: integers, identifiers, parenthesized sums, and
// derivative applications d(x) / dbar(x) / d^k(x) / dbar^k(x) whose argument
// chain must bottom out in an identifier.  The line argument offsets the
// reported positions when the text comes out of a larger file.
Expr parse_expr(const std::string& text, int line = 1);
std::string print_expr(const Expr& e);

// Name tables mapping identifiers to coordinates for evaluation, in
// declaration order; constrained runs parallel to fields.
struct NameTable {
    std::vector<std::string> fields;
    std::vector<bool> constrained;
    std::vector<std::string> lambdas;
    std::vector<std::string> params;
};

// Evaluate to a coefficient: identifiers name order-zero coordinates or
// parameters, d/dbar shift jet orders (admissibility enforced by the jet
// rules).  The operator symbols D and Dbar are rejected here.
FieldElem eval_field(const Expr& e, const NameTable& names);

// Evaluate to an operator over sys: as above plus the atoms D and Dbar;
// division requires a pure-coefficient divisor.
OreOp eval_operator(const Expr& e, SystemPtr sys);

NameTable table_for(const CartanSystem& sys);

} // namespace gauge2d
