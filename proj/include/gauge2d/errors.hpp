#pragma once

#include <stdexcept>
#include <string>

namespace gauge2d {

// Division by a field element that is identically zero.
struct DivisionByZero : std::runtime_error {
    explicit DivisionByZero(const std::string& what) : std::runtime_error(what) {}
};

// The stabilization loop exceeded its iteration budget.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// The diagonal-combination step of the normal form ran out of mixing
// coefficients before reaching diag(1, ..., 1, Delta).
struct DecompositionIncomplete : std::runtime_error {
    explicit DecompositionIncomplete(const std::string& what) : std::runtime_error(what) {}
};

// A module element that must lie in the span of a generating set does not.
struct ExpansionFailure : std::runtime_error {
    explicit ExpansionFailure(const std::string& what) : std::runtime_error(what) {}
};

// A pivot decision in the Pfaffian reduction left the generic stratum.
struct DegenerateRank : std::runtime_error {
    explicit DegenerateRank(const std::string& what) : std::runtime_error(what) {}
};

// Input text could not be parsed; position is 1-based.
struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& what, int line_, int column_)
        : std::runtime_error(what + " (line " + std::to_string(line_) + ", column "
                             + std::to_string(column_) + ")"),
          line(line_), column(column_) {}
};

// A parsed system violates the normal-form requirements.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace gauge2d
