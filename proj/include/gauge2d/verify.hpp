#pragma once

#include "gauge2d/noether.hpp"

namespace gauge2d {

// Frechet derivative of the equations along the field and lambda directions,
// assembled as operator blocks: evolution rows then constraint rows, field
// columns then lambda columns.  The constraint rows have no lambda columns
// to fill (the constraints never mention the lambdas), so that block stays
// identically zero.
struct Linearization {
    OreMatrix E; // (n + m) x (n + l)
};

Linearization linearize(SystemPtr sys);

struct Residual {
    int row = 0;
    int col = 0;
    OreOp value;
};

// Outcome of an exact operator identity check.  residuals lists the nonzero
// product entries; kernel_rank counts independent covectors annihilating the
// reducibility relations and rank_law re-asserts r1 - r2 = l (both used by
// the reducibility check only).
struct CheckReport {
    std::vector<Residual> residuals;
    int kernel_rank = 0;
    bool rank_law = true;
    bool ok() const { return residuals.empty() && kernel_rank == 0 && rank_law; }
};

// Passes iff E * R_gen vanishes identically, i.e. the variations leave every
// equation invariant on shell.
CheckReport check_gauge(const Linearization& lin, const Resolution& res);

// Passes iff R_gen * Z_gen vanishes, no covector at any filtration level
// annihilates Z_gen, and the generator counts obey r1 - r2 = l.
CheckReport check_reducibility(const Resolution& res);

// Count of functionally independent field histories: n - m - rank of the
// matrix collecting the field components of the generators split by d-power.
// The count rests on an unproven rank statement and is always flagged
// conjectural; a negative value is reported as an inconsistency, not clamped.
struct DofReport {
    int n = 0;
    int m = 0;
    int rank_rbar = 0;
    int dof = 0;
    bool conjectural = true;
    bool consistent = true;
};

DofReport dof_count(const Resolution& res, SystemPtr sys);

} // namespace gauge2d
