#pragma once

#include "gauge2d/noether.hpp"
#include "gauge2d/verify.hpp"

namespace gauge2d {

struct PipelineOptions {
    int max_k = -1; // stabilization budget, module default when negative
};

// Everything one analysis produces, kept together so reports and follow-up
// checks can reach the intermediate stages.
struct PipelineResult {
    SystemPtr sys;
    ConstraintHistory history;
    SyzygyGenSet gens;
    Resolution resolution;
    Linearization lin;
    CheckReport gauge;
    CheckReport reducibility;
    DofReport dof;
    bool verified() const { return gauge.ok() && reducibility.ok(); }
};

// validate, stabilize, resolve, dualize, then check the answer against the
// linearized equations.  Throws ValidationError on an inconsistent system and
// BudgetExceeded when stabilization overruns opts.max_k.
PipelineResult run_pipeline(SystemPtr sys, PipelineOptions opts = {});

// Outcome of pushing a parameter value into an already computed resolution,
// compared against rerunning the pipeline on the substituted system.  Each
// generator column is substituted on its own; the generic answer fails to
// specialize when a column hits a vanishing denominator or when the
// surviving count disagrees with the fresh run.
struct SpecializationReport {
    std::string param;
    Rat value;
    int generic_r1 = 0;
    int lost_columns = 0;    // hit a vanishing denominator
    int substituted_r1 = 0;  // survive with a nonzero entry
    int fresh_r1 = 0;
    bool failed = false;
    std::string note;
};

SpecializationReport specialize_check(const PipelineResult& generic, const std::string& param,
                                      const Rat& value);

} // namespace gauge2d
