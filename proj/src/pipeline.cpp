#include "gauge2d/pipeline.hpp"

#include "gauge2d/errors.hpp"
#include "gauge2d/render.hpp"

#include <optional>

namespace gauge2d {

PipelineResult run_pipeline(SystemPtr sys, PipelineOptions opts)
{
    ValidationReport v = validate(*sys);
    if (!v.ok())
        throw ValidationError(describe(v, *sys));
    PipelineResult r;
    r.sys = sys;
    r.history = stabilize(primary_constraints(sys), sys, opts.max_k);
    r.gens = syzygy_generating_set(r.history);
    OreMatrix second = second_syzygies(r.gens);
    r.resolution = dualize(r.gens, second, r.history);
    r.lin = linearize(sys);
    r.gauge = check_gauge(r.lin, r.resolution);
    r.reducibility = check_reducibility(r.resolution);
    r.dof = dof_count(r.resolution, sys);
    return r;
}

namespace {

// One generator column over the substituted system, the value pushed into
// every coefficient.  Empty when a denominator collapses.
std::optional<std::vector<OreOp>> substituted_column(const OreMatrix& m, int col,
                                                     const std::string& param, const Rat& value,
                                                     SystemPtr target)
{
    std::vector<OreOp> out;
    try {
        for (int r = 0; r < m.rows(); ++r) {
            OreOp e = OreOp::zero(target);
            for (const auto& [pq, coeff] : m.at(r, col).terms())
                e = e
                    + OreOp::monomial(coeff.substituted(param, value), pq.first, pq.second,
                                      target);
            out.push_back(std::move(e));
        }
    } catch (const DivisionByZero&) {
        return std::nullopt;
    }
    return out;
}

} // namespace

SpecializationReport specialize_check(const PipelineResult& generic, const std::string& param,
                                      const Rat& value)
{
    SpecializationReport rep;
    rep.param = param;
    rep.value = value;
    rep.generic_r1 = generic.resolution.r1;
    SystemPtr target = generic.sys->substituted(param, value);

    const OreMatrix& R = generic.resolution.R_gen;
    for (int c = 0; c < R.cols(); ++c) {
        auto col = substituted_column(R, c, param, value, target);
        if (!col) {
            ++rep.lost_columns;
            continue;
        }
        bool zero = true;
        for (const OreOp& e : *col)
            zero = zero && e.is_zero();
        if (!zero)
            ++rep.substituted_r1;
    }

    rep.fresh_r1 = run_pipeline(target).resolution.r1;
    rep.failed = rep.lost_columns > 0 || rep.substituted_r1 != rep.fresh_r1;

    std::string at = param + " = " + value.get_str();
    if (!rep.failed) {
        rep.note = "all " + std::to_string(rep.generic_r1)
                   + " generators specialize cleanly at " + at;
        return rep;
    }
    rep.note = "SpecializationFailure: the report of " + std::to_string(rep.generic_r1)
               + " generators does not carry over to " + at + ":";
    if (rep.lost_columns > 0)
        rep.note += " " + std::to_string(rep.lost_columns)
                    + " of them hit a vanishing denominator;";
    rep.note += " " + std::to_string(rep.substituted_r1)
                + " survive substitution while the system computed afresh has "
                + std::to_string(rep.fresh_r1);
    return rep;
}

} // namespace gauge2d
