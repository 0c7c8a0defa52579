#pragma once

#include "gauge2d/system.hpp"

#include <string>
#include <vector>

namespace gauge2d {

// One jet coordinate where the two total derivatives fail to commute.
struct CommutativityFailure {
    JetCoord jet;
    FieldElem residual; // dtime(dbar jet) - dbar(dtime jet)
};

struct ValidationReport {
    std::vector<std::string> structural;        // shape violations
    std::vector<CommutativityFailure> failures; // integrability violations
    int order_bound = 0;
    bool ok() const { return structural.empty() && failures.empty(); }
};

// Integrability check on an accepted system: dtime and dbar must commute on
// every reduced jet coordinate, or the constraints drift off the surface the
// evolution preserves.  Jets are scanned up to order_bound; the default is
// the largest derivative order in the right-hand sides plus three.
ValidationReport validate(const CartanSystem& sys, int order_bound = -1);

// Same check from raw ingredients; construction failures land in the report
// instead of being thrown.
ValidationReport validate_parts(std::vector<CartanSystem::Field> fields,
                                std::vector<std::string> lambdas,
                                std::vector<std::string> params,
                                std::vector<FieldElem> z_evolution,
                                std::vector<FieldElem> z_constraint,
                                int order_bound = -1);

// First-order relations d(phi^J) = z[J][a] d(phi^a) cutting out surfaces in
// the space of fields.  Entries are rational in the order-zero coordinates
// (constrained ones indexed as PhiJ jets, free ones as PhiA jets) and in the
// parameters.
struct PfaffianInput {
    std::vector<std::string> constrained;   // phi^J names
    std::vector<std::string> unconstrained; // phi^a names
    std::vector<std::string> params;
    std::vector<std::vector<FieldElem>> z;  // z[J][a]

    int m() const { return static_cast<int>(constrained.size()); }
    int na() const { return static_cast<int>(unconstrained.size()); }
};

// omega[J][a][b] = d_a z[J][b] - d_b z[J][a] + z[I][a] d_I z[J][b]
//                - z[I][b] d_I z[J][a], antisymmetric in (a, b); identically
// zero exactly when the relations are completely integrable.
std::vector<std::vector<std::vector<FieldElem>>> curvature(const PfaffianInput& p);

struct PfaffianReduction {
    SystemPtr system;
    int rank = 0;                               // of the contracted curvature
    std::vector<std::vector<FieldElem>> kernel; // kernel[alpha][a]
    std::vector<std::string> warnings;
};

// Rewrites the relations as an evolutionary system with constraints.  The
// admissible time derivatives d(phi^a) form the kernel of the curvature
// contracted with dbar(phi^b); each kernel direction gets one lambda, and
// dbar(phi^J) follows from the relations themselves.  Only generic field
// values are considered: a pivot whose vanishing depends on the parameters
// rather than the fields raises DegenerateRank instead of branching.
PfaffianReduction pfaffian_to_cartan(const PfaffianInput& p);

} // namespace gauge2d
