#pragma once

#include "gauge2d/orematrix.hpp"

namespace gauge2d {

// One lambda-variation constraint of the momentum extension together with
// its evolution bookkeeping.  The row is the spatial operator acting on the
// momentum column; cert accumulates the coefficient of the momentum
// evolution equations so that
//
//   d^k(constraint) = row * pi + cert * (momentum equations)
//
// stays an exact identity through every step.
struct ConstraintTrack {
    OreMatrix row;  // 1 x n, spatial
    OreMatrix cert; // 1 x n, general; zero at k = 0
    int k = 0;
};

// The constraints obtained by varying the momentum-extended action in the
// lambdas: one track per lambda, row entries built from the operator-valued
// Euler derivatives of the evolution right-hand sides.  Rejects systems
// whose evolution involves d-jets of lambda (the extension needs right-hand
// sides first order in time throughout).
std::vector<ConstraintTrack> primary_constraints(SystemPtr sys);

// Momentum evolution matrix P: d(pi) = P * pi on shell, n x n spatial.
OreMatrix momentum_evolution(SystemPtr sys);

// One time derivative of a track: the coefficients evolve by dtime and the
// differentiated momenta are replaced through P; cert follows its recurrence.
ConstraintTrack d_step(const ConstraintTrack& t, const OreMatrix& P);
ConstraintTrack d_step(const ConstraintTrack& t, SystemPtr sys);

// Rows and certificates of every derivative level computed before the span
// of the rows stopped growing: levels 0..K+1, each l x n.
struct ConstraintHistory {
    SystemPtr sys;
    int K = 0;
    std::vector<OreMatrix> rows;
    std::vector<OreMatrix> certs;
};

// Iterates d_step until every level-(k+1) row lies in the span of levels
// 0..k over the spatial subring; throws BudgetExceeded after max_k steps
// (default n + l + 2).
ConstraintHistory stabilize(std::vector<ConstraintTrack> tracks, SystemPtr sys,
                            int max_k = -1);

// Generating set of the relation module among the constraint rows, held as
// covectors over the full ring: rows 0..l-1 are the stabilization covectors
// of degree exactly K+1 with unit leading coefficient, the remaining rows a
// free basis of the lower-degree relations.
struct SyzygyGenSet {
    OreMatrix gens; // r1 x l
    int l = 0;
    int K = 0;
    int r1() const { return gens.rows(); }
};

SyzygyGenSet syzygy_generating_set(const ConstraintHistory& h);

// Relations among the generating set itself: one row per lower-degree
// generator, obtained by expanding d * gen over the full generating set
// (unique, since the set is a basis at degree K+1).  Throws ExpansionFailure
// when the expansion does not resolve.  r2 = r1 - l rows.
OreMatrix second_syzygies(const SyzygyGenSet& s);

// Gauge generators and reducibility relations.
struct Resolution {
    OreMatrix R_gen; // (n + l) x r1: field rows first, then lambda rows
    OreMatrix Z_gen; // r1 x r2
    int r1 = 0;
    int r2 = 0;
};

// Transposes the relation covectors into variations: the lambda components
// are the transposed generators, the field components pair the degree parts
// with the tracked certificates, and Z_gen is the transpose of the second
// relations.
Resolution dualize(const SyzygyGenSet& s, const OreMatrix& N, const ConstraintHistory& h);

} // namespace gauge2d
