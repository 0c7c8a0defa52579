#include "gauge2d/noether.hpp"

#include "gauge2d/errors.hpp"

#include <string>
#include <utility>

namespace gauge2d {

namespace {

// Operator-valued Euler derivative of an evolution right-hand side z in one
// field direction: -sum_q (-dbar)^q composed with dz/d(dbar^q coordinate).
// Both the constraint rows and the momentum evolution matrix are built from
// it; the alternating sign comes from moving dbar off the momenta by parts.
OreOp euler_operator(const FieldElem& z, JetKind kind, int index, const SystemPtr& sys)
{
    int bound = kind == JetKind::PhiJ ? 0 : sys->max_jet_dbar_order();
    OreOp acc = OreOp::zero(sys);
    for (int q = 0; q <= bound; ++q) {
        FieldElem c = z.partial(Var(make_jet(kind, index, 0, q)));
        if (c.is_zero())
            continue;
        OreOp term = OreOp::dbar(sys, q) * OreOp::coeff(std::move(c), sys);
        acc = acc + (q % 2 == 0 ? -term : term);
    }
    return acc;
}

OreMatrix stack_rows(const std::vector<ConstraintTrack>& tracks, const SystemPtr& sys,
                     bool certs)
{
    OreMatrix out(static_cast<int>(tracks.size()), sys->n(), sys);
    for (std::size_t a = 0; a < tracks.size(); ++a) {
        const OreMatrix& src = certs ? tracks[a].cert : tracks[a].row;
        for (int j = 0; j < sys->n(); ++j)
            out.set(static_cast<int>(a), j, src.at(0, j));
    }
    return out;
}

} // namespace

std::vector<ConstraintTrack> primary_constraints(SystemPtr sys)
{
    // the momentum extension keeps the action first order in time, which the
    // evolution entries break as soon as they differentiate a lambda in d
    if (sys->max_lambda_d_order() > 0)
        throw ValidationError("evolution entries involve d-jets of the lambdas");
    std::vector<ConstraintTrack> tracks;
    tracks.reserve(static_cast<std::size_t>(sys->l()));
    for (int a = 0; a < sys->l(); ++a) {
        ConstraintTrack t;
        t.row = OreMatrix(1, sys->n(), sys);
        t.cert = OreMatrix(1, sys->n(), sys);
        for (int i = 0; i < sys->n(); ++i)
            t.row.set(0, i, euler_operator(sys->z_evolution(i), JetKind::Lambda, a, sys));
        tracks.push_back(std::move(t));
    }
    return tracks;
}

OreMatrix momentum_evolution(SystemPtr sys)
{
    OreMatrix P(sys->n(), sys->n(), sys);
    for (int i = 0; i < sys->n(); ++i) {
        JetCoord base = sys->field_coordinate(i);
        for (int j = 0; j < sys->n(); ++j)
            P.set(i, j, euler_operator(sys->z_evolution(j), base.kind, base.index, sys));
    }
    return P;
}

ConstraintTrack d_step(const ConstraintTrack& t, const OreMatrix& P)
{
    SystemPtr sys = P.system();
    ConstraintTrack out;
    out.k = t.k + 1;
    OreMatrix dt(1, P.cols(), sys);
    for (int j = 0; j < P.cols(); ++j)
        dt.set(0, j, t.row.at(0, j).dtime_coeffs());
    out.row = dt + t.row * P;
    OreMatrix dc(1, P.cols(), sys);
    for (int j = 0; j < P.cols(); ++j)
        dc.set(0, j, OreOp::d(sys) * t.cert.at(0, j));
    out.cert = dc - t.row;
    return out;
}

ConstraintTrack d_step(const ConstraintTrack& t, SystemPtr sys)
{
    return d_step(t, momentum_evolution(std::move(sys)));
}

ConstraintHistory stabilize(std::vector<ConstraintTrack> tracks, SystemPtr sys, int max_k)
{
    if (max_k < 0)
        max_k = sys->n() + sys->l() + 2;
    OreMatrix P = momentum_evolution(sys);
    ConstraintHistory h;
    h.sys = sys;
    h.rows.push_back(stack_rows(tracks, sys, false));
    h.certs.push_back(stack_rows(tracks, sys, true));
    OreMatrix span = h.rows.front();
    for (int k = 0;; ++k) {
        std::vector<ConstraintTrack> next;
        next.reserve(tracks.size());
        for (const ConstraintTrack& t : tracks)
            next.push_back(d_step(t, P));
        h.rows.push_back(stack_rows(next, sys, false));
        h.certs.push_back(stack_rows(next, sys, true));
        bool contained = true;
        for (const ConstraintTrack& t : next)
            if (!solve_left(span, t.row)) {
                contained = false;
                break;
            }
        if (contained) {
            h.K = k;
            return h;
        }
        if (k == max_k)
            throw BudgetExceeded("constraint rows kept leaving their span after "
                                 + std::to_string(max_k) + " time derivatives");
        span = OreMatrix::vstack(span, h.rows.back());
        tracks = std::move(next);
    }
}

SyzygyGenSet syzygy_generating_set(const ConstraintHistory& h)
{
    SystemPtr sys = h.sys;
    const int l = h.rows.front().rows();
    const int K = h.K;
    OreMatrix stack = h.rows.front();
    for (int k = 1; k <= K; ++k)
        stack = OreMatrix::vstack(stack, h.rows[static_cast<std::size_t>(k)]);

    std::vector<OreMatrix> covectors; // each 1 x l over the full ring
    for (int a = 0; a < l; ++a) {
        auto y = solve_left(stack, h.rows[static_cast<std::size_t>(K) + 1].row(a));
        if (!y)
            throw ExpansionFailure("stabilized row fell outside the recorded span");
        OreMatrix cov(1, l, sys);
        for (int b = 0; b < l; ++b) {
            OreOp e = a == b ? OreOp::d(sys, K + 1) : OreOp::zero(sys);
            for (int k = 0; k <= K; ++k)
                e = e - y->at(0, k * l + b) * OreOp::d(sys, k);
            cov.set(0, b, e);
        }
        covectors.push_back(std::move(cov));
    }
    OreMatrix ns = left_nullspace(stack);
    for (int r = 0; r < ns.rows(); ++r) {
        OreMatrix cov(1, l, sys);
        for (int b = 0; b < l; ++b) {
            OreOp e = OreOp::zero(sys);
            for (int k = 0; k <= K; ++k)
                e = e + ns.at(r, k * l + b) * OreOp::d(sys, k);
            cov.set(0, b, e);
        }
        covectors.push_back(std::move(cov));
    }

    SyzygyGenSet out;
    out.l = l;
    out.K = K;
    out.gens = OreMatrix(static_cast<int>(covectors.size()), l, sys);
    for (std::size_t i = 0; i < covectors.size(); ++i)
        for (int b = 0; b < l; ++b)
            out.gens.set(static_cast<int>(i), b, covectors[i].at(0, b));
    return out;
}

OreMatrix second_syzygies(const SyzygyGenSet& s)
{
    SystemPtr sys = s.gens.system();
    const int l = s.l;
    const int width = l * (s.K + 2);
    // flatten a covector of degree <= K+1 to its spatial degree parts, one
    // slot per (d-power, component); left multiplication by spatial operators
    // acts slotwise, so expansions transfer back to the full ring exactly
    auto flatten = [&](const OreMatrix& cov) {
        OreMatrix flat(1, width, sys);
        for (int b = 0; b < l; ++b)
            for (const auto& [p, part] : cov.at(0, b).by_degree())
                flat.set(0, p * l + b, part);
        return flat;
    };
    OreMatrix basis(0, width, sys);
    for (int i = 0; i < s.r1(); ++i)
        basis = OreMatrix::vstack(basis, flatten(s.gens.row(i)));

    OreMatrix N(s.r1() - l, s.r1(), sys);
    for (int a = l; a < s.r1(); ++a) {
        OreMatrix dcov(1, l, sys);
        for (int b = 0; b < l; ++b)
            dcov.set(0, b, OreOp::d(sys) * s.gens.at(a, b));
        auto y = solve_left(basis, flatten(dcov));
        if (!y)
            throw ExpansionFailure("derivative of a relation did not expand over the basis");
        for (int i = 0; i < s.r1(); ++i) {
            OreOp e = -y->at(0, i);
            if (i == a)
                e = e + OreOp::d(sys);
            N.set(a - l, i, e);
        }
    }
    return N;
}

Resolution dualize(const SyzygyGenSet& s, const OreMatrix& N, const ConstraintHistory& h)
{
    SystemPtr sys = s.gens.system();
    const int n = sys->n();
    Resolution out;
    out.r1 = s.r1();
    out.r2 = N.rows();
    out.R_gen = OreMatrix(n + s.l, s.r1(), sys);
    for (int I = 0; I < s.r1(); ++I) {
        for (int b = 0; b < s.l; ++b)
            out.R_gen.set(n + b, I, s.gens.at(I, b).transpose());
        // the field variation transposes the covector paired with the
        // certificates, so that the evolution equations close on it exactly
        for (int i = 0; i < n; ++i) {
            OreOp acc = OreOp::zero(sys);
            for (int b = 0; b < s.l; ++b)
                for (const auto& [p, part] : s.gens.at(I, b).by_degree())
                    acc = acc + part * h.certs[static_cast<std::size_t>(p)].at(b, i);
            out.R_gen.set(i, I, (-acc).transpose());
        }
    }
    out.Z_gen = N.formal_transpose();
    return out;
}

} // namespace gauge2d
