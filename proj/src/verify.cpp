#include "gauge2d/verify.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace gauge2d {

namespace {

// Frechet derivative of z along one coordinate direction: sum_q
// (dz/d(dbar^q jet)) dbar^q, coefficients to the left of the powers.
OreOp frechet(const FieldElem& z, JetKind kind, int index, const SystemPtr& sys)
{
    int bound = kind == JetKind::PhiJ ? 0 : sys->max_jet_dbar_order();
    OreOp acc = OreOp::zero(sys);
    for (int q = 0; q <= bound; ++q) {
        FieldElem c = z.partial(Var(make_jet(kind, index, 0, q)));
        if (!c.is_zero())
            acc = acc + OreOp::monomial(std::move(c), 0, q, sys);
    }
    return acc;
}

std::vector<Residual> nonzero_entries(const OreMatrix& M)
{
    std::vector<Residual> out;
    for (int r = 0; r < M.rows(); ++r)
        for (int c = 0; c < M.cols(); ++c)
            if (!M.at(r, c).is_zero())
                out.push_back({r, c, M.at(r, c)});
    return out;
}

} // namespace

Linearization linearize(SystemPtr sys)
{
    const int n = sys->n(), m = sys->m(), l = sys->l();
    OreMatrix E(n + m, n + l, sys);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            JetCoord c = sys->field_coordinate(j);
            OreOp e = -frechet(sys->z_evolution(i), c.kind, c.index, sys);
            if (i == j)
                e = e + OreOp::d(sys);
            E.set(i, j, std::move(e));
        }
        for (int a = 0; a < l; ++a)
            E.set(i, n + a, -frechet(sys->z_evolution(i), JetKind::Lambda, a, sys));
    }
    for (int J = 0; J < m; ++J) {
        for (int j = 0; j < n; ++j) {
            JetCoord c = sys->field_coordinate(j);
            OreOp e = -frechet(sys->z_constraint(J), c.kind, c.index, sys);
            if (sys->global_index(JetKind::PhiJ, J) == j)
                e = e + OreOp::dbar(sys);
            E.set(n + J, j, std::move(e));
        }
    }
    return {std::move(E)};
}

CheckReport check_gauge(const Linearization& lin, const Resolution& res)
{
    CheckReport rep;
    rep.residuals = nonzero_entries(lin.E * res.R_gen);
    return rep;
}

CheckReport check_reducibility(const Resolution& res)
{
    CheckReport rep;
    rep.residuals = nonzero_entries(res.R_gen * res.Z_gen);
    SystemPtr sys = res.R_gen.system();
    rep.rank_law = res.r1 - res.r2 == res.R_gen.rows() - sys->n();

    // A kernel column of Z_gen with d-degree <= e+1 (e the largest entry
    // degree, the deepest filtration level anything can cancel at) is the
    // same as a spatial covector annihilating the transposed entries with
    // their d-powers multiplied out, one slot per (generator, d-power).
    OreMatrix zt = res.Z_gen.formal_transpose(); // r2 x r1
    int e = 0;
    for (int r = 0; r < zt.rows(); ++r)
        for (int c = 0; c < zt.cols(); ++c)
            e = std::max(e, zt.at(r, c).degree());
    const int depth = e + 1;
    OreMatrix flat((depth + 1) * res.r2, (depth + e + 1) * res.r1, sys);
    for (int k = 0; k <= depth; ++k)
        for (int a = 0; a < res.r2; ++a)
            for (int i = 0; i < res.r1; ++i)
                for (const auto& [p, part] : (OreOp::d(sys, k) * zt.at(a, i)).by_degree())
                    flat.set(k * res.r2 + a, p * res.r1 + i, part);
    rep.kernel_rank = left_nullspace(flat).rows();
    return rep;
}

DofReport dof_count(const Resolution& res, SystemPtr sys)
{
    DofReport rep;
    rep.n = sys->n();
    rep.m = sys->m();
    // one column per generator and d-power carried by its field components
    std::vector<std::vector<OreOp>> cols;
    for (int I = 0; I < res.r1; ++I) {
        int deg = 0;
        for (int i = 0; i < rep.n; ++i)
            deg = std::max(deg, res.R_gen.at(i, I).degree());
        for (int k = 0; k <= deg; ++k) {
            std::vector<OreOp> col(static_cast<std::size_t>(rep.n), OreOp::zero(sys));
            bool nonzero = false;
            for (int i = 0; i < rep.n; ++i) {
                auto parts = res.R_gen.at(i, I).by_degree();
                auto it = parts.find(k);
                if (it != parts.end()) {
                    col[static_cast<std::size_t>(i)] = it->second;
                    nonzero = true;
                }
            }
            if (nonzero)
                cols.push_back(std::move(col));
        }
    }
    OreMatrix rbar(rep.n, static_cast<int>(cols.size()), sys);
    for (int c = 0; c < rbar.cols(); ++c)
        for (int i = 0; i < rep.n; ++i)
            rbar.set(i, c, cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)]);
    rep.rank_rbar = rank(rbar);
    rep.dof = rep.n - rep.m - rep.rank_rbar;
    rep.consistent = rep.dof >= 0;
    return rep;
}

} // namespace gauge2d
