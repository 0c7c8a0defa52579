#include "gauge2d/cartan.hpp"

#include "gauge2d/derivation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace gauge2d {

namespace {

void check_pfaffian(const PfaffianInput& p)
{
    if (p.na() == 0)
        throw ValidationError("at least one unconstrained coordinate is required");
    std::set<std::string> names;
    for (const auto& s : p.constrained)
        if (!names.insert(s).second)
            throw ValidationError("duplicate name: " + s);
    for (const auto& s : p.unconstrained)
        if (!names.insert(s).second)
            throw ValidationError("duplicate name: " + s);
    for (const auto& s : p.params)
        if (!names.insert(s).second)
            throw ValidationError("duplicate name: " + s);
    if (static_cast<int>(p.z.size()) != p.m())
        throw ValidationError("expected one relation row per constrained coordinate");
    for (const auto& row : p.z) {
        if (static_cast<int>(row.size()) != p.na())
            throw ValidationError("expected one relation entry per unconstrained coordinate");
        for (const FieldElem& e : row)
            for (const Var& v : e.variables()) {
                if (is_param(v)) {
                    const auto& name = std::get<std::string>(v);
                    if (std::find(p.params.begin(), p.params.end(), name) == p.params.end())
                        throw ValidationError("relation references undeclared parameter " + name);
                    continue;
                }
                const JetCoord& j = std::get<JetCoord>(v);
                bool order_zero = j.p == 0 && j.q == 0;
                int count = j.kind == JetKind::PhiJ ? p.m()
                          : j.kind == JetKind::PhiA ? p.na() : 0;
                if (!order_zero || j.index >= count)
                    throw ValidationError("relation entries admit order-zero coordinates only");
            }
    }
}

// A pivot is safe when no parameter values make it vanish identically in the
// fields: group the numerator by jet power product and demand that the
// parameter coefficients of the groups have no common nonconstant factor.
// Parameter-only strata of higher codimension are not detected.
bool pivot_safe(const FieldElem& e)
{
    auto less = [](const Monomial& a, const Monomial& b) {
        return Monomial::cmp(a, b) == std::strong_ordering::less;
    };
    std::map<Monomial, std::vector<std::pair<Monomial, Rat>>, decltype(less)> groups(less);
    for (const auto& [mon, coeff] : e.num().terms()) {
        Monomial par, jet;
        for (const auto& [v, exp] : mon.factors()) {
            Monomial f = Monomial::variable(v, exp);
            if (is_param(v))
                par = par.times(f);
            else
                jet = jet.times(f);
        }
        groups[jet].emplace_back(par, coeff);
    }
    Poly g = Poly::zero();
    for (auto& [jet, terms] : groups) {
        g = Poly::gcd(g, Poly::from_terms(std::move(terms)));
        if (!g.is_zero() && g.is_constant())
            return true;
    }
    return !g.is_zero() && g.is_constant();
}

} // namespace

ValidationReport validate(const CartanSystem& sys, int order_bound)
{
    ValidationReport rep;
    rep.order_bound = order_bound >= 0
        ? order_bound
        : std::max(sys.max_lambda_d_order(), sys.max_jet_dbar_order()) + 3;
    auto check = [&](const JetCoord& j) {
        FieldElem v = FieldElem::coordinate(j);
        FieldElem res = dtime(dbar(v, sys), sys) - dbar(dtime(v, sys), sys);
        if (!res.is_zero())
            rep.failures.push_back({j, std::move(res)});
    };
    for (int J = 0; J < sys.m(); ++J)
        check(make_jet(JetKind::PhiJ, J));
    for (int a = 0; a < sys.n() - sys.m(); ++a)
        for (int q = 0; q <= rep.order_bound; ++q)
            check(make_jet(JetKind::PhiA, a, 0, q));
    for (int al = 0; al < sys.l(); ++al)
        for (int p = 0; p <= rep.order_bound; ++p)
            for (int q = 0; p + q <= rep.order_bound; ++q)
                check(make_jet(JetKind::Lambda, al, p, q));
    return rep;
}

ValidationReport validate_parts(std::vector<CartanSystem::Field> fields,
                                std::vector<std::string> lambdas,
                                std::vector<std::string> params,
                                std::vector<FieldElem> z_evolution,
                                std::vector<FieldElem> z_constraint,
                                int order_bound)
{
    try {
        auto sys = CartanSystem::create(std::move(fields), std::move(lambdas),
                                        std::move(params), std::move(z_evolution),
                                        std::move(z_constraint));
        return validate(*sys, order_bound);
    } catch (const ValidationError& e) {
        ValidationReport rep;
        rep.structural.push_back(e.what());
        return rep;
    }
}

std::vector<std::vector<std::vector<FieldElem>>> curvature(const PfaffianInput& p)
{
    check_pfaffian(p);
    int m = p.m(), na = p.na();
    auto d_a = [](int a) { return Var(make_jet(JetKind::PhiA, a)); };
    auto d_J = [](int J) { return Var(make_jet(JetKind::PhiJ, J)); };
    std::vector out(m, std::vector(na, std::vector<FieldElem>(na)));
    for (int J = 0; J < m; ++J)
        for (int a = 0; a < na; ++a)
            for (int b = a + 1; b < na; ++b) {
                FieldElem w = p.z[J][b].partial(d_a(a)) - p.z[J][a].partial(d_a(b));
                for (int I = 0; I < m; ++I)
                    w = w + p.z[I][a] * p.z[J][b].partial(d_J(I))
                          - p.z[I][b] * p.z[J][a].partial(d_J(I));
                out[J][a][b] = w;
                out[J][b][a] = -w;
            }
    return out;
}

PfaffianReduction pfaffian_to_cartan(const PfaffianInput& p)
{
    auto omega = curvature(p);
    int m = p.m(), na = p.na();

    // Contract the curvature with the space derivatives: admissible time
    // derivatives v^a of the free coordinates satisfy W v = 0 where
    // W[J][a] = dbar(phi^b) omega[J][b][a].  Antisymmetry puts the vector
    // dbar(phi^a) itself in the kernel, so at least one lambda survives.
    std::vector W(m, std::vector<FieldElem>(na));
    for (int J = 0; J < m; ++J)
        for (int a = 0; a < na; ++a) {
            FieldElem w;
            for (int b = 0; b < na; ++b)
                if (b != a)
                    w = w + FieldElem::coordinate(make_jet(JetKind::PhiA, b, 0, 1))
                            * omega[J][b][a];
            W[J][a] = w;
        }

    // Reduced row echelon form over the coefficient field.
    std::vector<int> pivot_cols;
    int rank = 0;
    for (int col = 0; col < na && rank < m; ++col) {
        int best = -1;
        bool unsafe_only = false;
        for (int r = rank; r < m; ++r) {
            if (W[r][col].is_zero())
                continue;
            if (!pivot_safe(W[r][col])) {
                unsafe_only = true;
                continue;
            }
            if (best < 0 || W[r][col].term_count() < W[best][col].term_count())
                best = r;
        }
        if (best < 0) {
            if (unsafe_only)
                throw DegenerateRank("rank of the curvature contraction depends on the"
                                     " parameters: every pivot candidate in column "
                                     + std::to_string(col + 1)
                                     + " vanishes for special parameter values");
            continue; // free column
        }
        std::swap(W[rank], W[best]);
        FieldElem inv = W[rank][col].inverse();
        for (int c = col; c < na; ++c)
            W[rank][c] = W[rank][c] * inv;
        for (int r = 0; r < m; ++r) {
            if (r == rank || W[r][col].is_zero())
                continue;
            FieldElem f = W[r][col];
            for (int c = col; c < na; ++c)
                W[r][c] = W[r][c] - f * W[rank][c];
        }
        pivot_cols.push_back(col);
        ++rank;
    }

    // One kernel vector per free column: unit there, minus the reduced row
    // entries at the pivot columns, zero at the other free columns.
    PfaffianReduction out;
    out.rank = rank;
    for (int col = 0; col < na; ++col) {
        if (std::find(pivot_cols.begin(), pivot_cols.end(), col) != pivot_cols.end())
            continue;
        std::vector<FieldElem> v(na);
        v[col] = FieldElem::one();
        for (int i = 0; i < rank; ++i)
            v[pivot_cols[i]] = -W[i][col];
        out.kernel.push_back(std::move(v));
    }
    int l = na - rank;

    std::set<std::string> taken(p.constrained.begin(), p.constrained.end());
    taken.insert(p.unconstrained.begin(), p.unconstrained.end());
    taken.insert(p.params.begin(), p.params.end());
    std::vector<std::string> lambdas;
    for (int al = 0; al < l; ++al) {
        std::string name = "lam" + std::to_string(al + 1);
        while (taken.count(name))
            name += "_";
        taken.insert(name);
        lambdas.push_back(std::move(name));
    }

    std::vector<CartanSystem::Field> fields;
    for (const auto& s : p.constrained)
        fields.push_back({s, true});
    for (const auto& s : p.unconstrained)
        fields.push_back({s, false});

    std::vector<FieldElem> z_ev(m + na), z_co(m);
    for (int al = 0; al < l; ++al) {
        FieldElem lam = FieldElem::coordinate(make_jet(JetKind::Lambda, al));
        for (int a = 0; a < na; ++a)
            z_ev[m + a] = z_ev[m + a] + out.kernel[al][a] * lam;
        for (int J = 0; J < m; ++J) {
            FieldElem lift;
            for (int a = 0; a < na; ++a)
                lift = lift + p.z[J][a] * out.kernel[al][a];
            z_ev[J] = z_ev[J] + lift * lam;
        }
    }
    for (int J = 0; J < m; ++J)
        for (int a = 0; a < na; ++a)
            z_co[J] = z_co[J] + p.z[J][a] * FieldElem::coordinate(make_jet(JetKind::PhiA, a, 0, 1));

    out.system = CartanSystem::create(std::move(fields), std::move(lambdas), p.params,
                                      std::move(z_ev), std::move(z_co));
    if (l == 1)
        out.warnings.push_back("only one lambda remains: the time derivative of every"
                               " solution is proportional to its space derivative, so"
                               " the solutions are curves rather than surfaces");
    return out;
}

} // namespace gauge2d
