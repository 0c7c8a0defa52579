#include "gauge2d/derivation.hpp"

namespace gauge2d {

const FieldElem& cached_a_jet_dtime(const CartanSystem& sys, int a, int q)
{
    {
        std::lock_guard<std::mutex> lock(sys.cache_mutex_);
        auto it = sys.dtime_cache_.find({a, q});
        if (it != sys.dtime_cache_.end())
            return it->second;
    }
    FieldElem value = q == 0 ? sys.z_evolution(sys.global_index(JetKind::PhiA, a))
                             : dbar(cached_a_jet_dtime(sys, a, q - 1), sys);
    std::lock_guard<std::mutex> lock(sys.cache_mutex_);
    return sys.dtime_cache_.try_emplace({a, q}, std::move(value)).first->second;
}

FieldElem jet_dbar(const JetCoord& j, const CartanSystem& sys)
{
    check_jet_in_system(j, sys);
    if (j.kind == JetKind::PhiJ)
        return sys.z_constraint(j.index);
    return FieldElem::coordinate(make_jet(j.kind, j.index, j.p, j.q + 1));
}

FieldElem jet_dtime(const JetCoord& j, const CartanSystem& sys)
{
    check_jet_in_system(j, sys);
    switch (j.kind) {
    case JetKind::PhiJ:
        return sys.z_evolution(sys.global_index(JetKind::PhiJ, j.index));
    case JetKind::PhiA:
        return cached_a_jet_dtime(sys, j.index, j.q);
    default:
        return FieldElem::coordinate(make_jet(JetKind::Lambda, j.index, j.p + 1, j.q));
    }
}

namespace {

template <typename Rule>
FieldElem derive(const FieldElem& a, const CartanSystem& sys, Rule&& rule)
{
    FieldElem out;
    for (const Var& v : a.variables()) {
        if (!is_jet(v))
            continue;
        FieldElem slope = a.partial(v);
        if (!slope.is_zero())
            out = out + slope * rule(std::get<JetCoord>(v), sys);
    }
    return out;
}

} // namespace

FieldElem dbar(const FieldElem& a, const CartanSystem& sys) { return derive(a, sys, jet_dbar); }

FieldElem dtime(const FieldElem& a, const CartanSystem& sys) { return derive(a, sys, jet_dtime); }

FieldElem dbar_pow(FieldElem a, int q, const CartanSystem& sys)
{
    for (int i = 0; i < q; ++i)
        a = dbar(a, sys);
    return a;
}

FieldElem dtime_pow(FieldElem a, int p, const CartanSystem& sys)
{
    for (int i = 0; i < p; ++i)
        a = dtime(a, sys);
    return a;
}

} // namespace gauge2d
