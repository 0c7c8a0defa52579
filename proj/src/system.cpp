#include "gauge2d/system.hpp"

#include <algorithm>
#include <set>

namespace gauge2d {

namespace {

void check_entry_vars(const FieldElem& z, const CartanSystem& sys, bool allow_lambda,
                      const std::string& where)
{
    for (const Var& v : z.variables()) {
        if (is_param(v)) {
            const auto& params = sys.params();
            if (std::find(params.begin(), params.end(), std::get<std::string>(v)) == params.end())
                throw ValidationError(where + " references undeclared parameter "
                                      + std::get<std::string>(v));
            continue;
        }
        const JetCoord& j = std::get<JetCoord>(v);
        check_jet_in_system(j, sys);
        if (!allow_lambda && j.kind == JetKind::Lambda)
            throw ValidationError(where + " depends on a lambda jet; constraint right-hand"
                                  " sides admit field jets only");
    }
}

} // namespace

void check_jet_in_system(const JetCoord& j, const CartanSystem& sys)
{
    try {
        check_jet(j);
    } catch (const std::invalid_argument& e) {
        throw ValidationError(e.what());
    }
    int count = 0;
    switch (j.kind) {
    case JetKind::PhiJ: count = sys.m(); break;
    case JetKind::PhiA: count = sys.n() - sys.m(); break;
    case JetKind::Lambda: count = sys.l(); break;
    }
    if (j.index >= count)
        throw ValidationError("jet coordinate index out of range for this system");
}

SystemPtr CartanSystem::create(std::vector<Field> fields, std::vector<std::string> lambdas,
                               std::vector<std::string> params,
                               std::vector<FieldElem> z_evolution,
                               std::vector<FieldElem> z_constraint)
{
    auto sys = std::shared_ptr<CartanSystem>(new CartanSystem());
    sys->fields_ = std::move(fields);
    sys->lambdas_ = std::move(lambdas);
    sys->params_ = std::move(params);
    sys->z_evolution_ = std::move(z_evolution);
    sys->z_constraint_ = std::move(z_constraint);

    if (sys->fields_.empty())
        throw ValidationError("a system needs at least one field");
    std::set<std::string> names;
    for (const auto& f : sys->fields_)
        if (!names.insert(f.name).second)
            throw ValidationError("duplicate name: " + f.name);
    for (const auto& s : sys->lambdas_)
        if (!names.insert(s).second)
            throw ValidationError("duplicate name: " + s);
    for (const auto& s : sys->params_)
        if (!names.insert(s).second)
            throw ValidationError("duplicate name: " + s);

    sys->kind_index_.resize(sys->fields_.size());
    for (int i = 0; i < sys->n(); ++i) {
        if (sys->fields_[i].constrained) {
            sys->kind_index_[i] = static_cast<int>(sys->constrained_.size());
            sys->constrained_.push_back(i);
        } else {
            sys->kind_index_[i] = static_cast<int>(sys->unconstrained_.size());
            sys->unconstrained_.push_back(i);
        }
    }

    if (static_cast<int>(sys->z_evolution_.size()) != sys->n())
        throw ValidationError("expected one evolution entry per field");
    if (static_cast<int>(sys->z_constraint_.size()) != sys->m())
        throw ValidationError("expected one constraint entry per constrained field");

    for (int i = 0; i < sys->n(); ++i)
        check_entry_vars(sys->z_evolution_[i], *sys, true,
                         "evolution of " + sys->fields_[i].name);
    for (int j = 0; j < sys->m(); ++j)
        check_entry_vars(sys->z_constraint_[j], *sys, false,
                         "constraint of " + sys->fields_[sys->constrained_[j]].name);

    for (const FieldElem& z : sys->z_evolution_)
        for (const Var& v : z.variables())
            if (is_jet(v)) {
                const JetCoord& j = std::get<JetCoord>(v);
                if (j.kind == JetKind::Lambda)
                    sys->max_lambda_p_ = std::max(sys->max_lambda_p_, j.p);
                sys->max_q_ = std::max(sys->max_q_, j.q);
            }
    for (const FieldElem& z : sys->z_constraint_)
        for (const Var& v : z.variables())
            if (is_jet(v))
                sys->max_q_ = std::max(sys->max_q_, std::get<JetCoord>(v).q);

    return sys;
}

int CartanSystem::global_index(JetKind kind, int index) const
{
    switch (kind) {
    case JetKind::PhiJ: return constrained_.at(index);
    case JetKind::PhiA: return unconstrained_.at(index);
    default: throw std::invalid_argument("lambda is not a field");
    }
}

JetCoord CartanSystem::field_coordinate(int global) const
{
    JetKind kind = fields_.at(global).constrained ? JetKind::PhiJ : JetKind::PhiA;
    return make_jet(kind, kind_index_[global]);
}

const std::string& CartanSystem::coord_name(JetKind kind, int index) const
{
    if (kind == JetKind::Lambda)
        return lambdas_.at(index);
    return fields_.at(global_index(kind, index)).name;
}

SystemPtr CartanSystem::substituted(const std::string& param, const Rat& value) const
{
    std::vector<std::string> rest;
    for (const auto& p : params_)
        if (p != param)
            rest.push_back(p);
    if (rest.size() == params_.size())
        throw ValidationError("unknown parameter: " + param);
    std::vector<FieldElem> ev, co;
    for (const auto& z : z_evolution_)
        ev.push_back(z.substituted(param, value));
    for (const auto& z : z_constraint_)
        co.push_back(z.substituted(param, value));
    return create(fields_, lambdas_, std::move(rest), std::move(ev), std::move(co));
}

} // namespace gauge2d
