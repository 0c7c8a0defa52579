#include "gauge2d/render.hpp"

namespace gauge2d {

namespace {

std::string apply_derivative(const std::string& name, int power, std::string inner)
{
    if (power == 0)
        return inner;
    return name + (power > 1 ? "^" + std::to_string(power) : "") + "(" + std::move(inner) + ")";
}

// One monomial without its coefficient, factors joined by '*'.
std::string render_factors(const Monomial& m, const CartanSystem& sys)
{
    std::string out;
    for (const auto& [v, exp] : m.factors()) {
        if (!out.empty())
            out += "*";
        out += render(v, sys);
        if (exp > 1)
            out += "^" + std::to_string(exp);
    }
    return out;
}

} // namespace

std::string render(const Var& v, const CartanSystem& sys)
{
    if (is_param(v))
        return std::get<std::string>(v);
    const JetCoord& j = std::get<JetCoord>(v);
    std::string out = apply_derivative("dbar", j.q, sys.coord_name(j.kind, j.index));
    return apply_derivative("d", j.p, std::move(out));
}

std::string render(const Poly& p, const CartanSystem& sys)
{
    if (p.is_zero())
        return "0";
    std::string out;
    for (const auto& [mono, c] : p.terms()) {
        bool neg = c < 0;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        Rat mag = neg ? Rat(-c) : c;
        std::string factors = render_factors(mono, sys);
        if (factors.empty())
            out += mag.get_str();
        else if (mag == 1)
            out += factors;
        else
            out += mag.get_str() + "*" + factors;
    }
    return out;
}

std::string render(const FieldElem& f, const CartanSystem& sys)
{
    if (f.den_factors().empty())
        return render(f.num(), sys);
    return "(" + render(f.num(), sys) + ")/(" + render(f.den(), sys) + ")";
}

std::string describe(const ValidationReport& report, const CartanSystem& sys)
{
    if (report.ok())
        return "";
    std::string msg = "the declared derivations are inconsistent:";
    for (const std::string& s : report.structural)
        msg += "\n  " + s;
    for (const CommutativityFailure& f : report.failures)
        msg += "\n  derivatives disagree at " + render(Var(f.jet), sys) + " by "
               + render(f.residual, sys);
    return msg;
}

std::string render(const OreOp& op)
{
    if (op.is_zero())
        return "0";
    const CartanSystem& sys = *op.system();
    std::string out;
    for (auto it = op.terms().rbegin(); it != op.terms().rend(); ++it) {
        const auto& [p, q] = it->first;
        const FieldElem& c = it->second;
        std::string mono;
        if (p > 0)
            mono += p > 1 ? "D^" + std::to_string(p) : "D";
        if (q > 0) {
            if (!mono.empty())
                mono += "*";
            mono += q > 1 ? "Dbar^" + std::to_string(q) : "Dbar";
        }
        std::string term;
        if (mono.empty())
            term = c.num().term_count() > 1 ? "(" + render(c, sys) + ")" : render(c, sys);
        else if (c == FieldElem::one())
            term = mono;
        else if (c == -FieldElem::one())
            term = "-" + mono;
        else
            term = "(" + render(c, sys) + ")*" + mono;
        out += out.empty() ? term : " + " + term;
    }
    return out;
}

} // namespace gauge2d
