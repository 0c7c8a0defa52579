#include "gauge2d/fieldelem.hpp"

#include <algorithm>
#include <compare>

namespace gauge2d {

namespace {

// Total order on polynomials, used only to keep factor lists sorted.
bool poly_less(const Poly& a, const Poly& b)
{
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    std::size_t n = std::min(ta.size(), tb.size());
    for (std::size_t i = 0; i < n; ++i) {
        auto c = Monomial::cmp(ta[i].first, tb[i].first);
        if (c != std::strong_ordering::equal)
            return c == std::strong_ordering::less;
        if (ta[i].second != tb[i].second)
            return ta[i].second < tb[i].second;
    }
    return ta.size() < tb.size();
}

Rat rat_pow(const Rat& base, int e)
{
    Rat out(1);
    for (int i = 0; i < e; ++i)
        out *= base;
    return out;
}

Monomial monomial_content(const Poly& p)
{
    Monomial m;
    bool first = true;
    for (const auto& [mon, c] : p.terms()) {
        m = first ? mon : m.gcd(mon);
        first = false;
        if (m.is_unit())
            break;
    }
    return m;
}

} // namespace

FieldElem::FieldElem(Poly num, Poly den) : num_(std::move(num))
{
    if (den.is_zero())
        throw DivisionByZero("field element with zero denominator");
    den_.emplace_back(std::move(den), 1);
    canonicalize();
}

FieldElem::FieldElem(Poly num, DenFactors den) : num_(std::move(num)), den_(std::move(den))
{
    canonicalize();
}

void FieldElem::canonicalize()
{
    for (const auto& [p, e] : den_)
        if (p.is_zero())
            throw DivisionByZero("field element with zero denominator");
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (bool again = true; again;) {
        again = false;
        // Normalize bases: split off monomial content as variable factors,
        // make each base primitive with a positive leading coefficient, and
        // absorb the scales into the numerator.
        DenFactors bases;
        for (auto& [p, e] : den_) {
            if (e <= 0)
                continue;
            Poly base = std::move(p);
            Monomial m = monomial_content(base);
            if (!m.is_unit()) {
                for (const auto& [v, k] : m.factors())
                    bases.emplace_back(Poly::variable(v), k * e);
                base = *Poly::try_divide(base, Poly::term(Rat(1), m));
            }
            Rat c = base.content();
            if (base.leading_coeff() < 0)
                c = -c;
            if (c != 1) {
                base = base.scaled(1 / c);
                num_ = num_.scaled(rat_pow(1 / c, e));
            }
            if (!base.is_constant())
                bases.emplace_back(std::move(base), e);
        }
        std::sort(bases.begin(), bases.end(),
                  [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
        den_.clear();
        for (auto& f : bases) {
            if (!den_.empty() && den_.back().first == f.first)
                den_.back().second += f.second;
            else
                den_.push_back(std::move(f));
        }
        // Cancel the numerator against each base by exact trial division.
        for (std::size_t i = 0; i < den_.size();) {
            while (den_[i].second > 0) {
                auto q = Poly::try_divide(num_, den_[i].first);
                if (!q)
                    break;
                num_ = std::move(*q);
                --den_[i].second;
            }
            if (den_[i].second == 0)
                den_.erase(den_.begin() + i);
            else
                ++i;
        }
        if (num_.is_constant())
            break;
        // Partial overlaps: split one base along its gcd with the numerator
        // and rerun the cheap passes.
        for (std::size_t i = 0; i < den_.size(); ++i) {
            const Poly& p = den_[i].first;
            Poly g = Poly::gcd(num_, p);
            if (g.is_constant())
                continue;
            num_ = *Poly::try_divide(num_, g);
            Poly rest = *Poly::try_divide(p, g);
            int e = den_[i].second;
            den_.erase(den_.begin() + i);
            if (!rest.is_constant())
                den_.emplace_back(std::move(rest), e);
            if (e > 1)
                den_.emplace_back(std::move(g), e - 1);
            again = true;
            break;
        }
    }
}

Poly FieldElem::den() const
{
    Poly out = Poly::constant(1);
    for (const auto& [p, e] : den_)
        out = out * p.pow(e);
    return out;
}

FieldElem FieldElem::operator-() const
{
    FieldElem out = *this;
    out.num_ = -out.num_;
    return out;
}

FieldElem FieldElem::operator+(const FieldElem& other) const
{
    if (is_zero())
        return other;
    if (other.is_zero())
        return *this;
    // Common denominator: union of the factor lists with maximal exponents;
    // each numerator picks up the factors its side is missing.
    DenFactors common;
    Poly cof_a = Poly::constant(1), cof_b = Poly::constant(1);
    std::size_t i = 0, j = 0;
    while (i < den_.size() || j < other.den_.size()) {
        bool take_a;
        if (i == den_.size())
            take_a = false;
        else if (j == other.den_.size())
            take_a = true;
        else if (den_[i].first == other.den_[j].first) {
            int ea = den_[i].second, eb = other.den_[j].second;
            int e = std::max(ea, eb);
            if (e > ea)
                cof_a = cof_a * den_[i].first.pow(e - ea);
            if (e > eb)
                cof_b = cof_b * den_[i].first.pow(e - eb);
            common.emplace_back(den_[i].first, e);
            ++i, ++j;
            continue;
        } else
            take_a = poly_less(den_[i].first, other.den_[j].first);
        if (take_a) {
            cof_b = cof_b * den_[i].first.pow(den_[i].second);
            common.push_back(den_[i]);
            ++i;
        } else {
            cof_a = cof_a * other.den_[j].first.pow(other.den_[j].second);
            common.push_back(other.den_[j]);
            ++j;
        }
    }
    return FieldElem(num_ * cof_a + other.num_ * cof_b, std::move(common));
}

FieldElem FieldElem::operator-(const FieldElem& other) const { return *this + (-other); }

FieldElem FieldElem::operator*(const FieldElem& other) const
{
    if (is_zero() || other.is_zero())
        return zero();
    DenFactors merged;
    std::size_t i = 0, j = 0;
    while (i < den_.size() || j < other.den_.size()) {
        if (i == den_.size())
            merged.push_back(other.den_[j++]);
        else if (j == other.den_.size())
            merged.push_back(den_[i++]);
        else if (den_[i].first == other.den_[j].first) {
            merged.emplace_back(den_[i].first, den_[i].second + other.den_[j].second);
            ++i, ++j;
        } else if (poly_less(den_[i].first, other.den_[j].first))
            merged.push_back(den_[i++]);
        else
            merged.push_back(other.den_[j++]);
    }
    return FieldElem(num_ * other.num_, std::move(merged));
}

FieldElem FieldElem::operator/(const FieldElem& other) const
{
    if (other.is_zero())
        throw DivisionByZero("division by zero field element");
    return *this * other.inverse();
}

FieldElem FieldElem::inverse() const
{
    if (is_zero())
        throw DivisionByZero("inverse of zero field element");
    return FieldElem(den(), DenFactors{{num_, 1}});
}

FieldElem FieldElem::pow(int n) const
{
    if (n < 0)
        return inverse().pow(-n);
    FieldElem out = one();
    for (int i = 0; i < n; ++i)
        out = out * *this;
    return out;
}

bool FieldElem::operator==(const FieldElem& other) const
{
    if (den_ == other.den_)
        return num_ == other.num_;
    return num_ * other.den() == other.num_ * den();
}

FieldElem FieldElem::partial(const Var& v) const
{
    // (n / prod p_i^{e_i})' = n' / prod p_i^{e_i}
    //                         - sum_i e_i n p_i' / (p_i^{e_i + 1} prod_{j != i} p_j^{e_j})
    FieldElem out(num_.partial(v), den_);
    for (std::size_t i = 0; i < den_.size(); ++i) {
        Poly dp = den_[i].first.partial(v);
        if (dp.is_zero())
            continue;
        DenFactors bumped = den_;
        bumped[i].second += 1;
        out = out + FieldElem((num_ * dp).scaled(Rat(-den_[i].second)), std::move(bumped));
    }
    return out;
}

FieldElem FieldElem::substituted(const std::string& param, const Rat& value) const
{
    Poly n = num_.substituted(Var(param), value);
    DenFactors d;
    for (const auto& [p, e] : den_) {
        Poly q = p.substituted(Var(param), value);
        if (q.is_zero())
            throw DivisionByZero("denominator vanishes under substitution of " + param);
        d.emplace_back(std::move(q), e);
    }
    return FieldElem(std::move(n), std::move(d));
}

std::set<Var> FieldElem::variables() const
{
    std::set<Var> vars = num_.variables();
    for (const auto& [p, e] : den_) {
        auto dv = p.variables();
        vars.insert(dv.begin(), dv.end());
    }
    return vars;
}

std::size_t FieldElem::term_count() const
{
    std::size_t out = num_.term_count();
    for (const auto& [p, e] : den_)
        out += p.term_count();
    return out;
}

} // namespace gauge2d
