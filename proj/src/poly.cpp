#include "gauge2d/poly.hpp"

#include <algorithm>
#include <map>

namespace gauge2d {

namespace {

std::strong_ordering var_cmp(const Var& a, const Var& b)
{
    if (a < b) return std::strong_ordering::less;
    if (b < a) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rat rat_gcd(const Rat& a, const Rat& b)
{
    // gcd(p1/q1, p2/q2) = gcd(p1, p2) / lcm(q1, q2), both inputs positive.
    mpz_class num, den;
    mpz_gcd(num.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
    Rat r(num, den);
    r.canonicalize();
    return r;
}

} // namespace

Monomial Monomial::variable(const Var& v, int exp)
{
    Monomial m;
    if (exp != 0)
        m.factors_.emplace_back(v, exp);
    return m;
}

int Monomial::degree(const Var& v) const
{
    for (const auto& [var, exp] : factors_)
        if (var == v)
            return exp;
    return 0;
}

int Monomial::total_degree() const
{
    int d = 0;
    for (const auto& [var, exp] : factors_)
        d += exp;
    return d;
}

Monomial Monomial::times(const Monomial& other) const
{
    Monomial out;
    auto a = factors_.begin(), b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
        if (b == other.factors_.end()) {
            out.factors_.push_back(*a++);
        } else if (a == factors_.end()) {
            out.factors_.push_back(*b++);
        } else if (a->first == b->first) {
            int e = a->second + b->second;
            if (e != 0)
                out.factors_.emplace_back(a->first, e);
            ++a, ++b;
        } else if (b->first < a->first) { // descending order: greater var first
            out.factors_.push_back(*a++);
        } else {
            out.factors_.push_back(*b++);
        }
    }
    return out;
}

std::optional<Monomial> Monomial::divide(const Monomial& other) const
{
    Monomial out;
    auto a = factors_.begin();
    for (const auto& [var, exp] : other.factors_) {
        while (a != factors_.end() && var < a->first)
            out.factors_.push_back(*a++);
        if (a == factors_.end() || !(a->first == var) || a->second < exp)
            return std::nullopt;
        if (a->second > exp)
            out.factors_.emplace_back(var, a->second - exp);
        ++a;
    }
    while (a != factors_.end())
        out.factors_.push_back(*a++);
    return out;
}

Monomial Monomial::gcd(const Monomial& other) const
{
    Monomial out;
    auto a = factors_.begin(), b = other.factors_.begin();
    while (a != factors_.end() && b != other.factors_.end()) {
        if (a->first == b->first) {
            out.factors_.emplace_back(a->first, std::min(a->second, b->second));
            ++a, ++b;
        } else if (b->first < a->first) {
            ++a;
        } else {
            ++b;
        }
    }
    return out;
}

std::strong_ordering Monomial::cmp(const Monomial& a, const Monomial& b)
{
    auto i = a.factors_.begin(), j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
        if (!(i->first == j->first)) {
            // The side holding the greater variable has positive exponent on
            // it while the other side has zero, so it is the greater monomial.
            return var_cmp(j->first, i->first) == std::strong_ordering::less
                       ? std::strong_ordering::greater
                       : std::strong_ordering::less;
        }
        if (i->second != j->second)
            return i->second <=> j->second;
        ++i, ++j;
    }
    if (i != a.factors_.end()) return std::strong_ordering::greater;
    if (j != b.factors_.end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

Poly Poly::constant(const Rat& c)
{
    Poly p;
    if (c != 0)
        p.terms_.emplace_back(Monomial(), c);
    return p;
}

Poly Poly::variable(const Var& v, int exp)
{
    Poly p;
    p.terms_.emplace_back(Monomial::variable(v, exp), Rat(1));
    return p;
}

Poly Poly::term(const Rat& c, const Monomial& m)
{
    Poly p;
    if (c != 0)
        p.terms_.emplace_back(m, c);
    return p;
}

Poly Poly::from_terms(std::vector<std::pair<Monomial, Rat>> terms)
{
    Poly p;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

bool Poly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.front().first.is_unit());
}

Rat Poly::constant_coeff() const
{
    if (!terms_.empty() && terms_.back().first.is_unit())
        return terms_.back().second;
    return Rat(0);
}

int Poly::degree(const Var& v) const
{
    int d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.degree(v));
    return d;
}

std::set<Var> Poly::variables() const
{
    std::set<Var> vars;
    for (const auto& [m, c] : terms_)
        for (const auto& [var, exp] : m.factors())
            vars.insert(var);
    return vars;
}

void Poly::normalize()
{
    std::sort(terms_.begin(), terms_.end(), [](const auto& a, const auto& b) {
        return Monomial::cmp(a.first, b.first) == std::strong_ordering::greater;
    });
    std::vector<std::pair<Monomial, Rat>> merged;
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().first == t.first)
            merged.back().second += t.second;
        else
            merged.push_back(std::move(t));
        if (!merged.empty() && merged.back().second == 0)
            merged.pop_back();
    }
    terms_ = std::move(merged);
}

Poly Poly::operator-() const
{
    Poly out = *this;
    for (auto& [m, c] : out.terms_)
        c = -c;
    return out;
}

Poly Poly::operator+(const Poly& other) const
{
    Poly out;
    auto a = terms_.begin(), b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
        if (b == other.terms_.end()) {
            out.terms_.push_back(*a++);
        } else if (a == terms_.end()) {
            out.terms_.push_back(*b++);
        } else {
            auto ord = Monomial::cmp(a->first, b->first);
            if (ord == std::strong_ordering::greater) {
                out.terms_.push_back(*a++);
            } else if (ord == std::strong_ordering::less) {
                out.terms_.push_back(*b++);
            } else {
                Rat c = a->second + b->second;
                if (c != 0)
                    out.terms_.emplace_back(a->first, c);
                ++a, ++b;
            }
        }
    }
    return out;
}

Poly Poly::operator-(const Poly& other) const { return *this + (-other); }

Poly Poly::operator*(const Poly& other) const
{
    Poly out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_)
            out.terms_.emplace_back(ma.times(mb), ca * cb);
    out.normalize();
    return out;
}

Poly Poly::scaled(const Rat& c) const
{
    if (c == 0)
        return Poly();
    Poly out = *this;
    for (auto& [m, coeff] : out.terms_)
        coeff *= c;
    return out;
}

Poly Poly::pow(int n) const
{
    if (n < 0)
        throw std::invalid_argument("negative power of a polynomial");
    Poly out = Poly::constant(1);
    for (int i = 0; i < n; ++i)
        out = out * *this;
    return out;
}

Poly Poly::partial(const Var& v) const
{
    Poly out;
    for (const auto& [m, c] : terms_) {
        int e = m.degree(v);
        if (e == 0)
            continue;
        auto reduced = m.divide(Monomial::variable(v));
        out.terms_.emplace_back(*reduced, c * e);
    }
    out.normalize();
    return out;
}

Poly Poly::substituted(const Var& v, const Rat& value) const
{
    Poly out;
    for (const auto& [m, c] : terms_) {
        int e = m.degree(v);
        if (e == 0) {
            out.terms_.emplace_back(m, c);
            continue;
        }
        Rat scale = c;
        for (int i = 0; i < e; ++i)
            scale *= value;
        if (scale != 0)
            out.terms_.emplace_back(*m.divide(Monomial::variable(v, e)), scale);
    }
    out.normalize();
    return out;
}

Rat Poly::content() const
{
    if (terms_.empty())
        return Rat(1);
    Rat g(0);
    for (const auto& [m, c] : terms_)
        g = rat_gcd(g == 0 ? abs(c) : g, abs(c));
    return g;
}

std::optional<Poly> Poly::try_divide(const Poly& num, const Poly& den)
{
    if (den.is_zero())
        return std::nullopt;
    if (den.is_constant()) {
        Rat inv = 1 / den.leading_coeff();
        return num.scaled(inv);
    }
    Poly q, r = num;
    while (!r.is_zero()) {
        auto m = r.leading_monomial().divide(den.leading_monomial());
        if (!m)
            return std::nullopt;
        Poly t = Poly::term(r.leading_coeff() / den.leading_coeff(), *m);
        q = q + t;
        r = r - t * den;
    }
    return q;
}

namespace {

Poly primitive_pos(const Poly& p)
{
    if (p.is_zero())
        return p;
    Poly out = p.scaled(1 / p.content());
    if (out.leading_coeff() < 0)
        out = out.scaled(Rat(-1));
    return out;
}

// Power product dividing every term.
Monomial monomial_content(const Poly& p)
{
    Monomial g = p.terms().front().first;
    for (const auto& [m, c] : p.terms()) {
        if (g.is_unit())
            break;
        g = g.gcd(m);
    }
    return g;
}

// Max absolute value of the integer coefficients.
mpz_class int_height(const Poly& p)
{
    mpz_class h = 0;
    for (const auto& [m, c] : p.terms()) {
        mpz_class a = abs(c.get_num());
        if (a > h)
            h = a;
    }
    return h;
}

// Balanced residue in [-xi/2, xi/2).
mpz_class smod(const mpz_class& a, const mpz_class& xi)
{
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), xi.get_mpz_t());
    if (r * 2 >= xi)
        r -= xi;
    return r;
}

Poly eval_at(const Poly& p, const Var& v, const mpz_class& xi)
{
    std::vector<mpz_class> pow(p.degree(v) + 1);
    pow[0] = 1;
    for (std::size_t i = 1; i < pow.size(); ++i)
        pow[i] = pow[i - 1] * xi;
    std::vector<std::pair<Monomial, Rat>> terms;
    terms.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) {
        int e = m.degree(v);
        terms.emplace_back(e == 0 ? m : *m.divide(Monomial::variable(v, e)),
                           c * Rat(pow[e]));
    }
    return Poly::from_terms(std::move(terms));
}

// Evaluation-homomorphism gcd on primitive integer polynomials: substitute a
// large integer for the top variable, recurse on the image, then read the
// variable back off the xi-adic digits of the recursive gcd.  A candidate
// counts only if it divides both inputs exactly, so failure is always safe;
// retries grow xi past whatever coefficient collision caused the miss.
std::optional<Poly> heugcd(const Poly& f, const Poly& g)
{
    if (f.is_constant() || g.is_constant()) {
        mpz_class r;
        mpz_gcd(r.get_mpz_t(), f.content().get_num_mpz_t(),
                g.content().get_num_mpz_t());
        return Poly::constant(Rat(r));
    }
    Var v = std::max(*f.variables().rbegin(), *g.variables().rbegin());
    int deg = std::max(f.degree(v), g.degree(v));
    mpz_class xi = 2 * std::min(int_height(f), int_height(g)) + 29;
    for (int attempt = 0; attempt < 6; ++attempt) {
        if ((deg + 1) * mpz_sizeinbase(xi.get_mpz_t(), 2) > (1u << 20))
            return std::nullopt;
        Poly F = eval_at(f, v, xi);
        Poly G = eval_at(g, v, xi);
        if (!F.is_zero() && !G.is_zero()) {
            if (auto rec = heugcd(F, G)) {
                std::vector<std::pair<Monomial, Rat>> acc;
                Poly gam = *rec;
                for (int k = 0; !gam.is_zero(); ++k) {
                    Monomial vk = Monomial::variable(v, k);
                    std::vector<std::pair<Monomial, Rat>> rest;
                    for (const auto& [m, c] : gam.terms()) {
                        mpz_class d = smod(c.get_num(), xi);
                        if (d != 0)
                            acc.emplace_back(m.times(vk), Rat(d));
                        mpz_class up = (c.get_num() - d) / xi;
                        if (up != 0)
                            rest.emplace_back(m, Rat(up));
                    }
                    gam = Poly::from_terms(std::move(rest));
                }
                Poly h = primitive_pos(Poly::from_terms(std::move(acc)));
                if (!h.is_zero() && Poly::try_divide(f, h) && Poly::try_divide(g, h))
                    return h;
            }
        }
        xi = xi * 73794 / 27011;
    }
    return std::nullopt;
}

} // namespace

Poly Poly::gcd(const Poly& a, const Poly& b)
{
    if (a.is_zero())
        return primitive_pos(b);
    if (b.is_zero())
        return primitive_pos(a);
    if (a.is_constant() || b.is_constant())
        return Poly::constant(Rat(1));

    // The shared power product comes off first: cheap and frequent.
    Monomial mc = monomial_content(a).gcd(monomial_content(b));
    Poly unit_mc = Poly::term(Rat(1), mc);
    Poly fa = primitive_pos(mc.is_unit() ? a : *try_divide(a, unit_mc));
    Poly fb = primitive_pos(mc.is_unit() ? b : *try_divide(b, unit_mc));
    if (fa == fb)
        return unit_mc * fa;
    auto h = heugcd(fa, fb);
    return h ? unit_mc * *h : unit_mc;
}

std::optional<Poly> Poly::common_factor(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero() || a.is_constant() || b.is_constant())
        return std::nullopt;
    Poly g = gcd(a, b);
    if (g.is_constant())
        return std::nullopt;
    return g;
}

} // namespace gauge2d
