#include "gauge2d/ore.hpp"

#include <stdexcept>

namespace gauge2d {

namespace {

Rat binom(int n, int k)
{
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rat(b);
}

SystemPtr ambient(const OreOp& a, const OreOp& b)
{
    if (a.system() && b.system() && a.system() != b.system())
        throw std::invalid_argument("operator arithmetic across different systems");
    return a.system() ? a.system() : b.system();
}

} // namespace

OreOp OreOp::zero(SystemPtr sys)
{
    OreOp op;
    op.sys_ = std::move(sys);
    return op;
}

OreOp OreOp::coeff(FieldElem c, SystemPtr sys) { return monomial(std::move(c), 0, 0, std::move(sys)); }

OreOp OreOp::monomial(FieldElem c, int p, int q, SystemPtr sys)
{
    if (p < 0 || q < 0)
        throw std::invalid_argument("negative derivative power");
    OreOp op;
    op.sys_ = std::move(sys);
    if (!c.is_zero())
        op.terms_.emplace(std::make_pair(p, q), std::move(c));
    return op;
}

bool OreOp::is_spatial() const
{
    return terms_.empty() || terms_.rbegin()->first.first == 0;
}

int OreOp::degree() const
{
    if (terms_.empty())
        return -1;
    return terms_.rbegin()->first.first; // map keys ordered by (p, q)
}

int OreOp::order() const
{
    int q = -1;
    for (const auto& [pq, c] : terms_)
        q = std::max(q, pq.second);
    return q;
}

FieldElem OreOp::coefficient(int p, int q) const
{
    auto it = terms_.find({p, q});
    return it == terms_.end() ? FieldElem::zero() : it->second;
}

std::size_t OreOp::coefficient_term_count() const
{
    std::size_t n = 0;
    for (const auto& [pq, c] : terms_)
        n += c.term_count();
    return n;
}

void OreOp::insert_term(int p, int q, const FieldElem& c)
{
    if (c.is_zero())
        return;
    auto [it, fresh] = terms_.emplace(std::make_pair(p, q), c);
    if (!fresh) {
        it->second = it->second + c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

OreOp OreOp::operator-() const
{
    OreOp out = *this;
    for (auto& [pq, c] : out.terms_)
        c = -c;
    return out;
}

OreOp OreOp::operator+(const OreOp& other) const
{
    OreOp out = *this;
    out.sys_ = ambient(*this, other);
    for (const auto& [pq, c] : other.terms_)
        out.insert_term(pq.first, pq.second, c);
    return out;
}

OreOp OreOp::operator-(const OreOp& other) const { return *this + (-other); }

OreOp OreOp::operator*(const OreOp& other) const
{
    SystemPtr sys = ambient(*this, other);
    OreOp out;
    out.sys_ = sys;
    if (terms_.empty() || other.terms_.empty())
        return out;

    int max_p = 0, max_q = 0;
    for (const auto& [pq, c] : terms_) {
        max_p = std::max(max_p, pq.first);
        max_q = std::max(max_q, pq.second);
    }

    // One derivative table per right-hand coefficient:
    // derivs[i][j] = d^i dbar^j of the coefficient.
    for (const auto& [pq2, c2] : other.terms_) {
        std::vector<std::vector<FieldElem>> derivs(max_p + 1);
        derivs[0].resize(max_q + 1);
        derivs[0][0] = c2;
        for (int j = 1; j <= max_q; ++j)
            derivs[0][j] = gauge2d::dbar(derivs[0][j - 1], *sys);
        for (int i = 1; i <= max_p; ++i) {
            derivs[i].resize(max_q + 1);
            for (int j = 0; j <= max_q; ++j)
                derivs[i][j] = gauge2d::dtime(derivs[i - 1][j], *sys);
        }
        for (const auto& [pq1, c1] : terms_) {
            const auto [p1, q1] = pq1;
            const auto [p2, q2] = pq2;
            // D^p1 Dbar^q1 f = sum_{i,j} C(p1,i) C(q1,j) (d^i dbar^j f) D^(p1-i) Dbar^(q1-j)
            for (int i = 0; i <= p1; ++i) {
                for (int j = 0; j <= q1; ++j) {
                    FieldElem piece = derivs[i][j];
                    if (piece.is_zero())
                        continue;
                    Rat scale = binom(p1, i) * binom(q1, j);
                    out.insert_term(p1 + p2 - i, q1 + q2 - j,
                                    c1 * piece * FieldElem::constant(scale));
                }
            }
        }
    }
    return out;
}

OreOp OreOp::scaled(const FieldElem& c) const
{
    OreOp out;
    out.sys_ = sys_;
    if (c.is_zero())
        return out;
    for (const auto& [pq, coeff] : terms_)
        out.terms_.emplace(pq, c * coeff);
    return out;
}

bool OreOp::operator==(const OreOp& other) const
{
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() && b != other.terms_.end()) {
        if (a->first != b->first)
            return false; // stored coefficients are never zero
        if (!(a->second == b->second))
            return false;
        ++a, ++b;
    }
    return a == terms_.end() && b == other.terms_.end();
}

FieldElem OreOp::apply(const FieldElem& a) const
{
    FieldElem out;
    for (const auto& [pq, c] : terms_)
        out = out + c * dtime_pow(dbar_pow(a, pq.second, *sys_), pq.first, *sys_);
    return out;
}

OreOp OreOp::transpose() const
{
    OreOp out = OreOp::zero(sys_);
    for (const auto& [pq, c] : terms_) {
        const auto [p, q] = pq;
        OreOp moved = OreOp::monomial(FieldElem::one(), p, q, sys_) * OreOp::coeff(c, sys_);
        if ((p + q) % 2 != 0)
            moved = -moved;
        out = out + moved;
    }
    return out;
}

OreOp OreOp::dtime_coeffs() const
{
    OreOp out = OreOp::zero(sys_);
    for (const auto& [pq, c] : terms_)
        out.insert_term(pq.first, pq.second, gauge2d::dtime(c, *sys_));
    return out;
}

std::map<int, OreOp> OreOp::by_degree() const
{
    std::map<int, OreOp> out;
    for (const auto& [pq, c] : terms_) {
        auto [it, fresh] = out.try_emplace(pq.first, OreOp::zero(sys_));
        it->second.insert_term(0, pq.second, c);
    }
    return out;
}

namespace {

void require_spatial(const OreOp& op, const char* side)
{
    if (!op.is_spatial())
        throw std::invalid_argument(std::string("euclidean division needs spatial operators: ")
                                    + side + " carries a D-power");
}

FieldElem spatial_leading(const OreOp& op)
{
    return op.coefficient(0, op.order());
}

} // namespace

OreDivision divide_right(const OreOp& a, const OreOp& b)
{
    require_spatial(a, "dividend");
    require_spatial(b, "divisor");
    if (b.is_zero())
        throw DivisionByZero("euclidean division by the zero operator");
    SystemPtr sys = a.system() ? a.system() : b.system();
    OreOp q = OreOp::zero(sys), r = a;
    const int ob = b.order();
    const FieldElem lb = spatial_leading(b);
    while (!r.is_zero() && r.order() >= ob) {
        OreOp t = OreOp::monomial(spatial_leading(r) / lb, 0, r.order() - ob, sys);
        q = q + t;
        r = r - t * b;
    }
    return {q, r};
}

OreDivision divide_left(const OreOp& a, const OreOp& b)
{
    require_spatial(a, "dividend");
    require_spatial(b, "divisor");
    if (b.is_zero())
        throw DivisionByZero("euclidean division by the zero operator");
    SystemPtr sys = a.system() ? a.system() : b.system();
    OreOp q = OreOp::zero(sys), r = a;
    const int ob = b.order();
    const FieldElem lb = spatial_leading(b);
    while (!r.is_zero() && r.order() >= ob) {
        OreOp t = OreOp::monomial(spatial_leading(r) / lb, 0, r.order() - ob, sys);
        q = q + t;
        r = r - b * t;
    }
    return {q, r};
}

} // namespace gauge2d
