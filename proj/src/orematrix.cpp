#include "gauge2d/orematrix.hpp"

#include "gauge2d/derivation.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace gauge2d {

OreMatrix::OreMatrix(int rows, int cols, SystemPtr sys)
    : rows_(rows), cols_(cols), sys_(std::move(sys)),
      entries_(static_cast<std::size_t>(rows) * cols, OreOp::zero(sys_))
{
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("negative matrix dimension");
}

OreMatrix OreMatrix::identity(int n, SystemPtr sys)
{
    OreMatrix out(n, n, sys);
    for (int i = 0; i < n; ++i)
        out.set(i, i, OreOp::identity(out.sys_));
    return out;
}

bool OreMatrix::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const OreOp& e) { return e.is_zero(); });
}

bool OreMatrix::is_spatial() const
{
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const OreOp& e) { return e.is_spatial(); });
}

OreMatrix OreMatrix::operator-() const
{
    OreMatrix out = *this;
    for (auto& e : out.entries_)
        e = -e;
    return out;
}

OreMatrix OreMatrix::operator+(const OreMatrix& other) const
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix addition with mismatched shapes");
    OreMatrix out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] = entries_[i] + other.entries_[i];
    return out;
}

OreMatrix OreMatrix::operator-(const OreMatrix& other) const { return *this + (-other); }

OreMatrix OreMatrix::operator*(const OreMatrix& other) const
{
    if (cols_ != other.rows_)
        throw std::invalid_argument("matrix product with mismatched shapes");
    OreMatrix out(rows_, other.cols_, sys_ ? sys_ : other.sys_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < other.cols_; ++c) {
            OreOp acc = OreOp::zero(out.sys_);
            for (int k = 0; k < cols_; ++k)
                acc = acc + at(r, k) * other.at(k, c);
            out.set(r, c, std::move(acc));
        }
    return out;
}

bool OreMatrix::operator==(const OreMatrix& other) const
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] != other.entries_[i])
            return false;
    return true;
}

OreMatrix OreMatrix::row(int r) const
{
    OreMatrix out(1, cols_, sys_);
    for (int c = 0; c < cols_; ++c)
        out.set(0, c, at(r, c));
    return out;
}

OreMatrix OreMatrix::vstack(const OreMatrix& top, const OreMatrix& bottom)
{
    if (top.cols_ != bottom.cols_)
        throw std::invalid_argument("vstack with mismatched column counts");
    OreMatrix out(top.rows_ + bottom.rows_, top.cols_, top.sys_ ? top.sys_ : bottom.sys_);
    for (int r = 0; r < top.rows_; ++r)
        for (int c = 0; c < top.cols_; ++c)
            out.set(r, c, top.at(r, c));
    for (int r = 0; r < bottom.rows_; ++r)
        for (int c = 0; c < top.cols_; ++c)
            out.set(top.rows_ + r, c, bottom.at(r, c));
    return out;
}

OreMatrix OreMatrix::formal_transpose() const
{
    OreMatrix out(cols_, rows_, sys_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            out.set(c, r, at(r, c).transpose());
    return out;
}

namespace {

void require_spatial_matrix(const OreMatrix& M)
{
    if (!M.is_spatial())
        throw std::invalid_argument("matrix elimination needs spatial entries");
}

// Elimination state with tracked unimodular factors: U*M*V = D throughout,
// Uinv and Vinv updated by the inverse of every elementary operation.
struct Elim {
    OreMatrix D, U, Uinv, V, Vinv;

    explicit Elim(const OreMatrix& M)
        : D(M),
          U(OreMatrix::identity(M.rows(), M.system())),
          Uinv(OreMatrix::identity(M.rows(), M.system())),
          V(OreMatrix::identity(M.cols(), M.system())),
          Vinv(OreMatrix::identity(M.cols(), M.system()))
    {
    }

    SystemPtr sys() const { return D.system(); }

    void row_swap(int i, int j)
    {
        if (i == j)
            return;
        for (int c = 0; c < D.cols(); ++c) {
            OreOp t = D.at(i, c);
            D.set(i, c, D.at(j, c));
            D.set(j, c, std::move(t));
        }
        for (int c = 0; c < U.cols(); ++c) {
            OreOp t = U.at(i, c);
            U.set(i, c, U.at(j, c));
            U.set(j, c, std::move(t));
        }
        for (int r = 0; r < Uinv.rows(); ++r) {
            OreOp t = Uinv.at(r, i);
            Uinv.set(r, i, Uinv.at(r, j));
            Uinv.set(r, j, std::move(t));
        }
    }

    // row_i -= q * row_j
    void row_axpy(int i, int j, const OreOp& q)
    {
        if (q.is_zero())
            return;
        for (int c = 0; c < D.cols(); ++c)
            D.set(i, c, D.at(i, c) - q * D.at(j, c));
        for (int c = 0; c < U.cols(); ++c)
            U.set(i, c, U.at(i, c) - q * U.at(j, c));
        for (int r = 0; r < Uinv.rows(); ++r)
            Uinv.set(r, j, Uinv.at(r, j) + Uinv.at(r, i) * q);
    }

    // row_i = u * row_i for a unit coefficient u
    void row_scale(int i, const FieldElem& u)
    {
        OreOp uinv = OreOp::coeff(u.inverse(), sys());
        for (int c = 0; c < D.cols(); ++c)
            D.set(i, c, D.at(i, c).scaled(u));
        for (int c = 0; c < U.cols(); ++c)
            U.set(i, c, U.at(i, c).scaled(u));
        for (int r = 0; r < Uinv.rows(); ++r)
            Uinv.set(r, i, Uinv.at(r, i) * uinv);
    }

    void col_swap(int i, int j)
    {
        if (i == j)
            return;
        for (int r = 0; r < D.rows(); ++r) {
            OreOp t = D.at(r, i);
            D.set(r, i, D.at(r, j));
            D.set(r, j, std::move(t));
        }
        for (int r = 0; r < V.rows(); ++r) {
            OreOp t = V.at(r, i);
            V.set(r, i, V.at(r, j));
            V.set(r, j, std::move(t));
        }
        for (int c = 0; c < Vinv.cols(); ++c) {
            OreOp t = Vinv.at(i, c);
            Vinv.set(i, c, Vinv.at(j, c));
            Vinv.set(j, c, std::move(t));
        }
    }

    // col_c -= col_d * q
    void col_axpy(int c, int d, const OreOp& q)
    {
        if (q.is_zero())
            return;
        for (int r = 0; r < D.rows(); ++r)
            D.set(r, c, D.at(r, c) - D.at(r, d) * q);
        for (int r = 0; r < V.rows(); ++r)
            V.set(r, c, V.at(r, c) - V.at(r, d) * q);
        for (int k = 0; k < Vinv.cols(); ++k)
            Vinv.set(d, k, Vinv.at(d, k) + q * Vinv.at(c, k));
    }

    // col_c = col_c * u for a unit coefficient u
    void col_scale(int c, const FieldElem& u)
    {
        OreOp uop = OreOp::coeff(u, sys());
        FieldElem ui = u.inverse();
        for (int r = 0; r < D.rows(); ++r)
            D.set(r, c, D.at(r, c) * uop);
        for (int r = 0; r < V.rows(); ++r)
            V.set(r, c, V.at(r, c) * uop);
        for (int k = 0; k < Vinv.cols(); ++k)
            Vinv.set(c, k, Vinv.at(c, k).scaled(ui));
    }

    // Scale row i by the unit that clears every denominator and divides out
    // the common polynomial factor of the coefficients.  Keeping working rows
    // primitive is what bounds coefficient growth in the remainder chains,
    // the matrix analogue of a primitive pseudo-remainder sequence.
    void row_make_primitive(int i)
    {
        std::vector<std::pair<Poly, int>> lcm;
        for (int c = 0; c < D.cols(); ++c)
            for (const auto& [pq, coeff] : D.at(i, c).terms())
                for (const auto& [base, exp] : coeff.den_factors()) {
                    bool found = false;
                    for (auto& [b, e] : lcm)
                        if (b == base) {
                            e = std::max(e, exp);
                            found = true;
                            break;
                        }
                    if (!found)
                        lcm.emplace_back(base, exp);
                }
        Poly common = Poly::constant(Rat(1));
        for (const auto& [base, exp] : lcm)
            common = common * base.pow(exp);
        Poly content = Poly::zero();
        for (int c = 0; c < D.cols() && !content.is_constant(); ++c)
            for (const auto& [pq, coeff] : D.at(i, c).terms()) {
                // Numerator after clearing: num times the lcm cofactor.
                Poly cleared = coeff.num();
                for (const auto& [base, exp] : lcm) {
                    int have = 0;
                    for (const auto& [b, e] : coeff.den_factors())
                        if (b == base) {
                            have = e;
                            break;
                        }
                    if (exp > have)
                        cleared = cleared * base.pow(exp - have);
                }
                content = Poly::gcd(content, cleared);
                if (content.is_constant())
                    break;
            }
        if (content.is_zero())
            return; // zero row
        bool unit_common = common.is_constant() && common.constant_coeff() == 1;
        bool unit_content = content.is_constant();
        if (unit_common && unit_content)
            return;
        row_scale(i, FieldElem(common, unit_content ? Poly::constant(Rat(1)) : content));
    }

    // One leading-term kill of D(r, pos) against the pivot, then restrip the
    // row; repeats until the entry's order falls below the pivot's.
    void reduce_row_entry(int r, int pos)
    {
        while (!D.at(r, pos).is_zero()) {
            const OreOp& b = D.at(pos, pos);
            const OreOp& a = D.at(r, pos);
            int k = a.order() - b.order();
            if (k < 0)
                break;
            FieldElem q = a.coefficient(0, a.order()) / b.coefficient(0, b.order());
            row_axpy(r, pos, OreOp::monomial(std::move(q), 0, k, sys()));
            row_make_primitive(r);
        }
    }

    // Same against the pivot row entry D(pos, c); fill-in lands only in row
    // pos because the pivot column below pos is already clear.
    void reduce_col_entry(int c, int pos)
    {
        while (!D.at(pos, c).is_zero()) {
            const OreOp& b = D.at(pos, pos);
            const OreOp& a = D.at(pos, c);
            int k = a.order() - b.order();
            if (k < 0)
                break;
            FieldElem q = a.coefficient(0, a.order()) / b.coefficient(0, b.order());
            col_axpy(c, pos, OreOp::monomial(std::move(q), 0, k, sys()));
            row_make_primitive(pos);
        }
    }

    // Diagonalizes the submatrix with rows and columns >= start; returns the
    // first untouched diagonal position (start + number of pivots found).
    int diagonalize(int start)
    {
        for (int r = start; r < D.rows(); ++r)
            row_make_primitive(r);
        int pos = start;
        while (true) {
            int br = -1, bc = -1;
            std::tuple<int, std::size_t, int, int> best{};
            for (int r = pos; r < D.rows(); ++r)
                for (int c = pos; c < D.cols(); ++c) {
                    const OreOp& e = D.at(r, c);
                    if (e.is_zero())
                        continue;
                    std::tuple<int, std::size_t, int, int> key{e.order(), e.coefficient_term_count(), r, c};
                    if (br < 0 || key < best) {
                        best = key;
                        br = r;
                        bc = c;
                    }
                }
            if (br < 0)
                break;
            row_swap(pos, br);
            col_swap(pos, bc);
            // Euclidean clearing of the pivot column and row; a nonzero
            // remainder becomes the new, strictly smaller pivot.
            for (bool dirty = true; dirty;) {
                dirty = false;
                for (int r = pos + 1; r < D.rows(); ++r) {
                    if (D.at(r, pos).is_zero())
                        continue;
                    reduce_row_entry(r, pos);
                    if (!D.at(r, pos).is_zero()) {
                        row_swap(pos, r);
                        dirty = true;
                    }
                }
                if (dirty)
                    continue;
                for (int c = pos + 1; c < D.cols(); ++c) {
                    if (D.at(pos, c).is_zero())
                        continue;
                    reduce_col_entry(c, pos);
                    if (!D.at(pos, c).is_zero()) {
                        col_swap(pos, c);
                        dirty = true;
                        break;
                    }
                }
            }
            ++pos;
        }
        return pos;
    }
};

// Jet coordinates with nonzero dbar, tried as mixing coefficients when an
// inner diagonal entry still has positive order.
std::vector<FieldElem> mixing_candidates(const SystemPtr& sys, int bound)
{
    std::vector<FieldElem> out;
    if (!sys)
        return out;
    int na = sys->n() - sys->m();
    for (int a = 0; a < na; ++a)
        for (int q = 0; q <= bound; ++q)
            out.push_back(FieldElem::coordinate(make_jet(JetKind::PhiA, a, 0, q)));
    for (int al = 0; al < sys->l(); ++al)
        for (int p = 0; p <= bound; ++p)
            for (int q = 0; p + q <= bound; ++q)
                out.push_back(FieldElem::coordinate(make_jet(JetKind::Lambda, al, p, q)));
    for (int j = 0; j < sys->m(); ++j)
        if (!sys->z_constraint(j).is_zero())
            out.push_back(FieldElem::coordinate(make_jet(JetKind::PhiJ, j)));
    return out;
}

} // namespace

JacobsonDecomposition jacobson(const OreMatrix& M, int mixing_order_bound)
{
    require_spatial_matrix(M);
    Elim e(M);
    int r = e.diagonalize(0);

    // Push all order into the last nonzero slot: mix each inner diagonal
    // entry with its right neighbor through a coordinate the operators act on
    // differently, re-diagonalize, and keep the trial iff the order dropped.
    auto candidates = mixing_candidates(M.system(), mixing_order_bound);
    for (int i = 0; i + 1 < r; ++i) {
        while (e.D.at(i, i).order() > 0) {
            bool improved = false;
            int before = e.D.at(i, i).order();
            for (const FieldElem& f : candidates) {
                Elim trial = e;
                trial.col_axpy(i, i + 1, OreOp::coeff(-f, trial.sys()));
                trial.diagonalize(i);
                if (trial.D.at(i, i).order() < before) {
                    e = std::move(trial);
                    improved = true;
                    break;
                }
            }
            if (!improved)
                throw DecompositionIncomplete(
                    "no jet coordinate up to the order bound reduces the diagonal entry");
        }
    }

    // Normalize: inner entries to exactly 1, the last one to monic.
    for (int i = 0; i < r; ++i) {
        const OreOp& d = e.D.at(i, i);
        FieldElem lead = d.coefficient(0, d.order());
        if (lead != FieldElem::one())
            e.row_scale(i, lead.inverse());
    }

    JacobsonDecomposition out;
    out.rank = r;
    out.Delta = r > 0 ? e.D.at(r - 1, r - 1) : OreOp::zero(M.system());
    out.U = std::move(e.U);
    out.Uinv = std::move(e.Uinv);
    out.V = std::move(e.V);
    out.Vinv = std::move(e.Vinv);
    return out;
}

int rank(const OreMatrix& M)
{
    require_spatial_matrix(M);
    Elim e(M);
    return e.diagonalize(0);
}

OreMatrix left_nullspace(const OreMatrix& M)
{
    require_spatial_matrix(M);
    Elim e(M);
    int r = e.diagonalize(0);
    OreMatrix out(M.rows() - r, M.rows(), M.system());
    for (int i = r; i < M.rows(); ++i)
        for (int c = 0; c < M.rows(); ++c)
            out.set(i - r, c, e.U.at(i, c));
    return out;
}

std::optional<OreMatrix> solve_left(const OreMatrix& M, const OreMatrix& v)
{
    require_spatial_matrix(M);
    require_spatial_matrix(v);
    if (v.rows() != 1 || v.cols() != M.cols())
        throw std::invalid_argument("solve_left needs a 1 x cols right-hand side");
    auto dec = jacobson(M);
    OreMatrix w = v * dec.V;
    for (int c = dec.rank; c < M.cols(); ++c)
        if (!w.at(0, c).is_zero())
            return std::nullopt;
    OreMatrix y(1, M.rows(), M.system());
    for (int c = 0; c < dec.rank; ++c) {
        if (c == dec.rank - 1) {
            auto div = divide_right(w.at(0, c), dec.Delta);
            if (!div.remainder.is_zero())
                return std::nullopt;
            y.set(0, c, div.quotient);
        } else
            y.set(0, c, w.at(0, c)); // inner diagonal entries are 1
    }
    return y * dec.U;
}

OreMatrix free_basis(const OreMatrix& generators)
{
    require_spatial_matrix(generators);
    auto dec = jacobson(generators);
    OreMatrix ug = dec.U * generators;
    OreMatrix out(dec.rank, generators.cols(), generators.system());
    for (int r = 0; r < dec.rank; ++r)
        for (int c = 0; c < generators.cols(); ++c)
            out.set(r, c, ug.at(r, c));
    return out;
}

} // namespace gauge2d
