#pragma once

#include "gauge2d/ore.hpp"

#include <optional>
#include <vector>

namespace gauge2d {

// Dense rectangular matrix of operators sharing one ambient system.  General
// entries are allowed; the elimination routines below additionally require
// every entry to be spatial (no D-powers, i.e. elements of the subring of
// ordinary dbar-operators).
class OreMatrix {
public:
    OreMatrix() = default;
    OreMatrix(int rows, int cols, SystemPtr sys);
    static OreMatrix identity(int n, SystemPtr sys);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    SystemPtr system() const { return sys_; }

    const OreOp& at(int r, int c) const { return entries_[index(r, c)]; }
    void set(int r, int c, OreOp op) { entries_[index(r, c)] = std::move(op); }

    bool is_zero() const;
    bool is_spatial() const;

    OreMatrix operator-() const;
    OreMatrix operator+(const OreMatrix& other) const;
    OreMatrix operator-(const OreMatrix& other) const;
    OreMatrix operator*(const OreMatrix& other) const;
    bool operator==(const OreMatrix& other) const;
    bool operator!=(const OreMatrix& other) const { return !(*this == other); }

    OreMatrix row(int r) const;
    static OreMatrix vstack(const OreMatrix& top, const OreMatrix& bottom);

    // Matrix transpose combined with the entrywise formal transpose, so that
    // (A*B)^t == B^t * A^t holds as operator matrices.
    OreMatrix formal_transpose() const;

private:
    std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * cols_ + c; }

    int rows_ = 0, cols_ = 0;
    SystemPtr sys_;
    std::vector<OreOp> entries_;
};

// Result of the diagonal reduction U*M*V = diag(1, ..., 1, Delta) padded with
// zero rows and columns: rank-1 leading ones and a monic Delta in the last
// nonzero slot.  U and V are unimodular with the tracked inverses.
struct JacobsonDecomposition {
    OreMatrix U, Uinv, V, Vinv;
    int rank = 0;
    OreOp Delta;
};

// Diagonal reduction by elementary row and column operations.  Pivots take
// the nonzero entry of minimal dbar-order (ties by coefficient size, then
// position).  After the staircase phase, neighboring diagonal entries are
// mixed through a jet coordinate with nonzero dbar until all but the last are
// units; throws DecompositionIncomplete when no mixing coordinate up to the
// order bound makes progress.
JacobsonDecomposition jacobson(const OreMatrix& M, int mixing_order_bound = 3);

// Number of nonzero diagonal entries of the reduction (phase one alone
// determines it).
int rank(const OreMatrix& M);

// Rows form a free basis of {x : x*M = 0}; row count is rows(M) - rank(M).
OreMatrix left_nullspace(const OreMatrix& M);

// Solves x*M = v for a 1 x cols right-hand side; nullopt when unsolvable.
std::optional<OreMatrix> solve_left(const OreMatrix& M, const OreMatrix& v);

// Rows freely generating the same left submodule as the rows of the input.
OreMatrix free_basis(const OreMatrix& generators);

} // namespace gauge2d
