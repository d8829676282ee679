#pragma once

#include "liecohom/rational.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace liecohom {

using Vector = std::vector<Rational>;

struct Entry {
    std::size_t index;
    Rational value;

    friend bool operator==(const Entry&, const Entry&) = default;
};

/// Sorted by index, no explicit zeros.
using SparseVector = std::vector<Entry>;

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

SparseVector to_sparse(std::span<const Rational> dense);
Vector to_dense(const SparseVector& v, std::size_t length);
bool is_zero(std::span<const Rational> v);

/// y += alpha * x on sparse vectors.
void axpy(SparseVector& y, const Rational& alpha, const SparseVector& x);

/// Exact sparse matrix, row-major. Only nonzero entries are stored.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols);

    static SparseMatrix from_rows(std::size_t cols, std::vector<SparseVector> rows);
    static SparseMatrix from_dense(const std::vector<Vector>& rows, std::size_t cols);
    static SparseMatrix identity(std::size_t n);
    /// Stacks matrices with equal column counts on top of each other.
    static SparseMatrix vstack(std::span<const SparseMatrix> blocks);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nonzeros() const;

    const SparseVector& row(std::size_t r) const { return data_.at(r); }
    Rational at(std::size_t r, std::size_t c) const;

    /// Accumulates into entry (r, c); an entry that cancels to zero is dropped.
    void add(std::size_t r, std::size_t c, const Rational& value);

    SparseMatrix transpose() const;
    Vector apply(std::span<const Rational> x) const;
    std::vector<Vector> to_dense() const;
    bool is_zero() const { return nonzeros() == 0; }

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
    friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<SparseVector> data_;
};

/// A linear subspace of Q^n kept in reduced row-echelon form, so two
/// subspaces are equal exactly when their stored bases are equal.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim = 0) : ambient_dim_(ambient_dim) {}

    static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
    static Subspace span(std::size_t ambient_dim, std::vector<SparseVector> vectors);
    static Subspace full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vector>& basis() const { return basis_; }
    /// Leading column of each basis vector, increasing.
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Basis as the rows of a dim x ambient_dim matrix.
    SparseMatrix as_rows() const;

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    std::size_t ambient_dim_ = 0;
    std::vector<Vector> basis_;
    std::vector<std::size_t> pivots_;
};

/// Rank over Q. Rows are eliminated sparsest first, and pivot columns are
/// tried in order of increasing column weight to limit fill-in.
std::size_t rank(const SparseMatrix& m);

/// Right null space of m.
Subspace kernel_basis(const SparseMatrix& m);

/// Column space of m, as a subspace of Q^{rows(m)}.
Subspace image(const SparseMatrix& m);

Subspace intersect(const Subspace& u, const Subspace& v);
Subspace sum(const Subspace& u, const Subspace& v);
bool contains(const Subspace& u, std::span<const Rational> w);

/// Vectors of `big` (taken in order from its echelon basis) that extend a
/// basis of `small` to a basis of big. Requires small to lie inside big.
std::vector<Vector> complement_representatives(const Subspace& big, const Subspace& small);

}  // namespace liecohom
