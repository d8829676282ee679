#include "liecohom/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace liecohom {

SparseVector to_sparse(std::span<const Rational> dense) {
    SparseVector out;
    for (std::size_t i = 0; i < dense.size(); ++i) {
        if (!dense[i].is_zero()) out.push_back({i, dense[i]});
    }
    return out;
}

Vector to_dense(const SparseVector& v, std::size_t length) {
    Vector out(length);
    for (const auto& [i, x] : v) out.at(i) = x;
    return out;
}

bool is_zero(std::span<const Rational> v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

void axpy(SparseVector& y, const Rational& alpha, const SparseVector& x) {
    if (alpha.is_zero() || x.empty()) return;
    SparseVector out;
    out.reserve(y.size() + x.size());
    auto a = y.begin();
    auto b = x.begin();
    while (a != y.end() || b != x.end()) {
        if (b == x.end() || (a != y.end() && a->index < b->index)) {
            out.push_back(std::move(*a++));
        } else if (a == y.end() || b->index < a->index) {
            out.push_back({b->index, alpha * b->value});
            ++b;
        } else {
            Rational s = a->value + alpha * b->value;
            if (!s.is_zero()) out.push_back({a->index, std::move(s)});
            ++a;
            ++b;
        }
    }
    y = std::move(out);
}

// ---------------------------------------------------------------------------
// SparseMatrix

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

SparseMatrix SparseMatrix::from_rows(std::size_t cols, std::vector<SparseVector> rows) {
    SparseMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        auto& row = rows[r];
        std::sort(row.begin(), row.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
        SparseVector clean;
        for (auto& e : row) {
            if (e.index >= cols) throw DimensionMismatch("column index out of range");
            if (!clean.empty() && clean.back().index == e.index) {
                clean.back().value += e.value;
                if (clean.back().value.is_zero()) clean.pop_back();
            } else if (!e.value.is_zero()) {
                clean.push_back(std::move(e));
            }
        }
        m.data_[r] = std::move(clean);
    }
    return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<Vector>& rows, std::size_t cols) {
    SparseMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DimensionMismatch("ragged dense matrix");
        m.data_[r] = to_sparse(rows[r]);
    }
    return m;
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back({i, Rational(1)});
    return m;
}

SparseMatrix SparseMatrix::vstack(std::span<const SparseMatrix> blocks) {
    if (blocks.empty()) return {};
    const std::size_t cols = blocks.front().cols();
    SparseMatrix out(0, cols);
    for (const auto& b : blocks) {
        if (b.cols() != cols) throw DimensionMismatch("vstack: column counts differ");
        out.data_.insert(out.data_.end(), b.data_.begin(), b.data_.end());
    }
    out.rows_ = out.data_.size();
    return out;
}

std::size_t SparseMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
}

Rational SparseMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw DimensionMismatch("matrix index out of range");
    const auto& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t i) { return e.index < i; });
    return (it != row.end() && it->index == c) ? it->value : Rational(0);
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational& value) {
    if (r >= rows_ || c >= cols_) throw DimensionMismatch("matrix index out of range");
    if (value.is_zero()) return;
    auto& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t i) { return e.index < i; });
    if (it != row.end() && it->index == c) {
        it->value += value;
        if (it->value.is_zero()) row.erase(it);
    } else {
        row.insert(it, {c, value});
    }
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (const auto& [c, v] : data_[r]) t.data_[c].push_back({r, v});
    }
    return t;
}

Vector SparseMatrix::apply(std::span<const Rational> x) const {
    if (x.size() != cols_) throw DimensionMismatch("apply: vector length " + std::to_string(x.size()) +
                                                   " != cols " + std::to_string(cols_));
    Vector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (const auto& [c, v] : data_[r]) {
            if (!x[c].is_zero()) y[r] += v * x[c];
        }
    }
    return y;
}

std::vector<Vector> SparseMatrix::to_dense() const {
    std::vector<Vector> out;
    out.reserve(rows_);
    for (const auto& r : data_) out.push_back(liecohom::to_dense(r, cols_));
    return out;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matrix product: inner dimensions differ");
    SparseMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        SparseVector acc;
        for (const auto& [k, v] : a.row(r)) axpy(acc, v, b.row(k));
        out.data_[r] = std::move(acc);
    }
    return out;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix difference: shapes differ");
    SparseMatrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r) axpy(out.data_[r], Rational(-1), b.row(r));
    return out;
}

// ---------------------------------------------------------------------------
// Elimination

namespace {

// Row echelon form built one row at a time. Every stored row has leading
// coefficient 1 and no other stored row shares its leading column.
class Echelon {
public:
    explicit Echelon(std::size_t cols) : pivot_row_(cols, npos) {}

    // Returns true when the row was independent of the rows already stored.
    bool insert(SparseVector row) {
        while (!row.empty()) {
            const std::size_t lead = row.front().index;
            const std::size_t p = pivot_row_[lead];
            if (p == npos) break;
            const Rational factor = -row.front().value;
            axpy(row, factor, rows_[p]);
        }
        if (row.empty()) return false;
        const Rational inv = Rational(1) / row.front().value;
        for (auto& e : row) e.value *= inv;
        pivot_row_[row.front().index] = rows_.size();
        rows_.push_back(std::move(row));
        return true;
    }

    std::size_t rank() const { return rows_.size(); }

    // Reduced echelon rows sorted by leading column.
    std::vector<SparseVector> reduced() && {
        std::sort(rows_.begin(), rows_.end(),
                  [](const SparseVector& a, const SparseVector& b) { return a.front().index < b.front().index; });
        for (std::size_t i = rows_.size(); i-- > 0;) {
            const std::size_t lead = rows_[i].front().index;
            for (std::size_t j = 0; j < i; ++j) {
                auto& row = rows_[j];
                auto it = std::lower_bound(row.begin(), row.end(), lead,
                                           [](const Entry& e, std::size_t c) { return e.index < c; });
                if (it != row.end() && it->index == lead) {
                    const Rational factor = -it->value;
                    axpy(row, factor, rows_[i]);
                }
            }
        }
        return std::move(rows_);
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::vector<std::size_t> pivot_row_;
    std::vector<SparseVector> rows_;
};

std::vector<SparseVector> rref_rows(std::size_t cols, std::vector<SparseVector> rows) {
    Echelon ech(cols);
    for (auto& r : rows) ech.insert(std::move(r));
    return std::move(ech).reduced();
}

}  // namespace

std::size_t rank(const SparseMatrix& m) {
    const std::size_t cols = m.cols();
    std::vector<std::size_t> weight(cols, 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (const auto& e : m.row(r)) ++weight[e.index];
    }
    std::vector<std::size_t> order(cols);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return weight[a] < weight[b]; });
    std::vector<std::size_t> position(cols);
    for (std::size_t p = 0; p < cols; ++p) position[order[p]] = p;

    std::vector<std::size_t> row_order(m.rows());
    std::iota(row_order.begin(), row_order.end(), std::size_t{0});
    std::stable_sort(row_order.begin(), row_order.end(),
                     [&](std::size_t a, std::size_t b) { return m.row(a).size() < m.row(b).size(); });

    Echelon ech(cols);
    for (std::size_t r : row_order) {
        SparseVector permuted;
        permuted.reserve(m.row(r).size());
        for (const auto& [c, v] : m.row(r)) permuted.push_back({position[c], v});
        std::sort(permuted.begin(), permuted.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
        ech.insert(std::move(permuted));
        if (ech.rank() == cols) break;
    }
    return ech.rank();
}

Subspace kernel_basis(const SparseMatrix& m) {
    const std::size_t cols = m.cols();
    std::vector<SparseVector> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (!m.row(r).empty()) rows.push_back(m.row(r));
    }
    const auto rref = rref_rows(cols, std::move(rows));

    std::vector<bool> is_pivot(cols, false);
    for (const auto& r : rref) is_pivot[r.front().index] = true;
    std::vector<std::size_t> free_slot(cols, 0);
    std::vector<SparseVector> kernel;
    for (std::size_t c = 0; c < cols; ++c) {
        if (!is_pivot[c]) {
            free_slot[c] = kernel.size();
            kernel.push_back({{c, Rational(1)}});
        }
    }
    for (const auto& row : rref) {
        const std::size_t lead = row.front().index;
        for (std::size_t k = 1; k < row.size(); ++k) {
            kernel[free_slot[row[k].index]].push_back({lead, -row[k].value});
        }
    }
    for (auto& v : kernel) {
        std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
    }
    return Subspace::span(cols, std::move(kernel));
}

Subspace image(const SparseMatrix& m) {
    const SparseMatrix t = m.transpose();
    std::vector<SparseVector> rows;
    for (std::size_t r = 0; r < t.rows(); ++r) {
        if (!t.row(r).empty()) rows.push_back(t.row(r));
    }
    return Subspace::span(m.rows(), std::move(rows));
}

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::span(std::size_t ambient_dim, std::vector<SparseVector> vectors) {
    for (const auto& v : vectors) {
        if (!v.empty() && v.back().index >= ambient_dim) throw DimensionMismatch("span: vector exceeds ambient dimension");
    }
    Subspace s(ambient_dim);
    for (auto& row : rref_rows(ambient_dim, std::move(vectors))) {
        s.pivots_.push_back(row.front().index);
        s.basis_.push_back(to_dense(row, ambient_dim));
    }
    return s;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
    std::vector<SparseVector> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) {
        if (v.size() != ambient_dim) throw DimensionMismatch("span: vector length differs from ambient dimension");
        rows.push_back(to_sparse(v));
    }
    return span(ambient_dim, std::move(rows));
}

Subspace Subspace::full(std::size_t ambient_dim) {
    Subspace s(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) {
        Vector v(ambient_dim);
        v[i] = Rational(1);
        s.basis_.push_back(std::move(v));
        s.pivots_.push_back(i);
    }
    return s;
}

SparseMatrix Subspace::as_rows() const { return SparseMatrix::from_dense(basis_, ambient_dim_); }

Subspace sum(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw DimensionMismatch("sum: ambient dimensions differ");
    std::vector<Vector> all = u.basis();
    all.insert(all.end(), v.basis().begin(), v.basis().end());
    return Subspace::span(u.ambient_dim(), all);
}

Subspace intersect(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw DimensionMismatch("intersect: ambient dimensions differ");
    const std::size_t n = u.ambient_dim();
    const std::size_t du = u.dim();
    // Columns are the basis vectors of u then v; a kernel vector (a, b)
    // yields sum a_i u_i = -sum b_j v_j, a vector of the intersection.
    SparseMatrix stacked(n, du + v.dim());
    for (std::size_t i = 0; i < du; ++i) {
        for (std::size_t r = 0; r < n; ++r) stacked.add(r, i, u.basis()[i][r]);
    }
    for (std::size_t j = 0; j < v.dim(); ++j) {
        for (std::size_t r = 0; r < n; ++r) stacked.add(r, du + j, v.basis()[j][r]);
    }
    const Subspace relations = kernel_basis(stacked);
    std::vector<SparseVector> vectors;
    for (const auto& coeffs : relations.basis()) {
        SparseVector w;
        for (std::size_t i = 0; i < du; ++i) {
            if (!coeffs[i].is_zero()) axpy(w, coeffs[i], to_sparse(u.basis()[i]));
        }
        vectors.push_back(std::move(w));
    }
    return Subspace::span(n, std::move(vectors));
}

bool contains(const Subspace& u, std::span<const Rational> w) {
    if (w.size() != u.ambient_dim()) throw DimensionMismatch("contains: vector length differs from ambient dimension");
    if (is_zero(w)) return true;
    std::vector<SparseVector> rows;
    rows.reserve(u.dim() + 1);
    for (const auto& b : u.basis()) rows.push_back(to_sparse(b));
    rows.push_back(to_sparse(w));
    return rank(SparseMatrix::from_rows(u.ambient_dim(), std::move(rows))) == u.dim();
}

std::vector<Vector> complement_representatives(const Subspace& big, const Subspace& small) {
    if (big.ambient_dim() != small.ambient_dim()) {
        throw DimensionMismatch("complement_representatives: ambient dimensions differ");
    }
    Echelon ech(big.ambient_dim());
    for (const auto& b : small.basis()) ech.insert(to_sparse(b));
    std::vector<Vector> out;
    for (const auto& b : big.basis()) {
        if (ech.insert(to_sparse(b))) out.push_back(b);
    }
    return out;
}

}  // namespace liecohom
