#include "liecohom/lie_algebra.hpp"

#include <algorithm>
#include <set>

namespace liecohom {

namespace {

std::string pair_text(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

SparseVector negated(SparseVector v) {
    for (auto& e : v) e.value = -e.value;
    return v;
}

// sum_m u_m [b_m, b_k]
SparseVector bracket_with_basis(const LieAlgebra& g, const SparseVector& u, std::size_t k) {
    SparseVector out;
    for (const auto& [m, coeff] : u) axpy(out, coeff, g.bracket_basis(m, k));
    return out;
}

}  // namespace

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> labels, const std::vector<BracketEntry>& brackets)
    : name_(std::move(name)), labels_(std::move(labels)) {
    std::set<std::string> seen;
    for (const auto& l : labels_) {
        if (!seen.insert(l).second) throw std::invalid_argument("duplicate basis label '" + l + "'");
    }
    const std::size_t n = labels_.size();
    for (const auto& b : brackets) {
        if (b.left >= b.right) throw std::invalid_argument("bracket entry must have left < right, got " + pair_text(b.left, b.right));
        if (b.right >= n) throw std::invalid_argument("bracket index out of range in " + pair_text(b.left, b.right));
        if (table_.count({b.left, b.right}) != 0) throw std::invalid_argument("duplicate bracket entry " + pair_text(b.left, b.right));
        SparseVector clean;
        for (const auto& e : b.result) {
            if (e.index >= n) throw std::invalid_argument("bracket result index out of range in " + pair_text(b.left, b.right));
            clean.push_back(e);
        }
        clean = SparseMatrix::from_rows(n, {std::move(clean)}).row(0);
        if (!clean.empty()) table_.emplace(std::make_pair(b.left, b.right), std::move(clean));
    }
}

std::optional<std::size_t> LieAlgebra::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t LieAlgebra::require_index(const std::string& label) const {
    if (auto i = index_of(label)) return *i;
    throw std::invalid_argument("no basis element named '" + label + "' in " + name_);
}

SparseVector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
    if (i >= dim() || j >= dim()) throw DimensionMismatch("bracket index out of range");
    if (i == j) return {};
    if (i < j) {
        auto it = table_.find({i, j});
        return it == table_.end() ? SparseVector{} : it->second;
    }
    auto it = table_.find({j, i});
    return it == table_.end() ? SparseVector{} : negated(it->second);
}

Rational LieAlgebra::structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    for (const auto& e : bracket_basis(i, j)) {
        if (e.index == k) return e.value;
    }
    return Rational(0);
}

Vector LieAlgebra::bracket(std::span<const Rational> u, std::span<const Rational> v) const {
    if (u.size() != dim() || v.size() != dim()) throw DimensionMismatch("bracket: vector length differs from algebra dimension");
    SparseVector acc;
    for (const auto& [i, ui] : to_sparse(u)) {
        for (const auto& [j, vj] : to_sparse(v)) {
            if (i != j) axpy(acc, ui * vj, bracket_basis(i, j));
        }
    }
    return to_dense(acc, dim());
}

SparseMatrix LieAlgebra::ad(std::size_t i) const {
    SparseMatrix m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
        for (const auto& [k, c] : bracket_basis(i, j)) m.add(k, j, c);
    }
    return m;
}

SparseMatrix LieAlgebra::ad(std::span<const Rational> u) const {
    if (u.size() != dim()) throw DimensionMismatch("ad: vector length differs from algebra dimension");
    SparseMatrix m(dim(), dim());
    for (const auto& [i, ui] : to_sparse(u)) {
        for (std::size_t j = 0; j < dim(); ++j) {
            for (const auto& [k, c] : bracket_basis(i, j)) m.add(k, j, ui * c);
        }
    }
    return m;
}

std::vector<BracketEntry> LieAlgebra::brackets() const {
    std::vector<BracketEntry> out;
    for (const auto& [key, value] : table_) out.push_back({key.first, key.second, value});
    return out;
}

LieAlgebra LieAlgebra::renamed(std::string name) const {
    LieAlgebra copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

bool LieAlgebra::same_structure(const LieAlgebra& other) const {
    return labels_ == other.labels_ && table_ == other.table_;
}

Vector basis_vector(std::size_t dim, std::size_t i) {
    Vector v(dim);
    v.at(i) = Rational(1);
    return v;
}

std::optional<JacobiViolation> validate(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const SparseVector ij = g.bracket_basis(i, j);
            for (std::size_t k = j + 1; k < n; ++k) {
                SparseVector residual = bracket_with_basis(g, ij, k);
                axpy(residual, Rational(1), bracket_with_basis(g, g.bracket_basis(j, k), i));
                axpy(residual, Rational(1), bracket_with_basis(g, g.bracket_basis(k, i), j));
                if (!residual.empty()) return JacobiViolation{i, j, k, to_dense(residual, n)};
            }
        }
    }
    return std::nullopt;
}

NotALieAlgebra::NotALieAlgebra(const LieAlgebra& g, JacobiViolation witness)
    : std::invalid_argument("Jacobi identity fails in " + g.name() + " on (" + g.labels()[witness.i] + ", " +
                            g.labels()[witness.j] + ", " + g.labels()[witness.k] + ")"),
      witness_(std::move(witness)),
      labels_(g.labels()) {}

Subspace center(const LieAlgebra& g) {
    std::vector<SparseMatrix> blocks;
    blocks.reserve(g.dim());
    for (std::size_t j = 0; j < g.dim(); ++j) blocks.push_back(g.ad(j));
    if (blocks.empty()) return Subspace(0);
    return kernel_basis(SparseMatrix::vstack(blocks));
}

Subspace derivation_space(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    const std::size_t unknowns = n * n;
    auto var = [n](std::size_t r, std::size_t c) { return r * n + c; };
    SparseMatrix system(n * (n * (n - (n > 0 ? 1 : 0))) / 2, unknowns);
    std::size_t row_base = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j, row_base += n) {
            // D[b_i,b_j] - [D b_i, b_j] - [b_i, D b_j] = 0, component r.
            for (const auto& [k, c] : g.bracket_basis(i, j)) {
                for (std::size_t r = 0; r < n; ++r) system.add(row_base + r, var(r, k), c);
            }
            for (std::size_t m = 0; m < n; ++m) {
                for (const auto& [r, c] : g.bracket_basis(m, j)) system.add(row_base + r, var(m, i), -c);
                for (const auto& [r, c] : g.bracket_basis(i, m)) system.add(row_base + r, var(m, j), -c);
            }
        }
    }
    return kernel_basis(system);
}

SparseMatrix unflatten(std::span<const Rational> flat, std::size_t dim) {
    if (flat.size() != dim * dim) throw DimensionMismatch("unflatten: length is not dim^2");
    SparseMatrix m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) m.add(r, c, flat[r * dim + c]);
    }
    return m;
}

Vector flatten(const SparseMatrix& m) {
    Vector out(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (const auto& [c, v] : m.row(r)) out[r * m.cols() + c] = v;
    }
    return out;
}

std::vector<SparseMatrix> derivations(const LieAlgebra& g) {
    std::vector<SparseMatrix> out;
    const Subspace space = derivation_space(g);
    for (const auto& v : space.basis()) out.push_back(unflatten(v, g.dim()));
    return out;
}

Subspace inner_derivations(const LieAlgebra& g) {
    std::vector<Vector> flats;
    for (std::size_t i = 0; i < g.dim(); ++i) flats.push_back(flatten(g.ad(i)));
    return Subspace::span(g.dim() * g.dim(), flats);
}

namespace {

std::optional<std::pair<std::size_t, std::size_t>> leibniz_failure(const LieAlgebra& g, const SparseMatrix& d) {
    const std::size_t n = g.dim();
    if (d.rows() != n || d.cols() != n) throw DimensionMismatch("derivation matrix has wrong shape");
    const SparseMatrix dt = d.transpose();  // row c of dt = D b_c
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            SparseVector lhs;
            for (const auto& [k, c] : g.bracket_basis(i, j)) axpy(lhs, c, dt.row(k));
            SparseVector rhs;
            for (const auto& [m, c] : dt.row(i)) axpy(rhs, c, g.bracket_basis(m, j));
            for (const auto& [m, c] : dt.row(j)) axpy(rhs, c, g.bracket_basis(i, m));
            if (lhs != rhs) return std::make_pair(i, j);
        }
    }
    return std::nullopt;
}

}  // namespace

bool is_derivation(const LieAlgebra& g, const SparseMatrix& d) { return !leibniz_failure(g, d).has_value(); }

NotAnIdeal::NotAnIdeal(std::size_t basis_index_, std::size_t ideal_vector_)
    : std::invalid_argument("subspace is not an ideal: bracket of basis element " + std::to_string(basis_index_) +
                            " with ideal vector " + std::to_string(ideal_vector_) + " leaves it"),
      basis_index(basis_index_),
      ideal_vector(ideal_vector_) {}

LieAlgebra quotient(const LieAlgebra& g, const Subspace& ideal, std::string name) {
    const std::size_t n = g.dim();
    if (ideal.ambient_dim() != n) throw DimensionMismatch("quotient: ideal lives in a different space");
    for (std::size_t i = 0; i < n; ++i) {
        const SparseMatrix adi = g.ad(i);
        for (std::size_t u = 0; u < ideal.dim(); ++u) {
            if (!contains(ideal, adi.apply(ideal.basis()[u]))) throw NotAnIdeal(i, u);
        }
    }
    std::vector<bool> pivot(n, false);
    for (std::size_t p : ideal.pivots()) pivot[p] = true;
    std::vector<std::size_t> keep;
    std::vector<std::size_t> new_index(n, 0);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        if (!pivot[i]) {
            new_index[i] = keep.size();
            keep.push_back(i);
            labels.push_back(g.labels()[i]);
        }
    }
    auto reduce = [&](SparseVector v) {
        for (std::size_t t = 0; t < ideal.dim(); ++t) {
            const std::size_t p = ideal.pivots()[t];
            auto it = std::find_if(v.begin(), v.end(), [p](const Entry& e) { return e.index == p; });
            if (it != v.end()) {
                const Rational factor = -it->value;
                axpy(v, factor, to_sparse(ideal.basis()[t]));
            }
        }
        SparseVector out;
        for (auto& e : v) out.push_back({new_index[e.index], e.value});
        return out;
    };
    std::vector<BracketEntry> entries;
    for (std::size_t a = 0; a < keep.size(); ++a) {
        for (std::size_t b = a + 1; b < keep.size(); ++b) {
            SparseVector r = reduce(g.bracket_basis(keep[a], keep[b]));
            if (!r.empty()) entries.push_back({a, b, std::move(r)});
        }
    }
    LieAlgebra q(name.empty() ? g.name() + "/ideal" : std::move(name), std::move(labels), entries);
    if (auto bad = validate(q)) throw NotALieAlgebra(q, *bad);
    return q;
}

ActionNotDerivation::ActionNotDerivation(std::size_t s_index_, std::size_t i_, std::size_t j_)
    : std::invalid_argument("action of element " + std::to_string(s_index_) + " is not a derivation; Leibniz fails on " +
                            pair_text(i_, j_)),
      s_index(s_index_), i(i_), j(j_) {}

ActionNotHomomorphism::ActionNotHomomorphism(std::size_t i_, std::size_t j_)
    : std::invalid_argument("action is not a homomorphism on pair " + pair_text(i_, j_)), i(i_), j(j_) {}

LieAlgebra semidirect(const LieAlgebra& s, const LieAlgebra& r, const std::vector<SparseMatrix>& action,
                      std::string name) {
    const std::size_t ns = s.dim();
    const std::size_t nr = r.dim();
    if (action.size() != ns) throw DimensionMismatch("semidirect: need one action matrix per element of s");
    for (std::size_t a = 0; a < ns; ++a) {
        if (auto bad = leibniz_failure(r, action[a])) throw ActionNotDerivation(a, bad->first, bad->second);
    }
    for (std::size_t a = 0; a < ns; ++a) {
        for (std::size_t b = a + 1; b < ns; ++b) {
            SparseMatrix expected(nr, nr);
            for (const auto& [k, c] : s.bracket_basis(a, b)) {
                for (std::size_t row = 0; row < nr; ++row) {
                    for (const auto& [col, v] : action[k].row(row)) expected.add(row, col, c * v);
                }
            }
            if (action[a] * action[b] - action[b] * action[a] != expected) throw ActionNotHomomorphism(a, b);
        }
    }
    std::vector<std::string> labels = s.labels();
    labels.insert(labels.end(), r.labels().begin(), r.labels().end());
    std::vector<BracketEntry> entries = s.brackets();
    for (const auto& e : r.brackets()) {
        SparseVector shifted;
        for (const auto& [k, c] : e.result) shifted.push_back({k + ns, c});
        entries.push_back({e.left + ns, e.right + ns, std::move(shifted)});
    }
    for (std::size_t a = 0; a < ns; ++a) {
        const SparseMatrix t = action[a].transpose();
        for (std::size_t b = 0; b < nr; ++b) {
            SparseVector shifted;
            for (const auto& [k, c] : t.row(b)) shifted.push_back({k + ns, c});
            if (!shifted.empty()) entries.push_back({a, b + ns, std::move(shifted)});
        }
    }
    LieAlgebra g(name.empty() ? s.name() + "x" + r.name() : std::move(name), std::move(labels), entries);
    if (auto bad = validate(g)) throw NotALieAlgebra(g, *bad);
    return g;
}

NotASubalgebra::NotASubalgebra(std::size_t i_, std::size_t j_)
    : std::invalid_argument("not closed under bracket: " + pair_text(i_, j_)), i(i_), j(j_) {}

LieAlgebra coordinate_subalgebra(const LieAlgebra& g, const std::vector<std::size_t>& indices, std::string name) {
    for (std::size_t t = 0; t < indices.size(); ++t) {
        if (indices[t] >= g.dim()) throw DimensionMismatch("subalgebra index out of range");
        if (t > 0 && indices[t] <= indices[t - 1]) throw std::invalid_argument("subalgebra indices must increase strictly");
    }
    std::vector<std::size_t> local(g.dim(), g.dim());
    std::vector<std::string> labels;
    for (std::size_t t = 0; t < indices.size(); ++t) {
        local[indices[t]] = t;
        labels.push_back(g.labels()[indices[t]]);
    }
    std::vector<BracketEntry> entries;
    for (std::size_t a = 0; a < indices.size(); ++a) {
        for (std::size_t b = a + 1; b < indices.size(); ++b) {
            SparseVector mapped;
            for (const auto& [k, c] : g.bracket_basis(indices[a], indices[b])) {
                if (local[k] == g.dim()) throw NotASubalgebra(indices[a], indices[b]);
                mapped.push_back({local[k], c});
            }
            if (!mapped.empty()) entries.push_back({a, b, std::move(mapped)});
        }
    }
    return LieAlgebra(name.empty() ? g.name() + "_sub" : std::move(name), std::move(labels), entries);
}

LieAlgebra permute_basis(const LieAlgebra& g, const std::vector<std::size_t>& perm) {
    const std::size_t n = g.dim();
    if (perm.size() != n) throw DimensionMismatch("permutation length differs from algebra dimension");
    std::vector<std::size_t> inverse(n, n);
    for (std::size_t p = 0; p < n; ++p) {
        if (perm[p] >= n || inverse[perm[p]] != n) throw std::invalid_argument("not a permutation");
        inverse[perm[p]] = p;
    }
    std::vector<std::string> labels;
    for (std::size_t p = 0; p < n; ++p) labels.push_back(g.labels()[perm[p]]);
    std::vector<BracketEntry> entries;
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            SparseVector mapped;
            for (const auto& [k, c] : g.bracket_basis(perm[p], perm[q])) mapped.push_back({inverse[k], c});
            if (!mapped.empty()) entries.push_back({p, q, std::move(mapped)});
        }
    }
    return LieAlgebra(g.name(), std::move(labels), entries);
}

}  // namespace liecohom
