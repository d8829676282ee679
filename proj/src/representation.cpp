#include "liecohom/representation.hpp"

namespace liecohom {

Representation::Representation(LieAlgebra algebra, std::size_t module_dim, std::vector<SparseMatrix> actions)
    : algebra_(std::move(algebra)), module_dim_(module_dim), actions_(std::move(actions)) {
    if (actions_.size() != algebra_.dim()) throw DimensionMismatch("representation needs one action per basis element");
    for (const auto& a : actions_) {
        if (a.rows() != module_dim_ || a.cols() != module_dim_) throw DimensionMismatch("action matrix has wrong shape");
    }
}

SparseMatrix Representation::action(std::span<const Rational> v) const {
    if (v.size() != algebra_.dim()) throw DimensionMismatch("action: element has wrong length");
    SparseMatrix out(module_dim_, module_dim_);
    for (const auto& [i, c] : to_sparse(v)) {
        for (std::size_t r = 0; r < module_dim_; ++r) {
            for (const auto& [col, x] : actions_[i].row(r)) out.add(r, col, c * x);
        }
    }
    return out;
}

Representation trivial_rep(const LieAlgebra& g, std::size_t dim) {
    return Representation(g, dim, std::vector<SparseMatrix>(g.dim(), SparseMatrix(dim, dim)));
}

Representation adjoint_rep(const LieAlgebra& g) {
    std::vector<SparseMatrix> actions;
    actions.reserve(g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i) actions.push_back(g.ad(i));
    return Representation(g, g.dim(), std::move(actions));
}

std::optional<HomomorphismViolation> validate_rep(const Representation& rho) {
    const auto& g = rho.algebra();
    for (std::size_t i = 0; i < g.dim(); ++i) {
        for (std::size_t j = i + 1; j < g.dim(); ++j) {
            const SparseMatrix lhs = rho.action(to_dense(g.bracket_basis(i, j), g.dim()));
            const SparseMatrix rhs = rho.action(i) * rho.action(j) - rho.action(j) * rho.action(i);
            if (lhs != rhs) return HomomorphismViolation{i, j};
        }
    }
    return std::nullopt;
}

Representation restrict(const Representation& rho, const std::vector<std::size_t>& indices) {
    LieAlgebra sub = coordinate_subalgebra(rho.algebra(), indices);
    std::vector<SparseMatrix> actions;
    actions.reserve(indices.size());
    for (std::size_t i : indices) actions.push_back(rho.action(i));
    return Representation(std::move(sub), rho.module_dim(), std::move(actions));
}

}  // namespace liecohom
