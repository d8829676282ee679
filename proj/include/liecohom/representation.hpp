#pragma once

#include "liecohom/lie_algebra.hpp"

#include <optional>
#include <vector>

namespace liecohom {

/// A finite-dimensional module over a Lie algebra, given by one action
/// matrix per basis element of the algebra.
class Representation {
public:
    Representation() = default;
    Representation(LieAlgebra algebra, std::size_t module_dim, std::vector<SparseMatrix> actions);

    const LieAlgebra& algebra() const { return algebra_; }
    std::size_t module_dim() const { return module_dim_; }
    const std::vector<SparseMatrix>& actions() const { return actions_; }
    const SparseMatrix& action(std::size_t i) const { return actions_.at(i); }
    /// Action of an arbitrary algebra element.
    SparseMatrix action(std::span<const Rational> v) const;

private:
    LieAlgebra algebra_;
    std::size_t module_dim_ = 0;
    std::vector<SparseMatrix> actions_;
};

Representation trivial_rep(const LieAlgebra& g, std::size_t dim = 1);
Representation adjoint_rep(const LieAlgebra& g);

struct HomomorphismViolation {
    std::size_t i, j;
};

/// Checks action([b_i,b_j]) = [action(b_i), action(b_j)] for all i < j.
std::optional<HomomorphismViolation> validate_rep(const Representation& rho);

/// Restriction to the coordinate subalgebra spanned by the listed basis
/// elements (strictly increasing). Throws NotASubalgebra.
Representation restrict(const Representation& rho, const std::vector<std::size_t>& indices);

}  // namespace liecohom
