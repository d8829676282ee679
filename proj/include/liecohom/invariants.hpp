#pragma once

#include "liecohom/cochain.hpp"

#include <vector>

namespace liecohom {

/// A split g = s ⊕ r into a coordinate subalgebra s and a coordinate ideal
/// r, together with a g-module M. Cochains live on r; s acts on them.
class InvariantSetup {
public:
    /// Throws std::invalid_argument unless levi and radical partition the
    /// basis of g, levi is a subalgebra and radical is an ideal.
    InvariantSetup(Representation module, std::vector<std::size_t> levi, std::vector<std::size_t> radical);

    const LieAlgebra& ambient() const { return module_.algebra(); }
    const Representation& module() const { return module_; }
    const std::vector<std::size_t>& levi() const { return levi_; }
    const std::vector<std::size_t>& radical() const { return radical_; }

    LieAlgebra levi_algebra() const;
    /// M restricted to r: the coefficient module of the cochains.
    const Representation& radical_module() const { return radical_module_; }

private:
    Representation module_;
    std::vector<std::size_t> levi_;
    std::vector<std::size_t> radical_;
    Representation radical_module_;
};

/// Matrix of omega -> v.omega on C^n(r, M), where
///   (v.omega)(e_1..e_n) = v.omega(e_1..e_n) - sum_i omega(e_1..[v,e_i]..e_n).
/// v is a vector in the ambient algebra and must lie in span(s).
SparseMatrix cochain_action(const InvariantSetup& setup, std::span<const Rational> v, std::size_t n);

/// Cochains killed by every basis element of s.
Subspace invariant_subspace(const InvariantSetup& setup, std::size_t n);

/// (Z^n ∩ Inv) / (B^n ∩ Inv). dim_cochain is the dimension of Inv^n.
CohomologyResult invariant_cohomology(const InvariantSetup& setup, std::size_t n, bool with_representatives = false);

/// Cohomology of the invariant subcomplex (Inv^*, d): consistency check for
/// invariant_cohomology, to which it is equal when s is semisimple.
CohomologyResult invariant_subcomplex_cohomology(const InvariantSetup& setup, std::size_t n);

}  // namespace liecohom
