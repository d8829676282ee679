#pragma once

// Independent reference computations used to cross-check the sparse engine.
// Nothing here calls rank(), kernel_basis() or differential() internally
// except where a function documents that it reuses the engine's matrices.

#include "liecohom/invariants.hpp"

#include <map>

namespace liecohom::oracle {

/// Dense textbook Gaussian elimination over Q: columns left to right, first
/// nonzero entry as pivot.
std::size_t dense_rank(std::vector<Vector> rows);
std::size_t dense_rank(const SparseMatrix& m);

/// Pointwise evaluation of the differential on the cochain phi, straight
/// from the alternating-sum formula. The result uses the same coordinates
/// as C^{n+1}.
Vector evaluate_differential(const Representation& rho, std::size_t n, std::span<const Rational> phi);

struct Dims {
    std::size_t cocycles = 0;
    std::size_t coboundaries = 0;
    std::size_t cohomology = 0;
    friend bool operator==(const Dims&, const Dims&) = default;
};

/// Dimensions from dense ranks of the engine's differential matrices.
Dims cohomology_dims(const Representation& rho, std::size_t n);

/// Invariant counts from dense ranks only:
///   dim Z ∩ Inv = dim C^n - rank [d_n; A_n]
///   dim B ∩ Inv = rank d_{n-1} - rank (A_n d_{n-1})
/// where A_n stacks the s-action matrices on C^n.
Dims invariant_dims(const InvariantSetup& setup, std::size_t n);

/// phi lies in the column span of m.
bool in_column_span(const SparseMatrix& m, std::span<const Rational> phi);

}  // namespace liecohom::oracle
