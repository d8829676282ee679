#pragma once

#include "liecohom/representation.hpp"

#include <cstddef>
#include <vector>

namespace liecohom {

using IndexTuple = std::vector<std::size_t>;

std::size_t binomial(std::size_t n, std::size_t k);

/// Strictly increasing n-tuples from {0..dim-1} in lexicographic order.
std::vector<IndexTuple> wedge_tuples(std::size_t dim, std::size_t n);

/// Position of a strictly increasing tuple in wedge_tuples(dim, size).
std::size_t tuple_rank(const IndexTuple& tuple, std::size_t dim);

/// Sorts in place and returns the sign of the sorting permutation, or 0 when
/// the tuple has a repeated entry.
int sort_with_sign(IndexTuple& tuple);

// Coordinates on C^n(r, M) are pairs (I, m): I a strictly increasing n-tuple
// of basis indices of r, m a module index. Coordinate = rank(I) * dim M + m.

std::size_t cochain_dim(const Representation& rho, std::size_t n);
std::size_t cochain_index(const Representation& rho, const IndexTuple& tuple, std::size_t m);

/// Matrix of d_n : C^n -> C^{n+1},
///   (d phi)(e_0..e_n) = sum_i (-1)^i e_i.phi(..^e_i..)
///                     + sum_{i<j} (-1)^{i+j} phi([e_i,e_j], ..^e_i..^e_j..).
SparseMatrix differential(const Representation& rho, std::size_t n);

struct CohomologyResult {
    std::size_t degree = 0;
    std::size_t dim_cochain = 0;
    std::size_t dim_cocycles = 0;
    std::size_t dim_coboundaries = 0;
    std::size_t dim_cohomology = 0;
    /// Cocycles completing a coboundary basis to a cocycle basis; filled
    /// only when requested.
    std::vector<Vector> representatives;
};

CohomologyResult cohomology(const Representation& rho, std::size_t n, bool with_representatives = false);

/// Z^n = ker d_n.
Subspace cocycles(const Representation& rho, std::size_t n);
/// B^n = im d_{n-1}; zero for n = 0.
Subspace coboundaries(const Representation& rho, std::size_t n);

bool is_cocycle(const Representation& rho, std::size_t n, std::span<const Rational> phi);
bool is_coboundary(const Representation& rho, std::size_t n, std::span<const Rational> phi);

}  // namespace liecohom
