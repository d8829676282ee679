#pragma once

#include "liecohom/invariants.hpp"

#include <stdexcept>

namespace liecohom {

class NotACocycle : public std::invalid_argument {
public:
    NotACocycle(const LieAlgebra& would_be, JacobiViolation witness);
    /// Jacobi failure of the algebra the extension would have produced.
    const JacobiViolation& witness() const { return witness_; }

private:
    JacobiViolation witness_;
};

/// g ⊕ Q^k with [x + a, y + b] = [x, y] + phi(x, y), where phi is a
/// coordinate vector on C^2(g, trivial Q^k). The k new basis elements are
/// labelled c1..ck and are central. Throws NotACocycle.
LieAlgebra central_extension(const LieAlgebra& g, std::span<const Rational> cocycle, std::size_t k = 1);

/// sum_{m+n=p} dim H^m(s, Q) * dim H^n(r, M)^s, for p <= 3.
std::size_t hs_factorized_dim(const InvariantSetup& setup, std::size_t p);

struct HsReport {
    std::size_t direct = 0;
    std::size_t factorized = 0;
    bool agree = false;
};

/// Compares dim H^p(g, M) with hs_factorized_dim.
HsReport hs_crosscheck(const InvariantSetup& setup, std::size_t p);

}  // namespace liecohom
