#include "liecohom/factorization.hpp"

namespace liecohom {

NotACocycle::NotACocycle(const LieAlgebra& would_be, JacobiViolation witness)
    : std::invalid_argument("not a 2-cocycle: the extension violates Jacobi on (" + would_be.labels()[witness.i] +
                            ", " + would_be.labels()[witness.j] + ", " + would_be.labels()[witness.k] + ")"),
      witness_(std::move(witness)) {}

LieAlgebra central_extension(const LieAlgebra& g, std::span<const Rational> cocycle, std::size_t k) {
    const Representation coeffs = trivial_rep(g, k);
    if (cocycle.size() != cochain_dim(coeffs, 2)) throw DimensionMismatch("cocycle has the wrong number of coordinates");
    const std::size_t n = g.dim();
    std::vector<std::string> labels = g.labels();
    for (std::size_t c = 1; c <= k; ++c) labels.push_back("c" + std::to_string(c));

    std::vector<BracketEntry> entries;
    const auto pairs = wedge_tuples(n, 2);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        SparseVector result = g.bracket_basis(pairs[p][0], pairs[p][1]);
        for (std::size_t c = 0; c < k; ++c) {
            const Rational& v = cocycle[p * k + c];
            if (!v.is_zero()) result.push_back({n + c, v});
        }
        if (!result.empty()) entries.push_back({pairs[p][0], pairs[p][1], std::move(result)});
    }
    LieAlgebra ext(g.name() + "+ext" + std::to_string(k), std::move(labels), entries);
    if (auto bad = validate(ext)) throw NotACocycle(ext, *bad);
    return ext;
}

std::size_t hs_factorized_dim(const InvariantSetup& setup, std::size_t p) {
    if (p > 3) throw std::invalid_argument("hs_factorized_dim supports degrees up to 3");
    const Representation levi_trivial = trivial_rep(setup.levi_algebra(), 1);
    std::size_t total = 0;
    for (std::size_t m = 0; m <= p; ++m) {
        const std::size_t hm = cohomology(levi_trivial, m).dim_cohomology;
        if (hm == 0) continue;
        total += hm * invariant_cohomology(setup, p - m).dim_cohomology;
    }
    return total;
}

HsReport hs_crosscheck(const InvariantSetup& setup, std::size_t p) {
    HsReport r;
    r.direct = cohomology(setup.module(), p).dim_cohomology;
    r.factorized = hs_factorized_dim(setup, p);
    r.agree = r.direct == r.factorized;
    return r;
}

}  // namespace liecohom
