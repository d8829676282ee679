#include "liecohom/cochain.hpp"

#include <algorithm>
#include <string>

namespace liecohom {

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<IndexTuple> wedge_tuples(std::size_t dim, std::size_t n) {
    std::vector<IndexTuple> out;
    if (n > dim) return out;
    IndexTuple t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = i;
    while (true) {
        out.push_back(t);
        std::size_t i = n;
        while (i > 0 && t[i - 1] == dim - n + i - 1) --i;
        if (i == 0) break;
        ++t[i - 1];
        for (std::size_t j = i; j < n; ++j) t[j] = t[j - 1] + 1;
    }
    return out;
}

std::size_t tuple_rank(const IndexTuple& tuple, std::size_t dim) {
    const std::size_t n = tuple.size();
    std::size_t rank = 0;
    std::size_t next = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t v = next; v < tuple[i]; ++v) rank += binomial(dim - 1 - v, n - 1 - i);
        next = tuple[i] + 1;
    }
    return rank;
}

int sort_with_sign(IndexTuple& tuple) {
    int sign = 1;
    for (std::size_t i = 1; i < tuple.size(); ++i) {
        for (std::size_t j = i; j > 0 && tuple[j - 1] >= tuple[j]; --j) {
            if (tuple[j - 1] == tuple[j]) return 0;
            std::swap(tuple[j - 1], tuple[j]);
            sign = -sign;
        }
    }
    return sign;
}

std::size_t cochain_dim(const Representation& rho, std::size_t n) {
    return binomial(rho.algebra().dim(), n) * rho.module_dim();
}

std::size_t cochain_index(const Representation& rho, const IndexTuple& tuple, std::size_t m) {
    if (m >= rho.module_dim()) throw DimensionMismatch("module index out of range");
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (tuple[i] >= rho.algebra().dim() || (i > 0 && tuple[i] <= tuple[i - 1])) {
            throw std::invalid_argument("cochain index tuple must be strictly increasing and in range");
        }
    }
    return tuple_rank(tuple, rho.algebra().dim()) * rho.module_dim() + m;
}

SparseMatrix differential(const Representation& rho, std::size_t n) {
    const LieAlgebra& g = rho.algebra();
    const std::size_t dim = g.dim();
    const std::size_t mdim = rho.module_dim();
    const auto targets = wedge_tuples(dim, n + 1);
    std::vector<SparseVector> rows(targets.size() * mdim);

    for (std::size_t t = 0; t < targets.size(); ++t) {
        const IndexTuple& T = targets[t];
        for (std::size_t i = 0; i <= n; ++i) {
            const Rational sign = (i % 2 == 0) ? Rational(1) : Rational(-1);
            IndexTuple rest;
            for (std::size_t k = 0; k <= n; ++k) {
                if (k != i) rest.push_back(T[k]);
            }
            const std::size_t block = tuple_rank(rest, dim) * mdim;
            const SparseMatrix& act = rho.action(T[i]);
            for (std::size_t out = 0; out < mdim; ++out) {
                for (const auto& [m, v] : act.row(out)) rows[t * mdim + out].push_back({block + m, sign * v});
            }
        }
        for (std::size_t i = 0; i <= n; ++i) {
            for (std::size_t j = i + 1; j <= n; ++j) {
                const Rational sign = ((i + j) % 2 == 0) ? Rational(1) : Rational(-1);
                for (const auto& [k, c] : g.bracket_basis(T[i], T[j])) {
                    IndexTuple args{k};
                    for (std::size_t l = 0; l <= n; ++l) {
                        if (l != i && l != j) args.push_back(T[l]);
                    }
                    const int perm = sort_with_sign(args);
                    if (perm == 0) continue;
                    const std::size_t block = tuple_rank(args, dim) * mdim;
                    const Rational coeff = sign * c * Rational(perm);
                    for (std::size_t out = 0; out < mdim; ++out) rows[t * mdim + out].push_back({block + out, coeff});
                }
            }
        }
    }
    return SparseMatrix::from_rows(cochain_dim(rho, n), std::move(rows));
}

Subspace cocycles(const Representation& rho, std::size_t n) { return kernel_basis(differential(rho, n)); }

Subspace coboundaries(const Representation& rho, std::size_t n) {
    if (n == 0) return Subspace(cochain_dim(rho, 0));
    return image(differential(rho, n - 1));
}

CohomologyResult cohomology(const Representation& rho, std::size_t n, bool with_representatives) {
    CohomologyResult res;
    res.degree = n;
    res.dim_cochain = cochain_dim(rho, n);
    if (with_representatives) {
        const Subspace z = cocycles(rho, n);
        const Subspace b = coboundaries(rho, n);
        res.dim_cocycles = z.dim();
        res.dim_coboundaries = b.dim();
        res.representatives = complement_representatives(z, b);
    } else {
        res.dim_cocycles = res.dim_cochain - rank(differential(rho, n));
        res.dim_coboundaries = n == 0 ? 0 : rank(differential(rho, n - 1));
    }
    res.dim_cohomology = res.dim_cocycles - res.dim_coboundaries;
    return res;
}

bool is_cocycle(const Representation& rho, std::size_t n, std::span<const Rational> phi) {
    if (phi.size() != cochain_dim(rho, n)) {
        throw DimensionMismatch("cochain has " + std::to_string(phi.size()) + " coordinates, expected " +
                                std::to_string(cochain_dim(rho, n)));
    }
    return is_zero(differential(rho, n).apply(phi));
}

bool is_coboundary(const Representation& rho, std::size_t n, std::span<const Rational> phi) {
    if (phi.size() != cochain_dim(rho, n)) {
        throw DimensionMismatch("cochain has " + std::to_string(phi.size()) + " coordinates, expected " +
                                std::to_string(cochain_dim(rho, n)));
    }
    return contains(coboundaries(rho, n), phi);
}

}  // namespace liecohom
