#include "liecohom/invariants.hpp"

#include <algorithm>

namespace liecohom {

namespace {

void require_increasing(const std::vector<std::size_t>& v, const char* what) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] <= v[i - 1]) throw std::invalid_argument(std::string(what) + " indices must increase strictly");
    }
}

}  // namespace

InvariantSetup::InvariantSetup(Representation module, std::vector<std::size_t> levi, std::vector<std::size_t> radical)
    : module_(std::move(module)), levi_(std::move(levi)), radical_(std::move(radical)) {
    const LieAlgebra& g = module_.algebra();
    require_increasing(levi_, "levi");
    require_increasing(radical_, "radical");
    std::vector<int> owner(g.dim(), 0);
    for (std::size_t i : levi_) {
        if (i >= g.dim()) throw std::invalid_argument("levi index out of range");
        ++owner[i];
    }
    for (std::size_t i : radical_) {
        if (i >= g.dim()) throw std::invalid_argument("radical index out of range");
        ++owner[i];
    }
    if (std::any_of(owner.begin(), owner.end(), [](int c) { return c != 1; })) {
        throw std::invalid_argument("levi and radical must partition the basis");
    }
    coordinate_subalgebra(g, levi_);  // throws NotASubalgebra
    std::vector<bool> in_radical(g.dim(), false);
    for (std::size_t i : radical_) in_radical[i] = true;
    for (std::size_t i = 0; i < g.dim(); ++i) {
        for (std::size_t j : radical_) {
            for (const auto& e : g.bracket_basis(i, j)) {
                if (!in_radical[e.index]) {
                    throw std::invalid_argument("radical is not an ideal: [" + g.labels()[i] + ", " + g.labels()[j] +
                                                "] leaves it");
                }
            }
        }
    }
    radical_module_ = restrict(module_, radical_);
}

LieAlgebra InvariantSetup::levi_algebra() const { return coordinate_subalgebra(ambient(), levi_, "levi"); }

SparseMatrix cochain_action(const InvariantSetup& setup, std::span<const Rational> v, std::size_t n) {
    const LieAlgebra& g = setup.ambient();
    if (v.size() != g.dim()) throw DimensionMismatch("cochain_action: element has wrong length");
    std::vector<bool> in_levi(g.dim(), false);
    for (std::size_t i : setup.levi()) in_levi[i] = true;
    for (std::size_t i = 0; i < g.dim(); ++i) {
        if (!v[i].is_zero() && !in_levi[i]) throw std::invalid_argument("cochain_action: element is not in the levi part");
    }
    const Representation& rm = setup.radical_module();
    const std::size_t rdim = rm.algebra().dim();
    const std::size_t mdim = rm.module_dim();
    std::vector<std::size_t> local(g.dim(), 0);
    for (std::size_t t = 0; t < setup.radical().size(); ++t) local[setup.radical()[t]] = t;

    const SparseMatrix rho_v = setup.module().action(v);
    // ad_v restricted to r, in local coordinates: column t = [v, r_t].
    const SparseMatrix ad_v = g.ad(v);
    std::vector<SparseVector> ad_cols(rdim);
    {
        const SparseMatrix adt = ad_v.transpose();
        for (std::size_t t = 0; t < rdim; ++t) {
            for (const auto& [k, c] : adt.row(setup.radical()[t])) ad_cols[t].push_back({local[k], c});
        }
    }

    const auto tuples = wedge_tuples(rdim, n);
    std::vector<SparseVector> rows(tuples.size() * mdim);
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        const IndexTuple& T = tuples[t];
        for (std::size_t out = 0; out < mdim; ++out) {
            for (const auto& [m, x] : rho_v.row(out)) rows[t * mdim + out].push_back({t * mdim + m, x});
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (const auto& [k, a] : ad_cols[T[i]]) {
                IndexTuple args = T;
                args[i] = k;
                const int perm = sort_with_sign(args);
                if (perm == 0) continue;
                const std::size_t block = tuple_rank(args, rdim) * mdim;
                const Rational coeff = -a * Rational(perm);
                for (std::size_t out = 0; out < mdim; ++out) rows[t * mdim + out].push_back({block + out, coeff});
            }
        }
    }
    return SparseMatrix::from_rows(tuples.size() * mdim, std::move(rows));
}

namespace {

std::vector<SparseMatrix> levi_actions(const InvariantSetup& setup, std::size_t n) {
    std::vector<SparseMatrix> out;
    for (std::size_t i : setup.levi()) out.push_back(cochain_action(setup, basis_vector(setup.ambient().dim(), i), n));
    return out;
}

}  // namespace

Subspace invariant_subspace(const InvariantSetup& setup, std::size_t n) {
    const std::size_t dim = cochain_dim(setup.radical_module(), n);
    if (setup.levi().empty()) return Subspace::full(dim);
    return kernel_basis(SparseMatrix::vstack(levi_actions(setup, n)));
}

CohomologyResult invariant_cohomology(const InvariantSetup& setup, std::size_t n, bool with_representatives) {
    const Representation& rm = setup.radical_module();
    std::vector<SparseMatrix> blocks{differential(rm, n)};
    for (auto& a : levi_actions(setup, n)) blocks.push_back(std::move(a));
    const Subspace invariant_cocycles = kernel_basis(SparseMatrix::vstack(blocks));
    const Subspace inv = invariant_subspace(setup, n);
    const Subspace invariant_coboundaries = intersect(coboundaries(rm, n), inv);

    CohomologyResult res;
    res.degree = n;
    res.dim_cochain = inv.dim();
    res.dim_cocycles = invariant_cocycles.dim();
    res.dim_coboundaries = invariant_coboundaries.dim();
    res.dim_cohomology = res.dim_cocycles - res.dim_coboundaries;
    if (with_representatives) res.representatives = complement_representatives(invariant_cocycles, invariant_coboundaries);
    return res;
}

CohomologyResult invariant_subcomplex_cohomology(const InvariantSetup& setup, std::size_t n) {
    const Representation& rm = setup.radical_module();
    const Subspace inv = invariant_subspace(setup, n);
    CohomologyResult res;
    res.degree = n;
    res.dim_cochain = inv.dim();
    res.dim_cocycles = inv.dim() - rank(differential(rm, n) * inv.as_rows().transpose());
    if (n > 0) {
        const Subspace prev = invariant_subspace(setup, n - 1);
        res.dim_coboundaries = rank(differential(rm, n - 1) * prev.as_rows().transpose());
    }
    res.dim_cohomology = res.dim_cocycles - res.dim_coboundaries;
    return res;
}

}  // namespace liecohom
