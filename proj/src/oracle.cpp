#include "liecohom/oracle.hpp"

#include <algorithm>

namespace liecohom::oracle {

std::size_t dense_rank(std::vector<Vector> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c].is_zero()) continue;
            const Rational f = rows[i][c] / rows[r][c];
            for (std::size_t k = c; k < cols; ++k) {
                if (!rows[r][k].is_zero()) rows[i][k] -= f * rows[r][k];
            }
        }
        ++r;
    }
    return r;
}

std::size_t dense_rank(const SparseMatrix& m) { return dense_rank(m.to_dense()); }

namespace {

void enumerate(std::size_t dim, std::size_t n, std::size_t start, std::vector<std::size_t>& current,
               std::map<std::vector<std::size_t>, std::size_t>& out) {
    if (current.size() == n) {
        const std::size_t next = out.size();
        out.emplace(current, next);
        return;
    }
    for (std::size_t v = start; v < dim; ++v) {
        current.push_back(v);
        enumerate(dim, n, v + 1, current, out);
        current.pop_back();
    }
}

std::map<std::vector<std::size_t>, std::size_t> tuple_index(std::size_t dim, std::size_t n) {
    std::map<std::vector<std::size_t>, std::size_t> out;
    std::vector<std::size_t> current;
    enumerate(dim, n, 0, current, out);
    return out;
}

class CochainEvaluator {
public:
    CochainEvaluator(const Representation& rho, std::size_t n, std::span<const Rational> phi)
        : mdim_(rho.module_dim()), index_(tuple_index(rho.algebra().dim(), n)), phi_(phi) {}

    // phi(b_{a_1}, ..., b_{a_n}) for arbitrary argument order.
    Vector value(const std::vector<std::size_t>& args) const {
        Vector out(mdim_);
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < args.size(); ++i) {
            for (std::size_t j = i + 1; j < args.size(); ++j) {
                if (args[i] == args[j]) return out;
                if (args[i] > args[j]) ++inversions;
            }
        }
        std::vector<std::size_t> sorted = args;
        std::sort(sorted.begin(), sorted.end());
        const std::size_t base = index_.at(sorted) * mdim_;
        for (std::size_t m = 0; m < mdim_; ++m) {
            out[m] = inversions % 2 == 0 ? phi_[base + m] : -phi_[base + m];
        }
        return out;
    }

private:
    std::size_t mdim_;
    std::map<std::vector<std::size_t>, std::size_t> index_;
    std::span<const Rational> phi_;
};

}  // namespace

Vector evaluate_differential(const Representation& rho, std::size_t n, std::span<const Rational> phi) {
    const LieAlgebra& g = rho.algebra();
    const std::size_t dim = g.dim();
    const std::size_t mdim = rho.module_dim();
    const CochainEvaluator eval(rho, n, phi);
    std::vector<std::vector<Vector>> actions;
    for (std::size_t i = 0; i < dim; ++i) actions.push_back(rho.action(i).to_dense());

    const auto targets = tuple_index(dim, n + 1);
    Vector out(targets.size() * mdim);
    for (const auto& [T, t] : targets) {
        Vector acc(mdim);
        for (std::size_t i = 0; i <= n; ++i) {
            std::vector<std::size_t> rest;
            for (std::size_t l = 0; l <= n; ++l) {
                if (l != i) rest.push_back(T[l]);
            }
            const Vector v = eval.value(rest);
            for (std::size_t a = 0; a < mdim; ++a) {
                Rational s;
                for (std::size_t b = 0; b < mdim; ++b) s += actions[T[i]][a][b] * v[b];
                if (i % 2 == 0) acc[a] += s; else acc[a] -= s;
            }
        }
        for (std::size_t i = 0; i <= n; ++i) {
            for (std::size_t j = i + 1; j <= n; ++j) {
                for (std::size_t k = 0; k < dim; ++k) {
                    const Rational c = g.structure_constant(T[i], T[j], k);
                    if (c.is_zero()) continue;
                    std::vector<std::size_t> args{k};
                    for (std::size_t l = 0; l <= n; ++l) {
                        if (l != i && l != j) args.push_back(T[l]);
                    }
                    const Vector v = eval.value(args);
                    const Rational coeff = (i + j) % 2 == 0 ? c : -c;
                    for (std::size_t a = 0; a < mdim; ++a) acc[a] += coeff * v[a];
                }
            }
        }
        for (std::size_t a = 0; a < mdim; ++a) out[t * mdim + a] = acc[a];
    }
    return out;
}

Dims cohomology_dims(const Representation& rho, std::size_t n) {
    Dims d;
    d.cocycles = cochain_dim(rho, n) - dense_rank(differential(rho, n));
    d.coboundaries = n == 0 ? 0 : dense_rank(differential(rho, n - 1));
    d.cohomology = d.cocycles - d.coboundaries;
    return d;
}

Dims invariant_dims(const InvariantSetup& setup, std::size_t n) {
    const Representation& rm = setup.radical_module();
    std::vector<SparseMatrix> actions;
    for (std::size_t i : setup.levi()) {
        actions.push_back(cochain_action(setup, basis_vector(setup.ambient().dim(), i), n));
    }
    const SparseMatrix dn = differential(rm, n);
    std::vector<Vector> stacked = dn.to_dense();
    for (const auto& a : actions) {
        auto rows = a.to_dense();
        stacked.insert(stacked.end(), rows.begin(), rows.end());
    }
    Dims d;
    d.cocycles = cochain_dim(rm, n) - dense_rank(std::move(stacked));
    if (n > 0) {
        const SparseMatrix prev = differential(rm, n - 1);
        const std::size_t rank_prev = dense_rank(prev);
        std::size_t rank_composed = 0;
        if (!actions.empty()) {
            std::vector<Vector> composed;
            for (const auto& a : actions) {
                auto rows = (a * prev).to_dense();
                composed.insert(composed.end(), rows.begin(), rows.end());
            }
            rank_composed = dense_rank(std::move(composed));
        }
        d.coboundaries = rank_prev - rank_composed;
    }
    d.cohomology = d.cocycles - d.coboundaries;
    return d;
}

bool in_column_span(const SparseMatrix& m, std::span<const Rational> phi) {
    if (phi.size() != m.rows()) throw DimensionMismatch("in_column_span: vector length differs from row count");
    std::vector<Vector> cols = m.transpose().to_dense();
    const std::size_t base = dense_rank(cols);
    cols.emplace_back(phi.begin(), phi.end());
    return dense_rank(std::move(cols)) == base;
}

}  // namespace liecohom::oracle
