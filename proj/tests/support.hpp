#pragma once

#include "liecohom/linalg.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <vector>

namespace liecohom::testing {

/// Fixed-seed generator so every randomized test is reproducible.
inline std::mt19937_64& rng() {
    static std::mt19937_64 engine(20240611);
    return engine;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Vector random_vector(std::size_t n, long lo = -3, long hi = 3) {
    Vector v(n);
    for (auto& x : v) x = Rational(uniform(lo, hi));
    return v;
}

/// Random integer matrix in which roughly `density` percent of entries are nonzero.
inline SparseMatrix random_matrix(std::size_t rows, std::size_t cols, long lo = -3, long hi = 3, int density = 100) {
    std::vector<Vector> dense(rows, Vector(cols));
    for (auto& row : dense) {
        for (auto& x : row) {
            if (uniform(1, 100) <= density) x = Rational(uniform(lo, hi));
        }
    }
    return SparseMatrix::from_dense(dense, cols);
}

inline std::vector<std::size_t> random_permutation(std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng());
    return p;
}

inline std::vector<std::size_t> range(std::size_t lo, std::size_t hi) {
    std::vector<std::size_t> v(hi - lo);
    std::iota(v.begin(), v.end(), lo);
    return v;
}

inline Vector dense(std::initializer_list<long> xs) {
    Vector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

}  // namespace liecohom::testing

#include "liecohom/lie_algebra.hpp"

#include <string>
#include <tuple>

namespace liecohom::testing {

/// Algebra from a labelled table of (left, right, [(coefficient, label)]).
using Term = std::pair<long, std::string>;
inline LieAlgebra table(const std::string& name, std::vector<std::string> labels,
                        const std::vector<std::tuple<std::string, std::string, std::vector<Term>>>& rows) {
    LieAlgebra shell(name, labels);
    std::vector<BracketEntry> entries;
    for (const auto& [l, r, terms] : rows) {
        std::size_t i = shell.require_index(l), j = shell.require_index(r);
        SparseVector v;
        for (const auto& [c, label] : terms) v.push_back({shell.require_index(label), Rational(i < j ? c : -c)});
        std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
        entries.push_back({std::min(i, j), std::max(i, j), v});
    }
    return LieAlgebra(name, std::move(labels), entries);
}

inline Vector element(const LieAlgebra& g, const std::vector<Term>& terms) {
    Vector v(g.dim());
    for (const auto& [c, label] : terms) v[g.require_index(label)] += Rational(c);
    return v;
}

}  // namespace liecohom::testing
