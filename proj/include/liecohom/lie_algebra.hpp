#pragma once

#include "liecohom/linalg.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace liecohom {

/// [b_left, b_right] = sum of result entries, with left < right.
struct BracketEntry {
    std::size_t left;
    std::size_t right;
    SparseVector result;
};

/// Finite-dimensional Lie algebra over Q given by structure constants on a
/// labelled basis. Only [b_i, b_j] with i < j is stored; the other orders
/// follow from antisymmetry. Construction checks shape only; the Jacobi
/// identity is checked by validate().
class LieAlgebra {
public:
    LieAlgebra() = default;
    LieAlgebra(std::string name, std::vector<std::string> labels, const std::vector<BracketEntry>& brackets = {});

    const std::string& name() const { return name_; }
    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<std::size_t> index_of(const std::string& label) const;
    std::size_t require_index(const std::string& label) const;

    /// [b_i, b_j] for any i, j.
    SparseVector bracket_basis(std::size_t i, std::size_t j) const;
    Rational structure_constant(std::size_t i, std::size_t j, std::size_t k) const;
    Vector bracket(std::span<const Rational> u, std::span<const Rational> v) const;

    /// Matrix of ad_{b_i}: column j holds [b_i, b_j].
    SparseMatrix ad(std::size_t i) const;
    /// Matrix of ad_u for an arbitrary element u.
    SparseMatrix ad(std::span<const Rational> u) const;

    /// Nonzero brackets in (left, right) order.
    std::vector<BracketEntry> brackets() const;

    LieAlgebra renamed(std::string name) const;

    /// Equal structure constants and labels; the name is ignored.
    bool same_structure(const LieAlgebra& other) const;

private:
    std::string name_;
    std::vector<std::string> labels_;
    std::map<std::pair<std::size_t, std::size_t>, SparseVector> table_;
};

/// Basis element b_i as a coordinate vector.
Vector basis_vector(std::size_t dim, std::size_t i);

struct JacobiViolation {
    std::size_t i, j, k;
    /// [[b_i,b_j],b_k] + [[b_j,b_k],b_i] + [[b_k,b_i],b_j]
    Vector residual;
};

/// Checks Jacobi on every basis triple i < j < k; returns the first failure.
std::optional<JacobiViolation> validate(const LieAlgebra& g);

/// Thrown where an algebra is required to satisfy Jacobi and does not.
class NotALieAlgebra : public std::invalid_argument {
public:
    NotALieAlgebra(const LieAlgebra& g, JacobiViolation witness);
    const JacobiViolation& witness() const { return witness_; }
    const std::vector<std::string>& labels() const { return labels_; }

private:
    JacobiViolation witness_;
    std::vector<std::string> labels_;
};

Subspace center(const LieAlgebra& g);

/// Solution space of the Leibniz system. Derivation matrices are flattened
/// row-major: entry (r, c) sits at r * dim + c, where D b_c = sum_r D(r,c) b_r.
Subspace derivation_space(const LieAlgebra& g);
std::vector<SparseMatrix> derivations(const LieAlgebra& g);
Subspace inner_derivations(const LieAlgebra& g);

/// Matrix of a flattened derivation and back.
SparseMatrix unflatten(std::span<const Rational> flat, std::size_t dim);
Vector flatten(const SparseMatrix& m);

bool is_derivation(const LieAlgebra& g, const SparseMatrix& d);

class NotAnIdeal : public std::invalid_argument {
public:
    NotAnIdeal(std::size_t basis_index, std::size_t ideal_vector);
    /// [b_basis_index, ideal.basis()[ideal_vector]] escapes the ideal.
    std::size_t basis_index;
    std::size_t ideal_vector;
};

/// g / ideal on the basis elements whose indices are not pivots of the
/// ideal's echelon basis. Output is validated.
LieAlgebra quotient(const LieAlgebra& g, const Subspace& ideal, std::string name = {});

class ActionNotDerivation : public std::invalid_argument {
public:
    ActionNotDerivation(std::size_t s_index, std::size_t i, std::size_t j);
    std::size_t s_index, i, j;
};

class ActionNotHomomorphism : public std::invalid_argument {
public:
    ActionNotHomomorphism(std::size_t i, std::size_t j);
    std::size_t i, j;
};

/// s ⋉ r where action[a] is the derivation of r by which b_a of s acts.
/// Basis is basis(s) followed by basis(r). Output is validated.
LieAlgebra semidirect(const LieAlgebra& s, const LieAlgebra& r, const std::vector<SparseMatrix>& action,
                      std::string name = {});

class NotASubalgebra : public std::invalid_argument {
public:
    NotASubalgebra(std::size_t i, std::size_t j);
    std::size_t i, j;
};

/// Subalgebra spanned by the listed basis elements (strictly increasing).
LieAlgebra coordinate_subalgebra(const LieAlgebra& g, const std::vector<std::size_t>& indices, std::string name = {});

/// Same algebra with basis reordered: new basis element p is old element perm[p].
LieAlgebra permute_basis(const LieAlgebra& g, const std::vector<std::size_t>& perm);

}  // namespace liecohom
