#pragma once

#include "liecohom/factorization.hpp"

#include <string>
#include <utility>
#include <vector>

namespace liecohom::claims {

enum class Status { Pass, Fail, Discrepancy };
std::string to_string(Status s);

/// One published dimension or membership claim, recomputed.
struct Row {
    std::string claim;
    /// Published value; two values joined by " | " when sources disagree.
    std::string expected;
    std::string computed;
    /// Same quantity from the dense reference path.
    std::string oracle;
    Status status = Status::Fail;
    bool oracle_agrees = false;
    std::string note;
};

/// Alternating 2-cochain on rho's algebra given by
/// (left label, right label) -> sum of (coefficient, module basis label).
using LabelledTerms = std::vector<std::pair<std::pair<std::string, std::string>, std::vector<std::pair<Rational, std::string>>>>;
Vector two_cochain(const Representation& rho, const LabelledTerms& terms);

/// Cocycle spanning H^2 of schrodinger(2) with adjoint coefficients.
Vector sch2_cocycle();
/// The corresponding cochain on schrodinger_mod_center(2).
Vector g2_cocycle();

/// Every claim for n = 2..n_max, in a fixed order. Rows are computed
/// concurrently; ordering does not depend on completion order.
std::vector<Row> verify_paper(std::size_t n_max);

}  // namespace liecohom::claims
