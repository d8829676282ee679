#pragma once

#include "liecohom/cochain.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace liecohom {

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Algebra files:
//   {"name": str, "basis": [str, ...],
//    "brackets": [{"left": i, "right": j, "result": [[k, "p/q"], ...]}, ...]}
// 0-based indices, i < j only; unlisted pairs bracket to zero.

nlohmann::json algebra_to_json(const LieAlgebra& g);
/// Throws ParseError on malformed input and NotALieAlgebra when Jacobi fails.
LieAlgebra algebra_from_json(const nlohmann::json& j);

std::string serialize(const LieAlgebra& g);
LieAlgebra parse_algebra(const std::string& text);
LieAlgebra load_algebra_file(const std::string& path);

// Cochains: [[[i_1, ..., i_n], m, "p/q"], ...] over the lexicographic basis.

nlohmann::json cochain_to_json(const Representation& rho, std::size_t n, std::span<const Rational> phi);
Vector cochain_from_json(const Representation& rho, std::size_t n, const nlohmann::json& j);

}  // namespace liecohom
