#pragma once

#include "liecohom/lie_algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace liecohom::catalog {

/// Basis (e, f, h): [e,f]=h, [h,e]=2e, [h,f]=-2f.
LieAlgebra sl2();

/// Basis (x_1..x_n, y_1..y_n, z): [x_i,y_i]=z. Requires n >= 1.
LieAlgebra heisenberg(std::size_t n);

/// sl2 acting on heisenberg(n): [h,x_i]=x_i, [h,y_i]=-y_i, [e,y_i]=x_i,
/// [f,x_i]=y_i, z fixed. One matrix per element of (e, f, h).
std::vector<SparseMatrix> schrodinger_action(std::size_t n);

/// sl2 ⋉ heisenberg(n); basis (e, f, h, x_1..x_n, y_1..y_n, z).
LieAlgebra schrodinger(std::size_t n);

/// schrodinger(n) modulo its center; basis (e, f, h, x_1..x_n, y_1..y_n).
LieAlgebra schrodinger_mod_center(std::size_t n);

LieAlgebra abelian(std::size_t k);

/// Resolves "sl2", "heisenberg:n", "schrodinger:n", "schrodinger-quotient:n",
/// "abelian:k" or "file:PATH". Throws std::invalid_argument for unknown specs.
LieAlgebra resolve(const std::string& spec);

/// Levi/radical index split of a catalog algebra, where the catalog knows one.
struct Split {
    std::vector<std::size_t> levi;
    std::vector<std::size_t> radical;
};
std::optional<Split> default_split(const std::string& spec);

}  // namespace liecohom::catalog
