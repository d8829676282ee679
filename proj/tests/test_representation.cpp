#include "liecohom/catalog.hpp"
#include "liecohom/representation.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace liecohom;
using namespace liecohom::testing;

TEST_CASE("trivial representations") {
    const auto sl2 = catalog::sl2();
    const auto rho = trivial_rep(sl2, 1);
    CHECK(rho.module_dim() == 1);
    CHECK(rho.action(0).is_zero());
    CHECK_FALSE(validate_rep(rho).has_value());
    const auto empty = trivial_rep(sl2, 0);
    CHECK(empty.module_dim() == 0);
    CHECK_FALSE(validate_rep(empty).has_value());
}

TEST_CASE("adjoint representations") {
    const auto sl2 = catalog::sl2();
    const auto ad = adjoint_rep(sl2);
    CHECK(ad.action(2).to_dense() == std::vector<Vector>{dense({2, 0, 0}), dense({0, -2, 0}), dense({0, 0, 0})});
    const auto abelian = adjoint_rep(catalog::abelian(3));
    for (const auto& a : abelian.actions()) CHECK(a.is_zero());
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto g = catalog::schrodinger(n);
        const auto rho = adjoint_rep(g);
        CHECK(rho.action(g.require_index("z")).is_zero());
        CHECK_FALSE(validate_rep(rho).has_value());
        const auto& h = rho.action(g.require_index("h"));
        for (std::size_t i = 1; i <= n; ++i) {
            const auto x = g.require_index("x" + std::to_string(i));
            const auto y = g.require_index("y" + std::to_string(i));
            CHECK(h.apply(basis_vector(g.dim(), x)) == basis_vector(g.dim(), x));
            Vector minus_y = basis_vector(g.dim(), y);
            minus_y[y] = Rational(-1);
            CHECK(h.apply(basis_vector(g.dim(), y)) == minus_y);
        }
    }
}

TEST_CASE("validate_rep reports the first failing pair") {
    const auto sl2 = catalog::sl2();
    auto actions = adjoint_rep(sl2).actions();
    actions[2] = SparseMatrix::identity(3);
    const auto bad = validate_rep(Representation(sl2, 3, actions));
    REQUIRE(bad.has_value());
    CHECK(bad->i == 0);
    CHECK(bad->j == 1);
}

TEST_CASE("representation law on arbitrary elements") {
    for (const auto& g : {catalog::sl2(), catalog::schrodinger(2), catalog::schrodinger_mod_center(3)}) {
        const auto rho = adjoint_rep(g);
        for (int trial = 0; trial < 5; ++trial) {
            const auto u = random_vector(g.dim()), v = random_vector(g.dim());
            const auto lhs = rho.action(g.bracket(u, v));
            const auto ru = rho.action(u), rv = rho.action(v);
            CHECK(lhs == ru * rv - rv * ru);
        }
    }
}

TEST_CASE("restriction") {
    const std::size_t n = 2;
    const auto g = catalog::schrodinger(n);
    const auto rho = adjoint_rep(g);
    const auto on_h = restrict(rho, range(3, g.dim()));
    CHECK(on_h.algebra().same_structure(catalog::heisenberg(n)));
    CHECK(on_h.module_dim() == 2 * n + 4);
    CHECK_FALSE(validate_rep(on_h).has_value());

    const auto whole = restrict(rho, range(0, g.dim()));
    CHECK(whole.actions() == rho.actions());
    CHECK(whole.algebra().same_structure(g));

    const auto sl2 = catalog::sl2();
    const auto on_e = restrict(adjoint_rep(sl2), {0});
    CHECK(on_e.algebra().dim() == 1);
    CHECK(on_e.action(0) == sl2.ad(0));

    CHECK_THROWS_AS(restrict(rho, {0, 1}), NotASubalgebra);
}

TEST_CASE("restricting twice equals restricting to the composite") {
    const auto g = catalog::schrodinger(3);
    const auto rho = adjoint_rep(g);
    const auto outer = range(2, g.dim());  // h and the Heisenberg part
    const auto twice = restrict(restrict(rho, outer), {0, 6, 7});
    const auto once = restrict(rho, {2, 8, 9});
    CHECK(twice.actions() == once.actions());
    CHECK(twice.algebra().same_structure(once.algebra()));
}
