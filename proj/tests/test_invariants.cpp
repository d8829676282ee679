#include "liecohom/catalog.hpp"
#include "liecohom/cochain.hpp"
#include "liecohom/invariants.hpp"
#include "liecohom/oracle.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace liecohom;
using namespace liecohom::testing;

namespace {

InvariantSetup levi_split(const LieAlgebra& g, const Representation& m) {
    return InvariantSetup(m, {0, 1, 2}, range(3, g.dim()));
}

std::vector<InvariantSetup> catalog_setups() {
    std::vector<InvariantSetup> out;
    for (const auto& g : {catalog::schrodinger(1), catalog::schrodinger(2), catalog::schrodinger_mod_center(2)}) {
        out.push_back(levi_split(g, trivial_rep(g)));
        out.push_back(levi_split(g, adjoint_rep(g)));
    }
    return out;
}

}  // namespace

TEST_CASE("setup validation") {
    const auto g = catalog::schrodinger(1);
    const auto m = adjoint_rep(g);
    CHECK_NOTHROW(levi_split(g, m));
    CHECK_THROWS_AS(InvariantSetup(m, {0, 1}, range(3, 6)), std::invalid_argument);       // h missing
    CHECK_THROWS_AS(InvariantSetup(m, {0, 1, 2, 3}, range(3, 6)), std::invalid_argument);  // overlap
    CHECK_THROWS_AS(InvariantSetup(m, {0, 1, 3}, {2, 4, 5}), std::invalid_argument);      // not a subalgebra
    CHECK_THROWS_AS(InvariantSetup(m, {3, 4, 5}, {0, 1, 2}), std::invalid_argument);      // sl2 is not an ideal
}

TEST_CASE("action of h on two-cochains supported on a pair of x's") {
    const std::size_t n = 2;
    const auto g = catalog::schrodinger(n);
    const auto setup = levi_split(g, adjoint_rep(g));
    const auto& rm = setup.radical_module();
    const auto h = element(g, {{1, "h"}});
    const auto act = cochain_action(setup, h, 2);
    const IndexTuple x1x2{0, 1};  // local radical indices of x1, x2
    Vector phi(cochain_dim(rm, 2));
    const auto value = random_vector(g.dim());
    for (std::size_t m = 0; m < g.dim(); ++m) phi[cochain_index(rm, x1x2, m)] = value[m];
    const auto out = act.apply(phi);
    const auto hv = g.bracket(h, value);
    for (std::size_t m = 0; m < g.dim(); ++m) CHECK(out[cochain_index(rm, x1x2, m)] == hv[m] - Rational(2) * value[m]);
    CHECK(cochain_action(setup, Vector(g.dim()), 2).is_zero());
    CHECK_THROWS_AS(cochain_action(setup, element(g, {{1, "x1"}}), 2), std::invalid_argument);
}

TEST_CASE("action of h on trivial one-cochains") {
    const std::size_t n = 3;
    const auto g = catalog::schrodinger(n);
    const auto setup = levi_split(g, trivial_rep(g));
    const auto act = cochain_action(setup, element(g, {{1, "h"}}), 1);
    const auto omega = random_vector(2 * n + 1);
    const auto out = act.apply(omega);
    for (std::size_t i = 0; i < n; ++i) {
        CHECK(out[i] == -omega[i]);          // x_i
        CHECK(out[n + i] == omega[n + i]);   // y_i
    }
    CHECK(out[2 * n] == Rational(0));  // z
}

TEST_CASE("invariant subspace examples") {
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto g = catalog::schrodinger(n);
        const auto setup = levi_split(g, adjoint_rep(g));
        CHECK(invariant_subspace(setup, 1).dim() == n * n + 1);
        const auto inv0 = invariant_subspace(setup, 0);
        CHECK(inv0 == Subspace::span(g.dim(), std::vector<Vector>{element(g, {{1, "z"}})}));
    }
    const auto g = catalog::heisenberg(2);
    const InvariantSetup no_levi(trivial_rep(g), {}, range(0, g.dim()));
    CHECK(invariant_subspace(no_levi, 2) == Subspace::full(cochain_dim(trivial_rep(g), 2)));
}

TEST_CASE("invariant cohomology examples") {
    {
        const auto g = catalog::schrodinger(3);
        const auto r = invariant_cohomology(levi_split(g, adjoint_rep(g)), 2);
        CHECK(r.dim_cocycles == 6);
        CHECK(r.dim_coboundaries == 6);
        CHECK(r.dim_cohomology == 0);
    }
    {
        const auto g = catalog::schrodinger(2);
        const auto r = invariant_cohomology(levi_split(g, adjoint_rep(g)), 2, true);
        CHECK(r.dim_cocycles == 4);
        CHECK(r.dim_coboundaries == 3);
        CHECK(r.dim_cohomology == 1);
        REQUIRE(r.representatives.size() == 1);
    }
    {
        const auto g = catalog::schrodinger(3);
        const auto r = invariant_cohomology(levi_split(g, trivial_rep(g)), 2);
        CHECK(r.dim_cocycles == 6);
        CHECK(r.dim_coboundaries == 1);
        CHECK(r.dim_cohomology == 5);
    }
    {
        // The quotient by the center: no invariant 2-cocycles survive.
        const auto g = catalog::schrodinger_mod_center(2);
        const auto r = invariant_cohomology(levi_split(g, adjoint_rep(g)), 2);
        CHECK(r.dim_cocycles == 0);
        CHECK(r.dim_coboundaries == 0);
        CHECK(r.dim_cohomology == 0);
    }
}

TEST_CASE("invariant counts agree with the rank-only formulas") {
    for (const auto& setup : catalog_setups()) {
        for (std::size_t n = 0; n <= 2; ++n) {
            const auto r = invariant_cohomology(setup, n);
            CHECK(oracle::invariant_dims(setup, n) == oracle::Dims{r.dim_cocycles, r.dim_coboundaries, r.dim_cohomology});
        }
    }
}

TEST_CASE("differential commutes with the action") {
    for (const auto& setup : catalog_setups()) {
        const auto& rm = setup.radical_module();
        for (std::size_t n = 0; n <= 2; ++n) {
            const auto d = differential(rm, n);
            for (std::size_t i : setup.levi()) {
                const auto v = basis_vector(setup.ambient().dim(), i);
                CHECK(cochain_action(setup, v, n + 1) * d == d * cochain_action(setup, v, n));
            }
        }
    }
}

TEST_CASE("action matrices form a representation of the levi part") {
    for (const auto& setup : catalog_setups()) {
        const auto& g = setup.ambient();
        for (std::size_t n = 0; n <= 2; ++n) {
            for (std::size_t a : setup.levi()) {
                for (std::size_t b : setup.levi()) {
                    const auto u = basis_vector(g.dim(), a), v = basis_vector(g.dim(), b);
                    const auto au = cochain_action(setup, u, n), av = cochain_action(setup, v, n);
                    CHECK(cochain_action(setup, g.bracket(u, v), n) == au * av - av * au);
                }
            }
        }
    }
}

TEST_CASE("invariant subcomplex gives the same dimensions") {
    for (const auto& setup : catalog_setups()) {
        for (std::size_t n = 0; n <= 2; ++n) {
            CHECK(invariant_subcomplex_cohomology(setup, n).dim_cohomology == invariant_cohomology(setup, n).dim_cohomology);
        }
    }
}

TEST_CASE("with no levi part invariant cohomology is ordinary cohomology") {
    for (const auto& g : {catalog::heisenberg(2), catalog::schrodinger(1)}) {
        for (const auto& m : {trivial_rep(g), adjoint_rep(g)}) {
            const InvariantSetup setup(m, {}, range(0, g.dim()));
            for (std::size_t n = 0; n <= 2; ++n) {
                const auto a = invariant_cohomology(setup, n);
                const auto b = cohomology(m, n);
                CHECK(a.dim_cochain == b.dim_cochain);
                CHECK(a.dim_cocycles == b.dim_cocycles);
                CHECK(a.dim_coboundaries == b.dim_coboundaries);
            }
        }
    }
}
