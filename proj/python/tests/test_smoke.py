from fractions import Fraction

import pytest

import liecohom as lc


def test_catalog_and_brackets():
    g = lc.sl2()
    assert g.labels == ["e", "f", "h"]
    assert g.bracket([1, 0, 0], [0, 1, 0]) == [0, 0, 1]
    assert g.validate() is None
    s = lc.schrodinger(3)
    assert s.dim == 10
    assert s.center_dim() == 1
    assert lc.resolve("schrodinger-quotient:2").dim == 7


def test_trivial_second_cohomology():
    for n, want in [(2, 2), (3, 5), (4, 9)]:
        r = lc.cohomology(lc.trivial_rep(lc.schrodinger(n)), 2)
        assert r["dim_cohomology"] == want


def test_adjoint_cohomology_and_factorization():
    g = lc.schrodinger(3)
    assert lc.cohomology(lc.adjoint_rep(g), 2)["dim_cohomology"] == 0
    report = lc.hs_crosscheck(lc.levi_split(lc.adjoint_rep(g)), 2)
    assert report == {"direct": 0, "factorized": 0, "agree": True}


def test_invariant_counts():
    g = lc.schrodinger(2)
    r = lc.invariant_cohomology(lc.levi_split(lc.adjoint_rep(g)), 2, representatives=True)
    assert (r["dim_cocycles"], r["dim_coboundaries"], r["dim_cohomology"]) == (4, 3, 1)
    assert len(r["representatives"]) == 1


def test_derivations():
    g = lc.schrodinger(3)
    assert g.derivation_dim() == 13
    assert g.inner_derivation_dim() == 9


def test_extension_from_representative():
    g = lc.schrodinger(2)
    r = lc.cohomology(lc.trivial_rep(g), 2, representatives=True)
    rep = r["representatives"][0]
    assert all(isinstance(x, Fraction) for x in rep)
    assert lc.is_cocycle(lc.trivial_rep(g), 2, rep)
    ext = lc.central_extension(g, rep)
    assert ext.dim == 9
    assert ext.validate() is None


def test_extension_rejects_non_cocycle():
    g = lc.schrodinger(1)
    phi = [0] * lc.cochain_dim(lc.trivial_rep(g), 2)
    phi[2] = 1  # phi(e, x1) = 1
    with pytest.raises(lc.NotACocycle):
        lc.central_extension(g, phi)


def test_round_trip_and_rejection():
    text = lc.serialize(lc.sl2())
    assert lc.parse_algebra(text).same_structure(lc.sl2())
    bad = (
        '{"name": "bad", "basis": ["e", "f", "h"], "brackets": ['
        '{"left": 0, "right": 1, "result": [[2, "1"]]},'
        '{"left": 0, "right": 2, "result": [[0, "-1"]]},'
        '{"left": 1, "right": 2, "result": [[1, "2"]]}]}'
    )
    with pytest.raises(lc.NotALieAlgebra):
        lc.parse_algebra(bad)
    with pytest.raises(ValueError):
        lc.parse_algebra("{")


def test_fraction_inputs():
    g = lc.heisenberg(1)
    assert g.bracket([Fraction(1, 2), 0, 0], ["2/3", 0, 0]) == [0, 0, 0]
    assert g.bracket([Fraction(1, 2), 0, 0], [0, "2/3", 0]) == [0, 0, Fraction(1, 3)]


def test_verify_paper_rows():
    rows = lc.verify_paper(2)
    assert all(r["oracle_agrees"] for r in rows)
    statuses = {r["claim"]: r["status"] for r in rows}
    assert statuses["dim H^2(sch_2, C)"] == "PASS"
    assert statuses["dim H^2(sch_2, sch_2)"] == "DISCREPANCY"
