"""The twelve acceptance criteria, one test each, with exact expected values.

Each test prints a single PASS/FAIL line (visible with ``-s`` or in the
summary written by ``hopfsperner acceptance``).
"""

from __future__ import annotations

import pytest

from hopfsperner.acceptance import CRITERIA, run_criterion

EXPECTED = {
    1: {"examples": {"ABCABCABC": 3, "ABCBACABC": 1}, "pair_mismatches": 0},
    2: {"H": 1, "mu_ABC": 9},
    3: {"H": 2, "mu_ABC": 9},
    5: {"H": {"h1#h1": 2, "h1#mirror(h1)": 0, "h1#h2": 3}},
    6: {"bad_d": []},
    8: {"instances": 200, "bound_failures": 0, "index_identity_failures": 0, "prescribed_degree_mismatches": 0},
    9: {"disc_inconsistent": 0, "sphere_inconsistent": 0},
    10: {"H_subdivided_h1": 1, "H_reversed_h1": -1, "subdivision_degree_failures": 0, "reversal_degree_failures": 0},
    12: {"sphere_homology": True, "snf_failures": 0, "boundary_squared_nonzero_columns": 0, "H_under_random_orders": [1]},
}


def check_4(detail):
    for d in (2, 3, 4):
        row = detail["rows"][str(d)]
        quad = (2 * d - 1) * (3 * d - 2)
        assert row["source"] == "asset"
        assert row["H"] == d
        assert row["vertices"] == 6 * d
        assert row["mu"] == {"ABC": 6 * d - 3, "ABD": quad, "ACD": quad, "BCD": quad}


def test_family_substitute_without_assets(monkeypatch):
    # with the family assets hidden the criterion falls back to connected sums
    from hopfsperner import acceptance
    from hopfsperner.errors import AssetMissing

    real = acceptance.load_reference

    def no_family(name, d=None, **kw):
        if name == "hd":
            raise AssetMissing("hidden for this test")
        return real(name, d, **kw)

    monkeypatch.setattr(acceptance, "load_reference", no_family)
    detail = acceptance.criterion_4()
    assert detail["passed"]
    for d in (2, 3, 4):
        row = detail["rows"][str(d)]
        assert row["source"] == "connected-sum substitute"
        assert row["H"] == d
        assert row["mu_ABC"] == 9 * ((d + 1) // 2)


def check_7(detail):
    inst = detail["instances"]
    assert inst["cone(h1)"]["d"] == 1 and inst["cone(h1)"]["fully_labeled_tetrahedra"] >= 9
    assert inst["cone(h1#h1)"]["d"] == 2 and inst["cone(h1#h1)"]["fully_labeled_tetrahedra"] >= 9


def check_11(detail):
    for name in ("h1", "h2"):
        comps = detail["components"][name]
        assert comps
        for c in comps:
            assert c["homology"] == ["Z", "Z", "0", "0"]
            assert c["boundary_euler"] == 0 and c["boundary_H1"] == "Z + Z"


CHECKS = {4: check_4, 7: check_7, 11: check_11}


@pytest.mark.parametrize("number", [n for n, _, _ in CRITERIA])
def test_criterion(number, capsys):
    result = run_criterion(number)
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.detail
    if number in EXPECTED:
        got = {k: result.detail[k] for k in EXPECTED[number]}
        assert got == EXPECTED[number]
    else:
        CHECKS[number](result.detail)
