"""Smoke tests for the python module: exact values over the catalog."""

import os
from fractions import Fraction

import entlp


def test_catalog_lists_the_builtin_problems():
    names = entlp.catalog()
    assert "C5" in names and "Rminus" in names and "A" in names
    assert len(names) == 15


def test_c5_bounds_are_exact():
    assert entlp.guess_bound("catalog:C5") == Fraction(5, 2)
    assert entlp.clique_cover("catalog:C5") == 3
    assert entlp.fractional_clique_cover("catalog:C5") == Fraction(5, 2)
    assert entlp.independence("catalog:C5") == 2
    bounds = entlp.combinatorial_bounds("catalog:C5")
    assert bounds["lower"] == Fraction(5, 2)
    assert bounds["upper_alpha"] == 3
    assert not bounds["acyclic_zero"]


def test_ratio_bounds():
    assert entlp.ratio_bound("catalog:A", use_copies=False) == 1


def test_certificate_verifies():
    cert = os.path.join(os.environ["ENTLP_DATA_DIR"], "certificates", "rminus_1847_276.cert")
    bound, rows = entlp.verify_certificate("catalog:Rminus", cert)
    assert bound == Fraction(1847, 276)
    assert rows == 1920


def test_brute_force_counts():
    wins, colors = entlp.brute_gn("catalog:K3", 2)
    assert (wins, colors) == (4, 2)


def test_export_contains_the_objective():
    text = entlp.export_lp("catalog:C5")
    assert text.startswith("\\ entropy linear program")
    assert "obj: + 1 h_1_2_3_4_5" in text
    assert text == entlp.export_lp("catalog:C5")


def test_validation_flags_nothing_on_the_catalog():
    for name in entlp.catalog():
        assert entlp.validate(f"catalog:{name}") == []


if __name__ == "__main__":
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
                print(f"ok   {name}")
            except AssertionError as e:
                failures += 1
                print(f"FAIL {name}: {e}")
    raise SystemExit(1 if failures else 0)
