"""Smoke tests for the python bindings: every exported call, golden values."""

import os

import pytest

import eocalc


def test_dimension_goldens():
    assert eocalc.dimension(2, 1) == "3"
    assert eocalc.dimension(2, 2) == "35"
    assert eocalc.dimension(1, 3) == "1"  # full truncation: the quotient is the ground field


def test_dimension_is_odd_for_a_spread_of_shapes():
    for n in range(1, 4):
        for m in range(0, 4):
            assert int(eocalc.dimension(n, m)) % 2 == 1


def test_poincare_series_matches_dimension():
    coeffs = eocalc.poincare_series(2, 2)
    assert coeffs[0] == "1"
    assert sum(int(c) for c in coeffs) == 35
    # palindromic: the quotient satisfies Poincare duality in this grading
    assert coeffs == coeffs[::-1]


def test_series_division_exact_everywhere_in_range():
    for n in range(1, 5):
        for m in range(1, 5):
            assert eocalc.series_division_exact(n, m)


def test_gaussian_binomial():
    assert eocalc.gaussian_binomial(4, 2) == "35"
    assert eocalc.gaussian_binomial(12, 5) == str(
        # product formula evaluated independently
        _gauss(12, 5)
    )


def _gauss(N, M):
    num, den = 1, 1
    for i in range(M):
        num *= 2 ** (N - i) - 1
        den *= 2 ** (i + 1) - 1
    assert num % den == 0
    return num // den


def test_orbit_counts():
    assert len(eocalc.orbits(1)) == 2
    assert len(eocalc.orbits(2)) == 3
    assert len(eocalc.orbits(3)) == 6


def test_filtration_shape():
    table = eocalc.filtration(3)
    gradings = [row["grading"] for row in table["rows"]]
    assert gradings == sorted(gradings)
    assert gradings[0] == 0 and gradings[-1] == 4


def test_k0_relation_has_trace():
    rel = eocalc.k0_relation(2)
    assert rel["mod_torsion"] is False
    assert [s["rule"] for s in rel["trace"]][0] == "koszul_layers"
    assert len(rel["rhs"]) == 4


def test_height_drop_chain():
    rels = eocalc.height_drop(3)
    assert len(rels) == 3
    for k, rel in enumerate(rels, start=1):
        assert rel["mod_torsion"] is True
        (lhs_term,) = rel["lhs"]
        assert lhs_term["coefficient"] == str(2**k)


def test_moore_gate():
    ruled_out = eocalc.moore_gate([1, 1])
    assert ruled_out["status"] == "RuledOut"
    assert ruled_out["existence_implied"] is False
    open_case = eocalc.moore_gate([1, 2])
    assert open_case["status"] == "NotRuledOut"


def test_steenrod_conjugates():
    zetas = eocalc.steenrod_conjugates(1)
    assert zetas[0] == "xi1"
    assert zetas[1] == "xi1^3"


def test_relation_file_checks():
    data = os.environ["EOCALC_DATA"]
    path = os.path.join(data, "c4_m1.json")
    assert eocalc.nilpotence(path, "t1")
    report = eocalc.regularity(path)
    assert report["regular"] is True
    assert report["quotient_dimension"] == 3


def test_resource_limit_is_a_python_exception():
    with pytest.raises(eocalc.ResourceLimitError):
        eocalc.poincare_series(4, 4)  # numerator degree far beyond the cap


def test_bad_input_is_a_value_error():
    with pytest.raises(ValueError):
        eocalc.dimension(0, 1)
