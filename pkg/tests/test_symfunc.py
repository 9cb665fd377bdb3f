import pytest

from minimaj.partitions import enum_partitions
from minimaj.qpoly import QPoly
from minimaj.symfunc import (
    StandardTableau,
    SymFuncExpansion,
    descent_class_count,
    descent_refined_expansion,
    hook_length_count,
    is_schur_positive,
    kostka,
    kostka_ssyt_brute,
    monomial_to_schur,
    rearrangements,
    schur_coeff_formula,
    schur_expansion_formula,
    schur_to_monomial,
    syt_enumerate,
    val_coefficient,
    val_expansion,
)


def test_syt_counts_match_hook_length_formula():
    for n in range(1, 8):
        for lam in enum_partitions(n):
            tabs = list(syt_enumerate(lam))
            assert len(tabs) == hook_length_count(lam)
            assert len({t.rows for t in tabs}) == len(tabs)


def test_tableau_descents():
    t = StandardTableau(((1, 3), (2,)))
    assert t.shape == (2, 1)
    assert t.descents() == (1,)


def test_kostka_matches_semistandard_count():
    for n in range(1, 6):
        parts = list(enum_partitions(n))
        for lam in parts:
            for mu in parts:
                assert kostka(lam, mu) == kostka_ssyt_brute(lam, mu)


def test_kostka_unitriangular():
    parts = list(enum_partitions(5))
    for i, lam in enumerate(parts):
        assert kostka(lam, lam) == 1
        for mu in parts[:i]:
            assert kostka(lam, mu) == 0


def test_val_3_1_worked_example():
    mono = val_expansion(3, 1)
    assert mono[(1, 1, 1)] == QPoly([2, 3, 1])
    assert mono[(2, 1)] == QPoly([1, 1])
    assert mono[(3,)] == QPoly()
    schur = monomial_to_schur(mono)
    assert schur[(1, 1, 1)] == QPoly([0, 1, 1])
    assert schur[(2, 1)] == QPoly([1, 1])
    assert schur[(3,)] == QPoly()
    assert schur == schur_expansion_formula(3, 1)


def test_formula_agrees_with_basis_change():
    for n in range(1, 6):
        for k in range(n):
            converted = monomial_to_schur(val_expansion(n, k))
            assert converted == schur_expansion_formula(n, k)
            assert is_schur_positive(converted)
            assert val_expansion(n, k, "inv") == val_expansion(n, k)


def test_basis_change_roundtrip():
    e = val_expansion(4, 1)
    assert schur_to_monomial(monomial_to_schur(e)) == e
    with pytest.raises(ValueError):
        monomial_to_schur(monomial_to_schur(e))


def test_coefficient_is_rearrangement_invariant():
    for beta in rearrangements((2, 1, 1), 4):
        assert val_coefficient(beta, 1) == val_coefficient((2, 1, 1), 1)


def test_schur_formula_validates():
    with pytest.raises(ValueError):
        schur_coeff_formula((2, 1), 4, 1)
    with pytest.raises(ValueError):
        schur_coeff_formula((2, 1), 3, 0)


def test_expansion_rejects_non_partitions():
    with pytest.raises(ValueError):
        SymFuncExpansion("monomial", 3, {(1, 2): QPoly([1])})
    with pytest.raises(ValueError):
        SymFuncExpansion("elementary", 3)


def test_descent_classes():
    # singleton blocks, descent set {1}: words read as permutations with Des = {1}
    assert descent_class_count((1, 1, 1), 3, (1,)) == 2
    e = descent_refined_expansion(3, 2, (1,))
    assert e[(1, 1, 1)].eval_at_one() == descent_class_count((1, 1, 1), 2, (1,))
    with pytest.raises(ValueError):
        descent_refined_expansion(3, 2, (3,))
