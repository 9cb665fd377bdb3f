from itertools import product

import pytest
from hypothesis import given, strategies as st

from minimaj.colored import (
    ColoredLetter,
    ColoredOSP,
    colored_cycle,
    colored_distributions,
    colored_inv,
    colored_minimaj,
    colored_minimaj_brute,
    colored_segmented,
    colored_standardize,
    decolor,
    enum_colored_osp,
    enum_colored_permutations,
    flag_maj,
    format_colored_word,
    parse_colored,
    print_colored,
    prop_4_8_sides,
    verify_colored_lemmas,
    verify_prop_4_8,
    verify_theorem_4_4,
)
from minimaj.partitions import enum_compositions, enum_osp, parse_omp
from minimaj.qpoly import QPoly, binomial_series, f_poly, q_integer
from minimaj.statistics import inv_omp, maj_word, minimaj

SIGMA = "1^1 2^2 4^0|7^2|8^1 9^2|3^1 5^1 6^2"


def L(v, c):
    return ColoredLetter(v, c)


def test_order():
    r, n = 3, 3
    letters = sorted(ColoredLetter(v, c) for v in range(1, n + 1) for c in range(r))
    assert letters[0] == L(1, r - 1)
    assert letters[-1] == L(n, 0)
    assert L(5, 1) < L(1, 0)
    assert L(1, 1) < L(2, 1)


def test_worked_values():
    assert flag_maj([L(3, 0), L(4, 2), L(5, 0), L(1, 2), L(2, 1)], 3) == 17
    sigma = parse_colored(SIGMA)
    assert sigma.r == 3 and sigma.n == 9
    assert colored_inv(sigma) == 24
    assert format_colored_word(*colored_segmented(sigma)) == "1^1 4^0 2^2 . 7^2 . 9^2 8^1 . 6^2 3^1 5^1"
    assert colored_standardize(sigma) == parse_omp("159|3|48|267")


def test_trivial_reductions():
    pi = [L(2, 0), L(1, 0), L(3, 0)]
    assert flag_maj(pi, 1) == maj_word((2, 1, 3))
    assert flag_maj([L(1, 2), L(2, 2), L(3, 2)], 3) == 6
    one = ColoredOSP.from_pairs([[(1, 1), (2, 0), (3, 2)]], 3)
    assert colored_minimaj(one) == 3
    assert colored_segmented(one)[0] == (L(3, 2), L(1, 1), L(2, 0))
    for mu in enum_osp(4):
        sigma = ColoredOSP.from_pairs([[(x, 0) for x in b] for b in mu], 1)
        assert colored_inv(sigma) == inv_omp(mu)
        assert colored_minimaj(sigma) == minimaj(mu)
        assert colored_standardize(sigma) == mu


def test_fast_minimaj_matches_brute_force():
    for n in range(1, 5):
        for r in range(1, 4):
            if n == 4 and r == 3:
                continue  # covered by the lemma sweep below
            for sigma in enum_colored_osp(n, r):
                assert colored_minimaj(sigma) == colored_minimaj_brute(sigma)


def test_lemma_sweep():
    rep = verify_colored_lemmas(4, 3)
    assert rep.passed, rep.failures[:3]
    names = {e.theorem for e in rep.entries}
    assert {"colored-unique-minimizer", "colored-compression", "colored-cycle-commutation",
            "colored-cycle-maj-increment", "colored-standardize-relation"} <= names


def test_cycle_has_order_nr():
    n, r = 3, 2
    x = L(1, 0)
    orbit = [x]
    for _ in range(n * r - 1):
        orbit.append(colored_cycle(orbit[-1], n, r))
    assert len(set(orbit)) == n * r
    assert colored_cycle(orbit[-1], n, r) == x
    assert colored_cycle(L(1, 0), 3, 2) == L(3, 1)
    assert colored_cycle(L(1, 1), 3, 2) == L(3, 0)


def test_colored_equidistribution_small():
    assert colored_distributions(2, 2, (1, 1)) == (
        q_integer(2) ** 2 * f_poly(2, (1, 1)).substitute_power(2),
    ) * 2
    rep = verify_theorem_4_4(3, 2)
    assert rep.passed and len(rep) == 2 * (1 + 2 + 4)


def test_count_of_colored_family():
    assert sum(1 for _ in enum_colored_osp(4, 2)) == 75 * 16
    assert sum(1 for _ in enum_colored_permutations(3, 2)) == 48


def test_last_block_identity():
    lhs, rhs = prop_4_8_sides(4, 2, 3)
    assert lhs == rhs
    for n in range(1, 6):
        assert prop_4_8_sides(n, n, 3)[0] == q_integer(3) ** n
        for a in range(1, n + 1):
            lhs1, rhs1 = prop_4_8_sides(n, a, 1)
            assert lhs1 == rhs1 == binomial_series(a, n - a)
    assert verify_prop_4_8(5, 3).passed
    with pytest.raises(ValueError):
        prop_4_8_sides(3, 4, 2)


def test_parse_errors():
    with pytest.raises(ValueError):
        parse_colored("1^0|1^1")
    with pytest.raises(ValueError):
        parse_colored("1^0||2^0")
    with pytest.raises(ValueError):
        parse_colored("1-0")
    with pytest.raises(ValueError):
        parse_colored("1^3 2^0", r=2)


colored = st.integers(1, 5).flatmap(
    lambda n: st.tuples(
        st.permutations(range(1, n + 1)),
        st.lists(st.integers(0, 2), min_size=n, max_size=n),
        st.lists(st.booleans(), min_size=n - 1, max_size=n - 1),
    )
)


@given(colored)
def test_random_colored_partitions(data):
    perm, colors, cuts = data
    blocks, cur = [], [perm[0]]
    for x, cut in zip(perm[1:], cuts):
        if cut:
            blocks.append(cur)
            cur = []
        cur.append(x)
    blocks.append(cur)
    sigma = ColoredOSP.from_pairs([[(v, colors[v - 1]) for v in b] for b in blocks], 3)
    assert parse_colored(print_colored(sigma), 3) == sigma
    assert decolor(sigma).shape == sigma.shape
    gamma = [colors.count(c) for c in range(3)]
    assert colored_minimaj(sigma) == 3 * minimaj(colored_standardize(sigma)) + gamma[1] + 2 * gamma[2]
