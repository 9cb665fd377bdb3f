import pytest
from hypothesis import given, strategies as st

from minimaj.partitions import OrderedMultisetPartition, enum_omp, enum_osp, enum_weak_compositions, parse_omp, parse_segmented
from minimaj.statistics import (
    compress_last_block,
    cycle_omp,
    cycle_word,
    descent_set,
    inv_omp,
    inv_word,
    maj_word,
    minimaj,
    minimaj_brute,
    rearrangement_class,
    segmented_word,
    standardize,
)


def inv_by_definition(mu):
    # pairs (l < m, j in B_l) with j greater than min(B_m)
    return sum(
        1
        for m in range(len(mu))
        for l in range(m)
        for j in mu[l]
        if j > min(mu[m])
    )


def test_word_statistics():
    w = (3, 1, 4, 1, 5)
    assert descent_set(w) == (1, 3)
    assert maj_word(w) == 4
    assert inv_word(w) == 3
    assert maj_word(()) == 0


@pytest.mark.parametrize(
    "text, word, value",
    [
        ("257|6|148|39", "725.6.481.39", 11),
        ("124|2|13|245|34", "412.2.13.452.34", 13),
    ],
)
def test_worked_minimaj_examples(text, word, value):
    mu = parse_omp(text)
    assert segmented_word(mu) == parse_segmented(word)
    assert minimaj(mu) == value
    assert minimaj_brute(mu) == value


def test_inv_worked_example():
    # against min 6: 7; against min 1: 2,5,7,6; against min 3: 5,7,6,4,8
    mu = parse_omp("257|6|148|39")
    assert inv_omp(mu) == inv_by_definition(mu) == 10


def test_minimaj_matches_brute_force_exhaustively():
    for size in range(1, 6):
        for beta in enum_weak_compositions(size, 3):
            for mu in enum_omp(beta):
                assert minimaj(mu) == minimaj_brute(mu)
                assert inv_omp(mu) == inv_by_definition(mu)


def test_minimizer_is_unique_on_small_set_partitions():
    for mu in enum_osp(4):
        target = segmented_word(mu).word
        words = list(rearrangement_class(mu))
        best = min(maj_word(w) for w in words)
        assert [w for w in words if maj_word(w) == best] == [target]


def test_standardize_and_compression():
    assert standardize([(3, 9), (5,)]) == ((1, 3), (2,))
    with pytest.raises(ValueError):
        standardize([(1, 2), (2,)])
    mu = parse_omp("257|6|148|39")
    assert compress_last_block(mu) == parse_omp("257|6|148|3")
    assert minimaj(mu) == minimaj(compress_last_block(mu))


def test_cycle():
    assert cycle_word((1, 2, 3), 3) == (3, 1, 2)
    assert cycle_omp(parse_omp("12|3"), 3) == parse_omp("13|2")
    with pytest.raises(ValueError):
        cycle_word((4,), 3)


def test_cycle_on_words_raises_maj_by_count_of_ones():
    w = (2, 1, 1, 3, 2)
    assert maj_word(cycle_word(w, 3)) == maj_word(w) + 2


omps = st.lists(st.sets(st.integers(1, 5), min_size=1, max_size=3), min_size=1, max_size=4).map(
    OrderedMultisetPartition
)


@given(omps)
def test_segmented_word_is_a_rearrangement(mu):
    sw = segmented_word(mu)
    assert sw.to_omp() == mu
    assert sw.segmentation == mu.shape
    assert minimaj(mu) == maj_word(sw.word) == minimaj_brute(mu)
