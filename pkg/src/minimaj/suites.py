"""Named verification suites, each ``fn(n, r, jobs) -> Report``.

``n`` bounds the size of the objects swept, ``r`` the number of colors
(ignored by uncolored suites).  Lemma and switch-map sweeps over words use
an alphabet of at most :data:`ALPHABET` letters.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Callable

from .colored import verify_colored_lemmas, verify_prop_4_8, verify_theorem_4_4
from .distributions import (
    DistributionKey,
    _fmt,
    distribution,
    verify_corollary_2_8,
    verify_recursions,
    verify_refined_last_block,
    verify_theorem_2_7,
    verify_theorem_3_13,
    shape_counterexample,
)
from .partitions import (
    OrderedMultisetPartition,
    enum_omp,
    enum_osp,
    enum_partitions,
    enum_permutations,
    enum_weak_compositions,
    enum_words,
    parse_omp,
    parse_segmented,
)
from .qpoly import QPoly, q_factorial
from .report import Report, check, check_bool, count_check, parallel_map
from .statistics import (
    cycle_omp,
    cycle_segmented,
    cycle_word,
    descent_set,
    inv_omp,
    inv_word,
    maj_word,
    minimaj,
    rearrangement_class,
    segment_blocks,
    segmented_word,
    standardize,
)
from .switch_maps import decorate, omp_switch, switch_segmented, word_switch
from .symfunc import (
    is_schur_positive,
    monomial_to_schur,
    rearrangements,
    schur_expansion_formula,
    val_expansion,
)

ALPHABET = 4
DEFAULT_N = 5
DEFAULT_R = 2

SuiteFn = Callable[[int, int, int], Report]


# -- MacMahon ----------------------------------------------------------------

def suite_macmahon(n: int, r: int = DEFAULT_R, jobs: int = 1) -> Report:
    """``inv`` and ``maj`` on ``S_m`` both give ``[m]_q!`` for ``m <= max(n, 7)``."""
    report = Report()
    for m in range(1, max(n, 7) + 1):
        invs, majs = [], []
        for w in enum_permutations(m):
            invs.append(inv_word(w))
            majs.append(maj_word(w))
        fact = q_factorial(m)
        report.entries.append(check("macmahon", f"n={m} inv", QPoly.from_exponents(invs), fact))
        report.entries.append(check("macmahon", f"n={m} maj", QPoly.from_exponents(majs), fact))
    return report


# -- lemmas on permutations and words ----------------------------------------

def _unique_minimizer(mu) -> bool:
    target = segmented_word(mu).word
    best = None
    winners = []
    for w in rearrangement_class(mu):
        v = maj_word(w)
        if best is None or v < best:
            best, winners = v, [w]
        elif v == best:
            winners.append(w)
    return winners == [target]


def _osp_lemmas(size: int) -> list:
    inst = f"n={size}"
    uniq = comp = total = comm = comm_total = 0
    for sigma in enum_osp(size):
        total += 1
        uniq += _unique_minimizer(sigma)
        front = [tuple(b) for b in sigma[:-1]]
        comp += minimaj(sigma) == minimaj(standardize(front + [(min(sigma[-1]),)]))
        if len(sigma[-1]) == 1:
            comm_total += 1
            comm += segmented_word(cycle_omp(sigma, size)) == cycle_segmented(segmented_word(sigma), size)
    inc = inc_total = 0
    for w in enum_permutations(size):
        if w[-1] != 1:
            inc_total += 1
            inc += maj_word(cycle_word(w, size)) == maj_word(w) + 1
    return [
        count_check("maj-minimizer-unique", inst, uniq, total),
        count_check("compression", inst, comp, total),
        count_check("cycle-maj-increment", inst, inc, inc_total),
        count_check("cycle-commutation", inst, comm, comm_total),
    ]


def _word_lemmas(size: int) -> list:
    out = []
    for m in range(1, ALPHABET + 1):
        inst = f"n={size} alphabet={m}"
        inc = inc_total = 0
        for beta in enum_weak_compositions(size, m):
            for w in enum_words(beta):
                if w[-1] != 1:
                    inc_total += 1
                    inc += maj_word(cycle_word(w, m)) == maj_word(w) + beta[0]
        out.append(count_check("word-cycle-maj-increment", inst, inc, inc_total))
    inst = f"n={size} alphabet={ALPHABET}"
    uniq = comp = total = comm = comm_total = 0
    for beta in enum_weak_compositions(size, ALPHABET):
        for mu in enum_omp(beta):
            total += 1
            uniq += _unique_minimizer(mu)
            shorter = OrderedMultisetPartition.from_blocks(list(mu[:-1]) + [(min(mu[-1]),)])
            comp += minimaj(mu) == minimaj(shorter)
            if len(mu[-1]) == 1:
                comm_total += 1
                comm += segmented_word(cycle_omp(mu, ALPHABET)) == cycle_segmented(
                    segmented_word(mu), ALPHABET
                )
    out += [
        count_check("word-maj-minimizer-unique", inst, uniq, total),
        count_check("word-compression", inst, comp, total),
        count_check("word-commutation", inst, comm, comm_total),
    ]
    return out


def _lemmas_one(args: tuple[str, int]) -> list:
    kind, size = args
    return _osp_lemmas(size) if kind == "osp" else _word_lemmas(size)


def suite_lemmas(n: int, r: int = DEFAULT_R, jobs: int = 1) -> Report:
    items = [(kind, s) for kind in ("osp", "word") for s in range(1, n + 1)]
    report = Report()
    for entries in parallel_map(_lemmas_one, items, jobs):
        report.extend(entries)
    return report


# -- switch maps --------------------------------------------------------------

WORKED_SWITCH = ("1237|34|4|3|3|4|3467|3|3|457|356", 3)
WORKED_SWITCH_WORD = "71234.4.4.3.3.4.467.34.4.457.356"


def _switch_one(args: tuple[int, tuple[int, ...]]) -> list:
    size, beta = args
    m = len(beta)
    counts: dict[str, int] = defaultdict(int)
    total = 0
    commute = commute_total = 0
    for mu in enum_omp(beta):
        images = {}
        for i in range(1, m):
            total += 1
            new = switch_segmented(decorate(segmented_word(mu), i))
            nu = omp_switch(mu, i)
            images[i] = nu
            counts["involution"] += omp_switch(nu, i) == mu
            counts["blocks-and-size"] += nu.shape.__len__() == len(mu) and nu.size == mu.size
            w = list(beta)
            w[i - 1], w[i] = w[i], w[i - 1]
            counts["weight-transposed"] += nu.weight(m) == tuple(w)
            counts["descents-preserved"] += descent_set(segmented_word(nu)) == descent_set(segmented_word(mu))
            counts["minimaj-preserved"] += minimaj(nu) == minimaj(mu)
            counts["segmented-image"] += segmented_word(nu) == new
        for i in range(1, m):
            for j in range(i + 2, m):
                commute_total += 1
                commute += omp_switch(images[i], j) == omp_switch(images[j], i)
    inst = f"beta={_fmt(beta)}"
    out = [count_check("switch-" + name, inst, counts[name], total) for name in (
        "involution", "blocks-and-size", "weight-transposed",
        "descents-preserved", "minimaj-preserved", "segmented-image",
    )]
    out.append(count_check("switch-commute", inst, commute, commute_total))
    return out


def suite_switch_maps(n: int, r: int = DEFAULT_R, jobs: int = 1) -> Report:
    """Every part of the switch-map properties on weights of size ``<= n``
    over the alphabet ``1..4``, plus the worked examples."""
    items = [
        (s, beta) for s in range(1, n + 1) for beta in enum_weak_compositions(s, ALPHABET)
    ]
    report = Report()
    for entries in parallel_map(_switch_one, items, jobs):
        report.extend(entries)
    text, i = WORKED_SWITCH
    mu = parse_omp(text)
    nu = omp_switch(mu, i, validate=True)
    report.entries.append(check_bool(
        "switch-worked-example", f"t_{i}({text}) segmented word",
        segmented_word(nu) == parse_segmented(WORKED_SWITCH_WORD),
    ))
    report.entries.append(check_bool("switch-worked-example", f"t_{i}^2({text})", omp_switch(nu, i) == mu))
    w = tuple(int(c) for c in "1224334232241344")
    report.entries.append(check_bool(
        "switch-worked-example", "word t_3(1224334232241344)",
        word_switch(w, 3) == tuple(int(c) for c in "1224334242231334"),
    ))
    return report


# -- symmetric functions ------------------------------------------------------

def _val_bins(beta: tuple[int, ...]) -> dict[tuple, tuple[list, list]]:
    """Exponents of inv and minimaj binned by block count and by
    ``(block count, descent set of the minimizing word)``."""
    bins: dict[tuple, tuple[list, list]] = defaultdict(lambda: ([], []))
    for mu in enum_omp(beta):
        i, m = inv_omp(mu), minimaj(mu)
        des = descent_set([x for seg in segment_blocks(mu) for x in seg])
        for key in (("k", len(mu)), ("des", len(mu), des)):
            bins[key][0].append(i)
            bins[key][1].append(m)
    return bins


def _polys(bins, key) -> tuple[QPoly, QPoly]:
    a, b = bins.get(key, ([], []))
    return QPoly.from_exponents(a), QPoly.from_exponents(b)


def _symmetry_one(args: tuple[int, tuple[int, ...]]) -> list:
    n, lam = args
    ref = _val_bins(lam)
    out = []
    for k in range(1, n + 1):
        i, m = _polys(ref, ("k", k))
        out.append(check("theorem-1-3", f"n={n} k={k - 1} lambda={_fmt(lam)}", i, m))
    keys = sorted(key for key in ref if key[0] == "des")
    for beta in rearrangements(lam, n):
        if beta == tuple(lam) + (0,) * (n - len(lam)):
            continue
        other = _val_bins(tuple(beta))
        for k in range(1, n + 1):
            _, m0 = _polys(ref, ("k", k))
            i1, m1 = _polys(other, ("k", k))
            inst = f"n={n} k={k - 1} beta={_fmt(beta)}"
            out.append(check("rearrangement-invariance", inst + " minimaj", m1, m0))
            out.append(check("rearrangement-invariance", inst + " inv", i1, m0))
        keys_all = sorted(set(keys) | {key for key in other if key[0] == "des"})
        good = sum(_polys(ref, key)[1] == _polys(other, key)[1] for key in keys_all)
        out.append(count_check("descent-refined-invariance", f"n={n} beta={_fmt(beta)}", good, len(keys_all)))
    return out


def suite_theorem_1_3(n: int, r: int = DEFAULT_R, jobs: int = 1) -> Report:
    """Both statistics give the same symmetric function, whose monomial
    coefficients do not depend on the order of the weight."""
    items = [(s, lam) for s in range(1, n + 1) for lam in enum_partitions(s)]
    report = Report()
    for entries in parallel_map(_symmetry_one, items, jobs):
        report.extend(entries)
    a = distribution(DistributionKey("minimaj", (2, 1, 1), shape=(2, 2)))
    b = distribution(DistributionKey("minimaj", (1, 2, 1), shape=(2, 2)))
    report.entries.append(check("shape-nonsymmetry", "beta=(2,1,1) shape=(2,2)", a, QPoly([0, 2])))
    report.entries.append(check("shape-nonsymmetry", "beta=(1,2,1) shape=(2,2)", b, QPoly([1, 0, 1])))
    report.entries.append(check_bool("shape-nonsymmetry", "coefficients differ", a != b))
    i, m = shape_counterexample()
    report.entries.append(check("shape-counterexample", "beta=(2,2,1) alpha=(2,1,2) inv", i, QPoly([0, 1, 2, 1, 1])))
    report.entries.append(check("shape-counterexample", "beta=(2,2,1) alpha=(2,1,2) minimaj", m, QPoly([0, 1, 1, 2, 1])))
    report.entries.append(check_bool("shape-counterexample", "distributions differ", i != m))
    return report


def _schur_one(args: tuple[int, int]) -> list:
    n, k = args
    converted = monomial_to_schur(val_expansion(n, k))
    formula = schur_expansion_formula(n, k)
    out = [
        check("corollary-3-15", f"n={n} k={k} lambda={_fmt(lam)}", converted[lam], formula[lam])
        for lam in enum_partitions(n)
    ]
    out.append(check_bool("schur-positivity", f"n={n} k={k}", is_schur_positive(converted)))
    return out


def suite_corollary_3_15(n: int, r: int = DEFAULT_R, jobs: int = 1) -> Report:
    items = [(s, k) for s in range(1, n + 1) for k in range(s)]
    report = Report()
    for entries in parallel_map(_schur_one, items, jobs):
        report.extend(entries)
    mono = val_expansion(3, 1)
    schur = monomial_to_schur(mono)
    expected_m = {(3,): QPoly(), (2, 1): QPoly([1, 1]), (1, 1, 1): QPoly([2, 3, 1])}
    expected_s = {(3,): QPoly(), (2, 1): QPoly([1, 1]), (1, 1, 1): QPoly([0, 1, 1])}
    for lam in enum_partitions(3):
        report.entries.append(check("val-3-1-example", f"monomial {_fmt(lam)}", mono[lam], expected_m[lam]))
        report.entries.append(check("val-3-1-example", f"schur {_fmt(lam)}", schur[lam], expected_s[lam]))
    return report


# -- registry -----------------------------------------------------------------

def _colored_worked_examples() -> Report:
    from .colored import (
        ColoredLetter, colored_inv, colored_segmented, colored_standardize, flag_maj,
        format_colored_word, parse_colored,
    )

    sigma = parse_colored("1^1 2^2 4^0|7^2|8^1 9^2|3^1 5^1 6^2")
    pi = [ColoredLetter(v, c) for v, c in ((3, 0), (4, 2), (5, 0), (1, 2), (2, 1))]
    report = Report()
    report.entries.append(check("colored-worked-example", "maj(3^0 4^2 5^0 1^2 2^1) r=3",
                                QPoly([flag_maj(pi, 3)]), QPoly([17])))
    report.entries.append(check("colored-worked-example", f"inv({sigma})",
                                QPoly([colored_inv(sigma)]), QPoly([24])))
    report.entries.append(check_bool(
        "colored-worked-example", f"pi({sigma})",
        format_colored_word(*colored_segmented(sigma)) == "1^1 4^0 2^2 . 7^2 . 9^2 8^1 . 6^2 3^1 5^1",
    ))
    report.entries.append(check_bool(
        "colored-worked-example", f"s({sigma})", colored_standardize(sigma) == parse_omp("159|3|48|267"),
    ))
    return report


def suite_theorem_4_4(n: int, r: int = DEFAULT_R, jobs: int = 1) -> Report:
    report = Report()
    for rr in range(2, max(r, 2) + 1):
        report.extend(verify_theorem_4_4(n, rr, jobs).entries)
    report.extend(_colored_worked_examples().entries)
    report.extend(verify_colored_lemmas(min(n, 4), min(max(r, 2), 3)).entries)
    return report


def suite_prop_4_8(n: int, r: int = DEFAULT_R, jobs: int = 1) -> Report:
    return verify_prop_4_8(n, r)


SUITES: dict[str, SuiteFn] = {
    "macmahon": suite_macmahon,
    "theorem-2-7": lambda n, r, jobs: verify_theorem_2_7(n, jobs),
    "corollary-2-8": lambda n, r, jobs: verify_corollary_2_8(n, jobs),
    "theorem-3-13": lambda n, r, jobs: verify_theorem_3_13(n, jobs),
    "refined-last-block": lambda n, r, jobs: verify_refined_last_block(n, jobs),
    "recursions": lambda n, r, jobs: verify_recursions(n, jobs),
    "switch-maps": suite_switch_maps,
    "lemmas": suite_lemmas,
    "theorem-1-3": suite_theorem_1_3,
    "corollary-3-15": suite_corollary_3_15,
    "theorem-4-4": suite_theorem_4_4,
    "prop-4-8": suite_prop_4_8,
}


def run_suite(name: str, n: int = DEFAULT_N, r: int = DEFAULT_R, jobs: int = 1) -> Report:
    if name == "all":
        report = Report()
        for fn in SUITES.values():
            report.extend(fn(n, r, jobs).entries)
        return report
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}, all") from None
    return fn(n, r, jobs)
