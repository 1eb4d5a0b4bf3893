"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line.  Run
``pytest tests/test_acceptance.py`` or ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from defcol.bounds import exact_chi, gamma_d, lower_bound_trivial, upper_bound_degree, verify_colouring  # noqa: E402
from defcol.constructions import (  # noqa: E402
    complete_graph,
    cycle_graph,
    gadget_colouring,
    gadget_G,
    goldberg_counterexample,
    np_reduction,
    random_regular_multigraph,
    reduction_colouring,
    shannon_graph,
)
from defcol.defective import colour_defective, colour_shannon_graph, colour_two_d_regular  # noqa: E402
from defcol.factors import f_factor  # noqa: E402
from defcol.graph import Multigraph, connected_components, regularize_by_doubling  # noqa: E402
from defcol.proper import vizing_colour  # noqa: E402

from graphs import f_factor_exists, random_f_instance  # noqa: E402


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def regular_suite() -> list[Multigraph]:
    """200 seeded random regular multigraphs with n <= 12 and delta <= 13."""
    out = []
    for seed in range(200):
        rng = random.Random(seed)
        n = rng.randint(2, 12)
        delta = rng.randint(1, 13)
        if n * delta % 2:
            delta += 1 if delta < 13 else -1
        out.append(random_regular_multigraph(n, delta, seed))
    return out


def simple_suite() -> list[Multigraph]:
    """100 random simple graphs with at most 24 edges."""
    out = []
    rng = random.Random(511)
    while len(out) < 100:
        n = rng.randint(2, 10)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        rng.shuffle(pairs)
        g = Multigraph(n, tuple(sorted(pairs[: rng.randint(1, min(24, len(pairs)))])))
        out.append(g)
    return out


def report(number: int, ok: bool, detail: str, capsys=None) -> None:
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"
    if capsys is None:
        print(line)
    else:
        with capsys.disabled():
            print("\n" + line)


# --- criteria ----------------------------------------------------------------------

def criterion_1() -> tuple[bool, str]:
    start = time.perf_counter()
    bad = []
    for d in (1, 3, 5, 7):
        for k in range(1, 13):
            want = ceil_div(3 * k - 1, 3 * d - 1)
            c = colour_shannon_graph(k, d)
            g = shannon_graph(k)
            if not verify_colouring(g, c, d).valid or c.num_colours != want or exact_chi(g, d) != want:
                bad.append((k, d))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 60
    return ok, f"Sh(k) k<=12, d in 1,3,5,7: mismatches {bad}, {elapsed:.1f}s (< 60s)"


def criterion_2() -> tuple[bool, str]:
    start = time.perf_counter()
    bad = []
    for i, g in enumerate(regular_suite()):
        for d in range(1, 8):
            c = colour_defective(g, d)
            if not verify_colouring(g, c, d).valid or c.num_colours > upper_bound_degree(g.max_degree, d):
                bad.append((i, d))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 300
    return ok, f"200 regular multigraphs x d=1..7 within the bound: failures {bad}, {elapsed:.1f}s (< 300s)"


def criterion_3() -> tuple[bool, str]:
    bad = []
    for i, g in enumerate(regular_suite()):
        for d in (2, 4, 6):
            if colour_defective(g, d).num_colours != lower_bound_trivial(g, d):
                bad.append((i, d))
    return not bad, f"even d uses exactly ceil(delta/d) colours on the same suite: failures {bad}"


def criterion_4() -> tuple[bool, str]:
    g = goldberg_counterexample()
    got = (g.max_degree + 1, gamma_d(g, 1), exact_chi(g, 1), gamma_d(g, 3), exact_chi(g, 3))
    want = (15, 16, 16, 4, 5)
    return got == want, f"(7,7,2) multigraph delta+1, gamma_1, chi_1, gamma_3, chi_3 = {got}, expected {want}"


def criterion_5() -> tuple[bool, str]:
    start = time.perf_counter()
    bad = []
    for i, g in enumerate(simple_suite()):
        delta = g.max_degree
        for d in (1, 2, 3):
            if exact_chi(g, d) not in (ceil_div(delta, d), ceil_div(delta + 1, d)):
                bad.append((i, d))
    elapsed = time.perf_counter() - start
    return not bad, f"100 simple graphs (m <= 24), d in 1,2,3: chi in the two-value window, failures {bad}, {elapsed:.1f}s"


def crossed_double(g: Multigraph) -> Multigraph:
    """Two copies of ``g`` with edge 0 of each copy crossed over, so the
    result stays regular but is connected with twice the order."""
    (u, v), n = g.edges[0], g.n
    rest = g.edges[1:]
    edges = rest + tuple((a + n, b + n) for a, b in rest) + ((u, v + n), (u + n, v))
    return Multigraph(2 * n, edges)


def criterion_6() -> tuple[bool, str]:
    sh6 = shannon_graph(6)
    doubled = crossed_double(sh6)
    assert doubled.is_regular(6) and len(connected_components(doubled)) == 1 and doubled.n == 6
    # doubling without crossing leaves two odd-order copies, which still need 3
    disjoint = regularize_by_doubling(sh6, 6)
    got = {
        "chi(C5,1)": exact_chi(cycle_graph(5), 1),
        "two_d(C5,1)": colour_two_d_regular(cycle_graph(5), 1).num_colours,
        "chi(C6,1)": exact_chi(cycle_graph(6), 1),
        "chi(Sh6,3)": exact_chi(sh6, 3),
        "chi(2Sh6 crossed,3)": exact_chi(doubled, 3),
        "two_d(2Sh6 crossed,3)": colour_two_d_regular(doubled, 3).num_colours,
        "chi(2Sh6 disjoint,3)": exact_chi(disjoint, 3),
    }
    want = {"chi(C5,1)": 3, "two_d(C5,1)": 3, "chi(C6,1)": 2, "chi(Sh6,3)": 3,
            "chi(2Sh6 crossed,3)": 2, "two_d(2Sh6 crossed,3)": 2, "chi(2Sh6 disjoint,3)": 3}
    return got == want, f"parity case values {got}"


def criterion_7() -> tuple[bool, str]:
    k4 = complete_graph(4)
    proper = vizing_colour(k4)
    g = np_reduction(k4, 3)
    cols = reduction_colouring(k4, proper.colours, 3)
    rep = verify_colouring(g, cols, 3)
    forward = proper.num_colours == 3 and rep.valid and rep.colours_used == 3 and g.m == 882
    # gadget spot check: oracle value 2 and every colour class d-regular
    gad = gadget_G(2, 3)
    gcols = gadget_colouring(2, 3)
    classes_ok = all(gad.edge_subgraph([e for e in range(gad.m) if gcols[e] == c]).is_regular(3) for c in range(2))
    gadget_ok = exact_chi(gad, 3) == 2 and classes_ok
    ok = forward and gadget_ok
    return ok, (
        f"reduction of K4: {g.m} edges, valid={rep.valid}, colours={rep.colours_used}; "
        f"gadget G(2,3): chi_3=2 and 3-regular classes {gadget_ok}"
    )


def criterion_8() -> tuple[bool, str]:
    rng = random.Random(8)
    bad = 0
    for _ in range(500):
        g, f = random_f_instance(rng, max_m=18)
        got = f_factor(g, f)
        if (got is not None) != f_factor_exists(g, f) or (got is not None and got.degrees != tuple(f)):
            bad += 1
    return bad == 0, f"f_factor vs exhaustive search on 500 instances (m <= 18): {bad} disagreements"


CRITERIA = {1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5,
            6: criterion_6, 7: criterion_7, 8: criterion_8}


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    ok, detail = CRITERIA[number]()
    report(number, ok, detail, capsys)
    assert ok, detail


def test_criterion_9(capsys):
    with capsys.disabled():
        print("\nSKIP criterion 9: hardness and list-colouring results have no desk-scale experiment; "
              "covered by the property suites")
    pytest.skip("not reproducible at desk scale by design")


if __name__ == "__main__":
    failed = 0
    for number, fn in sorted(CRITERIA.items()):
        ok, detail = fn()
        report(number, ok, detail)
        failed += not ok
    print("SKIP criterion 9: hardness and list-colouring results have no desk-scale experiment")
    sys.exit(1 if failed else 0)
