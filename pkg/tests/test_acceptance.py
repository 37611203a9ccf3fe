"""The twelve acceptance criteria, one test each.

Every test prints a ``PASS <n>`` or ``FAIL <n>`` line, then asserts.
"""

import random
import time
from itertools import combinations, product

import pytest
from conftest import random_population
from oracles import z2_khovanov_of

from vkhov.algebra import F5, KHOVANOV, FrobeniusSpec, X, mul_comul_diagnostic, one, problem_square
from vkhov.catalog import bundled, get
from vkhov.cube import (MERGE, SPLIT, SignedCube, check_d2, face_paths, front_sign,
                        permutation_sign, propagate_labels)
from vkhov.diagram import diagram_from_passes, parse_gauss_code
from vkhov.homology import euler_characteristic_q, khovanov_homology
from vkhov.lee import (canonical_generators, lee_filtered_homology, positive_s_min,
                       positive_slice_genus, rasmussen, s_min_max, verify_generator_cycle)
from vkhov.smoothing import jones

UNKNOT_J = {-1: 1, 1: 1}


def verdict(capsys, number, title, failures):
    ok = not failures
    with capsys.disabled():
        print(f"\n{'PASS' if ok else 'FAIL'} {number}. {title}")
    assert ok, failures[:5]


@pytest.fixture(scope="module")
def population():
    """Full catalog plus 200 seeded random diagrams of at most 6 crossings."""
    return list(bundled().values()) + random_population(200, 6, seed=2024)


def test_01_differential_soundness(capsys, population):
    t0 = time.perf_counter()
    failures = [d.to_code() for d in population if not check_d2(SignedCube(d)).ok]
    elapsed = time.perf_counter() - t0
    if elapsed >= 60:
        failures.append(f"took {elapsed:.1f}s")
    verdict(capsys, 1, f"d^2 = 0 over Z on {len(population)} diagrams ({elapsed:.1f}s)", failures)


def test_02_categorification(capsys, population):
    failures = [d.to_code() for d in population
                if euler_characteristic_q(khovanov_homology(d)) != jones(d)]
    verdict(capsys, 2, "graded Euler characteristic equals J", failures)


def test_03_problem_square(capsys):
    failures = []
    ps = problem_square(KHOVANOV)
    if ps["uncorrected"] != X().scale(2):
        failures.append("uncorrected")
    if not ps["bar"].is_zero() or not ps["bar+order"].is_zero():
        failures.append("corrected")
    if mul_comul_diagnostic(F5) != (one(F5).scale(F5.h), X(F5).scale(F5.h)):
        failures.append("F5 diagnostic")
    if not all(v.is_zero() for v in mul_comul_diagnostic(FrobeniusSpec(0, 0))):
        failures.append("h = 0 diagnostic")
    # the same square inside the cube of the 2-crossing virtual unknot
    d = get("virtual_unknot")
    if face_paths(SignedCube(d, corrections="none"), 0, 0, 1, (0,)) != ({(1,): 2}, {}):
        failures.append("engine uncorrected")
    if face_paths(SignedCube(d), 0, 0, 1, (0,)) != ({}, {}):
        failures.append("engine corrected")
    verdict(capsys, 3, "problem square: 2X uncorrected, 0 corrected, F5 gives (h, hX)", failures)


def _edge_sign(kind, order, inputs, outputs):
    """Pre and post signs of one edge from the propagation rules."""
    labels = {k: r + 1 for r, k in enumerate(order)}
    pre = front_sign(order, inputs)
    rest = {k: l for k, l in labels.items() if k not in inputs}
    b = labels[inputs[1]] if kind == MERGE else None
    new_rest, outs = propagate_labels(kind, rest, labels[inputs[0]], b)
    new = dict(new_rest)
    new.update(zip(outputs, outs))
    target = sorted(new, key=new.get)
    seq = list(outputs) + [k for k in order if k not in inputs]
    post = permutation_sign(seq, target)
    return pre, post, target


def _example_one(a, b, total):
    """Two loops A=[a], B=[b] (a < b); the split acts on A, the merge on (B, A2)."""
    fill = [f"f{k}" for k in range(total - 2)]
    order = fill[:a - 1] + ["A"] + fill[a - 1:b - 2] + ["B"] + fill[b - 2:]
    # upper: split A into A1, A2, then merge B (locally first) with A2
    pre1, post1, mid = _edge_sign(SPLIT, order, ["A"], ["A1", "A2"])
    pre2, post2, top = _edge_sign(MERGE, mid, ["B", "A2"], ["M"])
    upper = pre1 * post1 * pre2 * post2
    # lower: merge B (locally first) with A, then split into C1, C2
    pre3, post3, mid2 = _edge_sign(MERGE, order, ["B", "A"], ["C"])
    pre4, post4, bottom = _edge_sign(SPLIT, mid2, ["C"], ["C1", "C2"])
    lower = pre3 * post3 * pre4 * post4
    same = {"C1": "A1", "C2": "M"}
    transition = permutation_sign([same.get(k, k) for k in bottom], top)
    return {"d1(s)": pre1 * post1, "d2(s'')": pre2 * post2, "d2(s)": pre3 * post3,
            "d1(s')": pre4 * post4, "upper": upper, "lower": lower, "transition": transition}


def _example_two(a, total):
    """One loop [a]; both edges split, the second split acting on the second output."""
    fill = [f"f{k}" for k in range(total - 1)]
    order = fill[:a - 1] + ["A"] + fill[a - 1:]
    pre1, post1, mid = _edge_sign(SPLIT, order, ["A"], ["L", "P"])
    pre2, post2, top = _edge_sign(SPLIT, mid, ["P"], ["R", "M"])
    pre3, post3, mid2 = _edge_sign(SPLIT, order, ["A"], ["R", "Q"])
    pre4, post4, bottom = _edge_sign(SPLIT, mid2, ["Q"], ["L", "M"])
    labels_top = [top.index(k) + 1 - a for k in ("L", "M", "R")]
    labels_bottom = [bottom.index(k) + 1 - a for k in ("L", "M", "R")]
    return {"d1(s)": pre1 * post1, "d2(s'')": pre2 * post2, "d2(s)": pre3 * post3,
            "d1(s')": pre4 * post4, "upper": pre1 * post1 * pre2 * post2,
            "lower": pre3 * post3 * pre4 * post4,
            "transition": permutation_sign(bottom, top),
            "labels": (labels_top, labels_bottom)}


def _engine_square(code, d1_bit):
    """Composite signs of the (0 -> 3) face, each path in its own propagated order."""
    d = parse_gauss_code(code)
    first_via_d1 = SignedCube(d, tree="highest" if d1_bit == 0 else "lowest")
    first_via_d2 = SignedCube(d, tree="lowest" if d1_bit == 0 else "highest")
    d2_bit = 1 - d1_bit

    def path(cube, bit_a, bit_b):
        e1 = cube.edge(0, bit_a)
        e2 = cube.edge(e1.target, bit_b)
        return e1.pre_sign * e1.post_sign * e2.pre_sign * e2.post_sign

    upper = path(first_via_d1, d1_bit, d2_bit)
    lower = path(first_via_d2, d2_bit, d1_bit)
    transition = permutation_sign(first_via_d2.orders[3], first_via_d1.orders[3])
    return upper, lower, transition, check_d2(first_via_d1).ok and check_d2(first_via_d2).ok


def test_04_worked_squares(capsys):
    failures = []
    for total in range(2, 7):
        for a, b in combinations(range(1, total + 1), 2):
            got = _example_one(a, b, total)
            want = {"d1(s)": (-1) ** (a + 1), "d2(s'')": (-1) ** (a + 1), "d2(s)": (-1) ** a,
                    "d1(s')": (-1) ** b, "upper": 1, "lower": (-1) ** (a + b),
                    "transition": (-1) ** (a + b + 1)}
            if got != want:
                failures.append(("example 1", a, b, total, got))
            if got["upper"] != -got["transition"] * got["lower"]:
                failures.append(("example 1 commutes", a, b, total))
        for a in range(1, total + 1):
            got = _example_two(a, total)
            want = {"d1(s)": (-1) ** (a + 1), "d2(s'')": (-1) ** a, "d2(s)": (-1) ** (a + 1),
                    "d1(s')": (-1) ** a, "upper": -1, "lower": -1, "transition": (-1) ** 3,
                    "labels": ([0, 2, 1], [1, 2, 0])}
            if got != want:
                failures.append(("example 2", a, total, got))
    # concrete two-crossing diagrams realizing both squares
    upper, lower, transition, ok = _engine_square("O1-U1-O2-U2-", 0)
    if (upper, lower, transition, ok) != (-1, -1, -1, True):
        failures.append(("engine example 2", upper, lower, transition, ok))
    upper, lower, transition, ok = _engine_square("O1+U1+O2-U2-", 1)
    if not ok or upper != -transition * lower:
        failures.append(("engine example 1", upper, lower, transition, ok))
    verdict(capsys, 4, "worked squares: composite signs and (-1)^3 correction", failures)


def _unknotting_set(d):
    """Smallest crossing set whose switch has the unknot's homology."""
    unknot = khovanov_homology(get("unknot"))
    for k in range(1, d.crossing_count + 1):
        for S in combinations(sorted(d.crossings), k):
            if khovanov_homology(d.switch(set(S))) == unknot:
                return set(S)
    raise AssertionError("no unknotting set found")


def test_05_unit_jones(capsys):
    failures = []
    for name in ("trefoil", "figure_eight"):
        d = get(name)
        S = _unknotting_set(d)
        v = d.virtualize(S)
        if jones(v).terms != UNKNOT_J:
            failures.append((name, "J", str(jones(v))))
        for coeffs in ("Z", "Q", "Z2"):
            if khovanov_homology(v, coeffs) != khovanov_homology(get("unknot"), coeffs):
                failures.append((name, coeffs))
    verdict(capsys, 5, "Virt(K) has unit Jones and unknot homology over Z, Q, Z/2", failures)


def test_06_lee_structure(capsys):
    failures = []
    for name, d in bundled().items():
        expected = 2 ** d.component_count
        gens = canonical_generators(d)
        cube = SignedCube(d, t=1)
        if lee_filtered_homology(d).total_dim != expected:
            failures.append((name, "dimension"))
        if len(gens) != expected:
            failures.append((name, "generator count"))
        if not all(verify_generator_cycle(g, d, cube) for g in gens):
            failures.append((name, "not cycles"))
    verdict(capsys, 6, "Lee dimension 2^c and 2^c canonical cycles on the catalog", failures)


def test_07_rasmussen_values(capsys):
    failures = []
    for n in (1, 2, 3):
        t0 = time.perf_counter()
        res = rasmussen(get(f"vsigma{2 * n}"))
        elapsed = time.perf_counter() - t0
        if (res.s_bar, res.s_min) != (2 * n, 2 * n - 1):
            failures.append((n, res))
        if elapsed >= 120:
            failures.append((n, f"{elapsed:.1f}s"))
    if rasmussen(get("unknot")).s_bar != 0:
        failures.append("unknot")
    for name, d in bundled().items():
        if d.component_count != 1:
            continue
        res = rasmussen(d)
        if res.s_max != res.s_min + 2:
            failures.append((name, "s_max"))
        if d.crossing_count <= 8 and rasmussen(d.mirror()).s_bar != -res.s_bar:
            failures.append((name, "mirror"))
    verdict(capsys, 7, "s_bar(v sigma^2n) = 2n, unknot 0, mirror negates, s_max = s_min + 2",
            failures)


def test_08_positive_knots(capsys):
    failures = []
    for name, genus in (("trefoil", 1), ("torus_2_5", 2), ("virtual_trefoil", 1),
                        ("positive_genus2", 2)):
        d = get(name)
        if positive_s_min(d) != s_min_max(d)[0]:
            failures.append((name, "s_min"))
        if positive_slice_genus(d) != genus:
            failures.append((name, "genus"))
    if positive_slice_genus(get("torus_2_5")) != (2 - 1) * (5 - 1) // 2:
        failures.append("torus formula")
    verdict(capsys, 8, "positive knots: fast s_min agrees, slice genus from Seifert circles",
            failures)


def _all_knot_codes(n):
    """Every one-component signed Gauss code on crossings 1..n (up to labels)."""
    positions = list(range(2 * n))

    def pairings(items):
        if not items:
            yield []
            return
        first = items[0]
        for k in range(1, len(items)):
            rest = items[1:k] + items[k + 1:]
            for p in pairings(rest):
                yield [(first, items[k])] + p

    for pairing in pairings(positions):
        for over_first, signs in product(product((True, False), repeat=n),
                                         product((1, -1), repeat=n)):
            word = [None] * (2 * n)
            for c, ((i, j), of, s) in enumerate(zip(pairing, over_first, signs), start=1):
                word[i] = (c, "O" if of else "U", s)
                word[j] = (c, "U" if of else "O", s)
            yield diagram_from_passes([word])


def test_09_oracle_equivalence(capsys):
    population = [d for d in bundled().values() if d.crossing_count <= 5]
    for n in range(1, 4):
        population.extend(_all_knot_codes(n))
    rng = random.Random(99)
    population.extend(random_population(300, 5, seed=rng.randint(0, 10 ** 6)))
    failures = []
    for d in population:
        got = {k: g.free for k, g in khovanov_homology(d, "Z2").groups.items()}
        if got != {k: v for k, v in z2_khovanov_of(d).items() if v}:
            failures.append(d.to_code())
    verdict(capsys, 9, f"Z/2 ranks match the unsigned oracle on {len(population)} diagrams",
            failures)


def test_10_choice_independence(capsys):
    failures = []
    rng = random.Random(10)
    for d in random_population(50, 6, seed=77):
        base = khovanov_homology(d)
        k0 = len(SignedCube(d).states[0].cycles)
        root = list(range(k0))
        rng.shuffle(root)
        variants = {"root": {"root_order": tuple(root)}, "tree": {"tree": "highest"},
                    "random tree": {"tree": "random", "seed": rng.randint(0, 999)},
                    "star": {"star_rule": "max"}}
        for label, opts in variants.items():
            if khovanov_homology(d, **opts) != base:
                failures.append((d.to_code(), label))
    verdict(capsys, 10, "tables independent of root order, spanning tree and star rule",
            failures)


def test_11_stevedore(capsys):
    vs, f8 = get("virtual_stevedore"), get("figure_eight")
    failures = []
    for coeffs in ("Z", "Q", "Z2"):
        if khovanov_homology(vs, coeffs) != khovanov_homology(f8, coeffs):
            failures.append(coeffs)
    if lee_filtered_homology(vs) != lee_filtered_homology(f8):
        failures.append("Lee")
    if rasmussen(vs).s_bar != 0:
        failures.append("s_bar")
    verdict(capsys, 11, "virtual Stevedore matches the figure-eight, s_bar = 0", failures)


def _move_pairs(count, seed):
    rng = random.Random(seed)
    # a kink on one circle of a 0-crossing unlink would leave an empty component
    bases = [d for d in bundled().values()
             if d.crossing_count <= 4 and (d.crossing_count or d.component_count == 1)]
    bases += random_population(20, 4, seed=seed)
    pairs = []
    while len(pairs) < count:
        d = rng.choice(bases)
        arcs = len(d.semi_arcs())
        if arcs == 0:
            continue
        if rng.random() < 0.5:
            moved = d.r1(rng.randrange(arcs), rng.choice((1, -1)), rng.random() < 0.5)
        else:
            moved = d.r2(rng.randrange(arcs), rng.randrange(arcs), rng.choice((1, -1)),
                         rng.random() < 0.5)
        pairs.append((d, moved))
    return pairs


def test_12_move_invariance(capsys):
    pairs = _move_pairs(60, seed=12)
    failures = [(d.to_code(), e.to_code()) for d, e in pairs
                if khovanov_homology(d) != khovanov_homology(e)]
    verdict(capsys, 12, f"tables equal across {len(pairs)} R1/R2 pairs", failures)
