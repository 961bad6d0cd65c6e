"""Exact characteristic polynomials, Sturm certification, threshold."""

import math
import random
from fractions import Fraction

import numpy as np
import pytest

from hoffline.core import HoffmanGraph, slim_complete, slim_cycle, slim_path
from hoffline.families import family_graph
from hoffline.spectral import (
    EmptyGraph,
    Verdict,
    char_poly,
    compare_threshold,
    count_eigenvalues_below_threshold,
    equals_threshold,
    smallest_eigenvalue,
    special_matrix,
    square_free,
    threshold_is_root,
)

from bruteforce import charpoly_bruteforce

TAU = -1 - math.sqrt(2)


def _adjacency(g):
    n = g.slim_count
    return np.array(
        [[1.0 if g.adjacent(i, j) else 0.0 for j in range(n)] for i in range(n)]
    )


# -- special matrix -------------------------------------------------------


def test_special_matrix_of_slim_graph_is_adjacency():
    g = slim_path(4)
    m = special_matrix(g)
    for i in range(4):
        for j in range(4):
            assert m[i][j] == (1 if g.adjacent(i, j) else 0)


def test_special_matrix_entries():
    h5 = family_graph("H5")
    m = special_matrix(h5)
    assert [m[i][i] for i in range(3)] == [-1, -1, -1]
    # the adjacent slim pair shares the hub: 1 - 1 = 0; the others -1
    off = sorted(m[i][j] for i in range(3) for j in range(3) if i < j)
    assert off == [-1, -1, 0]


# -- characteristic polynomial ---------------------------------------------


def test_char_poly_h1_h2():
    assert char_poly(special_matrix(family_graph("H1"))) == (1, 1)
    assert char_poly(special_matrix(family_graph("H2"))) == (2, 1)


def test_char_poly_h5_has_threshold_factor():
    p = char_poly(special_matrix(family_graph("H5")))
    assert p == (-1, 1, 3, 1)  # (x + 1)(x^2 + 2x - 1)
    assert threshold_is_root(p)


def test_char_poly_matches_permutation_expansion():
    rng = random.Random(13)
    for _ in range(80):
        n = rng.randint(0, 5)
        m = [[0] * n for _ in range(n)]
        for i in range(n):
            m[i][i] = rng.randint(-2, 0)
            for j in range(i + 1, n):
                m[i][j] = m[j][i] = rng.randint(-2, 2)
        assert char_poly(m) == charpoly_bruteforce(m)


def test_char_poly_empty_matrix():
    assert char_poly([]) == (1,)


# -- eigenvalue intervals ----------------------------------------------------


def test_k2_and_c4_exact():
    e = smallest_eigenvalue(slim_complete(2))
    assert e.lower == e.upper == Fraction(-1)
    e = smallest_eigenvalue(slim_cycle(4))
    assert e.lower == e.upper == Fraction(-2)


def test_empty_graph_raises():
    with pytest.raises(EmptyGraph):
        smallest_eigenvalue(HoffmanGraph.build(0, 0, []))


def test_default_tolerance_width():
    e = smallest_eigenvalue(slim_path(5))
    assert e.width <= Fraction(1, 10**9)


def test_interval_brackets_numpy_on_random_graphs():
    rng = random.Random(17)
    for _ in range(500):
        n = rng.randint(1, 10)
        edges = [
            (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5
        ]
        g = HoffmanGraph.slim(n, edges)
        e = smallest_eigenvalue(g)
        lam = float(np.linalg.eigvalsh(_adjacency(g)).min())
        assert float(e.lower) - 1e-6 <= lam <= float(e.upper) + 1e-6


def test_interval_on_fat_graphs_vs_numpy():
    rng = random.Random(19)
    for _ in range(150):
        s = rng.randint(1, 5)
        f = rng.randint(1, 3)
        edges = set()
        for fv in range(s, s + f):
            edges.add((rng.randrange(s), fv))
            if rng.random() < 0.5:
                edges.add((rng.randrange(s), fv))
        for i in range(s):
            for j in range(i + 1, s):
                if rng.random() < 0.4:
                    edges.add((i, j))
        g = HoffmanGraph.build(s, f, edges)
        m = np.array(special_matrix(g), dtype=float)
        lam = float(np.linalg.eigvalsh(m).min())
        e = smallest_eigenvalue(g)
        assert float(e.lower) - 1e-6 <= lam <= float(e.upper) + 1e-6


# -- threshold comparison ----------------------------------------------------


def test_h5_is_exactly_at_threshold():
    e = smallest_eigenvalue(family_graph("H5"))
    assert compare_threshold(e) is Verdict.AT_OR_ABOVE
    assert equals_threshold(e)


def test_k23_certifies_below():
    k23 = HoffmanGraph.slim(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
    e = smallest_eigenvalue(k23)
    assert compare_threshold(e) is Verdict.BELOW
    assert not equals_threshold(e)


def test_verdicts_match_float_comparison_when_clear():
    rng = random.Random(23)
    for _ in range(300):
        n = rng.randint(1, 9)
        edges = [
            (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5
        ]
        g = HoffmanGraph.slim(n, edges)
        lam = float(np.linalg.eigvalsh(_adjacency(g)).min())
        if abs(lam - TAU) < 1e-7:
            continue
        want = Verdict.BELOW if lam < TAU else Verdict.AT_OR_ABOVE
        assert compare_threshold(smallest_eigenvalue(g)) is want


def test_count_below_threshold_matches_numpy():
    rng = random.Random(29)
    for _ in range(200):
        n = rng.randint(1, 8)
        edges = [
            (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5
        ]
        g = HoffmanGraph.slim(n, edges)
        eig = np.linalg.eigvalsh(_adjacency(g))
        clear = np.abs(eig - TAU) > 1e-7
        if not clear.all():
            continue
        # multiplicity-free count: compare against distinct roots below
        poly = char_poly(special_matrix(g))
        want = len({round(x, 6) for x in eig[eig < TAU]})
        assert count_eigenvalues_below_threshold(poly) == want


def test_square_free_removes_multiplicity():
    # (x+1)^2 (x-2) -> (x+1)(x-2)
    import numpy.polynomial.polynomial as npoly

    coeffs = npoly.polyfromroots([-1, -1, 2]).astype(int)
    sf = square_free(tuple(int(c) for c in coeffs))
    want = npoly.polyfromroots([-1, 2])
    got = [float(c) for c in sf]
    assert np.allclose(got, want)


def test_family_alpha_labels():
    # the published smallest-eigenvalue labels of the named hosts
    exact_minus_2 = []
    for name in ("H2", "H3"):
        e = smallest_eigenvalue(family_graph(name))
        assert e.lower == e.upper == Fraction(-2)
    e1 = smallest_eigenvalue(family_graph("H1"))
    assert e1.lower == e1.upper == Fraction(-1)
    assert equals_threshold(smallest_eigenvalue(family_graph("H5")))
