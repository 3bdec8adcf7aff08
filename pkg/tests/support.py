"""Shared fixtures for the test suite: reference curves, seeded corpora,
and oracles that stay independent of the code paths they check."""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import gcd

from ellmat import (
    EllipticArrangement,
    FieldParams,
    IntMatrix,
    RingMatrix,
    make_curve,
    make_field,
)


def curve_sqrt3():
    """tau = sqrt(-3): N = 1, conductor 2."""
    return make_curve(make_field(3), -1, 2, 1)


def curve_omega3():
    """tau = (1 + sqrt(-3))/2: the maximal order Z[omega]."""
    return make_curve(make_field(3), 0, 1, 1)


def curve_half_i():
    """tau = i/2: N = 4, ring <1, 2i>."""
    return make_curve(make_field(1), 0, 1, 2)


def curve_third_sqrt2():
    """tau = sqrt(-2)/3: N = 9, ring <1, 3*sqrt(-2)>."""
    return make_curve(make_field(2), 0, 1, 3)


def curve_gauss():
    """tau = i: the maximal order Z[i]."""
    return make_curve(make_field(1), 0, 1, 1)


def new_realization_sqrt3() -> EllipticArrangement:
    """Column (2; 1 + sqrt(-3)) over Z[sqrt(-3)]: multiplicities 1, 4, 4, 2."""
    return EllipticArrangement(RingMatrix.from_pairs(curve_sqrt3(), [[(2, 0)], [(1, 1)]]))


def new_realization_omega() -> EllipticArrangement:
    """Same column over Z[omega] (1 + sqrt(-3) = 2*omega): multiplicities 1, 4, 4, 4."""
    return EllipticArrangement(RingMatrix.from_pairs(curve_omega3(), [[(2, 0)], [(0, 2)]]))


FIXTURE_SQRT3_DOC = {
    "field": {"m": 3},
    "tau": {"a": -1, "b": 2, "c": 1},
    "matrix": {"rows": 2, "cols": 1, "entries": [[[2, 0]], [[1, 1]]]},
}

FIXTURE_OMEGA_DOC = {
    "field": {"m": 3},
    "tau": {"a": 0, "b": 1, "c": 1},
    "matrix": {"rows": 2, "cols": 1, "entries": [[[2, 0]], [[0, 2]]]},
}


def random_ring_matrix(rng: random.Random, curve, k: int, n: int, bound: int) -> RingMatrix:
    pairs = [
        [(rng.randint(-bound, bound), rng.randint(-bound, bound)) for _ in range(n)]
        for _ in range(k)
    ]
    return RingMatrix.from_pairs(curve, pairs, cols=n)


@lru_cache(maxsize=None)
def matrix_corpus(count: int = 500, seed: int = 71) -> tuple[RingMatrix, ...]:
    """Seeded matrices, k and n up to 4, entries in [-5, 5], N in {1, 4, 9}."""
    rng = random.Random(seed)
    curves = (curve_sqrt3(), curve_half_i(), curve_third_sqrt2())
    out = []
    for idx in range(count):
        out.append(
            random_ring_matrix(rng, curves[idx % 3], rng.randint(1, 4), rng.randint(1, 4), 5)
        )
    return tuple(out)


@lru_cache(maxsize=None)
def arrangement_corpus(count: int = 200, seed: int = 72) -> tuple[EllipticArrangement, ...]:
    """Seeded arrangements, k up to 5, n up to 4, over five reference curves."""
    rng = random.Random(seed)
    curves = (
        curve_sqrt3(),
        curve_half_i(),
        curve_third_sqrt2(),
        curve_omega3(),
        curve_gauss(),
    )
    out = []
    for idx in range(count):
        out.append(
            random_ring_matrix(rng, curves[idx % 5], rng.randint(1, 5), rng.randint(1, 4), 3)
        )
    return tuple(EllipticArrangement(mat) for mat in out)


@lru_cache(maxsize=None)
def points_corpus(count: int = 50, seed: int = 73) -> tuple[EllipticArrangement, ...]:
    """Seeded essential arrangements with n = 1 and no zero rows."""
    rng = random.Random(seed)
    curves = (curve_sqrt3(), curve_half_i(), curve_third_sqrt2(), curve_omega3())
    out = []
    for idx in range(count):
        curve = curves[idx % 4]
        k = rng.randint(1, 5)
        pairs = []
        for _ in range(k):
            x = y = 0
            while x == 0 and y == 0:
                x, y = rng.randint(-3, 3), rng.randint(-3, 3)
            pairs.append([(x, y)])
        out.append(EllipticArrangement(RingMatrix.from_pairs(curve, pairs, cols=1)))
    return tuple(out)


def det_int(rows: list[list[int]]) -> int:
    """Determinant by Laplace expansion; exact, for small matrices only."""
    size = len(rows)
    if size == 0:
        return 1
    if size == 1:
        return rows[0][0]
    if size == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = 0
    for j, v in enumerate(rows[0]):
        if v:
            minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
            term = v * det_int(minor)
            total += -term if j & 1 else term
    return total


def minor_rank_and_torsion(matrix: IntMatrix) -> tuple[int, int]:
    """Rank and gcd of all rank-sized minors, by exhaustive minor enumeration.

    The determinantal divisor D_r for r = rank is the torsion-cokernel
    order; this never touches the elimination code it is checking.
    """
    rows = matrix.to_rows()
    rank, torsion = 0, 1
    for s in range(1, min(matrix.rows, matrix.cols) + 1):
        g = 0
        for ri in combinations(range(matrix.rows), s):
            for ci in combinations(range(matrix.cols), s):
                g = gcd(g, det_int([[rows[i][j] for j in ci] for i in ri]))
        if g == 0:
            break
        rank, torsion = s, g
    return rank, torsion


def generator_index_oracle(field: FieldParams, a: int, b: int, c: int) -> int:
    """Least k >= 1 with k*tau and k*tau^2 in <1, tau>, over exact rationals.

    Works directly from omega's quadratic relation: tau^2 = p + q*omega with
    p, q rational, then substitutes omega = (c*tau - a)/b to express tau^2
    over the basis {1, tau}.  k*tau is always in the lattice, so only the
    tau^2 condition matters.
    """
    if field.half_integral:
        p = Fraction(a * a - b * b * field.m_prime, c * c)
        q = Fraction(2 * a * b + b * b, c * c)
    else:
        p = Fraction(a * a - b * b * field.m, c * c)
        q = Fraction(2 * a * b, c * c)
    const_part = p - q * Fraction(a, b)
    tau_part = q * Fraction(c, b)
    for k in range(1, c * c + 1):
        if (k * const_part).denominator == 1 and (k * tau_part).denominator == 1:
            return k
    raise AssertionError("no multiplier up to c^2, which is impossible")


def union_point_count(matroid) -> int:
    """Inclusion-exclusion size of the union of divisors for n = 1, no loops."""
    total = 0
    for s in range(1, 1 << matroid.size):
        total += matroid.m[s] if s.bit_count() & 1 else -matroid.m[s]
    return total
