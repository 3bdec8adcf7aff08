"""Arithmetic matroids as dense rank/multiplicity tables with axiom checkers.

An arithmetic matroid on ground set [k] is a pair of tables indexed by the
2^k subsets: a rank function satisfying the matroid axioms

    (r1) rk(empty) = 0
    (r2) rk(X) <= rk(X + i) <= rk(X) + 1
    (r3) rk(X | Y) + rk(X & Y) <= rk(X) + rk(Y)

and a positive multiplicity function satisfying

    (A1) m(X + i) | m(X) when the rank stays, m(X) | m(X + i) when it grows,
    (A2) m(X) m(Y) = m(X + F) m(X + T) on every molecule [X, Y],
    (P)  rho(X, Y) >= 0 on every molecule,

where a molecule is an interval [X, Y], Y = X + F + T disjointly, on which
rk(S) = rk(X) + |S & F| throughout, and

    rho(X, Y) = (-1)^|T| * sum over S in [X, Y] of (-1)^(|Y| - |S|) m(S).

(P) restricted to rank-constant intervals is (P1); (P1) on the dual matroid
is (P2).  Verifiers treat violations as data, never as exceptions, so
tampered tables can be inspected.  All scans are exhaustive: the molecule
scan walks all 3^k nested pairs and submodularity all 4^k pairs, which is
why ground sets are capped (default 20) when built from arrangements.

Subsets are bitmasks, bit i standing for element i+1.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, gcd
from typing import Iterator

from .arrangement import EllipticArrangement
from .quadratic_order import ParameterError


def submasks(mask: int) -> Iterator[int]:
    """All submasks of mask, descending from mask to 0."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def bit_indices(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def format_subset(mask: int) -> str:
    """Human form of a bitmask, 1-based: 0b101 -> '{1,3}'."""
    return "{" + ",".join(str(i + 1) for i in bit_indices(mask)) + "}"


@dataclass(frozen=True)
class ArithmeticMatroid:
    """Dense tables rk, m over all subsets of a ground set of `size` elements.

    Construction validates only shapes and positivity of m; the axioms are
    the verifiers' business, so deliberately broken tables are expressible.
    """

    size: int
    rk: tuple[int, ...]
    m: tuple[int, ...]

    def __post_init__(self) -> None:
        expected = 1 << self.size
        if len(self.rk) != expected or len(self.m) != expected:
            raise ParameterError(f"tables must have {expected} entries")
        if any(v < 1 for v in self.m):
            raise ParameterError("multiplicities must be positive")

    @property
    def ground_mask(self) -> int:
        return (1 << self.size) - 1

    @property
    def full_rank(self) -> int:
        return self.rk[self.ground_mask]

    def dual(self) -> "ArithmeticMatroid":
        """Dual tables: rk*(S) = |S| - rk(E) + rk(E - S), m*(S) = m(E - S)."""
        e = self.ground_mask
        r = self.full_rank
        rk = tuple(s.bit_count() - r + self.rk[e ^ s] for s in range(e + 1))
        m = tuple(self.m[e ^ s] for s in range(e + 1))
        return ArithmeticMatroid(self.size, rk, m)

    def _kept(self, t_mask: int) -> list[int]:
        if not 0 <= t_mask <= self.ground_mask:
            raise ParameterError("subset out of range")
        return [i for i in range(self.size) if not t_mask >> i & 1]

    def _widen(self, narrow: int, kept: list[int]) -> int:
        wide = 0
        for j, i in enumerate(kept):
            if narrow >> j & 1:
                wide |= 1 << i
        return wide

    def contraction(self, t_mask: int) -> "ArithmeticMatroid":
        """Contract the elements of t_mask: rk(A) -> rk(A|T) - rk(T), m(A) -> m(A|T)."""
        kept = self._kept(t_mask)
        base = self.rk[t_mask]
        rk = []
        m = []
        for narrow in range(1 << len(kept)):
            wide = self._widen(narrow, kept) | t_mask
            rk.append(self.rk[wide] - base)
            m.append(self.m[wide])
        return ArithmeticMatroid(len(kept), tuple(rk), tuple(m))

    def deletion(self, t_mask: int) -> "ArithmeticMatroid":
        """Delete the elements of t_mask, restricting both tables."""
        kept = self._kept(t_mask)
        rk = []
        m = []
        for narrow in range(1 << len(kept)):
            wide = self._widen(narrow, kept)
            rk.append(self.rk[wide])
            m.append(self.m[wide])
        return ArithmeticMatroid(len(kept), tuple(rk), tuple(m))


def from_arrangement(arr: EllipticArrangement, max_ground: int = 20) -> ArithmeticMatroid:
    """Tabulate rank and multiplicity of an arrangement over all subsets.

    The tables have 2^k entries and every verifier is exhaustive, so ground
    sets larger than `max_ground` are refused.
    """
    if arr.k > max_ground:
        raise ParameterError(
            f"ground set of {arr.k} elements exceeds the cap of {max_ground}"
        )
    reports = arr.reports()
    return ArithmeticMatroid(
        arr.k,
        tuple(rep.rank for rep in reports),
        tuple(rep.multiplicity for rep in reports),
    )


@dataclass(frozen=True)
class Violation:
    """One failed axiom instance; subsets are the bitmasks involved."""

    axiom: str
    subsets: tuple[int, ...]
    detail: str


@dataclass(frozen=True)
class Molecule:
    """Interval [x, y] with y = x + coloops + torsion elementwise disjoint,
    on which rk(S) = rk(x) + |S & coloops|."""

    x: int
    y: int
    coloops: int
    loops: int


def verify_matroid(matroid: ArithmeticMatroid) -> tuple[Violation, ...]:
    """Exhaustive check of the rank axioms (r1)-(r3); violations are returned, not raised."""
    out: list[Violation] = []
    rk = matroid.rk
    if rk[0] != 0:
        out.append(Violation("r1", (0,), f"rk({format_subset(0)}) = {rk[0]} != 0"))
    total = 1 << matroid.size
    for s in range(total):
        base = rk[s]
        for i in range(matroid.size):
            if s >> i & 1:
                continue
            step = rk[s | 1 << i]
            if not base <= step <= base + 1:
                out.append(
                    Violation(
                        "r2",
                        (s, s | 1 << i),
                        f"rk jumps from {base} to {step} adding {i + 1} to {format_subset(s)}",
                    )
                )
    for x in range(total):
        for y in range(x, total):
            if rk[x | y] + rk[x & y] > rk[x] + rk[y]:
                out.append(
                    Violation(
                        "r3",
                        (x, y),
                        f"rk not submodular on {format_subset(x)}, {format_subset(y)}",
                    )
                )
    return tuple(out)


def verify_a1(matroid: ArithmeticMatroid) -> tuple[Violation, ...]:
    """Divisibility axiom (A1) over all (S, i not in S)."""
    out: list[Violation] = []
    rk, m = matroid.rk, matroid.m
    for s in range(1 << matroid.size):
        for i in range(matroid.size):
            if s >> i & 1:
                continue
            si = s | 1 << i
            if rk[si] == rk[s]:
                if m[s] % m[si]:
                    out.append(
                        Violation(
                            "a1",
                            (s, si),
                            f"m({format_subset(si)}) = {m[si]} does not divide "
                            f"m({format_subset(s)}) = {m[s]}",
                        )
                    )
            elif m[si] % m[s]:
                out.append(
                    Violation(
                        "a1",
                        (s, si),
                        f"m({format_subset(s)}) = {m[s]} does not divide "
                        f"m({format_subset(si)}) = {m[si]}",
                    )
                )
    return tuple(out)


def find_molecule(matroid: ArithmeticMatroid, x: int, y: int) -> Molecule | None:
    """The molecule on [x, y] if one exists, else None.

    The partition, when it exists, is forced: an element i of y - x is a
    loop of the interval exactly when rk(x + i) = rk(x).  The candidate
    split is then verified on every subset of the interval.
    """
    if x & ~y:
        raise ParameterError("x must be a subset of y")
    diff = y & ~x
    rk = matroid.rk
    base = rk[x]
    loops = 0
    for i in bit_indices(diff):
        if rk[x | 1 << i] == base:
            loops |= 1 << i
    coloops = diff & ~loops
    for sub in submasks(diff):
        if rk[x | sub] != base + (sub & coloops).bit_count():
            return None
    return Molecule(x=x, y=y, coloops=coloops, loops=loops)


def rho(matroid: ArithmeticMatroid, molecule: Molecule) -> int:
    """Signed inclusion-exclusion of multiplicities over the molecule's interval."""
    m = matroid.m
    diff = molecule.y & ~molecule.x
    total = 0
    size_diff = diff.bit_count()
    for sub in submasks(diff):
        sign = -1 if (size_diff - sub.bit_count()) & 1 else 1
        total += sign * m[molecule.x | sub]
    if molecule.loops.bit_count() & 1:
        total = -total
    return total


def _molecule_scan(matroid: ArithmeticMatroid) -> Iterator[Molecule]:
    for y in range(1 << matroid.size):
        for x in submasks(y):
            mol = find_molecule(matroid, x, y)
            if mol is not None:
                yield mol


def verify_a2(matroid: ArithmeticMatroid) -> tuple[Violation, ...]:
    """Multiplicativity axiom (A2) over every molecule found by exhaustive scan."""
    out: list[Violation] = []
    m = matroid.m
    for mol in _molecule_scan(matroid):
        lhs = m[mol.x] * m[mol.y]
        rhs = m[mol.x | mol.coloops] * m[mol.x | mol.loops]
        if lhs != rhs:
            out.append(
                Violation(
                    "a2",
                    (mol.x, mol.y),
                    f"m(X)m(Y) = {lhs} but m(X+F)m(X+T) = {rhs} on "
                    f"[{format_subset(mol.x)}, {format_subset(mol.y)}]",
                )
            )
    return tuple(out)


def verify_p(matroid: ArithmeticMatroid) -> tuple[Violation, ...]:
    """Positivity axiom (P) over every molecule."""
    out: list[Violation] = []
    for mol in _molecule_scan(matroid):
        value = rho(matroid, mol)
        if value < 0:
            out.append(
                Violation(
                    "p",
                    (mol.x, mol.y),
                    f"rho = {value} < 0 on "
                    f"[{format_subset(mol.x)}, {format_subset(mol.y)}]",
                )
            )
    return tuple(out)


def _verify_p1_on(matroid: ArithmeticMatroid, axiom: str, note: str) -> tuple[Violation, ...]:
    # Rank-constant intervals are automatically molecules with no coloops.
    out: list[Violation] = []
    rk = matroid.rk
    for y in range(1 << matroid.size):
        ry = rk[y]
        for x in submasks(y):
            if rk[x] != ry:
                continue
            mol = Molecule(x=x, y=y, coloops=0, loops=y & ~x)
            value = rho(matroid, mol)
            if value < 0:
                out.append(
                    Violation(
                        axiom,
                        (x, y),
                        f"rho = {value} < 0 on rank-constant "
                        f"[{format_subset(x)}, {format_subset(y)}]{note}",
                    )
                )
    return tuple(out)


def verify_p1(matroid: ArithmeticMatroid) -> tuple[Violation, ...]:
    """Axiom (P1): positivity on rank-constant intervals."""
    return _verify_p1_on(matroid, "p1", "")


def verify_p2(matroid: ArithmeticMatroid) -> tuple[Violation, ...]:
    """Axiom (P2): positivity on rank-constant intervals of the dual."""
    return _verify_p1_on(matroid.dual(), "p2", " (dual)")


def p_equivalence_holds(matroid: ArithmeticMatroid) -> bool:
    """Cross-check that (P) holds exactly when (A2), (P1) and (P2) all hold."""
    p_ok = not verify_p(matroid)
    rest_ok = not (verify_a2(matroid) or verify_p1(matroid) or verify_p2(matroid))
    return p_ok == rest_ok


def gcd_property(matroid: ArithmeticMatroid) -> tuple[bool, int | None]:
    """Whether m(S) is the gcd of multiplicities of maximal independent subsets.

    Returns (holds, first violating subset or None).  The empty set is
    independent of rank 0, so the gcd is never over an empty collection.
    """
    rk, m = matroid.rk, matroid.m
    for s in range(1 << matroid.size):
        target = rk[s]
        g = 0
        for sub in submasks(s):
            if sub.bit_count() == target and rk[sub] == target:
                g = gcd(g, m[sub])
        if m[s] != g:
            return False, s
    return True, None


@dataclass(frozen=True)
class BiPoly:
    """Bivariate integer polynomial as sorted (deg1, deg2, coeff) terms."""

    terms: tuple[tuple[int, int, int], ...]

    @classmethod
    def from_dict(cls, coeffs: dict[tuple[int, int], int]) -> "BiPoly":
        cleaned = sorted((i, j, c) for (i, j), c in coeffs.items() if c != 0)
        return cls(tuple(cleaned))

    def coefficient(self, deg1: int, deg2: int) -> int:
        for i, j, c in self.terms:
            if (i, j) == (deg1, deg2):
                return c
        return 0

    def evaluate(self, v1: int, v2: int) -> int:
        return sum(c * v1**i * v2**j for i, j, c in self.terms)

    def format(self, var1: str = "x", var2: str = "y") -> str:
        if not self.terms:
            return "0"
        ordered = sorted(self.terms, key=lambda t: (-(t[0] + t[1]), -t[0]))
        pieces: list[str] = []
        for i, j, c in ordered:
            mono = "*".join(
                v if d == 1 else f"{v}^{d}"
                for v, d in ((var1, i), (var2, j))
                if d
            )
            mag = abs(c)
            body = mono if mono and mag == 1 else (f"{mag}*{mono}" if mono else str(mag))
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)


def tutte(matroid: ArithmeticMatroid) -> BiPoly:
    """Arithmetic Tutte polynomial
    sum over S of m(S) (x-1)^(rk(E)-rk(S)) (y-1)^(|S|-rk(S))."""
    r = matroid.full_rank
    acc: dict[tuple[int, int], int] = {}
    for s in range(1 << matroid.size):
        p = r - matroid.rk[s]
        q = s.bit_count() - matroid.rk[s]
        w = matroid.m[s]
        for i in range(p + 1):
            ci = comb(p, i) * (-1 if (p - i) & 1 else 1)
            for j in range(q + 1):
                cj = comb(q, j) * (-1 if (q - j) & 1 else 1)
                key = (i, j)
                acc[key] = acc.get(key, 0) + w * ci * cj
    return BiPoly.from_dict(acc)


def char_poly(matroid: ArithmeticMatroid) -> tuple[int, ...]:
    """Characteristic polynomial (-1)^r T(1-t, 0), coefficients ascending in t."""
    r = matroid.full_rank
    t_poly = tutte(matroid)
    coeffs = [0] * (r + 1)
    for i, j, c in t_poly.terms:
        if j:
            continue
        # (1-t)^i contributes comb(i, d) (-1)^d to t^d.
        for d in range(i + 1):
            coeffs[d] += c * comb(i, d) * (-1 if d & 1 else 1)
    if r & 1:
        coeffs = [-v for v in coeffs]
    return tuple(coeffs)


def poly_str(coeffs: tuple[int, ...], var: str = "t") -> str:
    """Render ascending coefficients as a descending-degree polynomial string."""
    pieces: list[str] = []
    for d in range(len(coeffs) - 1, -1, -1):
        c = coeffs[d]
        if c == 0:
            continue
        mono = "" if d == 0 else (var if d == 1 else f"{var}^{d}")
        mag = abs(c)
        body = mono if mono and mag == 1 else (f"{mag}*{mono}" if mono else str(mag))
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(pieces) if pieces else "0"


def poly_eval(coeffs: tuple[int, ...], value: int) -> int:
    out = 0
    for c in reversed(coeffs):
        out = out * value + c
    return out


def euler_characteristic(
    matroid: ArithmeticMatroid, ambient_n: int, essential: bool
) -> int:
    """Euler characteristic of the arrangement complement in E^ambient_n.

    For an essential arrangement (full rank equal to ambient_n) this is
    (-1)^r T(1, 0); a non-essential complement fibers over a positive-
    dimensional abelian factor and has Euler characteristic 0.
    """
    r = matroid.full_rank
    if essential:
        if r != ambient_n:
            raise ParameterError(
                f"essential arrangement must have rank {ambient_n}, got {r}"
            )
        value = tutte(matroid).evaluate(1, 0)
        return -value if r & 1 else value
    return 0


def e2_poincare(matroid: ArithmeticMatroid, ambient_n: int | None = None) -> BiPoly:
    """Bigraded Poincare polynomial of the second spectral-sequence page.

    With chi(q) = sum chi_i q^(r-i), returns
    sum over i of (-1)^i chi_i (1+t)^(2(r-i)) s^i.  Evaluating at
    t = -1, s = -1 recovers the Euler characteristic.  Only meaningful for
    essential arrangements; pass ambient_n to enforce that.
    """
    r = matroid.full_rank
    if ambient_n is not None and ambient_n != r:
        raise ParameterError(
            f"non-essential input: rank {r} differs from ambient dimension {ambient_n}"
        )
    chi = char_poly(matroid)
    acc: dict[tuple[int, int], int] = {}
    for i in range(r + 1):
        chi_i = chi[r - i]
        if chi_i == 0:
            continue
        w = -chi_i if i & 1 else chi_i
        e = 2 * (r - i)
        for d in range(e + 1):
            key = (d, i)
            acc[key] = acc.get(key, 0) + w * comb(e, d)
    return BiPoly.from_dict(acc)
