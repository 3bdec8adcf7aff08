"""Exact arithmetic in imaginary quadratic orders attached to a lattice.

A lattice L = <1, tau> with tau = (a + b*omega)/c non-real determines the
multiplier ring R = {z : z*L inside L}, which is an order in the imaginary
quadratic field Q(sqrt(-m)).  R always has a Z-basis {1, N*tau} for a unique
positive integer N, and every integer constant needed later (N, conductor,
normalized trace and determinant of multiplication by tau) is derived once
at construction time.

All values are plain Python integers; nothing in this module, or anywhere
else in the package, uses floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt


class ParameterError(ValueError):
    """Invalid field, curve, or element parameters."""


def is_square_free(m: int) -> bool:
    """True if m >= 1 and no square > 1 divides m."""
    if m < 1:
        return False
    for d in range(2, isqrt(m) + 1):
        if m % (d * d) == 0:
            return False
    return True


@dataclass(frozen=True)
class FieldParams:
    """The field Q(sqrt(-m)) and the shape of its ring of integers Z[omega].

    omega = (1 + sqrt(-m))/2 when m = 3 (mod 4), the half-integral case,
    and omega = sqrt(-m) otherwise.  In the half-integral case m_prime is
    the integer with 4*m_prime - 1 = m, so omega^2 = omega - m_prime;
    otherwise omega^2 = -m.
    """

    m: int
    half_integral: bool
    m_prime: int | None = None

    def omega_str(self) -> str:
        if self.half_integral:
            return f"(1 + sqrt(-{self.m}))/2"
        return f"sqrt(-{self.m})"


def make_field(m: int) -> FieldParams:
    """Field parameters for Q(sqrt(-m)); m must be positive and square-free."""
    if m < 1:
        raise ParameterError(f"m must be a positive integer, got {m}")
    if not is_square_free(m):
        raise ParameterError(f"m must be square-free, got {m}")
    if m % 4 == 3:
        return FieldParams(m=m, half_integral=True, m_prime=(m + 1) // 4)
    return FieldParams(m=m, half_integral=False)


@dataclass(frozen=True)
class CurveParams:
    """A lattice <1, tau>, tau = (a + b*omega)/c, with all derived constants.

    trace_num and det_num are c*tr and c^2*det of multiplication by tau, so
    both are integers.  With g = gcd(c, det_num), c = g*c_prime and
    det_num = g*delta_prime, the multiplier ring is R = <1, N*tau> where
    N = c^2/g = g*c_prime^2, and the primitive integer minimal polynomial
    of tau is N*X^2 - (trace_num*c_prime)*X + delta_prime.  The conductor
    is the index of R in the maximal order Z[omega].
    """

    field: FieldParams
    a: int
    b: int
    c: int
    trace_num: int
    det_num: int
    g: int
    c_prime: int
    delta_prime: int
    N: int
    conductor: int

    @property
    def gen_trace(self) -> int:
        """Trace of the generator N*tau, equal to trace_num * c_prime."""
        return self.trace_num * self.c_prime

    @property
    def gen_norm(self) -> int:
        """Norm of the generator N*tau, equal to N * delta_prime."""
        return self.N * self.delta_prime

    def tau_str(self) -> str:
        return f"({self.a} + {self.b}*omega)/{self.c}"


def make_curve(field: FieldParams, a: int, b: int, c: int) -> CurveParams:
    """Build curve parameters for tau = (a + b*omega)/c.

    Requires gcd(a, b, c) = 1 and b != 0 (tau non-real).  A negative c is
    normalized by negating the whole triple; non-primitive triples are
    rejected rather than reduced, so stored parameters are canonical.
    """
    if b == 0:
        raise ParameterError("b = 0 makes tau real")
    if c == 0:
        raise ParameterError("c must be nonzero")
    if gcd(gcd(a, b), c) != 1:
        raise ParameterError(f"gcd(a, b, c) must be 1, got ({a}, {b}, {c})")
    if c < 0:
        a, b, c = -a, -b, -c
    if field.half_integral:
        trace_num = 2 * a + b
        det_num = a * a + a * b + b * b * field.m_prime
    else:
        trace_num = 2 * a
        det_num = a * a + b * b * field.m
    g = gcd(c, det_num)
    c_prime = c // g
    delta_prime = det_num // g
    n = g * c_prime * c_prime
    curve = CurveParams(
        field=field,
        a=a,
        b=b,
        c=c,
        trace_num=trace_num,
        det_num=det_num,
        g=g,
        c_prime=c_prime,
        delta_prime=delta_prime,
        N=n,
        conductor=abs(b) * c_prime,
    )
    # Content of the primitive minimal polynomial of tau is 1; everything
    # downstream (cokernel comparisons, projectivity of the lattice) leans
    # on this, so fail loudly if it ever breaks.
    assert gcd(gcd(curve.N, curve.gen_trace), curve.delta_prime) == 1
    assert curve.N == c * c // g
    return curve


@dataclass(frozen=True)
class IntQuadratic:
    """Primitive integer quadratic lead*X^2 + lin*X + const with negative discriminant."""

    lead: int
    lin: int
    const: int

    def __post_init__(self) -> None:
        if gcd(gcd(self.lead, self.lin), self.const) != 1:
            raise ParameterError("quadratic is not primitive")
        if self.discriminant >= 0:
            raise ParameterError("discriminant must be negative")

    @property
    def discriminant(self) -> int:
        return self.lin * self.lin - 4 * self.lead * self.const

    def __str__(self) -> str:
        parts: list[str] = []
        for coeff, mono in ((self.lead, "x^2"), (self.lin, "x"), (self.const, "")):
            if coeff == 0:
                continue
            mag = abs(coeff)
            body = mono if mag == 1 and mono else (f"{mag}*{mono}" if mono else str(mag))
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(parts) if parts else "0"


def min_poly(curve: CurveParams) -> IntQuadratic:
    """Primitive minimal polynomial of tau over Z.

    Equals N times the rational minimal polynomial X^2 - tr(tau)*X + det(tau);
    its content is 1 by the coprimality checked at curve construction.
    """
    return IntQuadratic(curve.N, -curve.gen_trace, curve.delta_prime)


@dataclass(frozen=True)
class RingElement:
    """Element x + y*w of the order R, in the basis {1, w} with w = N*tau.

    The basis element satisfies w^2 = gen_trace*w - gen_norm, which is all
    multiplication needs.  Elements are immutable; arithmetic on elements
    over different curves is rejected.
    """

    curve: CurveParams
    x: int
    y: int

    def _same_curve(self, other: "RingElement") -> None:
        if self.curve != other.curve:
            raise ParameterError("operands live over different curves")

    def __add__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        self._same_curve(other)
        return RingElement(self.curve, self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        self._same_curve(other)
        return RingElement(self.curve, self.x - other.x, self.y - other.y)

    def __neg__(self) -> "RingElement":
        return RingElement(self.curve, -self.x, -self.y)

    def __mul__(self, other):
        if isinstance(other, int):
            return RingElement(self.curve, self.x * other, self.y * other)
        if not isinstance(other, RingElement):
            return NotImplemented
        self._same_curve(other)
        t = self.curve.gen_trace
        nn = self.curve.gen_norm
        yy = self.y * other.y
        return RingElement(
            self.curve,
            self.x * other.x - nn * yy,
            self.x * other.y + self.y * other.x + t * yy,
        )

    def __rmul__(self, other):
        return self.__mul__(other)

    def conj(self) -> "RingElement":
        """Image under the nontrivial field automorphism, in the same basis.

        The conjugate of w = N*tau is gen_trace - w (sum of the roots of the
        minimal polynomial), so R is closed under conjugation.
        """
        return RingElement(self.curve, self.x + self.curve.gen_trace * self.y, -self.y)

    def norm(self) -> int:
        """The rational integer self * conj(self); positive unless self = 0."""
        return (
            self.x * self.x
            + self.curve.gen_trace * self.x * self.y
            + self.curve.gen_norm * self.y * self.y
        )

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def __str__(self) -> str:
        if self.y == 0:
            return str(self.x)
        w = "w" if self.y == 1 else ("-w" if self.y == -1 else f"{self.y}*w")
        if self.x == 0:
            return w
        sign = "+" if self.y > 0 else "-"
        mag = abs(self.y)
        return f"{self.x} {sign} {mag}*w" if mag != 1 else f"{self.x} {sign} w"


def scalar(curve: CurveParams, value: int) -> RingElement:
    """The rational integer `value` as an element of R."""
    return RingElement(curve, value, 0)


def generator(curve: CurveParams) -> RingElement:
    """The basis element w = N*tau of R."""
    return RingElement(curve, 0, 1)
