"""Univariate polynomials over the rationals, with exact real-root tools.

Supports the certification needs of the package: Sturm chains with content
normalization to control coefficient growth, square-free decomposition via
exact gcds, global nonnegativity decisions, and bisection-based isolation
of real roots to a requested rational width.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .errors import ValidationError


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise ValidationError(f"expected an exact rational, got {type(x).__name__}")


class QPoly:
    """Immutable dense polynomial; coefficients ascending, none trailing."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Fraction] = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    @classmethod
    def of(cls, *coeffs) -> "QPoly":
        """Polynomial from ascending coefficients: ``of(1, 0, 2)`` is 1 + 2t^2."""
        return cls(coeffs)

    @classmethod
    def constant(cls, c) -> "QPoly":
        return cls((c,))

    @classmethod
    def x(cls) -> "QPoly":
        return cls((0, 1))

    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValidationError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "QPoly") -> "QPoly":
        if not isinstance(other, QPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    def __neg__(self) -> "QPoly":
        return QPoly([-c for c in self.coeffs])

    def __sub__(self, other: "QPoly") -> "QPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = _as_fraction(other)
            return QPoly([c * q for c in self.coeffs])
        if not isinstance(other, QPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return QPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QPoly":
        if n < 0:
            raise ValidationError("negative power")
        result = QPoly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "QPoly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        db = other.degree()
        if self.degree() < db:
            return QPoly(), self
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        quo = [Fraction(0)] * (self.degree() - db + 1)
        for k in range(self.degree() - db, -1, -1):
            c = rem[k + db] / lead
            quo[k] = c
            if c:
                for i, b in enumerate(other.coeffs):
                    rem[i + k] -= c * b
        return QPoly(quo), QPoly(rem[:db])

    def __call__(self, x) -> Fraction:
        x = _as_fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "QPoly":
        return QPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def content_normalized(self) -> "QPoly":
        """Scaled by the positive rational making the coefficients integer
        and coprime; the sign structure is untouched (safe inside Sturm
        chains, where only positive rescaling is allowed)."""
        if not self.coeffs:
            return self
        den = lcm(*(c.denominator for c in self.coeffs))
        nums = [int(c * den) for c in self.coeffs]
        g = gcd(*nums)
        return QPoly([Fraction(n, g) for n in nums])

    def primitive(self) -> "QPoly":
        """Integer-primitive associate with positive leading coefficient."""
        p = self.content_normalized()
        if p.coeffs and p.coeffs[-1] < 0:
            return -p
        return p

    def compose(self, inner: "QPoly") -> "QPoly":
        acc = QPoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + QPoly((c,))
        return acc

    def __repr__(self):
        return f"QPoly({list(self.coeffs)!r})"


def poly_gcd(a: QPoly, b: QPoly) -> QPoly:
    """Primitive gcd by the Euclidean algorithm, normalized each step."""
    a, b = a.primitive() if a else a, b.primitive() if b else b
    while b:
        _, r = divmod(a, b)
        a, b = b, (r.primitive() if r else r)
    return a


def squarefree_part(p: QPoly) -> QPoly:
    if p.is_zero() or p.degree() == 0:
        return QPoly((1,))
    g = poly_gcd(p, p.derivative())
    q, _ = divmod(p, g)
    return q.primitive()


def odd_multiplicity_part(p: QPoly) -> QPoly:
    """Product of the square-free factors appearing with odd multiplicity.

    Yun decomposition; the sign of ``p`` changes exactly at the real roots
    of this part.
    """
    if p.is_zero():
        raise ValidationError("zero polynomial has no square-free decomposition")
    if p.degree() == 0:
        return QPoly((1,))
    p = p.primitive()
    factors: list[QPoly] = []  # factors[i] has multiplicity i+1
    g = poly_gcd(p, p.derivative())
    c, _ = divmod(p, g)
    d = divmod(p.derivative(), g)[0] - c.derivative()
    while c.degree() > 0:
        a = poly_gcd(c, d)
        factors.append(a)
        c, _ = divmod(c, a)
        d = divmod(d, a)[0] - c.derivative()
    out = QPoly((1,))
    for i, f in enumerate(factors):
        if i % 2 == 0:  # multiplicity i+1 odd
            out = out * f
    return out.primitive()


def sturm_chain(p: QPoly) -> list[QPoly]:
    """Sturm chain of the square-free part.

    Content normalization keeps coefficient growth in check; only positive
    rescaling is applied, since sign flips would destroy the variation
    counts the chain exists for.
    """
    p = squarefree_part(p)
    chain = [p]
    if p.degree() > 0:
        chain.append(p.derivative().content_normalized())
        while chain[-1].degree() > 0:
            _, r = divmod(chain[-2], chain[-1])
            if r.is_zero():
                break
            chain.append((-r).content_normalized())
    return chain


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _variations(signs: Sequence[int]) -> int:
    cleaned = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(cleaned, cleaned[1:]) if a * b < 0)


def _sign_at(p: QPoly, x, infinity: int) -> int:
    """Sign of p at the point, or at -inf/+inf when ``infinity`` is -1/+1."""
    if p.is_zero():
        return 0
    if infinity == 0:
        return _sign(p(x))
    s = _sign(p.leading())
    if infinity < 0 and p.degree() % 2 == 1:
        s = -s
    return s


def count_real_roots(
    p: QPoly, lo: Fraction | None = None, hi: Fraction | None = None
) -> int:
    """Distinct real roots of ``p`` in the half-open interval ``(lo, hi]``.

    ``None`` bounds mean the corresponding infinity.
    """
    if p.is_zero():
        raise ValidationError("zero polynomial has every point as a root")
    if p.degree() == 0:
        return 0
    chain = sturm_chain(p)
    va = _variations([_sign_at(q, lo, 0 if lo is not None else -1) for q in chain])
    vb = _variations([_sign_at(q, hi, 0 if hi is not None else +1) for q in chain])
    return va - vb


def cauchy_root_bound(p: QPoly) -> Fraction:
    """All real roots lie in [-B, B] for the returned B."""
    if p.is_zero() or p.degree() == 0:
        return Fraction(1)
    lead = abs(p.leading())
    return 1 + max(abs(c) for c in p.coeffs[:-1]) / lead


def isolate_real_root(
    p: QPoly, width: Fraction, lower: Fraction = Fraction(0)
) -> tuple[Fraction, Fraction]:
    """Interval of length < ``width`` around the smallest root above ``lower``.

    Bisects with Sturm counts until the bracket is narrower than ``width``
    and contains exactly one root of the square-free part.  Raises if no
    root lies above ``lower``.
    """
    if width <= 0:
        raise ValidationError("isolation width must be positive")
    q = squarefree_part(p)
    hi = cauchy_root_bound(q)
    if hi <= lower:
        hi = lower + 1
    lo = lower
    total = count_real_roots(q, lo, hi)
    if total == 0:
        raise ValidationError(f"no real root above {lower}")
    while hi - lo >= width or count_real_roots(q, lo, hi) != 1:
        mid = (lo + hi) / 2
        if count_real_roots(q, lo, mid) >= 1:
            hi = mid
        else:
            lo = mid
    return lo, hi


def nonneg_on_reals(p: QPoly) -> bool:
    """Exact decision of ``p(b) >= 0`` for every real ``b``.

    True iff the polynomial is identically zero, or has positive leading
    coefficient, even degree, and no real root of odd multiplicity.
    """
    if p.is_zero():
        return True
    if p.degree() == 0:
        return p.leading() > 0
    if p.degree() % 2 == 1 or p.leading() < 0:
        return False
    odd = odd_multiplicity_part(p)
    if odd.degree() <= 0:
        return True
    return count_real_roots(odd) == 0
