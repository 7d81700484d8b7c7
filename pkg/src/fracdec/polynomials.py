"""Dense univariate polynomials over any field context of this package.

A field context is anything exposing ``order``, ``add``, ``sub``, ``neg``,
``mul`` and ``inv`` on integer-encoded elements (both
:class:`~fracdec.finite_fields.FieldCtx` and
:class:`~fracdec.finite_fields.ExtFieldCtx` qualify).  Coefficients are
stored constant term first with trailing zeros stripped.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .exceptions import (
    DivisionByZero,
    DuplicateAbscissa,
    FieldMismatch,
    InexactDivision,
    ZeroPolynomial,
)

#: Degree of the zero polynomial.  Compares below every integer, so
#: ``p.degree < k`` holds for the zero polynomial and any ``k``.
NEG_INF = float("-inf")


def _strip(coeffs: list[int]) -> tuple[int, ...]:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs: Iterable[int] = ()):
        self.field = field
        self.coeffs = _strip(list(coeffs))

    # -- constructors ----------------------------------------------------
    @classmethod
    def zero(cls, field) -> "Poly":
        return cls(field)

    @classmethod
    def one(cls, field) -> "Poly":
        return cls(field, (1,))

    @classmethod
    def x(cls, field) -> "Poly":
        return cls(field, (0, 1))

    @classmethod
    def from_roots(cls, field, roots: Iterable[int]) -> "Poly":
        """Monic polynomial ``prod (x - r)``."""
        out = [1]
        for r in roots:
            nr = field.neg(r)
            nxt = [0] * (len(out) + 1)
            for i, c in enumerate(out):
                nxt[i + 1] = field.add(nxt[i + 1], c)
                nxt[i] = field.add(nxt[i], field.mul(c, nr))
            out = nxt
        return cls(field, out)

    # -- basic properties ------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def padded(self, length: int) -> list[int]:
        """Coefficient list zero-padded (never truncated) to ``length``."""
        c = list(self.coeffs)
        return c + [0] * (length - len(c))

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "Poly(0)"
        terms = [f"{c}*x^{i}" if i else str(c) for i, c in enumerate(self.coeffs) if c]
        return "Poly(" + " + ".join(terms) + ")"

    # -- ring operations -------------------------------------------------
    def _check(self, other: "Poly"):
        if self.field != other.field:
            raise FieldMismatch("polynomials over different fields")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        add = self.field.add
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = add(out[i], c)
        return Poly(self.field, out)

    def __neg__(self) -> "Poly":
        neg = self.field.neg
        return Poly(self.field, [neg(c) for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(self.field)
        add, mul = self.field.add, self.field.mul
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] = add(out[i + j], mul(ca, cb))
        return Poly(self.field, out)

    def scale(self, c: int) -> "Poly":
        mul = self.field.mul
        return Poly(self.field, [mul(c, a) for a in self.coeffs])

    def shift(self, k: int) -> "Poly":
        """Multiply by ``x**k``."""
        if not self.coeffs:
            return self
        return Poly(self.field, [0] * k + list(self.coeffs))

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative exponent")
        result = Poly.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, den: "Poly"):
        self._check(den)
        if den.is_zero():
            raise DivisionByZero("polynomial division by zero")
        f = self.field
        rem = list(self.coeffs)
        dd = len(den.coeffs) - 1
        if len(rem) - 1 < dd:
            return Poly(f), Poly(f, rem)
        inv_lead = f.inv(den.coeffs[-1])
        quo = [0] * (len(rem) - dd)
        dc = den.coeffs
        for i in range(len(rem) - 1 - dd, -1, -1):
            c = rem[i + dd]
            if c == 0:
                continue
            c = f.mul(c, inv_lead)
            quo[i] = c
            for j, d in enumerate(dc):
                if d:
                    rem[i + j] = f.sub(rem[i + j], f.mul(c, d))
        return Poly(f, quo), Poly(f, rem[:dd])

    def __floordiv__(self, den: "Poly") -> "Poly":
        return divmod(self, den)[0]

    def __mod__(self, den: "Poly") -> "Poly":
        return divmod(self, den)[1]

    def __call__(self, x: int) -> int:
        return evaluate(self, x)


def evaluate(p: Poly, x: int, field=None) -> int:
    """Horner evaluation of ``p`` at ``x``.

    ``field`` selects the field ``x`` lives in.  It defaults to the
    coefficient field; an extension whose ``base`` is the coefficient field
    is also accepted, in which case the coefficients are embedded (the
    integer encoding makes the embedding the identity).
    """
    f = p.field if field is None else field
    if f != p.field and getattr(f, "base", None) != p.field:
        raise FieldMismatch("evaluation point field does not contain the coefficients")
    if not 0 <= x < f.order:
        raise FieldMismatch(f"{x} is not an element of a field of order {f.order}")
    add, mul = f.add, f.mul
    acc = 0
    for c in reversed(p.coeffs):
        acc = add(mul(acc, x), c)
    return acc


def interpolate(field, points: Sequence[tuple[int, int]]) -> Poly:
    """Lagrange interpolation through ``points``; degree < ``len(points)``."""
    if not points:
        raise ValueError("need at least one point")
    xs = [x for x, _ in points]
    if len(set(xs)) != len(xs):
        raise DuplicateAbscissa("interpolation abscissae must be distinct")
    f = field
    master = Poly.from_roots(f, xs).coeffs
    n = len(xs)
    out = [0] * n
    for xi, yi in points:
        if yi == 0:
            continue
        # synthetic division of the master polynomial by (x - xi)
        quo = [0] * n
        carry = 0
        for d in range(n, 0, -1):
            carry = f.add(master[d], f.mul(carry, xi))
            quo[d - 1] = carry
        denom = 0
        for c in reversed(quo):
            denom = f.add(f.mul(denom, xi), c)
        w = f.mul(yi, f.inv(denom))
        for d in range(n):
            if quo[d]:
                out[d] = f.add(out[d], f.mul(w, quo[d]))
    return Poly(f, out)


def exact_div(num: Poly, den: Poly) -> Poly:
    """Quotient of ``num / den``; raises :class:`InexactDivision` on a remainder."""
    quo, rem = divmod(num, den)
    if not rem.is_zero():
        raise InexactDivision(f"nonzero remainder of degree {rem.degree}")
    return quo


def roots_in(p: Poly, candidates: Iterable[int]) -> list[int]:
    """Elements of ``candidates`` at which ``p`` vanishes, in the given order."""
    if p.is_zero():
        raise ZeroPolynomial("every element is a root of the zero polynomial")
    return [x for x in candidates if evaluate(p, x) == 0]


def powmod(base: Poly, e: int, mod: Poly) -> Poly:
    """``base**e mod mod`` by square and multiply."""
    result = Poly.one(base.field) % mod
    b = base % mod
    while e:
        if e & 1:
            result = (result * b) % mod
        e >>= 1
        if e:
            b = (b * b) % mod
    return result


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor (zero if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    if a.is_zero():
        return a
    return a.scale(a.field.inv(a.lead()))
