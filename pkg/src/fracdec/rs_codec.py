"""Reed-Solomon codes RS(q^l, n, k) with evaluation points in the base field F_q."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from .exceptions import BadEvaluationSet, DegreeTooHigh, LengthExceedsField, LengthMismatch
from .finite_fields import ExtFieldCtx
from .polynomials import Poly


@dataclass(frozen=True, eq=False)
class CodeSpec:
    ext: ExtFieldCtx
    n: int
    k: int
    L: tuple[int, ...]
    u: tuple[int, ...] = field(repr=False)

    @property
    def base(self):
        return self.ext.base

    @cached_property
    def syndrome_weights(self) -> list[list[int]]:
        """``w[i][h] = u_h * alpha_h**i`` for ``0 <= i < n``."""
        f = self.base
        rows = [list(self.u)]
        for _ in range(1, self.n):
            rows.append([f.mul(w, a) for w, a in zip(rows[-1], self.L)])
        return rows

    @cached_property
    def lagrange_basis(self) -> list[list[int]]:
        """Coefficients of ``u_h * prod_{h' != h} (x - alpha_h')`` for each h."""
        f = self.base
        master = Poly.from_roots(f, self.L).coeffs
        n = self.n
        out = []
        for a, w in zip(self.L, self.u):
            quo = [0] * n
            carry = 0
            for d in range(n, 0, -1):
                carry = f.add(master[d], f.mul(carry, a))
                quo[d - 1] = carry
            out.append([f.mul(w, c) for c in quo])
        return out

    def interpolate(self, values: Sequence[int]) -> Poly:
        """Polynomial of degree < n over F_q taking ``values`` on L."""
        if len(values) != self.n:
            raise LengthMismatch(f"expected {self.n} values, got {len(values)}")
        f = self.base
        add, mul = f.add, f.mul
        acc = [0] * self.n
        for y, row in zip(values, self.lagrange_basis):
            if y:
                acc = [add(a, mul(y, c)) for a, c in zip(acc, row)]
        return Poly(f, acc)

    def to_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "L": list(self.L)}


def make_code(ext: ExtFieldCtx, n: int, k: int, L: Sequence[int] | None = None) -> CodeSpec:
    """RS(q^l, n, k) with evaluation set ``L`` inside F_q*.

    The default ``L`` is the first ``n`` nonzero base elements in canonical
    order, i.e. ``1, 2, ..., n``.
    """
    q = ext.q
    if n > q - 1:
        raise LengthExceedsField(f"n={n} exceeds q-1={q - 1}")
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
    if L is None:
        L = tuple(range(1, n + 1))
    else:
        L = tuple(int(a) for a in L)
        if len(L) != n:
            raise BadEvaluationSet(f"evaluation set has {len(L)} points, expected {n}")
        if len(set(L)) != n:
            raise BadEvaluationSet("evaluation points must be distinct")
        if any(not 0 < a < q for a in L):
            raise BadEvaluationSet("evaluation points must be nonzero elements of F_q")
    f = ext.base
    u = []
    for h, a in enumerate(L):
        prod = 1
        for h2, b in enumerate(L):
            if h2 != h:
                prod = f.mul(prod, f.sub(a, b))
        u.append(f.inv(prod))
    return CodeSpec(ext, n, k, L, tuple(u))


def dual_multipliers(spec: CodeSpec) -> tuple[int, ...]:
    """``u_h = prod_{h' != h} (alpha_h - alpha_h')^-1``.

    Every word ``g(L)`` with ``deg g < k'`` satisfies
    ``sum_h g(alpha_h) u_h alpha_h^i = 0`` for ``0 <= i < n - k'``.
    """
    return spec.u


def encode(spec: CodeSpec, h: Poly) -> list[int]:
    """Evaluate the message polynomial on L."""
    if h.field != spec.ext:
        raise ValueError("message must be a polynomial over the extension field")
    if h.degree >= spec.k:
        raise DegreeTooHigh(f"message degree {h.degree} >= k={spec.k}")
    E = spec.ext
    add, smul = E.add, E.scalar_mul
    coeffs = h.coeffs[::-1]
    out = []
    for a in spec.L:
        acc = 0
        for c in coeffs:
            acc = add(smul(a, acc), c)
        out.append(acc)
    return out
