"""Virtual projection of RS(q^l, n, k) onto a heterogeneous interleaved RS code over F_q.

For pairwise disjoint sets ``A_0..A_{m-1}`` of F_q with annihilators
``p_j(x) = prod_{w in A_j} (x - w)``, the message ``h`` over F_{q^l} maps to
the ``m`` polynomials

    T_j(h) = h_{l-m+j} * p_j^{(l-m)(j+1)} + sum_{u < l-m} h_u * p_j^{u(j+1)}

over F_q, where ``h_i`` applies ``tr(zeta_i * .)`` coefficient-wise.  Row
``j`` is a codeword of RS(q, n, k_j) with ``k_j = k + |A_j|(l-m)(j+1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import ceil
from typing import Sequence

from .exceptions import (
    DegreeTooHigh,
    InsufficientSets,
    LengthMismatch,
    RowDimensionOverflow,
    SetsNotDisjoint,
)
from .polynomials import Poly, evaluate
from .radii import irs_radius
from .rs_codec import CodeSpec

FORMAT_VERSION = 1


@dataclass(frozen=True, eq=False)
class ProjectionScheme:
    spec: CodeSpec
    m: int
    sets: tuple[tuple[int, ...], ...]
    annihilators: tuple[Poly, ...]
    k_rows: tuple[int, ...]

    @property
    def ext(self):
        return self.spec.ext

    @property
    def base(self):
        return self.spec.ext.base

    @property
    def l(self) -> int:
        return self.spec.ext.l

    @property
    def alpha(self) -> Fraction:
        return Fraction(self.m, self.l)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.sets)

    @cached_property
    def radius(self) -> Fraction:
        """Exact joint decoding radius of the projected code."""
        return irs_radius(self.spec.n, self.k_rows).exact

    @property
    def t_max(self) -> int:
        return int(self.radius // 1)

    @cached_property
    def download_weights(self) -> list[list[list[int]]]:
        """``w[i][j][u] = p_j(alpha_i)**(u*(j+1))`` for ``u = 0..l-m``."""
        f = self.base
        lm = self.l - self.m
        out = []
        for a in self.spec.L:
            per_row = []
            for j, p in enumerate(self.annihilators):
                step = f.pow(evaluate(p, a), j + 1)
                ws = [1]
                for _ in range(lm):
                    ws.append(f.mul(ws[-1], step))
                per_row.append(ws)
            out.append(per_row)
        return out

    def to_dict(self) -> dict:
        return {"m": self.m, "sets": [list(a) for a in self.sets]}


@dataclass(frozen=True)
class ProjectedWord:
    """The m x n matrix over F_q that a fractional decoder downloads."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def column(self, i: int) -> tuple[int, ...]:
        return tuple(r[i] for r in self.rows)

    @property
    def symbol_count(self) -> int:
        return sum(len(r) for r in self.rows)

    def to_dict(self) -> dict:
        return {"m": self.m, "n": self.n, "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_dict(cls, d: dict) -> "ProjectedWord":
        rows = tuple(tuple(int(v) for v in r) for r in d["rows"])
        if len(rows) != int(d["m"]) or any(len(r) != int(d["n"]) for r in rows):
            raise LengthMismatch("projected word dimensions disagree with its m and n")
        return cls(rows)


def make_scheme(
    spec: CodeSpec,
    m: int,
    sizes: Sequence[int] | None = None,
    sets: Sequence[Sequence[int]] | None = None,
) -> ProjectionScheme:
    """Build the projection for ``alpha = m / l``.

    Either give explicit ``sets`` or ``sizes``; with neither, every set gets
    ``ceil(k / m)`` elements.  Elements for ``sizes`` are taken from
    ``0, 1, 2, ...`` in canonical order, each used once.
    """
    l, q, n, k = spec.ext.l, spec.ext.q, spec.n, spec.k
    if not 1 <= m <= l:
        raise ValueError(f"need 1 <= m <= l={l}, got m={m}")
    if sets is None:
        if sizes is None:
            sizes = [ceil(k / m)] * m
        if len(sizes) != m or any(s < 0 for s in sizes):
            raise ValueError(f"need {m} non-negative set sizes")
        if sum(sizes) > q:
            raise SetsNotDisjoint(f"{sum(sizes)} distinct elements requested from F_{q}")
        pool = iter(range(q))
        sets = [tuple(next(pool) for _ in range(s)) for s in sizes]
    else:
        if len(sets) != m:
            raise ValueError(f"need {m} sets, got {len(sets)}")
        sets = [tuple(int(w) for w in a) for a in sets]
        flat = [w for a in sets for w in a]
        if any(not 0 <= w < q for w in flat):
            raise ValueError("set elements must lie in F_q")
        if len(set(flat)) != len(flat):
            raise SetsNotDisjoint("the sets A_j must be pairwise disjoint (and duplicate-free)")
    total = sum(len(a) for a in sets)
    if total < k:
        raise InsufficientSets(f"sum of |A_j| = {total} < k = {k}")
    k_rows = tuple(k + len(a) * (l - m) * (j + 1) for j, a in enumerate(sets))
    for j, kj in enumerate(k_rows):
        if kj >= n:
            raise RowDimensionOverflow(f"k_{j} = {kj} >= n = {n}")
    f = spec.ext.base
    annihilators = tuple(Poly.from_roots(f, a) for a in sets)
    return ProjectionScheme(spec, m, tuple(sets), annihilators, k_rows)


def trace_components(scheme: ProjectionScheme, h: Poly) -> list[Poly]:
    """The l polynomials ``h_i`` over F_q with ``h = sum_i nu_i h_i``."""
    if h.degree >= scheme.spec.k:
        raise DegreeTooHigh(f"message degree {h.degree} >= k={scheme.spec.k}")
    E = scheme.ext
    cols = [E.expand(a) for a in h.coeffs]
    return [Poly(E.base, [c[i] for c in cols]) for i in range(E.l)]


def project_poly(scheme: ProjectionScheme, h: Poly) -> list[Poly]:
    """``T_0(h), ..., T_{m-1}(h)``."""
    comps = trace_components(scheme, h)
    l, m = scheme.l, scheme.m
    out = []
    for j, p in enumerate(scheme.annihilators):
        step = p ** (j + 1)
        acc = Poly.zero(scheme.base)
        power = Poly.one(scheme.base)
        for u in range(l - m):
            acc = acc + comps[u] * power
            power = power * step
        # power is now p_j^{(l-m)(j+1)}
        out.append(acc + comps[l - m + j] * power)
    return out


def download_symbols(scheme: ProjectionScheme, i: int, symbol: int) -> list[int]:
    """The m base-field symbols that coordinate ``i`` (0-based) sends."""
    f = scheme.base
    add, mul = f.add, f.mul
    l, m = scheme.l, scheme.m
    tr = scheme.ext.expand(symbol)
    weights = scheme.download_weights[i]
    out = []
    for j in range(m):
        w = weights[j]
        acc = mul(tr[l - m + j], w[l - m])
        for u in range(l - m):
            acc = add(acc, mul(tr[u], w[u]))
        out.append(acc)
    return out


def project_word(scheme: ProjectionScheme, y: Sequence[int]) -> ProjectedWord:
    """Apply :func:`download_symbols` at every coordinate of a received word."""
    n = scheme.spec.n
    if len(y) != n:
        raise LengthMismatch(f"word has length {len(y)}, code length is {n}")
    cols = [download_symbols(scheme, i, c) for i, c in enumerate(y)]
    return ProjectedWord(tuple(tuple(col[j] for col in cols) for j in range(scheme.m)))
