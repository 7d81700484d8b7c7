"""Collaborative syndrome decoding of a heterogeneous interleaved RS word.

Syndromes use the dual multipliers of the evaluation set,
``S_i^(j) = sum_h Y[j][h] * u_h * alpha_h^(i-1)`` for ``i = 1..n-k_j``,
so every codeword row has all-zero syndromes.  For an error on columns E,
``S_i^(j) = sum_{e in E} X[j][e] u_e alpha_e^(i-1)`` and the monic locator
``Lambda(x) = prod_{e in E}(x - alpha_e) = x^t + l_1 x^(t-1) + ... + l_t``
satisfies ``sum_{i=1}^t l_i S_{v+t-i}^(j) = -S_{v+t}^(j)`` for every row j and
``v = 1..n-k_j-t``.  Stacking these Hankel blocks gives one system with a
common solution across rows.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exceptions import DecodingFailure, InconsistentOverdetermined, LengthMismatch, RowUnderdetermined
from .linalg import solve
from .polynomials import Poly
from .projection import ProjectedWord, ProjectionScheme


@dataclass(frozen=True)
class SyndromeSet:
    rows: tuple[tuple[int, ...], ...]

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)


@dataclass(frozen=True)
class LocatorResult:
    t: int
    locator: Poly
    positions: tuple[int, ...]  # 0-based columns


def syndromes(scheme: ProjectionScheme, Y: ProjectedWord) -> SyndromeSet:
    n = scheme.spec.n
    if Y.m != scheme.m or Y.n != n:
        raise LengthMismatch(f"expected a {scheme.m}x{n} word, got {Y.m}x{Y.n}")
    f = scheme.base
    add, mul = f.add, f.mul
    weights = scheme.spec.syndrome_weights
    out = []
    for row, kj in zip(Y.rows, scheme.k_rows):
        nz = [(h, y) for h, y in enumerate(row) if y]
        synd = []
        for i in range(max(0, n - kj)):
            w = weights[i]
            acc = 0
            for h, y in nz:
                acc = add(acc, mul(y, w[h]))
            synd.append(acc)
        out.append(tuple(synd))
    return SyndromeSet(tuple(out))


def _key_system(field, synd: SyndromeSet, t: int):
    neg = field.neg
    A, b = [], []
    for S in synd.rows:
        for v in range(len(S) - t):
            A.append([S[v + t - i] for i in range(1, t + 1)])
            b.append(neg(S[v + t]))
    return A, b


def _valid_positions(scheme: ProjectionScheme, lam: list[int], t: int):
    """Columns where ``x^t + lam_1 x^(t-1) + ... + lam_t`` vanishes, if exactly t."""
    f = scheme.base
    add, mul = f.add, f.mul
    coeffs = [1] + list(lam)  # highest degree first
    hits = []
    for h, a in enumerate(scheme.spec.L):
        acc = 0
        for c in coeffs:
            acc = add(mul(acc, a), c)
        if acc == 0:
            hits.append(h)
    return tuple(hits) if len(hits) == t else None


def solve_key_equation(
    scheme: ProjectionScheme, synd: SyndromeSet, t_max: int | None = None
) -> LocatorResult:
    """Smallest t admitting a t-valid common error locator.

    Raises :class:`DecodingFailure` with reason ``no_solution`` when no
    system up to ``t_max`` (default: the floored projection radius) is
    consistent, or ``not_t_valid`` when consistent systems occurred but none
    of their candidate locators splits into t distinct roots on L.
    """
    f = scheme.base
    if synd.is_zero():
        return LocatorResult(0, Poly.one(f), ())
    if t_max is None:
        t_max = scheme.t_max
    saw_solution = False
    for t in range(1, t_max + 1):
        A, b = _key_system(f, synd, t)
        if not A:
            continue
        sol = solve(f, A, b)
        if sol is None:
            continue
        saw_solution = True
        x, null_basis = sol
        candidates = [x] + [[f.add(a, c) for a, c in zip(x, v)] for v in null_basis]
        for lam in candidates:
            positions = _valid_positions(scheme, lam, t)
            if positions is not None:
                locator = Poly(f, list(reversed([1] + lam)))
                return LocatorResult(t, locator, positions)
    if saw_solution:
        raise DecodingFailure("not_t_valid", f"no t-valid locator for t <= {t_max}")
    raise DecodingFailure("no_solution", f"key equation inconsistent for every t <= {t_max}")


def error_values(
    scheme: ProjectionScheme, synd: SyndromeSet, loc: LocatorResult
) -> tuple[tuple[int, ...], ...]:
    """Per-row error values on the located columns, as an m x n matrix."""
    n = scheme.spec.n
    f = scheme.base
    weights = scheme.spec.syndrome_weights
    E = loc.positions
    out = []
    for j, S in enumerate(synd.rows):
        row = [0] * n
        if E:
            if len(S) < loc.t:
                raise RowUnderdetermined(f"row {j} has {len(S)} syndromes for {loc.t} errors")
            A = [[weights[i][e] for e in E] for i in range(len(S))]
            sol = solve(f, A, list(S))
            if sol is None:
                raise InconsistentOverdetermined(f"row {j} error values are inconsistent")
            values, null_basis = sol
            if null_basis:  # pragma: no cover - Vandermonde on distinct points
                raise RowUnderdetermined(f"row {j} error values are not unique")
            for e, v in zip(E, values):
                row[e] = v
        elif any(S):
            raise InconsistentOverdetermined(f"row {j} has nonzero syndromes but no errors")
        out.append(tuple(row))
    return tuple(out)


def collaborative_decode(scheme: ProjectionScheme, Y: ProjectedWord) -> tuple[ProjectedWord, int]:
    """Correct the column errors of ``Y``; returns ``(corrected, t)``.

    Failures of any stage propagate as :class:`DecodingFailure`.
    """
    synd = syndromes(scheme, Y)
    loc = solve_key_equation(scheme, synd)
    err = error_values(scheme, synd, loc)
    sub = scheme.base.sub
    rows = tuple(
        tuple(sub(y, e) if e else y for y, e in zip(yr, er)) for yr, er in zip(Y.rows, err)
    )
    return ProjectedWord(rows), loc.t
