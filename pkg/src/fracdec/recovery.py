"""Recovering the message over F_{q^l} from the corrected projected rows."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exceptions import DecodingFailure, InexactDivision, RecoveryFailure
from .finite_fields import ExtFieldCtx
from .irs_decoder import collaborative_decode
from .polynomials import Poly, evaluate, exact_div, interpolate
from .projection import ProjectedWord, ProjectionScheme, project_word
from .rs_codec import encode


@dataclass(frozen=True)
class RecoveredMessage:
    message: Poly
    components: tuple[Poly, ...]
    t: int = 0  # column errors located by the collaborative decoder

    def to_dict(self) -> dict:
        k = max(1, len(self.message.coeffs))
        return {
            "message": self.message.padded(k),
            "components": [list(c.coeffs) for c in self.components],
            "t": self.t,
        }


def _divide(num: Poly, den: Poly, what: str) -> Poly:
    try:
        return exact_div(num, den)
    except InexactDivision as exc:
        raise RecoveryFailure("inexact_division", f"{what}: {exc}") from None


def recover_components(scheme: ProjectionScheme, rowpolys: Sequence[Poly]) -> list[Poly]:
    """Peel ``h_0, ..., h_{l-1}`` off the row polynomials ``T_j(h)``.

    ``h_u`` for ``u < l-m`` comes from interpolating ``T_j^(u)`` on the union
    of the sets ``A_j`` (there ``T_j^(u) = h_u``), after which
    ``T_j^(u+1) = (T_j^(u) - h_u) / p_j^(j+1)``.  The last m components are
    ``(T_j - sum_{u<l-m} h_u p_j^(u(j+1))) / p_j^((l-m)(j+1))``.
    """
    k, l, m = scheme.spec.k, scheme.l, scheme.m
    if len(rowpolys) != m:
        raise ValueError(f"need {m} row polynomials")
    for j, (T, kj) in enumerate(zip(rowpolys, scheme.k_rows)):
        if T.degree >= kj:
            raise RecoveryFailure("degree_bound", f"row {j} has degree {T.degree} >= k_j={kj}")
    f = scheme.base
    steps = [p ** (j + 1) for j, p in enumerate(scheme.annihilators)]
    current = list(rowpolys)
    comps: list[Poly] = []
    for u in range(l - m):
        points = [(w, evaluate(T, w)) for T, A in zip(current, scheme.sets) for w in A]
        hu = interpolate(f, points)
        if hu.degree >= k:
            raise RecoveryFailure("degree_bound", f"component h_{u} has degree {hu.degree} >= k={k}")
        comps.append(hu)
        if u + 1 < l - m:
            current = [_divide(T - hu, st, f"T_{j}^({u + 1})") for j, (T, st) in enumerate(zip(current, steps))]
    low = comps[:]
    for j, (T, st) in enumerate(zip(rowpolys, steps)):
        acc = T
        power = Poly.one(f)
        for hu in low:
            acc = acc - hu * power
            power = power * st
        hj = _divide(acc, power, f"h_{l - m + j}")
        if hj.degree >= k:
            raise RecoveryFailure("degree_bound", f"component h_{l - m + j} has degree {hj.degree} >= k={k}")
        comps.append(hj)
    return comps


def reassemble(ext: ExtFieldCtx, components: Sequence[Poly]) -> Poly:
    """``h(x) = sum_i nu_i h_i(x)``."""
    length = max((len(c.coeffs) for c in components), default=0)
    cols = [c.padded(length) for c in components]
    return Poly(ext, [ext.recombine([col[s] for col in cols]) for s in range(length)])


def fractional_decode(
    scheme: ProjectionScheme, Y: ProjectedWord, self_check: bool = True
) -> RecoveredMessage:
    """Decode the message from the downloaded m x n word only.

    With ``self_check`` the recovered message is re-encoded and re-projected
    and must reproduce the corrected rows exactly.
    """
    corrected, t = collaborative_decode(scheme, Y)
    spec = scheme.spec
    rowpolys = []
    for j, (row, kj) in enumerate(zip(corrected.rows, scheme.k_rows)):
        T = spec.interpolate(row)
        if T.degree >= kj:
            raise DecodingFailure("degree_bound", f"corrected row {j} has degree {T.degree} >= {kj}")
        rowpolys.append(T)
    comps = recover_components(scheme, rowpolys)
    h = reassemble(scheme.ext, comps)
    if self_check and project_word(scheme, encode(spec, h)) != corrected:
        raise DecodingFailure("self_check", "re-projected message differs from corrected rows")
    return RecoveredMessage(h, tuple(comps), t)
