"""Decoding radii and failure-probability bounds in exact rational arithmetic.

Every radius is returned as a :class:`Radius` carrying both the exact value
and its floor; floors are never applied to intermediate quantities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, comb, floor
from typing import Sequence

from .exceptions import AlphaOutOfRange

Rational = int | Fraction


@dataclass(frozen=True)
class Radius:
    exact: Fraction
    floor: int

    @classmethod
    def of(cls, value: Rational) -> "Radius":
        value = Fraction(value)
        return cls(value, floor(value))

    def to_dict(self) -> dict:
        return {"exact": str(self.exact), "floor": self.floor}


def classical_radius(n: int, k: int) -> Radius:
    return Radius.of(Fraction(n - k, 2))


def alpha_radius(n: int, k: int, alpha: Rational) -> Radius:
    """Fractional-decoding radius ``(n - k/alpha) / 2`` of an (n, k) linear code."""
    alpha = Fraction(alpha)
    if not Fraction(k, n) <= alpha <= 1:
        raise AlphaOutOfRange(f"alpha={alpha} outside [k/n, 1] = [{Fraction(k, n)}, 1]")
    return Radius.of((n - k / alpha) / 2)


def irs_radius(n: int, K: Sequence[int]) -> Radius:
    """Joint radius ``m/(m+1) * (n - sum(K)/m)`` of an interleaved RS code."""
    m = len(K)
    return Radius.of(Fraction(m, m + 1) * (n - Fraction(sum(K), m)))


def projection_radius_construction(n: int, k: int, l: int, m: int, sizes: Sequence[int]) -> Radius:
    """Radius of the projection for the actual set sizes ``|A_0|, ..., |A_{m-1}|``."""
    if len(sizes) != m:
        raise ValueError(f"need {m} set sizes, got {len(sizes)}")
    weighted = sum(b * (j + 1) for j, b in enumerate(sizes))
    return Radius.of(Fraction(m, m + 1) * (n - k - Fraction(l - m, m) * weighted))


def projection_radius_formula(n: int, k: int, l: int, m: int) -> Radius:
    """Radius assuming ``|A_j| = k/m`` for every j; ``k/m`` may be fractional."""
    if not 1 <= m <= l:
        raise ValueError(f"need 1 <= m <= l, got m={m}, l={l}")
    alpha = Fraction(m, l)
    value = Fraction(1, m + 1) * (m * n + k * comb(m, 2) - (k / alpha) * comb(m + 1, 2))
    return Radius.of(value)


def row_dimensions(k: int, l: int, m: int, sizes: Sequence[int]) -> tuple[int, ...]:
    return tuple(k + b * (l - m) * (j + 1) for j, b in enumerate(sizes))


@dataclass(frozen=True)
class RateCondition:
    rate: Fraction
    bound: Fraction
    holds: bool


def rate_condition(n: int, k: int, l: int, m: int) -> RateCondition:
    """``k/n <= m / (m(l-m) + l)``, the requirement for beating the alpha radius."""
    rate = Fraction(k, n)
    bound = Fraction(m, m * (l - m) + l)
    return RateCondition(rate, bound, rate <= bound)


@dataclass(frozen=True)
class BoundValue:
    """A probability bound; ``exact`` is ``None`` when the value is irrational."""

    exact: Fraction | None
    value: float
    q: int
    m: int
    tau: Fraction
    t: int

    def to_dict(self) -> dict:
        return {
            "exact": None if self.exact is None else str(self.exact),
            "value": self.value,
            "q": self.q,
            "m": self.m,
            "tau": str(self.tau),
            "t": self.t,
        }


def _scaled_power(const: Fraction, q: int, exponent: Fraction) -> tuple[Fraction | None, float]:
    """``const * q**exponent`` exactly when the exponent is an integer."""
    if exponent.denominator == 1:
        exact = const * Fraction(q) ** int(exponent)
        return exact, float(exact)
    log_value = math.log(const) + float(exponent) * math.log(q)
    return None, math.exp(log_value)


def _column_factor(q: int, m: int) -> Fraction:
    qm = Fraction(q) ** m
    return (qm - Fraction(1, q)) / (qm - 1)


def failure_bound(q: int, m: int, tau: Rational, t: int) -> BoundValue:
    """Upper bound on the decoding failure probability with t column errors.

    ``((q^m - 1/q) / (q^m - 1))^t * q^(-(m+1)(tau - t)) / (q - 1)``; not
    clamped to 1.
    """
    if t < 0:
        raise ValueError("t must be non-negative")
    tau = Fraction(tau)
    const = _column_factor(q, m) ** t / (q - 1)
    exact, value = _scaled_power(const, q, -(m + 1) * (tau - t))
    return BoundValue(exact, value, q, m, tau, t)


def failure_bound_approx(q: int, m: int, tau: Rational, t: int) -> BoundValue:
    """The rough form ``m * q^(-(m+1)(tau - t) - 1)``."""
    tau = Fraction(tau)
    exact, value = _scaled_power(Fraction(m), q, -(m + 1) * (tau - t) - 1)
    return BoundValue(exact, value, q, m, tau, t)


def classical_irs_success(q: int, m: int, tau_irs: Rational, t: int) -> BoundValue:
    """Lower bound on the success probability of collaborative IRS decoding."""
    fb = failure_bound(q, m, tau_irs, t)
    exact = None if fb.exact is None else 1 - fb.exact
    return BoundValue(exact, 1.0 - fb.value, q, m, fb.tau, t)


@dataclass
class RadiusReport:
    n: int
    k: int
    l: int
    m: int
    alpha: Fraction
    sizes: tuple[int, ...]
    k_rows: tuple[int, ...]
    classical: Radius
    tau_alpha: Radius
    tau_irs: Radius
    tau_p_formula: Radius
    tau_p_construction: Radius
    rate: Fraction
    rate_bound: Fraction
    condition_holds: bool
    notes: list[str] = field(default_factory=list)

    @property
    def exceeds_classical(self) -> bool:
        return self.tau_p_construction.floor > self.classical.floor

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "l": self.l,
            "m": self.m,
            "alpha": str(self.alpha),
            "sizes": list(self.sizes),
            "k_rows": list(self.k_rows),
            "classical": self.classical.to_dict(),
            "tau_alpha": self.tau_alpha.to_dict(),
            "tau_irs": self.tau_irs.to_dict(),
            "tau_p_formula": self.tau_p_formula.to_dict(),
            "tau_p_construction": self.tau_p_construction.to_dict(),
            "rate": str(self.rate),
            "rate_bound": str(self.rate_bound),
            "condition_holds": self.condition_holds,
            "exceeds_classical": self.exceeds_classical,
            "notes": list(self.notes),
        }

    def as_table(self) -> str:
        rows = [
            ("classical (n-k)/2", self.classical),
            ("tau_alpha", self.tau_alpha),
            ("tau_IRS (derived k_j)", self.tau_irs),
            ("tau_P formula", self.tau_p_formula),
            ("tau_P construction", self.tau_p_construction),
        ]
        width = max(len(name) for name, _ in rows)
        lines = [
            f"RS(q^{self.l}, {self.n}, {self.k})  m={self.m}  alpha={self.alpha}",
            f"sizes |A_j| = {list(self.sizes)}   k_j = {list(self.k_rows)}",
        ]
        for name, r in rows:
            lines.append(f"{name:<{width}}  {str(r.exact):>10}  floor {r.floor}")
        verdict = "holds" if self.condition_holds else "FAILS"
        lines.append(f"rate k/n = {self.rate} ({float(self.rate):.4f}) <= {self.rate_bound} "
                     f"({float(self.rate_bound):.4f}): {verdict}")
        lines.extend(self.notes)
        return "\n".join(lines)


def radius_report(
    n: int,
    k: int,
    l: int,
    m: int,
    sizes: Sequence[int] | None = None,
    alpha: Rational | None = None,
) -> RadiusReport:
    """Every radius for RS(q^l, n, k) projected with ``m`` rows.

    ``sizes`` defaults to ``ceil(k/m)`` per set; ``alpha`` defaults to m/l.
    """
    if sizes is None:
        sizes = [ceil(k / m)] * m
    sizes = tuple(int(b) for b in sizes)
    alpha = Fraction(m, l) if alpha is None else Fraction(alpha)
    k_rows = row_dimensions(k, l, m, sizes)
    cond = rate_condition(n, k, l, m)
    report = RadiusReport(
        n=n,
        k=k,
        l=l,
        m=m,
        alpha=alpha,
        sizes=sizes,
        k_rows=k_rows,
        classical=classical_radius(n, k),
        tau_alpha=alpha_radius(n, k, alpha),
        tau_irs=irs_radius(n, k_rows),
        tau_p_formula=projection_radius_formula(n, k, l, m),
        tau_p_construction=projection_radius_construction(n, k, l, m, sizes),
        rate=cond.rate,
        rate_bound=cond.bound,
        condition_holds=cond.holds,
    )
    if not cond.holds:
        report.notes.append("warning: rate condition fails; projection cannot beat tau_alpha")
    if report.exceeds_classical:
        report.notes.append("tau_P construction exceeds classical radius (n-k)/2")
    if sum(sizes) < k:
        report.notes.append(f"warning: sum of |A_j| = {sum(sizes)} < k; message not recoverable")
    if any(kj >= n for kj in k_rows):
        report.notes.append("warning: some k_j >= n; projected row is not a proper RS code")
    return report
