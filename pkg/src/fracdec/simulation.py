"""Seeded Monte-Carlo validation of fractional decoding against the failure bound.

Each trial draws a random message of degree < k over F_{q^l}, adds an error
of weight exactly t (uniform positions, values uniform over the nonzero
elements of F_{q^l}), downloads the projected word and decodes it.  The
random stream of trial ``i`` at weight ``t`` is
``PCG64(SeedSequence(seed, spawn_key=(t, i)))``, so results do not depend on
how trials are split across worker processes.
"""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np
from scipy.stats import beta

from .exceptions import FAILURE_REASONS, DecodingFailure, TooManyErrors
from .finite_fields import build_extension, build_field
from .polynomials import Poly
from .projection import ProjectionScheme, download_symbols, make_scheme, project_word
from .radii import failure_bound, radius_report
from .recovery import fractional_decode
from .rs_codec import CodeSpec, encode, make_code

FORMAT_VERSION = 1
RNG_ALGORITHM = "numpy.random.PCG64 seeded by SeedSequence(seed, spawn_key=(t, trial))"

_CONFIG_KEYS = {
    "format_version", "field", "code", "scheme", "t", "t_range", "trials", "seed",
    "self_check", "workers", "output",
}


class ConfigError(ValueError):
    pass


@dataclass
class SimConfig:
    p: int
    s: int
    l: int
    n: int
    k: int
    m: int
    t_values: list[int]
    trials: int
    seed: int
    f: list[int] | None = None
    g: list[int] | None = None
    basis: list[int] | None = None
    L: list[int] | None = None
    sizes: list[int] | None = None
    sets: list[list[int]] | None = None
    self_check: bool = True
    workers: int = 1
    output: str | None = None

    @classmethod
    def from_dict(cls, d: dict) -> "SimConfig":
        unknown = set(d) - _CONFIG_KEYS
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        if d.get("format_version", FORMAT_VERSION) != FORMAT_VERSION:
            raise ConfigError(f"unsupported format_version {d.get('format_version')}")
        try:
            fld, code, sch = d["field"], d["code"], d["scheme"]
            if "t" in d and "t_range" in d:
                raise ConfigError("give either t or t_range, not both")
            if "t_range" in d:
                lo, hi = d["t_range"]
                t_values = list(range(int(lo), int(hi) + 1))
            else:
                t = d["t"]
                t_values = [int(v) for v in t] if isinstance(t, list) else [int(t)]
            cfg = cls(
                p=int(fld["p"]),
                s=int(fld.get("s", 1)),
                l=int(fld["l"]),
                f=fld.get("f"),
                g=fld.get("g"),
                basis=fld.get("basis"),
                n=int(code["n"]),
                k=int(code["k"]),
                L=code.get("L"),
                m=int(sch["m"]),
                sizes=sch.get("sizes"),
                sets=sch.get("sets"),
                t_values=t_values,
                trials=int(d["trials"]),
                seed=int(d["seed"]),
                self_check=bool(d.get("self_check", True)),
                workers=int(d.get("workers", 1)),
                output=d.get("output"),
            )
        except (KeyError, TypeError) as exc:
            raise ConfigError(f"malformed config: {exc!r}") from None
        if not cfg.t_values:
            raise ConfigError("empty range of error weights")
        if cfg.trials < 1 or cfg.workers < 1:
            raise ConfigError("trials and workers must be positive")
        build_scheme(cfg)  # fail fast on invalid parameters
        return cfg

    @classmethod
    def load(cls, path) -> "SimConfig":
        with open(path) as fh:
            return cls.from_dict(json.load(fh))

    def to_dict(self) -> dict:
        return {
            "format_version": FORMAT_VERSION,
            "field": {"p": self.p, "s": self.s, "l": self.l, "f": self.f, "g": self.g,
                      "basis": self.basis},
            "code": {"n": self.n, "k": self.k, "L": self.L},
            "scheme": {"m": self.m, "sizes": self.sizes, "sets": self.sets},
            "t": list(self.t_values),
            "trials": self.trials,
            "seed": self.seed,
            "self_check": self.self_check,
        }


def build_scheme(cfg: SimConfig) -> ProjectionScheme:
    ext = build_extension(build_field(cfg.p, cfg.s, cfg.f), cfg.l, cfg.g, cfg.basis)
    spec = make_code(ext, cfg.n, cfg.k, cfg.L)
    return make_scheme(spec, cfg.m, cfg.sizes, cfg.sets)


def trial_rng(seed: int, t: int, index: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(t, index))))


def plant_error(spec: CodeSpec, t: int, rng: np.random.Generator) -> list[int]:
    """Weight-t error vector over F_{q^l}: distinct uniform positions, nonzero uniform values."""
    n = spec.n
    if not 0 <= t <= n:
        raise TooManyErrors(f"cannot place {t} errors in length {n}")
    e = [0] * n
    if t:
        positions = rng.choice(n, size=t, replace=False)
        values = rng.integers(1, spec.ext.order, size=t)
        for i, v in zip(positions, values):
            e[int(i)] = int(v)
    return e


def run_one(scheme: ProjectionScheme, seed: int, t: int, index: int, self_check: bool = True):
    """One trial; returns ``(outcome, projected_column_weight)``.

    ``outcome`` is ``"success"``, ``"miscorrection"`` or a failure reason tag.
    """
    spec = scheme.spec
    E = spec.ext
    rng = trial_rng(seed, t, index)
    h = Poly(E, [int(a) for a in rng.integers(0, E.order, size=spec.k)])
    err = plant_error(spec, t, rng)
    y = [E.add(c, e) for c, e in zip(encode(spec, h), err)]
    weight = sum(1 for i, e in enumerate(err) if e and any(download_symbols(scheme, i, e)))
    try:
        out = fractional_decode(scheme, project_word(scheme, y), self_check=self_check)
    except DecodingFailure as exc:
        return exc.reason, weight
    return ("success" if out.message == h else "miscorrection"), weight


_worker_scheme: ProjectionScheme | None = None


def _init_worker(cfg_dict: dict):
    global _worker_scheme
    _worker_scheme = build_scheme(SimConfig.from_dict(cfg_dict))


def _run_chunk(args):
    seed, t, start, stop, self_check = args
    outcomes, weights = Counter(), Counter()
    for i in range(start, stop):
        o, w = run_one(_worker_scheme, seed, t, i, self_check)
        outcomes[o] += 1
        weights[w] += 1
    return outcomes, weights


def clopper_pearson(x: int, n: int, level: float = 0.95) -> tuple[float, float]:
    a = (1 - level) / 2
    lo = 0.0 if x == 0 else float(beta.ppf(a, x, n - x + 1))
    hi = 1.0 if x == n else float(beta.ppf(1 - a, x + 1, n - x))
    return lo, hi


@dataclass
class SimRow:
    t: int
    trials: int
    successes: int
    failures: dict[str, int]
    miscorrections: int
    rate: float
    ci_lo: float
    ci_hi: float
    bound: float
    bound_exact: str | None
    bound_satisfied: bool
    beyond_radius: bool
    column_weights: dict[str, int] = field(default_factory=dict)

    @property
    def detected(self) -> int:
        return sum(self.failures.values())


@dataclass
class SimReport:
    config: dict
    q: int
    tau_p: str
    radii: dict
    rows: list[SimRow]
    radius_within_row_capacity: bool
    rng: str = RNG_ALGORITHM

    def row(self, t: int) -> SimRow:
        for r in self.rows:
            if r.t == t:
                return r
        raise KeyError(t)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["format_version"] = FORMAT_VERSION
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["t", "trials", "fail", "miscorrect", "rate", "ci_lo", "ci_hi", "bound"])
        for r in self.rows:
            w.writerow([r.t, r.trials, r.detected, r.miscorrections, repr(r.rate),
                        repr(r.ci_lo), repr(r.ci_hi), repr(r.bound)])
        return buf.getvalue()

    def write(self, prefix) -> tuple[Path, Path]:
        prefix = Path(prefix)
        prefix.parent.mkdir(parents=True, exist_ok=True)
        jpath, cpath = prefix.with_suffix(".json"), prefix.with_suffix(".csv")
        jpath.write_text(self.to_json())
        cpath.write_text(self.to_csv())
        return jpath, cpath


def _aggregate(scheme: ProjectionScheme, t: int, trials: int, outcomes: Counter, weights: Counter) -> SimRow:
    failures = {r: outcomes[r] for r in FAILURE_REASONS if outcomes[r]}
    mis = outcomes["miscorrection"]
    bad = sum(failures.values()) + mis
    lo, hi = clopper_pearson(bad, trials)
    bound = failure_bound(scheme.base.q, scheme.m, scheme.radius, t)
    return SimRow(
        t=t,
        trials=trials,
        successes=outcomes["success"],
        failures=failures,
        miscorrections=mis,
        rate=bad / trials,
        ci_lo=lo,
        ci_hi=hi,
        bound=bound.value,
        bound_exact=None if bound.exact is None else str(bound.exact),
        bound_satisfied=lo <= bound.value,
        beyond_radius=t > scheme.radius,
        column_weights={str(w): c for w, c in sorted(weights.items())},
    )


def _count(cfg: SimConfig, scheme: ProjectionScheme, t: int, workers: int):
    if t > cfg.n:
        raise TooManyErrors(f"cannot place {t} errors in length {cfg.n}")
    if workers <= 1:
        outcomes, weights = Counter(), Counter()
        for i in range(cfg.trials):
            o, w = run_one(scheme, cfg.seed, t, i, cfg.self_check)
            outcomes[o] += 1
            weights[w] += 1
        return outcomes, weights
    step = -(-cfg.trials // (4 * workers))
    chunks = [(cfg.seed, t, a, min(a + step, cfg.trials), cfg.self_check)
              for a in range(0, cfg.trials, step)]
    outcomes, weights = Counter(), Counter()
    with ProcessPoolExecutor(workers, initializer=_init_worker, initargs=(cfg.to_dict(),)) as pool:
        for o, w in pool.map(_run_chunk, chunks):
            outcomes.update(o)
            weights.update(w)
    return outcomes, weights


def sweep(cfg: SimConfig, workers: int | None = None) -> SimReport:
    """Run ``cfg.trials`` trials at every error weight in ``cfg.t_values``."""
    if not cfg.t_values:
        raise ConfigError("empty range of error weights")
    workers = cfg.workers if workers is None else workers
    scheme = build_scheme(cfg)
    rows = []
    for t in cfg.t_values:
        outcomes, weights = _count(cfg, scheme, t, workers)
        rows.append(_aggregate(scheme, t, cfg.trials, outcomes, weights))
    rep = radius_report(cfg.n, cfg.k, cfg.l, cfg.m, scheme.sizes)
    return SimReport(
        config=cfg.to_dict(),
        q=scheme.base.q,
        tau_p=str(scheme.radius),
        radii=rep.to_dict(),
        rows=rows,
        radius_within_row_capacity=scheme.t_max <= min(cfg.n - kj for kj in scheme.k_rows),
    )


def run_trials(cfg: SimConfig, t: int | None = None, workers: int | None = None) -> SimReport:
    """Single error weight: ``t`` or the only entry of ``cfg.t_values``."""
    if t is None:
        if len(cfg.t_values) != 1:
            raise ConfigError("run_trials needs a single error weight")
        t = cfg.t_values[0]
    single = SimConfig(**{**asdict(cfg), "t_values": [t]})
    return sweep(single, workers)
