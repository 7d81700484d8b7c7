import random

import pytest

from conftest import random_poly, scheme
from fracdec.exceptions import DecodingFailure, InconsistentOverdetermined, LengthMismatch, RowUnderdetermined
from fracdec.irs_decoder import (
    LocatorResult,
    SyndromeSet,
    collaborative_decode,
    error_values,
    solve_key_equation,
    syndromes,
)
from fracdec.polynomials import Poly
from fracdec.projection import ProjectedWord, project_word
from fracdec.radii import irs_radius
from fracdec.rs_codec import encode


def add_columns(s, Y, errors):
    """Add ``errors`` ({column: tuple of m values}) to the projected word."""
    f = s.base
    rows = [list(r) for r in Y.rows]
    for e, col in errors.items():
        for j, v in enumerate(col):
            rows[j][e] = f.add(rows[j][e], v)
    return ProjectedWord(tuple(tuple(r) for r in rows))


def test_hand_built_q5_single_error():
    s = scheme("tiny")
    assert s.spec.u == (4, 3, 2, 1) and s.k_rows == (2,)
    Y = ProjectedWord(((0, 0, 1, 0),))
    synd = syndromes(s, Y)
    # S_1 = 1 * u_3 = 2, S_2 = 2 * alpha_3 = 6 = 1
    assert synd.rows == ((2, 1),)
    loc = solve_key_equation(s, synd)
    # lambda_1 * S_1 = -S_2 gives lambda_1 = 2, so Lambda = x + 2 = x - 3
    assert loc.t == 1 and loc.positions == (2,)
    assert loc.locator == Poly(s.base, [2, 1])
    assert error_values(s, synd, loc) == ((0, 0, 1, 0),)


def test_clean_word_has_zero_syndromes():
    s = scheme("ex1c")
    rng = random.Random(0)
    for _ in range(20):
        Y = project_word(s, encode(s.spec, random_poly(s.ext, s.spec.k, rng)))
        synd = syndromes(s, Y)
        assert synd.is_zero()
        assert [len(S) for S in synd.rows] == [s.spec.n - kj for kj in s.k_rows]
        corrected, t = collaborative_decode(s, Y)
        assert corrected == Y and t == 0


def test_zero_word():
    s = scheme("desk")
    Y = ProjectedWord(((0,) * 15,) * 2)
    synd = syndromes(s, Y)
    assert synd.is_zero()
    loc = solve_key_equation(s, synd)
    assert loc == LocatorResult(0, Poly.one(s.base), ())
    assert error_values(s, synd, loc) == Y.rows


@pytest.mark.parametrize("name", ["tiny", "desk", "ex1c", "odd"])
def test_single_column_error_geometric_and_located(name):
    s = scheme(name)
    f = s.base
    rng = random.Random(name)
    for _ in range(30):
        e = rng.randrange(s.spec.n)
        col = [rng.randrange(f.q) for _ in range(s.m)]
        if not any(col):
            col[0] = 1
        Y = add_columns(s, ProjectedWord(((0,) * s.spec.n,) * s.m), {e: col})
        synd = syndromes(s, Y)
        a, ue = s.spec.L[e], s.spec.u[e]
        for beta, S in zip(col, synd.rows):
            expected = []
            term = f.mul(beta, ue)
            for _ in S:
                expected.append(term)
                term = f.mul(term, a)
            assert list(S) == expected
        loc = solve_key_equation(s, synd)
        assert loc.t == 1 and loc.positions == (e,)
        assert loc.locator == Poly(f, [f.neg(a), 1])
        assert [r[e] for r in error_values(s, synd, loc)] == col


def test_multi_error_recovery():
    s = scheme("ex1c")
    f = s.base
    rng = random.Random(11)
    ok = 0
    for _ in range(50):
        clean = project_word(s, encode(s.spec, random_poly(s.ext, s.spec.k, rng)))
        cols = rng.sample(range(s.spec.n), 12)
        errs = {e: tuple(rng.randrange(f.q) for _ in range(s.m)) for e in cols}
        errs = {e: v for e, v in errs.items() if any(v)}
        corrected, t = collaborative_decode(s, add_columns(s, clean, errs))
        assert t == len(errs)
        ok += corrected == clean
    assert ok == 50


def test_inconsistent_error_values():
    s = scheme("desk")
    f = s.base
    Y = add_columns(s, ProjectedWord(((0,) * 15,) * 2), {3: (1, 2)})
    synd = syndromes(s, Y)
    bad = SyndromeSet((synd.rows[0], (synd.rows[1][0],) + tuple(f.add(v, 1) for v in synd.rows[1][1:])))
    with pytest.raises(InconsistentOverdetermined):
        error_values(s, bad, LocatorResult(1, Poly(f, [f.neg(4), 1]), (3,)))
    with pytest.raises(InconsistentOverdetermined):
        error_values(s, synd, LocatorResult(0, Poly.one(f), ()))


def test_row_underdetermined():
    s = scheme("desk")
    f = s.base
    synd = SyndromeSet(((1,) * 13, (1,) * 2))
    with pytest.raises(RowUnderdetermined):
        error_values(s, synd, LocatorResult(3, Poly.from_roots(f, [1, 2, 3]), (0, 1, 2)))


def test_beyond_radius_is_flagged():
    s = scheme("desk")
    rng = random.Random(5)
    flagged = 0
    for _ in range(200):
        clean = project_word(s, encode(s.spec, random_poly(s.ext, s.spec.k, rng)))
        cols = rng.sample(range(15), 10)
        errs = {e: (rng.randrange(1, 16), rng.randrange(1, 16)) for e in cols}
        try:
            corrected, _ = collaborative_decode(s, add_columns(s, clean, errs))
        except DecodingFailure as exc:
            assert exc.reason in ("no_solution", "not_t_valid")
            flagged += 1
            continue
        assert corrected != clean
    assert flagged >= 150


def test_equation_count_matches_radius():
    # the stacked system has sum_j (n - k_j - t) rows for t unknowns; it is
    # square-or-tall exactly while t <= tau_IRS
    for name in ["desk", "ex1c", "ex2c", "odd"]:
        s = scheme(name)
        n = s.spec.n
        tau = irs_radius(n, s.k_rows).exact
        for t in range(0, n):
            eqs = sum(n - kj - t for kj in s.k_rows)
            assert (eqs >= t) == (t <= tau)


def test_wrong_shape():
    s = scheme("desk")
    with pytest.raises(LengthMismatch):
        syndromes(s, ProjectedWord(((0,) * 15,)))
