import json
import random
from fractions import Fraction

import pytest

from conftest import SCHEMES, random_poly, scheme
from fracdec.exceptions import InsufficientSets, LengthMismatch, RowDimensionOverflow, SetsNotDisjoint
from fracdec.finite_fields import build_extension, build_field
from fracdec.polynomials import Poly
from fracdec.projection import (
    ProjectedWord,
    ProjectionScheme,
    download_symbols,
    make_scheme,
    project_poly,
    project_word,
    trace_components,
)
from fracdec.rs_codec import CodeSpec, encode, make_code

NAMES = [n for n in SCHEMES if n != "f4"]


def f4_scheme(f4):
    """l=2, m=1, A_0={1} over F_2 with a length-1 code; too short for make_scheme."""
    F2 = f4.base
    spec = CodeSpec(f4, 1, 1, (1,), (1,))
    return ProjectionScheme(spec, 1, ((1,),), (Poly.from_roots(F2, [1]),), (2,))


def q32(k):
    return make_code(build_extension(build_field(2, 5), 5), 31, k)


def test_row_dimensions_equal_sizes():
    assert make_scheme(q32(6), 4, [2, 2, 2, 2]).k_rows == (8, 10, 12, 14)


def test_row_dimensions_unequal_sizes():
    assert make_scheme(q32(4), 3, [2, 1, 1]).k_rows == (8, 8, 10)


def test_default_sizes_are_ceiling():
    s = make_scheme(q32(6), 4)
    assert s.sizes == (2, 2, 2, 2)
    assert s.sets == ((0, 1), (2, 3), (4, 5), (6, 7))


def test_insufficient_sets():
    with pytest.raises(InsufficientSets):
        make_scheme(q32(4), 2, [1, 1])


def test_overlapping_sets_rejected():
    with pytest.raises(SetsNotDisjoint):
        make_scheme(q32(4), 2, sets=[(0, 1), (1, 2)])


def test_row_dimension_overflow():
    with pytest.raises(RowDimensionOverflow):
        make_scheme(q32(20), 2, [10, 10])


def test_f4_worked_example(f4):
    s = f4_scheme(f4)
    h = Poly(f4, [2])  # omega
    assert trace_components(s, h) == [Poly(f4.base, [1]), Poly(f4.base, [1])]
    assert project_poly(s, h) == [Poly.x(f4.base)]


def test_zero_message(f4):
    s = scheme("ex1c")
    z = Poly.zero(s.ext)
    assert all(c.is_zero() for c in trace_components(s, z))
    assert all(T.is_zero() for T in project_poly(s, z))
    Y = project_word(s, [0] * s.spec.n)
    assert Y.rows == ((0,) * 31,) * 3


def test_homogeneous_projection_is_trace_components():
    s = scheme("homog")
    assert s.l == s.m
    rng = random.Random(2)
    for _ in range(100):
        h = random_poly(s.ext, s.spec.k, rng)
        assert project_poly(s, h) == trace_components(s, h)


@pytest.mark.parametrize("name", NAMES)
def test_degree_bound_and_projection_of_codewords(name):
    s = scheme(name)
    rng = random.Random(name)
    for _ in range(500 if s.spec.n < 20 else 100):
        h = random_poly(s.ext, s.spec.k, rng)
        Ts = project_poly(s, h)
        Y = project_word(s, encode(s.spec, h))
        for T, kj, row in zip(Ts, s.k_rows, Y.rows):
            assert T.degree < kj
            assert row == tuple(T(a) for a in s.spec.L)
            assert all(v < s.base.q for v in row)


@pytest.mark.parametrize("name", NAMES)
def test_column_locality(name):
    s = scheme(name)
    rng = random.Random(7)
    E = s.ext
    for _ in range(50):
        c = encode(s.spec, random_poly(E, s.spec.k, rng))
        i = rng.randrange(s.spec.n)
        y = list(c)
        y[i] = E.add(y[i], rng.randrange(1, E.order))
        before, after = project_word(s, c), project_word(s, y)
        for h in range(s.spec.n):
            if h != i:
                assert before.column(h) == after.column(h)


@pytest.mark.parametrize("name", NAMES)
def test_download_accounting(name):
    s = scheme(name)
    Y = project_word(s, [1] * s.spec.n)
    assert Y.symbol_count == s.m * s.spec.n
    assert len(download_symbols(s, 0, 5 % s.ext.order)) == s.m
    assert s.alpha * s.spec.n * s.l == Fraction(s.m * s.spec.n)


def test_project_word_length_mismatch():
    s = scheme("desk")
    with pytest.raises(LengthMismatch):
        project_word(s, [0] * 3)


def test_projected_word_json_round_trip():
    s = scheme("desk")
    rng = random.Random(3)
    Y = project_word(s, encode(s.spec, random_poly(s.ext, 2, rng)))
    d = json.loads(json.dumps(Y.to_dict()))
    assert set(d) == {"m", "n", "rows"}
    assert ProjectedWord.from_dict(d) == Y
    d["n"] = 3
    with pytest.raises(LengthMismatch):
        ProjectedWord.from_dict(d)
