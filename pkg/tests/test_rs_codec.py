import random

import pytest

from fracdec.exceptions import BadEvaluationSet, DegreeTooHigh, LengthExceedsField
from fracdec.finite_fields import build_extension, build_field
from fracdec.polynomials import Poly
from fracdec.rs_codec import dual_multipliers, encode, make_code


def f5_trivial():
    return build_extension(build_field(5), 1)


def test_make_code_q32():
    E = build_extension(build_field(2, 5), 5)
    spec = make_code(E, 31, 4)
    assert spec.base.q == 32 and spec.L == tuple(range(1, 32))


def test_literal_binary_parameters_rejected():
    E = build_extension(build_field(2), 5)
    with pytest.raises(LengthExceedsField):
        make_code(E, 31, 4)


def test_make_code_f5():
    spec = make_code(f5_trivial(), 4, 1)
    assert spec.L == (1, 2, 3, 4)


def test_bad_evaluation_sets():
    E = f5_trivial()
    with pytest.raises(BadEvaluationSet):
        make_code(E, 3, 1, [1, 1, 2])
    with pytest.raises(BadEvaluationSet):
        make_code(E, 3, 1, [0, 1, 2])
    with pytest.raises(BadEvaluationSet):
        make_code(E, 3, 1, [1, 2])


def test_encode_examples():
    E = f5_trivial()
    spec = make_code(E, 4, 2)
    assert encode(spec, Poly(E, [3])) == [3, 3, 3, 3]
    assert encode(spec, Poly.zero(E)) == [0, 0, 0, 0]
    assert encode(spec, Poly.x(E)) == [1, 2, 3, 4]
    with pytest.raises(DegreeTooHigh):
        encode(spec, Poly(E, [0, 0, 1]))


def test_dual_multipliers_f5():
    assert dual_multipliers(make_code(f5_trivial(), 4, 1)) == (4, 3, 2, 1)


def test_dual_multiplier_empty_product():
    # n = 1 cannot carry a message (k >= 1 < n), so check the formula on u directly
    spec = make_code(f5_trivial(), 2, 1, [3, 4])
    f = spec.base
    assert spec.u == (f.inv(f.sub(3, 4)), f.inv(f.sub(4, 3)))


@pytest.mark.parametrize("q,l,n", [(5, 2, 4), (16, 3, 15), (7, 1, 6), (9, 2, 8)])
def test_codewords_have_zero_dual_syndromes(q, l, n):
    p, s = {5: (5, 1), 16: (2, 4), 7: (7, 1), 9: (3, 2)}[q]
    E = build_extension(build_field(p, s), l)
    rng = random.Random(q)
    for k in range(1, n):
        spec = make_code(E, n, k)
        f = spec.base
        for _ in range(200 // n + 1):
            # a base-field codeword of any dimension k' <= k must be orthogonal
            g = Poly(f, [rng.randrange(f.q) for _ in range(k)])
            c = [g(a) for a in spec.L]
            for i in range(n - k):
                acc = 0
                for h in range(n):
                    acc = f.add(acc, f.mul(c[h], spec.syndrome_weights[i][h]))
                assert acc == 0


def test_encoding_is_injective_and_linear():
    E = build_extension(build_field(2, 4), 3)
    spec = make_code(E, 15, 3)
    rng = random.Random(4)
    seen = {}
    for _ in range(300):
        h = Poly(E, [rng.randrange(E.order) for _ in range(3)])
        c = tuple(encode(spec, h))
        assert seen.setdefault(c, h) == h
    a = Poly(E, [5, 6, 7])
    b = Poly(E, [100, 0, 4000])
    assert encode(spec, a + b) == [E.add(x, y) for x, y in zip(encode(spec, a), encode(spec, b))]


def test_interpolate_inverts_encode():
    E = build_extension(build_field(7), 3)
    spec = make_code(E, 6, 3)
    f = spec.base
    rng = random.Random(1)
    for _ in range(100):
        g = Poly(f, [rng.randrange(7) for _ in range(6)])
        assert spec.interpolate([g(a) for a in spec.L]) == g
