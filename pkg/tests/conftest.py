import random

import pytest

from fracdec.finite_fields import build_extension, build_field
from fracdec.polynomials import Poly
from fracdec.projection import make_scheme
from fracdec.rs_codec import make_code

# (p, s, l, n, k, m, sizes) for the schemes exercised across the suite
SCHEMES = {
    "desk": (2, 4, 3, 15, 2, 2, (1, 1)),
    "ex1c": (2, 5, 5, 31, 4, 3, (2, 1, 1)),
    "ex2c": (2, 5, 5, 31, 6, 4, (2, 2, 2, 2)),
    "tiny": (5, 1, 2, 4, 1, 1, (1,)),
    "odd": (7, 1, 3, 6, 2, 2, (2, 1)),
    "homog": (3, 2, 2, 8, 3, 2, (2, 1)),
    "f4": (2, 1, 2, 1, 0, 1, None),  # placeholder, built by hand in tests
}

_cache = {}


def scheme(name):
    if name not in _cache:
        p, s, l, n, k, m, sizes = SCHEMES[name]
        ext = build_extension(build_field(p, s), l)
        _cache[name] = make_scheme(make_code(ext, n, k), m, sizes)
    return _cache[name]


def random_poly(field, k, rng):
    return Poly(field, [rng.randrange(field.order) for _ in range(k)])


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture(scope="session")
def f4():
    """F_4 over F_2 with omega = 2 (v), omega^2 = 3 (v + 1)."""
    return build_extension(build_field(2, 1), 2, (1, 1, 1), (1, 2))


ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, ok, detail in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")
