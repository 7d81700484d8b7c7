"""
Decoding beyond the alpha-decoding radius
=========================================

RS(16^3, 15, 2) read at rate alpha = 2/3.  A generic linear code read at
that rate can only fix (15 - 2/(2/3)) / 2 = 6 errors.  The projection is an
interleaved code that fixes 7 of them, downloading the same 30 symbols.
"""

import random

from fracdec import (
    DecodingFailure,
    Poly,
    build_extension,
    build_field,
    encode,
    fractional_decode,
    make_code,
    make_scheme,
    project_word,
    radius_report,
)

E = build_extension(build_field(2, 4), 3)
spec = make_code(E, 15, 2)
scheme = make_scheme(spec, 2, sizes=[1, 1])
print(radius_report(15, 2, 3, 2, scheme.sizes).as_table())

# %%
# Seven corrupted nodes
# ---------------------
rng = random.Random(7)
wins = 0
for trial in range(200):
    h = Poly(E, [rng.randrange(E.order) for _ in range(spec.k)])
    y = encode(spec, h)
    for i in rng.sample(range(spec.n), 7):
        y[i] = E.add(y[i], rng.randrange(1, E.order))
    try:
        out = fractional_decode(scheme, project_word(scheme, y))
    except DecodingFailure as exc:
        print(f"trial {trial}: detected failure ({exc.reason})")
        continue
    wins += out.message == h
print(f"{wins}/200 messages recovered from 7 errors")
