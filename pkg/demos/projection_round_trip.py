"""
Virtual projection round trip
=============================

A message over F_{16^3} is projected onto two polynomials over F_16.  Each
of the 15 storage nodes sends 2 base-field symbols instead of 3, and the
message is rebuilt from the projected rows alone.
"""

import random

from fracdec import (
    Poly,
    build_extension,
    build_field,
    encode,
    make_code,
    make_scheme,
    project_poly,
    project_word,
    reassemble,
    recover_components,
    trace_components,
)

E = build_extension(build_field(2, 4), 3)
spec = make_code(E, 15, 2)
scheme = make_scheme(spec, 2, sizes=[1, 1])
print("sets A_j:", scheme.sets, " annihilators:", scheme.annihilators)
print("row code dimensions k_j:", scheme.k_rows)

# %%
# Project a random message
# ------------------------
rng = random.Random(1)
h = Poly(E, [rng.randrange(E.order) for _ in range(spec.k)])
print("message h:", h)
print("trace components h_i:", trace_components(scheme, h))
rows = project_poly(scheme, h)
for j, T in enumerate(rows):
    print(f"T_{j}(h) = {T}   (degree {T.degree} < k_{j} = {scheme.k_rows[j]})")

# %%
# What the nodes send
# -------------------
Y = project_word(scheme, encode(spec, h))
print(f"downloaded {Y.symbol_count} symbols of F_16 instead of {spec.n * E.l}")
print("row 0 equals T_0 evaluated on L:", Y.rows[0] == tuple(rows[0](a) for a in spec.L))

# %%
# Peel the components back off
# ----------------------------
comps = recover_components(scheme, rows)
print("recovered message matches:", reassemble(E, comps) == h)
