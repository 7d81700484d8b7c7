"""
Field tower, trace and dual basis
=================================

Builds F_16 over F_2 and then F_{16^3} over F_16, and shows how an element
of the big field splits into three base-field coordinates through the trace
and comes back through the dual basis.
"""

from fracdec import build_extension, build_field

# %%
# The base field F_16 = F_2[u]/(u^4 + u + 1)
# ------------------------------------------
# Elements are integers whose bits are the coefficients of 1, u, u^2, u^3.
F16 = build_field(2, 4)
print("modulus of F_16:", F16.modulus)
print("u * u^3 =", F16.mul(2, 8), "(u^4 = u + 1 -> 0b0011)")

# %%
# The extension F_4096 = F_16[v]/g(v)
# -----------------------------------
# An element is a base-16 number: digit i is the coefficient of v^i.
E = build_extension(F16, 3)
print("extension modulus g:", E.modulus)
print("basis zeta:", E.basis, " dual basis nu:", E.dual_basis)

beta = 0xABC
print(f"beta = {beta:#x}, coefficients over F_16: {E.coeffs(beta)}")

# %%
# Trace coordinates
# -----------------
# tr(zeta_i * beta) are the three symbols a storage node could send instead
# of beta itself; the dual basis reassembles beta from them.
coords = E.expand(beta)
print("tr(zeta_i * beta):", coords)
print("sum tr(zeta_i beta) nu_i =", hex(E.recombine(coords)))

for i, z in enumerate(E.basis):
    print(f"tr(zeta_{i} nu_j) =", [E.trace(E.mul(z, v)) for v in E.dual_basis])

# %%
# The trace is F_16-linear and Frobenius-invariant
# ------------------------------------------------
a, b = 7, 0x123
lhs = E.trace(E.add(E.mul(a, beta), b))
rhs = F16.add(F16.mul(a, E.trace(beta)), E.trace(b))
print("tr(a beta + b) == a tr(beta) + tr(b):", lhs == rhs)
print("tr(beta^16) == tr(beta):", E.trace(E.frobenius(beta)) == E.trace(beta))
