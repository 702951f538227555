"""
Walking through Z[√2] by hand
=============================

The smallest interesting case: n = 2 over Z[√2]. We pick a unit, find two
powers that agree mod 2, and split them into f, g.
"""
# %%
from symaut import circulant, det, fundamental_unit_quadratic, norm, quadratic_order
from symaut.construct import build_fg, pigeonhole_exponents, quad_conjugate_construction

Z2 = quadratic_order(2)
alpha = fundamental_unit_quadratic(2)
print("alpha =", alpha.element, " inverse =", alpha.inverse)

# %%
# Powers of alpha mod 2: alpha^1 and alpha^3 coincide.
for k in range(1, 5):
    a = alpha.element ** k
    print(f"alpha^{k} = {a}   mod 2 -> {[c % 2 for c in a.coeffs]}")

i, j = pigeonhole_exponents(alpha, 2, Z2)
print("first repeat:", (i, j))

# %%
f, g = build_fg(alpha, i, j, 2)
print("f =", f, " g =", g)
print("f - g =", f - g, " f + g =", f + g)

# %%
# The matrix [[f, g], [g, f]] has a unit determinant.
F = circulant(f, g, 2)
print("det =", det(F), " norm =", norm(det(F)))

# %%
# Conjugate pairs give a second family directly.
for k in range(1, 4):
    f, g = quad_conjugate_construction(2, k)
    print(k, f, g, norm(f - g), norm(f + g))
