"""
Forging over a cubic order
==========================

x^3 + x^2 - 2x - 1 is the minimal polynomial of 2cos(2π/7). Its root θ is a
unit, so the pipeline runs without any search.
"""
# %%
from symaut import forge, make_order, verify_certificate
from symaut.serialize import certificate_to_dict, dumps

order = make_order([-1, -2, 1, 1])

# %%
for n in (2, 3, 4):
    cert = forge(order, n)
    print(f"n={n}: alpha={cert.alpha.element}  (i, j)=({cert.i}, {cert.j})")
    print(f"      f={cert.f}")
    print(f"      g={cert.g}")
    print(f"      det={cert.det_value}  all checks: {cert.passed}")

# %%
# A permuted variant, and its certificate as JSON.
cert = forge(order, 3, sigma=(1, 2, 0))
print(dumps(certificate_to_dict(cert))[:400], "...")

# %%
# Verification recomputes everything from the stored data.
report = verify_certificate(cert)
print(sum(report.values()), "of", len(report), "checks hold")
