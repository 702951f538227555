"""
Testing on finite models
========================

Replace X by the torsion group (Z/m)^d with θ acting by the companion
matrix. Everything is then finite and can be enumerated.
"""
# %%
from symaut import forge, quadratic_order
from symaut.matforms import diagonal
from symaut.finmodel import (
    check_big_diagonal,
    check_descent,
    make_model,
    naturality_probe,
)

Z2 = quadratic_order(2)
cert = forge(Z2, 2)

# %%
for m in (2, 3, 5):
    model = make_model(Z2, m)
    print(check_descent(model, cert.matrix).to_text())
    print(check_big_diagonal(model, cert.matrix).to_text())
    print(naturality_probe(model, cert.matrix).to_text())

# %%
# A diagonal map that is not symmetric fails right away.
bad = diagonal([Z2.one(), Z2.element((1, 1))])
print(check_descent(make_model(Z2, 5), bad).to_text())

# %%
# Sampling mode for models too large to enumerate.
rep = check_descent(make_model(Z2, 11), forge(Z2, 3).matrix, ("sample", 5000, 1))
print(rep.to_text())

# %%
# When g vanishes mod m the map is a scalar there, and the probe says so.
cert3 = forge(Z2, 3)
print("g =", cert3.g)
print(naturality_probe(make_model(Z2, 2), cert3.matrix).to_text())
