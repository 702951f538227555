"""
Recognizing symmetric forms
===========================
"""
# %%
import random

from symaut import apply_perm, circulant, is_natural_form, make_order, recognize_symmetric_form

order = make_order([-1, -2, 1, 1])
rng = random.Random(3)
f = order.element([rng.randint(-5, 5) for _ in range(3)])
g = order.element([rng.randint(-5, 5) for _ in range(3)])

# %%
M = apply_perm((2, 0, 3, 1), circulant(f, g, 4))
form = recognize_symmetric_form(M)
print("sigma (0-indexed):", form.sigma)
print("f =", form.f)
print("g =", form.g)
print("natural?", is_natural_form(M))

# %%
# For n = 2 the permutation is not recoverable; the diagonal is read as f.
form2 = recognize_symmetric_form(apply_perm((1, 0), circulant(f, g, 2)))
print(form2.sigma, form2.f, form2.g)
print(form2.convention)
