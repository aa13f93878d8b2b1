# ---
# jupyter:
#   jupytext:
#     formats: py:percent
# ---

# %% [markdown]
# # From Dyck paths to 321-avoiding permutations
#
# Crosses go into the valley cells first.  Each remaining column, from left
# to right, then gets a cross in the lowest row that is still empty.  The
# crosses form a permutation matrix.

# %%
from dyckstat import bjs_forward, bjs_inverse, classify, parse_dyck, render_ascii

path = parse_dyck("NNENNNEENNNNNNNEEEEENENEENEENENEEE")
pi = bjs_forward(path)
print(pi)

# %%
print(render_ascii(path, list(enumerate(pi.images, 1))))

# %% [markdown]
# Valley crosses are excedances, the rest are fixpoints or deficiencies.
# The index set F is exactly the set of fixpoints, and `(N & D) \ F` is the set
# of double deficiencies.

# %%
from dyckstat import area_profile, set_D, set_F, set_N

cls = classify(pi)
prof = area_profile(path)
n_cap_d = set(set_N(path)) & set(set_D(prof))
print("excedances         ", cls.excedances())
print("fixpoints          ", cls.fixpoints(), "  F =", set_F(prof))
print("double deficiencies", cls.double_deficiencies(), "  (N & D) \\ F =", sorted(n_cap_d - set(set_F(prof))))

# %%
assert bjs_inverse(pi) == path
