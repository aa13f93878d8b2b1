# ---
# jupyter:
#   jupytext:
#     formats: py:percent
# ---

# %% [markdown]
# # Bicoloured Motzkin paths and the two counting identities
#
# Each index `i` of a 321-avoiding permutation gives one Motzkin step,
# decided by comparing `p(i)` and `p^{-1}(i)` with `i`.  Double deficiencies
# turn into red level steps and fixpoints into level steps at height zero.

# %%
from dyckstat import Permutation, fz_forward, fz_inverse

pi = Permutation((3, 1, 6, 2, 4, 5, 7, 13, 14, 8, 15, 9, 16, 17, 10, 11, 12))
m = fz_forward(pi)
print(m)
for letter, name in zip("UDLBR", ["up", "down", "level at 0", "blue", "red"]):
    print(f"{name:<11}", m.positions(letter))
assert fz_inverse(m) == pi

# %% [markdown]
# ## Counting
#
# Dyck paths with `N & D` inside `F` are the paths whose image has no red
# step, so they are counted by Motzkin numbers.  Dropping level steps at
# height zero as well leaves the Riordan numbers.

# %%
from dyckstat import (
    catalan,
    double_centraliser_predicate,
    enumerate_dyck,
    gorenstein_predicate,
    motzkin_number,
    riordan_number,
)

print(f"{'n':>2} {'Catalan':>8} {'N&D<=F':>7} {'Motzkin':>8} {'N&D=0':>6} {'Riordan':>8}")
for n in range(9):
    paths = list(enumerate_dyck(n))
    g = sum(map(gorenstein_predicate, paths))
    d = sum(map(double_centraliser_predicate, paths))
    print(f"{n:>2} {catalan(n):>8} {g:>7} {motzkin_number(n):>8} {d:>6} {riordan_number(n):>8}")
