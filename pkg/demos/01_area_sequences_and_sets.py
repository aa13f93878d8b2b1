# ---
# jupyter:
#   jupytext:
#     formats: py:percent
# ---

# %% [markdown]
# # Area sequences and the index sets D, F, N
#
# A Dyck path is written as a word over `N` and `E`.  For each one we read off
# the row-area and column-area sequences (with their `-1` sentinels) and the
# three index sets that the counting conditions are phrased in.

# %%
from dyckstat import area_profile, enumerate_dyck, parse_dyck, render_ascii, set_D, set_F, set_N, valleys
from dyckstat.statistics import format_set

# %% [markdown]
# ## All paths of semilength 3
#
# The five paths come out in lexicographic order with `N < E`.

# %%
print(f"{'path':<8} {'row area':<15} {'column area':<15} {'N':<9} {'D':<9} {'F':<9}")
for path in enumerate_dyck(3):
    prof = area_profile(path)
    print(
        f"{path.steps:<8} {str(prof.row_area):<15} {str(prof.column_area):<15} "
        f"{format_set(set_N(path)):<9} {format_set(set_D(prof)):<9} {format_set(set_F(prof)):<9}"
    )

# %% [markdown]
# ## A larger path
#
# Valleys are reported as `(east step index, north step index)`, which is the
# cell the two steps enclose.

# %%
path = parse_dyck("NNENNNEENNNNNNNEEEEENENEENEENENEEE")
prof = area_profile(path)
print("row area   ", prof.row_area)
print("column area", prof.column_area)
print("valleys    ", [tuple(v) for v in valleys(path)])
print("D =", format_set(set_D(prof)), " F =", format_set(set_F(prof)), " N =", format_set(set_N(path)))

# %%
print(render_ascii(parse_dyck("NNENEE")))
