# ---
# jupyter:
#   jupytext:
#     formats: py:percent
# ---

# %% [markdown]
# # Exhaustive verification
#
# `verify` walks every Dyck path up to a semilength and checks the lemmas,
# both counting identities and the bijection round trips.  The printed
# reading of the refined statement (`F \ (N & D)` instead of `(N & D) \ F`) is
# also checked and reported as informational.  It fails as soon as a double
# deficiency appears.

# %%
from dyckstat import verify

report = verify(8)
print(report.summary())

# %% [markdown]
# The same report serialises to JSON lines, one record per semilength and
# one per property.

# %%
print(report.to_json_lines(timing=False).splitlines()[-1])
