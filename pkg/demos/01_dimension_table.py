# coding: utf-8
# # Which degrees are covered in which dimensions?
#
# Every dimension N >= 3 splits uniquely as N = n + r, where n picks the
# size of a Pfister form and r counts how many of its slots we use.
# The smallest degree the witness construction reaches is then n + 2.

# %%
from irratio.bounds import bounds_table, decompose_dimension, format_table, log_bound_check, min_degree

print(format_table(bounds_table(1032)))

# %% [markdown]
# The n-ranges sit end to end, so each dimension lands in exactly one row.
# Here are a few dimensions and the split they receive:

# %%
for N in (3, 4, 5, 9, 10, 19, 1032):
    n, r = decompose_dimension(N)
    print(f"N={N:5d}  n={n:2d}  r={r:5d}  min degree {min_degree(N)}")

# %% [markdown]
# Degrees are whole numbers, so a logarithmic bound is compared using the
# ceiling of log2 N. That comparison always holds. The real-valued
# inequality n <= log2 N does not always hold, and `real_holds` shows where
# it breaks.

# %%
for N in (3, 5, 8, 9, 16, 1048576):
    lb = log_bound_check(N)
    print(N, lb)
