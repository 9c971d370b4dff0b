# coding: utf-8
# # Showing a symbol is nonzero by peeling off residues
#
# The class alpha = (a1, ..., an) with a_i = -x_i/x0 lives in degree-n
# Galois cohomology of the function field of P^n. One residue along x_n
# drops both the degree and the dimension by one. Repeating this until one
# entry is left gives a class we can read off directly.

# %%
from irratio.symbol import alpha_symbol, certify_alpha_nonzero, residue

alpha = alpha_symbol(4)
print("alpha       :", alpha.label())
step = residue(alpha, 4)
print("residue x4  :", step.label())

# %% [markdown]
# Labels write square classes as products of coordinates. Powers of x0
# are implied by homogeneity, so `x0*x1` is the class of x1/x0.
#
# A certificate records the whole chain along with its verdict:

# %%
cert = certify_alpha_nonzero(6)
for i, s in zip((None, *cert.divisor_sequence), cert.intermediate):
    print(f"{'start' if i is None else f'along x{i}':>9}: {s.label()}")
print("verdict:", cert.verdict.value)

# %% [markdown]
# The last class is x1/x0 on P^1. It has a simple zero at x1 = 0, so it
# is not a square, and a symbol whose iterated residue is nonzero cannot
# be zero itself.
