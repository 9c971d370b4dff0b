# coding: utf-8
# # Building a witness hypersurface
#
# A witness is one explicit member Z = {e0 + sum e_i y_i^2 = 0} of the
# degree-d family. The builder picks every piece and then runs each
# machine-checkable hypothesis on the result.

# %%
from irratio.witness import WitnessParams, build_witness_hypersurface

cert = build_witness_hypersurface(WitnessParams(n=2, r=2, d=5))
for c in cert.checks:
    print(f"{c.status:>4}  {c.name:<24} {c.detail}")
print("verdict:", cert.verdict)

# %% [markdown]
# The pieces are ordinary polynomials. Odd degree puts an extra factor of
# x1 into e0 and rewrites the monomials c_i. Both the similarity scalar mu
# and the subform scalar lambda then equal the class of x0*x1.

# %%
d = cert.data
print("g  =", d.g.to_text())
for i, e in enumerate(d.e):
    print(f"e{i} =", e.to_text()[:90] + ("..." if len(e.to_text()) > 90 else ""))
print("mu =", d.mu.label(), " lambda =", d.lam.label())

# %% [markdown]
# The same entry point covers the other two constructions:

# %%
from irratio.witness import Variant, build_conic_witness, build_double_cover_witness

dc = build_double_cover_witness(WitnessParams(3, 4, 6, Variant.DOUBLE_COVER))
print("double cover:", dc.verdict, "mu =", dc.data.mu.label(), "unit slot", dc.data.unit_slot)
conic = build_conic_witness(5)
print("conic bundle over P^4:", conic.verdict, "scaling", conic.data.scaling.label())
