# coding: utf-8
# # Certificates: write, re-check, catch edits
#
# A certificate is deterministic JSON. It stores polynomials as text, plus
# rho and the scaling classes, so re-checking it never needs a search.

# %%
import json
import tempfile
from pathlib import Path

from irratio.witness import WitnessParams, build_witness_hypersurface, read_certificate, verify_certificate, write_certificate

cert = build_witness_hypersurface(WitnessParams(3, 6, 5))
path = Path(tempfile.mkdtemp()) / "witness.json"
write_certificate(cert, path)
print(verify_certificate(read_certificate(path)).verdict)

# %% [markdown]
# Swapping two slots of rho breaks the requirement that c1 = x1*x2*x3.
# The recomputed checks then fail, and the report names the failing check.

# %%
doc = json.loads(path.read_text())
doc["rho"][1], doc["rho"][2] = doc["rho"][2], doc["rho"][1]
report = verify_certificate(doc)
print(report.verdict, report.failed)

# %% [markdown]
# Editing only the recorded outcome is a different kind of problem. All
# recomputed checks pass, but they disagree with the stored ones:

# %%
doc = json.loads(path.read_text())
doc["verdict"] = "FAIL"
print(verify_certificate(doc).verdict, verify_certificate(doc).mismatched)

# %% [markdown]
# A finite-field oracle also travels with the certificate. At seeded points
# over F_101 it checks that the specialized forms have matching rank and
# discriminant.

# %%
print(doc["oracle"]["detail"])
