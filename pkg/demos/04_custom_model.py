# Custom models: dump the strata of a catalog model, edit, reload.
#
# The dump format lists, per cyclic class, the fixed components with
# their normal eigenvalues, spin lifts and integrals.  Loaded models are
# validated before any index is computed.

import json

from orbindex import compute, dump_model, football, load_model, validate_model
from orbindex.errors import ValidationFailure

text = dump_model(football(4))
print(text[:400], "...")

m = load_model(text)
print(compute(m, "deRham").render_table())

# a normal eigenvalue 1 means the direction is not normal: rejected
doc = json.loads(text)
doc["strata"][1]["components"][0]["normal"]["1"][0][1] = "1 (z = zeta_1)"
try:
    validate_model(load_model(doc))
except ValidationFailure as exc:
    print("rejected:", exc.invariant, "-", exc.detail)

# a wrong stabilizer passes validation but not the checks
doc = json.loads(text)
doc["strata"][0]["components"][0]["stabilizer_order"] = 8
r = compute(load_model(doc), "deRham")
print("tampered model: total", r.total, "verdict", r.verdict, r.failed_checks())
