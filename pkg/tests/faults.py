"""Single-field perturbations of catalog expectations, for fault injection."""
from __future__ import annotations

import copy

from lieinv.liecore import center

# fields that only name polynomials; a wrong definition surfaces in the claims that use it
CONSUMERS = {"defs": ("Y", "QY", "M", "relations", "locus")}


def _noncentral(entry) -> str:
    L = entry.algebra()
    if not L.specialized:
        L = L.specialize({p: 1 for p in L.params})
    Z = center(L)
    return next(b for b in L.basis if not Z.contains(L.vector(b)))


def perturb(entry, field: str):
    """Return a copy of ``entry`` whose expectation for ``field`` is wrong."""
    v = copy.deepcopy(entry.expected[field])
    if field in ("i", "c", "metabelian_t"):
        v += 1
    elif field == "alpha":
        v -= 1
    elif field == "p":
        v = "x1" if v != "x1" else "x2"
    elif field == "cp":
        v = not v
    elif field in ("F", "h"):
        v = v[:-1] if len(v) > 1 else v + [entry.algebra().basis[0]]
    elif field == "jacobi_residuals":
        v = v[:-1] if len(v) > 1 else v + [entry.algebra().params[0]]
    elif field in ("Y", "QY"):
        x = _noncentral(entry)
        v = v[:-1] + [f"{v[-1]} + {x}"] if v else [x]
    elif field == "defs":
        v[-1][1] = f"{v[-1][1]} + {_noncentral(entry)}"
    elif field == "M":
        v[0]["complete"] = not v[0]["complete"]
    elif field == "flags":
        k = sorted(v)[0]
        v[k] = not v[k]
    elif field == "relations":
        v[0]["terms"][0][0] = str(int(v[0]["terms"][0][0]) + 1)
    elif field == "locus":
        v["codim"] += 1
    elif field == "stabilizer":
        v["basis"] = v["basis"][:-1]
    else:
        raise KeyError(field)
    return entry.with_expected(**{field: v})


def blamed(field: str, check_field: str) -> bool:
    """Whether a failing check names ``field`` (or a claim built from it)."""
    heads = CONSUMERS.get(field, (field,))
    head = check_field.split("[")[0].split(".")[0]
    return head in heads
