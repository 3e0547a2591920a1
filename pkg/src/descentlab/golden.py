"""Loaders for the reference tables shipped in ``descentlab/data``."""

import json
from fractions import Fraction
from importlib import resources

from .descent import DescentVector
from .fields import Field


def _load(name):
    return json.loads((resources.files("descentlab") / "data" / name).read_text())


def reference_idempotents(p, n):
    """{partition: DescentVector} for the tabulated idempotents over F_p."""
    F = Field(p)
    out = {}
    for entry in _load(f"idempotents_p{p}.json")["idempotents"]:
        if entry["n"] != n:
            continue
        coeffs = {tuple(t["composition"]): Fraction(t["coefficient"]) for t in entry["terms"]}
        out[tuple(entry["partition"])] = DescentVector(n, F, coeffs)
    if not out:
        raise LookupError(f"no reference idempotents for p={p}, n={n}")
    return out


def reference_idempotent_degrees(p):
    return sorted({e["n"] for e in _load(f"idempotents_p{p}.json")["idempotents"]})


def reference_lie_dimensions():
    """{(partition, p): dimension} for p in 0, 2, 3."""
    out = {}
    for row in _load("lie_dimensions.json")["lie_dimensions"]:
        for p, d in row["dims"].items():
            out[(tuple(row["partition"]), int(p))] = d
    return out
