"""JSON round trip for stratification data and catalog models.

Document layout::

    {"name": str,
     "poset": {"elements": [...], "leq": [[a, b], ...]}   # or "covers"
     "strata": {label: {"kind": "finite", "points": [...], "closed": [[...], ...]}
                       | {"kind": "variety", "variables": [...], "inverted": [...]}},
     "phis": [{"source": i, "target": j, "rule": "table", "table": [[[Y...], [phi(Y)...]], ...]}
              | {"source": i, "target": j, "rule": "comorphism",
                 "intermediate": {"variables": [...], "inverted": [...]},
                 "f": {var: poly}, "g": {var: poly}, "labels": [f_label, g_label]}]}
"""
from __future__ import annotations

import json
from typing import Any, Dict

from .commalg import AlgMap, PolyRing
from .poset import Poset, validate_poset
from .strat import ComorphismRule, PhiMap, StratificationData, StratificationError, TableRule
from .topology import FiniteSpace, VarietySpace, set_key


class SchemaError(ValueError):
    pass


def ring_to_json(ring: PolyRing) -> dict:
    return {"variables": list(ring.variables), "inverted": [v for v in ring.variables if v in ring.inverted]}


def ring_from_json(d: dict) -> PolyRing:
    try:
        return PolyRing(tuple(d["variables"]), frozenset(d.get("inverted", [])))
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"bad ring description {d!r}") from exc


def space_to_json(sp) -> dict:
    if isinstance(sp, FiniteSpace):
        return {"kind": "finite", "points": [str(p) for p in sp.points],
                "closed": [sorted(map(str, c)) for c in sorted(sp.closed, key=set_key)]}
    return {"kind": "variety", **ring_to_json(sp.ring)}


def space_from_json(label: str, d: dict):
    kind = d.get("kind")
    if kind == "finite":
        return FiniteSpace(d["points"], d["closed"], label)
    if kind == "variety":
        return VarietySpace(ring_from_json(d), label)
    raise SchemaError(f"stratum {label}: unknown kind {kind!r}")


def phi_to_json(m: PhiMap) -> dict:
    rule = m.rule
    out: Dict[str, Any] = {"source": str(m.source), "target": str(m.target)}
    if isinstance(rule, TableRule):
        out["rule"] = "table"
        out["table"] = [[sorted(map(str, k)), sorted(map(str, v))] for k, v in rule.table]
    elif isinstance(rule, ComorphismRule):
        out["rule"] = "comorphism"
        out["intermediate"] = ring_to_json(rule.f.source)
        out["f"] = rule.f.describe()
        out["g"] = rule.g.describe()
        out["labels"] = list(rule.labels)
    else:
        raise SchemaError(f"rule {type(rule).__name__} has no JSON form")
    return out


def to_json(data: StratificationData) -> dict:
    return {
        "name": data.name,
        "poset": data.poset.to_json(),
        "strata": {str(k): space_to_json(data.strata[k]) for k in data.poset.elements},
        "phis": [phi_to_json(data.phis[p]) for p in data.pairs()],
    }


def poset_from_document(doc: dict) -> Poset:
    if "poset" not in doc:
        raise SchemaError("document has no 'poset'")
    return Poset.from_json(doc["poset"])


def from_json(doc: dict) -> StratificationData:
    """Build stratification data; the poset must be valid."""
    p = poset_from_document(doc)
    problems = validate_poset(p)
    if problems:
        raise SchemaError("invalid poset: " + "; ".join(problems))
    strata = {k: space_from_json(k, d) for k, d in doc.get("strata", {}).items()}
    phis = {}
    for entry in doc.get("phis", []):
        i, j = entry["source"], entry["target"]
        if i not in strata or j not in strata:
            raise SchemaError(f"phi {i}->{j} names an unknown stratum")
        rule_kind = entry.get("rule")
        if rule_kind == "table":
            rule = TableRule({frozenset(k): frozenset(v) for k, v in entry["table"]})
        elif rule_kind == "comorphism":
            z = ring_from_json(entry["intermediate"])
            f = AlgMap(z, strata[j].ring, entry["f"])
            g = AlgMap(z, strata[i].ring, entry["g"])
            rule = ComorphismRule(f, g, tuple(entry.get("labels", ("", ""))))
        else:
            raise SchemaError(f"phi {i}->{j}: unknown rule {rule_kind!r}")
        phis[(i, j)] = PhiMap(i, j, rule, strata[i], strata[j])
    try:
        return StratificationData(p, strata, phis, doc.get("name", ""))
    except StratificationError as exc:
        raise SchemaError(str(exc)) from exc


def model_to_json(model) -> dict:
    out: Dict[str, Any] = {"name": model.name}
    if model.strata_rings:
        out.update(to_json(model.to_stratification()))
    else:
        out["poset"] = model.poset.to_json()
    out["hprime_generators"] = {k: list(v) for k, v in sorted(model.hprime_generators.items())}
    out["descriptions"] = dict(sorted(model.descriptions.items()))
    return out


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def load(path: str) -> dict:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)
