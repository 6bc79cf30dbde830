"""Validation reports for stratification data and catalog models.

Each check yields ``CheckLine(name, ok, detail)``; a report passes when every
line does.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List

from .catalog.models import inclusion_defects
from .commalg import Ideal, parse_poly
from .oracles import compare_ftopg, random_closed_set, sample_closed_sets
from .poset import validate_poset
from .qtorus import center_lattice
from .strat import StratificationData, check_phi_axioms, closure_in_glued, ftopg, glue_topology
from .topology import ClosedSet, FiniteSpace, VarietySpace


@dataclass(frozen=True)
class CheckLine:
    name: str
    ok: bool
    detail: str = ""

    def __str__(self):
        tag = "PASS" if self.ok else "FAIL"
        return f"{tag} {self.name}" + (f": {self.detail}" if self.detail else "")


def check_stratification(data: StratificationData, samples: int = 6, seed: int = 0) -> List[CheckLine]:
    out: List[CheckLine] = []
    problems = validate_poset(data.poset)
    out.append(CheckLine("poset", not problems, "; ".join(problems)))
    if problems:
        return out
    missing = data.missing_covers()
    out.append(CheckLine("phi on every cover", not missing, ", ".join(f"{a}<{b}" for a, b in missing)))
    for n, pair in enumerate(data.pairs()):
        m = data.phis[pair]
        sp = m.source_space
        sampler = sp.closed_sets() if isinstance(sp, FiniteSpace) else sample_closed_sets(sp, samples, seed + n)
        report = check_phi_axioms(m, sampler)
        out.append(CheckLine(f"phi axioms {pair[0]}<{pair[1]}", not report, "; ".join(report)))
    if all(isinstance(s, FiniteSpace) for s in data.strata.values()):
        try:
            glued = glue_topology(data)
            out.append(CheckLine("glued topology", True, f"{len(glued.closed)} closed sets"))
        except ValueError as exc:
            out.append(CheckLine("glued topology", False, str(exc)))
    else:
        for k in data.poset.elements:
            fam = closure_in_glued(data, k, data.strata[k].whole())
            bad = [j for j in data.poset.elements
                   if not data.strata[j].equal(fam[j], data.strata[j].whole() if data.poset.le(k, j)
                                               else data.strata[j].empty())]
            out.append(CheckLine(f"closure of stratum {k}", not bad,
                                 "wrong on " + ", ".join(map(str, bad)) if bad else ""))
    return out


def check_model(model, samples: int = 6, seed: int = 0) -> List[CheckLine]:
    out: List[CheckLine] = []
    if model.strata_rings:
        out += check_stratification(model.to_stratification(), samples, seed)
    else:
        problems = validate_poset(model.poset)
        out.append(CheckLine("poset", not problems, "; ".join(problems)))
    for label, td in sorted(model.tori.items()):
        lat = center_lattice(td.torus)
        ok = lat.same_lattice(td.expected_center) if td.expected_center else lat.rank == 0
        out.append(CheckLine(f"center {label}", ok, ", ".join(lat.monomials()) or "k"))
    rng = random.Random(seed)
    for label, mi in sorted(model.max_ideals.items()):
        ok, detail = max_ideal_check(model, label, rng)
        out.append(CheckLine(f"maximal ideals {label}", ok, detail))
    for pair in sorted(model.zjk):
        bad = inclusion_defects(model, pair)
        out.append(CheckLine(f"g is the inclusion {pair[0]}<{pair[1]}", not bad, "; ".join(bad)))
    if model.name == "oq_sl3_poset":
        from .catalog.sl3 import LISTED_IDENTITIES, symmetry_instance_check
        out.append(CheckLine("36 primes", len(model.poset.elements) == 36))
        for ident in LISTED_IDENTITIES:
            out.append(CheckLine(f"symmetry {ident.key}", symmetry_instance_check(ident)))
    return out


def max_ideal_check(model, label: str, rng: random.Random, trials: int = 3):
    """Instantiate the stored maximal-ideal generators and confirm each cuts out one point."""
    mi = model.max_ideals[label]
    R = model.strata_rings[label]
    space = VarietySpace(R, label)
    for _ in range(trials):
        vals = {p: Fraction(rng.choice([1, 2, 3, -1, -2, 5])) for p in mi.parameters}
        gens = []
        for text in mi.in_coordinates:
            for p, v in vals.items():
                text = re.sub(rf"\b{p}\b", f"({v})", text)
            gens.append(parse_poly(R, text))
        Y = space.normalize(ClosedSet.variety(Ideal(R, gens)) if gens else space.whole())
        if R.variables and (Y.kind != "points" or len(Y.points) != 1):
            return False, f"{mi.in_coordinates} at {vals} gives {space.render(Y)}"
        if not R.variables and Y.kind != "whole":
            return False, "point stratum should be a single point"
    return True, ", ".join(mi.in_coordinates) or "single point"


@dataclass
class OracleSweep:
    pair: tuple
    sets: int
    points: int
    hits: int
    failures: List[str]

    @property
    def ok(self) -> bool:
        return not self.failures


def ftopg_oracle_sweep(model, pair, n: int = 50, seed: int = 0) -> OracleSweep:
    """Ideal-level f-up-g against the pointwise oracle on ``n`` random closed sets."""
    f, g = model.f_map(pair), model.g_map(pair)
    space = model.space(pair[0])
    rng = random.Random(seed)
    failures, points, hits = [], 0, 0
    for _ in range(n):
        Y = random_closed_set(space, rng)
        res = compare_ftopg(f, g, Y, ftopg(f, g, Y.closed), rng)
        points += res.tested
        hits += res.hits
        if not res.agree:
            failures.append(f"{space.render(Y.closed)} disagrees at {res.mismatches[:3]}")
    return OracleSweep(pair, n, points, hits, failures)


def passed(lines: List[CheckLine]) -> bool:
    return all(line.ok for line in lines)
