"""Finite stratifications, transfer maps between strata, and topology gluing.

A stratification is a poset of labels, a space per label, and for comparable
pairs ``i < j`` a transfer map ``phi_ij`` taking closed subsets of stratum
``i`` to closed subsets of stratum ``j``.  A family ``X = (X_i)`` of subsets is
closed in the glued space when each ``X_i`` is closed and ``phi_ij(X_i)`` lies
in ``X_j`` for every stored pair.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable, Dict, FrozenSet, Hashable, Iterable, List, Mapping, Optional, Tuple, Union

from .commalg import AlgMap, Ideal, contract, extend
from .poset import Poset, covers, validate_poset
from .topology import ClosedSet, ClosedSetError, FiniteSpace, VarietySpace

Label = Hashable
Space = Union[FiniteSpace, VarietySpace]
Family = Dict[Label, ClosedSet]


class StratificationError(ValueError):
    pass


# -- continuous maps and f-up-g -------------------------------------------

@dataclass(frozen=True)
class FiniteMap:
    """A map of finite spaces given pointwise."""

    source: FiniteSpace
    target: FiniteSpace
    mapping: Tuple[Tuple[Hashable, Hashable], ...]

    def __init__(self, source: FiniteSpace, target: FiniteSpace, mapping: Mapping):
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        if set(mapping) != set(source.points):
            raise ValueError("a finite map must be defined on every source point")
        if not set(mapping.values()) <= set(target.points):
            raise ValueError("a finite map must land in the target points")
        object.__setattr__(self, "mapping", tuple(sorted(mapping.items(), key=lambda kv: str(kv[0]))))

    def __call__(self, x):
        return dict(self.mapping)[x]

    def is_continuous(self) -> bool:
        m = dict(self.mapping)
        return all(frozenset(x for x in self.source.points if m[x] in c) in self.source.closed
                   for c in self.target.closed)


def ftopg(f, g, Y: ClosedSet) -> ClosedSet:
    """``f^-1(closure(g(Y)))`` for maps ``f: S' -> W`` and ``g: S -> W``.

    For ring maps ``f: Z -> R'`` and ``g: Z -> R`` the continuous maps are their
    comorphisms into ``max Z``; the closure of ``g(V(I))`` is ``V(contract(g, I))``
    and the preimage under ``f`` is ``V(extend(f, .))``.  Finite maps are
    handled pointwise.
    """
    if isinstance(f, AlgMap) and isinstance(g, AlgMap):
        if f.source != g.source:
            raise StratificationError(
                f"maps do not share a codomain: {f.source} vs {g.source}")
        src = VarietySpace(g.target)
        dst = VarietySpace(f.target)
        Y = src.normalize(Y)
        if Y.kind == "points" and src.dimension > 0:
            # a finite image is already closed
            out = dst.empty()
            images = {tuple(g.pull_point(src.point_dict(p)).values()) for p in Y.points}
            for w in sorted(images):
                m = Ideal.of_point(g.source, dict(zip(g.source.variables, w)))
                out = dst.union(out, dst.normalize(ClosedSet.variety(extend(f, m))))
            return out
        return dst.normalize(ClosedSet.variety(extend(f, contract(g, src.ideal_of(Y)))))
    if isinstance(f, FiniteMap) and isinstance(g, FiniteMap):
        if f.target != g.target:
            raise StratificationError("maps do not share a codomain")
        ys = g.source.to_set(Y)
        image = g.target.closure({g(y) for y in ys})
        return ClosedSet.family(x for x in f.source.points if f(x) in image)
    raise StratificationError(f"cannot combine {type(f).__name__} with {type(g).__name__}")


# -- transfer maps ---------------------------------------------------------

@dataclass(frozen=True)
class TableRule:
    """Explicit images of a generating family of closed sets, extended by unions."""

    table: Tuple[Tuple[FrozenSet, FrozenSet], ...]

    def __init__(self, table: Mapping):
        items = {frozenset(k): frozenset(v) for k, v in table.items()}
        object.__setattr__(self, "table", tuple(sorted(items.items(), key=lambda kv: (len(kv[0]), sorted(map(str, kv[0]))))))

    def apply(self, Y: ClosedSet, src: Space, dst: Space) -> ClosedSet:
        s = src.to_set(Y)
        table = dict(self.table)
        if s in table:
            return dst.normalize(ClosedSet.family(table[s]))
        parts = [k for k in table if k and k <= s]
        if frozenset().union(*parts) != s:
            raise StratificationError(f"{sorted(map(str, s))} is not a union of tabulated closed sets")
        return dst.normalize(ClosedSet.family(frozenset().union(*(table[k] for k in parts))))


@dataclass(frozen=True)
class ComorphismRule:
    """``phi = f up g`` with ``f: Z -> Z_K`` and ``g: Z -> Z_J`` over a common ring ``Z``."""

    f: AlgMap
    g: AlgMap
    labels: Tuple[str, str] = ("", "")

    def __post_init__(self):
        if self.f.source != self.g.source:
            raise StratificationError("f and g must share their source ring")

    @property
    def intermediate(self):
        return self.f.source

    def apply(self, Y: ClosedSet, src: Space, dst: Space) -> ClosedSet:
        return ftopg(self.f, self.g, Y)


@dataclass(frozen=True)
class FunctionRule:
    """Any Python callable on closed sets (used for ad hoc and corrupted maps)."""

    func: Callable
    name: str = "function"

    def apply(self, Y: ClosedSet, src: Space, dst: Space) -> ClosedSet:
        return dst.normalize(self.func(Y))


Rule = Union[TableRule, ComorphismRule, FunctionRule]


@dataclass(frozen=True)
class PhiMap:
    source: Label
    target: Label
    rule: Rule
    source_space: Space = field(compare=False, repr=False, default=None)
    target_space: Space = field(compare=False, repr=False, default=None)

    def __call__(self, Y: ClosedSet) -> ClosedSet:
        return self.rule.apply(Y, self.source_space, self.target_space)


def _union_pairs(samples: List[ClosedSet], pairing: str):
    indexed = list(enumerate(samples))
    if pairing == "all":
        return list(combinations(indexed, 2))
    if pairing == "cyclic":
        n = len(indexed)
        return [(indexed[k], indexed[(k + 1) % n]) for k in range(n)] if n > 1 else []
    raise ValueError(f"unknown pairing {pairing!r}; use 'all' or 'cyclic'")


def check_phi_axioms(m: PhiMap, sampler: Iterable[ClosedSet], pairing: str = "all") -> List[str]:
    """Check ``phi(empty) = empty``, ``phi(whole) = whole`` and union preservation.

    ``pairing="all"`` tests every pair of samples; ``"cyclic"`` tests each
    sample against the next one, which keeps large samples affordable.
    """
    src, dst = m.source_space, m.target_space
    report = []
    name = f"phi[{m.source}->{m.target}]"
    try:
        if not dst.is_empty(m(src.empty())):
            report.append(f"{name}: empty set maps to {_render(dst, m(src.empty()))}, not empty")
        if not dst.equal(m(src.whole()), dst.whole()):
            report.append(f"{name}: whole stratum maps to {_render(dst, m(src.whole()))}, not the whole stratum")
        samples = list(sampler)
        images = [m(Y) for Y in samples]
        for (a, Y), (b, Z) in _union_pairs(samples, pairing):
            lhs = m(src.union(Y, Z))
            rhs = dst.union(images[a], images[b])
            if not dst.equal(lhs, rhs):
                report.append(f"{name}: union not preserved for {_render(src, Y)} and {_render(src, Z)}")
    except (StratificationError, ClosedSetError) as exc:
        report.append(f"{name}: {exc}")
    return report


def _render(space: Space, Y: ClosedSet) -> str:
    try:
        return space.render(Y)
    except Exception:  # rendering is best effort inside reports
        return repr(Y)


@dataclass
class StratificationData:
    poset: Poset
    strata: Dict[Label, Space]
    phis: Dict[Tuple[Label, Label], PhiMap]
    name: str = ""

    def __post_init__(self):
        missing = set(self.poset.elements) - set(self.strata)
        if missing:
            raise StratificationError(f"no stratum given for {sorted(map(str, missing))}")
        for (i, j), m in self.phis.items():
            if not self.poset.lt(i, j):
                raise StratificationError(f"phi given for non-comparable pair ({i}, {j})")
            if m.source_space is None or m.target_space is None:
                self.phis[(i, j)] = PhiMap(i, j, m.rule, self.strata[i], self.strata[j])

    def pairs(self) -> List[Tuple[Label, Label]]:
        order = {x: k for k, x in enumerate(self.poset.elements)}
        return sorted(self.phis, key=lambda p: (order[p[0]], order[p[1]]))

    def missing_covers(self) -> List[Tuple[Label, Label]]:
        return [c for c in covers(self.poset) if c not in self.phis]


# -- finite stratifications --------------------------------------------------

def _check_partition(space: FiniteSpace, partition: Mapping[Label, Iterable]) -> Dict[Label, FrozenSet]:
    parts = {k: frozenset(v) for k, v in partition.items()}
    seen = set()
    for k, v in parts.items():
        if seen & v:
            raise StratificationError(f"part {k} overlaps another part")
        seen |= v
    if seen != set(space.points):
        raise StratificationError("parts do not cover the space")
    return parts


def _locally_closed(space: FiniteSpace, s: FrozenSet) -> bool:
    return space.closure(s) - s in space.closed


def verify_stratification(space: FiniteSpace, partition: Mapping[Label, Iterable], p: Poset) -> List[str]:
    """Failures of the finite-stratification conditions; empty iff satisfied."""
    parts = _check_partition(space, partition)
    report = list(validate_poset(p))
    if set(parts) != set(p.elements):
        report.append("partition labels differ from poset elements")
        return report
    for k in p.elements:
        s = parts[k]
        if not s:
            report.append(f"part {k} is empty")
            continue
        if not _locally_closed(space, s):
            report.append(f"part {k} is not locally closed")
        want = frozenset().union(*(parts[j] for j in p.up_set(k)))
        got = space.closure(s)
        if got != want:
            report.append(
                f"closure of part {k} is {sorted(map(str, got))}, expected union of parts above it "
                f"{sorted(map(str, want))}")
    return report


def induced_order(space: FiniteSpace, partition: Mapping[Label, Iterable]) -> Poset:
    """``i <= j`` iff part ``j`` lies in the closure of part ``i``."""
    parts = _check_partition(space, partition)
    rel = []
    for i, si in parts.items():
        cl = space.closure(si)
        inside = [j for j, sj in parts.items() if sj <= cl]
        if frozenset().union(*(parts[j] for j in inside)) != cl:
            raise StratificationError(f"closure of part {i} is not a union of parts")
        rel.extend((i, j) for j in inside)
    return Poset(parts, rel)


def phi_from_ambient(space: FiniteSpace, partition: Mapping[Label, Iterable], i, j, Y: ClosedSet) -> ClosedSet:
    """``closure(Y) ∩ S_j`` for ``Y`` closed in the subspace ``S_i``."""
    parts = _check_partition(space, partition)
    sub = space.subspace(parts[i])
    y = sub.to_set(Y)
    if y not in sub.closed:
        raise StratificationError(f"{sorted(map(str, y))} is not closed in stratum {i}")
    return ClosedSet.family(space.closure(y) & parts[j])


def extract_stratification(space: FiniteSpace, partition: Mapping[Label, Iterable],
                           p: Optional[Poset] = None, name: str = "") -> StratificationData:
    """Strata as subspaces plus tabulated phi for every comparable pair."""
    parts = _check_partition(space, partition)
    p = p or induced_order(space, parts)
    strata = {k: space.subspace(parts[k], str(k)) for k in parts}
    phis = {}
    for i, j in p.comparable_pairs():
        table = {c: frozenset(phi_from_ambient(space, parts, i, j, ClosedSet.family(c)).points)
                 for c in strata[i].closed}
        phis[(i, j)] = PhiMap(i, j, TableRule(table), strata[i], strata[j])
    return StratificationData(p, strata, phis, name)


def stratify_by_specialization(space: FiniteSpace) -> Tuple[Dict[Label, FrozenSet], Poset]:
    """Singleton partition of a T0 space, ordered by specialization."""
    parts = {x: frozenset({x}) for x in space.points}
    return parts, induced_order(space, parts)


# -- gluing -------------------------------------------------------------------

def is_glued_closed(data: StratificationData, X: Mapping[Label, ClosedSet]) -> bool:
    fam = _full_family(data, X)
    for k, sp in data.strata.items():
        if not sp.is_closed(fam[k]):
            return False
    for (i, j), m in data.phis.items():
        if not data.strata[j].subset(m(fam[i]), fam[j]):
            return False
    return True


def _full_family(data: StratificationData, X: Mapping[Label, ClosedSet]) -> Family:
    return {k: X.get(k, data.strata[k].empty()) for k in data.poset.elements}


@dataclass
class GluedSpace:
    """Predicate-backed glued space: closed sets are the glued-closed families."""

    data: StratificationData

    def is_closed(self, X: Mapping[Label, ClosedSet]) -> bool:
        return is_glued_closed(self.data, X)

    def closure(self, i, Y: ClosedSet) -> Family:
        return closure_in_glued(self.data, i, Y)


def glue_topology(data: StratificationData, samples: int = 8, seed: int = 0):
    """Reconstruct the global topology from stratum data.

    Finite strata give an explicit :class:`FiniteSpace` whose points are the
    stratum points (tagged ``(label, point)`` if strata share point names);
    otherwise a :class:`GluedSpace` is returned.
    """
    for m in data.phis.values():
        sp = m.source_space
        if isinstance(sp, FiniteSpace):
            sampler = sp.closed_sets()
        else:
            from .oracles import sample_closed_sets
            sampler = sample_closed_sets(sp, samples, seed)
        problems = check_phi_axioms(m, sampler)
        if problems:
            raise StratificationError("; ".join(problems))
    if not all(isinstance(s, FiniteSpace) for s in data.strata.values()):
        return GluedSpace(data)

    labels = list(data.poset.elements)
    all_points = [x for k in labels for x in data.strata[k].points]
    tagged = len(set(all_points)) != len(all_points)

    def tag(k, x):
        return (k, x) if tagged else x

    closed = []
    for combo in product(*(data.strata[k].closed_sets() for k in labels)):
        X = dict(zip(labels, combo))
        if is_glued_closed(data, X):
            closed.append(frozenset(tag(k, x) for k in labels for x in X[k].points))
    points = [tag(k, x) for k in labels for x in data.strata[k].points]
    glued = FiniteSpace(points, closed, data.name)
    problems = glued.topology_problems()
    partition = {k: {tag(k, x) for x in data.strata[k].points} for k in labels}
    problems += verify_stratification(glued, partition, data.poset)
    if problems:
        raise StratificationError("glued family fails checks: " + "; ".join(problems))
    return glued


def closure_in_glued(data: StratificationData, i, Y: ClosedSet) -> Family:
    """Smallest glued-closed family with ``Y`` in stratum ``i``.

    Seeds ``X_i = Y`` and pushes along every stored phi until nothing changes.
    """
    fam = {k: data.strata[k].empty() for k in data.poset.elements}
    fam[i] = data.strata[i].normalize(Y)
    order = {x: n for n, x in enumerate(data.poset.linear_extension())}
    pairs = sorted(data.phis, key=lambda p: (order[p[0]], order[p[1]]))
    changed = True
    while changed:
        changed = False
        for a, b in pairs:
            if data.strata[a].is_empty(fam[a]):
                continue
            sp = data.strata[b]
            pushed = data.phis[(a, b)](fam[a])
            if not sp.subset(pushed, fam[b]):
                fam[b] = sp.union(fam[b], pushed)
                changed = True
    return fam


def family_equal(data: StratificationData, X: Mapping, Y: Mapping) -> bool:
    fx, fy = _full_family(data, X), _full_family(data, Y)
    return all(data.strata[k].equal(fx[k], fy[k]) for k in data.poset.elements)


def composition_defects(data: StratificationData, samples: Mapping[Label, List[ClosedSet]]) -> List[str]:
    """Chains ``i < j < k`` where ``phi_jk(phi_ij(Y)) != phi_ik(Y)`` on the given samples.

    Composition compatibility is recorded, never assumed.
    """
    out = []
    for (i, j), m1 in sorted(data.phis.items(), key=lambda kv: str(kv[0])):
        for (j2, k), m2 in sorted(data.phis.items(), key=lambda kv: str(kv[0])):
            if j2 != j or (i, k) not in data.phis:
                continue
            m3 = data.phis[(i, k)]
            for Y in samples.get(i, []):
                if not data.strata[k].equal(m2(m1(Y)), m3(Y)):
                    out.append(f"{i}<{j}<{k}: {_render(data.strata[i], Y)}")
    return out
