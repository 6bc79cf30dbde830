"""Finite posets: validation, cover relation, linear extensions, DOT export."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Dict, FrozenSet, Hashable, Iterable, List, Sequence, Tuple

Label = Hashable


def label_key(x) -> tuple:
    return (str(type(x).__name__), str(x))


class PosetError(ValueError):
    pass


@dataclass(frozen=True)
class Poset:
    """A relation on labelled elements, intended to be a partial order.

    ``leq`` holds every pair ``(a, b)`` with ``a <= b``, reflexive pairs included.
    Construction does not validate; see :func:`validate_poset`.
    """

    elements: Tuple[Label, ...]
    leq: FrozenSet[Tuple[Label, Label]]

    def __init__(self, elements: Iterable[Label], leq: Iterable[Tuple[Label, Label]]):
        elems = tuple(sorted(set(elements), key=label_key))
        object.__setattr__(self, "elements", elems)
        object.__setattr__(self, "leq", frozenset((a, b) for a, b in leq))
        stray = {x for pair in self.leq for x in pair} - set(elems)
        if stray:
            raise PosetError(f"relation mentions unknown elements {sorted(map(str, stray))}")

    @classmethod
    def from_covers(cls, elements: Iterable[Label], covers: Iterable[Tuple[Label, Label]]) -> "Poset":
        """Reflexive-transitive closure of a cover (or any generating) relation."""
        elements = list(elements)
        up: Dict[Label, set] = {x: {x} for x in elements}
        for a, b in covers:
            up[a].add(b)
        changed = True
        while changed:
            changed = False
            for x in elements:
                new = set().union(*(up[y] for y in up[x]))
                if new != up[x]:
                    up[x] = new
                    changed = True
        return cls(elements, [(a, b) for a in elements for b in up[a]])

    @classmethod
    def chain(cls, n: int) -> "Poset":
        return cls(range(n), [(i, j) for i in range(n) for j in range(i, n)])

    @classmethod
    def antichain(cls, elements: Iterable[Label]) -> "Poset":
        elements = list(elements)
        return cls(elements, [(x, x) for x in elements])

    def le(self, a, b) -> bool:
        return (a, b) in self.leq

    def lt(self, a, b) -> bool:
        return a != b and (a, b) in self.leq

    def comparable_pairs(self) -> List[Tuple[Label, Label]]:
        """All ``(a, b)`` with ``a < b``, in deterministic order."""
        return sorted(((a, b) for a, b in self.leq if a != b), key=lambda p: (label_key(p[0]), label_key(p[1])))

    def up_set(self, a) -> List[Label]:
        return [b for b in self.elements if self.le(a, b)]

    def down_set(self, a) -> List[Label]:
        return [b for b in self.elements if self.le(b, a)]

    def linear_extension(self) -> List[Label]:
        """Elements ordered so that ``a < b`` implies ``a`` comes first."""
        out: List[Label] = []
        remaining = list(self.elements)
        while remaining:
            for x in remaining:
                if not any(self.lt(y, x) for y in remaining if y != x):
                    out.append(x)
                    remaining.remove(x)
                    break
            else:
                raise PosetError("relation has a cycle; no linear extension")
        return out

    def minimal(self) -> List[Label]:
        return [x for x in self.elements if not any(self.lt(y, x) for y in self.elements)]

    def maximal(self) -> List[Label]:
        return [x for x in self.elements if not any(self.lt(x, y) for y in self.elements)]

    def to_json(self) -> dict:
        return {
            "elements": [str(x) for x in self.elements],
            "leq": [[str(a), str(b)] for a, b in sorted(self.leq, key=lambda p: (label_key(p[0]), label_key(p[1])))],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Poset":
        elements = data["elements"]
        if "leq" in data:
            return cls(elements, [tuple(p) for p in data["leq"]])
        return cls.from_covers(elements, [tuple(p) for p in data.get("covers", [])])


def validate_poset(p: Poset) -> List[str]:
    """Violations of reflexivity, antisymmetry and transitivity; empty iff valid."""
    report = []
    for x in p.elements:
        if (x, x) not in p.leq:
            report.append(f"reflexivity: ({x}, {x}) missing")
    for a, b in sorted(p.leq, key=lambda q: (label_key(q[0]), label_key(q[1]))):
        if a != b and (b, a) in p.leq and label_key(a) < label_key(b):
            report.append(f"antisymmetry: {a} <= {b} and {b} <= {a}")
    for a, b, c in product(p.elements, repeat=3):
        if (a, b) in p.leq and (b, c) in p.leq and (a, c) not in p.leq:
            report.append(f"transitivity: {a} <= {b} <= {c} but not {a} <= {c}")
    return report


def covers(p: Poset) -> List[Tuple[Label, Label]]:
    """Pairs ``a < b`` with nothing strictly between them."""
    problems = validate_poset(p)
    if problems:
        raise PosetError("invalid poset: " + "; ".join(problems))
    out = []
    for a, b in p.comparable_pairs():
        if not any(p.lt(a, c) and p.lt(c, b) for c in p.elements):
            out.append((a, b))
    return out


def _dot_id(x) -> str:
    s = str(x).replace("\\", "\\\\").replace('"', '\\"')
    return f'"{s}"'


def to_dot(p: Poset, name: str = "poset", labels: Dict[Label, str] = None) -> str:
    """Hasse diagram in DOT: one node per element, one edge per cover, bottom-up."""
    lines = [f"digraph {_dot_id(name)} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    for x in p.elements:
        if labels and x in labels:
            lines.append(f"  {_dot_id(x)} [label={_dot_id(labels[x])}];")
        else:
            lines.append(f"  {_dot_id(x)};")
    for a, b in covers(p):
        lines.append(f"  {_dot_id(a)} -> {_dot_id(b)} [arrowhead=none];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def heights(p: Poset) -> Dict[Label, int]:
    """Length of the longest chain from a minimal element up to each element."""
    h: Dict[Label, int] = {}
    for x in p.linear_extension():
        below = [h[y] for y in p.elements if p.lt(y, x)]
        h[x] = 1 + max(below) if below else 0
    return h


def is_order_isomorphic_identity(p: Poset, q: Poset) -> bool:
    return p.elements == q.elements and p.leq == q.leq


def product_order(p: Poset, q: Poset, pair=lambda a, b: (a, b)) -> Poset:
    elems = [pair(a, b) for a in p.elements for b in q.elements]
    leq = [
        (pair(a, b), pair(c, d))
        for a, b in product(p.elements, q.elements)
        for c, d in product(p.elements, q.elements)
        if p.le(a, c) and q.le(b, d)
    ]
    return Poset(elems, leq)


def poset_from_sequence(elements: Sequence[Label], relation) -> Poset:
    return Poset(elements, [(a, b) for a in elements for b in elements if relation(a, b)])
