"""The 36 torus-invariant primes of quantum SL3, labelled by pairs of permutations.

Each prime ``Q[w+, w-]`` is generated by quantum minors: a row block chosen by
``w+`` and a column block chosen by ``w-``.  Minors are written ``[I|J]`` with
row set ``I`` and column set ``J``; ``Xij`` is the 1x1 minor ``[i|j]``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Dict, FrozenSet, List, Tuple

from ..poset import Poset

FULL = frozenset({1, 2, 3})


@dataclass(frozen=True, order=True)
class MinorLabel:
    rows: Tuple[int, ...]
    cols: Tuple[int, ...]

    def __init__(self, rows, cols):
        rows, cols = tuple(sorted(set(rows))), tuple(sorted(set(cols)))
        if not rows or len(rows) != len(cols) or len(rows) > 3:
            raise ValueError(f"bad minor [{rows}|{cols}]")
        if not set(rows) | set(cols) <= FULL:
            raise ValueError(f"indices of [{rows}|{cols}] must lie in 1..3")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)

    @classmethod
    def parse(cls, text: str) -> "MinorLabel":
        """Accepts ``X13`` or ``[12|23]``."""
        text = text.strip()
        if text.startswith("X") and len(text) == 3:
            return cls({int(text[1])}, {int(text[2])})
        if text.startswith("[") and text.endswith("]") and "|" in text:
            r, c = text[1:-1].split("|")
            return cls({int(ch) for ch in r}, {int(ch) for ch in c})
        raise ValueError(f"cannot parse minor label {text!r}")

    @property
    def size(self) -> int:
        return len(self.rows)

    def __str__(self):
        if self.size == 1:
            return f"X{self.rows[0]}{self.cols[0]}"
        return "[" + "".join(map(str, self.rows)) + "|" + "".join(map(str, self.cols)) + "]"


def X(i: int, j: int) -> MinorLabel:
    return MinorLabel({i}, {j})


def _w0(s) -> FrozenSet[int]:
    return frozenset(4 - i for i in s)


def minor_symmetry(sym: str, m: MinorLabel) -> MinorLabel:
    """Action of the transpose (``tau``), antipode (``S``, scalar dropped) or ``rho`` on a minor label."""
    I, J = frozenset(m.rows), frozenset(m.cols)
    if sym == "tau":
        return MinorLabel(J, I)
    if sym == "S":
        return MinorLabel(FULL - J, FULL - I)
    if sym == "rho":
        return MinorLabel(_w0(J), _w0(I))
    raise ValueError(f"unknown symmetry {sym!r}; expected tau, S or rho")


PERMS = ("321", "231", "312", "132", "213", "123")

# Generator blocks per permutation, transcribed cell by cell.
COLUMN_BLOCK: Dict[str, Tuple[MinorLabel, ...]] = {
    "321": (),
    "231": (MinorLabel({1, 2}, {2, 3}),),
    "312": (X(1, 3),),
    "132": (X(1, 2), X(1, 3)),
    "213": (X(1, 3), X(2, 3)),
    "123": (X(1, 2), X(1, 3), X(2, 3)),
}
ROW_BLOCK: Dict[str, Tuple[MinorLabel, ...]] = {
    "321": (),
    "231": (X(3, 1),),
    "312": (MinorLabel({2, 3}, {1, 2}),),
    "132": (X(2, 1), X(3, 1)),
    "213": (X(3, 1), X(3, 2)),
    "123": (X(2, 1), X(3, 1), X(3, 2)),
}


def hprime_label(wplus: str, wminus: str) -> str:
    return f"{wplus},{wminus}"


def split_label(label: str) -> Tuple[str, str]:
    wplus, wminus = label.replace(" ", "").strip("()Q_{}").split(",")
    if wplus not in PERMS or wminus not in PERMS:
        raise KeyError(f"unknown SL3 label {label!r}")
    return wplus, wminus


def generators(wplus: str, wminus: str) -> Tuple[MinorLabel, ...]:
    return ROW_BLOCK[wplus] + COLUMN_BLOCK[wminus]


def length(w: str) -> int:
    return sum(1 for i in range(3) for j in range(i + 1, 3) if w[i] > w[j])


def bruhat_leq(u: str, w: str) -> bool:
    """Tableau criterion: sorted prefixes of ``u`` are dominated by those of ``w``."""
    for k in range(1, 3):
        if any(a > b for a, b in zip(sorted(u[:k]), sorted(w[:k]))):
            return False
    return True


def expansion_terms(m: MinorLabel) -> List[Tuple[MinorLabel, ...]]:
    """Terms of the minor's determinant expansion, each a tuple of 1x1 minors."""
    out = []
    for perm in permutations(m.cols):
        out.append(tuple(X(i, j) for i, j in zip(m.rows, perm)))
    return out


def minor_in_ideal(m: MinorLabel, gens) -> bool:
    """Sufficient membership test: ``m`` is a generator, or each expansion term has a 1x1 generator factor."""
    gens = set(gens)
    if m in gens:
        return True
    return all(any(x in gens for x in term) for term in expansion_terms(m))


def containment_order() -> Poset:
    """Order the 36 primes by generator-wise containment."""
    labels = [hprime_label(a, b) for a in PERMS for b in PERMS]
    gens = {lab: generators(*split_label(lab)) for lab in labels}
    rel = [(p, q) for p in labels for q in labels if all(minor_in_ideal(m, gens[q]) for m in gens[p])]
    return Poset(labels, rel)


def reverse_bruhat_product() -> Poset:
    labels = [hprime_label(a, b) for a in PERMS for b in PERMS]

    def le(p, q):
        (a, b), (c, d) = split_label(p), split_label(q)
        return bruhat_leq(c, a) and bruhat_leq(d, b)

    return Poset(labels, [(p, q) for p in labels for q in labels if le(p, q)])


@dataclass(frozen=True)
class SymmetryIdentity:
    """``sym(source) = target``, checked generator-wise or by containment plus equal height."""

    sym: str
    source: str
    target: str
    mode: str = "generators"
    source_generators: Tuple[MinorLabel, ...] = ()

    @property
    def key(self) -> str:
        return f"{self.sym}({self.source})={self.target}"


# Identities between primes used in the unique-factorisation argument.
K_IDEAL = (MinorLabel({1, 2}, {2, 3}), X(3, 1), MinorLabel({1, 3}, {2, 3}))
LISTED_IDENTITIES: Tuple[SymmetryIdentity, ...] = (
    SymmetryIdentity("S", "321,231", "321,312"),
    SymmetryIdentity("S", "312,321", "231,321"),
    SymmetryIdentity("S", "312,231", "231,312"),
    SymmetryIdentity("S", "132,231", "132,312", "containment"),
    SymmetryIdentity("tau", "231,231", "312,312"),
    SymmetryIdentity("tau", "312,312", "231,231"),
    SymmetryIdentity("rho", "231,231", "231,231"),
    SymmetryIdentity("rho", "231,132", "231,213"),
    SymmetryIdentity("S", "K", "312,132", "generators", K_IDEAL),
)


def identity_by_key(key: str) -> SymmetryIdentity:
    for ident in LISTED_IDENTITIES:
        if ident.key == key.replace(" ", ""):
            return ident
    raise KeyError(f"{key!r} is not a listed symmetry identity")


def symmetry_instance_check(identity) -> bool:
    """Apply the symmetry to every source generator and compare with the target prime.

    ``generators`` mode: the image labels equal the target generators as a set.
    ``containment`` mode: every image lies in the target and the two heights agree,
    which forces equality of the two primes.
    """
    if isinstance(identity, str):
        identity = identity_by_key(identity)
    elif identity not in LISTED_IDENTITIES:
        raise KeyError(f"{identity} is not a listed symmetry identity")
    src = identity.source_generators or generators(*split_label(identity.source))
    tgt = generators(*split_label(identity.target))
    images = [minor_symmetry(identity.sym, m) for m in src]
    if identity.mode == "generators":
        return sorted(images) == sorted(tgt)
    return all(minor_in_ideal(m, tgt) for m in images) and len(src) == len(tgt)


def symmetry_images(identity: SymmetryIdentity) -> List[str]:
    src = identity.source_generators or generators(*split_label(identity.source))
    return [str(minor_symmetry(identity.sym, m)) for m in src]
