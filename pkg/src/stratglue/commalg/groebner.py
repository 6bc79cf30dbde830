"""Buchberger's algorithm on raw sparse polynomials.

Polynomials here are plain ``{exponent tuple: Fraction}`` dicts; a monomial
order is a sort key on exponent tuples (bigger key = bigger monomial).
"""
from __future__ import annotations

import heapq
from collections import OrderedDict
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List, Sequence, Tuple

Exponent = Tuple[int, ...]
Raw = Dict[Exponent, Fraction]
OrderKey = Callable[[Exponent], tuple]


@lru_cache(maxsize=1 << 16)
def grevlex_key(e: Exponent) -> tuple:
    return (sum(e), tuple(-x for x in reversed(e)))


def lex_key(e: Exponent) -> tuple:
    return tuple(e)


@lru_cache(maxsize=64)
def block_key(split: int) -> OrderKey:
    """Grevlex on ``e[:split]`` first, ties broken by grevlex on ``e[split:]``.

    Eliminates the first ``split`` variables.
    """
    @lru_cache(maxsize=1 << 16)
    def key(e: Exponent) -> tuple:
        return (grevlex_key(e[:split]), grevlex_key(e[split:]))
    return key


ORDERS = {"grevlex": grevlex_key, "lex": lex_key}


def leading(f: Raw, key: OrderKey) -> Tuple[Exponent, Fraction]:
    e = max(f, key=key)
    return e, f[e]


def divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub_scaled(f: Raw, g: Raw, c: Fraction, shift: Exponent) -> Raw:
    """f - c * x^shift * g"""
    out = dict(f)
    for e, v in g.items():
        m = tuple(x + y for x, y in zip(e, shift))
        nv = out.get(m, Fraction(0)) - c * v
        if nv:
            out[m] = nv
        else:
            out.pop(m, None)
    return out


def normal_form(f: Raw, basis: Sequence[Raw], key: OrderKey) -> Raw:
    """Full reduction of ``f`` modulo ``basis``."""
    leads = [leading(g, key) for g in basis]
    f = dict(f)
    rem: Raw = {}
    while f:
        e, c = leading(f, key)
        for g, (ge, gc) in zip(basis, leads):
            if divides(ge, e):
                shift = tuple(x - y for x, y in zip(e, ge))
                f = _sub_scaled(f, g, c / gc, shift)
                break
        else:
            rem[e] = c
            del f[e]
    return rem


def _spoly(f: Raw, g: Raw, key: OrderKey) -> Raw:
    fe, fc = leading(f, key)
    ge, gc = leading(g, key)
    m = lcm(fe, ge)
    sf = {tuple(a + b - c for a, b, c in zip(e, m, fe)): v / fc for e, v in f.items()}
    shift = tuple(a - b for a, b in zip(m, ge))
    return _sub_scaled(sf, g, 1 / gc, shift)


def _monic(f: Raw, key: OrderKey) -> Raw:
    _, c = leading(f, key)
    return {e: v / c for e, v in f.items()}


_GB_CACHE: "OrderedDict[tuple, Tuple[Raw, ...]]" = OrderedDict()
_GB_CACHE_SIZE = 4096


def buchberger(gens: Sequence[Raw], key: OrderKey) -> List[Raw]:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Uses the coprime-leading-monomial criterion and Buchberger's chain
    criterion; pairs are processed smallest lcm first.  Results are memoised
    on the exact input, since the same ideals recur across checks.
    """
    sig = (key, tuple(sorted(tuple(sorted((e, Fraction(v)) for e, v in g.items() if v)) for g in gens)))
    hit = _GB_CACHE.get(sig)
    if hit is None:
        hit = tuple(_buchberger(gens, key))
        _GB_CACHE[sig] = hit
        if len(_GB_CACHE) > _GB_CACHE_SIZE:
            _GB_CACHE.popitem(last=False)
    else:
        _GB_CACHE.move_to_end(sig)
    return [dict(g) for g in hit]


def _buchberger(gens: Sequence[Raw], key: OrderKey) -> List[Raw]:
    G: List[Raw] = []
    for g in gens:
        g = {e: Fraction(v) for e, v in g.items() if v}
        if g:
            G.append(_monic(g, key))
    if not G:
        return []
    nv = len(next(iter(G[0])))
    one = (0,) * nv
    if any(set(g) == {one} for g in G):
        return [{one: Fraction(1)}]

    leads = [leading(g, key)[0] for g in G]
    pairs = set()
    queue: list = []

    def push(i, j):
        pairs.add((i, j))
        heapq.heappush(queue, (key(lcm(leads[i], leads[j])), i, j))

    for i in range(len(G)):
        for j in range(i):
            push(i, j)
    while queue:
        _, i, j = heapq.heappop(queue)
        pairs.discard((i, j))
        li, lj = leads[i], leads[j]
        m = lcm(li, lj)
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue
        if any(
            k not in (i, j)
            and divides(leads[k], m)
            and (max(i, k), min(i, k)) not in pairs
            and (max(j, k), min(j, k)) not in pairs
            for k in range(len(G))
        ):
            continue
        r = normal_form(_spoly(G[i], G[j], key), G, key)
        if not r:
            continue
        r = _monic(r, key)
        if set(r) == {one}:
            return [{one: Fraction(1)}]
        G.append(r)
        leads.append(leading(r, key)[0])
        n = len(G) - 1
        for k in range(n):
            push(n, k)
    return reduce_basis(G, key)


def reduce_basis(G: Sequence[Raw], key: OrderKey) -> List[Raw]:
    """Minimalise and inter-reduce a Groebner basis; sorted by leading monomial."""
    G = [_monic(g, key) for g in G if g]
    keep: List[Raw] = []
    leads = [leading(g, key)[0] for g in G]
    for i, g in enumerate(G):
        li = leads[i]
        dominated = False
        for j, lj in enumerate(leads):
            if j == i:
                continue
            if divides(lj, li) and (lj != li or j < i):
                dominated = True
                break
        if not dominated:
            keep.append(g)
    out = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1:]
        lt, lc = leading(g, key)
        tail = {e: v for e, v in g.items() if e != lt}
        tail = normal_form(tail, others, key) if others else tail
        tail[lt] = lc
        out.append(_monic(tail, key))
    out.sort(key=lambda g: key(leading(g, key)[0]))
    return out
