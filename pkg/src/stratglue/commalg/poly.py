"""Sparse multivariate (Laurent) polynomials over the rationals.

A :class:`PolyRing` names its variables and flags some of them as invertible.
Internally every inverted variable ``x`` gets a companion variable standing for
``x^-1``; the companion relation ``x * x^-1 - 1`` is only ever added when an
ideal is handed to the Groebner machinery.  At the :class:`Poly` level the two
are cancelled eagerly, so a Poly is a canonical Laurent polynomial and equality
is structural.
"""
from __future__ import annotations

import ast
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple, Union

Exponent = Tuple[int, ...]
Terms = Dict[Exponent, Fraction]
Scalar = Union[int, Fraction]


class PolyParseError(ValueError):
    pass


@dataclass(frozen=True)
class PolyRing:
    variables: Tuple[str, ...]
    inverted: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "inverted", frozenset(self.inverted))
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable names in {self.variables}")
        extra = self.inverted - set(self.variables)
        if extra:
            raise ValueError(f"inverted variables {sorted(extra)} are not ring variables")

    # -- internal presentation -------------------------------------------
    @property
    def companions(self) -> Tuple[str, ...]:
        """Inverted variables, in declaration order; one companion each."""
        return tuple(v for v in self.variables if v in self.inverted)

    @property
    def nvars(self) -> int:
        return len(self.variables) + len(self.companions)

    @property
    def internal_names(self) -> Tuple[str, ...]:
        return self.variables + tuple(f"{v}^-1" for v in self.companions)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r} in ring {self}") from None

    def companion_index(self, name: str) -> int:
        return len(self.variables) + self.companions.index(name)

    def pairs(self):
        """(variable index, companion index) for each inverted variable."""
        n = len(self.variables)
        return [(self.index(v), n + k) for k, v in enumerate(self.companions)]

    def relations(self) -> list:
        """Raw term dicts of the relations ``x * x^-1 - 1``."""
        out = []
        for i, j in self.pairs():
            e = [0] * self.nvars
            e[i] = e[j] = 1
            out.append({tuple(e): Fraction(1), (0,) * self.nvars: Fraction(-1)})
        return out

    def canon(self, terms: Mapping[Exponent, Fraction]) -> Terms:
        """Cancel ``x * x^-1`` pairs and drop zero coefficients."""
        pairs = self.pairs()
        out: Terms = {}
        for e, c in terms.items():
            if pairs:
                e = list(e)
                for i, j in pairs:
                    m = min(e[i], e[j])
                    if m:
                        e[i] -= m
                        e[j] -= m
                e = tuple(e)
            out[e] = out.get(e, Fraction(0)) + c
        return {e: c for e, c in out.items() if c != 0}

    # -- constructors ---------------------------------------------------
    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.const(1)

    def const(self, c: Scalar) -> "Poly":
        return Poly(self, {(0,) * self.nvars: Fraction(c)})

    def var(self, name: str) -> "Poly":
        e = [0] * self.nvars
        e[self.index(name)] = 1
        return Poly(self, {tuple(e): Fraction(1)})

    def monomial(self, exps: Mapping[str, int], coeff: Scalar = 1) -> "Poly":
        """Laurent monomial; negative exponents only on inverted variables."""
        e = [0] * self.nvars
        for name, k in exps.items():
            if k >= 0:
                e[self.index(name)] += k
            elif name in self.inverted:
                e[self.companion_index(name)] += -k
            else:
                raise ValueError(f"{name} is not invertible in {self}")
        return Poly(self, {tuple(e): Fraction(coeff)})

    def poly(self, value) -> "Poly":
        if isinstance(value, Poly):
            if value.ring != self:
                raise ValueError("polynomial belongs to a different ring")
            return value
        if isinstance(value, (int, Fraction)):
            return self.const(value)
        if isinstance(value, str):
            return parse_poly(self, value)
        raise TypeError(f"cannot coerce {value!r} into {self}")

    def __str__(self):
        names = ", ".join(
            f"{v}^{{±1}}" if v in self.inverted else v for v in self.variables
        )
        return f"Q[{names}]"


class Poly:
    """Immutable Laurent polynomial with exact rational coefficients."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[Exponent, Fraction]):
        self.ring = ring
        self.terms = ring.canon(terms)
        self._hash = None

    # -- arithmetic --------------------------------------------------------
    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise ValueError("ring mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = t.get(e, Fraction(0)) + c
        return Poly(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t: Terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, Fraction(0)) + c1 * c2
        return Poly(self.ring, t)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero scalar")
            return Poly(self.ring, {e: c / other for e, c in self.terms.items()})
        if isinstance(other, Poly):
            return self * other.inverse()
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.ring.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> "Poly":
        """Inverse of a unit monomial (nonzero scalar times inverted variables)."""
        if not self.is_unit_monomial():
            raise ValueError(f"{self} is not a unit of {self.ring}")
        (e, c), = self.terms.items()
        exps = self.exponents(e)
        return self.ring.monomial({v: -k for v, k in exps.items()}, 1 / c)

    # -- inspection -------------------------------------------------------
    def exponents(self, e: Exponent) -> Dict[str, int]:
        """Net Laurent exponents of an internal exponent tuple."""
        ring = self.ring
        out = {v: e[i] for i, v in enumerate(ring.variables) if e[i]}
        for v in ring.companions:
            k = e[ring.companion_index(v)]
            if k:
                out[v] = out.get(v, 0) - k
        return {v: k for v, k in out.items() if k}

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        return self.terms.get((0,) * self.ring.nvars, Fraction(0))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_unit_monomial(self) -> bool:
        if len(self.terms) != 1:
            return False
        (e, _), = self.terms.items()
        return all(v in self.ring.inverted for v in self.exponents(e))

    def variables_used(self) -> frozenset:
        used = set()
        for e in self.terms:
            used.update(self.exponents(e))
        return frozenset(used)

    def total_degree(self) -> int:
        """Largest total net degree (Laurent exponents counted in absolute value)."""
        if not self.terms:
            return -1
        return max(sum(abs(k) for k in self.exponents(e).values()) for e in self.terms)

    def evaluate(self, point: Mapping[str, Scalar]) -> Fraction:
        ring = self.ring
        vals = [Fraction(point[v]) if v in point else None for v in ring.variables]
        comp = [ring.companion_index(v) if v in ring.inverted else None for v in ring.variables]
        for v, ci, x in zip(ring.variables, comp, vals):
            if ci is not None and x is not None and x == 0:
                raise ValueError(f"inverted variable {v} evaluated at 0")
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for i, (x, ci) in enumerate(zip(vals, comp)):
                k = e[i] - (e[ci] if ci is not None else 0)
                if not k:
                    continue
                if x is None:
                    raise KeyError(f"point has no coordinate for {ring.variables[i]}")
                term *= x ** k
            total += term
        return total

    # -- comparison / display -------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def sorted_terms(self):
        """Terms in descending graded-reverse-lex order of net exponents."""
        def key(item):
            ex = self.exponents(item[0])
            vec = [ex.get(v, 0) for v in self.ring.variables]
            return (sum(vec), tuple(-x for x in reversed(vec)))
        return sorted(self.terms.items(), key=key, reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}"
                for v, k in ((v, self.exponents(e).get(v, 0)) for v in self.ring.variables)
                if k
            )
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Poly({str(self)!r} in {self.ring})"


# -- parsing -------------------------------------------------------------

def parse_poly(ring: PolyRing, text: str) -> Poly:
    """Parse e.g. ``"D - 3/2*t^2"`` or ``"t^-1 + 2"`` into ``ring``.

    Both ``^`` and ``**`` denote powers.  Division is allowed by scalars and
    by unit monomials.
    """
    src = text.strip().replace("^", "**")
    if not src:
        raise PolyParseError("empty polynomial expression")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise PolyParseError(f"cannot parse {text!r}: {exc.msg}") from None

    def walk(node):
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
            return ring.const(node.value)
        if isinstance(node, ast.Name):
            if node.id not in ring.variables:
                raise PolyParseError(f"unknown variable {node.id!r} (ring has {ring.variables})")
            return ring.var(node.id)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            val = walk(node.operand)
            return -val if isinstance(node.op, ast.USub) else val
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                k = _int_exponent(node.right)
                base = walk(node.left)
                try:
                    return base ** k
                except ValueError as exc:
                    raise PolyParseError(str(exc)) from None
            left, right = walk(node.left), walk(node.right)
            if isinstance(node.op, ast.Add):
                return left + right
            if isinstance(node.op, ast.Sub):
                return left - right
            if isinstance(node.op, ast.Mult):
                return left * right
            if isinstance(node.op, ast.Div):
                if right.is_constant():
                    c = right.constant_value()
                    if c == 0:
                        raise PolyParseError("division by zero")
                    return left / c
                try:
                    return left * right.inverse()
                except ValueError as exc:
                    raise PolyParseError(str(exc)) from None
        raise PolyParseError(f"unsupported syntax in {text!r}")

    def _int_exponent(node):
        sign = 1
        while isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            if isinstance(node.op, ast.USub):
                sign = -sign
            node = node.operand
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return sign * node.value
        raise PolyParseError("exponents must be integer literals")

    return walk(tree)


def raw_of(p: Poly) -> Terms:
    return dict(p.terms)


def from_raw(ring: PolyRing, terms: Mapping[Exponent, Fraction]) -> Poly:
    return Poly(ring, terms)


def as_polys(ring: PolyRing, items: Iterable) -> list:
    return [ring.poly(x) for x in items]
