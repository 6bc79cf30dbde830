"""Command-line front end.

Exit codes: 0 success, 1 a check failed, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

from .catalog import catalog_names, example
from .checks import check_model, check_stratification, passed
from .commalg import Ideal, PolyParseError, parse_poly
from .poset import covers, to_dot, validate_poset
from .qtorus import QTorus, center_lattice, check_skew
from .serialize import SchemaError, dumps, from_json, load, model_to_json, poset_from_document, to_json
from .strat import StratificationError, closure_in_glued, glue_topology
from .topology import ClosedSet, ClosedSetError, FiniteSpace, VarietySpace


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    catalog: Optional[str] = None
    input: Optional[str] = None
    format: str = "text"
    samples: int = 6
    seed: int = 0
    output: Optional[str] = None


# -- closed-set expressions ------------------------------------------------------

def _split_top(text: str, sep: str) -> List[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts if p.strip()]


def _parse_point(space: VarietySpace, text: str):
    names = space.ring.variables
    items = _split_top(text, ",")
    if items and all("=" in it for it in items):
        vals = {}
        for it in items:
            k, v = it.split("=", 1)
            vals[k.strip()] = Fraction(v.strip())
        if set(vals) != set(names):
            raise UsageError(f"point {text!r} must give {', '.join(names)}")
        return tuple(vals[n] for n in names)
    if len(items) != len(names):
        raise UsageError(f"point {text!r} needs {len(names)} coordinates ({', '.join(names)})")
    return tuple(Fraction(it) for it in items)


def parse_closed_set(space, text: str) -> ClosedSet:
    """Grammar: ``whole``, ``empty``, ``V(p, ...)``, ``{p1; p2}``."""
    text = text.strip()
    low = text.lower()
    try:
        if low in ("whole", "all"):
            return space.whole()
        if low in ("empty", "∅", "{}"):
            return space.empty()
        if text.startswith("{") and text.endswith("}"):
            body = text[1:-1]
            if isinstance(space, FiniteSpace):
                return space.normalize(ClosedSet.family(p.strip() for p in body.replace(";", ",").split(",") if p.strip()))
            pts = [_parse_point(space, p) for p in body.split(";") if p.strip()]
            return space.normalize(ClosedSet.finite_points(pts))
        if text.startswith("V(") and text.endswith(")") and isinstance(space, VarietySpace):
            polys = [parse_poly(space.ring, p) for p in _split_top(text[2:-1], ",")]
            return space.normalize(ClosedSet.variety(Ideal(space.ring, polys)))
    except (ValueError, ZeroDivisionError, ClosedSetError, PolyParseError) as exc:
        raise UsageError(f"cannot parse closed set {text!r}: {exc}") from exc
    raise UsageError(f"cannot parse closed set {text!r}; use whole, empty, V(p, ...) or {{p1; p2}}")


# -- subcommands --------------------------------------------------------------------------

def _model(cfg: RunConfig):
    if cfg.catalog:
        try:
            return example(cfg.catalog)
        except KeyError as exc:
            raise UsageError(str(exc)) from exc
    return None


def _document(cfg: RunConfig) -> dict:
    try:
        return load(cfg.input)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {cfg.input}: {exc}") from exc


def _need_source(cfg: RunConfig):
    if bool(cfg.catalog) == bool(cfg.input):
        raise UsageError("give exactly one of --catalog or --input")


def cmd_check(cfg: RunConfig) -> tuple:
    _need_source(cfg)
    model = _model(cfg)
    if model is not None:
        lines = check_model(model, cfg.samples, cfg.seed)
    else:
        doc = _document(cfg)
        poset = poset_from_document(doc)
        problems = validate_poset(poset)
        if problems:
            return 1, "\n".join(f"FAIL poset: {p}" for p in problems) + "\n"
        lines = check_stratification(from_json(doc), cfg.samples, cfg.seed)
    ok = passed(lines)
    if cfg.format == "json":
        text = dumps({"passed": ok, "checks": [{"name": l.name, "ok": l.ok, "detail": l.detail} for l in lines]})
    else:
        text = "\n".join(str(l) for l in lines) + f"\n{'PASS' if ok else 'FAIL'} overall\n"
    return (0 if ok else 1), text


def _data_and_model(cfg: RunConfig):
    _need_source(cfg)
    model = _model(cfg)
    if model is not None:
        return model.to_stratification(), model
    return from_json(_document(cfg)), None


def _label(data, model, text: str):
    if model is not None:
        try:
            return model.label(text)
        except KeyError as exc:
            raise UsageError(str(exc)) from exc
    if text not in data.strata:
        raise UsageError(f"unknown stratum {text!r}")
    return text


def cmd_phi(cfg: RunConfig, J: str, K: str, expr: str) -> tuple:
    data, model = _data_and_model(cfg)
    J, K = _label(data, model, J), _label(data, model, K)
    if not data.poset.lt(J, K):
        raise UsageError(f"{J} < {K} does not hold in the poset")
    if (J, K) not in data.phis:
        raise UsageError(f"no transfer map is stored for {J} < {K}")
    Y = parse_closed_set(data.strata[J], expr)
    result = data.phis[(J, K)](Y)
    sp = data.strata[K]
    rendered = sp.render(result, K) if isinstance(sp, VarietySpace) else sp.render(result)
    if cfg.format == "json":
        payload = {"source": J, "target": K, "input": expr, "result": rendered}
        if result.kind == "variety":
            payload["ideal"] = [str(g) for g in result.ideal.display_generators()]
        return 0, dumps(payload)
    return 0, rendered + "\n"


def cmd_glue(cfg: RunConfig, stratum: Optional[str] = None, expr: Optional[str] = None) -> tuple:
    data, model = _data_and_model(cfg)
    if stratum is None and all(isinstance(s, FiniteSpace) for s in data.strata.values()):
        glued = glue_topology(data)
        closed = [sorted(map(str, c)) for c in sorted(glued.closed, key=lambda c: (len(c), sorted(map(str, c))))]
        if cfg.format == "json":
            return 0, dumps({"points": [str(p) for p in glued.points], "closed": closed})
        return 0, "\n".join("{" + ", ".join(c) + "}" for c in closed) + "\n"
    starts = [_label(data, model, stratum)] if stratum else list(data.poset.elements)
    out = {}
    for i in starts:
        Y = parse_closed_set(data.strata[i], expr) if expr else data.strata[i].whole()
        fam = closure_in_glued(data, i, Y)
        out[str(i)] = {str(k): _render(data.strata[k], fam[k], k) for k in data.poset.elements}
    if cfg.format == "json":
        return 0, dumps(out)
    lines = []
    for i, fam in out.items():
        lines.append(f"closure from {i}:")
        lines += [f"  {k}: {v}" for k, v in fam.items()]
    return 0, "\n".join(lines) + "\n"


def _render(sp, Y, label):
    return sp.render(Y, label) if isinstance(sp, VarietySpace) else sp.render(Y)


def cmd_center(cfg: RunConfig, matrix: Optional[str], names: Optional[str] = None,
               stratum: Optional[str] = None) -> tuple:
    if matrix is None:
        return _catalog_center(cfg, stratum)
    try:
        M = json.loads(matrix)
        if not isinstance(M, list) or any(not isinstance(r, list) for r in M):
            raise ValueError("matrix must be a JSON list of rows")
        if not check_skew(M):
            raise ValueError("matrix is not skew-symmetric with zero diagonal")
        label_list = tuple(n.strip() for n in names.split(",")) if names else ()
        T = QTorus(M, label_list)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"bad matrix: {exc}") from exc
    lat = center_lattice(T)
    if cfg.format == "json":
        return 0, dumps(lat.to_json())
    return 0, (", ".join(lat.monomials()) or "1") + "\n"


def _catalog_center(cfg: RunConfig, stratum: Optional[str]) -> tuple:
    model = _model(cfg)
    if model is None or stratum is None:
        raise UsageError("center needs a matrix, or --catalog with --stratum")
    label = _label(model.to_stratification(), model, stratum) if model.strata_rings else stratum
    if label not in model.tori:
        raise UsageError(f"no quantum torus stored for stratum {stratum!r}")
    lat = center_lattice(model.tori[label].torus)
    if cfg.format == "json":
        return 0, dumps(lat.to_json())
    return 0, (", ".join(lat.monomials()) or "1") + "\n"


def cmd_poset(cfg: RunConfig) -> tuple:
    _need_source(cfg)
    model = _model(cfg)
    p = model.poset if model is not None else poset_from_document(_document(cfg))
    problems = validate_poset(p)
    if problems:
        return 1, "\n".join(f"FAIL poset: {x}" for x in problems) + "\n"
    if cfg.format == "dot":
        return 0, to_dot(p, model.name if model else "poset")
    cov = covers(p)
    if cfg.format == "json":
        return 0, dumps({"elements": [str(x) for x in p.elements], "covers": [[str(a), str(b)] for a, b in cov]})
    lines = [f"{len(p.elements)} elements, {len(cov)} covers"] + [f"{a} < {b}" for a, b in cov]
    return 0, "\n".join(lines) + "\n"


def cmd_export(cfg: RunConfig) -> tuple:
    _need_source(cfg)
    model = _model(cfg)
    if cfg.format == "dot":
        p = model.poset if model is not None else poset_from_document(_document(cfg))
        return 0, to_dot(p, model.name if model else "poset")
    if model is not None:
        return 0, dumps(model_to_json(model))
    return 0, dumps(to_json(from_json(_document(cfg))))


# -- driver ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--catalog", choices=catalog_names(), help="built-in model")
    common.add_argument("--input", help="stratification JSON file")
    common.add_argument("--format", choices=("text", "json", "dot"), default="text")
    common.add_argument("--samples", type=int, default=6, help="random closed sets per map check")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--output", help="write result here instead of stdout")

    parser = argparse.ArgumentParser(prog="stratglue", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("check", parents=[common], help="validate a model or stratification file")
    p = sub.add_parser("phi", parents=[common], help="apply the transfer map J -> K to a closed set")
    p.add_argument("J")
    p.add_argument("K")
    p.add_argument("expr", help="whole | empty | V(p, ...) | {p1; p2}")
    g = sub.add_parser("glue", parents=[common], help="glued topology or closures of strata")
    g.add_argument("--stratum")
    g.add_argument("--set", dest="expr")
    c = sub.add_parser("center", parents=[common], help="center of a quantum torus")
    c.add_argument("matrix", nargs="?", help="JSON integer matrix, e.g. [[0,1],[-1,0]]")
    c.add_argument("--names", help="comma-separated generator names")
    c.add_argument("--stratum", help="use the torus stored for this catalog stratum")
    sub.add_parser("poset", parents=[common], help="elements and cover relation")
    sub.add_parser("export", parents=[common], help="DOT Hasse diagram or JSON dump")
    return parser


def run(argv: Sequence[str]) -> tuple:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(args.command, args.catalog, args.input, args.format, args.samples, args.seed, args.output)
    if args.command == "check":
        return cmd_check(cfg)
    if args.command == "phi":
        return cmd_phi(cfg, args.J, args.K, args.expr)
    if args.command == "glue":
        return cmd_glue(cfg, args.stratum, args.expr)
    if args.command == "center":
        return cmd_center(cfg, args.matrix, args.names, args.stratum)
    if args.command == "poset":
        return cmd_poset(cfg)
    return cmd_export(cfg)


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        code, text = run(argv)
    except (UsageError, SchemaError, StratificationError, PolyParseError, ClosedSetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out = next((argv[i + 1] for i, a in enumerate(argv[:-1]) if a == "--output"), None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
