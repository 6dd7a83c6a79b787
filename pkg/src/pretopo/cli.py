"""Command-line front end.

One verb per module area. Families, quasi-orders, skill multimaps, and
maps are read from JSON files; `--format table` (the default) prints a
human-readable report and `--format json` the machine form. Exit codes:
0 on success, 1 on a domain error (the report names the error class),
2 on unreadable or malformed input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import cardinal, connectivity, maps, miner, operators, order, separation, skills, structure
from .core import (
    ItemSet,
    PreTopology,
    SetFamily,
    Universe,
    KnowledgeStructure,
    irreducible_states,
    union_closure,
)
from .errors import PretopoError, SchemaError
from .order import QuasiOrder
from .skills import SkillMultimap


def _read(path: str) -> object:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _family(path: str) -> SetFamily:
    return SetFamily.from_obj(_read(path))


def _space(path: str) -> PreTopology:
    """A family that already is a pre-topology is taken as given;
    anything else is treated as a generating family."""
    fam = _family(path)
    try:
        return PreTopology.from_family(fam)
    except PretopoError:
        return union_closure(fam)


def _subset(universe: Universe, text: str) -> ItemSet:
    if text in ("", "-"):
        return universe.empty
    labels = [part.strip() for part in text.split(",")]
    for label in labels:
        if label not in universe.labels:
            raise SchemaError(f"unknown item {label!r}")
    return universe.subset(labels)


def _fmt(s: ItemSet) -> str:
    return "{" + ",".join(s.labels) + "}"


def _emit(args, obj: dict, table: str) -> int:
    if args.format == "json":
        print(json.dumps(obj, indent=2))
    else:
        print(table)
    return 0


def _render_matrix(row_labels, col_sets, t) -> str:
    headers = [_fmt(c) for c in col_sets]
    left = max([len(r) for r in row_labels], default=0)
    lines = [" " * left + "  " + "  ".join(headers)]
    for label, row in zip(row_labels, t):
        cells = [str(v).center(len(h)) for v, h in zip(row, headers)]
        lines.append(label.ljust(left) + "  " + "  ".join(cells))
    return "\n".join(lines)


def _initial_matrix(base: SetFamily) -> tuple[list[str], list[ItemSet], list[list[int]]]:
    labels = list(base.universe.labels)
    cols = [s for s in base.members if not s.is_empty()]
    t = [[1 if c.mask >> i & 1 else 0 for c in cols] for i in range(len(labels))]
    return labels, cols, t


# ------------------------------------------------------------------- verbs


def _cmd_check(args) -> int:
    fam = _family(args.family)
    KnowledgeStructure.from_family(fam)
    c = structure.classify(fam)
    obj = c.to_obj()
    obj["items"] = len(fam.universe)
    obj["states"] = len(fam.members)
    lines = [
        f"items {len(fam.universe)}",
        f"states {len(fam.members)}",
        f"knowledge structure {str(c.is_knowledge_structure).lower()}",
        f"knowledge space {str(c.is_knowledge_space).lower()}",
        f"quasi ordinal {str(c.is_quasi_ordinal).lower()}",
        f"topology {str(c.is_topology).lower()}",
    ]
    return _emit(args, obj, "\n".join(lines))


def _cmd_base(args) -> int:
    space = _space(args.family)
    base = irreducible_states(space)
    w = cardinal.weight(space)
    obj = {"base": [list(s.labels) for s in base.members], "weight": w}
    lines = [_fmt(s) for s in base.members]
    lines.append(f"weight {w}")
    return _emit(args, obj, "\n".join(lines))


def _cmd_closure(args) -> int:
    space = _space(args.family)
    a = _subset(space.universe, args.set)
    cl = operators.closure(space, a)
    itr = operators.interior(space, a)
    bd = operators.boundary(space, a)
    der = operators.derived_set(space, a)
    dense = operators.is_dense(space, a)
    obj = {
        "set": list(a.labels),
        "closure": list(cl.labels),
        "interior": list(itr.labels),
        "boundary": list(bd.labels),
        "derived": list(der.labels),
        "dense": dense,
    }
    lines = [
        f"set {_fmt(a)}",
        f"closure {_fmt(cl)}",
        f"interior {_fmt(itr)}",
        f"boundary {_fmt(bd)}",
        f"derived {_fmt(der)}",
        f"dense {str(dense).lower()}",
    ]
    return _emit(args, obj, "\n".join(lines))


def _cmd_fringe(args) -> int:
    space = _space(args.family)
    w = _subset(space.universe, args.state)
    rep = operators.fringes(space, w)
    obj = {
        "state": list(w.labels),
        "inner": list(rep.inner.labels),
        "outer": list(rep.outer.labels),
        "locally_closed": list(rep.full.labels),
    }
    lines = [
        f"state {_fmt(w)}",
        f"inner {_fmt(rep.inner)}",
        f"outer {_fmt(rep.outer)}",
        f"locally closed {_fmt(rep.full)}",
    ]
    return _emit(args, obj, "\n".join(lines))


def _cmd_separation(args) -> int:
    space = _space(args.family)
    p = separation.separation_profile(space)
    obj = p.to_obj()
    rows = [
        ("t0", p.t0),
        ("t1", p.t1),
        ("t2", p.t2),
        ("regular", p.regular_property),
        ("t3", p.t3),
        ("normal", p.normal_property),
        ("t4", p.t4),
        ("discriminative", p.discriminative),
        ("bi-discriminative", p.bi_discriminative),
        ("completely discriminative", p.completely_discriminative),
    ]
    lines = [f"{name} {str(val).lower()}" for name, val in rows]
    return _emit(args, obj, "\n".join(lines))


def _cmd_connectivity(args) -> int:
    space = _space(args.family)
    rep = connectivity.connectedness(space)
    clopen = connectivity.clopen_sets(space)
    tight = connectivity.is_tight_n_connected(space, 1)
    graded = connectivity.is_well_graded(space.states)
    obj = rep.to_obj()
    obj["clopen"] = [list(c.labels) for c in clopen]
    obj["tight_1_connected"] = tight
    obj["well_graded"] = graded
    lines = [f"connected {str(rep.connected).lower()}"]
    if rep.separation is not None:
        lines.append(
            f"separation {_fmt(rep.separation[0])} {_fmt(rep.separation[1])}"
        )
    lines.append("clopen " + " ".join(_fmt(c) for c in clopen))
    lines.append(f"tight 1-connected {str(tight).lower()}")
    lines.append(f"well graded {str(graded).lower()}")
    return _emit(args, obj, "\n".join(lines))


def _cmd_reduce(args) -> int:
    fam = _family(args.family)
    ks = KnowledgeStructure.from_family(fam)
    red = order.discriminative_reduction(ks)
    obj = red.to_obj()
    lines = ["classes " + " ".join(_fmt(c) for c in red.classes)]
    lines += [_fmt(s) for s in red.reduced.states.members]
    return _emit(args, obj, "\n".join(lines))


def _cmd_order(args) -> int:
    obj_in = _read(args.family)
    if isinstance(obj_in, dict) and "leq" in obj_in:
        qo = QuasiOrder.from_obj(obj_in)
        space = order.from_quasi_order(qo)
        obj = space.to_obj()
        lines = [_fmt(s) for s in space.states.members]
        return _emit(args, obj, "\n".join(lines))
    fam = SetFamily.from_obj(obj_in)
    space = PreTopology.from_family(fam)
    qo = order.to_quasi_order(space)
    obj = qo.to_obj()
    lines = [f"{a} <= {b}" for a, b in obj["leq"]]
    if not lines:
        lines = ["(discrete order)"]
    return _emit(args, obj, "\n".join(lines))


def _cmd_delineate(args) -> int:
    m = SkillMultimap.from_obj(_read(args.multimap))
    delin = skills.delineate(m)
    rep = skills.is_delineated_space(m)
    star = skills.star_condition(m)
    cd = skills.is_completely_discriminative_delineation(m)
    obj = {
        "states": [list(s.labels) for s in delin.states.members],
        "knowledge_space": rep.space,
        "characterization_agrees": rep.agree,
        "star_condition": star,
        "completely_discriminative": cd,
    }
    lines = [_fmt(s) for s in delin.states.members]
    lines.append(f"knowledge space {str(rep.space).lower()}")
    lines.append(f"characterization agrees {str(rep.agree).lower()}")
    lines.append(f"star condition {str(star).lower()}")
    lines.append(f"completely discriminative {str(cd).lower()}")
    return _emit(args, obj, "\n".join(lines))


def _cmd_primary_items(args) -> int:
    fam = _family(args.family)
    try:
        space = PreTopology.from_family(fam)
        base = irreducible_states(space)
    except PretopoError:
        space = union_closure(fam)
        base = SetFamily.from_masks(
            fam.universe, {s.mask for s in fam.members if not s.is_empty()}
        )
    if args.method == "greedy":
        tr = cardinal.greedy_primary_items(space)
        obj = {"method": "greedy", "D": list(tr.result.labels), "size": len(tr.result.labels)}
        obj["trace"] = tr.to_obj()
        lines = []
        for item, blk in tr.picked:
            lines.append(
                f"picked {item} block " + " ".join(_fmt(b) for b in blk.members)
            )
        lines.append(f"D = {_fmt(tr.result)}")
        lines.append(f"|D| = {len(tr.result.labels)}")
        return _emit(args, obj, "\n".join(lines))
    if args.method == "exact":
        k, d = cardinal.density_exact(space)
        obj = {"method": "exact", "D": list(d.labels), "size": k, "density": k}
        lines = [f"D = {_fmt(d)}", f"|D| = {k}", f"d(Q) = {k}"]
        return _emit(args, obj, "\n".join(lines))
    result, state = cardinal.matrix_primary_items(base)
    obj = {
        "method": "matrix",
        "D": list(result.labels),
        "size": len(result.labels),
        "state": state.to_obj(),
    }
    row0, cols0, t0 = _initial_matrix(base)
    final = state.final_submatrix()
    lines = [
        _render_matrix(row0, cols0, t0),
        "",
        _render_matrix(state.rows, state.cols, state.t),
        "",
        _render_matrix(state.rows[: len(final)], state.cols, final),
        "",
        f"D = {_fmt(result)}",
        f"|D| = {len(result.labels)}",
    ]
    return _emit(args, obj, "\n".join(lines))


def _cmd_map(args) -> int:
    x = _space(args.domain)
    y = _space(args.codomain)
    f = maps.PointMap.from_obj(_read(args.map), x.universe, y.universe)
    cls = maps.classify_map(f, x, y)
    witness = maps.pre_continuity_witness(f, x, y)
    obj = cls.to_obj()
    obj["witness"] = None if witness is None else list(witness.labels)
    quot = "n/a" if cls.pre_quotient is None else str(cls.pre_quotient).lower()
    lines = [
        f"pre-continuous {str(cls.pre_continuous).lower()}",
        f"pre-open {str(cls.pre_open).lower()}",
        f"pre-closed {str(cls.pre_closed).lower()}",
        f"pre-quotient {quot}",
        f"pre-homeomorphism {str(cls.pre_homeomorphism).lower()}",
    ]
    if witness is not None:
        lines.insert(1, f"witness {_fmt(witness)}")
    return _emit(args, obj, "\n".join(lines))


def _cmd_product(args) -> int:
    factors = [_space(path) for path in args.families]
    prod = maps.product(factors)
    obj = prod.to_obj()
    lines = [
        f"items {len(prod.universe)}",
        f"states {len(prod.states.members)}",
    ]
    return _emit(args, obj, "\n".join(lines))


def _cmd_mine(args) -> int:
    suite = "all" if args.suite == "all" else [s.strip() for s in args.suite.split(",")]
    reports = miner.audit(suite, args.n, seed=args.seed)
    text = miner.reports_to_json(reports)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    if args.format == "json":
        print(text, end="")
    else:
        width = max(len(r.theorem) for r in reports)
        for r in reports:
            line = (
                f"{r.theorem.ljust(width)}  {r.status:10s}  "
                f"checked={r.checked}  violations={len(r.violations)}"
            )
            print(line)
    return 0


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("table", "json"), default="table",
        help="output form (default: table)",
    )
    common.add_argument(
        "--bound", type=int, default=None,
        help="override the enumeration size guards",
    )
    p = argparse.ArgumentParser(
        prog="pretopo",
        description="Finite pre-topologies and knowledge spaces.",
    )
    sub = p.add_subparsers(dest="verb", required=True)

    sp = sub.add_parser("check", parents=[common], help="validate and classify a family")
    sp.add_argument("family")
    sp.set_defaults(fn=_cmd_check)

    sp = sub.add_parser("base", parents=[common], help="minimal pre-base and weight")
    sp.add_argument("family")
    sp.set_defaults(fn=_cmd_base)

    sp = sub.add_parser("closure", parents=[common], help="operators on a subset")
    sp.add_argument("family")
    sp.add_argument("set", help="comma-separated items; '-' for the empty set")
    sp.set_defaults(fn=_cmd_closure)

    sp = sub.add_parser("fringe", parents=[common], help="fringes of a state")
    sp.add_argument("family")
    sp.add_argument("state", help="comma-separated items; '-' for the empty set")
    sp.set_defaults(fn=_cmd_fringe)

    sp = sub.add_parser("separation", parents=[common], help="separation profile")
    sp.add_argument("family")
    sp.set_defaults(fn=_cmd_separation)

    sp = sub.add_parser("connectivity", parents=[common], help="connectedness report")
    sp.add_argument("family")
    sp.set_defaults(fn=_cmd_connectivity)

    sp = sub.add_parser("reduce", parents=[common], help="discriminative reduction")
    sp.add_argument("family")
    sp.set_defaults(fn=_cmd_reduce)

    sp = sub.add_parser("order", parents=[common], help="quasi-order of a space, or the space of a quasi-order")
    sp.add_argument("family")
    sp.set_defaults(fn=_cmd_order)

    sp = sub.add_parser("delineate", parents=[common], help="delineate a skill multimap")
    sp.add_argument("multimap")
    sp.set_defaults(fn=_cmd_delineate)

    sp = sub.add_parser("primary-items", parents=[common], help="dense item sets")
    sp.add_argument("family")
    sp.add_argument(
        "--method", choices=("greedy", "matrix", "exact"), default="greedy"
    )
    sp.set_defaults(fn=_cmd_primary_items)

    sp = sub.add_parser("map", parents=[common], help="classify a point map")
    sp.add_argument("map")
    sp.add_argument("domain")
    sp.add_argument("codomain")
    sp.set_defaults(fn=_cmd_map)

    sp = sub.add_parser("product", parents=[common], help="product of spaces")
    sp.add_argument("families", nargs="+")
    sp.set_defaults(fn=_cmd_product)

    sp = sub.add_parser("mine", parents=[common], help="audit theorems over enumerated spaces")
    sp.add_argument("-n", type=int, default=3, help="universe size")
    sp.add_argument("--suite", default="all", help="'all' or comma-separated theorem ids")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out", default=None, help="write the JSON report here")
    sp.set_defaults(fn=_cmd_mine)

    return p


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    if args.bound is not None:
        os.environ["PRETOPO_BOUND"] = str(args.bound)
    try:
        return args.fn(args)
    except json.JSONDecodeError as exc:
        print(
            f"JSONDecodeError: line {exc.lineno} column {exc.colno}: {exc.msg}",
            file=sys.stderr,
        )
        return 2
    except SchemaError as exc:
        print(f"SchemaError: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except PretopoError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
