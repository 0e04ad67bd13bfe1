"""Command-line front end.

Exit codes: 0 success, 1 infeasible or negative verdicts (an ordering
violation, an obstruction found, an enumeration cap exceeded), 2 usage or
parse errors. Output is line-oriented `key: value` pairs, or one JSON
object with --json. Timing fields are only emitted under --timings so
that identical inputs produce byte-identical output.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Optional

from . import __version__
from .errors import IntervalSatError, ParseError
from .formula import Clause, ClsElem, Formula, MixedOrdering, SideOrders, VarElem
from .hardness import (
    ThreePartitionInstance,
    check_representation,
    gen_3partition_bigraph,
    random_k_interval_instance,
    representation_from_partition,
)
from .ioformats import (
    emit_dimacs,
    emit_mixed_ordering,
    parse_dimacs,
    parse_mixed_ordering,
    parse_orders,
)
from .merge import min_merge_k
from .oracles import brute_count, brute_max_weight, brute_min_merge_k
from .ordering import find_obstruction, needed_sets, verify_interval_ordering
from .expansion import expand_with_mapping
from .solver import PS_VALUE_VAR_CAP, ps_width, solve_detailed


class _Output:
    """Collects fields once, emits either plain lines or one JSON object."""

    def __init__(self, command: str, as_json: bool):
        self.as_json = as_json
        self.obj: dict = {"command": command}
        self.lines: list[str] = []

    def add(self, key: str, value, plain: Optional[str] = None):
        self.obj[key] = value
        if plain is None:
            plain = f"{key}: {value}"
        self.lines.append(plain)

    def emit(self):
        if self.as_json:
            print(json.dumps(self.obj))
        else:
            for line in self.lines:
                print(line)


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _load_formula(path: str) -> Formula:
    try:
        return parse_dimacs(_read(path))
    except IntervalSatError as exc:
        raise ParseError(f"{path}: {exc}") from exc


def _load_orders(path: Optional[str], formula: Formula) -> SideOrders:
    if path is None:
        return SideOrders.identity(formula)
    try:
        return parse_orders(_read(path), formula)
    except IntervalSatError as exc:
        raise ParseError(f"{path}: {exc}") from exc


def _load_ordering(path: str, formula: Formula) -> MixedOrdering:
    try:
        pi = parse_mixed_ordering(_read(path), formula)
        pi.validate_for(formula)
    except IntervalSatError as exc:
        raise ParseError(f"{path}: {exc}") from exc
    return pi


def _ordering_str(pi: MixedOrdering) -> str:
    return emit_mixed_ordering(pi).strip()


def _strip_empty_clauses(formula: Formula, so: SideOrders):
    """Drop empty clauses before merging (they have no lowest variable).

    Returns the reduced formula and orders plus the removed original ids
    and a reduced-to-original id map for display.
    """
    removed = [c.id for c in formula.clauses if not c.literals]
    if not removed:
        return formula, so, [], {c.id: c.id for c in formula.clauses}
    kept = [c for c in formula.clauses if c.literals]
    reduced = Formula(formula.n, tuple(
        Clause(i + 1, c.literals, c.weight) for i, c in enumerate(kept)))
    to_orig = {i + 1: c.id for i, c in enumerate(kept)}
    to_reduced = {orig: new for new, orig in to_orig.items()}
    cla_order = tuple(to_reduced[c] for c in so.cla_order if c not in set(removed))
    return reduced, SideOrders(so.var_order, cla_order), removed, to_orig


def _merge_for_cli(formula: Formula, so: SideOrders):
    """min_merge_k after stripping; the display ordering uses original ids."""
    reduced, reduced_so, removed, to_orig = _strip_empty_clauses(formula, so)
    result = min_merge_k(reduced, reduced_so)
    display = MixedOrdering(tuple(
        e if isinstance(e, VarElem) else ClsElem(to_orig[e.cls])
        for e in result.ordering.elements))
    return reduced, result, display, removed


def _report_removed(out: "_Output", removed: list[int]):
    if removed:
        out.add("emptyClauses", removed,
                plain="empty clauses removed: " + " ".join(f"c{c}" for c in removed))


def _maybe_timings(out: _Output, args, started: float):
    if getattr(args, "timings", False):
        elapsed = round(time.perf_counter() - started, 6)
        out.add("timings", {"total_s": elapsed}, plain=f"timings: total_s={elapsed}")


def cmd_merge(args) -> int:
    started = time.perf_counter()
    formula = _load_formula(args.formula)
    so = _load_orders(args.orders, formula)
    _, result, display, removed = _merge_for_cli(formula, so)
    out = _Output("merge", args.json)
    _report_removed(out, removed)
    out.add("k", result.k)
    out.add("ordering", _ordering_str(display))
    _maybe_timings(out, args, started)
    out.emit()
    return 0


def cmd_check(args) -> int:
    formula = _load_formula(args.formula)
    pi = _load_ordering(args.ordering, formula)
    verdict = verify_interval_ordering(formula, pi)
    needed = needed_sets(formula, pi)
    out = _Output("check", args.json)
    out.add("ok", verdict.ok, plain=f"ok: {'true' if verdict.ok else 'false'}")
    if verdict.violation is not None:
        v = verdict.violation
        out.add("violation",
                {"clause": v.clause, "var": v.var, "condition": v.condition.value},
                plain=f"violation: c{v.clause} x{v.var} {v.condition.value}")
    out.add("k", max((len(s) for s in needed.values()), default=0))
    needed_json = {str(cid): sorted(vs) for cid, vs in sorted(needed.items())}
    out.obj["needed"] = needed_json
    for cid, vs in sorted(needed.items()):
        out.lines.append(
            f"needed c{cid}: {' '.join(f'x{v}' for v in sorted(vs))}".rstrip())
    out.emit()
    return 0 if verdict.ok else 1


def cmd_obstruct(args) -> int:
    formula = _load_formula(args.formula)
    so = _load_orders(args.orders, formula)
    obstruction = find_obstruction(formula, so)
    out = _Output("obstruct", args.json)
    if obstruction is None:
        out.add("obstruction", None, plain="obstruction: none")
        out.emit()
        return 0
    o = obstruction
    fields = {"kind": o.kind, "x": o.x, "z": o.z, "A": o.cla_a, "C": o.cla_c}
    plain = f"obstruction: {o.kind} x=x{o.x}"
    if o.kind == "RightPattern":
        fields["y"] = o.y
        fields["B"] = o.cla_b
        plain += f" y=x{o.y}"
    plain += f" z=x{o.z} A=c{o.cla_a}"
    if o.kind == "RightPattern":
        plain += f" B=c{o.cla_b}"
    plain += f" C=c{o.cla_c}"
    out.add("obstruction", fields, plain=plain)
    out.emit()
    return 1


def _emit_solve(out: _Output, formula: Formula, pi: MixedOrdering, args,
                unsatisfiable: bool = False):
    """Run the sweep and add answer fields. `unsatisfiable` forces the model
    count to zero (set when empty clauses were stripped before merging)."""
    report = solve_detailed(formula, pi, args.mode)
    if args.mode == "count":
        answer = 0 if unsatisfiable else report.answer
        out.add("answer", answer, plain=f"models: {answer}")
    else:
        out.add("answer", report.answer, plain=f"weight: {report.answer}")
        witness = " ".join(
            str(x if report.witness[x] else -x) for x in sorted(report.witness))
        out.add("witness", witness, plain=f"witness: {witness}")
    out.add("stateMax", report.max_live_states)
    if args.pswidth:
        out.add("psWidth", ps_width(formula, pi, args.cap))
    return report


def cmd_solve(args) -> int:
    started = time.perf_counter()
    formula = _load_formula(args.formula)
    if not args.ordering and args.orders is None:
        raise ParseError("solve requires --ordering or --orders")
    out = _Output("solve", args.json)
    if args.ordering:
        # the sweep handles empty clauses natively when given an ordering
        pi = _load_ordering(args.ordering, formula)
        _emit_solve(out, formula, pi, args)
    else:
        so = _load_orders(args.orders, formula)
        reduced, result, _, removed = _merge_for_cli(formula, so)
        _report_removed(out, removed)
        _emit_solve(out, reduced, result.ordering, args,
                    unsatisfiable=bool(removed))
    _maybe_timings(out, args, started)
    out.emit()
    return 0


def cmd_pipeline(args) -> int:
    started = time.perf_counter()
    formula = _load_formula(args.formula)
    so = _load_orders(args.orders, formula)
    reduced, result, display, removed = _merge_for_cli(formula, so)
    out = _Output("pipeline", args.json)
    _report_removed(out, removed)
    out.add("k", result.k)
    out.add("ordering", _ordering_str(display))
    _emit_solve(out, reduced, result.ordering, args, unsatisfiable=bool(removed))
    _maybe_timings(out, args, started)
    out.emit()
    return 0


def cmd_expand(args) -> int:
    formula = _load_formula(args.formula)
    pi = _load_ordering(args.ordering, formula)
    expanded, pi2, mapping = expand_with_mapping(formula, pi)
    text = emit_dimacs(expanded)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    if args.map:
        lines = [f"parent: {orig} -> {' '.join(str(i) for i in ids)}"
                 for orig, ids in sorted(mapping.items())]
        Path(args.map).write_text("\n".join(lines) + "\n", encoding="utf-8")
    if args.out_ordering:
        Path(args.out_ordering).write_text(emit_mixed_ordering(pi2), encoding="utf-8")
    if not args.out and not args.json:
        sys.stdout.write(text)
        return 0
    out = _Output("expand", args.json)
    out.add("clauses", expanded.m)
    if args.out:
        out.add("out", args.out)
    if args.map:
        out.add("map", args.map)
    if args.out_ordering:
        out.add("outOrdering", args.out_ordering, plain=f"out-ordering: {args.out_ordering}")
    out.emit()
    return 0


def cmd_pswidth(args) -> int:
    formula = _load_formula(args.formula)
    pi = _load_ordering(args.ordering, formula)
    out = _Output("pswidth", args.json)
    out.add("psWidth", ps_width(formula, pi, args.cap))
    out.emit()
    return 0


def cmd_oracle(args) -> int:
    formula = _load_formula(args.formula)
    out = _Output("oracle", args.json)
    if args.kind == "count":
        count = brute_count(formula, args.var_cap)
        out.add("answer", count, plain=f"models: {count}")
    elif args.kind == "maxsat":
        weight, witness = brute_max_weight(formula, args.var_cap)
        out.add("answer", weight, plain=f"weight: {weight}")
        text = " ".join(str(x if witness[x] else -x) for x in sorted(witness))
        out.add("witness", text)
    else:
        so = _load_orders(args.orders, formula)
        reduced, reduced_so, removed, _ = _strip_empty_clauses(formula, so)
        _report_removed(out, removed)
        out.add("k", brute_min_merge_k(reduced, reduced_so, args.interleave_cap))
    out.emit()
    return 0


def cmd_gen(args) -> int:
    if args.what == "3part":
        return _gen_3part(args)
    return _gen_random(args)


def _gen_3part(args) -> int:
    sizes = tuple(int(s) for s in args.sizes.split(","))
    inst = ThreePartitionInstance(args.b, sizes)
    graph = gen_3partition_bigraph(inst)
    lines = [f"p labeled-bigraph {graph.vertex_count} {len(graph.edges)}"]
    for v in sorted(graph.base):
        lines.append(f"v {v} {graph.labels[v]} base")
    for v in sorted(graph.designated):
        lines.append(f"v {v} {graph.labels[v]} designated")
    for d, o in sorted(graph.edges):
        lines.append(f"e {d} {o}")
    text = "\n".join(lines) + "\n"

    rep = None
    if args.partition:
        groups = [[int(x) for x in part.split(",")]
                  for part in args.partition.split(";")]
        rep = representation_from_partition(inst, groups)
        if args.rep:
            rep_lines = [f"{v} {lo} {hi}" for v, (lo, hi) in sorted(rep.items())]
            Path(args.rep).write_text("\n".join(rep_lines) + "\n", encoding="utf-8")
        if args.figure:
            from .report import render_interval_rep
            render_interval_rep(args.figure, rep, graph)
    elif args.rep or args.figure:
        raise ParseError("--rep/--figure require --partition")

    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    elif not args.json:
        sys.stdout.write(text)
        return 0
    out = _Output("gen", args.json)
    out.add("vertices", graph.vertex_count)
    out.add("edges", len(graph.edges))
    if rep is not None:
        verdict = check_representation(graph, rep, 1)
        out.add("representationOk", verdict.ok,
                plain=f"representation-ok: {'true' if verdict.ok else 'false'}")
    for key in ("out", "rep", "figure"):
        value = getattr(args, key)
        if value:
            out.add(key, value)
    out.emit()
    return 0


def _gen_random(args) -> int:
    formula, pi = random_k_interval_instance(
        args.n, args.m, args.k, args.width, args.seed)
    Path(args.out).write_text(emit_dimacs(formula), encoding="utf-8")
    Path(args.out_ordering).write_text(emit_mixed_ordering(pi), encoding="utf-8")
    out = _Output("gen", args.json)
    out.add("n", formula.n)
    out.add("m", formula.m)
    out.add("out", args.out)
    out.add("outOrdering", args.out_ordering, plain=f"out-ordering: {args.out_ordering}")
    out.emit()
    return 0


def cmd_report(args) -> int:
    from .report import render_cut_profile, write_cut_profile_csv
    from .solver import ps_profile
    formula = _load_formula(args.formula)
    if args.ordering:
        pi = _load_ordering(args.ordering, formula)
    elif args.orders is not None:
        so = _load_orders(args.orders, formula)
        formula, result, _, _ = _merge_for_cli(formula, so)
        pi = result.ordering
    else:
        raise ParseError("report requires --ordering or --orders")
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    csv_path = outdir / "cut_profile.csv"
    png_path = outdir / "cut_profile.png"
    report = solve_detailed(formula, pi, args.mode)
    profile = ps_profile(formula, pi, args.cap) if args.pswidth else None
    write_cut_profile_csv(csv_path, formula, pi, report, profile)
    render_cut_profile(png_path, formula, pi, report, profile)
    out = _Output("report", args.json)
    if args.mode == "count":
        out.add("answer", report.answer, plain=f"models: {report.answer}")
    else:
        out.add("answer", report.answer, plain=f"weight: {report.answer}")
    out.add("stateMax", report.max_live_states)
    if profile is not None:
        out.add("psWidth", max(max(a, b) for a, b in profile))
    out.add("csv", str(csv_path))
    out.add("figure", str(png_path))
    out.emit()
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="intervalsat",
        description="Interval-structure analysis and exact solving for CNF formulas")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, ordering=False, orders=False, mode=False, cap=False):
        p.add_argument("formula", help="DIMACS cnf/wcnf file")
        if ordering:
            p.add_argument("--ordering", help="mixed ordering file (x<i>/c<j> tokens)")
        if orders:
            p.add_argument("--orders", help="side orders file (v/c lines); identity when omitted")
        if mode:
            p.add_argument("--mode", choices=("count", "maxsat"), default="count")
        if cap:
            p.add_argument("--cap", type=int, default=PS_VALUE_VAR_CAP,
                           help="per-fragment variable cap for ps enumeration")
        p.add_argument("--json", action="store_true", help="one JSON object on stdout")
        p.add_argument("--timings", action="store_true",
                       help="include wall-clock timings (non-reproducible output)")

    p = sub.add_parser("merge", help="minimum-k merge of two side orders")
    common(p, orders=True)
    p.set_defaults(func=cmd_merge)

    p = sub.add_parser("check", help="verify an ordering and list needed edges")
    common(p, ordering=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("obstruct", help="find a merge obstruction pattern")
    common(p, orders=True)
    p.set_defaults(func=cmd_obstruct)

    p = sub.add_parser("solve", help="exact #SAT or weighted MaxSAT over an ordering")
    common(p, ordering=True, orders=True, mode=True, cap=True)
    p.add_argument("--pswidth", action="store_true", help="also compute ps-width")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("pipeline", help="merge to minimum k, then solve")
    common(p, orders=True, mode=True, cap=True)
    p.add_argument("--pswidth", action="store_true", help="also compute ps-width")
    p.set_defaults(func=cmd_pipeline)

    p = sub.add_parser("expand", help="expand clauses over needed variables")
    common(p, ordering=True)
    p.add_argument("--out", help="write expanded DIMACS here instead of stdout")
    p.add_argument("--map", help="write parent-to-expanded clause id map here")
    p.add_argument("--out-ordering", dest="out_ordering",
                   help="write the expanded ordering here")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("pswidth", help="ps-width of an ordering")
    common(p, ordering=True, cap=True)
    p.set_defaults(func=cmd_pswidth)

    p = sub.add_parser("oracle", help="brute-force reference computations")
    p.add_argument("kind", choices=("count", "maxsat", "mergek"))
    common(p, orders=True)
    p.add_argument("--var-cap", type=int, default=20, dest="var_cap")
    p.add_argument("--interleave-cap", type=int, default=10 ** 6, dest="interleave_cap")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="instance generators")
    gensub = p.add_subparsers(dest="what", required=True)

    g = gensub.add_parser("3part", help="3-partition recognition gadget")
    g.add_argument("--b", type=int, required=True)
    g.add_argument("--sizes", required=True, help="comma-separated element sizes")
    g.add_argument("--out", help="write labeled edge list here instead of stdout")
    g.add_argument("--partition", help="solution triples like '1,2,3;4,5,6'")
    g.add_argument("--rep", help="write interval representation (vertex lo hi lines)")
    g.add_argument("--figure", help="render the representation to this image file")
    g.add_argument("--json", action="store_true")
    g.set_defaults(func=cmd_gen, what="3part")

    g = gensub.add_parser("random", help="random bounded-width instance with ordering")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--width", type=int, required=True, help="max clause width")
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--out", required=True, help="DIMACS output path")
    g.add_argument("--out-ordering", dest="out_ordering", required=True,
                   help="ordering output path")
    g.add_argument("--json", action="store_true")
    g.set_defaults(func=cmd_gen, what="random")

    p = sub.add_parser("report", help="render cut-profile figure and CSV")
    common(p, ordering=True, orders=True, mode=True, cap=True)
    p.add_argument("--outdir", required=True)
    p.add_argument("--pswidth", action="store_true",
                   help="include per-cut ps-values (enumerative)")
    p.set_defaults(func=cmd_report)

    return parser


def dispatch(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except IntervalSatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
