"""Command line: ``orbindex {models,group,compute,decompose,verify}``.

Exit codes: 0 success, 2 verification mismatch, 3 invalid model or
parameters, 64 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import errors
from .engine import compute, decompose
from .groups import FiniteGroup, WallpaperGroup
from .strata import catalog, catalog_instances, dump_model, instantiate, load_model, validate_model

EXIT_OK = 0
EXIT_MISMATCH = 2
EXIT_INVALID = 3
EXIT_USAGE = 64

# errors that mean "the numbers disagree", everything else in the hierarchy is bad input
_MISMATCH_ERRORS = (
    errors.NotRational,
    errors.NonIntegral,
    errors.GroupingMismatch,
    errors.TwistMismatch,
    errors.ReconstructionFailure,
)


class UsageError(Exception):
    def __init__(self, message: str, usage: str):
        super().__init__(message)
        self.usage = usage


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2), which we reserve for mismatches
        raise UsageError(message, self.format_usage())


def _model_flags(p: argparse.ArgumentParser, required: bool = True) -> None:
    g = p.add_argument_group("model selection")
    g.add_argument("--model", help="catalog model id (football, torusrot, symprod_s2, wallpaper)")
    g.add_argument("--n", type=int, help="order parameter for football / torusrot")
    g.add_argument("--lift", choices=["+", "-"], help="spin lift for football (default +)")
    g.add_argument("--name", help="wallpaper group name p1 | p2 | p3 | p4 | p6")
    g.add_argument("--model-file", type=Path, help="custom model in the strata dump format")


def _format_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["human", "json"], default="human")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="orbindex", description="Exact orbifold index computations with an independent oracle.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("models", help="list catalog models, or dump the strata of one")
    _model_flags(p)
    p.add_argument("--dump-strata", action="store_true", help="print the strata of the selected model")
    _format_flag(p)

    p = sub.add_parser("group", help="inspect a group")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--wallpaper", metavar="NAME", help="p1 | p2 | p3 | p4 | p6")
    src.add_argument("--cyclic", type=int, metavar="N", help="the cyclic group Z/N")
    src.add_argument("--group-file", type=Path, help="generator permutations, one per line")
    p.add_argument("--classes", action="store_true", help="finite-order conjugacy classes")
    p.add_argument("--cyclic-classes", action="store_true", help="classes of finite cyclic subgroups")
    _format_flag(p)

    p = sub.add_parser("compute", help="compute an index with all cross-checks")
    _model_flags(p)
    p.add_argument("--operator", required=True, choices=["deRham", "dolbeault", "spin"])
    p.add_argument("--twist", default="O:0", help='e.g. "O:2", "O:1/chi:1", "sum:O:1,O:-1"')
    p.add_argument("--rho", default="trivial", help="trivial | regular | sign | chi:m")
    p.add_argument("--grouping", choices=["byElements", "byCyclic"], default="byCyclic")
    _format_flag(p)

    p = sub.add_parser("decompose", help="Uhat classes and reconstruction of twisted indices")
    _model_flags(p)
    p.add_argument("--operator", required=True, choices=["deRham", "dolbeault", "spin"])
    _format_flag(p)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--suite", choices=["catalog"], default="catalog")
    p.add_argument("--criterion", type=int, action="append", choices=range(1, 9), help="run only these criteria")
    _format_flag(p)
    return parser


def _select_model(args):
    if args.model_file is not None:
        if args.model is not None:
            raise UsageError("--model and --model-file are exclusive", "")
        try:
            text = args.model_file.read_text()
        except OSError as exc:
            raise errors.UnsupportedModel(f"cannot read {args.model_file}: {exc}")
        try:
            model = load_model(text)
        except (ValueError, KeyError, TypeError) as exc:
            raise errors.UnsupportedModel(f"malformed model file: {exc}")
        validate_model(model)
        return model
    if args.model is None:
        raise UsageError("one of --model or --model-file is required", "")
    params = {}
    if args.n is not None:
        params["n"] = args.n
    if args.lift is not None:
        params["lift"] = args.lift
    if args.name is not None:
        params["name"] = args.name
    if args.model in ("torusrot",) and "n" not in params:
        raise errors.UnsupportedParams("torusrot needs --n")
    if args.model == "wallpaper" and "name" not in params:
        raise errors.UnsupportedParams("wallpaper needs --name")
    try:
        model = instantiate(args.model, **params)
    except (TypeError, ValueError, KeyError) as exc:
        raise errors.UnsupportedParams(str(exc))
    validate_model(model)
    return model


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _cmd_models(args, out) -> int:
    if args.dump_strata:
        model = _select_model(args)
        out.write(dump_model(model) + "\n")
        return EXIT_OK
    if args.model or args.model_file:
        raise UsageError("model flags need --dump-strata", "")
    fams = catalog()
    instances = [{"model": mid, "params": p} for mid, p in catalog_instances()]
    if args.format == "json":
        out.write(json.dumps({"families": fams, "instances": instances}, sort_keys=True, indent=2) + "\n")
        return EXIT_OK
    for f in fams:
        params = ", ".join(f"{k}: {v}" for k, v in f["params"].items()) or "-"
        out.write(f"{f['id']:<11} {f['description']}\n")
        out.write(f"{'':<11} params: {params}; operators: {', '.join(f['operators'])}\n")
    return EXIT_OK


def _group_from_args(args):
    if args.wallpaper is not None:
        return WallpaperGroup(args.wallpaper)
    if args.cyclic is not None:
        if args.cyclic < 1:
            raise errors.InvalidGroup("cyclic group order must be positive")
        return FiniteGroup.cyclic(args.cyclic)
    try:
        text = args.group_file.read_text()
    except OSError as exc:
        raise errors.InvalidGroup(f"cannot read {args.group_file}: {exc}")
    return FiniteGroup.from_text(text, name=args.group_file.stem)


def _cmd_group(args, out) -> int:
    group = _group_from_args(args)
    show_el = args.classes or not args.cyclic_classes
    show_cy = args.cyclic_classes or not args.classes
    data: dict = {"group": group.describe()}
    if isinstance(group, WallpaperGroup):
        data["rotation_signature"] = list(group.rotation_signature())
    if show_el:
        data["classes"] = [
            {"representative": group.label(c.representative), "order": c.order, "size": c.size}
            for c in group.finite_order_classes()
        ]
    if show_cy:
        data["cyclic_classes"] = [
            {
                "label": c.label,
                "order": c.order,
                "centralizer_order": c.centralizer_order,
                "weyl_exponents": list(c.weyl_exponents),
                "weyl_orbits": [list(orbit) for _, orbit in group.weyl_orbits(c)],
            }
            for c in group.cyclic_subgroup_classes()
        ]
    if args.format == "json":
        out.write(json.dumps(data, sort_keys=True, indent=2) + "\n")
        return EXIT_OK
    out.write(data["group"] + "\n")
    if "rotation_signature" in data:
        out.write(f"rotation centers: {tuple(data['rotation_signature'])}\n")
    if show_el:
        out.write(f"\n{len(data['classes'])} finite-order classes\n")
        for c in data["classes"]:
            size = "inf" if c["size"] is None else c["size"]
            out.write(f"  {c['representative']:<28} order {c['order']}  size {size}\n")
    if show_cy:
        out.write(f"\n{len(data['cyclic_classes'])} cyclic-subgroup classes\n")
        for c in data["cyclic_classes"]:
            cent = "inf" if c["centralizer_order"] is None else c["centralizer_order"]
            out.write(f"  {c['label']:<28} |C| = {c['order']}  |Z(C)| = {cent}  W\\gen: {c['weyl_orbits']}\n")
    return EXIT_OK


def _cmd_compute(args, out) -> int:
    model = _select_model(args)
    report = compute(model, args.operator, args.twist, args.rho, grouping=args.grouping)
    if args.format == "json":
        out.write(report.to_json() + "\n")
    else:
        out.write(report.render_table() + "\n")
    if not report.ok:
        return EXIT_MISMATCH
    return EXIT_OK


def _cmd_decompose(args, out) -> int:
    model = _select_model(args)
    result = decompose(model, args.operator)
    d = result.to_dict()
    if args.format == "json":
        out.write(json.dumps(d, sort_keys=True, indent=2) + "\n")
    else:
        out.write(f"{d['model']}  operator={d['operator']}\n")
        for c in d["classes"]:
            out.write(f"\nclass {c['class']} (|C| = {c['order']}), components {', '.join(c['components'])}\n")
            for a, per in c["functionals"].items():
                for name, phi in zip(c["components"], per):
                    vals = ", ".join(f"{m}: {v}" for m, v in phi.items())
                    out.write(f"  g^{a} on {name}: {vals}\n")
            out.write(f"  W-equivariant: {c['w_equivariant']}\n")
        passed = sum(1 for c in d["checks"] if c["ok"])
        out.write(f"\nreconstruction: {passed}/{len(d['checks'])} checks pass over {len(d['family'])} twists\n")
        out.write(f"family rank {d['rank']} of {d['target_dim']} ({'separating' if d['separating'] else 'not separating'})\n")
        for c in d["checks"]:
            if not c["ok"]:
                out.write(f"FAIL {c['name']}\n")
        out.write(f"verdict : {d['verdict']}\n")
    return EXIT_OK if result.passed else EXIT_MISMATCH


def _cmd_verify(args, out) -> int:
    from .verify import run_suite

    echo = None if args.format == "json" else (lambda line: (out.write(line + "\n"), out.flush()))
    results = run_suite(sorted(set(args.criterion)) if args.criterion else None, echo=echo)
    ok = all(r.passed for r in results)
    if args.format == "json":
        payload = {"suite": args.suite, "criteria": [r.to_dict() for r in results], "verdict": "ok" if ok else "mismatch"}
        out.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        out.write(f"verdict : {'ok' if ok else 'mismatch'}\n")
    return EXIT_OK if ok else EXIT_MISMATCH


COMMANDS = {
    "models": _cmd_models,
    "group": _cmd_group,
    "compute": _cmd_compute,
    "decompose": _cmd_decompose,
    "verify": _cmd_verify,
}


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a command is required", parser.format_usage())
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write((exc.usage or parser.format_usage()) + f"orbindex: error: {exc}\n")
        return EXIT_USAGE
    except _MISMATCH_ERRORS as exc:
        err.write(f"orbindex: verification mismatch: {type(exc).__name__}: {exc}\n")
        return EXIT_MISMATCH
    except errors.OrbIndexError as exc:
        err.write(f"orbindex: invalid model or parameters: {type(exc).__name__}: {exc}\n")
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
