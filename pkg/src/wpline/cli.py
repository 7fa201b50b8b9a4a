"""Batch command line front end.

Commands read a JSON spec file describing a weighted projective line
and emit line-oriented reports with a final machine-readable JSON
summary line.  Identical spec and command give byte-identical output.
Exit codes: 0 success, 1 validation or usage error, 2 check failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import checks, extquiver, planner
from .fields import field_from_descriptor
from .gradedmod import WeightedLineData
from .lgroup import WeightError
from .tubecat import PointDescriptor

__all__ = ["SpecError", "SpecFile", "parse_spec", "run_command", "main"]

USAGE = (
    "usage: wpline {info|quiver|contract|chain|check|graded} --spec FILE\n"
    "             [--suite NAME] [--point J] [--window N] [--seed S]\n"
    "             [--dot] [--json] [--figure PATH]\n"
)


class SpecError(ValueError):
    """Spec file rejected; carries (line, field, reason) diagnostics."""

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(
            f"line={l} field={f} reason={r}" for l, f, r in self.diagnostics
        ))


@dataclass(frozen=True)
class SpecFile:
    """Validated spec: weights, points, field, window bound, strategy."""

    weights: tuple[int, ...]
    points: tuple[tuple[int, int], ...]
    field_desc: str = "F101"
    window: int = 6
    strategy: str = "largest_first"

    def data(self) -> WeightedLineData:
        return WeightedLineData(
            self.weights, self.points, field_from_descriptor(self.field_desc)
        )

    def exceptional_points(self) -> list[PointDescriptor]:
        return [
            PointDescriptor.exceptional(i, p)
            for i, p in enumerate(self.weights, start=1)
        ]


def parse_spec(text: str) -> SpecFile:
    """Parse and validate a spec; collect every diagnostic before failing."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError([(exc.lineno, "-", f"invalid JSON: {exc.msg}")]) from None

    diags = []
    if not isinstance(raw, dict):
        raise SpecError([(1, "-", "spec must be a JSON object")])

    weights = raw.get("weights", [])
    if not isinstance(weights, list) or not all(
        isinstance(w, int) for w in weights
    ):
        diags.append((None, "weights", "must be a list of integers"))
        weights = []
    elif any(w < 1 for w in weights):
        diags.append((None, "weights", "every weight must be >= 1"))

    points = raw.get("points", [])
    if not isinstance(points, list) or not all(
        isinstance(pt, list) and len(pt) == 2
        and all(isinstance(x, int) for x in pt)
        for pt in points
    ):
        diags.append((None, "points", "must be a list of coordinate pairs"))
        points = []
    elif len(points) != len(weights):
        diags.append((None, "points",
                      f"{len(points)} points for {len(weights)} weights"))

    field_desc = raw.get("field", "F101")
    try:
        field_obj = field_from_descriptor(field_desc)
    except (ValueError, TypeError) as exc:
        diags.append((None, "field", str(exc)))
        field_obj = None

    window = raw.get("window", 6)
    if not isinstance(window, int) or window < 0:
        diags.append((None, "window", "must be a non-negative integer"))
        window = 6

    strategy = raw.get("strategy", "largest_first")
    if strategy not in ("largest_first", "round_robin"):
        diags.append((None, "strategy",
                      "must be largest_first or round_robin"))

    unknown = set(raw) - {"weights", "points", "field", "window", "strategy"}
    for key in sorted(unknown):
        diags.append((None, key, "unknown field"))

    if not diags and field_obj is not None and len(points) == len(weights):
        try:
            WeightedLineData(tuple(weights),
                             tuple(tuple(pt) for pt in points), field_obj)
        except WeightError as exc:
            msg = str(exc)
            reason = "points not distinct" if "not distinct" in msg else msg
            diags.append((None, "points", reason))

    if diags:
        raise SpecError(diags)
    return SpecFile(tuple(weights), tuple(tuple(pt) for pt in points),
                    field_desc, window, strategy)


def load_spec(path: str) -> SpecFile:
    with open(path, encoding="utf-8") as fh:
        return parse_spec(fh.read())


def _emit(out, line: str = ""):
    out.write(line + "\n")


def _summary(out, obj: dict):
    _emit(out, json.dumps(obj, sort_keys=True, separators=(",", ":")))


def _quiver_text(q, as_json: bool) -> str:
    if as_json:
        return json.dumps(extquiver.to_json_dict(q), sort_keys=True,
                          separators=(",", ":")) + "\n"
    return extquiver.to_dot(q)


def cmd_info(spec: SpecFile, args, out) -> int:
    r = planner.reduction_steps(spec.weights)
    _emit(out, "weighted projective line")
    _emit(out, "weights\t" + ",".join(str(w) for w in spec.weights))
    _emit(out, "points\t" + " ".join(f"[{a}:{b}]" for a, b in spec.points))
    _emit(out, "field\t" + spec.field_desc)
    _emit(out, "window\t" + str(spec.window))
    for i, p in enumerate(spec.weights, start=1):
        simples = " ".join(f"S_{i},{j}" for j in range(1, p + 1))
        _emit(out, f"tube\t{i}\trank={p}\t{simples}")
    _emit(out, "simples\t" + str(sum(spec.weights)))
    _emit(out, "reduction_steps\t" + str(r))
    _summary(out, {
        "cmd": "info",
        "weights": list(spec.weights),
        "points": [list(pt) for pt in spec.points],
        "field": spec.field_desc,
        "window": spec.window,
        "simples": sum(spec.weights),
        "r": r,
    })
    return 0


def cmd_quiver(spec: SpecFile, args, out) -> int:
    q = extquiver.quiver_of(spec.exceptional_points())
    out.write(_quiver_text(q, args.json and not args.dot))
    if args.figure:
        from .report import save_quiver_figure

        save_quiver_figure(q, args.figure)
    return 0


def cmd_contract(spec: SpecFile, args, out) -> int:
    weights = list(spec.weights)
    j = args.point
    if j is None:
        candidates = [i for i, p in enumerate(weights, start=1) if p > 1]
        if not candidates:
            _emit(out, "nothing to contract: all weights are 1")
            _summary(out, {"cmd": "contract", "point": None,
                           "weights": weights})
            return 0
        j = max(candidates, key=lambda i: (weights[i - 1], -i))
    if not 1 <= j <= len(weights):
        _emit(out, f"error: point index {j} outside 1..{len(weights)}")
        return 1
    if weights[j - 1] < 2:
        _emit(out, f"error: weight at point {j} is already 1")
        return 1
    weights[j - 1] -= 1
    reduced = SpecFile(tuple(weights), spec.points, spec.field_desc,
                       spec.window, spec.strategy)
    _emit(out, f"contracted\t{j}")
    _emit(out, "weights\t" + ",".join(str(w) for w in weights))
    q = extquiver.quiver_of(reduced.exceptional_points())
    out.write(_quiver_text(q, args.json and not args.dot))
    _summary(out, {"cmd": "contract", "point": j, "weights": weights})
    if args.figure:
        from .report import save_quiver_figure

        save_quiver_figure(q, args.figure)
    return 0


def cmd_chain(spec: SpecFile, args, out) -> int:
    plan = planner.reduction_plan(spec.weights, spec.strategy)
    vertices = [sum(w) for w in plan.chain]
    _emit(out, "step\tpoint\tweights\tvertices")
    for k, w in enumerate(plan.chain):
        point = str(plan.steps[k - 1]) if k else "-"
        _emit(out, f"{k}\t{point}\t{','.join(str(x) for x in w)}\t{vertices[k]}")
    _summary(out, {**plan.to_json_dict(), "cmd": "chain",
                   "vertices": vertices})
    if args.figure:
        from .report import save_chain_figure

        save_chain_figure(plan.chain, vertices, args.figure)
    return 0


def cmd_check(spec: SpecFile, args, out) -> int:
    suite = args.suite or "all"
    valid = ("all",) + checks.SUITE_NAMES
    if suite not in valid:
        _emit(out, f"error: unknown suite {suite}; choose from {'|'.join(valid)}")
        return 1
    window = args.window if args.window is not None else spec.window
    results = checks.run_suite(suite, spec.data(), window, args.seed)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        _emit(out, f"{r.group}\t{r.name}\t{status}\t{r.detail}")
    n_pass = sum(1 for r in results if r.passed)
    n_fail = len(results) - n_pass
    _summary(out, {"cmd": "check", "suite": suite, "pass": n_pass,
                   "fail": n_fail})
    if args.figure:
        from .report import save_check_figure

        save_check_figure(results, args.figure)
    return 0 if n_fail == 0 else 2


def cmd_graded(spec: SpecFile, args, out) -> int:
    window = args.window if args.window is not None else spec.window
    results = checks.suite_graded(spec.data(), window, args.seed)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        _emit(out, f"{r.group}\t{r.name}\t{status}\t{r.detail}")
    n_pass = sum(1 for r in results if r.passed)
    n_fail = len(results) - n_pass
    _summary(out, {"cmd": "graded", "window": window, "seed": args.seed,
                   "pass": n_pass, "fail": n_fail})
    return 0 if n_fail == 0 else 2


COMMANDS = {
    "info": cmd_info,
    "quiver": cmd_quiver,
    "contract": cmd_contract,
    "chain": cmd_chain,
    "check": cmd_check,
    "graded": cmd_graded,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ValueError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="wpline", add_help=True)
    sub = parser.add_subparsers(dest="command")
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--spec", required=True)
        p.add_argument("--suite", default=None)
        p.add_argument("--point", type=int, default=None)
        p.add_argument("--window", type=int, default=None)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--dot", action="store_true")
        p.add_argument("--json", action="store_true")
        p.add_argument("--figure", default=None)
    return parser


def run_command(argv, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except ValueError as exc:
        _emit(out, f"error: {exc}")
        out.write(USAGE)
        return 1
    if args.command is None:
        out.write(USAGE)
        return 1
    try:
        spec = load_spec(args.spec)
    except SpecError as exc:
        for line, fld, reason in exc.diagnostics:
            where = "-" if line is None else str(line)
            _emit(out, f"diagnostic\tline={where}\tfield={fld}\treason={reason}")
        _summary(out, {"cmd": args.command, "error": "invalid spec",
                       "diagnostics": len(exc.diagnostics)})
        return 1
    except OSError as exc:
        _emit(out, f"error: cannot read spec: {exc}")
        return 1
    return COMMANDS[args.command](spec, args, out)


def main(argv=None) -> int:
    return run_command(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
