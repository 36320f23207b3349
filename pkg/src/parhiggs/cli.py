"""Command-line front end.

Exit codes: 0 ok, 2 usage or invalid input, 3 weights on a wall (or a
codimension-2 collision), 4 internal consistency failure. Errors go to
stderr as one JSON object.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterable, Optional, Sequence

from . import __version__
from .arrangement import (
    chamber_of, enumerate_chambers, enumerate_walls, fusion_nonempty, is_vanishing_wall,
    null_witnesses, on_walls, perturb, segment_crossings,
)
from .betti import euler_characteristic, parabolic_poincare, poincare_report
from .checks import SUITES, run_suite
from .errors import ConsistencyError, InvalidInput, NonGenericWeights, OnWall, ParHiggsError
from .exactmath import format_fraction, parse_fraction
from .morse import cover_poincare, enumerate_strata
from .parabolic import Curve, WeightVector, parse_evector, parse_weights
from .stability import (
    SplitData, exists_semistable_higgs, exists_semistable_pair, exists_stable_higgs,
    exists_stable_pair, p1_three_classify,
)

EXIT_OK, EXIT_USAGE, EXIT_NONGENERIC, EXIT_CONSISTENCY = 0, 2, 3, 4


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    genus: Optional[int] = None
    points: Optional[int] = None
    weights: Optional[WeightVector] = None
    format: str = "json"
    K: int = 16
    jobs: int = 1


@dataclass
class Output:
    obj: Any                            # JSON payload
    rows: Optional[list[dict]] = None   # for csv/table
    text: Optional[str] = None          # plain rendering, overrides rows for table


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# config file: key = value lines, '#' comments

CONFIG_KEYS = {"genus", "points", "weights", "format", "K", "jobs", "from", "to", "perturb",
               "degL", "e", "suite"}


def read_config(path: str) -> dict[str, str]:
    out = {}
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise InvalidInput(f"cannot read config {path}: {exc}") from exc
    for num, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line or line.startswith("["):
            continue
        if "=" not in line:
            raise InvalidInput(f"{path}:{num}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        value = value.strip('"').strip("'")
        key = key.replace("-", "_")
        if key == "grid":
            key = "K"
        if key not in CONFIG_KEYS:
            raise InvalidInput(f"{path}:{num}: unknown key {key!r}")
        out[key] = value
    return out


def _frac(q: Fraction) -> str:
    return format_fraction(q)


def _poly(p) -> list[str]:
    return [str(c) for c in p.coeffs]


def _evec(e) -> str:
    return "".join(map(str, e))


# commands

def cmd_walls(cfg: RunConfig, ns) -> Output:
    curve = Curve(cfg.genus, cfg.points)
    objs, rows = [], []
    for wl in enumerate_walls(curve):
        o = wl.to_json_obj()
        if curve.g == 0:
            o["vanishing"] = is_vanishing_wall(wl, curve)
        objs.append(o)
        rows.append({"d": wl.d, "e": _evec(wl.e), **({"vanishing": o["vanishing"]} if curve.g == 0 else {})})
    return Output({"genus": curve.g, "points": curve.n, "count": len(objs), "walls": objs}, rows)


def cmd_chamber(cfg: RunConfig, ns) -> Output:
    w = _need_weights(cfg)
    walls = on_walls(w)
    if walls:
        raise OnWall(walls[0], f"weights {w} lie on {len(walls)} wall(s), first {walls[0]}")
    cid = chamber_of(w)
    obj = {"weights": str(w), "chamber": cid.key(),
           "signs": [{"wall": wl.to_json_obj(), "sign": s} for wl, s in zip(cid.walls, cid.signs)]}
    if w.g == 0:
        obj["null"] = bool(null_witnesses(w))
        obj["null_witnesses"] = [list(e) for e in null_witnesses(w)]
    rows = [{"d": wl.d, "e": _evec(wl.e), "sign": "+" if s > 0 else "-"}
            for wl, s in zip(cid.walls, cid.signs)]
    return Output(obj, rows)


def cmd_crossings(cfg: RunConfig, ns) -> Output:
    g = cfg.genus or 0
    start = parse_weights(ns.from_, g)
    end = parse_weights(ns.to, g)
    if ns.perturb is not None:
        end = perturb(end, parse_fraction(ns.perturb))
    cs = segment_crossings(start, end)
    obj = {"from": str(start), "to": str(end), "crossings": [c.to_json_obj() for c in cs]}
    rows = [{"param": _frac(c.param), "d": c.wall.d, "e": _evec(c.wall.e),
             "direction": c.to_json_obj()["direction"]} for c in cs]
    return Output(obj, rows)


def cmd_strata(cfg: RunConfig, ns) -> Output:
    w = _need_weights(cfg)
    strata = enumerate_strata(w)
    objs = [s.to_json_obj() | {"poincare": _poly(cover_poincare(s.h, w.g))} for s in strata]
    rows = [{"d": s.d, "e": _evec(s.e), "lambda": s.lam, "h": s.h,
             "pardeg": _frac(s.critical_value), "P_t": str(cover_poincare(s.h, w.g))} for s in strata]
    return Output({"weights": str(w), "genus": w.g, "strata": objs}, rows)


def cmd_poincare(cfg: RunConfig, ns) -> Output:
    curve = Curve(cfg.genus, cfg.points)
    w = cfg.weights
    if w is not None and w.curve != curve:
        raise InvalidInput(f"got {w.n} weights for {curve.n} points")
    rep = poincare_report(curve, w)
    obj = rep.to_json_obj()
    if ns.chambers:
        sample = enumerate_chambers(curve, cfg.K)
        polys = ordered_map(parabolic_poincare, [wv for _, wv in sample], cfg.jobs)
        obj["chambers"] = [{"chamber": cid.key(), "representative": str(wv), "parabolic": _poly(p)}
                           for (cid, wv), p in zip(sample, polys)]
        obj["chambers_heuristic"] = sample.heuristic
    rows = [{"quantity": "higgs", "value": str(rep.higgs_morse)},
            {"quantity": "parabolic", "value": str(rep.parabolic)},
            {"quantity": "euler", "value": rep.euler}]
    return Output(obj, rows)


def cmd_euler(cfg: RunConfig, ns) -> Output:
    curve = Curve(cfg.genus, cfg.points)
    chi = euler_characteristic(curve)
    return Output({"genus": curve.g, "points": curve.n, "euler": chi},
                  [{"genus": curve.g, "points": curve.n, "euler": chi}], text=str(chi))


def cmd_nonempty(cfg: RunConfig, ns) -> Output:
    w = _need_weights(cfg)
    obj: dict = {"weights": str(w), "genus": w.g}
    if w.g > 0:
        # the parabolic moduli are never empty in positive genus
        obj["nonempty"] = True
        obj["parabolic"] = _poly(parabolic_poincare(w))
    else:
        ws = null_witnesses(w)
        obj["nonempty"] = not ws
        obj["witnesses"] = [list(e) for e in ws]
        if w.n == 3:
            obj["fusion_rules"] = fusion_nonempty(w.alpha)
    return Output(obj, [{k: v for k, v in obj.items() if not isinstance(v, list)}],
                  text="nonempty" if obj["nonempty"] else "empty")


def cmd_stabilize(cfg: RunConfig, ns) -> Output:
    w = _need_weights(cfg)
    e = parse_evector(ns.e, w.n)
    data = SplitData(w, ns.degL, e, xi_zero=ns.xi_zero, L_eq_M=ns.l_eq_m, hom_trivial=ns.hom_trivial)
    if ns.semistable:
        pair, higgs = exists_semistable_pair(data), exists_semistable_higgs(data)
    else:
        pair, higgs = exists_stable_pair(data), exists_stable_higgs(data)
    obj = {
        "weights": str(w), "genus": w.g, "degL": data.degL, "degM": data.degM, "e": list(e),
        "pardeg_L": _frac(data.pardeg), "semistable": data.semistable,
        "target": "semistable" if ns.semistable else "stable",
        "pair": pair.tag, "higgs": higgs.tag,
        "pair_detail": pair.to_json_obj(), "higgs_detail": higgs.to_json_obj(),
    }
    rows = [{"question": "pair", **pair.to_json_obj()}, {"question": "higgs", **higgs.to_json_obj()}]
    return Output(obj, rows)


def cmd_p1demo(cfg: RunConfig, ns) -> Output:
    w = _need_weights(cfg)
    c = p1_three_classify(w)
    obj = c.to_json_obj()
    rows = [{"key": k, "value": ", ".join(v) if isinstance(v, list) else v} for k, v in obj.items()]
    return Output(obj, rows)


def cmd_check(cfg: RunConfig, ns) -> Output:
    results = run_suite(ns.suite)
    obj = {"suite": ns.suite, "passed": all(r.passed for r in results),
           "results": [r.to_json_obj() for r in results]}
    lines = [f"{'PASS' if r.passed else 'FAIL'}  {r.name}  ({r.checked} checked)" for r in results]
    for r in results:
        if r.counterexample:
            lines.append(f"  counterexample for {r.name}: {json.dumps(r.counterexample, sort_keys=True)}")
    rows = [{"name": r.name, "passed": r.passed, "checked": r.checked} for r in results]
    return Output(obj, rows, text="\n".join(lines))


COMMANDS: dict[str, Callable[[RunConfig, argparse.Namespace], Output]] = {
    "walls": cmd_walls, "chamber": cmd_chamber, "crossings": cmd_crossings,
    "strata": cmd_strata, "poincare": cmd_poincare, "euler": cmd_euler,
    "nonempty": cmd_nonempty, "stabilize": cmd_stabilize, "p1demo": cmd_p1demo,
    "check": cmd_check,
}


def ordered_map(fn, items: Sequence, jobs: int) -> list:
    """``map`` with optional worker processes; results keep input order."""
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def _need_weights(cfg: RunConfig) -> WeightVector:
    if cfg.weights is None:
        raise UsageError(f"{cfg.command} needs --weights")
    return cfg.weights


# parser

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--genus", "-g", type=int, default=None)
    common.add_argument("--points", "-n", type=int, default=None)
    common.add_argument("--weights", "-w", default=None, help="comma-separated fractions, e.g. 1/3,1/9")
    common.add_argument("--format", choices=("json", "csv", "table"), default=None)
    common.add_argument("--config", default=None, help="key = value file")
    common.add_argument("-K", "--grid", dest="K", type=int, default=None,
                        help="chamber grid parameter (denominator 2K+1)")
    common.add_argument("--jobs", "-j", type=int, default=None)

    p = _Parser(prog="parhiggs", description="Rank-2 parabolic Higgs moduli invariants.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.add_parser("walls", parents=[common], help="list walls")
    sub.add_parser("chamber", parents=[common], help="chamber of a weight vector")
    sp = sub.add_parser("crossings", parents=[common], help="walls crossed by a segment")
    sp.add_argument("--from", dest="from_", default=None)
    sp.add_argument("--to", default=None)
    sp.add_argument("--perturb", default=None, metavar="SCALE",
                    help="shift the end point by prime_i/10^6 * SCALE")
    sub.add_parser("strata", parents=[common], help="Morse strata table")
    sp = sub.add_parser("poincare", parents=[common], help="Poincare polynomials")
    sp.add_argument("--chambers", action="store_true", help="also list P_t(M^0) per grid chamber")
    sub.add_parser("euler", parents=[common], help="Euler characteristic")
    sub.add_parser("nonempty", parents=[common], help="is the parabolic moduli space nonempty")
    sp = sub.add_parser("stabilize", parents=[common], help="stabilizing fields for a non-stable bundle")
    sp.add_argument("--degL", type=int, default=None)
    sp.add_argument("--e", default=None, help="e-vector, e.g. 0,1,1")
    sp.add_argument("--xi-zero", action="store_true", help="the extension splits")
    grp = sp.add_mutually_exclusive_group()
    grp.add_argument("--l-eq-m", dest="l_eq_m", action="store_const", const=True, default=None)
    grp.add_argument("--l-ne-m", dest="l_eq_m", action="store_const", const=False)
    grp = sp.add_mutually_exclusive_group()
    grp.add_argument("--hom-trivial", dest="hom_trivial", action="store_const", const=True, default=None)
    grp.add_argument("--hom-nontrivial", dest="hom_trivial", action="store_const", const=False)
    sp.add_argument("--semistable", action="store_true", help="ask for semistability instead")
    sub.add_parser("p1demo", parents=[common], help="P^1 with three points")
    sp = sub.add_parser("check", parents=[common], help="run self-check suites")
    sp.add_argument("--suite", choices=sorted(SUITES), default=None)
    return p


DEFAULT_FORMAT = {"strata": "table", "euler": "table", "check": "table"}
_INT_KEYS = {"genus", "points", "K", "jobs", "degL"}


def _resolve(ns: argparse.Namespace) -> RunConfig:
    conf = read_config(ns.config) if ns.config else {}
    for key, value in conf.items():
        attr = "from_" if key == "from" else key
        if getattr(ns, attr, None) is None and hasattr(ns, attr):
            setattr(ns, attr, int(value) if key in _INT_KEYS else value)
    if getattr(ns, "suite", "x") is None:
        ns.suite = "all"
    cmd = ns.command
    genus = ns.genus
    weights = None
    if ns.weights is not None:
        weights = parse_weights(ns.weights, genus or 0)
        if ns.points is not None and ns.points != weights.n:
            raise InvalidInput(f"--points {ns.points} but {weights.n} weights given")
    if cmd in ("walls", "poincare", "euler"):
        points = ns.points if ns.points is not None else (weights.n if weights else None)
        if genus is None or points is None:
            raise UsageError(f"{cmd} needs --genus and --points")
    else:
        points = ns.points
    if cmd == "crossings" and (ns.from_ is None or ns.to is None):
        raise UsageError("crossings needs --from and --to")
    if cmd == "stabilize" and (ns.degL is None or ns.e is None):
        raise UsageError("stabilize needs --degL and --e")
    K = ns.K if ns.K is not None else 16
    if K < 2:
        raise InvalidInput("grid parameter K must be >= 2")
    jobs = ns.jobs if ns.jobs is not None else 1
    if jobs < 1:
        raise InvalidInput("--jobs must be >= 1")
    fmt = ns.format or DEFAULT_FORMAT.get(cmd, "json")
    if fmt not in ("json", "csv", "table"):
        raise InvalidInput(f"unknown format {fmt!r}")
    return RunConfig(cmd, genus, points, weights, fmt, K, jobs)


# emitters

def _cell(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, Fraction):
        return _frac(v)
    return "" if v is None else str(v)


def render(out: Output, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(out.obj, sort_keys=True, indent=2)
    rows = out.rows if out.rows is not None else [out.obj]
    cols: list[str] = []
    for r in rows:
        cols += [k for k in r if k not in cols]
    if fmt == "csv":
        buf = io.StringIO()
        wr = csv.writer(buf, lineterminator="\n")
        wr.writerow(cols)
        for r in rows:
            wr.writerow([_cell(r.get(c)) for c in cols])
        return buf.getvalue().rstrip("\n")
    if out.text is not None:
        return out.text
    return format_table(cols, [[_cell(r.get(c)) for c in cols] for r in rows])


def format_table(cols: list[str], body: Iterable[list[str]]) -> str:
    body = list(body)
    widths = [max([len(c)] + [len(r[i]) for r in body]) for i, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(wd) for c, wd in zip(cols, widths)).rstrip(),
             "  ".join("-" * wd for wd in widths)]
    lines += ["  ".join(x.ljust(wd) for x, wd in zip(r, widths)).rstrip() for r in body]
    return "\n".join(lines)


def _error(exc: BaseException, code: int, stderr) -> int:
    info = {"error": type(exc).__name__, "message": str(exc), "exit_code": code}
    wall = getattr(exc, "wall", None)
    if wall is not None:
        info["wall"] = wall.to_json_obj()
    walls = getattr(exc, "walls", None)
    if walls:
        info["walls"] = [wl.to_json_obj() for wl in walls]
        info["param"] = _frac(exc.param)
    print(json.dumps(info, sort_keys=True), file=stderr)
    return code


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
        if ns.command is None:
            raise UsageError("missing subcommand; one of " + ", ".join(COMMANDS))
        cfg = _resolve(ns)
        out = COMMANDS[cfg.command](cfg, ns)
    except (UsageError, InvalidInput) as exc:
        return _error(exc, EXIT_USAGE, stderr)
    except NonGenericWeights as exc:
        return _error(exc, EXIT_NONGENERIC, stderr)
    except ConsistencyError as exc:
        return _error(exc, EXIT_CONSISTENCY, stderr)
    except ParHiggsError as exc:  # pragma: no cover - every family is handled above
        return _error(exc, EXIT_USAGE, stderr)
    print(render(out, cfg.format), file=stdout)
    if cfg.command == "check" and not out.obj["passed"]:
        return EXIT_CONSISTENCY
    return EXIT_OK


def main() -> None:
    sys.exit(run())
