"""``orelab`` command line: check, mul, center and simple."""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import config as cfgmod
from .errors import HypothesesNotMet, OrelabError, ParseError, TooLarge, UnsupportedBase, WrongCharacteristic
from .expr import parse_elem
from .orering import center, elem_to_json, fmt_elem, s_mul, zsg
from .pistructure import check_all, classification_from_report
from .simplicity import VerdictDisagreement, decide

SCHEMA = 1

EXIT_SIMPLE = 0
EXIT_NOT_SIMPLE = 1
EXIT_UNKNOWN = 2
EXIT_HYPOTHESES = 3
EXIT_PARSE = 4
EXIT_INTERNAL = 5

VERDICT_EXIT = {"simple": EXIT_SIMPLE, "not_simple": EXIT_NOT_SIMPLE, "unknown": EXIT_UNKNOWN}


def _fmt_witness(w: dict) -> str:
    return " ".join(f"{k}={v}" for k, v in w.items())


def cmd_check(cfg: cfgmod.ProblemConfig) -> tuple:
    cap = cfg.caps["weight_cap"]
    rep = check_all(cfg.pi, cap)
    cls = classification_from_report(rep, cfg.pi.scope(cap))
    alg = cfg.algebra
    result = {
        "characteristic": alg.characteristic,
        "associative": alg.is_associative,
        "commutative_algebra": alg.is_commutative,
        "monoid": cfg.monoid.validate().to_json(),
        **rep.to_json(cfg.monoid),
        "classification": cls.to_json(),
    }
    lines = [f"{s['axiom']:<13} {s['status']}" + (f"  witness {_fmt_witness(s['witness'])}" if "witness" in s else "") for s in result["axioms"]]
    lines.append("classification: " + (", ".join(k for k, v in cls.to_json().items() if v is True) or "none"))
    lines.append(f"scope: {cls.scope}")
    return result, lines, 0


def cmd_mul(cfg, lhs: str, rhs: str) -> tuple:
    ring = cfg.ring()
    u = parse_elem(ring, lhs)
    v = parse_elem(ring, rhs)
    w = s_mul(u, v)
    result = {"lhs": fmt_elem(u), "rhs": fmt_elem(v), "product": fmt_elem(w), "terms": elem_to_json(w)}
    return result, [result["product"]], 0


def cmd_center(cfg, cap: int) -> tuple:
    ring = cfg.ring()
    Z = center(ring, cap)
    result = {"exact": ring.is_finite, "cap": None if ring.is_finite else cap, "center": [fmt_elem(z) for z in Z]}
    if ring.base.is_field:
        result["zsg"] = [fmt_elem(z) for z in zsg(ring, cap)]
    lines = [f"Z(S) basis ({'exact' if ring.is_finite else f'weight <= {cap}'}):"] + ["  " + s for s in result["center"]]
    if "zsg" in result:
        lines += ["Z(S)^G basis:"] + ["  " + s for s in result["zsg"]]
    return result, lines, 0


def cmd_simple(cfg, strategy: str) -> tuple:
    ring = cfg.ring()
    rep = decide(ring, strategy, cfg.caps)
    result = rep.to_json()
    lines = [f"verdict: {rep.verdict}", f"method: {rep.method}"]
    ev = rep.evidence
    missed = [h["name"] for h in rep.hypotheses if not h["holds"]]
    if missed:
        lines.append("unmet side conditions: " + ", ".join(missed))
    if ev.get("proper_ideal"):
        lines.append("proper ideal: " + "; ".join(ev["proper_ideal"]))
    if ev.get("inner_combination"):
        lines.append("central non-unit: " + ev["inner_combination"]["central_element"])
    for key in ("delta_simple", "r_g_simple"):
        if key in ev and ev[key].get("ideal_basis"):
            lines.append("invariant ideal of R: " + "; ".join("(" + ",".join(v) + ")" for v in ev[key]["ideal_basis"]))
    return result, lines, VERDICT_EXIT[rep.verdict]


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="orelab", description="Ore monoid rings over finite-dimensional algebras")
    ap.add_argument("command", choices=["check", "mul", "center", "simple"])
    ap.add_argument("--config", required=True, help="problem description (JSON)")
    ap.add_argument("--lhs", help="left factor for mul")
    ap.add_argument("--rhs", help="right factor for mul")
    ap.add_argument("--cap", type=int, help="weight cap (overrides analysis.weight_cap)")
    ap.add_argument("--strategy", default="auto", choices=["auto", "brute", "theorem", "witness"])
    ap.add_argument("--json", metavar="OUT", help="write the JSON report here ('-' for stdout)")
    ap.add_argument("--timing", action="store_true", help="add wall-clock timing to the JSON report")
    return ap


def run(argv=None) -> tuple:
    """Parse ``argv`` and execute; returns ``(exit_code, report, text_lines, args)``."""
    args = build_parser().parse_args(argv)
    t0 = time.perf_counter()
    report = {"schema": SCHEMA, "command": args.command}
    try:
        cfg = cfgmod.load(args.config)
        if args.cap is not None:
            if args.cap < 0:
                raise ParseError("--cap must be non-negative", where="--cap")
            cfg.caps["weight_cap"] = args.cap
        report["config"] = cfg.to_json()
        report["caps"] = dict(cfg.caps)
        if args.command == "check":
            result, lines, code = cmd_check(cfg)
        elif args.command == "mul":
            if args.lhs is None or args.rhs is None:
                raise ParseError("mul needs --lhs and --rhs", where="--lhs/--rhs")
            result, lines, code = cmd_mul(cfg, args.lhs, args.rhs)
        elif args.command == "center":
            result, lines, code = cmd_center(cfg, cfg.caps["weight_cap"])
        else:
            result, lines, code = cmd_simple(cfg, args.strategy)
        report["result"] = result
    except ParseError as exc:
        report["error"] = {"kind": "parse", "message": str(exc), "where": exc.where}
        lines, code = [f"error: {exc}"], EXIT_PARSE
    except HypothesesNotMet as exc:
        report["error"] = {"kind": "hypotheses", "message": str(exc), "missing": list(exc.missing)}
        lines, code = [f"hypotheses not met: {', '.join(exc.missing)}"], EXIT_HYPOTHESES
    except (UnsupportedBase, WrongCharacteristic, TooLarge) as exc:
        report["error"] = {"kind": type(exc).__name__, "message": str(exc)}
        lines, code = [f"error: {exc}"], EXIT_HYPOTHESES
    except VerdictDisagreement as exc:
        report["error"] = {"kind": "disagreement", "message": str(exc)}
        lines, code = [f"internal disagreement: {exc}"], EXIT_INTERNAL
    except OrelabError as exc:
        report["error"] = {"kind": type(exc).__name__, "message": str(exc)}
        lines, code = [f"error: {exc}"], EXIT_PARSE
    report["exit_code"] = code
    if args.timing:
        report["timing"] = {"seconds": round(time.perf_counter() - t0, 6)}
    return code, report, lines, args


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def main(argv=None) -> int:
    code, report, lines, args = run(argv)
    out = sys.stderr if code in (EXIT_HYPOTHESES, EXIT_PARSE, EXIT_INTERNAL) else sys.stdout
    for line in lines:
        print(line, file=out)
    if args.json == "-":
        sys.stdout.write(dumps(report))
    elif args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(dumps(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
