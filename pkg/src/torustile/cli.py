"""Command-line entry point.

Subcommands: mu, verify-ainfty, grading, hochschild, cobar-check, golden,
report.  JSON output is versioned ({"schema": 1}) and byte-deterministic
for a fixed configuration; text output carries no stability promise.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from .algebra import Basic, Element, F2, Z, format_element, parse_element
from . import gradings
from .tiling import enumerate_patterns_with_reason, mu
from . import verify as verify_mod
from . import hochschild as hh_mod
from . import cobar as cobar_mod
from .golden import golden_checks

SCHEMA = 1


def _env_int(name: str, default: int) -> int:
    value = os.environ.get(name)
    return int(value) if value else default


def _ring(text: str) -> str:
    return {"f2": F2, "z": Z}[text]


def _emit(args, payload: dict, text_lines) -> None:
    stream = open(args.out, "w") if getattr(args, "out", None) else sys.stdout
    try:
        if getattr(args, "json", False):
            payload = {"schema": SCHEMA, **payload}
            stream.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
        else:
            for line in text_lines:
                stream.write(line + "\n")
    finally:
        if stream is not sys.stdout:
            stream.close()


def cmd_mu(args) -> int:
    ring = _ring(args.ring)
    inputs = [parse_element(text, ring) for text in args.inputs.split(",")]
    value = mu(args.w, inputs, ring)
    basics = []
    for elt in inputs:
        if len(elt.terms) == 1 and next(iter(elt.terms.values())) == 1:
            basics.append(next(iter(elt.terms)))
    patterns = []
    if len(basics) == len(inputs) and all(b.is_reeb for b in basics):
        found, reason = enumerate_patterns_with_reason(tuple(basics), args.w)
        patterns = [p.to_json() for p in found]
        if not found and not args.json:
            print("(no tiling patterns: %s)" % reason, file=sys.stderr)
    _emit(args, {"mu": format_element(value), "weight": args.w,
                 "ring": args.ring, "patterns": patterns},
          [format_element(value)])
    return 0


def cmd_verify_ainfty(args) -> int:
    ring = _ring(args.ring)
    bounds = verify_mod.Bounds(args.max_length, args.max_weight,
                               args.max_idempotents)
    report = verify_mod.check_relations(bounds, ring)
    payload = {
        "ring": args.ring,
        "bounds": {"max_length": bounds.max_total_length,
                   "max_weight": bounds.max_weight,
                   "max_idempotent_insertions": bounds.max_idempotent_insertions},
        "instances": report.checked,
        "ok": report.ok,
        "counterexamples": sorted(report.failures),
    }
    lines = ["checked %d relation instances over %s: %s"
             % (report.checked, args.ring, "all residuals vanish"
                if report.ok else "FAILURES")]
    lines += ["  " + f for f in report.failures]
    _emit(args, payload, lines)
    return 0 if report.ok else 1


def cmd_grading(args) -> int:
    elt = parse_element(args.element, F2)
    if len(elt.terms) != 1:
        print("grading expects a single basic element", file=sys.stderr)
        return 2
    basic = next(iter(elt.terms.keys()))
    big = gradings.gr_prime(basic)
    mid = gradings.gr(basic)
    rows = [("gr'", str(big), big.to_json()),
            ("gr", str(mid), mid.to_json())]
    refined_json: Optional[dict] = None
    try:
        small = gradings.gr_psi(basic)
        rows.append(("gr_psi", str(small), small.to_json()))
        rows.append(("epsilon", str(gradings.epsilon(small)),
                     {"value": gradings.epsilon(small)}))
        refined_json = small.to_json()
    except ValueError as err:
        rows.append(("gr_psi", "undefined (%s)" % err, {}))
    gam = gradings.gamma(basic)
    rows.append(("wingr", str(basic.wingr()), {"w": basic.wingr()}))
    rows.append(("gamma", str(gam), gam.to_json()))
    payload = {"element": str(basic),
               "big": big.to_json(), "intermediate": mid.to_json(),
               "small": refined_json, "gamma": gam.to_json(),
               "wingr": basic.wingr()}
    _emit(args, payload, ["%-8s %s" % (name, text) for name, text, _ in rows])
    return 0


def cmd_hochschild(args) -> int:
    ring = _ring(args.ring)
    bigrading = tuple(int(x) for x in args.bigrading.split(","))
    if len(bigrading) != 2:
        print("bigrading must be n,k or W,l", file=sys.stderr)
        return 2
    result = hh_mod.homology(args.model, bigrading, ring, args.cutoff,
                             args.winding, representatives=args.representatives)
    slice_ = hh_mod.build_slice(args.model, bigrading, ring, args.cutoff,
                                args.winding)
    payload = {
        "model": args.model, "ring": args.ring,
        "bigrading": list(bigrading), "cutoff": args.cutoff,
        "basis": [str(g) for g in slice_.basis],
        "matrix": slice_.to_json()["matrix"],
        "homology": {
            "rank": result.dimension,
            "invariant_factors": result.invariant_factors,
            "representatives": [{str(g): c for g, c in rep.items()}
                                for rep in result.representatives],
        },
    }
    lines = ["%s HH^%s over %s = %s" % (args.model, bigrading, args.ring,
                                        result.group_name())]
    for rep in result.representatives:
        lines.append("  generator: " + " + ".join(
            ("%d*%s" % (c, g)) if c != 1 else str(g)
            for g, c in sorted(rep.items(), key=lambda t: str(t[0]))))
    _emit(args, payload, lines)
    return 0


def cmd_cobar_check(args) -> int:
    ring = _ring(args.ring)
    count, sq_fail = cobar_mod.verify_square_zero(args.max_letters,
                                                  args.max_winding, ring)
    _, hom_fail = cobar_mod.verify_homotopy(args.max_letters,
                                            args.max_winding, ring)
    _, chain_fail = cobar_mod.verify_phi_chain_map(args.max_letters,
                                                   args.max_winding, ring)
    _, gr_fail = cobar_mod.verify_phi_grading(args.max_letters,
                                              args.max_winding)
    ok = not (sq_fail or hom_fail or chain_fail or gr_fail)
    payload = {"ring": args.ring, "generators": count, "ok": ok,
               "square_zero_failures": len(sq_fail),
               "homotopy_failures": len(hom_fail),
               "chain_map_failures": len(chain_fail),
               "grading_failures": len(gr_fail)}
    lines = ["checked %d cobar generators (<=%d letters, winding <=%d) "
             "over %s" % (count, args.max_letters, args.max_winding,
                          args.ring),
             "square-zero: %s" % ("ok" if not sq_fail else "FAIL"),
             "homotopy identity: %s" % ("ok" if not hom_fail else "FAIL"),
             "phi chain map: %s" % ("ok" if not chain_fail else "FAIL"),
             "phi grading: %s" % ("ok" if not gr_fail else "FAIL")]
    _emit(args, payload, lines)
    return 0 if ok else 1


def cmd_golden(args) -> int:
    results = golden_checks()
    ok = all(passed for _, passed, _ in results)
    payload = {"ok": ok,
               "checks": [{"name": name, "pass": passed, "detail": detail}
                          for name, passed, detail in results]}
    lines = ["%s %s%s" % ("PASS" if passed else "FAIL", name,
                          "" if passed else "  (%s)" % detail)
             for name, passed, detail in results]
    lines.append("golden: %d/%d checks pass"
                 % (sum(p for _, p, _ in results), len(results)))
    _emit(args, payload, lines)
    return 0 if ok else 1


def cmd_report(args) -> int:
    from .report import write_report
    paths = write_report(args.out_dir)
    for path in paths:
        print(path)
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="torustile",
        description="Exact computations in the weighted torus algebra")
    sub = parser.add_subparsers(dest="command", required=True)

    p_mu = sub.add_parser("mu", help="compute a weighted operation")
    p_mu.add_argument("--w", type=int, default=0)
    p_mu.add_argument("--inputs", required=True,
                      help="comma-separated algebra elements, e.g. r4,r3,r2,r1")
    p_mu.add_argument("--ring", choices=("f2", "z"), default="f2")
    p_mu.add_argument("--json", action="store_true")
    p_mu.add_argument("--out")
    p_mu.set_defaults(func=cmd_mu)

    p_ver = sub.add_parser("verify-ainfty", help="sweep the A-infinity relations")
    p_ver.add_argument("--ring", choices=("f2", "z"), required=True)
    p_ver.add_argument("--max-length", type=int,
                       default=_env_int("TORUSTILE_MAX_LENGTH", 10))
    p_ver.add_argument("--max-weight", type=int,
                       default=_env_int("TORUSTILE_MAX_WEIGHT", 2))
    p_ver.add_argument("--max-idempotents", type=int, default=1)
    p_ver.add_argument("--json", action="store_true")
    p_ver.add_argument("--out")
    p_ver.set_defaults(func=cmd_verify_ainfty)

    p_gr = sub.add_parser("grading", help="print all grading flavors")
    p_gr.add_argument("element")
    p_gr.add_argument("--json", action="store_true")
    p_gr.add_argument("--out")
    p_gr.set_defaults(func=cmd_grading)

    p_hh = sub.add_parser("hochschild", help="bigraded slice and homology")
    p_hh.add_argument("--model", choices=("assoc", "weighted"), required=True)
    p_hh.add_argument("--ring", choices=("f2", "z"), default="f2")
    p_hh.add_argument("--bigrading", required=True, help="n,k or W,l")
    p_hh.add_argument("--cutoff", type=int,
                      default=_env_int("TORUSTILE_CUTOFF", 16))
    p_hh.add_argument("--winding", type=int,
                      default=_env_int("TORUSTILE_MAX_WINDING", 2))
    p_hh.add_argument("--representatives", action="store_true")
    p_hh.add_argument("--json", action="store_true")
    p_hh.add_argument("--out")
    p_hh.set_defaults(func=cmd_hochschild)

    p_cb = sub.add_parser("cobar-check", help="Koszul duality checks")
    p_cb.add_argument("--ring", choices=("f2", "z"), required=True)
    p_cb.add_argument("--max-letters", type=int, default=5)
    p_cb.add_argument("--max-winding", type=int,
                      default=_env_int("TORUSTILE_MAX_WINDING", 2))
    p_cb.add_argument("--json", action="store_true")
    p_cb.add_argument("--out")
    p_cb.set_defaults(func=cmd_cobar_check)

    p_gold = sub.add_parser("golden", help="replay the recorded literature values")
    p_gold.add_argument("--json", action="store_true")
    p_gold.add_argument("--out")
    p_gold.set_defaults(func=cmd_golden)

    p_rep = sub.add_parser("report", help="write CSV summary and figures")
    p_rep.add_argument("--out-dir", default="reports")
    p_rep.set_defaults(func=cmd_report)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
