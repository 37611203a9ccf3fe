"""Command-line front end.

    vkhov jones trefoil
    vkhov --json homology "O1+U2+U1+O2+" --coeff z2
    vkhov s vsigma4 --positive-fast
    vkhov check figure_eight

INPUT is a catalog name, a file holding a Gauss code, a literal code, or
``random:N[:C]`` (N crossings, C components, drawn with ``--seed``).
Exit status: 0 on success, 2 for bad input, 3 when an internal
consistency check fails.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import random
import sys
import time

from . import catalog
from .cube import build_cube, check_d2
from .diagram import GaussCodeError, parse_gauss_code, random_diagram
from .homology import euler_characteristic_q, khovanov_homology, poincare_polynomial
from .lee import (canonical_generators, lee_filtered_homology, positive_s_min,
                  rasmussen, seifert_genus, verify_generator_cycle)
from .orientation import cut_loci
from .smoothing import CrossingCapError, bracket_a, bracket_q, f_poly, jones

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 2, 3


class InputError(Exception):
    pass


class InvariantViolation(Exception):
    def __init__(self, message, payload=None):
        super().__init__(message)
        self.payload = payload


def resolve_input(text, extra=None, seed=None):
    extra = extra or {}
    if text in extra:
        return extra[text]
    try:
        return catalog.get(text)
    except KeyError:
        pass
    if text.startswith("random:"):
        parts = text.split(":")[1:]
        try:
            n = int(parts[0])
            c = int(parts[1]) if len(parts) > 1 else 1
        except ValueError as exc:
            raise InputError(f"bad random spec {text!r}") from exc
        return random_diagram(n, random.Random(seed), c)
    if text and os.path.isfile(text):
        with open(text, encoding="utf-8") as fh:
            text = fh.read().strip()
    try:
        return parse_gauss_code(text)
    except GaussCodeError as exc:
        raise InputError(str(exc)) from exc


def _cap(d, args):
    if args.max_crossings is not None and d.crossing_count > args.max_crossings:
        raise CrossingCapError(f"{d.crossing_count} crossings exceeds --max-crossings {args.max_crossings}")


def cmd_jones(d, args):
    return {
        "bracket_A": bracket_a(d).to_json(),
        "bracket_q": bracket_q(d).to_json(),
        "f": f_poly(d).to_json(),
        "J": jones(d).to_json(),
    }, [f"<K>_A = {bracket_a(d)}", f"<K>_q = {bracket_q(d)}",
        f"f(A)  = {f_poly(d)}", f"J(q)  = {jones(d)}"]


def cmd_homology(d, args):
    coeff = {"z": "Z", "q": "Q", "z2": "Z2"}[args.coeff]
    h = khovanov_homology(d, coeff, max_crossings=args.max_crossings)
    chi, j = euler_characteristic_q(h), jones(d)
    if chi != j:
        raise InvariantViolation(f"Euler characteristic {chi} differs from J {j}",
                                 {"euler": chi.to_json(), "J": j.to_json()})
    payload = h.to_json()
    payload["poincare"] = str(poincare_polynomial(h))
    payload["euler_matches_jones"] = True
    return payload, [str(h), f"P(t,q) = {poincare_polynomial(h)}", "chi = J: ok"]


def cmd_s(d, args):
    if d.component_count != 1:
        fh = lee_filtered_homology(d)
        payload = {"levels": {str(k): list(v) for k, v in fh.levels.items()},
                   "generators": len(canonical_generators(d))}
        return payload, [f"levels: {fh.levels}"]
    if args.positive_fast:
        s_min = positive_s_min(d)
        g = seifert_genus(d)
        payload = {"s_min": s_min, "s_max": s_min + 2, "s_bar": s_min + 1,
                   "genus_lower": str(g), "genus_upper": str(g), "generators": 2}
    else:
        payload = rasmussen(d).to_json()
    lines = [f"{k} = {v}" for k, v in payload.items()]
    return payload, lines


def run_checks(d, corrupt=False):
    """All structural checks; returns ``{name: bool}`` plus details."""
    out, details = {}, {}
    cube = build_cube(d)
    if corrupt:
        bad = None
        for e in cube.all_edges():
            if e.kind == "e":
                continue
            trial = build_cube(d, corrupt=frozenset({(e.source, e.site)}))
            rep = check_d2(trial)
            if not rep.ok:
                bad = (e.source, e.site, rep.faces)
                break
        details["corrupted_edge"] = None if bad is None else {"state": bad[0], "site": bad[1]}
        out["d2_zero"] = bad is None
        if bad:
            details["offending_faces"] = [list(f) for f in bad[2]]
    else:
        rep = check_d2(cube)
        out["d2_zero"] = rep.ok
        details["offending_faces"] = [list(f) for f in rep.faces]
    out["d2_zero_lee"] = check_d2(build_cube(d, t=1)).ok
    cuts = cut_loci(d)
    out["even_cut_loci"] = all(sum(1 for a in cyc.arcs if a in cuts) % 2 == 0
                               for st in cube.states for cyc in st.cycles)
    gens = canonical_generators(d)
    lee_cube = build_cube(d, t=1)
    out["generator_count"] = len(gens) == 2 ** d.component_count
    out["generator_cycles"] = all(verify_generator_cycle(g, d, lee_cube) for g in gens)
    out["lee_dimension"] = lee_filtered_homology(d).total_dim == 2 ** d.component_count
    base = khovanov_homology(d)
    k0 = len(cube.states[0].cycles)
    out["root_order_independent"] = khovanov_homology(
        d, root_order=tuple(reversed(range(k0)))) == base
    out["tree_independent"] = all(khovanov_homology(d, tree=t) == base
                                  for t in ("highest", "random"))
    out["star_rule_independent"] = khovanov_homology(d, star_rule="max") == base
    return out, details


def cmd_check(d, args):
    out, details = run_checks(d, corrupt=args.corrupt_signs)
    payload = {"checks": out, **details}
    lines = [f"{'PASS' if v else 'FAIL'} {k}" for k, v in out.items()]
    if not all(out.values()):
        raise InvariantViolation("\n".join(lines), payload)
    return payload, lines


COMMANDS = {"jones": cmd_jones, "homology": cmd_homology, "s": cmd_s, "check": cmd_check}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="print a JSON report")
    common.add_argument("--max-crossings", type=int, default=argparse.SUPPRESS)
    common.add_argument("--catalog", default=argparse.SUPPRESS,
                        help="extra catalog file of 'name: code' lines")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--timing", action="store_true", default=argparse.SUPPRESS,
                        help="include wall-clock time in the report")

    p = argparse.ArgumentParser(prog="vkhov", parents=[common],
                                description="Khovanov and Lee homology of virtual links.")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("input")
        if name == "homology":
            sp.add_argument("--coeff", choices=("z", "q", "z2"), default="z")
        if name == "s":
            sp.add_argument("--positive-fast", action="store_true")
        if name == "check":
            sp.add_argument("--corrupt-signs", action="store_true",
                            help="flip one edge sign; the d^2 check should then fail")
    return p


def _print_report(args, d, payload, t0, status):
    code = d.to_code() if d is not None else args.input
    report = {"command": args.command, "input": code, "status": status,
              "input_hash": hashlib.sha256(code.encode()).hexdigest()[:16],
              "results": payload}
    if args.timing:
        report["timing_s"] = round(time.perf_counter() - t0, 6)
    print(json.dumps(report, sort_keys=True))


def main(argv=None):
    args = build_parser().parse_args(argv)
    for key, default in (("json", False), ("max_crossings", None), ("catalog", None),
                         ("seed", None), ("timing", False)):
        if not hasattr(args, key):
            setattr(args, key, default)
    t0 = time.perf_counter()
    d = None
    try:
        extra = catalog.load_catalog(args.catalog) if args.catalog else None
        d = resolve_input(args.input, extra, args.seed)
        _cap(d, args)
        payload, lines = COMMANDS[args.command](d, args)
    except (InputError, GaussCodeError, CrossingCapError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InvariantViolation, AssertionError) as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        if args.json:
            _print_report(args, d, getattr(exc, "payload", None) or {}, t0, "failed")
        return EXIT_INTERNAL
    code = d.to_code()
    if args.json:
        _print_report(args, d, payload, t0, "ok")
    else:
        print(f"# {d.name or code or '(unknot)'}")
        print("\n".join(lines))
        if args.timing:
            print(f"# {time.perf_counter() - t0:.3f}s")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
