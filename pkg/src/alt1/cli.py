"""Command-line interface: ``alt1 verify`` plus a handful of single computations.

Exit codes: 0 when everything passes, 1 when a check fails, 2 on usage errors
(bad arguments, unreadable input files, unknown check ids).
"""

from __future__ import annotations

import argparse
import json
import sys

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _emit(args, text_lines, payload):
    if getattr(args, "json", None):
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2, ensure_ascii=False, sort_keys=True)
            fh.write("\n")
    for line in text_lines:
        print(line)


# verify ----------------------------------------------------------------------------------

def cmd_verify(args) -> int:
    from .checks import UnknownCheck, exit_code, run_suite
    try:
        results = run_suite(args.filter, parallel=args.parallel, timing=args.timing)
    except UnknownCheck as exc:
        raise UsageError(f"no check matches {exc.args[0]!r}") from None
    lines = []
    for r in results:
        tag = {"pass": "PASS", "fail": "FAIL", "paper_discrepancy": "DISC"}[r.status]
        timing = f"  [{r.ms} ms]" if r.ms is not None else ""
        lines.append(f"{tag}  {r.id}{timing}")
        if args.verbose or r.status != "pass":
            for d in r.details:
                lines.append(f"        {d}")
        if r.status == "paper_discrepancy":
            lines.append(f"        printed: {r.printed}")
            lines.append(f"        derived: {r.derived}")
    counts = {s: sum(r.status == s for r in results) for s in ("pass", "fail", "paper_discrepancy")}
    lines.append(f"{counts['pass']} passed, {counts['fail']} failed, {counts['paper_discrepancy']} discrepancies")
    _emit(args, lines, {"checks": [r.to_json() for r in results]})
    return exit_code(results)


# single computations ---------------------------------------------------------------------

def cmd_casimir(args) -> int:
    from .diffop import casimir_image, get_realization
    S, residuals = casimir_image(get_realization(args.rep))
    _emit(args, [S.pretty()], {"rep": args.rep, "casimir": S.format(), "commutes": not residuals})
    return EXIT_OK if not residuals else EXIT_FAIL


def cmd_appell(args) -> int:
    from .appell import appell_polynomials, load_moments
    try:
        moments = load_moments(args.moments)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read moments from {args.moments}: {exc}") from None
    if args.n < 0:
        raise UsageError("--n must be non-negative")
    P = appell_polynomials(args.n, moments)[args.n]
    _emit(args, [P.pretty()], {"n": args.n, "polynomial": str(P)})
    return EXIT_OK


def cmd_cohomology(args) -> int:
    from .cohomology import algebra_by_name, h2
    r = h2(algebra_by_name(args.algebra))
    _emit(args, [f"dim H² = {r.dim_H2}"],
          {"algebra": args.algebra, "dim_Z2": r.dim_Z2, "dim_B2": r.dim_B2, "dim_H2": r.dim_H2})
    return EXIT_OK


def cmd_fock_gram(args) -> int:
    from .fock import FockPairing, _levels
    if args.order < 0:
        raise UsageError("--order must be non-negative")
    pairing = FockPairing()
    levels = list(_levels(args.order))
    lines, rows = [], []
    for u in levels:
        for v in levels:
            g = pairing.gram(u, v)
            if not g.is_zero():
                lines.append(f"<{u[0]}{u[1]}|{v[0]}{v[1]}> = {g.pretty()}")
                rows.append({"bra": list(u), "ket": list(v), "value": str(g)})
    _emit(args, lines, {"order": args.order, "entries": rows})
    return EXIT_OK


def cmd_grouplaw(args) -> int:
    from . import checks
    results = checks.run_suite(f"grouplaw.{args.check}")
    lines = []
    for r in results:
        lines.append(f"{r.status}: {r.id}")
        lines.extend(f"  {d}" for d in r.details)
        if r.status == "paper_discrepancy":
            lines += [f"  printed: {r.printed}", f"  derived: {r.derived}"]
    _emit(args, lines, {"checks": [r.to_json() for r in results]})
    return checks.exit_code(results)


CORRELATOR_REPS = ("zeta_standard", "contact_J", "fixed_mass", "transported_standard", "transported_contact")


def _correlator_generators(rep):
    from .correlators import _mass_free, transported_contact, transported_standard
    from .diffop import get_realization, zeta_physical
    if rep == "zeta_standard":
        return zeta_physical()
    if rep == "transported_standard":
        return _mass_free(transported_standard())
    if rep == "transported_contact":
        return _mass_free(transported_contact())
    return get_realization(rep).alt1()


def cmd_correlator(args) -> int:
    from .correlators import FORMS, M1, covariance_scan
    form = FORMS[args.form]()
    params = {"fixed1": ({"M": M1}, {"M": -M1}), "fixed2": ({"M": M1}, {"M": M1})}.get(args.form, (None, None))
    report = covariance_scan(_correlator_generators(args.rep), form, *params)
    lines = [f"form {report.form}; assumptions: {', '.join(report.assumptions) or 'none'}"]
    for e in report.entries:
        extra = f"  [{e.constraint}]" if e.constraint else ""
        lines.append(f"{e.generator}: {e.classification}: {e.format()}{extra}")
    payload = {"form": report.form, "rep": args.rep, "assumptions": report.assumptions,
               "residuals": [{"generator": e.generator, "classification": e.classification,
                              "residual": e.format(), "constraint": e.constraint} for e in report.entries]}
    _emit(args, lines, payload)
    return EXIT_OK


# parser ----------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="alt1", description="Exact verification of the alt1 Lie algebra toolkit.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="run the verification suite")
    v.add_argument("--filter", metavar="GLOB", help="only run checks whose id matches GLOB")
    v.add_argument("--json", metavar="PATH", help="also write a JSON report")
    v.add_argument("--parallel", action="store_true", help="run checks in a thread pool")
    v.add_argument("--timing", action="store_true", help="record wall time per check (non-deterministic)")
    v.add_argument("-v", "--verbose", action="store_true", help="print details of passing checks too")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("casimir", help="Casimir operator in a realization")
    c.add_argument("--rep", required=True, choices=["zeta_standard", "contact_J", "fixed_mass"])
    c.set_defaults(func=cmd_casimir)

    a = sub.add_parser("appell", help="Appell polynomial for a moment sequence")
    a.add_argument("--moments", required=True, metavar="FILE")
    a.add_argument("--n", required=True, type=int)
    a.set_defaults(func=cmd_appell)

    h = sub.add_parser("cohomology", help="second cohomology dimension")
    h.add_argument("--algebra", required=True, choices=["alt1", "sl2", "abelian2"])
    h.set_defaults(func=cmd_cohomology)

    f = sub.add_parser("fock-gram", help="Fock-space Gram matrix up to a level")
    f.add_argument("--order", required=True, type=int)
    f.set_defaults(func=cmd_fock_gram)

    g = sub.add_parser("grouplaw", help="group-law checks")
    g.add_argument("--check", required=True, choices=["product", "prop7", "pi", "flow"])
    g.set_defaults(func=cmd_grouplaw)

    k = sub.add_parser("correlator", help="covariance residuals of a two-point form")
    k.add_argument("--form", required=True, choices=["phi_st", "phi_j", "fixed1", "fixed2", "fixed3"])
    k.add_argument("--rep", required=True, choices=CORRELATOR_REPS)
    k.set_defaults(func=cmd_correlator)

    for sp in (c, a, h, f, g, k):
        sp.add_argument("--json", metavar="PATH", help="also write the result as JSON")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"alt1: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
