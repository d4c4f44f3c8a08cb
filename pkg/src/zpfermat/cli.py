"""
Command-line front end.

    zpfermat verdict --p 5 --n 3
    zpfermat wieferich --lo 2 --hi 1000000
    zpfermat layer-poly --p 3 --n 2
    zpfermat splitting --poly 1,-3,0,1 --q 17
    zpfermat unit-search --poly -3,9,-6,1 --height 20
    zpfermat sunit-search --poly 1,10,5,-10,0,1 --height 10 --denom 1
    zpfermat certify --poly -451,-990,-605,-110,0,1 --p 5
    zpfermat lmfdb-filter --fixture PATH

Polynomials are comma-separated integer coefficients in ascending degree.
Reports go to stdout (``--format json`` or ``text``), diagnostics to stderr.
Exit codes: 0 success, 2 invalid arguments, 3 inconclusive under --strict.
"""

import argparse
import json
import logging
import sys
import time

from . import cyclotomic, lmfdb, sunits, verdict
from .errors import InconclusiveError, InvalidContextError, TransportError
from .numfield import InertPrimeContext, NumberField, splitting_pattern

log = logging.getLogger("zpfermat")

EXIT_OK, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 2, 3

_SOLUTION = {
    "type": "object",
    "required": ["lambda", "mu", "ord_lambda", "ord_mu", "class", "in_box"],
}

RESULT_SCHEMAS = {
    "verdict": {"required": ["p", "n", "status", "reasons"]},
    "wieferich": {"required": ["lo", "hi", "primes", "count"]},
    "layer-poly": {"required": ["p", "n", "degree", "coeffs", "disc"]},
    "splitting": {"required": ["poly", "q", "pattern", "inert"]},
    "unit-search": {"required": ["count", "solutions", "escaped", "candidates"], "properties": {"solutions": {"type": "array", "items": _SOLUTION}}},
    "sunit-search": {
        "required": ["count", "solutions", "escaped", "candidates", "classes", "conditions_all_pass"],
        "properties": {"solutions": {"type": "array", "items": _SOLUTION}},
    },
    "certify": {"required": ["poly", "p", "n", "checks", "overall", "disc"]},
    "lmfdb-filter": {"required": ["source", "count", "passed", "failed", "inconclusive", "min_disc_label", "parse_errors"]},
}

REPORT_SCHEMA = {
    "type": "object",
    "required": ["subcommand", "inputs", "status", "results", "citations", "elapsed_seconds"],
    "properties": {
        "subcommand": {"enum": sorted(RESULT_SCHEMAS)},
        "inputs": {"type": "object"},
        "status": {"enum": ["ok", "inconclusive", "error"]},
        "results": {"type": "object"},
        "citations": {"type": "array", "items": {"type": "string"}},
        "elapsed_seconds": {"type": "number"},
        "error": {"type": "string"},
    },
}


def report_schema(subcommand):
    """JSON schema for a successful report of ``subcommand``."""
    schema = json.loads(json.dumps(REPORT_SCHEMA))
    res = dict(RESULT_SCHEMAS[subcommand])
    res["type"] = "object"
    schema["properties"]["results"] = res
    return schema


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_poly(text):
    try:
        coeffs = [int(c) for c in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError("polynomial must be comma-separated integers, got %r" % text)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) < 2:
        raise argparse.ArgumentTypeError("polynomial must have degree >= 1")
    return coeffs


def _element_json(a):
    return {"coords": list(a.coords), "denom_exp": a.denom_exp, "text": str(a)}


def _solutions_json(res):
    esc = {e.key() for e in res.escaped}
    return [
        {
            "lambda": _element_json(s.lam),
            "mu": _element_json(s.mu),
            "ord_lambda": s.ord_lambda,
            "ord_mu": s.ord_mu,
            "class": s.lemma9_class,
            "in_box": s.key() not in esc,
        }
        for s in res
    ]


# -- subcommands ------------------------------------------------------------------
# each returns (results, citations, status)


def cmd_verdict(a):
    v = verdict.asymptotic_flt_verdict(a.p, a.n)
    return v.to_dict(), v.citations, "ok"


def cmd_wieferich(a):
    ps = verdict.wieferich_scan(a.lo, a.hi, workers=a.workers)
    return {"lo": a.lo, "hi": a.hi, "primes": ps, "count": len(ps)}, [], "ok"


def cmd_layer_poly(a):
    from .arith import poly_discriminant

    f = cyclotomic.layer_polynomial(a.p, a.n)
    return {"p": a.p, "n": a.n, "degree": len(f) - 1, "coeffs": f, "disc": poly_discriminant(f)}, [], "ok"


def cmd_splitting(a):
    K = NumberField(tuple(a.poly))
    try:
        pat = splitting_pattern(K, a.q)
    except InconclusiveError as exc:
        return {"poly": a.poly, "q": a.q, "pattern": None, "inert": None, "reason": str(exc)}, [], "inconclusive"
    return {"poly": a.poly, "q": a.q, "pattern": list(pat.degrees), "inert": pat.is_inert}, [], "ok"


def cmd_unit_search(a):
    K = NumberField(tuple(a.poly))
    res = sunits.enumerate_unit_solutions(K, a.height)
    out = {
        "count": len(res),
        "in_box_count": len(res.in_box),
        "solutions": _solutions_json(res),
        "escaped": len(res.escaped),
        "candidates": res.candidates,
    }
    return out, [], "ok"


def cmd_sunit_search(a):
    K = NumberField(tuple(a.poly))
    try:
        ctx = InertPrimeContext(K)
    except InconclusiveError as exc:
        return {"count": 0, "solutions": [], "escaped": 0, "candidates": 0, "classes": {}, "conditions_all_pass": None, "reason": str(exc)}, [], "inconclusive"
    res = sunits.enumerate_sunit_solutions(K, ctx, sunits.SearchConfig(a.height, a.denom))
    reports, ok = sunits.check_theorem4_conditions(res)
    classes = {}
    for s in res:
        classes[s.lemma9_class] = classes.get(s.lemma9_class, 0) + 1
    sols = _solutions_json(res)
    for js, rep in zip(sols, reports):
        js["conditions_pass"] = rep.passes
    out = {
        "count": len(res),
        "in_box_count": len(res.in_box),
        "solutions": sols,
        "escaped": len(res.escaped),
        "candidates": res.candidates,
        "classes": classes,
        "conditions_all_pass": ok,
    }
    return out, ["thm:FS"], "ok"


def cmd_certify(a):
    rep = verdict.certify_general_field(a.poly, a.p, a.sample_bound)
    out = rep.to_dict()
    out.pop("citations")
    status = "inconclusive" if rep.overall == "inconclusive" else "ok"
    return out, ["thm:general"], status


def cmd_lmfdb_filter(a):
    if a.live:
        records, errors = lmfdb.fetch_candidates(5, live=True, cursor_path=a.cursor)
        source = {"live": True}
    else:
        header, records, errors = lmfdb.read_fixture(a.fixture)
        source = {"fixture": str(a.fixture or lmfdb.default_fixture()), "header": header}
    res = lmfdb.filter_by_theorem(records, p=a.p, sample_bound=a.sample_bound)
    smallest = min(records, key=lambda r: (abs(r.disc), r.label)) if records else None
    out = {
        "source": source,
        "count": len(records),
        "passed": [r.label for r in res.passed],
        "failed": [r.label for r in res.failed],
        "inconclusive": [r.label for r in res.inconclusive],
        "min_disc_label": smallest.label if smallest else None,
        "parse_errors": errors,
        "record_errors": res.errors,
    }
    status = "inconclusive" if res.inconclusive else "ok"
    return out, ["thm:general"], status


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "text"], default="json")
    common.add_argument("--strict", action="store_true", help="exit 3 on inconclusive results")
    common.add_argument("-v", "--verbose", action="store_true")

    p = _Parser(prog="zpfermat", description=__doc__.strip().splitlines()[0])
    sub = p.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    s = sub.add_parser("verdict", parents=[common])
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_verdict)

    s = sub.add_parser("wieferich", parents=[common])
    s.add_argument("--lo", type=int, required=True)
    s.add_argument("--hi", type=int, required=True)
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_wieferich)

    s = sub.add_parser("layer-poly", parents=[common])
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_layer_poly)

    s = sub.add_parser("splitting", parents=[common])
    s.add_argument("--poly", type=parse_poly, required=True)
    s.add_argument("--q", type=int, required=True)
    s.set_defaults(func=cmd_splitting)

    s = sub.add_parser("unit-search", parents=[common])
    s.add_argument("--poly", type=parse_poly, required=True)
    s.add_argument("--height", type=int, required=True)
    s.set_defaults(func=cmd_unit_search)

    s = sub.add_parser("sunit-search", parents=[common])
    s.add_argument("--poly", type=parse_poly, required=True)
    s.add_argument("--height", type=int, required=True)
    s.add_argument("--denom", type=int, default=1)
    s.set_defaults(func=cmd_sunit_search)

    s = sub.add_parser("certify", parents=[common])
    s.add_argument("--poly", type=parse_poly, required=True)
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--sample-bound", type=int, default=100)
    s.set_defaults(func=cmd_certify)

    s = sub.add_parser("lmfdb-filter", parents=[common])
    src = s.add_mutually_exclusive_group()
    src.add_argument("--fixture", default=None)
    src.add_argument("--live", action="store_true")
    s.add_argument("--cursor", default=None, help="cursor file for resumable live crawls")
    s.add_argument("--p", type=int, default=5)
    s.add_argument("--sample-bound", type=int, default=100)
    s.set_defaults(func=cmd_lmfdb_filter)
    return p


def _glue_poly_args(argv):
    # "--poly -3,9" would be read as an option; bind the value explicitly
    out = []
    it = iter(argv)
    for tok in it:
        if tok == "--poly":
            nxt = next(it, None)
            out.append(tok if nxt is None else "--poly=" + nxt)
        else:
            out.append(tok)
    return out


def render_text(report):
    lines = []

    def walk(prefix, obj):
        if isinstance(obj, dict):
            for k, v in obj.items():
                walk("%s.%s" % (prefix, k) if prefix else str(k), v)
        elif isinstance(obj, list) and obj and isinstance(obj[0], (dict, list)):
            for i, v in enumerate(obj):
                walk("%s[%d]" % (prefix, i), v)
        elif isinstance(obj, list):
            lines.append("%s: %s" % (prefix, " ".join(str(x) for x in obj)))
        else:
            lines.append("%s: %s" % (prefix, obj))

    walk("", report)
    return "\n".join(lines)


def run(argv=None, stdout=None):
    """Run the CLI; returns the exit code."""
    stdout = stdout or sys.stdout
    argv = _glue_poly_args(list(sys.argv[1:] if argv is None else argv))
    fmt = "text" if "--format=text" in argv or ("--format" in argv and argv[argv.index("--format") + 1 : argv.index("--format") + 2] == ["text"]) else "json"
    sub = argv[0] if argv else None
    t0 = time.perf_counter()
    report = {"subcommand": sub, "inputs": {}, "status": "error", "results": {}, "citations": []}
    code = EXIT_OK
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr)
        report["inputs"] = {k: v for k, v in vars(args).items() if k not in ("func", "format", "verbose", "subcommand")}
        results, cites, status = args.func(args)
        report.update(results=results, citations=cites, status=status)
        if status == "inconclusive" and args.strict:
            code = EXIT_INCONCLUSIVE
    except (UsageError, argparse.ArgumentTypeError, ValueError, InvalidContextError) as exc:
        report["error"] = str(exc)
        code = EXIT_USAGE
    except TransportError as exc:
        report["error"] = str(exc)
        code = 1
    report["elapsed_seconds"] = round(time.perf_counter() - t0, 6)
    if code:
        print("zpfermat: %s" % report.get("error", report["status"]), file=sys.stderr)
    if fmt == "text":
        stdout.write(render_text(report) + "\n")
    else:
        stdout.write(json.dumps(report, sort_keys=False) + "\n")
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
