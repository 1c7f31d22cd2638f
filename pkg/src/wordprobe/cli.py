"""Command-line front end.

Exit codes: 0 success, 1 a claim or property check failed, 2 usage or
parameter error, 3 the length cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .analysis import (
    decompose_generation,
    factor_set,
    recurrence_profile,
    reversal_closure_check,
)
from .claims import ClaimConfig, ClaimResult, Report, claim_ids, run_all
from .errors import ParameterError, ResourceError, UnknownClaimError, WordprobeError
from .generators import FAMILIES, MORPHIC, build_generation, get_max_length, prefix
from .index import build_pal_tree
from .words import Word

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3
DEFAULT_LENGTH = 1 << 20
DEFAULT_CONFIRM = 1 << 19
SELECTORS = ["x", "y", "z", "t", "gx", "ft"]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_source(p: argparse.ArgumentParser, default_length: int | None = DEFAULT_LENGTH, required=False):
    p.add_argument("--family", choices=SELECTORS, required=True)
    src = p.add_mutually_exclusive_group(required=required)
    src.add_argument("--length", type=int, default=None, help=f"prefix length (default {default_length})")
    src.add_argument("--generation", type=int, default=None, help="use the n-th generation instead")
    p.set_defaults(default_length=default_length)


def _add_output(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--output", "-o", default=None, help="write to this file instead of stdout")
    p.add_argument("--max-length", type=int, default=None, help="length cap (overrides WORDPROBE_MAX_LENGTH)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wordprobe", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"wordprobe {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="print a generation or a prefix")
    _add_source(p, default_length=None, required=True)
    _add_output(p)

    p = sub.add_parser("palindromes", help="distinct palindromic factors")
    _add_source(p)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--list", dest="mode", action="store_const", const="list")
    mode.add_argument("--count", dest="mode", action="store_const", const="count")
    mode.add_argument("--max-len", dest="mode", action="store_const", const="max-len")
    _add_output(p)

    p = sub.add_parser("factors", help="distinct factors of one length")
    _add_source(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--list", action="store_true", help="list the factors instead of counting")
    _add_output(p)

    p = sub.add_parser("closure", help="reversal closure of Fac_m for m = 1..max-m")
    _add_source(p)
    p.add_argument("--max-m", type=int, default=20)
    _add_output(p)

    p = sub.add_parser("recurrence", help="return-gap profile and stability")
    _add_source(p)
    p.add_argument("--max-m", type=int, default=20)
    p.add_argument("--confirm", type=int, default=None, help=f"shorter prefix length (default {DEFAULT_CONFIRM})")
    _add_output(p)

    p = sub.add_parser("decompose", help="split w_{p+n} into blocks of w_p")
    p.add_argument("--family", choices=sorted(FAMILIES), default="x")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    _add_output(p)

    p = sub.add_parser("verify", help="run the claim registry")
    p.add_argument("--claims", default=None, help="comma-separated ids, e.g. C3,C10 (default: all)")
    p.add_argument("--length", type=int, default=DEFAULT_LENGTH, help="prefix length for evidence claims")
    p.add_argument("--confirm", type=int, default=DEFAULT_CONFIRM)
    p.add_argument("--max-m", type=int, default=20)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-runtime", action="store_true", help="omit runtime_ms for byte-stable reports")
    _add_output(p)
    return parser


def _source(args) -> Word:
    cap = get_max_length(args.max_length)
    if args.generation is not None:
        if args.family in FAMILIES:
            return build_generation(FAMILIES[args.family], args.generation, cap)
        mw = MORPHIC[args.family]
        base = build_generation(mw.base, args.generation, cap)
        images = mw.morphism.images
        out_length = sum(base.codes.count(bytes((a,))) * len(img) for a, img in enumerate(images))
        if out_length > cap:
            raise ResourceError(out_length, cap)
        return mw.morphism(base)
    length = args.length if args.length is not None else args.default_length
    return prefix(args.family, length, cap)


def _emit(text: str, path: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _command_json(args, source_length: int, ok: bool, result: dict) -> str:
    doc = {
        "version": __version__,
        "command": args.command,
        "family": args.family,
        "source_length": source_length,
        "ok": ok,
        "result": result,
    }
    return json.dumps(doc, indent=2)


def cmd_gen(args) -> int:
    w = _source(args)
    if args.format == "json":
        _emit(_command_json(args, len(w), True, {"word": str(w)}), args.output)
    else:
        _emit(str(w), args.output)
    return EXIT_OK


def cmd_palindromes(args) -> int:
    w = _source(args)
    tree = build_pal_tree(w)
    pals = [str(p) for p in tree.palindromic_factors()]
    mode = args.mode or "list"
    result = {"count": len(pals), "max_length": tree.max_palindrome_length()}
    if mode == "list":
        result["palindromes"] = pals
    if args.format == "json":
        text = _command_json(args, len(w), True, result)
    elif mode == "list":
        text = "\n".join(pals)
    elif mode == "count":
        text = str(result["count"])
    else:
        text = str(result["max_length"])
    _emit(text, args.output)
    return EXIT_OK


def cmd_factors(args) -> int:
    w = _source(args)
    fs = factor_set(w, args.m)
    result = {"m": args.m, "count": len(fs)}
    if args.list:
        result["factors"] = [str(u) for u in fs.sorted()]
    if args.format == "json":
        text = _command_json(args, len(w), True, result)
    elif args.list:
        text = "\n".join(result["factors"])
    else:
        text = str(len(fs))
    _emit(text, args.output)
    return EXIT_OK


def cmd_closure(args) -> int:
    w = _source(args)
    rows = []
    for m in range(1, args.max_m + 1):
        check = reversal_closure_check(w, m)
        rows.append({"m": m, "closed": check.ok, "witness": None if check.ok else str(check.witness)})
    ok = all(r["closed"] for r in rows)
    if args.format == "json":
        text = _command_json(args, len(w), ok, {"per_m": rows})
    else:
        lines = [
            f"m={r['m']:<3d} closed" if r["closed"] else f"m={r['m']:<3d} open    witness={r['witness']}"
            for r in rows
        ]
        text = "\n".join(lines)
    _emit(text, args.output)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_recurrence(args) -> int:
    w = _source(args)
    confirm = args.confirm if args.confirm is not None else min(DEFAULT_CONFIRM, len(w) // 2)
    profile = recurrence_profile(w, args.max_m, confirm)
    rows = [
        {
            "m": r.m,
            "factor_count": r.factor_count,
            "max_gap": r.max_gap,
            "window_bound": r.window_bound,
            "stable": r.stable,
        }
        for r in profile.rows
    ]
    ok = profile.all_stable and profile.all_finite
    if args.format == "json":
        result = {"confirm_length": confirm, "profile": rows}
        text = _command_json(args, len(w), ok, result)
    else:
        lines = [f"{'m':>3} {'factors':>8} {'max_gap':>8} {'R(m)':>8} stable"]
        for r in rows:
            bound = "inf" if r["window_bound"] is None else str(r["window_bound"])
            lines.append(f"{r['m']:>3} {r['factor_count']:>8} {r['max_gap']:>8} {bound:>8} {'yes' if r['stable'] else 'no'}")
        text = "\n".join(lines)
    _emit(text, args.output)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_decompose(args) -> int:
    family = FAMILIES[args.family]
    cap = get_max_length(args.max_length)
    if family.generation_length(args.p + args.n) > cap:
        raise ResourceError(family.generation_length(args.p + args.n), cap)
    d = decompose_generation(family, args.p, args.n)
    seps = [str(s) for s in d.separators]
    if args.format == "json":
        result = {
            "p": args.p,
            "n": args.n,
            "separators": seps,
            "valid": d.valid,
            "first_bad_block": d.first_bad_block,
        }
        text = _command_json(args, family.generation_length(args.p + args.n), d.valid, result)
    else:
        text = f"{'valid' if d.valid else 'invalid'}\n" + " ".join(seps)
    _emit(text, args.output)
    return EXIT_OK if d.valid else EXIT_FAIL


def _key_details(result: ClaimResult) -> str:
    d = result.details
    if "witness" in d:
        return f"witness={json.dumps(d['witness'], separators=(',', ':'))}"
    parts = []
    for key, value in d.items():
        if isinstance(value, (bool, int, str)) or value is None:
            parts.append(f"{key}={json.dumps(value)}")
        elif key == "palindromes" and isinstance(value, list) and len(value) <= 8:
            parts.append(f"palindromes={','.join(value)}")
    text = " ".join(parts)
    return text if len(text) <= 90 else text[:87] + "..."


def render_report(report: Report | list, fmt: str = "text", with_runtime: bool = True) -> str:
    if not isinstance(report, Report):
        report = Report(ClaimConfig().to_dict(), list(report))
    if fmt == "json":
        return json.dumps(report.to_dict(with_runtime), indent=2) + "\n"
    header = ["id", "status", "kind", "runtime_ms", "details"]
    rows = [
        [r.id, r.status, r.kind, f"{r.runtime_ms:.1f}" if with_runtime else "-", _key_details(r)]
        for r in report.results
    ]
    widths = [max(len(header[i]), *(len(row[i]) for row in rows)) for i in range(4)]
    lines = []
    for row in [header] + rows:
        cells = [row[i].ljust(widths[i]) for i in range(4)] + [row[4]]
        lines.append("  ".join(cells).rstrip())
    s = report.summary
    lines.append(f"summary: pass={s['pass']} fail={s['fail']} error={s['error']}")
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> int:
    ids = None
    if args.claims:
        ids = [c.strip().upper() for c in args.claims.split(",") if c.strip()]
    if args.length > get_max_length(args.max_length):
        raise ResourceError(args.length, get_max_length(args.max_length))
    confirm = args.confirm if args.confirm < args.length else args.length // 2
    cfg = ClaimConfig(
        prefix_length=args.length,
        confirm_length=confirm,
        max_m=args.max_m,
        max_length=args.max_length,
    )
    report = run_all(cfg, ids, jobs=args.jobs)
    _emit(render_report(report, args.format, not args.no_runtime), args.output)
    if report.summary["error"] and not report.summary["fail"]:
        resource = any(r.details.get("error") == "resource" for r in report.results)
        return EXIT_RESOURCE if resource else EXIT_FAIL
    return EXIT_OK if report.all_pass else EXIT_FAIL


COMMANDS = {
    "gen": cmd_gen,
    "palindromes": cmd_palindromes,
    "factors": cmd_factors,
    "closure": cmd_closure,
    "recurrence": cmd_recurrence,
    "decompose": cmd_decompose,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except ResourceError as exc:
        print(f"wordprobe: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except UnknownClaimError as exc:
        print(f"wordprobe: {exc}; known: {','.join(claim_ids())}", file=sys.stderr)
        return EXIT_USAGE
    except (ParameterError, WordprobeError, ValueError) as exc:
        print(f"wordprobe: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
