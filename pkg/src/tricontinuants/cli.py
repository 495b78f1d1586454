"""Command-line front end: ``tricontinuants <verb> [flags]``."""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from . import combinatorics as comb
from . import identities as ids
from .continuants import DEFAULT_MAX_K, POLY_NAMES, poly_by_name
from .monoid_ring import indices, sort_key, substitute, word_to_str

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

FAMILIES = comb.MONOMIAL_FAMILIES + comb.SEQUENCE_FAMILIES
REPORT_NMAX = 14


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse exits 2 too, but keep the message on stderr uniform
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _kmax(text: str):
    if text == "default":
        return None
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or 'default', got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tricontinuants", description="Continuants of a three-limit continued fraction.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def common(sp, default_format):
        sp.add_argument("--format", choices=("text", "json"), default=default_format)
        sp.add_argument("--out", metavar="PATH", help="write output here instead of stdout")

    sp = sub.add_parser("compute", help="build one polynomial from its recurrence")
    sp.add_argument("--poly", choices=POLY_NAMES, required=True)
    sp.add_argument("--k", type=int, required=True)
    common(sp, "text")

    sp = sub.add_parser("enumerate", help="list the members of a family")
    sp.add_argument("--family", choices=FAMILIES, required=True)
    sp.add_argument("--k", type=int, required=True)
    common(sp, "text")

    sp = sub.add_parser("verify", help="check identities exactly over a range of k")
    sp.add_argument("--identity", required=True, help="identity name or 'all'")
    sp.add_argument("--kmax", type=_kmax, default=None, help="integer or 'default'")
    common(sp, "json")

    sp = sub.add_parser("sequence", help="print a counting sequence")
    sp.add_argument("--sequence", required=True, choices=tuple(ids.TABLES))
    sp.add_argument("--nmax", type=int, required=True)
    common(sp, "text")

    sp = sub.add_parser("report", help="counting tables next to the actual support sizes")
    sp.add_argument("--nmax", type=int, default=REPORT_NMAX)
    common(sp, "text")
    return p


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


# ---- verbs -------------------------------------------------------------------


def _compute(args) -> tuple[str, int]:
    if args.k < 0 or args.k > DEFAULT_MAX_K:
        raise UsageError(f"--k must lie in [0, {DEFAULT_MAX_K}]")
    poly = poly_by_name(args.poly, args.k)
    if args.format == "json":
        return _dump({"poly": args.poly, "k": args.k, **poly.to_dict()}), EXIT_OK
    return poly.to_text(), EXIT_OK


def _enumerate(args) -> tuple[str, int]:
    if args.k < 0 or args.k > DEFAULT_MAX_K:
        raise UsageError(f"--k must lie in [0, {DEFAULT_MAX_K}]")
    if args.family in comb.SEQUENCE_FAMILIES:
        seqs = sorted(comb.enumerate_seq_family(args.family, args.k))
        members = [{"index": list(s)} for s in seqs]
        lines = [" ".join(map(str, s)) for s in seqs]
    else:
        words = sorted(comb.enumerate_family(args.family, args.k), key=sort_key)
        members = [{"word": [str(g) for g in m], "index": list(indices(m).lam)} for m in words]
        lines = [word_to_str(m) for m in words]
    if args.format == "json":
        return _dump({"family": args.family, "k": args.k, "members": members}), EXIT_OK
    return "\n".join(lines), EXIT_OK


def _verify(args) -> tuple[str, int]:
    names = ids.identity_names() if args.identity == "all" else [args.identity]
    if args.identity != "all" and args.identity not in ids.IDENTITIES:
        raise UsageError(f"unknown identity {args.identity!r}; known: all, {', '.join(ids.IDENTITIES)}")
    if args.identity == "all":
        # clip an explicit kmax to each identity's own cap
        kmaxes = {}
        for n in names:
            cap = ids.IDENTITIES[n].max_kmax
            k = args.kmax if args.kmax is None or cap is None else min(args.kmax, cap)
            kmaxes[n] = k
    else:
        kmaxes = {names[0]: args.kmax}
    try:
        resolved = {n: ids.resolve_kmax(n, k) for n, k in kmaxes.items()}
    except ValueError as exc:
        raise UsageError(str(exc)) from None

    reports = [ids.verify(n, resolved[n]) for n in names]
    code = EXIT_OK if all(r.ok for r in reports) else EXIT_FAILED
    if args.format == "json":
        payload = [r.to_dict() for r in reports]
        return _dump(payload if args.identity == "all" else payload[0]), code
    lines = []
    for r in reports:
        lo, hi = r.k_checked
        line = f"{r.identity}: {r.status} for k = {lo}..{hi}"
        if r.first_failure:
            f = r.first_failure
            line += f" (first failure at k = {f['k']}: {f['lhs']} != {f['rhs']})"
        lines.append(line)
    return "\n".join(lines), code


def _sequence(args) -> tuple[str, int]:
    if args.nmax < 0:
        raise UsageError("--nmax must be >= 0")
    values = ids.sequence(args.sequence, args.nmax)
    if args.format == "json":
        return _dump({"sequence": args.sequence, "values": values}), EXIT_OK
    return " ".join(map(str, values)), EXIT_OK


def _report_rows(n_max: int) -> list[dict]:
    def zero_b(g):
        return 0 if g.letter == "b" else None

    def zero_a_b0(g):
        return 0 if g.letter == "a" or g.subscript == 0 else None

    def union(name, n):
        return len(comb.enumerate_family(name, n) | comb.enumerate_family(name, n - 1))

    actual = {
        "r": lambda n: len(poly_by_name("R", n)),
        "s": lambda n: len(comb.enumerate_family("R", n)),
        "u": lambda n: len(substitute(poly_by_name("R", n), zero_b)),
        "u_set": lambda n: len(comb.enumerate_family("U", n)),
        "tribonacci": lambda n: len(substitute(poly_by_name("R", n), zero_a_b0)),
        "v_set": lambda n: len(comb.enumerate_family("V", n)),
        "p_support": lambda n: len(poly_by_name("P", n)),
        "p_set": lambda n: union("R", n),
        "c_support": lambda n: len(poly_by_name("C", n)),
        "c_set": lambda n: union("U", n),
        "g_support": lambda n: len(poly_by_name("G", n)),
        "g_set": lambda n: union("V", n),
    }
    rows = []
    for name, fn in actual.items():
        table = ids.TABLES[name]
        rows.append({
            "sequence": name,
            "description": table.description,
            "recurrence": table.values(n_max),
            "generating_function": ids.gf_coefficients(table, n_max),
            "actual": [fn(n) for n in range(n_max + 1)],
        })
    return rows


def _report(args) -> tuple[str, int]:
    if args.nmax < 0 or args.nmax > DEFAULT_MAX_K:
        raise UsageError(f"--nmax must lie in [0, {DEFAULT_MAX_K}]")
    rows = _report_rows(args.nmax)
    ok = all(r["recurrence"] == r["generating_function"] == r["actual"] for r in rows)
    code = EXIT_OK if ok else EXIT_FAILED
    if args.format == "json":
        return _dump({"nmax": args.nmax, "rows": rows}), code
    out = []
    for r in rows:
        mark = "ok" if r["recurrence"] == r["generating_function"] == r["actual"] else "MISMATCH"
        out.append(f"{r['sequence']} ({r['description']}): {mark}")
        for key in ("recurrence", "generating_function", "actual"):
            out.append(f"  {key:<20} " + " ".join(map(str, r[key])))
    return "\n".join(out), code


_VERBS = {
    "compute": _compute,
    "enumerate": _enumerate,
    "verify": _verify,
    "sequence": _sequence,
    "report": _report,
}


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        text, code = _VERBS[args.verb](args)
    except UsageError as exc:
        print(f"tricontinuants: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
