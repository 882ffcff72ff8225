"""Command-line driver: exact module data, verification reports, exports.

Exit codes: 0 all checks pass, 1 a verification failed, 2 usage error,
3 inconclusive (a root-enclosure budget ran out).

Results of the heavier computations are cached as one JSON file per record
under the directory named by KY_CACHE_DIR (default ".ky-cache"); records
carry an engine version stamp and are recomputed on mismatch.  Writes are
atomic (write to a temp file, then rename), so racing invocations at worst
recompute the same payload.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from fractions import Fraction

from . import __version__
from .exactmath import Polynomial
from .gram import ModuleLabel, factor_one_cup, gram_det, gram_matrix
from .morphisms import divisibility_check, submodule_verify
from .rollet import RolletGraph, arm_verify, export_dot, export_json
from .roots import verify_root_layout

ENGINE_VERSION = __version__

_warned_unwritable = False


def _parse_partition(s: str) -> tuple[int, ...]:
    s = s.strip()
    if not s:
        return ()
    try:
        parts = tuple(int(x) for x in s.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad partition {s!r}: use e.g. 2,1")
    if any(a < b for a, b in zip(parts, parts[1:])) or any(a <= 0 for a in parts):
        raise argparse.ArgumentTypeError(
            f"bad partition {s!r}: parts must be positive and weakly decreasing")
    return parts


def _parse_alpha(s: str):
    """A rational value "p/q", or "minpoly:c0,c1,..." for an algebraic one."""
    if s.startswith("minpoly:"):
        coeffs = [Fraction(x) for x in s[len("minpoly:"):].split(",")]
        return Polynomial(coeffs)
    return Fraction(s)


# ---------------------------------------------------------------------------
# cache
# ---------------------------------------------------------------------------

def cache_get_put(cache_dir: str, key: str, producer):
    """Fetch a payload by key, computing and persisting it on a miss.

    Corrupt records are rebuilt with a warning; an unwritable directory
    degrades to compute-without-persist (warned once per process).
    """
    global _warned_unwritable
    path = os.path.join(cache_dir, key + ".json")
    try:
        with open(path) as fh:
            rec = json.load(fh)
        if rec.get("version") == ENGINE_VERSION and "payload" in rec:
            return rec["payload"]
    except FileNotFoundError:
        pass
    except (json.JSONDecodeError, OSError, ValueError):
        print(f"warning: corrupt cache record {path}, rebuilding", file=sys.stderr)
    payload = producer()
    rec = {"key": key, "version": ENGINE_VERSION, "payload": payload}
    try:
        os.makedirs(cache_dir, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            json.dump(rec, fh, sort_keys=True)
        os.replace(tmp, path)
    except OSError:
        if not _warned_unwritable:
            print(f"warning: cache directory {cache_dir} not writable; "
                  "results will not be persisted", file=sys.stderr)
            _warned_unwritable = True
    return payload


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _emit(args, text: str):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _cmd_gram(args) -> int:
    label = ModuleLabel(args.l, args.n, args.p, args.lam)

    def produce():
        inst = gram_matrix(label)
        payload = {"label": {"l": label.l, "n": label.n, "p": label.p,
                             "lambda": list(label.lam)},
                   "dim": inst.dim,
                   "det": inst.det_monic.to_json()}
        if not args.det:
            payload["matrix"] = [[p.to_json() for p in row]
                                 for row in inst.matrix.entries]
        return payload

    payload = cache_get_put(args.cache_dir, "gram_" + label.key()
                            + ("_det" if args.det else "_full"), produce)
    if args.format == "csv":
        lines = []
        if "matrix" in payload:
            for row in payload["matrix"]:
                lines.append(",".join(str(Polynomial.from_json(p)) for p in row))
        lines.append("det," + str(Polynomial.from_json(payload["det"])))
        _emit(args, "\n".join(lines))
    else:
        _emit(args, json.dumps(payload, indent=2, sort_keys=True))
    return 0


def _cmd_series(args) -> int:
    if sum(args.lam) != args.l + 2:
        print(f"error: series labels carry partitions of l+2 = {args.l + 2}",
              file=sys.stderr)
        return 2

    def produce():
        c, series = factor_one_cup(args.l, args.lam)
        return {"l": args.l, "lambda": list(args.lam),
                "C": c.to_json(), "P": series.to_json()}

    key = f"series_l{args.l}_lam{'-'.join(map(str, args.lam))}"
    payload = cache_get_put(args.cache_dir, key, produce)
    if args.format == "csv":
        c = Polynomial.from_json(payload["C"])
        p = payload["P"]
        _emit(args, "\n".join([
            f"C,{c}",
            f"P_{p['anchor']},{Polynomial.from_json(p['pN'])}",
            f"P_{p['anchor'] + 1},{Polynomial.from_json(p['pN1'])}"]))
    else:
        _emit(args, json.dumps(payload, indent=2, sort_keys=True))
    return 0


def _cmd_rollet(args) -> int:
    p_max = args.max_p if args.max_p is not None else args.max_n
    if p_max is None:
        print("error: rollet needs --max-n or --max-p", file=sys.stderr)
        return 2
    graph = RolletGraph(args.l, p_max)
    if args.format == "dot":
        _emit(args, export_dot(graph))
        return 0
    n_values = range(args.max_n + 1) if args.max_n is not None else ()
    decorations = args.decorate or []

    def produce():
        return json.loads(export_json(graph, n_values=n_values,
                                      decorate_det="det" in decorations,
                                      decorate_mvf="mvf" in decorations))

    key = (f"rollet_l{args.l}_p{p_max}_n{args.max_n}"
           f"_{'-'.join(sorted(decorations)) or 'plain'}")
    payload = cache_get_put(args.cache_dir, key, produce)
    _emit(args, json.dumps(payload, indent=2, sort_keys=True))
    return 0


def _cmd_verify(args) -> int:
    if args.what != "arm":
        print(f"error: unknown verification {args.what!r} (expected 'arm')",
              file=sys.stderr)
        return 2
    if sum(args.lam) != args.l + 2:
        print(f"error: arm labels carry partitions of l+2 = {args.l + 2}",
              file=sys.stderr)
        return 2
    max_p = args.max_p if args.max_p is not None else args.l + 6
    m_max = args.m if args.m is not None else 1
    records = arm_verify(args.l, args.lam, range(args.l + 2, max_p + 1),
                         range(1, m_max + 1))
    payload = {"l": args.l, "lambda": list(args.lam),
               "records": [{"p": r.p, "m": r.m, "n": r.n, "equal": r.equal,
                            "residual": {"num": r.residual.num.to_json(),
                                         "den": r.residual.den.to_json()}}
                           for r in records]}
    _emit(args, json.dumps(payload, indent=2, sort_keys=True))
    return 0 if all(r.equal for r in records) else 1


def _cmd_roots(args) -> int:
    if sum(args.lam) != args.l + 2:
        print(f"error: root families carry partitions of l+2 = {args.l + 2}",
              file=sys.stderr)
        return 2
    k = (args.n - args.l - 4) if args.n is not None else 1
    if k < 0:
        print("error: rank must be at least l+4", file=sys.stderr)
        return 2
    report = verify_root_layout(args.l, args.lam, k)
    _emit(args, json.dumps(report, indent=2, sort_keys=True))
    if report["status"] == "pass":
        return 0
    return 3 if report["status"] == "inconclusive" else 1


def _cmd_bootstrap(args) -> int:
    if sum(args.lam) != args.l + 2:
        print(f"error: bootstrap labels carry partitions of l+2 = {args.l + 2}",
              file=sys.stderr)
        return 2
    n = args.n if args.n is not None else args.l + 4
    if args.alpha is not None:
        report = submodule_verify(args.l, args.lam, n, args.alpha,
                                  target=args.target)
    else:
        report = divisibility_check(args.l, args.lam, n)
    _emit(args, json.dumps(report, indent=2, sort_keys=True))
    return 0 if report["status"] == "pass" else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kadaryu",
        description="Exact Gram determinants and verification for the "
                    "bounded-height diagram algebra towers")
    parser.add_argument("--version", action="version", version=ENGINE_VERSION)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, label=False, series_label=False):
        p.add_argument("--l", type=int, required=True, help="height bound")
        if label:
            p.add_argument("--n", type=int, required=True, help="rank")
            p.add_argument("--p", type=int, required=True,
                           help="propagating-line count")
        if label or series_label:
            p.add_argument("--lambda", dest="lam", type=_parse_partition,
                           required=True, help="partition, e.g. 2,1")
        p.add_argument("--format", choices=("json", "csv", "dot"),
                       default="json")
        p.add_argument("--out", help="write output to a file")
        p.add_argument("--seed", type=int, default=0,
                       help="seed for randomized checks (reproducibility)")
        p.add_argument("--cache-dir",
                       default=os.environ.get("KY_CACHE_DIR", ".ky-cache"))

    g = sub.add_parser("gram", help="Gram matrix / determinant of a module")
    common(g, label=True)
    g.add_argument("--det", action="store_true",
                   help="print only the monic determinant")
    g.set_defaults(func=_cmd_gram)

    s = sub.add_parser("series", help="one-cup determinant factorisation")
    common(s, series_label=True)
    s.set_defaults(func=_cmd_series)

    r = sub.add_parser("rollet", help="build/decorate/export the branching graph")
    common(r)
    r.add_argument("--max-n", type=int, help="largest rank to decorate")
    r.add_argument("--max-p", type=int, help="largest propagating count")
    r.add_argument("--decorate", action="append", choices=("det", "mvf"),
                   help="vertex decorations (repeatable)")
    r.set_defaults(func=_cmd_rollet)

    v = sub.add_parser("verify", help="verification drivers")
    v.add_argument("what", choices=("arm",))
    common(v, series_label=True)
    v.add_argument("--max-p", type=int)
    v.add_argument("--m", type=int, help="largest cup count")
    v.set_defaults(func=_cmd_verify)

    ro = sub.add_parser("roots", help="certified root layout of a family member")
    common(ro, series_label=True)
    ro.add_argument("--n", type=int, help="rank of the family member (default l+5)")
    ro.set_defaults(func=_cmd_roots)

    b = sub.add_parser("bootstrap", help="bootstrap element / submodule checks")
    common(b, series_label=True)
    b.add_argument("--n", type=int, help="rank (default l+4)")
    b.add_argument("--alpha", type=_parse_alpha,
                   help="parameter value: rational, or minpoly:c0,c1,...")
    b.add_argument("--target", type=_parse_partition,
                   help="target module partition for twisted embeddings")
    b.set_defaults(func=_cmd_bootstrap)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; version/help exit 0
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, NotImplementedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
