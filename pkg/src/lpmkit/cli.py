"""Command line entry point: ``lpmkit {bases,structure,certify,sweep}``.

Exit codes: 0 ok, 2 invalid pair, 3 precondition violated, 4 undefined
query, 5 falsification found.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import _config
from .errors import (
    FalsificationError,
    HasLoopsError,
    InvalidPairError,
    InvalidPathError,
    PreconditionError,
    RepresentationError,
)
from .lattice_path import PathPair, all_pairs, count_between
from .lpm_structure import (
    coloops_fast,
    loops_fast,
    parallel_pairs_fast,
    quite_simple_coline,
    western_coline,
)
from .matroid_engine import coline_report
from .orient_coflow import nowhere_zero_3_coflow, synthesize_representation
from .transversal import bases, build_lpm

EXIT_OK, EXIT_PAIR, EXIT_PRECONDITION, EXIT_UNDEFINED, EXIT_FALSIFIED = 0, 2, 3, 4, 5


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _fmt_set(s) -> str:
    return "{" + ",".join(map(str, sorted(s))) + "}"


def _build(args):
    return build_lpm(PathPair.parse(args.p, args.q))


def cmd_bases(args, out):
    M = _build(args)
    bs = bases(M)
    if args.format == "json":
        out.write(_dump({"p": args.p, "q": args.q, "count": count_between(M.pair),
                         "bases": [sorted(B) for B in bs]}) + "\n")
    else:
        for B in bs:
            out.write(_fmt_set(B) + "\n")
        out.write(f"{len(bs)} bases\n")
    return EXIT_OK


def structure_report(M) -> dict:
    lp, cl, par = loops_fast(M), coloops_fast(M), parallel_pairs_fast(M)
    simple = not lp and not par
    d = {
        "p": M.p.steps,
        "q": M.q.steps,
        "n": M.n,
        "rank": M.m,
        "loops": sorted(lp),
        "coloops": sorted(cl),
        "parallel_pairs": [list(x) for x in par],
        "simple": simple,
        "western_coline": None,
        "quite_simple_coline": None,
    }
    if simple and M.m >= 2:
        d["western_coline"] = western_coline(M).to_dict()
        d["quite_simple_coline"] = coline_report(M, quite_simple_coline(M)).to_dict()
    return d


def cmd_structure(args, out):
    M = _build(args)
    d = structure_report(M)
    if args.require_simple and not d["simple"]:
        sys.stderr.write("matroid is not simple\n")
        return EXIT_PRECONDITION
    if args.format == "json":
        out.write(_dump(d) + "\n")
        return EXIT_OK
    out.write(f"M[{M.p.steps},{M.q.steps}]  n={M.n} rank={M.m}\n")
    out.write(f"loops: {_fmt_set(d['loops'])}\n")
    out.write(f"coloops: {_fmt_set(d['coloops'])}\n")
    out.write("parallel pairs: " + (" ".join(_fmt_set(x) for x in d["parallel_pairs"]) or "none") + "\n")
    for key, label in (("western_coline", "western coline"), ("quite_simple_coline", "quite simple coline")):
        rep = d[key]
        if rep is None:
            out.write(f"{label}: n/a (needs a simple matroid of rank >= 2)\n")
            continue
        extra = f" j1={rep['j1']} j2={rep['j2']}" if "j1" in rep else ""
        out.write(f"{label}: {_fmt_set(rep['coline'])}{extra} quite_simple={str(rep['quite_simple']).lower()}\n")
        for cp in rep["copoints"]:
            out.write(f"  {cp['kind']:8s} {_fmt_set(cp['set'])}\n")
    return EXIT_OK


def cmd_certify(args, out):
    M = _build(args)
    if loops_fast(M):
        sys.stderr.write("chromatic number undefined on loops\n")
        return EXIT_UNDEFINED
    R = synthesize_representation(M, args.seed)
    cert = nowhere_zero_3_coflow(M, R)
    d = cert.to_dict()
    d["seed"] = R.seed
    if args.format == "json":
        out.write(_dump(d) + "\n")
    else:
        out.write(f"F = {d['F']}\nmax |F(e)| = {d['max_abs']}\nverified = {str(d['verified']).lower()}\n")
    return EXIT_OK


def sweep(nmax: int, budget: int = 8, seed: int = 0, mutate: bool = False):
    """Check the quite simple coline and 3-coflow claims on every pair.

    Returns (per-n summary rows, failure artifacts).
    """
    rows, failures = [], []
    for n in range(1, nmax + 1):
        row = {"n": n, "instances": 0, "simple_rank2": 0, "qsc_ok": 0, "simple": 0, "certified": 0}
        for pair in all_pairs(n):
            row["instances"] += 1
            M = build_lpm(pair)
            if loops_fast(M) or parallel_pairs_fast(M):
                continue
            row["simple"] += 1
            if M.m >= 2:
                row["simple_rank2"] += 1
                W = quite_simple_coline(M)
                rep = coline_report(M, W)
                ok = rep.quite_simple != mutate
                if ok:
                    row["qsc_ok"] += 1
                else:
                    failures.append({"claim": "quite simple coline", "instance": M.to_dict(),
                                     "report": rep.to_dict()})
            if n <= budget:
                try:
                    R = synthesize_representation(M, seed)
                    nowhere_zero_3_coflow(M, R)
                    row["certified"] += 1
                except (FalsificationError, RepresentationError) as exc:
                    art = getattr(exc, "artifact", None) or {"instance": M.to_dict(), "seed": seed}
                    failures.append({"claim": "nowhere-zero 3-coflow", "error": str(exc), **art})
        rows.append(row)
    return rows, failures


def cmd_sweep(args, out):
    rows, failures = sweep(args.nmax, args.budget, args.seed, args.inject_mutation)
    if args.format == "json":
        out.write(_dump({"nmax": args.nmax, "budget": args.budget, "seed": args.seed,
                         "rows": rows, "failures": failures}) + "\n")
    else:
        for r in rows:
            out.write(
                f"n={r['n']}: {r['instances']} pairs, {r['simple']} simple, "
                f"{r['qsc_ok']}/{r['simple_rank2']} quite simple colines, "
                f"{r['certified']} 3-coflow certificates\n")
        out.write(f"{len(failures)} failures\n")
        for f in failures:
            out.write(_dump(f) + "\n")
    return EXIT_FALSIFIED if failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lpmkit", description="Lattice path matroid toolkit")
    ap.add_argument("--level", choices=_config.LEVELS, default=None,
                    help=f"verification level (overridden by ${_config.ENV_VAR})")
    sub = ap.add_subparsers(dest="command", required=True)

    def with_pair(sp):
        sp.add_argument("--p", required=True, help="lower path, e.g. EENENN")
        sp.add_argument("--q", required=True, help="upper path, e.g. NNENEE")

    def with_format(sp, default="text"):
        sp.add_argument("--format", choices=("text", "json"), default=default)

    sp = sub.add_parser("bases", help="list the bases of M[p,q]")
    with_pair(sp)
    with_format(sp)
    sp.set_defaults(func=cmd_bases)

    sp = sub.add_parser("structure", help="loops, coloops, parallel pairs, colines")
    with_pair(sp)
    with_format(sp)
    sp.add_argument("--require-simple", action="store_true")
    sp.set_defaults(func=cmd_structure)

    sp = sub.add_parser("certify", help="nowhere-zero coflow with |F(e)| < 3")
    with_pair(sp)
    with_format(sp, default="json")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_certify)

    sp = sub.add_parser("sweep", help="exhaustive check over all pairs up to --nmax")
    sp.add_argument("--nmax", type=int, required=True)
    sp.add_argument("--budget", type=int, default=8, help="largest n for the coflow check")
    sp.add_argument("--seed", type=int, default=0)
    with_format(sp)
    sp.add_argument("--inject-mutation", action="store_true", help=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_sweep)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    for name in ("nmax", "budget"):
        if getattr(args, name, 1) < 1:
            sys.stderr.write(f"--{name} must be positive\n")
            return EXIT_PRECONDITION
    _config.configure(_config.oracle_level(args.level))
    try:
        return args.func(args, out)
    except (InvalidPathError, InvalidPairError) as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_PAIR
    except HasLoopsError as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_UNDEFINED if args.command == "certify" else EXIT_PRECONDITION
    except PreconditionError as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_PRECONDITION
    except (FalsificationError, RepresentationError) as exc:
        sys.stderr.write(f"{exc}\n")
        art = getattr(exc, "artifact", None)
        if art:
            out.write(_dump(art) + "\n")
        return EXIT_FALSIFIED


if __name__ == "__main__":
    sys.exit(main())
