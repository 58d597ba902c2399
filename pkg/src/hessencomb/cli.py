"""Command-line interface: ``hessencomb <subcommand> ...``.

Exit status is 0 when everything checked passes, 1 when an identity fails,
and 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import gkm
from .cache import cached_csf
from .core import parse_hessenberg
from .errors import HessencombError
from .generators import A_i, build_report, generators_k
from .orientations import (
    asc, descending_edge_count, enumerate_orientations, graph_type_classes, sinks,
    sources,
)
from .reporting import canonical_dumps
from .suites import SUITES, enumerate_hessenberg, run_suite
from .symfun import omega_e_to_h

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _emit(data, as_json, text):
    if as_json:
        sys.stdout.write(canonical_dumps(data))
    else:
        print(text)


def _perms(ws):
    return " ".join(str(w) for w in ws) or "-"


def cmd_report(args):
    h = parse_hessenberg(args.h)
    rep = build_report(h)
    data = rep.to_json()
    lines = [f"h = ({h})   T = {sorted(h.T)}   N_h = {h.N_h}"]
    lines.append("|G_h^k| = " + ", ".join(str(len(g)) for g in rep.G_by_k))
    for i in range(1, h.n):
        lines.append(f"i={i}  w={rep.w_list[i - 1]}  d={rep.d[i - 1]}  "
                     f"alpha={tuple(rep.alpha[i - 1])}  stab={data['stabilizers'][i - 1]}")
        lines.append(f"     A: {_perms(rep.A_sets[i - 1])}")
        lines.append(f"     P: {_perms(rep.P_sets[i - 1])}")
    lines.append(f"dim H^2 = {sum(rep.d)}")
    _emit(data, args.json, "\n".join(lines))
    return EXIT_OK


def cmd_generators(args):
    h = parse_hessenberg(args.h)
    ks = [args.k] if args.k is not None else range(h.N_h + 1)
    by_k = {k: generators_k(h, k) for k in ks}
    data = {"format": 1, "h": list(h.values),
            "generators": [{"k": k, "perms": [str(w) for w in ws]} for k, ws in by_k.items()]}
    text = "\n".join(f"k={k} ({len(ws)}): {_perms(ws)}" for k, ws in by_k.items())
    _emit(data, args.json, text)
    return EXIT_OK


def cmd_orientations(args):
    h = parse_hessenberg(args.h)
    rows = []
    for o in enumerate_orientations(h):
        rows.append({
            "orientation": o.to_json()["edges"],
            "descending": descending_edge_count(o),
            "asc": asc(o),
            "sinks": sorted(sinks(o)),
            "sources": sorted(sources(o)),
        })
    data = {"format": 1, "h": list(h.values), "count": len(rows), "orientations": rows}
    text = [f"{len(rows)} acyclic orientations of G_h, h = ({h})"]
    for r in rows:
        rev = [f"{j}-{i}" for j, i, d in r["orientation"] if d == "rev"]
        text.append(f"  reversed {{{', '.join(rev)}}}  asc={r['asc']}  sinks={r['sinks']}")
    _emit(data, args.json, "\n".join(text))
    return EXIT_OK


def cmd_ai(args):
    h = parse_hessenberg(args.h)
    idx = [args.i] if args.i is not None else range(1, h.n)
    sets = {i: A_i(h, i) for i in idx}
    data = {"format": 1, "h": list(h.values),
            "A": [{"i": i, "perms": [str(u) for u in us]} for i, us in sets.items()]}
    _emit(data, args.json, "\n".join(f"A_{i}: {_perms(us)}" for i, us in sets.items()))
    return EXIT_OK


def cmd_partition(args):
    h = parse_hessenberg(args.h)
    classes = graph_type_classes(h, args.k)
    data = {"format": 1, "h": list(h.values), "k": args.k,
            "classes": [[str(w) for w in c] for c in classes]}
    text = "\n".join(f"[{_perms(c)}]" for c in classes) or "(empty)"
    _emit(data, args.json, text)
    return EXIT_OK


def cmd_csf(args):
    h = parse_hessenberg(args.h)
    x = cached_csf(h, use_cache=not args.no_cache)
    f = {"m": x.m_coeffs, "e": x.e_coeffs}.get(args.basis)
    if f is None:
        f = omega_e_to_h(x.e_coeffs)
    data = dict(f.to_json(), format=1, h=list(h.values))
    text = "\n".join(f"{args.basis}{tuple(lam)}: {c}" for lam, c in f.sorted_terms())
    _emit(data, args.json, text)
    return EXIT_OK


def cmd_gkm_check(args):
    h = parse_hessenberg(args.h)
    with open(args.classes) as fh:
        payload = json.load(fh)
    items = payload if isinstance(payload, list) else [payload]
    g = gkm.build_gkm(h)
    results = [gkm.is_equivariant_class(g, gkm.EquivariantClass.from_json(c)) for c in items]
    data = {"format": 1, "h": list(h.values), "results": results}
    _emit(data, args.json, "\n".join(
        f"class {k}: {'equivariant' if r else 'NOT equivariant'}" for k, r in enumerate(results)))
    return EXIT_OK if all(results) else EXIT_FAIL


def cmd_verify(args):
    report = run_suite(args.suite, n_max=args.n_max, jobs=args.jobs,
                       use_cache=not args.no_cache)
    if args.json:
        sys.stdout.write(report.dumps(include_timing=args.timing))
    else:
        s = report.summary
        for e in report.failures():
            print(f"FAIL {e.identity} h={e.h} {e.params}: lhs={e.lhs!r} rhs={e.rhs!r}")
        print(f"suite {args.suite}: {s['passed']}/{s['total']} passed "
              f"in {report.wall_time:.1f}s")
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_universe(args):
    hs = enumerate_hessenberg(args.n)
    data = {"format": 1, "n": args.n, "count": len(hs), "h": [list(h.values) for h in hs]}
    _emit(data, args.json, "\n".join(str(h) for h in hs))
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="hessencomb", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_, needs_h=True):
        sp = sub.add_parser(name, help=help_)
        if needs_h:
            sp.add_argument("--h", required=True, help="Hessenberg function, e.g. 2,4,4,4")
        sp.add_argument("--json", action="store_true", help="emit canonical JSON")
        sp.set_defaults(func=func)
        return sp

    add("report", cmd_report, "full degree-one report")
    add("generators", cmd_generators, "module generators by degree").add_argument(
        "--k", type=int, default=None)
    add("orientations", cmd_orientations, "acyclic orientations of G_h")
    add("ai", cmd_ai, "correction sets A_i").add_argument("--i", type=int, default=None)
    add("partition", cmd_partition, "graph-type classes of {ell_h = k}").add_argument(
        "--k", type=int, default=1)
    sp = add("csf", cmd_csf, "chromatic quasisymmetric function")
    sp.add_argument("--basis", choices=["m", "e", "h"], default="e")
    sp.add_argument("--no-cache", action="store_true")
    add("gkm-check", cmd_gkm_check, "test classes for GKM membership").add_argument(
        "--classes", required=True, help="JSON file with one class or a list")
    sp = add("verify", cmd_verify, "run a verification suite", needs_h=False)
    sp.add_argument("--suite", required=True, choices=sorted(SUITES) + ["all"])
    sp.add_argument("--n-max", type=int, default=None)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--no-cache", action="store_true")
    sp.add_argument("--timing", action="store_true", help="include wall time in JSON")
    add("universe", cmd_universe, "list all h for a given n", needs_h=False).add_argument(
        "--n", type=int, required=True)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (HessencombError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
