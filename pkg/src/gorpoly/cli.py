"""Command-line interface: ``gorpoly <command> ...``.

Exit status is 0 on success, 1 on a domain error (a JSON object is written to
stderr) and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from gorpoly import classify as cls
from gorpoly.constructions import cayley, minkowski_decompositions
from gorpoly.ehrhart import h_star
from gorpoly.gorenstein import (
    dual, dual_gorenstein, facet_volume_sum, gorenstein_index, is_gorenstein_degree2,
    is_maximal, is_minimal, is_reflexive, pyramid_folds,
)
from gorpoly.io import read_polytope, to_json_obj
from gorpoly.normal_form import normal_form
from gorpoly.polytope import PolytopeError
from gorpoly.semigroup import artinian_profile, irreducible_generators, minimal_relations


class DomainError(Exception):
    pass


def _emit(obj, out: Path | None = None):
    text = json.dumps(obj) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def cmd_hstar(args):
    P = read_polytope(args.file)
    hs = h_star(P)
    _emit({"dim": hs.dim, "counts": list(hs.counts), "hstar": list(hs.hstar),
           "degree": hs.degree, "nv": hs.normalized_volume})


def cmd_dual(args):
    P = read_polytope(args.file)
    cert = dual_gorenstein(P)
    _emit({"index": cert.index, "interior_point": list(cert.interior_point),
           "dual": to_json_obj(cert.dual)}, args.out)


def cmd_check(args):
    P = read_polytope(args.file)
    r = gorenstein_index(P)
    hs = h_star(P)
    deg2 = is_gorenstein_degree2(P)
    _emit({
        "reflexive": is_reflexive(P),
        "index": r,
        "degree": hs.degree,
        "pyramid_folds": pyramid_folds(P),
        "minimal": is_minimal(P) if deg2 else None,
        "maximal": is_maximal(P) if deg2 else None,
    })


def cmd_decompose(args):
    P = read_polytope(args.file)
    decs = minkowski_decompositions(P)
    _emit([{"r": d.r, "summands": [[list(v) for v in S.vertices] for S in d.summands]}
           for d in decs], args.out)


def cmd_cayley(args):
    factors = [read_polytope(f) for f in args.files]
    _emit(to_json_obj(cayley(factors)), args.out)


def cmd_semigroup(args):
    P = read_polytope(args.file)
    gens = irreducible_generators(P, args.kmax)
    pres = minimal_relations(P, gens)
    prof = artinian_profile(P, gens, pres) if gorenstein_index(P) is not None else None
    _emit({
        "generators": [{"point": list(g[:-1]), "degree": g[-1]} for g in gens.generators],
        "I_poly": list(gens.I_poly),
        "relations": [{"lhs": list(a), "rhs": list(b), "degree": pres.degree((a, b))}
                      for a, b in pres.relations],
        "g_vector": list(prof.g_vector) if prof else None,
    }, args.out)


def cmd_classify(args):
    res = cls.classify_degree2(args.dim, args.route)
    total, nonpyr = res.counts[args.dim]
    summary = {
        "dim": args.dim,
        "route": args.route,
        "total": total,
        "non_pyramids": nonpyr,
        "counts": {str(k): {"total": v[0], "non_pyramids": v[1]}
                   for k, v in sorted(res.counts.items())},
        "ids": [e.id for e in res.entries],
    }
    if args.out is not None:
        args.out.write_text(json.dumps([e.to_json() for e in res.entries]) + "\n")
    _emit(summary)


def _random_unimodular(n: int, rng: random.Random) -> list[list[int]]:
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(3 * n):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            continue
        c = rng.choice((-1, 1))
        m[i] = [a + c * b for a, b in zip(m[i], m[j])]
    return m


def _identity_lines(name: str, n: int, rng: random.Random):
    entries = cls.classify_degree2(n).entries
    for e in entries:
        P = e.polytope
        if name == "twelve":
            if n != 3:
                raise DomainError("the edge-volume identity is stated for dimension 3")
            yield e.id, cls.verify_twelve(P), 12
        elif name == "fourteen":
            if n != 3:
                raise DomainError("the lattice-point identity is stated for dimension 3")
            if e.pyramid_folds:
                continue
            yield e.id, cls.verify_fourteen(P), 14
        elif name == "facevol":
            yield e.id, facet_volume_sum(P), (n - 1) * P.normalized_volume
        elif name == "duality":
            Q = P.transform(_random_unimodular(n, rng)).translate(
                [rng.randint(-5, 5) for _ in range(n)])
            same = normal_form(dual(dual(Q))) == normal_form(P)
            yield e.id, int(same), 1


def cmd_verify(args):
    rng = random.Random(args.seed)
    names = ["twelve", "fourteen", "facevol", "duality"] if args.identity == "all" \
        else [args.identity]
    if args.identity == "all" and args.dim != 3:
        names = ["facevol", "duality"]
    results = []
    for name in names:
        for eid, value, expected in _identity_lines(name, args.dim, rng):
            results.append({"identity": name, "id": eid, "value": value,
                            "expected": expected, "ok": value == expected})
    if args.json:
        _emit(results)
    else:
        for r in results:
            tag = "OK" if r["ok"] else "FAIL"
            sys.stdout.write(f"{tag} {r['value']}  {r['identity']} {r['id']}\n")
    if not all(r["ok"] for r in results):
        raise DomainError("identity check failed")


def cmd_catalog(args):
    if args.id is None:
        _emit([e.to_json() for e in cls.catalog().values()], args.out)
        return
    try:
        e = cls.catalog_entry(args.id)
    except KeyError:
        raise DomainError(f"unknown catalog id {args.id!r}") from None
    _emit(e.to_json(), args.out)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gorpoly", description="Lattice polytope toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    def with_out(sp):
        sp.add_argument("--out", type=Path, default=None, help="write JSON here")
        return sp

    sp = sub.add_parser("hstar", help="Ehrhart counts and h*-vector")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_hstar)

    sp = with_out(sub.add_parser("dual", help="dual Gorenstein polytope"))
    sp.add_argument("file")
    sp.set_defaults(func=cmd_dual)

    sp = sub.add_parser("check", help="reflexivity, index, degree, pyramid and minimality")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_check)

    sp = with_out(sub.add_parser("decompose", help="Minkowski decompositions of a polygon"))
    sp.add_argument("file")
    sp.set_defaults(func=cmd_decompose)

    sp = with_out(sub.add_parser("cayley", help="Cayley polytope of the given factors"))
    sp.add_argument("files", nargs="+")
    sp.set_defaults(func=cmd_cayley)

    sp = with_out(sub.add_parser("semigroup", help="generators and binomial relations"))
    sp.add_argument("file")
    sp.add_argument("--kmax", type=int, default=None, help="generator degree bound")
    sp.set_defaults(func=cmd_semigroup)

    sp = with_out(sub.add_parser("classify", help="degree-2 Gorenstein polytopes"))
    sp.add_argument("--dim", type=int, required=True)
    sp.add_argument("--route", choices=["cayley", "deletion", "both"], default="both")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("verify", help="check identities over a classified dimension")
    sp.add_argument("--identity", choices=["twelve", "fourteen", "facevol", "duality", "all"],
                    default="all")
    sp.add_argument("--dim", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_verify)

    sp = with_out(sub.add_parser("catalog", help="print catalog entries"))
    sp.add_argument("--id", default=None)
    sp.set_defaults(func=cmd_catalog)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args)
    except (DomainError, PolytopeError, OSError, cls.RouteDisagreement) as exc:
        sys.stderr.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
