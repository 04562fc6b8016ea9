"""Command line front end.

Subcommands: enumerate (run a census), analyze (report on one code),
verify-tables (check the bundled reference counts and catalog), move
(apply a dipole cancellation or rho-pair switch), export-tri (write the
dual triangulation) and check (validate a catalog file).

Exit codes: 0 success, 1 verification mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys

from gemcensus import catalog as catalogmod
from gemcensus import code as codemod
from gemcensus import core, moves, tables
from gemcensus.census import BOUNDARY_CLASSES, CensusFilter, enumerate_census


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gemcensus",
        description="Censuses of 4-colored graphs representing compact "
                    "3-manifolds with boundary.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="run a census and print its codes")
    p.add_argument("--vertices", type=int, required=True, metavar="2P",
                   help="graph order (even)")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--bipartite", action="store_true",
                       help="bipartite graphs only (orientable manifolds)")
    group.add_argument("--non-bipartite", action="store_true",
                       help="non-bipartite graphs only")
    p.add_argument("--boundary", choices=BOUNDARY_CLASSES, default="any",
                   help="required boundary class (default: any)")
    p.add_argument("--rigid", action="store_true",
                   help="keep rigid graphs only (needs --bipartite)")
    p.add_argument("--output", metavar="PATH",
                   help="also write a catalog file, one record per line")
    p.add_argument("--quiet", action="store_true",
                   help="print only the total count")

    p = sub.add_parser("analyze", help="full report on one graph code")
    p.add_argument("code")

    p = sub.add_parser("verify-tables",
                       help="recompute the bundled reference data")
    p.add_argument("--full", action="store_true",
                   help="extend the census re-runs to order 12 "
                        "(bipartite; order 10 non-bipartite)")

    p = sub.add_parser("move", help="apply a move and print the result")
    p.add_argument("code")
    msub = p.add_subparsers(dest="move", required=True)
    mc = msub.add_parser("cancel", help="cancel the dipole at a vertex pair")
    mc.add_argument("u", type=int)
    mc.add_argument("v", type=int)
    msw = msub.add_parser("switch", help="switch the rho-pair of a color "
                          "given the smaller endpoints of its two edges")
    msw.add_argument("color", type=int)
    msw.add_argument("e1", type=int)
    msw.add_argument("e2", type=int)

    p = sub.add_parser("export-tri",
                       help="write the dual triangulation (GEM-TRI format)")
    p.add_argument("code")
    p.add_argument("output", metavar="PATH")

    p = sub.add_parser("check", help="validate a catalog file")
    p.add_argument("path")
    p.add_argument("--recompute", action="store_true",
                   help="also recompute every record from its code")
    return parser


def _cmd_enumerate(args) -> int:
    if args.rigid and not args.bipartite:
        print("error: --rigid requires --bipartite", file=sys.stderr)
        return 2
    if args.vertices < 2 or args.vertices % 2:
        print("error: --vertices must be even and positive", file=sys.stderr)
        return 2
    bipartite = True if args.bipartite else (False if args.non_bipartite
                                             else None)
    filt = CensusFilter(bipartite=bipartite, boundary=args.boundary,
                        rigid_only=args.rigid)
    records = []
    for rec in enumerate_census(args.vertices, filt):
        records.append(rec)
        if not args.quiet:
            print(rec.code)
    if args.output:
        catalogmod.write_catalog(records, args.output)
    print(f"total {len(records)}")
    return 0


def _cmd_analyze(args) -> int:
    g = codemod.decode(args.code)
    canon = codemod.canonical_code(g)
    bipartite = core.is_bipartite(g)
    print(f"code       {args.code}")
    print(f"canonical  {canon}")
    print(f"order      {g.order}")
    print(f"bipartite  {bipartite}")
    print(f"g-vector   {core.g_vector(g)}")
    for c in core.COLORS:
        for r in core.residues(g, core.complement([c])):
            s = core.surface_type(g, r)
            tag = "ordinary" if s.is_sphere else "singular"
            print(f"residue    colors {sorted(r.colors)} "
                  f"vertices {len(r.vertices)}: {s} ({tag})")
    print(f"boundary   {core.boundary_profile(g)}")
    print(f"contracted {core.is_contracted(g)}")
    if bipartite:
        print(f"rigid      {moves.is_rigid(g)}")
    else:
        print("rigid      n/a (non-bipartite)")
    if g.order > 2:
        for d in moves.find_dipoles(g):
            print(f"dipole     vertices {d.vertices} colors "
                  f"{sorted(d.colors)} h={d.h} "
                  f"proper={moves.is_proper(g, d)}")
    if bipartite:
        for i in (2, 3):
            for p in moves.find_rho_pairs(g, i):
                if i == 2:
                    extra = f"good={moves.is_good_rho2(g, p)}"
                else:
                    extra = f"index={moves.rho3_index(g, p)}"
                print(f"rho{i}-pair  color {p.color} edges {p.edges[0]} "
                      f"{p.edges[1]} {extra}")
    print(f"H1         {core.first_homology(g)}")
    return 0


def _cmd_verify_tables(args) -> int:
    checks, notes = tables.verify_catalog()
    if args.full:
        counts = tables.verify_counts(max_bipartite=12, max_nonbipartite=10,
                                      max_toric=12)
    else:
        counts = tables.verify_counts()
    failures = 0
    for chk in checks + counts:
        if not chk.ok:
            failures += 1
        print(chk)
    for note in notes:
        print(f"note {note}")
    total = len(checks) + len(counts)
    print(f"{total - failures}/{total} checks passed")
    return 1 if failures else 0


def _cmd_move(args) -> int:
    g = codemod.decode(args.code)
    if args.move == "cancel":
        pair = tuple(sorted((args.u, args.v)))
        target = None
        if g.order > 2:
            for d in moves.find_dipoles(g):
                if d.vertices == pair:
                    target = d
                    break
        if target is None:
            print(f"error: no dipole at vertex pair {pair}", file=sys.stderr)
            return 2
        result = moves.cancel_dipole(g, target)
        print(codemod.canonical_code(result))
        return 0
    # switch
    target = None
    for i in (2, 3):
        for p in moves.find_rho_pairs(g, i):
            if p.color == args.color and \
                    {p.edges[0][0], p.edges[1][0]} == {args.e1, args.e2}:
                target = p
                break
        if target:
            break
    if target is None:
        print(f"error: no rho-pair of color {args.color} with edges at "
              f"{args.e1}, {args.e2}", file=sys.stderr)
        return 2
    if target.i == 3 and moves.rho3_index(g, target) >= 2:
        cls = moves.classify_rho3_switch(g, target)
        print(f"classification {cls.case} (index {cls.index}, "
              f"{cls.components_after} component(s) after)")
    for part in moves.switch(g, target):
        print(codemod.canonical_code(part))
    return 0


def _cmd_export_tri(args) -> int:
    g = codemod.decode(args.code)
    write_triangulation(g, args.output)
    print(f"wrote {g.order} tetrahedra to {args.output}")
    return 0


def write_triangulation(g: core.ColoredGraph, path) -> None:
    """One tetrahedron per vertex; the face opposite color c of
    tetrahedron v glues to the same face of the vertex matched by color
    c, matching the three remaining color labels."""
    with open(path, "w", encoding="ascii") as fh:
        fh.write("GEM-TRI 1\n")
        fh.write(f"n {g.order}\n")
        for v in range(g.order):
            glued = " ".join(str(g.matchings[c][v]) for c in core.COLORS)
            fh.write(f"{v}: {glued}\n")


def read_triangulation(path) -> core.ColoredGraph:
    """Rebuild the colored graph from a GEM-TRI file."""
    with open(path, "r", encoding="ascii") as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    if not lines or lines[0] != "GEM-TRI 1":
        raise ValueError("not a GEM-TRI 1 file")
    if not lines[1].startswith("n "):
        raise ValueError("missing tetrahedron count")
    n = int(lines[1][2:])
    matchings = [[-1] * n for _ in core.COLORS]
    for ln in lines[2:]:
        head, _, rest = ln.partition(":")
        v = int(head)
        parts = rest.split()
        if len(parts) != 4:
            raise ValueError(f"tetrahedron {v}: need 4 gluings")
        for c, val in enumerate(parts):
            matchings[c][v] = int(val)
    return core.ColoredGraph.from_matchings(matchings)


def _cmd_check(args) -> int:
    try:
        records = catalogmod.read_catalog(args.path, check=args.recompute)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"{len(records)} records ok")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "enumerate": _cmd_enumerate,
        "analyze": _cmd_analyze,
        "verify-tables": _cmd_verify_tables,
        "move": _cmd_move,
        "export-tri": _cmd_export_tri,
        "check": _cmd_check,
    }
    try:
        return handlers[args.command](args)
    except codemod.CodeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
