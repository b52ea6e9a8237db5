"""Command-line interface.

Exit codes: 0 success, 2 malformed input, 3 infeasible, 4 precondition violated.
"""
from __future__ import annotations

import argparse
import json
import sys

from .costs import INF, CostFn
from .errors import ParseError, PreconditionError
from .formats import format_graph, read_costs, read_graph

EXIT_OK, EXIT_PARSE, EXIT_INFEASIBLE, EXIT_PRECONDITION = 0, 2, 3, 4


def _b(x):
    return "true" if x else "false"


def _emit(args, data, text):
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _costs(args, g):
    if args.uniform:
        return CostFn.uniform(1)
    if not args.costs:
        raise ParseError(0, "either --costs FILE or --uniform is required")
    return read_costs(args.costs, n=g.n, scale=args.scale)


def _edges_text(edges):
    return "".join(f"{u} {v}\n" for u, v in edges)


def cmd_rank(args):
    from .rigidity import is_rigid2, r2_rank

    g = read_graph(args.file)
    r, rigid = r2_rank(g), is_rigid2(g)
    _emit(args, {"r2": r, "rigid": rigid}, f"r2={r} rigid={_b(rigid)}")
    return EXIT_OK


def cmd_globally_rigid(args):
    from .rigidity import global_rigidity_failure

    g = read_graph(args.file)
    failed = global_rigidity_failure(g)
    text = f"globally_rigid={_b(failed is None)}" + (f" failed={failed}" if failed else "")
    _emit(args, {"globally_rigid": failed is None, "failed": failed}, text)
    return EXIT_OK


def cmd_wgl(args):
    from .errors import InvalidPair
    from .linkedness import Reason, Verdict, WglVerdict, is_wgl2

    g = read_graph(args.file)
    u, v = args.u, args.v
    if not (0 <= u < g.n and 0 <= v < g.n) or u == v:
        raise InvalidPair(f"need two distinct vertices in 0..{g.n - 1}")
    if g.has_edge(u, v):
        res = WglVerdict(Verdict.GloballyLinkedTrivially, Reason.Adjacent)
    else:
        res = is_wgl2(g, u, v)
    _emit(args, {"verdict": res.verdict.value, "reason": res.reason.value},
          f"verdict={res.verdict.value} reason={res.reason.value}")
    return EXIT_OK


def cmd_tlc(args):
    from .linkedness import tlc2

    h = tlc2(read_graph(args.file), args.threads)
    _emit(args, {"n": h.n, "edges": [list(e) for e in h.edges]}, format_graph(h))
    return EXIT_OK


def cmd_tree_rep(args):
    from .treerep import build_tree_rep, reduce_tree_rep, to_dot

    t = build_tree_rep(read_graph(args.file))
    if args.reduced:
        t = reduce_tree_rep(t)
    if args.dot:
        dot = to_dot(t)
        if args.dot == "-":
            sys.stdout.write(dot)
            return EXIT_OK
        with open(args.dot, "w", encoding="ascii") as fh:
            fh.write(dot)
    lines = [f"{i} {x.kind.value} {','.join(map(str, x.vertices))}" for i, x in enumerate(t.nodes)]
    lines += [f"edge {a} {b}" for a, b in t.tree_edges]
    data = {
        "nodes": [{"kind": x.kind.value, "vertices": list(x.vertices)} for x in t.nodes],
        "edges": [list(e) for e in t.tree_edges],
    }
    _emit(args, data, "\n".join(lines))
    return EXIT_OK


def _aug_text(res):
    cost = "inf" if res.cost == INF else str(res.cost)
    head = f"cost={cost} certified={_b(res.certified)} feasible={_b(res.feasible)}\n"
    stages = "".join(f"stage {k}: {len(v)}\n" for k, v in sorted(res.parts.items()))
    return head + stages + _edges_text(res.added)


def cmd_augment(args):
    from .augment import algorithm1

    g = read_graph(args.file)
    res = algorithm1(g, _costs(args, g), args.threads)
    _emit(args, res.to_dict(), _aug_text(res))
    return EXIT_OK if res.feasible else EXIT_INFEASIBLE


def cmd_augment_minsize(args):
    from .minsize import min_size_augment

    rep = min_size_augment(read_graph(args.file))
    text = (f"opt={rep.opt} l={rep.l} cG={rep.cG} t_reduced={rep.t_reduced} "
            f"bQ_reduced={rep.bQ_reduced} certified={_b(rep.certified)}\n" + _edges_text(rep.solution))
    _emit(args, rep.to_dict(), text)
    return EXIT_OK


def cmd_chordal_augment(args):
    from .chordal import chordal_augment_2approx

    g = read_graph(args.file)
    res = chordal_augment_2approx(g, args.d, _costs(args, g))
    _emit(args, res.to_dict(), _aug_text(res))
    return EXIT_OK if res.feasible else EXIT_INFEASIBLE


def cmd_oracle(args):
    from .oracles import brute_min_gra, numeric_rank

    g = read_graph(args.file)
    if args.what == "rank":
        r = max(numeric_rank(g, args.d, s) for s in range(3))
        _emit(args, {"rank": r}, f"rank={r}")
        return EXIT_OK
    cost, edges = brute_min_gra(g, _costs(args, g), bound=args.bound)
    data = {"cost": None if cost == INF else cost, "added": [list(e) for e in edges or []]}
    _emit(args, data, f"cost={'inf' if cost == INF else cost}\n" + _edges_text(edges or []))
    return EXIT_OK if cost != INF else EXIT_INFEASIBLE


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--threads", type=int, default=None, help="worker threads for pair sweeps")

    costs = argparse.ArgumentParser(add_help=False)
    costs.add_argument("--costs", metavar="COSTFILE", help="lines 'u v c', c decimal or inf")
    costs.add_argument("--uniform", action="store_true", help="cost 1 on every missing pair")
    costs.add_argument("--scale", type=int, default=1, help="multiply costs by this factor (default 1)")

    p = argparse.ArgumentParser(prog="rigaug", description="Rigidity analysis and globally rigid augmentation.")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help_text, parents=(common,), **kw):
        sp = sub.add_parser(name, parents=list(parents), help=help_text, **kw)
        sp.add_argument("file", metavar="FILE")
        sp.set_defaults(func=func)
        return sp

    add("rank", cmd_rank, "rank in the plane and rigidity")
    add("globally-rigid", cmd_globally_rigid, "global rigidity and the failed condition")
    sp = add("wgl", cmd_wgl, "weak global linkedness of a pair")
    sp.add_argument("u", type=int)
    sp.add_argument("v", type=int)
    add("tlc", cmd_tlc, "totally loose closure")
    sp = add("tree-rep", cmd_tree_rep, "tree representation")
    sp.add_argument("--dot", metavar="OUT", help="write DOT to OUT ('-' for stdout)")
    sp.add_argument("--reduced", action="store_true", help="print the reduced tree")
    add("augment", cmd_augment, "cheap globally rigid augmentation", parents=(common, costs))
    add("augment-minsize", cmd_augment_minsize, "minimum-size globally rigid augmentation")
    sp = add("chordal-augment", cmd_chordal_augment, "(d+1)-connectivity augmentation of chordal graphs",
             parents=(common, costs))
    sp.add_argument("-d", type=int, required=True)
    sp = sub.add_parser("oracle", parents=[common, costs])
    sp.add_argument("what", choices=["rank", "min-gra"])
    sp.add_argument("file", metavar="FILE")
    sp.add_argument("-d", type=int, default=2)
    sp.add_argument("--bound", type=int, default=7)
    sp.set_defaults(func=cmd_oracle)
    # keep the debugging subcommand out of the listing
    sub._choices_actions = [a for a in sub._choices_actions if a.dest != "oracle"]
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as exc:
        print(f"precondition: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
