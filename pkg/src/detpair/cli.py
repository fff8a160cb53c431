"""Command-line front end: ``detpair {solve,approx,verify,gen,bench}``.

Exit codes: 0 on success or YES, 1 on NO or a failed verification, 2 on
usage errors (bad arguments, unreadable or invalid input).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Optional, Sequence

from .detection import DetectionPair, brute_ceiling, dp_oracle, find_violation, gamma_oracle, md_oracle
from .errors import DetPairError, NoSolutionWithin
from .fpt import dp_tree, fpt_decide
from .graph import Graph, is_tree
from .instances import InstanceSpec, gen_random_graph, gen_random_tree, gen_t1, gen_t2, read_edge_list, write_edge_list
from .setcover import approx_detection_pair
from .tree_approx import approx2_detection_pair
from .tree_exact import min_dominating_set_tree, slater_resolving_set

EXIT_OK, EXIT_NO, EXIT_USAGE = 0, 1, 2


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(message)


def _emit(obj) -> None:
    print(json.dumps(obj))


# ---------------------------------------------------------------- solve


def _solve(args) -> int:
    g = read_edge_list(args.file)
    k = args.k
    if args.problem == "dp":
        if args.fpt:
            if not is_tree(g):
                raise _Usage("--fpt needs a tree")
            if k is None:
                size, pair = dp_tree(g)
            else:
                stats = {}
                found = fpt_decide(g, k, prune=not args.debug_no_prune, stats=stats)
                if found is None:
                    print("NO")
                    return EXIT_NO
                size, pair = found.size(), found
        else:
            if args.debug_no_prune:
                raise _Usage("--debug-no-prune only applies to --fpt")
            try:
                res = dp_oracle(g, k_max=k)
            except NoSolutionWithin:
                print("NO")
                return EXIT_NO
            size, pair = res.value, res.witness
        _emit({**pair.to_dict(), "size": size})
        return EXIT_OK

    if args.fpt:
        raise _Usage("--fpt only applies to --problem dp")
    if is_tree(g):
        chosen = slater_resolving_set(g) if args.problem == "md" else min_dominating_set_tree(g)
    else:
        res = md_oracle(g) if args.problem == "md" else gamma_oracle(g)
        chosen = res.witness
    if k is not None and len(chosen) > k:
        print("NO")
        return EXIT_NO
    pair = DetectionPair(listeners=chosen) if args.problem == "md" else DetectionPair(watchers=chosen)
    _emit({**pair.to_dict(), "size": len(chosen)})
    return EXIT_OK


# ---------------------------------------------------------------- approx


def _approximate(g: Graph, method: str) -> DetectionPair:
    if method == "tree2":
        if not is_tree(g):
            raise _Usage("--method tree2 needs a tree")
        return approx2_detection_pair(g).pair
    return approx_detection_pair(g)


def _oracle_opt(g: Graph) -> Optional[int]:
    if g.n > brute_ceiling():
        return None
    if is_tree(g):
        return dp_tree(g)[0]
    return dp_oracle(g).value


def _approx(args) -> int:
    g = read_edge_list(args.file)
    pair = _approximate(g, args.method)
    print(pair.to_json())
    print(f"size {pair.size()}")
    if not args.no_oracle:
        opt = _oracle_opt(g)
        if opt is not None:
            print(f"oracle_opt {opt}")
            print(f"ratio {pair.size() / opt:.6f}" if opt else "ratio 1.000000")
    return EXIT_OK


# ---------------------------------------------------------------- verify


def _verify(args) -> int:
    g = read_edge_list(args.graph)
    pair = DetectionPair.from_json(Path(args.witness).read_text())
    bad = find_violation(g, pair)
    if bad is None:
        print(f"valid detection pair of size {pair.size()}")
        return EXIT_OK
    u, v = bad
    print(f"invalid: vertices {u} and {v} are undominated and not separated")
    return EXIT_NO


# ---------------------------------------------------------------- gen


def _gen(args) -> int:
    legs = tuple(int(x) for x in args.legs.split(",")) if args.legs else ()
    spec = InstanceSpec(args.family, n=args.n, l=args.l, star_size=args.star, legs=legs, seed=args.seed, p=args.p)
    g = spec.build()
    if args.output:
        write_edge_list(g, args.output, comment=f"{spec}")
    else:
        print(f"{g.n} {g.m}")
        for u, v in g.edges():
            print(u, v)
    return EXIT_OK


# ---------------------------------------------------------------- bench

BENCH_COLUMNS = ["instance", "n", "method", "size", "oracle_opt", "ratio", "millis"]


def default_corpus(trees: int, graphs: int, max_n: int, seed: int) -> list[tuple[str, Graph]]:
    out = []
    for i in range(trees):
        n = 2 + i % (max_n - 1)
        out.append((f"tree_{i:04d}_n{n}", gen_random_tree(n, seed + i)))
    for l in range(1, 4):
        out.append((f"t1_l{l}", gen_t1(l)))
    for l in range(1, 3):
        out.append((f"t2_l{l}", gen_t2(l)))
    for i in range(graphs):
        n = 4 + i % max(1, min(max_n, 10) - 3)
        out.append((f"graph_{i:04d}_n{n}", gen_random_graph(n, 0.4, seed + i)))
    return out


def bench_rows(name: str, g: Graph, with_oracle: bool) -> list[dict]:
    tree = is_tree(g)
    opt = None
    if with_oracle and g.n <= brute_ceiling():
        opt = dp_oracle(g).value
    methods = ["setcover"] + (["tree2", "fpt"] if tree else [])
    rows = []
    for method in methods:
        t0 = time.perf_counter()
        if method == "fpt":
            size = dp_tree(g)[0]
        else:
            size = _approximate(g, method).size()
        millis = (time.perf_counter() - t0) * 1000
        rows.append({
            "instance": name,
            "n": g.n,
            "method": method,
            "size": size,
            "oracle_opt": "" if opt is None else opt,
            "ratio": "" if not opt else f"{size / opt:.6f}",
            "millis": f"{millis:.3f}",
        })
    return rows


def _bench_task(job):
    return bench_rows(*job)


def _bench(args) -> int:
    if args.dir:
        files = sorted(Path(args.dir).glob("*.txt"))
        corpus = [(f.stem, read_edge_list(f)) for f in files]
    else:
        if args.max_n < 2:
            raise _Usage("--max-n must be at least 2")
        corpus = default_corpus(args.trees, args.graphs, args.max_n, args.seed)
    jobs = [(name, g, not args.no_oracle) for name, g in corpus]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_bench_task, jobs))
    else:
        results = [_bench_task(j) for j in jobs]
    rows = sorted((r for rs in results for r in rs), key=lambda r: (r["instance"], r["method"]))
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=BENCH_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    if args.output:
        Path(args.output).write_text(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    return EXIT_OK


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="detpair", description="Detection pairs (watchers and listeners) on graphs.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    s = sub.add_parser("solve", help="exact solving")
    s.add_argument("--problem", choices=["dp", "md", "domset"], default="dp")
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="brute force, or linear tree routines for md/domset")
    mode.add_argument("--fpt", action="store_true", help="parameterized decision procedure (trees only)")
    s.add_argument("-k", type=int, help="decide whether a solution of size <= k exists")
    s.add_argument("--debug-no-prune", action="store_true", help="disable the pending-forest size cuts")
    s.add_argument("file")
    s.set_defaults(run=_solve)

    a = sub.add_parser("approx", help="approximate solving")
    a.add_argument("--method", choices=["setcover", "tree2"], default="setcover")
    a.add_argument("--no-oracle", action="store_true", help="skip the exact optimum on small inputs")
    a.add_argument("file")
    a.set_defaults(run=_approx)

    v = sub.add_parser("verify", help="check a witness")
    v.add_argument("graph")
    v.add_argument("witness")
    v.set_defaults(run=_verify)

    gp = sub.add_parser("gen", help="generate an instance")
    gp.add_argument("family", choices=InstanceSpec.FAMILIES)
    gp.add_argument("--n", type=int)
    gp.add_argument("--l", type=int)
    gp.add_argument("--star", type=int, default=3)
    gp.add_argument("--legs", help="comma-separated leg lengths for spider")
    gp.add_argument("--seed", type=int, default=0)
    gp.add_argument("--p", type=float, default=0.3)
    gp.add_argument("-o", "--output")
    gp.set_defaults(run=_gen)

    b = sub.add_parser("bench", help="run a corpus and print a CSV report")
    b.add_argument("--dir", help="directory of *.txt edge lists (default: built-in corpus)")
    b.add_argument("--trees", type=int, default=20)
    b.add_argument("--graphs", type=int, default=10)
    b.add_argument("--max-n", type=int, default=10)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--jobs", type=int, default=1)
    b.add_argument("--no-oracle", action="store_true")
    b.add_argument("-o", "--output")
    b.set_defaults(run=_bench)
    return p


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "solve" and args.k is not None and args.k < 0:
            raise _Usage("-k must be non-negative")
        return args.run(args)
    except _Usage as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DetPairError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
