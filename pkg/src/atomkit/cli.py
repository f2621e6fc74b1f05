"""Command-line front end.

Every command prints one JSON document (``bench`` prints CSV) on stdout.
Exit codes: 0 success or member, 1 negative verdict / failed check,
2 usage or format error, 3 an exact-search bound was exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .classify import recognize
from .config import Bounds, bounds_from_env, parse_bounds
from .decompose import decompose_components
from .errors import AtomkitError, BoundExceeded
from .formats import FORMATS, emit_graph, guess_format, parse_graphs
from .generate import FAMILIES, GenSpec
from .solve import PROBLEMS, min_fill_in, solve
from .suites import BENCH_COLUMNS, SUITES, bench_family, bench_row

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_BOUND = 0, 1, 2, 3


@dataclass
class RunConfig:
    command: str
    input: str | None = None
    output: str | None = None
    format: str | None = None
    bounds: Bounds = field(default_factory=Bounds)
    seed: int = 0
    jobs: int = 1
    options: dict = field(default_factory=dict)


def _read_graphs(cfg: RunConfig, allow_empty: bool = False):
    path = cfg.input
    if path in (None, "-"):
        text = sys.stdin.read()
        fmt = cfg.format or "graph6"
    else:
        text = Path(path).read_text()
        fmt = cfg.format or guess_format(path)
    if allow_empty and not text.strip():
        return []
    return parse_graphs(text, fmt)


def _map(cfg: RunConfig, fn, items):
    """Apply ``fn`` across graphs, in a process pool when ``--jobs > 1``."""
    items = list(items)
    if cfg.jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def _wrap(docs: list[dict]) -> dict:
    return docs[0] if len(docs) == 1 else {"results": docs}


# workers must be module level for the process pool

def _recognize_one(args):
    g, mode = args
    return recognize(g, mode).to_json()


def _decompose_one(g):
    trees = decompose_components(g)
    if len(trees) == 1:
        return trees[0].to_json()
    return {"components": [t.to_json() for t in trees]}


def _solve_one(args):
    g, problem, bounds = args
    try:
        sol = min_fill_in(g, bounds.fill_exact) if problem == "fillin" else solve(g, problem)
    except BoundExceeded as exc:
        return {"error": "bound-exceeded", "message": str(exc)}
    return sol.to_json()


def run(cfg: RunConfig) -> tuple[int, str]:
    """Execute one command; returns ``(exit_code, stdout_text)``."""
    cmd = cfg.command
    opts = cfg.options
    if cmd == "recognize":
        graphs = _read_graphs(cfg)
        mode = opts["cls"].upper()
        docs = _map(cfg, _recognize_one, [(g, mode) for g in graphs])
        code = EXIT_OK if all(d["member"] for d in docs) else EXIT_NEGATIVE
        return code, json.dumps(_wrap(docs))
    if cmd == "decompose":
        docs = _map(cfg, _decompose_one, _read_graphs(cfg))
        return EXIT_OK, json.dumps(_wrap(docs))
    if cmd == "solve":
        graphs = _read_graphs(cfg)
        docs = _map(cfg, _solve_one, [(g, opts["problem"], cfg.bounds) for g in graphs])
        code = EXIT_BOUND if any("error" in d for d in docs) else EXIT_OK
        return code, json.dumps(_wrap(docs))
    if cmd == "generate":
        gen = GenSpec(opts["family"], opts["params"], cfg.seed)
        fmt = cfg.format or (guess_format(cfg.output) if cfg.output else "graph6")
        text = "".join(emit_graph(GenSpec(gen.family, gen.params, cfg.seed + i).build(), fmt)
                       for i in range(opts["count"]))
        if cfg.output:
            Path(cfg.output).write_text(text)
            return EXIT_OK, json.dumps({"family": gen.family, "count": opts["count"],
                                        "seed": cfg.seed, "out": cfg.output})
        return EXIT_OK, text.rstrip("\n")
    if cmd == "verify":
        rep = SUITES[opts["suite"]](opts["count"], cfg.seed, bounds=cfg.bounds)
        return (EXIT_OK if rep.ok else EXIT_NEGATIVE), json.dumps(rep.to_json())
    if cmd == "bench":
        if cfg.input is not None:
            graphs = _read_graphs(cfg, allow_empty=True)
        else:
            graphs = list(bench_family(opts["family"], opts["sizes"], cfg.seed))
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=BENCH_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for g in graphs:
            writer.writerow(bench_row(g, cfg.bounds))
        if cfg.output:
            Path(cfg.output).write_text(buf.getvalue())
        return EXIT_OK, buf.getvalue().rstrip("\n")
    raise ValueError(f"unknown command {cmd!r}")


def _params(items) -> dict:
    out = {}
    for item in items or []:
        key, sep, value = item.partition("=")
        if not sep:
            raise ValueError(f"--param expects key=value, got {item!r}")
        out[key] = value
    return out


def _global_flags(p: argparse.ArgumentParser, default) -> None:
    p.add_argument("--format", choices=FORMATS, default=default,
                   help="input/output format (default: from extension)")
    p.add_argument("--jobs", type=int, default=default, help="worker processes across input graphs")
    p.add_argument("--bounds", default=default, help="override limits, e.g. fill_exact=12,oracle=12")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="atomkit", description=__doc__.splitlines()[0])
    _global_flags(p, argparse.SUPPRESS)
    p.set_defaults(format=None, jobs=1, bounds="")
    # the same flags after the subcommand; SUPPRESS keeps earlier values intact
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True)

    def command(name, help):
        return sub.add_parser(name, parents=[common], help=help)

    r = command("recognize", "decide HP-free / HD-free membership")
    r.add_argument("input", nargs="?")
    r.add_argument("--class", dest="cls", choices=("hp", "hd"), default="hp")

    d = command("decompose", "clique separator decomposition")
    d.add_argument("input", nargs="?")

    s = command("solve", "exact optimisation via the decomposition")
    s.add_argument("input", nargs="?")
    s.add_argument("--problem", choices=PROBLEMS, required=True)

    g = command("generate", "write generated graphs")
    g.add_argument("--family", choices=FAMILIES, required=True)
    g.add_argument("--param", action="append", help="family parameter key=value (repeatable)")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--count", type=int, default=1)
    g.add_argument("--out")

    v = command("verify", "run a property / oracle suite")
    v.add_argument("--suite", choices=sorted(SUITES), required=True)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--count", type=int, default=20)

    b = command("bench", "decomposition vs brute-force timing CSV")
    b.add_argument("input", nargs="?", help="corpus file; omit to generate")
    b.add_argument("--family", default="hp-glued")
    b.add_argument("--sizes", default="50,100,200")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--out")
    return p


def config_from_args(args: argparse.Namespace) -> RunConfig:
    bounds = parse_bounds(args.bounds, bounds_from_env())
    if args.jobs < 1:
        raise ValueError("--jobs must be positive")
    opts: dict = {}
    if args.command == "recognize":
        opts["cls"] = args.cls
    elif args.command == "solve":
        opts["problem"] = args.problem
    elif args.command == "generate":
        opts.update(family=args.family, params=_params(args.param), count=args.count)
    elif args.command == "verify":
        opts.update(suite=args.suite, count=args.count)
    elif args.command == "bench":
        opts.update(family=args.family, sizes=[int(x) for x in args.sizes.split(",") if x])
    return RunConfig(
        command=args.command,
        input=getattr(args, "input", None),
        output=getattr(args, "out", None),
        format=args.format,
        bounds=bounds,
        seed=getattr(args, "seed", 0),
        jobs=args.jobs,
        options=opts,
    )


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with 2 on usage errors
    try:
        cfg = config_from_args(args)
        code, out = run(cfg)
    except BoundExceeded as exc:
        print(f"atomkit: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (AtomkitError, ValueError, KeyError, OSError) as exc:
        print(f"atomkit: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if out:
        print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
