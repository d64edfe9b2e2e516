"""Command-line front end.

Subcommands mirror the library: solve, oracle, keys, closure, coatoms,
analyze, generate, bench. Output is plain text by default or JSON with
--format json; the generate command always emits the instance text
format. Exit codes: 0 on success, 1 on any error, 2 when an
enumeration hit its output cap and the results are incomplete.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .analysis import analyze
from .closure import close, co_atoms
from .core import (
    EXHAUSTIVE_LIMIT,
    KEY_CAP,
    MIS_CAP,
    format_instance,
    load_instance,
)
from .errors import ClosureError, OutputLimitExceeded
from .generators import (
    gen_cnf_lower_bounded,
    gen_exponential,
    gen_fano,
    gen_poset_convexity,
    gen_projective_gf2,
    gen_random,
    gen_random_poset,
    gen_reduction,
    parse_dimacs_cnf,
)
from .keys import augment_with_inconsistency, enumerate_keys
from .solver import brute_force_solve, solve


@dataclass
class RunConfig:
    """Everything one invocation needs, decoupled from argparse."""

    command: str
    format: str = "text"
    instance: str | None = None
    set_arg: str | None = None
    limit_ground: int = EXHAUSTIVE_LIMIT
    cap_keys: int = KEY_CAP
    cap_mis: int = MIS_CAP
    seed: int = 0
    family: str | None = None
    n: int = 3
    imps: int = 10
    max_premise: int = 3
    edges: int = 3
    dim: int = 2
    cnf_path: str | None = None
    reduce: bool = False
    output: str | None = None


def _emit(config: RunConfig, payload: dict, text_lines: list[str]) -> None:
    if config.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _labels(sets) -> list[list[str]]:
    return [list(s.labels()) for s in sets]


def _cmd_solve(config: RunConfig) -> int:
    base, graph = load_instance(config.instance)
    result = solve(base, graph, key_cap=config.cap_keys, mis_cap=config.cap_mis)
    stats = result.stats.to_dict()
    _emit(
        config,
        {"solutions": _labels(result.sets), "stats": stats},
        [s.to_text() for s in result.sets],
    )
    if config.format == "text":
        print(
            "stats: keys={key_count} transversal_steps={transversal_steps}".format(**stats),
            file=sys.stderr,
        )
    return 0


def _cmd_oracle(config: RunConfig) -> int:
    base, graph = load_instance(config.instance)
    oracle = brute_force_solve(base, graph, limit=config.limit_ground)
    verdict = "unchecked"
    try:
        fast = solve(base, graph, key_cap=config.cap_keys, mis_cap=config.cap_mis)
    except ClosureError as exc:
        verdict = f"unchecked ({exc})"
    else:
        verdict = "agree" if tuple(fast.sets) == tuple(oracle.sets) else "disagree"
    _emit(
        config,
        {"solutions": _labels(oracle.sets), "agreement": verdict},
        [s.to_text() for s in oracle.sets] + [f"agreement: {verdict}"],
    )
    return 1 if verdict == "disagree" else 0


def _cmd_keys(config: RunConfig) -> int:
    base, graph = load_instance(config.instance)
    if graph.edges:
        base = augment_with_inconsistency(base, graph)
    hyper = enumerate_keys(base, cap=config.cap_keys)
    _emit(
        config,
        {"count": len(hyper), "keys": _labels(hyper.keys)},
        hyper.serialize().splitlines(),
    )
    return 0


def _cmd_closure(config: RunConfig) -> int:
    base, _ = load_instance(config.instance)
    labels = [t for t in (config.set_arg or "").split(",") if t]
    try:
        subset = base.ground.set_of(*labels)
    except KeyError as exc:
        raise ClosureError(f"--set names {exc.args[0]}") from None
    result = close(base, subset)
    _emit(
        config,
        {"set": list(subset.labels()), "closure": list(result.labels())},
        [result.to_text()],
    )
    return 0


def _cmd_coatoms(config: RunConfig) -> int:
    base, _ = load_instance(config.instance)
    tops = co_atoms(
        base, key_cap=config.cap_keys, mis_cap=config.cap_mis, limit=config.limit_ground
    )
    _emit(config, {"coatoms": _labels(tops)}, [s.to_text() for s in tops])
    return 0


def _cmd_analyze(config: RunConfig) -> int:
    base, _ = load_instance(config.instance)
    report = analyze(base, limit=config.limit_ground)
    _emit(config, report.to_dict(), report.render_text().splitlines())
    return 0


def _cmd_generate(config: RunConfig) -> int:
    family = config.family
    if family == "random":
        base, graph = gen_random(
            config.n, config.imps, config.max_premise, config.edges, config.seed
        )
    elif family == "exponential":
        base, graph = gen_exponential(config.n)
    elif family == "cnf":
        if not config.cnf_path:
            raise ClosureError("the cnf family needs --cnf FILE")
        with open(config.cnf_path, "r", encoding="utf-8") as fh:
            cnf = parse_dimacs_cnf(fh.read())
        base = gen_cnf_lower_bounded(cnf)
        graph = None
        if config.reduce:
            base, graph = gen_reduction(base)
    elif family == "fano":
        base, graph = gen_fano(), None
    elif family == "gf2":
        base, graph = gen_projective_gf2(config.dim), None
    else:
        raise ClosureError(f"unknown family {family!r}")
    text = format_instance(base, graph)
    if config.output:
        with open(config.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_bench(config: RunConfig) -> int:
    import random as _random

    from .core import ConsistencyGraph
    from .generators import CnfFormula

    rows = []

    def record(family: str, param: str, base, graph) -> None:
        result = solve(base, graph, key_cap=config.cap_keys, mis_cap=config.cap_mis)
        rows.append(
            (
                family,
                param,
                base.ground.n,
                len(base.implications),
                len(graph.edges),
                result.stats.key_count,
                len(result.sets),
                f"{result.stats.seconds.get('keys', 0.0):.6f}",
                f"{result.stats.seconds.get('mis', 0.0):.6f}",
            )
        )

    for n in range(1, 6):
        base, graph = gen_exponential(n)
        record("exponential", f"n={n}", base, graph)
    for i in range(5):
        seed = config.seed + i
        base, graph = gen_random(8, 10, 3, 5, seed)
        record("random", f"seed={seed}", base, graph)
    for i in range(3):
        seed = config.seed + i
        rng = _random.Random(seed)
        clauses = tuple(tuple(sorted(rng.sample(range(1, 5), 3))) for _ in range(3))
        base, graph = gen_reduction(gen_cnf_lower_bounded(CnfFormula(4, clauses)))
        record("cnf_reduction", f"seed={seed}", base, graph)
    for i in range(3):
        seed = config.seed + i
        poset = gen_random_poset(7, seed)
        base = gen_poset_convexity(poset)
        rng = _random.Random(seed + 1000)
        pairs = [tuple(rng.sample(range(7), 2)) for _ in range(2)]
        graph = ConsistencyGraph(base.ground, pairs)
        record("poset_convexity", f"seed={seed}", base, graph)

    print("family,param,elements,implications,edges,keys,solutions,keys_seconds,mis_seconds")
    for row in rows:
        print(",".join(str(v) for v in row))
    return 0


_COMMANDS = {
    "solve": _cmd_solve,
    "oracle": _cmd_oracle,
    "keys": _cmd_keys,
    "closure": _cmd_closure,
    "coatoms": _cmd_coatoms,
    "analyze": _cmd_analyze,
    "generate": _cmd_generate,
    "bench": _cmd_bench,
}


def run(config: RunConfig) -> int:
    """Execute one command. Raises package errors; main() maps them to
    exit codes."""
    return _COMMANDS[config.command](config)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conclose",
        description="Enumerate maximal conflict-free closed sets of implicational bases.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")

    caps = argparse.ArgumentParser(add_help=False)
    caps.add_argument("--cap-keys", type=int, default=KEY_CAP, help="key enumeration cap")
    caps.add_argument("--cap-mis", type=int, default=MIS_CAP, help="independent-set cap")

    ground = argparse.ArgumentParser(add_help=False)
    ground.add_argument(
        "--limit-ground",
        type=int,
        default=EXHAUSTIVE_LIMIT,
        help="refusal size for exhaustive enumeration",
    )

    p = sub.add_parser("solve", parents=[fmt, caps], help="enumerate all solutions")
    p.add_argument("instance")
    p = sub.add_parser(
        "oracle", parents=[fmt, caps, ground], help="brute-force solutions plus agreement verdict"
    )
    p.add_argument("instance")
    p = sub.add_parser(
        "keys",
        parents=[fmt, caps],
        help="minimal keys of the augmented base (of the base itself when no edges)",
    )
    p.add_argument("instance")
    p = sub.add_parser("closure", parents=[fmt], help="closure of one set")
    p.add_argument("instance")
    p.add_argument("--set", dest="set_arg", required=True, help="comma-separated labels")
    p = sub.add_parser(
        "coatoms", parents=[fmt, caps, ground], help="maximal proper closed sets"
    )
    p.add_argument("instance")
    p = sub.add_parser("analyze", parents=[fmt, ground], help="structural check report")
    p.add_argument("instance")

    p = sub.add_parser("generate", help="write an instance in the text format")
    p.add_argument("family", choices=("random", "exponential", "cnf", "fano", "gf2"))
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--imps", type=int, default=10)
    p.add_argument("--max-premise", type=int, default=3)
    p.add_argument("--edges", type=int, default=3)
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--cnf", dest="cnf_path", help="DIMACS-like positive 3-CNF input")
    p.add_argument("--reduce", action="store_true", help="wrap a cnf base in the co-atom reduction")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", help="write to a file instead of stdout")

    p = sub.add_parser("bench", parents=[caps], help="timings over the built-in families, CSV")
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv: list[str] | None = None) -> int:
    ns = _build_parser().parse_args(argv)
    config = RunConfig(
        command=ns.command,
        format=getattr(ns, "format", "text"),
        instance=getattr(ns, "instance", None),
        set_arg=getattr(ns, "set_arg", None),
        limit_ground=getattr(ns, "limit_ground", EXHAUSTIVE_LIMIT),
        cap_keys=getattr(ns, "cap_keys", KEY_CAP),
        cap_mis=getattr(ns, "cap_mis", MIS_CAP),
        seed=getattr(ns, "seed", 0),
        family=getattr(ns, "family", None),
        n=getattr(ns, "n", 3),
        imps=getattr(ns, "imps", 10),
        max_premise=getattr(ns, "max_premise", 3),
        edges=getattr(ns, "edges", 3),
        dim=getattr(ns, "dim", 2),
        cnf_path=getattr(ns, "cnf_path", None),
        reduce=getattr(ns, "reduce", False),
        output=getattr(ns, "output", None),
    )
    try:
        return run(config)
    except OutputLimitExceeded as exc:
        found = len(exc.partial) if exc.partial is not None else "unknown"
        print(f"incomplete: {exc} (partial results: {found})", file=sys.stderr)
        return 2
    except ClosureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
