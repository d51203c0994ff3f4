"""Command-line entry point: ``activerank <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

import numpy as np

from . import __version__
from .combinatorics import count_bounds, count_rankings, log2_int, lower_bound_bits
from .datasets import gen_unit_cube, read_embedding, read_matrix, read_names
from .errors import ActiveRankError, SessionAborted
from .experiments import (
    EXPERIMENTS,
    ExperimentConfig,
    run_ambiguity_rate,
    run_fig3,
    run_first_skip,
    run_majority_suite,
    run_parabola,
    run_random_vs_adaptive,
    run_robust_suite,
    run_table1,
    run_table1_synthetic,
)
from .geom import DEFAULT_BOX_INFLATION, Embedding
from .oracle import GeometricOracle, InteractiveOracle, MatrixOracle, NoiseSpec, Oracle
from .ranker import STRATEGIES, rank_errorfree
from .robust import VoteConfig, complete_ranking, rank_robust, repeats_for, threshold_for

FULL_FIG3_DIMS = [1] + list(range(10, 101, 10))


def _names_for(emb: Embedding, names=None) -> list:
    if names is not None:
        if len(names) != emb.n:
            raise ValueError(f"{len(names)} names for {emb.n} objects")
        return list(names)
    return [emb.name(k) for k in range(emb.n)]


class _EchoOracle(Oracle):
    """Forwards to an interactive oracle and prints the running ranking after each answer."""

    def __init__(self, inner: InteractiveOracle, names, out):
        super().__init__()
        self.inner = inner
        self.names = names
        self.out = out
        self.ranked: list = []

    def _answer(self, i, j):
        label = self.inner.ask(i, j)
        if self.ranked:
            self.out.write("Current ranking: " + " > ".join(self.names[k] for k in self.ranked) + "\n")
        return label


def run_interactive(emb: Embedding, names=None, mode: str = "errorfree", R: Optional[int] = None,
                    seed: int = 0, stdin=None, stdout=None, transcript_path=None,
                    box_inflation: float = DEFAULT_BOX_INFLATION, strategy: str = "binary") -> dict:
    """Rank ``emb`` by asking a person; returns the order and the number of questions.

    Raises :class:`SessionAborted` (after saving the transcript) when input ends.
    """
    stdout = stdout if stdout is not None else sys.stdout
    names = _names_for(emb, names)
    person = InteractiveOracle(names, stdin, stdout, transcript_path)
    oracle = _EchoOracle(person, names, stdout)

    def progress(ranked):
        oracle.ranked = ranked

    if mode == "errorfree":
        res = rank_errorfree(emb, oracle, strategy, seed, box_inflation, progress=progress)
        order, skipped = res.order, []
    elif mode == "robust":
        if R is None:
            raise ValueError("robust mode needs R")
        res = rank_robust(emb, oracle, VoteConfig(R, seed), strategy, box_inflation, progress=progress)
        order, skipped = res.ranked, res.skipped
    else:
        raise ValueError(f"mode must be errorfree or robust, got {mode!r}")
    person.save()
    stdout.write("Final ranking: " + " > ".join(names[k] for k in order) + "\n")
    return {"order": [int(k) for k in order], "names": [names[k] for k in order],
            "skipped": [int(k) for k in skipped], "questions": len(person.transcript),
            "reprompts": person.reprompts}


def _load_instance(args):
    """Embedding plus an oracle built from the shared input flags."""
    if args.embedding:
        emb = read_embedding(args.embedding)
        r = None
    else:
        emb, r = gen_unit_cube(args.n, args.d, args.seed)
    if args.matrix:
        S = read_matrix(args.matrix)
        if args.row is None:
            raise ValueError("--matrix needs --row")
        others = [k for k in range(S.shape[0]) if k != args.row]
        if emb.n == S.shape[0]:
            emb = emb.subset(others)
        elif emb.n != len(others):
            raise ValueError(f"embedding has {emb.n} objects, matrix row ranks {len(others)}")
        return emb, MatrixOracle(S, args.row, others)
    if args.reference:
        r = np.array([float(v) for v in args.reference.split(",")])
    if r is None:
        raise ValueError("need --reference or --matrix with an embedding file")
    return emb, GeometricOracle(emb, r, NoiseSpec(args.p, args.noise, args.seed))


def _emit(doc: dict, out: Optional[str]) -> None:
    text = json.dumps(doc, sort_keys=True, indent=1)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    print(text)


def cmd_count(args) -> int:
    q = count_rankings(args.n, args.d)
    doc = {"n": args.n, "d": args.d, "count": str(q), "log2_count": log2_int(q)}
    if args.n > args.d + 1:
        lo, hi = count_bounds(args.n, args.d)
        doc.update(lower_bound_bits=lower_bound_bits(args.n, args.d),
                   ln_lower=lo, ln_upper=hi)
    print(json.dumps(doc, sort_keys=True, indent=1))
    return 0


def cmd_rank(args) -> int:
    emb, oracle = _load_instance(args)
    res = rank_errorfree(emb, oracle, args.strategy, args.seed, args.box_inflation)
    _emit({"version": __version__, "order": [int(k) for k in res.order],
           "names": [emb.name(k) for k in res.order], "requested": res.requested,
           "imputed": res.imputed, "total_calls": oracle.stats.total_calls}, args.out)
    return 0


def cmd_robust(args) -> int:
    if args.noise == "none" and args.p > 0:
        args.noise = "persistent"
    emb, oracle = _load_instance(args)
    R = args.R if args.R is not None else threshold_for(emb.n, args.p)
    res = rank_robust(emb, oracle, VoteConfig(R, args.seed), args.strategy, args.box_inflation)
    full = complete_ranking(res, res.cell, emb)
    if args.log:
        res.write_log(args.log)
    _emit({"version": __version__, "R": R, "ranked": [int(k) for k in res.ranked],
           "skipped": [int(k) for k in res.skipped], "completed": full,
           "requested": res.requested, "total_calls": res.total_calls, "votes": res.votes_held}, args.out)
    return 0


def cmd_interactive(args) -> int:
    emb = read_embedding(args.embedding)
    names = read_names(args.names) if args.names else None
    try:
        doc = run_interactive(emb, names, args.mode, args.R, args.seed, transcript_path=args.transcript,
                              box_inflation=args.box_inflation, strategy=args.strategy)
    except SessionAborted as exc:
        print(f"session aborted: {exc}; transcript saved", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(doc, fh, sort_keys=True, indent=1)
    return 0


def cmd_experiment(args) -> int:
    name = args.name
    strategy = args.strategy or "binary"
    dims = args.dims or (FULL_FIG3_DIMS if args.full_sweep else None)
    defaults = {
        "fig3": dict(n=100, d=[1, 2, 5, 10, 20], trials=25),
        "random": dict(n=20, d=[2], trials=200),
        "ambiguity": dict(n=300, d=[2, 3], trials=5, strategy="linear"),
        "robust-suite": dict(n=200, d=[2], trials=25, p=0.1, noise="persistent"),
        "majority": dict(n=50, d=[2], trials=50, p=0.2, noise="iid"),
        "first-skip": dict(n=2000, d=[2], trials=500, R=10, noise="persistent"),
    }
    if name == "parabola":
        rec = run_parabola(tuple(args.ns or (5, 10, 20)), args.seed, args.box_inflation, strategy)
    elif name == "table1":
        if args.matrix:
            S = read_matrix(args.matrix)
            embs = {}
            for path in args.embeddings or []:
                emb = read_embedding(path)
                embs[emb.d] = emb
            if not embs:
                raise ValueError("table1 with --matrix needs at least one --embeddings file")
            rec = run_table1(S, embs, args.R or 15, args.seed, args.rows, args.box_inflation, strategy)
        else:
            rec = run_table1_synthetic(args.n or 50, (dims or [2])[0], args.synthetic_noise, args.R or 15,
                                       args.seed, args.rows, args.box_inflation)
    else:
        kw = dict(defaults[name])
        for key in ("n", "trials", "R", "p"):
            if getattr(args, key) is not None:
                kw[key] = getattr(args, key)
        if args.noise is not None:
            kw["noise"] = args.noise
        if args.strategy is not None:
            kw["strategy"] = args.strategy
        if dims:
            kw["d"] = dims
        cfg = ExperimentConfig(seed=args.seed, box_inflation=args.box_inflation, out=args.out,
                               workers=args.workers, m_values=args.m, **kw)
        if name == "majority" and cfg.R is None:
            cfg.R = repeats_for(cfg.n, cfg.p, args.delta)
        runner = {"fig3": run_fig3, "random": run_random_vs_adaptive, "ambiguity": run_ambiguity_rate,
                  "robust-suite": run_robust_suite, "majority": run_majority_suite}.get(name)
        rec = run_first_skip(cfg, args.mode) if name == "first-skip" else runner(cfg)
    if args.out:
        paths = rec.write(args.out)
        print(f"wrote {paths[0]} and {paths[1]}", file=sys.stderr)
    print(json.dumps({"experiment": rec.experiment, "summary": rec.payload()["summary"],
                      "aggregates": rec.payload()["aggregates"] if name != "ambiguity" else
                      [{k: a[k] for k in ("d", "slope", "decile_rates")} for a in rec.aggregates]},
                     sort_keys=True, indent=1))
    return 0


def _add_common(p, strategy_default: Optional[str] = "binary"):
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="output path (experiments: file stem for .json and .csv)")
    p.add_argument("--box-inflation", type=float, default=DEFAULT_BOX_INFLATION)
    p.add_argument("--strategy", choices=STRATEGIES, default=strategy_default)
    p.add_argument("--R", type=int)


def _add_instance(p):
    p.add_argument("--embedding", help="CSV of object coordinates")
    p.add_argument("--n", type=int, default=50, help="objects when generating a unit-cube instance")
    p.add_argument("--d", type=int, default=2, help="dimension when generating a unit-cube instance")
    p.add_argument("--reference", help="comma-separated reference point")
    p.add_argument("--matrix", help="similarity CSV; answers come from row --row")
    p.add_argument("--row", type=int)
    p.add_argument("--noise", choices=("none", "iid", "persistent"), default="none")
    p.add_argument("--p", type=float, default=0.0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="activerank", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="number of rankings realizable by n points in d dimensions")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("rank", help="rank with a noiseless or noisy oracle")
    _add_instance(p)
    _add_common(p)
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("robust", help="rank with the voting algorithm")
    _add_instance(p)
    _add_common(p)
    p.add_argument("--log", help="JSON-lines vote log")
    p.set_defaults(func=cmd_robust)

    p = sub.add_parser("interactive", help="rank by asking at the terminal")
    p.add_argument("--embedding", required=True)
    p.add_argument("--names", help="one name per line")
    p.add_argument("--mode", choices=("errorfree", "robust"), default="errorfree")
    p.add_argument("--transcript", default="transcript.jsonl")
    _add_common(p)
    p.set_defaults(func=cmd_interactive)

    p = sub.add_parser("experiment", help="run one of the experiment suites")
    p.add_argument("name", choices=EXPERIMENTS)
    _add_common(p, strategy_default=None)
    p.add_argument("--n", type=int)
    p.add_argument("--dims", type=int, nargs="+", help="dimension list")
    p.add_argument("--full-sweep", action="store_true", help="fig3 over d = 1, 10, ..., 100")
    p.add_argument("--trials", type=int)
    p.add_argument("--noise", choices=("none", "iid", "persistent"))
    p.add_argument("--p", type=float)
    p.add_argument("--delta", type=float, default=0.1, help="failure probability for majority repeats")
    p.add_argument("--m", type=int, nargs="+", help="random-query budgets")
    p.add_argument("--ns", type=int, nargs="+", help="parabola sizes")
    p.add_argument("--mode", choices=("sequential", "algorithm"), default="sequential")
    p.add_argument("--matrix", help="table1: similarity CSV")
    p.add_argument("--embeddings", nargs="+", help="table1: embedding CSVs, one per dimension")
    p.add_argument("--rows", type=int, nargs="+", help="table1: reference rows to run")
    p.add_argument("--synthetic-noise", type=float, default=0.1)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_experiment)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ActiveRankError, ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
