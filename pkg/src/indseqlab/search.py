"""Seeded random-tree search for log-concavity counterexamples.

Every sample is fully determined by (master seed, sample index): the
sample's vertex count comes from the stream seeded with
derive_seed(master, 2*index), and the tree itself is
random_tree(n, derive_seed(master, 2*index + 1)).  A persisted record
therefore replays from its own fields alone, and output is byte-identical
no matter how many worker threads ran the search.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .rng import SplitMix64, derive_seed
from .seqcheck import analyze
from .trees import RootedTree, edge_list_text, random_tree


@dataclass(frozen=True)
class SearchRecord:
    """One persisted find: a tree whose independence sequence has breaks."""

    seed: int
    sample_index: int
    n: int
    edge_list: str
    breaks: tuple
    alpha: int


def record_to_json(rec: SearchRecord) -> str:
    return json.dumps(
        {
            "seed": rec.seed,
            "sample_index": rec.sample_index,
            "n": rec.n,
            "edge_list": rec.edge_list,
            "breaks": list(rec.breaks),
            "alpha": rec.alpha,
        }
    )


def record_from_json(line: str) -> SearchRecord:
    obj = json.loads(line)
    return SearchRecord(
        seed=obj["seed"],
        sample_index=obj["sample_index"],
        n=obj["n"],
        edge_list=obj["edge_list"],
        breaks=tuple(obj["breaks"]),
        alpha=obj["alpha"],
    )


def tree_seed_for(master: int, index: int) -> int:
    """The per-sample tree seed; fixed scheme, see module docstring."""
    return derive_seed(master, 2 * index + 1)


def sample_tree(master: int, index: int, n_min: int, n_max: int) -> RootedTree:
    """The tree examined at `index` in a run keyed by `master`."""
    rng = SplitMix64(derive_seed(master, 2 * index))
    n = n_min + rng.randbelow(n_max - n_min + 1)
    return random_tree(n, tree_seed_for(master, index))


def replay_record(rec: SearchRecord) -> RootedTree:
    """Regenerate the recorded tree from the record's own fields."""
    return random_tree(rec.n, tree_seed_for(rec.seed, rec.sample_index))


def run_search(
    n_min: int,
    n_max: int,
    samples: int,
    seed: int,
    out_path,
    threads: int | None = None,
    emit_all: bool = False,
) -> int:
    """Analyze `samples` random trees; append one JSONL record per find.

    Records stream to `out_path` in sample-index order (so an interrupted
    run leaves a valid prefix), and the file content is independent of
    `threads`.  With emit_all every sample is recorded, breaks or not;
    the command line never sets that, but tests and benchmarks do.
    Returns the number of records written.
    """
    if n_min < 2:
        raise ValueError("n-min must be >= 2")
    if n_max < n_min:
        raise ValueError("n-max must be >= n-min")
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if threads is None:
        workers = os.cpu_count() or 1
    elif threads < 1:
        raise ValueError("threads must be >= 1")
    else:
        workers = threads

    def examine(index):
        tree = sample_tree(seed, index, n_min, n_max)
        report = analyze(tree)
        if report.breaks or emit_all:
            return SearchRecord(
                seed=seed,
                sample_index=index,
                n=tree.n,
                edge_list=edge_list_text(tree),
                breaks=report.breaks,
                alpha=report.alpha,
            )
        return None

    written = 0
    with open(out_path, "w", encoding="utf-8") as fh:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for rec in pool.map(examine, range(samples)):
                if rec is not None:
                    fh.write(record_to_json(rec))
                    fh.write("\n")
                    written += 1
    return written
