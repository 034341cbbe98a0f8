"""Exhaustive census of g(k) and c(n) over all graphs up to isomorphism.

``g(k)``: maximum number of minimal u,v-separators over graphs on ``k + 2``
vertices and all vertex pairs. ``c(n)``: maximum number of minimal vertex
cuts over graphs on ``n`` vertices.

Work is split by canonical parent: every graph on N vertices is the child of
exactly one canonical graph on N - 1 vertices, so chunks of parents are
independent units. Chunk results are merged in parent order, which makes the
outcome independent of the worker count.
"""

from __future__ import annotations

import json
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from . import kernels
from ._jit import njit
from .bounds import CUBE_ROOT_3
from .canon import (
    MAX_CANON_VERTICES,
    canonical_labelling,
    children,
    code_to_adj,
    graph_from_code,
    level_codes,
)
from .graph import Graph, from_graph6

log = logging.getLogger(__name__)

CHECKPOINT_MAGIC = b"MCCENSUS1"
CONJECTURE_SLACK = 1e-12
DEFAULT_MAX_VERTICES = 9


class CensusError(RuntimeError):
    pass


class CheckpointError(CensusError):
    pass


class InvariantViolation(CensusError):
    pass


@dataclass
class CensusRecord:
    kind: str
    size: int
    value: int
    witnesses: list[str]
    graphs_examined: int
    elapsed: float
    root: float
    exceeds_cube_root_3: bool

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    def comparable(self) -> dict:
        """Every field except wall-clock time."""
        out = asdict(self)
        del out["elapsed"]
        return out


def vertex_count(kind: str, size: int) -> int:
    if kind == "g":
        return size + 2
    if kind == "c":
        return size
    raise ValueError(f"kind must be 'g' or 'c', got {kind!r}")


def check_size(kind: str, size: int) -> None:
    lo = 1 if kind == "g" else 3
    n = vertex_count(kind, size)
    if size < lo or n > MAX_CANON_VERTICES:
        hi = MAX_CANON_VERTICES - 2 if kind == "g" else MAX_CANON_VERTICES
        raise ValueError(f"{kind}-census size must be in {lo}..{hi}, got {size}")


@njit
def _score(adj, n, separators):
    if separators:
        return kernels.best_pair_count(adj, n)
    return kernels.minimal_vertex_cuts(adj, n).shape[0]


@njit
def block_scores(parent_codes, n, separators):
    """Children of each parent with their scores, in parent order."""
    parts = []
    total = 0
    for p in parent_codes:
        kids = children(p, n)
        parts.append(kids)
        total += kids.shape[0]
    codes = np.empty(total, dtype=np.int64)
    scores = np.empty(total, dtype=np.int64)
    k = 0
    for kids in parts:
        for c in kids:
            codes[k] = c
            scores[k] = _score(code_to_adj(c, n), n, separators)
            k += 1
    return codes, scores


def _run_chunk(args):
    kind, n, parents = args
    codes, scores = block_scores(parents, n, kind == "g")
    if codes.shape[0] == 0:
        return 0, -1, []
    best = int(scores.max())
    return int(codes.shape[0]), best, [int(c) for c in codes[scores == best]]


@dataclass
class _Progress:
    kind: str
    size: int
    cursor: int = 0
    examined: int = 0
    best: int = -1
    candidates: list[int] = field(default_factory=list)
    elapsed: float = 0.0

    def absorb(self, examined: int, best: int, codes: list[int]) -> None:
        self.examined += examined
        if best > self.best:
            self.best, self.candidates = best, list(codes)
        elif best == self.best:
            self.candidates.extend(codes)


def write_checkpoint(path: Path, state: dict) -> None:
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    with open(tmp, "wb") as fh:
        fh.write(CHECKPOINT_MAGIC + b"\n")
        fh.write(json.dumps(state, sort_keys=True).encode())
        fh.flush()
        os.fsync(fh.fileno())
    os.replace(tmp, path)


def read_checkpoint(path: Path) -> dict:
    data = Path(path).read_bytes()
    head = CHECKPOINT_MAGIC + b"\n"
    if not data.startswith(head):
        bad = next((i for i, (a, b) in enumerate(zip(data, head)) if a != b), min(len(data), len(head)))
        raise CheckpointError(f"{path}: bad magic at byte offset {bad}; refusing to resume")
    try:
        state = json.loads(data[len(head):])
    except json.JSONDecodeError as exc:
        raise CheckpointError(
            f"{path}: corrupt checkpoint at byte offset {len(head) + exc.pos}; refusing to resume"
        ) from exc
    if not isinstance(state, dict) or "completed" not in state:
        raise CheckpointError(f"{path}: checkpoint at byte offset {len(head)} lacks required fields")
    return state


def _pair_witnesses(code: int, n: int, value: int) -> list[tuple[int, int]]:
    """Maximising pairs of one graph, one representative per automorphism orbit."""
    g = graph_from_code(code, n)
    counts = kernels.pair_counts(g.masks, n)
    seen = set()
    out = []
    for u in range(n):
        for v in range(u + 1, n):
            if counts[u, v] != value:
                continue
            marks = [1 if x in (u, v) else 0 for x in range(n)]
            marked_code, lab = canonical_labelling(g, marks)
            key = (marked_code, tuple(sorted((lab.index(u), lab.index(v)))))
            if key not in seen:
                seen.add(key)
                out.append((u, v))
    return out


def _finish(progress: _Progress) -> CensusRecord:
    kind, size = progress.kind, progress.size
    n = vertex_count(kind, size)
    value = progress.best
    witnesses = []
    for code in progress.candidates:
        g = graph_from_code(code, n)
        g6 = g.to_graph6().decode()
        if kind == "g":
            pairs = _pair_witnesses(code, n, value)
            if not pairs:
                raise InvariantViolation(f"witness {g6} no longer reaches {value}")
            witnesses.extend(f"{g6} {u} {v}" for u, v in pairs)
        else:
            if kernels.minimal_vertex_cuts(g.masks, n).shape[0] != value:
                raise InvariantViolation(f"witness {g6} no longer reaches {value}")
            witnesses.append(g6)
    witnesses.sort()
    root = value ** (1.0 / size) if value > 0 else 0.0
    return CensusRecord(
        kind=kind,
        size=size,
        value=value,
        witnesses=witnesses,
        graphs_examined=progress.examined,
        elapsed=round(progress.elapsed, 3),
        root=root,
        exceeds_cube_root_3=root > CUBE_ROOT_3 + CONJECTURE_SLACK,
    )


def _chunks(parents: np.ndarray, start: int, chunk_size: int):
    for lo in range(start, len(parents), chunk_size):
        yield lo, parents[lo:lo + chunk_size]


def _search(
    kind: str,
    size: int,
    workers: int = 1,
    chunk_size: int = 256,
    progress: _Progress | None = None,
    on_chunk=None,
) -> _Progress:
    """Advance ``progress`` through all parents; ``on_chunk`` may stop early by returning False."""
    check_size(kind, size)
    n = vertex_count(kind, size)
    progress = progress or _Progress(kind, size)
    parents = level_codes(n - 1)
    todo = _chunks(parents, progress.cursor, chunk_size)
    started = time.perf_counter() - progress.elapsed

    def consume(results):
        for (lo, block), res in results:
            progress.absorb(*res)
            progress.cursor = lo + len(block)
            progress.elapsed = time.perf_counter() - started
            if on_chunk is not None and on_chunk(progress) is False:
                return False
        return True

    if workers <= 1:
        consume(((lo, b), _run_chunk((kind, n, b))) for lo, b in todo)
    else:
        blocks = list(todo)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = pool.map(_run_chunk, [(kind, n, b) for _, b in blocks])
            consume(zip(blocks, results))
    return progress


def compute_g(k: int, workers: int = 1) -> CensusRecord:
    check_size("g", k)
    return _finish(_search("g", k, workers))


def compute_c(n: int, workers: int = 1) -> CensusRecord:
    check_size("c", n)
    return _finish(_search("c", n, workers))


@dataclass
class ConjectureRow:
    k: int
    g: int
    lower: int
    root: float
    ok: bool
    witnesses: list[str]


def verify_conjecture(k_max: int, records: dict[int, CensusRecord] | None = None) -> list[ConjectureRow]:
    """Check g(k)^(1/k) <= 3^(1/3) for k = 1..k_max; violations are logged, never clamped."""
    check_size("g", k_max)
    records = records or {}
    rows = []
    for k in range(1, k_max + 1):
        rec = records.get(k) or compute_g(k)
        ok = rec.value ** (1.0 / k) <= CUBE_ROOT_3 + CONJECTURE_SLACK
        if not ok:
            log.error(
                "g(%d) = %d exceeds 3^(k/3); witnesses: %s", k, rec.value, ", ".join(rec.witnesses)
            )
        rows.append(ConjectureRow(k, rec.value, 3 ** (k // 3), rec.value ** (1.0 / k), ok, rec.witnesses))
    return rows


@dataclass
class CensusConfig:
    kind: str
    sizes: list[int]
    out: Path
    witnesses: Path | None = None
    checkpoint: Path | None = None
    workers: int = 1
    chunk_size: int = 256
    checkpoint_every: int = 8
    max_chunks: int | None = None


def _state(cfg: CensusConfig, completed: list[int], progress: _Progress | None) -> dict:
    return {
        "version": 1,
        "kind": cfg.kind,
        "sizes": list(cfg.sizes),
        "chunk_size": cfg.chunk_size,
        "completed": completed,
        "current": None if progress is None else asdict(progress),
        "written_at": time.time(),
    }


def _already_written(out: Path, kind: str, size: int) -> bool:
    if not out.exists():
        return False
    with open(out) as fh:
        for line in fh:
            line = line.strip()
            if line:
                rec = json.loads(line)
                if rec.get("kind") == kind and rec.get("size") == size:
                    return True
    return False


def census_run(cfg: CensusConfig) -> list[CensusRecord] | None:
    """Run a census over ``cfg.sizes`` with checkpoints and JSON-lines output.

    Returns the records produced in this call, or ``None`` when stopped by
    ``max_chunks`` before finishing (the checkpoint then holds the cursor).
    """
    for size in cfg.sizes:
        check_size(cfg.kind, size)
    out = Path(cfg.out)
    for target in (out, cfg.witnesses, cfg.checkpoint):
        if target is not None and not os.access(Path(target).parent or ".", os.W_OK):
            raise CensusError(f"cannot write to {target}")

    completed: list[int] = []
    resume: _Progress | None = None
    if cfg.checkpoint is not None and Path(cfg.checkpoint).exists():
        state = read_checkpoint(cfg.checkpoint)
        if state.get("kind") != cfg.kind or state.get("chunk_size") != cfg.chunk_size:
            raise CheckpointError(
                f"{cfg.checkpoint}: written for kind={state.get('kind')} "
                f"chunk_size={state.get('chunk_size')}; refusing to resume"
            )
        completed = list(state["completed"])
        if state.get("current"):
            resume = _Progress(**state["current"])
        log.info("resuming: completed %s, current %s", completed, state.get("current"))

    produced = []
    budget = [cfg.max_chunks]
    for size in cfg.sizes:
        if size in completed:
            continue
        progress = resume if resume is not None and resume.size == size else None
        resume = None
        since = [0]

        def on_chunk(p, since=since):
            since[0] += 1
            if cfg.checkpoint is not None and since[0] % cfg.checkpoint_every == 0:
                write_checkpoint(cfg.checkpoint, _state(cfg, completed, p))
            if budget[0] is not None:
                budget[0] -= 1
                if budget[0] <= 0:
                    if cfg.checkpoint is not None:
                        write_checkpoint(cfg.checkpoint, _state(cfg, completed, p))
                    return False
            return True

        progress = _search(cfg.kind, size, cfg.workers, cfg.chunk_size, progress, on_chunk)
        if progress.cursor < len(level_codes(vertex_count(cfg.kind, size) - 1)):
            return None
        record = _finish(progress)
        if not _already_written(out, cfg.kind, size):
            with open(out, "a") as fh:
                fh.write(record.to_json() + "\n")
            if cfg.witnesses is not None:
                with open(cfg.witnesses, "a") as fh:
                    fh.writelines(w + "\n" for w in record.witnesses)
        completed.append(size)
        if cfg.checkpoint is not None:
            write_checkpoint(cfg.checkpoint, _state(cfg, completed, None))
        produced.append(record)
        log.info("%s(%d) = %d over %d graphs", cfg.kind, size, record.value, record.graphs_examined)
    return produced


def read_records(path: Path) -> list[CensusRecord]:
    with open(path) as fh:
        return [CensusRecord(**json.loads(line)) for line in fh if line.strip()]


def witness_graph(witness: str) -> tuple[Graph, int | None, int | None]:
    """Parse a witness line ``graph6 [u v]``."""
    parts = witness.split()
    g = from_graph6(parts[0])
    if len(parts) == 3:
        return g, int(parts[1]), int(parts[2])
    return g, None, None


__all__ = [
    "CensusConfig",
    "CensusRecord",
    "CheckpointError",
    "InvariantViolation",
    "census_run",
    "compute_c",
    "compute_g",
    "read_records",
    "verify_conjecture",
    "witness_graph",
]
