"""Where pipe dreams and forests meet.

The bottom pipe dream of w and the forest of lehmer_code(w) use the same
(row, ordinal) labels: crossing t of row i *is* internal vertex (i, t), so
the crossing <-> vertex bijection needs no table.  Everything here rides on
that identification:

- ``covering_relation`` reads the forest's right-child edges as pairs of
  crossing ids;
- ``labeling_to_pipe_dream`` realizes a valid labeling f as a pipe dream by
  sliding each crossing up its diagonal (simple moves only) until it sits in
  row f(v) — a weight-preserving injection from labelings into pipe dreams;
- ``find_bad_pair`` hunts, through the id-tracked simple-move closure, for a
  right-child crossing that can climb into (or past) its parent's row: the
  obstruction that makes a Schubert polynomial fail to be a forest
  polynomial;
- ``verify_theorem`` checks, over all of S_n, that the pattern test and the
  polynomial-equality test give the same verdict.
"""

from __future__ import annotations

import time
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional

from .forests import (
    IndexedForest,
    Labeling,
    Vertex,
    forest_from_code,
    forest_polynomial,
    is_valid_labeling,
    valid_labelings,
)
from .permutations import (
    Permutation,
    all_permutations,
    avoids_forbidden,
    contains_pattern,
    lehmer_code,
    trim,
)
from .pipedreams import Cell, PipeDream, _closure, _sum_of_weights, schubert
from .polynomials import Monomial, Polynomial

__all__ = [
    "BadPair",
    "covering_relation",
    "labeling_to_pipe_dream",
    "replay_simple_moves",
    "find_bad_pair",
    "is_forest_by_pattern",
    "is_forest_by_expansion",
    "VerifyReport",
    "verify_theorem",
]


def covering_relation(w: Permutation) -> frozenset:
    """Pairs (parent id, child id) of crossings of bottom_pipe_dream(w);
    under the identification above, exactly the forest's right-child edges."""
    return frozenset(forest_from_code(lehmer_code(trim(w))).covers)


def labeling_to_pipe_dream(w: Permutation, labeling: Labeling) -> PipeDream:
    """Slide each crossing of the bottom dream up to the row its label asks
    for, working top to bottom and right to left; raises ValueError on an
    invalid labeling.  A blocked slide would disprove injectivity and aborts
    hard — it cannot happen for a valid labeling."""
    w = trim(w)
    forest = forest_from_code(lehmer_code(w))
    if not is_valid_labeling(forest, labeling):
        raise ValueError(f"not a valid labeling of the forest of {w}: {labeling}")
    want = dict(zip(forest.vertices, labeling))
    cells: set[Cell] = set(forest.vertices)  # ids coincide with bottom cells
    for v in sorted(forest.vertices, key=lambda u: (u[0], -u[1])):
        r, c = v
        while r > want[v]:
            blocked = (
                (r - 1, c) in cells
                or (r - 1, c + 1) in cells
                or (r, c + 1) in cells
            )
            assert not blocked, f"simple slide of {v} blocked at {(r, c)}"
            cells.remove((r, c))
            r, c = r - 1, c + 1
            cells.add((r, c))
    return frozenset(cells)


@dataclass(frozen=True)
class BadPair:
    """A parent crossing whose right child can climb to its row.

    ``moves`` replays from the bottom pipe dream: each entry is the id of
    the crossing to slide one step up its diagonal.
    """

    parent: Vertex
    child: Vertex
    moves: tuple[Vertex, ...]


def replay_simple_moves(w: Permutation, moves) -> dict[Vertex, Cell]:
    """Apply a BadPair witness; returns the final id -> cell placement."""
    ids = forest_from_code(lehmer_code(trim(w))).vertices
    pos: dict[Vertex, Cell] = {v: v for v in ids}
    cells: set[Cell] = set(ids)
    for moved in moves:
        r, c = pos[moved]
        ok = (
            r > 1
            and (r - 1, c) not in cells
            and (r - 1, c + 1) not in cells
            and (r, c + 1) not in cells
        )
        if not ok:
            raise ValueError(f"witness move of {moved} not applicable at {(r, c)}")
        cells.remove((r, c))
        pos[moved] = (r - 1, c + 1)
        cells.add(pos[moved])
    return pos


def find_bad_pair(
    w: Permutation, *, require_equal_row: bool = False
) -> Optional[BadPair]:
    """Breadth-first search of the id-tracked simple-move closure for a
    covering pair with row(child) <= row(parent) (== when
    ``require_equal_row``; both variants agree, which the tests assert)."""
    w = trim(w)
    forest = forest_from_code(lehmer_code(w))
    ids = forest.vertices
    slot = {v: i for i, v in enumerate(ids)}
    pairs = [(slot[p], slot[c]) for p, c in forest.covers]
    start = tuple(ids)

    def hit(state) -> Optional[tuple[int, int]]:
        for pi, ci in pairs:
            child_row, parent_row = state[ci][0], state[pi][0]
            if child_row == parent_row or (
                not require_equal_row and child_row < parent_row
            ):
                return pi, ci
        return None

    prev: dict[tuple, Optional[tuple]] = {start: None}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        found = hit(state)
        if found is not None:
            moves: list[Vertex] = []
            cursor = state
            while prev[cursor] is not None:
                cursor, idx = prev[cursor]
                moves.append(ids[idx])
            moves.reverse()
            return BadPair(parent=ids[found[0]], child=ids[found[1]], moves=tuple(moves))
        occupied = set(state)
        for idx, (r, c) in enumerate(state):
            if (
                r > 1
                and (r - 1, c) not in occupied
                and (r - 1, c + 1) not in occupied
                and (r, c + 1) not in occupied
            ):
                nxt = state[:idx] + ((r - 1, c + 1),) + state[idx + 1 :]
                if nxt not in prev:
                    prev[nxt] = (state, idx)
                    queue.append(nxt)
    return None


def is_forest_by_pattern(w: Permutation) -> bool:
    """Does w avoid all six forbidden patterns?"""
    return avoids_forbidden(trim(w))


def is_forest_by_expansion(w: Permutation) -> bool:
    """Does the Schubert polynomial of w equal the forest polynomial of the
    forest with the same code?"""
    w = trim(w)
    return schubert(w) == forest_polynomial(forest_from_code(lehmer_code(w)))


def _expansion_equal_uncached(w: Permutation) -> bool:
    # cache-free path for bulk verification runs
    poly = _sum_of_weights(_closure(w, simple_only=False))
    forest = forest_from_code(lehmer_code(w))
    terms: dict[Monomial, int] = {}
    for labeling in valid_labelings(forest):
        exps = [0] * (max(labeling) if labeling else 0)
        for val in labeling:
            exps[val - 1] += 1
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + 1
    return poly == Polynomial(terms)


_PATTERN_1432 = (1, 4, 3, 2)


def _verify_batch(perms: tuple[Permutation, ...]) -> dict:
    out = {
        "total": 0,
        "pattern_positive": 0,
        "expansion_positive": 0,
        "disagreements": [],
        "badpair_checked": 0,
        "badpair_disagreements": [],
    }
    for w in perms:
        w = trim(w)
        by_pattern = is_forest_by_pattern(w)
        by_expansion = _expansion_equal_uncached(w)
        out["total"] += 1
        out["pattern_positive"] += by_pattern
        out["expansion_positive"] += by_expansion
        if by_pattern != by_expansion:
            out["disagreements"].append(
                {"permutation": list(w), "pattern": by_pattern, "expansion": by_expansion}
            )
        if not contains_pattern(w, _PATTERN_1432):
            out["badpair_checked"] += 1
            bad = find_bad_pair(w) is not None
            if bad == by_expansion:  # a bad pair must appear iff expansion fails
                out["badpair_disagreements"].append(
                    {
                        "permutation": list(w),
                        "bad_pair_found": bad,
                        "expansion_equal": by_expansion,
                    }
                )
    return out


@dataclass(frozen=True)
class VerifyReport:
    n: int
    total: int
    pattern_positive: int
    expansion_positive: int
    disagreements: tuple[dict, ...]
    badpair_checked: int
    badpair_disagreements: tuple[dict, ...]
    elapsed_ms: int

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "total": self.total,
            "pattern_positive": self.pattern_positive,
            "expansion_positive": self.expansion_positive,
            "disagreements": list(self.disagreements),
            "badpair_checked": self.badpair_checked,
            "badpair_disagreements": list(self.badpair_disagreements),
            "elapsed_ms": self.elapsed_ms,
        }


def _chunks(n: int, size: int):
    batch: list[Permutation] = []
    for w in all_permutations(n):
        batch.append(w)
        if len(batch) == size:
            yield tuple(batch)
            batch = []
    if batch:
        yield tuple(batch)


def verify_theorem(
    n: int,
    jobs: int = 1,
    progress: Optional[Callable[[int, int], None]] = None,
) -> VerifyReport:
    """Exhaustively compare the pattern test against the polynomial test on
    S_n, cross-checking bad-pair detection on the 1432-avoiding part.

    Runs in lexicographic chunks of 1000 (optionally fanned out over
    ``jobs`` processes, merged in order); ``progress(done, total)`` fires
    after each chunk.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    started = time.monotonic()
    total = 1
    for i in range(2, n + 1):
        total *= i
    merged = {
        "total": 0,
        "pattern_positive": 0,
        "expansion_positive": 0,
        "disagreements": [],
        "badpair_checked": 0,
        "badpair_disagreements": [],
    }

    def absorb(batch_result: dict) -> None:
        for key, value in batch_result.items():
            merged[key] += value
        if progress is not None:
            progress(merged["total"], total)

    if jobs <= 1:
        for chunk in _chunks(n, 1000):
            absorb(_verify_batch(chunk))
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for result in pool.map(_verify_batch, _chunks(n, 1000)):
                absorb(result)

    return VerifyReport(
        n=n,
        total=merged["total"],
        pattern_positive=merged["pattern_positive"],
        expansion_positive=merged["expansion_positive"],
        disagreements=tuple(merged["disagreements"]),
        badpair_checked=merged["badpair_checked"],
        badpair_disagreements=tuple(merged["badpair_disagreements"]),
        elapsed_ms=int((time.monotonic() - started) * 1000),
    )
