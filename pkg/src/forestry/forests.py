"""Binary indexed forests, valid labelings, and forest polynomials.

An internal vertex is identified by (row, ordinal): ``row`` is the leaf
label its left-edge chain reaches (called ``rho`` throughout), ``ordinal``
counts the vertex's position within that chain from the bottom (1 = deepest).
A code c gives row i exactly c[i-1] vertices; the left child of (i, t) is
(i, t-1), and right children are attached by walking down the code: row i's
vertices are spent one per empty row until some populated row j is found,
whereupon the current vertex adopts (j, c[j-1]) as right child and row j is
processed the same way; after that first adoption, each remaining vertex of
row i adopts the next populated unadopted row, passing empty rows for free.

A valid labeling f picks 1 <= f(v) <= rho(v) with f weakly increasing along
left edges and strictly increasing along right edges.  The forest polynomial
is the sum of prod_v x_{f(v)} over valid labelings.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterator, Optional

from .permutations import LehmerCode, trim_zeros
from .polynomials import Monomial, Polynomial

Vertex = tuple[int, int]  # (rho, ordinal), both 1-based
Labeling = tuple[int, ...]  # values aligned with IndexedForest.vertices

__all__ = [
    "Vertex",
    "Labeling",
    "IndexedForest",
    "forest_from_code",
    "code_of_forest",
    "valid_labelings",
    "is_valid_labeling",
    "forest_polynomial",
    "render_forest",
    "forest_to_json",
    "forest_from_json",
]


@dataclass(frozen=True)
class IndexedForest:
    code: LehmerCode
    vertices: tuple[Vertex, ...]  # sorted (rho, ordinal)
    covers: tuple[tuple[Vertex, Vertex], ...]  # (parent, right child), sorted

    @functools.cached_property
    def _right_child(self) -> dict[Vertex, Vertex]:
        return dict(self.covers)

    @functools.cached_property
    def _vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    def rho(self, v: Vertex) -> int:
        return v[0]

    def left_child(self, v: Vertex) -> Optional[Vertex]:
        return (v[0], v[1] - 1) if v[1] > 1 else None

    def right_child(self, v: Vertex) -> Optional[Vertex]:
        return self._right_child.get(v)

    @functools.cached_property
    def _parent(self) -> dict[Vertex, tuple[Vertex, bool]]:
        """child -> (parent, child_is_right)."""
        out: dict[Vertex, tuple[Vertex, bool]] = {}
        for v in self.vertices:
            up = (v[0], v[1] + 1)
            if up in self._vertex_set:
                out[v] = (up, False)
        for parent, child in self.covers:
            assert child not in out, "vertex with two parents"
            out[child] = (parent, True)
        return out

    def parent(self, v: Vertex) -> Optional[tuple[Vertex, bool]]:
        return self._parent.get(v)

    def roots(self) -> tuple[Vertex, ...]:
        return tuple(v for v in self.vertices if v not in self._parent)


def _covers_from_code(code: LehmerCode) -> list[tuple[Vertex, Vertex]]:
    """Covering pairs ((i, t), (j, code_j)): vertex t of chain i covers the
    top vertex of chain j, constraining its label strictly from below.

    Scanning down from chain i, every empty row consumes one vertex of i
    (those vertices cover nothing) until i makes its first cover; after
    that, each remaining vertex of i covers the next nonempty uncovered
    row, and empty or already-covered rows are passed over for free.
    Covering a row immediately processes that row's chain the same way.
    """
    n = len(code)
    covers: list[tuple[Vertex, Vertex]] = []
    done: set[int] = set()

    def process(row: int) -> None:
        done.add(row)
        p = row + 1
        covered_any = False
        for t in range(1, code[row - 1] + 1):
            while p <= n and (p in done or (covered_any and code[p - 1] == 0)):
                p += 1
            if p > n:
                break
            if code[p - 1] == 0:
                p += 1
                continue
            covers.append(((row, t), (p, code[p - 1])))
            process(p)
            covered_any = True
            p += 1

    for row in range(1, n + 1):
        if code[row - 1] and row not in done:
            process(row)
    return covers


@functools.lru_cache(maxsize=None)
def _forest_from_code_cached(code: LehmerCode) -> IndexedForest:
    vertices = tuple(
        (row, t)
        for row, k in enumerate(code, start=1)
        for t in range(1, k + 1)
    )
    covers = _covers_from_code(code)
    forest = IndexedForest(code=code, vertices=vertices, covers=tuple(sorted(covers)))
    for parent, child in covers:
        assert child[0] > parent[0], "right child must have larger rho"
        assert child[1] == code[child[0] - 1], "right child must top its chain"
    return forest


def forest_from_code(code: LehmerCode) -> IndexedForest:
    code = trim_zeros(tuple(code))
    if any(c < 0 for c in code):
        raise ValueError("code entries must be nonnegative")
    return _forest_from_code_cached(code)


def code_of_forest(forest: IndexedForest) -> LehmerCode:
    if not forest.vertices:
        return ()
    counts = [0] * max(v[0] for v in forest.vertices)
    for v in forest.vertices:
        counts[v[0] - 1] += 1
    return trim_zeros(tuple(counts))


def _topological(forest: IndexedForest) -> list[Vertex]:
    # parents before children: ordinals descend within a chain, rho ascends
    return sorted(forest.vertices, key=lambda v: (v[0], -v[1]))


def valid_labelings(forest: IndexedForest) -> tuple[Labeling, ...]:
    """All valid labelings, deterministically ordered (values ascending in
    parent-first vertex order); each aligned with ``forest.vertices``."""
    order = _topological(forest)
    slot = {v: i for i, v in enumerate(forest.vertices)}
    chosen: dict[Vertex, int] = {}
    out: list[Labeling] = []

    def rec(pos: int) -> None:
        if pos == len(order):
            values = [0] * len(order)
            for v, val in chosen.items():
                values[slot[v]] = val
            out.append(tuple(values))
            return
        v = order[pos]
        up = forest.parent(v)
        if up is None:
            lo = 1
        else:
            parent, is_right = up
            lo = chosen[parent] + (1 if is_right else 0)
        for val in range(lo, forest.rho(v) + 1):
            chosen[v] = val
            rec(pos + 1)
        chosen.pop(v, None)

    rec(0)
    return tuple(out)


def is_valid_labeling(forest: IndexedForest, labeling: Labeling) -> bool:
    if len(labeling) != len(forest.vertices):
        return False
    value = dict(zip(forest.vertices, labeling))
    for v in forest.vertices:
        if not 1 <= value[v] <= forest.rho(v):
            return False
        left = forest.left_child(v)
        if left is not None and not value[v] <= value[left]:
            return False
        right = forest.right_child(v)
        if right is not None and not value[v] < value[right]:
            return False
    return True


@functools.lru_cache(maxsize=None)
def _forest_polynomial_cached(forest: IndexedForest) -> Polynomial:
    terms: dict[Monomial, int] = {}
    for labeling in valid_labelings(forest):
        exps = [0] * (max(labeling) if labeling else 0)
        for val in labeling:
            exps[val - 1] += 1
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + 1
    return Polynomial(terms)


def forest_polynomial(forest: IndexedForest) -> Polynomial:
    """Sum over valid labelings of prod_v x_{f(v)}; 1 for the empty forest."""
    return _forest_polynomial_cached(forest)


def render_forest(forest: IndexedForest) -> list[str]:
    """Indented tree, one root per block; children tagged L/R."""
    if not forest.vertices:
        return ["(empty forest)"]
    lines: list[str] = []

    def walk(v: Vertex, prefix: str, tag: str) -> None:
        label = f"(row {v[0]}, #{v[1]}) rho={v[0]}"
        lines.append(prefix + tag + label)
        kids = [
            (t, c)
            for t, c in (("L ", forest.left_child(v)), ("R ", forest.right_child(v)))
            if c is not None
        ]
        child_prefix = prefix
        if tag:
            child_prefix = prefix + ("   " if tag.startswith("└") else "│  ")
        for i, (t, c) in enumerate(kids):
            last = i == len(kids) - 1
            walk(c, child_prefix, ("└─ " if last else "├─ ") + t)

    for root in forest.roots():
        walk(root, "", "")
    return lines


def forest_to_json(forest: IndexedForest) -> dict:
    index = {v: i for i, v in enumerate(forest.vertices)}

    def ref(v: Optional[Vertex]) -> Optional[int]:
        return None if v is None else index[v]

    return {
        "vertices": [
            {
                "rho": v[0],
                "left": ref(forest.left_child(v)),
                "right": ref(forest.right_child(v)),
            }
            for v in forest.vertices
        ]
    }


def forest_from_json(obj: object) -> IndexedForest:
    """Parse {vertices: [{rho, left, right}]}; the structure must be a
    genuine binary indexed forest (it is checked against its own code)."""
    if not isinstance(obj, dict) or "vertices" not in obj:
        raise ValueError("forest JSON must be an object with a 'vertices' list")
    entries = obj["vertices"]
    if not isinstance(entries, list):
        raise ValueError("'vertices' must be a list")
    for e in entries:
        if not isinstance(e, dict) or not {"rho", "left", "right"} <= set(e):
            raise ValueError(f"bad vertex entry {e!r}")
        if not isinstance(e["rho"], int) or e["rho"] < 1:
            raise ValueError(f"bad rho in {e!r}")
        for key in ("left", "right"):
            ref = e[key]
            if ref is not None and (
                not isinstance(ref, int) or not 0 <= ref < len(entries)
            ):
                raise ValueError(f"bad {key} reference in {e!r}")

    # ordinal = 1 + length of the left chain hanging below
    def ordinal(i: int, seen: frozenset = frozenset()) -> int:
        if i in seen:
            raise ValueError("cycle in left references")
        left = entries[i]["left"]
        return 1 if left is None else 1 + ordinal(left, seen | {i})

    ids = [(e["rho"], ordinal(i)) for i, e in enumerate(entries)]
    if len(set(ids)) != len(ids):
        raise ValueError("vertices do not form disjoint left chains")
    code_counts: dict[int, int] = {}
    for rho, _ in ids:
        code_counts[rho] = code_counts.get(rho, 0) + 1
    code = trim_zeros(
        tuple(code_counts.get(i, 0) for i in range(1, max(code_counts) + 1))
    ) if code_counts else ()
    canonical = forest_from_code(code)
    edges = {
        (ids[i], ids[e["right"]])
        for i, e in enumerate(entries)
        if e["right"] is not None
    }
    lefts = {
        (ids[i], ids[e["left"]])
        for i, e in enumerate(entries)
        if e["left"] is not None
    }
    expected_lefts = {
        (v, canonical.left_child(v))
        for v in canonical.vertices
        if canonical.left_child(v) is not None
    }
    if (
        set(ids) != set(canonical.vertices)
        or edges != set(canonical.covers)
        or lefts != expected_lefts
    ):
        raise ValueError("structure is not a valid binary indexed forest")
    return canonical
