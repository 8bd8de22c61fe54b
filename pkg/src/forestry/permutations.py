"""Permutations in one-line notation, Lehmer codes, pattern containment.

Permutations are plain tuples such as ``(4, 1, 3, 2)``.  Trailing fixed
points carry no meaning: ``(4, 1, 3, 2, 5)`` denotes the same value, and
``trim`` is the normal form (the identity trims to ``()``).

>>> lehmer_code((1, 5, 3, 4, 2))
(0, 3, 1, 1, 0)
>>> perm_from_code((3, 0, 1, 0))
(4, 1, 3, 2)
>>> pattern_witness((2, 4, 5, 1, 3), (2, 4, 1, 3))
(1, 2, 4, 5)
"""

from __future__ import annotations

import itertools
from typing import Iterator, Optional

Permutation = tuple[int, ...]
LehmerCode = tuple[int, ...]

# The six obstructions to a Schubert polynomial being a forest polynomial.
FORBIDDEN_PATTERNS: tuple[Permutation, ...] = (
    (1, 4, 3, 2),
    (2, 4, 1, 3),
    (2, 4, 3, 1),
    (1, 4, 5, 2, 3),
    (3, 2, 1, 5, 4),
    (3, 4, 1, 2, 6, 5),
)

__all__ = [
    "Permutation",
    "LehmerCode",
    "FORBIDDEN_PATTERNS",
    "is_permutation",
    "identity",
    "trim",
    "inverse",
    "compose",
    "inversions",
    "lehmer_code",
    "trim_zeros",
    "perm_from_code",
    "contains_pattern",
    "pattern_witness",
    "avoids_forbidden",
    "insert",
    "all_permutations",
    "parse_permutation",
    "format_permutation",
]


def is_permutation(word: tuple[int, ...]) -> bool:
    return sorted(word) == list(range(1, len(word) + 1))


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def trim(w: Permutation) -> Permutation:
    """Strip trailing fixed points; the identity becomes ``()``."""
    n = len(w)
    while n > 0 and w[n - 1] == n:
        n -= 1
    return tuple(w[:n])


def inverse(w: Permutation) -> Permutation:
    out = [0] * len(w)
    for i, v in enumerate(w):
        out[v - 1] = i + 1
    return tuple(out)


def compose(u: Permutation, v: Permutation) -> Permutation:
    """(u o v)(i) = u(v(i)); sizes may differ, fixed points pad the shorter."""
    n = max(len(u), len(v))

    def app(w: Permutation, i: int) -> int:
        return w[i - 1] if i <= len(w) else i

    return trim(tuple(app(u, app(v, i)) for i in range(1, n + 1)))


def inversions(w: Permutation) -> int:
    return sum(
        1
        for i in range(len(w))
        for j in range(i + 1, len(w))
        if w[i] > w[j]
    )


def lehmer_code(w: Permutation) -> LehmerCode:
    """Entry i counts the j > i with w(j) < w(i).  Length = len(w)."""
    return tuple(
        sum(1 for j in range(i + 1, len(w)) if w[j] < w[i])
        for i in range(len(w))
    )


def trim_zeros(code: LehmerCode) -> LehmerCode:
    n = len(code)
    while n > 0 and code[n - 1] == 0:
        n -= 1
    return tuple(code[:n])


def perm_from_code(code: LehmerCode) -> Permutation:
    """Inverse of ``lehmer_code`` up to trailing zeros.

    Any nonnegative vector is accepted; the result size n is the least one
    with code[i] <= n - i - 1 for all i.
    """
    if any(c < 0 for c in code):
        raise ValueError("code entries must be nonnegative")
    n = max(
        [len(code)] + [i + 1 + c for i, c in enumerate(code)]
    ) if code else 0
    unused = list(range(1, n + 1))
    out = []
    for i in range(n):
        c = code[i] if i < len(code) else 0
        out.append(unused.pop(c))
    return tuple(out)


def _witness_search(w: Permutation, p: Permutation) -> Optional[tuple[int, ...]]:
    n, k = len(w), len(p)
    chosen: list[int] = []

    def extend(start: int) -> bool:
        m = len(chosen)
        if m == k:
            return True
        for j in range(start, n - (k - m) + 1):
            # relative order of the prefix must match p exactly
            if all((w[j] > w[t]) == (p[m] > p[s]) for s, t in enumerate(chosen)):
                chosen.append(j)
                if extend(j + 1):
                    return True
                chosen.pop()
        return False

    if extend(0):
        return tuple(j + 1 for j in chosen)
    return None


def pattern_witness(w: Permutation, p: Permutation) -> Optional[tuple[int, ...]]:
    """Lexicographically first 1-based index tuple where p occurs in w, else None."""
    w, p = trim(w), trim(p)
    if not p:
        return ()
    if len(p) > len(w):
        return None
    return _witness_search(w, p)


def contains_pattern(w: Permutation, p: Permutation) -> bool:
    return pattern_witness(w, p) is not None


def avoids_forbidden(w: Permutation) -> bool:
    return not any(contains_pattern(w, p) for p in FORBIDDEN_PATTERNS)


def insert(w: Permutation, i: int, k: int) -> Permutation:
    """Grow w by one: bump every value >= k, then put value k at index i.

    Deleting index i from the result (renormalizing values) recovers w.
    """
    n = len(w)
    if not 1 <= i <= n + 1:
        raise ValueError(f"index {i} out of range 1..{n + 1}")
    if not 1 <= k <= n + 1:
        raise ValueError(f"value {k} out of range 1..{n + 1}")
    bumped = [v + 1 if v >= k else v for v in w]
    return tuple(bumped[: i - 1] + [k] + bumped[i - 1 :])


def all_permutations(n: int) -> Iterator[Permutation]:
    """S_n in lexicographic order."""
    return itertools.permutations(range(1, n + 1))


def parse_permutation(text: str) -> Permutation:
    """Digits-only for n <= 9 ("4132"); comma-separated beyond ("10,2,...")."""
    text = text.strip()
    if not text:
        raise ValueError("empty permutation")
    if "," in text:
        try:
            word = tuple(int(part) for part in text.split(","))
        except ValueError:
            raise ValueError(f"cannot parse permutation {text!r}") from None
    elif text.isdigit():
        word = tuple(int(ch) for ch in text)
    else:
        raise ValueError(f"cannot parse permutation {text!r}")
    if not is_permutation(word):
        raise ValueError(f"{text!r} is not a rearrangement of 1..{len(word)}")
    return word


def format_permutation(w: Permutation) -> str:
    if not w:
        return "1"
    if len(w) <= 9:
        return "".join(str(v) for v in w)
    return ",".join(str(v) for v in w)
