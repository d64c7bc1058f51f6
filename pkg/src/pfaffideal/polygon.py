"""Vertices, edges and diagonals of a convex n-gon.

A pair ``(i, j)`` with ``1 <= i < j <= n`` is an edge or diagonal of the
polygon whose vertices are labelled ``1..n`` around the boundary.
"""

from __future__ import annotations

import random
from typing import Callable

Diagonal = tuple[int, int]


def distance(n: int, i: int, j: int) -> int:
    """Cyclic distance ``min(j - i, n + i - j)`` between polygon vertices."""
    if not 1 <= i < j <= n:
        raise ValueError(f"need 1 <= i < j <= n, got i={i}, j={j}, n={n}")
    return min(j - i, n + i - j)


def omega(n: int) -> list[Diagonal]:
    """All pairs ``(i, j)`` with ``1 <= i < j <= n`` in lexicographic order."""
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def omega_r(n: int, r: int) -> list[Diagonal]:
    """Diagonals whose distance exceeds ``r``."""
    return [d for d in omega(n) if distance(n, *d) > r]


def theta(n: int, r: int) -> list[Diagonal]:
    """Complement of :func:`omega_r`: pairs at distance at most ``r``."""
    return [d for d in omega(n) if distance(n, *d) <= r]


def _span_key(n: int, d: Diagonal):
    i, j = d
    return (distance(n, i, j), j - i, i, j)


def _lex_key(n: int, d: Diagonal):
    return (distance(n, *d), d)


def _reverse_key(n: int, d: Diagonal):
    i, j = d
    return (distance(n, i, j), -(j - i), -i, -j)


TIE_BREAKS: dict[str, Callable] = {"span": _span_key, "lex": _lex_key, "reverse": _reverse_key}


def sorted_diagonals(n: int, tie_break: str = "span") -> list[Diagonal]:
    """Diagonals in ascending variable order.

    Variables are ranked by cyclic distance.  Ties are broken according to
    ``tie_break``:

    ``"span"`` (default)
        ascending ``j - i``, then lexicographically; for ``n = 5`` this gives
        ``x12 < x23 < x34 < x45 < x15 < x13 < x24 < x35 < x14 < x25``.
    ``"lex"``
        lexicographically by ``(i, j)``.
    ``"reverse"``
        the reverse of ``"span"`` within each distance class.
    ``"random:SEED"``
        a seeded shuffle within each distance class.
    """
    diags = omega(n)
    if tie_break.startswith("random"):
        seed = int(tie_break.split(":", 1)[1]) if ":" in tie_break else 0
        rng = random.Random(seed)
        tags = {d: rng.random() for d in diags}
        return sorted(diags, key=lambda d: (distance(n, *d), tags[d]))
    try:
        key = TIE_BREAKS[tie_break]
    except KeyError:
        raise ValueError(f"unknown tie break {tie_break!r}") from None
    return sorted(diags, key=lambda d: key(n, d))
