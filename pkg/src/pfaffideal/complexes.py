"""Simplicial complexes presented by their minimal nonfaces.

Vertices are arbitrary hashable labels; internally a vertex set is a bitmask
over the positions of the ground set.  Face counts come from a memoised
deletion/link recursion, so complexes with tens of vertices and very many
faces are cheap as long as the nonface hypergraph is small.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Hashable, Iterable, Sequence

from .polygon import omega, omega_r, sorted_diagonals

DEFAULT_FACET_BUDGET = 2_000_000


class FacetBudgetExceeded(RuntimeError):
    pass


def _popcount(m: int) -> int:
    return bin(m).count("1")


def _minimal_masks(masks: Iterable[int]) -> list[int]:
    out: list[int] = []
    for m in sorted(set(masks), key=lambda x: (_popcount(x), x)):
        if not any(o & m == o for o in out):
            out.append(m)
    return out


def _binomial_row(k: int) -> list[int]:
    return [comb(k, i) for i in range(k + 1)]


def _poly_mul(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _face_census(ground: int, nonfaces: tuple[int, ...], memo: dict) -> list[int]:
    """Number of faces by cardinality (index 0 counts the empty face)."""
    if 0 in nonfaces:
        return [0]
    singles = 0
    for m in nonfaces:
        if m & (m - 1) == 0:
            singles |= m
    if singles:
        ground &= ~singles
        nonfaces = tuple(m for m in nonfaces if not m & singles)
    used = 0
    for m in nonfaces:
        used |= m
    cone = _binomial_row(_popcount(ground & ~used))
    if not nonfaces:
        return cone
    ground &= used
    key = (ground, frozenset(nonfaces))
    core = memo.get(key)
    if core is None:
        counts: dict[int, int] = {}
        for m in nonfaces:
            x = m
            while x:
                low = x & -x
                counts[low] = counts.get(low, 0) + 1
                x ^= low
        v = max(counts, key=lambda b: (counts[b], b))
        rest = ground & ~v
        deletion = _face_census(rest, tuple(m for m in nonfaces if not m & v), memo)
        link = _face_census(rest, tuple(_minimal_masks(m & ~v for m in nonfaces)), memo)
        core = [0] * max(len(deletion), len(link) + 1)
        for i, c in enumerate(deletion):
            core[i] += c
        for i, c in enumerate(link):
            core[i + 1] += c
        memo[key] = core
    return _poly_mul(core, cone)


class SimplicialComplex:
    """A complex on ``ground`` whose faces are the sets containing no
    minimal nonface.

    ``min_nonfaces`` is reduced to an inclusion antichain on construction.
    The void complex (no faces at all) is not representable.
    """

    def __init__(self, ground: Sequence[Hashable], min_nonfaces: Iterable[Iterable[Hashable]]):
        self.ground = tuple(ground)
        self.position = {v: k for k, v in enumerate(self.ground)}
        if len(self.position) != len(self.ground):
            raise ValueError("ground set has repeated vertices")
        masks = []
        for nf in min_nonfaces:
            try:
                masks.append(self._mask(nf))
            except KeyError as exc:
                raise ValueError(f"nonface vertex {exc.args[0]!r} not in ground set") from None
        self._nonface_masks = tuple(_minimal_masks(masks))
        if 0 in self._nonface_masks:
            raise ValueError("the empty set cannot be a nonface")
        self._facets: list[int] | None = None
        self._census: list[int] | None = None

    def _mask(self, vertices: Iterable[Hashable]) -> int:
        m = 0
        for v in vertices:
            m |= 1 << self.position[v]
        return m

    def _labels(self, mask: int) -> tuple:
        return tuple(v for k, v in enumerate(self.ground) if mask >> k & 1)

    @property
    def min_nonfaces(self) -> list[tuple]:
        return sorted(self._labels(m) for m in self._nonface_masks)

    @property
    def nonface_masks(self) -> tuple[int, ...]:
        return self._nonface_masks

    def __eq__(self, other):
        return (
            isinstance(other, SimplicialComplex)
            and set(self.ground) == set(other.ground)
            and set(map(frozenset, self.min_nonfaces)) == set(map(frozenset, other.min_nonfaces))
        )

    def __repr__(self):
        return (
            f"SimplicialComplex({len(self.ground)} vertices, "
            f"{len(self._nonface_masks)} minimal nonfaces)"
        )

    def is_face(self, vertices: Iterable[Hashable]) -> bool:
        m = self._mask(vertices)
        return not any(nf & m == nf for nf in self._nonface_masks)

    def iter_faces(self):
        """Enumerate every face by brute force (small ground sets only)."""
        for k in range(len(self.ground) + 1):
            for sub in itertools.combinations(self.ground, k):
                if self.is_face(sub):
                    yield sub

    def face_counts(self) -> list[int]:
        """``[f_{-1}, f_0, f_1, ...]`` up to the top dimension."""
        if self._census is None:
            full = (1 << len(self.ground)) - 1
            counts = _face_census(full, self._nonface_masks, {})
            while len(counts) > 1 and counts[-1] == 0:
                counts.pop()
            self._census = counts
        return list(self._census)

    @property
    def dim(self) -> int:
        return len(self.face_counts()) - 2

    def facet_masks(self, budget: int = DEFAULT_FACET_BUDGET) -> list[int]:
        if self._facets is None:
            self._facets = _enumerate_facets(len(self.ground), self._nonface_masks, budget)
        return list(self._facets)

    def facets(self, budget: int = DEFAULT_FACET_BUDGET) -> list[tuple]:
        return sorted(self._labels(m) for m in self.facet_masks(budget))


def _enumerate_facets(nverts: int, nonfaces: Sequence[int], budget: int) -> list[int]:
    """Maximal faces by include/exclude backtracking.

    Excluding a vertex is only allowed while some nonface through it can
    still be completed by the vertices chosen so far plus those not yet
    decided, which keeps dead branches short.
    """
    through: list[list[int]] = [[] for _ in range(nverts)]
    for nf in nonfaces:
        for v in range(nverts):
            if nf >> v & 1:
                through[v].append(nf & ~(1 << v))
    suffix = [0] * (nverts + 1)
    for v in range(nverts - 1, -1, -1):
        suffix[v] = suffix[v + 1] | (1 << v)

    out: list[int] = []
    steps = 0

    def blockable(v: int, allowed: int, excluded: int) -> bool:
        return any(rest & allowed == rest and not rest & excluded for rest in through[v])

    def search(i: int, chosen: int, excluded: int, excl_list: list[int]):
        nonlocal steps
        steps += 1
        if steps > budget:
            raise FacetBudgetExceeded(f"facet enumeration exceeded {budget} steps")
        if i == nverts:
            if all(any(rest & chosen == rest for rest in through[v]) for v in excl_list):
                out.append(chosen)
            return
        bit = 1 << i
        if not any(rest & chosen == rest for rest in through[i]):
            search(i + 1, chosen | bit, excluded, excl_list)
        allowed = chosen | suffix[i + 1]
        excluded2 = excluded | bit
        if blockable(i, allowed, excluded2) and all(
            blockable(v, allowed, excluded2) for v in excl_list
        ):
            excl_list.append(i)
            search(i + 1, chosen, excluded2, excl_list)
            excl_list.pop()

    search(0, 0, 0, [])
    return out


# ---------------------------------------------------------------------------
# polygon complexes


def crossing(d1: tuple[int, int], d2: tuple[int, int], n: int | None = None) -> bool:
    """Whether two diagonals of a convex polygon cross in its interior."""
    a, b = sorted(d1)
    c, d = sorted(d2)
    return (a < c < b) != (a < d < b) and len({a, b, c, d}) == 4


def nested(d1: tuple[int, int], d2: tuple[int, int]) -> bool:
    """``ab`` and ``cd`` are nested when ``a < c < d < b`` (after sorting)."""
    (a, b), (c, d) = sorted([tuple(sorted(d1)), tuple(sorted(d2))])
    return a < c < d < b


def pairwise_cliques(vertices: Sequence, related: Callable, size: int) -> list[tuple]:
    """All ``size``-subsets of ``vertices`` whose elements are pairwise related."""
    vertices = list(vertices)
    adj = [
        {j for j in range(len(vertices)) if j != i and related(vertices[i], vertices[j])}
        for i in range(len(vertices))
    ]
    out: list[tuple] = []

    def extend(clique: list[int], candidates: list[int]):
        if len(clique) == size:
            out.append(tuple(vertices[i] for i in clique))
            return
        for pos, v in enumerate(candidates):
            extend(clique + [v], [w for w in candidates[pos + 1 :] if w in adj[v]])

    extend([], list(range(len(vertices))))
    return out


def delta_complex(n: int, r: int) -> SimplicialComplex:
    """Complex on diagonals of distance ``> r`` with no ``r+1`` pairwise
    crossing diagonals in any face."""
    if not 0 <= 2 * r <= n - 1:
        raise ValueError(f"need 0 <= 2r <= n-1, got n={n}, r={r}")
    keep = set(omega_r(n, r))
    ground = [d for d in sorted_diagonals(n) if d in keep]
    return SimplicialComplex(ground, pairwise_cliques(ground, crossing, r + 1))


def sigma_complex(n: int, r: int) -> SimplicialComplex:
    """Complex on all pairs of ``[n]`` with no ``r+1`` pairwise nested pairs in any face."""
    if r < 0:
        raise ValueError("need r >= 0")
    ground = omega(n)
    return SimplicialComplex(ground, pairwise_cliques(ground, nested, r + 1))


def join_with_simplex(c: SimplicialComplex, extra: Iterable[Hashable]) -> SimplicialComplex:
    """Join of ``c`` with the full simplex on ``extra`` (a cone over each new vertex)."""
    extra = list(extra)
    overlap = set(extra) & set(c.ground)
    if overlap:
        raise ValueError(f"vertices {sorted(overlap)} already in the ground set")
    return SimplicialComplex(c.ground + tuple(extra), c.min_nonfaces)


# ---------------------------------------------------------------------------
# face numbers


def facets(c: SimplicialComplex, budget: int = DEFAULT_FACET_BUDGET) -> list[tuple]:
    return c.facets(budget)


def h_from_f(f: Sequence[int]) -> list[int]:
    """h-vector from ``[f_{-1}, f_0, ..., f_{d-1}]``."""
    d = len(f) - 1
    return [
        sum((-1) ** (j - i) * comb(d - i, j - i) * f[i] for i in range(j + 1))
        for j in range(d + 1)
    ]


def trim(h: Sequence[int]) -> list[int]:
    """Drop trailing zeros (but keep at least one entry)."""
    h = list(h)
    while len(h) > 1 and h[-1] == 0:
        h.pop()
    return h


@dataclass(frozen=True)
class FHVectors:
    f: tuple[int, ...]
    h: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.f) - 2

    @property
    def h_polynomial(self) -> tuple[int, ...]:
        return tuple(trim(self.h))


def f_h_vectors(c: SimplicialComplex) -> FHVectors:
    f = c.face_counts()
    return FHVectors(tuple(f), tuple(h_from_f(f)))


def reduced_euler_characteristic(f: Sequence[int]) -> int:
    return sum((-1) ** (i - 1) * x for i, x in enumerate(f))


@dataclass(frozen=True)
class SphereCertificate:
    """Finite necessary conditions for a triangulated sphere."""

    pure: bool
    dimension: int
    expected_dimension: int | None
    euler_ok: bool
    pseudomanifold_ok: bool
    connected_ok: bool
    h_symmetric: bool
    facets: int

    @property
    def dimension_ok(self) -> bool:
        return self.expected_dimension is None or self.dimension == self.expected_dimension

    @property
    def ok(self) -> bool:
        return (
            self.pure
            and self.dimension_ok
            and self.euler_ok
            and self.pseudomanifold_ok
            and self.connected_ok
            and self.h_symmetric
        )


def sphere_certificate(
    c: SimplicialComplex, expected_dim: int | None = None, budget: int = DEFAULT_FACET_BUDGET
) -> SphereCertificate:
    """Purity, Euler characteristic, pseudomanifold and strong connectivity.

    Connectivity is checked on the dual graph (facets adjacent when they share
    a ridge), which is the right notion for every dimension including the
    two-point 0-sphere.
    """
    fm = c.facet_masks(budget)
    sizes = {_popcount(m) for m in fm}
    pure = len(sizes) == 1
    fv = c.face_counts()
    dim = len(fv) - 2
    euler_ok = reduced_euler_characteristic(fv) == (-1) ** dim if dim >= 0 else fv == [1]

    ridges: dict[int, list[int]] = {}
    for k, m in enumerate(fm):
        x = m
        while x:
            low = x & -x
            ridges.setdefault(m & ~low, []).append(k)
            x ^= low
    pseudomanifold_ok = pure and all(len(v) == 2 for v in ridges.values())

    parent = list(range(len(fm)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for owners in ridges.values():
        for other in owners[1:]:
            parent[find(other)] = find(owners[0])
    connected_ok = len({find(k) for k in range(len(fm))}) == 1

    h = h_from_f(fv)
    return SphereCertificate(
        pure=pure,
        dimension=dim,
        expected_dimension=expected_dim,
        euler_ok=euler_ok,
        pseudomanifold_ok=pseudomanifold_ok,
        connected_ok=connected_ok,
        h_symmetric=h == h[::-1],
        facets=len(fm),
    )


def expected_delta_dimension(n: int, r: int) -> int:
    return r * (n - 2 * r - 1) - 1


def _integral_product(factors: Iterable[Fraction]) -> int:
    value = Fraction(1)
    for x in factors:
        value *= x
    if value.denominator != 1:
        raise ArithmeticError(f"product {value} is not an integer")
    return value.numerator


def facet_count_formula(n: int, r: int) -> int:
    """Product over ``1 <= i <= j <= n-2r-1`` of ``(2r+i+j)/(i+j)``."""
    if not 0 <= 2 * r <= n - 1:
        raise ValueError(f"need 0 <= 2r <= n-1, got n={n}, r={r}")
    m = n - 2 * r - 1
    return _integral_product(
        Fraction(2 * r + i + j, i + j) for i in range(1, m + 1) for j in range(i, m + 1)
    )


def multiplicity_formula(n: int, r: int) -> int:
    """Product over ``1 <= i <= j <= n-2r+1`` of ``(2(r-1)+i+j)/(i+j)``."""
    if not 1 <= 2 * r <= n:
        raise ValueError(f"need 1 <= 2r <= n, got n={n}, r={r}")
    m = n - 2 * r + 1
    return _integral_product(
        Fraction(2 * (r - 1) + i + j, i + j) for i in range(1, m + 1) for j in range(i, m + 1)
    )
