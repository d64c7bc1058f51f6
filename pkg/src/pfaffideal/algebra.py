"""Exact multivariate polynomials over an indexed set of variables.

Monomials are dense exponent tuples indexed by variable position in the
ring.  A :class:`VariableOrder` ranks the variables and extends the ranking
to the degree reverse lexicographic term order.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Sequence

DEFAULT_PRIME = 32003


class RingMismatchError(ValueError):
    """Raised when combining objects from different rings or fields."""


class Ordering(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


# ---------------------------------------------------------------------------
# coefficient fields


class RationalField:
    """The field of rational numbers, backed by :class:`fractions.Fraction`."""

    characteristic = 0

    def __call__(self, x) -> Fraction:
        return Fraction(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """Integers modulo a prime ``p``, values kept in ``[0, p)``."""

    def __init__(self, p: int = DEFAULT_PRIME):
        if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.characteristic = p

    def __call__(self, x) -> int:
        p = self.characteristic
        if isinstance(x, Fraction):
            den = x.denominator % p
            if den == 0:
                raise ZeroDivisionError(f"denominator divisible by {p}")
            return x.numerator * pow(den, -1, p) % p
        return int(x) % p

    def add(self, a, b):
        return (a + b) % self.characteristic

    def sub(self, a, b):
        return (a - b) % self.characteristic

    def mul(self, a, b):
        return a * b % self.characteristic

    def neg(self, a):
        return -a % self.characteristic

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.characteristic)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("GF", self.characteristic))

    def __repr__(self):
        return f"GF({self.characteristic})"


QQ = RationalField()


def parse_field(text: str):
    """Parse ``"rational"`` or ``"prime:P"`` (``"prime"`` alone uses 32003)."""
    if text in ("rational", "QQ", "qq"):
        return QQ
    if text == "prime":
        return PrimeField(DEFAULT_PRIME)
    if text.startswith("prime:"):
        return PrimeField(int(text.split(":", 1)[1]))
    raise ValueError(f"unknown field {text!r}; expected 'rational' or 'prime:P'")


def field_name(field) -> str:
    return "rational" if field.characteristic == 0 else f"prime:{field.characteristic}"


# ---------------------------------------------------------------------------
# monomials


class Monomial(tuple):
    """Exponent vector; position ``i`` is the exponent of variable ``i``."""

    __slots__ = ()

    @classmethod
    def one(cls, nvars: int) -> Monomial:
        return cls((0,) * nvars)

    @classmethod
    def from_exponents(cls, nvars: int, exponents: Mapping[int, int]) -> Monomial:
        e = [0] * nvars
        for i, k in exponents.items():
            if k < 0:
                raise ValueError("negative exponent")
            e[i] = k
        return cls(e)

    @property
    def degree(self) -> int:
        return sum(self)

    @property
    def exponents(self) -> dict[int, int]:
        return {i: k for i, k in enumerate(self) if k}

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, k in enumerate(self) if k)

    def is_squarefree(self) -> bool:
        return all(k <= 1 for k in self)

    def mul(self, other: Monomial) -> Monomial:
        return Monomial(a + b for a, b in zip(self, other))

    def divides(self, other: Monomial) -> bool:
        return all(a <= b for a, b in zip(self, other))

    def quo(self, other: Monomial) -> Monomial:
        """``self / other``; ``other`` must divide ``self``."""
        e = tuple(a - b for a, b in zip(self, other))
        if any(k < 0 for k in e):
            raise ValueError("monomial does not divide")
        return Monomial(e)

    def lcm(self, other: Monomial) -> Monomial:
        return Monomial(max(a, b) for a, b in zip(self, other))

    def coprime(self, other: Monomial) -> bool:
        return not any(a and b for a, b in zip(self, other))

    def __repr__(self):
        return f"Monomial({tuple(self)!r})"


# ---------------------------------------------------------------------------
# variable orders


class VariableOrder:
    """A total order on the variables of a ring.

    ``ascending`` lists variable indices from smallest to largest, so
    ``rank[ascending[k]] == k``.  Monomials are compared by degree and then
    reverse lexicographically with respect to this ranking.
    """

    def __init__(self, ascending: Sequence[int]):
        ascending = tuple(ascending)
        if sorted(ascending) != list(range(len(ascending))):
            raise ValueError("variable order must be a permutation of 0..n-1")
        self.ascending = ascending
        self.rank = tuple(sorted(range(len(ascending)), key=ascending.__getitem__))
        self._keys: dict[Monomial, tuple] = {}

    def __len__(self):
        return len(self.ascending)

    def __eq__(self, other):
        return isinstance(other, VariableOrder) and other.ascending == self.ascending

    def __hash__(self):
        return hash(self.ascending)

    def __repr__(self):
        return f"VariableOrder({self.ascending!r})"

    def key(self, m: Monomial) -> tuple:
        """Sort key realising the term order: ``a < b`` iff ``key(a) < key(b)``."""
        k = self._keys.get(m)
        if k is None:
            if len(m) != len(self.ascending):
                raise RingMismatchError("monomial and order have different numbers of variables")
            k = (sum(m), tuple(-m[v] for v in self.ascending))
            self._keys[m] = k
        return k

    def less(self, a: int, b: int) -> bool:
        return self.rank[a] < self.rank[b]


def compare_monomials(order: VariableOrder, m1: Monomial, m2: Monomial) -> Ordering:
    """Degree reverse lexicographic comparison of two monomials.

    ``m1 < m2`` iff ``deg m1 < deg m2``, or the degrees agree and at the
    lowest-ranked variable where the exponents differ ``m1`` has the larger
    exponent.
    """
    if len(m1) != len(m2):
        raise RingMismatchError("monomials live in different rings")
    k1, k2 = order.key(m1), order.key(m2)
    if k1 < k2:
        return Ordering.LT
    if k1 > k2:
        return Ordering.GT
    return Ordering.EQ


def compare_sorted_sequences(order: VariableOrder, m1: Monomial, m2: Monomial) -> Ordering:
    """Compare by degree, then lexicographically on the variables of each
    monomial listed in increasing order (with multiplicity).

    Agrees with :func:`compare_monomials`; kept as an independent check.
    """
    if len(m1) != len(m2):
        raise RingMismatchError("monomials live in different rings")
    d1, d2 = m1.degree, m2.degree
    if d1 != d2:
        return Ordering.LT if d1 < d2 else Ordering.GT
    s1 = sorted(order.rank[i] for i, k in enumerate(m1) for _ in range(k))
    s2 = sorted(order.rank[i] for i, k in enumerate(m2) for _ in range(k))
    if s1 < s2:
        return Ordering.LT
    if s1 > s2:
        return Ordering.GT
    return Ordering.EQ


# ---------------------------------------------------------------------------
# rings and polynomials


class PolyRing:
    """Polynomial ring over ``field`` with variables named by ``labels``.

    Labels are opaque hashable tags, e.g. ``(i, j)`` for a diagonal of the
    polygon or ``(a, b)`` for a polyomino cell.
    """

    def __init__(self, labels: Iterable[Hashable], field=QQ, name: str = "x"):
        self.labels = tuple(labels)
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        if len(self.index) != len(self.labels):
            raise ValueError("variable labels must be distinct")
        self.field = field
        self.name = name

    @property
    def nvars(self) -> int:
        return len(self.labels)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.labels == other.labels
            and self.field == other.field
            and self.name == other.name
        )

    def __hash__(self):
        return hash((self.labels, self.field, self.name))

    def __repr__(self):
        return f"PolyRing({self.name}, {self.nvars} vars, {self.field!r})"

    def with_field(self, field) -> PolyRing:
        return PolyRing(self.labels, field, self.name)

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def one(self) -> Polynomial:
        return self.constant(1)

    def constant(self, c) -> Polynomial:
        return Polynomial(self, {Monomial.one(self.nvars): c})

    def monomial(self, exponents: Mapping[Hashable, int]) -> Monomial:
        return Monomial.from_exponents(self.nvars, {self.index[k]: v for k, v in exponents.items()})

    def var(self, label) -> Polynomial:
        return self.term(self.monomial({label: 1}), 1)

    def term(self, m: Monomial, c=1) -> Polynomial:
        return Polynomial(self, {m: c})

    def format_monomial(self, m: Monomial, order: VariableOrder | None = None) -> str:
        """Render as ``x[i,j]*x[k,l]^2``; variables in ascending order."""
        idx = order.ascending if order is not None else range(self.nvars)
        parts = []
        for i in idx:
            k = m[i]
            if k:
                lab = self.labels[i]
                body = ",".join(map(str, lab)) if isinstance(lab, tuple) else str(lab)
                parts.append(f"{self.name}[{body}]" + (f"^{k}" if k > 1 else ""))
        return "*".join(parts) if parts else "1"


class Polynomial:
    """Sparse polynomial: a map from :class:`Monomial` to nonzero coefficients.

    Treated as immutable once built.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: Mapping[Monomial, object]):
        field = ring.field
        clean = {}
        for m, c in terms.items():
            c = field(c)
            if c != 0:
                if len(m) != ring.nvars:
                    raise RingMismatchError("monomial has the wrong number of variables")
                clean[m if isinstance(m, Monomial) else Monomial(m)] = c
        self.ring = ring
        self.terms = clean

    @classmethod
    def _raw(cls, ring: PolyRing, terms: dict) -> Polynomial:
        # terms already normalised: coefficients in the field and nonzero
        p = object.__new__(cls)
        p.ring = ring
        p.terms = terms
        return p

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((m.degree for m in self.terms), default=-1)

    def _check(self, other: Polynomial):
        if self.ring != other.ring:
            if self.ring.field != other.ring.field:
                raise RingMismatchError("coefficient domains differ")
            raise RingMismatchError("polynomials live in different rings")

    def __add__(self, other: Polynomial) -> Polynomial:
        return poly_add(self, other)

    def __sub__(self, other: Polynomial) -> Polynomial:
        return poly_add(self, -other)

    def __neg__(self) -> Polynomial:
        neg = self.ring.field.neg
        return Polynomial._raw(self.ring, {m: neg(c) for m, c in self.terms.items()})

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            return poly_mul(self, other)
        return self.scale(self.ring.field(other))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        out = self.ring.one()
        for _ in range(k):
            out = poly_mul(out, self)
        return out

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def scale(self, c) -> Polynomial:
        c = self.ring.field(c)
        if c == 0:
            return self.ring.zero()
        mul = self.ring.field.mul
        return Polynomial._raw(self.ring, {m: mul(a, c) for m, a in self.terms.items()})

    def mul_term(self, m: Monomial, c) -> Polynomial:
        c = self.ring.field(c)
        if c == 0:
            return self.ring.zero()
        mul = self.ring.field.mul
        return Polynomial._raw(self.ring, {t.mul(m): mul(a, c) for t, a in self.terms.items()})

    def monic(self, order: VariableOrder) -> Polynomial:
        _, c = leading_term(order, self)
        return self.scale(self.ring.field.inv(c))

    def __repr__(self):
        if not self.terms:
            return "0"
        pieces = []
        for m in sorted(self.terms, reverse=True):
            c = self.terms[m]
            pieces.append(f"{c}*{self.ring.format_monomial(m)}")
        return " + ".join(pieces)


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    f._check(g)
    add = f.ring.field.add
    out = dict(f.terms)
    for m, c in g.terms.items():
        if m in out:
            s = add(out[m], c)
            if s == 0:
                del out[m]
            else:
                out[m] = s
        else:
            out[m] = c
    return Polynomial._raw(f.ring, out)


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    f._check(g)
    field = f.ring.field
    add, mul = field.add, field.mul
    out: dict[Monomial, object] = {}
    for m1, c1 in f.terms.items():
        for m2, c2 in g.terms.items():
            m = m1.mul(m2)
            c = mul(c1, c2)
            out[m] = add(out[m], c) if m in out else c
    return Polynomial._raw(f.ring, {m: c for m, c in out.items() if c != 0})


def leading_term(order: VariableOrder, f: Polynomial) -> tuple[Monomial, object]:
    """Largest term of ``f`` under ``order`` as ``(monomial, coefficient)``."""
    if not f.terms:
        raise ValueError("zero polynomial has no leading term")
    m = max(f.terms, key=order.key)
    return m, f.terms[m]


def leading_monomial(order: VariableOrder, f: Polynomial) -> Monomial:
    return leading_term(order, f)[0]
