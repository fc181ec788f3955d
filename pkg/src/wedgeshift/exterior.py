"""Exact exterior algebra over the rationals.

Monomials are wedges of distinct 1-based basis vectors stored with sorted
support; multivectors are sparse rational combinations of monomials over a
fixed ground dimension; square rational matrices act on grade one and extend
multiplicatively to every graded component.  No floating point anywhere.

The canonical text form orders terms by lexicographic support and writes each
as ``c*e{i}^e{j}...`` with unit coefficients omitted, e.g.
``e1^e2^e3 - 1/2*e4^e5^e6``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Optional, Sequence, Union

from .errors import GroundMismatchError, HomogeneityError, ParseError

Rational = Union[int, Fraction]
Support = tuple[int, ...]


def _check_support(n: int, support: Sequence[int]) -> Support:
    sup = tuple(int(i) for i in support)
    for a, b in zip(sup, sup[1:]):
        if a >= b:
            raise ValueError(f"support must be strictly increasing, got {sup}")
    if sup and (sup[0] < 1 or sup[-1] > n):
        raise ValueError(f"support {sup} out of range for ground dimension {n}")
    return sup


@dataclass(frozen=True)
class Monomial:
    """A wedge of distinct basis vectors; support (1, 3) stands for e1^e3."""

    n: int
    support: Support

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("ground dimension must be positive")
        object.__setattr__(self, "support", _check_support(self.n, self.support))

    @property
    def grade(self) -> int:
        return len(self.support)


def merge_sign(left: Sequence[int], right: Sequence[int]) -> int:
    """Parity sign of sorting the concatenation of two sorted disjoint runs."""
    inversions = 0
    for s in left:
        for t in right:
            if t < s:
                inversions += 1
    return -1 if inversions % 2 else 1


class Multivector:
    """Sparse exact-rational linear combination of exterior monomials."""

    __slots__ = ("n", "_terms", "_key")

    def __init__(
        self,
        n: int,
        terms: Union[Mapping[Sequence[int], Rational], Iterable[tuple[Sequence[int], Rational]]] = (),
    ):
        if n < 1:
            raise ValueError("ground dimension must be positive")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Support, Fraction] = {}
        for support, coeff in items:
            sup = _check_support(n, tuple(support))
            c = acc.get(sup, Fraction(0)) + Fraction(coeff)
            if c == 0:
                acc.pop(sup, None)
            else:
                acc[sup] = c
        self.n = n
        self._terms = acc
        self._key: Optional[tuple] = None

    @classmethod
    def zero(cls, n: int) -> "Multivector":
        return cls(n)

    @classmethod
    def basis(cls, n: int, i: int) -> "Multivector":
        """The grade-one basis vector e_i."""
        return cls(n, {(i,): 1})

    @classmethod
    def monomial(cls, n: int, support: Sequence[int], coeff: Rational = 1) -> "Multivector":
        return cls(n, {tuple(support): coeff})

    @property
    def terms(self) -> Mapping[Support, Fraction]:
        """Read-only view of the nonzero terms."""
        return MappingProxyType(self._terms)

    def coefficient(self, support: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(support), Fraction(0))

    def supports(self) -> list[Support]:
        return sorted(self._terms)

    def grades(self) -> frozenset[int]:
        return frozenset(len(s) for s in self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_homogeneous(self) -> bool:
        return len(self.grades()) <= 1

    @property
    def grade(self) -> Optional[int]:
        """Grade of a homogeneous multivector; None for zero."""
        gs = self.grades()
        if not gs:
            return None
        if len(gs) > 1:
            raise HomogeneityError(f"multivector has mixed grades {sorted(gs)}")
        return next(iter(gs))

    def _merge(self, other: "Multivector", flip: int) -> "Multivector":
        if self.n != other.n:
            raise GroundMismatchError(f"ground dimensions differ: {self.n} vs {other.n}")
        acc = dict(self._terms)
        for sup, c in other._terms.items():
            v = acc.get(sup, Fraction(0)) + flip * c
            if v == 0:
                acc.pop(sup, None)
            else:
                acc[sup] = v
        out = Multivector.__new__(Multivector)
        out.n = self.n
        out._terms = acc
        out._key = None
        return out

    def __add__(self, other: "Multivector") -> "Multivector":
        if not isinstance(other, Multivector):
            return NotImplemented
        return self._merge(other, 1)

    def __sub__(self, other: "Multivector") -> "Multivector":
        if not isinstance(other, Multivector):
            return NotImplemented
        return self._merge(other, -1)

    def __neg__(self) -> "Multivector":
        return self.scale(-1)

    def scale(self, c: Rational) -> "Multivector":
        c = Fraction(c)
        if c == 0:
            return Multivector.zero(self.n)
        out = Multivector.__new__(Multivector)
        out.n = self.n
        out._terms = {s: v * c for s, v in self._terms.items()}
        out._key = None
        return out

    def __mul__(self, c: Rational) -> "Multivector":
        if not isinstance(c, (int, Fraction)):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def wedge(self, other: "Multivector") -> "Multivector":
        return wedge(self, other)

    def _sort_key(self) -> tuple:
        if self._key is None:
            self._key = (self.n, tuple(sorted(self._terms.items())))
        return self._key

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Multivector) and self._sort_key() == other._sort_key()

    def __hash__(self) -> int:
        return hash(self._sort_key())

    def __str__(self) -> str:
        return format_multivector(self)

    def __repr__(self) -> str:
        return f"Multivector({self.n}, {format_multivector(self)!r})"


def wedge(x: Multivector, y: Multivector) -> Multivector:
    """Exterior product, extended bilinearly from the merge-parity monomial rule.

    Monomials with intersecting supports multiply to zero; otherwise the
    product is the monomial on the union with the sign of the permutation
    that sorts the concatenated index sequence.
    """
    if x.n != y.n:
        raise GroundMismatchError(f"ground dimensions differ: {x.n} vs {y.n}")
    acc: dict[Support, Fraction] = {}
    for sx, cx in x._terms.items():
        setx = set(sx)
        for sy, cy in y._terms.items():
            if setx.intersection(sy):
                continue
            sup = tuple(sorted(sx + sy))
            c = acc.get(sup, Fraction(0)) + merge_sign(sx, sy) * cx * cy
            if c == 0:
                acc.pop(sup, None)
            else:
                acc[sup] = c
    out = Multivector.__new__(Multivector)
    out.n = x.n
    out._terms = acc
    out._key = None
    return out


def linear_combine(pairs: Iterable[tuple[Rational, Multivector]]) -> Multivector:
    """Exact linear combination of multivectors sharing a ground dimension."""
    pairs = list(pairs)
    if not pairs:
        raise ValueError("empty combination has no ground dimension")
    n = pairs[0][1].n
    acc = Multivector.zero(n)
    for c, x in pairs:
        if x.n != n:
            raise GroundMismatchError(f"ground dimensions differ: {n} vs {x.n}")
        acc = acc + x.scale(c)
    return acc


class LinearMap:
    """Exact square matrix acting on grade one; column j holds the image of e_j.

    Entries are row-major with 0-based internal indexing; the public accessors
    ``entry`` and ``column`` take 1-based indices to match basis-vector names.
    """

    __slots__ = ("n", "entries")

    def __init__(self, entries: Iterable[Iterable[Rational]]):
        rows = tuple(tuple(Fraction(c) for c in row) for row in entries)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("entries must form a nonempty square matrix")
        self.n = n
        self.entries = rows

    @classmethod
    def identity(cls, n: int) -> "LinearMap":
        return cls([[1 if r == c else 0 for c in range(n)] for r in range(n)])

    @classmethod
    def diagonal(cls, values: Sequence[Rational]) -> "LinearMap":
        n = len(values)
        return cls([[values[r] if r == c else 0 for c in range(n)] for r in range(n)])

    @classmethod
    def shear(cls, n: int, i: int, j: int, t: Rational) -> "LinearMap":
        """Identity plus t in row j, column i: sends e_i to e_i + t*e_j."""
        if i == j or not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"shear needs distinct indices in [1, {n}], got ({i}, {j})")
        rows = [[Fraction(1) if r == c else Fraction(0) for c in range(n)] for r in range(n)]
        rows[j - 1][i - 1] = Fraction(t)
        return cls(rows)

    @classmethod
    def weight_diagonal(cls, n: int, t: Rational) -> "LinearMap":
        """Diagonal entries t^(-2^1), ..., t^(-2^n).

        Weights every monomial by t to the negated binary weight of its
        support, so distinct supports get distinct powers of t.
        """
        t = Fraction(t)
        if t == 0:
            raise ValueError("weight diagonal needs a nonzero parameter")
        return cls.diagonal([Fraction(1) / t ** (2 ** i) for i in range(1, n + 1)])

    def entry(self, r: int, c: int) -> Fraction:
        return self.entries[r - 1][c - 1]

    def column(self, i: int) -> Multivector:
        """Image of e_i as a grade-one multivector."""
        return Multivector(self.n, {(r + 1,): self.entries[r][i - 1] for r in range(self.n)})

    def compose(self, other: "LinearMap") -> "LinearMap":
        """self after other, as a matrix product."""
        if self.n != other.n:
            raise GroundMismatchError(f"dimensions differ: {self.n} vs {other.n}")
        n = self.n
        a, b = self.entries, other.entries
        return LinearMap(
            [[sum(a[r][m] * b[m][c] for m in range(n)) for c in range(n)] for r in range(n)]
        )

    def det(self) -> Fraction:
        mat = [list(row) for row in self.entries]
        n = self.n
        sign = 1
        out = Fraction(1)
        for col in range(n):
            piv = next((r for r in range(col, n) if mat[r][col] != 0), None)
            if piv is None:
                return Fraction(0)
            if piv != col:
                mat[col], mat[piv] = mat[piv], mat[col]
                sign = -sign
            p = mat[col][col]
            out *= p
            for r in range(col + 1, n):
                f = mat[r][col] / p
                if f:
                    for c in range(col, n):
                        mat[r][c] -= f * mat[col][c]
        return sign * out

    def inverse(self) -> "LinearMap":
        n = self.n
        aug = [list(row) + [Fraction(1) if r == c else Fraction(0) for c in range(n)]
               for r, row in enumerate(self.entries)]
        for col in range(n):
            piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
            if piv is None:
                raise ValueError("matrix is singular")
            aug[col], aug[piv] = aug[piv], aug[col]
            p = aug[col][col]
            aug[col] = [v / p for v in aug[col]]
            for r in range(n):
                if r != col and aug[r][col]:
                    f = aug[r][col]
                    aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
        return LinearMap([row[n:] for row in aug])

    @property
    def is_upper_triangular(self) -> bool:
        return all(self.entries[r][c] == 0 for r in range(self.n) for c in range(r))

    @property
    def is_diagonal_invertible(self) -> bool:
        return (
            all(self.entries[r][r] != 0 for r in range(self.n))
            and all(self.entries[r][c] == 0 for r in range(self.n) for c in range(self.n) if r != c)
        )

    @property
    def is_unipotent_upper(self) -> bool:
        return self.is_upper_triangular and all(self.entries[r][r] == 1 for r in range(self.n))

    @property
    def is_invertible(self) -> bool:
        return self.det() != 0

    def __call__(self, x: Multivector) -> Multivector:
        return apply_linear(self, x)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LinearMap) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(("LinearMap", self.entries))

    def __repr__(self) -> str:
        return f"LinearMap({[list(map(str, row)) for row in self.entries]})"


def apply_linear(g: LinearMap, x: Multivector) -> Multivector:
    """Extend the grade-one action of g multiplicatively and linearly.

    Each monomial maps to the wedge of the images of its factors, so
    apply_linear(g, wedge(x, y)) = wedge(apply_linear(g, x), apply_linear(g, y)).
    """
    if g.n != x.n:
        raise GroundMismatchError(f"ground dimensions differ: {g.n} vs {x.n}")
    columns = {i: g.column(i) for i in {i for sup in x._terms for i in sup}}
    acc = Multivector.zero(x.n)
    one = Multivector(x.n, {(): 1})
    for sup, c in x._terms.items():
        image = one
        for i in sup:
            image = wedge(image, columns[i])
            if image.is_zero:
                break
        acc = acc + image.scale(c)
    return acc


_MONOMIAL_RE = re.compile(r"^e\d+(?:\^e\d+)*$")
_COEFF_RE = re.compile(r"^\d+(?:/\d+)?$")


def format_multivector(x: Multivector) -> str:
    """Canonical text form: lex-ordered supports, unit coefficients omitted."""
    if x.is_zero:
        return "0"
    parts: list[str] = []
    for sup, c in sorted(x._terms.items()):
        mono = "^".join(f"e{i}" for i in sup)
        a = abs(c)
        if not sup:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"{' - ' if c < 0 else ' + '}{body}")
    return "".join(parts)


def _signed_chunks(text: str) -> list[tuple[int, str]]:
    chunks: list[tuple[int, str]] = []
    for raw in text.replace("-", "+-").split("+"):
        body = raw.strip()
        if not body:
            continue
        sign = 1
        if body.startswith("-"):
            sign = -1
            body = body[1:].strip()
        if not body:
            raise ParseError(f"dangling sign in {text!r}")
        chunks.append((sign, body))
    return chunks


def parse_multivector(text: str, n: int) -> Multivector:
    """Parse the canonical text form (unsorted index runs are normalized by parity)."""
    s = text.strip()
    if not s:
        raise ParseError("empty multivector text")
    if s == "0":
        return Multivector.zero(n)
    pairs: list[tuple[Support, Fraction]] = []
    for sign, body in _signed_chunks(s):
        body = body.replace(" ", "")
        coeff = Fraction(sign)
        mono = body
        if "*" in body:
            head, _, mono = body.partition("*")
            if not _COEFF_RE.match(head):
                raise ParseError(f"bad coefficient in term {body!r}")
            coeff *= Fraction(head)
        elif _COEFF_RE.match(body):
            pairs.append(((), coeff * Fraction(body)))
            continue
        if not _MONOMIAL_RE.match(mono):
            raise ParseError(f"bad monomial in term {body!r}")
        indices = [int(tok[1:]) for tok in mono.split("^")]
        if len(set(indices)) != len(indices):
            raise ParseError(f"repeated index in term {body!r}")
        inversions = sum(
            1 for a in range(len(indices)) for b in range(a + 1, len(indices))
            if indices[a] > indices[b]
        )
        if inversions % 2:
            coeff = -coeff
        pairs.append((tuple(sorted(indices)), coeff))
    try:
        return Multivector(n, pairs)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
