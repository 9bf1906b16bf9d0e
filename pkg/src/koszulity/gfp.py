"""Exact dense linear algebra over prime fields F_p (small p).

Conventions used throughout the package:

- a vector is a tuple of residues in [0, p);
- a matrix is a sequence of equal-length rows (vectors);
- a subspace is a RowSpace: a canonical reduced-row-echelon basis, so that
  row-equivalent inputs yield identical objects and span equality is ``==``.

Every value is immutable after construction and safe to share between
threads.  Enumeration helpers are generators with a documented
deterministic order and refuse to start when p**d exceeds 2**20.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .errors import InputError, ResourceLimitError

MAX_PRIME = 97
ENUMERATION_GUARD = 2**20


class Prime(int):
    """A validated prime field characteristic, 2 <= p <= 97."""

    def __new__(cls, p: int) -> "Prime":
        p = int(p)
        if p < 2 or p > MAX_PRIME:
            raise InputError(
                f"field characteristic must be a prime in [2, {MAX_PRIME}], got {p}"
            )
        d = 2
        while d * d <= p:
            if p % d == 0:
                raise InputError(f"{p} is not prime ({d} divides it)")
            d += 1
        return super().__new__(cls, p)


@dataclass(frozen=True)
class RowSpace:
    """A subspace of F_p^ambient_dim held as a reduced-row-echelon basis.

    Invariants: rows are nonzero with leading coefficient 1, pivot columns
    strictly increase, and every pivot column is zero in all other rows.
    Construct through rref() (or trusted helpers that emit echelon rows
    directly); two RowSpace values are equal iff they span the same space.
    """

    p: int
    ambient_dim: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.rows)

    @cached_property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(i for i, x in enumerate(r) if x) for r in self.rows)

    def reduce(self, vec: Sequence[int]) -> tuple[int, ...]:
        """Residual of vec after eliminating against this basis (mod p)."""
        p = self.p
        if len(vec) != self.ambient_dim:
            raise InputError(
                f"vector length {len(vec)} != ambient dimension {self.ambient_dim}"
            )
        v = [x % p for x in vec]
        for row, c in zip(self.rows, self.pivots):
            f = v[c]
            if f:
                v = [(a - f * b) % p for a, b in zip(v, row)]
        return tuple(v)

    def member(self, vec: Sequence[int]) -> bool:
        return not any(self.reduce(vec))

    def contains(self, other: "RowSpace") -> bool:
        _check_same_space(self, other)
        return all(self.member(r) for r in other.rows)


def _check_same_space(a: RowSpace, b: RowSpace) -> None:
    if a.p != b.p or a.ambient_dim != b.ambient_dim:
        raise InputError(
            f"subspaces live in different spaces: F_{a.p}^{a.ambient_dim} "
            f"vs F_{b.p}^{b.ambient_dim}"
        )


def _eliminate(mat: list[list[int]], ambient_dim: int, p: int) -> list[tuple[int, ...]]:
    # In-place Gauss-Jordan to canonical RREF; returns the nonzero rows.
    npiv = 0
    nrows = len(mat)
    for col in range(ambient_dim):
        piv = None
        for r in range(npiv, nrows):
            if mat[r][col]:
                piv = r
                break
        if piv is None:
            continue
        mat[npiv], mat[piv] = mat[piv], mat[npiv]
        row = mat[npiv]
        lead = row[col]
        if lead != 1:
            inv = pow(lead, p - 2, p)
            mat[npiv] = row = [(x * inv) % p for x in row]
        for r in range(nrows):
            if r != npiv:
                f = mat[r][col]
                if f:
                    other = mat[r]
                    mat[r] = [(a - f * b) % p for a, b in zip(other, row)]
        npiv += 1
        if npiv == nrows:
            break
    return [tuple(r) for r in mat[:npiv]]


def rref(matrix: Sequence[Sequence[int]], p: int, ambient_dim: int | None = None) -> RowSpace:
    """Row space of matrix as a canonical RREF basis.

    ambient_dim is required when matrix is empty and must match the row
    length otherwise.  Entries are reduced mod p; duplicate or dependent
    rows are harmless.
    """
    rows = [list(r) for r in matrix]
    if rows:
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise InputError("matrix rows have unequal lengths")
        if ambient_dim is not None and ambient_dim != width:
            raise InputError(
                f"ambient dimension {ambient_dim} != row length {width}"
            )
        ambient_dim = width
    elif ambient_dim is None:
        raise InputError("ambient dimension required for an empty matrix")
    mat = [[x % p for x in r] for r in rows]
    return RowSpace(p, ambient_dim, tuple(_eliminate(mat, ambient_dim, p)))


def zero_space(p: int, ambient_dim: int) -> RowSpace:
    return RowSpace(p, ambient_dim, ())


def full_space(p: int, ambient_dim: int) -> RowSpace:
    rows = tuple(
        tuple(1 if j == i else 0 for j in range(ambient_dim))
        for i in range(ambient_dim)
    )
    return RowSpace(p, ambient_dim, rows)


def kernel(
    matrix: Sequence[Sequence[int]],
    p: int,
    domain_dim: int | None = None,
    codomain_dim: int | None = None,
) -> RowSpace:
    """Null space of the map F_p^a -> F_p^b given by x -> x . matrix.

    matrix has a rows (the images of the standard basis) of length b.
    Satisfies rank(matrix) + rank(kernel) = a.
    """
    a = len(matrix)
    if domain_dim is not None and domain_dim != a:
        raise InputError(f"domain dimension {domain_dim} != row count {a}")
    if a:
        b = len(matrix[0])
        if any(len(r) != b for r in matrix):
            raise InputError("matrix rows have unequal lengths")
        if codomain_dim is not None and codomain_dim != b:
            raise InputError(f"codomain dimension {codomain_dim} != row length {b}")
    else:
        if codomain_dim is None:
            raise InputError("codomain dimension required for an empty matrix")
        b = codomain_dim
    # Null space of x -> x.M is computed from the RREF of the transpose.
    cols = [[matrix[i][j] % p for i in range(a)] for j in range(b)]
    reduced = _eliminate(cols, a, p)
    pivots = [next(i for i, x in enumerate(r) if x) for r in reduced]
    pivot_set = set(pivots)
    basis = []
    for f in range(a):
        if f in pivot_set:
            continue
        v = [0] * a
        v[f] = 1
        for row, c in zip(reduced, pivots):
            v[c] = (-row[f]) % p
        basis.append(v)
    return RowSpace(p, a, tuple(_eliminate(basis, a, p)))


def subspace_sum(s: RowSpace, t: RowSpace) -> RowSpace:
    _check_same_space(s, t)
    return rref(s.rows + t.rows, s.p, s.ambient_dim)


def member(vec: Sequence[int], s: RowSpace) -> bool:
    return s.member(vec)


def contains(s: RowSpace, t: RowSpace) -> bool:
    return s.contains(t)


def _guard(p: int, d: int) -> None:
    if p**d > ENUMERATION_GUARD:
        raise ResourceLimitError(
            f"enumeration over F_{p}^{d} refused: p**d = {p**d} exceeds 2**20"
        )


def enumerate_subspaces(p: int, d: int) -> Iterator[RowSpace]:
    """Every subspace of F_p^d exactly once.

    Order: rank ascending, then pivot-column pattern lexicographic, then the
    free entries filled row-major with values 0..p-1.  The total count is the
    Galois number (sum of Gaussian binomial coefficients).
    """
    _guard(p, d)
    for r in range(d + 1):
        for pivots in itertools.combinations(range(d), r):
            pivot_set = set(pivots)
            free = [
                (i, j)
                for i in range(r)
                for j in range(pivots[i] + 1, d)
                if j not in pivot_set
            ]
            for values in itertools.product(range(p), repeat=len(free)):
                rows = [[0] * d for _ in range(r)]
                for i, c in enumerate(pivots):
                    rows[i][c] = 1
                for (i, j), v in zip(free, values):
                    rows[i][j] = v
                yield RowSpace(p, d, tuple(tuple(row) for row in rows))


def enumerate_vectors_mod_scalar(p: int, d: int) -> Iterator[tuple[int, ...]]:
    """One representative per nonzero scalar class of F_p^d.

    Representatives have first nonzero coordinate 1 and are emitted in
    lexicographic order of that leading position, then of the tail; the
    count is (p**d - 1) // (p - 1).
    """
    _guard(p, d)
    for lead in range(d):
        for tail in itertools.product(range(p), repeat=d - lead - 1):
            yield (0,) * lead + (1,) + tail


def enumerate_coset_reps_mod_scalar(s: RowSpace) -> Iterator[tuple[int, ...]]:
    """Representatives of the nonzero classes of F_p^d / s, modulo scalars.

    Each representative is the canonical reduced vector of its class:
    supported on the non-pivot columns of s, with first nonzero coordinate 1
    (in non-pivot column order).  Count: (p**(d-rank) - 1) // (p - 1).
    """
    p, d = s.p, s.ambient_dim
    _guard(p, d)
    free_cols = [c for c in range(d) if c not in set(s.pivots)]
    for w in enumerate_vectors_mod_scalar(p, len(free_cols)):
        v = [0] * d
        for c, x in zip(free_cols, w):
            v[c] = x
        yield tuple(v)
