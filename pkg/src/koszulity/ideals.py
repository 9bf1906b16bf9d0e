"""Graded ideals of the algebra, stored extensionally degree by degree.

A GradedIdeal keeps one RowSpace per degree 0..D.  Proper ideals have a
zero degree-0 piece; the unit ideal (which colon computation can produce)
has every piece full, including degree 0.

Two independent routes build ideals generated in degree one:

- ideal_from_degree_one iterates multiplication by the generators;
- monomial_ideal_basis, available when the generators are a subset S of
  the vertex generators, spans each degree by the basis monomials whose
  support meets S.

Their agreement on common inputs is a checked invariant of the package,
not an assumption: keep both routes intact.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import AlgebraContext, Element, from_coeffs, unit
from .errors import InputError
from .gfp import RowSpace, full_space, kernel, rref, zero_space


@dataclass(frozen=True)
class GradedIdeal:
    ctx: AlgebraContext
    pieces: tuple  # RowSpace per degree 0..D

    def piece(self, n: int) -> RowSpace:
        return self.pieces[n]

    @property
    def is_unit(self) -> bool:
        return self.pieces[0].rank == 1


def zero_ideal(ctx: AlgebraContext) -> GradedIdeal:
    return GradedIdeal(
        ctx, tuple(zero_space(ctx.p, ctx.dim(n)) for n in range(ctx.D + 1))
    )


def unit_ideal(ctx: AlgebraContext) -> GradedIdeal:
    return GradedIdeal(
        ctx, tuple(full_space(ctx.p, ctx.dim(n)) for n in range(ctx.D + 1))
    )


def _lmul_vector(ctx: AlgebraContext, gen: int, n: int, vec) -> list:
    """Coefficient vector of a_gen times the degree-n vector vec."""
    p = ctx.p
    out = [0] * ctx.dim(n + 1)
    prod = ctx.basis_product
    for j, c in enumerate(vec):
        if c:
            hit = prod(1, gen, n, j)
            if hit is not None:
                sign, k = hit
                out[k] = (out[k] + sign * c) % p
    return out


def ideal_from_degree_one(ctx: AlgebraContext, u: RowSpace) -> GradedIdeal:
    """The ideal generated by the degree-one subspace u: piece n+1 is
    spanned by the generator multiples of piece n."""
    if u.p != ctx.p or u.ambient_dim != ctx.dim(1):
        raise InputError("degree-one subspace does not match the algebra")
    cached = ctx._ideal_cache.get(u.rows)
    if cached is not None:
        return cached
    d = ctx.dim(1)
    pieces = [zero_space(ctx.p, 1), u]
    for n in range(1, ctx.D):
        rows = []
        for vec in pieces[n].rows:
            for gen in range(d):
                rows.append(_lmul_vector(ctx, gen, n, vec))
        pieces.append(rref(rows, ctx.p, ctx.dim(n + 1)))
    out = GradedIdeal(ctx, tuple(pieces))
    ctx._ideal_cache[u.rows] = out
    return out


def monomial_ideal_basis(ctx: AlgebraContext, s) -> GradedIdeal:
    """Closed form for the ideal generated by the vertex generators in s:
    each degree is spanned by the basis monomials whose support meets s."""
    support = frozenset(s)
    for v in support:
        if not 0 <= v < ctx.dim(1):
            raise InputError(f"generator index {v} out of range")
    cached = ctx._monomial_cache.get(support)
    if cached is not None:
        return cached
    pieces = [zero_space(ctx.p, 1)]
    for n in range(1, ctx.D + 1):
        dim = ctx.dim(n)
        rows = []
        for idx, mono in enumerate(ctx.basis(n)):
            if support.intersection(mono):
                rows.append(tuple(1 if j == idx else 0 for j in range(dim)))
        pieces.append(RowSpace(ctx.p, dim, tuple(rows)))
    out = GradedIdeal(ctx, tuple(pieces))
    ctx._monomial_cache[support] = out
    return out


def colon_ideal(ctx: AlgebraContext, ideal: GradedIdeal, b: Element) -> GradedIdeal:
    """The colon ideal ideal : (b) for a degree-one divisor b.

    Degree-n piece: kernel of x -> x*b into A_{n+1}/I_{n+1}; the quotient is
    realized by eliminating against the RREF of I_{n+1} and keeping the
    non-pivot coordinates.  A single condition suffices because the algebra
    is graded-commutative and I is an ideal.  When b lies in I_1 the colon
    is the unit ideal.
    """
    if b.ctx is not ctx or ideal.ctx is not ctx:
        raise InputError("ideal, divisor, and context must match")
    if b.degree != 1:
        raise InputError(f"divisor must have degree 1, got {b.degree}")
    if ideal.piece(1).member(b.coeffs):
        return unit_ideal(ctx)
    p = ctx.p
    bsupp = [(g, c) for g, c in enumerate(b.coeffs) if c]
    pieces = [zero_space(p, 1)]
    for n in range(1, ctx.D + 1):
        dim_n = ctx.dim(n)
        if n == ctx.D:
            pieces.append(full_space(p, dim_n))
            continue
        target = ideal.piece(n + 1)
        keep = [c for c in range(ctx.dim(n + 1)) if c not in set(target.pivots)]
        prod = ctx.basis_product
        matrix = []
        for m_idx in range(dim_n):
            img = [0] * ctx.dim(n + 1)
            for gen, c in bsupp:
                hit = prod(1, gen, n, m_idx)
                if hit is not None:
                    sign, k = hit
                    img[k] = (img[k] + sign * c) % p
            red = target.reduce(img)
            matrix.append([red[c] for c in keep])
        pieces.append(kernel(matrix, p, dim_n, len(keep)))
    return GradedIdeal(ctx, tuple(pieces))


def annihilator(ctx: AlgebraContext, b: Element) -> GradedIdeal:
    return colon_ideal(ctx, zero_ideal(ctx), b)


def element_in_ideal(x: Element, ideal: GradedIdeal) -> bool:
    if x.ctx is not ideal.ctx:
        raise InputError("element and ideal from different contexts")
    if x.degree > ideal.ctx.D:
        return True  # only the zero element lives above the clique number
    return ideal.piece(x.degree).member(x.coeffs)


def is_one_generated(ctx: AlgebraContext, ideal: GradedIdeal):
    """Whether ideal equals the ideal generated by its degree-one piece.

    Returns (True, None, None), or (False, n, witness) with n the least
    degree where the pieces differ and witness a basis vector of that piece
    lying outside the generated ideal.
    """
    if ideal.ctx is not ctx:
        raise InputError("ideal from a different context")
    if ideal.piece(0).rank:
        return False, 0, unit(ctx)
    gen = ideal_from_degree_one(ctx, ideal.piece(1))
    for n in range(2, ctx.D + 1):
        got, want = gen.piece(n), ideal.piece(n)
        if got != want:
            for row in want.rows:
                if not got.member(row):
                    return False, n, from_coeffs(ctx, n, row)
            # generated piece escaping the ideal would violate closure
            raise RuntimeError("generated ideal not contained in its source")
    return True, None, None
