"""Degree-2 harmonic embedding of point sets, certified at Gram level.

A point x on S^d maps to the function y -> g_{2,d}((x,y)), a unit vector
G_x in the d(d+3)/2-dimensional space of degree-2 spherical harmonics with
<G_x, G_y> = g_{2,d}((x,y)).  Everything here operates on inner products:
the embedded set G_X union -G_X is handled as a spectrum, its Gram matrix
can be realized exactly, and its 3-design property is certified by an
exact moment identity.  Float coordinates are export-only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, sqrt

import numpy as np

from .enumeration import NotAntipodalError, VectorSet, exact_norms
from .gegenbauer import gegenbauer
from .linalg import GramMatrix, ldlt, psd_rank
from .spectrum import PairSpectrum, SpectrumError


class EmbeddingError(ValueError):
    pass


def dim_harm(k: int, d: int) -> int:
    """Dimension of the space of degree-k harmonic polynomials on S^d."""
    if k < 0 or d < 1:
        raise ValueError("need k >= 0 and d >= 1")
    if k == 0:
        return 1
    val = Fraction(2 * k + d - 1, k + d - 1) * comb(d + k - 1, k)
    assert val.denominator == 1
    return int(val)


@dataclass(frozen=True)
class EmbeddedSpectrum:
    """Spectrum of G_X' union -G_X' viewed as a code on S^(D-1)."""

    source_d: int
    spectrum: PairSpectrum

    def __post_init__(self):
        if not self.spectrum.antipodal:
            raise EmbeddingError("embedded spectrum must be antipodal")
        if self.spectrum.d != self.target_D - 1:
            raise EmbeddingError("spectrum sphere dimension != D - 1")

    @property
    def target_D(self) -> int:
        return dim_harm(2, self.source_d)

    @property
    def size(self) -> int:
        return self.spectrum.size


def embed(spec_halved: PairSpectrum) -> EmbeddedSpectrum:
    """Push a halved-set spectrum through the degree-2 kernel and mirror.

    Each ordered source pair with product s yields the four sign
    combinations (+-G_x, +-G_y), i.e. counts 2c at +g(s) and 2c at -g(s).
    Requires an antipodal-free input: G_(-x) = G_x, so embedding a full
    antipodal set would duplicate every point.
    """
    if spec_halved.antipodal:
        raise NotAntipodalError(
            "input spectrum is antipodal; halve the set first")
    d = spec_halved.d
    g = gegenbauer(2, d)
    g1 = g.at_one()
    out: dict[Fraction, int] = {}
    for s, c in spec_halved.entries:
        val = g(s) / g1
        out[val] = out.get(val, 0) + 2 * c
        out[-val] = out.get(-val, 0) + 2 * c
    emb = PairSpectrum(d=dim_harm(2, d) - 1, size=2 * spec_halved.size,
                       antipodal=True, entries=tuple(out.items()))
    return EmbeddedSpectrum(source_d=d, spectrum=emb)


def theorem_check(emb: EmbeddedSpectrum) -> tuple[bool, Fraction, Fraction]:
    """Exact quadratic-moment identity certifying the embedded 3-design.

    lhs is the mean squared embedded inner product, rhs = 2/(d(d+3)); the
    set is a 3-design iff they agree, which coincides with the antipodal
    3-design criterion on S^(D-1) since 1/D = 2/(d(d+3)).
    """
    d = emb.source_d
    rhs = Fraction(2, d * (d + 3))
    n2 = emb.size * emb.size
    lhs = sum((c * s * s for s, c in emb.spectrum.entries), Fraction(0)) / n2
    return lhs == rhs, lhs, rhs


def iterate_embedding(emb: EmbeddedSpectrum) -> EmbeddedSpectrum:
    """Embed an embedded code again (no guarantee beyond theorem_check).

    The re-embedding is halving-invariant because the kernel is even, so
    a synthetic halved spectrum with the correct merged counts suffices.
    """
    full = emb.spectrum.counts()
    half: dict[Fraction, int] = {}
    for s, c in full.items():
        if s > 0:
            if c % 2:
                raise EmbeddingError("spectrum does not halve evenly")
            half[s] = c // 2
        elif s == 0:
            if c % 4:
                raise EmbeddingError("spectrum does not halve evenly")
            half[s] = c // 4
    pseudo = PairSpectrum(d=emb.spectrum.d, size=emb.size // 2,
                          antipodal=False, entries=tuple(half.items()))
    return embed(pseudo)


@dataclass(frozen=True)
class EmbeddedGram:
    """Exact Gram matrix of G_X' union -G_X' (diagonal 1, symmetric)."""

    source_d: int
    gram: GramMatrix

    def __post_init__(self):
        for i in range(self.gram.n):
            if self.gram[i, i] != 1:
                raise EmbeddingError("embedded Gram diagonal entry != 1")

    @property
    def m(self) -> int:
        return self.gram.n

    @property
    def target_D(self) -> int:
        return dim_harm(2, self.source_d)

    def rank_certificate(self) -> tuple[bool, int]:
        """(is_psd, rank), proving the code lies on S^(target_D - 1)."""
        is_psd, rank = psd_rank(self.gram)
        if rank > self.target_D:
            raise EmbeddingError(
                f"embedded Gram rank {rank} exceeds dim Harm = {self.target_D}")
        return is_psd, rank


MATRIX_CAP = 512


def _source_products(x_halved: VectorSet) -> list[list[Fraction]]:
    scale, gi = x_halved.gram.integer_entries()
    m = int(x_halved.min_norm * scale)
    v = x_halved.coords
    gmax = max(abs(e) for row in gi for e in row)
    vmax = int(np.abs(v).max(initial=0))
    n = v.shape[1]
    if n * n * gmax * vmax * vmax < 2**62:
        g = np.array(gi, dtype=np.int64)
        rows = (v @ g @ v.T).tolist()
    else:
        av = v.astype(object)
        rows = (av @ np.array(gi, dtype=object) @ av.T).tolist()
    return [[Fraction(int(p), m) for p in row] for row in rows]


def embedded_gram(x_halved: VectorSet, cap: int = MATRIX_CAP) -> EmbeddedGram:
    """Full exact Gram matrix of the mirrored embedded set.

    Row layout: the |X'| embedded points followed by their negatives.
    Sets larger than cap must use the spectrum-only pipeline (embed +
    theorem_check), which needs no m x m matrix.
    """
    if x_halved.antipodal:
        raise NotAntipodalError(
            "input set is antipodal; halve the set first")
    npts = x_halved.count
    if npts > cap:
        raise EmbeddingError(
            f"{npts} points exceed the matrix cap {cap}; use the "
            f"spectrum-only embedding (embed/theorem_check) instead")
    d = x_halved.sphere_dim
    g = gegenbauer(2, d)
    g1 = g.at_one()
    cache: dict[Fraction, Fraction] = {}

    def gval(s: Fraction) -> Fraction:
        if s not in cache:
            cache[s] = g(s) / g1
        return cache[s]

    prods = _source_products(x_halved)
    a = [[gval(s) for s in row] for row in prods]
    top = [row + [-e for e in row] for row in a]
    bottom = [[-e for e in row] + list(row) for row in a]
    return EmbeddedGram(source_d=d, gram=GramMatrix.from_rows(top + bottom))


def realize_coordinates(x_halved: VectorSet, precision: int = 12,
                        cap: int = MATRIX_CAP) -> list[tuple[float, ...]]:
    """Unit vectors in R^D reproducing the embedded Gram to 10^-precision.

    Exactness lives in the Gram matrix; this is a float export built from
    the exact LDL^T rank factorization, verified against the exact products
    before returning.
    """
    eg = embedded_gram(x_halved, cap=cap)
    lmat, diag = ldlt(eg.gram)
    dim = eg.target_D
    cols = [j for j, dj in enumerate(diag) if dj != 0]
    if len(cols) > dim:
        raise EmbeddingError("rank factorization wider than dim Harm")
    roots = [sqrt(diag[j]) for j in cols]
    pts = []
    for i in range(eg.m):
        row = [float(lmat[i][j]) * r for j, r in zip(cols, roots)]
        row += [0.0] * (dim - len(row))
        pts.append(tuple(row))
    arr = np.array(pts)
    got = arr @ arr.T
    want = np.array([[float(eg.gram[i, j]) for j in range(eg.m)]
                     for i in range(eg.m)])
    err = float(np.abs(got - want).max())
    if err > 10.0 ** (-precision):
        raise EmbeddingError(
            f"float realization error {err:.3e} exceeds 1e-{precision}; "
            f"lower the precision requirement")
    return pts
