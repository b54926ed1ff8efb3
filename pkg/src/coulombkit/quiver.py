"""Quiver gauge theory data and its Kac-Moody shadows.

Translates (quiver, dimension vectors) into gauge-theory bookkeeping, slice
parameters (lam, mu), MV-cycle dimensions, strata enumerations, the fixed-point
shadow of the geometric Satake conjecture, cocharacter splittings, and the
Jordan-quiver symmetric-product Hilbert series.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct

from .cancel import CancellationToken, check
from .cartan import (
    GeneralizedCartanMatrix,
    KMWeight,
    central_element_as_root_sum,
    dominance_leq,
    in_positive_root_cone,
    langlands_dual,
    level,
    validate_and_symmetrize,
)
from .errors import DimensionError, DomainError, UnsupportedError
from .lattices import Coweight, pairing
from .multiplicities import weight_multiplicity, weight_support


@dataclass(frozen=True)
class Quiver:
    """Vertex count and ordered edge list (out, in); loops allowed but flagged."""

    vertices: int
    edges: tuple[tuple[int, int], ...]

    @staticmethod
    def of(vertices: int, edges) -> "Quiver":
        edges = tuple((int(a), int(b)) for a, b in edges)
        for a, b in edges:
            if not (0 <= a < vertices and 0 <= b < vertices):
                raise DimensionError(f"edge ({a},{b}) references a missing vertex")
        return Quiver(vertices, edges)

    @staticmethod
    def linear(n: int) -> "Quiver":
        """Type A_n orientation 0 -> 1 -> ... -> n-1."""
        return Quiver.of(n, [(i, i + 1) for i in range(n - 1)])

    @staticmethod
    def jordan() -> "Quiver":
        return Quiver.of(1, [(0, 0)])

    @property
    def loop_free(self) -> bool:
        return all(a != b for a, b in self.edges)

    def cartan_matrix(self) -> GeneralizedCartanMatrix:
        """Forget orientation; 2 on the diagonal minus edge counts elsewhere."""
        if not self.loop_free:
            raise UnsupportedError("quivers with loops have no Kac-Moody datum")
        n = self.vertices
        a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for s, t in self.edges:
            a[s][t] -= 1
            a[t][s] -= 1
        return validate_and_symmetrize(a)


@dataclass(frozen=True)
class DimVectors:
    v: tuple[int, ...]
    w: tuple[int, ...]

    @staticmethod
    def of(v, w) -> "DimVectors":
        return DimVectors(tuple(int(x) for x in v), tuple(int(x) for x in w))

    def check_against(self, q: Quiver) -> None:
        if len(self.v) != q.vertices or len(self.w) != q.vertices:
            raise DimensionError("dimension vectors do not match the vertex count")
        if any(x < 0 for x in self.v + self.w):
            raise DomainError("dimension vectors must be non-negative")


@dataclass(frozen=True)
class GaugeData:
    """Gauge group and matter catalogue for (Q, V, W)."""

    gauge_ranks: tuple[int, ...]
    summands: tuple[tuple[str, int, int], ...]  # (kind, source dim, target dim)
    dim_g: int
    dim_n: int


@dataclass(frozen=True)
class SliceParams:
    lam: KMWeight
    mu: KMWeight
    dims: DimVectors
    mu_dominant: bool


def gauge_data(q: Quiver, d: DimVectors) -> GaugeData:
    """dim G = sum (dim V_i)^2; N = edge Homs plus framing Homs."""
    d.check_against(q)
    summands = []
    dim_n = 0
    for s, t in q.edges:
        summands.append(("edge", d.v[s], d.v[t]))
        dim_n += d.v[s] * d.v[t]
    for i in range(q.vertices):
        summands.append(("framing", d.w[i], d.v[i]))
        dim_n += d.w[i] * d.v[i]
    return GaugeData(d.v, tuple(summands), sum(x * x for x in d.v), dim_n)


def slice_params(q: Quiver, d: DimVectors) -> SliceParams:
    """lam = sum w_i varpi_i, mu = lam - sum v_i alpha_i on the quiver's
    Kac-Moody datum (orientation forgotten)."""
    d.check_against(q)
    gcm = q.cartan_matrix()
    lam = KMWeight.of(d.w)
    mu = lam - gcm.root_combination(d.v)
    return SliceParams(lam, mu, d, gcm.is_dominant(mu))


def dims_from_weights(gcm: GeneralizedCartanMatrix, lam: KMWeight, mu: KMWeight) -> DimVectors:
    """Inverse of slice_params: w from the pairings of lam, v from lam - mu."""
    if not gcm.is_dominant(lam):
        raise DomainError("lam must be dominant")
    v = in_positive_root_cone(gcm, lam - mu)
    if v is None:
        raise DomainError("not a valid slice: lam - mu is outside the positive root cone")
    return DimVectors.of(v, lam.fund)


def mv_dimension(gcm: GeneralizedCartanMatrix, lam: KMWeight, mu: KMWeight) -> int:
    """Dimension sum v_i of the MV cycles for lam - mu = sum v_i alpha_i."""
    v = in_positive_root_cone(gcm, lam - mu)
    if v is None:
        raise DomainError("lam - mu is not a non-negative root combination")
    return sum(v)


def fixed_point_nonempty(gcm: GeneralizedCartanMatrix, lam: KMWeight, mu: KMWeight) -> bool:
    """Combinatorial shadow of the fixed-point conjecture: the fixed point
    exists iff the dual-side weight multiplicity V_mu(lam) is nonzero."""
    if not gcm.is_dominant(lam):
        raise DomainError("lam must be dominant")
    return weight_multiplicity(langlands_dual(gcm), lam, mu) > 0


def _dominant_interval(
    gcm: GeneralizedCartanMatrix, top: KMWeight, mu: KMWeight, token=None
) -> list[tuple[int, KMWeight]]:
    """Dominant kappa with top >= kappa >= mu, as (height of top-kappa, kappa)."""
    t = in_positive_root_cone(gcm, top - mu)
    if t is None:
        return []
    out = []
    for u in iproduct(*[range(x + 1) for x in t]):
        check(token)
        kappa = top - gcm.root_combination(u)
        if gcm.is_dominant(kappa):
            out.append((sum(u), kappa))
    out.sort(key=lambda p: (p[0], p[1].fund, p[1].delta))
    return out


def strata_finite(
    gcm: GeneralizedCartanMatrix,
    lam: KMWeight,
    mu: KMWeight,
    token: CancellationToken | None = None,
) -> list[KMWeight]:
    """All dominant kappa with lam >= kappa >= mu, sorted descending."""
    if gcm.tag != "finite":
        raise UnsupportedError("strata_finite requires finite type")
    if not gcm.is_dominant(lam):
        raise DomainError("lam must be dominant")
    return [kappa for _, kappa in _dominant_interval(gcm, lam, mu, token)]


def _partitions(n: int):
    """Partitions of n as descending tuples; the empty partition for n = 0."""
    if n == 0:
        yield ()
        return

    def rec(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    yield from rec(n, n)


def strata_affine(
    gcm: GeneralizedCartanMatrix,
    lam: KMWeight,
    mu: KMWeight,
    bound: int,
    token: CancellationToken | None = None,
) -> list[tuple[KMWeight, tuple[int, ...]]]:
    """Brute-force enumeration of the affine strata index set: pairs
    (kappa, partition) with lam - |partition| c >= kappa >= mu, where c is the
    canonical central element written through the dual Kac labels.

    The literal constraint is applied for every level >= 1; the level-1
    description is stated only up to analogy, so level-1 output follows the
    same constraint without further correction.
    """
    if gcm.tag != "affine":
        raise UnsupportedError("strata_affine requires affine type")
    if not gcm.is_dominant(lam):
        raise DomainError("lam must be dominant")
    if level(gcm, lam) < 1:
        raise DomainError("lam must have level >= 1")
    c = central_element_as_root_sum(gcm)
    out = []
    for size in range(bound + 1):
        top = lam - c.scaled(size)
        interval = _dominant_interval(gcm, top, mu, token)
        for part in _partitions(size):
            for _, kappa in interval:
                out.append((kappa, part))
    out.sort(key=lambda p: (sum(p[1]), p[1], p[0].fund, p[0].delta))
    return out


def cocharacter_split(weights, mu: Coweight) -> tuple[int, int, int]:
    """Counts of representation weights pairing negative / zero / positive
    against the cocharacter; dim N^mu_{<=0} = neg + zero."""
    neg = zero = pos = 0
    for rho in weights:
        p = pairing(mu, rho)
        if p < 0:
            neg += 1
        elif p == 0:
            zero += 1
        else:
            pos += 1
    return neg, zero, pos


def parabolic_codim(gl_ranks, mu_blocks) -> int:
    """dim G/P_mu for a product of GLs: GL root pairs (a, b), a < b inside a
    factor, separated by unequal cocharacter entries."""
    if len(gl_ranks) != len(mu_blocks):
        raise DimensionError("one cocharacter block per GL factor is required")
    total = 0
    for rank, block in zip(gl_ranks, mu_blocks):
        if len(block) != rank:
            raise DimensionError("cocharacter block length must equal the GL rank")
        total += sum(
            1 for a in range(rank) for b in range(a + 1, rank) if block[a] != block[b]
        )
    return total


def jordan_coulomb_hilbert(
    n: int, ell: int, max_deg, token: CancellationToken | None = None
) -> list[int]:
    """Graded dimensions of the n-th symmetric product of the surface
    xy = z^ell, with deg z = 1 and deg x = deg y = ell/2, in half-integer steps.

    Entry i is the dimension in degree i/2, counting size-n multisets of
    normal-form monomials x^a z^c and y^b z^c (b > 0).
    """
    if ell < 1:
        raise UnsupportedError("the grading degenerates for ell = 0")
    if n < 0:
        raise DomainError("n must be non-negative")
    max_deg = Fraction(max_deg)
    slots = int(2 * max_deg) + 1
    # basis monomial degrees doubled: x^a z^c -> a*ell + 2c, y^b z^c -> b*ell + 2c
    mono_degrees = []
    for a in range(0, 2 * int(max_deg) // ell + 2):
        for c in range(slots):
            d2 = a * ell + 2 * c
            if d2 < slots:
                mono_degrees.append(d2)
    for b in range(1, 2 * int(max_deg) // ell + 2):
        for c in range(slots):
            d2 = b * ell + 2 * c
            if d2 < slots:
                mono_degrees.append(d2)
    mono_degrees.sort()
    # multisets of exactly n monomials: bounded knapsack over degree counts
    # dp[j][t] = number of multisets of size j and doubled degree t
    dp = [[0] * slots for _ in range(n + 1)]
    dp[0][0] = 1
    for d2 in mono_degrees:
        check(token)
        # allow unbounded repetition of this monomial (multiset choose)
        for j in range(1, n + 1):
            for t in range(d2, slots):
                dp[j][t] += dp[j - 1][t - d2]
    return dp[n]
