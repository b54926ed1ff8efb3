"""Higgs-side Hamiltonian reduction for torus actions, by exact invariant theory.

The reducing torus acts on hypermultiplet pairs (x_i, y_i) through an integer
charge matrix; the moment ideal is generated by the weighted sums of x_i y_i,
and graded dimensions of the invariant quotient are computed degree by degree
with exact integer linear algebra.  Both x_i and y_i carry degree 1/2 so the
moment generators are homogeneous of degree 1, matching the Coulomb-side
normalization.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

import sympy

from . import monopole
from .cancel import CancellationToken, check
from .errors import DimensionError
from .lattices import IntMatrix, dual_sequence


@dataclass(frozen=True)
class HiggsTheory:
    """n hypermultiplet pairs with an n x m integer charge matrix for the
    reducing torus; y_i carries the negated weight of x_i."""

    n: int
    charges: tuple[tuple[int, ...], ...]  # row i = weight of x_i

    @staticmethod
    def of(charges) -> "HiggsTheory":
        rows = tuple(tuple(int(x) for x in r) for r in charges)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise DimensionError("ragged charge matrix")
        th = HiggsTheory(len(rows), rows)
        if rows and rows[0]:
            if IntMatrix(rows).rank() < len(rows[0]):
                raise DimensionError("charge matrix columns must be linearly independent")
        return th

    @property
    def m(self) -> int:
        return len(self.charges[0]) if self.charges and self.charges[0] else 0

    def variables(self):
        xs = sympy.symbols(f"x1:{self.n + 1}") if self.n else ()
        ys = sympy.symbols(f"y1:{self.n + 1}") if self.n else ()
        return xs, ys


GradedDimensionTable = dict[Fraction, int]


def moment_ideal_generators(th: HiggsTheory) -> list[sympy.Expr]:
    """One generator per torus factor: mu_j = sum_i B_ij x_i y_i."""
    xs, ys = th.variables()
    gens = []
    for j in range(th.m):
        gens.append(sympy.Add(*[th.charges[i][j] * xs[i] * ys[i] for i in range(th.n)]))
    return gens


def _monomials_of_degree(n2: int, t: int):
    """Exponent vectors over 2n variables with total degree t."""
    if t == 0:
        yield (0,) * n2
        return
    for combo in combinations_with_replacement(range(n2), t):
        e = [0] * n2
        for i in combo:
            e[i] += 1
        yield tuple(e)


def _weight(th: HiggsTheory, expo) -> tuple[int, ...]:
    n = th.n
    return tuple(
        sum((expo[i] - expo[n + i]) * th.charges[i][j] for i in range(n))
        for j in range(th.m)
    )


def invariant_hilbert(
    th: HiggsTheory, max_deg, token: CancellationToken | None = None
) -> GradedDimensionTable:
    """Graded dimension of the torus invariants of the moment-ideal quotient.

    Works per degree: the weight-zero monomial basis modulo the weight-zero
    slice of the degree-graded ideal piece, with exact integer rank computation.
    Degrees step by 1/2 (deg x_i = deg y_i = 1/2).
    """
    max_deg = Fraction(max_deg)
    n2 = 2 * th.n
    zero_w = (0,) * th.m
    table: GradedDimensionTable = {}
    for t in range(0, int(2 * max_deg) + 1):
        check(token)
        deg = Fraction(t, 2)
        basis = [e for e in _monomials_of_degree(n2, t) if _weight(th, e) == zero_w]
        index = {e: i for i, e in enumerate(basis)}
        if not basis:
            table[deg] = 0
            continue
        rows = []
        if t >= 2 and th.m:
            lower = [e for e in _monomials_of_degree(n2, t - 2) if _weight(th, e) == zero_w]
            for e in lower:
                check(token)
                for j in range(th.m):
                    # mu_j * x^e expressed in the weight-zero basis of degree t
                    row = [0] * len(basis)
                    for i in range(th.n):
                        coeff = th.charges[i][j]
                        if coeff == 0:
                            continue
                        lifted = list(e)
                        lifted[i] += 1
                        lifted[th.n + i] += 1
                        row[index[tuple(lifted)]] += coeff
                    if any(row):
                        rows.append(row)
        rank = sympy.Matrix(rows).rank() if rows else 0
        table[deg] = len(basis) - rank
    return table


@dataclass(frozen=True)
class ComparisonReport:
    coulomb: GradedDimensionTable
    higgs: GradedDimensionTable
    max_deg: Fraction
    verdict: bool


def coulomb_higgs_compare(
    a: IntMatrix, max_deg, token: CancellationToken | None = None
) -> ComparisonReport:
    """Toric hyperkaehler duality check at the level of graded dimensions.

    The Coulomb side is the abelian theory whose characters are the rows of
    the cocharacter inclusion ``a``; the Higgs side reduces C^n + (C^n)* by
    the dual torus, whose charges are ``dual_sequence(a)``.
    """
    max_deg = Fraction(max_deg)
    coulomb_th = monopole.AbelianTheory.of(a.ncols, a.entries)
    dims = monopole.hilbert_series(coulomb_th, max_deg, token)
    coulomb_table = {Fraction(i, 2): d for i, d in enumerate(dims)}
    b = dual_sequence(a)
    higgs_th = HiggsTheory.of(b.entries)
    higgs_table = invariant_hilbert(higgs_th, max_deg, token)
    verdict = all(
        coulomb_table.get(deg, 0) == higgs_table.get(deg, 0)
        for deg in set(coulomb_table) | set(higgs_table)
    )
    return ComparisonReport(coulomb_table, higgs_table, max_deg, verdict)
