"""Abelian Coulomb branch algebras on the monopole basis.

A theory is a torus rank together with the character vectors of the matter
representation.  Elements are finite sums f_lam(w) * r^lam over coweights lam;
the lam-component is the pi_1 grading of the term.  The classical product, the
quantization into difference operators, the Poisson bracket, the cohomological
grading, the Hilbert series and the birationality witness all live here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct
from math import comb

import sympy

from . import difference_ops as dops
from .cancel import CancellationToken, check
from .difference_ops import HBAR, DifferenceOperator, w_vars
from .errors import DimensionError, DomainError, LiftError
from .lattices import CharacterVector, Coweight, pairing


@dataclass(frozen=True)
class AbelianTheory:
    """Abelian gauge theory (T, N): torus rank and matter characters."""

    rank: int
    characters: tuple[CharacterVector, ...]
    names: tuple[str, ...] = ()

    @staticmethod
    def of(rank: int, characters, names=()) -> "AbelianTheory":
        chars = tuple(tuple(int(x) for x in c) for c in characters)
        if any(len(c) != rank for c in chars):
            raise DimensionError("character length does not match torus rank")
        return AbelianTheory(rank, chars, tuple(names))

    @staticmethod
    def a_type(ell: int) -> "AbelianTheory":
        """Rank-1 theory with ell weight-1 characters: the A_{ell-1} surface."""
        return AbelianTheory.of(1, [(1,)] * ell)

    def linear_form(self, rho: CharacterVector) -> sympy.Expr:
        ws = w_vars(self.rank)
        return sympy.Add(*[int(c) * w for c, w in zip(rho, ws)])


@dataclass(frozen=True)
class CoulombElement:
    """Finite sum of f_lam(w) * r^lam with exact rational coefficients."""

    rank: int
    terms: tuple[tuple[Coweight, sympy.Expr], ...]

    @staticmethod
    def from_terms(rank: int, terms) -> "CoulombElement":
        merged: dict[Coweight, sympy.Expr] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for lam, poly in items:
            lam = tuple(int(x) for x in lam)
            if len(lam) != rank:
                raise DimensionError("coweight length does not match theory rank")
            poly = sympy.expand(sympy.sympify(poly))
            if poly.has(HBAR):
                raise DomainError("classical elements may not involve hbar")
            merged[lam] = sympy.expand(merged.get(lam, 0) + poly)
        return CoulombElement(
            rank, tuple((lam, p) for lam, p in sorted(merged.items()) if p != 0)
        )

    @staticmethod
    def monopole(rank: int, lam, poly=1) -> "CoulombElement":
        """f(w) * r^lam."""
        return CoulombElement.from_terms(rank, {tuple(lam): poly})

    @staticmethod
    def polynomial(rank: int, poly) -> "CoulombElement":
        return CoulombElement.from_terms(rank, {(0,) * rank: poly})

    def __add__(self, other: "CoulombElement") -> "CoulombElement":
        self._check_rank(other)
        return CoulombElement.from_terms(self.rank, list(self.terms) + list(other.terms))

    def __sub__(self, other: "CoulombElement") -> "CoulombElement":
        self._check_rank(other)
        return self + other.scale(-1)

    def scale(self, c) -> "CoulombElement":
        return CoulombElement.from_terms(self.rank, [(l, c * p) for l, p in self.terms])

    def _check_rank(self, other: "CoulombElement") -> None:
        if self.rank != other.rank:
            raise DimensionError("elements live in different theories")

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for lam, poly in self.terms:
            r = "" if not any(lam) else f"*r^{list(lam)}"
            parts.append(f"({poly}){r}")
        return " + ".join(parts)


def classical_product(th: AbelianTheory, a: CoulombElement, b: CoulombElement) -> CoulombElement:
    """Bilinear extension of the monopole product rule

        r^lam * r^mu = prod_i <rho_i, w>^{d_i} r^{lam+mu},
        d_i = (|<rho_i,lam>| + |<rho_i,mu>| - |<rho_i,lam+mu>|) / 2.
    """
    if th.rank != a.rank or th.rank != b.rank:
        raise DimensionError("element rank does not match theory rank")
    acc = []
    for lam, f in a.terms:
        for mu, g in b.terms:
            key = tuple(x + y for x, y in zip(lam, mu))
            factor = sympy.Integer(1)
            for rho in th.characters:
                p, q = pairing(lam, rho), pairing(mu, rho)
                d2 = abs(p) + abs(q) - abs(p + q)
                assert d2 % 2 == 0
                if d2:
                    factor *= th.linear_form(rho) ** (d2 // 2)
            acc.append((key, sympy.expand(f * g * factor)))
    return CoulombElement.from_terms(th.rank, acc)


def _quantized_shift(th: AbelianTheory, lam: Coweight) -> DifferenceOperator:
    """u_lam: descending-factor dressing of e^lam by the positive pairings."""
    poly = sympy.Integer(1)
    for rho in th.characters:
        p = pairing(lam, rho)
        for j in range(p):
            poly *= th.linear_form(rho) - j * HBAR
    return DifferenceOperator.from_terms(th.rank, {tuple(lam): sympy.expand(poly)})


def quantize(th: AbelianTheory, a: CoulombElement) -> DifferenceOperator:
    """Linear map f(w) r^lam -> f(w) u_lam into the difference-operator algebra."""
    if th.rank != a.rank:
        raise DimensionError("element rank does not match theory rank")
    out = DifferenceOperator.zero(th.rank)
    for lam, f in a.terms:
        out = out + _quantized_shift(th, lam).scale(f)
    return out


def quantum_relation(th: AbelianTheory, lam) -> tuple[DifferenceOperator, DifferenceOperator]:
    """(u_lam u_{-lam}, u_{-lam} u_lam), both supported on e^0."""
    lam = tuple(int(x) for x in lam)
    neg = tuple(-x for x in lam)
    up, down = _quantized_shift(th, lam), _quantized_shift(th, neg)
    return dops.multiply(up, down), dops.multiply(down, up)


def _classical_dressing(th: AbelianTheory, lam: Coweight) -> sympy.Expr:
    """u_lam at hbar = 0: prod over positive pairings of <rho_i, w>^{<rho_i,lam>}."""
    poly = sympy.Integer(1)
    for rho in th.characters:
        p = pairing(lam, rho)
        if p > 0:
            poly *= th.linear_form(rho) ** p
    return sympy.expand(poly)


def element_from_operator(th: AbelianTheory, op: DifferenceOperator) -> CoulombElement:
    """Pull an hbar-free operator back along the hbar = 0 basis identification
    r^lam <-> u_lam|_{hbar=0}."""
    ws = w_vars(th.rank)
    out = []
    for lam, poly in op.terms:
        if poly.has(HBAR):
            raise LiftError("operator still involves hbar")
        dressing = _classical_dressing(th, lam)
        if dressing == 1:
            out.append((lam, poly))
            continue
        quo, rem = sympy.div(poly, dressing, *ws) if ws else (poly / dressing, 0)
        if sympy.expand(rem) != 0:
            raise LiftError(f"coefficient at {lam} is not divisible by the monopole dressing")
        out.append((lam, sympy.expand(quo)))
    return CoulombElement.from_terms(th.rank, out)


def poisson(th: AbelianTheory, a: CoulombElement, b: CoulombElement) -> CoulombElement:
    """Poisson bracket extracted from the quantization: commutator over hbar at
    hbar = 0, pulled back to the monopole basis."""
    bracket = dops.poisson_from_lifts(quantize(th, a), quantize(th, b))
    return element_from_operator(th, bracket)


def _degree_of_coweight(th: AbelianTheory, lam: Coweight) -> Fraction:
    return Fraction(sum(abs(pairing(lam, rho)) for rho in th.characters), 2)


def grading_degree(th: AbelianTheory, a: CoulombElement) -> Fraction:
    """Cohomological degree of a monomial term: deg(w^m r^lam) = m + (1/2) sum |<rho_i,lam>|."""
    if len(a.terms) != 1:
        raise DomainError("grading degree is defined for single monomial terms")
    lam, poly = a.terms[0]
    p = sympy.Poly(poly, *w_vars(th.rank)) if th.rank else None
    if th.rank and len(p.terms()) != 1:
        raise DomainError("grading degree is defined for single monomial terms")
    mono_deg = sum(p.terms()[0][0]) if th.rank else 0
    return Fraction(mono_deg) + _degree_of_coweight(th, lam)


def _coweights_up_to_degree(th: AbelianTheory, max_deg: Fraction, token=None):
    """All coweights with degree <= max_deg; requires a proper degree map."""
    k = th.rank
    if k == 0:
        return [()]
    mat = sympy.Matrix([list(rho) for rho in th.characters]) if th.characters else sympy.zeros(0, k)
    if mat.rank() < k:
        raise DomainError("unbounded degree-0 piece: characters do not span the dual lattice")
    # pick k independent characters M; |lam|_inf <= |M^-1|_inf * |M lam|_1
    # and |M lam|_1 <= 2 * deg(lam), which bounds the search box exactly
    rows = []
    for i in range(len(th.characters)):
        if sympy.Matrix([list(th.characters[j]) for j in rows + [i]]).rank() == len(rows) + 1:
            rows.append(i)
        if len(rows) == k:
            break
    minv = sympy.Matrix([list(th.characters[i]) for i in rows]).inv()
    opnorm = max(sum(abs(minv[i, j]) for j in range(k)) for i in range(k))
    bound = opnorm * 2 * sympy.Rational(max_deg.numerator, max_deg.denominator)
    radius = int(sympy.floor(bound))
    out = []
    for lam in iproduct(range(-radius, radius + 1), repeat=k):
        check(token)
        if _degree_of_coweight(th, lam) <= max_deg:
            out.append(lam)
    return sorted(out)


def hilbert_series(
    th: AbelianTheory, max_deg, token: CancellationToken | None = None
) -> list[int]:
    """Graded dimensions of the Coulomb branch ring in half-integer steps.

    Entry i of the result is the dimension in degree i/2.  Each coweight lam
    contributes its dressing polynomials in the w's on top of the base degree
    (1/2) sum |<rho_i, lam>|.
    """
    max_deg = Fraction(max_deg)
    if max_deg < 0:
        raise DomainError("max_deg must be non-negative")
    slots = int(2 * max_deg) + 1
    dims = [0] * slots
    k = th.rank
    for lam in _coweights_up_to_degree(th, max_deg, token):
        base = _degree_of_coweight(th, lam)
        b2 = int(2 * base)
        for m in range(0, (slots - b2 - 1) // 2 + 1):
            dims[b2 + 2 * m] += comb(m + k - 1, k - 1) if k else (1 if m == 0 else 0)
    return dims


def birationality_witness(th: AbelianTheory, lam) -> sympy.Expr:
    """r^lam * r^{-lam} = prod_i <rho_i, w>^{|<rho_i, lam>|}, a nonzero
    polynomial: every monopole class is invertible after inverting the w's."""
    lam = tuple(int(x) for x in lam)
    poly = sympy.Integer(1)
    for rho in th.characters:
        p = abs(pairing(lam, rho))
        if p:
            poly *= th.linear_form(rho) ** p
    return sympy.expand(poly)
