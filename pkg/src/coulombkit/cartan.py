"""Symmetrizable generalized Cartan matrices and Kac-Moody weights.

Weights are stored in fundamental-weight coordinates plus an explicit delta
coordinate.  The delta coordinate is zero and ignored outside affine type;
in affine type it pairs to zero with every simple coroot, and the simple
roots acquire delta components through the convention fixed in
``_delta_splitter`` (an integer covector s with s . a = 1 against the
primitive null vector a, solved greedily in index order; for untwisted
affine types this gives the usual alpha_0 = delta - theta).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from .errors import CartanError, DimensionError, DomainError, SymmetrizabilityError, UnsupportedError
from .lattices import IntMatrix, integer_kernel


@dataclass(frozen=True)
class KMWeight:
    """Integral weight: sum of fund[i] * varpi_i plus delta * (null root)."""

    fund: tuple[int, ...]
    delta: int = 0

    @staticmethod
    def of(coords, delta: int = 0) -> "KMWeight":
        return KMWeight(tuple(int(c) for c in coords), int(delta))

    def __add__(self, other: "KMWeight") -> "KMWeight":
        self._match(other)
        return KMWeight(tuple(a + b for a, b in zip(self.fund, other.fund)), self.delta + other.delta)

    def __sub__(self, other: "KMWeight") -> "KMWeight":
        self._match(other)
        return KMWeight(tuple(a - b for a, b in zip(self.fund, other.fund)), self.delta - other.delta)

    def __neg__(self) -> "KMWeight":
        return KMWeight(tuple(-a for a in self.fund), -self.delta)

    def scaled(self, k: int) -> "KMWeight":
        return KMWeight(tuple(k * a for a in self.fund), k * self.delta)

    def is_zero(self) -> bool:
        return self.delta == 0 and all(c == 0 for c in self.fund)

    def _match(self, other: "KMWeight") -> None:
        if len(self.fund) != len(other.fund):
            raise DimensionError("weights live on different Cartan data")


@dataclass(frozen=True)
class GeneralizedCartanMatrix:
    """Validated symmetrizable GCM with minimal symmetrizers and type tag."""

    entries: tuple[tuple[int, ...], ...]
    d: tuple[int, ...]                # minimal positive symmetrizers
    tag: str                          # "finite" | "affine" | "indefinite"
    null_vector: tuple[int, ...] | None       # primitive a with A a = 0 (affine)
    dual_labels: tuple[int, ...] | None       # primitive a^vee with a^vee A = 0 (affine)
    delta_split: tuple[int, ...] | None       # integer s with s . a = 1 (affine)

    @property
    def size(self) -> int:
        return len(self.entries)

    def simple_root(self, j: int) -> KMWeight:
        """alpha_j in (fundamental, delta) coordinates."""
        fund = tuple(self.entries[i][j] for i in range(self.size))
        delta = self.delta_split[j] if self.delta_split is not None else 0
        return KMWeight(fund, delta)

    def root_combination(self, coeffs) -> KMWeight:
        n = self.size
        fund = tuple(sum(self.entries[i][j] * coeffs[j] for j in range(n)) for i in range(n))
        delta = 0
        if self.delta_split is not None:
            delta = sum(self.delta_split[j] * coeffs[j] for j in range(n))
        return KMWeight(fund, delta)

    def gram(self, i: int, j: int) -> int:
        """Invariant form on simple roots, normalized (alpha_i, alpha_i) = 2 d_i."""
        return self.d[i] * self.entries[i][j]

    def reflect(self, i: int, mu: KMWeight) -> KMWeight:
        """Simple reflection s_i acting on a weight."""
        return mu - self.simple_root(i).scaled(mu.fund[i])

    def is_dominant(self, mu: KMWeight) -> bool:
        return all(c >= 0 for c in mu.fund)


def _connected_components(a: tuple[tuple[int, ...], ...]) -> list[list[int]]:
    n = len(a)
    seen = [False] * n
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        stack, comp = [start], []
        seen[start] = True
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if not seen[j] and a[i][j] != 0:
                    seen[j] = True
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def _minimal_symmetrizers(a: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    n = len(a)
    ratio: list[Fraction | None] = [None] * n
    for comp in _connected_components(a):
        ratio[comp[0]] = Fraction(1)
        queue = [comp[0]]
        while queue:
            i = queue.pop()
            for j in range(n):
                if a[i][j] == 0 or i == j:
                    continue
                # d_i a_ij = d_j a_ji  =>  d_j = d_i * a_ij / a_ji
                val = ratio[i] * Fraction(a[i][j], a[j][i])
                if ratio[j] is None:
                    ratio[j] = val
                    queue.append(j)
                elif ratio[j] != val:
                    raise SymmetrizabilityError(
                        "matrix is not symmetrizable (cycle products disagree)"
                    )
        lcm = reduce(math.lcm, (ratio[i].denominator for i in comp), 1)
        scaled = [ratio[i] * lcm for i in comp]
        g = reduce(math.gcd, (int(x) for x in scaled), 0)
        for i, x in zip(comp, scaled):
            ratio[i] = Fraction(int(x) // g)
    return tuple(int(r) for r in ratio)


def _leading_minors_positive(sym: list[list[int]], upto: int) -> bool:
    for k in range(1, upto + 1):
        sub = IntMatrix.from_rows([row[:k] for row in sym[:k]])
        if sub.det() <= 0:
            return False
    return True


def _classify_component(a, d, comp) -> str:
    # symmetrized restriction D*A is symmetric; Sylvester on leading minors
    sym = [[d[i] * a[i][j] for j in comp] for i in comp]
    n = len(comp)
    if _leading_minors_positive(sym, n):
        return "finite"
    full = IntMatrix.from_rows(sym)
    if full.det() == 0 and _leading_minors_positive(sym, n - 1):
        return "affine"
    return "indefinite"


def validate_and_symmetrize(raw) -> GeneralizedCartanMatrix:
    """Check the GCM axioms, compute minimal symmetrizers, classify the type.

    Accepts an ``IntMatrix`` or any nested sequence of integers.
    """
    if isinstance(raw, IntMatrix):
        a = raw.entries
    else:
        a = tuple(tuple(int(x) for x in row) for row in raw)
    n = len(a)
    if any(len(row) != n for row in a):
        raise CartanError("Cartan matrix must be square")
    for i in range(n):
        if a[i][i] != 2:
            raise CartanError(f"diagonal entry a[{i}][{i}] must be 2")
        for j in range(n):
            if i != j:
                if a[i][j] > 0:
                    raise CartanError(f"off-diagonal entry a[{i}][{j}] must be <= 0")
                if (a[i][j] == 0) != (a[j][i] == 0):
                    raise CartanError(f"a[{i}][{j}] = 0 requires a[{j}][{i}] = 0")

    d = _minimal_symmetrizers(a)
    comps = [_classify_component(a, d, c) for c in _connected_components(a)]
    if any(t == "indefinite" for t in comps):
        tag = "indefinite"
    elif any(t == "affine" for t in comps):
        tag = "affine"
    else:
        tag = "finite"

    null_vector = dual_labels = delta_split = None
    if tag == "affine":
        mat = IntMatrix.from_rows(a)
        ker = integer_kernel(mat)
        if ker.ncols != 1:
            raise UnsupportedError("only affine matrices with 1-dimensional radical are supported")
        vec = [ker.entries[i][0] for i in range(n)]
        if all(x <= 0 for x in vec):
            vec = [-x for x in vec]
        if any(x <= 0 for x in vec):
            raise CartanError("affine null vector is not positive")
        null_vector = tuple(vec)
        dual = [d[i] * vec[i] for i in range(n)]
        g = reduce(math.gcd, dual)
        dual_labels = tuple(x // g for x in dual)
        delta_split = _delta_splitter(null_vector)
    return GeneralizedCartanMatrix(a, d, tag, null_vector, dual_labels, delta_split)


def _delta_splitter(a: tuple[int, ...]) -> tuple[int, ...]:
    """Deterministic integer covector s with s . a = 1 (a is primitive)."""
    s = [0] * len(a)
    g, coeffs = a[0], [1] + [0] * (len(a) - 1)
    for i in range(1, len(a)):
        old_g = g
        g = math.gcd(g, a[i])
        # extended gcd step: g = x*old_g + y*a[i]
        x, y = _bezout(old_g, a[i])
        coeffs = [c * x for c in coeffs]
        coeffs[i] = y
    assert g == 1, "null vector must be primitive"
    return tuple(coeffs)


def _bezout(p: int, q: int) -> tuple[int, int]:
    old_r, r = p, q
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q_, (old_r, r) = divmod(old_r, r)[0], (r, old_r % r)
        old_s, s = s, old_s - q_ * s
        old_t, t = t, old_t - q_ * t
    return old_s, old_t


def langlands_dual(gcm: GeneralizedCartanMatrix) -> GeneralizedCartanMatrix:
    """Replace the Cartan matrix by its transpose; symmetrizers are recomputed."""
    n = gcm.size
    return validate_and_symmetrize([[gcm.entries[j][i] for j in range(n)] for i in range(n)])


def root_coordinates(gcm: GeneralizedCartanMatrix, mu: KMWeight):
    """Express ``mu`` in simple roots; returns a tuple of Fractions or None.

    For nonsingular Cartan matrices the delta coordinate must vanish; for
    affine type the delta coordinate pins down the null-vector direction.
    """
    n = gcm.size
    if len(mu.fund) != n:
        raise DimensionError("weight length does not match Cartan matrix size")
    sol = _solve_rational(gcm.entries, mu.fund)
    if sol is None:
        return None
    v0, kernel_dim = sol
    if kernel_dim == 0:
        if mu.delta != 0:
            return None
        return tuple(v0)
    if gcm.tag != "affine" or kernel_dim != 1:
        raise UnsupportedError("singular non-affine Cartan matrices are not supported")
    s = gcm.delta_split
    a = gcm.null_vector
    t = Fraction(mu.delta) - sum(Fraction(s[j]) * v0[j] for j in range(n))
    return tuple(v0[j] + t * a[j] for j in range(n))


def _solve_rational(a_rows, rhs):
    """Solve A v = rhs over Q.  Returns (particular solution, kernel dim) or None."""
    n = len(a_rows)
    aug = [[Fraction(a_rows[i][j]) for j in range(n)] + [Fraction(rhs[i])] for i in range(n)]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, n) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        aug[r] = [x / aug[r][c] for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    for i in range(r, n):
        if aug[i][n] != 0:
            return None
    v = [Fraction(0)] * n
    for row, c in zip(aug, pivots):
        v[c] = row[n]
    return v, n - r


def in_positive_root_cone(gcm: GeneralizedCartanMatrix, mu: KMWeight):
    """Integer non-negative root coordinates of ``mu``, or None."""
    rc = root_coordinates(gcm, mu)
    if rc is None:
        return None
    if any(x.denominator != 1 or x < 0 for x in rc):
        return None
    return tuple(int(x) for x in rc)


def dominance_leq(mu: KMWeight, lam: KMWeight, gcm: GeneralizedCartanMatrix) -> bool:
    """Dominance order: mu <= lam iff lam - mu is a non-negative integral
    combination of simple roots."""
    return in_positive_root_cone(gcm, lam - mu) is not None


def level(gcm: GeneralizedCartanMatrix, lam: KMWeight) -> int:
    """Pairing with the canonical central element c = sum a_i^vee alpha_i^vee."""
    if gcm.tag != "affine":
        raise UnsupportedError("level is defined for affine type only")
    if len(lam.fund) != gcm.size:
        raise DimensionError("weight length does not match Cartan matrix size")
    return sum(av * c for av, c in zip(gcm.dual_labels, lam.fund))


def central_element_as_root_sum(gcm: GeneralizedCartanMatrix) -> KMWeight:
    """The canonical central element embedded in the (co)weight lattice via the
    dual Kac labels: sum a_i^vee alpha_i (an imaginary weight of level 0)."""
    if gcm.tag != "affine":
        raise UnsupportedError("central element requires affine type")
    return gcm.root_combination(gcm.dual_labels)


# Registry of named Cartan data for the CLI and fixtures.
def _type_a(n: int):
    return [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n)] for i in range(n)]


def _affine_a(n: int):
    # cycle on n+1 vertices (n >= 2); n == 1 is the special rank-2 case
    if n == 1:
        return [[2, -2], [-2, 2]]
    m = n + 1
    return [
        [2 if i == j else (-1 if (i - j) % m in (1, m - 1) else 0) for j in range(m)]
        for i in range(m)
    ]


NAMED_CARTAN_MATRICES: dict[str, list[list[int]]] = {
    **{f"A{n}": _type_a(n) for n in range(1, 10)},
    "B2": [[2, -2], [-1, 2]],
    "C2": [[2, -1], [-2, 2]],
    "G2": [[2, -1], [-3, 2]],
    "B3": [[2, -1, 0], [-1, 2, -2], [0, -1, 2]],
    "C3": [[2, -1, 0], [-1, 2, -1], [0, -2, 2]],
    "A1~": _affine_a(1),
    "A2~": _affine_a(2),
    "A3~": _affine_a(3),
}


def named_gcm(name: str) -> GeneralizedCartanMatrix:
    try:
        return validate_and_symmetrize(NAMED_CARTAN_MATRICES[name])
    except KeyError:
        raise DomainError(f"unknown Cartan type name: {name!r}") from None
