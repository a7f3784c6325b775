"""Root systems of H3, H4 and I2(m) over Z[2cos(pi/m)], by reflection closure.

Simple roots are the standard basis; the reflection at the i-th simple root
acts on coordinate vectors by s_i(v) = v - (sum_j A_ij v_j) e_i, where
A_ii = 2 and A_ij = -2cos(pi/m_ij).  All coordinates are exact AlgReal
values, so root membership is an exact set lookup.  The same closure runs
over plain integers for the simply-laced Dynkin types used as oracles.

Vertex numbering matches the folded quivers: the edge of order 5 joins the
last two vertices of H3 and H4.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .chebring import AlgReal


@dataclass(frozen=True)
class RootSet:
    type_name: str
    rank: int
    roots: frozenset
    positives: frozenset

    def is_root(self, v) -> bool:
        v = tuple(v)
        if len(v) != self.rank:
            raise ValueError(f"expected a vector of length {self.rank}")
        return v in self.roots

    def is_positive_root(self, v) -> bool:
        v = tuple(v)
        if len(v) != self.rank:
            raise ValueError(f"expected a vector of length {self.rank}")
        return v in self.positives


def coxeter_matrix(type_name: str) -> tuple[tuple[int, ...], ...]:
    """Edge orders m_ij (diagonal 1, off-diagonal 2 unless an edge exists)."""
    if type_name.startswith("I2(") and type_name.endswith(")"):
        m = int(type_name[3:-1])
        if m < 3:
            raise ValueError("dihedral order must be >= 3")
        return ((1, m), (m, 1))
    if type_name == "H3":
        return ((1, 3, 2), (3, 1, 5), (2, 5, 1))
    if type_name == "H4":
        return (
            (1, 3, 2, 2),
            (3, 1, 3, 2),
            (2, 3, 1, 5),
            (2, 2, 5, 1),
        )
    raise ValueError(f"unknown Coxeter type {type_name!r}")


def _field_order(type_name: str) -> int:
    if type_name.startswith("I2("):
        return int(type_name[3:-1])
    return 5


_EXPECTED_COUNTS = {"H3": 30, "H4": 120}


def generate_roots(type_name: str) -> RootSet:
    """Reflection closure from the simple basis; exact coordinates."""
    cox = coxeter_matrix(type_name)
    rank = len(cox)
    m_field = _field_order(type_name)
    zero, one = AlgReal(m_field), AlgReal(m_field, (1,))

    def bond(mij: int):
        if mij == 2:
            return zero
        if mij == 3:
            return -one
        full = AlgReal.generator(m_field)
        if mij == m_field:
            return -full
        raise ValueError(f"edge order {mij} not representable in Z[2cos(pi/{m_field})]")

    cartan = [
        [2 * one if i == j else bond(cox[i][j]) for j in range(rank)] for i in range(rank)
    ]

    simples = []
    for i in range(rank):
        v = [zero] * rank
        v[i] = one
        simples.append(tuple(v))

    roots = set(simples)
    frontier = list(simples)
    while frontier:
        new = []
        for v in frontier:
            for i in range(rank):
                pairing = zero
                for j in range(rank):
                    if not v[j].is_zero():
                        pairing = pairing + cartan[i][j] * v[j]
                image = list(v)
                image[i] = image[i] - pairing
                image = tuple(image)
                if image not in roots:
                    roots.add(image)
                    new.append(image)
        frontier = new

    positives = frozenset(
        v for v in roots if all(c.sign() >= 0 for c in v) and any(c.sign() > 0 for c in v)
    )
    expected = _EXPECTED_COUNTS.get(type_name, 2 * m_field if type_name.startswith("I2(") else None)
    if expected is not None and len(roots) != expected:
        raise AssertionError(f"{type_name}: got {len(roots)} roots, expected {expected}")
    if 2 * len(positives) != len(roots):
        raise AssertionError("roots do not split evenly into positive and negative")
    return RootSet(type_name, rank, frozenset(roots), positives)


_ROOT_CACHE: dict[str, RootSet] = {}


def root_system(type_name: str) -> RootSet:
    rs = _ROOT_CACHE.get(type_name)
    if rs is None:
        rs = generate_roots(type_name)
        _ROOT_CACHE[type_name] = rs
    return rs


def simply_laced_positive_roots(nvertices: int, edges) -> frozenset:
    """Positive roots of a simply-laced diagram by integer reflection closure.

    Independent of any Auslander-Reiten machinery; used as the Gabriel-count
    oracle for the unfolded quivers.
    """
    adj = [[0] * nvertices for _ in range(nvertices)]
    for i, j in edges:
        adj[i][j] = adj[j][i] = 1
    roots = set()
    frontier = []
    for i in range(nvertices):
        v = [0] * nvertices
        v[i] = 1
        frontier.append(tuple(v))
    roots.update(frontier)
    while frontier:
        new = []
        for v in frontier:
            for i in range(nvertices):
                pairing = 2 * v[i] - sum(adj[i][j] * v[j] for j in range(nvertices))
                image = list(v)
                image[i] = v[i] - pairing
                image = tuple(image)
                if image not in roots:
                    roots.add(image)
                    new.append(image)
        frontier = new
    return frozenset(v for v in roots if all(c >= 0 for c in v))


# ---------------------------------------------------------------------------
# Euclidean embedding for the dihedral types


def _sqrt_interval(lo: Fraction, hi: Fraction, scale: int = 10**15):
    """Rational enclosure of sqrt over a nonnegative rational interval."""
    if lo < 0:
        lo = Fraction(0)

    def lower(q):
        num = math.isqrt(q.numerator * q.denominator * scale * scale)
        return Fraction(num, q.denominator * scale)

    def upper(q):
        num = math.isqrt(q.numerator * q.denominator * scale * scale) + 1
        return Fraction(num, q.denominator * scale)

    return lower(lo), upper(hi)


def e_F(v, n: int, width: Fraction = Fraction(1, 10**12)):
    """Change of basis from simple-root coordinates of I2(2n+1) to R^2.

    e_F(1, 0) = (1, 0) and e_F(0, 1) = (cos 2n theta, sin 2n theta) with
    theta = pi/(2n+1); extended linearly.  Returns a pair of rational
    intervals ((xlo, xhi), (ylo, yhi)) of width at most ``width``.

    The second basis vector is exact in the field: cos 2n theta = -g/2 and
    sin 2n theta = sin theta = sqrt(1 - (g/2)^2), where g = 2cos(theta).
    """
    m = 2 * n + 1
    v0, v1 = v
    if isinstance(v0, int):
        v0 = AlgReal(m, (v0,))
    if isinstance(v1, int):
        v1 = AlgReal(m, (v1,))
    # x = v0 - v1 * g / 2, computed as (2 v0 - v1 g) / 2 exactly
    x2 = 2 * v0 - v1 * AlgReal.generator(m)
    xlo, xhi = x2.interval(width)
    x_int = (xlo / 2, xhi / 2)

    half = width / 4
    g_lo, g_hi = AlgReal.generator(m).interval(half)
    sin2_lo = 1 - (g_hi / 2) ** 2
    sin2_hi = 1 - (g_lo / 2) ** 2
    s_lo, s_hi = _sqrt_interval(sin2_lo, sin2_hi)
    v1_lo, v1_hi = v1.interval(half)
    cands = (v1_lo * s_lo, v1_lo * s_hi, v1_hi * s_lo, v1_hi * s_hi)
    y_int = (min(cands), max(cands))
    return x_int, y_int


def e_F_float(v, n: int) -> tuple[float, float]:
    (xlo, xhi), (ylo, yhi) = e_F(v, n)
    return float((xlo + xhi) / 2), float((ylo + yhi) / 2)
