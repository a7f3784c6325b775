"""Exchange matrices over an ordered ring, R-quivers and mutation.

Entries are either plain integers or ``AlgReal`` values; both support exact
sign queries, which is all the mutation formula needs.  Matrices are
immutable: every operation returns a fresh value.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations

from .chebring import AlgReal, alg_inverse


def sgn(x) -> int:
    if isinstance(x, AlgReal):
        return x.sign()
    return (x > 0) - (x < 0)


def _is_zero(x) -> bool:
    return x.is_zero() if isinstance(x, AlgReal) else x == 0


class ExchangeMatrix:
    """Square matrix over Z or Z[2cos(pi/m)] with the mutation operation.

    Skew-symmetry is not enforced at construction (skew-symmetrizable
    matrices such as the F4 one are legal inputs); ``is_skew_symmetric``
    reports it.
    """

    __slots__ = ("entries", "n", "ring")

    def __init__(self, entries):
        rows = tuple(tuple(row) for row in entries)
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise ValueError("matrix must be square")
        self.entries = rows
        self.n = n
        self.ring = "Z"
        for row in rows:
            for x in row:
                if isinstance(x, AlgReal):
                    self.ring = f"Z[2cos(pi/{x.m})]"
                    break
            else:
                continue
            break

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, ExchangeMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"ExchangeMatrix({[list(r) for r in self.entries]})"

    def is_skew_symmetric(self) -> bool:
        for i in range(self.n):
            if not _is_zero(self.entries[i][i]):
                return False
            for j in range(i):
                if not _is_zero(self.entries[i][j] + self.entries[j][i]):
                    return False
        return True

    def transpose(self) -> "ExchangeMatrix":
        return ExchangeMatrix(tuple(zip(*self.entries)))

    def __neg__(self) -> "ExchangeMatrix":
        return ExchangeMatrix(tuple(tuple(-x for x in row) for row in self.entries))

    def mutate(self, k: int) -> "ExchangeMatrix":
        return ExchangeMatrix(mutate_entries(self.entries, k))

    def composite_mutate(self, block) -> "ExchangeMatrix":
        """Mutate at every vertex of ``block`` (requires the block to commute)."""
        block = sorted(block)
        for i in block:
            for j in block:
                if i != j and not _is_zero(self.entries[i][j]):
                    raise ValueError(
                        f"composite mutation refused: entries within {block} are nonzero"
                    )
        rows = self.entries
        for k in block:
            rows = mutate_entries(rows, k)
        return ExchangeMatrix(rows)

    # -- serialization --------------------------------------------------
    def to_json(self):
        def enc(x):
            return x.to_json() if isinstance(x, AlgReal) else x

        return {
            "ring": self.ring,
            "n": self.n,
            "entries": [[enc(x) for x in row] for row in self.entries],
        }

    @staticmethod
    def from_json(obj) -> "ExchangeMatrix":
        def dec(x):
            return AlgReal.from_json(x) if isinstance(x, dict) else x

        return ExchangeMatrix([[dec(x) for x in row] for row in obj["entries"]])


def mutate_entries(rows, k: int):
    """One mutation step on a tuple-of-tuples matrix (any number of rows).

    Rows may outnumber columns (extended matrices); the pivot row ``k`` is
    always read from the top square block.  The halving in the classical
    formula is avoided: the correction term is sgn(b_ik) * b_ik * b_kj when
    b_ik and b_kj have equal nonzero signs and zero otherwise.
    """
    ncols = len(rows[0])
    if not 0 <= k < ncols:
        raise IndexError(f"mutation index {k} out of range 0..{ncols - 1}")
    out = []
    pivot_row = rows[k]
    for i, row in enumerate(rows):
        b_ik = row[k]
        s_ik = sgn(b_ik)
        new_row = []
        for j, b_ij in enumerate(row):
            if i == k or j == k:
                new_row.append(-b_ij)
            else:
                b_kj = pivot_row[j]
                if s_ik != 0 and s_ik == sgn(b_kj):
                    new_row.append(b_ij + s_ik * (b_ik * b_kj))
                else:
                    new_row.append(b_ij)
        out.append(tuple(new_row))
    return tuple(out)


def composite_orders_agree(matrix: ExchangeMatrix, block) -> bool:
    """Exhaustively check order-independence of a composite mutation."""
    block = list(block)
    results = set()
    for order in permutations(block):
        rows = matrix.entries
        for k in order:
            rows = mutate_entries(rows, k)
        results.add(rows)
    return len(results) == 1


# ---------------------------------------------------------------------------
# rescaling


def rescale(matrix: ExchangeMatrix, diagonal) -> ExchangeMatrix:
    """P^{-1} B P for a positive diagonal P: entry (i, j) scaled by p_j / p_i.

    Diagonal entries may be integers, AlgReal values, or exact quotients
    given as (numerator, denominator) pairs with AlgReal or integer
    numerator.  The result must land back in the entry ring; a quotient
    that does not reduce is an error.
    """
    n = matrix.n
    if len(diagonal) != n:
        raise ValueError("diagonal length must match matrix size")
    pairs = []
    for p in diagonal:
        num, den = p if isinstance(p, tuple) else (p, 1)
        if isinstance(num, int):
            m = _matrix_field(matrix)
            num = AlgReal(m, (num,)) if m else num
        if (sgn(num) <= 0) or den <= 0:
            raise ValueError("rescaling diagonal must be strictly positive")
        pairs.append((num, den))
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            row.append(_scale_entry(matrix.entries[i][j], pairs[j], pairs[i]))
        out.append(tuple(row))
    return ExchangeMatrix(tuple(out))


def _matrix_field(matrix: ExchangeMatrix):
    for row in matrix.entries:
        for x in row:
            if isinstance(x, AlgReal):
                return x.m
    return None


def _scale_entry(b, pj, pi):
    """b * (p_j / p_i) with p = num/den, exact; errors if it leaves the ring."""
    nj, dj = pj
    ni, di = pi
    if isinstance(b, int) and isinstance(nj, int) and isinstance(ni, int):
        num, den = b * nj * di, dj * ni
        if num % den:
            raise ArithmeticError("rescaled entry leaves the ring")
        return num // den
    m = next(x.m for x in (b, nj, ni) if isinstance(x, AlgReal))

    def lift(x):
        return AlgReal(m, (x,)) if isinstance(x, int) else x

    b, nj, ni = lift(b), lift(nj), lift(ni)
    inv, extra_den = alg_inverse(ni)  # 1/ni == inv/extra_den
    return _divide_exact(b * nj * inv * di, dj * extra_den)


def _divide_exact(a: AlgReal, d: int) -> AlgReal:
    coeffs = []
    for c in a.coeffs:
        if c % d:
            raise ArithmeticError("rescaled entry leaves the ring")
        coeffs.append(c // d)
    return AlgReal(a.m, tuple(coeffs))


# ---------------------------------------------------------------------------
# R-quivers


@dataclass(frozen=True)
class RQuiver:
    """Quiver with strictly positive arrow weights, no loops or 2-cycles.

    ``arrows`` maps (source, target) to the weight.  Optional vertex weights
    make it a vertex-weighted quiver.
    """

    vertices: tuple
    arrows: dict
    vertex_weights: dict = field(default_factory=dict)

    def __post_init__(self):
        seen = set()
        for (i, j), w in self.arrows.items():
            if i == j:
                raise ValueError("loops are not allowed")
            if (j, i) in self.arrows:
                raise ValueError("2-cycles are not allowed")
            if (i, j) in seen:
                raise ValueError("at most one arrow per ordered pair")
            if sgn(w) <= 0:
                raise ValueError("arrow weights must be strictly positive")
            seen.add((i, j))


def to_quiver(matrix: ExchangeMatrix, vertices=None) -> RQuiver:
    if not matrix.is_skew_symmetric():
        raise ValueError("only skew-symmetric matrices correspond to R-quivers")
    vertices = tuple(vertices) if vertices is not None else tuple(range(matrix.n))
    arrows = {}
    for i in range(matrix.n):
        for j in range(matrix.n):
            if sgn(matrix.entries[i][j]) > 0:
                arrows[(vertices[i], vertices[j])] = matrix.entries[i][j]
    return RQuiver(vertices, arrows)


def from_quiver(quiver: RQuiver) -> ExchangeMatrix:
    index = {v: i for i, v in enumerate(quiver.vertices)}
    n = len(quiver.vertices)
    rows = [[0] * n for _ in range(n)]
    ring_m = None
    for w in quiver.arrows.values():
        if isinstance(w, AlgReal):
            ring_m = w.m
            break
    if ring_m is not None:
        rows = [[AlgReal(ring_m, ()) for _ in range(n)] for _ in range(n)]
    for (i, j), w in quiver.arrows.items():
        rows[index[i]][index[j]] = w
        rows[index[j]][index[i]] = -w
    return ExchangeMatrix(tuple(tuple(r) for r in rows))


def quiver_dot(quiver: RQuiver, name="quiver") -> str:
    """DOT text with arrow-weight labels (and vertex weights when present)."""
    lines = [f"digraph {name} {{"]
    for v in quiver.vertices:
        vw = quiver.vertex_weights.get(v)
        label = f"{v}" if vw is None else f"{v} [w={_fmt(vw)}]"
        lines.append(f'  "{v}" [label="{label}"];')
    for (i, j), w in sorted(quiver.arrows.items(), key=lambda kv: (str(kv[0]),)):
        lines.append(f'  "{i}" -> "{j}" [label="{_fmt(w)}"];')
    lines.append("}")
    return "\n".join(lines)


def _fmt(x):
    if isinstance(x, AlgReal):
        return f"{float(x):.6g}"
    return str(x)
