"""Tropical y-seed patterns: C-matrices, G-matrices and their folding.

A seed is an exchange matrix stacked over a coefficient square; mutation
acts on the stacked matrix by the usual rule.  For folded types the seed
lives over Z[2cos(pi/m)] and every invariant here is exact: c-vectors are
tested for exact root membership, G-matrices are exact inverse transposes
(the determinant is a unit by the alternation rule), and the compatibility
between a folded walk and its composite-mutation lift is checked entry by
entry through the weighted projection d_F.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .chebring import AlgReal, ChebElem, cheb_mul, rho, sigma
from .exchange import ExchangeMatrix, mutate_entries
from .repcat import folded_type_name
from .rootsys import root_system
from .unfolding import FoldingSpec


@dataclass(frozen=True)
class Seed:
    """Tropical y-seed: exchange matrix, coefficient matrix, provenance word."""

    B: ExchangeMatrix
    C: tuple
    word: tuple = ()

    @staticmethod
    def initial(B: ExchangeMatrix) -> "Seed":
        if isinstance(B.entries[0][0], AlgReal):
            m = B.entries[0][0].m
            one, zero = AlgReal(m, (1,)), AlgReal(m)
        else:
            one, zero = 1, 0
        C = tuple(
            tuple(one if i == j else zero for j in range(B.n)) for i in range(B.n)
        )
        return Seed(B, C)

    def stacked(self) -> tuple:
        return self.B.entries + self.C

    def mutate(self, k: int) -> "Seed":
        rows = mutate_entries(self.stacked(), k)
        n = self.B.n
        return Seed(ExchangeMatrix(rows[:n]), rows[n:], self.word + (k,))

    def c_vectors(self) -> tuple:
        n = self.B.n
        return tuple(tuple(self.C[i][j] for i in range(n)) for j in range(n))

    def key(self):
        def enc(x):
            return x.coeffs if isinstance(x, AlgReal) else x

        return (
            tuple(tuple(enc(x) for x in row) for row in self.B.entries),
            tuple(tuple(enc(x) for x in row) for row in self.C),
        )

    def to_json(self):
        def enc(x):
            return x.to_json() if isinstance(x, AlgReal) else x

        return {
            "B": self.B.to_json(),
            "C": [[enc(x) for x in row] for row in self.C],
            "word": list(self.word),
        }


def mutate_seed(seed: Seed, k: int) -> Seed:
    return seed.mutate(k)


@dataclass(frozen=True)
class GMatrix:
    entries: tuple
    word: tuple = ()


def g_matrix(seed: Seed) -> GMatrix:
    """G = (C^T)^{-1}, exactly; the determinant must be a unit."""
    C = seed.C
    if isinstance(C[0][0], AlgReal):
        inv = invert_ring_unimodular(transpose(C))
    else:
        inv = invert_integer(transpose(C))
    return GMatrix(inv, seed.word)


def transpose(rows):
    return tuple(zip(*rows))


def mat_mul(a, b):
    n, mid, m = len(a), len(b), len(b[0])
    return tuple(
        tuple(sum3(a[i][k] * b[k][j] for k in range(mid)) for j in range(m))
        for i in range(n)
    )


def sum3(items):
    acc = None
    for x in items:
        acc = x if acc is None else acc + x
    return acc


def det_laplace(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    acc = None
    for j in range(n):
        entry = rows[0][j]
        if isinstance(entry, int) and entry == 0:
            continue
        if isinstance(entry, AlgReal) and entry.is_zero():
            continue
        if isinstance(entry, ChebElem) and entry.is_zero():
            continue
        minor = tuple(
            tuple(rows[i][jj] for jj in range(n) if jj != j) for i in range(1, n)
        )
        term = entry * det_laplace(minor)
        if j % 2:
            term = -term
        acc = term if acc is None else acc + term
    if acc is None:
        row = rows[0]
        zero = row[0] - row[0] if not isinstance(row[0], int) else 0
        return zero
    return acc


def det_cheb(rows) -> ChebElem:
    return det_laplace(rows)


def invert_ring_unimodular(rows):
    """Inverse of a square AlgReal matrix with determinant +-1, by adjugate."""
    n = len(rows)
    det = det_laplace(rows)
    m = det.m
    one = AlgReal(m, (1,))
    if det == one:
        sign = 1
    elif det == -one:
        sign = -1
    else:
        raise ArithmeticError("determinant is not a unit")
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            minor = tuple(
                tuple(rows[r][c] for c in range(n) if c != i) for r in range(n) if r != j
            )
            cof = det_laplace(minor) if n > 1 else one
            if (i + j) % 2:
                cof = -cof
            row.append(cof * sign)
        out.append(tuple(row))
    return tuple(out)


def invert_integer(rows):
    """Exact inverse of an integer matrix; entries must come out integral."""
    n = len(rows)
    aug = [[Fraction(rows[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ArithmeticError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            x = aug[i][j + n]
            if x.denominator != 1:
                raise ArithmeticError("inverse is not integral")
            row.append(int(x))
        out.append(tuple(row))
    return tuple(out)


# ---------------------------------------------------------------------------
# folded walks and the compatibility checks


def lift_word(spec: FoldingSpec, word):
    return spec.lift_word(word)


def matrix_d_F(spec: FoldingSpec, rows):
    return spec.matrix_d_F(rows)


@dataclass
class WalkReport:
    passed: bool
    vertices_checked: int
    failures: list
    seed: int | None = None

    def to_json(self):
        return {
            "passed": self.passed,
            "vertices_checked": self.vertices_checked,
            "failures": [repr(f) for f in self.failures[:20]],
            "seed": self.seed,
        }


class TropicalWalker:
    """Drives a folded seed and its composite-mutation lift from one word."""

    def __init__(self, spec: FoldingSpec, checks=("cube", "blocks", "roots", "dets")):
        if spec.n is None:
            raise ValueError("tropical walks need a Chebyshev folding")
        self.spec = spec
        self.n = spec.n
        self.m = spec.m
        self.mprime = spec.B.n
        self.nverts = spec.S.n
        self.roots = root_system(folded_type_name(spec))
        self.checks = frozenset(checks)
        self.one = AlgReal(self.m, (1,))

    # stacked matrices: folded (2m' x m') over AlgReal, lifted (2N x N) over Z
    def initial_pair(self):
        folded = Seed.initial(self.spec.B).stacked()
        lifted = Seed.initial(self.spec.S).stacked()
        return folded, lifted

    def step(self, folded, lifted, k: int):
        folded = mutate_entries(folded, k)
        for v in self.spec.blocks[k]:
            lifted = mutate_entries(lifted, v)
        return folded, lifted

    # -- invariants at one tree vertex ------------------------------------
    def c_block(self, lifted, bi: int, bj: int):
        rows = lifted[self.nverts:]
        return tuple(
            tuple(rows[v][w] for w in self.spec.blocks[bj]) for v in self.spec.blocks[bi]
        )

    def block_element(self, block) -> ChebElem | None:
        """The ring element r with rho(r) equal to the block, if any."""
        r = ChebElem(self.n, tuple(block[a][0] for a in range(self.n)))
        return r if rho(r) == tuple(tuple(row) for row in block) else None

    def check_vertex(self, folded, lifted, word, failures, neighbours=True, only=None):
        spec = self.spec
        checks = self.checks if only is None else (self.checks & only)
        mprime, nverts = self.mprime, self.nverts
        B_f, C_f = folded[:mprime], folded[mprime:]
        C_l = lifted[nverts:]

        if "roots" in checks:
            for j in range(mprime):
                col = tuple(C_f[i][j] for i in range(mprime))
                if not self.roots.is_root(col):
                    failures.append((word, "c-vector-not-root", j))
                signs = {c.sign() for c in col}
                if {1, -1} <= signs:
                    failures.append((word, "c-vector-not-sign-coherent", j))

        if "cube" in checks:
            if matrix_d_F(spec, C_l) != C_f:
                failures.append((word, "dF(C)-mismatch"))
            G_l = invert_integer(transpose(C_l))
            G_f = invert_ring_unimodular(transpose(C_f))
            if matrix_d_F(spec, G_l) != G_f:
                failures.append((word, "dF(G)-mismatch"))
            ident_f = tuple(
                tuple(self.one if i == j else AlgReal(self.m) for j in range(mprime))
                for i in range(mprime)
            )
            if mat_mul(transpose(C_f), G_f) != ident_f:
                failures.append((word, "CtG-not-identity"))
            if neighbours:
                for k in range(mprime):
                    nf, nl = self.step(folded, lifted, k)
                    if matrix_d_F(spec, nl[nverts:]) != nf[mprime:]:
                        failures.append((word, "dF-mutation-square", k))

        if "blocks" in checks or "dets" in checks:
            elements = []
            blocks = []
            for bi in range(mprime):
                row = []
                for bj in range(mprime):
                    blk = self.c_block(lifted, bi, bj)
                    r = self.block_element(blk)
                    if r is None:
                        failures.append((word, "block-not-regular-rep", bi, bj))
                        return
                    if not r.sign_coherent():
                        failures.append((word, "block-coefficients-mixed-sign", bi, bj))
                    row.append(r)
                    blocks.append(blk)
                elements.append(tuple(row))
            if "blocks" in checks:
                for a in range(len(blocks)):
                    for b in range(a + 1, len(blocks)):
                        if _mat_mul_int(blocks[a], blocks[b]) != _mat_mul_int(blocks[b], blocks[a]):
                            failures.append((word, "blocks-do-not-commute", a, b))
                            break
            if "dets" in checks:
                det_f = det_laplace(C_f)
                expected = self.one if len(word) % 2 == 0 else -self.one
                if det_f != expected:
                    failures.append((word, "folded-determinant", len(word)))
                det_x = det_cheb(elements)
                if sigma(det_x) != det_f:
                    failures.append((word, "determinant-sigma-mismatch"))
                unit = ChebElem.one(self.n)
                if det_x != unit and det_x != -unit:
                    failures.append((word, "lifted-determinant-not-unit"))

    # -- drivers --------------------------------------------------------------
    def verify_cube(
        self,
        depth: int = 6,
        random_words: int = 0,
        random_length: int = 30,
        seed: int = 0,
    ) -> WalkReport:
        failures = []
        count = [0]

        def visit(folded, lifted, word):
            count[0] += 1
            self.check_vertex(folded, lifted, word, failures)

        folded0, lifted0 = self.initial_pair()
        visit(folded0, lifted0, ())

        def dfs(folded, lifted, word):
            if len(word) == depth or failures:
                return
            for k in range(self.mprime):
                nf, nl = self.step(folded, lifted, k)
                visit(nf, nl, word + (k,))
                dfs(nf, nl, word + (k,))

        dfs(folded0, lifted0, ())

        rng = random.Random(seed)
        for _ in range(random_words):
            if failures:
                break
            folded, lifted = folded0, lifted0
            word = []
            for _ in range(random_length):
                k = rng.randrange(self.mprime)
                word.append(k)
                folded, lifted = self.step(folded, lifted, k)
                count[0] += 1
                self.check_vertex(
                    folded, lifted, tuple(word), failures,
                    neighbours=False, only=frozenset(("roots",)),
                )
            self.check_vertex(folded, lifted, tuple(word), failures)
        return WalkReport(not failures, count[0], failures, seed)


def _mat_mul_int(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n)
    )


# ---------------------------------------------------------------------------
# seed enumeration


@dataclass
class EnumerationResult:
    seeds: list
    complete: bool
    cap: int

    @property
    def count(self) -> int:
        return len(self.seeds)

    def c_matrices(self):
        return [s.C for s in self.seeds]

    def g_matrices(self):
        return [g_matrix(s).entries for s in self.seeds]


def enumerate_seeds(B: ExchangeMatrix, cap: int = 20000) -> EnumerationResult:
    """BFS over distinct (B, C) pairs with canonical-key memoization."""
    start = Seed.initial(B)
    seen = {start.key()}
    order = [start]
    frontier = [start]
    while frontier:
        new = []
        for seed in frontier:
            for k in range(B.n):
                nxt = seed.mutate(k)
                key = nxt.key()
                if key not in seen:
                    if len(seen) >= cap:
                        return EnumerationResult(order, False, cap)
                    seen.add(key)
                    order.append(nxt)
                    new.append(nxt)
        frontier = new
    return EnumerationResult(order, True, cap)
