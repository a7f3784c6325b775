"""Weighted unfoldings and foldings of weighted quivers.

A ``FoldingSpec`` packages an integer exchange matrix S (the unfolded
quiver), a folded exchange matrix B over Z[2cos(pi/m)] (or over Z for the
integer demo), the block partition E_j of the unfolded vertex set, and the
positive vertex weights.  The defining property is checked exactly: for
every block pair, the weighted column sums of S must reproduce the folded
entries, the entries of each block must be one-signed as dictated by the
folded entry, and this must persist along arbitrary words of composite
mutations.

Blocks are stored with their members sorted so that the k-th member carries
weight U_k; under that internal ordering every block of S is literally the
regular-representation matrix of a Chebyshev ring element.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .chebring import AlgReal, ChebElem, rho, sigma
from .exchange import ExchangeMatrix, mutate_entries, rescale, sgn


@dataclass(frozen=True)
class FoldingSpec:
    """A weighted folding F : unfolded quiver -> folded quiver."""

    kind: str
    S: ExchangeMatrix
    B: ExchangeMatrix
    blocks: tuple            # blocks[j] = unfolded indices of folded vertex j, U_k-ordered
    weights: tuple           # weights[i] for each unfolded vertex (AlgReal or int)
    labels: tuple = ()       # display labels for unfolded vertices
    folded_labels: tuple = ()
    n: int | None = None     # Chebyshev rank (None for the integer demo)
    m: int | None = None     # weights live in Z[2cos(pi/m)]
    kappa: tuple | None = None   # kappa[i] = Chebyshev index of vertex i
    rescaling: tuple | None = None  # diagonal P, or None for the identity

    @property
    def vertex_map(self) -> tuple:
        out = [None] * self.S.n
        for j, block in enumerate(self.blocks):
            for i in block:
                out[i] = j
        return tuple(out)

    @property
    def weight_one_reps(self) -> tuple:
        """The U_0-weighted member of each block."""
        return tuple(block[0] for block in self.blocks)

    def d_F(self, vector):
        """Weighted block sums of an integer vector over the unfolded vertices."""
        if len(vector) != self.S.n:
            raise ValueError("vector length must match the unfolded vertex count")
        out = []
        for block in self.blocks:
            acc = self.weights[block[0]] * vector[block[0]]
            for i in block[1:]:
                acc = acc + self.weights[i] * vector[i]
            out.append(acc)
        return tuple(out)

    def matrix_d_F(self, rows):
        """Apply d_F to the columns indexed by weight-1 vertices.

        ``rows`` is a square matrix over the unfolded index set; the result
        is a folded-size matrix (tuple of tuples).
        """
        reps = self.weight_one_reps
        cols = []
        for r in reps:
            cols.append(self.d_F(tuple(row[r] for row in rows)))
        return tuple(tuple(cols[j][i] for j in range(len(reps))) for i in range(len(reps)))

    def lift_word(self, word):
        """Replace each folded letter by its block of commuting vertices."""
        for k in word:
            if not 0 <= k < len(self.blocks):
                raise IndexError(f"folded vertex {k} out of range")
        return tuple(self.blocks[k] for k in word)

    def to_json(self):
        return {
            "kind": self.kind,
            "n": self.n,
            "m": self.m,
            "S": self.S.to_json(),
            "B": self.B.to_json(),
            "blocks": [list(b) for b in self.blocks],
            "weights": [w.to_json() if isinstance(w, AlgReal) else w for w in self.weights],
            "labels": list(self.labels),
            "folded_labels": list(self.folded_labels),
        }


# ---------------------------------------------------------------------------
# the unfolding conditions


@dataclass
class ConditionReport:
    passed: bool
    failures: list = field(default_factory=list)
    checked_pairs: int = 0


def conditions_hold(S_rows, B: ExchangeMatrix, blocks, weights) -> tuple[bool, object]:
    """Fast check of conditions (1) and (2); returns (ok, first_failure)."""
    for bi, block_i in enumerate(blocks):
        for bj, block_j in enumerate(blocks):
            b_entry = B.entries[bi][bj]
            b_sign = sgn(b_entry)
            for l in block_j:
                acc = None
                for k in block_i:
                    s_kl = S_rows[k][l]
                    if b_sign >= 0 and s_kl < 0:
                        return False, ("sign", bi, bj, k, l, s_kl)
                    if s_kl:
                        term = weights[k] * s_kl
                        acc = term if acc is None else acc + term
                # weighted column sum must equal b_entry * w_l
                lhs = acc if acc is not None else 0 * b_entry
                rhs = b_entry * weights[l]
                if not _eq(lhs, rhs):
                    return False, ("sum", bi, bj, l, lhs, rhs)
    return True, None


def _eq(a, b):
    if isinstance(a, AlgReal) or isinstance(b, AlgReal):
        if isinstance(a, int):
            return b == a
        return a == b
    return a == b


def _enc(x):
    return x.to_json() if isinstance(x, AlgReal) else x


def check_conditions(S, B: ExchangeMatrix, blocks, weights) -> ConditionReport:
    """Full report on conditions (1) and (2) for the pair (S, B).

    Column sums are compared in the cleared-denominator form
    sum_k w_k s_kl == b_ij * w_l, which is the condition on W S W^-1 scaled
    by the (positive) column weight.
    """
    rows = S.entries if isinstance(S, ExchangeMatrix) else S
    nverts = len(rows)
    if any(i >= nverts for block in blocks for i in block):
        raise ValueError("block indices exceed the matrix size")
    if sorted(i for b in blocks for i in b) != list(range(nverts)):
        raise ValueError("blocks must partition the unfolded index set")
    if len(weights) != nverts:
        raise ValueError("need one weight per unfolded vertex")
    report = ConditionReport(passed=True)
    for bi, block_i in enumerate(blocks):
        for bj, block_j in enumerate(blocks):
            report.checked_pairs += 1
            b_entry = B.entries[bi][bj]
            b_sign = sgn(b_entry)
            for l in block_j:
                acc = None
                for k in block_i:
                    s_kl = rows[k][l]
                    if b_sign >= 0 and s_kl < 0:
                        report.failures.append(
                            {"block": (bi, bj), "kind": "sign", "entry": (k, l), "value": s_kl}
                        )
                    if s_kl:
                        term = weights[k] * s_kl
                        acc = term if acc is None else acc + term
                lhs = acc if acc is not None else 0 * b_entry
                rhs = b_entry * weights[l]
                if not _eq(lhs, rhs):
                    report.failures.append(
                        {
                            "block": (bi, bj),
                            "kind": "column-sum",
                            "column": l,
                            "actual": lhs,
                            "expected": rhs,
                        }
                    )
    report.passed = not report.failures
    return report


@dataclass
class UnfoldingReport:
    passed: bool
    words_checked: int
    failure_word: tuple | None = None
    failure_detail: object = None
    depth: int = 0
    random_words: int = 0
    seed: int | None = None

    def to_json(self):
        detail = None
        if self.failure_detail:
            kind = self.failure_detail[0]
            if kind == "sum":
                _, bi, bj, col, lhs, rhs = self.failure_detail
                detail = {
                    "kind": "column-sum",
                    "block": [bi, bj],
                    "column": col,
                    "actual": _enc(lhs),
                    "expected": _enc(rhs),
                }
            else:
                _, bi, bj, row, col, val = self.failure_detail
                detail = {
                    "kind": "sign",
                    "block": [bi, bj],
                    "entry": [row, col],
                    "actual": val,
                }
        return {
            "passed": self.passed,
            "words_checked": self.words_checked,
            "word": list(self.failure_word) if self.failure_word is not None else None,
            "failure": detail,
            "depth": self.depth,
            "random_words": self.random_words,
            "seed": self.seed,
        }


def check_weighted_unfolding(
    spec: FoldingSpec,
    sequences=None,
    depth: int = 6,
    random_words: int = 200,
    random_length: int = 20,
    seed: int = 0,
) -> UnfoldingReport:
    """Verify the defining property of a weighted unfolding along mutation words.

    With ``sequences`` given, exactly those words are checked.  Otherwise all
    words of length <= depth are checked exhaustively (as a prefix tree, so
    every prefix is also a checked word) plus ``random_words`` seeded random
    words of length ``random_length``.  Evidence is depth-bounded: the
    definition quantifies over all words, which no finite run certifies.
    """
    m_folded = spec.B.n
    counter = [0]

    def folded_target(B_current):
        if spec.rescaling is None:
            return B_current
        return rescale(B_current, spec.rescaling)

    def check(S_rows, B_current):
        counter[0] += 1
        return conditions_hold(S_rows, folded_target(B_current), spec.blocks, spec.weights)

    def step(S_rows, B_current, k):
        rows = S_rows
        for v in spec.blocks[k]:
            rows = mutate_entries(rows, v)
        return rows, B_current.mutate(k)

    ok, detail = check(spec.S.entries, spec.B)
    if not ok:
        return UnfoldingReport(False, counter[0], (), detail, depth, random_words, seed)

    if sequences is not None:
        for word in sequences:
            rows, B_cur = spec.S.entries, spec.B
            for pos, k in enumerate(word):
                rows, B_cur = step(rows, B_cur, k)
                ok, detail = check(rows, B_cur)
                if not ok:
                    return UnfoldingReport(
                        False, counter[0], tuple(word[: pos + 1]), detail
                    )
        return UnfoldingReport(True, counter[0])

    # exhaustive prefix tree
    def dfs(S_rows, B_current, word):
        if len(word) == depth:
            return None
        for k in range(m_folded):
            rows, B_cur = step(S_rows, B_current, k)
            ok, detail = check(rows, B_cur)
            if not ok:
                return word + (k,), detail
            bad = dfs(rows, B_cur, word + (k,))
            if bad is not None:
                return bad
        return None

    bad = dfs(spec.S.entries, spec.B, ())
    if bad is not None:
        return UnfoldingReport(False, counter[0], bad[0], bad[1], depth, random_words, seed)

    rng = random.Random(seed)
    for _ in range(random_words):
        rows, B_cur = spec.S.entries, spec.B
        word = []
        for _ in range(random_length):
            k = rng.randrange(m_folded)
            word.append(k)
            rows, B_cur = step(rows, B_cur, k)
            ok, detail = check(rows, B_cur)
            if not ok:
                return UnfoldingReport(
                    False, counter[0], tuple(word), detail, depth, random_words, seed
                )
    return UnfoldingReport(True, counter[0], None, None, depth, random_words, seed)


# ---------------------------------------------------------------------------
# standard foldings


def standard_folding(kind: str, n: int | None = None, opp: bool = False) -> FoldingSpec:
    """The foldings used throughout: H3, H4, I2 (odd, full categorical data),
    I2m (any dihedral order, unfolding data only) and the integer demo F4E6.
    """
    if kind == "H3":
        return _h_type_folding(3, opp)
    if kind == "H4":
        return _h_type_folding(4, opp)
    if kind == "I2":
        if n is None or n < 2:
            raise ValueError("I2 foldings need the rank parameter n >= 2 (type I2(2n+1))")
        return _i_type_folding(n, opp)
    if kind == "I2m":
        if n is None or n < 3:
            raise ValueError("I2m unfoldings need the dihedral order m >= 3")
        return _dihedral_unfolding(n, opp)
    if kind == "F4E6":
        return _f4_e6_demo(opp)
    raise ValueError(f"unknown folding kind {kind!r}")


def _h_type_folding(rank: int, opp: bool) -> FoldingSpec:
    """D6 -> H3 or E8 -> H4 with linear folded orientation [1] -> ... -> [rank].

    Each folded vertex unfolds to a pair (weight 1, weight phi); all blocks
    of S along the folded path are identity blocks except the last, which is
    the regular representation of theta_1.
    """
    m = 5
    one = AlgReal(m, (1,))
    phi = AlgReal.generator(m)
    zero = AlgReal(m)
    mprime = rank
    # folded matrix: path with weight 1 edges and a phi edge at the end
    Brows = [[zero] * mprime for _ in range(mprime)]
    for j in range(mprime - 1):
        w = phi if j == mprime - 2 else one
        Brows[j][j + 1] = w
        Brows[j + 1][j] = -w
    B = ExchangeMatrix(tuple(tuple(r) for r in Brows))

    blocks = tuple((2 * j, 2 * j + 1) for j in range(mprime))
    nverts = 2 * mprime
    Srows = [[0] * nverts for _ in range(nverts)]
    for j in range(mprime - 1):
        block_mat = rho(ChebElem.theta(2, 1)) if j == mprime - 2 else rho(ChebElem.one(2))
        for a in range(2):
            for b in range(2):
                v = block_mat[a][b]
                Srows[blocks[j][a]][blocks[j + 1][b]] = v
                Srows[blocks[j + 1][b]][blocks[j][a]] = -v
    S = ExchangeMatrix(tuple(tuple(r) for r in Srows))
    labels = tuple(
        x for j in range(mprime) for x in (f"{j + 1}", f"p{j + 1}")
    )
    spec = FoldingSpec(
        kind=f"H{rank}",
        S=-S if opp else S,
        B=-B if opp else B,
        blocks=blocks,
        weights=tuple(w for _ in range(mprime) for w in (one, phi)),
        labels=labels,
        folded_labels=tuple(f"[{j + 1}]" for j in range(mprime)),
        n=2,
        m=m,
        kappa=tuple(k for _ in range(mprime) for k in (0, 1)),
    )
    return spec


def _i_type_folding(n: int, opp: bool) -> FoldingSpec:
    """Bipartite A_{2n} -> I2(2n+1): even vertices are sources, vw(i) = U_i."""
    m = 2 * n + 1
    nverts = 2 * n
    Srows = [[0] * nverts for _ in range(nverts)]
    for i in range(0, nverts, 2):
        for j in (i - 1, i + 1):
            if 0 <= j < nverts:
                Srows[i][j] = 1
                Srows[j][i] = -1
    S = ExchangeMatrix(tuple(tuple(r) for r in Srows))
    gen = AlgReal.generator(m)
    zero = AlgReal(m)
    B = ExchangeMatrix(((zero, gen), (-gen, zero)))
    # theta-index of vertex i is min(i, 2n-1-i); blocks sorted by it
    kappa = tuple(min(i, nverts - 1 - i) for i in range(nverts))
    evens = tuple(sorted(range(0, nverts, 2), key=lambda i: kappa[i]))
    odds = tuple(sorted(range(1, nverts, 2), key=lambda i: kappa[i]))
    weights = tuple(AlgReal.chebyshev(m, i) for i in range(nverts))
    return FoldingSpec(
        kind=f"I2({m})",
        S=-S if opp else S,
        B=-B if opp else B,
        blocks=(evens, odds),
        weights=weights,
        labels=tuple(str(i) for i in range(nverts)),
        folded_labels=("[0]", "[1]"),
        n=n,
        m=m,
        kappa=kappa,
    )


def _dihedral_unfolding(m: int, opp: bool) -> FoldingSpec:
    """A_{m-1} unfolding of the I2(m) matrix, any m >= 3 (unfolding data only).

    Uses the alternating orientation of the worked examples (odd vertices are
    sources in zero-based labels), with weights U_i(cos pi/m).
    """
    nverts = m - 1
    Srows = [[0] * nverts for _ in range(nverts)]
    for i in range(1, nverts, 2):
        for j in (i - 1, i + 1):
            if 0 <= j < nverts:
                Srows[i][j] = 1
                Srows[j][i] = -1
    S = ExchangeMatrix(tuple(tuple(r) for r in Srows))
    gen = AlgReal.generator(m)
    zero = AlgReal(m)
    B = ExchangeMatrix(((zero, -gen), (gen, zero)))
    evens = tuple(range(0, nverts, 2))
    odds = tuple(range(1, nverts, 2))
    weights = tuple(AlgReal.chebyshev(m, i) for i in range(nverts))
    return FoldingSpec(
        kind=f"I2({m})-unfolding",
        S=-S if opp else S,
        B=-B if opp else B,
        blocks=(evens, odds),
        weights=weights,
        labels=tuple(str(i) for i in range(nverts)),
        folded_labels=("[0]", "[1]"),
        n=None,
        m=m,
        kappa=None,
    )


def _f4_e6_demo(opp: bool) -> FoldingSpec:
    B = ExchangeMatrix(
        [
            (0, -1, 0, 0),
            (1, 0, -1, 0),
            (0, 2, 0, -1),
            (0, 0, 1, 0),
        ]
    )
    S = ExchangeMatrix(
        [
            (0, -1, 0, 0, 0, 0),
            (1, 0, -1, -1, 0, 0),
            (0, 1, 0, 0, -1, 0),
            (0, 1, 0, 0, 0, -1),
            (0, 0, 1, 0, 0, 0),
            (0, 0, 0, 1, 0, 0),
        ]
    )
    return FoldingSpec(
        kind="F4E6",
        S=-S if opp else S,
        B=-B if opp else B,
        blocks=((0,), (1,), (2, 3), (4, 5)),
        weights=(1, 1, 1, 1, 1, 1),
        labels=tuple(str(i + 1) for i in range(6)),
        folded_labels=tuple(f"[{j + 1}]" for j in range(4)),
    )


def build_unfolded_matrix(B: ExchangeMatrix, n: int) -> ExchangeMatrix:
    """Assemble the integer unfolding of B by regular-representation blocks.

    Every entry of B must be 0, +-1 or +-2cos(pi/(2n+1)); the (i, j) block of
    the result is the n x n matrix of multiplication by the lifted entry.
    """
    m = 2 * n + 1
    lifts = {
        AlgReal(m): ChebElem.zero(n),
        AlgReal(m, (1,)): ChebElem.one(n),
        AlgReal(m, (-1,)): -ChebElem.one(n),
        AlgReal.generator(m): ChebElem.theta(n, 1),
        -AlgReal.generator(m): -ChebElem.theta(n, 1),
    }
    mprime = B.n
    nverts = n * mprime
    rows = [[0] * nverts for _ in range(nverts)]
    for bi in range(mprime):
        for bj in range(mprime):
            entry = B.entries[bi][bj]
            if isinstance(entry, int):
                entry = AlgReal(m, (entry,))
            lift = lifts.get(entry)
            if lift is None:
                raise ValueError(f"entry {entry!r} is not liftable to {{0, +-1, +-theta_1}}")
            block = rho(lift)
            for a in range(n):
                for b in range(n):
                    rows[bi * n + a][bj * n + b] = block[a][b]
    out = ExchangeMatrix(tuple(tuple(r) for r in rows))
    if not out.is_skew_symmetric():
        raise ValueError("lifted matrix is not skew-symmetric; B was not skew-symmetric")
    return out
