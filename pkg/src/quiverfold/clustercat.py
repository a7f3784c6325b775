"""Cluster category of an unfolded quiver at the iso-class level.

Indecomposables are the modules of the unfolded quiver together with one
shifted projective per vertex.  Morphism and extension dimensions are
assembled from module-level hammock data through the orbit formula, so the
whole layer stays exact integer combinatorics.  On top of that sit the
semiring-compatible rigidity notion, enumeration and mutation of tilting
objects built from generator columns, and the two kinds of g-vectors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chebring import AlgReal, ChebElem, sigma
from .exchange import ExchangeMatrix
from .repcat import FoldedCategory
from .unfolding import FoldingSpec


@dataclass(frozen=True)
class ClusterInd:
    """Module (shift is None) or shifted projective (shift = vertex)."""

    ident: int
    module: int | None
    shifted_vertex: int | None


class ClusterCategory:
    def __init__(self, spec: FoldingSpec):
        self.spec = spec
        self.mc = FoldedCategory(spec)
        self.nverts = spec.S.n
        self.nmod = len(self.mc.ar.modules)
        self.size = self.nmod + self.nverts
        self._tau = tuple(self._compute_tau(x) for x in range(self.size))
        self._hom = None
        self._ext = None
        self._pair_cache: dict[tuple[int, int], bool] = {}
        self._build_generators()

    # -- object bookkeeping ------------------------------------------------
    def shift_ident(self, vertex: int) -> int:
        return self.nmod + vertex

    def is_shift(self, x: int) -> bool:
        return x >= self.nmod

    def describe(self, x: int) -> str:
        if self.is_shift(x):
            v = x - self.nmod
            return f"S.P({self.spec.labels[v] if self.spec.labels else v})"
        mod = self.mc.ar.modules[x]
        return "M" + "".join(str(c) for c in mod.dim)

    def indecomposables(self) -> tuple:
        return tuple(range(self.size))

    # -- translation ---------------------------------------------------------
    def _compute_tau(self, x: int) -> int:
        ar = self.mc.ar
        if self.is_shift(x):
            v = x - self.nmod
            return ar.inj_module[self.mc.nakayama_partner(v)]
        t = ar.tau(x)
        if t is not None:
            return t
        return self.shift_ident(ar.modules[x].proj_vertex)

    def tau(self, x: int) -> int:
        return self._tau[x]

    # -- morphism spaces -------------------------------------------------------
    def hom(self, x: int, y: int) -> int:
        if self._hom is None:
            self._fill_tables()
        return self._hom[x][y]

    def ext(self, x: int, y: int) -> int:
        """dim Hom(x, tau y): the rigidity pairing of the cluster category."""
        if self._ext is None:
            self._fill_tables()
        return self._ext[x][y]

    def _fill_tables(self):
        ar = self.mc.ar
        size = self.size

        def hom_c(x, y):
            if self.is_shift(x):
                v = x - self.nmod
                if self.is_shift(y):
                    return ar.hom(ar.proj_module[v], ar.proj_module[y - self.nmod])
                ty = ar.tau_inv(y)
                if ty is None:
                    return 0
                return ar.hom(ar.proj_module[v], ty)
            if self.is_shift(y):
                w = y - self.nmod
                return ar.ext(x, ar.proj_module[w])
            total = ar.hom(x, y)
            ty = ar.tau_inv(y)
            if ty is not None:
                total += ar.ext(x, ty)
            return total

        self._hom = tuple(tuple(hom_c(x, y) for y in range(size)) for x in range(size))
        self._ext = tuple(
            tuple(self._hom[x][self._tau[y]] for y in range(size)) for x in range(size)
        )
        for x in range(size):
            for y in range(size):
                if (self._ext[x][y] == 0) != (self._ext[y][x] == 0):
                    raise AssertionError("extension vanishing must be symmetric")

    # -- generators and iso-sets ------------------------------------------------
    def _build_generators(self):
        spec, mc = self.spec, self.mc
        gens = list(mc.generators)
        self._module_gen_count = len(gens)
        for block in spec.blocks:
            rep = block[0]
            # projectives of one block form one column, with matching indices
            alpha = mc.factor[mc.ar.proj_module[rep]][1]
            for v in block:
                j, a = mc.factor[mc.ar.proj_module[v]]
                if a != alpha or (spec.kappa and j != spec.kappa[v]):
                    raise AssertionError("projective block does not form a column")
            gens.append(self.shift_ident(rep))
        self.generators = tuple(gens)
        iso = {}
        theta_idx = {}
        for g in mc.generators:
            iso[g] = mc.iso_set(g)
            for x in iso[g]:
                theta_idx[x] = mc.theta_index(x)
        for block in spec.blocks:
            g = self.shift_ident(block[0])
            iso[g] = tuple(self.shift_ident(v) for v in block)
            for k, v in enumerate(block):
                theta_idx[self.shift_ident(v)] = k
        self.iso_sets = iso
        self.theta_idx = theta_idx
        self.gen_of = {}
        for g, members in iso.items():
            for x in members:
                self.gen_of[x] = g

    def hat(self, summands) -> tuple:
        out = []
        for g in summands:
            out.extend(self.iso_sets[g])
        return tuple(sorted(out))

    # -- rigidity ----------------------------------------------------------------
    def pair_rigid(self, g1: int, g2: int) -> bool:
        key = (g1, g2) if g1 <= g2 else (g2, g1)
        cached = self._pair_cache.get(key)
        if cached is not None:
            return cached
        ok = True
        for z1 in self.iso_sets[g1]:
            for z2 in self.iso_sets[g2]:
                if self.ext(z1, z2) or self.ext(z2, z1):
                    ok = False
                    break
            if not ok:
                break
        self._pair_cache[key] = ok
        return ok

    def is_rigid_set(self, summands) -> bool:
        summands = tuple(summands)
        for a in range(len(summands)):
            for b in range(a, len(summands)):
                if not self.pair_rigid(summands[a], summands[b]):
                    return False
        return True

    def compatibility(self):
        """Adjacency of the rigidity graph on generator columns."""
        gens = self.generators
        for g in gens:
            if not self.pair_rigid(g, g):
                raise AssertionError("generator columns must be self-rigid")
        adj = {g: set() for g in gens}
        for i, g1 in enumerate(gens):
            for g2 in gens[i + 1:]:
                if self.pair_rigid(g1, g2):
                    adj[g1].add(g2)
                    adj[g2].add(g1)
        return adj

    # -- tilting objects -----------------------------------------------------------
    def tilting_rank(self) -> int:
        return self.spec.B.n

    def enumerate_tilting(self) -> tuple:
        """All maximal rigid generator sets; each must have the folded rank."""
        adj = self.compatibility()
        gens = sorted(self.generators)
        rank = self.tilting_rank()
        out = []

        def extend(clique, candidates):
            if len(clique) == rank:
                for g in gens:
                    if g not in clique and all(g in adj[c] for c in clique):
                        raise AssertionError("rank-size rigid set failed maximality")
                out.append(tuple(clique))
                return
            for idx, g in enumerate(candidates):
                extend(clique + [g], [h for h in candidates[idx + 1:] if h in adj[g]])

        extend([], gens)
        for t in out:
            hat = self.hat(t)
            if len(hat) != self.nverts:
                raise AssertionError("hat object must have one summand per vertex")
        return tuple(out)

    def is_classical_tilting(self, objects) -> bool:
        """Basic rigid and maximal among all cluster indecomposables."""
        objs = tuple(sorted(objects))
        if len(set(objs)) != len(objs):
            return False
        for a in objs:
            for b in objs:
                if self.ext(a, b):
                    return False
        inside = set(objs)
        for x in range(self.size):
            if x in inside:
                continue
            if all(self.ext(x, t) == 0 and self.ext(t, x) == 0 for t in objs):
                return False
        return True

    def complements(self, almost) -> tuple:
        """The completions of an almost complete rigid generator set."""
        almost = tuple(almost)
        if not self.is_rigid_set(almost):
            raise ValueError("input is not rigid")
        found = []
        for g in self.generators:
            if g in almost:
                continue
            if all(self.pair_rigid(g, t) for t in almost) and self.pair_rigid(g, g):
                found.append(g)
        if len(found) != 2:
            raise AssertionError(
                f"almost complete object has {len(found)} complements, expected 2"
            )
        return tuple(found)

    def initial_tilting(self) -> tuple:
        """The projectives at weight-1 vertices, ordered by folded vertex."""
        return tuple(self.mc.ar.proj_module[block[0]] for block in self.spec.blocks)

    def mutate_tilting(self, summands, k: int, folded: ExchangeMatrix):
        """Swap summand k for the other complement; mutate the folded matrix."""
        summands = tuple(summands)
        rest = summands[:k] + summands[k + 1:]
        comps = self.complements(rest)
        if summands[k] not in comps:
            raise ValueError("summand is not a complement of the rest")
        other = comps[0] if comps[1] == summands[k] else comps[1]
        return summands[:k] + (other,) + summands[k + 1:], folded.mutate(k)

    def exchange_graph(self):
        """BFS over tilting objects; verifies the folded matrix is path-free.

        Returns (nodes, edges) where nodes maps the frozen summand set to its
        folded exchange matrix keyed by a sorted summand order.
        """
        start = self.initial_tilting()
        rank = len(start)
        nodes = {}
        edges = set()

        def aligned(summands, folded):
            order = sorted(range(rank), key=lambda i: summands[i])
            return tuple(
                tuple(folded.entries[order[i]][order[j]] for j in range(rank))
                for i in range(rank)
            )

        frontier = [(start, self.spec.B)]
        nodes[frozenset(start)] = aligned(start, self.spec.B)
        while frontier:
            new = []
            for summands, folded in frontier:
                key = frozenset(summands)
                for k in range(rank):
                    nxt, nxt_folded = self.mutate_tilting(summands, k, folded)
                    nkey = frozenset(nxt)
                    edges.add(frozenset((key, nkey)))
                    ali = aligned(nxt, nxt_folded)
                    if nkey not in nodes:
                        nodes[nkey] = ali
                        new.append((nxt, nxt_folded))
                    elif nodes[nkey] != ali:
                        raise AssertionError("folded matrix depends on the mutation path")
            frontier = new
        return nodes, edges

    # -- g-vectors -------------------------------------------------------------------
    def g_vector(self, x: int) -> tuple:
        """Integer g-vector over the unfolded vertices."""
        ar = self.mc.ar
        if self.is_shift(x):
            v = x - self.nmod
            return tuple(-1 if w == v else 0 for w in range(self.nverts))
        a, b = self._presentation(x)
        return tuple(ai - bi for ai, bi in zip(a, b))

    def _presentation(self, module: int):
        """Multiplicities (P0, P1) of the minimal projective presentation."""
        ar = self.mc.ar
        tops = tuple(ar.hom(module, ar.simple_module[v]) for v in range(self.nverts))
        target = [0] * self.nverts
        for v, mult in enumerate(tops):
            if mult:
                for t, c in enumerate(ar.proj_dims[v]):
                    target[t] += mult * c
        for t, c in enumerate(ar.modules[module].dim):
            target[t] -= c
        b = [0] * self.nverts
        for v in ar._topo:
            need = target[v] - sum(
                b[w] * ar.proj_dims[w][v] for w in range(self.nverts) if w != v
            )
            if need < 0 or target[v] < 0:
                raise AssertionError("projective presentation solve failed")
            b[v] = need
        check = [0] * self.nverts
        for v, mult in enumerate(b):
            for t, c in enumerate(ar.proj_dims[v]):
                check[t] += mult * c
        if check != target:
            raise AssertionError("projective presentation solve failed")
        return tops, tuple(b)

    def g_vector_folded(self, x: int) -> tuple:
        """Folded g-vector via the grouped Chebyshev presentation."""
        spec = self.spec
        n = self.mc.n
        if self.is_shift(x):
            v = x - self.nmod
            a = (0,) * self.nverts
            b = tuple(1 if w == v else 0 for w in range(self.nverts))
        else:
            a, b = self._presentation(x)
        out = []
        for block in spec.blocks:
            r = ChebElem.zero(n)
            s = ChebElem.zero(n)
            for pos, v in enumerate(block):
                if a[v]:
                    r = r + a[v] * ChebElem.theta(n, pos)
                if b[v]:
                    s = s + b[v] * ChebElem.theta(n, pos)
            out.append(sigma(r) - sigma(s))
        return tuple(out)

    def tilting_G_matrices(self, summands):
        """(integer G of the hat object, folded G of the tilting object).

        Columns of the integer matrix are indexed by unfolded vertices: the
        column at vertex v is the g-vector of the column member of the
        summand over F(v) with Chebyshev index kappa(v).
        """
        spec = self.spec
        cols = [None] * self.nverts
        for j, g in enumerate(summands):
            members = self.iso_sets[g]
            for pos, v in enumerate(spec.blocks[j]):
                cols[v] = self.g_vector(members[pos])
        G_hat = tuple(tuple(cols[v][w] for v in range(self.nverts)) for w in range(self.nverts))
        G_prime = tuple(
            tuple(self.g_vector_folded(g)[i] for g in summands)
            for i in range(len(summands))
        )
        return G_hat, G_prime
