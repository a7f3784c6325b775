"""Auslander-Reiten quivers of the unfolded Dynkin quivers and the folded
structure they carry.

``ARQuiver`` knits the AR quiver of an acyclic simply-laced Dynkin
orientation from its projectives: modules are identified with their
dimension vectors, arranged on a grid (orbit, slice) where slice 0 holds
the projectives and each further slice applies the inverse translate by
the mesh rule.  Hom dimensions come from forward hammock recursions and
Ext from the translate formula, so no linear algebra over the base field
is ever needed.

``FoldedCategory`` adds the data of a weighted folding: projected
dimension vectors, the factorization of every indecomposable as a
Chebyshev multiple of a generator, the semiring action on iso-class
multisets, minimal generator sets, the reduced AR quiver, and the
theorem-level verification report.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chebring import AlgReal, ChebElem, cheb_mul, sigma
from .rootsys import root_system
from .unfolding import FoldingSpec


@dataclass(frozen=True)
class IndecClass:
    """An indecomposable, identified by its dimension vector and grid spot."""

    ident: int
    dim: tuple
    orbit: int
    slice: int
    proj_vertex: int | None
    inj_vertex: int | None


class ARQuiver:
    def __init__(self, nvertices: int, arrows):
        self.nvertices = nvertices
        self.arrows = tuple(arrows)
        out_adj = [[] for _ in range(nvertices)]
        in_adj = [[] for _ in range(nvertices)]
        for i, j in self.arrows:
            out_adj[i].append(j)
            in_adj[j].append(i)
        self.out_adj = out_adj
        self.in_adj = in_adj
        self._topo = self._toposort()
        self._rpos = {v: k for k, v in enumerate(reversed(self._topo))}
        self.proj_dims = tuple(self._paths_from(v) for v in range(nvertices))
        self.inj_dims = tuple(self._paths_to(v) for v in range(nvertices))
        self._knit()
        self._hom_cache = {}

    # -- underlying quiver helpers --------------------------------------
    def _toposort(self):
        indeg = [len(self.in_adj[v]) for v in range(self.nvertices)]
        stack = sorted(v for v in range(self.nvertices) if indeg[v] == 0)
        order = []
        while stack:
            v = stack.pop()
            order.append(v)
            for w in self.out_adj[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    stack.append(w)
        if len(order) != self.nvertices:
            raise ValueError("quiver must be acyclic")
        return order

    def _paths_from(self, v):
        counts = [0] * self.nvertices
        counts[v] = 1
        for w in self._topo:
            if counts[w]:
                for u in self.out_adj[w]:
                    counts[u] += counts[w]
        return tuple(counts)

    def _paths_to(self, v):
        counts = [0] * self.nvertices
        counts[v] = 1
        for w in reversed(self._topo):
            if counts[w]:
                for u in self.in_adj[w]:
                    counts[u] += counts[w]
        return tuple(counts)

    # -- knitting --------------------------------------------------------
    def _knit(self):
        inj_lookup = {self.inj_dims[v]: v for v in range(self.nvertices)}
        if len(inj_lookup) != self.nvertices:
            raise AssertionError("injective dimension vectors must be distinct")
        modules: list[IndecClass] = []
        grid: dict[tuple[int, int], int] = {}

        def add(orbit, m, dim):
            ident = len(modules)
            modules.append(
                IndecClass(
                    ident,
                    dim,
                    orbit,
                    m,
                    proj_vertex=orbit if m == 0 else None,
                    inj_vertex=inj_lookup.get(dim),
                )
            )
            grid[(orbit, m)] = ident

        for v in range(self.nvertices):
            add(v, 0, self.proj_dims[v])

        order = list(reversed(self._topo))  # sinks first
        m = 1
        while True:
            added = False
            for i in order:
                prev = grid.get((i, m - 1))
                if prev is None or modules[prev].inj_vertex is not None:
                    continue
                dim = [-c for c in modules[prev].dim]
                for j in self.out_adj[i]:
                    nxt = grid.get((j, m))
                    if nxt is None:
                        raise AssertionError("mesh neighbour missing during knitting")
                    for t, c in enumerate(modules[nxt].dim):
                        dim[t] += c
                for j in self.in_adj[i]:
                    prv = grid.get((j, m - 1))
                    if prv is None:
                        raise AssertionError("mesh neighbour missing during knitting")
                    for t, c in enumerate(modules[prv].dim):
                        dim[t] += c
                if any(c < 0 for c in dim) or not any(dim):
                    raise AssertionError("knitting produced a non-positive vector")
                add(i, m, tuple(dim))
                added = True
            if not added:
                break
            m += 1

        matched = [mod for mod in modules if mod.inj_vertex is not None]
        if len(matched) != self.nvertices:
            raise AssertionError("every tau-orbit must end at a distinct injective")
        self.modules = tuple(modules)
        self.grid = grid
        self.proj_module = {v: grid[(v, 0)] for v in range(self.nvertices)}
        self.inj_module = {
            mod.inj_vertex: mod.ident for mod in modules if mod.inj_vertex is not None
        }
        self.simple_module = {}
        for mod in modules:
            if sum(mod.dim) == 1:
                self.simple_module[mod.dim.index(1)] = mod.ident
        self.dim_lookup = {mod.dim: mod.ident for mod in modules}
        if len(self.dim_lookup) != len(modules):
            raise AssertionError("dimension vectors must be pairwise distinct")

        ar_arrows = []
        for (i, m), ident in grid.items():
            for j in self.in_adj[i]:  # Q-arrow j -> i gives (i,m) -> (j,m)
                tgt = grid.get((j, m))
                if tgt is not None:
                    ar_arrows.append((ident, tgt))
            for j in self.out_adj[i]:  # Q-arrow i -> j gives (i,m) -> (j,m+1)
                tgt = grid.get((j, m + 1))
                if tgt is not None:
                    ar_arrows.append((ident, tgt))
        self.ar_arrows = tuple(sorted(ar_arrows))
        self.ar_in = [[] for _ in modules]
        self.ar_out = [[] for _ in modules]
        for src, tgt in self.ar_arrows:
            self.ar_out[src].append(tgt)
            self.ar_in[tgt].append(src)
        self.ar_order = sorted(
            range(len(modules)),
            key=lambda ident: (modules[ident].slice, self._rpos[modules[ident].orbit]),
        )
        self._check_meshes()

    def _check_meshes(self):
        for mod in self.modules:
            prev = self.tau(mod.ident)
            if prev is None:
                continue
            total = [c for c in self.modules[prev].dim]
            for t, c in enumerate(mod.dim):
                total[t] += c
            middle = [0] * self.nvertices
            for src in self.ar_in[mod.ident]:
                for t, c in enumerate(self.modules[src].dim):
                    middle[t] += c
            if middle != total:
                raise AssertionError(f"mesh additivity fails at module {mod.ident}")

    # -- translates ------------------------------------------------------
    def tau(self, ident: int) -> int | None:
        mod = self.modules[ident]
        return self.grid.get((mod.orbit, mod.slice - 1))

    def tau_inv(self, ident: int) -> int | None:
        mod = self.modules[ident]
        return self.grid.get((mod.orbit, mod.slice + 1))

    def tau_power(self, ident: int, power: int) -> int | None:
        mod = self.modules[ident]
        return self.grid.get((mod.orbit, mod.slice - power))

    def is_projective(self, ident: int) -> bool:
        return self.modules[ident].slice == 0

    def is_injective(self, ident: int) -> bool:
        return self.modules[ident].inj_vertex is not None

    # -- hom / ext --------------------------------------------------------
    def hom_row(self, source: int):
        """dim Hom(source, Z) for every Z, by the forward hammock recursion."""
        row = self._hom_cache.get(source)
        if row is not None:
            return row
        h = [0] * len(self.modules)
        for ident in self.ar_order:
            acc = 1 if ident == source else 0
            for pred in self.ar_in[ident]:
                acc += h[pred]
            prev = self.tau(ident)
            if prev is not None:
                acc -= h[prev]
            if acc < 0:
                raise AssertionError("hammock recursion went negative")
            h[ident] = acc
        row = tuple(h)
        self._hom_cache[source] = row
        return row

    def hom(self, a: int, b: int) -> int:
        return self.hom_row(a)[b]

    def ext(self, a: int, b: int) -> int:
        """dim Ext^1(a, b) = dim Hom(b, tau a); zero for projective a."""
        ta = self.tau(a)
        if ta is None:
            return 0
        return self.hom_row(b)[ta]

    def euler_form(self, d, e) -> int:
        total = sum(di * ei for di, ei in zip(d, e))
        for i, j in self.arrows:
            total -= d[i] * e[j]
        return total


# ---------------------------------------------------------------------------
# folding-aware layer


def quiver_arrows_from_matrix(S) -> tuple:
    arrows = []
    for i in range(S.n):
        for j in range(S.n):
            v = S.entries[i][j]
            if v > 0:
                if v != 1:
                    raise ValueError("unfolded matrices must have entries in {-1, 0, 1}")
                arrows.append((i, j))
    return tuple(arrows)


def folded_type_name(spec: FoldingSpec) -> str:
    if spec.kind in ("H3", "H4"):
        return spec.kind
    if spec.kind.startswith("I2(") and spec.n is not None:
        return f"I2({spec.m})"
    raise ValueError(f"folding {spec.kind!r} has no categorical layer")


class FoldedCategory:
    """Module category of the unfolded quiver with its folding structure."""

    def __init__(self, spec: FoldingSpec):
        if spec.n is None:
            raise ValueError("categorical layer needs a Chebyshev folding")
        self.spec = spec
        self.ar = ARQuiver(spec.S.n, quiver_arrows_from_matrix(spec.S))
        self.roots = root_system(folded_type_name(spec))
        self.n = spec.n
        self.m = spec.m
        self._build_projections()

    def _build_projections(self):
        spec, ar = self.spec, self.ar
        self.dimproj = tuple(spec.d_F(mod.dim) for mod in ar.modules)
        lookup = {}
        for alpha in self.roots.positives:
            for j in range(self.n):
                scale = AlgReal.chebyshev(self.m, j)
                vec = tuple(scale * c for c in alpha)
                if vec in lookup:
                    raise AssertionError("Chebyshev multiples of distinct roots collide")
                lookup[vec] = (j, alpha)
        factor = []
        for ident, vec in enumerate(self.dimproj):
            hit = lookup.get(vec)
            if hit is None:
                raise AssertionError(
                    f"projected vector of module {ident} is not a Chebyshev multiple of a root"
                )
            factor.append(hit)
        self.factor = tuple(factor)
        columns: dict[tuple, dict[int, int]] = {}
        for ident, (j, alpha) in enumerate(self.factor):
            columns.setdefault(alpha, {})[j] = ident
        for alpha, col in columns.items():
            if sorted(col) != list(range(self.n)):
                raise AssertionError("each root column must carry indices 0..n-1 once")
        self.columns = {alpha: tuple(col[j] for j in range(self.n)) for alpha, col in columns.items()}
        self.generators = tuple(
            ident for ident, (j, _) in enumerate(self.factor) if j == 0
        )

    # -- semiring action on iso-class multisets ---------------------------
    def theta_index(self, ident: int) -> int:
        return self.factor[ident][0]

    def column_of(self, ident: int) -> tuple:
        return self.columns[self.factor[ident][1]]

    def iso_set(self, generator: int) -> tuple:
        """The indecomposables generated from a generator: its column."""
        if self.factor[generator][0] != 0:
            raise ValueError("iso-sets are indexed by generators (index-0 members)")
        return self.column_of(generator)

    def semiring_act(self, r: ChebElem, ident: int) -> dict[int, int]:
        """Multiset of indecomposables r . M, by the Chebyshev product rule."""
        if r.n != self.n:
            raise ValueError("semiring rank mismatch")
        if not r.in_semiring():
            raise ValueError("action is defined for the nonnegative cone only")
        j, alpha = self.factor[ident]
        expansion = cheb_mul(r, ChebElem.theta(self.n, j))
        column = self.columns[alpha]
        return {column[k]: c for k, c in enumerate(expansion.coeffs) if c}

    def act_on_multiset(self, r: ChebElem, multiset: dict[int, int]) -> dict[int, int]:
        out: dict[int, int] = {}
        for ident, mult in multiset.items():
            for k, c in self.semiring_act(r, ident).items():
                out[k] = out.get(k, 0) + mult * c
        return {k: v for k, v in sorted(out.items()) if v}

    def dimproj_of_multiset(self, multiset: dict[int, int]) -> tuple:
        acc = None
        for ident, mult in multiset.items():
            term = tuple(c * mult for c in self.dimproj[ident])
            acc = term if acc is None else tuple(a + t for a, t in zip(acc, term))
        return acc

    # -- generators and the reduced AR quiver ------------------------------
    def minimal_generators(self) -> tuple:
        return self.generators

    def reduced_ar_quiver(self):
        """Vertices: generators; valued arrows (r1, r2) from column membership."""
        gens = set(self.generators)
        member_of = {}
        for g in self.generators:
            for ident in self.iso_set(g):
                member_of[ident] = g
        arrows = {}
        for g1 in self.generators:
            iso1 = set(self.iso_set(g1))
            for g2 in self.generators:
                if g1 == g2:
                    continue
                r1 = ChebElem.zero(self.n)
                for src in self.ar.ar_in[g2]:
                    if src in iso1:
                        r1 = r1 + ChebElem.theta(self.n, self.theta_index(src))
                r2 = ChebElem.zero(self.n)
                iso2 = set(self.iso_set(g2))
                for tgt in self.ar.ar_out[g1]:
                    if tgt in iso2:
                        r2 = r2 + ChebElem.theta(self.n, self.theta_index(tgt))
                if not r1.is_zero() and not r2.is_zero():
                    arrows[(g1, g2)] = (r1, r2)
        tau = {}
        for g in self.generators:
            t = self.ar.tau(g)
            if t is not None:
                if t not in gens:
                    raise AssertionError("translate of a generator left the generator set")
                tau[g] = t
        return {"vertices": self.generators, "arrows": arrows, "tau": tau}

    # -- theorem-level verification ----------------------------------------
    def weight_one_vertices(self) -> tuple:
        return tuple(
            v for v in range(self.spec.S.n) if _is_one(self.spec.weights[v])
        )

    def verify_folding_theorem(self) -> dict:
        """Projected dimension vectors: root rows, weight swaps, factorization."""
        spec, ar = self.spec, self.ar
        report = {"passed": True, "problems": []}

        # (a) rows of weight-1 injectives project onto positive roots
        root_hits = set()
        for v in self.weight_one_vertices():
            ident = ar.inj_module[v]
            orbit = ar.modules[ident].orbit
            for mod in ar.modules:
                if mod.orbit != orbit:
                    continue
                j, alpha = self.factor[mod.ident]
                if j != 0:
                    report["passed"] = False
                    report["problems"].append(("row-not-root", v, mod.ident))
                else:
                    root_hits.add(alpha)
        report["weight_one_row_roots"] = len(root_hits)
        report["positive_roots"] = len(self.roots.positives)
        if len(root_hits) != len(self.roots.positives):
            report["passed"] = False
            report["problems"].append(("roots-not-exhausted",))

        # (b) the weight-swap identity along all translate powers
        for block in spec.blocks:
            for a in block:
                for b in block:
                    if a >= b:
                        continue
                    oa = ar.modules[ar.inj_module[a]].orbit
                    ob = ar.modules[ar.inj_module[b]].orbit
                    la = ar.modules[ar.inj_module[a]].slice
                    lb = ar.modules[ar.inj_module[b]].slice
                    if la != lb:
                        report["passed"] = False
                        report["problems"].append(("row-length-mismatch", a, b))
                        continue
                    for power in range(la + 1):
                        ia = ar.grid[(oa, la - power)]
                        ib = ar.grid[(ob, lb - power)]
                        va = self.dimproj[ia]
                        vb = self.dimproj[ib]
                        wa, wb = spec.weights[a], spec.weights[b]
                        if any(wb * x != wa * y for x, y in zip(va, vb)):
                            report["passed"] = False
                            report["problems"].append(("weight-swap", a, b, power))

        # (c) unique factorization held at construction; count per index
        counts = [0] * self.n
        for j, _ in self.factor:
            counts[j] += 1
        report["factor_counts"] = tuple(counts)
        return report

    # -- derived shifts -----------------------------------------------------
    def nakayama_partner(self, vertex: int) -> int:
        """The injective index j with tau_D(Sigma^k P(i)) = Sigma^(k-1) I(j).

        This is the same vertex: the derived translate is the shift composed
        with the Nakayama functor, which pairs P(i) with I(i).
        """
        return vertex

    def derived_tau(self, obj):
        """tau on formal shifts (k, module): stays in degree k off projectives."""
        k, ident = obj
        t = self.ar.tau(ident)
        if t is not None:
            return (k, t)
        v = self.ar.modules[ident].proj_vertex
        return (k - 1, self.ar.inj_module[self.nakayama_partner(v)])

    def derdim(self, obj) -> tuple:
        k, ident = obj
        vec = self.dimproj[ident]
        return vec if k % 2 == 0 else tuple(-c for c in vec)

    def derived_objects(self, degrees) -> tuple:
        return tuple((k, mod.ident) for k in degrees for mod in self.ar.modules)

    # -- exports -------------------------------------------------------------
    def dimproj_str(self, ident: int) -> str:
        return "(" + ", ".join(_pretty(c) for c in self.dimproj[ident]) + ")"

    def ar_dot(self, name="arquiver") -> str:
        lines = [f"digraph {name} {{", "  rankdir=LR;"]
        for mod in self.ar.modules:
            dims = "".join(str(c) for c in mod.dim)
            lines.append(
                f'  m{mod.ident} [label="{dims}\\n{self.dimproj_str(mod.ident)}"'
                f' pos="{mod.slice},{mod.orbit}"];'
            )
        for src, tgt in self.ar.ar_arrows:
            lines.append(f"  m{src} -> m{tgt};")
        lines.append("}")
        return "\n".join(lines)

    def reduced_dot(self, name="reduced") -> str:
        data = self.reduced_ar_quiver()
        lines = [f"digraph {name} {{", "  rankdir=LR;"]
        for g in data["vertices"]:
            lines.append(f'  g{g} [label="{self.dimproj_str(g)}"];')
        for (g1, g2), (r1, r2) in sorted(data["arrows"].items()):
            lines.append(f'  g{g1} -> g{g2} [label="({r1!r}, {r2!r})"];')
        lines.append("}")
        return "\n".join(lines)


def _is_one(w) -> bool:
    if isinstance(w, AlgReal):
        return w == 1
    return w == 1


def _pretty(c) -> str:
    if isinstance(c, AlgReal):
        return f"{float(c):.4g}"
    return str(c)


def hom_ext_tables(ar: ARQuiver):
    """Full (hom, ext) tables as tuples of rows."""
    hom = tuple(ar.hom_row(a) for a in range(len(ar.modules)))
    ext = tuple(
        tuple(ar.ext(a, b) for b in range(len(ar.modules))) for a in range(len(ar.modules))
    )
    return hom, ext
