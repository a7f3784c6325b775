"""Exact arithmetic in Chebyshev rings and in Z[2cos(pi/m)].

Two value types live here.

``ChebElem`` is an element of the commutative ring generated by symbols
theta_1, ..., theta_{n-1} (with theta_0 = 1) subject to the second-kind
Chebyshev product rule

    theta_k * theta_l = sum_{j=0..l} theta_{k-l+2j}     (k >= l),

where out-of-range indices are rewritten by theta_0 = 1, theta_{2n} = 0 and
theta_k = theta_{2n-1-k} for k < 2n.  The nonnegative cone (all coordinates
>= 0) is the semiring used for category actions downstream.

``AlgReal`` is an element of Z[2cos(pi/m)], stored as an integer polynomial
reduced modulo the minimal polynomial of 2cos(pi/m).  Equality is exact and
``sign`` is decided by refining an exact rational isolating interval of the
root, so AlgReal is a computable totally ordered ring.  The evaluation
homomorphism ``sigma`` sends theta_k to U_k(x/2) mod minpoly(2n+1) and
connects the two types.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import math

# ---------------------------------------------------------------------------
# integer polynomials as coefficient tuples (constant term first)

def _poly_trim(c: list[int]) -> tuple[int, ...]:
    end = len(c)
    while end > 0 and c[end - 1] == 0:
        end -= 1
    return tuple(c[:end])


def _poly_mul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _poly_trim(out)


def _poly_add(a, b):
    out = [0] * max(len(a), len(b))
    for i, ai in enumerate(a):
        out[i] += ai
    for j, bj in enumerate(b):
        out[j] += bj
    return _poly_trim(out)


def _poly_sub(a, b):
    out = [0] * max(len(a), len(b))
    for i, ai in enumerate(a):
        out[i] += ai
    for j, bj in enumerate(b):
        out[j] -= bj
    return _poly_trim(out)


def _poly_divmod_exact(a, b):
    """Quotient of two integer polynomials when the division is exact.

    b must be monic or have leading coefficient dividing every intermediate
    remainder (true for cyclotomic factors of z^k - 1).
    """
    a = list(a)
    q = [0] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1]
        if c % lead != 0:
            raise ArithmeticError("non-exact polynomial division")
        q[i] = c // lead
        if q[i]:
            for j, bj in enumerate(b):
                a[i + j] -= q[i] * bj
    if any(a):
        raise ArithmeticError("non-exact polynomial division")
    return _poly_trim(q)


@lru_cache(maxsize=None)
def cyclotomic(k: int) -> tuple[int, ...]:
    """k-th cyclotomic polynomial, by exact division of z^k - 1."""
    if k < 1:
        raise ValueError("k must be >= 1")
    num = [0] * (k + 1)
    num[0], num[k] = -1, 1
    rem = _poly_trim(num)
    for d in range(1, k):
        if k % d == 0:
            rem = _poly_divmod_exact(rem, cyclotomic(d))
    return rem


@lru_cache(maxsize=None)
def minimal_poly(m: int) -> tuple[int, ...]:
    """Minimal polynomial of 2cos(pi/m) over Q, monic with integer coefficients.

    Computed from the cyclotomic polynomial Phi_{2m}(z), which is palindromic
    of even degree d; substituting y = z + 1/z turns z^{-d/2} Phi_{2m}(z)
    into a monic integer polynomial of degree d/2 = phi(2m)/2 whose roots are
    2cos(k pi / m) with gcd(k, 2m) = 1.
    """
    if m < 3:
        raise ValueError("m must be >= 3")
    phi = cyclotomic(2 * m)
    d = len(phi) - 1
    # Phi_{2m} is palindromic, so z^{-d/2} Phi(z) is a polynomial in
    # y = z + 1/z; expand via p_j(y) = z^j + z^{-j}: p_0 = 2, p_1 = y,
    # p_{j+1} = y p_j - p_{j-1}.
    p_prev, p_cur = (2,), (0, 1)
    out = (phi[d // 2],)
    for j in range(1, d // 2 + 1):
        coeff = phi[d // 2 + j]
        if coeff:
            out = _poly_add(out, tuple(coeff * c for c in p_cur))
        p_prev, p_cur = p_cur, _poly_sub(_poly_mul((0, 1), p_cur), p_prev)
    assert len(out) == d // 2 + 1 and out[-1] == 1, "must be monic of degree phi(2m)/2"
    return out


# ---------------------------------------------------------------------------
# AlgReal: Z[2cos(pi/m)] with exact signs


class _RootContext:
    """Per-m data: minimal polynomial, reduction rows, isolating interval."""

    def __init__(self, m: int):
        if m < 3:
            raise ValueError("m must be >= 3")
        if m > 10000:
            raise ValueError("m too large for the certified root isolation")
        self.m = m
        self.minpoly = minimal_poly(m)
        self.deg = len(self.minpoly) - 1
        self.lo, self.hi = self._initial_interval()

    def _initial_interval(self) -> tuple[Fraction, Fraction]:
        c = 2.0 * math.cos(math.pi / self.m)
        delta = 1e-9
        lo, hi = Fraction(c - delta), Fraction(c + delta)
        # Nearest conjugate 2cos(k pi/m), k >= 2, is at distance >= 12/m^2;
        # with m <= 1e4 the margin sits far inside that gap, so an exact sign
        # change certifies that [lo, hi] isolates 2cos(pi/m).
        assert Fraction(12, self.m * self.m) > 2 * (hi - lo)
        slo = _sign_int(_poly_eval_frac(self.minpoly, lo))
        shi = _sign_int(_poly_eval_frac(self.minpoly, hi))
        assert slo * shi < 0, "float seed failed to straddle the root"
        return lo, hi

    def refine(self):
        mid = (self.lo + self.hi) / 2
        smid = _sign_int(_poly_eval_frac(self.minpoly, mid))
        if smid == 0:
            # mid is the root itself (only possible for m = 3); nudge.
            quarter = (self.hi - self.lo) / 4
            self.lo, self.hi = mid - quarter, mid + quarter
            return
        slo = _sign_int(_poly_eval_frac(self.minpoly, self.lo))
        if slo * smid < 0:
            self.hi = mid
        else:
            self.lo = mid

    def interval(self, width: Fraction) -> tuple[Fraction, Fraction]:
        while self.hi - self.lo > width:
            self.refine()
        return self.lo, self.hi


def _sign_int(x) -> int:
    return (x > 0) - (x < 0)


def _poly_eval_frac(coeffs, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _interval_eval(coeffs, lo: Fraction, hi: Fraction):
    """Rigorous enclosure of the polynomial over [lo, hi] (interval Horner)."""
    alo, ahi = Fraction(0), Fraction(0)
    for c in reversed(coeffs):
        cands = (alo * lo, alo * hi, ahi * lo, ahi * hi)
        alo, ahi = min(cands) + c, max(cands) + c
    return alo, ahi


_ROOT_CONTEXTS: dict[int, _RootContext] = {}


def _context(m: int) -> _RootContext:
    ctx = _ROOT_CONTEXTS.get(m)
    if ctx is None:
        ctx = _RootContext(m)
        _ROOT_CONTEXTS[m] = ctx
    return ctx


class AlgReal:
    """An element of Z[2cos(pi/m)], reduced mod the minimal polynomial."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs=()):
        ctx = _context(m)
        coeffs = tuple(coeffs)
        if len(coeffs) > ctx.deg:
            coeffs = _reduce_mod(ctx, coeffs)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "coeffs", _poly_trim(list(coeffs)))

    # -- constructors -------------------------------------------------
    @staticmethod
    def integer(m: int, k: int) -> "AlgReal":
        return AlgReal(m, (k,))

    @staticmethod
    def generator(m: int) -> "AlgReal":
        """The element 2cos(pi/m) itself."""
        return AlgReal(m, (0, 1))

    @staticmethod
    def chebyshev(m: int, k: int) -> "AlgReal":
        """U_k(x/2) mod minpoly(m): the image of theta_k when m = 2n+1."""
        if k < 0:
            raise ValueError("k must be >= 0")
        prev, cur = AlgReal(m, (1,)), AlgReal(m, (0, 1))
        if k == 0:
            return prev
        for _ in range(k - 1):
            prev, cur = cur, AlgReal.generator(m) * cur - prev
        return cur

    # -- ring operations ----------------------------------------------
    def _check(self, other):
        if self.m != other.m:
            raise ValueError(f"mixed fields Z[2cos(pi/{self.m})] and Z[2cos(pi/{other.m})]")

    def __add__(self, other):
        if isinstance(other, int):
            other = AlgReal(self.m, (other,))
        self._check(other)
        return AlgReal(self.m, _poly_add(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = AlgReal(self.m, (other,))
        self._check(other)
        return AlgReal(self.m, _poly_sub(self.coeffs, other.coeffs))

    def __rsub__(self, other):
        return AlgReal(self.m, (other,)) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return AlgReal(self.m, tuple(other * c for c in self.coeffs))
        self._check(other)
        return AlgReal(self.m, _poly_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __neg__(self):
        return AlgReal(self.m, tuple(-c for c in self.coeffs))

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __eq__(self, other):
        if isinstance(other, int):
            return self.coeffs == ((other,) if other else ())
        return isinstance(other, AlgReal) and self.m == other.m and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.m, self.coeffs))

    def is_zero(self) -> bool:
        return not self.coeffs

    def sign(self) -> int:
        """Exact sign of the real value at 2cos(pi/m)."""
        if not self.coeffs:
            return 0
        ctx = _context(self.m)
        while True:
            lo, hi = _interval_eval(self.coeffs, ctx.lo, ctx.hi)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            ctx.refine()

    def __lt__(self, other):
        if isinstance(other, int):
            other = AlgReal(self.m, (other,))
        return (self - other).sign() < 0

    def __le__(self, other):
        if isinstance(other, int):
            other = AlgReal(self.m, (other,))
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return not self <= other

    def __ge__(self, other):
        return not self < other

    def interval(self, width: Fraction = Fraction(1, 10**12)):
        """Rational enclosure [lo, hi] of the real value, of width <= width."""
        ctx = _context(self.m)
        lo, hi = _interval_eval(self.coeffs, ctx.lo, ctx.hi)
        while hi - lo > width:
            ctx.refine()
            lo, hi = _interval_eval(self.coeffs, ctx.lo, ctx.hi)
        return lo, hi

    def __float__(self):
        lo, hi = self.interval(Fraction(1, 10**15))
        return float((lo + hi) / 2)

    def __repr__(self):
        return f"AlgReal(m={self.m}, {list(self.coeffs)})"

    def to_json(self):
        return {"m": self.m, "coeffs": list(self.coeffs)}

    @staticmethod
    def from_json(obj) -> "AlgReal":
        return AlgReal(obj["m"], obj["coeffs"])


def _reduce_mod(ctx: _RootContext, coeffs):
    """Synthetic division by the monic minimal polynomial; returns the remainder."""
    out = list(coeffs)
    mp, d = ctx.minpoly, ctx.deg
    for i in range(len(out) - 1, d - 1, -1):
        c = out[i]
        if c:
            out[i] = 0
            for j in range(d):
                out[i - d + j] -= c * mp[j]
    return tuple(out[:d])


def alg_inverse(a: AlgReal) -> tuple[AlgReal, int]:
    """(b, d) with a * b == d and d a positive integer, so 1/a == b/d.

    Computed by the extended Euclidean algorithm over Q against the minimal
    polynomial, then cleared of denominators.
    """
    if a.is_zero():
        raise ZeroDivisionError("inverse of zero")
    ctx = _context(a.m)
    f = [Fraction(c) for c in ctx.minpoly]
    g = [Fraction(c) for c in a.coeffs]
    # invariants: r0 = s0*f + t0*g, r1 = s1*f + t1*g (s coefficients dropped)
    r0, t0 = f, [Fraction(0)]
    r1, t1 = g, [Fraction(1)]
    while True:
        while r1 and r1[-1] == 0:
            r1.pop()
        if len(r1) == 1:
            break
        q, rem = _frac_poly_divmod(r0, r1)
        t_new = _frac_poly_sub(t0, _frac_poly_mul(q, t1))
        r0, t0, r1, t1 = r1, t1, rem, t_new
    if not r1:
        raise ArithmeticError("element not invertible (minimal polynomial not squarefree?)")
    c = r1[0]
    inv = [t / c for t in t1]
    den = 1
    for x in inv:
        den = den * x.denominator // math.gcd(den, x.denominator)
    num = AlgReal(a.m, tuple(int(x * den) for x in inv))
    if den < 0:
        num, den = -num, -den
    return num, den


def _frac_poly_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] / b[-1]
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    while a and a[-1] == 0:
        a.pop()
    return q, a


def _frac_poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1 if a and b else 0)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _frac_poly_sub(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, ai in enumerate(a):
        out[i] += ai
    for j, bj in enumerate(b):
        out[j] -= bj
    return out


# ---------------------------------------------------------------------------
# ChebElem: the ring Z[theta_1, ..., theta_{n-1}]


def _reduce_theta_index(i: int, n: int) -> int | None:
    """Rewrite theta_i into the basis range 0..n-1; None means theta_i = 0."""
    if i < 0:
        raise ValueError("negative Chebyshev index")
    if i <= n - 1:
        return i
    if i == 2 * n:
        return None
    if i < 2 * n:
        return 2 * n - 1 - i
    raise ValueError(f"index {i} outside the rewriting range for n={n}")


@lru_cache(maxsize=None)
def _basis_product(n: int, k: int, l: int) -> tuple[int, ...]:
    """Coefficient vector of theta_k * theta_l in the basis theta_0..theta_{n-1}."""
    if k < l:
        k, l = l, k
    out = [0] * n
    for j in range(l + 1):
        idx = _reduce_theta_index(k - l + 2 * j, n)
        if idx is not None:
            out[idx] += 1
    return tuple(out)


@dataclass(frozen=True)
class ChebElem:
    """Element sum a_i theta_i of the rank-n Chebyshev ring (theta_0 = 1)."""

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("rank parameter n must be >= 2")
        if len(self.coeffs) != self.n:
            raise ValueError(f"expected {self.n} coefficients, got {len(self.coeffs)}")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    # -- constructors -------------------------------------------------
    @staticmethod
    def theta(n: int, k: int) -> "ChebElem":
        """The basis symbol theta_k (a symbol outside 0..n-1 is rewritten)."""
        out = [0] * n
        idx = _reduce_theta_index(k, n)
        if idx is not None:
            out[idx] = 1
        return ChebElem(n, tuple(out))

    @staticmethod
    def zero(n: int) -> "ChebElem":
        return ChebElem(n, (0,) * n)

    @staticmethod
    def one(n: int) -> "ChebElem":
        return ChebElem.theta(n, 0)

    # -- ring operations ----------------------------------------------
    def _check(self, other: "ChebElem"):
        if self.n != other.n:
            raise ValueError(f"rank mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "ChebElem") -> "ChebElem":
        self._check(other)
        return ChebElem(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "ChebElem") -> "ChebElem":
        self._check(other)
        return ChebElem(self.n, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "ChebElem":
        return ChebElem(self.n, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return ChebElem(self.n, tuple(other * a for a in self.coeffs))
        return cheb_mul(self, other)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def in_semiring(self) -> bool:
        """Whether the element lies in the nonnegative cone."""
        return all(c >= 0 for c in self.coeffs)

    def sign_coherent(self) -> bool:
        """No two coefficients of strictly opposite sign (zeros are neutral)."""
        return not (any(c > 0 for c in self.coeffs) and any(c < 0 for c in self.coeffs))

    def coherent_sign(self) -> int:
        if any(c > 0 for c in self.coeffs):
            return 1
        if any(c < 0 for c in self.coeffs):
            return -1
        return 0

    def to_json(self):
        return {"n": self.n, "coeffs": list(self.coeffs)}

    @staticmethod
    def from_json(obj) -> "ChebElem":
        return ChebElem(obj["n"], tuple(obj["coeffs"]))

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}*t{i}" if i else str(c))
        return "ChebElem(0)" if not terms else "ChebElem(" + " + ".join(terms) + ")"


def cheb_mul(a: ChebElem, b: ChebElem) -> ChebElem:
    """Product in the Chebyshev ring, rewritten into the canonical basis."""
    if a.n != b.n:
        raise ValueError(f"rank mismatch: {a.n} vs {b.n}")
    n = a.n
    out = [0] * n
    for k, ak in enumerate(a.coeffs):
        if not ak:
            continue
        for l, bl in enumerate(b.coeffs):
            if not bl:
                continue
            prod = _basis_product(n, k, l)
            c = ak * bl
            for i, p in enumerate(prod):
                if p:
                    out[i] += c * p
    return ChebElem(n, tuple(out))


@lru_cache(maxsize=None)
def reg_rep(k: int, n: int) -> tuple[tuple[int, ...], ...]:
    """Matrix of multiplication by theta_k on the basis theta_0..theta_{n-1}.

    Column j holds the coefficient vector of theta_k * theta_j; entries are
    0 or 1 and the matrix is symmetric.
    """
    if not 0 <= k <= n - 1:
        raise ValueError(f"index k={k} out of range 0..{n - 1}")
    cols = [_basis_product(n, k, j) for j in range(n)]
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


def rho(r: ChebElem) -> tuple[tuple[int, ...], ...]:
    """Regular representation of an arbitrary ring element."""
    n = r.n
    out = [[0] * n for _ in range(n)]
    for k, c in enumerate(r.coeffs):
        if c:
            mat = reg_rep(k, n)
            for i in range(n):
                for j in range(n):
                    out[i][j] += c * mat[i][j]
    return tuple(tuple(row) for row in out)


def sigma(a: ChebElem) -> AlgReal:
    """Evaluation homomorphism theta_k -> U_k(cos pi/(2n+1)) into Z[2cos(pi/(2n+1))]."""
    m = 2 * a.n + 1
    out = AlgReal(m, ())
    for k, c in enumerate(a.coeffs):
        if c:
            out = out + AlgReal.chebyshev(m, k) * c
    return out


def semiring_leq(r: ChebElem, s: ChebElem) -> bool:
    """The partial order on the semiring: r <= s iff r == s or value(r) < value(s)."""
    if r == s:
        return True
    return (sigma(s) - sigma(r)).sign() > 0


def equal_in_evaluation(a: ChebElem, b: ChebElem) -> bool:
    """Equality after evaluation in Z[2cos(pi/(2n+1))].

    Distinct from coefficient-wise equality: the evaluation has a kernel for
    some n (e.g. n = 4, where theta_3 and theta_0 + theta_1 collapse).
    """
    return (sigma(a) - sigma(b)).is_zero()
