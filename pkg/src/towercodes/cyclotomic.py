"""Exact arithmetic in cyclotomic integer rings Z[zeta_n], plus characters
and Gauss sums of finite fields.

A CycloInt is an integer vector indexed by exponents of zeta_n, i.e. an
element of the group ring Z[x]/(x^n - 1).  Arithmetic stays in the group
ring; equality and scalar extraction reduce to the canonical Z-basis of
Z[zeta_n] obtained by tensoring the power bases of the prime-power parts
of n (CRT on exponents, then one sparse fold per prime-power axis).  All
coefficients are exact integers throughout; there is no floating point.

Multiplication is cyclic convolution.  Large vectors go through Kronecker
substitution (pack into one big integer, multiply, unpack) so products of
dense histograms stay cheap; a schoolbook path covers small or oversized
cases exactly.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd, lcm
from typing import Iterable, List, Optional, Tuple

import numpy as np

from .field import Element, Field, is_prime

_INT64_SAFE = 1 << 55  # headroom for fold growth inside int64


def factorize(n: int) -> List[Tuple[int, int]]:
    """Prime-power factorization [(p, e), ...] ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def euler_phi(n: int) -> int:
    out = 1
    for p, e in factorize(n):
        out *= p ** (e - 1) * (p - 1)
    return out


class _RingData:
    """Cached combinatorics for reducing Z[x]/(x^n-1) to the Z[zeta_n] basis."""

    def __init__(self, n: int):
        self.n = n
        fac = factorize(n)
        self.moduli = [p ** e for p, e in fac]
        self.primes = [p for p, _ in fac]
        shape = tuple(self.moduli)
        # exponent i of zeta_n maps to the tensor slot ((u_j * i) mod m_j)_j
        # where u_j inverts n/m_j mod m_j; this is a bijection by CRT
        idx = np.arange(n, dtype=np.int64)
        flat = np.zeros(n, dtype=np.int64)
        stride = 1
        strides = []
        for m in reversed(self.moduli):
            strides.append(stride)
            stride *= m
        strides.reverse()
        for m, st in zip(self.moduli, strides):
            u = pow(n // m, -1, m)
            flat += ((u * idx) % m) * st
        self.perm = flat
        self.shape = shape
        phi_shape = tuple(p ** (e - 1) * (p - 1) for p, e in fac)
        self.phi_shape = phi_shape
        # zeta_n exponent of each canonical basis slot, for display
        base = np.zeros((), dtype=np.int64)
        exps = np.zeros(phi_shape, dtype=np.int64)
        for axis, (m, (p, e)) in enumerate(zip(self.moduli, fac)):
            a = np.arange(phi_shape[axis], dtype=np.int64) * (n // m) % n
            sh = [1] * len(phi_shape)
            sh[axis] = phi_shape[axis]
            exps = (exps + a.reshape(sh)) % n
        self.basis_exps = exps.reshape(-1)


@lru_cache(maxsize=64)
def _ring(n: int) -> _RingData:
    return _RingData(n)


def _reduce_vec(n: int, coeffs) -> tuple:
    """Canonical coefficients of sum c_i zeta_n^i over the tensor basis."""
    if n == 1:
        return (sum(int(c) for c in coeffs),)
    rd = _ring(n)
    try:
        arr = np.fromiter(coeffs, dtype=np.int64, count=n)
        if arr.max(initial=0) > _INT64_SAFE or arr.min(initial=0) < -_INT64_SAFE:
            raise OverflowError
        dtype = np.int64
    except OverflowError:
        dtype = object
        arr = np.array([int(c) for c in coeffs], dtype=object)
    T = np.zeros(rd.shape, dtype=dtype)
    T.reshape(-1)[rd.perm] = arr
    for axis, m in enumerate(rd.moduli):
        p = rd.primes[axis]
        e = 1
        while p ** (e + 1) <= m and m % p ** (e + 1) == 0:
            e += 1
        blk = m // p  # = p^(e-1)
        hi = m - blk
        T = np.moveaxis(T, axis, 0)
        head, tail = T[:hi], T[hi:]
        for t in range(p - 1):
            head[t * blk:(t + 1) * blk] -= tail
        T = np.moveaxis(head, 0, axis)
    return tuple(int(v) for v in T.reshape(-1))


def _conv_schoolbook(n: int, a, b) -> list:
    out = [0] * n
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    k = i + j
                    if k >= n:
                        k -= n
                    out[k] += ai * bj
    return out


def _kronecker_nonneg(n: int, a, b, width: int) -> list:
    # pack base 2^width; valid when every product coefficient is < 2^width
    dt = {16: "<u2", 32: "<u4", 64: "<u8"}[width]
    step = width // 8
    A = int.from_bytes(np.asarray(a, dtype=dt).tobytes(), "little")
    B = int.from_bytes(np.asarray(b, dtype=dt).tobytes(), "little")
    C = A * B
    digits = np.frombuffer(C.to_bytes(2 * step * n, "little"), dtype=dt)
    out = digits[:n].astype(np.int64)
    out[: n - 1] += digits[n:2 * n - 1].astype(np.int64)
    return out.tolist()


def _conv_cyclic(n: int, a, b) -> list:
    sa, sb = sum(map(abs, a)), sum(map(abs, b))
    ma, mb = max(map(abs, a), default=0), max(map(abs, b), default=0)
    # digits must hold every product coefficient and every packed input
    lim = max(min(sa * mb, sb * ma), ma, mb)
    if n <= 128 or lim >= (1 << 62):
        return _conv_schoolbook(n, a, b)
    width = 16 if lim < (1 << 15) else 32 if lim < (1 << 31) else 64
    if min(a) >= 0 and min(b) >= 0:
        return _kronecker_nonneg(n, a, b, width)
    ap = [v if v > 0 else 0 for v in a]
    an = [-v if v < 0 else 0 for v in a]
    bp = [v if v > 0 else 0 for v in b]
    bn = [-v if v < 0 else 0 for v in b]
    pp = _kronecker_nonneg(n, ap, bp, width)
    nn = _kronecker_nonneg(n, an, bn, width)
    pn = _kronecker_nonneg(n, ap, bn, width)
    np_ = _kronecker_nonneg(n, an, bp, width)
    return [pp[i] + nn[i] - pn[i] - np_[i] for i in range(n)]


class CycloInt:
    """Element of Z[zeta_n] held as a coefficient vector mod x^n - 1."""

    __slots__ = ("n", "coeffs", "_canon")

    def __init__(self, n: int, coeffs: Iterable[int]):
        if n < 1:
            raise ValueError("root order must be positive")
        cs = tuple(map(int, coeffs))
        if len(cs) != n:
            raise ValueError(f"expected {n} coefficients, got {len(cs)}")
        self.n = n
        self.coeffs = cs
        self._canon = None

    # -- constructors ----------------------------------------------------

    @classmethod
    def integer(cls, n: int, value: int) -> "CycloInt":
        cs = [0] * n
        cs[0] = value
        return cls(n, cs)

    @classmethod
    def root(cls, n: int, e: int = 1) -> "CycloInt":
        cs = [0] * n
        cs[e % n] = 1
        return cls(n, cs)

    # -- reduction -------------------------------------------------------

    def canonical(self) -> tuple:
        if self._canon is None:
            self._canon = _reduce_vec(self.n, self.coeffs)
        return self._canon

    @property
    def is_zero(self) -> bool:
        return not any(self.canonical())

    @property
    def is_scalar(self) -> bool:
        c = self.canonical()
        return not any(c[1:])

    def as_int(self) -> int:
        c = self.canonical()
        if any(c[1:]):
            raise ValueError("value is not a rational integer")
        return c[0]

    def support_terms(self) -> List[Tuple[int, int]]:
        """Nonzero canonical terms as (zeta_n exponent, coefficient)."""
        c = self.canonical()
        if self.n == 1:
            return [(0, c[0])] if c[0] else []
        exps = _ring(self.n).basis_exps
        return sorted(
            (int(exps[i]), v) for i, v in enumerate(c) if v
        )

    # -- ring ops ----------------------------------------------------------

    def lift(self, n2: int) -> "CycloInt":
        if n2 == self.n:
            return self
        if n2 % self.n:
            raise ValueError(f"cannot lift Z[zeta_{self.n}] into Z[zeta_{n2}]")
        step = n2 // self.n
        cs = [0] * n2
        for i, v in enumerate(self.coeffs):
            cs[i * step] = v
        return CycloInt(n2, cs)

    def _pair(self, other):
        if isinstance(other, int):
            other = CycloInt.integer(self.n, other)
        if not isinstance(other, CycloInt):
            return NotImplemented, NotImplemented
        if self.n == other.n:
            return self, other
        n = lcm(self.n, other.n)
        return self.lift(n), other.lift(n)

    def __add__(self, other):
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        return CycloInt(a.n, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloInt(self.n, [-c for c in self.coeffs])

    def __sub__(self, other):
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        return CycloInt(a.n, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, int):
            return CycloInt(self.n, [c * other for c in self.coeffs])
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        return CycloInt(a.n, _conv_cyclic(a.n, list(a.coeffs), list(b.coeffs)))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not defined here")
        out = CycloInt.integer(self.n, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    def conj(self) -> "CycloInt":
        n = self.n
        return CycloInt(n, [self.coeffs[(-i) % n] for i in range(n)])

    def __eq__(self, other):
        if isinstance(other, int):
            c = self.canonical()
            return not any(c[1:]) and c[0] == other
        if not isinstance(other, CycloInt):
            return NotImplemented
        a, b = self._pair(other)
        return a.canonical() == b.canonical()

    __hash__ = None

    def __repr__(self):
        terms = self.support_terms()
        if not terms:
            return f"CycloInt({self.n}, 0)"
        body = " + ".join(
            f"{v}" if e == 0 else (f"{v}*z^{e}" if v != 1 else f"z^{e}")
            for e, v in terms
        )
        return f"CycloInt({self.n}, {body})"


def zeta(n: int, e: int = 1) -> CycloInt:
    return CycloInt.root(n, e)


# ---------------------------------------------------------------------------
# characters of finite fields (and of their subfields within one table)
# ---------------------------------------------------------------------------


class MultChar:
    """Multiplicative character psi_j of F_{p^deg} inside a Field table.

    Indexed against the subfield generator g = alpha**((p^m-1)/(p^deg-1)):
    psi_j(g^i) = zeta_{p^deg-1}^(j*i).  deg defaults to the full field.
    """

    def __init__(self, field: Field, j: int, deg: Optional[int] = None):
        self.field = field
        self.deg = field.m if deg is None else deg
        if field.m % self.deg:
            raise ValueError(f"{self.deg} does not divide m={field.m}")
        self.group_order = field.p ** self.deg - 1
        self.j = j % self.group_order if self.group_order > 1 else 0
        self.step = field.subfield_exp(self.deg)
        g = gcd(self.j, self.group_order)
        self.order = self.group_order // g

    def dlog(self, x: Element) -> int:
        if x is None:
            raise ZeroDivisionError("multiplicative character at zero")
        if x % self.step:
            raise ValueError("element outside the character's field")
        return x // self.step

    def exponent(self, x: Element) -> int:
        """Exponent of zeta_{order} at x."""
        e = (self.j * self.dlog(x)) % self.group_order
        return e // (self.group_order // self.order)

    def value(self, x: Element) -> CycloInt:
        return CycloInt.root(self.order, self.exponent(x))

    def value_at_minus_one(self) -> int:
        f = self.field
        e = self.exponent(f.neg(f.one))
        if e == 0:
            return 1
        if 2 * e == self.order:
            return -1
        raise RuntimeError("character at -1 must be a sign")


class AddChar:
    """Additive character of F_{p^deg}: x -> zeta_p^Tr(scale * x)."""

    def __init__(self, field: Field, deg: Optional[int] = None,
                 scale: Element = 0):
        self.field = field
        self.deg = field.m if deg is None else deg
        if field.m % self.deg:
            raise ValueError(f"{self.deg} does not divide m={field.m}")
        if not field.in_subfield(scale, self.deg):
            raise ValueError("scale outside the character's field")
        self.scale = scale
        self.order = field.p

    def exponent(self, x: Element) -> int:
        f = self.field
        if not f.in_subfield(x, self.deg):
            raise ValueError("element outside the character's field")
        return f.residue(f.trace(f.mul(self.scale, x), self.deg, 1))

    def value(self, x: Element) -> CycloInt:
        return CycloInt.root(self.order, self.exponent(x))

    @property
    def is_trivial(self) -> bool:
        return self.scale is None


# ---------------------------------------------------------------------------
# Gauss sums
# ---------------------------------------------------------------------------


def _char_ring(p: int, o: int) -> int:
    return p * o  # gcd(p, o) = 1 since o | p^deg - 1


def gauss_sum(field: Field, j: int, deg: Optional[int] = None) -> CycloInt:
    """G(psi_j, chi) over F_{p^deg} with chi canonical, by direct summation.

    Returned in Z[zeta_{p*o}] where o is the order of psi_j.
    """
    p = field.p
    deg = field.m if deg is None else deg
    psi = MultChar(field, j, deg)
    o = psi.order
    n = _char_ring(p, o)
    if deg == field.m and field.mult_order > 1:
        # vectorized: exponents of both characters over all alpha^u
        M = field.mult_order
        tr = field.abs_trace_residues().astype(np.int64)
        u = np.arange(M, dtype=np.int64)
        me = (psi.j * u) % psi.group_order // (psi.group_order // o)
        e = (tr * o + me * p) % n
        hist = np.bincount(e, minlength=n)
        return CycloInt(n, hist.tolist())
    chi = AddChar(field, deg, scale=field.one)
    coeffs = [0] * n
    step = psi.step
    for i in range(psi.group_order):
        x = i * step
        e = (chi.exponent(x) * o + psi.exponent(x) * p) % n
        coeffs[e] += 1
    return CycloInt(n, coeffs)


def gauss_sum_semiprimitive(p: int, N: int, gamma: int, s: int = 1) -> int:
    """Closed-form Gauss sum G(lambda^s, chi) over F_r, r = p^(2*j*gamma),
    for lambda of order N in the semi-primitive case (some power of p is
    congruent to -1 mod N).  Returns the exact integer value, +/- sqrt(r).
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if N < 3:
        raise ValueError("character order must be at least 3")
    if N % p == 0:
        raise ValueError("character order must be coprime to p")
    if gamma < 1:
        raise ValueError("gamma must be positive")
    if not 1 <= s <= N - 1:
        raise ValueError(f"power s={s} out of range for order {N}")
    j = None
    pj = 1
    for cand in range(1, N + 1):
        pj = pj * p % N
        if pj == N - 1:
            j = cand
            break
    if j is None:
        raise ValueError(f"no power of {p} is -1 mod {N}: not semi-primitive")
    sqrt_r = p ** (j * gamma)
    if N % 2 == 0 and p % 2 and gamma % 2 and ((p ** j + 1) // N) % 2:
        sign = -1 if s % 2 else 1
    else:
        sign = -1 if (gamma - 1) % 2 else 1
    return sign * sqrt_r


def davenport_hasse_lift(g: CycloInt, t: int) -> CycloInt:
    """Gauss sum of the degree-t lifted character pair: (-1)^(t-1) * g^t."""
    if t < 1:
        raise ValueError("lift degree must be positive")
    out = g ** t
    return -out if t % 2 == 0 else out


def lifted_char_index(r: int, t: int, j: int) -> int:
    """Index over F_{r^t} of the norm-composed lift of psi_j over F_r."""
    return j * ((r ** t - 1) // (r - 1))


# ---------------------------------------------------------------------------
# structured character sums
# ---------------------------------------------------------------------------


def monomial_char_sum(field: Field, tower, b: Element):
    """Both evaluations of sum_x chi(b * x^(q^f - 1)) over x in F_{q^k}^*.

    Returns (direct, via_gauss): the literal exponential sum, and the
    expansion (-1)^(k/f-1) * sum over all multiplicative characters psi of
    F_{q^f} of G(psi, chi_1)^(k/f) * conj(psi)(b^((q^k-1)/(q^f-1))).
    """
    if b is None:
        raise ValueError("b must be nonzero")
    p = field.p
    q, f, k = tower.q, tower.f, tower.k
    if field.m != tower.m:
        raise ValueError("field does not match tower")
    M = field.mult_order
    tr = field.abs_trace_residues().astype(np.int64)
    u = np.arange(M, dtype=np.int64)
    idx = (b + u * (q ** f - 1)) % M
    hist = np.bincount(tr[idx], minlength=p)
    direct = CycloInt(p, hist.tolist())

    ef = tower.e * tower.f
    L = tower.norm_exp
    i_b = b % (q ** f - 1)
    total: Optional[CycloInt] = None
    for j in range(q ** f - 1):
        psi = MultChar(field, j, deg=ef)
        g = gauss_sum(field, j, deg=ef)
        term = g ** (k // f)
        o = psi.order
        e = (-psi.j * i_b) % psi.group_order // (psi.group_order // o)
        term = term * CycloInt.root(o, e)
        total = term if total is None else total + term
    if (k // f - 1) % 2:
        total = -total
    return direct, total


def unity_power_sums(q: int, s: int):
    """The two (q+1)-th root-of-unity sums attached to an odd prime power q.

    odd positions: zeta^s + zeta^(3s) + ... + zeta^(qs)
    even positions: zeta^(2s) + zeta^(4s) + ... + zeta^((q-1)s)
    both in Z[zeta_{q+1}]; requires 1 <= s <= q and s != (q+1)/2.
    """
    if q < 3 or q % 2 == 0:
        raise ValueError("q must be an odd prime power, q >= 3")
    if not 1 <= s <= q:
        raise ValueError(f"s={s} out of range 1..{q}")
    if 2 * s == q + 1:
        raise ValueError("s = (q+1)/2 is excluded")
    n = q + 1
    odd = [0] * n
    even = [0] * n
    for t in range(1, q + 1, 2):
        odd[(t * s) % n] += 1
    for t in range(2, q, 2):
        even[(t * s) % n] += 1
    return CycloInt(n, odd), CycloInt(n, even)
