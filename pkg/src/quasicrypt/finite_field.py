"""Exact arithmetic in GF(p^r).

Elements are polynomials over F_p reduced modulo a monic irreducible of
degree r, stored little-endian as coefficient tuples.  Every element also
carries an integer tag ``sum(coeffs[i] * p**i)`` which is what gets printed
and serialized; tag 2 is the residue class of x (the primitive root ``a``).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .errors import (
    FieldDivisionByZero,
    NoGeneratorError,
    NotPrimeError,
    ReducibleModulusError,
    ZeroElementError,
)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n by trial division, ascending."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials over F_p, little-endian int tuples ---------------------------

def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, b, p):
    """Remainder of a modulo b over F_p (b nonzero)."""
    a = _trim(a)
    b = _trim(b)
    inv_lead = pow(b[-1], -1, p)
    while len(a) >= len(b):
        coef = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * bc) % p
        a = _trim(a)
    return a


def _monic_polys(p, deg):
    """All monic polynomials of the given degree, ordered by integer encoding."""
    for low in product(range(p), repeat=deg):
        yield tuple(reversed(low)) + (1,)


def is_irreducible(modulus, p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    deg = len(_trim(modulus)) - 1
    if deg < 1:
        return False
    for k in range(1, deg // 2 + 1):
        for g in _monic_polys(p, k):
            if not _poly_mod(modulus, g, p):
                return False
    return True


def smallest_irreducible(p: int, r: int) -> tuple[int, ...]:
    """Monic irreducible of degree r with the smallest integer encoding.

    For (2, 3) this is x^3 + x + 1 = (1, 1, 0, 1).
    """
    for g in _monic_polys(p, r):
        if is_irreducible(g, p):
            return g
    raise ReducibleModulusError(f"no irreducible of degree {r} over F_{p}")  # unreachable


@dataclass(frozen=True, order=True)
class FieldElem:
    tag: int
    coeffs: tuple[int, ...] = field(compare=False)

    def __int__(self):
        return self.tag

    def __index__(self):
        return self.tag

    def __repr__(self):
        return f"FieldElem({self.tag})"


@dataclass(frozen=True)
class FieldCtx:
    """The field GF(p^r) together with a fixed generator ``beta`` of F_q*.

    Build through :func:`make_field`; the constructor does no validation.
    """

    p: int
    r: int
    modulus: tuple[int, ...]
    beta_tag: int = 0

    @property
    def q(self) -> int:
        return self.p**self.r

    @property
    def beta(self) -> FieldElem:
        return self.elem(self.beta_tag)

    @property
    def zero(self) -> FieldElem:
        return self.elem(0)

    @property
    def one(self) -> FieldElem:
        return self.elem(1)

    # -- tag <-> coefficients

    def elem(self, tag) -> FieldElem:
        if isinstance(tag, FieldElem):
            return tag
        tag = int(tag)
        if not 0 <= tag < self.q:
            raise ValueError(f"tag {tag} outside [0, {self.q - 1}]")
        coeffs = []
        t = tag
        for _ in range(self.r):
            t, c = divmod(t, self.p)
            coeffs.append(c)
        return FieldElem(tag, tuple(coeffs))

    def from_coeffs(self, coeffs) -> FieldElem:
        c = [int(v) % self.p for v in coeffs]
        if len(c) > self.r:
            c = _poly_mod(c, self.modulus, self.p)
        c = c + [0] * (self.r - len(c))
        tag = 0
        for v in reversed(c):
            tag = tag * self.p + v
        return FieldElem(tag, tuple(c))

    def elements(self) -> list[FieldElem]:
        return [self.elem(t) for t in range(self.q)]

    # -- arithmetic

    def add(self, a, b) -> FieldElem:
        a, b = self.elem(a), self.elem(b)
        return self.from_coeffs(x + y for x, y in zip(a.coeffs, b.coeffs))

    def neg(self, a) -> FieldElem:
        return self.from_coeffs(-x for x in self.elem(a).coeffs)

    def sub(self, a, b) -> FieldElem:
        a, b = self.elem(a), self.elem(b)
        return self.from_coeffs(x - y for x, y in zip(a.coeffs, b.coeffs))

    def mul(self, a, b) -> FieldElem:
        a, b = self.elem(a), self.elem(b)
        if a.tag == 0 or b.tag == 0:
            return self.zero
        prod = [0] * (2 * self.r - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    prod[i + j] += x * y
        return self.from_coeffs(v % self.p for v in prod)

    def pow(self, a, k: int) -> FieldElem:
        a = self.elem(a)
        if k < 0:
            return self.pow(self.inv(a), -k)
        result = self.one
        base = a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def inv(self, a) -> FieldElem:
        a = self.elem(a)
        if a.tag == 0:
            raise FieldDivisionByZero("inverse of zero")
        # a^(q-2) = a^-1 for a in F_q*
        return self.pow(a, self.q - 2)

    def div(self, a, b) -> FieldElem:
        return self.mul(a, self.inv(b))

    # -- structure

    def element_order(self, a) -> int:
        """Multiplicative order of a nonzero element."""
        a = self.elem(a)
        if a.tag == 0:
            raise ZeroElementError("zero has no multiplicative order")
        k = self.q - 1
        for ell in prime_factors(k):
            while k % ell == 0 and self.pow(a, k // ell).tag == 1:
                k //= ell
        return k

    def is_generator(self, a) -> bool:
        a = self.elem(a)
        return a.tag != 0 and self.element_order(a) == self.q - 1

    def poly_eval(self, coeffs, x) -> FieldElem:
        """Horner evaluation of ``sum(coeffs[i] * x**i)``; coeffs low-to-high."""
        x = self.elem(x)
        acc = self.zero
        for c in reversed(list(coeffs)):
            acc = self.add(self.mul(acc, x), c)
        return acc

    def rank(self, matrix) -> int:
        """Rank of a matrix of field elements (or tags) by Gaussian elimination."""
        rows = [[self.elem(v) for v in row] for row in matrix]
        if not rows:
            return 0
        ncols = len(rows[0])
        rank = 0
        for col in range(ncols):
            pivot = next((i for i in range(rank, len(rows)) if rows[i][col].tag), None)
            if pivot is None:
                continue
            rows[rank], rows[pivot] = rows[pivot], rows[rank]
            lead_inv = self.inv(rows[rank][col])
            prow = [self.mul(v, lead_inv) for v in rows[rank]]
            rows[rank] = prow
            for i in range(rank + 1, len(rows)):
                f = rows[i][col]
                if f.tag:
                    rows[i] = [self.sub(v, self.mul(f, w)) for v, w in zip(rows[i], prow)]
            rank += 1
            if rank == len(rows):
                break
        return rank

    def to_dict(self) -> dict:
        return {"p": self.p, "r": self.r, "modulus": list(self.modulus), "beta": self.beta_tag}


def make_field(p: int, r: int = 1, modulus=None, beta=None) -> FieldCtx:
    """Build GF(p^r).

    Without ``modulus`` the irreducible with the smallest integer encoding is
    used; without ``beta`` the smallest-tag generator of F_q* is chosen.
    """
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if r < 1:
        raise ValueError("degree must be >= 1")
    if modulus is None:
        modulus = smallest_irreducible(p, r)
    else:
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != r + 1 or modulus[-1] != 1:
            raise ReducibleModulusError(f"modulus must be monic of degree {r}")
        if not is_irreducible(modulus, p):
            raise ReducibleModulusError(f"{modulus} is reducible over F_{p}")
    ctx = FieldCtx(p, r, tuple(modulus))
    q = ctx.q
    if beta is None:
        if q == 2:
            return FieldCtx(p, r, ctx.modulus, 1)
        for t in range(2, q):
            if ctx.is_generator(t):
                return FieldCtx(p, r, ctx.modulus, t)
        raise NoGeneratorError(f"no generator found in GF({q})")
    beta = int(beta)
    if not ctx.is_generator(beta):
        raise ValueError(f"tag {beta} does not generate GF({q})*")
    return FieldCtx(p, r, ctx.modulus, beta)
