"""Quasigroups x*y = alpha x^m + beta y^d + c over GF(q), and the search for
parameters that leave them without proper subquasigroups.

The certified family fixes d = 1 and alpha = 1 - beta with beta a generator
of F_q*.  Then x is idempotent exactly when x^m - x + c/(1-beta) = 0, these
singletons are the only possible proper subquasigroups, and the number of
such x is q - 1 minus the rank of the circulant matrix of that polynomial.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .errors import (
    CrossCheckMismatch,
    InvalidParamsError,
    NoSuitableCError,
    NoValidMError,
    QTooSmallError,
    ZeroGammaError,
)
from .finite_field import FieldCtx, FieldElem, make_field
from .quasigroup import QTable


@dataclass(frozen=True)
class ConstructionParams:
    ctx: FieldCtx
    m: int
    c: FieldElem
    alpha: FieldElem
    beta: FieldElem
    d: int = 1

    def check(self):
        """Raise InvalidParamsError unless the product is a Latin square."""
        q = self.ctx.q
        if self.m < 1 or self.d < 1:
            raise InvalidParamsError("exponents must be positive")
        if gcd(self.m, q - 1) != 1 or gcd(self.d, q - 1) != 1:
            raise InvalidParamsError(f"m={self.m}, d={self.d} must be coprime to q-1={q - 1}")
        if self.alpha.tag == 0 or self.beta.tag == 0:
            raise InvalidParamsError("alpha and beta must be nonzero")

    @property
    def certifiable(self) -> bool:
        """Parameters covered by the no-subquasigroup guarantees."""
        ctx = self.ctx
        return (self.d == 1 and ctx.q > 2 and ctx.is_generator(self.beta)
                and self.alpha == ctx.sub(ctx.one, self.beta) and self.c.tag != 0)

    def to_dict(self) -> dict:
        return {
            "field": self.ctx.to_dict(),
            "m": self.m,
            "d": self.d,
            "alpha": self.alpha.tag,
            "beta": self.beta.tag,
            "c": self.c.tag,
        }


def standard_params(ctx: FieldCtx, m: int, c, beta=None) -> ConstructionParams:
    """The certified family: d = 1, alpha = 1 - beta."""
    beta = ctx.beta if beta is None else ctx.elem(beta)
    return ConstructionParams(ctx, m, ctx.elem(c), ctx.sub(ctx.one, beta), beta)


def build_table(params: ConstructionParams) -> QTable:
    params.check()
    ctx = params.ctx
    xs = ctx.elements()
    left = [ctx.mul(params.alpha, ctx.pow(x, params.m)) for x in xs]
    right = [ctx.add(ctx.mul(params.beta, ctx.pow(y, params.d)), params.c) for y in xs]
    return QTable([[ctx.add(lx, ry).tag for ry in right] for lx in left])


# -- root counting ------------------------------------------------------------

def idempotent_poly(ctx: FieldCtx, m: int, gamma) -> list[FieldElem]:
    """Coefficients (low to high) of x^m - x + gamma, exponents taken mod q-1.

    Reducing exponents mod q-1 keeps every nonzero root; with gamma != 0
    there is no zero root to lose.
    """
    size = ctx.q - 1
    coeffs = [ctx.zero] * size
    coeffs[0] = ctx.elem(gamma)
    coeffs[1 % size] = ctx.sub(coeffs[1 % size], ctx.one)
    coeffs[m % size] = ctx.add(coeffs[m % size], ctx.one)
    return coeffs


def left_circulant(coeffs) -> list[list]:
    """Row i is the coefficient list rotated left by i."""
    k = len(coeffs)
    return [[coeffs[(i + j) % k] for j in range(k)] for i in range(k)]


@dataclass
class RootCount:
    gamma: FieldElem
    rank: int
    count: int
    roots: list[FieldElem] = field(default_factory=list)


def konig_rados_count(ctx: FieldCtx, m: int, gamma, verify: bool = True) -> RootCount:
    """Number of roots of x^m - x + gamma in F_q as q - 1 - rank(circulant).

    With ``verify`` the roots are also found by evaluating at every nonzero
    element, and a count mismatch raises CrossCheckMismatch.
    """
    gamma = ctx.elem(gamma)
    if gamma.tag == 0:
        raise ZeroGammaError("gamma must be nonzero")
    coeffs = idempotent_poly(ctx, m, gamma)
    rank = ctx.rank(left_circulant(coeffs))
    count = ctx.q - 1 - rank
    roots = []
    if verify:
        roots = [x for x in ctx.elements()[1:] if ctx.poly_eval(coeffs, x).tag == 0]
        if len(roots) != count:
            raise CrossCheckMismatch(f"rank gives {count} roots, evaluation finds {len(roots)}")
    return RootCount(gamma, rank, count, roots)


def range_of_f(ctx: FieldCtx, m: int) -> frozenset[FieldElem]:
    """Image of x -> x^m - x."""
    return frozenset(ctx.sub(ctx.pow(x, m), x) for x in ctx.elements())


def gamma_for(ctx: FieldCtx, c, beta=None) -> FieldElem:
    beta = ctx.beta if beta is None else ctx.elem(beta)
    return ctx.div(c, ctx.sub(ctx.one, beta))


def choose_c(ctx: FieldCtx, m: int, strategy: str = "range", beta=None) -> FieldElem:
    """Smallest nonzero c for which x^m - x + c/(1-beta) has no root.

    ``range``: c/(beta-1) must avoid the image of x -> x^m - x.
    ``rank``: the circulant matrix must have full rank q-1.
    ``both``: run both and insist they pick the same c.
    """
    if strategy == "both":
        by_range = choose_c(ctx, m, "range", beta)
        by_rank = choose_c(ctx, m, "rank", beta)
        if by_range != by_rank:
            raise CrossCheckMismatch(f"range picks c={by_range.tag}, rank picks c={by_rank.tag}")
        return by_range
    beta = ctx.beta if beta is None else ctx.elem(beta)
    if strategy == "range":
        image = range_of_f(ctx, m)
        shift = ctx.sub(beta, ctx.one)
        for c in ctx.elements()[1:]:
            if ctx.div(c, shift) not in image:
                return c
    elif strategy == "rank":
        for c in ctx.elements()[1:]:
            rc = konig_rados_count(ctx, m, gamma_for(ctx, c, beta), verify=False)
            if rc.rank == ctx.q - 1:
                return c
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    raise NoSuitableCError(f"no suitable c for m={m} in GF({ctx.q})")


def is_p_power_mod(m: int, p: int, r: int) -> bool:
    q = p**r
    return m % (q - 1) in {p**i % (q - 1) for i in range(r)}


def valid_exponents(p: int, r: int) -> list[int]:
    """Every m with 1 < m < q-1, gcd(m, q-1) = 1 and m not a power of p mod q-1."""
    q = p**r
    return [m for m in range(2, q - 1)
            if gcd(m, q - 1) == 1 and not is_p_power_mod(m, p, r)]


def construct_suitable(p: int, r: int, m=None, c=None, beta=None, modulus=None,
                       strategy: str = "range"):
    """Build a polynomially complete quasigroup of order p^r.

    Defaults pick the smallest valid m, the canonical field and generator,
    and the smallest c giving no idempotents.  A user-forced ``c`` is used
    as given; the returned RootCount then tells whether idempotents remain.

    Returns (table, params, root_count).
    """
    ctx = make_field(p, r, modulus=modulus, beta=beta)
    q = ctx.q
    if q <= 2:
        raise QTooSmallError("the construction needs q > 2")
    candidates = valid_exponents(p, r)
    if m is None:
        if not candidates:
            raise NoValidMError(f"no exponent m is valid for q={q}")
        m = candidates[0]
    elif m not in candidates:
        if not candidates:
            raise NoValidMError(f"no exponent m is valid for q={q}")
        raise InvalidParamsError(f"m={m} is not valid for q={q}; valid: {candidates}")
    if c is None:
        c = choose_c(ctx, m, strategy)
    else:
        c = ctx.elem(c)
        if c.tag == 0:
            raise InvalidParamsError("c must be nonzero")
    params = standard_params(ctx, m, c)
    table = build_table(params)
    roots = konig_rados_count(ctx, m, gamma_for(ctx, c))
    return table, params, roots


def iterated_left_mul(params: ConstructionParams, x, y, k: int) -> FieldElem:
    """Apply y -> alpha x^e + beta y + c k times, e = m d^-1 mod q-1."""
    ctx = params.ctx
    e = params.m * pow(params.d, -1, ctx.q - 1) % (ctx.q - 1)
    head = ctx.add(ctx.mul(params.alpha, ctx.pow(x, e)), params.c)
    y = ctx.elem(y)
    for _ in range(k):
        y = ctx.add(head, ctx.mul(params.beta, y))
    return y


def iterated_left_mul_closed_form(params: ConstructionParams, x, y, k: int) -> FieldElem:
    """Closed form of :func:`iterated_left_mul`; needs beta != 1."""
    ctx = params.ctx
    beta = params.beta
    e = params.m * pow(params.d, -1, ctx.q - 1) % (ctx.q - 1)
    bk = ctx.pow(beta, k)
    geom = ctx.div(ctx.sub(ctx.one, bk), ctx.sub(ctx.one, beta))
    term_x = ctx.mul(ctx.mul(params.alpha, geom), ctx.pow(x, e))
    term_c = ctx.mul(geom, params.c)
    return ctx.add(ctx.add(term_x, term_c), ctx.mul(bk, y))
