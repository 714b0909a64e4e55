"""Dense integer polynomials in q, q-analogs, and exact evaluation at roots of unity.

Coefficients are Python ints, so nothing overflows.  A root of unity of
order d is handled by reducing modulo the cyclotomic polynomial of order d;
a constant remainder is the exact (integer) value.
"""

from __future__ import annotations

import cmath
import json
import threading
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterable


class InexactDivision(ArithmeticError):
    """Raised by :func:`poly_exact_div`; ``remainder`` holds what was left over."""

    def __init__(self, remainder: IntPoly, message: str = ""):
        self.remainder = remainder
        super().__init__(message or f"nonzero remainder {remainder}")


@dataclass(frozen=True)
class IntPoly:
    """``coeffs[i]`` is the coefficient of ``q**i``; no trailing zeros."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    @classmethod
    def const(cls, c: int) -> IntPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> IntPoly:
        return cls((0,) * e + (c,))

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: IntPoly) -> IntPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return IntPoly(tuple(out))

    def __neg__(self) -> IntPoly:
        return IntPoly(tuple(-x for x in self.coeffs))

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-other)

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(tuple(other * x for x in self.coeffs))
        return poly_mul(self, other)

    __rmul__ = __mul__

    def shift(self, e: int) -> IntPoly:
        """Multiply by ``q**e``."""
        if not self.coeffs:
            return self
        return IntPoly((0,) * e + self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_text(self) -> str:
        terms = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if e == 0:
                body = str(c)
            else:
                mono = "q" if e == 1 else f"q^{e}"
                body = mono if c == 1 else ("-" + mono if c == -1 else f"{c}*{mono}")
            terms.append(body)
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out

    def to_dict(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, data: str | dict) -> IntPoly:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(tuple(int(c) for c in data["coeffs"]))

    def __str__(self) -> str:
        return self.to_text()


ZERO = IntPoly()
ONE = IntPoly((1,))


def poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    if not a.coeffs or not b.coeffs:
        return ZERO
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                out[i + j] += x * y
    return IntPoly(tuple(out))


def poly_divmod(a: IntPoly, b: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Quotient and remainder over the integers.

    The divisor's leading coefficient must divide every intermediate leading
    term; with a monic divisor (all divisors used here) that always holds.
    """
    if not b.coeffs:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a.coeffs)
    db, lead = b.degree, b.coeffs[-1]
    if len(rem) <= db:
        return ZERO, a
    quot = [0] * (len(rem) - db)
    for s in range(len(rem) - 1 - db, -1, -1):
        top = rem[s + db]
        if top == 0:
            continue
        if top % lead:
            raise InexactDivision(IntPoly(tuple(rem)), f"leading coefficient {lead} does not divide {top}")
        t = top // lead
        quot[s] = t
        for i, y in enumerate(b.coeffs):
            rem[s + i] -= t * y
    return IntPoly(tuple(quot)), IntPoly(tuple(rem[:db]))


def poly_exact_div(a: IntPoly, b: IntPoly) -> IntPoly:
    q, r = poly_divmod(a, b)
    if r:
        raise InexactDivision(r)
    return q


def poly_prod(polys: Iterable[IntPoly]) -> IntPoly:
    out = ONE
    for p in polys:
        out = poly_mul(out, p)
    return out


# -- q-analogs -------------------------------------------------------------

@lru_cache(maxsize=None)
def q_int(m: int) -> IntPoly:
    """``[m]_q = 1 + q + ... + q^(m-1)``."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return IntPoly((1,) * m)


@lru_cache(maxsize=None)
def q_binomial(m: int, r: int) -> IntPoly:
    """Gaussian binomial by the Pascal rule ``[m,r] = [m-1,r-1] + q^r [m-1,r]``."""
    if r < 0 or r > m:
        return ZERO
    if r == 0 or r == m:
        return ONE
    # recurse on the smaller side to keep the cache compact
    if 2 * r > m:
        return q_binomial(m, m - r)
    return q_binomial(m - 1, r - 1) + q_binomial(m - 1, r).shift(r)


def q_binomial_product(m: int, r: int) -> IntPoly:
    """Same value as :func:`q_binomial`, via ``prod [m-i] / prod [r-i]``."""
    if r < 0 or r > m:
        return ZERO
    num = poly_prod(q_int(m - i) for i in range(r))
    den = poly_prod(q_int(r - i) for i in range(r))
    return poly_exact_div(num, den)


_cyclo_lock = threading.Lock()
_cyclo: dict[int, IntPoly] = {}


def cyclotomic(d: int) -> IntPoly:
    """``Phi_d = (q^d - 1) / prod of Phi_e over proper divisors e of d``."""
    if d < 1:
        raise ValueError("d must be positive")
    with _cyclo_lock:
        hit = _cyclo.get(d)
    if hit is not None:
        return hit
    num = IntPoly.monomial(d) - ONE
    den = poly_prod(cyclotomic(e) for e in range(1, d) if d % e == 0)
    phi = poly_exact_div(num, den)
    with _cyclo_lock:
        _cyclo.setdefault(d, phi)
    return phi


def csp_polynomial(n: int, k: int) -> IntPoly:
    """The sieving polynomial for matchings of 2n points with k = 1, 2, 3 crossings.

    The divisions by [2]_q and [3]_q are carried out after the products, since
    ``[n+3]_q / [2]_q`` alone is not a polynomial for even n.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if k == 1:
        return q_binomial(2 * n, n - 2)
    if k == 2:
        return poly_exact_div(poly_mul(q_int(n + 3), q_binomial(2 * n, n - 3)), q_int(2))
    if k == 3:
        head = poly_exact_div(poly_mul(q_binomial(n + 5, 2), q_binomial(2 * n, n - 4)), q_int(3))
        return head + q_binomial(2 * n, n - 3)
    raise ValueError("csp_polynomial is defined for k = 1, 2, 3")


# -- evaluation at roots of unity -----------------------------------------

@dataclass(frozen=True)
class RootOfUnityValue:
    """``f`` at a primitive ``modulus_d``-th root of unity, as ``f mod Phi_d``."""

    modulus_d: int
    residue: IntPoly
    as_integer: int | None

    @property
    def is_integer(self) -> bool:
        return self.as_integer is not None


def order_of(N: int, j: int) -> int:
    """Multiplicative order of ``exp(2 pi i j / N)``."""
    return N // gcd(N, j % N)


def eval_at_unity(f: IntPoly, N: int, j: int) -> RootOfUnityValue:
    """Exact value of ``f(exp(2 pi i j / N))``.

    ``as_integer`` is set only when the remainder mod the cyclotomic
    polynomial is constant; otherwise the value is not rational.
    """
    if N < 1:
        raise ValueError("N must be positive")
    d = order_of(N, j)
    _, residue = poly_divmod(f, cyclotomic(d))
    value = residue.coeffs[0] if residue.degree == 0 else (0 if residue.is_zero() else None)
    return RootOfUnityValue(d, residue, value)


def eval_complex(f: IntPoly, N: int, j: int) -> complex:
    """Floating Horner evaluation at ``exp(2 pi i j / N)``; a cross-check only."""
    return complex(f(cmath.exp(2j * cmath.pi * (j % N) / N)))
