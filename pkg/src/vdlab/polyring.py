"""Exact sparse polynomials over Q, integer polynomials in t and truncated series.

Monomials are tuples of non-negative ints. Coefficients are ``gmpy2.mpq``.
Every monomial order is encoded as a *linear* integer weight: the key of a
product of monomials is the sum of their keys, which the Groebner engine uses
to avoid recomputing sort keys during reduction.
"""

from __future__ import annotations

import heapq
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from gmpy2 import mpq

Monomial = tuple

ORDERS = ("degrevlex", "lex")

# Exponents must stay below this bound for the packed order keys to be exact.
_KEY_BASE = 1 << 32


class RingMismatch(ValueError):
    """Operands live in polynomial rings with different variable counts."""


class InexactDivision(ArithmeticError):
    """Raised when a polynomial division leaves a nonzero remainder."""


def to_mpq(c) -> mpq:
    if isinstance(c, Fraction):
        return mpq(c.numerator, c.denominator)
    return mpq(c)


def order_weights(nvars: int, order: str = "degrevlex") -> tuple:
    """Integer weights ``w`` such that ``m1 > m2`` iff ``sum(w*m1) > sum(w*m2)``."""
    B = _KEY_BASE
    if order == "degrevlex":
        top = B ** nvars
        return tuple(top - B ** i for i in range(nvars))
    if order == "lex":
        return tuple(B ** (nvars - 1 - i) for i in range(nvars))
    raise ValueError(f"unknown monomial order {order!r}")


_PACK_BITS = 24
_PACK_MASK = (1 << _PACK_BITS) - 1


@lru_cache(maxsize=None)
def _packer(nvars: int):
    shifts = tuple(_PACK_BITS * i for i in range(nvars))

    def pack(m):
        return sum(e << s for e, s in zip(m, shifts))

    return pack


@lru_cache(maxsize=None)
def _unpacker(nvars: int):
    shifts = tuple(_PACK_BITS * i for i in range(nvars))

    def unpack(p):
        return tuple((p >> s) & _PACK_MASK for s in shifts)

    return unpack


def monomial_key(m: Monomial, weights) -> int:
    return sum(e * w for e, w in zip(m, weights))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


class Polynomial:
    """Immutable sparse polynomial in ``nvars`` variables with rational coefficients."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping | Iterable = ()):
        self.nvars = nvars
        items = terms.items() if isinstance(terms, Mapping) else terms
        d: dict = {}
        for m, c in items:
            m = tuple(m)
            if len(m) != nvars:
                raise RingMismatch(f"monomial {m} does not have {nvars} exponents")
            if any(e < 0 for e in m):
                raise ValueError(f"negative exponent in {m}")
            c = to_mpq(c)
            if c:
                v = d.get(m)
                if v is None:
                    d[m] = c
                else:
                    v += c
                    if v:
                        d[m] = v
                    else:
                        del d[m]
        self.terms = d
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "Polynomial":
        # trusted constructor: terms already canonical
        p = object.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._hash = None
        return p

    # -- constructors ---------------------------------------------------------
    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c) -> "Polynomial":
        c = to_mpq(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def one(cls, nvars: int) -> "Polynomial":
        return cls.constant(nvars, 1)

    @classmethod
    def var(cls, nvars: int, i: int, power: int = 1) -> "Polynomial":
        m = [0] * nvars
        m[i] = power
        return cls._raw(nvars, {tuple(m): mpq(1)})

    @classmethod
    def monomial(cls, m: Monomial, c=1) -> "Polynomial":
        return cls(len(m), {tuple(m): c})

    # -- basic protocol -------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)) or type(other) is type(mpq(0)):
            return self == Polynomial.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"Polynomial({self.nvars}, {format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)

    def _check(self, other: "Polynomial"):
        if self.nvars != other.nvars:
            raise RingMismatch(f"{self.nvars} vs {other.nvars} variables")

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(self.nvars, other)

    # -- arithmetic -----------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        d = dict(self.terms)
        for m, c in other.terms.items():
            v = d.get(m)
            if v is None:
                d[m] = c
            else:
                v = v + c
                if v:
                    d[m] = v
                else:
                    del d[m]
        return Polynomial._raw(self.nvars, d)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = to_mpq(other)
            if not c:
                return Polynomial.zero(self.nvars)
            return Polynomial._raw(self.nvars, {m: v * c for m, v in self.terms.items()})
        self._check(other)
        a, b = self.terms, other.terms
        if not a or not b:
            return Polynomial.zero(self.nvars)
        if len(a) < len(b):
            a, b = b, a
        pack = _packer(self.nvars)
        pa = [(pack(m), c) for m, c in a.items()]
        d: dict = {}
        get = d.get
        for mb, cb in b.items():
            qb = pack(mb)
            for qa, ca in pa:
                m = qa + qb
                v = get(m)
                d[m] = ca * cb if v is None else v + ca * cb
        unpack = _unpacker(self.nvars)
        return Polynomial._raw(self.nvars, {unpack(m): c for m, c in d.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = Polynomial.one(self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def mul_monomial(self, m: Monomial, c=1) -> "Polynomial":
        c = to_mpq(c)
        return Polynomial._raw(
            self.nvars, {mono_mul(k, m): v * c for k, v in self.terms.items()} if c else {}
        )

    # -- inspection -----------------------------------------------------------
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def coefficient(self, m: Monomial) -> mpq:
        return self.terms.get(tuple(m), mpq(0))

    def leading_term(self, order: str = "degrevlex"):
        """(monomial, coefficient) of the largest term; raises on zero."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        w = order_weights(self.nvars, order)
        m = max(self.terms, key=lambda t: monomial_key(t, w))
        return m, self.terms[m]

    def sorted_terms(self, order: str = "degrevlex"):
        w = order_weights(self.nvars, order)
        return sorted(self.terms.items(), key=lambda t: monomial_key(t[0], w), reverse=True)

    def monic(self, order: str = "degrevlex") -> "Polynomial":
        if not self.terms:
            return self
        return self * (1 / self.leading_term(order)[1])

    def evaluate(self, point):
        point = [to_mpq(v) for v in point]
        total = mpq(0)
        for m, c in self.terms.items():
            t = c
            for v, e in zip(point, m):
                if e:
                    t *= v ** e
            total += t
        return total

    def permute(self, perm) -> "Polynomial":
        """Relabel variables: variable ``i`` becomes variable ``perm[i]``."""
        out = {}
        for m, c in self.terms.items():
            nm = [0] * self.nvars
            for i, e in enumerate(m):
                nm[perm[i]] = e
            out[tuple(nm)] = c
        return Polynomial._raw(self.nvars, out)

    def extend(self, extra: int) -> "Polynomial":
        """Same polynomial in a ring with ``extra`` more trailing variables."""
        pad = (0,) * extra
        return Polynomial._raw(self.nvars + extra, {m + pad: c for m, c in self.terms.items()})

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.terms.values())

    def content_sign(self) -> int:
        """Sign of the degrevlex leading coefficient (0 for the zero polynomial)."""
        if not self.terms:
            return 0
        return 1 if self.leading_term()[1] > 0 else -1


def poly_arith(a: Polynomial, b: Polynomial, op: str) -> Polynomial:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def poly_divide_exact(num: Polynomial, den: Polynomial) -> Polynomial:
    """Quotient ``q`` with ``q * den == num``; raises :class:`InexactDivision` otherwise."""
    num._check(den)
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    n = num.nvars
    w = order_weights(n, "degrevlex")
    dterms = sorted(((monomial_key(m, w), m, c) for m, c in den.terms.items()), reverse=True)
    lk, lm, lc = dterms[0]
    tail = [(k - lk, m, c) for k, m, c in dterms[1:]]
    rem = dict(num.terms)
    keys = {m: monomial_key(m, w) for m in rem}
    heap = [(-k, m) for m, k in keys.items()]
    heapq.heapify(heap)
    quot = {}
    while heap:
        nk, m = heapq.heappop(heap)
        c = rem.pop(m, None)
        if c is None:
            continue
        if not mono_divides(lm, m):
            raise InexactDivision(f"remainder term {c}*{m} not divisible by leading monomial {lm}")
        q = mono_div(m, lm)
        qc = c / lc
        quot[q] = qc
        qk = -nk - lk
        for dk, dm, dc in tail:
            t = mono_mul(q, dm)
            v = rem.get(t)
            if v is None:
                rem[t] = -qc * dc
                heapq.heappush(heap, (-(qk + lk + dk), t))
            else:
                v = v - qc * dc
                if v:
                    rem[t] = v
                else:
                    del rem[t]
    return Polynomial._raw(n, quot)


# -- text format ---------------------------------------------------------------

def _fmt_coeff(c: mpq) -> str:
    return f"{c.numerator}/{c.denominator}"


def format_poly(p: Polynomial, order: str = "degrevlex") -> str:
    """Canonical text: ``p/q * x1^a1 * ... * xk^ak`` terms joined by `` + ``.

    Zero exponents are omitted; the zero polynomial prints as ``0``. The
    representation round-trips exactly through :func:`parse_poly`.
    """
    if not p.terms:
        return "0"
    parts = []
    for m, c in p.sorted_terms(order):
        factors = [_fmt_coeff(c)]
        factors += [f"x{i + 1}^{e}" for i, e in enumerate(m) if e]
        parts.append(" * ".join(factors))
    return " + ".join(parts)


_TERM_RE = re.compile(r"([+-]*)([^+-]+)")
_FACTOR_RE = re.compile(r"^x(\d+)(?:\^(\d+))?$")
_NUM_RE = re.compile(r"^\d+(?:/\d+)?$")


def parse_poly(text: str, nvars: int | None = None) -> Polynomial:
    """Parse the canonical format and the looser hand-written variant.

    Accepts ``x1^2 - 3/2*x1*x2 + 1``; implicit coefficients and a missing
    ``^1`` are allowed. ``nvars`` defaults to the largest variable index
    present (at least 1).
    """
    s = "".join(text.split())
    if not s:
        raise ValueError("empty polynomial text")
    pos = 0
    parsed = []
    maxvar = 0
    for tm in _TERM_RE.finditer(s):
        if tm.start() != pos:
            raise ValueError(f"malformed polynomial text {text!r}")
        pos = tm.end()
        signs, body = tm.groups()
        coeff = mpq(-1 if signs.count("-") % 2 else 1)
        exps: dict = {}
        for factor in body.split("*"):
            if _NUM_RE.match(factor):
                coeff *= mpq(factor)
                continue
            fm = _FACTOR_RE.match(factor)
            if not fm:
                raise ValueError(f"malformed factor {factor!r} in {text!r}")
            idx = int(fm.group(1))
            if idx < 1:
                raise ValueError("variables are numbered from x1")
            exps[idx] = exps.get(idx, 0) + int(fm.group(2) or 1)
            maxvar = max(maxvar, idx)
        parsed.append((coeff, exps))
    if pos != len(s):
        raise ValueError(f"trailing sign in {text!r}")
    n = nvars if nvars is not None else max(maxvar, 1)
    if maxvar > n:
        raise RingMismatch(f"x{maxvar} used in a ring with {n} variables")
    return Polynomial(n, [(tuple(e.get(i + 1, 0) for i in range(n)), c) for c, e in parsed])


# -- univariate integer polynomials in t -------------------------------------

class UniPoly:
    """Polynomial in ``t`` with integer coefficients, ``coeffs[i]`` the coefficient of t^i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def from_exponents(cls, signed_exponents: Iterable) -> "UniPoly":
        """Sum of ``sign * t^e`` over (e, sign) pairs."""
        acc: dict = {}
        for e, s in signed_exponents:
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            acc[e] = acc.get(e, 0) + s
        if not acc:
            return cls()
        top = max(acc)
        return cls(acc.get(i, 0) for i in range(top + 1))

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)})"

    def __bool__(self):
        return bool(self.coeffs)

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return UniPoly(x + y for x, y in zip(a, b))

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return UniPoly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "UniPoly":
        """Multiply by t^k."""
        return UniPoly((0,) * k + self.coeffs) if self.coeffs else self

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def divmod_one_minus_t(self) -> tuple:
        """Return (q, r) with ``self = (1-t) q + r`` and ``r`` an integer."""
        if not self.coeffs:
            return UniPoly(), 0
        # synthetic division by (t - 1), then negate the quotient
        cs = list(reversed(self.coeffs))
        q = [cs[0]]
        for c in cs[1:]:
            q.append(c + q[-1])
        r = q.pop()
        return UniPoly(-c for c in reversed(q)), r

    def strip_one_minus_t(self, limit: int | None = None) -> tuple:
        """Divide out (1-t) as often as possible (at most ``limit`` times).

        Returns the cofactor and the number of factors removed.
        """
        p, n = self, 0
        while p.coeffs and (limit is None or n < limit):
            q, r = p.divmod_one_minus_t()
            if r:
                break
            p, n = q, n + 1
        return p, n

    @staticmethod
    def one_minus_t_power(d: int) -> "UniPoly":
        p = UniPoly([1])
        for _ in range(d):
            p = p * UniPoly([1, -1])
        return p


# -- truncated power series ------------------------------------------------------

class TaylorSeries:
    """Power series with exact rational coefficients known up to ``t^order``."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable, order: int):
        cs = [Fraction(c) for c in coeffs][: order + 1]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        self.coeffs = tuple(cs)
        self.order = order

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    def __eq__(self, other):
        if isinstance(other, TaylorSeries):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __repr__(self):
        return f"TaylorSeries({[str(c) for c in self.coeffs]}, order={self.order})"

    def truncate(self, order: int) -> "TaylorSeries":
        return TaylorSeries(self.coeffs, min(order, self.order))

    def __mul__(self, other: "TaylorSeries") -> "TaylorSeries":
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            a = self.coeffs[i]
            if a:
                for j in range(n + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return TaylorSeries(out, n)

    def invert(self) -> "TaylorSeries":
        c0 = self.coeffs[0]
        if c0 == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv = [1 / c0]
        for n in range(1, self.order + 1):
            s = sum(self.coeffs[i] * inv[n - i] for i in range(1, n + 1))
            inv.append(-s / c0)
        return TaylorSeries(inv, self.order)


def series_ops(a: TaylorSeries, b: TaylorSeries | None, op: str, order: int | None = None):
    if op == "mul":
        return a * b
    if op == "invert":
        return a.invert()
    if op == "truncate":
        return a.truncate(order if order is not None else a.order)
    raise ValueError(f"unknown op {op!r}")


__all__ = [
    "InexactDivision",
    "Monomial",
    "ORDERS",
    "Polynomial",
    "RingMismatch",
    "TaylorSeries",
    "UniPoly",
    "format_poly",
    "mono_div",
    "mono_divides",
    "mono_lcm",
    "mono_mul",
    "monomial_key",
    "order_weights",
    "parse_poly",
    "poly_arith",
    "poly_divide_exact",
    "series_ops",
    "to_mpq",
]

