"""Buchberger Groebner bases over Q and the invariants read off leading-term ideals.

The engine works on packed monomials: each monomial is a single int whose
integer order *is* the monomial order, so multiplication is addition and
comparison is ``<``. For degrevlex the high fields hold the partial sums
e_0+...+e_{j-1} (j = n..1) and the low fields hold the exponents themselves;
for lex the fields are the exponents, most significant first. Divisibility
is tested with guard bits on the exponent fields.
"""

from __future__ import annotations

import heapq
import itertools
import os
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from gmpy2 import mpq

from .polyring import Polynomial, UniPoly

_W = 16
_FMASK = (1 << _W) - 1
_MAX_EXP = 1 << (_W - 1)


class GroebnerCapExceeded(RuntimeError):
    """A configured resource cap was hit; the computation is inconclusive, not wrong."""

    def __init__(self, what: str, limit: int):
        super().__init__(f"{what} cap of {limit} exceeded")
        self.what = what
        self.limit = limit


@dataclass(frozen=True)
class Caps:
    max_pairs: int = 50_000
    max_degree: int = 400

    @classmethod
    def from_env(cls) -> "Caps":
        d = cls()
        return cls(
            max_pairs=int(os.environ.get("VDLAB_MAX_PAIRS", d.max_pairs)),
            max_degree=int(os.environ.get("VDLAB_MAX_DEGREE", d.max_degree)),
        )


class _Packing:
    """Order-compatible packed monomials for a fixed variable count and order."""

    def __init__(self, nvars: int, order: str):
        self.nvars = nvars
        self.order = order
        n = nvars
        if order == "degrevlex":
            # exponent e_i sits in field i; partial sum s_j = e_0+..+e_{j-1} sits in field n+j-1
            self.units = tuple(
                (1 << (_W * i)) + sum(1 << (_W * (n + j - 1)) for j in range(i + 1, n + 1))
                for i in range(n)
            )
            self.exp_fields = tuple(range(n))
            self.deg_shift = _W * (2 * n - 1)
        elif order == "lex":
            self.units = tuple(1 << (_W * (n - 1 - i)) for i in range(n))
            self.exp_fields = tuple(n - 1 - i for i in range(n))
            self.deg_shift = None
        else:
            raise ValueError(f"unknown monomial order {order!r}")
        self.guard = sum(1 << (_W * f + _W - 1) for f in set(self.exp_fields))

    def pack(self, m) -> int:
        if any(e >= _MAX_EXP for e in m):
            raise OverflowError(f"exponent too large for packed monomial: {m}")
        return sum(e * u for e, u in zip(m, self.units))

    def unpack(self, p: int) -> tuple:
        return tuple((p >> (_W * f)) & _FMASK for f in self.exp_fields)

    def divides(self, a: int, b: int) -> bool:
        g = self.guard
        return ((b | g) - a) & g == g

    def degree(self, p: int) -> int:
        if self.deg_shift is not None:
            return (p >> self.deg_shift) & _FMASK
        return sum(self.unpack(p))

    def lcm(self, a: int, b: int) -> int:
        return self.pack(tuple(max(x, y) for x, y in zip(self.unpack(a), self.unpack(b))))

    def coprime(self, a: int, b: int) -> bool:
        return not any(x and y for x, y in zip(self.unpack(a), self.unpack(b)))

    def to_internal(self, f: Polynomial) -> dict:
        return {self.pack(m): c for m, c in f.terms.items()}

    def to_poly(self, d) -> Polynomial:
        items = d.items() if isinstance(d, dict) else d
        return Polynomial._raw(self.nvars, {self.unpack(m): c for m, c in items})


class _Elem:
    __slots__ = ("lead", "tail", "sugar")

    def __init__(self, terms: list, sugar: int):
        # terms: [(packed, coeff)] sorted descending, leading coefficient 1
        self.lead = terms[0][0]
        self.tail = terms[1:]
        self.sugar = sugar

    def items(self):
        return [(self.lead, mpq(1))] + self.tail


def _monic_sorted(d: dict) -> list:
    items = sorted(d.items(), reverse=True)
    lc = items[0][1]
    if lc != 1:
        inv = 1 / lc
        items = [(m, c * inv) for m, c in items]
    return items


class _Reducer:
    def __init__(self, pk: _Packing):
        self.pk = pk
        self.elems: list = []

    def find_divisor(self, m: int):
        g = self.pk.guard
        for e in self.elems:
            if ((m | g) - e.lead) & g == g:
                return e
        return None

    def reduce(self, f: dict, full: bool = True) -> list:
        """Normal form of ``f`` (packed dict); returns descending term list."""
        f = dict(f)
        heap = [-m for m in f]
        heapq.heapify(heap)
        rem = []
        pop, push = heapq.heappop, heapq.heappush
        guard = self.pk.guard
        elems = self.elems
        while heap:
            m = -pop(heap)
            c = f.pop(m, None)
            if c is None:
                continue
            mg = m | guard
            for e in elems:
                if (mg - e.lead) & guard == guard:
                    break
            else:
                rem.append((m, c))
                if not full:
                    rem.extend(sorted(f.items(), reverse=True))
                    return rem
                continue
            q = m - e.lead
            for gm, gc in e.tail:
                t = q + gm
                v = f.get(t)
                if v is None:
                    f[t] = -c * gc
                    push(heap, -t)
                else:
                    v = v - c * gc
                    if v:
                        f[t] = v
                    else:
                        del f[t]
        return rem


@dataclass
class GroebnerStats:
    pairs_reduced: int = 0
    zero_reductions: int = 0
    pairs_skipped: int = 0
    max_degree_seen: int = 0


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced monic Groebner basis, sorted by increasing leading monomial."""

    basis: tuple
    order: str
    nvars: int
    stats: GroebnerStats = field(default_factory=GroebnerStats, compare=False, repr=False)

    @cached_property
    def _packing(self) -> _Packing:
        return _Packing(self.nvars, self.order)

    @cached_property
    def leading_monomials(self) -> tuple:
        return tuple(g.leading_term(self.order)[0] for g in self.basis)

    def is_unit(self) -> bool:
        return len(self.basis) == 1 and self.basis[0].is_constant() and bool(self.basis[0])

    def is_zero_ideal(self) -> bool:
        return not self.basis

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self)

    def contains(self, f: Polynomial) -> bool:
        return not normal_form(f, self)

    def __len__(self):
        return len(self.basis)


def _reducer_for(gb: GroebnerBasis) -> _Reducer:
    pk = gb._packing
    red = _Reducer(pk)
    for g in gb.basis:
        red.elems.append(_Elem(_monic_sorted(pk.to_internal(g)), g.degree()))
    return red


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Fully reduced remainder of ``f``; zero iff ``f`` lies in the ideal."""
    if f.nvars != gb.nvars:
        raise ValueError(f"polynomial has {f.nvars} variables, basis has {gb.nvars}")
    red = _reducer_for(gb)
    return gb._packing.to_poly(red.reduce(gb._packing.to_internal(f)))


def groebner_basis(gens: Sequence[Polynomial], order: str = "degrevlex", caps: Caps | None = None,
                   nvars: int | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Pairs are processed by increasing sugar degree (which is the lcm degree for
    homogeneous input), ties broken by pair index, with the Gebauer-Moeller
    criteria. Raises :class:`GroebnerCapExceeded` when a cap is hit.
    """
    caps = caps or Caps.from_env()
    gens = list(gens)
    if nvars is None:
        if not gens:
            raise ValueError("need at least one generator or an explicit nvars")
        nvars = gens[0].nvars
    if any(g.nvars != nvars for g in gens):
        raise ValueError("generators live in different rings")
    pk = _Packing(nvars, order)
    stats = GroebnerStats()
    polys: list = []  # all elements ever added, indexed
    red = _Reducer(pk)
    active: list = []  # indices of current (non-redundant) elements
    pairs: list = []  # heap of (sugar, lcm_deg, i, j, lcm)
    one = [(0, mpq(1))]

    def finish(elems) -> GroebnerBasis:
        return _finalize(pk, elems, order, nvars, stats)

    def add(terms: list, sugar: int):
        nonlocal active
        h = len(polys)
        e = _Elem(terms, sugar)
        polys.append(e)
        deg = pk.degree(e.lead)
        stats.max_degree_seen = max(stats.max_degree_seen, deg)
        if deg > caps.max_degree:
            raise GroebnerCapExceeded("degree", caps.max_degree)
        lh = e.lead
        # Gebauer-Moeller update
        cands = [(g, pk.lcm(lh, polys[g].lead)) for g in active]
        keep = []
        for idx, (g, l) in enumerate(cands):
            if pk.coprime(lh, polys[g].lead):
                keep.append((g, l, True))
                continue
            others = [l2 for g2, l2 in cands[idx + 1:]] + [l2 for _, l2, _ in keep]
            if any(pk.divides(l2, l) for l2 in others):
                stats.pairs_skipped += 1
                continue
            keep.append((g, l, False))
        new_pairs = []
        for g, l, cop in keep:
            if cop:
                stats.pairs_skipped += 1
                continue
            new_pairs.append((g, l))
        # drop old pairs made redundant by lh (chain criterion B_k)
        if pairs:
            survivors = []
            for item in pairs:
                _, _, i, j, l = item
                if pk.divides(lh, l) and pk.lcm(polys[i].lead, lh) != l and pk.lcm(polys[j].lead, lh) != l:
                    stats.pairs_skipped += 1
                    continue
                survivors.append(item)
            if len(survivors) != len(pairs):
                pairs[:] = survivors
                heapq.heapify(pairs)
        for g, l in new_pairs:
            eg = polys[g]
            ld = pk.degree(l)
            sug = max(eg.sugar - pk.degree(eg.lead), sugar - pk.degree(lh)) + ld
            heapq.heappush(pairs, (sug, ld, g, h, l))
        active = [g for g in active if not pk.divides(lh, polys[g].lead)] + [h]
        red.elems = [polys[g] for g in active]

    # seed: reduce each generator against the previous ones
    for f in gens:
        d = pk.to_internal(f)
        if not d:
            continue
        r = red.reduce(d) if red.elems else sorted(d.items(), reverse=True)
        if not r:
            continue
        terms = _monic_sorted(dict(r))
        if terms[0][0] == 0:
            return finish([_Elem(one, 0)])
        add(terms, max(pk.degree(m) for m, _ in terms))

    while pairs:
        sug, _, i, j, l = heapq.heappop(pairs)
        if stats.pairs_reduced >= caps.max_pairs:
            raise GroebnerCapExceeded("pairs", caps.max_pairs)
        stats.pairs_reduced += 1
        fi, fj = polys[i], polys[j]
        qi, qj = l - fi.lead, l - fj.lead
        s: dict = {}
        for m, c in fi.tail:
            s[m + qi] = c
        for m, c in fj.tail:
            t = m + qj
            v = s.get(t)
            if v is None:
                s[t] = -c
            else:
                v = v - c
                if v:
                    s[t] = v
                else:
                    del s[t]
        if not s:
            stats.zero_reductions += 1
            continue
        r = red.reduce(s)
        if not r:
            stats.zero_reductions += 1
            continue
        terms = _monic_sorted(dict(r))
        if terms[0][0] == 0:
            return finish([_Elem(one, 0)])
        add(terms, sug)

    return finish([polys[g] for g in active])


def _finalize(pk: _Packing, elems: list, order: str, nvars: int, stats: GroebnerStats) -> GroebnerBasis:
    # minimal basis, then inter-reduce tails
    elems = sorted(elems, key=lambda e: e.lead)
    minimal = []
    for e in elems:
        if not any(pk.divides(o.lead, e.lead) for o in minimal):
            minimal.append(e)
    red = _Reducer(pk)
    out = []
    for idx, e in enumerate(minimal):
        red.elems = [o for o in minimal if o is not e]
        tail = red.reduce(dict(e.tail)) if e.tail else []
        out.append([(e.lead, mpq(1))] + tail)
    basis = tuple(pk.to_poly(t) for t in out)
    return GroebnerBasis(basis, order, nvars, stats)


def spoly(f: Polynomial, g: Polynomial, order: str = "degrevlex") -> Polynomial:
    """S-polynomial of monic-normalised ``f`` and ``g``."""
    from .polyring import mono_div, mono_lcm

    mf, cf = f.leading_term(order)
    mg, cg = g.leading_term(order)
    l = mono_lcm(mf, mg)
    return f.mul_monomial(mono_div(l, mf), 1 / cf) - g.mul_monomial(mono_div(l, mg), 1 / cg)


def is_groebner(gb: GroebnerBasis) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    for f, g in itertools.combinations(gb.basis, 2):
        if normal_form(spoly(f, g, gb.order), gb):
            return False
    return True


def is_reduced(gb: GroebnerBasis) -> bool:
    lms = gb.leading_monomials
    from .polyring import mono_divides

    for i, g in enumerate(gb.basis):
        if g.leading_term(gb.order)[1] != 1:
            return False
        for j, m in enumerate(lms):
            if j != i and any(mono_divides(m, t) for t in g.terms):
                return False
    return True


# -- invariants of the quotient ---------------------------------------------------

@dataclass(frozen=True)
class HilbertSeries:
    """numerator(t) / (1 - t)^denominator_power."""

    numerator: UniPoly
    denominator_power: int

    def canonical(self) -> "HilbertSeries":
        if not self.numerator:
            return HilbertSeries(UniPoly(), 0)
        q, n = self.numerator.strip_one_minus_t(self.denominator_power)
        return HilbertSeries(q, self.denominator_power - n)

    def raw(self, nvars: int) -> "HilbertSeries":
        """Same series written over (1-t)^nvars."""
        c = self.canonical()
        if c.denominator_power > nvars:
            raise ValueError("series has a pole of order above the variable count")
        return HilbertSeries(c.numerator * UniPoly.one_minus_t_power(nvars - c.denominator_power), nvars)

    def __eq__(self, other):
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        a, b = self.canonical(), other.canonical()
        return a.numerator == b.numerator and a.denominator_power == b.denominator_power

    def __hash__(self):
        c = self.canonical()
        return hash((c.numerator, c.denominator_power))

    def dimension(self) -> int:
        c = self.canonical()
        return -1 if not c.numerator else c.denominator_power

    def degree(self) -> int:
        c = self.canonical()
        return c.numerator(1) if c.numerator else 0

    def coefficients(self, upto: int) -> list:
        """Hilbert function values h(0..upto)."""
        num = list(self.numerator.coeffs) + [0] * (upto + 1)
        vals = num[: upto + 1]
        for _ in range(self.denominator_power):
            acc = 0
            for i in range(upto + 1):
                acc += vals[i]
                vals[i] = acc
        return vals


def _minimalize(gens: list) -> list:
    gens = sorted(set(gens), key=lambda m: (sum(m), m))
    out = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(o, g)) for o in out):
            out.append(g)
    return out


def monomial_hilbert_numerator(gens, nvars: int) -> UniPoly:
    """Numerator N(t) with HS(k[x]/(gens)) = N(t)/(1-t)^nvars, by pivot recursion."""
    return _hn(tuple(_minimalize([tuple(g) for g in gens])))


_HN_CACHE: dict = {}


def _hn(gens: tuple) -> UniPoly:
    if not gens:
        return UniPoly([1])
    hit = _HN_CACHE.get(gens)
    if hit is not None:
        return hit
    # base case: pairwise coprime supports
    seen = set()
    coprime = True
    for g in gens:
        sup = {i for i, e in enumerate(g) if e}
        if seen & sup:
            coprime = False
            break
        seen |= sup
    if coprime:
        res = UniPoly([1])
        for g in gens:
            res = res * UniPoly.from_exponents([(0, 1), (sum(g), -1)])
    else:
        n = len(gens[0])
        counts = [sum(1 for g in gens if g[i]) for i in range(n)]
        mixed = [g for g in gens if sum(1 for e in g if e) > 1]
        var = max(range(n), key=lambda i: (sum(1 for g in mixed if g[i]), counts[i]))
        e = min(g[var] for g in mixed if g[var])
        p = tuple(e if i == var else 0 for i in range(n))
        plus = tuple(_minimalize(list(gens) + [p]))
        colon = tuple(_minimalize([tuple(max(a - b, 0) for a, b in zip(g, p)) for g in gens]))
        res = _hn(plus) + _hn(colon).shift(e)
    if len(_HN_CACHE) > 200_000:
        _HN_CACHE.clear()
    _HN_CACHE[gens] = res
    return res


def hilbert_series_quotient(gb: GroebnerBasis) -> HilbertSeries:
    """Hilbert series of k[x]/LT(I), returned over (1-t)^nvars (raw form)."""
    if gb.is_unit():
        return HilbertSeries(UniPoly(), gb.nvars)
    return HilbertSeries(monomial_hilbert_numerator(gb.leading_monomials, gb.nvars), gb.nvars)


def krull_dimension(gb: GroebnerBasis) -> int:
    """Largest set of variables containing the support of no leading monomial; -1 for (1)."""
    if gb.is_unit():
        return -1
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in gb.leading_monomials]
    n = gb.nvars
    for size in range(n, -1, -1):
        for S in itertools.combinations(range(n), size):
            s = set(S)
            if not any(sup <= s for sup in supports):
                return size
    return -1  # pragma: no cover - empty set is always independent unless unit


def degree_of_quotient(gb: GroebnerBasis) -> int:
    return hilbert_series_quotient(gb).degree()


# -- saturation and regular sequences ------------------------------------------------

def arrangement_product(nvars: int, arrangement: str) -> Polynomial:
    """Product of the linear forms of the coordinate, braid or BC arrangement."""
    one = Polynomial.one(nvars)
    xs = [Polynomial.var(nvars, i) for i in range(nvars)]
    prod = one
    if arrangement in ("coordinate", "BC"):
        for x in xs:
            prod = prod * x
    if arrangement in ("braid", "BC"):
        for a in range(nvars):
            for b in range(a + 1, nvars):
                prod = prod * (xs[a] - xs[b])
    if arrangement not in ("coordinate", "braid", "BC"):
        raise ValueError(f"unknown arrangement {arrangement!r}")
    return prod


def arrangement_forms(nvars: int, arrangement: str) -> list:
    """Linear forms of an arrangement as (a, b): x_a when b is None, else x_a - x_b."""
    forms = []
    if arrangement in ("coordinate", "BC"):
        forms += [(a, None) for a in range(nvars)]
    if arrangement in ("braid", "BC"):
        forms += [(a, b) for a in range(nvars) for b in range(a + 1, nvars)]
    if arrangement not in ("coordinate", "braid", "BC"):
        raise ValueError(f"unknown arrangement {arrangement!r}")
    return forms


def linear_substitute(f: Polynomial, images: Sequence[Polynomial]) -> Polynomial:
    """f(images[0], ..., images[n-1])."""
    n = images[0].nvars
    powers: dict = {}
    out = Polynomial.zero(n)
    for m, c in f.terms.items():
        t = Polynomial.constant(n, c)
        for i, e in enumerate(m):
            if e:
                if (i, e) not in powers:
                    powers[i, e] = images[i] ** e
                t = t * powers[i, e]
        out = out + t
    return out


def _saturate_last(gens: list, n: int, caps: Caps | None) -> list:
    """I : x_n^inf for homogeneous I: strip x_n from a degrevlex basis (x_n is the smallest variable)."""
    gb = groebner_basis(gens, "degrevlex", caps, nvars=n)
    out = []
    for g in gb.basis:
        e = min(m[-1] for m in g.terms)
        out.append(Polynomial(n, {m[:-1] + (m[-1] - e,): c for m, c in g.terms.items()}))
    return out


def saturate_by_form(gens: Sequence[Polynomial], form: tuple, nvars: int, caps: Caps | None = None) -> list:
    """Generators of I : l^inf for homogeneous I and l = x_a or x_a - x_b.

    Coordinates are changed so that l becomes the last variable, where the
    degrevlex basis gives the saturation directly, then changed back.
    """
    a, b = form
    n = nvars
    others = [i for i in range(n) if i != a]
    pos = {i: p for p, i in enumerate(others)}
    pos[a] = n - 1
    fwd = [Polynomial.var(n, pos[i]) for i in range(n)]
    back = [None] * n
    for i in range(n):
        back[pos[i]] = Polynomial.var(n, i)
    if b is not None:
        fwd[a] = fwd[a] + Polynomial.var(n, pos[b])
        back[pos[a]] = Polynomial.var(n, a) - Polynomial.var(n, b)
    sat = _saturate_last([linear_substitute(g, fwd) for g in gens], n, caps)
    return [linear_substitute(g, back) for g in sat]


@dataclass(frozen=True)
class SaturationResult:
    empty_off_arrangement: bool
    witness_basis: GroebnerBasis
    method: str = "rabinowitsch"

    def contains(self, f: Polynomial) -> bool:
        """Membership of ``f`` (in the original ring) in the saturated ideal."""
        if self.method == "rabinowitsch":
            return self.witness_basis.contains(f.extend(1))
        return self.witness_basis.contains(f)


def saturate_off_arrangement(gens: Sequence[Polynomial], arrangement: str = "BC",
                             caps: Caps | None = None, nvars: int | None = None,
                             product: Polynomial | None = None, method: str = "auto") -> SaturationResult:
    """Decide whether V(gens) has points off the arrangement; keep a basis for membership tests.

    ``rabinowitsch``: adjoin y (last variable) with 1 - y*prod; f in the
    original variables lies in I : prod^inf iff it reduces to zero modulo
    that basis. ``iterated``: for homogeneous input, saturate by each linear
    form of the arrangement in turn; the witness basis is then the saturated
    ideal itself. ``auto`` picks ``iterated`` for homogeneous input without a
    custom product.
    """
    gens = [g for g in gens if g]
    n = nvars if nvars is not None else gens[0].nvars
    if method == "auto":
        homog = all(g.is_homogeneous() for g in gens)
        method = "iterated" if homog and product is None else "rabinowitsch"
    if method == "iterated":
        if product is not None:
            raise ValueError("iterated saturation works from the arrangement's forms, not a product")
        G = gens
        for form in arrangement_forms(n, arrangement):
            if any(g.is_constant() for g in G):
                break
            G = saturate_by_form(G, form, n, caps)
        gb = groebner_basis(G, "degrevlex", caps, nvars=n)
        return SaturationResult(gb.is_unit(), gb, "iterated")
    if method != "rabinowitsch":
        raise ValueError(f"unknown saturation method {method!r}")
    prod = product if product is not None else arrangement_product(n, arrangement)
    y = Polynomial.var(n + 1, n)
    rab = Polynomial.one(n + 1) - y * prod.extend(1)
    gb = groebner_basis([g.extend(1) for g in gens] + [rab], "degrevlex", caps, nvars=n + 1)
    return SaturationResult(gb.is_unit(), gb, "rabinowitsch")


def codimension(gb: GroebnerBasis) -> int:
    """nvars - dim; the unit ideal gets nvars + 1."""
    return gb.nvars - krull_dimension(gb)


def is_regular_sequence(fs: Sequence[Polynomial], caps: Caps | None = None) -> bool:
    """Homogeneous non-constant forms form a regular sequence iff codim equals their count."""
    fs = list(fs)
    for f in fs:
        if not f.is_homogeneous() or f.is_constant():
            raise ValueError("regular-sequence test needs homogeneous non-constant forms")
    gb = groebner_basis(fs, "degrevlex", caps)
    return codimension(gb) == len(fs)
