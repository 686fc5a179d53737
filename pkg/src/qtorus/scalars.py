"""Exact arithmetic for the coefficient field.

Two field flavours are supported:

* ``generic`` -- rational functions in r independent parameters q_1..q_r
  with rational coefficients.  A scalar is a fraction num/den of sparse
  integer-coefficient polynomials.  The stored form is canonical and unique:

  - den is an ordinary polynomial (min exponent 0 in every variable) with
    positive lexicographic leading coefficient,
  - num is a Laurent polynomial whose monomial content is kept in its own
    exponents, and the polynomial part of num is coprime to den (integer
    content included),

  so equality is plain component-wise comparison.

* ``root_of_unity`` -- the field generated over the rationals by a primitive
  m-th root of unity z.  A scalar is a rational-coefficient polynomial in z
  reduced modulo the m-th cyclotomic polynomial, again a unique form.

Both scalar types are immutable, hashable and support ``+ - * / **`` with
automatic coercion of ``int`` and ``Fraction`` operands.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisionByZero, WrongMode

Exponent = tuple[int, ...]
PolyDict = dict[Exponent, int]


# ----------------------------------------------------------------------
# field mode


@dataclass(frozen=True)
class FieldMode:
    """Which coefficient field to work over.

    ``kind`` is ``"generic"`` (r independent parameters) or ``"root"``
    (primitive m-th root of unity, which forces r = 1).
    """

    kind: str
    r: int = 1
    m: int | None = None

    def __post_init__(self):
        if self.kind == "generic":
            if self.r < 1:
                raise ValueError("generic mode needs r >= 1")
            if self.m is not None:
                raise ValueError("generic mode takes no root order m")
        elif self.kind == "root":
            if self.r != 1:
                raise ValueError("root-of-unity mode requires r = 1")
            if self.m is None or self.m < 2:
                raise ValueError("root-of-unity mode requires m >= 2")
        else:
            raise ValueError(f"unknown field mode {self.kind!r}")

    @property
    def is_root(self) -> bool:
        return self.kind == "root"


def generic(r: int = 1) -> FieldMode:
    return FieldMode("generic", r=r)


def root_of_unity(m: int) -> FieldMode:
    return FieldMode("root", r=1, m=m)


# ----------------------------------------------------------------------
# sparse integer polynomials (exponent-tuple -> coefficient)


def _padd(p: PolyDict, q: PolyDict) -> PolyDict:
    out = dict(p)
    for k, c in q.items():
        s = out.get(k, 0) + c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _pneg(p: PolyDict) -> PolyDict:
    return {k: -c for k, c in p.items()}


def _pmul(p: PolyDict, q: PolyDict) -> PolyDict:
    if not p or not q:
        return {}
    if len(p) > len(q):
        p, q = q, p
    out: PolyDict = {}
    for ka, ca in p.items():
        for kb, cb in q.items():
            k = tuple(x + y for x, y in zip(ka, kb))
            s = out.get(k, 0) + ca * cb
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def _pshift(p: PolyDict, e: Exponent) -> PolyDict:
    if not any(e):
        return dict(p)
    return {tuple(x + y for x, y in zip(k, e)): c for k, c in p.items()}


def _pminexp(p: PolyDict, nvars: int) -> Exponent:
    mins = [None] * nvars
    for k in p:
        for v in range(nvars):
            if mins[v] is None or k[v] < mins[v]:
                mins[v] = k[v]
    return tuple(0 if m is None else m for m in mins)


def _plex_lead(p: PolyDict) -> tuple[Exponent, int]:
    k = max(p)
    return k, p[k]


def _pcontent(p: PolyDict) -> int:
    g = 0
    for c in p.values():
        g = math.gcd(g, c)
        if g == 1:
            break
    return g


def _pdeg(p: PolyDict, v: int) -> int:
    return max(k[v] for k in p) if p else -1


def _plead_in(p: PolyDict, v: int) -> PolyDict:
    """Leading coefficient of p viewed in the variable v (a v-free poly)."""
    d = _pdeg(p, v)
    out = {}
    for k, c in p.items():
        if k[v] == d:
            kk = list(k)
            kk[v] = 0
            out[tuple(kk)] = c
    return out


def _pshift_var(p: PolyDict, v: int, by: int) -> PolyDict:
    out = {}
    for k, c in p.items():
        kk = list(k)
        kk[v] += by
        out[tuple(kk)] = c
    return out


def _pdiv_exact(p: PolyDict, g: PolyDict) -> PolyDict:
    """Exact division p / g of multivariate polynomials; raises if inexact."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    quot: PolyDict = {}
    rem = dict(p)
    gk, gc = _plex_lead(g)
    while rem:
        rk, rc = _plex_lead(rem)
        dk = tuple(a - b for a, b in zip(rk, gk))
        if any(d < 0 for d in dk) or rc % gc:
            raise ArithmeticError("inexact polynomial division")
        term = {dk: rc // gc}
        quot = _padd(quot, term)
        rem = _padd(rem, _pneg(_pmul(term, g)))
    return quot


def _prem(p: PolyDict, g: PolyDict, v: int) -> PolyDict:
    """Pseudo-remainder of p by g in the variable v."""
    dg = _pdeg(g, v)
    lcg = _plead_in(g, v)
    while p and _pdeg(p, v) >= dg:
        dp = _pdeg(p, v)
        lcp = _plead_in(p, v)
        p = _padd(_pmul(p, lcg), _pneg(_pmul(_pshift_var(g, v, dp - dg), lcp)))
    return p


def _pnormal_sign(p: PolyDict) -> PolyDict:
    if p and _plex_lead(p)[1] < 0:
        return _pneg(p)
    return p


def _pgcd(p: PolyDict, q: PolyDict, nvars: int) -> PolyDict:
    """Polynomial gcd over the integers (content included), via primitive PRS.

    Inputs must have nonnegative exponents.  The result has a positive
    lexicographic leading coefficient.
    """
    if not p:
        return _pnormal_sign(dict(q))
    if not q:
        return _pnormal_sign(dict(p))
    variables = [v for v in range(nvars) if _pdeg(p, v) > 0 or _pdeg(q, v) > 0]
    return _pgcd_rec(p, q, variables)


def _pgcd_rec(p: PolyDict, q: PolyDict, variables: list[int]) -> PolyDict:
    variables = [v for v in variables if _pdeg(p, v) > 0 or _pdeg(q, v) > 0]
    if not variables:
        zero = next(iter(p))
        g = math.gcd(p[zero], q[next(iter(q))])
        return {zero: g}
    v = variables[-1]
    rest = variables[:-1]
    cp, pp = _content_primitive(p, v, rest)
    cq, qq = _content_primitive(q, v, rest)
    cont = _pgcd_rec(cp, cq, rest)
    a, b = (pp, qq) if _pdeg(pp, v) >= _pdeg(qq, v) else (qq, pp)
    while b:
        r = _prem(a, b, v)
        a = b
        b = _primitive_part(r, v, rest) if r else {}
    return _pnormal_sign(_pmul(cont, a))


def _coeffs_in(p: PolyDict, v: int) -> dict[int, PolyDict]:
    out: dict[int, PolyDict] = {}
    for k, c in p.items():
        kk = list(k)
        d = kk[v]
        kk[v] = 0
        out.setdefault(d, {})[tuple(kk)] = c
    return out


def _content_primitive(p: PolyDict, v: int, rest: list[int]) -> tuple[PolyDict, PolyDict]:
    coeffs = _coeffs_in(p, v)
    it = iter(coeffs.values())
    cont = dict(next(it))
    for c in it:
        if len(cont) == 1 and _plex_lead(cont)[1] in (1, -1) and not any(next(iter(cont))):
            break
        cont = _pgcd_rec(cont, c, rest) if rest else _pgcd_rec(cont, c, [])
    cont = _pnormal_sign(cont)
    return cont, _pdiv_exact(p, cont)


def _primitive_part(p: PolyDict, v: int, rest: list[int]) -> PolyDict:
    _, pp = _content_primitive(p, v, rest)
    return pp


# ----------------------------------------------------------------------
# generic mode: rational functions


class RationalFunction:
    """A rational function in q_1..q_r over the rationals, in canonical form."""

    __slots__ = ("field", "num", "den", "_hash")

    def __init__(self, field: "RationalFunctionField", num: PolyDict, den: PolyDict, _canonical=False):
        self.field = field
        if _canonical:
            self.num, self.den = num, den
        else:
            self.num, self.den = _canonicalize(num, den, field.r)
        self._hash = None

    # -- construction helpers

    def _wrap(self, num: PolyDict, den: PolyDict, canonical=False) -> "RationalFunction":
        return RationalFunction(self.field, num, den, _canonical=canonical)

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            if other.field is not self.field and other.field != self.field:
                return None
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        if isinstance(other, Fraction):
            return self.field.from_fraction(other)
        return None

    # -- predicates

    @property
    def is_zero(self) -> bool:
        return not self.num

    @property
    def is_one(self) -> bool:
        return self.num == self.field._one_poly and self.den == self.field._one_poly

    def sign_hint(self) -> int:
        """Sign of the lex-leading numerator coefficient (for rendering)."""
        if not self.num:
            return 0
        return 1 if _plex_lead(self.num)[1] > 0 else -1

    def monomial_form(self) -> tuple[Fraction, Exponent] | None:
        """Return (c, e) when the value is c * q^e, else None."""
        if len(self.num) != 1 or len(self.den) != 1:
            return None
        (ke, kc), = self.num.items()
        (de, dc), = self.den.items()
        if any(de):
            return None
        return Fraction(kc, dc), ke

    def as_fraction(self) -> Fraction:
        if not self.num:
            return Fraction(0)
        mf = self.monomial_form()
        if mf is None or any(mf[1]):
            raise ValueError("scalar is not a rational constant")
        return mf[0]

    # -- arithmetic

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            if self.den == self.field._one_poly:
                return self._wrap(_padd(self.num, o.num), self.den, canonical=True)
            return self._wrap(_padd(self.num, o.num), self.den)
        num = _padd(_pmul(self.num, o.den), _pmul(o.num, self.den))
        return self._wrap(num, _pmul(self.den, o.den))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __neg__(self):
        return self._wrap(_pneg(self.num), self.den, canonical=True)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        one = self.field._one_poly
        if self.den == one and o.den == one:
            return self._wrap(_pmul(self.num, o.num), one, canonical=True)
        return self._wrap(_pmul(self.num, o.num), _pmul(self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise DivisionByZero("division by zero scalar")
        return self._wrap(_pmul(self.num, o.den), _pmul(self.den, o.num))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def inverse(self) -> "RationalFunction":
        if not self.num:
            raise DivisionByZero("inverse of zero scalar")
        return self._wrap(dict(self.den), dict(self.num))

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k == 0:
            return self.field.one
        base = self if k > 0 else self.inverse()
        k = abs(k)
        num, den = base.num, base.den
        rn, rd = num, den
        for _ in range(k - 1):
            rn = _pmul(rn, num)
            rd = _pmul(rd, den)
        return self._wrap(rn, rd, canonical=True)

    # -- comparison

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((frozenset(self.num.items()), frozenset(self.den.items())))
        return self._hash

    def __repr__(self):
        return f"RationalFunction({self})"

    def __str__(self):
        return self.field.render(self)


def _canonicalize(num: PolyDict, den: PolyDict, r: int) -> tuple[PolyDict, PolyDict]:
    if not den:
        raise DivisionByZero("zero denominator")
    if not num:
        return {}, {(0,) * r: 1}
    # make the denominator an ordinary polynomial (min exponent 0 per variable)
    dmin = _pminexp(den, r)
    if any(dmin):
        shift = tuple(-x for x in dmin)
        den = _pshift(den, shift)
        num = _pshift(num, shift)
    # strip the numerator's monomial part
    nmin = _pminexp(num, r)
    num0 = _pshift(num, tuple(-x for x in nmin)) if any(nmin) else num
    if den == {(0,) * r: 1}:
        g = None
    else:
        g = _pgcd(num0, den, r)
    if g is not None and g != {(0,) * r: 1}:
        num0 = _pdiv_exact(num0, g)
        den = _pdiv_exact(den, g)
    if _plex_lead(den)[1] < 0:
        num0 = _pneg(num0)
        den = _pneg(den)
    return _pshift(num0, nmin), den


class RationalFunctionField:
    """The field of rational functions in q_1..q_r over the rationals."""

    def __init__(self, r: int):
        if r < 1:
            raise ValueError("need at least one parameter")
        self.r = r
        self.mode = generic(r)
        self._one_poly: PolyDict = {(0,) * r: 1}
        self.zero = RationalFunction(self, {}, dict(self._one_poly), _canonical=True)
        self.one = RationalFunction(self, dict(self._one_poly), dict(self._one_poly), _canonical=True)

    def __eq__(self, other):
        return isinstance(other, RationalFunctionField) and other.r == self.r

    def __hash__(self):
        return hash(("generic", self.r))

    def from_int(self, k: int) -> RationalFunction:
        num = {(0,) * self.r: k} if k else {}
        return RationalFunction(self, num, dict(self._one_poly), _canonical=True)

    def from_fraction(self, f: Fraction) -> RationalFunction:
        f = Fraction(f)
        num = {(0,) * self.r: f.numerator} if f.numerator else {}
        return RationalFunction(self, num, {(0,) * self.r: f.denominator}, _canonical=True)

    def monomial(self, coeff: Fraction | int, e: Exponent) -> RationalFunction:
        c = Fraction(coeff)
        if not c:
            return self.zero
        return RationalFunction(self, {tuple(e): c.numerator}, {(0,) * self.r: c.denominator}, _canonical=True)

    def q_power(self, e) -> RationalFunction:
        e = tuple(int(x) for x in e)
        if len(e) != self.r:
            raise ValueError(f"expected {self.r} exponents, got {len(e)}")
        return RationalFunction(self, {e: 1}, dict(self._one_poly), _canonical=True)

    # -- rendering (the canonical text grammar: integers, /, q1..qr, ^, *)

    def _render_poly(self, p: PolyDict) -> str:
        if not p:
            return "0"
        parts = []
        for k in sorted(p, reverse=True):
            c = p[k]
            factors = [f"q{v+1}^{k[v]}" if k[v] != 1 else f"q{v+1}" for v in range(self.r) if k[v]]
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(abs(c))] + factors)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(parts)

    def render(self, s: RationalFunction) -> str:
        num = self._render_poly(s.num)
        if s.den == self._one_poly:
            return num
        if len(s.num) > 1:
            num = f"({num})"
        (de, dc), = s.den.items() if len(s.den) == 1 else ((None, None),)
        if de is not None and not any(de):
            return f"{num}/{dc}"
        return f"{num}/({self._render_poly(s.den)})"


# ----------------------------------------------------------------------
# root-of-unity mode: cyclotomic numbers


def cyclotomic_polynomial(m: int) -> list[int]:
    """Coefficients (ascending, monic) of the m-th cyclotomic polynomial."""
    polys: dict[int, list[int]] = {}

    def phi(k: int) -> list[int]:
        if k in polys:
            return polys[k]
        # x^k - 1 divided by the cyclotomic polynomials of the proper divisors
        num = [-1] + [0] * (k - 1) + [1]
        for d in range(1, k):
            if k % d == 0:
                num = _dense_divexact(num, phi(d))
        polys[k] = num
        return num

    return phi(m)


def _dense_divexact(a: list[int], b: list[int]) -> list[int]:
    a = a[:]
    db, lb = len(b) - 1, b[-1]
    out = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c == 0:
            continue
        assert c % lb == 0
        q = c // lb
        out[i - db] = q
        for j, bc in enumerate(b):
            a[i - db + j] -= q * bc
    assert not any(a)
    return out


class CyclotomicNumber:
    """An element of Q(z), z a primitive m-th root of unity, reduced mod Phi_m."""

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field: "CyclotomicField", coeffs: tuple[Fraction, ...]):
        self.field = field
        self.coeffs = coeffs
        self._hash = None

    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            if other.field != self.field:
                return None
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_fraction(Fraction(other))
        return None

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    @property
    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def sign_hint(self) -> int:
        for c in reversed(self.coeffs):
            if c:
                return 1 if c > 0 else -1
        return 0

    def as_fraction(self) -> Fraction:
        if any(self.coeffs[1:]):
            raise ValueError("scalar is not a rational constant")
        return self.coeffs[0]

    def monomial_form(self):
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicNumber(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicNumber(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return CyclotomicNumber(self.field, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicNumber(self.field, self.field._mul(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def inverse(self) -> "CyclotomicNumber":
        if self.is_zero:
            raise DivisionByZero("inverse of zero scalar")
        return CyclotomicNumber(self.field, self.field._inv(self.coeffs))

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k == 0:
            return self.field.one
        base = self if k > 0 else self.inverse()
        out = base
        for _ in range(abs(k) - 1):
            out = out * base
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __repr__(self):
        return f"CyclotomicNumber({self})"

    def __str__(self):
        return self.field.render(self)


class CyclotomicField:
    """Q(z) for a primitive m-th root of unity z."""

    def __init__(self, m: int):
        if m < 2:
            raise WrongMode("root of unity order must be >= 2")
        self.m = m
        self.r = 1
        self.mode = root_of_unity(m)
        self.phi = cyclotomic_polynomial(m)
        self.degree = len(self.phi) - 1
        d = self.degree
        # reduction rows: z^k as a vector for k = d .. 2d-2, then powers 0..m-1
        rows: list[tuple[Fraction, ...]] = []
        top = tuple(Fraction(-c) for c in self.phi[:d])
        rows.append(top)
        for _ in range(d - 2):
            prev = rows[-1]
            shifted = [Fraction(0)] + list(prev[: d - 1])
            if prev[d - 1]:
                shifted = [s + prev[d - 1] * t for s, t in zip(shifted, top)]
            rows.append(tuple(shifted))
        self._red_rows = rows
        powers = []
        vec = [Fraction(0)] * d
        vec[0] = Fraction(1)
        for _ in range(m):
            powers.append(tuple(vec))
            shifted = [Fraction(0)] + vec[: d - 1]
            if vec[d - 1]:
                shifted = [s + vec[d - 1] * t for s, t in zip(shifted, top)]
            vec = shifted
        self._zeta_powers = powers
        self.zero = CyclotomicNumber(self, tuple([Fraction(0)] * d))
        self.one = CyclotomicNumber(self, tuple([Fraction(1)] + [Fraction(0)] * (d - 1)))

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.m == self.m

    def __hash__(self):
        return hash(("root", self.m))

    def from_int(self, k: int) -> CyclotomicNumber:
        return self.from_fraction(Fraction(k))

    def from_fraction(self, f: Fraction) -> CyclotomicNumber:
        return CyclotomicNumber(self, tuple([Fraction(f)] + [Fraction(0)] * (self.degree - 1)))

    def zeta_power(self, k: int) -> CyclotomicNumber:
        return CyclotomicNumber(self, self._zeta_powers[k % self.m])

    def q_power(self, e) -> CyclotomicNumber:
        e = tuple(int(x) for x in e)
        if len(e) != 1:
            raise ValueError("root-of-unity mode has a single parameter")
        return self.zeta_power(e[0])

    def _mul(self, a: tuple[Fraction, ...], b: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
        d = self.degree
        conv = [Fraction(0)] * (2 * d - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    conv[i + j] += ai * bj
        out = conv[:d]
        for k in range(d, 2 * d - 1):
            c = conv[k]
            if c:
                row = self._red_rows[k - d]
                for i in range(d):
                    if row[i]:
                        out[i] += c * row[i]
        return tuple(out)

    def _inv(self, a: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
        # extended Euclid in Q[x] against Phi_m
        r0 = [Fraction(c) for c in self.phi]
        r1 = list(a)
        while r1 and not r1[-1]:
            r1.pop()
        s0, s1 = [], [Fraction(1)]
        while True:
            while r1 and not r1[-1]:
                r1.pop()
            if len(r1) == 1:
                inv = [c / r1[0] for c in s1]
                inv += [Fraction(0)] * (self.degree - len(inv))
                return tuple(inv[: self.degree])
            q, rem = _dense_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _dense_sub(s0, _dense_mul(q, s1))

    # -- rendering

    def render(self, s: CyclotomicNumber) -> str:
        if s.is_zero:
            return "0"
        parts = []
        for i in range(self.degree - 1, -1, -1):
            c = s.coeffs[i]
            if not c:
                continue
            if i == 0:
                body = str(abs(c))
            else:
                zpow = "z" if i == 1 else f"z^{i}"
                body = zpow if abs(c) == 1 else f"{abs(c)}*{zpow}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(parts)


def _dense_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    q = [Fraction(0)] * max(len(a) - db, 1)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if not c:
            continue
        f = c / lb
        q[i - db] = f
        for j, bc in enumerate(b):
            a[i - db + j] -= f * bc
    while a and not a[-1]:
        a.pop()
    return q, a


def _dense_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _dense_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else Fraction(0)) - (b[i] if i < len(b) else Fraction(0)) for i in range(n)]
    while out and not out[-1]:
        out.pop()
    return out


# ----------------------------------------------------------------------
# public surface

Scalar = RationalFunction | CyclotomicNumber
ScalarField = RationalFunctionField | CyclotomicField

_FIELD_CACHE: dict[FieldMode, ScalarField] = {}


def make_field(mode: FieldMode) -> ScalarField:
    if mode not in _FIELD_CACHE:
        _FIELD_CACHE[mode] = CyclotomicField(mode.m) if mode.is_root else RationalFunctionField(mode.r)
    return _FIELD_CACHE[mode]


def scalar_arith(field: ScalarField, op: str, x: Scalar, y: Scalar | None = None) -> Scalar:
    """Field arithmetic dispatch: add/sub/mul/div take two operands, neg/inv one."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        if y.is_zero:
            raise DivisionByZero("division by zero scalar")
        return x / y
    if op == "neg":
        return -x
    if op == "inv":
        return x.inverse()
    raise ValueError(f"unknown operation {op!r}")
