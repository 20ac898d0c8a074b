"""Exact arithmetic in cyclotomic fields, with a formal square root of p.

Values are finite Q-linear combinations of roots of unity, stored sparsely as
{exponent mod M: Fraction} and kept in a canonical form so that equality is a
dictionary comparison.  The canonical basis of Q(zeta_M) is the tensor basis
over the prime-power parts of M: inside the l-part l^a of M an exponent is
admissible when its top base-l digit is at most l - 2, and a top digit of
l - 1 is rewritten through 1 + zeta + ... + zeta^(l-1) = 0 at scale l^(a-1).
Rewriting one prime component never disturbs the others (the adjustment is a
multiple of the CRT idempotent for that prime), so one pass per prime puts
any combination into canonical form.

Square roots of p are kept formal: a coefficient is a pair a + b*sqrt(p)
with a, b cyclotomic.  Formal equality of pairs is almost always decided
componentwise; the one ambiguous case (both components of the difference
nonzero with matching norms, so that a hidden relation a = -b*sqrt(p) could
make the value zero) is settled exactly by folding sqrt(p) into the
cyclotomics through the quadratic Gauss sum.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, Union

import sympy

Scalar = Union[int, Fraction]

# ---------------------------------------------------------------------------
# factorization / CRT helpers (cached; moduli repeat heavily)
# ---------------------------------------------------------------------------

_FACTOR_CACHE: Dict[int, Dict[int, int]] = {}
_IDEM_CACHE: Dict[tuple, int] = {}


def _factor(n: int) -> Dict[int, int]:
    f = _FACTOR_CACHE.get(n)
    if f is None:
        f = {int(l): int(a) for l, a in sympy.factorint(n).items()}
        _FACTOR_CACHE[n] = f
    return f


def _crt_idem(M: int, la: int) -> int:
    """The idempotent u with u = 1 mod la and u = 0 mod M/la (la || M)."""
    key = (M, la)
    u = _IDEM_CACHE.get(key)
    if u is None:
        rest = M // la
        u = (rest * pow(rest, -1, la)) % M if rest > 1 else 1 % M
        _IDEM_CACHE[key] = u
    return u


def _canonicalize(M: int, terms: Dict[int, Fraction]) -> Dict[int, Fraction]:
    work = terms
    for l, a in _factor(M).items():
        la = l**a
        lam1 = la // l
        u = _crt_idem(M, la)
        new: Dict[int, Fraction] = {}
        for e, c in work.items():
            el = e % la
            top, r = divmod(el, lam1)
            if top != l - 1:
                new[e] = new.get(e, Fraction(0)) + c
            else:
                for k in range(l - 1):
                    e2 = (e + (k * lam1 + r - el) * u) % M
                    new[e2] = new.get(e2, Fraction(0)) - c
        work = new
    return {e: c for e, c in work.items() if c}


# ---------------------------------------------------------------------------
# CycValue: canonical sparse elements of Q(zeta_M)
# ---------------------------------------------------------------------------


class CycValue:
    """An element of Q(zeta_M), canonical; immutable by convention."""

    __slots__ = ("M", "c")

    def __init__(self, M: int, coeffs: Dict[int, Scalar], *, _canonical: bool = False):
        if M < 1:
            raise ValueError("modulus must be positive")
        self.M = M
        if _canonical:
            self.c = coeffs  # trusted: already canonical Fractions mod M
        else:
            raw: Dict[int, Fraction] = {}
            for e, v in coeffs.items():
                fe = e % M
                raw[fe] = raw.get(fe, Fraction(0)) + Fraction(v)
            self.c = _canonicalize(M, raw)

    # -- constructors -------------------------------------------------------

    @staticmethod
    def rational(v: Scalar) -> "CycValue":
        v = Fraction(v)
        return CycValue(1, {0: v} if v else {}, _canonical=True)

    @staticmethod
    def zero() -> "CycValue":
        return CycValue(1, {}, _canonical=True)

    @staticmethod
    def one() -> "CycValue":
        return CycValue.rational(1)

    @staticmethod
    def root(num: int, den: int) -> "CycValue":
        """The root of unity e^(2*pi*i*num/den), at the reduced modulus."""
        if den < 1:
            raise ValueError("denominator must be positive")
        num %= den
        g = gcd(num, den)
        return CycValue(den // g, {num // g: Fraction(1)})

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.c

    def is_rational(self) -> bool:
        return all(e == 0 for e in self.c)

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("value is not rational: %r" % (self,))
        return self.c.get(0, Fraction(0))

    def is_monomial(self) -> bool:
        return len(self.c) == 1

    def embed(self, M2: int) -> "CycValue":
        """Rewrite in Q(zeta_M2); M must divide M2."""
        if M2 == self.M:
            return self
        if M2 % self.M:
            raise ValueError("cannot embed modulus %d into %d" % (self.M, M2))
        k = M2 // self.M
        return CycValue(M2, {e * k: c for e, c in self.c.items()})

    def _pair(self, other: "CycValue"):
        L = self.M * other.M // gcd(self.M, other.M)
        return L, self.embed(L), other.embed(L)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other) -> "CycValue":
        other = _coerce(other)
        L, x, y = self._pair(other)
        out = dict(x.c)
        for e, c in y.c.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return CycValue(L, out, _canonical=True)

    __radd__ = __add__

    def __neg__(self) -> "CycValue":
        return CycValue(self.M, {e: -c for e, c in self.c.items()}, _canonical=True)

    def __sub__(self, other) -> "CycValue":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "CycValue":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "CycValue":
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            if not f:
                return CycValue.zero()
            return CycValue(self.M, {e: c * f for e, c in self.c.items()}, _canonical=True)
        other = _coerce(other)
        L, x, y = self._pair(other)
        out: Dict[int, Fraction] = {}
        for e1, c1 in x.c.items():
            for e2, c2 in y.c.items():
                e = e1 + e2
                if e >= L:
                    e -= L
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return CycValue(L, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "CycValue":
        if n < 0:
            return self.inverse() ** (-n)
        out = CycValue.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __truediv__(self, other) -> "CycValue":
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return self * _coerce(other).inverse()

    # -- Galois -------------------------------------------------------------

    def galois(self, t: int) -> "CycValue":
        """Apply zeta -> zeta^t (t invertible mod M)."""
        t %= self.M
        if gcd(t, self.M) != 1:
            raise ValueError("galois exponent not invertible mod modulus")
        return CycValue(self.M, {(e * t) % self.M: c for e, c in self.c.items()})

    def conjugate(self) -> "CycValue":
        if self.M <= 2:
            return self
        return self.galois(self.M - 1)

    # -- inversion ----------------------------------------------------------

    def inverse(self) -> "CycValue":
        if self.is_zero():
            raise ZeroDivisionError("inverting zero")
        if self.is_monomial():
            ((e, c),) = self.c.items()
            return CycValue(self.M, {(-e) % self.M: 1 / c})
        nrm = self * self.conjugate()
        if nrm.is_rational():
            r = nrm.as_fraction()
            if r:
                return self.conjugate() * (1 / r)
        return self._inverse_poly()

    def _inverse_poly(self) -> "CycValue":
        # general fallback: invert as a polynomial modulo the cyclotomic
        # polynomial, after dividing out any common cycle of the exponents.
        g = self.M
        for e in self.c:
            g = gcd(g, e)
        M0 = self.M // g
        x = sympy.Symbol("x")
        f = sympy.Poly(
            {e // g: sympy.Rational(c.numerator, c.denominator) for e, c in self.c.items()},
            x,
            domain="QQ",
        )
        phi = sympy.Poly(sympy.cyclotomic_poly(M0, x), x, domain="QQ")
        inv = f.invert(phi)
        out: Dict[int, Fraction] = {}
        for (e,), c in inv.terms():
            cr = sympy.Rational(c)
            out[(e * g) % self.M] = Fraction(int(cr.p), int(cr.q))
        return CycValue(self.M, out)

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CycValue.rational(other)
        if not isinstance(other, CycValue):
            return NotImplemented
        _, x, y = self._pair(other)
        return x.c == y.c

    def __ne__(self, other) -> bool:
        r = self.__eq__(other)
        return NotImplemented if r is NotImplemented else not r

    __hash__ = None  # mutable-dict-backed; not hashable

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        bits = []
        for e in sorted(self.c):
            c = self.c[e]
            if e == 0:
                bits.append(str(c))
            elif c == 1:
                bits.append("z%d^%d" % (self.M, e))
            else:
                bits.append("%s*z%d^%d" % (c, self.M, e))
            if len(bits) >= 8 and len(self.c) > 9:
                bits.append("... (%d terms, M=%d)" % (len(self.c), self.M))
                break
        return " + ".join(bits)


def _coerce(v) -> CycValue:
    if isinstance(v, CycValue):
        return v
    if isinstance(v, (int, Fraction)):
        return CycValue.rational(v)
    raise TypeError("cannot coerce %r to CycValue" % (v,))


# ---------------------------------------------------------------------------
# quadratic Gauss sums and the exact sqrt(p) fold
# ---------------------------------------------------------------------------

_SQRT_CACHE: Dict[int, CycValue] = {}


def quad_gauss_sum(p: int) -> CycValue:
    """sum_t zeta_p^(t^2) over t mod p; squares to (-1 | p) * p."""
    out: Dict[int, Fraction] = {}
    for t in range(p):
        e = (t * t) % p
        out[e] = out.get(e, Fraction(0)) + 1
    return CycValue(p, out)


def sqrtp_cyc(p: int) -> CycValue:
    """The positive square root of p as an exact cyclotomic value.

    Gauss: the quadratic sum equals +sqrt(p) for p = 1 mod 4 and +i*sqrt(p)
    for p = 3 mod 4 (the positive choices), so sqrt(p) itself is the sum,
    possibly rotated by -i.
    """
    v = _SQRT_CACHE.get(p)
    if v is None:
        g = quad_gauss_sum(p)
        v = g if p % 4 == 1 else g * CycValue.root(3, 4)
        _SQRT_CACHE[p] = v
    return v


# ---------------------------------------------------------------------------
# SqrtVal: a + b*sqrt(p) with cyclotomic components
# ---------------------------------------------------------------------------


class SqrtVal:
    """An exact value a + b*sqrt(p); the square root stays formal."""

    __slots__ = ("p", "a", "b")

    def __init__(self, p: int, a: CycValue, b: CycValue | None = None):
        self.p = p
        self.a = a
        self.b = b if b is not None else CycValue.zero()

    @staticmethod
    def of(p: int, v) -> "SqrtVal":
        if isinstance(v, SqrtVal):
            if v.p != p:
                raise ValueError("mixed characteristics")
            return v
        return SqrtVal(p, _coerce(v))

    @staticmethod
    def zero(p: int) -> "SqrtVal":
        return SqrtVal(p, CycValue.zero())

    @staticmethod
    def one(p: int) -> "SqrtVal":
        return SqrtVal(p, CycValue.one())

    @staticmethod
    def sqrt_p(p: int) -> "SqrtVal":
        return SqrtVal(p, CycValue.zero(), CycValue.one())

    def _check(self, other: "SqrtVal"):
        if self.p != other.p:
            raise ValueError("mixed characteristics: %d vs %d" % (self.p, other.p))

    def __add__(self, other) -> "SqrtVal":
        other = SqrtVal.of(self.p, other)
        return SqrtVal(self.p, self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self) -> "SqrtVal":
        return SqrtVal(self.p, -self.a, -self.b)

    def __sub__(self, other) -> "SqrtVal":
        return self + (-SqrtVal.of(self.p, other))

    def __mul__(self, other) -> "SqrtVal":
        if isinstance(other, (int, Fraction, CycValue)):
            v = _coerce(other)
            return SqrtVal(self.p, self.a * v, self.b * v)
        other = SqrtVal.of(self.p, other)
        return SqrtVal(
            self.p,
            self.a * other.a + (self.b * other.b) * self.p,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "SqrtVal":
        if n < 0:
            return self.inverse() ** (-n)
        out = SqrtVal.one(self.p)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def times_p_pow(self, k: Fraction) -> "SqrtVal":
        """Multiply by p^k for a half-integer k (exactly)."""
        k = Fraction(k)
        n = k * 2
        if n.denominator != 1:
            raise ValueError("only half-integer powers of p are supported")
        n = n.numerator
        if n % 2 == 0:
            s = Fraction(self.p) ** (n // 2)
            return SqrtVal(self.p, self.a * s, self.b * s)
        j = (n - 1) // 2  # p^j * sqrt(p)
        return SqrtVal(
            self.p,
            self.b * (Fraction(self.p) ** (j + 1)),
            self.a * (Fraction(self.p) ** j),
        )

    def conj(self) -> "SqrtVal":
        """Complex conjugation (fixes the real sqrt(p))."""
        return SqrtVal(self.p, self.a.conjugate(), self.b.conjugate())

    def inverse(self) -> "SqrtVal":
        nrm = self.a * self.a - (self.b * self.b) * self.p
        if nrm.is_zero():
            # a = +-sqrt(p)*b exactly; fold and invert in the cyclotomics.
            folded = self.fold()
            return SqrtVal(self.p, folded.inverse())
        ninv = nrm.inverse()
        return SqrtVal(self.p, self.a * ninv, -self.b * ninv)

    def fold(self) -> CycValue:
        """The value with sqrt(p) replaced by its exact cyclotomic form."""
        if self.b.is_zero():
            return self.a
        return self.a + self.b * sqrtp_cyc(self.p)

    def is_zero(self) -> bool:
        if self.a.is_zero() and self.b.is_zero():
            return True
        if self.a.is_zero() or self.b.is_zero():
            return False
        # both nonzero: zero would force a^2 = p*b^2; only then fold.
        if self.a * self.a == (self.b * self.b) * self.p:
            return self.fold().is_zero()
        return False

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, CycValue)):
            other = SqrtVal.of(self.p, other)
        if not isinstance(other, SqrtVal):
            return NotImplemented
        self._check(other)
        return (self - other).is_zero()

    def __ne__(self, other) -> bool:
        r = self.__eq__(other)
        return NotImplemented if r is NotImplemented else not r

    __hash__ = None

    def __repr__(self) -> str:
        if self.b.is_zero():
            return repr(self.a)
        return "(%r) + (%r)*sqrt(%d)" % (self.a, self.b, self.p)


# ---------------------------------------------------------------------------
# LocalFactor: rational functions in X = p^(-s)
# ---------------------------------------------------------------------------


def _pstrip(P: Dict[int, SqrtVal]) -> Dict[int, SqrtVal]:
    return {j: c for j, c in P.items() if not (c.a.is_zero() and c.b.is_zero())}


def _pmul(A: Dict[int, SqrtVal], B: Dict[int, SqrtVal], p: int) -> Dict[int, SqrtVal]:
    out: Dict[int, SqrtVal] = {}
    for j1, c1 in A.items():
        for j2, c2 in B.items():
            j = j1 + j2
            t = c1 * c2
            out[j] = out[j] + t if j in out else t
    return _pstrip(out)


def _peq(A: Dict[int, SqrtVal], B: Dict[int, SqrtVal]) -> bool:
    for j in set(A) | set(B):
        ca = A.get(j)
        cb = B.get(j)
        if ca is None:
            if not cb.is_zero():
                return False
        elif cb is None:
            if not ca.is_zero():
                return False
        elif ca != cb:
            return False
    return True


class LocalFactor:
    """A rational function in X = p^(-s), num/den Laurent polynomials.

    Equality is by cross-multiplication, so no coefficient division ever
    happens on the comparison path.  Substitutions cover the two moves the
    verification needs: a (half-integer) shift s -> s + k, which multiplies
    the coefficient of X^j by p^(-k*j), and the dual swap X -> 1/(p X).
    """

    __slots__ = ("p", "num", "den")

    def __init__(self, p: int, num: Dict[int, SqrtVal], den: Dict[int, SqrtVal]):
        self.p = p
        self.num = _pstrip(num)
        self.den = _pstrip(den)
        if not self.den:
            raise ZeroDivisionError("zero denominator in local factor")

    # -- constructors -------------------------------------------------------

    @staticmethod
    def one(p: int) -> "LocalFactor":
        return LocalFactor(p, {0: SqrtVal.one(p)}, {0: SqrtVal.one(p)})

    @staticmethod
    def constant(c: SqrtVal) -> "LocalFactor":
        return LocalFactor(c.p, {0: c}, {0: SqrtVal.one(c.p)})

    @staticmethod
    def monomial(c: SqrtVal, k: int) -> "LocalFactor":
        return LocalFactor(c.p, {k: c}, {0: SqrtVal.one(c.p)})

    @staticmethod
    def euler(alpha: SqrtVal, f: int) -> "LocalFactor":
        """1 / (1 - alpha * X^f)."""
        p = alpha.p
        return LocalFactor(p, {0: SqrtVal.one(p)}, {0: SqrtVal.one(p), f: -alpha})

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "LocalFactor"):
        if self.p != other.p:
            raise ValueError("mixed characteristics")

    def __mul__(self, other) -> "LocalFactor":
        if isinstance(other, SqrtVal):
            other = LocalFactor.constant(other)
        self._check(other)
        return LocalFactor(
            self.p, _pmul(self.num, other.num, self.p), _pmul(self.den, other.den, self.p)
        )

    __rmul__ = __mul__

    def __truediv__(self, other: "LocalFactor") -> "LocalFactor":
        if isinstance(other, SqrtVal):
            other = LocalFactor.constant(other)
        self._check(other)
        if not other.num:
            raise ZeroDivisionError("dividing by the zero factor")
        return LocalFactor(
            self.p, _pmul(self.num, other.den, self.p), _pmul(self.den, other.num, self.p)
        )

    def __pow__(self, n: int) -> "LocalFactor":
        out = LocalFactor.one(self.p)
        base = self if n >= 0 else LocalFactor(self.p, self.den, self.num)
        for _ in range(abs(n)):
            out = out * base
        return out

    # -- substitutions ------------------------------------------------------

    def subst_shift(self, k: Fraction) -> "LocalFactor":
        """s -> s + k (half-integer k): coefficient of X^j picks up p^(-k*j)."""
        k = Fraction(k)
        return LocalFactor(
            self.p,
            {j: c.times_p_pow(-k * j) for j, c in self.num.items()},
            {j: c.times_p_pow(-k * j) for j, c in self.den.items()},
        )

    def subst_dual(self) -> "LocalFactor":
        """X -> 1/(p*X), i.e. s -> 1 - s."""
        return LocalFactor(
            self.p,
            {-j: c.times_p_pow(Fraction(-j)) for j, c in self.num.items()},
            {-j: c.times_p_pow(Fraction(-j)) for j, c in self.den.items()},
        )

    def conj_coeffs(self) -> "LocalFactor":
        return LocalFactor(
            self.p,
            {j: c.conj() for j, c in self.num.items()},
            {j: c.conj() for j, c in self.den.items()},
        )

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def constant_value(self) -> SqrtVal | None:
        """The constant c with self = c, or None if not constant."""
        if not self.num:
            return SqrtVal.zero(self.p)
        j0 = min(j for j in self.den)
        c = self.num.get(j0)
        if c is None:
            return None
        cand = c * self.den[j0].inverse()
        if _peq(self.num, {j: cand * d for j, d in self.den.items()}):
            return cand
        return None

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, CycValue, SqrtVal)):
            other = LocalFactor.constant(SqrtVal.of(self.p, other))
        if not isinstance(other, LocalFactor):
            return NotImplemented
        self._check(other)
        return _peq(_pmul(self.num, other.den, self.p), _pmul(other.num, self.den, self.p))

    def __ne__(self, other) -> bool:
        r = self.__eq__(other)
        return NotImplemented if r is NotImplemented else not r

    __hash__ = None

    def __repr__(self) -> str:
        def side(P):
            if not P:
                return "0"
            return " + ".join("(%r)*X^%d" % (c, j) for j, c in sorted(P.items()))

        return "[%s] / [%s]" % (side(self.num), side(self.den))
