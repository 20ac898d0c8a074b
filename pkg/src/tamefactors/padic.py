"""Tamely ramified p-adic fields inside one explicit ambient Galois tower.

A *tower* T over F = Q_p is U * F(pi) where U is the unramified extension of
residue degree fT and pi^eT = zeta^tc * p for a chosen twist tc (zeta a fixed
generator of the Teichmuller roots of unity mu_{qT-1}, qT = p^fT, with
eT | qT - 1 and p odd, p not dividing eT).  Such a T/F is Galois with the
metacyclic group

    G = {(k, m): zeta -> zeta^(p^k), pi -> zeta^m * pi},
    eT*m = tc*(p^k - 1) (mod qT-1),   (k1,m1)(k2,m2) = (k1+k2, m1 + p^k1*m2).

Every tame field the verification touches is realized as a *subfield*
E = (f, e, c): residue degree f | fT, ramification e | eT, uniformizer
pi_E = zeta^a * pi^(eT/e) with pi_E^e = zeta_E^c * p, zeta_E = zeta^R,
R = (qT-1)/(p^f-1).  Fixed groups, composita, tensor-product decompositions,
norms, traces and characteristic polynomials are then exact coset
computations -- no polynomial factorization and no precision loss beyond the
p^K working modulus of the element matrices.

Elements are stored as pi-power offsets times matrices over the monomial
basis {zeta^i pi^j} with entries mod p^K; the Galois action is monomial,
Teichmuller representatives are exact monomials, and discrete logarithms in
the residue field go through a cached table (towers are kept small enough
for that by construction).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Dict, FrozenSet, List, Optional, Tuple

import sympy


class ConfigError(ValueError):
    """A requested field / tower / character configuration is impossible."""


class PrecisionError(ArithmeticError):
    """The working precision cannot certify the requested quantity."""


# ---------------------------------------------------------------------------
# small number-theory helpers
# ---------------------------------------------------------------------------


def solve_lincong(a: int, b: int, n: int) -> Optional[Tuple[int, int]]:
    """Solutions of a*x = b (mod n) as (x0, step), or None."""
    a %= n
    b %= n
    g = gcd(a, n)
    if b % g:
        return None
    n2 = n // g
    x0 = ((b // g) * pow(a // g, -1, n2)) % n2
    return x0, n2


def merge_cong(r1: int, s1: int, r2: int, s2: int) -> Optional[Tuple[int, int]]:
    """Intersect x = r1 (mod s1) with x = r2 (mod s2)."""
    g = gcd(s1, s2)
    if (r2 - r1) % g:
        return None
    lcm = s1 // g * s2
    t = ((r2 - r1) // g * pow(s1 // g, -1, s2 // g)) % (s2 // g) if s2 // g > 1 else 0
    return (r1 + s1 * t) % lcm, lcm


def _vp(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


# ---------------------------------------------------------------------------
# dense F_p[x] helpers for the residue-field bootstrap
# ---------------------------------------------------------------------------


def _poly_mod_mul(u, v, h, p):
    out = [0] * (len(u) + len(v) - 1)
    for i, a in enumerate(u):
        if a:
            for j, b in enumerate(v):
                out[i + j] = (out[i + j] + a * b) % p
    d = len(h) - 1
    for k in range(len(out) - 1, d - 1, -1):
        c = out[k]
        if c:
            out[k] = 0
            for t in range(d):
                out[k - d + t] = (out[k - d + t] - c * h[t]) % p
    return [x % p for x in out[:d]] + [0] * max(0, d - len(out))


def _poly_mod_pow(u, n, h, p):
    d = len(h) - 1
    out = [1] + [0] * (d - 1)
    base = list(u)
    while n:
        if n & 1:
            out = _poly_mod_mul(out, base, h, p)
        base = _poly_mod_mul(base, base, h, p)
        n >>= 1
    return out


def _is_irreducible(h, p):
    d = len(h) - 1
    x = [0, 1] + [0] * max(0, d - 2)
    if d == 1:
        return True
    xq = _poly_mod_pow(x, p**d, h, p)
    if xq != x[:d]:
        return False
    for r in set(sympy.factorint(d)):
        xr = _poly_mod_pow(x, p ** (d // r), h, p)
        diff = [(a - b) % p for a, b in zip(xr, x[:d])]
        # gcd(x^{p^{d/r}} - x, h) must be 1
        if _poly_gcd_nontrivial(diff, h, p):
            return False
    return True


def _poly_gcd_nontrivial(u, h, p):
    a = [c % p for c in h]
    b = [c % p for c in u]
    while any(b):
        while b and b[-1] == 0:
            b.pop()
        if not b:
            break
        if len(b) == 1:
            return False  # gcd is a unit
        inv = pow(b[-1], -1, p)
        b = [(c * inv) % p for c in b]
        while len(a) >= len(b):
            if a and a[-1]:
                c = a[-1]
                for t in range(len(b)):
                    a[-1 - t] = (a[-1 - t] - c * b[-1 - t]) % p
            a.pop()
        a, b = b, a
    while a and a[-1] == 0:
        a.pop()
    return len(a) > 1


def _lex_irreducible(p: int, d: int) -> List[int]:
    """Lexicographically least monic irreducible of degree d over F_p."""
    if d == 1:
        return [0, 1]
    for code in range(p**d):
        h = []
        c = code
        for _ in range(d):
            h.append(c % p)
            c //= p
        h.append(1)
        if _is_irreducible(h, p):
            return h
    raise ConfigError("no irreducible polynomial found (impossible)")


# ---------------------------------------------------------------------------
# the ambient tower
# ---------------------------------------------------------------------------

_TOWER_CACHE: Dict[tuple, "Tower"] = {}

_DLOG_CAP = 25000  # largest residue group for which we build a dlog table
INF_PREC = float("inf")  # absolute precision of exactly-represented elements


def make_tower(p: int, fT: int, eT: int, tc: int = 0, prec: int = 28) -> "Tower":
    key = (p, fT, eT, tc % (p**fT - 1) if p**fT > 2 else 0, prec)
    tw = _TOWER_CACHE.get(key)
    if tw is None:
        tw = Tower(p, fT, eT, tc, prec)
        _TOWER_CACHE[key] = tw
    return tw


class Tower:
    def __init__(self, p: int, fT: int, eT: int, tc: int = 0, prec: int = 28):
        if not sympy.isprime(p) or p == 2:
            raise ConfigError("p must be an odd prime, got %r" % (p,))
        if fT < 1 or eT < 1:
            raise ConfigError("degrees must be positive")
        if eT % p == 0:
            raise ConfigError("wild towers are not supported (p | e)")
        self.p = p
        self.fT = fT
        self.eT = eT
        self.K = prec
        self.pK = p**prec
        self.qT = p**fT
        self.Q = self.qT - 1
        if self.Q % eT:
            raise ConfigError("need e | p^f - 1 for a Galois tower (e=%d, p^f-1=%d)" % (eT, self.Q))
        self.tc = tc % self.Q
        for k in range(1, fT + 1):
            if (self.tc * (pow(p, k, self.Q * eT) - 1)) % eT:
                raise ConfigError("tower twist %d is not Galois-compatible" % tc)

        self._zpow_cache: Dict[int, tuple] = {}
        self._strz_cache: Dict[int, int] = {}
        self._dlog_table: Optional[Dict[tuple, int]] = None
        self._subfields: Dict[tuple, "Subfield"] = {}
        self._overgroups: Dict[FrozenSet, tuple] = {}

        self._build_unramified_part()
        self._build_galois_group()

    # -- bootstrap: residue field, Teichmuller generator, minimal polynomial --

    def _build_unramified_part(self):
        p, fT, K, pK = self.p, self.fT, self.K, self.pK
        h0 = _lex_irreducible(p, fT)
        # least primitive element of the residue field, in the w-basis
        gbar = None
        for code in range(1, self.qT):
            cand = []
            c = code
            for _ in range(fT):
                cand.append(c % p)
                c //= p
            if _residue_order_is_full(cand, h0, p, self.Q):
                gbar = cand
                break
        if gbar is None:
            raise ConfigError("no primitive residue element (impossible)")

        # Teichmuller lift by iterating the qT-power map in Z_p[w]/(h0)
        hw = [c % pK for c in h0]
        z = [c % pK for c in gbar]
        for _ in range(K + 2):
            z = _poly_mod_pow(z, self.qT, hw, pK)

        # conjugates and minimal polynomial of zeta over Q_p
        conjs = [z]
        for _ in range(fT - 1):
            conjs.append(_poly_mod_pow(conjs[-1], p, hw, pK))
        mp = [[1 % pK] + [0] * (fT - 1)]  # poly in x with w-basis coefficients
        for zc in conjs:
            nxt = [[0] * fT for _ in range(len(mp) + 1)]
            for d, coeff in enumerate(mp):
                for t in range(fT):
                    nxt[d + 1][t] = (nxt[d + 1][t] + coeff[t]) % pK
                prod = _poly_mod_mul(coeff, zc, hw, pK)
                for t in range(fT):
                    nxt[d][t] = (nxt[d][t] - prod[t]) % pK
            mp = nxt
        H = []
        for d in range(fT + 1):
            coeff = mp[d]
            if any(coeff[1:]):
                raise ConfigError("minimal polynomial of the Teichmuller generator "
                                  "has non-scalar coefficients (tower bug)")
            H.append(coeff[0] % pK)
        assert H[fT] == 1
        self.H = H  # zeta^fT = -(H[0] + H[1] zeta + ... + H[fT-1] zeta^(fT-1))

        # reduction rows zeta^m for m < 3*fT (products need up to 3fT-3)
        rows = [tuple(1 if i == m else 0 for i in range(fT)) for m in range(fT)]
        for m in range(fT, 3 * fT):
            prev = rows[m - 1]
            shifted = [0] + list(prev[:-1])
            top = prev[-1]
            if top:
                for i in range(fT):
                    shifted[i] = (shifted[i] - top * H[i]) % pK
            rows.append(tuple(c % pK for c in shifted))
        self._zrows = rows
        self._hp = [c % p for c in H]  # residue minimal polynomial of zeta-bar

    def _build_galois_group(self):
        G = []
        for k in range(self.fT):
            rhs = (self.tc * (pow(self.p, k, self.Q) - 1)) % self.Q
            sol = solve_lincong(self.eT, rhs, self.Q)
            assert sol is not None
            m0, step = sol
            for j in range(self.eT):
                G.append((k, (m0 + j * step) % self.Q))
        assert len(G) == self.fT * self.eT
        self.G = sorted(G)
        self.identity = (0, 0)

    # -- group operations ----------------------------------------------------

    def compose(self, s1: Tuple[int, int], s2: Tuple[int, int]) -> Tuple[int, int]:
        k1, m1 = s1
        k2, m2 = s2
        return ((k1 + k2) % self.fT, (m1 + pow(self.p, k1, self.Q) * m2) % self.Q)

    def inv_elem(self, s: Tuple[int, int]) -> Tuple[int, int]:
        k, m = s
        ki = (-k) % self.fT
        return (ki, (-pow(self.p, ki, self.Q) * m) % self.Q)

    def closure(self, gens) -> FrozenSet:
        elems = {self.identity}
        frontier = list(gens)
        while frontier:
            g = frontier.pop()
            if g in elems:
                continue
            new = {g}
            while new:
                x = new.pop()
                elems.add(x)
                for h in list(elems):
                    for y in (self.compose(x, h), self.compose(h, x)):
                        if y not in elems:
                            new.add(y)
        return frozenset(elems)

    def overgroups(self, H: FrozenSet) -> List[FrozenSet]:
        """All subgroups between H and G (H included)."""
        cached = self._overgroups.get(H)
        if cached is not None:
            return list(cached)
        found = {H}
        frontier = [H]
        while frontier:
            cur = frontier.pop()
            for g in self.G:
                if g in cur:
                    continue
                bigger = self.closure(set(cur) | {g})
                if bigger not in found:
                    found.add(bigger)
                    frontier.append(bigger)
        out = sorted(found, key=lambda s: (len(s), sorted(s)))
        self._overgroups[H] = tuple(out)
        return list(out)

    def coset_reps(self, H_big: FrozenSet, H_small: FrozenSet) -> List[Tuple[int, int]]:
        """Left-coset representatives of H_small in H_big."""
        reps = []
        seen = set()
        for g in sorted(H_big):
            if g in seen:
                continue
            reps.append(g)
            for h in H_small:
                seen.add(self.compose(g, h))
        assert len(reps) * len(H_small) == len(H_big)
        return reps

    # -- zeta powers / residue helpers ----------------------------------------

    def zpow(self, m: int) -> tuple:
        """Coefficient row of zeta^m in the basis 1, zeta, ..., zeta^(fT-1)."""
        m %= self.Q
        row = self._zpow_cache.get(m)
        if row is not None:
            return row
        if m < len(self._zrows):
            row = self._zrows[m]
        else:
            half = m // 2
            a = self.zpow(half)
            b = self.zpow(m - half)
            row = self._zreduce(_conv(a, b))
        self._zpow_cache[m] = row
        return row

    def _zreduce(self, vec) -> tuple:
        fT, pK = self.fT, self.pK
        out = list(vec[:fT]) + [0] * max(0, fT - len(vec))
        for m in range(fT, len(vec)):
            c = vec[m]
            if c:
                row = self._zrows[m]
                for i in range(fT):
                    out[i] += c * row[i]
        return tuple(c % pK for c in out)

    def _res_mul(self, u: tuple, v: tuple) -> tuple:
        return tuple(c % self.p for c in self._zreduce(_conv(u, v)))

    def dlog_table(self) -> Dict[tuple, int]:
        if self._dlog_table is None:
            if self.Q > _DLOG_CAP:
                raise ConfigError(
                    "residue group of size %d exceeds the discrete-log cap" % self.Q
                )
            table = {}
            r = tuple([1] + [0] * (self.fT - 1))
            zbar = tuple(c % self.p for c in self.zpow(1))
            for m in range(self.Q):
                table[r] = m
                r = self._res_mul(r, zbar)
            assert r == tuple([1] + [0] * (self.fT - 1))
            self._dlog_table = table
        return self._dlog_table

    # -- elements -------------------------------------------------------------

    def zero(self) -> "PElt":
        cols = tuple(tuple(0 for _ in range(self.fT)) for _ in range(self.eT))
        return PElt(self, 0, cols, INF_PREC)

    def monomial(self, zexp: int, piexp: int, scalar: int = 1) -> "PElt":
        """scalar * zeta^zexp * pi^piexp."""
        zrow = self.zpow(zexp % self.Q)
        s = scalar % self.pK
        cols = [[0] * self.fT for _ in range(self.eT)]
        for i in range(self.fT):
            cols[0][i] = (zrow[i] * s) % self.pK
        return PElt(self, piexp, _freeze(cols), piexp + self.eT * self.K)

    def one(self) -> "PElt":
        return self.monomial(0, 0)

    def from_int(self, n: int) -> "PElt":
        return self.rational(Fraction(n))

    def rational(self, fr: Fraction) -> "PElt":
        fr = Fraction(fr)
        if fr == 0:
            return self.zero()
        num, den = fr.numerator, fr.denominator
        v = _vp(num, self.p) - _vp(den, self.p)
        unit = Fraction(num // self.p ** max(0, _vp(num, self.p)), den // self.p ** max(0, _vp(den, self.p)))
        u = (unit.numerator * pow(unit.denominator, -1, self.pK)) % self.pK
        # p^v = zeta^(-tc*v) * pi^(eT*v)
        return self.monomial((-self.tc * v) % self.Q, self.eT * v, u)

    def galois(self, sig: Tuple[int, int], x: "PElt") -> "PElt":
        k, m = sig
        if sig == self.identity:
            return x
        pk = pow(self.p, k, self.Q)
        cols = []
        for j, col in enumerate(x.cols):
            acc = [0] * self.fT
            if any(col):
                base = ((x.n + j) * m) % self.Q
                for i, b in enumerate(col):
                    if b:
                        row = self.zpow((i * pk + base) % self.Q)
                        for t in range(self.fT):
                            acc[t] += b * row[t]
            cols.append(tuple(c % self.pK for c in acc))
        return PElt(self, x.n, tuple(cols), x.A)

    # -- F-values, traces, additive character ---------------------------------

    def strz(self, m: int) -> int:
        """Scalar value of sum_k zeta^(m p^k) (a p-adic integer)."""
        m %= self.Q
        v = self._strz_cache.get(m)
        if v is None:
            acc = [0] * self.fT
            mm = m
            for _ in range(self.fT):
                row = self.zpow(mm)
                for i in range(self.fT):
                    acc[i] += row[i]
                mm = (mm * self.p) % self.Q
            acc = [c % self.pK for c in acc]
            if any(acc[1:]):
                raise ConfigError("Frobenius-stable sum not rational (tower bug)")
            v = acc[0]
            self._strz_cache[m] = v
        return v

    def trace_to_F_parts(self, x: "PElt") -> Optional[Tuple[int, int, int]]:
        """tr_{T/F}(x) as (valuation, unit digits, digit precision), or None if 0."""
        contrib: Dict[int, int] = {}
        for j, col in enumerate(x.cols):
            q, r = divmod(x.n + j, self.eT)
            if r != 0:
                continue  # traces of fractional pi-powers vanish exactly
            if not any(col):
                continue
            s = 0
            for i, b in enumerate(col):
                if b:
                    s += b * self.strz((i + self.tc * q) % self.Q)
            contrib[q] = (contrib.get(q, 0) + self.eT * s) % self.pK
        contrib = {q: c for q, c in contrib.items() if c}
        if not contrib:
            return None
        q0 = min(contrib)
        total = 0
        for q, c in contrib.items():
            total = (total + c * self.p ** (q - q0)) % self.pK
        stored = self.K  # digits of `total` valid from stored arithmetic
        while total % self.p == 0 and total:
            total //= self.p
            q0 += 1
            stored -= 1
        availp = self.K if x.A == INF_PREC else x.A // self.eT
        avail = min(stored, availp - q0)
        if total == 0 or avail <= 0:
            return None
        return q0, total, avail


def _residue_order_is_full(cand, h0, p, Q) -> bool:
    if _poly_mod_pow(cand, Q, h0, p) != [1] + [0] * (len(h0) - 2):
        return False
    for r in set(sympy.factorint(Q)):
        if _poly_mod_pow(cand, Q // r, h0, p) == [1] + [0] * (len(h0) - 2):
            return False
    return True


def _conv(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _freeze(cols):
    return tuple(tuple(c) for c in cols)


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------


class PElt:
    """pi^n times a matrix over {zeta^i pi^j}, entries mod p^K.

    A is the absolute precision: the element is known modulo pi^A
    (INF_PREC for exactly-represented values; entry arithmetic is still
    capped at K base-p digits above the pi^n floor).
    """

    __slots__ = ("tw", "n", "cols", "A")

    def __init__(self, tw: Tower, n: int, cols: tuple, A):
        self.tw = tw
        self.n = n
        self.cols = cols
        self.A = A

    def _shifted_cols(self, delta: int) -> tuple:
        """Columns rewritten for an offset lowered by delta >= 0."""
        tw = self.tw
        if delta == 0:
            return self.cols
        out = [[0] * tw.fT for _ in range(tw.eT)]
        for j, col in enumerate(self.cols):
            if not any(col):
                continue
            wraps, jr = divmod(j + delta, tw.eT)
            if wraps == 0:
                for i, b in enumerate(col):
                    out[jr][i] = (out[jr][i] + b) % tw.pK
            else:
                fac = pow(tw.p, wraps, tw.pK)
                row = tw.zpow((tw.tc * wraps) % tw.Q)
                prod = tw._zreduce(_conv(col, row))
                for i in range(tw.fT):
                    out[jr][i] = (out[jr][i] + fac * prod[i]) % tw.pK
        return _freeze(out)

    def __add__(self, other: "PElt") -> "PElt":
        tw = self.tw
        if other.tw is not tw:
            raise ValueError("elements of different towers")
        n = min(self.n, other.n)
        a = self._shifted_cols(self.n - n)
        b = other._shifted_cols(other.n - n)
        cols = tuple(
            tuple((x + y) % tw.pK for x, y in zip(ca, cb)) for ca, cb in zip(a, b)
        )
        return PElt(tw, n, cols, min(self.A, other.A, n + tw.eT * tw.K))

    def __neg__(self) -> "PElt":
        tw = self.tw
        cols = tuple(tuple((-x) % tw.pK for x in col) for col in self.cols)
        return PElt(tw, self.n, cols, self.A)

    def __sub__(self, other: "PElt") -> "PElt":
        return self + (-other)

    def __mul__(self, other) -> "PElt":
        tw = self.tw
        if isinstance(other, int):
            return PElt(
                tw,
                self.n,
                tuple(tuple((x * other) % tw.pK for x in col) for col in self.cols),
                self.A,
            )
        if other.tw is not tw:
            raise ValueError("elements of different towers")
        fT, eT, pK = tw.fT, tw.eT, tw.pK
        S0 = [[0] * (2 * fT - 1) for _ in range(eT)]
        S1 = [[0] * (2 * fT - 1) for _ in range(eT)]
        bcols = [(j, col) for j, col in enumerate(other.cols) if any(col)]
        for j1, c1 in enumerate(self.cols):
            if not any(c1):
                continue
            for j2, c2 in bcols:
                jj = j1 + j2
                tgt = S0[jj] if jj < eT else S1[jj - eT]
                for i1, b1 in enumerate(c1):
                    if b1:
                        for i2, b2 in enumerate(c2):
                            if b2:
                                tgt[i1 + i2] += b1 * b2
        ztc = tw.zpow(tw.tc)
        cols = []
        for jj in range(eT):
            row = list(tw._zreduce(S0[jj]))
            if any(S1[jj]):
                red = tw._zreduce(_conv(S1[jj], ztc))
                for i in range(fT):
                    row[i] = (row[i] + tw.p * red[i]) % pK
            cols.append(tuple(c % pK for c in row))
        n = self.n + other.n
        A = min(self.A + other.n, other.A + self.n, n + eT * tw.K)
        return PElt(tw, n, tuple(cols), A)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "PElt":
        if k < 0:
            return self.inverse() ** (-k)
        out = self.tw.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- normalization / valuation ---------------------------------------------

    def normalized(self) -> Optional["PElt"]:
        """Equal element with a unit 0-column, or None when the value cannot
        be certified nonzero at the available precision."""
        tw = self.tw
        if not any(any(col) for col in self.cols):
            return None
        n = self.n
        cols = [list(c) for c in self.cols]
        shifts = 0
        zneg = tw.zpow((-tw.tc) % tw.Q)
        while n < self.A:
            if any(x % tw.p for x in cols[0]):
                return PElt(tw, n, _freeze(cols), self.A)
            # divide the constant column by p and rotate it to the top
            wrapped = [x // tw.p for x in cols[0]]
            red = tw._zreduce(_conv(wrapped, zneg))
            cols = cols[1:] + [list(red)]
            n += 1
            shifts += 1
            if shifts > tw.eT * (tw.K + 2) or not any(any(col) for col in cols):
                return None
        return None

    def val(self) -> Optional[Fraction]:
        """Valuation normalized so val(p) = 1; None for (certified-ish) zero."""
        nz = self.normalized()
        if nz is None:
            return None
        return Fraction(nz.n, self.tw.eT)

    def is_zero(self) -> bool:
        return self.normalized() is None

    def residue_key(self) -> tuple:
        nz = self.normalized()
        if nz is None:
            raise ZeroDivisionError("zero element has no residue")
        return tuple(x % self.tw.p for x in nz.cols[0])

    def inverse(self) -> "PElt":
        tw = self.tw
        nz = self.normalized()
        if nz is None:
            raise ZeroDivisionError("inverting (numerical) zero")
        res = nz.residue_key()
        v0row = _res_invert(tw, res)
        cols0 = [[0] * tw.fT for _ in range(tw.eT)]
        cols0[0] = list(v0row)
        full = tw.eT * tw.K
        v = PElt(tw, 0, _freeze(cols0), full)
        u = PElt(tw, 0, nz.cols, full)
        two = tw.from_int(2)
        steps = 1
        while steps < full:
            v = v * (two - u * v)
            steps *= 2
        A = min(self.A - 2 * nz.n, -nz.n + full)
        return PElt(tw, v.n - nz.n, v.cols, A)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PElt):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def __repr__(self) -> str:
        nz = self.normalized()
        if nz is None:
            return "PElt(0-ish)"
        return "PElt(pi^%d * %r..., A=%s)" % (nz.n, nz.cols[0], self.A)


def _res_invert(tw: Tower, u: tuple) -> tuple:
    """Inverse of a nonzero residue of the tower's residue field."""
    if not any(c % tw.p for c in u):
        raise ZeroDivisionError("zero residue")
    hp = [c % tw.p for c in tw.H]
    inv = _poly_mod_pow([c % tw.p for c in u], tw.qT - 2, hp, tw.p)
    return tuple(inv[: tw.fT])


# ---------------------------------------------------------------------------
# element utilities
# ---------------------------------------------------------------------------


def div_by_int(x: PElt, k: int) -> PElt:
    """x / k for a nonzero integer k (p-part handled exactly via pi^eT = ...*p)."""
    tw = x.tw
    sign = 1
    if k < 0:
        sign = -1
        k = -k
    t = _vp(k, tw.p)
    k0 = k // tw.p**t
    inv = pow(k0, -1, tw.pK) * sign % tw.pK
    cols = tuple(tuple((b * inv) % tw.pK for b in col) for col in x.cols)
    out = PElt(tw, x.n, cols, x.A)
    if t:
        # divide by p^t: multiply by zeta^(tc*t) and shift the offset down
        z = tw.monomial((tw.tc * t) % tw.Q, -tw.eT * t)
        out = out * z
    return out


def close_to(x: PElt, y: PElt, threshold: Fraction) -> bool:
    """val(x - y) > threshold (with zero counting as infinitely close)."""
    v = (x - y).val()
    return v is None or v > threshold


# ---------------------------------------------------------------------------
# subfields
# ---------------------------------------------------------------------------


def check_strongly_tame(p: int, f: int, e: int, c: int):
    """The regime where truncated log linearizes all the unit filtration steps:
    p odd, p coprime to e, and no p-th roots of unity in the field."""
    if e % p == 0:
        raise ConfigError("wildly ramified configuration (p | e)")
    if e % (p - 1) == 0 and (c + (p**f - 1) // 2) % (p - 1) == 0:
        raise ConfigError(
            "field (f=%d, e=%d, c=%d) contains the p-th roots of unity at p=%d"
            % (f, e, c, p)
        )


class Subfield:
    """The tame field (f, e, c) realized inside a tower.

    Standard generators: zeta_E = zeta^R with R = (qT-1)/(p^f-1), and
    pi_E = zeta^a * pi^(eT/e) with pi_E^e = zeta_E^c * p.
    """

    def __init__(self, tw: Tower, f: int, e: int, c: int, a: Optional[int] = None):
        if tw.fT % f or tw.eT % e:
            raise ConfigError("field (f=%d, e=%d) does not divide the tower (%d, %d)"
                              % (f, e, tw.fT, tw.eT))
        self.tw = tw
        self.f = f
        self.e = e
        self.q = tw.p**f
        self.R = tw.Q // (self.q - 1)
        self.w = tw.eT // e
        c = c % (self.q - 1)
        if a is None:
            sol = solve_lincong(e, (c * self.R - tw.tc) % tw.Q, tw.Q)
            if sol is None:
                raise ConfigError(
                    "twist class c=%d of (f=%d, e=%d) is not realizable in this tower"
                    % (c, f, e)
                )
            a = sol[0]
        else:
            if (e * a - (c * self.R - tw.tc)) % tw.Q:
                raise ConfigError("inconsistent uniformizer datum")
        self.c = c
        self.a = a % tw.Q
        Q, p = tw.Q, tw.p
        H = frozenset(
            (k, m)
            for (k, m) in tw.G
            if k % f == 0 and (self.a * (pow(p, k, Q) - 1) + m * self.w) % Q == 0
        )
        if len(H) != (tw.fT // f) * (tw.eT // e):
            raise ConfigError("fixed group has wrong size (tower bug)")
        self.H = H
        self.degree = e * f

    # -- identity ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subfield)
            and self.tw is other.tw
            and self.H == other.H
        )

    def __hash__(self):
        return hash((id(self.tw), self.H))

    def __repr__(self):
        return "Subfield(f=%d, e=%d, c=%d)" % (self.f, self.e, self.c)

    def iso_key(self) -> tuple:
        return iso_key(self.tw.p, self.f, self.e, self.c)

    # -- standard elements -----------------------------------------------------

    def zeta(self, t: int = 1) -> PElt:
        return self.tw.monomial((self.R * t) % self.tw.Q, 0)

    def unif(self, nn: int = 1) -> PElt:
        return self.tw.monomial((self.a * nn) % self.tw.Q, self.w * nn)

    def one(self) -> PElt:
        return self.tw.one()

    # -- membership / valuation -------------------------------------------------

    def val(self, x: PElt) -> Optional[Fraction]:
        """Valuation normalized to this field (val of pi_E is 1)."""
        v = x.val()
        if v is None:
            return None
        ve = v * self.e
        return ve

    def contains(self, x: PElt) -> bool:
        return all(self.tw.galois(g, x) == x for g in self.H)

    def is_galois(self) -> bool:
        tw = self.tw
        for g in tw.G:
            gi = tw.inv_elem(g)
            for h in self.H:
                if tw.compose(g, tw.compose(h, gi)) not in self.H:
                    return False
        return True

    # -- multiplicative structure ------------------------------------------------

    def decompose_unit(self, x: PElt):
        """x = pi_E^alpha * zeta_E^beta * u1 with u1 a 1-unit; returns
        (alpha, beta, u1)."""
        v = self.val(x)
        if v is None:
            raise ZeroDivisionError("cannot decompose zero")
        if v.denominator != 1:
            raise ConfigError("element is not in this field (fractional valuation)")
        alpha = int(v)
        u = x * self.unif(-alpha)
        key = u.residue_key()
        m = self.tw.dlog_table()[key]
        if m % self.R:
            raise ConfigError("element residue is not in this field's residue field")
        beta = (m // self.R) % (self.q - 1)
        u1 = u * self.tw.monomial((-m) % self.tw.Q, 0)
        return alpha, beta, u1

    def teichmuller(self, t: int) -> PElt:
        return self.zeta(t)

    # -- additive character -------------------------------------------------------

    def psi(self, y: PElt):
        """The level-one additive character (trivial on P_E, not on O_E),
        pulled back from F through the trace."""
        from .cyclo import CycValue

        parts = self.tw.trace_to_F_parts(y)
        if parts is None:
            return CycValue.one()
        v, digits, avail = parts
        # the tower trace overcounts by [T:E] relative to the trace from E
        TE = len(self.H)
        if TE % self.tw.p == 0:
            raise ConfigError("p divides [T:E]; trace scaling impossible")
        if v >= 1:
            return CycValue.one()
        need = 1 - v
        if avail < need:
            raise PrecisionError("additive character needs %d digits, have %d" % (need, avail))
        pn = self.tw.p**need
        num = (digits * pow(TE, -1, pn)) % pn
        return CycValue.root(num, pn)

    # -- log / exp -----------------------------------------------------------------

    def log_unit(self, x: PElt, target: int) -> PElt:
        """log(x) for a 1-unit x, correct modulo P_E^(target+1)."""
        tw = self.tw
        y = (x - tw.one()).normalized()
        if y is None:
            return tw.zero()
        vy = Fraction(y.n, tw.eT) * self.e
        if vy < 1:
            raise ConfigError("log of a non-1-unit")
        tgt_w = Fraction(target, self.e) * tw.eT  # target in ambient pi-units
        out = tw.zero()
        ypow = tw.one()
        k = 0
        while True:
            k += 1
            tval = k * vy - self.e * _vp(k, tw.p)
            if k * vy > target + self.e * (len(_base_p_digits(k, tw.p)) + 2):
                break
            ypow = ypow * y
            if tval <= target:
                term = div_by_int(ypow, k)
                if term.A <= tgt_w:
                    raise PrecisionError("log term at k=%d below target precision" % k)
                if k % 2 == 0:
                    term = -term
                out = out + term
            if k > 4000:
                raise PrecisionError("log series did not truncate (bad regime?)")
        return out

    def exp_unit(self, y: PElt, target: int) -> PElt:
        """exp(y) for val_E(y) > e/(p-1), correct modulo P_E^(target+1)."""
        tw = self.tw
        yn = y.normalized()
        if yn is None:
            return tw.one()
        vy = Fraction(yn.n, tw.eT) * self.e
        if vy * (tw.p - 1) <= self.e:
            raise ConfigError("exp series does not converge at valuation %s" % (vy,))
        tgt_w = Fraction(target, self.e) * tw.eT
        out = tw.one()
        term = tw.one()
        k = 0
        while True:
            k += 1
            term = div_by_int(term * yn, k)
            tn = term.normalized()
            if tn is None:
                if term.A > tgt_w:
                    break
                raise PrecisionError("exp term at k=%d below target precision" % k)
            term = tn
            kval = Fraction(tn.n, tw.eT) * self.e
            if kval <= target:
                if term.A <= tgt_w:
                    raise PrecisionError("exp term at k=%d below target precision" % k)
                out = out + term
            if k * (vy - Fraction(self.e, tw.p - 1)) > target:
                break
            if k > 4000:
                raise PrecisionError("exp series did not truncate (bad regime?)")
        return out

    # -- relative maps -----------------------------------------------------------

    def coset_reps_in(self, L: "Subfield") -> List[Tuple[int, int]]:
        """Representatives of Gal(T/E)-cosets inside Gal(T/L), for L a subfield
        of this field (they restrict to the embeddings of E over L)."""
        if not self.H <= L.H:
            raise ConfigError("not a subfield relation")
        return self.tw.coset_reps(L.H, self.H)

    def trace_to(self, L: "Subfield", x: PElt) -> PElt:
        out = self.tw.zero()
        for g in self.coset_reps_in(L):
            out = out + self.tw.galois(g, x)
        return out

    def norm_to(self, L: "Subfield", x: PElt) -> PElt:
        out = self.tw.one()
        for g in self.coset_reps_in(L):
            out = out * self.tw.galois(g, x)
        return out

    def average_over(self, L: "Subfield", x: PElt) -> PElt:
        """The Galois average over L, i.e. the best L-rational approximation."""
        idx = len(L.H) // len(self.H)
        if idx % self.tw.p == 0:
            raise ConfigError("p divides the averaging index")
        tr = self.trace_to(L, x)
        inv = pow(idx, -1, self.tw.pK)
        return tr * inv

    # -- lattice -----------------------------------------------------------------

    def subfields(self) -> List["Subfield"]:
        """All fields between F and this one (inclusive), smallest first."""
        out = [subfield_from_group(self.tw, H) for H in self.tw.overgroups(self.H)]
        return sorted(out, key=lambda s: (s.degree, s.f, s.c))

    def proper_subfields(self) -> List["Subfield"]:
        return [L for L in self.subfields() if L.H != self.H]

    def maximal_proper_subfields(self) -> List["Subfield"]:
        props = self.proper_subfields()
        out = []
        for L in props:
            if not any(M.H < L.H for M in props):
                out.append(L)
        return out


def iso_key(p: int, f: int, e: int, c: int) -> tuple:
    """Canonical isomorphism-class key of the tame field (f, e, c)."""
    g0 = gcd(e, p**f - 1)
    cc = c % g0
    orbit = set()
    x = cc
    for _ in range(f * 4):
        orbit.add(x)
        x = (x * p) % g0
    return (f, e, min(orbit) if g0 > 1 else 0)


def _base_p_digits(k: int, p: int):
    out = []
    while k:
        out.append(k % p)
        k //= p
    return out or [0]


# ---------------------------------------------------------------------------
# lattice / relative constructions
# ---------------------------------------------------------------------------


def subfield_from_group(tw: Tower, H: FrozenSet) -> Subfield:
    """The fixed field of a subgroup, with standard generator data."""
    ks = sorted({k for (k, _) in H})
    fprime = tw.fT if ks == [0] else min(k for k in ks if k > 0)
    inertia_size = sum(1 for (k, _) in H if k == 0)
    eprime = tw.eT // inertia_size
    wprime = tw.eT // eprime
    # a uniformizer datum fixed by H: a*(p^k - 1) = -m*w' (mod Q) for all (k,m)
    r, s = 0, 1
    for (k, m) in sorted(H):
        A = (pow(tw.p, k, tw.Q) - 1) % tw.Q
        B = (-m * wprime) % tw.Q
        if A == 0:
            if B % tw.Q:
                raise ConfigError("fixed-field congruence unsolvable (tower bug)")
            continue
        sol = solve_lincong(A, B, tw.Q)
        if sol is None:
            raise ConfigError("fixed-field congruence unsolvable (tower bug)")
        merged = merge_cong(r, s, sol[0], sol[1])
        if merged is None:
            raise ConfigError("fixed-field congruences inconsistent (tower bug)")
        r, s = merged
    aprime = r
    Rprime = tw.Q // (tw.p**fprime - 1)
    sol = solve_lincong(Rprime, (aprime * eprime + tw.tc) % tw.Q, tw.Q)
    if sol is None:
        raise ConfigError("twist class of fixed field not determined (tower bug)")
    cprime = sol[0] % (tw.p**fprime - 1)
    E = Subfield(tw, fprime, eprime, cprime, a=aprime)
    if E.H != H:
        raise ConfigError("fixed-field reconstruction mismatch (tower bug)")
    return E


def compositum(E: Subfield, L: Subfield) -> Subfield:
    if E.tw is not L.tw:
        raise ConfigError("fields live in different towers")
    return subfield_from_group(E.tw, E.H & L.H)


def tensor_decompose(E: Subfield, L: Subfield):
    """The fields K in E (x)_F L = prod K, as (g, K) with K = L * g(E).

    The g are double-coset data: representatives of the H_L-orbits on the
    cosets G / H_E.
    """
    if E.tw is not L.tw:
        raise ConfigError("fields live in different towers")
    tw = E.tw
    reps = tw.coset_reps(frozenset(tw.G), E.H)
    rep_of = {}
    for rep in reps:
        for h in E.H:
            rep_of[tw.compose(rep, h)] = rep
    seen = set()
    out = []
    for g in reps:
        if g in seen:
            continue
        orbit = {rep_of[tw.compose(h, g)] for h in L.H}
        seen |= orbit
        conjH = frozenset(
            tw.compose(g, tw.compose(h, tw.inv_elem(g))) for h in E.H
        )
        K = subfield_from_group(tw, frozenset(L.H) & conjH)
        out.append((g, K))
    total = sum(len(tw.G) // len(K.H) for _, K in out)
    if total != E.degree * L.degree:
        raise ConfigError("tensor decomposition degree mismatch (tower bug)")
    return out


def char_poly(E: Subfield, x: PElt) -> List[PElt]:
    """Coefficients (low degree first) of prod_{embeddings} (X - sigma(x))."""
    tw = E.tw
    coeffs = [tw.one()]
    for g in tw.coset_reps(frozenset(tw.G), E.H):
        gx = tw.galois(g, x)
        nxt = [tw.zero() for _ in range(len(coeffs) + 1)]
        for d, cf in enumerate(coeffs):
            nxt[d + 1] = nxt[d + 1] + cf
            nxt[d] = nxt[d] - cf * gx
        coeffs = nxt
    return coeffs
