"""Smooth characters of the unit groups of tame extensions, with exact values.

A character chi of E^x is stored as three pieces of data:

  * the value chi(pi_E) at the standard uniformizer, a root of unity;
  * an exponent t modulo q_E - 1 giving the value on Teichmueller
    representatives, chi(zeta_E) = e^(2*pi*i*t/(q_E-1));
  * an optional representing element c of negative valuation with
    chi(u) = psi_E(c * log u) on 1-units, where psi_E is the level-one
    additive character of E pulled back from the base through the trace.

The wild part is exactly linear in log.  Two representing elements define
the same character precisely when their difference has valuation >= 0, and
all transport operations (restriction, inflation through the norm, Galois
conjugation, duality) act on c by the matching exact operation (trace,
identity, Galois action, negation).  Values are CycValue roots of unity,
so every comparison in this module is exact.

The module also provides the character-level predicates used by the
verification scenarios: admissibility (no factoring through a norm from a
proper subfield), quasi-minimality of a representing coset, self-duality
through a quadratic subextension together with its orthogonal/symplectic
parity, families of self-dual extensions of a wild class, the quadratic
class characters of quadratic steps, the transfer character kappa of a
tame extension, determinants of induced characters, and the tame Hilbert
symbol used to cross-check kappa against a discriminant computation.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as _iproduct
from math import gcd
from typing import List, Optional, Tuple

from sympy import factorint, jacobi_symbol

from .cyclo import CycValue
from .padic import (
    ConfigError,
    PElt,
    Subfield,
    Tower,
    solve_lincong,
    subfield_from_group,
)

# ---------------------------------------------------------------------------
# roots of unity as exact coordinates
# ---------------------------------------------------------------------------


def _root_of(fr: Fraction) -> CycValue:
    """e^(2*pi*i*fr) for a rational fr."""
    fr = Fraction(fr)
    return CycValue.root(fr.numerator % fr.denominator, fr.denominator)


def root_order(v: CycValue) -> int:
    """Multiplicative order of a root of unity v (ConfigError otherwise)."""
    one = CycValue.one()
    n = 2 * v.M
    if v**n != one:
        raise ConfigError("value is not a root of unity")
    for ell in factorint(n):
        while n % ell == 0 and v ** (n // ell) == one:
            n //= ell
    return n


def root_coords(v: CycValue) -> Tuple[int, int]:
    """(j, n) with v = e^(2*pi*i*j/n), gcd(j, n) = 1 and n the exact order."""
    n = root_order(v)
    for j in range(n):
        if gcd(j, n) == 1 and v == CycValue.root(j, n):
            return (j, n)
    raise AssertionError("order computed but exponent not found")


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


# ---------------------------------------------------------------------------
# fields
# ---------------------------------------------------------------------------


def base_field(tw: Tower) -> Subfield:
    """The base of the tower as a Subfield (f = e = 1)."""
    return Subfield(tw, 1, 1, 0)


def quadratic_downs(E: Subfield) -> List[Subfield]:
    """Subfields L with [E : L] = 2."""
    return [L for L in E.proper_subfields() if 2 * L.degree == E.degree]


def step_sigma(E: Subfield, L: Subfield) -> Tuple[int, int]:
    """A group element inducing the nontrivial automorphism of E over L,
    for [E : L] = 2."""
    if 2 * L.degree != E.degree or not (L.H > E.H):
        raise ConfigError("not a quadratic step")
    return next(h for h in sorted(L.H) if h not in E.H)


# ---------------------------------------------------------------------------
# the character class
# ---------------------------------------------------------------------------


class MultChar:
    """A finite-order smooth character of E^x.

    chi(pi_E^a * zeta_E^b * u) =
        unif_value^a * e^(2*pi*i*t*b/(q-1)) * psi_E(c * log u).
    """

    __slots__ = ("E", "unif_value", "t", "c", "_key")

    def __init__(self, E: Subfield, unif_value, tame_exponent: int, wild_rep=None):
        self.E = E
        v = unif_value if isinstance(unif_value, CycValue) else CycValue.rational(unif_value)
        if v ** (2 * v.M) != CycValue.one():
            raise ConfigError("value at the uniformizer must be a root of unity")
        self.unif_value = v
        self.t = int(tame_exponent) % (E.q - 1)
        c = wild_rep
        if c is not None:
            c = c.normalized()
        if c is not None:
            ve = E.val(c)
            if ve >= 0:
                c = None  # contributes trivially through psi
            else:
                if ve.denominator != 1 or not E.contains(c):
                    raise ConfigError("representing element does not lie in the field")
        self.c = c
        self._key = None

    # -- basic structure -----------------------------------------------------

    @property
    def wild_level(self) -> int:
        """-val_E of the representing element (0 for depth-zero characters)."""
        return 0 if self.c is None else -int(self.E.val(self.c))

    @property
    def depth(self) -> Fraction:
        return Fraction(self.wild_level, self.E.e)

    def conductor_exponent(self) -> int:
        if self.c is not None:
            return self.wild_level + 1
        return 0 if self.t == 0 else 1

    def is_trivial(self) -> bool:
        return self.c is None and self.t == 0 and self.unif_value == CycValue.one()

    def is_unramified(self) -> bool:
        return self.c is None and self.t == 0

    def order(self) -> int:
        o = root_order(self.unif_value)
        q1 = self.E.q - 1
        o = _lcm(o, q1 // gcd(self.t, q1))
        if self.c is not None:
            m = self.wild_level
            o = _lcm(o, self.E.tw.p ** (-((-m) // self.E.e)))
        return o

    # -- evaluation -----------------------------------------------------------

    def eval(self, x: PElt) -> CycValue:
        E = self.E
        a, b, u1 = E.decompose_unit(x)
        out = (self.unif_value**a) * CycValue.root((self.t * b) % (E.q - 1), E.q - 1)
        if self.c is not None and u1 != E.one():
            y = E.log_unit(u1, self.wild_level)
            out = out * E.psi(self.c * y)
        return out

    __call__ = eval

    # -- group operations ------------------------------------------------------

    def _wild_times(self, k: int):
        if self.c is None or k == 0:
            return None
        ck = self.c * self.E.tw.from_int(abs(k))
        return -ck if k < 0 else ck

    def multiply(self, other: "MultChar") -> "MultChar":
        if self.E.H != other.E.H:
            raise ConfigError("characters live on different fields")
        if self.c is None:
            c = other.c
        elif other.c is None:
            c = self.c
        else:
            c = self.c + other.c
        return MultChar(self.E, self.unif_value * other.unif_value, self.t + other.t, c)

    __mul__ = multiply

    def __pow__(self, k: int) -> "MultChar":
        return MultChar(self.E, self.unif_value**k, self.t * k, self._wild_times(k))

    def dual(self) -> "MultChar":
        """The inverse character (= complex conjugate; values are unitary)."""
        return self**-1

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultChar):
            return NotImplemented
        if self.E.H != other.E.H or self.t != other.t:
            return False
        if self.unif_value != other.unif_value:
            return False
        return self._wild_diff_ok(other, Fraction(0))

    def __ne__(self, other) -> bool:
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    __hash__ = None  # equality is up to representing-element windows

    def _wild_diff_ok(self, other: "MultChar", threshold: Fraction) -> bool:
        """True when the representing elements differ by valuation >= threshold
        (E-normalized)."""
        if self.c is None and other.c is None:
            return True
        a = self.c if self.c is not None else self.E.tw.zero()
        b = other.c if other.c is not None else self.E.tw.zero()
        d = (a - b).normalized()
        return d is None or self.E.val(d) >= threshold

    def coincide_on_units(self, other: "MultChar", level=0, plus: bool = False) -> bool:
        """Do the characters agree on the unit filtration subgroup at the
        given (rational) level?  level 0 means all units; positive levels
        see only 1-units.  plus=True uses the subgroup just past the level."""
        if self.E.H != other.E.H:
            raise ConfigError("characters live on different fields")
        level = Fraction(level)
        er = level * self.E.e
        if plus:
            j = er.numerator // er.denominator + 1
        else:
            j = -((-er.numerator) // er.denominator)
        if j <= 0:
            if level < 0 or (level == 0 and plus is False and j < 0):
                raise ConfigError("levels below 0 are not a unit subgroup")
            j = 0
        if j == 0 and self.t != other.t:
            return False
        return self._wild_diff_ok(other, Fraction(1 - max(j, 1)))

    # -- transport -------------------------------------------------------------

    def conj_by(self, g: Tuple[int, int]) -> "MultChar":
        """The conjugate character x -> chi(g^-1 x) on the image field g(E)."""
        tw = self.E.tw
        gi = tw.inv_elem(g)
        H2 = frozenset(tw.compose(tw.compose(g, h), gi) for h in self.E.H)
        E2 = subfield_from_group(tw, H2)
        val = self.eval(tw.galois(gi, E2.unif()))
        ki = gi[0]
        t2 = (self.t * pow(tw.p, ki, E2.q - 1)) % (E2.q - 1)
        c2 = None if self.c is None else tw.galois(g, self.c)
        return MultChar(E2, val, t2, c2)

    def restrict_to(self, L: Subfield) -> "MultChar":
        """The restriction chi|_{L^x} for a subfield L of E."""
        E = self.E
        if not (L.H >= E.H):
            raise ConfigError("restriction target is not a subfield")
        val = self.eval(L.unif())
        c2 = None if self.c is None else E.trace_to(L, self.c)
        return MultChar(L, val, self.t % (L.q - 1), c2)

    def inflate(self, K: Subfield) -> "MultChar":
        """chi composed with the norm from a larger field K down to E."""
        E = self.E
        if not (E.H >= K.H):
            raise ConfigError("inflation target is not an overfield")
        nz = K.norm_to(E, K.zeta())
        _, b0, _ = E.decompose_unit(nz)
        t2 = (self.t * b0 * ((K.q - 1) // (E.q - 1))) % (K.q - 1)
        val = self.eval(K.norm_to(E, K.unif()))
        return MultChar(K, val, t2, self.c)

    def twist_by_base(self, eta: "MultChar") -> "MultChar":
        """chi times (eta o norm) for a character eta of a subfield."""
        return self * eta.inflate(self.E)

    # -- canonical coordinates ---------------------------------------------------

    def wild_digits(self) -> List[Tuple[int, int]]:
        """Teichmueller digits [(position, exponent)] of the representing
        element at all negative positions; canonical for the character."""
        out: List[Tuple[int, int]] = []
        E = self.E
        x = self.c
        while x is not None:
            xn = x.normalized()
            if xn is None:
                break
            v = E.val(xn)
            if v >= 0:
                break
            a, b, _ = E.decompose_unit(xn)
            out.append((a, b))
            x = xn - E.zeta(b) * E.unif(a)
        return out

    def key(self) -> tuple:
        """Exact coordinates: field parameters, uniformizer value, tame
        exponent, wild digits.  Equal characters on the same field position
        have equal keys."""
        if self._key is None:
            j, n = root_coords(self.unif_value)
            E = self.E
            self._key = ((E.f, E.e, E.c), (j, n), self.t, tuple(self.wild_digits()))
        return self._key

    def class_key(self) -> tuple:
        """key() minimized over Galois transport; invariant of the
        equivalence class of the induced representation."""
        tw = self.E.tw
        reps = tw.coset_reps(frozenset(tw.G), self.E.H)
        return min(self.conj_by(g).key() for g in reps)

    def __repr__(self) -> str:
        E = self.E
        return "MultChar(E=(%d,%d,%d), unif=%r, t=%d, level=%d)" % (
            E.f, E.e, E.c, self.unif_value, self.t, self.wild_level,
        )


def trivial_char(B: Subfield) -> MultChar:
    return MultChar(B, CycValue.one(), 0)


def unramified_char(B: Subfield, value) -> MultChar:
    """The unramified character sending the uniformizer to the given root
    of unity."""
    return MultChar(B, value, 0)


def unramified_quadratic(B: Subfield) -> MultChar:
    return unramified_char(B, CycValue.rational(-1))


# ---------------------------------------------------------------------------
# representing-element quality
# ---------------------------------------------------------------------------


def representative_exact(chi: MultChar) -> bool:
    """True when chi(1 + x) = psi_E(c * x) holds exactly for val(x) past half
    the level, i.e. the stored c is also an honest representative in the
    additive sense (log corrections all land above the kernel of psi_E)."""
    m = chi.wild_level
    if m == 0:
        return True
    E = chi.E
    p = E.tw.p
    j = m // 2 + 1
    # non-p powers k contribute k*j - m >= 2j - m >= 1 automatically; the
    # binding corrections x^k/k sit at k = p^a
    a = 1
    while True:
        corr = p**a * j - E.e * a - m
        if corr < 1:
            return False
        if p**a * j > E.e:
            return True
        a += 1


def quasi_minimal(chi: MultChar) -> bool:
    """No translate of the representing coset (modulo valuation >= -m/2)
    lies in a proper subfield; such characters generate E over the base."""
    m = chi.wild_level
    if m == 0:
        return False
    E = chi.E
    if E.degree == 1:
        return True
    if E.f == 1 and gcd(m, E.e) == 1:
        return True  # the depth denominator already forces generation
    window = Fraction(-m, 2)
    for L in E.maximal_proper_subfields():
        d = (chi.c - E.average_over(L, chi.c)).normalized()
        if d is None or E.val(d) >= window:
            return False
    return True


# ---------------------------------------------------------------------------
# norm relations
# ---------------------------------------------------------------------------


def _norm_zeta_exponent(E: Subfield, L: Subfield) -> int:
    """n0 with N_{E/L}(zeta_E) = zeta_E^{n0}."""
    nz = E.norm_to(L, E.zeta())
    _, bL, _ = L.decompose_unit(nz)
    return (bL * ((E.q - 1) // (L.q - 1))) % (E.q - 1)


def factors_through_norm(chi: MultChar, L: Subfield, wild_only: bool = False) -> bool:
    """Is chi of the form eta o N_{E/L} for some character eta of L^x?
    Equivalent to chi being trivial on the kernel of the norm, which splits
    into a Teichmueller part and a 1-unit part.  With wild_only=True only
    the 1-unit condition is tested (i.e. the restriction of chi to 1-units
    comes through the norm)."""
    E = chi.E
    if not (L.H >= E.H):
        raise ConfigError("norm source is not an overfield of the target")
    if L.H == E.H:
        return True
    if chi.c is not None:
        d = (chi.c - E.average_over(L, chi.c)).normalized()
        if d is not None and d.val() < 0:
            return False
    if wild_only:
        return True
    n0 = _norm_zeta_exponent(E, L)
    g = gcd(n0, E.q - 1)
    return (chi.t * ((E.q - 1) // g)) % (E.q - 1) == 0


def is_admissible(chi: MultChar) -> bool:
    """The pair (E, chi) is admissible: chi does not factor through the norm
    from any proper subfield, and its restriction to 1-units does not come
    through the norm along any ramified step down."""
    E = chi.E
    if E.degree == 1:
        return True
    for L in E.maximal_proper_subfields():
        if factors_through_norm(chi, L):
            return False
    for L in E.proper_subfields():
        if L.e < E.e and factors_through_norm(chi, L, wild_only=True):
            return False
    return True


def norm_limit_twists(K: Subfield, Kp: Subfield) -> List[MultChar]:
    """The [K:Kp] characters of Kp^x trivial on the norms from K, for an
    abelian step K/Kp.  These are the twists occurring when an induction
    from K is re-expressed through Kp."""
    n = K.degree // Kp.degree
    if n * Kp.degree != K.degree or not (Kp.H >= K.H):
        raise ConfigError("not a field step")
    npi = K.norm_to(Kp, K.unif())
    nz = K.norm_to(Kp, K.zeta())
    one = CycValue.one()
    out = []
    g2 = gcd(n, Kp.q - 1)
    for x in range(n):
        uv = CycValue.root(x, n)
        for k in range(g2):
            xi = MultChar(Kp, uv, k * ((Kp.q - 1) // g2))
            if xi.eval(npi) == one and xi.eval(nz) == one:
                out.append(xi)
    if len(out) != n:
        raise ConfigError("norm-trivial character count %d != step degree %d (step not abelian?)" % (len(out), n))
    return out


def descend_through_norm(theta: MultChar, Kp: Subfield) -> MultChar:
    """One character eta of Kp^x with theta = eta o N_{K/Kp} (ConfigError if
    none exists).  The full set of solutions is eta times norm_limit_twists."""
    K = theta.E
    if not factors_through_norm(theta, Kp):
        raise ConfigError("character does not factor through the norm")
    c2 = None
    if theta.c is not None:
        c2 = K.average_over(Kp, theta.c)
    q1 = Kp.q - 1
    nz = K.norm_to(Kp, K.zeta())
    _, b1, _ = Kp.decompose_unit(nz)
    jz, nzo = root_coords(theta.eval(K.zeta()))
    if q1 % nzo:
        raise ConfigError("tame value outside the target residue field")
    sol = solve_lincong(b1, jz * (q1 // nzo), q1)
    if sol is None:
        raise ConfigError("tame part does not descend")
    t2 = sol[0]
    npi = K.norm_to(Kp, K.unif())
    a2, b2, _ = Kp.decompose_unit(npi)
    v = theta.eval(K.unif()) * CycValue.root((-t2 * b2) % q1, q1)
    if a2 == 1:
        uv = v
    else:
        jv, nv = root_coords(v)
        uv = CycValue.root(jv, nv * a2)
    eta = MultChar(Kp, uv, t2, c2)
    if eta.inflate(K) != theta:
        raise ConfigError("descended character failed the inflation check")
    return eta


# ---------------------------------------------------------------------------
# self-duality
# ---------------------------------------------------------------------------


def is_self_dual(chi: MultChar) -> Optional[Tuple[Subfield, str]]:
    """If some quadratic step E/L conjugates chi to its inverse, return
    (L, parity): parity is "orthogonal" when chi restricts trivially to L^x
    and "symplectic" otherwise.  None when no quadratic step works."""
    for L in quadratic_downs(chi.E):
        g = step_sigma(chi.E, L)
        if chi.conj_by(g) == chi.dual():
            r = chi.restrict_to(L)
            return (L, "orthogonal" if r.is_trivial() else "symplectic")
    return None


def omega_quadratic(E: Subfield, L: Subfield) -> MultChar:
    """The order-2 character of L^x with kernel the norms from E, for a
    quadratic step E/L."""
    if 2 * L.degree != E.degree or not (L.H > E.H):
        raise ConfigError("not a quadratic step")
    if E.f == 2 * L.f:
        return unramified_quadratic(L)
    t = (L.q - 1) // 2
    _, b0, _ = L.decompose_unit(E.norm_to(L, E.unif()))
    val = CycValue.root((t * b0) % (L.q - 1), L.q - 1).inverse()
    return MultChar(L, val, t)


def xi_beta_family(
    E: Subfield,
    beta: PElt,
    parity: str,
    L: Optional[Subfield] = None,
    limit: Optional[int] = None,
) -> List[MultChar]:
    """Self-dual characters of E^x whose 1-unit part is represented by beta
    on the upper window, for a ramified quadratic step E/L with
    sigma(beta) = -beta.  Characters of each parity come in pairs differing
    by the sign of the value at the uniformizer, and the wild parts range
    over all sign-odd corrections below the window."""
    if parity not in ("orthogonal", "symplectic"):
        raise ConfigError("parity must be orthogonal or symplectic")
    if L is None:
        cands = [L2 for L2 in quadratic_downs(E) if E.e == 2 * L2.e]
        L = next(
            (L2 for L2 in cands if E.tw.galois(step_sigma(E, L2), beta) == -beta),
            None,
        )
        if L is None:
            raise ConfigError("no ramified quadratic step makes beta sign-odd")
    if E.e != 2 * L.e or E.f != L.f:
        raise ConfigError("the step E/L must be ramified quadratic")
    sigma = step_sigma(E, L)
    if E.tw.galois(sigma, beta) != -beta:
        raise ConfigError("beta is not sign-odd for the step")
    ve = E.val(beta)
    if ve is None or ve >= 0 or ve.denominator != 1:
        raise ConfigError("beta must have negative integral valuation in E")
    m = -int(ve)
    q = E.q
    t = 0 if parity == "orthogonal" else (q - 1) // 2

    # chi(pi_E)^2 = chi(u0) * chi|_L(pi_L) with u0 = pi_E^2 / pi_L in mu_E
    j0 = (2 * E.a - L.a) % E.tw.Q
    if j0 % E.R:
        raise AssertionError("pi_E^2 / pi_L is not a Teichmueller element")
    j0 //= E.R
    target = Fraction(t * j0, q - 1)
    if parity == "symplectic":
        if omega_quadratic(E, L).unif_value.as_fraction() == -1:
            target += Fraction(1, 2)
    unifs = [_root_of(target / 2), _root_of(target / 2 + Fraction(1, 2))]

    positions = [v for v in range(-(m // 2), 0) if v % 2 != 0]
    out: List[MultChar] = []
    for assign in _iproduct(range(-1, q - 1), repeat=len(positions)):
        c = beta
        for v, dg in zip(positions, assign):
            if dg >= 0:
                c = c + E.zeta(dg) * E.unif(v)
        for uv in unifs:
            out.append(MultChar(E, uv, t, c))
            if limit is not None and len(out) >= limit:
                return out
    return out


# ---------------------------------------------------------------------------
# quadratic symbols, kappa, determinants
# ---------------------------------------------------------------------------


def leg_unit(L: Subfield, x: PElt) -> int:
    """Quadratic residue symbol of the Teichmueller part of x in the residue
    field of L."""
    _, b, _ = L.decompose_unit(x)
    return -1 if b % 2 else 1


def hilbert_symbol(L: Subfield, x: PElt, y: PElt) -> int:
    """The quadratic Hilbert symbol (x, y) over L, for odd residue
    characteristic (where it only sees valuations and Teichmueller parts)."""
    vx, bx, _ = L.decompose_unit(x)
    vy, by, _ = L.decompose_unit(y)
    s = vx * vy * ((L.q - 1) // 2) + vy * bx + vx * by
    return -1 if s % 2 else 1


def hilbert_char(L: Subfield, y: PElt) -> MultChar:
    """x -> (x, y)_L as a character of L^x."""
    vy, by, _ = L.decompose_unit(y)
    t = (vy * ((L.q - 1) // 2)) % (L.q - 1)
    s = vy * ((L.q - 1) // 2) + by
    return MultChar(L, CycValue.rational(-1 if s % 2 else 1), t)


def kappa_rel(E: Subfield, B: Subfield) -> MultChar:
    """The transfer character of B^x attached to the tame extension E/B:
    the determinant of the representation of the ambient group induced from
    the trivial character of E^x.  Computed through the unramified /
    totally ramified layers; cross-checked elsewhere against the
    discriminant Hilbert symbol."""
    if not (B.H >= E.H):
        raise ConfigError("E must contain B")
    out = trivial_char(B)
    if E.degree == B.degree:
        return out
    # M = maximal subfield of E unramified over B
    cands = [L for L in E.subfields() if B.H >= L.H and L.f == E.f and L.e == B.e]
    if len(cands) != 1:
        raise AssertionError("unramified layer not unique")
    M = cands[0]
    n_ur = E.f // B.f
    e_rel = E.e // B.e
    if n_ur % 2 == 0 and e_rel % 2 == 1:
        out = out * unramified_quadratic(B)
    if e_rel > 1:
        if e_rel % 2 == 1:
            jv = int(jacobi_symbol(M.q, e_rel))
            out = out * unramified_char(M, CycValue.rational(jv)).restrict_to(B)
        else:
            l2s = [
                L
                for L in E.subfields()
                if M.H >= L.H and 2 * L.degree == E.degree
            ]
            if len(l2s) != 1:
                raise AssertionError("index-2 layer of a totally ramified tame step not unique")
            out = out * omega_quadratic(E, l2s[0]).restrict_to(B)
    return out


def kappa(E: Subfield) -> MultChar:
    return kappa_rel(E, base_field(E.tw))


def det_induced(chi: MultChar) -> MultChar:
    """Determinant character (on the base field) of the induction of chi."""
    F = base_field(chi.E.tw)
    return kappa(chi.E) * chi.restrict_to(F)


# ---------------------------------------------------------------------------
# equivalence of induced pairs
# ---------------------------------------------------------------------------


def pair_equivalent(chi1: MultChar, chi2: MultChar) -> bool:
    """Do (E1, chi1) and (E2, chi2) induce equivalent representations?
    True exactly when some ambient Galois transport carries one character
    to the other."""
    tw = chi1.E.tw
    if tw is not chi2.E.tw:
        raise ConfigError("characters live in different towers")
    if chi1.E.degree != chi2.E.degree:
        return False
    for g in tw.coset_reps(frozenset(tw.G), chi1.E.H):
        moved = frozenset(tw.compose(tw.compose(g, h), tw.inv_elem(g)) for h in chi1.E.H)
        if moved == chi2.E.H and chi1.conj_by(g) == chi2:
            return True
    return False
