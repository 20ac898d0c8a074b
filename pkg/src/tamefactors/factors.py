"""Local L, epsilon and gamma factors of multiplicative characters, and the
valuation/pairing machinery that decides when twisted gamma products must be
equal.

Conventions, fixed once and used everywhere:

* The additive character has level one: trivial on the maximal ideal but not
  on the integers.  On extensions it is pulled back through the trace.
* Valuations are normalized on the base field, so elements of ramified
  extensions have fractional valuations; |x| = q^(-val x).
* Local factors are rational functions in X = p^(-s).  The orientation is
  pinned by gamma(s, 1, psi) = -q^(1/2) (1 - X) / (1 - qX); with it the
  functional equation eps(s, chi) * eps(1-s, chi^(-1)) = chi(-1) holds on
  the nose (any consistent orientation gives the same verdicts).
* The normalizing constants of induction ("lambda" factors) are never
  evaluated: they are carried as a multiset of field isomorphism classes,
  and comparisons are decided only when the multisets cancel.
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .chars import MultChar, base_field, representative_exact, trivial_char
from .cyclo import CycValue, LocalFactor, SqrtVal
from .padic import ConfigError, PElt, Subfield, char_poly, tensor_decompose


# ---------------------------------------------------------------------------
# scalar helpers
# ---------------------------------------------------------------------------


def _q_pow(E: Subfield, k) -> SqrtVal:
    """q_E^k as an exact value, for half-integer k."""
    return SqrtVal.one(E.tw.p).times_p_pow(Fraction(E.f) * Fraction(k))


def _ppow(x: PElt, n: int) -> PElt:
    if n < 0:
        x = x.inverse()
        n = -n
    out = x.tw.one()
    for _ in range(n):
        out = out * x
    return out


def _poly_eval(coeffs: Sequence[PElt], x: PElt) -> PElt:
    out = coeffs[-1]
    for cf in reversed(coeffs[:-1]):
        out = out * x + cf
    return out


# ---------------------------------------------------------------------------
# Gauss sums and Tate factors of a single character
# ---------------------------------------------------------------------------


def gauss_sum(chi: MultChar) -> SqrtVal:
    """[J:H]^(-1/2) * sum over J/H of chi^(-1)(x) psi(c (x-1)), where
    J = U^(d/2), H = U^((d/2)+) and c is the representing element.
    Collapses to 1 when the level e*d is odd (J = H)."""
    E = chi.E
    m = chi.wild_level
    if m <= 0:
        raise ConfigError("gauss_sum needs a character of positive depth")
    if m % 2:
        return SqrtVal.one(E.tw.p)
    h = m // 2
    tot = CycValue.one()  # the trivial coset
    for a in range(E.q - 1):
        z = E.zeta(a) * E.unif(h)
        tot = tot + chi.eval(E.one() + z).inverse() * E.psi(chi.c * z)
    return _q_pow(E, Fraction(-1, 2)) * tot


def eps_value(chi: MultChar) -> SqrtVal:
    """epsilon(chi, psi_E) at s = 0 for a ramified character: the
    chi^(-1)(c) psi(c) |c|^(N/2) G(chi, psi) formula in positive depth, the
    classical residue-unit sum at depth zero."""
    E = chi.E
    m = chi.wild_level
    if chi.is_unramified():
        raise ConfigError("eps_value is for ramified characters")
    if m == 0:
        tot = CycValue.zero()
        for a in range(E.q - 1):
            z = E.zeta(a)
            tot = tot + chi.eval(z).inverse() * E.psi(z)
        return _q_pow(E, Fraction(-1, 2)) * tot
    if not representative_exact(chi):
        raise ConfigError(
            "the stored wild element does not represent the character at "
            "half depth (p too small for this ramification); epsilon is "
            "not computable from it"
        )
    c = chi.c
    head = chi.eval(c).inverse() * E.psi(c)
    return _q_pow(E, Fraction(m, 2)) * head * gauss_sum(chi)


def tate_L(chi: MultChar) -> LocalFactor:
    p = chi.E.tw.p
    if chi.is_unramified():
        al = SqrtVal.of(p, chi.eval(chi.E.unif()))
        return LocalFactor.euler(al, chi.E.f)
    return LocalFactor.one(p)


def _eps_factor(chi: MultChar) -> LocalFactor:
    """epsilon(s, chi, psi_E) for arbitrary chi (internal; the public
    tate_eps restricts to the ramified case)."""
    E = chi.E
    p = E.tw.p
    if chi.is_unramified():
        al = SqrtVal.of(p, chi.eval(E.unif()))
        return LocalFactor.monomial(al.inverse() * _q_pow(E, Fraction(-1, 2)), -E.f)
    return LocalFactor.monomial(eps_value(chi), E.f * chi.wild_level)


def tate_eps(chi: MultChar) -> LocalFactor:
    """epsilon(s, chi, psi_E) as a rational function of X = p^(-s), for
    ramified chi; the X-power is the conductor-degree f*m."""
    if chi.is_unramified():
        raise ConfigError("tate_eps needs a ramified character; "
                          "tate_gamma handles the unramified case")
    return _eps_factor(chi)


def tate_gamma(chi: MultChar) -> LocalFactor:
    """gamma(s, chi, psi_E) = eps(s, chi, psi_E) L(1-s, chi^(-1)) / L(s, chi)."""
    eps = _eps_factor(chi)
    if not chi.is_unramified():
        return eps
    return eps * tate_L(chi.dual()).subst_dual() / tate_L(chi)


# ---------------------------------------------------------------------------
# products of gamma factors with symbolic induction constants
# ---------------------------------------------------------------------------


def _clean(cnt: Counter) -> Counter:
    return Counter({k: v for k, v in cnt.items() if v})


class GammaProduct:
    """A product of Tate gamma factors times induction constants.

    The constants are tracked symbolically as a multiset of isomorphism
    classes of the inducing fields; two products are comparable only when
    the multisets agree (each construction we verify places identical field
    data on both sides, so in practice they always cancel)."""

    __slots__ = ("lam", "fac")

    def __init__(self, lam: Counter, fac: LocalFactor):
        self.lam = _clean(lam)
        self.fac = fac

    @staticmethod
    def one(p: int) -> "GammaProduct":
        return GammaProduct(Counter(), LocalFactor.one(p))

    def __mul__(self, other: "GammaProduct") -> "GammaProduct":
        return GammaProduct(self.lam + other.lam, self.fac * other.fac)

    def subst_shift(self, k) -> "GammaProduct":
        return GammaProduct(self.lam, self.fac.subst_shift(k))

    def __repr__(self) -> str:
        return "GammaProduct(lam=%r, fac=%r)" % (sorted(self.lam.elements()), self.fac)


def gamma_equal(a: GammaProduct, b: GammaProduct) -> str:
    """Compare two gamma products: "Equal" / "NotEqual" when the symbolic
    constants cancel, "Indeterminate" when they do not."""
    if a.lam != b.lam:
        return "Indeterminate"
    return "Equal" if a.fac == b.fac else "NotEqual"


def gamma_induced(chi: MultChar) -> GammaProduct:
    """gamma(s, Ind chi, psi_F) = lambda_{E/F} * gamma(s, chi, psi_E)."""
    lam = Counter()
    if chi.E.degree > 1:
        lam[chi.E.iso_key()] += 1
    return GammaProduct(lam, tate_gamma(chi))


def gamma_induced_twist(chi: MultChar, eta: MultChar) -> GammaProduct:
    """gamma(s, Ind(chi) (x) Ind(eta), psi_F): one induced character per
    double coset of the two fields, living on the compositum."""
    out = GammaProduct.one(chi.E.tw.p)
    for g, K in tensor_decompose(chi.E, eta.E):
        theta = chi.conj_by(g).inflate(K) * eta.inflate(K)
        lam = Counter()
        if K.degree > 1:
            lam[K.iso_key()] += 1
        out = out * GammaProduct(lam, tate_gamma(theta))
    return out


def gamma_sum_twist(chis: Sequence[MultChar], eta: MultChar) -> GammaProduct:
    """gamma of (direct sum of Ind(chi_i)) twisted by Ind(eta)."""
    out = GammaProduct.one(eta.E.tw.p)
    for chi in chis:
        out = out * gamma_induced_twist(chi, eta)
    return out


# ---------------------------------------------------------------------------
# the pairing polynomials u^+- and the level bound t_beta
# ---------------------------------------------------------------------------


def char_value_pairing(chi: MultChar, beta: PElt, L: Subfield,
                       alpha: Optional[PElt]) -> CycValue:
    """chi((-1)^r f_alpha(-beta)) with f_alpha the degree-r characteristic
    polynomial of alpha over the base (r = [L:F]); alpha = None means 0."""
    r = L.degree
    if alpha is None:
        alpha = L.tw.zero()
    val = _poly_eval(char_poly(L, alpha), -beta)
    if r % 2:
        val = -val
    return chi.eval(val)


def u_poly(L: Subfield, alpha: PElt, sign: int) -> Dict[int, PElt]:
    """The Laurent polynomial u^+ = N_{L/F}(-alpha)^(-1) f_alpha(-X)
    (sign +1) or u^- = (-X)^(-r) f_alpha(-X) (sign -1), as a map from
    X-powers to coefficients over the base field."""
    if sign not in (+1, -1):
        raise ConfigError("sign must be +1 or -1")
    coeffs = char_poly(L, alpha)
    r = L.degree
    out: Dict[int, PElt] = {}
    shift = 0 if sign > 0 else -r
    for i, cf in enumerate(coeffs):
        if i % 2:
            cf = -cf
        if sign > 0:
            cf = cf * coeffs[0].inverse()
        elif r % 2:  # (-X)^(-r) carries (-1)^r
            cf = -cf
        if not cf.is_zero():
            out[i + shift] = cf
    return out


def u_value(L: Subfield, alpha: PElt, beta: PElt, sign: int) -> PElt:
    """u^{+-}_alpha evaluated at beta; a one-unit under the valuation
    conditions (val alpha < val beta for +; val beta < val alpha for -)."""
    f_at = _poly_eval(char_poly(L, alpha), -beta)
    if sign > 0:
        return f_at * char_poly(L, alpha)[0].inverse()
    return f_at * _ppow(-beta, L.degree).inverse()


def least_congruence_r(m: int, M: int) -> int:
    """The least r >= 1 with r*m = +-1 mod M (requires gcd(m, M) = 1)."""
    for r in range(1, M + 1):
        if (r * m) % M in (1 % M, (-1) % M):
            return r
    raise ConfigError("no congruence witness: m and M are not coprime")


def t_beta_lower(d: Fraction, r: int) -> Fraction:
    """Certified lower bound for the pairing level t_beta(r) of an element
    of valuation -d = -m/M.

    Each monomial of u^{+-}_alpha of degree 1 <= i < r contributes
    valuation in (+-i*m/M + Z); the positive part of that grid bounds
    val(1 - u) from below, for alpha in any extension of degree < r.
    Checking coincidence of characters at this level is therefore
    sufficient (never weaker than the exact level)."""
    if r < 2:
        raise ConfigError("the pairing level needs r >= 2")
    d = Fraction(d)
    m, M = d.numerator, d.denominator
    best = Fraction(1)
    for i in range(1, r):
        for s in (1, -1):
            g = (s * i * m) % M
            v = Fraction(g, M) if g else Fraction(1)
            if v < best:
                best = v
    return best


@dataclass(frozen=True)
class TBetaReport:
    """Level bound for pairing against elements of extensions of degree
    less than r."""
    r: int
    bound: Fraction
    method: str
    witnesses: tuple


def t_beta(beta: PElt, r: int) -> TBetaReport:
    """Level bound t_beta(r) for a representing element, by the congruence
    method: the returned bound is certified <= the true level."""
    v = beta.val()
    if v is None or v >= 0:
        raise ConfigError("the representing element must have negative valuation")
    d = -v
    m, M = d.numerator, d.denominator
    wit = []
    for i in range(1, r):
        for s in (1, -1):
            g = (s * i * m) % M
            wit.append((i, s, Fraction(g, M) if g else Fraction(1)))
    return TBetaReport(r=r, bound=t_beta_lower(d, r), method="congruence",
                       witnesses=tuple(wit))


# ---------------------------------------------------------------------------
# the twisted-equality criteria
# ---------------------------------------------------------------------------


def pairing_products(
    pairs: Sequence[Tuple[MultChar, MultChar]],
    betas: Sequence[PElt],
    L: Subfield,
    alpha: Optional[PElt],
) -> Tuple[CycValue, CycValue]:
    """The two sides of the pairing criterion: the product over the
    collection of chi_i((-1)^r f_alpha(-beta_i)), and the primed one."""
    lhs = CycValue.one()
    rhs = CycValue.one()
    for (chi, chip), beta in zip(pairs, betas):
        lhs = lhs * char_value_pairing(chi, beta, L, alpha)
        rhs = rhs * char_value_pairing(chip, beta, L, alpha)
    return lhs, rhs


def _pair_depths(pairs, betas) -> List[Fraction]:
    """Common depth of each (chi, chi') pair, with the sanity checks shared
    by both criteria: same field and depth within a pair, totally ramified,
    coinciding at half depth, and beta_i representing both members."""
    out = []
    for (chi, chip), beta in zip(pairs, betas):
        E = chi.E
        if E.H != chip.E.H:
            raise ConfigError("paired characters live on different fields")
        if chi.depth != chip.depth or chi.depth <= 0:
            raise ConfigError("paired characters must share one positive depth")
        if E.f != 1:
            raise ConfigError("the criteria require totally ramified fields")
        if not chi.coincide_on_units(chip, Fraction(chi.depth, 2)):
            raise ConfigError("paired characters must coincide at half depth")
        for c in (chi, chip):
            delta = (c.c - beta).normalized()
            if delta is not None and E.val(delta) < -Fraction(c.wild_level, 2):
                raise ConfigError("beta does not represent both characters")
        out.append(chi.depth)
    return out


def twist_equality_check(
    pairs: Sequence[Tuple[MultChar, MultChar]],
    betas: Sequence[PElt],
    eta: MultChar,
    alpha: Optional[PElt] = None,
) -> dict:
    """For a twisting character eta of depth distinct from every pair depth:
    compute the twisted gamma products of the two collections (lhs_equal)
    and, independently, the character-value pairing criterion (rhs_equal).
    These must agree; 'consistent' records that they do."""
    depths = _pair_depths(pairs, betas)
    if eta.depth in depths:
        raise ConfigError("the twisting depth must differ from every pair depth")
    if alpha is None:
        alpha = eta.c
    L = eta.E
    ga = gamma_sum_twist([chi for chi, _ in pairs], eta)
    gb = gamma_sum_twist([chip for _, chip in pairs], eta)
    lhs = gamma_equal(ga, gb)
    pl, pr = pairing_products(pairs, betas, L, alpha)
    rhs = pl == pr
    return {
        "lhs_equal": lhs,
        "rhs_equal": rhs,
        "consistent": lhs != "Indeterminate" and (lhs == "Equal") == rhs,
    }


def twist_equality_conditions(
    pairs: Sequence[Tuple[MultChar, MultChar]],
    betas: Sequence[PElt],
    r: int,
) -> dict:
    """The three testable conditions under which twists by anything of
    dimension less than r cannot separate the collection (chi_i) from
    (chi'_i):

    1. each pair coincides on units at the certified pairing level of its
       representing element;
    2. the products of values at the representing elements agree;
    3. the products of restrictions to the base field agree.

    Returns the verdicts plus the level data and the scope of the
    guaranteed conclusion."""
    depths = _pair_depths(pairs, betas)
    tw = pairs[0][0].E.tw
    F = base_field(tw)
    min_M = min(d.denominator for d in depths)
    if not 2 <= r <= min(tw.p, min_M):
        raise ConfigError("need 2 <= r <= min(p, M) for the criterion to apply")
    levels = [t_beta_lower(d, r) for d in depths]
    cond1 = all(
        chi.coincide_on_units(chip, t)
        for (chi, chip), t in zip(pairs, levels)
    )
    lhs = CycValue.one()
    rhs = CycValue.one()
    for (chi, chip), beta in zip(pairs, betas):
        lhs = lhs * chi.eval(beta)
        rhs = rhs * chip.eval(beta)
    cond2 = lhs == rhs
    resl = trivial_char(F)
    resr = trivial_char(F)
    for chi, chip in pairs:
        resl = resl * chi.restrict_to(F)
        resr = resr * chip.restrict_to(F)
    cond3 = resl == resr
    return {
        "depths": depths,
        "levels": levels,
        "max_twist_dim": r - 1,
        "cond_level_coincide": cond1,
        "cond_beta_product": cond2,
        "cond_base_restriction": cond3,
        "all": cond1 and cond2 and cond3,
    }
