"""Formal direct sums of monomial representations of the Weil group.

A summand is stored by its inducing data: a character chi of the
multiplicative group of a subfield E (degree 1 means a character of the
base field itself), optionally tensored with the a-dimensional
representation of the SL2 factor.  Sums are kept as multisets of such
summands; nothing is ever realised as matrices.

Two conventions keep the bookkeeping honest:

* on construction every summand is re-expressed through norm
  factorisation: a character that factors through the norm from a
  proper subfield is replaced by the matching sum of inductions from
  that subfield (recursively), so that equivalent sums always present
  the same multiset of transport classes.  A character of a non-abelian
  step that cannot be split this way is kept formal and compared by its
  transport class.
* equivalence of sums is multiset equality of summand classes, where
  the class of an induced summand is invariant under conjugating the
  inducing data by the ambient group.
"""

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .cyclo import CycValue
from .padic import ConfigError, Subfield, tensor_decompose
from .chars import (
    MultChar,
    base_field,
    descend_through_norm,
    det_induced,
    factors_through_norm,
    is_self_dual,
    norm_limit_twists,
    trivial_char,
    unramified_char,
)
from .factors import GammaProduct, gamma_induced_twist


# ---------------------------------------------------------------------------
# summands and norm-factorisation normal form
# ---------------------------------------------------------------------------


def pair_parity(chi: MultChar) -> Optional[str]:
    """ "orthogonal" / "symplectic" when the summand induced from chi is
    self-dual, None otherwise.  Degree-1 characters are orthogonal exactly
    when they square to the trivial character."""
    if chi.E.degree == 1:
        return "orthogonal" if (chi * chi).is_trivial() else None
    sd = is_self_dual(chi)
    return sd[1] if sd is not None else None


class InducedSummand:
    """One summand Ind(chi) (x) st_a of a formal sum; a >= 1."""

    __slots__ = ("chi", "a", "_ckey")

    def __init__(self, chi: MultChar, a: int = 1):
        if a < 1:
            raise ConfigError("the SL2 part must have positive dimension")
        self.chi = chi
        self.a = int(a)
        self._ckey = None

    @property
    def dim(self) -> int:
        return self.chi.E.degree * self.a

    def class_key(self) -> tuple:
        if self._ckey is None:
            self._ckey = (self.chi.E.degree, self.a, self.chi.class_key())
        return self._ckey

    def dual(self) -> "InducedSummand":
        return InducedSummand(self.chi.dual(), self.a)

    def __eq__(self, other) -> bool:
        if not isinstance(other, InducedSummand):
            return NotImplemented
        return self.class_key() == other.class_key()

    __hash__ = None

    def __repr__(self) -> str:
        E = self.chi.E
        tag = "Ind(%d,%d,%d)" % (E.f, E.e, E.c)
        if self.a > 1:
            tag += "(x)st%d" % self.a
        return tag


def _descend_fully(chi: MultChar) -> List[MultChar]:
    """The irreducible constituents of Ind(chi), as inducing characters of
    the smallest possible subfields.  Characters of non-abelian steps that
    factor through a norm are returned unchanged (kept formal)."""
    E = chi.E
    if E.degree == 1:
        return [chi]
    for L in E.maximal_proper_subfields():
        if not factors_through_norm(chi, L):
            continue
        try:
            xis = norm_limit_twists(E, L)
            eta0 = descend_through_norm(chi, L)
        except ConfigError:
            continue
        out = []
        for xi in xis:
            out.extend(_descend_fully(eta0 * xi))
        return out
    return [chi]


# ---------------------------------------------------------------------------
# formal sums
# ---------------------------------------------------------------------------


class WeilRep:
    """A formal multiset of induced summands over one tower."""

    __slots__ = ("summands",)

    def __init__(self, summands: Sequence[Union[InducedSummand, MultChar]],
                 normalize: bool = True):
        items = []
        for s in summands:
            items.append(InducedSummand(s) if isinstance(s, MultChar) else s)
        if not items:
            raise ConfigError("a formal sum needs at least one summand")
        tw = items[0].chi.E.tw
        for s in items:
            if s.chi.E.tw is not tw:
                raise ConfigError("summands live over different towers")
        if normalize:
            split = []
            for s in items:
                for c in _descend_fully(s.chi):
                    split.append(InducedSummand(c, s.a))
            items = split
        self.summands = tuple(sorted(items, key=lambda s: s.class_key()))

    @property
    def tower(self):
        return self.summands[0].chi.E.tw

    @property
    def dim(self) -> int:
        return sum(s.dim for s in self.summands)

    def class_keys(self) -> tuple:
        return tuple(s.class_key() for s in self.summands)

    def dual(self) -> "WeilRep":
        return WeilRep([s.dual() for s in self.summands], normalize=False)

    def __add__(self, other: "WeilRep") -> "WeilRep":
        if self.tower is not other.tower:
            raise ConfigError("summands live over different towers")
        return WeilRep(self.summands + other.summands, normalize=False)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeilRep):
            return NotImplemented
        return self.class_keys() == other.class_keys()

    __hash__ = None

    def __repr__(self) -> str:
        return "WeilRep(%s)" % " + ".join(repr(s) for s in self.summands)


def rep_equivalent(R1: WeilRep, R2: WeilRep) -> bool:
    """Multiset equality of summand classes."""
    if R1.tower is not R2.tower:
        raise ConfigError("sums live over different towers")
    return R1.class_keys() == R2.class_keys()


def rep_dual(R: WeilRep) -> WeilRep:
    return R.dual()


def rep_dim(R: WeilRep) -> int:
    return R.dim


def rep_det(R: WeilRep) -> MultChar:
    """The determinant character of the sum, as a character of the base
    field (the SL2 factors contribute trivially)."""
    out = trivial_char(base_field(R.tower))
    for s in R.summands:
        d = s.chi if s.chi.E.degree == 1 else det_induced(s.chi)
        out = out * (d ** s.a)
    return out


# ---------------------------------------------------------------------------
# tensor products and restriction
# ---------------------------------------------------------------------------


def tensor_pairs(chi: MultChar, eta: MultChar, normalize: bool = True) -> WeilRep:
    """Ind(chi) (x) Ind(eta) as a formal sum: one summand per double coset
    of the two inducing fields, induced from the corresponding compositum."""
    summands = []
    for g, K in tensor_decompose(chi.E, eta.E):
        theta = chi.conj_by(g).inflate(K) * eta.inflate(K)
        summands.append(InducedSummand(theta))
    return WeilRep(summands, normalize=normalize)


def restrict_to(R: WeilRep, L: Subfield) -> List[MultChar]:
    """The multiset of characters of L^x obtained by restricting the sum to
    the subgroup cut out by L.  L must be normal over the base and contain
    every inducing field; an induced summand of degree n contributes its n
    transported characters, so the dimension is preserved."""
    if not L.is_galois():
        raise ConfigError("the restriction field must be normal over the base")
    out = []
    for s in R.summands:
        if s.a != 1:
            raise ConfigError("SL2 parts do not restrict to a character multiset")
        E = s.chi.E
        if not (E.H >= L.H):
            raise ConfigError("the restriction field must contain every inducing field")
        if E.degree == 1:
            out.append(s.chi.inflate(L))
            continue
        for g, K in tensor_decompose(E, L):
            if K.H != L.H:
                raise ConfigError("restriction produced an unexpected compositum")
            out.append(s.chi.conj_by(g).inflate(L))
    if len(out) != R.dim:
        raise ConfigError("restriction lost summands")
    return sorted(out, key=lambda c: c.key())


def char_multiset_key(chars: Sequence[MultChar]) -> tuple:
    """A canonical key for a multiset of characters of one field."""
    return tuple(sorted(c.key() for c in chars))


# ---------------------------------------------------------------------------
# parameters for the classical groups, GL(N) and G2
# ---------------------------------------------------------------------------


_GROUPS = ("Sp", "SO_even", "SO_odd", "GL", "G2")


class GParameter:
    """A parameter of one of the supported groups, recorded through the
    formal sum obtained from its standard representation."""

    __slots__ = ("group", "N", "std")

    def __init__(self, group: str, N: int, std: WeilRep):
        if group not in _GROUPS:
            raise ConfigError("unknown group family %r" % (group,))
        self.group = group
        self.N = int(N)
        self.std = std

    @property
    def label(self) -> str:
        if self.group == "Sp":
            return "Sp%d" % (2 * self.N)
        if self.group == "SO_even":
            return "SO%d" % (2 * self.N)
        if self.group == "SO_odd":
            return "SO%d" % (2 * self.N + 1)
        if self.group == "GL":
            return "GL%d" % self.N
        return "G2"

    def __repr__(self) -> str:
        return "GParameter(%s, std=%r)" % (self.label, self.std)


def _std_dim(group: str, N: int) -> int:
    if group == "Sp":
        return 2 * N + 1
    if group in ("SO_even", "SO_odd"):
        return 2 * N
    if group == "GL":
        return N
    return 7


def std_compose(group: str, N: int, pairs: Sequence[MultChar],
                chi0: Optional[MultChar] = None) -> GParameter:
    """Build the parameter whose standard representation is the displayed
    sum for the given group, checking the shape conditions.

    One inducing character of degree N gives the maximal-parabolic shape
    (with a trivial summand added in the symplectic case); two self-dual
    characters of degree M = 2*floor(N/2), of the parity matching the dual
    group, give the cuspidal shape, with the auxiliary unramified
    quadratic pair chi0 filling in when N is odd.  Violations raise with
    the failed condition named."""
    if group not in _GROUPS:
        raise ConfigError("unknown group family %r" % (group,))
    pairs = list(pairs)
    if not pairs:
        raise ConfigError("dimension: at least one inducing character is needed")
    F = base_field(pairs[0].E.tw)

    if group == "GL":
        if len(pairs) != 1:
            raise ConfigError("dimension: GL takes a single inducing character")
        if pairs[0].E.degree != N:
            raise ConfigError("dimension: the inducing field must have degree N")
        return GParameter(group, N, WeilRep(pairs, normalize=False))

    if group == "G2":
        if N != 3:
            raise ConfigError("dimension: the exceptional parameter has N = 3")
        if len(pairs) != 1 or pairs[0].E.degree != 3:
            raise ConfigError("dimension: the exceptional shape takes one cubic character")
        chi = pairs[0]
        std = WeilRep([InducedSummand(chi), InducedSummand(trivial_char(F)),
                       InducedSummand(chi.dual())], normalize=False)
        return GParameter(group, N, std)

    if len(pairs) == 1:
        chi = pairs[0]
        if chi.E.degree != N:
            raise ConfigError("dimension: the inducing field must have degree N")
        parts = [InducedSummand(chi), InducedSummand(chi.dual())]
        if group == "Sp":
            parts.insert(1, InducedSummand(trivial_char(F)))
        return GParameter(group, N, WeilRep(parts, normalize=False))

    if len(pairs) != 2:
        raise ConfigError("dimension: expected one or two inducing characters")
    chi1, chi2 = pairs
    M = 2 * (N // 2)
    parity = "symplectic" if group == "SO_odd" else "orthogonal"
    for chi in (chi1, chi2):
        if chi.E.degree != M:
            raise ConfigError("dimension: cuspidal inducing fields must have degree %d" % M)
        if pair_parity(chi) != parity:
            raise ConfigError("parity: the inducing characters must be self-dual of %s type" % parity)
    omega = det_induced(chi1) * det_induced(chi2)
    if N % 2 == 0:
        target = trivial_char(F)
        if group == "Sp":
            parts = [InducedSummand(omega), InducedSummand(chi1), InducedSummand(chi2)]
        else:
            parts = [InducedSummand(chi1), InducedSummand(chi2)]
    else:
        if chi0 is None:
            raise ConfigError("dimension: an auxiliary unramified pair is required when N is odd")
        if chi0.E.degree != 2 or chi0.E.e != 1:
            raise ConfigError("dimension: the auxiliary pair must be unramified quadratic")
        if pair_parity(chi0) != parity:
            raise ConfigError("parity: the auxiliary pair must be self-dual of %s type" % parity)
        target = det_induced(chi0)
        parts = [InducedSummand(chi0), InducedSummand(chi1), InducedSummand(chi2)]
        if group == "Sp":
            parts.insert(0, InducedSummand(trivial_char(F)))
    if omega != target:
        raise ConfigError("determinant: the product of the two determinant characters "
                          "must match the displayed condition")
    std = WeilRep(parts, normalize=False)
    if std.dim != _std_dim(group, N):
        raise ConfigError("dimension: the standard sum has the wrong dimension")
    return GParameter(group, N, std)


# ---------------------------------------------------------------------------
# the two halves of the exterior cube of an orthogonal 6-dimensional sum
# ---------------------------------------------------------------------------


def wedge3_pm(phi, L: Subfield) -> Tuple[List[MultChar], List[MultChar]]:
    """Weight multisets of the two 10-dimensional halves of the exterior
    cube of a sum of three self-dual quadratic inductions, restricted to
    the subgroup cut out by L (which must contain all three inducing
    fields).  The splitting is by the involution sending a trivector to
    its complementary trivector under the symmetric form.

    In a Witt basis e_1, e_2, e_3, e_-3, e_-2, e_-1 with the subgroup of L
    acting on e_i by the transported character c_i (and on e_-i by its
    inverse), the plus half is spanned by e_1^e_2^e_3, the three vectors
    e_i^e_-j^e_-k, and six involution-symmetrised vectors of weights c_i
    and 1/c_i; the minus half mirrors it with the inverse top vectors."""
    if isinstance(phi, WeilRep):
        for s in phi.summands:
            if s.a != 1:
                raise ConfigError("the exterior cube split takes plain summands")
        chis = [s.chi for s in phi.summands]
    else:
        chis = list(phi)
    if len(chis) != 3:
        raise ConfigError("the split needs exactly three quadratic summands")
    for chi in chis:
        if chi.E.degree != 2:
            raise ConfigError("the split needs quadratic inducing fields")
        if not (chi.E.H >= L.H):
            raise ConfigError("the restriction field must contain every inducing field")
        if pair_parity(chi) is None:
            raise ConfigError("the split needs self-dual inducing characters")
    if not L.is_galois():
        raise ConfigError("the restriction field must be normal over the base")
    c = [chi.inflate(L) for chi in chis]
    ci = [x.dual() for x in c]
    cyc = ((0, 1, 2), (1, 2, 0), (2, 0, 1))
    plus = [c[0] * c[1] * c[2]]
    plus += [c[i] * ci[j] * ci[k] for i, j, k in cyc]
    plus += c + ci
    minus = [ci[0] * ci[1] * ci[2]]
    minus += [ci[i] * c[j] * c[k] for i, j, k in cyc]
    minus += c + ci
    return (sorted(plus, key=lambda x: x.key()),
            sorted(minus, key=lambda x: x.key()))


# ---------------------------------------------------------------------------
# outer conjugacy of even orthogonal sums
# ---------------------------------------------------------------------------


def is_outer_self_conjugate(R: WeilRep) -> bool:
    """For a multiplicity-free self-dual orthogonal sum: is the parameter
    conjugate to its outer twist within the special orthogonal group?

    Equivalent, for such sums, to the existence of a determinant -1
    element in the centralizer, i.e. to some summand being odd-dimensional
    and itself self-dual (summands that are not self-dual pair up into
    hyperbolic planes and only contribute determinant 1)."""
    keys = R.class_keys()
    if len(set(keys)) != len(keys):
        raise ConfigError("multiplicity: the sum is not multiplicity-free")
    if R.class_keys() != R.dual().class_keys():
        raise ConfigError("self-duality: the sum is not self-dual")
    found_odd = False
    for s in R.summands:
        if s.a != 1:
            raise ConfigError("SL2 parts are not supported here")
        if s.class_key() != s.dual().class_key():
            continue
        if pair_parity(s.chi) != "orthogonal":
            raise ConfigError("parity: a self-dual summand is not orthogonal")
        if s.dim % 2 == 1:
            found_odd = True
    return found_odd


# ---------------------------------------------------------------------------
# exterior-power identities for degree-4 inductions
# ---------------------------------------------------------------------------


def wedge_identities_4dim(chi: MultChar) -> Dict[str, object]:
    """For a degree-4 induction: the exterior cube as a formal sum (the
    dual induction twisted by the determinant character, via the perfect
    pairing of the cube against the representation into its determinant),
    and a canonical key of the orbit of the inducing character under
    unramified twists of order dividing 8.  The key is shared exactly by
    the inductions whose exterior square is forced equal by an unramified
    quadratic base twist."""
    E = chi.E
    if E.degree != 4:
        raise ConfigError("the identities need a degree-4 inducing field")
    om = det_induced(chi)
    w3 = WeilRep([InducedSummand(chi.dual() * om.inflate(E))], normalize=False)
    orbit = set()
    for j in range(8):
        tw = unramified_char(E, CycValue.root(j, 8))
        orbit.add((chi * tw).class_key())
    return {"wedge3": w3, "wedge2_invariant_key": tuple(sorted(orbit))}


# ---------------------------------------------------------------------------
# gamma factors of twisted formal sums
# ---------------------------------------------------------------------------


def gamma_rep_twist(R: WeilRep, eta: MultChar) -> GammaProduct:
    """gamma(s, R (x) Ind(eta)): the product over summands, with each SL2
    factor of size a contributing the product of shifts of its plain gamma
    at s + k for k = (1-a)/2, ..., (a-1)/2."""
    out = GammaProduct.one(eta.E.tw.p)
    for s in R.summands:
        g = gamma_induced_twist(s.chi, eta)
        if s.a == 1:
            out = out * g
        else:
            for j in range(s.a):
                out = out * g.subst_shift(Fraction(1 - s.a, 2) + j)
    return out
