"""Tests for formal sums of induced representations.

The exterior-cube split is checked against two oracles that do not share
code with the library: the complement involution recomputed on the 20
coordinate trivectors of a split 6-dimensional quadratic space, and the
raw multiset of triple products of the weights.
"""

import itertools
from fractions import Fraction

import pytest

from tamefactors import (
    ConfigError,
    CycValue,
    GParameter,
    InducedSummand,
    MultChar,
    Subfield,
    WeilRep,
    base_field,
    char_multiset_key,
    compositum,
    det_induced,
    gamma_equal,
    gamma_induced_twist,
    gamma_rep_twist,
    gamma_sum_twist,
    is_admissible,
    is_outer_self_conjugate,
    is_self_dual,
    kappa,
    make_tower,
    pair_equivalent,
    pair_parity,
    quasi_minimal,
    rep_det,
    rep_dim,
    rep_dual,
    rep_equivalent,
    restrict_to,
    std_compose,
    tensor_pairs,
    trivial_char,
    twist_equality_check,
    unramified_char,
    unramified_quadratic,
    wedge3_pm,
    wedge_identities_4dim,
    xi_beta_family,
)
from tamefactors.chars import omega_quadratic

_TOWERS = {}


def tower(p, fT, eT, tc=0, prec=28):
    key = (p, fT, eT, tc, prec)
    if key not in _TOWERS:
        _TOWERS[key] = make_tower(p, fT, eT, tc, prec=prec)
    return _TOWERS[key]


# ---------------------------------------------------------------------------
# shared fixtures
# ---------------------------------------------------------------------------


def six_dim_triple(order8=False):
    """Three self-dual quadratic inductions inside the degree-4 normal
    closure: one unramified host and two ramified hosts of distinct
    depths.  With order8=True the unramified character has order 8, so
    its transport to the top field is no longer quadratic."""
    tw = tower(7, 2, 2)
    E1 = Subfield(tw, 2, 1, 0)
    E2 = Subfield(tw, 1, 2, 0)
    E3 = Subfield(tw, 1, 2, 1)
    L = compositum(E2, E3)
    t = 6 if order8 else (E1.q - 1) // 4
    chi1 = MultChar(E1, CycValue.one(), t, None)
    chi2 = xi_beta_family(E2, E2.unif(-1), "orthogonal", limit=1)[0]
    chi3 = xi_beta_family(E3, E3.unif(-3), "orthogonal", limit=1)[0]
    return tw, L, [chi1, chi2, chi3]


def cubic_pair(p):
    """The two coinciding-on-units cubic characters with kappa-restriction,
    differing by a cube root of unity at the uniformizer."""
    tw = tower(p, 2, 6)
    E = Subfield(tw, 1, 3, 0)
    kap = kappa(E)
    c = E.unif(-1)
    chi1 = MultChar(E, kap.unif_value, 0, c)
    chi2 = MultChar(E, kap.unif_value * CycValue.root(1, 3), 0, c)
    return tw, E, chi1, chi2


def quartic_pair():
    """A quasi-minimal quartic character of depth denominator 2 and its
    unramified-quadratic twist."""
    tw = tower(13, 1, 4, prec=36)
    E = Subfield(tw, 1, 4, 0)
    beta = E.unif(-6) + E.unif(-5)
    chi = MultChar(E, CycValue.root(1, 8), 3, beta)
    return tw, E, beta, chi, chi * unramified_quadratic(E)


# ---------------------------------------------------------------------------
# summands and the norm-factorisation normal form
# ---------------------------------------------------------------------------


def test_summand_shape():
    tw = tower(5, 2, 6)
    E = Subfield(tw, 1, 3, 0)
    chi = MultChar(E, kappa(E).unif_value, 0, E.unif(-1))
    s = InducedSummand(chi)
    assert s.dim == 3
    assert s.class_key()[0] == 3 and s.class_key()[1] == 1
    s2 = InducedSummand(chi, 2)
    assert s2.dim == 6
    assert s2.class_key() != s.class_key()
    assert s.dual().dual() == s
    with pytest.raises(ConfigError):
        InducedSummand(chi, 0)
    with pytest.raises(ConfigError):
        WeilRep([])


def test_rep_dim_dual_det():
    tw = tower(5, 2, 6)
    E = Subfield(tw, 1, 3, 0)
    F = base_field(tw)
    chi = MultChar(E, kappa(E).unif_value, 0, E.unif(-1))
    R = WeilRep([chi])
    assert rep_dim(R) == 3
    assert rep_det(R) == det_induced(chi)
    assert rep_equivalent(rep_dual(rep_dual(R)), R)
    # SL2 parts multiply the determinant and the dimension
    R2 = WeilRep([InducedSummand(chi, 2)], normalize=False)
    assert rep_dim(R2) == 6
    assert rep_det(R2) == det_induced(chi) * det_induced(chi)
    # a degree-1 summand contributes itself
    eta = MultChar(F, CycValue.root(1, 4), 1, None)
    assert rep_det(WeilRep([eta])) == eta


def test_norm_descent_galois_cubic():
    tw = tower(7, 1, 3)
    E = Subfield(tw, 1, 3, 0)
    R = WeilRep([trivial_char(E)])
    assert rep_dim(R) == 3
    assert all(s.chi.E.degree == 1 for s in R.summands)
    keys = R.class_keys()
    assert len(set(keys)) == 3
    for s in R.summands:
        assert (s.chi ** 3).is_trivial()
        # each constituent must compose back to the trivial character
        assert s.chi.inflate(E).is_trivial()


def test_norm_descent_biquadratic():
    tw, L, _ = six_dim_triple()
    F = base_field(tw)
    R = WeilRep([trivial_char(L)])
    assert rep_dim(R) == 4 and all(s.dim == 1 for s in R.summands)
    expected = [trivial_char(F)]
    for fe in ((2, 1, 0), (1, 2, 0), (1, 2, 1)):
        expected.append(omega_quadratic(Subfield(tw, *fe), F))
    assert char_multiset_key([s.chi for s in R.summands]) == char_multiset_key(expected)


def test_norm_descent_nonabelian_stays_formal():
    tw = tower(5, 2, 6)
    E = Subfield(tw, 1, 3, 0)
    R = WeilRep([trivial_char(E)])
    assert len(R.summands) == 1
    assert R.summands[0].chi.E.degree == 3
    assert rep_equivalent(R, WeilRep([trivial_char(E)]))


def test_norm_descent_through_intermediate_field():
    tw, L, _ = six_dim_triple()
    E1 = Subfield(tw, 2, 1, 0)
    mu = unramified_quadratic(E1)
    R = WeilRep([mu.inflate(L)])
    assert rep_dim(R) == 4
    assert all(s.dim == 1 for s in R.summands)
    for s in R.summands:
        assert s.chi.inflate(L) == mu.inflate(L)


def test_rep_equivalent_is_transport_invariant():
    tw, E, beta, chi, chip = quartic_pair()
    G = frozenset(tw.G)
    for g in tw.coset_reps(G, E.H):
        moved = chi.conj_by(g)
        assert rep_equivalent(WeilRep([moved]), WeilRep([chi]))
    assert rep_equivalent(WeilRep([chi]), WeilRep([chip])) == pair_equivalent(chi, chip)
    assert not rep_equivalent(WeilRep([chi]), WeilRep([chip]))


def test_rep_equivalent_is_equivalence_relation():
    tw, E, beta, chi, chip = quartic_pair()
    nu4 = unramified_char(E, CycValue.root(1, 4))
    pool = [WeilRep([chi]), WeilRep([chi.conj_by((0, 1))]),
            WeilRep([chip]), WeilRep([chi * nu4]), WeilRep([chi.dual()])]
    for A in pool:
        assert rep_equivalent(A, A)
        for B in pool:
            assert rep_equivalent(A, B) == rep_equivalent(B, A)
            for C in pool:
                if rep_equivalent(A, B) and rep_equivalent(B, C):
                    assert rep_equivalent(A, C)


# ---------------------------------------------------------------------------
# tensor products and restriction
# ---------------------------------------------------------------------------


def test_tensor_dimension_multiplicative():
    tw = tower(5, 2, 6)
    F = base_field(tw)
    E2 = Subfield(tw, 1, 2, 0)
    E3 = Subfield(tw, 1, 3, 0)
    a = MultChar(E3, CycValue.one(), 3, E3.unif(-1))
    b = MultChar(E2, CycValue.root(1, 4), 1, None)
    c = MultChar(F, CycValue.root(1, 4), 1, None)
    for x, y in ((a, b), (a, a), (b, b), (a, c), (c, c)):
        T = tensor_pairs(x, y, normalize=False)
        assert rep_dim(T) == x.E.degree * y.E.degree


def test_tensor_with_base_character_is_twist():
    tw, E, beta, chi, _ = quartic_pair()
    F = base_field(tw)
    eta = MultChar(F, CycValue.root(1, 6), 2, None)
    T = tensor_pairs(chi, eta)
    assert rep_equivalent(T, WeilRep([chi * eta.inflate(E)]))


def test_restriction_shape_and_errors():
    tw, L, chis = six_dim_triple()
    chi1 = chis[0]
    res = restrict_to(WeilRep([chi1]), L)
    assert len(res) == 2
    c = chi1.inflate(L)
    assert char_multiset_key(res) == char_multiset_key([c, c.dual()])
    # containment violated: the host is not inside a proper subfield
    with pytest.raises(ConfigError):
        restrict_to(WeilRep([chi1]), Subfield(tw, 1, 2, 0))
    # SL2 parts have no character multiset
    with pytest.raises(ConfigError):
        restrict_to(WeilRep([InducedSummand(chi1, 2)], normalize=False), L)
    # non-normal restriction fields are rejected
    tw5 = tower(5, 2, 6)
    E = Subfield(tw5, 1, 3, 0)
    eta = MultChar(base_field(tw5), CycValue.root(1, 4), 1, None)
    with pytest.raises(ConfigError):
        restrict_to(WeilRep([eta]), E)


def test_restriction_of_self_induction():
    tw = tower(7, 1, 6)
    L = Subfield(tw, 1, 6, 0)
    chi = MultChar(L, CycValue.root(1, 4), 1, L.unif(-1))
    res = restrict_to(WeilRep([chi], normalize=False), L)
    assert len(res) == 6
    keys = char_multiset_key(res)
    # the multiset is closed under further conjugation
    G = frozenset(tw.G)
    for g in tw.coset_reps(G, L.H):
        assert char_multiset_key([x.conj_by(g) for x in res]) == keys


def test_restriction_of_tensor_is_product_of_restrictions():
    cases = []
    tw7, L7, chis7 = six_dim_triple()
    cases.append((WeilRep([chis7[0]], normalize=False),
                  WeilRep([chis7[1]], normalize=False), L7))
    tw6 = tower(7, 1, 6)
    L6 = Subfield(tw6, 1, 6, 0)
    E3 = Subfield(tw6, 1, 3, 0)
    cases.append((WeilRep([MultChar(E3, CycValue.one(), 2, E3.unif(-1))], normalize=False),
                  WeilRep([MultChar(L6, CycValue.root(1, 4), 1, None)], normalize=False), L6))
    for A, B, L in cases:
        T = tensor_pairs(A.summands[0].chi, B.summands[0].chi, normalize=False)
        ra = restrict_to(A, L)
        rb = restrict_to(B, L)
        rt = restrict_to(T, L)
        prods = [x * y for x in ra for y in rb]
        assert len(rt) == rep_dim(T)
        assert char_multiset_key(prods) == char_multiset_key(rt)


# ---------------------------------------------------------------------------
# composed standard parameters
# ---------------------------------------------------------------------------


def test_std_compose_single_pair_rows():
    tw = tower(5, 2, 6)
    E = Subfield(tw, 1, 3, 0)
    chi = MultChar(E, kappa(E).unif_value, 0, E.unif(-1))
    P = std_compose("Sp", 3, [chi])
    assert P.label == "Sp6" and rep_dim(P.std) == 7
    assert rep_det(P.std).is_trivial()
    assert rep_equivalent(P.std, rep_dual(P.std))
    PG = std_compose("G2", 3, [chi])
    assert PG.label == "G2" and rep_equivalent(P.std, PG.std)
    Pe = std_compose("SO_even", 3, [chi])
    assert Pe.label == "SO6" and rep_dim(Pe.std) == 6
    Po = std_compose("SO_odd", 3, [chi])
    assert Po.label == "SO7" and rep_dim(Po.std) == 6
    PGL = std_compose("GL", 3, [chi])
    assert PGL.label == "GL3" and rep_dim(PGL.std) == 3
    with pytest.raises(ConfigError, match="dimension"):
        std_compose("Sp", 4, [chi])
    with pytest.raises(ConfigError, match="dimension"):
        std_compose("G2", 4, [chi])
    with pytest.raises(ConfigError):
        std_compose("SU", 3, [chi])


def test_std_compose_cuspidal_even():
    tw = tower(5, 2, 12, prec=40)
    E = Subfield(tw, 1, 4, 0)
    c1 = xi_beta_family(E, E.unif(-3), "orthogonal", limit=1)[0]
    c2 = xi_beta_family(E, E.unif(-5), "orthogonal", limit=1)[0]
    P = std_compose("Sp", 4, [c1, c2])
    assert P.label == "Sp8" and rep_dim(P.std) == 9
    assert any(s.dim == 1 and s.chi.is_trivial() for s in P.std.summands)
    assert rep_det(P.std).is_trivial()
    assert rep_equivalent(P.std, rep_dual(P.std))
    Pe = std_compose("SO_even", 4, [c1, c2])
    assert Pe.label == "SO8" and rep_dim(Pe.std) == 8
    assert rep_det(Pe.std).is_trivial()
    # a symplectic character in an orthogonal-parity slot is rejected
    s1 = xi_beta_family(Subfield(tw, 1, 2, 0), Subfield(tw, 1, 2, 0).unif(-1),
                        "symplectic", limit=1)[0]
    with pytest.raises(ConfigError, match="parity"):
        std_compose("Sp", 2, [s1, s1])


def test_std_compose_cuspidal_odd():
    tw = tower(5, 2, 12, prec=40)
    E2 = Subfield(tw, 1, 2, 0)
    s1 = xi_beta_family(E2, E2.unif(-1), "symplectic", limit=1)[0]
    s2 = xi_beta_family(E2, E2.unif(-3), "symplectic", limit=1)[0]
    E0 = Subfield(tw, 2, 1, 0)
    chi0s = MultChar(E0, CycValue.rational(-1), 4, None)
    assert pair_parity(chi0s) == "symplectic" and is_admissible(chi0s)
    P = std_compose("SO_odd", 3, [s1, s2], chi0=chi0s)
    assert P.label == "SO7" and rep_dim(P.std) == 6
    assert rep_equivalent(P.std, rep_dual(P.std))
    with pytest.raises(ConfigError, match="dimension"):
        std_compose("SO_odd", 3, [s1, s2])  # missing auxiliary pair
    # orthogonal quartics cannot fill an odd-N slot whose auxiliary pair
    # carries the nontrivial determinant
    E4 = Subfield(tw, 1, 4, 0)
    c1 = xi_beta_family(E4, E4.unif(-3), "orthogonal", limit=1)[0]
    c2 = xi_beta_family(E4, E4.unif(-5), "orthogonal", limit=1)[0]
    chi0o = MultChar(E0, CycValue.one(), 4, None)
    assert pair_parity(chi0o) == "orthogonal" and is_admissible(chi0o)
    with pytest.raises(ConfigError, match="determinant"):
        std_compose("Sp", 5, [c1, c2], chi0=chi0o)
    # a ramified auxiliary pair is rejected
    r0 = xi_beta_family(E2, E2.unif(-1), "orthogonal", limit=1)[0]
    with pytest.raises(ConfigError, match="dimension"):
        std_compose("SO_odd", 3, [s1, s2], chi0=r0)


# ---------------------------------------------------------------------------
# the exterior-cube split: two independent oracles
# ---------------------------------------------------------------------------

IDX = (1, 2, 3, -3, -2, -1)


def _perm_sign(seq):
    perm = [seq.index(v) for v in IDX]
    inv = sum(1 for i in range(6) for j in range(i + 1, 6) if perm[i] > perm[j])
    return -1 if inv % 2 else 1


def _tau_basis(S):
    """tau(e_S) = sign * e_T: T indexes the complementary trivector of -S,
    signed so that e_{-S} ^ tau(e_S) is the canonical volume form."""
    negS = tuple(-x for x in S)
    comp = tuple(v for v in IDX if v not in negS)
    return comp, _perm_sign(negS + comp)


def _oracle_split(chis, L):
    """tau-eigenspace weight multisets computed from the raw involution."""
    w = {}
    for i, chi in enumerate(chis, start=1):
        w[i] = chi.inflate(L)
        w[-i] = w[i].dual()
    plus, minus, seen = [], [], set()
    for S in itertools.combinations(IDX, 3):
        T, s = _tau_basis(S)
        T2, s2 = _tau_basis(T)
        assert T2 == S and s * s2 == 1  # an involution
        wS = w[S[0]] * w[S[1]] * w[S[2]]
        wT = w[T[0]] * w[T[1]] * w[T[2]]
        assert wS == wT  # the involution preserves weights
        if T == S:
            (plus if s == 1 else minus).append(wS)
        elif S not in seen:
            seen.add(T)
            plus.append(wS)
            minus.append(wS)
    assert len(plus) == 10 and len(minus) == 10
    return plus, minus


@pytest.mark.parametrize("order8", [False, True])
def test_wedge3_matches_involution_oracle(order8):
    tw, L, chis = six_dim_triple(order8=order8)
    plus, minus = wedge3_pm(chis, L)
    oplus, ominus = _oracle_split(chis, L)
    assert char_multiset_key(plus) == char_multiset_key(oplus)
    assert char_multiset_key(minus) == char_multiset_key(ominus)


@pytest.mark.parametrize("order8", [False, True])
def test_wedge3_union_is_all_triple_products(order8):
    tw, L, chis = six_dim_triple(order8=order8)
    w = {}
    for i, chi in enumerate(chis, start=1):
        w[i] = chi.inflate(L)
        w[-i] = w[i].dual()
    all20 = [w[a] * w[b] * w[c] for a, b, c in itertools.combinations(IDX, 3)]
    plus, minus = wedge3_pm(chis, L)
    assert char_multiset_key(plus + minus) == char_multiset_key(all20)


def test_wedge3_halves_agree_iff_transport_quadratic():
    tw, L, chis = six_dim_triple()
    c1L = chis[0].inflate(L)
    assert (c1L * c1L).is_trivial()
    plus, minus = wedge3_pm(chis, L)
    assert char_multiset_key(plus) == char_multiset_key(minus)
    tw, L, chis8 = six_dim_triple(order8=True)
    c1L = chis8[0].inflate(L)
    assert not (c1L * c1L).is_trivial()
    plus, minus = wedge3_pm(chis8, L)
    assert char_multiset_key(plus) != char_multiset_key(minus)


def test_wedge3_accepts_formal_sum_and_validates():
    tw, L, chis = six_dim_triple()
    phi = WeilRep(chis, normalize=False)
    plus, minus = wedge3_pm(phi, L)
    assert len(plus) == 10 and len(minus) == 10
    with pytest.raises(ConfigError):
        wedge3_pm(chis[:2], L)
    cubic = Subfield(tower(5, 2, 6), 1, 3, 0)
    bad = MultChar(cubic, CycValue.one(), 0, cubic.unif(-1))
    with pytest.raises(ConfigError):
        wedge3_pm([bad, bad, bad], L)
    # non-self-dual characters are rejected
    E1 = Subfield(tw, 2, 1, 0)
    ns = MultChar(E1, CycValue.one(), 1, None)
    assert pair_parity(ns) is None
    with pytest.raises(ConfigError):
        wedge3_pm([ns, chis[1], chis[2]], L)


# ---------------------------------------------------------------------------
# outer conjugacy
# ---------------------------------------------------------------------------


def test_outer_conjugacy_odd_summand_rule():
    tw, L, chis = six_dim_triple()
    F = base_field(tw)
    phi = WeilRep(chis, normalize=False)
    assert is_outer_self_conjugate(phi) is False
    # adding a quadratic character gives an odd self-dual summand
    quad = omega_quadratic(Subfield(tw, 1, 2, 0), F)
    aug = phi + WeilRep([quad], normalize=False)
    assert is_outer_self_conjugate(aug) is True
    assert is_outer_self_conjugate(WeilRep([quad], normalize=False)) is True


def test_outer_conjugacy_character_lines_do_not_count():
    tw, L, chis = six_dim_triple()
    F = base_field(tw)
    nu = MultChar(F, CycValue.root(1, 9), 0, None)
    lines = WeilRep([nu, nu.dual()], normalize=False)
    padded = WeilRep(chis, normalize=False) + lines
    assert rep_equivalent(padded, rep_dual(padded))
    assert is_outer_self_conjugate(padded) is False


def test_outer_conjugacy_validation():
    tw, L, chis = six_dim_triple()
    F = base_field(tw)
    nu = MultChar(F, CycValue.root(1, 9), 0, None)
    with pytest.raises(ConfigError, match="self-dual"):
        is_outer_self_conjugate(WeilRep([nu], normalize=False))
    with pytest.raises(ConfigError, match="multiplicity"):
        is_outer_self_conjugate(WeilRep([chis[1], chis[1]], normalize=False))
    tw12 = tower(5, 2, 12, prec=40)
    E2 = Subfield(tw12, 1, 2, 0)
    s1 = xi_beta_family(E2, E2.unif(-1), "symplectic", limit=1)[0]
    with pytest.raises(ConfigError, match="parity"):
        is_outer_self_conjugate(WeilRep([s1], normalize=False))


# ---------------------------------------------------------------------------
# degree-4 exterior identities
# ---------------------------------------------------------------------------


def test_wedge_identities_shape():
    tw, E, beta, chi, chip = quartic_pair()
    out = wedge_identities_4dim(chi)
    w3 = out["wedge3"]
    assert rep_dim(w3) == 4
    om = det_induced(chi)
    assert rep_equivalent(w3, WeilRep([chi.dual() * om.inflate(E)]))
    with pytest.raises(ConfigError):
        wedge_identities_4dim(chi.restrict_to(Subfield(tw, 1, 2, 0)))


def test_wedge_identities_trivial_determinant_case():
    tw = tower(5, 2, 12, prec=40)
    E = Subfield(tw, 1, 4, 0)
    chi = xi_beta_family(E, E.unif(-3), "symplectic", limit=1)[0]
    assert det_induced(chi).is_trivial()
    out = wedge_identities_4dim(chi)
    assert rep_equivalent(out["wedge3"], WeilRep([chi.dual()]))


def test_wedge_identities_orbit_key():
    tw, E, beta, chi, chip = quartic_pair()
    k1 = wedge_identities_4dim(chi)["wedge2_invariant_key"]
    k2 = wedge_identities_4dim(chip)["wedge2_invariant_key"]
    assert k1 == k2
    nu8 = unramified_char(E, CycValue.root(1, 8))
    assert wedge_identities_4dim(chi * nu8)["wedge2_invariant_key"] == k1
    deeper = MultChar(E, chi.unif_value, chi.t, E.unif(-8) + E.unif(-5))
    assert wedge_identities_4dim(deeper)["wedge2_invariant_key"] != k1


def test_quartic_twin_identities():
    tw, E, beta, chi, chip = quartic_pair()
    F = base_field(tw)
    assert is_admissible(chi) and is_admissible(chip)
    assert quasi_minimal(chi)
    assert chi.depth.denominator == 2
    assert chi.restrict_to(F) == chip.restrict_to(F)
    assert chi.eval(beta) == chip.eval(beta)
    assert not pair_equivalent(chi, chip)
    # the two inductions differ exactly by the unramified quadratic of the base
    eta2 = unramified_quadratic(F)
    assert eta2.inflate(E) == unramified_quadratic(E)
    assert chip * eta2.inflate(E) == chi
    # hence identical tensor squares
    assert rep_equivalent(tensor_pairs(chi, chi), tensor_pairs(chip, chip))
    # an order-4 unramified twist does not preserve the induction class
    nu4 = unramified_char(E, CycValue.root(1, 4))
    assert not pair_equivalent(chi, chi * nu4)
    # determinants agree
    assert det_induced(chi) == det_induced(chip)


def test_quartic_twin_gamma_criteria():
    tw, E, beta, chi, chip = quartic_pair()
    F = base_field(tw)
    etas = [trivial_char(F),
            MultChar(F, CycValue.root(1, 3), 4, None),
            unramified_quadratic(F),
            MultChar(F, CycValue.one(), 0, F.unif(-1))]
    for eta in etas:
        out = twist_equality_check([(chi, chip)], [beta], eta)
        assert out["consistent"] and out["lhs_equal"] == "Equal"
        outd = twist_equality_check([(chi.dual(), chip.dual())], [-beta], eta)
        assert outd["consistent"] and outd["lhs_equal"] == "Equal"


# ---------------------------------------------------------------------------
# tensor squares of the cubic pairs
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("p", [7, 5])
def test_cubic_tensor_square_identity(p):
    tw, E, chi1, chi2 = cubic_pair(p)
    F = base_field(tw)
    assert is_admissible(chi1) and is_admissible(chi2)
    assert chi1.coincide_on_units(chi2)
    assert chi1.restrict_to(F) == kappa(E) and chi2.restrict_to(F) == kappa(E)
    assert not pair_equivalent(chi1, chi2)
    assert not pair_equivalent(chi1, chi2.dual())
    T1 = tensor_pairs(chi1, chi1.dual())
    T2 = tensor_pairs(chi2, chi2.dual())
    assert rep_equivalent(T1, T2)
    assert rep_dim(T1) == 9
    if E.is_galois():
        # split branch: three base characters plus two cubic inductions,
        # all trivial at the uniformizer of their field
        assert sorted(s.dim for s in T1.summands) == [1, 1, 1, 3, 3]
    else:
        # the non-normal branch keeps the formal cubic and adds a sextic
        # induction from the compositum with the unramified quadratic
        assert sorted(s.dim for s in T1.summands) == [3, 6]
        assert {s.chi.E.f for s in T1.summands} == {1, 2}
    for s in T1.summands:
        assert s.chi.eval(s.chi.E.unif()) == CycValue.one()


# ---------------------------------------------------------------------------
# gamma factors of formal sums
# ---------------------------------------------------------------------------


def test_gamma_rep_twist_matches_summand_product():
    tw, E, chi1, chi2 = cubic_pair(5)
    F = base_field(tw)
    P = std_compose("Sp", 3, [chi1])
    for eta in (MultChar(F, CycValue.root(1, 4), 1, None),
                MultChar(F, CycValue.one(), 0, F.unif(-1))):
        gA = gamma_rep_twist(P.std, eta)
        gB = gamma_sum_twist([chi1, trivial_char(F), chi1.dual()], eta)
        assert gamma_equal(gA, gB) == "Equal"


def test_gamma_rep_twist_sl2_shifts():
    tw, E, chi1, chi2 = cubic_pair(5)
    F = base_field(tw)
    eta = MultChar(F, CycValue.root(1, 4), 1, None)
    base = gamma_induced_twist(chi1, eta)
    R2 = WeilRep([InducedSummand(chi1, 2)], normalize=False)
    manual2 = base.subst_shift(Fraction(-1, 2)) * base.subst_shift(Fraction(1, 2))
    assert gamma_equal(gamma_rep_twist(R2, eta), manual2) == "Equal"
    R3 = WeilRep([InducedSummand(chi1, 3)], normalize=False)
    manual3 = base.subst_shift(-1) * base * base.subst_shift(1)
    assert gamma_equal(gamma_rep_twist(R3, eta), manual3) == "Equal"
