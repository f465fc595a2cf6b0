"""Both directions of the cocycle / categorical-ring correspondence:
realizing a normalized 3-cochain as a skeletal categorical ring,
extracting a characteristic cocycle from a model via representative
choices, and the 2-homomorphisms connecting cohomologous realizations
and round trips.
"""

from dataclasses import dataclass, field
from itertools import product

from .catgroup import make_catgroup, deviation, coma
from .catring import SkeletalCatRing, TwoHomomorphism, make_catring
from .cochains import Cochain3, Cochain2, check_normalized, coboundary


def realize(phi, ring, bim):
    """The skeletal categorical ring with objects R, automorphisms B
    and all constraint tables read off the cochain phi.  phi must be
    normalized; it need not be a cocycle (the output is then a useful
    incoherent diagnostic)."""
    norm = check_normalized(phi, ring)
    if norm:
        raise ValueError("cochain is not normalized: " + norm[0])
    z = ring.zero
    additive = make_catgroup(
        obj_add=ring.add_table, obj_neg=ring.neg_table, obj_zero=z,
        pi1=bim.group,
        a=lambda x, y, w: phi.p(x, y, z, w),
        c=lambda x, y: phi.p(z, x, y, z))
    one = ring.one
    G = bim.group
    return make_catring(
        additive, obj_mul=ring.mul_table, obj_one=one,
        mor_mul=lambda x, y, al, be: G.add(bim.act_right(al, y),
                                           bim.act_left(x, be)),
        m=phi.d,
        lunit=lambda r: G.neg(phi.d(one, one, r)),
        runit=lambda r: phi.d(r, one, one),
        l=phi.dp,
        r=phi.pd)


def coma_defects(M, phi):
    """Mismatches between the derived interchange isomorphism of a
    realized model and phi_plus.

    In a realized model the associativity and symmetry tables are read
    off phi_plus at the degenerate matrix patterns, and the construction
    is designed so that the derived interchange equals phi_plus at
    *every* matrix.  That equality holds exactly for cocycles; for a
    non-cocycle the returned list of ``(matrix, defect)`` pairs is the
    witness (the model tables alone cannot see the non-pattern values of
    phi_plus, so this is the check that separates them).
    """
    G = M.additive
    out = []
    for t in product(M.objects(), repeat=4):
        cv = coma(G, *t)[0]
        pv = phi.p(*t)
        if cv != pv:
            out.append((t, G.pi1.sub(cv, pv)))
    return out


# ---------------------------------------------------------------------
# representative choices and extraction
# ---------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class RepresentativeChoices:
    """sigma tables for a skeletal model: values in pi1, keyed by
    object pairs.  ``canonical`` records that the unit positions were
    filled from the model's unit constraints."""

    sigma_dot: dict
    sigma_plus: dict
    canonical: bool = False

    def sd(self, r, s):
        return self.sigma_dot[(r, s)]

    def sp(self, r0, r1):
        return self.sigma_plus[(r0, r1)]


def canonical_choices(M):
    """All sigma values zero except the zero rows of sigma_+, which are
    filled from the unit constraints: sigma_+(0,r) = lambda(r) and
    sigma_+(r,0) = rho(r).  Those two fillings make the extracted
    cochain normalized; every other position is zero, which on skeletal
    realized models (where lambda = rho = 0) makes extraction return
    the realized cocycle on the nose."""
    G = M.additive
    zero = G.pi1.zero()
    z = G.obj_zero
    sd = {(r, s): zero for r in M.objects() for s in M.objects()}
    sp = dict(sd)
    for r in M.objects():
        sp[(z, r)] = G.lambda_table[r]
        sp[(r, z)] = G.rho_table[r]
    return RepresentativeChoices(sigma_dot=sd, sigma_plus=sp, canonical=True)


def choices_from_tables(M, sigma_dot, sigma_plus):
    return RepresentativeChoices(sigma_dot=dict(sigma_dot),
                                 sigma_plus=dict(sigma_plus))


def random_choices(M, rng):
    """Random representative choices whose zero rows stay canonical.

    Positions with a zero argument keep the canonical values (zero for
    sigma_., lambda/rho fillings for sigma_+); randomizing those rows
    produces a non-normalized extraction, so they are pinned."""
    G = M.additive
    z = G.obj_zero
    els = list(G.pi1.elements())
    ch = canonical_choices(M)
    sd = dict(ch.sigma_dot)
    sp = dict(ch.sigma_plus)
    for r in M.objects():
        for s in M.objects():
            if r != z and s != z:
                sd[(r, s)] = els[rng.randrange(len(els))]
                sp[(r, s)] = els[rng.randrange(len(els))]
    return RepresentativeChoices(sigma_dot=sd, sigma_plus=sp)


def _extract_paths(M, ch):
    """(first composite, second composite) value pairs of the four
    deviation diagrams, as functions of the argument tuples."""
    G = M.additive

    def sdm(r, s):
        return (ch.sd(r, s), M.omul(r, s))

    def spm(r0, r1):
        return (ch.sp(r0, r1), M.oadd(r0, r1))

    def paths_dot(r, s, t):
        first = M.compose(sdm(r, M.omul(s, t)),
                          M.compose(M.mmul(M.id_m(r), sdm(s, t)),
                                    M.m(r, s, t)))
        second = M.compose(sdm(M.omul(r, s), t),
                           M.mmul(sdm(r, s), M.id_m(t)))
        return first, second

    def paths_dotplus(r, s0, s1):
        first = M.compose(spm(M.omul(r, s0), M.omul(r, s1)),
                          M.compose(M.madd(sdm(r, s0), sdm(r, s1)),
                                    M.ldis(r, s0, s1)))
        second = M.compose(sdm(r, M.oadd(s0, s1)),
                           M.mmul(M.id_m(r), spm(s0, s1)))
        return first, second

    def paths_plusdot(r0, r1, s):
        first = M.compose(spm(M.omul(r0, s), M.omul(r1, s)),
                          M.compose(M.madd(sdm(r0, s), sdm(r1, s)),
                                    M.rdis(r0, r1, s)))
        second = M.compose(sdm(M.oadd(r0, r1), s),
                           M.mmul(spm(r0, r1), M.id_m(s)))
        return first, second

    def paths_plus(r00, r01, r10, r11):
        first = M.compose(
            spm(M.oadd(r00, r10), M.oadd(r01, r11)),
            M.compose(M.madd(spm(r00, r10), spm(r01, r11)),
                      coma(G, r00, r01, r10, r11)))
        second = M.compose(spm(M.oadd(r00, r01), M.oadd(r10, r11)),
                           M.madd(spm(r00, r01), spm(r10, r11)))
        return first, second

    return paths_dot, paths_dotplus, paths_plusdot, paths_plus


def extract(M, ch, cross_check=True):
    """The characteristic 3-cochain of a model under the given
    representative choices.  Each component is the deviation between
    the two composite paths of its defining diagram; with
    ``cross_check`` the independent explicit difference formula is
    evaluated too and required to agree."""
    G = M.additive
    zero = G.pi1.zero()
    pdot, pdp, ppd, pplus = _extract_paths(M, ch)
    dot, dotplus, plusdot, plus = {}, {}, {}, {}
    for args in product(M.objects(), repeat=3):
        for table, paths in ((dot, pdot), (dotplus, pdp), (plusdot, ppd)):
            first, second = paths(*args)
            v = deviation(G, first[1], second[0], first[0])
            if cross_check and v != G.pi1.sub(first[0], second[0]):
                raise ValueError(
                    f"extraction cross-check failed at {args}")
            if v != zero:
                table[args] = v
    for args in product(M.objects(), repeat=4):
        first, second = pplus(*args)
        v = deviation(G, first[1], second[0], first[0])
        if cross_check and v != G.pi1.sub(first[0], second[0]):
            raise ValueError(f"extraction cross-check failed at {args}")
        if v != zero:
            plus[args] = v
    return Cochain3(group=G.pi1, dot=dot, dotplus=dotplus,
                    plusdot=plusdot, plus=plus)


# ---------------------------------------------------------------------
# 2-homomorphisms of the correspondence
# ---------------------------------------------------------------------

def _identity_mor_map(M):
    return {(x, al): al for x in M.objects() for al in M.pi1.elements()}


def equiv_from_coboundary(phi, phi_prime, gamma, ring, bim):
    """The 2-homomorphism realize(phi) -> realize(phi_prime) carried by
    a 2-cochain gamma with coboundary(gamma) = phi_prime - phi: the
    identity functor with f_+ = gamma_+, f_. = -gamma_. and
    f_1 = -gamma_.(1,1).  (The sign on the multiplicative component is
    the unique one for which every compatibility diagram commutes; over
    2-torsion coefficients the distinction is invisible.)"""
    diff = coboundary(gamma, ring, bim)
    if not (diff == (phi_prime - phi)):
        delta = (phi_prime - phi) - diff
        for name, table in (("dot", delta.dot), ("dotplus", delta.dotplus),
                            ("plusdot", delta.plusdot), ("plus", delta.plus)):
            for key, v in table.items():
                if v != bim.group.zero():
                    raise ValueError(
                        f"coboundary(gamma) != phi' - phi, first "
                        f"difference at {name}{key}: {v}")
    src = realize(phi, ring, bim)
    tgt = realize(phi_prime, ring, bim)
    n = ring.size
    G = bim.group
    fplus = {(x, y): gamma.gp(x, y) for x in range(n) for y in range(n)}
    fdot = {(x, y): G.neg(gamma.gd(x, y)) for x in range(n) for y in range(n)}
    return TwoHomomorphism(
        source=src, target=tgt,
        obj_map=tuple(range(n)),
        mor_map=_identity_mor_map(src),
        fplus=fplus, fdot=fdot,
        f1=G.neg(gamma.gd(ring.one, ring.one)))


def roundtrip_2hom(M, ring=None, bim=None):
    """The 2-homomorphism realize(extract(M, canonical)) -> M.

    On skeletal models the object map is the identity, the morphism map
    transports automorphisms through lambda, f_. and f_+ are the sigma
    tables, and f_1 is the identity of 1.
    """
    from .catring import pi0_ring, pi1_bimodule
    if ring is None:
        ring = pi0_ring(M)
    if bim is None:
        bim = pi1_bimodule(M, ring)
    ch = canonical_choices(M)
    phi = extract(M, ch)
    src = realize(phi, ring, bim)
    G = M.additive
    mor_map = {}
    for x in M.objects():
        for b in M.pi1.elements():
            mor_map[(x, b)] = G.madd((b, G.obj_zero), G.id_m(x))[0]
    return TwoHomomorphism(
        source=src, target=M,
        obj_map=tuple(M.objects()),
        mor_map=mor_map,
        fplus=dict(ch.sigma_plus), fdot=dict(ch.sigma_dot),
        f1=M.pi1.zero())
