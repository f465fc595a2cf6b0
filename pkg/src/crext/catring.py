"""Skeletal categorical rings: multiplicative structure tables, the
eight distributivity coherence diagrams, 2-homomorphisms, pi0/pi1
extraction and the obstruction element.

The additive part is a :class:`~crext.catgroup.SkeletalSymCatGroup`;
on top of it sits a strict object multiplication with unit, a morphism
multiplication table, and pi1-valued tables for multiplicative
associativity (m), the unit constraints (lunit/runit) and the two
distributivity constraints (l/r).
"""

from dataclasses import dataclass
from itertools import product

from .catgroup import (SkeletalSymCatGroup, MonoidalFunctorData, coma,
                       check_sym_coherence, check_monoidal_functor,
                       derived_zero_iso, induced_pi1_map)
from .groups import GroupHomomorphism
from .rings import FiniteRing, Bimodule, validate_ring, validate_bimodule


@dataclass(frozen=True, eq=False)
class SkeletalCatRing:
    additive: SkeletalSymCatGroup
    obj_mul: tuple          # n x n table of object indices
    obj_one: int
    mor_mul: dict           # (x, y, alpha, beta) -> pi1 value
    m_table: dict           # (x, y, z) -> pi1 value
    lunit_table: dict       # x -> pi1 value
    runit_table: dict       # x -> pi1 value
    l_table: dict           # (x, y, z) -> pi1 value  (left distributivity)
    r_table: dict           # (x, y, z) -> pi1 value  (right distributivity)

    # -- delegation -----------------------------------------------------

    @property
    def pi1(self):
        return self.additive.pi1

    def objects(self):
        return self.additive.objects()

    def oadd(self, x, y):
        return self.additive.oadd(x, y)

    def omul(self, x, y):
        return self.obj_mul[x][y]

    def id_m(self, x):
        return self.additive.id_m(x)

    def compose(self, g, f):
        return self.additive.compose(g, f)

    def minv(self, m):
        return self.additive.minv(m)

    def madd(self, m0, m1):
        return self.additive.madd(m0, m1)

    def mmul(self, m0, m1):
        return (self.mor_mul[(m0[1], m1[1], m0[0], m1[0])],
                self.omul(m0[1], m1[1]))

    # -- constraints as morphisms ---------------------------------------

    def a(self, x, y, z):
        return self.additive.a(x, y, z)

    def c(self, x, y):
        return self.additive.c(x, y)

    def m(self, x, y, z):
        return (self.m_table[(x, y, z)], self.omul(self.omul(x, y), z))

    def lunit(self, x):
        return (self.lunit_table[x], x)

    def runit(self, x):
        return (self.runit_table[x], x)

    def ldis(self, x, y, z):
        """l(x; y, z): x(y+z) -> xy + xz."""
        return (self.l_table[(x, y, z)], self.omul(x, self.oadd(y, z)))

    def rdis(self, x, y, z):
        """r(x, y; z): (x+y)z -> xz + yz."""
        return (self.r_table[(x, y, z)], self.omul(self.oadd(x, y), z))


def make_catring(additive, obj_mul, obj_one, mor_mul=None, m=None,
                 lunit=None, runit=None, l=None, r=None):
    """Build a categorical ring on a given additive part from callables
    (None means the strict all-zero table; mor_mul=None means the
    pi1-bilinear rule is unavailable and the zero rule is used)."""
    G = additive
    n = G.n_objects
    zero = G.pi1.zero()
    els = list(G.pi1.elements())
    if mor_mul is None:
        mor_mul_t = {(x, y, al, be): zero
                     for x in range(n) for y in range(n)
                     for al in els for be in els}
    else:
        mor_mul_t = {(x, y, al, be): mor_mul(x, y, al, be)
                     for x in range(n) for y in range(n)
                     for al in els for be in els}
    m_t = {(x, y, z): (m(x, y, z) if m else zero)
           for x in range(n) for y in range(n) for z in range(n)}
    lu_t = {x: (lunit(x) if lunit else zero) for x in range(n)}
    ru_t = {x: (runit(x) if runit else zero) for x in range(n)}
    l_t = {(x, y, z): (l(x, y, z) if l else zero)
           for x in range(n) for y in range(n) for z in range(n)}
    r_t = {(x, y, z): (r(x, y, z) if r else zero)
           for x in range(n) for y in range(n) for z in range(n)}
    return SkeletalCatRing(additive=G,
                           obj_mul=tuple(tuple(row) for row in obj_mul),
                           obj_one=obj_one, mor_mul=mor_mul_t, m_table=m_t,
                           lunit_table=lu_t, runit_table=ru_t,
                           l_table=l_t, r_table=r_t)


# ---------------------------------------------------------------------
# coherence
# ---------------------------------------------------------------------

def _mul_structure_witnesses(M):
    """Bifunctoriality of the product and naturality of its constraints."""
    bad = []
    G = M.additive
    zero = G.pi1.zero()
    els = list(G.pi1.elements())
    for x, y in product(M.objects(), repeat=2):
        if M.mor_mul[(x, y, zero, zero)] != zero:
            bad.append(f"mor_mul({x},{y},0,0) != 0")
        for a0, b0 in product(els, repeat=2):
            for a1, b1 in product(els, repeat=2):
                lhs = M.mor_mul[(x, y, G.pi1.add(a0, a1), G.pi1.add(b0, b1))]
                rhs = G.pi1.add(M.mor_mul[(x, y, a0, b0)],
                                M.mor_mul[(x, y, a1, b1)])
                if lhs != rhs:
                    bad.append(f"mor_mul({x},{y},-,-) not additive")
                    break
            else:
                continue
            break
    # naturality of m, lunit, runit, l, r against arbitrary morphisms
    for x, y, z in product(M.objects(), repeat=3):
        for al, be, ga in product(els, repeat=3):
            lhs = M.mmul(M.mmul((al, x), (be, y)), (ga, z))[0]
            rhs = M.mmul((al, x), M.mmul((be, y), (ga, z)))[0]
            if G.pi1.add(M.m_table[(x, y, z)], lhs) != \
                    G.pi1.add(rhs, M.m_table[(x, y, z)]):
                bad.append(f"naturality of m fails at {(x, y, z)}")
                break
            lhs = M.madd(M.mmul((al, x), (be, y)), M.mmul((al, x), (ga, z)))[0]
            rhs = M.mmul((al, x), M.madd((be, y), (ga, z)))[0]
            if G.pi1.add(M.l_table[(x, y, z)], rhs) != \
                    G.pi1.add(lhs, M.l_table[(x, y, z)]):
                bad.append(f"naturality of l fails at {(x, y, z)}")
                break
            lhs = M.madd(M.mmul((al, x), (ga, z)), M.mmul((be, y), (ga, z)))[0]
            rhs = M.mmul(M.madd((al, x), (be, y)), (ga, z))[0]
            if G.pi1.add(M.r_table[(x, y, z)], rhs) != \
                    G.pi1.add(lhs, M.r_table[(x, y, z)]):
                bad.append(f"naturality of r fails at {(x, y, z)}")
                break
        else:
            continue
        break
    for x in M.objects():
        for al in els:
            if M.mmul(M.id_m(M.obj_one), (al, x))[0] != al:
                bad.append(f"naturality of lunit fails at {x}")
                break
            if M.mmul((al, x), M.id_m(M.obj_one))[0] != al:
                bad.append(f"naturality of runit fails at {x}")
                break
    return bad


def check_ring_coherence(M, structure=False):
    """Evaluate the eight distributivity coherence diagrams (D1-D8 in
    print order) plus the multiplicative pentagon (P) and triangle (T)
    at every object tuple; return a list of
    (diagram id, argument tuple, defect value) for every failure."""
    bad = []
    if structure:
        for w in _mul_structure_witnesses(M):
            bad.append(("structure", (), w))
    G = M.additive
    objs = list(M.objects())

    for r, s, t0, t1 in product(objs, repeat=4):
        # D1: (rs)(t0+t1) two ways to r(st0) + r(st1)
        st0, st1 = M.omul(s, t0), M.omul(s, t1)
        top = M.compose(M.ldis(r, st0, st1),
                        M.compose(M.mmul(M.id_m(r), M.ldis(s, t0, t1)),
                                  M.m(r, s, M.oadd(t0, t1))))
        bot = M.compose(M.madd(M.m(r, s, t0), M.m(r, s, t1)),
                        M.ldis(M.omul(r, s), t0, t1))
        if top != bot:
            bad.append(("D1", (r, s, t0, t1), G.pi1.sub(top[0], bot[0])))

    for r, s0, s1, t in product(objs, repeat=4):
        # D2: (r(s0+s1))t two ways to r(s0 t) + r(s1 t)
        rs0, rs1 = M.omul(r, s0), M.omul(r, s1)
        up = M.compose(M.madd(M.m(r, s0, t), M.m(r, s1, t)),
                       M.compose(M.rdis(rs0, rs1, t),
                                 M.mmul(M.ldis(r, s0, s1), M.id_m(t))))
        down = M.compose(M.ldis(r, M.omul(s0, t), M.omul(s1, t)),
                         M.compose(M.mmul(M.id_m(r), M.rdis(s0, s1, t)),
                                   M.m(r, M.oadd(s0, s1), t)))
        if up != down:
            bad.append(("D2", (r, s0, s1, t), G.pi1.sub(up[0], down[0])))

    for r0, r1, s, t in product(objs, repeat=4):
        # D3: ((r0+r1)s)t two ways to r0(st) + r1(st)
        top = M.compose(M.madd(M.m(r0, s, t), M.m(r1, s, t)),
                        M.compose(M.rdis(M.omul(r0, s), M.omul(r1, s), t),
                                  M.mmul(M.rdis(r0, r1, s), M.id_m(t))))
        bot = M.compose(M.rdis(r0, r1, M.omul(s, t)),
                        M.m(M.oadd(r0, r1), s, t))
        if top != bot:
            bad.append(("D3", (r0, r1, s, t), G.pi1.sub(top[0], bot[0])))

    one = M.obj_one
    for r0, r1 in product(objs, repeat=2):
        # D4: lunit vs left distributivity
        lhs = M.compose(M.madd(M.lunit(r0), M.lunit(r1)), M.ldis(one, r0, r1))
        rhs = M.lunit(M.oadd(r0, r1))
        if lhs != rhs:
            bad.append(("D4", (r0, r1), G.pi1.sub(lhs[0], rhs[0])))
        # D5: runit vs right distributivity
        lhs = M.compose(M.madd(M.runit(r0), M.runit(r1)), M.rdis(r0, r1, one))
        rhs = M.runit(M.oadd(r0, r1))
        if lhs != rhs:
            bad.append(("D5", (r0, r1), G.pi1.sub(lhs[0], rhs[0])))

    for r, s00, s01, s10, s11 in product(objs, repeat=5):
        # D6: r((s00+s01)+(s10+s11)) two ways to (rs00+rs10)+(rs01+rs11)
        up = M.compose(
            coma(G, M.omul(r, s00), M.omul(r, s01),
                 M.omul(r, s10), M.omul(r, s11)),
            M.compose(M.madd(M.ldis(r, s00, s01), M.ldis(r, s10, s11)),
                      M.ldis(r, M.oadd(s00, s01), M.oadd(s10, s11))))
        down = M.compose(
            M.madd(M.ldis(r, s00, s10), M.ldis(r, s01, s11)),
            M.compose(M.ldis(r, M.oadd(s00, s10), M.oadd(s01, s11)),
                      M.mmul(M.id_m(r), coma(G, s00, s01, s10, s11))))
        if up != down:
            bad.append(("D6", (r, s00, s01, s10, s11),
                        G.pi1.sub(up[0], down[0])))

    for r0, r1, s0, s1 in product(objs, repeat=4):
        # D7: (r0+r1)(s0+s1) two ways to (r0s0+r1s0)+(r0s1+r1s1)
        left = M.compose(
            coma(G, M.omul(r0, s0), M.omul(r0, s1),
                 M.omul(r1, s0), M.omul(r1, s1)),
            M.compose(M.madd(M.ldis(r0, s0, s1), M.ldis(r1, s0, s1)),
                      M.rdis(r0, r1, M.oadd(s0, s1))))
        right = M.compose(
            M.madd(M.rdis(r0, r1, s0), M.rdis(r0, r1, s1)),
            M.ldis(M.oadd(r0, r1), s0, s1))
        if left != right:
            bad.append(("D7", (r0, r1, s0, s1),
                        G.pi1.sub(left[0], right[0])))

    for r00, r01, r10, r11, s in product(objs, repeat=5):
        # D8: ((r00+r01)+(r10+r11))s two ways to (r00s+r10s)+(r01s+r11s)
        up = M.compose(
            coma(G, M.omul(r00, s), M.omul(r01, s),
                 M.omul(r10, s), M.omul(r11, s)),
            M.compose(M.madd(M.rdis(r00, r01, s), M.rdis(r10, r11, s)),
                      M.rdis(M.oadd(r00, r01), M.oadd(r10, r11), s)))
        down = M.compose(
            M.madd(M.rdis(r00, r10, s), M.rdis(r01, r11, s)),
            M.compose(M.rdis(M.oadd(r00, r10), M.oadd(r01, r11), s),
                      M.mmul(coma(G, r00, r01, r10, r11), M.id_m(s))))
        if up != down:
            bad.append(("D8", (r00, r01, r10, r11, s),
                        G.pi1.sub(up[0], down[0])))

    # multiplicative pentagon
    for w, x, y, z in product(objs, repeat=4):
        lhs = M.compose(M.mmul(M.id_m(w), M.m(x, y, z)),
                        M.compose(M.m(w, M.omul(x, y), z),
                                  M.mmul(M.m(w, x, y), M.id_m(z))))
        rhs = M.compose(M.m(w, x, M.omul(y, z)), M.m(M.omul(w, x), y, z))
        if lhs != rhs:
            bad.append(("P", (w, x, y, z), G.pi1.sub(lhs[0], rhs[0])))

    # multiplicative triangle: (x . lunit(y)) . m(x,1,y) = runit(x) . y
    for x, y in product(objs, repeat=2):
        lhs = M.compose(M.mmul(M.id_m(x), M.lunit(y)), M.m(x, one, y))
        rhs = M.mmul(M.runit(x), M.id_m(y))
        if lhs != rhs:
            bad.append(("T", (x, y), G.pi1.sub(lhs[0], rhs[0])))
    return bad


# ---------------------------------------------------------------------
# pi0 / pi1 / obstruction
# ---------------------------------------------------------------------

def pi0_ring(M, labels=None):
    """The strict object ring of a skeletal model (must validate)."""
    n = M.additive.n_objects
    if labels is None:
        labels = tuple(str(i) for i in range(n))
    ring = FiniteRing(labels=tuple(labels),
                      add_table=M.additive.obj_add,
                      mul_table=M.obj_mul,
                      neg_table=M.additive.obj_neg,
                      zero=M.additive.obj_zero, one=M.obj_one)
    report = validate_ring(ring)
    if report:
        raise ValueError("object skeleton is not a ring: " + report[0])
    return ring


def _action_functor(M, r, side):
    """The endofunctor of multiplication by the object r, with its
    additive monoidal structure from the distributivity constraint."""
    G = M.additive
    if side == "left":
        obj_map = tuple(M.omul(r, x) for x in G.objects())
        mor_map = {(x, al): M.mmul(M.id_m(r), (al, x))[0]
                   for x in G.objects() for al in G.pi1.elements()}
        fplus = {(x, y): M.l_table[(r, x, y)]
                 for x in G.objects() for y in G.objects()}
    else:
        obj_map = tuple(M.omul(x, r) for x in G.objects())
        mor_map = {(x, al): M.mmul((al, x), M.id_m(r))[0]
                   for x in G.objects() for al in G.pi1.elements()}
        fplus = {(x, y): M.r_table[(x, y, r)]
                 for x in G.objects() for y in G.objects()}
    return MonoidalFunctorData(source=G, target=G, obj_map=obj_map,
                               mor_map=mor_map, fplus=fplus)


def pi1_bimodule(M, ring=None):
    """pi1 as a bimodule over the object ring: the left action of r is
    the pi1 map induced by the endofunctor r.(-) with monoidal
    structure l(r;-,-), the right action comes from (-).r with
    r(-,-;r).  The result must validate as a bimodule."""
    if ring is None:
        ring = pi0_ring(M)
    left, right = [], []
    for r in M.objects():
        left.append(induced_pi1_map(_action_functor(M, r, "left")))
        right.append(induced_pi1_map(_action_functor(M, r, "right")))
    bim = Bimodule(ring=ring, group=M.pi1,
                   left_action=tuple(left), right_action=tuple(right))
    report = validate_bimodule(bim)
    if report:
        raise ValueError("pi1 is not a bimodule: " + report[0])
    return bim


def obstruction(M, assert_invariants=False):
    """The automorphism of 0 given by conjugating the symmetry c(0,0)
    by lambda(0).  With ``assert_invariants`` the 2-torsion and
    centrality properties are enforced (valid on coherent models)."""
    G = M.additive
    z = G.obj_zero
    val = G.pi1.add(G.lambda_table[z],
                    G.pi1.sub(G.c_table[(z, z)], G.lambda_table[z]))
    if assert_invariants:
        if G.pi1.scale(2, val) != G.pi1.zero():
            raise ValueError("obstruction is not 2-torsion")
        bim = pi1_bimodule(M)
        for r in M.objects():
            if bim.act_left(r, val) != bim.act_right(val, r):
                raise ValueError("obstruction is not central")
    return val


# ---------------------------------------------------------------------
# 2-homomorphisms
# ---------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class TwoHomomorphism:
    """(f, f_+, f_., f_1) between skeletal categorical rings; f0 is
    always derived from the rest of the structure."""

    source: SkeletalCatRing
    target: SkeletalCatRing
    obj_map: tuple
    mor_map: dict           # (x, alpha) -> target pi1 value
    fplus: dict             # (x, y) -> target pi1 value
    fdot: dict              # (x, y) -> target pi1 value
    f1: object              # target pi1 value at f(1) -> 1

    def fo(self, x):
        return self.obj_map[x]

    def fm(self, m):
        return (self.mor_map[(m[1], m[0])], self.fo(m[1]))

    def fp(self, x, y):
        t = self.target
        return (self.fplus[(x, y)], t.oadd(self.fo(x), self.fo(y)))

    def fd(self, x, y):
        t = self.target
        return (self.fdot[(x, y)], t.omul(self.fo(x), self.fo(y)))

    def additive_part(self):
        return MonoidalFunctorData(source=self.source.additive,
                                   target=self.target.additive,
                                   obj_map=self.obj_map,
                                   mor_map=self.mor_map, fplus=self.fplus)


def check_2hom(F, symmetry=False):
    """All 2-homomorphism conditions; returns witness strings.

    Checks additive monoidal coherence (f0 derived), multiplicative
    monoidal coherence with f1, naturality of f_., and the two
    distributivity compatibility diagrams.
    """
    s, t = F.source, F.target
    bad = list(check_monoidal_functor(F.additive_part(), symmetry=symmetry))

    # naturality of f_.
    for x, y in product(s.objects(), repeat=2):
        for al, be in product(s.pi1.elements(), repeat=2):
            lhs = t.compose(F.fd(x, y), t.mmul(F.fm((al, x)), F.fm((be, y))))
            rhs = t.compose(F.fm(s.mmul((al, x), (be, y))), F.fd(x, y))
            if lhs != rhs:
                bad.append(f"f_. not natural at {(x, y)}")
                break

    # multiplicative associativity compatibility
    for x, y, z in product(s.objects(), repeat=3):
        lhs = t.compose(F.fm(s.m(x, y, z)),
                        t.compose(F.fd(s.omul(x, y), z),
                                  t.mmul(F.fd(x, y), t.id_m(F.fo(z)))))
        rhs = t.compose(F.fd(x, s.omul(y, z)),
                        t.compose(t.mmul(t.id_m(F.fo(x)), F.fd(y, z)),
                                  t.m(F.fo(x), F.fo(y), F.fo(z))))
        if lhs != rhs:
            bad.append(f"f_. associativity compatibility fails at {(x, y, z)}")

    # multiplicative unit compatibility with f1
    one_s, one_t = s.obj_one, t.obj_one
    f1m = (F.f1, F.fo(one_s))
    for x in s.objects():
        lhs = t.compose(F.fm(s.lunit(x)), F.fd(one_s, x))
        rhs = t.compose(t.lunit(F.fo(x)), t.mmul(f1m, t.id_m(F.fo(x))))
        if lhs != rhs:
            bad.append(f"f_. left unit compatibility fails at {x}")
        lhs = t.compose(F.fm(s.runit(x)), F.fd(x, one_s))
        rhs = t.compose(t.runit(F.fo(x)), t.mmul(t.id_m(F.fo(x)), f1m))
        if lhs != rhs:
            bad.append(f"f_. right unit compatibility fails at {x}")

    # left distributivity compatibility
    for r, s0, s1 in product(s.objects(), repeat=3):
        lhs = t.compose(F.fp(s.omul(r, s0), s.omul(r, s1)),
                        t.compose(t.madd(F.fd(r, s0), F.fd(r, s1)),
                                  t.ldis(F.fo(r), F.fo(s0), F.fo(s1))))
        rhs = t.compose(F.fm(s.ldis(r, s0, s1)),
                        t.compose(F.fd(r, s.oadd(s0, s1)),
                                  t.mmul(t.id_m(F.fo(r)), F.fp(s0, s1))))
        if lhs != rhs:
            bad.append(f"left distributivity compatibility fails "
                       f"at {(r, s0, s1)}")

    # right distributivity compatibility (with the argument correction
    # (r0, r1, s) in the final leg)
    for r0, r1, sv in product(s.objects(), repeat=3):
        lhs = t.compose(F.fp(s.omul(r0, sv), s.omul(r1, sv)),
                        t.compose(t.madd(F.fd(r0, sv), F.fd(r1, sv)),
                                  t.rdis(F.fo(r0), F.fo(r1), F.fo(sv))))
        rhs = t.compose(F.fm(s.rdis(r0, r1, sv)),
                        t.compose(F.fd(s.oadd(r0, r1), sv),
                                  t.mmul(F.fp(r0, r1), t.id_m(F.fo(sv)))))
        if lhs != rhs:
            bad.append(f"right distributivity compatibility fails "
                       f"at {(r0, r1, sv)}")
    return bad


def induced_maps(F):
    """(pi0 map as object permutation table, pi1 map) of a 2-hom."""
    pi1_map = induced_pi1_map(F.additive_part())
    return (F.obj_map, pi1_map)
