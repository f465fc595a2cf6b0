"""Skeletal symmetric categorical groups.

Models are skeletal and strict on objects: the objects form a finite
abelian group presented by tables, every morphism is an automorphism,
and Hom(x, x) is identified with a fixed finite abelian group ``pi1``
whose addition is morphism composition.  All structure isomorphisms
(associativity, symmetry, units, inverses) are then pi1-valued tables,
which makes every coherence condition a finite scan.

A morphism is represented as a pair ``(value, obj)`` with ``value`` an
element of ``pi1`` and ``obj`` the object index it lives at.
"""

from dataclasses import dataclass
from itertools import product

from .groups import FiniteAbelianGroup, GroupHomomorphism


@dataclass(frozen=True, eq=False)
class SkeletalSymCatGroup:
    """A finite skeletal symmetric categorical group.

    Objects are indices 0..n-1 with a strict abelian group structure
    given by ``obj_add`` / ``obj_neg`` / ``obj_zero``.  ``mor_add`` is
    the morphism part of + as a full table keyed by
    ``(x, y, alpha, beta)``; constraint tables are keyed by object
    tuples and take values in ``pi1``.
    """

    obj_add: tuple          # n x n table of object indices
    obj_neg: tuple          # n table of object indices
    obj_zero: int
    pi1: FiniteAbelianGroup
    mor_add: dict           # (x, y, alpha, beta) -> pi1 value
    a_table: dict           # (x, y, z) -> pi1 value
    c_table: dict           # (x, y) -> pi1 value
    lambda_table: dict      # x -> pi1 value
    rho_table: dict         # x -> pi1 value
    iota_table: dict        # x -> pi1 value

    # -- objects ------------------------------------------------------

    @property
    def n_objects(self):
        return len(self.obj_neg)

    def objects(self):
        return range(self.n_objects)

    def oadd(self, x, y):
        return self.obj_add[x][y]

    def oneg(self, x):
        return self.obj_neg[x]

    # -- morphisms ----------------------------------------------------

    def id_m(self, x):
        return (self.pi1.zero(), x)

    def compose(self, g, f):
        """g after f; both are automorphisms of the same object."""
        if g[1] != f[1]:
            raise ValueError("composition of morphisms at different objects")
        return (self.pi1.add(g[0], f[0]), g[1])

    def minv(self, m):
        return (self.pi1.neg(m[0]), m[1])

    def madd(self, m0, m1):
        """Monoidal sum of two morphisms via the mor_add table."""
        return (self.mor_add[(m0[1], m1[1], m0[0], m1[0])],
                self.oadd(m0[1], m1[1]))

    # -- constraints as morphisms --------------------------------------

    def a(self, x, y, z):
        return (self.a_table[(x, y, z)], self.oadd(self.oadd(x, y), z))

    def c(self, x, y):
        return (self.c_table[(x, y)], self.oadd(x, y))

    def lam(self, x):
        return (self.lambda_table[x], x)

    def rho(self, x):
        return (self.rho_table[x], x)

    def iota(self, x):
        return (self.iota_table[x], self.obj_zero)


def make_catgroup(obj_add, obj_neg, obj_zero, pi1, mor_add=None, a=None,
                  c=None, lam=None, rho=None, iota=None):
    """Build a model from callables (or None for strict tables)."""
    n = len(obj_neg)
    zero = pi1.zero()
    els = list(pi1.elements())
    if mor_add is None:
        mor_add_t = {(x, y, al, be): pi1.add(al, be)
                     for x in range(n) for y in range(n)
                     for al in els for be in els}
    else:
        mor_add_t = {(x, y, al, be): mor_add(x, y, al, be)
                     for x in range(n) for y in range(n)
                     for al in els for be in els}
    a_t = {(x, y, z): (a(x, y, z) if a else zero)
           for x in range(n) for y in range(n) for z in range(n)}
    c_t = {(x, y): (c(x, y) if c else zero)
           for x in range(n) for y in range(n)}
    lam_t = {x: (lam(x) if lam else zero) for x in range(n)}
    rho_t = {x: (rho(x) if rho else zero) for x in range(n)}
    iota_t = {x: (iota(x) if iota else zero) for x in range(n)}
    return SkeletalSymCatGroup(
        obj_add=tuple(tuple(row) for row in obj_add),
        obj_neg=tuple(obj_neg), obj_zero=obj_zero, pi1=pi1,
        mor_add=mor_add_t, a_table=a_t, c_table=c_t,
        lambda_table=lam_t, rho_table=rho_t, iota_table=iota_t)


# ---------------------------------------------------------------------
# deviation ("hole") calculus
# ---------------------------------------------------------------------

def deviation(G, x, alpha, alpha_prime):
    """The unique beta in pi1 with rho(x) . (alpha + beta) = alpha' . rho(x).

    ``alpha`` and ``alpha_prime`` are pi1 values of two parallel
    automorphisms of ``x``.  Found by exhaustive search with a
    uniqueness assertion, which doubles as a model-validity check.
    """
    target = G.pi1.add(alpha_prime, G.rho(x)[0])
    found = None
    for beta in G.pi1.elements():
        lhs = G.pi1.add(G.rho(x)[0],
                        G.mor_add[(x, G.obj_zero, alpha, beta)])
        if lhs == target:
            if found is not None:
                raise ValueError(
                    f"deviation not unique at object {x}: bitorsor "
                    "property fails, model is invalid")
            found = beta
    if found is None:
        raise ValueError(
            f"no deviation exists at object {x}: bitorsor property "
            "fails, model is invalid")
    return found


# ---------------------------------------------------------------------
# coherence
# ---------------------------------------------------------------------

def _structure_witnesses(G):
    """Bifunctoriality of + and identity preservation of mor_add."""
    bad = []
    zero = G.pi1.zero()
    els = list(G.pi1.elements())
    for x in G.objects():
        for y in G.objects():
            if G.mor_add[(x, y, zero, zero)] != zero:
                bad.append(f"mor_add({x},{y},0,0) != 0")
            for a0, b0 in product(els, repeat=2):
                for a1, b1 in product(els, repeat=2):
                    lhs = G.mor_add[(x, y, G.pi1.add(a0, a1),
                                     G.pi1.add(b0, b1))]
                    rhs = G.pi1.add(G.mor_add[(x, y, a0, b0)],
                                    G.mor_add[(x, y, a1, b1)])
                    if lhs != rhs:
                        bad.append(
                            f"mor_add({x},{y},-,-) not additive at "
                            f"{(a0, b0)}, {(a1, b1)}")
                        break
                else:
                    continue
                break
    return bad


def check_sym_coherence(G, structure=True):
    """Scan all symmetric monoidal axioms.

    Returns a list of ``(check_id, args, defect)`` triples, where
    ``defect`` is the pi1 difference of the two composite paths (or
    ``None`` for structural witnesses, whose description is in
    ``check_id``).  Checks: pentagon for a, the unit triangle, the
    hexagon for c against a, the symmetry involution, naturality of
    a/c/lambda/rho, and (optionally) bifunctoriality of mor_add.
    Empty list iff the model is a symmetric categorical group.
    """
    bad = []
    if structure:
        bad += [(msg, (), None) for msg in _structure_witnesses(G)]
    objs = list(G.objects())
    els = list(G.pi1.elements())

    def diff(lhs, rhs):
        return G.pi1.sub(lhs[0], rhs[0])

    # pentagon: (w + a(x,y,z)) . a(w,x+y,z) . (a(w,x,y) + z)
    #            = a(w,x,y+z) . a(w+x,y,z)
    for w, x, y, z in product(objs, repeat=4):
        lhs = G.compose(G.madd(G.id_m(w), G.a(x, y, z)),
                        G.compose(G.a(w, G.oadd(x, y), z),
                                  G.madd(G.a(w, x, y), G.id_m(z))))
        rhs = G.compose(G.a(w, x, G.oadd(y, z)),
                        G.a(G.oadd(w, x), y, z))
        if lhs != rhs:
            bad.append(("pentagon", (w, x, y, z), diff(lhs, rhs)))

    for x, y in product(objs, repeat=2):
        # triangle: (x + lambda(y)) . a(x,0,y) = rho(x) + y
        lhs = G.compose(G.madd(G.id_m(x), G.lam(y)), G.a(x, G.obj_zero, y))
        rhs = G.madd(G.rho(x), G.id_m(y))
        if lhs != rhs:
            bad.append(("unit-triangle", (x, y), diff(lhs, rhs)))
        # symmetry involution: c(y,x) . c(x,y) = id
        lhs = G.compose(G.c(y, x), G.c(x, y))
        rhs = G.id_m(G.oadd(x, y))
        if lhs != rhs:
            bad.append(("involution", (x, y), diff(lhs, rhs)))

    # hexagon: a(y,z,x) . c(x,y+z) . a(x,y,z)
    #           = (y + c(x,z)) . a(y,x,z) . (c(x,y) + z)
    for x, y, z in product(objs, repeat=3):
        lhs = G.compose(G.a(y, z, x),
                        G.compose(G.c(x, G.oadd(y, z)), G.a(x, y, z)))
        rhs = G.compose(G.madd(G.id_m(y), G.c(x, z)),
                        G.compose(G.a(y, x, z),
                                  G.madd(G.c(x, y), G.id_m(z))))
        if lhs != rhs:
            bad.append(("hexagon", (x, y, z), diff(lhs, rhs)))

    # naturality of a and c against arbitrary morphisms
    for x, y, z in product(objs, repeat=3):
        for al, be, ga in product(els, repeat=3):
            lhs = G.madd(G.madd((al, x), (be, y)), (ga, z))[0]
            rhs = G.madd((al, x), G.madd((be, y), (ga, z)))[0]
            if G.pi1.add(G.a_table[(x, y, z)], lhs) != \
                    G.pi1.add(rhs, G.a_table[(x, y, z)]):
                bad.append(("a-naturality", (x, y, z),
                            G.pi1.sub(lhs, rhs)))
                break
        else:
            continue
        break
    for x, y in product(objs, repeat=2):
        for al, be in product(els, repeat=2):
            lhs = G.madd((al, x), (be, y))[0]
            rhs = G.madd((be, y), (al, x))[0]
            if G.pi1.add(G.c_table[(x, y)], lhs) != \
                    G.pi1.add(rhs, G.c_table[(x, y)]):
                bad.append(("c-naturality", (x, y), G.pi1.sub(lhs, rhs)))
        for al in els:
            if G.madd(G.id_m(G.obj_zero), (al, x))[0] != al:
                bad.append(("lambda-naturality", (x,), None))
            if G.madd((al, x), G.id_m(G.obj_zero))[0] != al:
                bad.append(("rho-naturality", (x,), None))
    return bad


def coma(G, a, b, c, d, check_paths=False):
    """The interchange isomorphism (a+b)+(c+d) -> (a+c)+(b+d).

    Evaluated along the left branch of its defining diagram:
    undo a, swap b and c in the middle, redo a.  With
    ``check_paths=True`` the right branch is evaluated too and the two
    are required to agree (they do in every coherent model).
    """
    left = _coma_left(G, a, b, c, d)
    if check_paths:
        right = _coma_right(G, a, b, c, d)
        if left != right:
            raise ValueError(
                f"coma paths disagree at {(a, b, c, d)}: model incoherent")
    return left


def _coma_left(G, a, b, c, d):
    m = G.minv(G.a(G.oadd(a, b), c, d))
    m = G.compose(G.madd(G.a(a, b, c), G.id_m(d)), m)
    m = G.compose(G.madd(G.madd(G.id_m(a), G.c(b, c)), G.id_m(d)), m)
    m = G.compose(G.madd(G.minv(G.a(a, c, b)), G.id_m(d)), m)
    m = G.compose(G.a(G.oadd(a, c), b, d), m)
    return m


def _coma_right(G, a, b, c, d):
    m = G.a(a, b, G.oadd(c, d))
    m = G.compose(G.madd(G.id_m(a), G.minv(G.a(b, c, d))), m)
    m = G.compose(G.madd(G.id_m(a), G.madd(G.c(b, c), G.id_m(d))), m)
    m = G.compose(G.madd(G.id_m(a), G.a(c, b, d)), m)
    m = G.compose(G.minv(G.a(a, c, G.oadd(b, d))), m)
    return m


# ---------------------------------------------------------------------
# monoidal functors
# ---------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class MonoidalFunctorData:
    """A monoidal functor between skeletal models.

    ``obj_map`` sends source objects to target objects; ``mor_map`` is
    keyed by ``(source object, pi1 value)``; ``fplus`` is keyed by
    object pairs and gives the value of f_+(x, y) at the object
    f(x) + f(y) = f(x + y).  ``f0`` may be supplied; if None it is
    derived from the rest of the structure.
    """

    source: SkeletalSymCatGroup
    target: SkeletalSymCatGroup
    obj_map: tuple
    mor_map: dict
    fplus: dict
    f0: object = None

    def fo(self, x):
        return self.obj_map[x]

    def fm(self, m):
        return (self.mor_map[(m[1], m[0])], self.fo(m[1]))

    def fp(self, x, y):
        t = self.target
        return (self.fplus[(x, y)], t.oadd(self.fo(x), self.fo(y)))


def derived_zero_iso(F):
    """The canonical f0: f(0) -> 0 determined by the rest of a
    monoidal functor, evaluated as the defining six-step composite in
    the target's tables.  Returned as a pi1 value at object 0 of the
    target (the composite lands at the target's strict zero when
    f(0) = 0; in general it is an automorphism-valued correction)."""
    s, t = F.source, F.target
    z = F.fo(s.obj_zero)           # f(0) in the target
    n = t.oneg(z)
    m = t.minv(t.lam(z))                                   # f(0) -> 0+f(0)
    m = t.compose(t.madd(t.minv(t.iota(z)), t.id_m(z)), m)  # -> (-f0+f0)+f0
    m = t.compose(t.a(n, z, z), m)                          # -> -f0+(f0+f0)
    m = t.compose(t.madd(t.id_m(n), F.fp(s.obj_zero, s.obj_zero)), m)
    m = t.compose(t.madd(t.id_m(n), F.fm(s.lam(s.obj_zero))), m)
    m = t.compose(t.iota(z), m)                             # -> 0
    return m[0]


def induced_pi1_map(F):
    """f_#: pi1(source) -> pi1(target), beta -> f0 . f(beta) . f0^{-1}.

    pi1 groups are abelian, so the conjugation collapses to the
    morphism map at the zero object; the result is verified to be a
    homomorphism and returned as a GroupHomomorphism.
    """
    s, t = F.source, F.target
    images = {b: F.mor_map[(s.obj_zero, b)] for b in s.pi1.elements()}
    for b0 in s.pi1.elements():
        for b1 in s.pi1.elements():
            if images[s.pi1.add(b0, b1)] != t.pi1.add(images[b0], images[b1]):
                raise ValueError("induced pi1 map is not a homomorphism")
    gen_images = [images[g] for g in s.pi1.generators()]
    return GroupHomomorphism.from_images(s.pi1, t.pi1, gen_images)


def check_monoidal_functor(F, symmetry=False):
    """Coherence of (f, f_+, f0) with f0 derived; witness strings."""
    s, t = F.source, F.target
    bad = []
    f0v = derived_zero_iso(F) if F.f0 is None else F.f0
    z = F.fo(s.obj_zero)
    f0m = (f0v, z)

    # functoriality of the morphism map
    for x in s.objects():
        if F.mor_map[(x, s.pi1.zero())] != t.pi1.zero():
            bad.append(f"f does not preserve identity at {x}")
        for a0 in s.pi1.elements():
            for a1 in s.pi1.elements():
                lhs = F.mor_map[(x, s.pi1.add(a0, a1))]
                rhs = t.pi1.add(F.mor_map[(x, a0)], F.mor_map[(x, a1)])
                if lhs != rhs:
                    bad.append(f"f not functorial on morphisms at {x}")
                    break
            else:
                continue
            break

    # naturality of f_+
    for x, y in product(s.objects(), repeat=2):
        for al, be in product(s.pi1.elements(), repeat=2):
            lhs = t.compose(F.fp(x, y), t.madd(F.fm((al, x)), F.fm((be, y))))
            rhs = t.compose(F.fm(s.madd((al, x), (be, y))), F.fp(x, y))
            if lhs != rhs:
                bad.append(f"f_+ not natural at {(x, y)}")
                break

    # associativity compatibility:
    # f(a(x,y,z)) . f_+(x+y,z) . (f_+(x,y) + f(z))
    #   = f_+(x,y+z) . (f(x) + f_+(y,z)) . a(fx,fy,fz)
    for x, y, z in product(s.objects(), repeat=3):
        lhs = t.compose(F.fm(s.a(x, y, z)),
                        t.compose(F.fp(s.oadd(x, y), z),
                                  t.madd(F.fp(x, y), t.id_m(F.fo(z)))))
        rhs = t.compose(F.fp(x, s.oadd(y, z)),
                        t.compose(t.madd(t.id_m(F.fo(x)), F.fp(y, z)),
                                  t.a(F.fo(x), F.fo(y), F.fo(z))))
        if lhs != rhs:
            bad.append(f"f_+ associativity compatibility fails at {(x, y, z)}")

    # unit compatibility: f(lambda(x)) . f_+(0,x) = lambda(fx) . (f0 + fx)
    for x in s.objects():
        lhs = t.compose(F.fm(s.lam(x)), F.fp(s.obj_zero, x))
        rhs = t.compose(t.lam(F.fo(x)), t.madd(f0m, t.id_m(F.fo(x))))
        if lhs != rhs:
            bad.append(f"f_+ left unit compatibility fails at {x}")
        lhs = t.compose(F.fm(s.rho(x)), F.fp(x, s.obj_zero))
        rhs = t.compose(t.rho(F.fo(x)), t.madd(t.id_m(F.fo(x)), f0m))
        if lhs != rhs:
            bad.append(f"f_+ right unit compatibility fails at {x}")

    if symmetry:
        for x, y in product(s.objects(), repeat=2):
            lhs = t.compose(F.fm(s.c(x, y)), F.fp(x, y))
            rhs = t.compose(F.fp(y, x), t.c(F.fo(x), F.fo(y)))
            if lhs != rhs:
                bad.append(f"f_+ symmetry compatibility fails at {(x, y)}")
    return bad


def pi0_pi1(G):
    """(object group, pi1) as FiniteAbelianGroups.

    The object group is decomposed into invariant factors by repeatedly
    splitting off a cyclic subgroup of maximal order.
    """
    return (_decompose_table_group(G.obj_add, G.obj_zero), G.pi1)


def _decompose_table_group(add, zero):
    from math import lcm
    elements = list(range(len(add)))

    def order(x, add, zero):
        k, y = 1, x
        while y != zero:
            y = add[y][x]
            k += 1
        return k

    factors = []
    # work with cosets: represent the current quotient by merging classes
    cls = {x: x for x in elements}

    def q_add(x, y):
        return cls[add[x][y]]

    while True:
        reps = sorted(set(cls.values()))
        if len(reps) == 1:
            break
        # exponent element
        best, best_ord = None, 1
        for x in reps:
            k, y = 1, x
            while y != cls[zero]:
                y = q_add(y, x)
                k += 1
            if k > best_ord:
                best, best_ord = x, k
        factors.append(best_ord)
        # quotient by <best>: merge each class with its <best>-orbit
        sub = {cls[zero]}
        y = best
        while y != cls[zero]:
            sub.add(y)
            y = q_add(y, best)
        new_cls = {}
        for x in elements:
            orbit = sorted(q_add(cls[x], sgen) for sgen in sub)
            new_cls[x] = orbit[0]
        cls = new_cls
    factors.reverse()  # ascending divisibility d1 | d2 | ...
    return FiniteAbelianGroup(tuple(factors) if factors else (1,))
