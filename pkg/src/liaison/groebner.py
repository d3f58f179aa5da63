"""Buchberger engine: normal forms, reduced Groebner bases, module bases,
and syzygies via cofactor-tracked S-pair reductions.

Pair selection is by minimal lcm total degree with ties broken by pair index,
with the coprime-lcm (product) and chain criteria, so bases come out
deterministic for a fixed ring and order.  The reduced basis of an ideal is
cached write-once on the Ideal value; concurrent first computations are
idempotent, so the race is benign.
"""

from .errors import RingMismatchError
from .rings import Polynomial

# -- exponent-tuple helpers --------------------------------------------------


def exp_divides(a, b):
    """Does x^a divide x^b?"""
    return all(x <= y for x, y in zip(a, b))


def exp_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def exp_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def exp_coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _require_one_ring(polys):
    ring = None
    for p in polys:
        if ring is None:
            ring = p.ring
        elif p.ring != ring:
            raise RingMismatchError("polynomials from different rings")
    return ring


# -- normal form --------------------------------------------------------------


def reduce_normal_form(f, basis):
    """Full remainder of multivariate division of f by basis.

    No term of the result is divisible by any basis leading monomial, and
    f - result lies in the ideal generated by basis.
    """
    basis = [b for b in basis if not b.is_zero()]
    if f.is_zero() or not basis:
        return f
    _require_one_ring([f] + basis)
    ring = f.ring
    field = ring.field
    zero = field.zero
    key = ring.key
    leads = [(b.terms[0][0], b.terms[0][1], b) for b in basis]

    work = dict(f.terms)
    rem = {}
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        for lm, lc, b in leads:
            if exp_divides(lm, m):
                q = field.div(c, lc)
                shift = exp_sub(m, lm)
                for e2, c2 in b.terms[1:]:
                    e = tuple(x + y for x, y in zip(e2, shift))
                    cur = field.sub(work.get(e, zero), field.mul(q, c2))
                    if cur == zero:
                        work.pop(e, None)
                    else:
                        work[e] = cur
                break
        else:
            rem[m] = c
    return ring.poly(rem.items())


def _s_polynomial(f, g):
    lf, cf = f.terms[0]
    lg, cg = g.terms[0]
    lcm = exp_lcm(lf, lg)
    field = f.ring.field
    a = f.term_mul(exp_sub(lcm, lf), field.inv(cf))
    b = g.term_mul(exp_sub(lcm, lg), field.inv(cg))
    return a - b


# -- Buchberger ---------------------------------------------------------------


def buchberger(gens):
    """A (not yet reduced) Groebner basis containing the nonzero input gens."""
    G = [g.monic() for g in gens if not g.is_zero()]
    if not G:
        return []
    _require_one_ring(G)

    pending = set()
    for i in range(len(G)):
        for j in range(i):
            pending.add((j, i))

    def pair_weight(pair):
        i, j = pair
        lcm = exp_lcm(G[i].terms[0][0], G[j].terms[0][0])
        return (sum(lcm), i, j)

    while pending:
        i, j = min(pending, key=pair_weight)
        pending.remove((i, j))
        lmi = G[i].terms[0][0]
        lmj = G[j].terms[0][0]
        if exp_coprime(lmi, lmj):
            continue  # product criterion
        lcm = exp_lcm(lmi, lmj)
        skip = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            if not exp_divides(G[k].terms[0][0], lcm):
                continue
            pik = (min(i, k), max(i, k))
            pjk = (min(j, k), max(j, k))
            if pik not in pending and pjk not in pending:
                skip = True  # chain criterion: both companion pairs treated
                break
        if skip:
            continue
        r = reduce_normal_form(_s_polynomial(G[i], G[j]), G)
        if not r.is_zero():
            G.append(r.monic())
            new = len(G) - 1
            for k in range(new):
                pending.add((k, new))
    return G


def reduced_groebner_basis(gens, ring=None):
    """The unique reduced, monic, auto-reduced basis, sorted by decreasing
    leading monomial.  Empty for the zero ideal; (1,) for the unit ideal."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return ()
    if ring is None:
        ring = gens[0].ring
    G = buchberger(gens)
    if any(g.is_constant() for g in G):
        return (ring.one,)

    # minimal: drop any element whose leading monomial another one divides
    keep = []
    for i, g in enumerate(G):
        lm = g.terms[0][0]
        redundant = False
        for j, h in enumerate(G):
            if i == j:
                continue
            lmh = h.terms[0][0]
            if exp_divides(lmh, lm) and (lmh != lm or j < i):
                redundant = True
                break
        if not redundant:
            keep.append(g)

    # auto-reduce tails to a fixed point
    changed = True
    while changed:
        changed = False
        for i in range(len(keep)):
            others = keep[:i] + keep[i + 1 :]
            r = reduce_normal_form(keep[i], others).monic()
            if r != keep[i]:
                keep[i] = r
                changed = True

    keep.sort(key=lambda g: ring.key(g.terms[0][0]), reverse=True)
    return tuple(keep)


class Ideal:
    """Finitely generated ideal with a write-once reduced-basis cache."""

    __slots__ = ("ring", "gens", "_gb", "_res")

    def __init__(self, ring, gens):
        gens = tuple(gens)
        for g in gens:
            if g.ring != ring:
                raise RingMismatchError("generator from a different ring")
        self.ring = ring
        self.gens = gens
        self._gb = None
        self._res = None

    def groebner(self):
        if self._gb is None:
            self._gb = reduced_groebner_basis(self.gens, self.ring)
        return self._gb

    def contains(self, f):
        if f.ring != self.ring:
            raise RingMismatchError("membership test across rings")
        return reduce_normal_form(f, list(self.groebner())).is_zero()

    def is_zero(self):
        return not self.groebner()

    def is_unit(self):
        gb = self.groebner()
        return len(gb) == 1 and gb[0].is_constant()

    def is_proper(self):
        return not self.is_unit()

    def is_monomial(self):
        return all(g.is_monomial() for g in self.groebner())

    def __repr__(self):
        if not self.gens:
            return "Ideal(0)"
        return "Ideal(" + ", ".join(repr(g) for g in self.gens) + ")"


def ideal_membership(f, I):
    """f in I, decided by normal form against the cached reduced basis."""
    return I.contains(f)


def ideal_sum(I, J):
    if I.ring != J.ring:
        raise RingMismatchError("ideal sum across rings")
    return Ideal(I.ring, I.gens + J.gens)


def ideal_product(I, J):
    if I.ring != J.ring:
        raise RingMismatchError("ideal product across rings")
    return Ideal(I.ring, tuple(g * h for g in I.gens for h in J.gens))


# -- free modules --------------------------------------------------------------


class FreeModuleElement:
    """Element of R^r under position-over-term order, lower index first."""

    __slots__ = ("ring", "coords")

    def __init__(self, ring, coords):
        coords = tuple(coords)
        for c in coords:
            if c.ring != ring:
                raise RingMismatchError("coordinate from a different ring")
        self.ring = ring
        self.coords = coords

    @property
    def rank(self):
        return len(self.coords)

    def is_zero(self):
        return all(c.is_zero() for c in self.coords)

    def lead(self):
        """(position, exponent tuple, coefficient) of the greatest term."""
        for pos, c in enumerate(self.coords):
            if not c.is_zero():
                exps, coeff = c.terms[0]
                return pos, exps, coeff
        raise ValueError("the zero vector has no leading term")

    def __add__(self, other):
        self._check(other)
        return FreeModuleElement(
            self.ring, tuple(a + b for a, b in zip(self.coords, other.coords))
        )

    def __sub__(self, other):
        self._check(other)
        return FreeModuleElement(
            self.ring, tuple(a - b for a, b in zip(self.coords, other.coords))
        )

    def __neg__(self):
        return FreeModuleElement(self.ring, tuple(-a for a in self.coords))

    def term_mul(self, exps, coeff):
        return FreeModuleElement(
            self.ring, tuple(a.term_mul(exps, coeff) for a in self.coords)
        )

    def poly_mul(self, p):
        return FreeModuleElement(self.ring, tuple(a * p for a in self.coords))

    def scale(self, coeff):
        return FreeModuleElement(self.ring, tuple(a.scale(coeff) for a in self.coords))

    def monic(self):
        _, _, coeff = self.lead()
        if coeff == self.ring.field.one:
            return self
        return self.scale(self.ring.field.inv(coeff))

    def _check(self, other):
        if self.ring != other.ring or len(self.coords) != len(other.coords):
            raise RingMismatchError("free-module elements are incompatible")

    def __eq__(self, other):
        return (
            isinstance(other, FreeModuleElement)
            and self.ring == other.ring
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.ring, self.coords))

    def __repr__(self):
        return "(" + ", ".join(repr(c) for c in self.coords) + ")"


def unit_vector(ring, rank, pos, poly=None):
    coords = [ring.zero] * rank
    coords[pos] = ring.one if poly is None else poly
    return FreeModuleElement(ring, coords)


def _vec_sort_key(ring):
    def key(v):
        pos, exps, _ = v.lead()
        return (-pos, ring.key(exps))

    return key


def module_normal_form(v, basis, shadows=None, shadow=None):
    """Normal form of v against basis under position-over-term order.

    If shadows is given (one companion per basis element), every reduction
    step t*basis[k] is mirrored as shadow -= t*shadows[k]; the final shadow is
    returned alongside the remainder.  That mirroring is what turns zero
    reductions into syzygies.
    """
    basis = list(basis)
    work = v
    rem = [v.ring.zero] * v.rank
    field = v.ring.field
    while not work.is_zero():
        pos, m, c = work.lead()
        reduced = False
        for k, b in enumerate(basis):
            bpos, bm, bc = b.lead()
            if bpos == pos and exp_divides(bm, m):
                q = field.div(c, bc)
                shift = exp_sub(m, bm)
                work = work - b.term_mul(shift, q)
                if shadows is not None:
                    shadow = shadow - shadows[k].term_mul(shift, q)
                reduced = True
                break
        if not reduced:
            rem[pos] = rem[pos] + v.ring.monomial(m, c)
            work = work - unit_vector(v.ring, v.rank, pos, v.ring.monomial(m, c))
    result = FreeModuleElement(v.ring, rem)
    if shadows is not None:
        return result, shadow
    return result


def _module_s_pair(f, g):
    pf, mf, cf = f.lead()
    pg, mg, cg = g.lead()
    assert pf == pg
    lcm = exp_lcm(mf, mg)
    field = f.ring.field
    return (
        (exp_sub(lcm, mf), field.inv(cf)),
        (exp_sub(lcm, mg), field.inv(cg)),
    )


def _module_buchberger(vecs, track=False):
    """Groebner basis of the submodule generated by vecs (all nonzero).

    With track=True, also returns cofactor vectors expressing each basis
    element over the inputs.  The product criterion is only valid in rank one,
    where S-pairs are genuine polynomial S-pairs.
    """
    ring = vecs[0].ring
    rank = vecs[0].rank
    G = []
    X = []
    for idx, v in enumerate(vecs):
        m = v.monic()
        G.append(m)
        if track:
            _, _, lc = v.lead()
            X.append(unit_vector(ring, len(vecs), idx, ring.constant(ring.field.inv(lc))))

    pending = set()
    for i in range(len(G)):
        for j in range(i):
            if G[i].lead()[0] == G[j].lead()[0]:
                pending.add((j, i))

    def weight(pair):
        i, j = pair
        lcm = exp_lcm(G[i].lead()[1], G[j].lead()[1])
        return (sum(lcm), i, j)

    while pending:
        i, j = min(pending, key=weight)
        pending.remove((i, j))
        if rank == 1 and exp_coprime(G[i].lead()[1], G[j].lead()[1]):
            continue
        (si, ci), (sj, cj) = _module_s_pair(G[i], G[j])
        s = G[i].term_mul(si, ci) - G[j].term_mul(sj, cj)
        if track:
            comp = X[i].term_mul(si, ci) - X[j].term_mul(sj, cj)
            r, comp = module_normal_form(s, G, X, comp)
        else:
            r = module_normal_form(s, G)
        if not r.is_zero():
            _, _, lc = r.lead()
            inv = ring.field.inv(lc)
            G.append(r.scale(inv))
            if track:
                X.append(comp.scale(inv))
            new = len(G) - 1
            for k in range(new):
                if G[k].lead()[0] == G[new].lead()[0]:
                    pending.add((k, new))
    if track:
        return G, X
    return G, None


def module_groebner_basis(gens):
    """Reduced Groebner basis of the submodule of R^r generated by gens."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    ring = gens[0].ring
    rank = gens[0].rank
    for g in gens:
        if g.rank != rank:
            raise ValueError("rank mismatch between module generators")
        if g.ring != ring:
            raise RingMismatchError("module generators from different rings")
    G, _ = _module_buchberger(gens)

    keep = []
    for i, g in enumerate(G):
        pos, lm, _ = g.lead()
        redundant = False
        for j, h in enumerate(G):
            if i == j:
                continue
            hpos, hlm, _ = h.lead()
            if hpos == pos and exp_divides(hlm, lm) and (hlm != lm or j < i):
                redundant = True
                break
        if not redundant:
            keep.append(g)
    changed = True
    while changed:
        changed = False
        for i in range(len(keep)):
            others = keep[:i] + keep[i + 1 :]
            r = module_normal_form(keep[i], others)
            r = r.monic()
            if r != keep[i]:
                keep[i] = r
                changed = True
    keep.sort(key=_vec_sort_key(ring), reverse=True)
    return keep


def module_contains(v, basis_gb):
    """Submodule membership against a precomputed module Groebner basis."""
    if not basis_gb:
        return v.is_zero()
    return module_normal_form(v, basis_gb).is_zero()


def _as_vectors(gens):
    vecs = []
    for g in gens:
        if isinstance(g, FreeModuleElement):
            vecs.append(g)
        elif isinstance(g, Polynomial):
            vecs.append(FreeModuleElement(g.ring, (g,)))
        else:
            raise TypeError("syzygy input must be polynomials or module elements")
    return vecs


def syzygy_module(gens):
    """Generators of the full syzygy module of gens.

    Runs Buchberger with cofactor tracking, then reduces the S-pair of every
    same-position pair of the finished basis to zero; the tracked cofactors of
    those zero reductions, mapped back through the basis cofactors, generate
    all relations.  Zero input generators contribute their unit syzygies.
    """
    vecs = _as_vectors(gens)
    if not vecs:
        return []
    ring = vecs[0].ring
    k = len(vecs)
    syzygies = []
    nonzero = []
    index_of = []
    for idx, v in enumerate(vecs):
        if v.is_zero():
            syzygies.append(unit_vector(ring, k, idx))
        else:
            nonzero.append(v)
            index_of.append(idx)
    if not nonzero:
        return syzygies

    G, Xlocal = _module_buchberger(nonzero, track=True)
    # re-embed cofactors over the original index set
    X = []
    for cof in Xlocal:
        coords = [ring.zero] * k
        for local, orig in enumerate(index_of):
            coords[orig] = cof.coords[local]
        X.append(FreeModuleElement(ring, coords))

    for j in range(len(G)):
        for i in range(j):
            if G[i].lead()[0] != G[j].lead()[0]:
                continue
            (si, ci), (sj, cj) = _module_s_pair(G[i], G[j])
            s = G[i].term_mul(si, ci) - G[j].term_mul(sj, cj)
            comp = X[i].term_mul(si, ci) - X[j].term_mul(sj, cj)
            r, comp = module_normal_form(s, G, X, comp)
            if not r.is_zero():
                raise AssertionError("S-pair of a completed basis did not vanish")
            if not comp.is_zero():
                syzygies.append(comp)
    return syzygies
