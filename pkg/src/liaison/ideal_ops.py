"""Ideal calculus: intersection, quotient (colon), saturation, radical
membership and equality, and exact ideal equality.

Intersections eliminate one auxiliary variable appended after the ring's own
variables, under a lex-over-grevlex block order; radical membership uses the
inverted-element trick with the same auxiliary variable.
"""

from .errors import RingMismatchError
from .groebner import Ideal, exp_divides, exp_sub, reduced_groebner_basis
from .rings import PolyRing

_AUX = "_t"  # not a legal identifier in the grammar, so it can never collide


def _check_same_ring(I, J):
    if I.ring != J.ring:
        raise RingMismatchError("ideals from different rings")


def ideal_equal(I, J):
    """Exact equality, decided by comparing reduced Groebner bases."""
    _check_same_ring(I, J)
    return I.groebner() == J.groebner()


def ideal_contains(I, J):
    """Is J a subset of I? (every generator of J reduces to zero mod I)."""
    _check_same_ring(I, J)
    return all(I.contains(g) for g in J.gens)


def _extended_ring(ring):
    return PolyRing(ring.field, ring.vars + (_AUX,), "elim_last")


def _lift(p, ext, t_exp=0):
    terms = [(e + (t_exp,), c) for e, c in p.terms]
    return ext.poly(terms)


def _project(p, base):
    terms = [(e[:-1], c) for e, c in p.terms]
    return base.poly(terms)


def intersect_ideals(I, J):
    """Generators of the intersection, via elimination of the auxiliary
    variable t from t*I + (1-t)*J."""
    _check_same_ring(I, J)
    ring = I.ring
    ext = _extended_ring(ring)
    t = ext.gen(ext.nvars - 1)
    one = ext.one
    gens = []
    for g in I.gens:
        if not g.is_zero():
            gens.append(_lift(g, ext) * t)
    for h in J.gens:
        if not h.is_zero():
            gens.append(_lift(h, ext) * (one - t))
    basis = reduced_groebner_basis(gens, ext)
    kept = []
    for g in basis:
        # under the elimination order, a leading monomial free of t means the
        # whole polynomial is
        if g.terms[0][0][-1] == 0:
            kept.append(_project(g, ring))
    return Ideal(ring, tuple(kept))


def exact_divide(f, g):
    """The quotient f/g when g divides f exactly; raises otherwise."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    ring = f.ring
    field = ring.field
    lg, cg = g.terms[0]
    work = dict(f.terms)
    quot = {}
    key = ring.key
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        if not exp_divides(lg, m):
            raise ValueError("polynomial division is not exact")
        q = field.div(c, cg)
        shift = exp_sub(m, lg)
        quot[shift] = q
        for e2, c2 in g.terms[1:]:
            e = tuple(x + y for x, y in zip(e2, shift))
            cur = field.sub(work.get(e, field.zero), field.mul(q, c2))
            if cur == field.zero:
                work.pop(e, None)
            else:
                work[e] = cur
    return ring.poly(quot.items())


def _quotient_by_poly(I, f):
    """I : (f) = (I intersect (f)) / f."""
    ring = I.ring
    inter = intersect_ideals(I, Ideal(ring, (f,)))
    return Ideal(ring, tuple(exact_divide(g, f) for g in inter.gens))


def ideal_quotient(I, J):
    """I : J = {f : f*J in I}, as the intersection of the I : (g) over the
    generators of J.  Quotient by the zero ideal is rejected."""
    _check_same_ring(I, J)
    gens = [g for g in J.gens if not g.is_zero()]
    if not gens:
        raise ValueError("quotient by the zero ideal")
    result = None
    for g in gens:
        q = _quotient_by_poly(I, g)
        result = q if result is None else intersect_ideals(result, q)
    return result


def saturate(I, J):
    """I : J^infinity, by iterating the quotient to its fixed point."""
    _check_same_ring(I, J)
    current = I
    while True:
        nxt = ideal_quotient(current, J)
        if ideal_equal(nxt, current):
            return current
        current = nxt


def radical_membership(f, I):
    """f in sqrt(I), via 1 in I*R[t] + (1 - t*f)."""
    if f.ring != I.ring:
        raise RingMismatchError("radical membership across rings")
    if f.is_zero():
        return True
    ring = I.ring
    ext = _extended_ring(ring)
    t = ext.gen(ext.nvars - 1)
    gens = [_lift(g, ext) for g in I.gens if not g.is_zero()]
    gens.append(ext.one - t * _lift(f, ext))
    basis = reduced_groebner_basis(gens, ext)
    return len(basis) == 1 and basis[0].is_constant()


def radicals_equal(I, J):
    """sqrt(I) == sqrt(J), via radical membership of generators both ways."""
    _check_same_ring(I, J)
    return all(radical_membership(g, J) for g in I.gens) and all(
        radical_membership(h, I) for h in J.gens
    )
