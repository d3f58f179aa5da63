"""Multivariate polynomial rings over exact fields with global monomial orders.

Polynomials are immutable sparse term lists, strictly decreasing in the ring
order, with no zero coefficients; the zero polynomial is the empty list.  All
operations are pure, so values can be shared freely between threads.
"""

from . import limits
from .errors import RingMismatchError

ORDERS = ("lex", "grevlex", "elim_last")


def _key_lex(exps):
    return exps


def _key_grevlex(exps):
    return (sum(exps), tuple(-e for e in reversed(exps)))


def _key_elim_last(exps):
    # Block order: lex on the last variable over grevlex on the rest.  Used
    # internally for eliminating one appended auxiliary variable.
    front = exps[:-1]
    return (exps[-1], sum(front), tuple(-e for e in reversed(front)))


_KEYS = {"lex": _key_lex, "grevlex": _key_grevlex, "elim_last": _key_elim_last}


class PolyRing:
    """k[x1..xn] under a fixed global monomial order (lex or grevlex).

    Krull dimension equals the number of variables.  Rings compare equal iff
    field, variable list, and order coincide.
    """

    __slots__ = ("field", "vars", "order", "key", "_index")

    def __init__(self, field, variables, order="grevlex"):
        variables = tuple(variables)
        if not variables:
            raise ValueError("a polynomial ring needs at least one variable")
        if len(set(variables)) != len(variables):
            raise ValueError("duplicate variable name")
        for v in variables:
            if not v or any(ch.isspace() for ch in v):
                raise ValueError(f"bad variable name {v!r}")
        if order not in ORDERS:
            raise ValueError(f"unknown monomial order {order!r}")
        self.field = field
        self.vars = variables
        self.order = order
        self.key = _KEYS[order]
        self._index = {v: i for i, v in enumerate(variables)}

    @property
    def nvars(self):
        return len(self.vars)

    @property
    def dim(self):
        return len(self.vars)

    def __eq__(self, other):
        if self is other:
            return True
        return (
            isinstance(other, PolyRing)
            and self.field == other.field
            and self.vars == other.vars
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.field, self.vars, self.order))

    def __repr__(self):
        return f"{self.field}[{', '.join(self.vars)}] {self.order}"

    # -- constructors ------------------------------------------------------

    def poly(self, items):
        """Canonical polynomial from (exponent tuple, coefficient) pairs.

        Collects duplicate monomials, drops zeros, sorts descending, and
        enforces the global resource caps.
        """
        acc = {}
        field = self.field
        zero = field.zero
        n = self.nvars
        for exps, coeff in items:
            exps = tuple(exps)
            if len(exps) != n:
                raise ValueError("exponent tuple length does not match ring")
            prev = acc.get(exps, zero)
            cur = field.add(prev, coeff)
            if cur == zero:
                acc.pop(exps, None)
            else:
                acc[exps] = cur
        if acc:
            limits.check_terms(len(acc), max(sum(e) for e in acc))
        terms = tuple(sorted(acc.items(), key=lambda t: self.key(t[0]), reverse=True))
        return Polynomial(self, terms)

    @property
    def zero(self):
        return Polynomial(self, ())

    @property
    def one(self):
        return self.poly([((0,) * self.nvars, self.field.one)])

    def monomial(self, exps, coeff=None):
        if coeff is None:
            coeff = self.field.one
        return self.poly([(tuple(exps), coeff)])

    def gen(self, i):
        exps = [0] * self.nvars
        exps[i] = 1
        return self.monomial(exps)

    def var(self, name):
        if name not in self._index:
            raise ValueError(f"unknown variable {name!r}")
        return self.gen(self._index[name])

    def gens(self):
        return tuple(self.gen(i) for i in range(self.nvars))

    def constant(self, value):
        return self.poly([((0,) * self.nvars, self.field.of(value))])

    def parse(self, src):
        from .parse import parse_polynomial

        return parse_polynomial(src, self)


class Polynomial:
    """Immutable sparse polynomial; terms strictly decreasing in the ring order."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        # Trusted constructor: terms must already be canonical.  Use
        # PolyRing.poly for arbitrary input.
        self.ring = ring
        self.terms = terms

    # -- predicates and accessors ------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and sum(self.terms[0][0]) == 0)

    def is_monomial(self):
        return len(self.terms) == 1

    def is_homogeneous(self):
        if not self.terms:
            return True
        degs = {sum(e) for e, _ in self.terms}
        return len(degs) == 1

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e, _ in self.terms)

    def leading_term(self):
        """Greatest (exponent tuple, coefficient) under the ring order."""
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        return self.terms[0]

    def leading_monomial(self):
        return self.leading_term()[0]

    def leading_coeff(self):
        return self.leading_term()[1]

    def constant_coeff(self):
        zero_exps = (0,) * self.ring.nvars
        for e, c in self.terms:
            if e == zero_exps:
                return c
        return self.ring.field.zero

    # -- arithmetic ---------------------------------------------------------

    def _same_ring(self, other):
        if self.ring != other.ring:
            raise RingMismatchError("operands belong to different rings")

    def __add__(self, other):
        self._same_ring(other)
        return self.ring.poly(list(self.terms) + list(other.terms))

    def __sub__(self, other):
        self._same_ring(other)
        field = self.ring.field
        neg = [(e, field.neg(c)) for e, c in other.terms]
        return self.ring.poly(list(self.terms) + neg)

    def __neg__(self):
        field = self.ring.field
        return Polynomial(self.ring, tuple((e, field.neg(c)) for e, c in self.terms))

    def __mul__(self, other):
        self._same_ring(other)
        field = self.ring.field
        zero = field.zero
        acc = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                cur = field.add(acc.get(e, zero), field.mul(c1, c2))
                if cur == zero:
                    acc.pop(e, None)
                else:
                    acc[e] = cur
        return self.ring.poly(acc.items())

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    def term_mul(self, exps, coeff):
        """Multiply by the single term coeff * x^exps (fast path)."""
        field = self.ring.field
        terms = tuple(
            (tuple(a + b for a, b in zip(e, exps)), field.mul(c, coeff))
            for e, c in self.terms
        )
        if terms:
            limits.check_terms(len(terms), max(sum(e) for e, _ in terms))
        return Polynomial(self.ring, terms)

    def scale(self, coeff):
        field = self.ring.field
        if coeff == field.zero:
            return self.ring.zero
        return Polynomial(
            self.ring, tuple((e, field.mul(c, coeff)) for e, c in self.terms)
        )

    def monic(self):
        if not self.terms:
            return self
        lc = self.terms[0][1]
        if lc == self.ring.field.one:
            return self
        inv = self.ring.field.inv(lc)
        return self.scale(inv)

    # -- equality and printing ----------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, self.terms))

    def __repr__(self):
        return poly_str(self)


def poly_str(p):
    """Canonical text form; re-parsing it reproduces the polynomial exactly."""
    if not p.terms:
        return "0"
    field = p.ring.field
    names = p.ring.vars
    chunks = []
    for i, (exps, coeff) in enumerate(p.terms):
        if field.characteristic == 0 and coeff < 0:
            sign = "-"
            mag = -coeff
        else:
            sign = "+"
            mag = coeff
        factors = []
        for name, e in zip(names, exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        if not factors:
            body = field.coeff_str(mag)
        elif mag == field.one:
            body = "*".join(factors)
        else:
            body = field.coeff_str(mag) + "*" + "*".join(factors)
        if i == 0:
            chunks.append(body if sign == "+" else "-" + body)
        else:
            chunks.append((" + " if sign == "+" else " - ") + body)
    return "".join(chunks)
