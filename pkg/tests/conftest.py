import random
from pathlib import Path

import pytest

from liaison.fields import QQ
from liaison.groebner import Ideal
from liaison.instancefile import parse_instance
from liaison.rings import PolyRing

CORPUS_DIR = Path(__file__).resolve().parent.parent / "corpus"
CORPUS_FILES = (
    "flagship.link",
    "principal_pair.link",
    "zero_link.link",
    "selflink.link",
    "fp_selflink.link",
)


@pytest.fixture(scope="session")
def r2():
    return PolyRing(QQ, ["x", "y"])


@pytest.fixture(scope="session")
def r3():
    return PolyRing(QQ, ["x", "y", "z"])


@pytest.fixture(scope="session")
def r4():
    return PolyRing(QQ, ["x1", "x2", "x3", "x4"])


@pytest.fixture(scope="session")
def corpus_files():
    return {name: (CORPUS_DIR / name).read_text() for name in CORPUS_FILES}


@pytest.fixture(scope="session")
def corpus_instances(corpus_files):
    """(file name, LinkageInstance) pairs from every shipped corpus file."""
    out = []
    for name, text in corpus_files.items():
        parsed = parse_instance(text)
        for inst in parsed.instances():
            out.append((name, inst))
    return out


def random_polynomial(rng, ring, max_degree=3, max_terms=4, zero_ok=False):
    """Small random polynomial with coefficients in [-3, 3]."""
    n_terms = rng.randrange(1, max_terms + 1)
    items = []
    for _ in range(n_terms):
        degree = rng.randrange(max_degree + 1)
        exps = [0] * ring.nvars
        for _ in range(degree):
            exps[rng.randrange(ring.nvars)] += 1
        coeff = rng.randrange(-3, 4)
        items.append((tuple(exps), ring.field.of(coeff)))
    p = ring.poly((e, c) for e, c in items if c != ring.field.zero)
    if p.is_zero() and not zero_ok:
        return ring.one
    return p


def random_monomial(rng, ring, max_degree=3, squarefree=False):
    if squarefree:
        while True:
            exps = tuple(rng.randrange(2) for _ in range(ring.nvars))
            if any(exps):
                return exps
    while True:
        exps = [0] * ring.nvars
        for _ in range(rng.randrange(1, max_degree + 1)):
            exps[rng.randrange(ring.nvars)] += 1
        if any(exps):
            return tuple(exps)


def random_monomial_ideal(rng, ring, max_gens=4, max_degree=3, squarefree=False):
    n = rng.randrange(1, max_gens + 1)
    gens = {random_monomial(rng, ring, max_degree, squarefree) for _ in range(n)}
    return Ideal(ring, tuple(ring.monomial(e) for e in sorted(gens)))


def seeded(seed):
    return random.Random(seed)
