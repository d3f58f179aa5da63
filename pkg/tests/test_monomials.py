import pytest

from conftest import random_monomial_ideal, seeded
from liaison.errors import ResourceLimitError
from liaison.fields import GF, QQ
from liaison.groebner import Ideal
from liaison.ideal_ops import ideal_equal, intersect_ideals
from liaison.monomials import (
    associated_primes_monomial,
    cd_monomial,
    ext_nonvanishing_degrees,
    hochster_pd,
    intersect_primes,
    krull_dim_monomial,
    monomial_radical,
    primary_decomposition_monomial,
    stanley_reisner,
)
from liaison.resolutions import grade_via_ext, pd_via_resolution
from liaison.rings import PolyRing


@pytest.fixture(scope="module")
def flagship(r4):
    x1, x2, x3, x4 = r4.gens()
    return Ideal(r4, (x1 * x3, x1 * x4, x2 * x3, x2 * x4))


def test_monomial_radical_examples(r2):
    x, y = r2.gens()
    assert ideal_equal(monomial_radical(Ideal(r2, (x**2, x * y))), Ideal(r2, (x,)))
    assert ideal_equal(monomial_radical(Ideal(r2, (x * y,))), Ideal(r2, (x * y,)))
    assert ideal_equal(monomial_radical(Ideal(r2, (x**3,))), Ideal(r2, (x,)))
    with pytest.raises(ValueError):
        monomial_radical(Ideal(r2, (x + y**2,)))


def test_primary_decomposition_examples(r2, r4):
    x, y = r2.gens()
    comps = primary_decomposition_monomial(Ideal(r2, (x**2, x * y)))
    expected = [Ideal(r2, (x,)), Ideal(r2, (x**2, y))]
    assert len(comps) == 2
    for e in expected:
        assert any(ideal_equal(c, e) for c in comps)

    comps = primary_decomposition_monomial(Ideal(r2, (x * y,)))
    assert len(comps) == 2

    x1, x2, x3, x4 = r4.gens()
    comps = primary_decomposition_monomial(Ideal(r4, (x1 * x3, x2 * x4)))
    expected_primes = [
        Ideal(r4, (x1, x2)),
        Ideal(r4, (x1, x4)),
        Ideal(r4, (x2, x3)),
        Ideal(r4, (x3, x4)),
    ]
    assert len(comps) == 4
    for e in expected_primes:
        assert any(ideal_equal(c, e) for c in comps)


def test_decomposition_soundness_50_seeded():
    ring = PolyRing(QQ, [f"x{i}" for i in range(1, 7)])
    rng = seeded(61)
    for _ in range(50):
        I = random_monomial_ideal(rng, ring, max_gens=4, max_degree=3)
        if I.is_unit():
            continue
        comps = primary_decomposition_monomial(I)
        back = comps[0]
        for comp in comps[1:]:
            back = intersect_ideals(back, comp)
        assert ideal_equal(back, I)


def test_associated_primes_examples(r2, r4):
    x, y = r2.gens()
    ass = associated_primes_monomial(Ideal(r2, (x**2, x * y)))
    assert ass.all_primes == frozenset({frozenset({0}), frozenset({0, 1})})
    assert ass.minimal == frozenset({frozenset({0})})
    assert not ass.is_unmixed()

    ass = associated_primes_monomial(Ideal(r2, (x * y,)))
    assert ass.is_unmixed()
    assert len(ass.all_primes) == 2

    x1, x2, x3, x4 = r4.gens()
    ass = associated_primes_monomial(Ideal(r4, (x1 * x3, x2 * x4)))
    assert ass.is_unmixed()
    assert len(ass.all_primes) == 4

    zero = associated_primes_monomial(Ideal(r2, ()))
    assert zero.all_primes == frozenset({frozenset()})


def test_stanley_reisner_examples(r2, r4, flagship):
    x, y = r2.gens()
    sr = stanley_reisner(flagship)
    assert set(sr.facets) == {frozenset({0, 1}), frozenset({2, 3})}

    sr = stanley_reisner(Ideal(r2, (x, y)))
    assert sr.facets == (frozenset(),)

    sr = stanley_reisner(Ideal(r2, (x * y,)))
    assert set(sr.facets) == {frozenset({0}), frozenset({1})}

    with pytest.raises(ValueError):
        stanley_reisner(Ideal(r2, (x**2,)))


def test_hochster_examples(r2, flagship):
    x, y = r2.gens()
    assert hochster_pd(flagship) == 3
    ring = PolyRing(QQ, ["x", "y", "z", "w"])
    xx, yy, zz, ww = ring.gens()
    assert hochster_pd(Ideal(ring, (xx * yy, zz * ww))) == 2
    assert hochster_pd(Ideal(r2, (x,))) == 1


def test_hochster_guard():
    ring = PolyRing(QQ, [f"x{i}" for i in range(13)])
    gens = (ring.gen(0),)
    with pytest.raises(ResourceLimitError):
        hochster_pd(Ideal(ring, gens))


def test_cd_examples(r2, flagship):
    x, y = r2.gens()
    assert cd_monomial(Ideal(r2, (x,))) == 1
    assert cd_monomial(flagship) == 3
    assert cd_monomial(Ideal(r2, (x**2, x * y))) == 1


def test_ext_nonvanishing_examples(r2, flagship):
    x, y = r2.gens()
    assert ext_nonvanishing_degrees(flagship) == {2, 3}
    ring = PolyRing(QQ, ["x", "y", "z", "w"])
    xx, yy, zz, ww = ring.gens()
    assert ext_nonvanishing_degrees(Ideal(ring, (xx * yy, zz * ww))) == {2}
    assert ext_nonvanishing_degrees(Ideal(r2, (x,))) == {1}


def test_krull_dim_examples(r2, flagship):
    x, y = r2.gens()
    assert krull_dim_monomial(flagship) == 2
    assert krull_dim_monomial(Ideal(r2, ())) == 2
    assert krull_dim_monomial(Ideal(r2, (x, y))) == 0
    with pytest.raises(ValueError):
        krull_dim_monomial(Ideal(r2, (r2.one,)))


def test_cd_is_radical_invariant():
    ring = PolyRing(QQ, ["x", "y", "z"])
    rng = seeded(67)
    for _ in range(10):
        I = random_monomial_ideal(rng, ring, max_gens=3, max_degree=3)
        if I.is_unit() or I.is_zero():
            continue
        assert cd_monomial(I) == cd_monomial(monomial_radical(I))


def test_ext_degrees_bracket_grade_and_cd():
    ring = PolyRing(QQ, ["x", "y", "z", "w"])
    rng = seeded(71)
    done = 0
    while done < 10:
        I = random_monomial_ideal(rng, ring, max_gens=3, squarefree=True)
        if I.is_unit() or I.is_zero():
            continue
        degrees = ext_nonvanishing_degrees(I)
        assert min(degrees) == grade_via_ext(I, None)
        assert max(degrees) == cd_monomial(I)
        done += 1


def test_grade_cd_generator_bounds():
    ring = PolyRing(QQ, ["x", "y", "z", "w"])
    rng = seeded(73)
    done = 0
    while done < 12:
        I = random_monomial_ideal(rng, ring, max_gens=4, max_degree=2)
        if I.is_unit() or I.is_zero():
            continue
        grade = grade_via_ext(I, None)
        cd = cd_monomial(I)
        assert grade <= cd <= min(len(I.groebner()), ring.dim)
        done += 1


def test_hochster_characteristic_dependence_runs_mod_p():
    # same combinatorics, prime-field ranks: the oracle must stay consistent
    ring = PolyRing(GF(5), ["x", "y", "z"])
    x, y, z = ring.gens()
    I = Ideal(ring, (x * y, y * z))
    assert hochster_pd(I) == pd_via_resolution(I)


def test_intersect_primes_empty_is_unit(r2):
    assert intersect_primes(r2, []).is_unit()
