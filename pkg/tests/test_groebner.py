import pytest

from conftest import random_polynomial, seeded
from liaison.errors import RingMismatchError
from liaison.fields import QQ
from liaison.groebner import (
    FreeModuleElement,
    Ideal,
    ideal_membership,
    module_groebner_basis,
    module_normal_form,
    reduce_normal_form,
    reduced_groebner_basis,
    syzygy_module,
    unit_vector,
)
from liaison.rings import PolyRing


def test_normal_form_examples(r2):
    x, y = r2.gens()
    assert reduce_normal_form(x**2 * y, [x**2 - y]) == y**2
    assert reduce_normal_form(x, [x]).is_zero()
    assert reduce_normal_form(y, [x]) == y


def test_normal_form_idempotent(r3):
    rng = seeded(3)
    for _ in range(15):
        f = random_polynomial(rng, r3)
        basis = [random_polynomial(rng, r3) for _ in range(2)]
        once = reduce_normal_form(f, basis)
        assert reduce_normal_form(once, basis) == once


def test_reduced_basis_examples(r2):
    x, y = r2.gens()
    assert reduced_groebner_basis([x - y, x + y]) == (x, y)
    assert reduced_groebner_basis([x]) == (x,)
    lex = PolyRing(QQ, ["x", "y"], "lex")
    xl, yl = lex.gens()
    gb = reduced_groebner_basis([xl**2 + yl**2 - lex.one, xl - yl])
    assert gb == (xl - yl, yl**2 - lex.constant(QQ.frac(1, 2)))


def test_zero_and_unit_conventions(r2):
    assert reduced_groebner_basis([r2.zero]) == ()
    assert reduced_groebner_basis([r2.one]) == (r2.one,)
    assert Ideal(r2, ()).is_zero()
    assert Ideal(r2, (r2.constant(3),)).is_unit()


def test_membership_examples(r2):
    x, y = r2.gens()
    assert ideal_membership(x * y, Ideal(r2, (x,)))
    assert not ideal_membership(x, Ideal(r2, (x**2,)))
    assert ideal_membership(x**2 - y**2, Ideal(r2, (x - y,)))


def test_generators_always_members(r3):
    rng = seeded(5)
    for _ in range(10):
        gens = [random_polynomial(rng, r3) for _ in range(3)]
        I = Ideal(r3, tuple(gens))
        for g in gens:
            assert ideal_membership(g, I)


def test_basis_invariant_under_permutation(r3):
    rng = seeded(9)
    for _ in range(10):
        gens = [random_polynomial(rng, r3) for _ in range(3)]
        reference = reduced_groebner_basis(gens, r3)
        flipped = list(reversed(gens))
        assert reduced_groebner_basis(flipped, r3) == reference


def test_groebner_cache_write_once(r2):
    x, y = r2.gens()
    I = Ideal(r2, (x - y, x + y))
    first = I.groebner()
    assert I.groebner() is first


def test_module_membership_examples(r2):
    x, y = r2.gens()
    e_x0 = FreeModuleElement(r2, (x, r2.zero))
    e_0x = FreeModuleElement(r2, (r2.zero, x))
    basis = module_groebner_basis([e_x0, e_0x])
    target = FreeModuleElement(r2, (x * y, x**2))
    assert module_normal_form(target, basis).is_zero()

    span = module_groebner_basis([FreeModuleElement(r2, (x, y))])
    swapped = FreeModuleElement(r2, (y, x))
    assert not module_normal_form(swapped, span).is_zero()

    assert module_groebner_basis([]) == []


def test_module_rank_mismatch(r2):
    x, y = r2.gens()
    with pytest.raises((ValueError, RingMismatchError)):
        module_groebner_basis(
            [
                FreeModuleElement(r2, (x,)),
                FreeModuleElement(r2, (x, y)),
            ]
        )


def test_syzygy_examples(r2):
    x, y = r2.gens()
    assert syzygy_module([x, y]) == [FreeModuleElement(r2, (y, -x))]
    assert syzygy_module([x**2, x * y]) == [FreeModuleElement(r2, (y, -x))]
    assert syzygy_module([x + y]) == []


def test_syzygies_are_exact_relations(r3):
    rng = seeded(21)
    for _ in range(8):
        gens = [random_polynomial(rng, r3, max_degree=2, max_terms=3) for _ in range(3)]
        for syz in syzygy_module(gens):
            total = r3.zero
            for coeff, g in zip(syz.coords, gens):
                total = total + coeff * g
            assert total.is_zero()


def test_syzygy_of_zero_generator(r2):
    x, _ = r2.gens()
    syz = syzygy_module([r2.zero, x])
    assert unit_vector(r2, 2, 0) in syz
