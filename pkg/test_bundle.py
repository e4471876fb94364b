import pytest
from hypothesis import given, strategies as st

from bundle_auts.bundle import (
    BundleContext,
    BundleElement,
    Conjugation,
    conjugate,
    elem_eq,
    elem_inv,
    elem_mul,
    elem_pow,
    generator_element,
    identity,
    project_to_surface,
    surface_relator_count,
    torus_normal_form,
    z_exponent,
    z_power,
)
from bundle_auts.errors import ContextMismatchError, NotInCenterError, UnsupportedContextError
from bundle_auts.oracle import bfs_oracle_trivial
from bundle_auts.words import SurfaceContext, concat, free_reduce, invert, surface_relator, surface_equal

X23 = BundleContext(2, 3)
RELATOR = surface_relator(2)

letters = st.integers(min_value=1, max_value=4).flatmap(lambda n: st.sampled_from([n, -n]))
elements = st.builds(
    BundleElement,
    st.lists(letters, max_size=10).map(free_reduce),
    st.integers(min_value=-5, max_value=5),
)


def test_excluded_context():
    with pytest.raises(UnsupportedContextError):
        BundleContext(1, 0)
    with pytest.raises(UnsupportedContextError):
        BundleContext(0, 1)
    BundleContext(2, 0)


def test_relator_is_z_to_the_k_stepwise():
    product = identity()
    for code in RELATOR:
        product = elem_mul(X23, product, generator_element(code))
    assert elem_eq(X23, product, z_power(3))
    assert not elem_eq(X23, product, z_power(2))


@given(elements)
def test_product_with_inverse_is_identity(x):
    assert elem_eq(X23, elem_mul(X23, x, elem_inv(X23, x)), identity())


@given(elements, st.integers(min_value=-3, max_value=3))
def test_z_is_central(x, m):
    assert elem_eq(X23, elem_mul(X23, x, z_power(m)), elem_mul(X23, z_power(m), x))


def test_genus_one_commutation_rule():
    ctx = BundleContext(1, 2)
    assert elem_eq(ctx, BundleElement((2, 1), 0), BundleElement((1, 2), -2))
    assert elem_eq(ctx, BundleElement((1, 2, -1, -2), 0), z_power(2))
    assert torus_normal_form((1, 2, -1, -2), 0, 2) == (0, 0, 2)
    assert torus_normal_form((2, 1), 0, 2) == (1, 1, -2)


def test_equality_examples():
    ctx = BundleContext(2, 1)
    assert elem_eq(ctx, BundleElement(RELATOR, -1), identity())
    assert not elem_eq(ctx, BundleElement((1,), 0), BundleElement((1,), 1))


def test_z_exponent_examples():
    ctx = BundleContext(2, 5)
    x = (1, 4)
    assert z_exponent(ctx, identity()) == 0
    assert z_exponent(ctx, BundleElement(RELATOR, 0)) == 5
    assert z_exponent(ctx, BundleElement(concat(x, RELATOR, invert(x)), -5)) == 0
    with pytest.raises(NotInCenterError):
        z_exponent(ctx, BundleElement((1,), 0))


@given(elements, elements)
def test_z_exponent_is_additive_on_the_center(x, y):
    central_x = BundleElement(concat(x.word, RELATOR, invert(x.word)), x.zexp)
    central_y = BundleElement(concat(y.word, invert(RELATOR), invert(y.word)), y.zexp)
    total = z_exponent(X23, elem_mul(X23, central_x, central_y))
    assert total == z_exponent(X23, central_x) + z_exponent(X23, central_y)
    assert total == x.zexp + y.zexp


def test_projection():
    assert project_to_surface(X23, BundleElement((1, 4), 7)) == (1, 4)
    assert project_to_surface(X23, identity()) == ()


@given(elements, elements)
def test_projection_is_a_homomorphism(x, y):
    product = project_to_surface(X23, elem_mul(X23, x, y))
    assert surface_equal(X23.surface, product, concat(x.word, y.word))


def test_kernel_of_projection_is_z_powers():
    for m in range(-2, 3):
        x = BundleElement(concat((2, 3), RELATOR, (-3, -2)), m)
        assert elem_eq(X23, x, z_power(z_exponent(X23, x)))


def test_context_mismatch():
    ctx = BundleContext(1, 1)
    with pytest.raises(ContextMismatchError):
        elem_mul(ctx, BundleElement((3,), 0), identity())


def test_conjugation_directions():
    a, b = generator_element(1), generator_element(2)
    assert conjugate(X23, a, b, Conjugation.LEFT) == BundleElement((1, 2, -1), 0)
    assert conjugate(X23, a, b, Conjugation.RIGHT) == BundleElement((-1, 2, 1), 0)


def test_surface_relator_count_all_genera():
    assert surface_relator_count(SurfaceContext(1), (1, 2, -1, -2)) == 1
    assert surface_relator_count(SurfaceContext(3), surface_relator(3)) == 1
    with pytest.raises(NotInCenterError):
        surface_relator_count(SurfaceContext(1), (1,))


def reduced_words(codes, max_length):
    """Every freely reduced word over `codes` of length at most max_length."""
    layer = [()]
    yield ()
    for _ in range(max_length):
        layer = [word + (code,) for word in layer for code in codes if not word or word[-1] != -code]
        yield from layer


@pytest.mark.parametrize("k", [1, 2])
def test_genus_one_normal_form_agrees_with_oracle(k):
    ctx = BundleContext(1, k)
    torus = SurfaceContext(1)
    certified = 0
    for word in reduced_words((1, -1, 2, -2), 8):
        p, q, r = torus_normal_form(word, 0, k)
        if (p, q) != (0, 0):
            continue
        certificate = bfs_oracle_trivial(torus, word, depth=6)
        if certificate is None:
            continue
        certified += 1
        assert r == k * certificate
        assert z_exponent(ctx, BundleElement(word, 0)) == k * certificate
    assert certified >= 10
    assert bfs_oracle_trivial(torus, (1, 2, -1, -2, 1, 2, -1, -2), depth=6) == 2


def test_powers():
    x = BundleElement((1, 4), 2)
    assert elem_pow(X23, x, 3) == BundleElement((1, 4, 1, 4, 1, 4), 6)
    assert elem_eq(X23, elem_pow(X23, x, -2), elem_inv(X23, elem_pow(X23, x, 2)))
    assert elem_pow(X23, BundleElement(RELATOR, 0), 0) == identity()
    assert z_exponent(X23, elem_pow(X23, BundleElement(RELATOR, -1), 4)) == 8
