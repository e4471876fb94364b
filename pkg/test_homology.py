import numpy as np
import pytest
from hypothesis import given, strategies as st
from pydantic import ValidationError

from bundle_auts.homology import (
    CohomologyClass,
    HomologyClass,
    abelianize,
    action_matrix,
    homology_basis,
    intersection,
    is_symplectic_action,
    poincare_delta,
    poincare_delta_inverse,
    symplectic_form,
)
from bundle_auts.words import SurfaceContext, concat, free_reduce, surface_relator

G2 = SurfaceContext(2)

classes = st.lists(st.integers(min_value=-20, max_value=20), min_size=4, max_size=4).map(
    lambda coords: HomologyClass(coords=tuple(coords))
)
letters = st.integers(min_value=1, max_value=4).flatmap(lambda n: st.sampled_from([n, -n]))
words = st.lists(letters, max_size=12).map(free_reduce)


def test_abelianize_examples():
    assert abelianize(G2, surface_relator(2)).coords == (0, 0, 0, 0)
    assert abelianize(G2, (1,)).coords == (1, 0, 0, 0)
    assert abelianize(G2, (1, 2, 1)).coords == (2, 1, 0, 0)


@given(words, words)
def test_abelianize_is_a_homomorphism(u, v):
    assert abelianize(G2, concat(u, v)) == abelianize(G2, u) + abelianize(G2, v)


def test_intersection_examples():
    a1, b1, a2, _ = homology_basis(2)
    assert intersection(a1, b1) == 1
    assert intersection(b1, a1) == -1
    assert intersection(a1, a2) == 0


@given(classes, classes)
def test_intersection_is_antisymmetric(x, y):
    assert intersection(x, y) == -intersection(y, x)
    assert intersection(x, x) == 0


@given(classes, classes, classes)
def test_intersection_is_bilinear(x, y, w):
    assert intersection(x + y, w) == intersection(x, w) + intersection(y, w)


def test_form_is_unimodular():
    assert round(abs(np.linalg.det(symplectic_form(3)))) == 1


def test_poincare_delta():
    a1, b1, _, _ = homology_basis(2)
    assert poincare_delta(HomologyClass.zero(2)).is_zero()
    assert poincare_delta(b1).evaluate(a1) == intersection(a1, b1) == 1
    for basis_class in homology_basis(2):
        assert poincare_delta_inverse(poincare_delta(basis_class)) == basis_class


@given(classes, classes, st.integers(min_value=-5, max_value=5))
def test_poincare_delta_pairs_and_scales(x, w, k):
    assert poincare_delta(x).evaluate(w) == intersection(w, x)
    assert poincare_delta(x.scale(k)) == poincare_delta(x).scale(k)


def test_symplectic_action():
    assert is_symplectic_action(np.eye(4, dtype=int)) == 1
    assert is_symplectic_action(np.array([[0, 1], [1, 0]])) == -1
    assert is_symplectic_action(np.array([[2, 0], [0, 1]])) is None
    assert is_symplectic_action(np.eye(3, dtype=int)) is None


def test_action_matrix_columns():
    images = [HomologyClass(coords=(0, 1)), HomologyClass(coords=(-1, 0))]
    matrix = action_matrix(images)
    assert matrix.tolist() == [[0, -1], [1, 0]]
    assert is_symplectic_action(matrix) == 1


def test_value_type_checks():
    with pytest.raises(ValidationError):
        HomologyClass(coords=(1, 2, 3))
    assert CohomologyClass.basis(1, 1).coords == (0, 1)
    assert (HomologyClass(coords=(1, 2)) * 3).coords == (3, 6)
    assert (-HomologyClass(coords=(1, -2))).coords == (-1, 2)
