import itertools

import numpy as np
import pytest

from bundle_auts.errors import ResourceLimitError
from bundle_auts.oracle import TrivialWordOracle, bfs_oracle_trivial
from bundle_auts.words import SurfaceContext, concat, dehn_reduce, invert, power, random_word, surface_relator

G2 = SurfaceContext(2)
RELATOR = surface_relator(2)


def test_single_relator():
    assert bfs_oracle_trivial(G2, RELATOR, depth=2) == 1
    assert bfs_oracle_trivial(G2, invert(RELATOR), depth=2) == -1
    assert bfs_oracle_trivial(G2, (), depth=0) == 0


def test_relator_times_inverse_rotation():
    rotation = RELATOR[1:] + RELATOR[:1]
    assert bfs_oracle_trivial(G2, concat(RELATOR, invert(rotation)), depth=3) == 0


def test_nontrivial_word_has_no_certificate():
    assert bfs_oracle_trivial(G2, (1,), depth=4) is None
    assert bfs_oracle_trivial(G2, (1, 2, -1, -2), depth=4) is None


def test_frontier_cap():
    oracle = TrivialWordOracle(G2, depth=6, frontier_cap=1)
    with pytest.raises(ResourceLimitError):
        oracle.search(power(RELATOR, 2))


def test_oracle_agrees_with_dehn_on_conjugates():
    short = [(), (1,), (-2,), (3, 4), (-4, 1), (2, -3)]
    for u, e in itertools.product(short, (1, -1)):
        word = concat(u, power(RELATOR, e), invert(u))
        certificate = bfs_oracle_trivial(G2, word, depth=3)
        assert certificate is not None
        assert certificate == dehn_reduce(G2, word).relator_count == e


def test_genus_one_oracle():
    torus = SurfaceContext(1)
    assert bfs_oracle_trivial(torus, (1, 2, -1, -2), depth=2) == 1
    assert bfs_oracle_trivial(torus, (2, 1, -2, -1), depth=2) == -1
    assert bfs_oracle_trivial(torus, (1, 2), depth=3) is None


def test_dehn_agrees_with_oracle_on_random_words():
    rng = np.random.default_rng(2024)
    certified = 0
    for index in range(600):
        if index % 3:
            word = random_word(rng, 2, int(rng.integers(0, 13)))
        else:
            u = random_word(rng, 2, int(rng.integers(0, 3)))
            word = concat(u, power(RELATOR, 1 if rng.integers(0, 2) else -1), invert(u))
        result = dehn_reduce(G2, word)
        certificate = bfs_oracle_trivial(G2, word, depth=6)
        if certificate is None:
            continue
        certified += 1
        assert result.residual == ()
        assert result.relator_count == certificate
    assert certified >= 200
