import numpy as np
import pytest

from cyclictuples.rng import UniformStream, uniform_matrix, uniform_words


def test_words_in_unit_interval():
    u = uniform_words(123, 0, 100_000)
    assert u.min() >= 0.0 and u.max() < 1.0


def test_moments_sane():
    u = uniform_words(7, 0, 1_000_000)
    assert abs(u.mean() - 0.5) < 0.002
    assert abs(u.var() - 1.0 / 12.0) < 0.001


def test_deterministic_and_seed_sensitive():
    a = uniform_words(42, 0, 1000)
    assert np.array_equal(a, uniform_words(42, 0, 1000))
    assert not np.array_equal(a, uniform_words(43, 0, 1000))


def test_slices_are_substreams():
    # any partition of the index range reproduces the same words
    whole = uniform_words(5, 0, 10_000)
    parts = np.concatenate([uniform_words(5, 0, 1234), uniform_words(5, 1234, 8766)])
    assert np.array_equal(whole, parts)


def test_matrix_indexed_by_global_sample():
    whole = uniform_matrix(9, 0, 1000, 4)
    parts = np.vstack([uniform_matrix(9, 0, 337, 4), uniform_matrix(9, 337, 663, 4)])
    assert np.array_equal(whole, parts)


def test_stream_view_matches_matrix():
    s = UniformStream(11)
    a = s.next_matrix(10, 3)
    b = s.next_matrix(5, 3)
    assert np.array_equal(np.vstack([a, b]), uniform_matrix(11, 0, 15, 3))


def test_rejects_negative_args():
    with pytest.raises(ValueError):
        uniform_words(1, -1, 10)
    with pytest.raises(ValueError):
        uniform_words(1, 0, -10)
