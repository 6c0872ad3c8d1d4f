import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cyclictuples.core import (
    DensityGrid,
    DiscreteDist,
    InvalidTupleError,
    MCEstimate,
    ProbTuple,
    Reason,
    Status,
    Verdict,
    WitnessSystem,
    complement,
    format_tuple,
    parse_tuple,
    reverse,
    rotate,
)

probs = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)
prob_tuples = st.lists(probs, min_size=3, max_size=9).map(lambda v: ProbTuple(tuple(v)))


class TestProbTuple:
    def test_validation(self):
        with pytest.raises(InvalidTupleError):
            ProbTuple((0.5, 0.5))
        with pytest.raises(InvalidTupleError):
            ProbTuple((0.5, 0.5, 1.5))
        with pytest.raises(InvalidTupleError):
            ProbTuple((0.5, 0.5, -0.1))
        with pytest.raises(InvalidTupleError):
            ProbTuple((0.5, 0.5, float("nan")))

    def test_cyclic_indexing(self):
        t = ProbTuple((0.1, 0.2, 0.3, 0.4))
        assert t[4] == t[0] and t[-1] == t[3] and t[7] == t[3]

    def test_adjacent_sums(self):
        t = ProbTuple((Fraction(1, 2), Fraction(1, 3), Fraction(1, 4)))
        assert t.adjacent_sums() == (Fraction(5, 6), Fraction(7, 12), Fraction(3, 4))

    def test_exact_conversion_is_lossless(self):
        t = ProbTuple((0.1, 0.5, 1.0))
        e = t.as_exact()
        assert e.is_exact and all(float(a) == b for a, b in zip(e.values, t.values))


class TestSymmetryOps:
    def test_complement_examples(self):
        assert complement(ProbTuple((0.5, 0.5, 0.5))).values == (0.5, 0.5, 0.5)
        assert complement(ProbTuple((1, 1, 1))).values == (0, 0, 0)
        q = Fraction(2, 3)
        assert complement(ProbTuple((q,) * 4)).values == (Fraction(1, 3),) * 4

    def test_rotate_reverse_examples(self):
        t = ProbTuple((0.1, 0.2, 0.3))
        assert rotate(t, 1).values == (0.2, 0.3, 0.1)
        assert rotate(t, 3).values == t.values
        assert reverse(ProbTuple((0.1, 0.2, 0.3, 0.4))).values == (0.4, 0.3, 0.2, 0.1)

    @given(st.lists(st.fractions(min_value=0, max_value=1, max_denominator=1000), min_size=3, max_size=9))
    def test_complement_involutive_exact(self, values):
        t = ProbTuple(tuple(values))
        assert complement(complement(t)).values == t.values

    @given(prob_tuples)
    def test_complement_involutive_floats_to_ulp(self, t):
        # 1 - (1 - x) can round for float x; exactness is a rational-path
        # guarantee, floats recover the value to one ulp
        for a, b in zip(complement(complement(t)).values, t.values):
            assert abs(a - b) <= math.ulp(1.0)

    @given(prob_tuples, st.integers(-20, 20), st.integers(-20, 20))
    def test_rotate_composes(self, t, j, k):
        assert rotate(rotate(t, j), k).values == rotate(t, j + k).values

    @given(prob_tuples)
    def test_reverse_involutive(self, t):
        assert reverse(reverse(t)).values == t.values


class TestParsing:
    def test_rational_and_decimal(self):
        t = parse_tuple("5/9,5/9,5/9")
        assert t.values == (Fraction(5, 9),) * 3 and t.is_exact
        t = parse_tuple("0.6,0.5,0.3")
        assert t.values == (0.6, 0.5, 0.3) and not t.is_exact

    def test_exact_decimal_mode(self):
        t = parse_tuple("0.6,0.5,0.25", exact=True)
        assert t.values == (Fraction(3, 5), Fraction(1, 2), Fraction(1, 4))

    def test_round_trip(self):
        for text in ("5/9,5/9,5/9", "0.6,0.5,0.3,0.4"):
            t = parse_tuple(text)
            assert parse_tuple(format_tuple(t)).values == t.values

    @pytest.mark.parametrize("bad", ["", "0.5,0.6", "a,b,c", "1/0,1,1", "2,0,0", ",,,"])
    def test_malformed(self, bad):
        with pytest.raises(InvalidTupleError):
            parse_tuple(bad)


class TestVerdict:
    def test_reason_classes_enforced(self):
        with pytest.raises(ValueError):
            Verdict(Status.CYCLIC, Reason.MIN_EXCEEDS_PI_N)
        with pytest.raises(ValueError):
            Verdict(Status.NOT_CYCLIC, Reason.TRYBULA_BOTH_HOLD)
        with pytest.raises(ValueError):
            Verdict(Status.UNKNOWN, Reason.MIXED_PAIRWISE_SUMS)

    def test_witness_only_on_cyclic(self):
        with pytest.raises(ValueError):
            Verdict(
                Status.NOT_CYCLIC,
                Reason.MIN_EXCEEDS_PI_N,
                witness=WitnessSystem(
                    tuple(DiscreteDist(((Fraction(k), Fraction(1)),)) for k in range(3))
                ),
            )


class TestDiscreteDist:
    def test_weights_must_sum_to_one(self):
        with pytest.raises(ValueError):
            DiscreteDist(((Fraction(0), Fraction(1, 2)),))
        with pytest.raises(ValueError):
            DiscreteDist(((Fraction(0), Fraction(1, 2)), (Fraction(0), Fraction(1, 2))))
        with pytest.raises(ValueError):
            DiscreteDist(((Fraction(0), Fraction(3, 2)), (Fraction(1), Fraction(-1, 2))))

    def test_from_faces_merges(self):
        d = DiscreteDist.from_faces([0, 0, 4, 4, 4, 4])
        assert dict(d.atoms) == {Fraction(0): Fraction(1, 3), Fraction(4): Fraction(2, 3)}

    def test_prob_greater_than(self):
        a = DiscreteDist.from_faces([1, 5, 9])
        b = DiscreteDist.from_faces([2, 6, 7])
        assert b.prob_greater_than(a) == Fraction(5, 9)
        assert a.prob_greater_than(b) == Fraction(4, 9)


class TestWitnessSystem:
    def test_disjoint_supports_enforced(self):
        d1 = DiscreteDist.from_faces([1, 2])
        d2 = DiscreteDist.from_faces([2, 3])
        d3 = DiscreteDist.from_faces([5, 6])
        with pytest.raises(ValueError):
            WitnessSystem((d1, d2, d3))

    def test_json_round_trip_lossless(self):
        w = WitnessSystem(
            (
                DiscreteDist(((Fraction(-2), Fraction(3, 7)), (Fraction(2), Fraction(4, 7)))),
                DiscreteDist(((Fraction(1, 3), Fraction(1)),)),
                DiscreteDist.from_faces([5, 6, 6]),
            )
        )
        again = WitnessSystem.from_json_dict(w.to_json_dict())
        assert again == w

    def test_n_mismatch_rejected(self):
        w, _ = __import__("cyclictuples").efron_dice()
        data = w.to_json_dict()
        data["n"] = 7
        with pytest.raises(ValueError):
            WitnessSystem.from_json_dict(data)


def test_mc_estimate_invariants():
    e = MCEstimate(estimate=0.5, stderr=0.001, samples=10, seed=1)
    assert e.to_dict()["chunks"] == 1
    with pytest.raises(ValueError):
        MCEstimate(estimate=1.5, stderr=0.0, samples=10, seed=1)
    with pytest.raises(ValueError):
        MCEstimate(estimate=0.5, stderr=-1.0, samples=10, seed=1)
    with pytest.raises(ValueError):
        MCEstimate(estimate=0.5, stderr=0.0, samples=0, seed=1)


def test_density_grid_invariants():
    DensityGrid(which="f1", xs=[0.1, 0.2], values=[1.0, 0.0])
    with pytest.raises(ValueError):
        DensityGrid(which="f9", xs=[0.1, 0.2], values=[1.0, 0.0])
    with pytest.raises(ValueError):
        DensityGrid(which="f1", xs=[0.2, 0.1], values=[1.0, 0.0])
    with pytest.raises(ValueError):
        DensityGrid(which="f1", xs=[0.1, 0.2], values=[1.0, -0.5])
