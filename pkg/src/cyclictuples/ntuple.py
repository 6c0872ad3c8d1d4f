"""General-n machinery: the pi_n threshold, sound partial decisions,
explicit witness construction, D-regions, alternating permutation counts,
and volume bounds.

No complete characterization of cyclic n-tuples is known for n >= 4, so
``decide_ntuple`` is honestly three-valued there: Cyclic verdicts carry an
exactly verified witness, NotCyclic verdicts follow from the pi_n
necessity threshold, and everything else is Unknown.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import (
    DiscreteDist,
    HypothesisNotMetError,
    InvalidTupleError,
    Number,
    ProbTuple,
    Reason,
    Status,
    Verdict,
    WitnessSystem,
)
from .triple import is_cyclic_triple


@dataclass(frozen=True)
class PiN:
    """The largest achievable minimum coordinate of a cyclic n-tuple:
    pi_n = 1 - 1/(4 cos^2(pi/(n+2))), increasing to 3/4."""

    n: int
    value: float


def pi_n(n: int) -> float:
    """Evaluate pi_n; rejects n < 3.  pi_3 = (sqrt(5)-1)/2, pi_4 = 2/3."""
    if n < 3:
        raise ValueError(f"pi_n requires n >= 3, got {n}")
    c = math.cos(math.pi / (n + 2))
    return 1.0 - 1.0 / (4.0 * c * c)


def _pi_n_upper(n: int) -> float:
    # Conservative cover of the float-evaluation error of pi_n, so the
    # necessity filter can never misclassify a boundary tuple (e.g. the
    # all-2/3 4-tuple) as NotCyclic.
    v = pi_n(n)
    return v + 8.0 * math.ulp(v)


class DnRegionTag(str, enum.Enum):
    """Tuples whose adjacent pairwise sums are uniformly small or large."""

    D_I = "D_I"        # all s_i < 1
    D_II = "D_II"      # all s_i > 1
    D_STAR = "D_star"  # D_I with x_1 minimal


def _as_ntuple(t: ProbTuple | Sequence[Number]) -> ProbTuple:
    if not isinstance(t, ProbTuple):
        t = ProbTuple(tuple(t))
    return t


def in_dn(t: ProbTuple | Sequence[Number], tag: DnRegionTag) -> bool:
    """Strict-inequality membership in D_I / D_II / D_star.

    For D_star, ties for the minimum count as membership (a measure-zero
    convention)."""
    t = _as_ntuple(t)
    tag = DnRegionTag(tag)
    sums = t.adjacent_sums()
    if tag is DnRegionTag.D_II:
        return all(s > 1 for s in sums)
    if not all(s < 1 for s in sums):
        return False
    if tag is DnRegionTag.D_I:
        return True
    return t.values[0] <= min(t.values)


def _exact(v: Number) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


def _updown_index(values: Sequence[Number]) -> int | None:
    """Smallest 0-based i with s_i >= 1 and s_{i+2} <= 1, decided exactly.

    Float inputs take a fast path: a float sum within an ulp of the exact
    one can only disagree with it inside a 1e-9 band around 1, so exact
    rational arithmetic is used only when some sum lands in that band.
    """
    n = len(values)
    if not any(isinstance(v, Fraction) for v in values):
        s = [values[i] + values[(i + 1) % n] for i in range(n)]
        if all(abs(si - 1.0) > 1e-9 for si in s):
            for i in range(n):
                if s[i] >= 1.0 and s[(i + 2) % n] <= 1.0:
                    return i
            return None
    xs = [_exact(v) for v in values]
    s_exact = [xs[i] + xs[(i + 1) % n] for i in range(n)]
    for i in range(n):
        if s_exact[i] >= 1 and s_exact[(i + 2) % n] <= 1:
            return i
    return None


def build_witness(t: ProbTuple | Sequence[Number], index: int | None = None) -> WitnessSystem:
    """Construct independent two- and three-point distributions realizing
    the tuple's cycle probabilities exactly.

    Requires n >= 4 and an index i (0-based) with x_i + x_{i+1} >= 1 and
    x_{i+2} + x_{i+3} <= 1; with ``index=None`` the smallest such i is
    used.  Float coordinates are converted to exact rationals (losslessly)
    and the hypothesis is re-checked in exact arithmetic.  The returned
    system satisfies P(U_{j+1} > U_j) = x_j for every j, verifiable with
    ``verify_witness``.
    """
    t = _as_ntuple(t)
    n = t.n
    if n < 4:
        raise InvalidTupleError("witness construction requires n >= 4")
    xs = tuple(_exact(v) for v in t.values)
    if index is None:
        index = _updown_index(xs)
        if index is None:
            raise HypothesisNotMetError(
                "no index i has x_i + x_{i+1} >= 1 and x_{i+2} + x_{i+3} <= 1"
            )
    else:
        index %= n
        s_i = xs[index] + xs[(index + 1) % n]
        s_i2 = xs[(index + 2) % n] + xs[(index + 3) % n]
        if not (s_i >= 1 and s_i2 <= 1):
            raise HypothesisNotMetError(
                f"index {index}: need s_i >= 1 and s_(i+2) <= 1, got {s_i} and {s_i2}"
            )

    # Rotate so the hypothesis sits at position n-3 (0-based): then
    # y[n-3] + y[n-2] >= 1 and y[n-1] + y[0] <= 1.
    k = (index + 3) % n
    y = tuple(xs[(j + k) % n] for j in range(n))

    last = y[n - 1]
    # last = 1 forces y[0] = 0; the ratio y[0]/(1 - last) is then 0 by
    # continuity and every verification identity still holds.
    ratio = Fraction(0) if last == 1 else y[0] / (1 - last)
    one = Fraction(1)

    raw: list[dict[int, Fraction]] = [dict() for _ in range(n)]
    raw[0] = {0: one - last, n + 1: last}
    raw[1] = {-2: one - ratio, 2: ratio}
    for i in range(3, n - 1):  # interior variables, values -i and i
        raw[i - 1] = {-i: one - y[i - 2], i: y[i - 2]}
    raw[n - 2] = {
        -(n - 1): one - y[n - 3],
        n - 1: y[n - 2] + y[n - 3] - 1,
        n + 2: one - y[n - 2],
    }
    raw[n - 1] = {n: one}

    dists_y = [
        DiscreteDist(tuple((Fraction(p), w) for p, w in sorted(d.items()) if w != 0))
        for d in raw
    ]
    # Undo the rotation: distribution m of the original tuple is
    # distribution (m - k) mod n of the rotated one.
    return WitnessSystem(tuple(dists_y[(m - k) % n] for m in range(n)))


def verify_witness(w: WitnessSystem, t: ProbTuple | Sequence[Number]) -> bool:
    """Exact check that P(U_{i+1} > U_i) equals x_i for every i.

    Each probability is the exact rational sum over the joint support;
    float coordinates of ``t`` are compared via their exact values.
    """
    t = _as_ntuple(t)
    if w.n != t.n:
        return False
    probs = w.cycle_probabilities()
    return all(p == _exact(v) for p, v in zip(probs, t.values))


def decide_ntuple(t: ProbTuple | Sequence[Number], with_witness: bool = True) -> Verdict:
    """Sound three-valued decision for n >= 3.

    n = 3 delegates to the exact triple decision.  For n >= 4: NotCyclic
    when min > pi_n or max < 1 - pi_n (necessity); Cyclic when some index
    satisfies the pairwise-sum condition s_i >= 1, s_{i+2} <= 1, with the
    constructed witness attached (``with_witness=False`` skips the
    construction and reports the equivalent mixed-sums certificate);
    Unknown otherwise.  Never incorrectly Cyclic or NotCyclic.
    """
    t = _as_ntuple(t)
    if t.n == 3:
        return is_cyclic_triple(t)

    threshold = _pi_n_upper(t.n)
    if min(t.values) > threshold:
        return Verdict(Status.NOT_CYCLIC, Reason.MIN_EXCEEDS_PI_N)
    if max(t.values) < 1.0 - threshold:
        return Verdict(Status.NOT_CYCLIC, Reason.MAX_BELOW_ONE_MINUS_PI_N)

    index = _updown_index(t.values)
    if index is not None:
        if with_witness:
            return Verdict(
                Status.CYCLIC, Reason.UP_DOWN_CONDITION_MET, witness=build_witness(t, index)
            )
        return Verdict(Status.CYCLIC, Reason.MIXED_PAIRWISE_SUMS)
    return Verdict(Status.UNKNOWN, Reason.UNDECIDED)


@dataclass(frozen=True)
class AlternatingCounts:
    """Exact counts A_1..A_max of up-down alternating permutations
    (x_1 < x_2 > x_3 < ...), computed by the boustrophedon recurrence."""

    table: tuple[int, ...]  # table[n] = A_n, with table[0] = 1 by convention

    @classmethod
    def up_to(cls, nmax: int) -> "AlternatingCounts":
        counts = [1]
        row = [1]
        for n in range(1, nmax + 1):
            new = [0]
            for k in range(1, n + 1):
                new.append(new[k - 1] + row[n - k])
            row = new
            counts.append(row[-1])
        return cls(tuple(counts))


_ALT_CACHE = AlternatingCounts.up_to(32)


def alternating_count(n: int) -> int:
    """A_n, the number of up-down alternating permutations of length n."""
    if n < 1:
        raise ValueError(f"alternating_count requires n >= 1, got {n}")
    global _ALT_CACHE
    if n >= len(_ALT_CACHE.table):
        _ALT_CACHE = AlternatingCounts.up_to(max(n, 2 * len(_ALT_CACHE.table)))
    return _ALT_CACHE.table[n]


def andre_series(n: int, terms: int) -> float:
    """Partial sum of the classical series for A_n / n!:

        2 (2/pi)^(n+1) * sum_k (+-1)^k / (2k+1)^(n+1)

    with alternating signs for even n and all-positive terms for odd n.
    Converges to alternating_count(n)/n! as ``terms`` grows; for even n
    the one-term truncation 2(2/pi)^(n+1) is an upper bound.
    """
    if n < 1 or terms < 1:
        raise ValueError("need n >= 1 and terms >= 1")
    alternating = n % 2 == 0
    total = 0.0
    for k in range(terms):
        term = (2 * k + 1) ** -(n + 1.0)
        total += -term if alternating and k % 2 == 1 else term
    return 2.0 * (2.0 / math.pi) ** (n + 1) * total


def vol_dn_star(n: int) -> Fraction:
    """Exact volume A_{n-1} / ((2n) (n-1)!) of the region D_star."""
    if n < 3:
        raise ValueError(f"vol_dn_star requires n >= 3, got {n}")
    return Fraction(alternating_count(n - 1), 2 * n * math.factorial(n - 1))


@dataclass(frozen=True)
class PnBounds:
    """Bracketing bounds on the probability p_n that a uniform random
    n-tuple is cyclic."""

    n: int
    lower: float          # 1 - 3 (2/pi)^n
    sharper_lower: float  # 1 - A_{n-1}/(n-1)!, always >= lower
    upper: float          # 1 - 2 (1/4)^n

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "lower": self.lower,
            "sharper_lower": self.sharper_lower,
            "upper": self.upper,
        }


def pn_bounds(n: int) -> PnBounds:
    """Closed-form bounds for p_n, n >= 4: the (2/pi)^n / (1/4)^n pair and
    the sharper intermediate bound 1 - A_{n-1}/(n-1)! it is derived from."""
    if n < 4:
        raise ValueError(f"pn_bounds requires n >= 4, got {n}")
    lower = 1.0 - 3.0 * (2.0 / math.pi) ** n
    sharper = 1.0 - alternating_count(n - 1) / math.factorial(n - 1)
    upper = 1.0 - 2.0 * 0.25**n
    return PnBounds(n=n, lower=lower, sharper_lower=sharper, upper=upper)


def efron_dice() -> tuple[WitnessSystem, ProbTuple]:
    """The classical four-dice cycle: each die beats the previous with
    probability 2/3, so the system witnesses (2/3, 2/3, 2/3, 2/3)."""
    system = WitnessSystem(
        (
            DiscreteDist.from_faces([0, 0, 4, 4, 4, 4]),
            DiscreteDist.from_faces([1, 1, 1, 5, 5, 5]),
            DiscreteDist.from_faces([2, 2, 2, 2, 6, 6]),
            DiscreteDist.from_faces([3, 3, 3, 3, 3, 3]),
        )
    )
    return system, ProbTuple((Fraction(2, 3),) * 4)


def moon_moser_dice() -> tuple[WitnessSystem, ProbTuple]:
    """The classical three-dice cycle witnessing (5/9, 5/9, 5/9)."""
    system = WitnessSystem(
        (
            DiscreteDist.from_faces([1, 5, 9]),
            DiscreteDist.from_faces([2, 6, 7]),
            DiscreteDist.from_faces([3, 4, 8]),
        )
    )
    return system, ProbTuple((Fraction(5, 9),) * 3)
