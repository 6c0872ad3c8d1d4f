"""Shared domain types for cyclic-tuple analysis.

A tuple (x_1, ..., x_n) of probabilities is *cyclic* if independent random
variables U_1, ..., U_n exist, almost surely pairwise distinct, with
P(U_{i+1} > U_i) = x_i around the cycle (indices modulo n).  It is
*nontransitive* if it is cyclic and every x_i > 1/2.

Number handling: decision and witness paths accept exact rationals
(`int`/`fractions.Fraction`) and stay exact; volume and density paths work
in ordinary binary floats.  All types here are immutable and safe to share
across workers.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

import numpy as np

Number = Union[int, float, Fraction]


class InvalidTupleError(ValueError):
    """Input does not form a valid probability tuple."""


class HypothesisNotMetError(ValueError):
    """A constructive operation was requested at an index where its
    precondition fails."""


class Status(str, enum.Enum):
    CYCLIC = "Cyclic"
    NOT_CYCLIC = "NotCyclic"
    UNKNOWN = "Unknown"


class Reason(str, enum.Enum):
    """Machine-readable cause attached to every verdict."""

    TRYBULA_BOTH_HOLD = "TrybulaBothHold"
    TRYBULA_INEQ1_FAILS = "TrybulaIneq1Fails"
    TRYBULA_INEQ2_FAILS = "TrybulaIneq2Fails"
    UP_DOWN_CONDITION_MET = "UpDownConditionMet"
    MIXED_PAIRWISE_SUMS = "MixedPairwiseSums"
    MIN_EXCEEDS_PI_N = "MinExceedsPiN"
    MAX_BELOW_ONE_MINUS_PI_N = "MaxBelowOneMinusPiN"
    UNDECIDED = "Undecided"


SUFFICIENCY_REASONS = frozenset(
    {Reason.TRYBULA_BOTH_HOLD, Reason.UP_DOWN_CONDITION_MET, Reason.MIXED_PAIRWISE_SUMS}
)
VIOLATION_REASONS = frozenset(
    {
        Reason.TRYBULA_INEQ1_FAILS,
        Reason.TRYBULA_INEQ2_FAILS,
        Reason.MIN_EXCEEDS_PI_N,
        Reason.MAX_BELOW_ONE_MINUS_PI_N,
    }
)


def _check_probability(v: Number) -> None:
    if isinstance(v, float) and not math.isfinite(v):
        raise InvalidTupleError(f"non-finite value {v!r}")
    if not 0 <= v <= 1:
        raise InvalidTupleError(f"value {v!r} outside [0, 1]")


@dataclass(frozen=True)
class ProbTuple:
    """An ordered n-tuple of probabilities, n >= 3, with cyclic indexing.

    ``t[i]`` wraps modulo n, so ``t[n] == t[0]``.  Values may be floats or
    exact rationals; arithmetic helpers preserve whichever kind is stored.
    """

    values: tuple[Number, ...]

    def __post_init__(self) -> None:
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        if len(values) < 3:
            raise InvalidTupleError(f"need n >= 3 coordinates, got {len(values)}")
        for v in values:
            if not isinstance(v, (int, float, Fraction)) or isinstance(v, bool):
                raise InvalidTupleError(f"unsupported value type {type(v).__name__}")
            _check_probability(v)

    @property
    def n(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> Number:
        return self.values[i % len(self.values)]

    def __iter__(self):
        return iter(self.values)

    @property
    def is_exact(self) -> bool:
        return all(not isinstance(v, float) for v in self.values)

    def adjacent_sums(self) -> tuple[Number, ...]:
        """The cyclic sums s_i = x_i + x_{i+1}, i = 0, ..., n-1."""
        v = self.values
        n = len(v)
        return tuple(v[i] + v[(i + 1) % n] for i in range(n))

    def min(self) -> Number:
        return min(self.values)

    def max(self) -> Number:
        return max(self.values)

    def as_exact(self) -> "ProbTuple":
        """Convert every coordinate to an exact Fraction (floats convert
        losslessly, since every float is a dyadic rational)."""
        return ProbTuple(tuple(v if isinstance(v, Fraction) else Fraction(v) for v in self.values))

    def as_floats(self) -> tuple[float, ...]:
        return tuple(float(v) for v in self.values)

    def __str__(self) -> str:
        return format_tuple(self)


def complement(t: ProbTuple) -> ProbTuple:
    """The coordinatewise complement (1-x_1, ..., 1-x_n).  Involutive, and
    preserves the cyclic property."""
    return ProbTuple(tuple(1 - v for v in t.values))


def rotate(t: ProbTuple, k: int) -> ProbTuple:
    """Cyclic left shift by k (mod n): rotate((a,b,c), 1) == (b,c,a)."""
    n = t.n
    k %= n
    return ProbTuple(t.values[k:] + t.values[:k])


def reverse(t: ProbTuple) -> ProbTuple:
    """The reversed tuple (x_n, ..., x_1)."""
    return ProbTuple(t.values[::-1])


def parse_tuple(text: str, exact: bool = False) -> ProbTuple:
    """Parse the canonical textual form, e.g. ``"5/9,5/9,5/9"`` or
    ``"0.6,0.5,0.3,0.4"``.

    Tokens with a slash always become exact Fractions.  Decimal tokens
    become floats by default; with ``exact=True`` they are read as exact
    decimal fractions instead ("0.6" -> 3/5), which the witness path needs.
    """
    tokens = [tok.strip() for tok in text.split(",")]
    if any(not tok for tok in tokens):
        raise InvalidTupleError(f"malformed tuple string {text!r}")
    values: list[Number] = []
    for tok in tokens:
        try:
            if "/" in tok or exact:
                values.append(Fraction(tok))
            else:
                values.append(float(tok))
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidTupleError(f"malformed tuple entry {tok!r}") from exc
    return ProbTuple(tuple(values))


def format_value(v: Number) -> str:
    if isinstance(v, float):
        return repr(v)
    return str(Fraction(v))


def format_tuple(t: ProbTuple) -> str:
    return ",".join(format_value(v) for v in t.values)


@dataclass(frozen=True)
class DiscreteDist:
    """A finitely supported distribution with exact rational weights.

    ``atoms`` maps distinct support points to weights that are nonnegative
    and sum exactly to 1.
    """

    atoms: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self) -> None:
        atoms = tuple((Fraction(p), Fraction(w)) for p, w in self.atoms)
        object.__setattr__(self, "atoms", atoms)
        points = [p for p, _ in atoms]
        if len(set(points)) != len(points):
            raise ValueError("support points must be distinct")
        total = Fraction(0)
        for _, w in atoms:
            if w < 0:
                raise ValueError(f"negative weight {w}")
            total += w
        if total != 1:
            raise ValueError(f"weights sum to {total}, not 1")

    @classmethod
    def from_faces(cls, faces: Sequence[Number]) -> "DiscreteDist":
        """Uniform distribution over die faces (repeated faces merge)."""
        weights: dict[Fraction, Fraction] = {}
        share = Fraction(1, len(faces))
        for f in faces:
            p = Fraction(f)
            weights[p] = weights.get(p, Fraction(0)) + share
        return cls(tuple(sorted(weights.items())))

    @property
    def support(self) -> frozenset[Fraction]:
        return frozenset(p for p, _ in self.atoms)

    def prob_greater_than(self, other: "DiscreteDist") -> Fraction:
        """P(self > other) by exact enumeration over the joint support."""
        total = Fraction(0)
        for a, wa in self.atoms:
            for b, wb in other.atoms:
                if a > b:
                    total += wa * wb
        return total


@dataclass(frozen=True)
class WitnessSystem:
    """n distributions with pairwise-disjoint supports, certifying a tuple
    cyclic via exact computation of all the cycle probabilities."""

    dists: tuple[DiscreteDist, ...]

    def __post_init__(self) -> None:
        dists = tuple(self.dists)
        object.__setattr__(self, "dists", dists)
        if len(dists) < 3:
            raise ValueError("a witness needs at least 3 distributions")
        seen: set[Fraction] = set()
        for d in dists:
            if seen & d.support:
                raise ValueError("supports of distinct distributions must be disjoint")
            seen |= d.support

    @property
    def n(self) -> int:
        return len(self.dists)

    def cycle_probabilities(self) -> tuple[Fraction, ...]:
        """(P(U_2 > U_1), ..., P(U_1 > U_n)), each exact."""
        n = len(self.dists)
        return tuple(self.dists[(i + 1) % n].prob_greater_than(self.dists[i]) for i in range(n))

    def to_json_dict(self) -> dict:
        """Lossless wire form: rational values as "p/q" strings."""
        return {
            "n": self.n,
            "dists": [
                [{"point": str(p), "weight": str(w)} for p, w in d.atoms] for d in self.dists
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "WitnessSystem":
        dists = tuple(
            DiscreteDist(tuple((Fraction(a["point"]), Fraction(a["weight"])) for a in atoms))
            for atoms in data["dists"]
        )
        system = cls(dists)
        if "n" in data and data["n"] != system.n:
            raise ValueError(f"declared n={data['n']} but found {system.n} distributions")
        return system


@dataclass(frozen=True)
class Verdict:
    """Decision trichotomy with the machine-readable cause that fired."""

    status: Status
    reason: Reason
    witness: WitnessSystem | None = None

    def __post_init__(self) -> None:
        if self.status is Status.CYCLIC and self.reason not in SUFFICIENCY_REASONS:
            raise ValueError(f"{self.reason} is not a sufficiency reason")
        if self.status is Status.NOT_CYCLIC and self.reason not in VIOLATION_REASONS:
            raise ValueError(f"{self.reason} is not a necessity-violation reason")
        if self.status is Status.UNKNOWN and self.reason is not Reason.UNDECIDED:
            raise ValueError("Unknown verdicts carry reason Undecided")
        if self.witness is not None and self.status is not Status.CYCLIC:
            raise ValueError("only Cyclic verdicts may carry a witness")

    def to_dict(self) -> dict:
        out: dict = {"status": self.status.value, "reason": self.reason.value}
        if self.witness is not None:
            out["witness"] = self.witness.to_json_dict()
        return out


@dataclass(frozen=True)
class MCEstimate:
    """A Monte Carlo point estimate with its Bernoulli standard error.

    Results are a pure function of (seed, samples, chunks): reruns are
    bit-identical, and changing only the chunk count does not change the
    estimate (substreams are assigned by global sample index).
    """

    estimate: float
    stderr: float
    samples: int
    seed: int
    chunks: int = 1

    def __post_init__(self) -> None:
        if not 0 <= self.estimate <= 1:
            raise ValueError("estimate outside [0, 1]")
        if self.stderr < 0:
            raise ValueError("negative standard error")
        if self.samples < 1 or self.chunks < 1:
            raise ValueError("samples and chunks must be >= 1")

    def to_dict(self) -> dict:
        return {
            "estimate": self.estimate,
            "stderr": self.stderr,
            "samples": self.samples,
            "seed": self.seed,
            "chunks": self.chunks,
        }


@dataclass(frozen=True)
class DensityGrid:
    """Tabulated (x, density) pairs for one of the order-statistic
    densities f1 (smallest), f2 (middle), f3 (largest)."""

    which: str
    xs: np.ndarray = field(repr=False)
    values: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        if self.which not in ("f1", "f2", "f3"):
            raise ValueError(f"unknown density {self.which!r}")
        xs = np.asarray(self.xs, dtype=float)
        values = np.asarray(self.values, dtype=float)
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "values", values)
        if xs.ndim != 1 or xs.shape != values.shape:
            raise ValueError("xs and values must be 1-d arrays of equal length")
        if np.any(np.diff(xs) <= 0):
            raise ValueError("abscissas must be strictly increasing")
        if np.any(values < 0):
            raise ValueError("density values must be nonnegative")

    def __len__(self) -> int:
        return len(self.xs)

    def points(self) -> Iterable[tuple[float, float]]:
        return zip(self.xs.tolist(), self.values.tolist())
