"""Complete analysis of cyclic triples (n = 3).

The n = 3 case is fully decidable: a triple (x, y, z) is cyclic exactly
when both of

    min(x + yz, y + zx, z + xy) <= 1
    min(X + YZ, Y + ZX, Z + XY) <= 1      with X = 1-x, Y = 1-y, Z = 1-z

hold (Trybula's criterion, non-strict by convention).  This module gives
the exact decision, membership tests for the standard sub-regions, the
closed-form volumes, the order-statistic densities of a uniform random
cyclic triple, their summary statistics, and a rejection sampler.

The constant ``OMEGA = (sqrt(5)-1)/2`` (positive root of w^2 + w = 1)
appears throughout: it is both the largest possible minimum coordinate of
a cyclic triple and the right endpoint of the smallest-element density's
support.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .core import (
    InvalidTupleError,
    Number,
    ProbTuple,
    Reason,
    Status,
    Verdict,
)
from .numeric import adaptive_simpson, bisect_root, golden_max, integrate_piecewise
from .rng import UniformStream

_SQRT5 = math.sqrt(5.0)


@dataclass(frozen=True)
class GoldenConstant:
    """The golden-ratio conjugate, positive root of w^2 + w = 1."""

    omega: float

    @property
    def one_minus_omega(self) -> float:
        return 1.0 - self.omega


GOLDEN = GoldenConstant(omega=(_SQRT5 - 1.0) / 2.0)
OMEGA = GOLDEN.omega
ONE_MINUS_OMEGA = (3.0 - _SQRT5) / 2.0

# Closed-form volumes: vol_II = 3/16 - ln(2)/8 and
# vol_I = ln(2)/8 - ln(2w) + 11w/12 - 7/16, with the cyclic and
# nontransitive probabilities p3 = 6(vol_I + vol_II), p3* = 3 vol_I.
VOL_C3_II = 3.0 / 16.0 - math.log(2.0) / 8.0
VOL_C3_I = math.log(2.0) / 8.0 - math.log(2.0 * OMEGA) + 11.0 * OMEGA / 12.0 - 7.0 / 16.0
P3 = 11.0 * _SQRT5 / 4.0 - 17.0 / 4.0 - 6.0 * math.log(_SQRT5 - 1.0)
P3_STAR = 11.0 * _SQRT5 / 8.0 - 43.0 / 16.0 - 3.0 * math.log(_SQRT5 - 1.0) + 3.0 * math.log(2.0) / 8.0


class TripleRegion(str, enum.Enum):
    """Sub-regions of the unit cube used in the volume computation."""

    C3 = "C3"                  # all cyclic triples
    C3_STAR = "C3star"         # nontransitive triples (cyclic, all > 1/2)
    C3_I = "C3_I"              # cyclic, 1/2 < x <= 1, x <= y,z <= 1
    C3_II = "C3_II"            # cyclic, 0 <= x < 1/2 < y,z <= 1
    C3_ORDERED = "C3_ordered"  # cyclic with x <= y <= z


def _as_triple(t: ProbTuple | Sequence[Number]) -> ProbTuple:
    if not isinstance(t, ProbTuple):
        t = ProbTuple(tuple(t))
    if t.n != 3:
        raise InvalidTupleError(f"expected a triple, got n={t.n}")
    return t


def is_cyclic_triple(t: ProbTuple | Sequence[Number]) -> Verdict:
    """Exact decision for n = 3; never returns Unknown.

    Membership is non-strict on the boundary.  Exact rational inputs are
    decided in exact arithmetic; the reason names the violated inequality
    when the verdict is NotCyclic.
    """
    x, y, z = _as_triple(t).values
    if min(x + y * z, y + z * x, z + x * y) > 1:
        return Verdict(Status.NOT_CYCLIC, Reason.TRYBULA_INEQ1_FAILS)
    xb, yb, zb = 1 - x, 1 - y, 1 - z
    if min(xb + yb * zb, yb + zb * xb, zb + xb * yb) > 1:
        return Verdict(Status.NOT_CYCLIC, Reason.TRYBULA_INEQ2_FAILS)
    return Verdict(Status.CYCLIC, Reason.TRYBULA_BOTH_HOLD)


def is_nontransitive_triple(t: ProbTuple | Sequence[Number]) -> bool:
    """Cyclic with every coordinate strictly above 1/2."""
    t = _as_triple(t)
    if not min(t.values) > Fraction(1, 2):
        return False
    return is_cyclic_triple(t).status is Status.CYCLIC


def _le_omega(v: Number) -> bool:
    # v <= omega  <=>  v^2 + v <= 1 for v >= 0; exact for rationals.
    return v * v + v <= 1


def in_region(t: ProbTuple | Sequence[Number], region: TripleRegion) -> bool:
    """Membership test for the named sub-region.

    Products replace quotients (y <= (1-x)/x becomes x*y <= 1-x, valid on
    the stated ranges), so exact rational inputs are decided exactly.
    """
    t = _as_triple(t)
    x, y, z = t.values
    region = TripleRegion(region)
    if region is TripleRegion.C3:
        return is_cyclic_triple(t).status is Status.CYCLIC
    if region is TripleRegion.C3_STAR:
        return is_nontransitive_triple(t)
    if region is TripleRegion.C3_I:
        return (
            2 * x > 1
            and _le_omega(x)
            and x <= y
            and x * y <= 1 - x
            and x <= z
            and y * z <= 1 - x
        )
    if region is TripleRegion.C3_II:
        if not (2 * x < 1 and 2 * z > 1):
            return False
        if 2 * y > 1 and y <= 1 - x:
            return z <= 1
        if y > 1 - x:
            return y * z <= 1 - x
        return False
    # C3_ordered, via the smallest-variable characterization:
    # 0 <= x <= omega, x <= y <= sqrt(1-x),
    # max(y, (1-x)(1-y)) <= z <= min(1, (1-x)/y).
    return (
        _le_omega(x)
        and x <= y
        and y * y <= 1 - x
        and z >= y
        and z >= (1 - x) * (1 - y)
        and z <= 1
        and y * z <= 1 - x
    )


def exact_volumes() -> dict[str, float]:
    """Closed-form probabilities that a uniform random triple is cyclic
    (p3), nontransitive (p3_star), and the two building-block volumes."""
    return {"p3": P3, "p3_star": P3_STAR, "vol_I": VOL_C3_I, "vol_II": VOL_C3_II}


# Density breakpoints.  At a breakpoint the left piece is evaluated; the
# formulas are continuous there, so this only pins bit-reproducibility.
F1_BREAKPOINTS = (ONE_MINUS_OMEGA, 0.5, OMEGA)
F2_BREAKPOINTS = (ONE_MINUS_OMEGA, 0.5, 1.0 - ONE_MINUS_OMEGA)


def _f1(x: float) -> float:
    if x <= ONE_MINUS_OMEGA:
        v = x * x * x - 3.0 * x * x + (1.0 - x) / (2.0 - x) - (1.0 - x) * math.log1p(-x)
    elif x <= 0.5:
        v = x * x - 3.0 * x + 1.0 - (1.0 - x) * math.log1p(-x)
    elif x <= OMEGA:
        v = x * x + x - 1.0 + (1.0 - x) * math.log1p(-x) - 2.0 * (1.0 - x) * math.log(x)
    else:
        return 0.0
    return 3.0 / P3 * v


def _f2(x: float) -> float:
    if x <= ONE_MINUS_OMEGA:
        return 3.0 / P3 * (3.0 * x * x - x * x * x)
    if x <= 0.5:
        return 6.0 / P3 * (3.0 * x - x * x - 0.5 / (1.0 - x))
    return _f2(1.0 - x)


def _f3(x: float) -> float:
    return _f1(1.0 - x)


_DENSITIES = {"f1": _f1, "f2": _f2, "f3": _f3}


def density(which: str, x: float) -> float:
    """Evaluate the order-statistic density f1, f2, or f3 at x in [0, 1].

    f1 is the density of the smallest coordinate of a uniform random
    cyclic triple (supported on [0, OMEGA]), f2 of the middle coordinate
    (symmetric about 1/2), and f3(x) = f1(1-x) of the largest.
    """
    if which not in _DENSITIES:
        raise ValueError(f"unknown density {which!r}")
    x = float(x)
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"abscissa {x} outside [0, 1]")
    return _DENSITIES[which](x)


def _pieces(which: str) -> list[tuple[float, float]]:
    if which == "f1":
        pts = (0.0, ONE_MINUS_OMEGA, 0.5, OMEGA)
    elif which == "f2":
        pts = (0.0, ONE_MINUS_OMEGA, 0.5, 1.0 - ONE_MINUS_OMEGA, 1.0)
    else:  # f3: mirror image of f1's support
        pts = (1.0 - OMEGA, 0.5, 1.0 - ONE_MINUS_OMEGA, 1.0)
    return list(zip(pts[:-1], pts[1:]))


def integrate_density(which: str, upper: float | None = None, tol: float = 1e-11) -> float:
    """Integral of the density from the lower support end to ``upper``
    (default: the full mass).  f2 integrates on [0, 1/2] and doubles."""
    if which not in _DENSITIES:
        raise ValueError(f"unknown density {which!r}")
    f = _DENSITIES[which]
    pieces = _pieces(which)
    if upper is None and which == "f2":
        return 2.0 * integrate_piecewise(f, [0.0, ONE_MINUS_OMEGA, 0.5], tol)
    hi = pieces[-1][1] if upper is None else float(upper)
    total = 0.0
    for a, b in pieces:
        if hi <= a:
            break
        total += adaptive_simpson(f, a, min(b, hi), tol)
    return total


def density_stats(which: str, tol: float = 1e-11) -> dict[str, float]:
    """Mean, median, and mode of the selected density.

    Mean by adaptive quadrature of x*f(x) split at the breakpoints, median
    by bisection on the quadrature CDF (1e-10 interval tolerance), mode by
    golden-section search within each smooth piece.
    """
    if which not in _DENSITIES:
        raise ValueError(f"unknown density {which!r}")
    f = _DENSITIES[which]
    pieces = _pieces(which)
    lo, hi = pieces[0][0], pieces[-1][1]

    mean = sum(adaptive_simpson(lambda u: u * f(u), a, b, tol) for a, b in pieces)

    # cumulative mass at piece ends makes each CDF evaluation one local
    # integral instead of a full pass
    cum = [0.0]
    for a, b in pieces:
        cum.append(cum[-1] + adaptive_simpson(f, a, b, tol))

    def cdf(m: float) -> float:
        for i, (a, b) in enumerate(pieces):
            if m < b:
                return cum[i] + (adaptive_simpson(f, a, m, tol) if m > a else 0.0)
        return cum[-1]

    median = bisect_root(lambda m: cdf(m) - 0.5, lo, hi, xtol=1e-10)

    best_x, best_v = lo, f(lo)
    for a, b in pieces:
        for cx, cv in (golden_max(f, a, b, xtol=1e-10), (b, f(b))):
            if cv > best_v:
                best_x, best_v = cx, cv
    return {"mean": mean, "median": median, "mode": best_x}


def unrestricted_min_density(x: float) -> float:
    """Density 3(1-x)^2 of the smallest coordinate of an unrestricted
    uniform random triple, the comparison baseline for f1."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"abscissa {x} outside [0, 1]")
    return 3.0 * (1.0 - x) ** 2


def unrestricted_min_stats() -> dict[str, float]:
    """Mean 1/4 and median 1 - 2**(-1/3) of the unrestricted baseline."""
    return {"mean": 0.25, "median": 1.0 - 2.0 ** (-1.0 / 3.0)}


def ordered_cyclic_mask(points: np.ndarray) -> np.ndarray:
    """Vectorized membership of rows of ``points`` (N x 3) in the ordered
    cyclic region x <= y <= z, x + yz <= 1, (1-z) + (1-x)(1-y) <= 1."""
    x, y, z = points[:, 0], points[:, 1], points[:, 2]
    return (
        (x <= y)
        & (y <= z)
        & (x + y * z <= 1.0)
        & ((1.0 - z) + (1.0 - x) * (1.0 - y) <= 1.0)
    )


def sample_ordered_cyclic(count: int, seed: int, batch: int = 1 << 20) -> np.ndarray:
    """Draw ``count`` points uniform on the ordered cyclic region by
    rejection from the unit cube (acceptance rate p3/6, about 0.105).

    Deterministic for fixed (count, seed).  Returns an array of shape
    (count, 3) with rows satisfying x <= y <= z.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    stream = UniformStream(seed)
    blocks: list[np.ndarray] = []
    have = 0
    while have < count:
        pts = stream.next_matrix(batch, 3)
        accepted = pts[ordered_cyclic_mask(pts)]
        blocks.append(accepted)
        have += len(accepted)
    return np.vstack(blocks)[:count]
