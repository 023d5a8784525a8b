"""p-Wasserstein and bottleneck distances between diagrams.

Both diagrams are padded with copies of the basepoint so that each side
has r = n + m entries, and the distance is the minimum over permutations
of the lp combination of matched ground distances.  For finite p the
assignment runs on the entrywise p-th powers; p = inf is the bottleneck
(minimax) problem solved by threshold search.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .assignment import (
    EXHAUSTIVE_LIMIT,
    bottleneck_assignment,
    exhaustive_min,
    lex_smallest_assignment,
    lex_smallest_bottleneck,
    min_cost_assignment,
)
from .diagram import Diagram
from .errors import DomainError, PreconditionError, SizeLimitError
from .metric_core import INF, QuotientSpace, as_exponent, lp_norm

BASEPOINT = "basepoint"

# Entrywise p-th powers drown in rounding once p is large enough; past this
# threshold the minimax (bottleneck) solution is returned instead, which the
# true value approaches at rate r ** (1/p).
LARGE_EXPONENT = 64.0


class MatchedPair(NamedTuple):
    left: int | str  # index into the left diagram's expansion, or "basepoint"
    right: int | str
    cost: float


@dataclass(frozen=True)
class Matching:
    """A realizing matching: r pairs covering every atom of both diagrams.

    Indices refer to the canonical expansions of the inputs; padded slots
    carry the "basepoint" marker.  total == lp_norm(costs, p) always holds,
    including total == inf when only forbidden pairings remain.
    """

    p: float
    total: float
    pairs: tuple[MatchedPair, ...]

    def costs(self) -> list[float]:
        return [pair.cost for pair in self.pairs]


def _require_same_space(alpha: Diagram, beta: Diagram) -> None:
    if alpha.space.signature != beta.space.signature:
        raise DomainError("diagrams live over different spaces")


def _padded_costs(alpha: Diagram, beta: Diagram, dist, to_base) -> list[list[float]]:
    """(n+m) x (n+m) matrix: atoms of alpha + pads vs atoms of beta + pads."""
    left = alpha.expand()
    right = beta.expand()
    n, m = len(left), len(right)
    left_base = [float(to_base(x)) for x in left]
    right_base = [float(to_base(y)) for y in right]
    costs: list[list[float]] = []
    for i in range(n):
        x = left[i]
        row = [float(dist(x, y)) for y in right]
        row.extend([left_base[i]] * n)
        costs.append(row)
    for _ in range(m):
        costs.append(right_base + [0.0] * n)
    return costs


def _space_costs(alpha: Diagram, beta: Diagram) -> list[list[float]]:
    space = alpha.space
    x0 = space.basepoint
    return _padded_costs(alpha, beta, space.dist, lambda x: space.dist(x, x0))


def _power_matrix(costs, p: float) -> list[list[float]]:
    return [[c**p for c in row] for row in costs]


def _solve_value(costs, p: float) -> float:
    """Optimal lp value on a padded matrix, without building a matching."""
    if not costs:
        return 0.0
    if p == INF or p >= LARGE_EXPONENT:
        value, _ = bottleneck_assignment(costs)
        return value
    if p == 1.0:
        return min_cost_assignment(costs).total
    result = min_cost_assignment(_power_matrix(costs, p))
    if math.isinf(result.total):
        return INF
    n = len(costs)
    return lp_norm([costs[i][result.permutation[i]] for i in range(n)], p)


def _solve_matching(costs, p: float) -> tuple[int, ...]:
    """Optimal permutation, lexicographically smallest among optima."""
    if p == INF or p >= LARGE_EXPONENT:
        value, perm = bottleneck_assignment(costs)
        if math.isinf(value):
            return perm
        return lex_smallest_bottleneck(costs, value)
    work = costs if p == 1.0 else _power_matrix(costs, p)
    result = min_cost_assignment(work)
    if math.isinf(result.total):
        return result.permutation
    return lex_smallest_assignment(work, result.total)


def _build_matching(alpha: Diagram, beta: Diagram, costs, perm, p: float) -> Matching:
    n = alpha.size
    m = beta.size
    pairs = []
    for i, j in enumerate(perm):
        left = i if i < n else BASEPOINT
        right = j if j < m else BASEPOINT
        if left == BASEPOINT and right == BASEPOINT:
            continue  # zero-cost padding, carries no information
        pairs.append(MatchedPair(left, right, costs[i][j]))
    total = lp_norm([pair.cost for pair in pairs], p)
    return Matching(p=p, total=total, pairs=tuple(pairs))


def wasserstein_value(alpha: Diagram, beta: Diagram, p) -> float:
    """W_p(alpha, beta) without constructing the realizing matching."""
    p = as_exponent(p)
    _require_same_space(alpha, beta)
    return _solve_value(_space_costs(alpha, beta), p)


def wasserstein(alpha: Diagram, beta: Diagram, p) -> tuple[float, Matching]:
    """W_p(alpha, beta) together with a realizing matching.

    Among optimal matchings the lexicographically smallest permutation of
    the padded index set is returned, so output is deterministic.
    """
    p = as_exponent(p)
    _require_same_space(alpha, beta)
    costs = _space_costs(alpha, beta)
    perm = _solve_matching(costs, p)
    matching = _build_matching(alpha, beta, costs, perm, p)
    return matching.total, matching


def bottleneck(alpha: Diagram, beta: Diagram) -> tuple[float, Matching]:
    """The bottleneck distance W_inf and a realizing matching."""
    return wasserstein(alpha, beta, INF)


def brute_force_wasserstein(alpha: Diagram, beta: Diagram, p) -> float:
    """W_p by enumerating all (n+m)! permutations; the reference oracle.

    Refuses inputs with n + m beyond the enumeration guard.
    """
    p = as_exponent(p)
    _require_same_space(alpha, beta)
    r = alpha.size + beta.size
    if r > EXHAUSTIVE_LIMIT:
        raise SizeLimitError(
            f"brute force limited to n + m <= {EXHAUSTIVE_LIMIT}, got {r}"
        )
    return exhaustive_min(_space_costs(alpha, beta), p)


def wasserstein_quotient_reduced(alpha: Diagram, beta: Diagram, p, *,
                                 ambient_dist=None, subset_dist=None) -> float:
    """W_p over a quotient space computed from ambient data only.

    Ground costs are ambient distances between atoms and distance-to-subset
    against the basepoint, never the quotient metric itself.  The diagrams
    must live over a quotient space whose exponent equals p; mixing
    exponents computes a different quantity, so it is rejected.
    """
    p = as_exponent(p)
    _require_same_space(alpha, beta)
    space = alpha.space
    if ambient_dist is None or subset_dist is None:
        if not isinstance(space, QuotientSpace):
            raise PreconditionError(
                "ambient_dist and subset_dist are required unless the "
                "diagrams live over a quotient space"
            )
        ambient_dist = ambient_dist or space.ambient.dist
        subset_dist = subset_dist or space.subset_dist
    if isinstance(space, QuotientSpace) and space.p != p:
        raise PreconditionError(
            f"quotient exponent {space.p} does not match requested p = {p}"
        )
    costs = _padded_costs(alpha, beta, ambient_dist, subset_dist)
    return _solve_value(costs, p)
