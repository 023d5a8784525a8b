"""Dual certificates for the 1-Wasserstein distance.

The padded assignment problem is a linear program over doubly stochastic
matrices whose vertices are permutations, so the optimal matching comes
with dual potentials y in R^(2r): y[i] - y[r+j] <= d(a_i, b_j) everywhere,
with equality along the optimal matching, and equal objective values.  The
potentials assemble into a 1-Lipschitz function h on the atoms, and the
McShane formula extends h to the whole space without increasing the
Lipschitz constant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

from .assignment import min_cost_assignment
from .diagram import Diagram
from .errors import DomainError, PreconditionError
from .metric_core import INF
from .wasserstein import _require_same_space, _space_costs

FEASIBILITY_TOLERANCE = 1e-12
COINCIDENCE_TOLERANCE = 1e-9


@dataclass(frozen=True)
class DualCertificate:
    """Primal optimum with matching and dual potentials of equal value.

    left_points / right_points are the padded supports (atoms then
    basepoint copies), each of length r = n + m.  y has length 2r: row
    potentials first, then column potentials negated so that feasibility
    reads y[i] - y[r+j] <= d(a_i, b_j).  When the primal is infinite no
    potentials exist and y is None.
    """

    space: object
    primal_value: float
    dual_value: float | None
    y: tuple[float, ...] | None
    permutation: tuple[int, ...]
    left_points: tuple
    right_points: tuple
    n: int
    m: int

    @property
    def r(self) -> int:
        return len(self.left_points)

    @property
    def has_certificate(self) -> bool:
        return self.y is not None


def kr_certificate(alpha: Diagram, beta: Diagram) -> DualCertificate:
    """Solve W_1 and return matching plus dual potentials.

    An infinite primal value (possible only over spaces with infinite
    ground distances) is reported without potentials.
    """
    _require_same_space(alpha, beta)
    space = alpha.space
    costs = _space_costs(alpha, beta)
    n, m = alpha.size, beta.size
    r = n + m
    left = tuple(alpha.expand()) + (space.basepoint,) * m
    right = tuple(beta.expand()) + (space.basepoint,) * n
    result = min_cost_assignment(costs)
    if result.u is None:
        return DualCertificate(
            space, INF, None, None, result.permutation, left, right, n, m
        )
    y = tuple(result.u) + tuple(-v for v in result.v)
    dual = math.fsum(result.u) + math.fsum(result.v)
    return DualCertificate(
        space, result.total, dual, y, result.permutation, left, right, n, m
    )


def feasibility_violation(cert: DualCertificate) -> float:
    """Largest excess of y[i] - y[r+j] over d(a_i, b_j); <= 0 when feasible.

    Pairs at infinite ground distance impose no constraint.
    """
    if not cert.has_certificate:
        raise PreconditionError("certificate has no potentials")
    worst = -INF
    r = cert.r
    for i, a in enumerate(cert.left_points):
        for j, b in enumerate(cert.right_points):
            d = cert.space.dist(a, b)
            if math.isinf(d):
                continue
            worst = max(worst, cert.y[i] - cert.y[r + j] - d)
    return worst


def tightness_violation(cert: DualCertificate) -> float:
    """Largest |y[i] - y[r+perm(i)] - d| along the realizing matching."""
    if not cert.has_certificate:
        raise PreconditionError("certificate has no potentials")
    worst = 0.0
    r = cert.r
    for i, j in enumerate(cert.permutation):
        d = cert.space.dist(cert.left_points[i], cert.right_points[j])
        worst = max(worst, abs(cert.y[i] - cert.y[r + j] - d))
    return worst


@dataclass(frozen=True)
class SupportFunction:
    """The potentials read as a function on the atoms plus basepoint.

    Well defined because feasibility plus tightness force equal potentials
    on coincident points; construction asserts that.
    """

    space: object
    order: tuple
    values: Mapping

    def value(self, point) -> float:
        key = self.space.canonical(point)
        if key not in self.values:
            raise DomainError(f"{point!r} is not in the support")
        return self.values[key]

    def items(self):
        return [(point, self.values[point]) for point in self.order]

    def __contains__(self, point) -> bool:
        return self.space.canonical(point) in self.values


def support_function(cert: DualCertificate) -> SupportFunction:
    """Assemble h with h(a_i) = y[i], h(b_j) = y[r+j]."""
    if not cert.has_certificate:
        raise PreconditionError("certificate has no potentials")
    r = cert.r
    values: dict = {}
    order: list = []
    pairs = list(zip(cert.left_points, cert.y[:r])) + list(
        zip(cert.right_points, cert.y[r:])
    )
    for point, val in pairs:
        key = cert.space.canonical(point)
        if key in values:
            if abs(values[key] - val) > COINCIDENCE_TOLERANCE:
                raise AssertionError(
                    f"potentials disagree on coincident point {point!r}: "
                    f"{values[key]} vs {val}"
                )
            continue
        values[key] = val
        order.append(key)
    return SupportFunction(cert.space, tuple(order), values)


def dual_objective(h, alpha: Diagram, beta: Diagram) -> float:
    """sum h(a_i) - sum h(b_j) + (m - n) h(x0).

    h may be a SupportFunction or a plain mapping.  The basepoint value is
    only consulted when the diagram sizes differ.
    """
    lookup = h.value if isinstance(h, SupportFunction) else h.__getitem__
    n, m = alpha.size, beta.size
    terms = [lookup(x) for x in alpha.expand()]
    terms += [-lookup(y) for y in beta.expand()]
    total = math.fsum(terms)
    if n != m:
        try:
            base = lookup(alpha.space.basepoint)
        except (KeyError, DomainError):
            raise PreconditionError(
                "candidate must assign a value to the basepoint when the "
                "diagram sizes differ"
            ) from None
        total += (m - n) * base
    return total


def mcshane_extend(h: SupportFunction, x, space=None) -> float:
    """Largest 1-Lipschitz extension: max over support of h(c) - d(x, c).

    Agrees with h on the support.  If x is infinitely far from every
    support point the extension there is -inf; with a nonempty support over
    a finite-distance space this cannot happen.
    """
    space = space or h.space
    if not h.order:
        raise PreconditionError("support is empty")
    return max(h.values[c] - space.dist(x, c) for c in h.order)


def duality_gap(alpha: Diagram, beta: Diagram, candidate) -> float:
    """W_1(alpha, beta) minus the candidate's dual objective.

    The candidate must be 1-Lipschitz on the padded support (violations up
    to 1e-12 are treated as rounding); weak duality then makes the gap
    nonnegative, with zero exactly at optimal potentials.
    """
    from .wasserstein import wasserstein_value

    _require_same_space(alpha, beta)
    space = alpha.space
    points = list(dict.fromkeys(
        alpha.expand() + beta.expand() + [space.basepoint]
    ))
    lookup = candidate.value if isinstance(candidate, SupportFunction) else candidate.__getitem__
    covered = []
    for point in points:
        try:
            covered.append((point, lookup(point)))
        except (KeyError, DomainError):
            if point == space.basepoint and alpha.size == beta.size:
                continue
            raise PreconditionError(f"candidate gives no value at {point!r}") from None
    for i, (x, hx) in enumerate(covered):
        for y, hy in covered[i + 1:]:
            d = space.dist(x, y)
            if math.isinf(d):
                continue
            if abs(hx - hy) > d + FEASIBILITY_TOLERANCE:
                raise PreconditionError(
                    f"candidate is not 1-Lipschitz: |h({x!r}) - h({y!r})| = "
                    f"{abs(hx - hy)} > {d}"
                )
    return wasserstein_value(alpha, beta, 1) - dual_objective(candidate, alpha, beta)
