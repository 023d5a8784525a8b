import math
import random

import pytest

from pdmetric.diagram import diagram_from_list, empty_diagram
from pdmetric.errors import DomainError, PreconditionError
from pdmetric.kr_duality import (
    dual_objective,
    duality_gap,
    feasibility_violation,
    kr_certificate,
    mcshane_extend,
    support_function,
    tightness_violation,
)
from pdmetric.metric_core import INF
from pdmetric.spaces import halfplane_quotient
from pdmetric.wasserstein import wasserstein_value

SPACE = halfplane_quotient(INF, 1.0)


def make(points):
    return diagram_from_list(points, SPACE)


def test_certificate_on_known_instance():
    alpha = make([(0.0, 2.0), (3.0, 4.0), (3.0, 4.0)])
    beta = make([(0.0, 4.0)])
    cert = kr_certificate(alpha, beta)
    assert cert.primal_value == pytest.approx(3.0)
    assert cert.dual_value == pytest.approx(3.0, abs=1e-8)
    assert cert.has_certificate
    assert cert.n == 3 and cert.m == 1 and cert.r == 4
    assert len(cert.y) == 2 * cert.r
    assert feasibility_violation(cert) <= 1e-12
    assert tightness_violation(cert) <= 1e-8


def test_support_function_reproduces_dual_value():
    alpha = make([(0.0, 2.0), (1.0, 5.0)])
    beta = make([(0.0, 4.0), (6.0, 7.0), (2.0, 3.0)])
    cert = kr_certificate(alpha, beta)
    h = support_function(cert)
    assert dual_objective(h, alpha, beta) == pytest.approx(cert.dual_value, abs=1e-8)
    assert dual_objective(h, alpha, beta) == pytest.approx(
        wasserstein_value(alpha, beta, 1.0), abs=1e-8)
    # Every support point carries a value; missing points are rejected.
    for point in h.order:
        assert point in h
    with pytest.raises(DomainError):
        h.value((99.0, 100.0))


def test_support_function_handles_coincident_points():
    # The same point on both sides forces equal potentials there.
    alpha = make([(0.0, 2.0)])
    beta = make([(0.0, 2.0)])
    cert = kr_certificate(alpha, beta)
    h = support_function(cert)
    assert h.value((0.0, 2.0)) == pytest.approx(h.value((0.0, 2.0)))
    assert cert.primal_value == 0.0


def test_mcshane_extension_agrees_and_is_lipschitz():
    rng = random.Random(23)
    alpha = make([(0.0, 2.0), (1.0, 5.0), (4.0, 9.0)])
    beta = make([(0.0, 4.0)])
    cert = kr_certificate(alpha, beta)
    h = support_function(cert)
    for point, value in h.items():
        assert mcshane_extend(h, point) == pytest.approx(value, abs=1e-9)
    probes = [SPACE.sample_point(rng) for _ in range(30)] + list(h.order)
    values = {x: mcshane_extend(h, x) for x in probes}
    for x in probes:
        for y in probes:
            assert values[x] - values[y] <= SPACE.dist(x, y) + 1e-12


def test_mcshane_requires_support():
    cert = kr_certificate(empty_diagram(SPACE), empty_diagram(SPACE))
    h = support_function(cert)
    with pytest.raises(PreconditionError):
        mcshane_extend(h, (0.0, 1.0))


def test_duality_gap_zero_at_optimum():
    alpha = make([(0.0, 2.0), (3.0, 4.0)])
    beta = make([(0.0, 4.0)])
    cert = kr_certificate(alpha, beta)
    h = support_function(cert)
    assert duality_gap(alpha, beta, h) == pytest.approx(0.0, abs=1e-8)


def test_duality_gap_nonnegative_for_feasible_candidates():
    rng = random.Random(71)
    alpha = make([(0.0, 2.0), (3.0, 4.0)])
    beta = make([(0.0, 4.0), (5.0, 6.0)])
    support = sorted(set(alpha.expand()) | set(beta.expand()) | {SPACE.basepoint},
                     key=SPACE.sort_key)
    for _ in range(50):
        anchor = rng.choice(support)
        value = rng.uniform(-2.0, 2.0)
        candidate = {x: value - SPACE.dist(x, anchor) for x in support}
        assert duality_gap(alpha, beta, candidate) >= -1e-9


def test_duality_gap_rejects_non_lipschitz_candidate():
    alpha = make([(0.0, 2.0)])
    beta = make([(0.0, 4.0)])
    candidate = {
        (0.0, 2.0): 10.0,
        (0.0, 4.0): 0.0,
        SPACE.basepoint: 0.0,
    }
    with pytest.raises(PreconditionError):
        duality_gap(alpha, beta, candidate)


def test_duality_gap_requires_basepoint_value_when_sizes_differ():
    alpha = make([(0.0, 2.0), (3.0, 4.0)])
    beta = make([(0.0, 4.0)])
    candidate = {
        (0.0, 2.0): 0.5,
        (3.0, 4.0): 0.0,
        (0.0, 4.0): 0.0,
    }
    with pytest.raises(PreconditionError):
        duality_gap(alpha, beta, candidate)
    # With equal sizes the basepoint value is not consulted.
    gamma = make([(0.0, 2.0)])
    delta = make([(0.0, 4.0)])
    assert duality_gap(gamma, delta, {(0.0, 2.0): 0.0, (0.0, 4.0): 0.0}) >= 0.0


def test_infinite_primal_has_no_certificate():
    space = halfplane_quotient(INF, 1.0, extended=True)
    alpha = diagram_from_list([(0.0, INF)], space)
    beta = empty_diagram(space)
    cert = kr_certificate(alpha, beta)
    assert cert.primal_value == INF
    assert not cert.has_certificate
    assert cert.y is None


def test_empty_instance_certificate():
    cert = kr_certificate(empty_diagram(SPACE), empty_diagram(SPACE))
    assert cert.primal_value == 0.0
    assert cert.dual_value == 0.0
    assert cert.has_certificate
    assert feasibility_violation(cert) <= 0.0
    assert duality_gap(empty_diagram(SPACE), empty_diagram(SPACE), {}) == 0.0
