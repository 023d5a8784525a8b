import itertools
import math
import random

import pytest

from pdmetric.assignment import (
    EXHAUSTIVE_LIMIT,
    bottleneck_assignment,
    exhaustive_min,
    hopcroft_karp,
    hungarian,
    lex_smallest_assignment,
    min_cost_assignment,
)
from pdmetric.errors import SizeLimitError
from pdmetric.metric_core import INF


def brute_total(costs):
    """Plain-python oracle: the minimum assignment cost over permutations."""
    n = len(costs)
    return min(
        math.fsum(costs[i][perm[i]] for i in range(n))
        for perm in itertools.permutations(range(n))
    )


def brute_minimax(costs):
    n = len(costs)
    return min(
        max(costs[i][perm[i]] for i in range(n))
        for perm in itertools.permutations(range(n))
    )


def random_matrix(rng, n, with_inf=0.0):
    return [
        [INF if rng.random() < with_inf else rng.uniform(0.0, 10.0) for _ in range(n)]
        for _ in range(n)
    ]


def test_hungarian_matches_brute_force():
    rng = random.Random(424242)
    for _ in range(60):
        n = rng.randint(1, 7)
        costs = random_matrix(rng, n)
        total, perm, u, v = hungarian(costs)
        assert total == pytest.approx(brute_total(costs), abs=1e-9)
        assert sorted(perm) == list(range(n))
        assert total == pytest.approx(
            math.fsum(costs[i][perm[i]] for i in range(n)), abs=1e-9
        )


def test_hungarian_duals_are_feasible_and_tight():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(1, 7)
        costs = random_matrix(rng, n)
        total, perm, u, v = hungarian(costs)
        for i in range(n):
            for j in range(n):
                assert u[i] + v[j] <= costs[i][j] + 1e-9
        # Complementary slackness and strong duality.
        for i in range(n):
            assert u[i] + v[perm[i]] == pytest.approx(costs[i][perm[i]], abs=1e-8)
        assert math.fsum(u) + math.fsum(v) == pytest.approx(total, abs=1e-8)


def test_min_cost_assignment_empty():
    result = min_cost_assignment([])
    assert result.total == 0.0
    assert result.permutation == ()
    assert result.u == () and result.v == ()


def test_min_cost_assignment_with_infinite_entries():
    costs = [
        [1.0, INF],
        [INF, 2.0],
    ]
    result = min_cost_assignment(costs)
    assert result.total == 3.0
    assert result.permutation == (0, 1)
    assert result.u is not None
    # Duals certify the optimum over the finite edges.
    assert math.fsum(result.u) + math.fsum(result.v) == pytest.approx(3.0)


def test_min_cost_assignment_infeasible():
    costs = [
        [INF, INF],
        [1.0, 1.0],
    ]
    result = min_cost_assignment(costs)
    assert result.total == INF
    assert sorted(result.permutation) == [0, 1]
    assert result.u is None and result.v is None


def test_min_cost_assignment_matches_brute_with_sparse_inf():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(1, 6)
        costs = random_matrix(rng, n, with_inf=0.2)
        expected = brute_total(costs)
        got = min_cost_assignment(costs).total
        if math.isinf(expected):
            assert math.isinf(got)
        else:
            assert got == pytest.approx(expected, abs=1e-9)


def test_bottleneck_assignment_matches_brute():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(1, 7)
        costs = random_matrix(rng, n, with_inf=0.1)
        value, perm = bottleneck_assignment(costs)
        expected = brute_minimax(costs)
        if math.isinf(expected):
            assert math.isinf(value)
        else:
            assert value == pytest.approx(expected, abs=0.0)
            # The reported value is attained by the reported permutation.
            assert max(costs[i][perm[i]] for i in range(n)) == value


def test_bottleneck_empty():
    assert bottleneck_assignment([]) == (0.0, ())


def test_hopcroft_karp():
    # Left 0 connects to both, left 1 only to 0: perfect matching exists.
    size, match = hopcroft_karp([[0, 1], [0]], 2)
    assert size == 2
    assert match[1] == 0 and match[0] == 1
    # Both rows demand the same single column: no perfect matching.
    size, match = hopcroft_karp([[0], [0]], 2)
    assert size == 1
    size, match = hopcroft_karp([[], []], 2)
    assert size == 0


def test_exhaustive_min_matches_pure_python():
    rng = random.Random(99)
    for p in (1.0, 2.0, 3.5, INF):
        for _ in range(20):
            n = rng.randint(1, 6)
            costs = random_matrix(rng, n)
            got = exhaustive_min(costs, p)
            if p == INF:
                expected = brute_minimax(costs)
            else:
                expected = min(
                    math.fsum(costs[i][perm[i]] ** p for i in range(n)) ** (1.0 / p)
                    for perm in itertools.permutations(range(n))
                )
            assert got == pytest.approx(expected, rel=1e-12)


def test_exhaustive_min_guard():
    n = EXHAUSTIVE_LIMIT + 1
    costs = [[1.0] * n for _ in range(n)]
    with pytest.raises(SizeLimitError):
        exhaustive_min(costs, 1.0)


def test_lex_smallest_assignment_breaks_ties():
    # Every permutation has the same total; the identity is lexicographically
    # least.
    costs = [[1.0] * 4 for _ in range(4)]
    perm = lex_smallest_assignment(costs, 4.0)
    assert perm == (0, 1, 2, 3)
    # Two optimal permutations: (0, 1) and (1, 0); prefer (0, 1).
    costs = [[2.0, 2.0], [2.0, 2.0]]
    assert lex_smallest_assignment(costs, 4.0) == (0, 1)


def test_lex_smallest_assignment_respects_optimality():
    costs = [
        [0.0, 5.0],
        [5.0, 0.0],
    ]
    assert lex_smallest_assignment(costs, 0.0) == (0, 1)
