"""Randomized verification suites.

Each suite draws seeded random instances, runs a batch of checks, and
returns a plain dict report (suitable for JSON output and for assertions
in tests).  Suites are registered in SUITES and exposed through the CLI.

Determinism: all randomness flows through random.Random seeded from the
suite seed and a per-check tag, so reports are reproducible byte for byte
for a fixed seed regardless of process or platform.
"""

from __future__ import annotations

import math
import os
import random
import zlib
from typing import Callable, Sequence

from .assignment import exhaustive_min, min_cost_assignment
from .diagram import Diagram, diagram_from_list, empty_diagram, include
from .errors import PreconditionError
from .kr_duality import (
    dual_objective,
    duality_gap,
    feasibility_violation,
    kr_certificate,
    mcshane_extend,
    support_function,
    tightness_violation,
)
from .metric_core import (
    FAIL,
    INF,
    PASS,
    FiniteSpace,
    Report,
    check_axioms_sampled,
    check_metric_axioms,
    check_p_strengthened,
    check_subset_dist_compatible,
    lp_norm,
    p_strengthen,
    product_metric,
    quotient_metric,
    remetrize,
)
from .spaces import (
    AnagramSpace,
    FiniteAbelianGroup,
    IntervalModuleSpace,
    IntervalSpace,
    anagram_distance,
    halfplane_quotient,
    interval_half_length,
    interval_interleaving,
    word_diagram,
    word_metric,
    word_metric_via_wasserstein,
)
from .universality import (
    REAL_LINE,
    check_maximality,
    check_restriction_trichotomy,
    converse_stability,
    extend_lipschitz,
    lipschitz_norm,
)
from .wasserstein import (
    brute_force_wasserstein,
    wasserstein,
    wasserstein_quotient_reduced,
    wasserstein_value,
)

DEFAULT_SEED = 20177
SEED_ENV_VAR = "PDMETRIC_SEED"

VALUE_TOL = 1e-9
FEASIBILITY_TOL = 1e-12
GAP_TOL = 1e-8
RATIO_REL_TOL = 1e-12

P_VALUES = (1.0, 1.5, 2.0, INF)
Q_VALUES = (1.0, 2.0, INF)


def resolve_seed(seed: int | None = None) -> int:
    """Explicit seed, else the PDMETRIC_SEED environment variable, else the default."""
    if seed is not None:
        return int(seed)
    env = os.environ.get(SEED_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise PreconditionError(
                f"{SEED_ENV_VAR} must be an integer, got {env!r}"
            ) from None
    return DEFAULT_SEED


def _rng(seed: int, tag: str) -> random.Random:
    # str hashes are salted per process, so derive the stream id from crc32.
    return random.Random((seed & 0xFFFFFFFF) * 1_000_003 + zlib.crc32(tag.encode()))


def random_diagram(space, rng: random.Random, max_size: int, min_size: int = 0) -> Diagram:
    size = rng.randint(min_size, max_size)
    return diagram_from_list([space.sample_point(rng) for _ in range(size)], space)


def random_finite_space(rng: random.Random, size: int = 4, scale: float = 3.0) -> FiniteSpace:
    """A random finite metric space: symmetric positive entries closed under shortest paths."""
    labels = [f"x{i}" for i in range(size)]
    matrix = [[0.0] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            matrix[i][j] = matrix[j][i] = rng.uniform(0.25 * scale, scale)
    for k in range(size):
        for i in range(size):
            for j in range(size):
                through = matrix[i][k] + matrix[k][j]
                if through < matrix[i][j]:
                    matrix[i][j] = through
    return FiniteSpace(labels, matrix, labels[0])


def _finite_diagram(space: FiniteSpace, rng: random.Random, max_size: int) -> Diagram:
    size = rng.randint(0, max_size)
    return diagram_from_list([rng.choice(space.labels) for _ in range(size)], space)


def _sample_spaces(seed: int, tag: str, p: float):
    """The rotation of spaces the randomized suites draw instances from."""
    rng = _rng(seed, tag + "/finite")
    return [
        ("halfplane-q1", halfplane_quotient(1.0, p)),
        ("halfplane-q2", halfplane_quotient(2.0, p)),
        ("halfplane-qinf", halfplane_quotient(INF, p)),
        ("finite", random_finite_space(rng)),
    ]


def _check(name: str, ok: bool, witness: dict | None = None) -> Report:
    return Report(name, PASS if ok else FAIL, None if ok else witness)


def _suite_report(suite: str, seed: int, checks: Sequence[Report]) -> dict:
    return {
        "suite": suite,
        "seed": seed,
        "passed": all(c.ok for c in checks),
        "checks": [c.as_dict() for c in checks],
    }


# ---------------------------------------------------------------------------
# metric-axioms


def metric_axioms_suite(seed: int | None = None, *, triples: int = 1000,
                        axiom_triples: int = 300) -> dict:
    """Sampled metric axioms for the concrete spaces, the quotient and
    strengthened constructions, and for W_p itself on random diagram triples."""
    seed = resolve_seed(seed)
    checks: list[Report] = []

    named_spaces = [
        ("intervals-hausdorff", IntervalSpace("hausdorff")),
        ("intervals-dissimilarity", IntervalSpace("dissimilarity")),
        ("interval-module", IntervalModuleSpace()),
        ("anagram", AnagramSpace()),
    ]
    for q in Q_VALUES:
        for p in P_VALUES:
            named_spaces.append(
                (f"halfplane-q{q:g}-p{p:g}", halfplane_quotient(q, p))
            )
    base = random_finite_space(_rng(seed, "axioms/finite"), size=5)
    named_spaces.append(("finite", base))
    named_spaces.append(("finite-strengthened", p_strengthen(base, 2.0)))
    named_spaces.append(
        ("finite-quotient",
         quotient_metric(base, lambda x: base.dist(x, "x1"), 1.0, label="x1-class"))
    )
    named_spaces.append(
        ("product", product_metric(halfplane_quotient(INF, 1.0), base, 2.0))
    )

    for name, space in named_spaces:
        report = check_axioms_sampled(space, _rng(seed, f"axioms/{name}"), axiom_triples)
        checks.append(Report(f"axioms[{name}]", report.status, report.witness))

    # Finite spaces admit the exhaustive checker as well.
    exhaustive = check_metric_axioms(base)
    checks.append(_check("axioms-exhaustive[finite]", exhaustive.is_extended_pseudometric,
                         exhaustive.as_dict()))

    # Quotients are p-strengthened and compatible with the subset distance.
    rng = _rng(seed, "axioms/quotient-strengthened")
    for q in Q_VALUES:
        for p in P_VALUES:
            space = halfplane_quotient(q, p)
            sampled_pairs = [(space.sample_point(rng), space.sample_point(rng))
                             for _ in range(axiom_triples)]
            ok = check_p_strengthened(space, p, sampled_pairs)
            checks.append(_check(f"quotient-strengthened[q={q:g},p={p:g}]", ok,
                                 {"q": q, "p": p}))
            ambient_pairs = [(space.ambient.sample_point(rng),
                              space.ambient.sample_point(rng))
                             for _ in range(axiom_triples)]
            ok = check_subset_dist_compatible(space.ambient, space.subset_dist,
                                              ambient_pairs)
            checks.append(_check(f"subset-dist-compatible[q={q:g},p={p:g}]", ok,
                                 {"q": q, "p": p}))

    # W_p is symmetric and satisfies the triangle inequality; triples counts
    # instances per (p, q) combination.
    for p in P_VALUES:
        for q in Q_VALUES:
            space = halfplane_quotient(q, p)
            rng = _rng(seed, f"wp-axioms/p{p:g}/q{q:g}")
            worst_sym = 0.0
            worst_tri = -INF
            witness = None
            for index in range(max(1, triples)):
                a = random_diagram(space, rng, 3)
                b = random_diagram(space, rng, 3)
                c = random_diagram(space, rng, 3)
                ab = wasserstein_value(a, b, p)
                sym = abs(ab - wasserstein_value(b, a, p))
                tri = ab - (wasserstein_value(a, c, p) + wasserstein_value(c, b, p))
                if sym > worst_sym:
                    worst_sym = sym
                if tri > worst_tri:
                    worst_tri = tri
                    witness = {"alpha": repr(a), "beta": repr(b), "gamma": repr(c)}
                if index < 50 and wasserstein_value(a, a, p) != 0.0:
                    worst_tri = INF
                    witness = {"alpha": repr(a), "identity": "W_p(a, a) != 0"}
                    break
            ok = worst_sym <= VALUE_TOL and worst_tri <= VALUE_TOL
            checks.append(_check(
                f"wasserstein-pseudometric[p={p:g},q={q:g}]", ok,
                {"symmetry_gap": worst_sym, "triangle_excess": worst_tri,
                 "witness": witness}))
    return _suite_report("metric-axioms", seed, checks)


# ---------------------------------------------------------------------------
# padding


def padding_suite(seed: int | None = None, *, instances: int = 300) -> dict:
    """Adding basepoint atoms never changes a diagram or any W_p value."""
    seed = resolve_seed(seed)
    checks: list[Report] = []
    for p in P_VALUES:
        spaces = _sample_spaces(seed, f"padding/p{p:g}", p)
        rng = _rng(seed, f"padding/p{p:g}")
        per_space = max(1, instances // len(spaces))
        for name, space in spaces:
            sampler = _finite_diagram if isinstance(space, FiniteSpace) else random_diagram
            ok = True
            witness = None
            for _ in range(per_space):
                alpha = sampler(space, rng, 3)
                beta = sampler(space, rng, 3)
                pad_a = alpha + diagram_from_list(
                    [space.basepoint] * rng.randint(1, 4), space)
                pad_b = beta + diagram_from_list(
                    [space.basepoint] * rng.randint(1, 4), space)
                if pad_a != alpha or pad_b != beta:
                    ok = False
                    witness = {"reason": "canonical form kept a basepoint atom",
                               "alpha": repr(alpha)}
                    break
                plain = wasserstein_value(alpha, beta, p)
                padded = wasserstein_value(pad_a, pad_b, p)
                if plain != padded:
                    ok = False
                    witness = {"alpha": repr(alpha), "beta": repr(beta),
                               "plain": plain, "padded": padded}
                    break
            checks.append(_check(f"padding[{name},p={p:g}]", ok, witness))

    # The empty diagram is the additive identity and is at distance 0 from itself.
    space = halfplane_quotient(2.0, 1.0)
    empty = empty_diagram(space)
    ok = (wasserstein_value(empty, empty, 1.0) == 0.0
          and empty + empty == empty
          and len(empty) == 0)
    checks.append(_check("padding[empty]", ok, None))
    return _suite_report("padding", seed, checks)


# ---------------------------------------------------------------------------
# subadditivity


def subadditivity_suite(seed: int | None = None, *, quadruples: int = 500) -> dict:
    """W_p(a + b, c + d) <= ||(W_p(a, c), W_p(b, d))||_p on random quadruples."""
    seed = resolve_seed(seed)
    checks: list[Report] = []
    for p in P_VALUES:
        spaces = _sample_spaces(seed, f"subadd/p{p:g}", p)
        rng = _rng(seed, f"subadd/p{p:g}")
        per_space = max(1, quadruples // len(spaces))
        for name, space in spaces:
            sampler = _finite_diagram if isinstance(space, FiniteSpace) else random_diagram
            worst = -INF
            witness = None
            for _ in range(per_space):
                a = sampler(space, rng, 3)
                b = sampler(space, rng, 3)
                c = sampler(space, rng, 3)
                d = sampler(space, rng, 3)
                joint = wasserstein_value(a + b, c + d, p)
                split = lp_norm(
                    [wasserstein_value(a, c, p), wasserstein_value(b, d, p)], p)
                excess = joint - split
                if excess > worst:
                    worst = excess
                    witness = {"a": repr(a), "b": repr(b), "c": repr(c),
                               "d": repr(d), "joint": joint, "split": split}
            ok = worst <= VALUE_TOL
            checks.append(_check(f"subadditivity[{name},p={p:g}]", ok,
                                 None if ok else witness))
    return _suite_report("subadditivity", seed, checks)


# ---------------------------------------------------------------------------
# monotonicity


def monotonicity_suite(seed: int | None = None, *, pairs: int = 500) -> dict:
    """p <= q implies W_q <= W_p, with the n-fold singleton ratio exactly n^(1/p - 1/q)."""
    seed = resolve_seed(seed)
    checks: list[Report] = []
    exponents = (1.0, 1.5, 2.0, 4.0, INF)
    space = halfplane_quotient(INF, 1.0)
    rng = _rng(seed, "monotone/pairs")
    worst = -INF
    witness = None
    for _ in range(pairs):
        alpha = random_diagram(space, rng, 3)
        beta = random_diagram(space, rng, 3)
        values = [wasserstein_value(alpha, beta, p) for p in exponents]
        for i in range(len(exponents) - 1):
            excess = values[i + 1] - values[i]
            if excess > worst:
                worst = excess
                witness = {"alpha": repr(alpha), "beta": repr(beta),
                           "p": exponents[i], "q": exponents[i + 1],
                           "W_p": values[i], "W_q": values[i + 1]}
    ok = worst <= VALUE_TOL
    checks.append(_check("monotone-in-p", ok, None if ok else witness))

    # n copies of a unit-persistence point against the empty diagram: the
    # distance is n^(1/p), so W_p / W_q = n^(1/p - 1/q) up to roundoff.
    worst_rel = 0.0
    witness = None
    for n in (1, 2, 4, 8):
        alpha = diagram_from_list([(0.0, 2.0)] * n, space)
        empty = empty_diagram(space)
        for i, p in enumerate(P_VALUES):
            for q in P_VALUES[i:]:
                wp = wasserstein_value(alpha, empty, p)
                wq = wasserstein_value(alpha, empty, q)
                expected = n ** ((1.0 / p if p != INF else 0.0)
                                 - (1.0 / q if q != INF else 0.0))
                rel = abs(wp / wq - expected) / expected
                if rel > worst_rel:
                    worst_rel = rel
                    witness = {"n": n, "p": p, "q": q, "ratio": wp / wq,
                               "expected": expected}
    ok = worst_rel <= RATIO_REL_TOL
    checks.append(_check("singleton-ratio", ok, None if ok else witness))
    return _suite_report("monotonicity", seed, checks)


# ---------------------------------------------------------------------------
# oracle


def oracle_suite(seed: int | None = None, *, instances: int = 500,
                 max_size: int = 4) -> dict:
    """The assignment solver against brute-force enumeration, plus the
    closed-form anagram distance against the generic W_1 solver."""
    seed = resolve_seed(seed)
    checks: list[Report] = []
    for p in P_VALUES:
        spaces = _sample_spaces(seed, f"oracle/p{p:g}", p)
        rng = _rng(seed, f"oracle/p{p:g}")
        per_space = max(1, instances // len(spaces))
        for name, space in spaces:
            sampler = _finite_diagram if isinstance(space, FiniteSpace) else random_diagram
            worst = 0.0
            witness = None
            for _ in range(per_space):
                alpha = sampler(space, rng, max_size)
                beta = sampler(space, rng, max_size)
                solver = wasserstein_value(alpha, beta, p)
                brute = brute_force_wasserstein(alpha, beta, p)
                gap = (abs(solver - brute)
                       if solver != brute else 0.0)  # inf == inf counts as exact
                if gap > worst or math.isnan(gap):
                    worst = gap
                    witness = {"alpha": repr(alpha), "beta": repr(beta),
                               "solver": solver, "brute": brute}
            ok = worst <= VALUE_TOL
            checks.append(_check(f"oracle[{name},p={p:g}]", ok,
                                 None if ok else witness))

    # Assignment duals: feasible and tight at the reported optimum.
    rng = _rng(seed, "oracle/duals")
    worst = -INF
    witness = None
    for _ in range(100):
        n = rng.randint(1, 7)
        costs = [[rng.uniform(0.0, 5.0) for _ in range(n)] for _ in range(n)]
        result = min_cost_assignment(costs)
        assert result.u is not None and result.v is not None
        slack = max(result.u[i] + result.v[j] - costs[i][j]
                    for i in range(n) for j in range(n))
        drift = abs(math.fsum(result.u) + math.fsum(result.v) - result.total)
        direct = exhaustive_min(costs, 1.0)
        gap = max(slack, drift, abs(result.total - direct))
        if gap > worst:
            worst = gap
            witness = {"n": n, "slack": slack, "drift": drift,
                       "total": result.total, "exhaustive": direct}
    ok = worst <= VALUE_TOL
    checks.append(_check("assignment-duals", ok, None if ok else witness))

    # Anagram distance: closed form against the W_1 solver on random words.
    space = AnagramSpace()
    rng = _rng(seed, "oracle/anagram")
    letters = space.alphabet[1:]
    worst = 0.0
    witness = None
    for _ in range(100):
        s = "".join(rng.choice(letters) for _ in range(rng.randint(0, 8)))
        t = "".join(rng.choice(letters) for _ in range(rng.randint(0, 8)))
        closed = anagram_distance(s, t, space)
        solved = wasserstein_value(word_diagram(s, space), word_diagram(t, space), 1.0)
        gap = abs(closed - solved)
        if gap > worst:
            worst = gap
            witness = {"s": s, "t": t, "closed": closed, "solved": solved}
    ok = worst <= VALUE_TOL
    checks.append(_check("anagram-closed-form", ok, None if ok else witness))
    return _suite_report("oracle", seed, checks)


# ---------------------------------------------------------------------------
# duality


def _random_lipschitz_candidate(space, support, rng: random.Random) -> dict:
    """A random 1-Lipschitz function on the support: a max of distance cones."""
    anchors = rng.sample(support, rng.randint(1, len(support)))
    values = [rng.uniform(-2.0, 2.0) for _ in anchors]
    return {
        point: max(v - space.dist(point, anchor)
                   for anchor, v in zip(anchors, values))
        for point in support
    }


def duality_suite(seed: int | None = None, *, instances: int = 200,
                  candidates_per_instance: int = 100) -> dict:
    """Kantorovich-Rubinstein certificates: zero gap, feasibility, tightness,
    a well-defined support function, Lipschitz McShane extensions, and weak
    duality against random 1-Lipschitz candidates."""
    seed = resolve_seed(seed)
    checks: list[Report] = []
    space = halfplane_quotient(INF, 1.0)
    rng = _rng(seed, "duality/instances")

    worst_gap = 0.0
    worst_feas = -INF
    worst_tight = -INF
    worst_obj = 0.0
    worst_lip = -INF
    worst_weak = -INF
    lipschitz_pairs = 0
    witness: dict | None = None
    weak_witness: dict | None = None
    for index in range(instances):
        alpha = random_diagram(space, rng, 4)
        beta = random_diagram(space, rng, 4)
        cert = kr_certificate(alpha, beta)
        if not cert.has_certificate:
            witness = {"reason": "no certificate on finite instance",
                       "alpha": repr(alpha), "beta": repr(beta)}
            worst_gap = INF
            break
        gap = abs(cert.primal_value - cert.dual_value)
        feas = feasibility_violation(cert)
        tight = tightness_violation(cert)
        h = support_function(cert)
        obj = abs(dual_objective(h, alpha, beta) - cert.dual_value)
        # The McShane extension agrees on the support and stays 1-Lipschitz
        # against fresh sample points.  Both-empty instances have nothing
        # to extend.
        lip = -INF
        if h.order:
            ext_gap = max(abs(mcshane_extend(h, c) - v) for c, v in h.items())
            obj = max(obj, ext_gap)
            probes = [space.sample_point(rng) for _ in range(4)] + list(h.order)
            extended = [mcshane_extend(h, x) for x in probes]
            for x, hx in zip(probes, extended):
                for y, hy in zip(probes, extended):
                    d = space.dist(x, y)
                    if d < INF:
                        lip = max(lip, abs(hx - hy) - d)
                        lipschitz_pairs += 1
        if gap > worst_gap:
            worst_gap = gap
            witness = {"alpha": repr(alpha), "beta": repr(beta),
                       "primal": cert.primal_value, "dual": cert.dual_value}
        worst_feas = max(worst_feas, feas)
        worst_tight = max(worst_tight, tight)
        worst_obj = max(worst_obj, obj)
        worst_lip = max(worst_lip, lip)

        # Weak duality per instance: no 1-Lipschitz candidate beats the
        # primal value.  The primal is solved once; duality_gap re-solves,
        # so it is exercised on the first candidate only.
        support = sorted(set(alpha.expand()) | set(beta.expand())
                         | {space.basepoint}, key=space.sort_key)
        for k in range(candidates_per_instance):
            candidate = _random_lipschitz_candidate(space, support, rng)
            if k == 0 and index < 20:
                margin = duality_gap(alpha, beta, candidate)
            else:
                margin = cert.primal_value - dual_objective(candidate, alpha, beta)
            if -margin > worst_weak:
                worst_weak = -margin
                weak_witness = {"alpha": repr(alpha), "beta": repr(beta),
                                "margin": margin}
    checks.append(_check("zero-gap", worst_gap <= GAP_TOL,
                         None if worst_gap <= GAP_TOL else witness))
    checks.append(_check("dual-feasibility", worst_feas <= FEASIBILITY_TOL,
                         {"violation": worst_feas}))
    checks.append(_check("tightness", worst_tight <= GAP_TOL,
                         {"violation": worst_tight}))
    checks.append(_check("support-objective", worst_obj <= GAP_TOL,
                         {"gap": worst_obj}))
    checks.append(_check("mcshane-lipschitz", worst_lip <= FEASIBILITY_TOL,
                         {"excess": worst_lip, "pairs": lipschitz_pairs}))
    ok = worst_weak <= VALUE_TOL
    checks.append(_check("weak-duality", ok, None if ok else weak_witness))

    # Degenerate case: two empty diagrams certify a zero distance.
    empty = empty_diagram(space)
    cert = kr_certificate(empty, empty)
    ok = (cert.primal_value == 0.0 and cert.dual_value == 0.0
          and cert.has_certificate and feasibility_violation(cert) <= 0.0)
    checks.append(_check("empty-certificate", ok, None))
    return _suite_report("duality", seed, checks)


# ---------------------------------------------------------------------------
# strengthening


def strengthening_suite(seed: int | None = None, *, pairs: int = 500) -> dict:
    """The p-strengthened metric changes nothing W_p can see: same diagram
    distances, restriction to singletons, idempotence, and the two-sided
    equivalence bounds between exponents."""
    seed = resolve_seed(seed)
    checks: list[Report] = []

    for p in (1.0, 2.0, INF):
        rng = _rng(seed, f"strengthen/p{p:g}")
        base = random_finite_space(rng, size=5)
        strong = p_strengthen(base, p)

        # W_p over d equals W_p over d_p.
        worst = 0.0
        witness = None
        for _ in range(pairs):
            labels = [rng.choice(base.labels) for _ in range(rng.randint(0, 4))]
            other = [rng.choice(base.labels) for _ in range(rng.randint(0, 4))]
            a_base = diagram_from_list(labels, base)
            b_base = diagram_from_list(other, base)
            a_strong = diagram_from_list(labels, strong)
            b_strong = diagram_from_list(other, strong)
            gap = abs(wasserstein_value(a_base, b_base, p)
                      - wasserstein_value(a_strong, b_strong, p))
            if gap > worst:
                worst = gap
                witness = {"alpha": labels, "beta": other, "gap": gap}
        checks.append(_check(f"wasserstein-invariant[p={p:g}]", worst <= VALUE_TOL,
                             None if worst <= VALUE_TOL else witness))

        # Restriction of W_p along the inclusion recovers d_p on points.
        worst = 0.0
        for x in base.labels:
            for y in base.labels:
                restricted = wasserstein_value(include(x, base), include(y, base), p)
                worst = max(worst, abs(restricted - strong.dist(x, y)))
        checks.append(_check(f"restriction-is-dp[p={p:g}]", worst <= VALUE_TOL,
                             {"gap": worst}))

        # Idempotence and the sandwich d_p <= d <= 2^(1 - 1/p) d_p, sampled
        # over fresh random spaces so the pair count is honest.
        factor = 2.0 ** (1.0 - (1.0 / p if p != INF else 0.0))
        worst_idem = 0.0
        worst_low = -INF
        worst_high = -INF
        sampled = 0
        while sampled < pairs:
            fresh = random_finite_space(rng, size=5)
            fresh_strong = p_strengthen(fresh, p)
            twice = p_strengthen(fresh_strong, p)
            for x in fresh.labels:
                for y in fresh.labels:
                    dp = fresh_strong.dist(x, y)
                    worst_idem = max(worst_idem, abs(twice.dist(x, y) - dp))
                    worst_low = max(worst_low, dp - fresh.dist(x, y))
                    worst_high = max(worst_high, fresh.dist(x, y) - factor * dp)
            sampled += len(fresh.labels) ** 2
        ok = (worst_idem <= FEASIBILITY_TOL and worst_low <= FEASIBILITY_TOL
              and worst_high <= VALUE_TOL)
        checks.append(_check(f"idempotent-and-bounded[p={p:g}]", ok,
                             {"idempotence": worst_idem, "lower": worst_low,
                              "upper": worst_high, "pairs": sampled}))

        # The basepoint distance is never strengthened away.
        worst = max(abs(strong.dist(x, base.basepoint) - base.dist(x, base.basepoint))
                    for x in base.labels)
        checks.append(_check(f"basepoint-preserved[p={p:g}]", worst == 0.0,
                             {"gap": worst}))

    # Quotient metrics with exponents p <= q are uniformly equivalent:
    # quotient_q <= quotient_p <= 2^(1/p - 1/q) quotient_q.
    rng = _rng(seed, "strengthen/equivalence")
    ambient = halfplane_quotient(INF, 1.0).ambient
    subset_dist = halfplane_quotient(INF, 1.0).subset_dist
    worst = -INF
    witness = None
    for p, q in ((1.0, 2.0), (1.0, INF), (2.0, INF), (1.5, 2.0)):
        lower = quotient_metric(ambient, subset_dist, p, label="diagonal")
        upper = quotient_metric(ambient, subset_dist, q, label="diagonal")
        factor = 2.0 ** ((1.0 / p) - (1.0 / q if q != INF else 0.0))
        for _ in range(pairs // 4):
            x = ambient.sample_point(rng)
            y = ambient.sample_point(rng)
            dq = upper.dist(x, y)
            dp = lower.dist(x, y)
            excess = max(dq - dp, dp - factor * dq)
            if excess > worst:
                worst = excess
                witness = {"p": p, "q": q, "x": x, "y": y, "d_p": dp, "d_q": dq}
    ok = worst <= VALUE_TOL
    checks.append(_check("quotient-exponent-equivalence", ok,
                         None if ok else witness))
    return _suite_report("strengthening", seed, checks)


# ---------------------------------------------------------------------------
# quotient-reduced


def quotient_reduced_suite(seed: int | None = None, *, pairs: int = 200) -> dict:
    """The reduced-cost formulation over the ambient metric matches W_p over
    the quotient metric."""
    seed = resolve_seed(seed)
    checks: list[Report] = []
    for p in P_VALUES:
        for q in Q_VALUES:
            space = halfplane_quotient(q, p)
            rng = _rng(seed, f"quotient-reduced/p{p:g}/q{q:g}")
            worst = 0.0
            witness = None
            for _ in range(pairs):
                alpha = random_diagram(space, rng, 4)
                beta = random_diagram(space, rng, 4)
                direct = wasserstein_value(alpha, beta, p)
                reduced = wasserstein_quotient_reduced(alpha, beta, p)
                gap = abs(direct - reduced) if direct != reduced else 0.0
                if gap > worst:
                    worst = gap
                    witness = {"alpha": repr(alpha), "beta": repr(beta),
                               "direct": direct, "reduced": reduced}
            ok = worst <= VALUE_TOL
            checks.append(_check(f"quotient-reduced[p={p:g},q={q:g}]", ok,
                                 None if ok else witness))
    return _suite_report("quotient-reduced", seed, checks)


# ---------------------------------------------------------------------------
# universality


def universality_suite(seed: int | None = None, *, pairs: int = 200) -> dict:
    """The extension of a Lipschitz map is Lipschitz with the same norm, the
    norm is attained on singletons, and W_p is maximal among p-subadditive
    extended pseudometrics restricting below the ground metric."""
    seed = resolve_seed(seed)
    checks: list[Report] = []

    # Total persistence of a diagram is the canonical 2-Lipschitz example.
    space = halfplane_quotient(INF, 1.0)

    def persistence(x) -> float:
        if x == space.basepoint:
            return 0.0
        return x[1] - x[0]

    rng = _rng(seed, "universality/persistence")
    worst = -INF
    witness = None
    for _ in range(pairs):
        alpha = random_diagram(space, rng, 4)
        beta = random_diagram(space, rng, 4)
        total = extend_lipschitz(persistence, alpha, REAL_LINE, 1.0)
        other = extend_lipschitz(persistence, beta, REAL_LINE, 1.0)
        excess = abs(total - other) - 2.0 * wasserstein_value(alpha, beta, 1.0)
        if excess > worst:
            worst = excess
            witness = {"alpha": repr(alpha), "beta": repr(beta), "excess": excess}
    ok = worst <= VALUE_TOL
    checks.append(_check("extension-norm-bound", ok, None if ok else witness))

    # The bound is attained: one unit-persistence point against nothing.
    alpha = diagram_from_list([(0.0, 2.0)], space)
    attained = abs(extend_lipschitz(persistence, alpha, REAL_LINE, 1.0))
    ok = abs(attained - 2.0 * wasserstein_value(alpha, empty_diagram(space), 1.0)) \
        <= VALUE_TOL
    checks.append(_check("extension-norm-attained", ok, {"value": attained}))

    # On a finite space the Lipschitz norm is exact, and the extension of a
    # random map attains it on singleton diagrams.
    rng = _rng(seed, "universality/finite")
    worst = -INF
    witness = None
    for _ in range(20):
        base = random_finite_space(rng, size=4)
        values = {label: rng.uniform(-3.0, 3.0) for label in base.labels}
        values[base.basepoint] = 0.0
        phi = values.__getitem__
        norm = lipschitz_norm(phi, base, REAL_LINE.dist)
        for _ in range(pairs // 20):
            a = _finite_diagram(base, rng, 3)
            b = _finite_diagram(base, rng, 3)
            lhs = abs(extend_lipschitz(phi, a, REAL_LINE, 1.0)
                      - extend_lipschitz(phi, b, REAL_LINE, 1.0))
            excess = lhs - norm * wasserstein_value(a, b, 1.0)
            if excess > worst:
                worst = excess
                witness = {"labels": base.labels, "values": values,
                           "alpha": repr(a), "beta": repr(b)}
        best_ratio = max(
            abs(phi(x) - phi(y)) / base.dist(x, y)
            for x in base.labels for y in base.labels if base.dist(x, y) > 0.0)
        if abs(best_ratio - norm) > VALUE_TOL:
            worst = INF
            witness = {"reason": "norm not attained on points", "norm": norm,
                       "best_ratio": best_ratio}
    ok = worst <= VALUE_TOL
    checks.append(_check("finite-extension-norm", ok, None if ok else witness))

    # Maximality: any W_q with q >= p passes, and a scaled-up candidate is
    # rejected for breaking the 1-Lipschitz precondition.
    rng = _rng(seed, "universality/maximality")
    base = random_finite_space(rng, size=3)
    for q in (1.0, 2.0, INF):
        def rho(a: Diagram, b: Diagram, _q=q) -> float:
            return wasserstein_value(a, b, _q)

        report = check_maximality(base, rho, 1.0, max_size=2,
                                  rng=_rng(seed, f"universality/max/q{q:g}"))
        checks.append(Report(f"maximality[W_{q:g}]", report.status, report.witness))

    def doubled(a: Diagram, b: Diagram) -> float:
        return 2.0 * wasserstein_value(a, b, 1.0)

    report = check_maximality(base, doubled, 1.0, max_size=2,
                              rng=_rng(seed, "universality/max/doubled"))
    ok = report.status == "precondition_failed"
    checks.append(_check("maximality-rejects-oversized", ok,
                         {"status": report.status, "witness": report.witness}))

    # Restriction trichotomy: being p-strengthened and being recovered by
    # restriction are the same property, on raw and strengthened spaces.
    rng = _rng(seed, "universality/trichotomy")
    agree = True
    witness = None
    for p in (1.0, 2.0, INF):
        for _ in range(5):
            base = random_finite_space(rng, size=4)
            for candidate in (base, p_strengthen(base, p)):
                report = check_restriction_trichotomy(candidate, p, base.labels)
                if not report.ok:
                    agree = False
                    witness = {"p": p, "witness": report.witness}
    checks.append(_check("restriction-trichotomy", agree, witness))
    return _suite_report("universality", seed, checks)


# ---------------------------------------------------------------------------
# converse-stability


def converse_stability_suite(seed: int | None = None, *, pairs: int = 200) -> dict:
    """Interleaving-flavored stability: the interleaving distance on interval
    modules is the infinity-strengthening of the Hausdorff picture, and any
    metric obtained by restricting a subadditive diagram metric is again
    bounded by the Wasserstein distance it induces."""
    seed = resolve_seed(seed)
    checks: list[Report] = []
    module_space = IntervalModuleSpace()
    hausdorff_space = IntervalSpace("hausdorff")

    # d_I = min(d_H, max of half lengths): the infinity-strengthening of the
    # Hausdorff metric once the basepoint distance is the half length.
    def hausdorff_with_half_length(x, y) -> float:
        if x.is_empty and y.is_empty:
            return 0.0
        if x.is_empty:
            return interval_half_length(y)
        if y.is_empty:
            return interval_half_length(x)
        return hausdorff_space.dist(x, y)

    pre = remetrize(module_space, hausdorff_with_half_length, label="hausdorff-half")
    strengthened = p_strengthen(pre, INF)
    rng = _rng(seed, "converse/formula")
    worst = 0.0
    witness = None
    for _ in range(pairs):
        x = module_space.sample_point(rng)
        y = module_space.sample_point(rng)
        gap = abs(strengthened.dist(x, y) - interval_interleaving(x, y))
        if gap > worst:
            worst = gap
            witness = {"x": repr(x), "y": repr(y), "gap": gap}
    ok = worst <= VALUE_TOL
    checks.append(_check("interleaving-is-strengthened-hausdorff", ok,
                         None if ok else witness))

    # Interleaving never exceeds Hausdorff, so neither do the diagram metrics.
    rng = _rng(seed, "converse/stability")
    worst = -INF
    witness = None
    for _ in range(pairs):
        points = [module_space.sample_point(rng)
                  for _ in range(rng.randint(0, 3))]
        others = [module_space.sample_point(rng)
                  for _ in range(rng.randint(0, 3))]
        soft = wasserstein_value(diagram_from_list(points, module_space),
                                 diagram_from_list(others, module_space), INF)
        hard = wasserstein_value(diagram_from_list(points, hausdorff_space),
                                 diagram_from_list(others, hausdorff_space), INF)
        excess = soft - hard
        if excess > worst:
            worst = excess
            witness = {"points": [repr(p) for p in points],
                       "others": [repr(p) for p in others],
                       "interleaving": soft, "hausdorff": hard}
    ok = worst <= VALUE_TOL
    checks.append(_check("interleaving-below-hausdorff", ok,
                         None if ok else witness))

    # Restricting a subadditive diagram metric and rebuilding W_p can only
    # grow: rho <= W_p[i* rho].  Checked for rho = W_inf over finite spaces.
    rng = _rng(seed, "converse/roundtrip")
    for p in (1.0, INF):
        base = random_finite_space(rng, size=4)

        def rho(a: Diagram, b: Diagram, _p=p) -> float:
            return wasserstein_value(a, b, _p)

        report = converse_stability(base, rho, p,
                                    rng=_rng(seed, f"converse/rt/p{p:g}"),
                                    sample_diagrams=max(10, pairs // 10))
        checks.append(Report(f"converse-stability[p={p:g}]", report.status,
                             report.witness))
    return _suite_report("converse-stability", seed, checks)


# ---------------------------------------------------------------------------
# word metric


def word_metric_suite(seed: int | None = None, *, max_order: int = 12) -> dict:
    """The BFS word metric against its realization as a minimum of W_1 over
    the star space, exhaustively over small cyclic groups and Z2 x Z2."""
    seed = resolve_seed(seed)
    checks: list[Report] = []
    for n in range(2, max_order + 1):
        group = FiniteAbelianGroup((n,))
        generators = tuple(dict.fromkeys(((1 % n,), ((-1) % n,))))
        diameter = max(word_metric(group, generators, g, group.zero)
                       for g in group.elements())
        bound = max(2 * diameter, 1)
        worst = 0.0
        witness = None
        for g in group.elements():
            for h in group.elements():
                direct = word_metric(group, generators, g, h)
                realized = word_metric_via_wasserstein(group, generators, g, h, bound)
                gap = abs(direct - realized)
                if gap > worst:
                    worst = gap
                    witness = {"n": n, "g": g, "h": h, "bfs": direct,
                               "wasserstein": realized}
        ok = worst == 0.0
        checks.append(_check(f"cyclic[{n}]", ok, None if ok else witness))

    group = FiniteAbelianGroup((2, 2))
    generators = tuple(g for g in group.elements() if g != group.zero)
    worst = 0.0
    witness = None
    for g in group.elements():
        for h in group.elements():
            direct = word_metric(group, generators, g, h)
            realized = word_metric_via_wasserstein(group, generators, g, h, 2)
            gap = abs(direct - realized)
            if gap > worst:
                worst = gap
                witness = {"g": g, "h": h, "bfs": direct, "wasserstein": realized}
    ok = worst == 0.0
    checks.append(_check("klein-four", ok, None if ok else witness))
    return _suite_report("word-metric", seed, checks)


# ---------------------------------------------------------------------------
# registry


SUITES: dict[str, Callable[..., dict]] = {
    "metric-axioms": metric_axioms_suite,
    "padding": padding_suite,
    "subadditivity": subadditivity_suite,
    "monotonicity": monotonicity_suite,
    "oracle": oracle_suite,
    "duality": duality_suite,
    "strengthening": strengthening_suite,
    "quotient-reduced": quotient_reduced_suite,
    "universality": universality_suite,
    "converse-stability": converse_stability_suite,
    "word-metric": word_metric_suite,
}

# Keyword argument each suite accepts for scaling its instance count.
_SCALE_KEYWORD = {
    "metric-axioms": "triples",
    "padding": "instances",
    "subadditivity": "quadruples",
    "monotonicity": "pairs",
    "oracle": "instances",
    "duality": "instances",
    "strengthening": "pairs",
    "quotient-reduced": "pairs",
    "universality": "pairs",
    "converse-stability": "pairs",
    "word-metric": "max_order",
}


def run_suite(name: str, seed: int | None = None, samples: int | None = None) -> dict:
    """Run one named suite, or every suite under "all"."""
    seed = resolve_seed(seed)
    if name == "all":
        reports = [run_suite(suite, seed, samples) for suite in SUITES]
        return {
            "suite": "all",
            "seed": seed,
            "passed": all(r["passed"] for r in reports),
            "suites": reports,
        }
    if name not in SUITES:
        known = ", ".join(sorted(SUITES) + ["all"])
        raise PreconditionError(f"unknown suite {name!r}; known suites: {known}")
    kwargs = {}
    if samples is not None:
        kwargs[_SCALE_KEYWORD[name]] = int(samples)
    return SUITES[name](seed, **kwargs)
