"""JSON encoding of spaces, diagrams, matchings, and certificates.

JSON has no inf literal, so infinite values travel as the strings "inf"
and "-inf" in both directions.  Result payloads round floats to 12
significant digits; diagram atom coordinates round-trip at full precision.
"""

from __future__ import annotations

import json
import math

from .diagram import Diagram
from .errors import DomainError
from .kr_duality import DualCertificate, SupportFunction
from .metric_core import INF, FiniteSpace, PointedSpace
from .spaces import (
    AnagramSpace,
    HalfPlaneSpace,
    IntervalSpace,
    StarGraphSpace,
)
from .wasserstein import Matching

SIGNIFICANT_DIGITS = 12


def parse_float(obj) -> float:
    if obj == "inf":
        return INF
    if obj == "-inf":
        return -INF
    return float(obj)


def parse_exponent_text(text: str) -> float:
    from .metric_core import as_exponent

    return as_exponent(parse_float(text))


def _round_sig(value: float) -> float:
    if value == 0.0:
        return 0.0  # never emit -0.0
    return float(f"{value:.{SIGNIFICANT_DIGITS}g}")


def json_ready(obj, round_floats: bool = True):
    """Recursively convert to JSON-safe data; floats may be rounded."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        if math.isinf(obj):
            return "inf" if obj > 0 else "-inf"
        return _round_sig(obj) if round_floats else obj
    if isinstance(obj, dict):
        return {k: json_ready(v, round_floats) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [json_ready(v, round_floats) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dump_json(obj, round_floats: bool = True) -> str:
    return json.dumps(json_ready(obj, round_floats), indent=2)


# -- spaces -----------------------------------------------------------------

SPACE_IDS = ("halfplane", "intervals", "anagram", "stargraph", "finite")


def finite_space_from_json(data: dict) -> FiniteSpace:
    try:
        labels = data["labels"]
        matrix = [[parse_float(v) for v in row] for row in data["matrix"]]
        basepoint = data["basepoint"]
    except (KeyError, TypeError, ValueError) as exc:
        raise DomainError(f"malformed finite space payload: {exc}") from None
    return FiniteSpace(labels, matrix, basepoint)


def finite_space_to_json(space: FiniteSpace) -> dict:
    return {
        "labels": list(space.labels),
        "basepoint": space.basepoint,
        "matrix": [[v for v in row] for row in space.matrix],
    }


def space_from_spec(spec: dict) -> PointedSpace:
    """Build a pointed space from an id plus parameters.

    The half-plane quotient needs the Wasserstein exponent p at
    construction time, since its ground metric depends on it.
    """
    kind = spec.get("id")
    if kind == "halfplane":
        return HalfPlaneSpace(
            parse_float(spec.get("q", INF)),
            parse_float(spec.get("p", 1.0)),
            bool(spec.get("extended", False)),
        )
    if kind == "intervals":
        return IntervalSpace(spec.get("metric_kind", "hausdorff"))
    if kind == "anagram":
        alphabet = spec.get("alphabet")
        return AnagramSpace(alphabet) if alphabet else AnagramSpace()
    if kind == "stargraph":
        generators = [tuple(g) if isinstance(g, list) else g for g in spec["generators"]]
        zero = spec.get("zero", 0)
        zero = tuple(zero) if isinstance(zero, list) else zero
        return StarGraphSpace(generators, zero)
    if kind == "finite":
        return finite_space_from_json(spec)
    raise DomainError(f"unknown space id {kind!r}; known: {', '.join(SPACE_IDS)}")


# -- diagrams ---------------------------------------------------------------


def diagram_to_json(diagram: Diagram) -> dict:
    space = diagram.space
    return {
        "space": getattr(space, "space_id", "custom"),
        "atoms": [[space.point_to_json(x), count] for x, count in diagram.atoms],
    }


def diagram_from_json(data: dict, space: PointedSpace) -> Diagram:
    declared = data.get("space")
    space_id = getattr(space, "space_id", "custom")
    if declared is not None and declared != space_id:
        raise DomainError(
            f"diagram declares space {declared!r} but {space_id!r} was supplied"
        )
    points = []
    try:
        for encoded, count in data["atoms"]:
            count = int(count)
            if count < 1:
                raise DomainError("atom counts must be positive")
            points.extend([space.point_from_json(encoded)] * count)
    except DomainError:
        raise
    except (KeyError, IndexError, TypeError, ValueError) as exc:
        # Structural problems are parse errors, not domain errors.
        raise ValueError(f"malformed diagram payload: {exc}") from None
    return Diagram.from_points(points, space)


def load_diagram(path: str, space: PointedSpace) -> Diagram:
    with open(path, "r", encoding="utf-8") as handle:
        data = json.load(handle)
    return diagram_from_json(data, space)


# -- results ----------------------------------------------------------------


def matching_to_json(matching: Matching) -> dict:
    return {
        "p": matching.p,
        "total": matching.total,
        "pairs": [
            {"left": pair.left, "right": pair.right, "cost": pair.cost}
            for pair in matching.pairs
        ],
    }


def _support_point_json(space, point):
    if point == space.basepoint:
        return "basepoint"
    return space.point_to_json(point)


def certificate_to_json(cert: DualCertificate, h: SupportFunction | None) -> dict:
    out: dict = {"primal": cert.primal_value, "dual": cert.dual_value}
    if cert.has_certificate:
        out["y"] = list(cert.y)
        if h is not None:
            out["h"] = [
                [_support_point_json(cert.space, point), value]
                for point, value in h.items()
            ]
    return out
