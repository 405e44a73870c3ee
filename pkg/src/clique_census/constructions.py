"""Reference graph families with exact predicted clique counts.

The two extremal families are powers of paths and complete multipartite
graphs with parts of size two; both have closed-form clique counts that
the counting engine must reproduce exactly.  A seeded G(n, p) generator
rounds out the set for randomized cross-checks.
"""

from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import log2

from .graph import Graph

FAMILIES = (
    "path_power",
    "complete_multipartite",
    "complete",
    "cycle",
    "random_gnp",
    "petersen",
)


def path_power(n: int, k: int) -> Graph:
    """k-th power of the path on vertices 0..n-1: edge iff 0 < |i-j| <= k."""
    if n < 1:
        raise ValueError("path_power needs n >= 1")
    if k < 0:
        raise ValueError("path_power needs k >= 0")
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, min(i + k, n - 1) + 1)
    ]
    return Graph(n, edges)


def complete_multipartite_222(k: int) -> Graph:
    """Complete k-partite graph with parts {2i, 2i+1} of size two."""
    if k < 1:
        raise ValueError("complete_multipartite_222 needs k >= 1")
    n = 2 * k
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if u // 2 != v // 2
    ]
    return Graph(n, edges)


def complete(n: int) -> Graph:
    if n < 0:
        raise ValueError("complete needs n >= 0")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def random_gnp(n: int, p, seed: int = 0) -> Graph:
    """G(n, p) with edges drawn pair by pair in lexicographic order.

    Uses random.Random(seed), whose random() stream is stable across
    Python releases, so a (n, p, seed) triple pins the graph exactly.
    """
    if n < 0:
        raise ValueError("random_gnp needs n >= 0")
    if not 0 <= p <= 1:
        raise ValueError("random_gnp needs 0 <= p <= 1")
    rng = random.Random(seed)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph(n, edges)


def petersen() -> Graph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return Graph(10, edges)


@dataclass
class ConstructionSpec:
    """A named family plus its parameters; seed applies to random_gnp only."""

    family: str
    params: dict = field(default_factory=dict)
    seed: int | None = None

    def to_json(self) -> dict:
        params = {
            key: (str(value) if isinstance(value, Fraction) else value)
            for key, value in self.params.items()
        }
        out = {"family": self.family, "params": params}
        if self.seed is not None:
            out["seed"] = self.seed
        return out


_INT_RE = re.compile(r"-?\d+\Z")


def _parse_value(text: str):
    if _INT_RE.match(text):
        return int(text)
    return Fraction(text)


def parse_construction_spec(text: str) -> ConstructionSpec:
    """Parse the inline form family:key=val,key=val or a bare family name."""
    family, _, tail = text.partition(":")
    family = family.strip()
    if family not in FAMILIES:
        raise ValueError(f"unknown construction family {family!r}")
    params = {}
    seed = None
    if tail:
        for item in tail.split(","):
            key, sep, value = item.partition("=")
            if not sep:
                raise ValueError(f"bad construction parameter {item!r}")
            key = key.strip()
            if key == "seed":
                seed = int(value)
            else:
                params[key] = _parse_value(value.strip())
    return ConstructionSpec(family, params, seed)


def spec_from_json(data) -> ConstructionSpec:
    if isinstance(data, str):
        data = json.loads(data)
    family = data["family"]
    if family not in FAMILIES:
        raise ValueError(f"unknown construction family {family!r}")
    params = {
        key: (_parse_value(value) if isinstance(value, str) else value)
        for key, value in data.get("params", {}).items()
    }
    seed = data.get("seed")
    return ConstructionSpec(family, params, None if seed is None else int(seed))


def generate(spec: ConstructionSpec) -> Graph:
    family = spec.family
    params = spec.params
    if family == "path_power":
        return path_power(int(params["n"]), int(params["k"]))
    if family == "complete_multipartite":
        return complete_multipartite_222(int(params["k"]))
    if family == "complete":
        return complete(int(params["n"]))
    if family == "cycle":
        return cycle(int(params["n"]))
    if family == "random_gnp":
        seed = 0 if spec.seed is None else spec.seed
        return random_gnp(int(params["n"]), params["p"], seed)
    if family == "petersen":
        return petersen()
    raise ValueError(f"unknown construction family {family!r}")


def predicted_clique_count(spec: ConstructionSpec):
    """Exact closed-form clique count, or None when the family has none."""
    family = spec.family
    params = spec.params
    if family == "path_power":
        n = int(params["n"])
        k = int(params["k"])
        if n < k + 1:
            return 2**n
        return 2**k * (n - k + 1)
    if family == "complete_multipartite":
        return 3 ** int(params["k"])
    if family == "complete":
        return 2 ** int(params["n"])
    if family == "cycle":
        n = int(params["n"])
        return 8 if n == 3 else 2 * n + 1
    if family == "petersen":
        # triangle-free: the empty set, 10 vertices, 15 edges
        return 26
    return None


@dataclass(frozen=True)
class LowerBoundReport:
    """Exponent of the 3^k clique count of K_{2,...,2} against its t."""

    k: int
    t: int
    clique_count: int
    exponent: float
    limit: float


def lower_bound_constant(k: int) -> LowerBoundReport:
    """Per-k exponent log2(3^k)/t with t = floor(3k/2) + 1.

    The graph K_{2,...,2} on k parts has 3^k cliques and no subdivision
    of the complete graph on t = floor(3k/2) + 1 vertices, so the best
    possible per-t exponent is at least k*log2(3)/t, approaching
    (2/3)*log2(3) from below as k grows.
    """
    if k < 1:
        raise ValueError("lower_bound_constant needs k >= 1")
    t = (3 * k) // 2 + 1
    return LowerBoundReport(
        k=k,
        t=t,
        clique_count=3**k,
        exponent=k * log2(3) / t,
        limit=(2.0 / 3.0) * log2(3),
    )
