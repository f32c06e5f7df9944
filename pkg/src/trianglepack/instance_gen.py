"""Seeded interval instance generators.

Randomness comes from SplitMix64 (Steele, Lea, Flood 2014) so that any
implementation can reproduce the same instances bit for bit. Bounded integers
are drawn as ``next() % (hi - lo + 1) + lo``; the modulo bias is irrelevant at
these ranges and keeps the rule trivial to port.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .graph_core import IntervalInstance

MASK64 = (1 << 64) - 1

MODELS = ("uniform-random", "unit-interval", "nested-cliques", "disjoint-triangles", "single-clique")


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in the closed range [lo, hi]."""
        if hi < lo:
            raise ValueError(f"empty range [{lo}, {hi}]")
        return lo + self.next() % (hi - lo + 1)


@dataclass(frozen=True)
class GenSpec:
    model: str
    n: int
    seed: int = 0
    params: dict = field(default_factory=dict)

    def param(self, key, default):
        value = self.params.get(key)
        return default if value is None else value


def _uniform_random(spec, rng):
    span = int(spec.param("range", max(spec.n, 3)))
    if span < 0:
        raise ValueError("range must be non-negative")
    out = []
    for i in range(spec.n):
        a, b = rng.randint(0, span), rng.randint(0, span)
        out.append((f"v{i}", min(a, b), max(a, b)))
    return out


def _unit_interval(spec, rng):
    span = int(spec.param("range", max(spec.n, 3)))
    length = int(spec.param("length", 3))
    if span < 0 or length < 0:
        raise ValueError("range and length must be non-negative")
    out = []
    for i in range(spec.n):
        lo = rng.randint(0, span)
        out.append((f"v{i}", lo, lo + length))
    return out


def _nested_cliques(spec, rng):
    n = spec.n
    t = int(spec.param("cliques", max(1, math.isqrt(n))))
    shared = int(spec.param("shared", 2))
    if not 1 <= t <= n:
        raise ValueError(f"cliques must lie in [1, n], got {t}")
    if shared < 0:
        raise ValueError("shared must be non-negative")
    # one private vertex per block at least, so every block stays a maximal clique
    n_shared = shared * (t - 1)
    if n_shared + t > n:
        raise ValueError(f"n = {n} too small for {t} cliques with {shared} shared vertices per boundary")
    private = [1] * t
    for _ in range(n - n_shared - t):
        private[rng.randint(0, t - 1)] += 1

    out = []
    for i in range(t):
        x = 2 * i
        for _ in range(private[i]):
            out.append((f"v{len(out)}", x, x))
        if i + 1 < t:
            for _ in range(shared):
                out.append((f"v{len(out)}", x, x + 2))
    return out


def _disjoint_triangles(spec, rng):
    if spec.n % 3:
        raise ValueError(f"disjoint-triangles needs n divisible by 3, got {spec.n}")
    out = []
    for g in range(spec.n // 3):
        base = 4 * g
        for _ in range(3):
            out.append((f"v{len(out)}", base + rng.randint(0, 1), base + 2 + rng.randint(0, 1)))
    return out


def _single_clique(spec, rng):
    span = int(spec.param("range", max(spec.n, 1)))
    return [(f"v{i}", -rng.randint(0, span), rng.randint(0, span)) for i in range(spec.n)]


_BUILDERS = {
    "uniform-random": _uniform_random,
    "unit-interval": _unit_interval,
    "nested-cliques": _nested_cliques,
    "disjoint-triangles": _disjoint_triangles,
    "single-clique": _single_clique,
}


def generate(spec: GenSpec) -> IntervalInstance:
    if spec.model not in _BUILDERS:
        raise ValueError(f"unknown model {spec.model!r}; choose from {', '.join(MODELS)}")
    if spec.n < 1:
        raise ValueError(f"n must be at least 1, got {spec.n}")
    rng = SplitMix64(spec.seed)
    return IntervalInstance.from_triples(_BUILDERS[spec.model](spec, rng))
