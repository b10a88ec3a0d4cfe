"""Shared helpers for building random fixtures."""

from __future__ import annotations

import random

from multispace import (
    AmbientId,
    FpMatrix,
    MultiVectorSpace,
    OperationPolicy,
    Subspace,
    TaggedVector,
    span,
)


def random_subspace(rng: random.Random, ambient: AmbientId, max_gens: int | None = None) -> Subspace:
    g = rng.randint(0, ambient.n if max_gens is None else max_gens)
    entries = tuple(rng.randrange(ambient.p) for _ in range(g * ambient.n))
    return span(ambient, FpMatrix(ambient.p, g, ambient.n, entries))


def random_one_ambient_instance(
    rng: random.Random,
    policy: OperationPolicy,
    primes=(2, 3),
    max_dim: int = 4,
    max_components: int = 3,
    label: str = "A",
) -> MultiVectorSpace:
    ambient = AmbientId(label, rng.choice(primes), rng.randint(1, max_dim))
    k = rng.randint(1, max_components)
    components = [random_subspace(rng, ambient) for _ in range(k)]
    while all(c.dim == 0 for c in components):
        components[0] = random_subspace(rng, ambient)
    return MultiVectorSpace(tuple(components), policy)


def union_elements(space: MultiVectorSpace, cap: int = 729) -> set[TaggedVector]:
    out: set[TaggedVector] = set()
    for comp in space.components:
        out.update(TaggedVector(comp.ambient, v) for v in comp.enumerate(cap))
    return out


def line_space(ambient: AmbientId, *rows: tuple[int, ...]) -> Subspace:
    return span(ambient, FpMatrix.from_rows(ambient.p, rows, cols=ambient.n))


def three_lines_gf2() -> MultiVectorSpace:
    ambient = AmbientId("A", 2, 2)
    return MultiVectorSpace(
        (
            line_space(ambient, (1, 0)),
            line_space(ambient, (0, 1)),
            line_space(ambient, (1, 1)),
        ),
        OperationPolicy.TOTAL,
    )
