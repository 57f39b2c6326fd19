"""Seeded random instance generation."""

from __future__ import annotations

import random

from .errors import InputError
from .spider import Spider


def random_spider(
    rng: random.Random,
    legs: int,
    colours: int,
    max_leg_len: int,
) -> Spider:
    """Draw a uniform random spider: leg lengths in 1..max_leg_len, every
    vertex colour (centre included) uniform over 0..colours-1."""
    if legs < 3:
        raise InputError("a spider needs at least 3 legs")
    if colours < 1 or max_leg_len < 1:
        raise InputError("colours and max_leg_len must be positive")
    centre = rng.randrange(colours)
    leg_tuples = tuple(
        tuple(rng.randrange(colours) for _ in range(rng.randint(1, max_leg_len)))
        for _ in range(legs)
    )
    return Spider(centre_colour=centre, legs=leg_tuples)


def random_coloured_graph(
    rng: random.Random,
    vertices: int,
    colours: int,
    edge_probability: float = 0.3,
):
    """Random connected coloured graph: a random spanning tree plus
    independent extra edges."""
    from .graph import ColouredGraph

    if vertices < 1:
        raise InputError("need at least one vertex")
    colour_list = [rng.randrange(colours) for _ in range(vertices)]
    edges = set()
    order = list(range(vertices))
    rng.shuffle(order)
    for i in range(1, vertices):
        u = order[i]
        v = order[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    for u in range(vertices):
        for v in range(u + 1, vertices):
            if rng.random() < edge_probability:
                edges.add((u, v))
    return ColouredGraph.from_edges(colours, colour_list, sorted(edges))
