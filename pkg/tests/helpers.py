"""Shared strategies and deterministic generators for the test suite."""

import random
from fractions import Fraction

import hypothesis.strategies as st

from vandersolve.symfuncs import NodeSet

small_fractions = st.fractions(min_value=-8, max_value=8, max_denominator=8)


def node_sets(min_size: int = 1, max_size: int = 8):
    """Strategy for NodeSets of small, pairwise-distinct rationals."""
    return st.lists(
        small_fractions, min_size=min_size, max_size=max_size, unique=True,
    ).map(lambda xs: NodeSet(tuple(xs)))


def random_fraction(rng: random.Random, span: int = 30, max_den: int = 12) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, max_den))


def random_node_set(rng: random.Random, p: int) -> NodeSet:
    """p distinct random rationals, order deterministic for a given rng state."""
    nodes, seen = [], set()
    while len(nodes) < p:
        f = random_fraction(rng)
        if f not in seen:
            seen.add(f)
            nodes.append(f)
    return NodeSet(tuple(nodes))


def random_values(rng: random.Random, count: int) -> list:
    return [random_fraction(rng) for _ in range(count)]
