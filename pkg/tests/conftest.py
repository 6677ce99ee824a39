"""Shared fixtures: mutation classes and cached algebra builds."""

from functools import lru_cache

import pytest

from cthh.algebra import build_algebra
from cthh.fields import FieldSpec
from cthh.quiver import Quiver, dynkin_seed, enumerate_class
from cthh.relations import generate_relations


@lru_cache(maxsize=None)
def mutation_class(family, rank):
    return tuple(enumerate_class(dynkin_seed(family, rank)))


@lru_cache(maxsize=None)
def cached_algebra(q: Quiver, characteristic: int):
    return build_algebra(q, generate_relations(q), FieldSpec(characteristic))


def quiver_from_canonical(text: str) -> Quiver:
    """Inverse of canonical_form's ascii encoding "n|s>t;s>t;..."."""
    head, _, body = text.partition("|")
    arrows = []
    if body:
        for part in body.split(";"):
            s, _, t = part.partition(">")
            arrows.append((int(s), int(t)))
    return Quiver(int(head), tuple(arrows))


@pytest.fixture(scope="session")
def classes():
    return {
        (fam, rk): mutation_class(fam, rk)
        for fam, rk in [
            ("A", 2), ("A", 3), ("A", 4), ("A", 5), ("A", 6), ("A", 7),
            ("D", 4), ("D", 5), ("D", 6),
            ("E", 6),
        ]
    }
