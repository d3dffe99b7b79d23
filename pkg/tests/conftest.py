from functools import lru_cache

import pytest

from relchar.corpus import builtin_corpus, corpus_entry, tagged_normals
from relchar.structure.lattice import normal_subgroups


@lru_cache(maxsize=None)
def group(key):
    """Corpus groups are cached so their tables are built once per session."""
    return corpus_entry(key).build()


def tag(key, name):
    G = group(key)
    return tagged_normals(G)[name]


def small_keys(limit):
    return [e.key for e in builtin_corpus() if e.order <= limit]


def normal_of_order(G, order):
    found = [N for N in normal_subgroups(G) if N.order == order]
    assert len(found) == 1, f"{len(found)} normal subgroups of order {order}"
    return found[0]


@pytest.fixture
def G():
    return group
