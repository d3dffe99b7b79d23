import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from relchar import config
from relchar.errors import GroupFormatError, GuardExceeded, NotABijectionError, UnknownGroupError
from relchar.group_core import builtins as B
from relchar.group_core.io import emit, parse_group
from relchar.group_core.permgroup import PermGroup, enumerate_elements
from relchar.group_core.permutation import Permutation, element_order
from relchar.group_core.quotient import coset_action, quotient
from relchar.structure.subgroup import generated_subgroup, trivial_subgroup, whole_group

from conftest import group, normal_of_order, small_keys, tag

perms = st.integers(1, 7).flatmap(lambda n: st.permutations(range(1, n + 1)).map(Permutation))


def test_element_order_examples():
    assert element_order(Permutation.identity(4)) == 1
    assert element_order(Permutation([2, 3, 1])) == 3
    assert element_order(Permutation([2, 1, 4, 3, 5])) == 2


def test_bad_rows():
    with pytest.raises(NotABijectionError) as exc:
        Permutation([2, 1, 3, 3])
    assert exc.value.point == 3
    with pytest.raises(GroupFormatError):
        Permutation([0, 1])


@given(perms, st.data())
def test_composition_laws(p, data):
    n = p.degree
    q = data.draw(st.permutations(range(1, n + 1)).map(Permutation))
    r = data.draw(st.permutations(range(1, n + 1)).map(Permutation))
    assert (p * q) * r == p * (q * r)
    assert (p * p.inverse()).is_identity()
    assert (p * q)(1) == q(p(1))
    assert p ** element_order(p) == Permutation.identity(n)


def test_parse_examples():
    S3 = parse_group({"name": "S3", "degree": 3, "generators": [[2, 3, 1], [2, 1, 3]]})
    assert S3.order == 6 and S3.name == "S3"
    assert parse_group({"degree": 1, "generators": []}).order == 1
    with pytest.raises(NotABijectionError) as exc:
        parse_group({"degree": 4, "generators": [[2, 1, 3, 3]]})
    assert exc.value.row == 0 and exc.value.point == 3
    with pytest.raises(GroupFormatError):
        parse_group({"degree": 3, "generators": [[1, 2]]})
    with pytest.raises(GroupFormatError):
        parse_group("{not json")


def test_parse_normal_subgroups_words():
    doc = {
        "name": "S3",
        "degree": 3,
        "generators": [[2, 3, 1], [2, 1, 3]],
        "normal_subgroups": [
            {"name": "a", "generators": [[2, 3, 1]]},
            {"name": "b", "generators": ["g1*g1"]},
            {"name": "c", "generators": [{"word": [1, 1]}]},
        ],
    }
    G = parse_group(doc)
    subs = {k: generated_subgroup(G, [G.index_of(g) for g in v]) for k, v in G.tagged_normals.items()}
    assert subs["a"] == subs["b"] == subs["c"]
    assert subs["a"].order == 3
    with pytest.raises(GroupFormatError):
        parse_group({**doc, "normal_subgroups": [{"name": "x", "generators": ["g3"]}]})


@pytest.mark.parametrize("key", ["s4", "gl23", "berger216", "q8xc3"])
def test_emit_round_trip(key):
    G = group(key)
    H = parse_group(emit(G))
    assert [g.images for g in H.generators] == [g.images for g in G.generators]
    assert H.tagged_normals == G.tagged_normals
    assert H.order == G.order


def test_enumeration_is_sorted_and_stable():
    G = B.symmetric(4)
    els = G.elements
    assert len(els) == 24
    assert np.array_equal(els[0], np.arange(4))
    assert all(tuple(els[i]) < tuple(els[i + 1]) for i in range(23))
    again = B.symmetric(4).elements
    assert np.array_equal(els, again)
    assert [g.images for g in enumerate_elements(G)][0] == (1, 2, 3, 4)


def test_enumeration_guard():
    previous = config.set_guards(enumeration=100)
    try:
        with pytest.raises(GuardExceeded):
            _ = B.symmetric(5).order
    finally:
        config.set_guards(previous)


@pytest.mark.parametrize(
    "name,params,order,degree",
    [
        ("cyclic", [1], 1, 1),
        ("cyclic", [12], 12, 12),
        ("dihedral", [16], 32, 16),
        ("quaternion", [32], 32, 32),
        ("symmetric", [6], 720, 6),
        ("alternating", [5], 60, 5),
        ("elementary_abelian", [2, 4], 16, 8),
        ("agl1", [13], 156, 13),
        ("wreath_cyclic", [3, 2], 18, 6),
        ("gl23", [], 48, 8),
        ("sl23", [], 24, 8),
        ("extraspecial27", [], 27, 27),
        ("berger216", [], 216, 27),
    ],
)
def test_builtins(name, params, order, degree):
    G = B.builtin_group(name, params)
    assert G.order == order
    assert G.degree == degree
    assert math.factorial(degree) % order == 0


def test_builtin_errors():
    with pytest.raises(UnknownGroupError):
        B.builtin_group("nope")
    with pytest.raises(GroupFormatError):
        B.builtin_group("symmetric", [0])
    with pytest.raises(GroupFormatError):
        B.builtin_group("cyclic", [])


def test_gl23_tags():
    G = group("gl23")
    assert sorted(tag("gl23", t).order for t in ("sl23", "q8", "z")) == [2, 8, 24]
    N = tag("berger216", "n27")
    assert N.order == 27


def test_coset_action_examples():
    S4 = group("s4")
    V = normal_of_order(S4, 4)
    Q, phi = coset_action(S4, V)
    assert Q.order == 6 and phi.kernel == V
    Q1, phi1 = coset_action(S4, trivial_subgroup(S4))
    assert Q1.order == 24 and phi1.kernel.order == 1
    G = group("gl23")
    Q2, phi2 = quotient(G, tag("gl23", "sl23"))
    assert Q2.order == 2 and phi2.kernel == tag("gl23", "sl23")


@pytest.mark.parametrize("key", small_keys(2000))
def test_homomorphism_law_on_corpus(key):
    from relchar.structure.lattice import normal_subgroups

    G = group(key)
    for N in normal_subgroups(G):
        Q, phi = quotient(G, N)
        assert phi.check_homomorphism()
        assert Q.order * phi.kernel.order == G.order
        assert phi.kernel == N


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["s4", "d16", "gl23", "agl1_7", "q16"]), st.data())
def test_lagrange_on_random_subgroups(key, data):
    G = group(key)
    seeds = data.draw(st.lists(st.integers(0, G.order - 1), max_size=3))
    H = generated_subgroup(G, seeds)
    assert G.order % H.order == 0
    assert H.contains_all(seeds)
    Q, phi = coset_action(G, H)
    assert Q.order * phi.kernel.order == G.order
    assert phi.kernel <= H
    assert whole_group(G).order == G.order
