import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from relchar import config
from relchar.errors import GuardExceeded, RelcharError
from relchar.group_core import builtins as B
from relchar.structure.lattice import (
    chief_factor_pairs,
    chief_series,
    enumerate_subgroups,
    is_p_solvable,
    minimal_normal_subgroups,
    normal_subgroups,
)
from relchar.structure.series import (
    NONSOLVABLE,
    commutator_subgroup,
    derived_length,
    derived_series,
    fitting_height,
    fitting_subgroup,
    is_nilpotent,
    is_solvable,
    lower_central_series,
)
from relchar.structure.subgroup import generated_subgroup, normal_closure, trivial_subgroup, whole_group
from relchar.structure.sylow import (
    has_normal_p_complement,
    is_p_group,
    o_p,
    o_p_residual,
    p_part,
    prime_factors,
    sylow_subgroup,
)

from conftest import group, normal_of_order, small_keys, tag


def elements_of_order(G, n):
    return [i for i in range(G.order) if int(G.orders[i]) == n]


def test_generated_subgroup_examples():
    S3 = group("s3")
    assert generated_subgroup(S3, [elements_of_order(S3, 3)[0]]).order == 3
    assert generated_subgroup(S3, []).order == 1
    Q8 = group("q8")
    fours = elements_of_order(Q8, 4)
    i = fours[0]
    j = next(g for g in fours if g not in generated_subgroup(Q8, [i]))
    assert generated_subgroup(Q8, [i, j]).order == 8


def test_normal_closure_examples():
    S4 = group("s4")
    transposition = next(i for i in range(24) if [len(c) for c in S4.perm(i).cycles()] == [2])
    assert normal_closure(S4, [transposition]).order == 24
    assert normal_closure(S4, []).order == 1
    double = next(i for i in range(24) if [len(c) for c in S4.perm(i).cycles()] == [2, 2])
    assert normal_closure(S4, [double]).order == 4


def test_derived_series_examples():
    series, dl = derived_series(group("s4"))
    assert series.orders() == [24, 12, 4, 1] and dl == 3
    assert derived_length(group("c6")) == 1
    assert derived_length(group("a5")) == NONSOLVABLE
    assert not is_solvable(group("a5"))
    assert derived_length(group("trivial")) == 0


def test_lower_central_examples():
    _, nil, res = lower_central_series(group("q8"))
    assert nil and res.order == 1
    _, nil, res = lower_central_series(group("s3"))
    assert not nil and res.order == 3
    series, nil, res = lower_central_series(group("c12"))
    assert nil and res.order == 1
    assert commutator_subgroup(res, whole_group(group("c12"))) == res


def test_fitting_examples():
    S4 = group("s4")
    assert fitting_subgroup(S4).order == 4
    assert fitting_height(S4) == 3
    assert fitting_subgroup(group("q16")).order == 16
    assert fitting_height(group("q16")) == 1
    assert fitting_subgroup(group("sl23")).order == 8
    with pytest.raises(RelcharError):
        fitting_height(group("a5"))


def test_sylow_examples():
    S4 = group("s4")
    P = sylow_subgroup(S4, 2)
    assert P.order == 8 and not P.is_abelian()
    assert sylow_subgroup(S4, 5).order == 1
    assert o_p(group("sl23"), 2) == tag("sl23", "q8")
    with pytest.raises(ValueError):
        sylow_subgroup(S4, 4)


def test_p_residual_examples():
    S3 = group("s3")
    assert o_p_residual(S3, 2).order == 3
    ok, K = has_normal_p_complement(S3, 2)
    assert ok and K.order == 3
    ok, K = has_normal_p_complement(group("q8"), 2)
    assert ok and K.order == 1
    # the 3'-elements of SL(2,3) generate Q8, a normal 3-complement;
    # it is p = 2 that fails, since the 3-elements generate everything
    ok, K = has_normal_p_complement(group("sl23"), 3)
    assert ok and K == tag("sl23", "q8")
    ok, K = has_normal_p_complement(group("sl23"), 2)
    assert not ok and K is None
    assert o_p_residual(group("sl23"), 2).order == 24


def test_p_part():
    assert p_part(48, 2) == 16
    assert p_part(7, 2) == 1
    assert p_part(216, 3) == 27
    assert prime_factors(360) == (2, 3, 5)


def test_normal_subgroup_examples():
    assert [N.order for N in normal_subgroups(group("s4"))] == [1, 4, 12, 24]
    assert [N.order for N in normal_subgroups(group("a5"))] == [1, 60]
    assert [N.order for N in normal_subgroups(group("trivial"))] == [1]
    G = group("gl23")
    assert [N.order for N in normal_subgroups(G, tag("gl23", "sl23"))] == [1, 2, 8, 24]
    assert [N.order for N in minimal_normal_subgroups(group("s4"))] == [4]


def test_solvability_examples():
    S4 = group("s4")
    assert is_solvable(S4) and all(is_p_solvable(S4, p) for p in (2, 3, 5))
    assert not is_p_solvable(group("a5"), 2)
    assert is_p_solvable(group("a5"), 7)
    assert is_solvable(group("c10"))


def test_enumerate_subgroups_examples():
    assert len(enumerate_subgroups(group("s3"))) == 6
    assert len(enumerate_subgroups(group("trivial"))) == 1
    assert sorted(H.order for H in enumerate_subgroups(group("q8"))) == [1, 2, 4, 4, 4, 8]
    # S4 has 30 subgroups
    assert len(enumerate_subgroups(group("s4"))) == 30
    with pytest.raises(GuardExceeded):
        enumerate_subgroups(group("s6"))


def test_enumerate_subgroups_guard_override():
    previous = config.set_guards(subgroup_enumeration=10)
    try:
        with pytest.raises(GuardExceeded):
            enumerate_subgroups(B.symmetric(4))
    finally:
        config.set_guards(previous)


@pytest.mark.parametrize("key", small_keys(720))
def test_structure_invariants(key):
    G = group(key)
    normals = normal_subgroups(G)
    for N in normals:
        assert N.is_normal()
        assert G.order % N.order == 0
        F = fitting_subgroup(N)
        assert is_nilpotent(F) and F.is_normal()
        for p in prime_factors(N.order):
            assert o_p(N, p) <= F
            R = o_p_residual(N, p)
            assert R.is_normal()
            assert is_p_group(R, p) or N.order // R.order % p == 0 or R == N
            # every normal subgroup with p-group quotient contains O^p(N)
            for M in normals:
                if M <= N and p_part(N.order // M.order, p) == N.order // M.order:
                    assert R <= M
            brute = any(M <= N and M.order == N.order // p_part(N.order, p) for M in normals)
            assert has_normal_p_complement(N, p)[0] == brute
        for M in normals:
            if is_nilpotent(M) and M <= N:
                assert M <= F
        series, _ = derived_series(N)
        assert all(T.is_normal() for T in series.terms)


@pytest.mark.parametrize("key", [k for k in small_keys(720) if is_solvable(group(k))])
def test_chief_factors_elementary_abelian(key):
    G = group(key)
    for Y, X in chief_factor_pairs(G):
        size = X.order // Y.order
        p = prime_factors(size)
        assert len(p) == 1
        for x in X.members:
            assert int(G.orders[x]) == 1 or Y.mask[G.power(int(x), p[0])]
    series = chief_series(G)
    assert series.terms[0].order == G.order and series.terms[-1].order == 1


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["s4", "gl23", "d24", "agl1_11", "berger216", "s3xs3"]), st.data())
def test_commutator_symmetric_and_normal(key, data):
    G = group(key)
    normals = normal_subgroups(G)
    A = data.draw(st.sampled_from(normals))
    B_ = data.draw(st.sampled_from(normals))
    C = commutator_subgroup(A, B_)
    assert C == commutator_subgroup(B_, A)
    assert C.is_normal()
    assert C <= A and C <= B_
    assert trivial_subgroup(G) <= C
