from fractions import Fraction

import numpy as np
import pytest

from relchar.characters.classes import class_mult_coefficient, conjugacy_classes
from relchar.characters.cyclotomic import CyclotomicValue
from relchar.characters.dixon import character_table
from relchar.characters.ops import (
    conjugate,
    constituent_degrees,
    constituents,
    det_order,
    induce,
    inertia_group,
    kernel_of,
    lift_character,
    orbit_size,
    product,
    restrict,
    table_of,
    vanishing_off,
)
from relchar.characters.table import inner_product, inner_products
from relchar.group_core.quotient import quotient
from relchar.structure.lattice import normal_subgroups
from relchar.structure.subgroup import intersection, trivial_subgroup, whole_group
from relchar.structure.sylow import prime_factors, sylow_subgroup

from conftest import group, normal_of_order, small_keys, tag


def rows_of_degree(T, d):
    return [chi for chi in T.rows if chi.degree == d]


def test_class_examples():
    assert sorted(conjugacy_classes(group("s3")).sizes) == [1, 2, 3]
    assert conjugacy_classes(group("c12")).sizes == (1,) * 12
    assert len(conjugacy_classes(group("gl23"))) == 8
    cd = conjugacy_classes(group("s4"))
    assert sum(cd.sizes) == 24 and cd.representatives[0] == 0


def test_class_mult_examples():
    cd = conjugacy_classes(group("s3"))
    r = len(cd)
    t = next(k for k in range(r) if cd.element_orders[k] == 2)
    assert class_mult_coefficient(cd, t, t, 0) == 3
    for j in range(r):
        for k in range(r):
            assert class_mult_coefficient(cd, 0, j, k) == (1 if j == k else 0)


@pytest.mark.parametrize("key", ["s4", "gl23", "q16", "agl1_7"])
def test_class_mult_counting(key):
    G = group(key)
    cd = conjugacy_classes(G)
    r = len(cd)
    for i in range(r):
        for j in range(r):
            total = sum(class_mult_coefficient(cd, i, j, k) * cd.sizes[k] for k in range(r))
            assert total == cd.sizes[i] * cd.sizes[j]
    # independence of the chosen z: brute count for every z in one class
    k = r - 1
    Ci, Cj = cd.classes[1], cd.classes[min(2, r - 1)]
    prods = G.mul(Ci[:, None], Cj[None, :]).ravel()
    counts = {int(z): int(np.sum(prods == z)) for z in cd.classes[k]}
    assert len(set(counts.values())) == 1
    assert counts[int(cd.classes[k][0])] == class_mult_coefficient(cd, 1, min(2, r - 1), k)


def test_table_examples():
    T = character_table(group("c2"))
    assert [[int(v) for v in row.values] for row in T.rows] == [[1, 1], [1, -1]]
    assert sorted(character_table(group("q8")).degrees()) == [1, 1, 1, 1, 2]
    T = character_table(group("gl23"))
    assert len(T.rows) == 8
    assert sum(d * d for d in T.degrees()) == 48
    assert T.degrees() == sorted(T.degrees())
    assert T.rows[0] == T.trivial and all(v == 1 for v in T.trivial.values)


@pytest.mark.parametrize("key", small_keys(720))
def test_table_invariants(key):
    G = group(key)
    T = character_table(G)
    cd = T.class_data
    assert len(T.rows) == len(cd)
    assert T.sum_of_squares_ok()
    ker = whole_group(G)
    for chi in T.rows:
        assert G.order % chi.degree == 0
        for k in range(len(cd)):
            # chi(g^-1) is the complex conjugate of chi(g)
            assert chi.values[cd.inverse_map[k]] == chi.values[k].conjugate()
            assert abs(complex(chi.values[k])) <= chi.degree + 1e-9
            assert chi.values[k].reduce_mod(T.dixon_prime, T.root, T.exponent) == int(T.modular_rows[chi.index][k])
        ker = intersection(ker, kernel_of(chi))
    assert ker.order == 1


def test_inner_product_examples():
    T = character_table(group("s3"))
    sign = rows_of_degree(T, 1)[1]
    for chi in T.rows:
        assert inner_product(chi, chi) == 1
        assert inner_product(T.regular_character(), chi) == chi.degree
    assert inner_product(T.trivial, sign) == 0


def test_restrict_examples():
    G = group("gl23")
    T = character_table(G)
    chi = T.rows[3]
    assert chi.degree == 2 and kernel_of(chi).order == 1
    parts = constituents(restrict(chi, trivial_subgroup(G)))
    assert [(c.degree, m) for c, m in parts] == [(1, 2)]
    assert constituent_degrees(chi, tag("gl23", "q8")) == [2]
    assert constituent_degrees(chi, tag("gl23", "z")) == [1]
    # chi_Z = 2 lambda with lambda the faithful linear character of Z
    ((lam, m),) = constituents(restrict(chi, tag("gl23", "z")))
    assert m == 2 and kernel_of(lam).order == 1

    S4 = group("s4")
    T4 = character_table(S4)
    A4 = normal_of_order(S4, 12)
    parts = constituents(restrict(rows_of_degree(T4, 2)[0], A4))
    assert len(parts) == 2 and all(c.degree == 1 and m == 1 for c, m in parts)
    assert parts[0][0] != parts[1][0]


def test_induce_examples():
    S3 = group("s3")
    A3 = normal_of_order(S3, 3)
    TA = table_of(A3)
    f = induce(TA.rows[1], S3)
    assert character_table(S3).find_row(f).degree == 2
    assert induce(TA.trivial, S3).values[0] == 2

    S4 = group("s4")
    V = normal_of_order(S4, 4)
    f = induce(table_of(V).trivial, S4)
    assert [int(v) for v in f.values] == [6, 0, 0, 6, 0]
    assert f == induce(table_of(V).trivial, S4, method="fusion")
    assert inner_product(f, character_table(S4).trivial) == 1


def _test_subgroups(G):
    subs = list(normal_subgroups(G))
    subs += [sylow_subgroup(G, p) for p in prime_factors(G.order)]
    seen, out = set(), []
    for H in subs:
        if H.key not in seen:
            seen.add(H.key)
            out.append(H)
    return out


@pytest.mark.parametrize("key", small_keys(500))
def test_frobenius_reciprocity_exhaustive(key):
    G = group(key)
    T = character_table(G)
    for H in _test_subgroups(G):
        TH = table_of(H)
        induced = [induce(theta, G, method="brute") for theta in TH.rows]
        lhs = inner_products(induced, list(T.rows))
        rhs = inner_products([restrict(chi, H) for chi in T.rows], list(TH.rows))
        assert lhs == [list(col) for col in zip(*rhs)]
        for theta, f in zip(TH.rows, induced):
            assert f.values[0] == theta.degree * (G.order // H.order)


def test_kernel_examples():
    S4 = group("s4")
    T = character_table(S4)
    assert kernel_of(T.trivial).order == 24
    assert kernel_of(rows_of_degree(T, 1)[1]).order == 12
    assert kernel_of(rows_of_degree(T, 2)[0]).order == 4


def test_vanishing_off_examples():
    T = character_table(group("s4"))
    assert vanishing_off(rows_of_degree(T, 1)[1]).order == 24
    Q8 = group("q8")
    TQ = character_table(Q8)
    V = vanishing_off(rows_of_degree(TQ, 2)[0])
    assert V.order == 2
    # faithful degree-2 character of GL(2,3): it is nonzero on the
    # elements of order 3 and 8, and those generate the whole group
    G = group("gl23")
    chi = character_table(G).rows[3]
    V = vanishing_off(chi)
    assert tag("gl23", "z") <= V
    assert V.order == 48
    for c in character_table(G).rows:
        assert kernel_of(c) <= vanishing_off(c)


def test_det_order_examples():
    T = character_table(group("s4"))
    sign = rows_of_degree(T, 1)[1]
    lam, o = det_order(sign)
    assert lam == sign and o == 2
    TQ = character_table(group("q8"))
    lam, o = det_order(rows_of_degree(TQ, 2)[0])
    assert lam == TQ.trivial and o == 1
    TC = character_table(group("c12"))
    for chi in TC.rows:
        lam, o = det_order(chi)
        assert lam == chi
        assert o == next(n for n in range(1, 13) if all((v ** n) == 1 for v in chi.values))


@pytest.mark.parametrize("key", ["s4", "gl23", "berger216", "agl1_13", "q8xc3"])
def test_det_divides_abelianisation(key):
    from relchar.structure.series import derived_subgroup

    G = group(key)
    quotient_exp = _exponent_mod(G, derived_subgroup(whole_group(G)))
    for chi in character_table(G).rows:
        lam, o = det_order(chi)
        assert lam.degree == 1
        assert quotient_exp % o == 0


def _exponent_mod(G, D):
    Q, _ = quotient(G, D)
    return int(np.lcm.reduce(Q.orders))


def test_inertia_examples():
    S4 = group("s4")
    V = normal_of_order(S4, 4)
    TV = table_of(V)
    for theta in TV.rows[1:]:
        T = inertia_group(S4, V, theta)
        assert S4.order // T.order == 3 == orbit_size(S4, V, theta)
    assert inertia_group(S4, whole_group(S4), character_table(S4).rows[2]).order == 24
    G = group("gl23")
    N = tag("gl23", "sl23")
    for theta in rows_of_degree(table_of(N), 2):
        T = inertia_group(G, N, theta)
        assert 2 % (G.order // T.order) == 0
        assert G.order // T.order == orbit_size(G, N, theta)


def test_lift_examples():
    S4 = group("s4")
    V = normal_of_order(S4, 4)
    Q, phi = quotient(S4, V)
    TQ = character_table(Q)
    assert lift_character(TQ.trivial, phi) == character_table(S4).trivial
    two = lift_character(rows_of_degree(TQ, 2)[0], phi)
    assert two.degree == 2 and kernel_of(two) == V
    G = group("gl23")
    Q, phi = quotient(G, tag("gl23", "sl23"))
    lam = lift_character(character_table(Q).rows[1], phi)
    assert lam.degree == 1 and kernel_of(lam) == tag("gl23", "sl23")


def test_products_and_conjugates():
    T = character_table(group("s4"))
    sign = rows_of_degree(T, 1)[1]
    chi = rows_of_degree(T, 3)[0]
    assert product(chi, T.trivial) == chi
    assert product(sign, sign) == T.trivial
    other = T.find_row(product(chi, sign))
    assert other is not None and other != chi and other.degree == 3
    TG = character_table(group("gl23"))
    assert conjugate(TG.rows[3]) == TG.rows[4]
    assert TG.rows[3].values[TG.class_data.class_of[0]] == 2
    assert any(not v.is_rational() for v in TG.rows[3].values)
    assert all(isinstance(v, CyclotomicValue) for v in TG.rows[3].values)
    assert Fraction(1, 2) * TG.rows[3].values[0] == 1
