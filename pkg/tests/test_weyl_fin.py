from collections import deque

import pytest

from affhur.intlattice import full_lattice, lattice_equal, root_span
from affhur.rootsys import Root, RootSystemError, build_root_system
from affhur.weyl_fin import (absolute_length, all_elements, fac_set,
                             generates_w0, identity_element, is_parabolic,
                             is_parabolic_quasi_coxeter_fin,
                             is_quasi_coxeter_fin, leq_T,
                             reduced_factorizations, reflection_element,
                             reflections, root_of_reflection, roots_of_tuple)

GROUP_ORDERS = {("A", 2): 6, ("B", 2): 8, ("G", 2): 12, ("A", 3): 24}


def bfs_absolute_length(rs, w):
    """Independent oracle: word-length BFS over the reflection generators."""
    if w.is_identity():
        return 0
    gens = [t for _, t in reflections(rs)]
    seen = {identity_element(rs)}
    frontier = [identity_element(rs)]
    depth = 0
    while frontier:
        depth += 1
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y == w:
                    return depth
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    raise AssertionError("element not reached")


@pytest.mark.parametrize("family,rank", sorted(GROUP_ORDERS))
def test_group_orders(family, rank):
    rs = build_root_system(family, rank)
    assert len(all_elements(rs)) == GROUP_ORDERS[(family, rank)]


def test_reflections_are_involutions():
    rs = build_root_system("B", 2)
    for r, t in reflections(rs):
        assert t * t == identity_element(rs)
        assert t.act_root(r) == -r
        assert root_of_reflection(rs, t) == r
    assert root_of_reflection(rs, identity_element(rs)) is None


def test_reflection_same_for_opposite_roots():
    rs = build_root_system("A", 2)
    a = Root((1, 1))
    assert reflection_element(rs, a) == reflection_element(rs, -a)
    with pytest.raises(RootSystemError):
        reflection_element(rs, Root((2, 0)))


@pytest.mark.parametrize("family,rank", [("A", 2), ("B", 2), ("G", 2)])
def test_absolute_length_against_bfs_oracle(family, rank):
    rs = build_root_system(family, rank)
    for w in all_elements(rs):
        assert absolute_length(w) == bfs_absolute_length(rs, w)


def test_leq_T():
    rs = build_root_system("A", 2)
    e = identity_element(rs)
    s = reflection_element(rs, Root((1, 0)))
    c = s * reflection_element(rs, Root((0, 1)))
    assert leq_T(e, s) and leq_T(s, c) and leq_T(e, c)
    assert not leq_T(c, s)


def test_reduced_factorizations_coxeter_a2():
    rs = build_root_system("A", 2)
    c = reflection_element(rs, Root((1, 0))) * reflection_element(rs, Root((0, 1)))
    facs = reduced_factorizations(rs, c)
    assert len(facs) == 3  # (n+1)^(n-1) for A_n
    for fac in facs:
        prod = identity_element(rs)
        for t in fac:
            prod = prod * t
        assert prod == c
        assert len(fac) == 2


def test_generates_w0():
    rs = build_root_system("B", 2)
    longs = [r for r in rs.positive_roots if rs.is_long(r)]
    shorts = [r for r in rs.positive_roots if rs.is_short(r)]
    assert generates_w0(rs, [longs[0], shorts[0]])
    assert not generates_w0(rs, longs)   # A1 x A1 subgroup
    assert not generates_w0(rs, shorts)  # index-2 coroot span


def test_generates_matches_group_closure():
    rs = build_root_system("B", 2)
    pos = rs.positive_roots
    for i, a in enumerate(pos):
        for b in pos[i:]:
            gens = [reflection_element(rs, a), reflection_element(rs, b)]
            seen = {identity_element(rs)}
            queue = deque(seen)
            while queue:
                x = queue.popleft()
                for g in gens:
                    y = x * g
                    if y not in seen:
                        seen.add(y)
                        queue.append(y)
            assert generates_w0(rs, [a, b]) == (len(seen) == 8)


def test_is_parabolic():
    rs = build_root_system("A", 3)
    simples = list(rs.simple_roots)
    assert is_parabolic(rs, simples[:1])
    assert is_parabolic(rs, simples[:2])
    assert is_parabolic(rs, simples)
    # two orthogonal roots spanning a non-parabolic A1 x A1 in B2
    rsb = build_root_system("B", 2)
    longs = [r for r in rsb.positive_roots if rsb.is_long(r)]
    assert not is_parabolic(rsb, longs)
    assert is_parabolic(rsb, [])


def test_quasi_coxeter_fin():
    rs = build_root_system("B", 2)
    s_long = reflection_element(rs, Root((1, 0)))
    s_short = reflection_element(rs, Root((0, 1)))
    assert is_quasi_coxeter_fin(rs, s_long * s_short)
    # the rotation by pi: product of the two long (orthogonal) reflections
    longs = [r for r in rs.positive_roots if rs.is_long(r)]
    rot = reflection_element(rs, longs[0]) * reflection_element(rs, longs[1])
    assert not is_quasi_coxeter_fin(rs, rot)
    assert not is_parabolic_quasi_coxeter_fin(rs, rot)
    assert is_parabolic_quasi_coxeter_fin(rs, s_long)


def test_fac_set():
    rs = build_root_system("A", 2)
    s1 = reflection_element(rs, Root((1, 0)))
    facs = fac_set(rs, s1, 3)
    assert facs, "a reflection has generating length-3 factorizations"
    for fac in facs:
        prod = identity_element(rs)
        for t in fac:
            prod = prod * t
        assert prod == s1
        assert generates_w0(rs, roots_of_tuple(rs, fac))


def test_roots_of_tuple_rejects_non_reflection():
    rs = build_root_system("A", 2)
    c = reflection_element(rs, Root((1, 0))) * reflection_element(rs, Root((0, 1)))
    with pytest.raises(RootSystemError):
        roots_of_tuple(rs, [c])
