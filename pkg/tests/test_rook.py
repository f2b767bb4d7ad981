import itertools
import json

import pytest

from symmon import rook as rn
from symmon.errors import PreconditionError, ResourceLimitError
from symmon.rook import RookElement


E11 = RookElement((1, 0))
E12 = RookElement((2, 0))
E21 = RookElement((0, 1))
E22 = RookElement((0, 2))


def test_enumerate_counts():
    assert [len(rn.enumerate_rook(n)) for n in range(1, 5)] == [2, 7, 34, 209]
    for n in range(1, 5):
        assert rn.rook_count(n) == len(rn.enumerate_rook(n))
    assert len(rn.enumerate_rook(1)) == 2
    with pytest.raises(ResourceLimitError):
        rn.enumerate_rook(7)


def test_rook_element_validation():
    with pytest.raises(PreconditionError):
        RookElement((1, 1))
    with pytest.raises(PreconditionError):
        RookElement((3, 0))


def test_multiply():
    r = RookElement((2, 1, 0))
    assert rn.multiply(r, rn.identity_rook(3)) == r
    assert rn.multiply(rn.identity_rook(3), r) == r
    assert rn.multiply(E12, E21) == E11
    # e_I e_J = e_{I cap J}, exhaustive for n <= 3
    for n in (2, 3):
        subsets = list(itertools.chain.from_iterable(
            itertools.combinations(range(1, n + 1), k) for k in range(n + 1)
        ))
        for i_set in subsets:
            for j_set in subsets:
                e = rn.idempotent(n, i_set)
                f = rn.idempotent(n, j_set)
                assert rn.multiply(e, f) == rn.idempotent(n, set(i_set) & set(j_set))
    with pytest.raises(PreconditionError):
        rn.multiply(E11, rn.identity_rook(3))


def test_inverse_semigroup_identity():
    for r in rn.enumerate_rook(3):
        assert rn.multiply(rn.multiply(r, r.transpose()), r) == r


def test_green_relations():
    # every rook element is H-related to itself
    for r in rn.enumerate_rook(2):
        assert rn.green_relation(r, r, "H")
    # same rank iff J-related
    for r in rn.enumerate_rook(3):
        for s in rn.enumerate_rook(3):
            assert rn.green_relation(r, s, "J") == (r.rank == s.rank)
    assert rn.green_relation(E11, E21, "L")
    assert not rn.green_relation(E11, E21, "R")
    with pytest.raises(PreconditionError):
        rn.green_relation(E11, E22, "K")


def test_green_L_matches_finite_field_left_ideal():
    # oracle: L-classes are equal left ideals {x a} over Mat_2(F_3)
    from symmon import finite_field as ff

    mats = tuple(ff.enumerate_matrices(2, 3))
    ideals = {}
    for r in rn.enumerate_rook(2):
        a = ff.from_rook(r, 3)
        ideals[r] = frozenset(x @ a for x in mats)
    for r in rn.enumerate_rook(2):
        for s in rn.enumerate_rook(2):
            assert rn.green_relation(r, s, "L") == (ideals[r] == ideals[s])


def test_green_R_matches_finite_field_right_ideal():
    from symmon import finite_field as ff

    mats = tuple(ff.enumerate_matrices(2, 3))
    ideals = {}
    for r in rn.enumerate_rook(2):
        a = ff.from_rook(r, 3)
        ideals[r] = frozenset(a @ x for x in mats)
    for r in rn.enumerate_rook(2):
        for s in rn.enumerate_rook(2):
            assert rn.green_relation(r, s, "R") == (ideals[r] == ideals[s])


def test_idempotent_order():
    zero = rn.zero_rook(2)
    for e in (zero, E11, E22, rn.identity_rook(2)):
        assert rn.idempotent_order(zero, e)
    assert not rn.idempotent_order(E11, E22)
    assert not rn.idempotent_order(E22, E11)
    assert rn.idempotent_order(E11, rn.identity_rook(2))
    with pytest.raises(PreconditionError):
        rn.idempotent_order(E12, E11)


def test_cross_section():
    cs = rn.cross_section(2)
    assert len(cs.chain) == 3
    for a, b in zip(cs.chain, cs.chain[1:]):
        assert rn.idempotent_order(a, b)
    assert rn.cross_section(1).chain == (rn.zero_rook(1), rn.identity_rook(1))
    # |E(T-bar)| = 2^n and the unit group's conjugates of the chain cover it
    for n in (2, 3):
        diag = rn.diagonal_idempotents(n)
        assert len(diag) == 2 ** n
        assert rn.conjugates_of_cross_section(n) == frozenset(diag)


def test_w_e_w_decomposition():
    assert [len(c) for c in rn.w_e_w_decomposition(1)] == [1, 1]
    assert [len(c) for c in rn.w_e_w_decomposition(2)] == [1, 4, 2]
    assert [len(c) for c in rn.w_e_w_decomposition(3)] == [1, 9, 18, 6]
    # classes coincide with Green's J-classes
    classes = rn.w_e_w_decomposition(3)
    for k, cls in enumerate(classes):
        for r in cls:
            assert r.rank == k
            assert rn.green_relation(r, rn.cross_section(3).chain[k], "J")


def test_bruhat_zero_bottom_and_rank_monotone():
    zero = rn.zero_rook(3)
    for r in rn.enumerate_rook(3):
        assert rn.bruhat_leq(zero, r)
        for s in rn.enumerate_rook(3):
            if rn.bruhat_leq(r, s):
                assert r.rank <= s.rank


def test_bruhat_identity_below_longest():
    w0 = rn.from_permutation((2, 1))
    assert rn.bruhat_leq(rn.identity_rook(2), w0)
    assert not rn.bruhat_leq(w0, rn.identity_rook(2))


def test_bruhat_poset_axioms_exhaustive_n3():
    elems = rn.enumerate_rook(3)
    leq = {}
    for r in elems:
        for s in elems:
            leq[r, s] = rn.bruhat_leq(r, s)
    for r in elems:
        assert leq[r, r]
    for r in elems:
        for s in elems:
            if leq[r, s] and leq[s, r]:
                assert r == s
    for r in elems:
        below_r = [s for s in elems if leq[s, r]]
        for s in elems:
            if leq[r, s]:
                for t in below_r:
                    assert leq[t, s]


def _perm_bruhat_oracle(u, v):
    """Sorted-prefix dominance criterion for the symmetric group: u <= v iff
    each sorted k-prefix of u is entrywise <= the sorted k-prefix of v."""
    n = len(u)
    for k in range(1, n):
        us = sorted(u[:k])
        vs = sorted(v[:k])
        if any(a > b for a, b in zip(us, vs)):
            return False
    return True


def test_bruhat_restriction_to_symmetric_group():
    for n in range(1, 5):
        for u in itertools.permutations(range(1, n + 1)):
            for v in itertools.permutations(range(1, n + 1)):
                assert rn.bruhat_leq(rn.from_permutation(u), rn.from_permutation(v)) == _perm_bruhat_oracle(u, v)


def test_bruhat_consistent_with_idempotent_order():
    for n in (2, 3):
        idems = rn.diagonal_idempotents(n)
        for e in idems:
            for f in idems:
                if rn.idempotent_order(e, f):
                    assert rn.bruhat_leq(e, f)


def test_symmetric_rook_elements():
    two = rn.symmetric_rook_elements(2)
    assert set(two) == {
        rn.zero_rook(2), E11, E22, rn.identity_rook(2), RookElement((2, 1)),
    }
    assert len(rn.symmetric_rook_elements(3)) == 14
    fpf3 = rn.symmetric_rook_elements(3, fpf=True)
    assert len(fpf3) == 4
    assert set(fpf3) == {
        rn.zero_rook(3),
        RookElement((2, 1, 0)),
        RookElement((3, 0, 1)),
        RookElement((0, 3, 2)),
    }
    # counts are sums of involution numbers over supports
    assert len(rn.symmetric_rook_elements(4)) == 43
    for r in rn.symmetric_rook_elements(4):
        assert r == r.transpose()


def test_diagram_and_exports():
    assert E12.diagram() == "2 0"
    assert rn.zero_rook(3).diagram() == "0 0 0"
    elems = rn.enumerate_rook(2)
    dot = rn.poset_to_dot(elems, rn.bruhat_leq)
    assert dot.startswith("digraph poset {") and dot.rstrip().endswith("}")
    assert dot.count("->") == len(rn.hasse_edges(elems, rn.bruhat_leq))
    data = json.loads(rn.poset_to_json(elems, rn.bruhat_leq))
    assert len(data["nodes"]) == 7
    # covers regenerate the order by transitive closure
    edges = rn.hasse_edges(elems, rn.bruhat_leq)
    reach = {r: {r} for r in elems}
    changed = True
    while changed:
        changed = False
        for x, y in edges:
            for src in elems:
                if x in reach[src] and y not in reach[src]:
                    reach[src].add(y)
                    changed = True
    for r in elems:
        for s in elems:
            assert (s in reach[r]) == rn.bruhat_leq(r, s)
