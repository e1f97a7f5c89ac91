"""Path partitions, named families, and the transformation calculus."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spexlab.constructions import (
    FamilySpec,
    NotReachableError,
    PathPartition,
    apply_chain,
    construct,
    family_partition,
    fill_partition,
    h_op,
    h_p,
    joined_paths,
    paths_graph,
    transform,
    transform_predecessors,
    transform_successors,
    transformation_chain_to,
)
from spexlab.forbidden import ForbiddenSpec, is_free, matching_number
from spexlab.graph import complete_bipartite, join, complete, path, star
from spexlab.recognition import is_outerplanar, is_planar
from spexlab.spectral import lower_bound_witness

partitions = st.lists(st.integers(1, 9), min_size=1, max_size=6).map(PathPartition)


def test_path_partition_basics():
    h = PathPartition([2, 5, 1, 5])
    assert h.parts == (5, 5, 2, 1)
    assert h.total == 13
    assert h.part(1) == 5 and h.part(3) == 2 and h.part(9) == 0
    assert str(h) == "[5,5,2,1]"
    with pytest.raises(ValueError):
        PathPartition([3, 0])


def test_fill_partition_frozen():
    assert fill_partition(9, 4, 2).parts == (4, 2, 2, 1)
    assert fill_partition(7, 2, 3).parts == (3, 2, 2)  # smaller part may lead
    assert fill_partition(5, 5, 1).parts == (5,)
    assert fill_partition(6, 1, 1).parts == (1,) * 6
    with pytest.raises(ValueError):
        fill_partition(4, 5, 1)
    with pytest.raises(ValueError):
        fill_partition(4, 2, 0)


def test_h_op_h_p_totals():
    assert h_op(12, 5, 2).total == 11
    assert h_p(12, 5, 2).total == 10
    assert h_op(10, 3, 3).parts == (3, 3, 3)
    with pytest.raises(ValueError):
        h_op(6, 2, 3)
    with pytest.raises(ValueError):
        h_p(5, 4, 1)


def test_paths_graph_shape():
    g = paths_graph(PathPartition([3, 2, 1]))
    assert g.n == 6 and g.edge_count() == 3
    assert sorted(len(c) for c in g.components()) == [1, 2, 3]
    j = joined_paths(2, PathPartition([2, 2]))
    assert j.has_edge(0, 1) and j.degree(0) == 5
    with pytest.raises(ValueError):
        joined_paths(3, PathPartition([2]))


def test_family_spec_parse_and_str():
    spec = FamilySpec.parse("k1hop:t=2,l=5,n=40")
    assert spec == FamilySpec("k1hop", 40, t=2, l=5)
    assert str(spec) == "k1hop:t=2,l=5,n=40"
    assert FamilySpec.parse("wheel: n=10") == FamilySpec("wheel", 10)
    assert str(FamilySpec("claimw", 12, t=3)) == "claimw:t=3,n=12"
    for text in ("", "wheel", "wheel:t", "wheel:x=3,n=5", "bogus:n=5", "wheel:"):
        with pytest.raises(ValueError):
            FamilySpec.parse(text)


@given(
    st.sampled_from(["k1hop", "k2hp"]),
    st.integers(1, 4),
    st.integers(3, 7),
    st.integers(0, 40),
)
@settings(max_examples=80, deadline=None)
def test_family_spec_roundtrip(kind, t, l, slack):
    if kind == "k2hp":
        t = max(t, 2)
    n1 = (l - 2) if (kind == "k1hop" and t == 1) else (
        t * l - t - 1 if kind == "k1hop" else t * l - t - l
    )
    n = n1 + (1 if kind == "k1hop" else 2) + slack
    spec = FamilySpec(kind, n, t=t, l=l)
    assert FamilySpec.parse(str(spec)) == spec
    g = construct(spec)
    assert g.n == n


def test_family_partition_min_n():
    assert family_partition(FamilySpec("k1hop", 8, t=2, l=4)).parts == (5, 2)
    with pytest.raises(ValueError, match="needs n >= 6"):
        family_partition(FamilySpec("k1hop", 5, t=2, l=4))
    with pytest.raises(ValueError, match="needs n >= 3"):
        family_partition(FamilySpec("k2hp", 2, t=2, l=3))
    with pytest.raises(ValueError):
        family_partition(FamilySpec("wheel", 8))
    with pytest.raises(ValueError):
        family_partition(FamilySpec("k1hop", 9, t=0, l=4))


def test_construct_shapes():
    w = construct(FamilySpec("wheel", 8))
    assert w.degree(0) == 7 and w.edge_count() == 14
    assert construct(FamilySpec("star", 9)) == star(9)
    jn = construct(FamilySpec("jn", 9))
    assert jn.edge_count() == 8 + 4 and matching_number(jn) == 4
    assert construct(FamilySpec("k2n2", 7)) == complete_bipartite(2, 5)
    assert construct(FamilySpec("claimw", 12, t=3)) == lower_bound_witness(12, 3)
    k2 = construct(FamilySpec("k2hp", 12, t=2, l=5))
    assert k2.has_edge(0, 1) and k2.degree(0) == 11 and k2.degree(1) == 11
    for bad in (
        FamilySpec("wheel", 3),
        FamilySpec("star", 1),
        FamilySpec("k2n2", 2),
        FamilySpec("claimw", 4, t=3),
        FamilySpec("claimw", 5, t=0),
    ):
        with pytest.raises(ValueError):
            construct(bad)


def test_construct_class_and_freeness():
    g = construct(FamilySpec("k1hop", 30, t=2, l=5))
    assert is_outerplanar(g)
    assert is_free(g, ForbiddenSpec.bouquet(2, 5))
    h = construct(FamilySpec("k2hp", 30, t=3, l=4))
    assert is_planar(h) and not is_outerplanar(h)
    assert is_free(h, ForbiddenSpec.bouquet(3, 4))
    assert is_free(construct(FamilySpec("star", 20)), ForbiddenSpec.matching(2))
    assert is_free(construct(FamilySpec("jn", 20)), ForbiddenSpec.cycle(4))
    assert is_free(construct(FamilySpec("k2n2", 20)), ForbiddenSpec.cycle(3))


def test_transform_frozen_cases():
    assert transform(PathPartition([3, 1]), 0, 1).parts == (4,)
    assert transform(PathPartition([2, 2]), 0, 1).parts == (3, 1)
    assert transform(PathPartition([5, 3, 2]), 1, 2).parts == (5, 4, 1)
    with pytest.raises(ValueError):
        transform(PathPartition([2, 3]), 1, 1)
    with pytest.raises(ValueError):
        transform(PathPartition([2, 3]), 1, 2)
    with pytest.raises(ValueError, match="parts\\[i\\] >= parts\\[j\\]"):
        transform(PathPartition([3, 2]), 1, 0)


@given(partitions, st.data())
@settings(max_examples=100, deadline=None)
def test_transform_preserves_total(h, data):
    succs = transform_successors(h)
    assert all(s.total == h.total for s in succs)
    assert all(s.parts != h.parts for s in succs)
    if succs:
        s = data.draw(st.sampled_from(succs))
        assert h.parts in {p.parts for p in transform_predecessors(s)}


@given(partitions)
@settings(max_examples=100, deadline=None)
def test_predecessors_invert_successors(h):
    for p in transform_predecessors(h):
        assert p.total == h.total
        assert h.parts in {s.parts for s in transform_successors(p)}


def test_predecessor_s2_cap():
    # capping the forward s2 drops inverse moves whose split part is larger
    h = PathPartition([6, 2])
    capped = {p.parts for p in transform_predecessors(h, s2_cap=1)}
    uncapped = {p.parts for p in transform_predecessors(h)}
    assert capped <= uncapped
    assert (5, 3) not in capped and (5, 3) in uncapped


def test_transformation_chain():
    h = PathPartition([2, 2])
    chain = transformation_chain_to(h, PathPartition([4]))
    assert len(chain) == 2
    assert apply_chain(h, chain).parts == (4,)
    assert transformation_chain_to(h, h) == []
    with pytest.raises(ValueError, match="totals differ"):
        transformation_chain_to(h, PathPartition([4, 1]))
    with pytest.raises(NotReachableError):
        transformation_chain_to(PathPartition([2, 1]), PathPartition([1, 1, 1]))


@given(partitions)
@settings(max_examples=60, deadline=None)
def test_everything_reaches_the_single_path(h):
    target = PathPartition([h.total])
    chain = transformation_chain_to(h, target)
    assert apply_chain(h, chain).parts == target.parts
    assert len(chain) >= len(h.parts) - 1  # each merge removes one part
