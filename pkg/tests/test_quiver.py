import pytest

from filtquiv.quiver import (
    AT_MOST_TWO,
    MORE_THAN_TWO,
    FramedQuiver,
    PathWord,
    PathwayLimitError,
    Quiver,
    classify,
    enumerate_pathways,
    is_square_free,
    make_family,
    pathways_from,
)

from oracles import pathway_counts_bruteforce, square_free_bruteforce

J2 = make_family("Jordan", 2)


def test_square_free_examples():
    assert not is_square_free(PathWord(("a2", "a2", "a1")), J2)
    assert is_square_free(PathWord(("a2", "a1")), J2)
    w = ("a1", "a2", "a1")
    assert is_square_free(PathWord(w), J2) == square_free_bruteforce(w) is True


def test_square_free_rejects_non_composable():
    q = make_family("ADE", "A", 3)
    with pytest.raises(ValueError):
        is_square_free(PathWord(("a1", "a2")), q)


def test_a2_pathways():
    r = enumerate_pathways(make_family("ADE", "A", 2))
    assert r.outcome == AT_MOST_TWO
    assert [str(p) for p in r.pathways[("1", "1")]] == ["e1"]
    assert [str(p) for p in r.pathways[("2", "2")]] == ["e2"]
    assert [str(p) for p in r.pathways[("1", "2")]] == ["a1"]
    assert r.pathways[("2", "1")] == []


def test_jordan2_early_exit():
    r = enumerate_pathways(J2)
    assert r.outcome == MORE_THAN_TWO
    assert r.pair == ("1", "1")
    assert [str(w) for w in r.witnesses] == ["e1", "a1", "a2"]


def test_cyclic_affine_a1():
    q = Quiver.from_edges([(1, 2), (2, 1)])
    r = enumerate_pathways(q)
    assert r.outcome == AT_MOST_TWO
    # written right to left: "a2a1" is a1 then a2
    assert [p.arrows for p in r.pathways[("1", "1")]] == [(), ("a2", "a1")]
    assert [p.arrows for p in r.pathways[("1", "2")]] == [("a1",), ("a1", "a2", "a1")]
    assert all(r.count(i, j) == 2 for i in "12" for j in "12")
    oracle = pathway_counts_bruteforce([1, 2], [(1, 2), (2, 1)], 6)
    assert oracle == {(1, 1): 2, (1, 2): 2, (2, 1): 2, (2, 2): 2}


def test_triple_arrow():
    q = Quiver.from_edges([(1, 2)] * 3)
    r = classify(q)
    assert r.outcome == MORE_THAN_TWO
    assert r.pair == ("1", "2")
    assert [w.arrows for w in r.witnesses] == [("a1",), ("a2",), ("a3",)]


def test_parallel_arrows_into_loop_vertex():
    q = Quiver.from_edges([(1, 2), (1, 2), (2, 2)])
    r = classify(q)
    assert r.outcome == MORE_THAN_TWO
    assert r.pair == ("1", "2")


@pytest.mark.parametrize("orientation", ["up", "down", "alternating", (True, False, True)])
def test_d4_any_orientation(orientation):
    assert classify(make_family("ADE", "D", 4, orientation=orientation)).outcome == AT_MOST_TWO


def test_family_shapes():
    q = make_family("EquiorientedA", 3)
    assert q.vertices == ("1", "2", "3", "4")
    assert [(a.tail, a.head) for a in q.arrows] == [("1", "2"), ("2", "3"), ("3", "4")]
    star = make_family("Star", [2, 2, 2], orientation="in")
    assert len(star.vertices) == 7
    assert all(a.head == "1" for a in star.arrows if "1" in (a.head, a.tail))
    comet = make_family("Comet", [1, 1])
    assert sum(a.is_loop for a in comet.arrows) == 1
    assert classify(comet).outcome == AT_MOST_TWO


@pytest.mark.parametrize(
    "args",
    [("ADE", "A", 0), ("ADE", "D", 3), ("ADE", "E", 9), ("Star", [0, 1]), ("Jordan", -1), ("Nope", 1)],
)
def test_family_rejects_bad_parameters(args):
    with pytest.raises(ValueError):
        make_family(*args)


FAMILIES = [
    ("ADE", "A", 1),
    ("ADE", "A", 5),
    ("ADE", "D", 5),
    ("ADE", "E", 6),
    ("ADE", "E", 7),
    ("ADE", "E", 8),
    ("AffineADE", "A", 0),
    ("AffineADE", "A", 1),
    ("AffineADE", "A", 3),
    ("AffineADE", "D", 4),
    ("AffineADE", "D", 6),
    ("AffineADE", "E", 6),
    ("AffineADE", "E", 7),
    ("AffineADE", "E", 8),
    ("Star", [1, 2, 3]),
    ("Comet", [2, 1, 1]),
    ("Jordan", 0),
    ("Jordan", 1),
    ("EquiorientedA", 0),
    ("EquiorientedA", 4),
]


@pytest.mark.parametrize("args", FAMILIES)
@pytest.mark.parametrize("orientation", [None, "alternating_or_in"])
def test_families_have_at_most_two_pathways(args, orientation):
    kw = {}
    if orientation:
        kw["orientation"] = "in" if args[0] in ("Star", "Comet") else "alternating"
        if args[0] in ("Jordan", "EquiorientedA") or args[1:] == ("A", 0):
            kw = {}
    assert classify(make_family(*args, **kw)).outcome == AT_MOST_TWO


def test_cyclic_affine_a():
    for r in (1, 2, 4):
        q = make_family("AffineADE", "A", r, orientation="cyclic")
        assert classify(q).outcome == AT_MOST_TWO


@pytest.mark.parametrize("k", [2, 3, 4])
def test_jordan_many_loops(k):
    assert classify(make_family("Jordan", k)).outcome == MORE_THAN_TWO


def test_trivial_paths_counted():
    q = Quiver.from_edges([(1, 2), (2, 3)], vertices=[1, 2, 3, 4])
    r = classify(q)
    for v in q.vertices:
        assert PathWord((), v) in r.pathways[(v, v)]


def test_length_cap_raises():
    q = make_family("AffineADE", "A", 2, orientation="cyclic")
    with pytest.raises(PathwayLimitError):
        enumerate_pathways(q, max_length=2)


def test_framed_pathways():
    fq = FramedQuiver(make_family("EquiorientedA", 1))
    assert [p.arrows for p in pathways_from(fq)] == [("a0",), ("a1", "a0")]
    loop = FramedQuiver(make_family("Jordan", 1))
    assert [p.arrows for p in pathways_from(loop)] == [("a0",), ("a1", "a0")]


def test_quiver_validation():
    with pytest.raises(ValueError):
        Quiver(("1",), (("a", "1", "2"),))
    assert not Quiver(("1", "2"), ()).is_connected()
    assert make_family("ADE", "D", 4).is_connected()
