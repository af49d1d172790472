import os
import tempfile

import pytest

import latder


def test_basic_lattice():
    n5 = latder.pentagon()
    assert n5.size == 5
    assert n5.names == ["bot", "a", "b", "c", "top"]
    assert n5.join(1, 2) == 4
    assert n5.meet(1, 3) == 0
    assert n5.covers == [(0, 1), (0, 2), (1, 4), (2, 3), (3, 4)]


def test_build_and_errors():
    b2 = latder.build_lattice(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
    assert latder.are_isomorphic(b2, latder.boolean(2)) is not None
    with pytest.raises(latder.NotLatticeError):
        latder.build_lattice(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4)])
    with pytest.raises(latder.LatderError):
        latder.build_lattice(2, [(0, 1), (1, 0)])
    with pytest.raises(latder.ElementIndexError):
        b2.meet(0, 9)


def test_check_report():
    report = latder.check(latder.permutohedron(3))
    assert report["sd-join"] is True
    assert report["bounded"] is True
    assert report["distributive"] is False
    assert latder.check(latder.diamond())["sd-join"] is False


def test_derived_permutohedron():
    s4 = latder.permutohedron(4)
    derived, cover_of = latder.derived_lattice(s4, (0, 1))
    assert derived.size == 6
    assert cover_of[0] == (0, 1)
    assert latder.are_isomorphic(derived, latder.permutohedron(3)) is not None
    with pytest.raises(latder.NotSemidistributiveError):
        latder.derived_lattice(latder.diamond(), (0, 1))
    with pytest.raises(latder.InvalidCoverError):
        latder.derived_lattice(s4, (0, 5))


def test_boolean_rule():
    for n in range(1, 5):
        assert len(latder.cover_components(latder.boolean(n))) == n


def test_labelling_and_facets():
    n5 = latder.pentagon()
    labels = latder.strict_facet_labelling(n5)
    assert labels == [0, 0, 0, 1, 0]
    assert latder.verify_labelling(n5, labels)
    assert not latder.verify_labelling(n5, [0] * 5)
    assert latder.strict_facet_labelling(latder.diamond()) is None
    (facet,) = latder.facets(n5)
    assert facet["interiors"] == [(2, 3)]


def test_quotient_and_regularity():
    s4 = latder.permutohedron(4)
    q = latder.quotient(s4, [(0, 1)])
    target = latder.product(latder.permutohedron(3), latder.permutohedron(1))
    assert latder.are_isomorphic(q, target) is not None
    report = latder.is_regular(latder.multinomial([2, 2, 1]))
    assert report["regular"] is False
    assert report["witness"] is not None


def test_psi():
    assert latder.psi_perm(2, [4, 5, 2, 3, 1], 3) == [3, 4, 2, 1]
    assert latder.psi_perm_inverse(2, [3, 4, 2, 1]) == ([4, 5, 2, 3, 1], 3)
    assert latder.psi_tamari([1, 3, 3], 1) == [2, 2]


def test_file_round_trip():
    l = latder.random_dm(8, 0.3, 5)
    text = latder.dumps(l)
    assert latder.dumps(latder.loads(text)) == text
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "l.json")
        latder.save(l, path)
        assert latder.lattice_hash(latder.load(path)) == latder.lattice_hash(l)
    with pytest.raises(latder.ParseError):
        latder.loads("{ not json")
    assert latder.export_dot(latder.chain(2)).startswith("digraph lattice {")
