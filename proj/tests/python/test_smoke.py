import pytest

import finito

OSAKI_X = "c < a1\nd < a1\nc < b\nd < b\ne < b\nd < a2\ne < a2\n"
OSAKI_Y = "c < a\nd < a\ne < a\nc < b\nd < b\ne < b\n"


def test_parse_and_invariants():
    p = finito.Poset.parse("d < b\nb < a\nc < a")
    assert len(p) == 4
    assert p.labels == ["d", "b", "a", "c"]
    assert p.leq("d", "a")
    assert p.height() == 3
    assert p.is_contractible()
    assert len(p.core()) == 1


def test_sphere_models():
    for n in range(1, 4):
        s = finito.sphere_model(n)
        assert len(s) == 2 * n + 2
        assert s.betti() == [1] + [0] * (n - 1) + [1]
        assert s.euler_char() == 1 + (-1) ** n
        assert s.is_minimal()
        assert s.opposite().is_homeomorphic(s)


def test_osaki_counterexample():
    x = finito.Poset.parse(OSAKI_X)
    y = finito.Poset.parse(OSAKI_Y)
    assert x.beat_points() == []
    assert not x.osaki_reducible()
    assert x.euler_char() == y.euler_char() == -1
    assert x.first_betti() == 2
    f = {"a1": "a", "a2": "a", "b": "b", "c": "c", "d": "d", "e": "e"}
    assert finito.mccord_check(x, y, f)["certified"]


def test_wedges_and_enumeration():
    assert [finito.minimal_wedge_size(n) for n in range(1, 7)] == [4, 5, 6, 6, 7, 7]
    assert all(
        finito.minimal_wedge_size(n) == finito.minimal_wedge_size_closed_form(n)
        for n in range(1, 200)
    )
    assert [finito.count_posets(k) for k in range(1, 7)] == [1, 2, 5, 16, 63, 318]
    models = finito.wedge_models(3)
    assert len(models) == 3
    assert all(len(m) == 6 and len(m.covers()) == 8 for m in models)
    assert finito.bipartite_model(2, 4).first_betti() == 3


def test_sphere_theorem_small():
    report = finito.verify_sphere_theorem(3)
    assert report["confirmed"]
    assert report["equality_classes"][3] == 1


def test_emit_round_trip():
    s = finito.sphere_model(1)
    assert finito.Poset.parse(s.emit("poset")).is_homeomorphic(s)
    assert "rankdir=BT" in s.emit("dot")


def test_errors_are_value_errors():
    with pytest.raises(ValueError):
        finito.Poset.parse("a < b\nb < a")
    with pytest.raises(ValueError):
        finito.Poset.parse("a <")
