import pytest

from orbitcalc.classify3 import (
    THEOREM_A_SEIFERT,
    THEOREM_A_TABLE,
    TWISTED_CASE_NOTE,
    OrbitCase,
    SeifertOrbitData,
    raymond_classify,
    raymond_notes,
    theoremA_lookup,
)
from orbitcalc.errors import FixedPointFree, InvariantRange, NoSuchCase
from orbitcalc.manifolds import Alternatives, ManifoldExpr, ManifoldFamily


@pytest.mark.parametrize("data, expected", [
    # standard fixtures
    (SeifertOrbitData(0, "o", 0, 2, 0), "S2xS1"),
    (SeifertOrbitData(0, "o", 0, 1, 0, [(2, 1)]), "RP3"),
    (SeifertOrbitData(0, "o", 0, 1, 0, [(2, 1), (2, 1)]), "RP3 # RP3"),
    (SeifertOrbitData(0, "o", 0, 1, 1), "RP2xS1"),
    (SeifertOrbitData(0, "n", 1, 1, 0), "S2~xS1"),
    (SeifertOrbitData(0, "o", 0, 1, 0), "S3"),
])
def test_fixtures(data, expected):
    assert str(raymond_classify(data)) == expected
    assert raymond_classify(data) == ManifoldExpr.parse(expected)


@pytest.mark.parametrize("g, h, t", [(g, h, t) for g in range(3) for h in range(1, 4) for t in range(3)])
def test_summand_counts(g, h, t):
    lens = [(5, 2), (3, 1)]
    m = raymond_classify(SeifertOrbitData(0, "o", g, h, t, lens))
    assert m.count("S2xS1") == 2 * g + h - 1
    assert m.count("RP2xS1") == t
    assert m.count("L") == len(lens)
    if g >= 1:
        m = raymond_classify(SeifertOrbitData(0, "n", g, h, t, [(5, 2)]))
        if t:
            assert m.count("S2xS1") == g + h - 1 and m.count("S2~xS1") == 0
        else:
            assert m.count("S2~xS1") == 1 and m.count("S2xS1") == g + h - 2
        assert m.count("RP2xS1") == t


def test_sphere_never_mixed():
    m = raymond_classify(SeifertOrbitData(0, "o", 0, 1, 0, [(3, 1)]))
    assert m.count("S3") == 0 and str(m) == "L(3,1)"


def test_twisted_case_flagged():
    assert raymond_notes(SeifertOrbitData(0, "n", 2, 1, 0)) == [TWISTED_CASE_NOTE]
    assert raymond_notes(SeifertOrbitData(0, "n", 2, 1, 1)) == []
    assert raymond_notes(SeifertOrbitData(0, "o", 0, 1, 0)) == []


def test_data_validation():
    with pytest.raises(FixedPointFree):
        raymond_classify(SeifertOrbitData(3, "o", 0, 0, 0))
    with pytest.raises(InvariantRange):
        SeifertOrbitData(1, "o", 0, 1, 0)
    with pytest.raises(InvariantRange):
        SeifertOrbitData(0, "n", 1, 1, 0, [(5, 3)])
    with pytest.raises(InvariantRange):
        SeifertOrbitData(0, "n", 0, 1, 0)
    with pytest.raises(InvariantRange):
        SeifertOrbitData(0, "x", 0, 1, 0)
    assert str(SeifertOrbitData(0, "o", 0, 1, 0, [(2, 1)])) == "{0;(o,0,1,0),(2,1)}"


def test_theorem_a_rows():
    assert theoremA_lookup(OrbitCase("S1", "interval", ("Z2", "1", "Z2"))) == ManifoldExpr.parse("RP3 # RP3")
    assert theoremA_lookup(OrbitCase("S1", "interval", ("Z2", "1", "1"))) == ManifoldExpr.parse("RP3")
    so3 = theoremA_lookup(OrbitCase("SO3", "cohomogeneity-one"))
    assert isinstance(so3, Alternatives) and str(so3) == "S3 or RP3"
    assert str(theoremA_lookup(OrbitCase("S1", "point", ("Z2",)))) == "RP3"
    assert isinstance(theoremA_lookup(OrbitCase("S1", "point", ("Z5",))), ManifoldFamily)
    with pytest.raises(NoSuchCase):
        theoremA_lookup(OrbitCase("S1", "disk", ("1",)))


@pytest.mark.parametrize("key", list(THEOREM_A_SEIFERT))
def test_table_agrees_with_raymond(key):
    case = OrbitCase(key[0], key[1], key[2], key[3])
    assert theoremA_lookup(case) == raymond_classify(THEOREM_A_SEIFERT[key])
    assert key in THEOREM_A_TABLE
