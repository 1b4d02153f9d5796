import itertools

import pytest

from borderedfloer import heegaard, pmc as pmc_mod
from borderedfloer.errors import (FlavorOrderViolation, InvalidDiagram,
                                  NotClosed, SchemaViolation)
from borderedfloer.heegaard import (BorderedDiagram, IntersectionPoint,
                                    enumerate_generators, glued_grading, grade)
from borderedfloer.structures import theta

from oracle_constants import TREFOIL_TABLE


def by_name(diagram):
    return {g.name: g for g in enumerate_generators(diagram)}


def test_solid_torus_a_generators():
    gens = by_name(heegaard.solid_torus_a_diagram())
    assert set(gens) == {"x", "y"}
    assert gens["x"].grading == 0
    assert gens["y"].grading == 1
    assert gens["x"].idempotent_right == frozenset({2})
    assert gens["y"].idempotent_right == frozenset({1})
    assert gens["x"].idempotent_left is None


def test_solid_torus_d_generators():
    gens = by_name(heegaard.solid_torus_d_diagram())
    assert set(gens) == {"a", "b"}
    assert gens["a"].grading == 1
    assert gens["b"].grading == 1
    # D-side idempotent is the complement of the occupied arcs
    assert gens["a"].idempotent_left == frozenset({2})
    assert gens["b"].idempotent_left == frozenset({1})
    assert gens["a"].idempotent_right is None


def test_glued_solid_tori_gradings():
    a = by_name(heegaard.solid_torus_a_diagram())
    d = by_name(heegaard.solid_torus_d_diagram())
    assert glued_grading(a["x"], d["a"]) == 1
    assert glued_grading(a["y"], d["b"]) == 0
    # incompatible occupancies do not glue
    assert glued_grading(a["x"], d["b"]) is None
    assert glued_grading(a["y"], d["a"]) is None


def test_trefoil_generator_table():
    gens = by_name(heegaard.trefoil_diagram())
    assert set(gens) == set(TREFOIL_TABLE)
    for name, (grading, lo, hi) in TREFOIL_TABLE.items():
        g = gens[name]
        assert g.grading == grading, name
        assert g.split_idempotent(1) == (frozenset(lo), frozenset(hi)), name


def test_identity_aa_diagram_gradings_are_theta():
    for z in (pmc_mod.genus1(), pmc_mod.genus2_split()):
        diagram = heegaard.identity_aa_diagram(z)
        gens = enumerate_generators(diagram)
        assert len(gens) == 2 ** z.num_classes
        n2k = z.num_classes
        for g in gens:
            s = frozenset(a - n2k for a in g.occupied_arcs("arc") if a > n2k)
            assert g.grading == theta(s, z)


def test_identity_aa_bimodule_matches_diagram():
    z = pmc_mod.genus1()
    diagram_gens = enumerate_generators(heegaard.identity_aa_diagram(z))
    module = heegaard.identity_aa_bimodule(z)
    diag = {}
    for g in diagram_gens:
        s = frozenset(a - z.num_classes
                      for a in g.occupied_arcs("arc") if a > z.num_classes)
        diag[s] = g.grading
    mod = {gen.idem_right: gen.grading for gen in module.generators.values()}
    assert diag == mod


def test_empty_beta_yields_no_generators():
    z = pmc_mod.genus1()
    pts = (IntersectionPoint("x", 1, "arc", 1, 0),)
    d = BorderedDiagram("A", 2, None, z, pts)  # beta 2 meets nothing
    d.validate()
    assert enumerate_generators(d) == []


def test_grade_refuses_wrong_flavor():
    gens = enumerate_generators(heegaard.solid_torus_a_diagram())
    assert grade("A", gens[0]) in (0, 1)
    with pytest.raises(FlavorOrderViolation):
        grade("D", gens[0])
    with pytest.raises(NotClosed):
        heegaard.closed_grading(gens[0])


def test_validate_rejections():
    z = pmc_mod.genus1()
    with pytest.raises(InvalidDiagram):
        BorderedDiagram("A", 1, z, z,
                        (IntersectionPoint("x", 1, "arc", 1, 0),)).validate()
    with pytest.raises(InvalidDiagram):
        BorderedDiagram("A", 1, None, z,
                        (IntersectionPoint("x", 1, "arc", 1, 0),
                         IntersectionPoint("x", 1, "arc", 2, 0))).validate()
    with pytest.raises(InvalidDiagram):
        BorderedDiagram("A", 1, None, z,
                        (IntersectionPoint("x", 2, "arc", 1, 0),)).validate()
    with pytest.raises(FlavorOrderViolation):
        BorderedDiagram("A", 1, None, z,
                        (IntersectionPoint("x", 1, "arc_left", 1, 0),)).validate()
    with pytest.raises(InvalidDiagram):
        BorderedDiagram("A", 1, None, z,
                        (IntersectionPoint("x", 1, "arc", 5, 0),)).validate()


def test_json_roundtrip():
    for d in (heegaard.solid_torus_a_diagram(),
              heegaard.solid_torus_d_diagram(),
              heegaard.trefoil_diagram(),
              heegaard.identity_aa_diagram(pmc_mod.genus1())):
        back = BorderedDiagram.from_json(d.to_json())
        assert back == d
        assert [g.to_json() for g in enumerate_generators(back)] == \
            [g.to_json() for g in enumerate_generators(d)]
    with pytest.raises(SchemaViolation):
        BorderedDiagram.from_json({"flavor": "A", "genus": 1})
