"""Path algebra elements, graded ideal pieces, quadratic data and duals."""

from fractions import Fraction
from math import comb
import random

import pytest

from faceq import pathalg as pa
from faceq import quiver as qv
from faceq.errors import ParseError, UnsupportedShapeError
from faceq.linalg import Echelon, Subspace, subspace_equal

from conftest import commutator_ideal, quantum_plane_ideal
from fleet import kronecker, three_cycle, three_loop, two_loop


def brute_force_piece(ideal, d):
    """Span of all monomial sandwiches around the generators; the oracle."""
    q = ideal.quiver
    paths = qv.enumerate_paths(q, d)
    index = {p: i for i, p in enumerate(paths)}
    ech = Echelon(len(paths))
    for g in ideal.generators:
        rest = d - g.degree()
        if rest < 0:
            continue
        for dl in range(rest + 1):
            for left in qv.enumerate_paths(q, dl):
                for right in qv.enumerate_paths(q, rest - dl):
                    sandwich = pa.multiply_path_elements(
                        pa.multiply_path_elements(pa.PathElement(q, {left: 1}), g),
                        pa.PathElement(q, {right: 1}))
                    if not sandwich.is_zero():
                        ech.add(pa.element_row(sandwich, index))
    return ech.finalize()


def exterior_ideal(q):
    t1, t2 = q.arrow_path(0), q.arrow_path(1)
    sq = lambda p: qv.compose_paths(q, p, p)
    mixed = {qv.compose_paths(q, t1, t2): 1, qv.compose_paths(q, t2, t1): 1}
    return pa.HomogeneousIdeal(q, [
        pa.PathElement(q, {sq(t1): 1}),
        pa.PathElement(q, {sq(t2): 1}),
        pa.PathElement(q, mixed),
    ])


def test_multiply_unit_decomposition():
    q = kronecker()
    p = pa.PathElement(q, {q.arrow_path(0): 1})
    unit = pa.path_unit(q)
    assert pa.multiply_path_elements(unit, p) == p
    assert pa.multiply_path_elements(p, unit) == p


def test_multiply_incomposable_is_zero():
    q = three_cycle()
    p1 = pa.PathElement(q, {q.arrow_path(0): 1})
    p3 = pa.PathElement(q, {q.arrow_path(2): 1})
    assert pa.multiply_path_elements(p1, p3).is_zero()


def test_multiply_commutator_by_generator():
    q = two_loop()
    t1, t2 = q.arrow_path(0), q.arrow_path(1)
    comm = pa.PathElement(q, {qv.compose_paths(q, t1, t2): 1,
                              qv.compose_paths(q, t2, t1): -1})
    out = pa.multiply_path_elements(comm, pa.PathElement(q, {t1: 1}))
    assert pa.format_path_element(out) == "1 * t1.t2.t1 + -1 * t2.t1.t1"


def test_multiply_degree_adds():
    q = two_loop()
    for da in range(3):
        for db in range(3):
            for a in qv.enumerate_paths(q, da):
                for b in qv.enumerate_paths(q, db):
                    prod = pa.multiply_path_elements(
                        pa.PathElement(q, {a: 1}), pa.PathElement(q, {b: 1}))
                    assert prod.is_zero() or prod.degree() == da + db


def test_commutator_piece_dims():
    ideal = commutator_ideal(two_loop())
    assert pa.ideal_graded_piece(ideal, 2).dim == 1
    assert pa.ideal_graded_piece(ideal, 3).dim == 4


def test_zero_ideal_pieces_vanish():
    ideal = pa.HomogeneousIdeal(two_loop(), [])
    for d in range(5):
        assert pa.ideal_graded_piece(ideal, d).dim == 0


def test_quotient_dimension_examples():
    q = two_loop()
    assert pa.quotient_dimension(commutator_ideal(q), 2) == 3
    zero = pa.HomogeneousIdeal(q, [])
    for d in range(5):
        assert pa.quotient_dimension(zero, d) == len(qv.enumerate_paths(q, d))
    assert pa.quotient_dimension(exterior_ideal(q), 2) == 1


def test_commutator_quotient_dims_are_monomial_counts():
    for n, make in ((2, two_loop), (3, three_loop)):
        ideal = commutator_ideal(make())
        for d in range(5):
            assert pa.quotient_dimension(ideal, d) == comb(n + d - 1, d)


def test_graded_pieces_match_sandwich_oracle():
    q2 = two_loop()
    cases = [
        commutator_ideal(q2),
        exterior_ideal(q2),
        quantum_plane_ideal(q2),
        commutator_ideal(three_loop()),
    ]
    for ideal in cases:
        for d in range(5):
            assert subspace_equal(pa.ideal_graded_piece(ideal, d),
                                  brute_force_piece(ideal, d))
    prep = pa.preprojective_relations(three_cycle())
    for d in range(4):
        assert subspace_equal(pa.ideal_graded_piece(prep, d),
                              brute_force_piece(prep, d))


def test_inhomogeneous_generator_rejected():
    q = two_loop()
    t1 = q.arrow_path(0)
    mixed = pa.PathElement(q, {qv.compose_paths(q, t1, t1): 1, t1: 1})
    with pytest.raises(ValueError, match="homogeneous"):
        pa.HomogeneousIdeal(q, [mixed])
    with pytest.raises(ValueError, match="degree >= 2"):
        pa.HomogeneousIdeal(q, [pa.PathElement(q, {t1: 1})])


def test_quadratic_data_commutators():
    for n, make in ((2, two_loop), (3, three_loop)):
        qd = pa.quadratic_data(commutator_ideal(make()))
        assert qd.relation_space.dim == comb(n, 2)
        assert qd.ambient_dim == n * n


def test_quadratic_data_zero_and_preprojective():
    assert pa.quadratic_data(pa.HomogeneousIdeal(two_loop(), [])).relation_space.dim == 0
    prep = pa.quadratic_data(pa.preprojective_relations(three_cycle()))
    assert prep.relation_space.dim == 3


def test_quadratic_data_rejects_cubic():
    q = two_loop()
    t1 = q.arrow_path(0)
    cubic = pa.PathElement(
        q, {qv.compose_paths(q, qv.compose_paths(q, t1, t1), t1): 1})
    with pytest.raises(UnsupportedShapeError, match="degree 3"):
        pa.quadratic_data(pa.HomogeneousIdeal(q, [cubic]))


def test_composable_pair_order_matches_path_order():
    for make in (two_loop, three_loop, three_cycle):
        q = make()
        pairs = pa.composable_pairs(q)
        paths = qv.enumerate_paths(q, 2)
        assert [qv.Path(q.arrows[i].source, (i, j)) for i, j in pairs] == paths


def test_quadratic_dual_of_polynomial_ring():
    qd = pa.quadratic_data(commutator_ideal(two_loop()))
    dual = pa.quadratic_dual(qd)
    opp = dual.quiver
    assert [a.name for a in opp.arrows] == ["t1*", "t2*"]
    expected = Subspace.from_rows(4, [
        {0: Fraction(1)},
        {1: Fraction(1), 2: Fraction(1)},
        {3: Fraction(1)},
    ])
    assert subspace_equal(dual.relation_space, expected)
    dual_ideal = pa.quadratic_ideal(dual)
    assert [pa.quotient_dimension(dual_ideal, d) for d in range(4)] == [1, 2, 1, 0]


def test_quadratic_dual_of_zero_is_full():
    qd = pa.quadratic_data(pa.HomogeneousIdeal(three_loop(), []))
    dual = pa.quadratic_dual(qd)
    assert dual.relation_space.dim == 9


def test_dual_dimension_law_and_double_dual():
    """dim R + dim R^! = dim kQ2, and the double dual restores R (20 seeds)."""
    rng = random.Random(20260825)
    quivers = [two_loop, three_loop, three_cycle,
               lambda: qv.double_quiver(three_cycle())]
    for seed in range(20):
        q = quivers[rng.randrange(len(quivers))]()
        pairs = pa.composable_pairs(q)
        ambient = len(pairs)
        rows = []
        for _ in range(rng.randrange(ambient + 1)):
            row = {i: Fraction(rng.randint(-3, 3)) for i in range(ambient)
                   if rng.random() < 0.4}
            row = {i: c for i, c in row.items() if c}
            if row:
                rows.append(row)
        space = Subspace.from_rows(ambient, rows)
        qd = pa.QuadraticData(q, space)
        dual = pa.quadratic_dual(qd)
        assert qd.relation_space.dim + dual.relation_space.dim == ambient
        double = pa.quadratic_dual(dual)
        assert double.quiver == qv.opposite_quiver(qv.opposite_quiver(q))
        assert subspace_equal(double.relation_space, qd.relation_space)


def test_preprojective_relations_display():
    prep = pa.preprojective_relations(three_cycle())
    texts = [pa.format_path_element(g) for g in prep.generators]
    assert texts == [
        "1 * p1.p1* + -1 * p3*.p3",
        "1 * p2.p2* + -1 * p1*.p1",
        "1 * p3.p3* + -1 * p2*.p2",
    ]


def test_preprojective_four_cycle():
    four = qv.Quiver(["1", "2", "3", "4"],
                     [("p1", 0, 1), ("p2", 1, 2), ("p3", 2, 3), ("p4", 3, 0)])
    assert len(pa.preprojective_relations(four).generators) == 4


def test_preprojective_rejects_two_cycle():
    two = qv.Quiver(["1", "2"], [("p1", 0, 1), ("p2", 1, 0)])
    with pytest.raises(UnsupportedShapeError):
        pa.preprojective_relations(two)
    with pytest.raises(UnsupportedShapeError):
        pa.preprojective_relations(two_loop())


def test_parse_relations_round_trip():
    q = two_loop()
    doc = [[{"coeff": 1, "path": ["t1", "t2"]},
            {"coeff": "-1/1", "path": ["t2", "t1"]}]]
    rels = pa.parse_relations(doc, q)
    assert len(rels) == 1
    assert pa.format_path_element(rels[0]) == "1 * t1.t2 + -1 * t2.t1"


def test_parse_relations_errors():
    q = three_cycle()
    with pytest.raises(ParseError, match="not composable"):
        pa.parse_relations([[{"coeff": 1, "path": ["p1", "p3"]}]], q)
    with pytest.raises(ParseError, match="unknown arrow"):
        pa.parse_relations([[{"coeff": 1, "path": ["nope"]}]], q)
    with pytest.raises(ParseError, match="coefficients must be"):
        pa.parse_relations([[{"coeff": 1.5, "path": ["p1"]}]], q)
    with pytest.raises(ParseError, match="list of relations"):
        pa.parse_relations({"coeff": 1}, q)


def test_parse_relations_trivial_path_terms():
    q = three_cycle()
    rels = pa.parse_relations([[{"coeff": 2, "path": ["e:1", "p1", "p2"]}]], q)
    assert pa.format_path_element(rels[0]) == "2 * p1.p2"
