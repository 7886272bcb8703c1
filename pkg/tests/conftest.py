"""Session fixtures: the quadratic quotients built and reused across the suite."""

from fractions import Fraction

import pytest

from faceq import coaction as co
from faceq import face as fc
from faceq import pathalg as pa
from faceq import quiver as qv
from faceq import uqsgd as uq
from faceq import wba

from fleet import FLEET, HOST_DEGREE, doubled_three_cycle, q_bullets, three_cycle, three_loop, two_loop


def commutator_ideal(q):
    gens = []
    for i in range(len(q.arrows)):
        for j in range(i + 1, len(q.arrows)):
            a, b = q.arrow_path(i), q.arrow_path(j)
            gens.append(pa.PathElement(q, {qv.compose_paths(q, a, b): 1,
                                           qv.compose_paths(q, b, a): -1}))
    return pa.HomogeneousIdeal(q, gens)


def quantum_plane_ideal(q, scale=2):
    a, b = q.arrow_path(0), q.arrow_path(1)
    gen = pa.PathElement(q, {qv.compose_paths(q, a, b): 1,
                             qv.compose_paths(q, b, a): Fraction(-scale)})
    return pa.HomogeneousIdeal(q, [gen])


def loop_face(q, i, j):
    """The degree-1 monomial x[t_i;t_j] of an n-loop quiver, 0-indexed."""
    return fc.FaceElement(q, {fc.FaceMonomial(q.arrow_path(i), q.arrow_path(j)): 1})


def bracket(u, v):
    return fc.face_multiply(u, v) - fc.face_multiply(v, u)


def polynomial_families(q, side):
    """The two displayed commutator families presenting the one-sided
    quotient of the free matrix bialgebra over commutative polynomials."""
    n = len(q.arrows)
    rng = range(n)
    rows = []
    if side == "left":
        for i in rng:
            for j in rng:
                for k in rng:
                    rows.append(bracket(loop_face(q, i, j), loop_face(q, k, j)))
        for i in rng:
            for j in rng:
                for k in rng:
                    for l in rng:
                        if j == l:
                            continue
                        rows.append(bracket(loop_face(q, i, j), loop_face(q, k, l))
                                    - bracket(loop_face(q, k, j), loop_face(q, i, l)))
    else:
        for i in rng:
            for j in rng:
                for k in rng:
                    rows.append(bracket(loop_face(q, i, j), loop_face(q, i, k)))
        for i in rng:
            for j in rng:
                for k in rng:
                    for l in rng:
                        if i == k:
                            continue
                        rows.append(bracket(loop_face(q, i, j), loop_face(q, k, l))
                                    - bracket(loop_face(q, i, l), loop_face(q, k, j)))
    return [r for r in rows if not r.is_zero()]


def preprojective_families(q, side):
    """The three displayed generator families for the one-sided quotients
    attached to a preprojective algebra on the doubled 3-cycle."""
    n = len(q.vertices)

    def p(i):
        return q.arrow_path(i % n)

    def s(i):
        return q.arrow_path(n + (i % n))

    def x(a, b):
        return fc.FaceElement(q, {fc.FaceMonomial(a, b): 1})

    def prod(*factors):
        out = factors[0]
        for f in factors[1:]:
            out = fc.face_multiply(out, f)
        return out

    rows = []
    for k in range(n):
        for i in range(n):
            if side == "left":
                rows.append(prod(x(p(k), p(i)), x(s(k), p(i + 1)))
                            - prod(x(s(k - 1), p(i)), x(p(k - 1), p(i + 1))))
                rows.append(prod(x(p(k), p(i)), x(s(k), s(i)))
                            + prod(x(p(k), s(i - 1)), x(s(k), p(i - 1)))
                            - prod(x(s(k - 1), p(i)), x(p(k - 1), s(i)))
                            - prod(x(s(k - 1), s(i - 1)), x(p(k - 1), p(i - 1))))
                rows.append(prod(x(p(k), s(i)), x(s(k), s(i - 1)))
                            - prod(x(s(k - 1), s(i)), x(p(k - 1), s(i - 1))))
            else:
                rows.append(prod(x(p(i), p(k)), x(p(i + 1), s(k)))
                            - prod(x(p(i), s(k - 1)), x(p(i + 1), p(k - 1))))
                rows.append(prod(x(p(i), p(k)), x(s(i), s(k)))
                            + prod(x(s(i - 1), p(k)), x(p(i - 1), s(k)))
                            - prod(x(p(i), s(k - 1)), x(s(i), p(k - 1)))
                            - prod(x(s(i - 1), s(k - 1)), x(p(i - 1), p(k - 1))))
                rows.append(prod(x(s(i), p(k)), x(s(i - 1), s(k)))
                            - prod(x(s(i), s(k - 1)), x(s(i - 1), p(k - 1))))
    return [r for r in rows if not r.is_zero()]


def face_coords(q, elem, degree):
    index = {m: i for i, m in enumerate(fc.face_basis(q, degree))}
    return {index[m]: c for m, c in elem.terms.items()}


def dd_coaction(side):
    """Two copies of the 2-idempotent bialgebra coacting on the 2-point base."""
    dd = wba.direct_sum(wba.bialgebra_d(0), wba.bialgebra_d(0))
    algebra = wba.path_algebra_presentation(q_bullets(), 0)
    x, y = {0: Fraction(1)}, {1: Fraction(1)}
    mat = [[x, y], [y, x]]
    return dd, co.CoactionSpec(side, algebra, [mat], [])


@pytest.fixture(scope="session")
def built_results():
    """Every nonzero-ideal UQSGd the suite constructs, keyed by instance."""
    results = {}
    q2 = two_loop()
    comm2 = commutator_ideal(q2)
    for side in ("left", "right", "trans"):
        results[f"two-loop-commutator-{side}"] = uq.build_uqsgd(q2, comm2, side, 4)
    q3 = three_loop()
    comm3 = commutator_ideal(q3)
    results["three-loop-commutator-trans"] = uq.build_uqsgd(q3, comm3, "trans", 3)
    results["three-loop-commutator-left"] = uq.build_uqsgd(q3, comm3, "left", 3)
    results["quantum-plane-trans"] = uq.build_uqsgd(q2, quantum_plane_ideal(q2),
                                                    "trans", 4)
    prep = pa.preprojective_relations(three_cycle())
    dbl = prep.quiver
    for side in ("left", "right"):
        results[f"preprojective-{side}"] = uq.build_uqsgd(dbl, prep, side, 3)
    return results


@pytest.fixture(scope="session")
def duality_biideals():
    """The biideals behind the duality transport checks, rebuilt explicitly
    so the soundness sweep can cover them; (label, biideal, cap) triples."""
    cases = []
    prep = pa.preprojective_relations(three_cycle())
    instances = [
        ("polynomial", two_loop(), commutator_ideal(two_loop()), 4),
        ("quantum-plane", two_loop(), quantum_plane_ideal(two_loop()), 4),
        ("preprojective", prep.quiver, prep, 3),
    ]
    for name, q, ideal, cap in instances:
        qd = pa.quadratic_data(ideal)
        qdual = pa.quadratic_dual(qd)
        for label, quiver, data in (("base", q, qd), ("dual", qdual.quiver, qdual)):
            host = wba.from_face_algebra(quiver, cap)
            for side in ("left", "right", "trans"):
                if side == "trans":
                    gens = (uq.coaction_relations(data, "left")
                            + uq.coaction_relations(data, "right"))
                else:
                    gens = uq.coaction_relations(data, side)
                coords = [(2, face_coords(quiver, g, 2)) for g in gens]
                cases.append((f"{name}-{label}-{side}",
                              wba.BiidealGens(host, coords), cap))
    return cases


@pytest.fixture(scope="session")
def trivial_results():
    """Zero-ideal builds per fleet quiver (the trivial-case reproduction)."""
    out = {}
    for name, make in FLEET.items():
        q = make()
        degree = min(3, HOST_DEGREE[name])
        result = uq.build_uqsgd(q, pa.HomogeneousIdeal(q, []), "trans", degree)
        out[name] = (q, degree, result)
    return out
