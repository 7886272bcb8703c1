"""The quiver fleet shared across the test suite, with host truncation degrees."""

from faceq import quiver as qv


def one_loop():
    return qv.Quiver(["v"], [("t1", 0, 0)])


def two_loop():
    return qv.Quiver(["v"], [("t1", 0, 0), ("t2", 0, 0)])


def three_loop():
    return qv.Quiver(["v"], [("t1", 0, 0), ("t2", 0, 0), ("t3", 0, 0)])


def q_bullets():
    return qv.Quiver(["1", "2"], [])


def kronecker():
    return qv.Quiver(["1", "2"], [("a", 0, 1), ("b", 0, 1)])


def three_cycle():
    return qv.Quiver(["1", "2", "3"], [("p1", 0, 1), ("p2", 1, 2), ("p3", 2, 0)])


def doubled_three_cycle():
    return qv.double_quiver(three_cycle())


FLEET = {
    "one-loop": one_loop,
    "two-loop": two_loop,
    "three-loop": three_loop,
    "q-bullets": q_bullets,
    "kronecker": kronecker,
    "three-cycle": three_cycle,
    "doubled-three-cycle": doubled_three_cycle,
}

# Exact echelon cost grows with |Q_d|^2, so the path-heavy quivers get a
# lower truncation; every acceptance check that names maxDegree 3 fits.
HOST_DEGREE = {
    "one-loop": 4,
    "two-loop": 4,
    "three-loop": 3,
    "q-bullets": 4,
    "kronecker": 4,
    "three-cycle": 4,
    "doubled-three-cycle": 3,
}
