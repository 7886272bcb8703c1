"""Degree-truncated presentations of graded algebras and weak bialgebras.

A presentation tabulates structure constants up to a truncation degree:
products landing above the window are simply not stored, and every check
quantifies only over identities whose intermediate terms stay inside the
window, so all verdicts are exact.  The coproducts handled here preserve
degree in both tensor legs (matrix coalgebras per degree), which is what
face algebras and their biideal quotients provide.
"""

from fractions import Fraction

from . import face as fc
from . import pathalg as pa
from . import quiver as qv
from .errors import VerificationError
from .linalg import Echelon

_ONE = Fraction(1)


def _bump(table, key, value):
    s = table.get(key, 0) + value
    if s:
        table[key] = s
    else:
        table.pop(key, None)


class GradedAlgebra:
    """Structure constants of a graded algebra, truncated at max_degree.

    product maps (d, i, e, j) to the coordinate dict of u^d_i u^e_j in
    degree d+e; pairs that multiply to zero are absent.  unit is a degree-0
    coordinate dict.
    """

    def __init__(self, max_degree, labels, product, unit):
        self.max_degree = max_degree
        self.labels = [list(row) for row in labels]
        self.product = product
        self.unit = dict(unit)

    def dim(self, d):
        return len(self.labels[d])

    def dims(self):
        return [len(row) for row in self.labels]

    def label_of(self, d, i):
        return self.labels[d][i]

    def product_of(self, d, i, e, j):
        return self.product.get((d, i, e, j), {})

    def multiply(self, d, u, e, v):
        """Product of coordinate dicts u (degree d) and v (degree e)."""
        out = {}
        for i, a in u.items():
            for j, b in v.items():
                entry = self.product.get((d, i, e, j))
                if not entry:
                    continue
                ab = a * b
                for m, c in entry.items():
                    _bump(out, m, ab * c)
        return out


class GradedWBA(GradedAlgebra):
    """A graded algebra plus degree-preserving coproduct and counit tables.

    coproduct maps (d, i) to a dict {(j, k): scalar} describing a sum of
    u^d_j (x) u^d_k; counit maps (d, i) to its scalar value.  Both tables
    store nonzero data only.
    """

    def __init__(self, max_degree, labels, product, unit, coproduct, counit):
        super().__init__(max_degree, labels, product, unit)
        self.coproduct = coproduct
        self.counit = counit

    def coproduct_of(self, d, i):
        return self.coproduct.get((d, i), {})

    def counit_of(self, d, i):
        return self.counit.get((d, i), Fraction(0))

    def delta(self, d, u):
        """Coproduct of a coordinate dict, as {(j, k): scalar}."""
        out = {}
        for i, a in u.items():
            for pair, c in self.coproduct_of(d, i).items():
                _bump(out, pair, a * c)
        return out

    def eps(self, d, u):
        total = Fraction(0)
        for i, a in u.items():
            e = self.counit.get((d, i))
            if e:
                total += a * e
        return total

    def delta_one(self):
        return self.delta(0, self.unit)


def to_doc(w):
    """Deterministic presentation dump: labels plus nonzero structure constants."""
    doc = {
        "maxDegree": w.max_degree,
        "dims": w.dims(),
        "basis": [list(row) for row in w.labels],
        "unit": [[i, str(c)] for i, c in sorted(w.unit.items())],
        "product": [
            [d, i, e, j, [[m, str(c)] for m, c in sorted(entry.items())]]
            for (d, i, e, j), entry in sorted(w.product.items())
        ],
    }
    if isinstance(w, GradedWBA):
        doc["coproduct"] = [
            [d, i, [[j, k, str(c)] for (j, k), c in sorted(entry.items())]]
            for (d, i), entry in sorted(w.coproduct.items())
        ]
        doc["counit"] = [[d, i, str(c)] for (d, i), c in sorted(w.counit.items())]
    return doc


def path_algebra_presentation(q, max_degree):
    """kQ as a graded algebra on the per-degree path bases."""
    bases = [qv.enumerate_paths(q, d) for d in range(max_degree + 1)]
    index = [{p: i for i, p in enumerate(b)} for b in bases]
    labels = [[q.path_label(p) for p in b] for b in bases]
    product = {}
    for d in range(max_degree + 1):
        for e in range(max_degree + 1 - d):
            tgt = index[d + e]
            for i, p in enumerate(bases[d]):
                for j, r in enumerate(bases[e]):
                    pr = qv.compose_paths(q, p, r)
                    if pr is not None:
                        product[(d, i, e, j)] = {tgt[pr]: _ONE}
    unit = {i: _ONE for i in range(len(bases[0]))}
    return GradedAlgebra(max_degree, labels, product, unit)


def _quotient_maps(host, pieces):
    """Coset bases and projection helpers for a list of per-degree subspaces."""
    nonpivot = []
    pos = []
    for d in range(host.max_degree + 1):
        piv = set(pieces[d].pivots)
        cols = [m for m in range(host.dim(d)) if m not in piv]
        nonpivot.append(cols)
        pos.append({m: i for i, m in enumerate(cols)})

    def project(d, vec):
        res = pieces[d].reduce(vec)
        return {pos[d][m]: c for m, c in res.items()}

    return nonpivot, project


def quotient_algebra_presentation(ideal, max_degree):
    """kQ/I on the coset basis of non-pivot paths per degree."""
    host = path_algebra_presentation(ideal.quiver, max_degree)
    pieces = [pa.ideal_graded_piece(ideal, d) for d in range(max_degree + 1)]
    nonpivot, project = _quotient_maps(host, pieces)
    labels = [[host.labels[d][m] for m in nonpivot[d]] for d in range(max_degree + 1)]
    product = {}
    for d in range(max_degree + 1):
        for e in range(max_degree + 1 - d):
            for i, mi in enumerate(nonpivot[d]):
                for j, mj in enumerate(nonpivot[e]):
                    entry = host.product_of(d, mi, e, mj)
                    if not entry:
                        continue
                    img = project(d + e, entry)
                    if img:
                        product[(d, i, e, j)] = img
    unit = project(0, host.unit)
    return GradedAlgebra(max_degree, labels, product, unit)


def from_face_algebra(q, max_degree):
    """The face algebra of a quiver, tabulated on the faceBasis order."""
    bases = [fc.face_basis(q, d) for d in range(max_degree + 1)]
    index = [{m: i for i, m in enumerate(b)} for b in bases]
    labels = [[fc.monomial_label(q, m) for m in b] for b in bases]
    paths = [qv.enumerate_paths(q, d) for d in range(max_degree + 1)]
    product = {}
    for d in range(max_degree + 1):
        for e in range(max_degree + 1 - d):
            tgt = index[d + e]
            for i, m in enumerate(bases[d]):
                for j, n in enumerate(bases[e]):
                    prod = fc.monomial_product(q, m, n)
                    if prod is not None:
                        product[(d, i, e, j)] = {tgt[prod]: _ONE}
    coproduct = {}
    counit = {}
    for d in range(max_degree + 1):
        idx = index[d]
        for i, m in enumerate(bases[d]):
            coproduct[(d, i)] = {
                (idx[fc.FaceMonomial(m.left, mid)], idx[fc.FaceMonomial(mid, m.right)]): _ONE
                for mid in paths[d]
            }
            if m.left == m.right:
                counit[(d, i)] = _ONE
    unit = {i: _ONE for i in range(len(bases[0]))}
    return GradedWBA(max_degree, labels, product, unit, coproduct, counit)


def bialgebra_d(max_degree):
    """The two-dimensional bialgebra on idempotents x, y with xy = yx = 0.

    Concentrated in degree 0; higher degrees are empty.
    """
    labels = [["x", "y"]] + [[] for _ in range(max_degree)]
    product = {(0, 0, 0, 0): {0: _ONE}, (0, 1, 0, 1): {1: _ONE}}
    unit = {0: _ONE, 1: _ONE}
    coproduct = {
        (0, 0): {(0, 0): _ONE, (1, 1): _ONE},
        (0, 1): {(0, 1): _ONE, (1, 0): _ONE},
    }
    counit = {(0, 0): _ONE}
    return GradedWBA(max_degree, labels, product, unit, coproduct, counit)


def direct_sum(h, k):
    """Componentwise product, summed unit, blockwise coproduct and counit."""
    if h.max_degree != k.max_degree:
        raise ValueError("direct sum requires equal truncation degrees")
    md = h.max_degree
    labels = [[f"({lbl},0)" for lbl in h.labels[d]] + [f"(0,{lbl})" for lbl in k.labels[d]]
              for d in range(md + 1)]
    off = [h.dim(d) for d in range(md + 1)]
    product = {}
    for (d, i, e, j), entry in h.product.items():
        product[(d, i, e, j)] = dict(entry)
    for (d, i, e, j), entry in k.product.items():
        product[(d, i + off[d], e, j + off[e])] = {m + off[d + e]: c for m, c in entry.items()}
    unit = dict(h.unit)
    for i, c in k.unit.items():
        unit[i + off[0]] = c
    coproduct = {}
    for (d, i), entry in h.coproduct.items():
        coproduct[(d, i)] = dict(entry)
    for (d, i), entry in k.coproduct.items():
        coproduct[(d, i + off[d])] = {(j + off[d], m + off[d]): c for (j, m), c in entry.items()}
    counit = {}
    for (d, i), c in h.counit.items():
        counit[(d, i)] = c
    for (d, i), c in k.counit.items():
        counit[(d, i + off[d])] = c
    return GradedWBA(md, labels, product, unit, coproduct, counit)


def _eps_matrices(w):
    """eps(u_i u_j) per degree pair, stored sparsely from the product table."""
    eps = {}
    for (d, i, e, j), entry in w.product.items():
        val = Fraction(0)
        for m, c in entry.items():
            ev = w.counit.get((d + e, m))
            if ev:
                val += c * ev
        if val:
            eps.setdefault((d, e), {})[(i, j)] = val
    return eps


def _failures_delta_multiplicative(w):
    fails = []
    for d in range(w.max_degree + 1):
        for e in range(w.max_degree + 1 - d):
            f = d + e
            for i in range(w.dim(d)):
                da = w.coproduct_of(d, i)
                for j in range(w.dim(e)):
                    db = w.coproduct_of(e, j)
                    lhs = {}
                    for m, c in w.product_of(d, i, e, j).items():
                        for pair, cc in w.coproduct_of(f, m).items():
                            _bump(lhs, pair, c * cc)
                    rhs = {}
                    for (p, qq), c1 in da.items():
                        for (r, s), c2 in db.items():
                            left = w.product.get((d, p, e, r))
                            if not left:
                                continue
                            right = w.product.get((d, qq, e, s))
                            if not right:
                                continue
                            c12 = c1 * c2
                            for m, cm in left.items():
                                for n, cn in right.items():
                                    _bump(rhs, (m, n), c12 * cm * cn)
                    if lhs != rhs:
                        fails.append([w.label_of(d, i), w.label_of(e, j)])
    return fails


def _failures_counit_splits(w):
    eps = _eps_matrices(w)
    by_col = {}
    by_row = {}
    for (d, e), mat in eps.items():
        col = by_col.setdefault((d, e), {})
        row = by_row.setdefault((d, e), {})
        for (i, j), val in mat.items():
            col.setdefault(j, []).append((i, val))
            row.setdefault(i, []).append((j, val))
    fails12 = []
    fails21 = []
    for d in range(w.max_degree + 1):
        for e in range(w.max_degree + 1 - d):
            for f in range(w.max_degree + 1 - d - e):
                e1col = by_col.get((d, e), {})
                e2row = by_row.get((e, f), {})
                e3row = by_row.get((d + e, f), {})
                for b in range(w.dim(e)):
                    lhs = {}
                    for a in range(w.dim(d)):
                        for m, cm in w.product_of(d, a, e, b).items():
                            for c, vc in e3row.get(m, ()):
                                _bump(lhs, (a, c), cm * vc)
                    split = w.coproduct_of(e, b)
                    rhs12 = {}
                    rhs21 = {}
                    for (j, k), c0 in split.items():
                        for a, va in e1col.get(j, ()):
                            for c, vc in e2row.get(k, ()):
                                _bump(rhs12, (a, c), c0 * va * vc)
                        for a, va in e1col.get(k, ()):
                            for c, vc in e2row.get(j, ()):
                                _bump(rhs21, (a, c), c0 * va * vc)
                    if lhs != rhs12:
                        a, c = _first_mismatch(lhs, rhs12)
                        fails12.append([w.label_of(d, a), w.label_of(e, b), w.label_of(f, c)])
                    if lhs != rhs21:
                        a, c = _first_mismatch(lhs, rhs21)
                        fails21.append([w.label_of(d, a), w.label_of(e, b), w.label_of(f, c)])
    return fails12, fails21


def _first_mismatch(lhs, rhs):
    keys = sorted(set(lhs) | set(rhs))
    for key in keys:
        if lhs.get(key) != rhs.get(key):
            return key
    raise AssertionError("called on equal tables")


def _failures_unit_splits(w):
    d1 = w.delta_one()
    lhs = {}
    for (i, k), c in d1.items():
        for (m, n), cc in w.coproduct_of(0, i).items():
            _bump(lhs, (m, n, k), c * cc)
    right_one = [w.multiply(0, {i: _ONE}, 0, w.unit) for i in range(w.dim(0))]
    left_one = [w.multiply(0, w.unit, 0, {i: _ONE}) for i in range(w.dim(0))]

    def _triple(leg1_of, mid_of, leg3_of):
        out = {}
        for (i, j), c1 in d1.items():
            for (k, m), c2 in d1.items():
                c12 = c1 * c2
                leg1 = leg1_of(i)
                leg3 = leg3_of(m)
                for n, cn in mid_of(j, k).items():
                    for a, ca in leg1.items():
                        for b, cb in leg3.items():
                            _bump(out, (a, n, b), c12 * cn * ca * cb)
        return out

    # (Delta(1) (x) 1)(1 (x) Delta(1)): legs u_i*1, u_j*u_k, 1*u_m
    split12 = _triple(lambda i: right_one[i],
                      lambda j, k: w.product_of(0, j, 0, k),
                      lambda m: left_one[m])
    # (1 (x) Delta(1))(Delta(1) (x) 1): legs 1*u_i, u_k*u_j, u_m*1
    split21 = _triple(lambda i: left_one[i],
                      lambda j, k: w.product_of(0, k, 0, j),
                      lambda m: right_one[m])
    fails12 = [] if lhs == split12 else [["1"]]
    fails21 = [] if lhs == split21 else [["1"]]
    return fails12, fails21


def check_axioms(w):
    """Weak-bialgebra compatibility report over the truncation window.

    Covers coproduct multiplicativity, the two weak counit identities, and
    the two split forms of coassociativity of the unit.  Failures carry up
    to three witness tuples of basis labels.
    """
    f12, f21 = _failures_counit_splits(w)
    g12, g21 = _failures_unit_splits(w)
    rows = [
        _row("delta-multiplicative", _failures_delta_multiplicative(w)),
        _row("counit-product-split-12", f12),
        _row("counit-product-split-21", f21),
        _row("unit-coproduct-split-12", g12),
        _row("unit-coproduct-split-21", g21),
    ]
    return {"passed": all(r["status"] == "pass" for r in rows), "checks": rows}


def _row(name, failures, key="axiom"):
    return {
        key: name,
        "status": "pass" if not failures else "fail",
        "witnesses": failures[:3],
    }


def check_coalgebra(w):
    """Coassociativity and counitality of the stored coproduct, per basis element."""
    fails = []
    for d in range(w.max_degree + 1):
        for i in range(w.dim(d)):
            split = w.coproduct_of(d, i)
            lhs = {}
            for (j, k), c in split.items():
                for (m, n), cc in w.coproduct_of(d, j).items():
                    _bump(lhs, (m, n, k), c * cc)
            rhs = {}
            for (j, k), c in split.items():
                for (m, n), cc in w.coproduct_of(d, k).items():
                    _bump(rhs, (j, m, n), c * cc)
            if lhs != rhs:
                fails.append([w.label_of(d, i), "coassociativity"])
            left_counit = {}
            right_counit = {}
            for (j, k), c in split.items():
                ev = w.counit.get((d, j))
                if ev:
                    _bump(left_counit, k, c * ev)
                ev = w.counit.get((d, k))
                if ev:
                    _bump(right_counit, j, c * ev)
            if left_counit != {i: _ONE} or right_counit != {i: _ONE}:
                fails.append([w.label_of(d, i), "counitality"])
    return fails


def check_unit_identity(w):
    """The unit must be a two-sided identity on every stored degree."""
    fails = []
    for d in range(w.max_degree + 1):
        for i in range(w.dim(d)):
            vec = {i: _ONE}
            if w.multiply(0, w.unit, d, vec) != vec:
                fails.append([w.label_of(d, i), "left-unit"])
            if w.multiply(d, vec, 0, w.unit) != vec:
                fails.append([w.label_of(d, i), "right-unit"])
    return fails


def check_associativity(w):
    """Associativity on basis triples within the window (diagnostic helper)."""
    fails = []
    for d in range(w.max_degree + 1):
        for e in range(w.max_degree + 1 - d):
            for f in range(w.max_degree + 1 - d - e):
                for i in range(w.dim(d)):
                    u = {i: _ONE}
                    for j in range(w.dim(e)):
                        uv = w.product_of(d, i, e, j)
                        v = {j: _ONE}
                        for m in range(w.dim(f)):
                            vw = w.product_of(e, j, f, m)
                            lhs = w.multiply(d + e, uv, f, {m: _ONE})
                            rhs = w.multiply(d, u, e + f, vw)
                            if lhs != rhs:
                                fails.append([w.label_of(d, i), w.label_of(e, j),
                                              w.label_of(f, m)])
    return fails


def counital_image(w, side, d, u):
    """Apply the source or target counital map to a degree-d coordinate dict."""
    if side not in ("source", "target"):
        raise ValueError(f"side must be 'source' or 'target', got {side!r}")
    out = {}
    for (i, j), c in w.delta_one().items():
        if side == "source":
            val = w.eps(d, w.multiply(d, u, 0, {j: _ONE}))
            if val:
                _bump(out, i, c * val)
        else:
            val = w.eps(d, w.multiply(0, {i: _ONE}, d, u))
            if val:
                _bump(out, j, c * val)
    return out


def counital_subalgebra(w, side):
    """Canonical degree-0 subspace spanned by counital images of all basis elements."""
    ech = Echelon(w.dim(0))
    for d in range(w.max_degree + 1):
        for v in range(w.dim(d)):
            vec = counital_image(w, side, d, {v: _ONE})
            if vec:
                ech.add(vec)
    return ech.finalize()


class BiidealGens:
    """Homogeneous generators of a prospective biideal inside a host presentation.

    Generators are (degree, coordinate dict) pairs; zero and repeated
    generators are dropped.
    """

    def __init__(self, host, generators):
        self.host = host
        gens = []
        seen = set()
        for d, vec in generators:
            vec = {i: Fraction(c) for i, c in vec.items() if c}
            if not vec:
                continue
            key = (d, tuple(sorted(vec.items())))
            if key in seen:
                continue
            seen.add(key)
            gens.append((d, vec))
        self.generators = tuple(gens)
        self._pieces = {}


def biideal_graded_pieces(b, d):
    """Degree-d piece of the two-sided ideal generated by b, as a Subspace.

    One-step spanning from degree d-1 by all degree-1 basis elements on both
    sides, plus degree-d generators, then two-sided saturation by degree-0
    basis elements until the rank stabilizes.  Complete because the hosts
    here are generated in degrees 0 and 1.
    """
    if d in b._pieces:
        return b._pieces[d]
    w = b.host
    if d > w.max_degree:
        raise ValueError(f"degree {d} exceeds the host truncation {w.max_degree}")
    ech = Echelon(w.dim(d))
    for gd, vec in b.generators:
        if gd == d:
            ech.add(vec)
    if d >= 1:
        prev = biideal_graded_pieces(b, d - 1)
        for row in prev.basis:
            for a in range(w.dim(1)):
                arrow = {a: _ONE}
                left = w.multiply(1, arrow, d - 1, row)
                if left:
                    ech.add(left)
                right = w.multiply(d - 1, row, 1, arrow)
                if right:
                    ech.add(right)
    while True:
        before = ech.rank
        for row in ech.rows():
            for z in range(w.dim(0)):
                zvec = {z: _ONE}
                left = w.multiply(0, zvec, d, row)
                if left:
                    ech.add(left)
                right = w.multiply(d, row, 0, zvec)
                if right:
                    ech.add(right)
        if ech.rank == before:
            break
    piece = ech.finalize()
    b._pieces[d] = piece
    return piece


def check_biideal(b, max_degree):
    """Counit vanishing and coproduct descent for every graded piece ≤ max_degree."""
    w = b.host
    if max_degree > w.max_degree:
        raise ValueError(f"cannot check beyond the host truncation {w.max_degree}")
    pieces = [biideal_graded_pieces(b, d) for d in range(max_degree + 1)]
    eps_fails = []
    delta_fails = []
    for d in range(max_degree + 1):
        piece = pieces[d]
        if not piece.dim:
            continue
        residues = [piece.reduce({j: _ONE}) for j in range(w.dim(d))]
        for r, row in enumerate(piece.basis):
            if w.eps(d, row):
                eps_fails.append(f"degree {d}, piece row {r}")
            image = {}
            for (j, k), c in w.delta(d, row).items():
                rj = residues[j]
                rk = residues[k]
                if not rj or not rk:
                    continue
                for m, cm in rj.items():
                    crm = c * cm
                    for n, cn in rk.items():
                        _bump(image, (m, n), crm * cn)
            if image:
                delta_fails.append(f"degree {d}, piece row {r}")
    rows = [
        _row("counit-vanishes", eps_fails, key="check"),
        _row("coproduct-descends", delta_fails, key="check"),
    ]
    return {"passed": not (eps_fails or delta_fails), "checks": rows}


def quotient_wba(b, report=None):
    """Quotient presentation on the non-pivot coset basis of each graded piece.

    Refuses (with the failing report attached) unless the biideal check
    passes up to the host truncation.  Labels name coset representatives.
    """
    w = b.host
    if report is None:
        report = check_biideal(b, w.max_degree)
    if not report["passed"]:
        raise VerificationError("biideal verification failed; not a quotient weak bialgebra",
                                report)
    pieces = [biideal_graded_pieces(b, d) for d in range(w.max_degree + 1)]
    nonpivot, project = _quotient_maps(w, pieces)
    labels = [[w.labels[d][m] for m in nonpivot[d]] for d in range(w.max_degree + 1)]
    product = {}
    for d in range(w.max_degree + 1):
        for e in range(w.max_degree + 1 - d):
            for i, mi in enumerate(nonpivot[d]):
                for j, mj in enumerate(nonpivot[e]):
                    entry = w.product_of(d, mi, e, mj)
                    if not entry:
                        continue
                    img = project(d + e, entry)
                    if img:
                        product[(d, i, e, j)] = img
    unit = project(0, w.unit)
    residues = [[project(d, {m: _ONE}) for m in range(w.dim(d))]
                for d in range(w.max_degree + 1)]
    coproduct = {}
    counit = {}
    for d in range(w.max_degree + 1):
        for i, mi in enumerate(nonpivot[d]):
            entry = {}
            for (j, k), c in w.coproduct_of(d, mi).items():
                rj = residues[d][j]
                rk = residues[d][k]
                for m, cm in rj.items():
                    ccm = c * cm
                    for n, cn in rk.items():
                        _bump(entry, (m, n), ccm * cn)
            if entry:
                coproduct[(d, i)] = entry
            ev = w.counit_of(d, mi)
            if ev:
                counit[(d, i)] = ev
    return GradedWBA(w.max_degree, labels, product, unit, coproduct, counit)
