"""Command line front end.

Five subcommands: face (face algebra presentation and axioms), verify
(canonical coactions and base isomorphisms), coact (verify one coaction,
canonical or from a document), uqsgd (build and verify a universal quantum
semigroupoid of a quadratic quotient), dual (quadratic dual presentation
and duality transports).  Inputs are JSON documents; reports are JSON with
a formatVersion field, rendered deterministically.  Exit codes: 0 all
checks pass, 1 a verification failed, 2 malformed input or options,
3 unsupported input shape.
"""

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import coaction as co
from . import face as fc
from . import pathalg as pa
from . import quiver as qv
from . import uqsgd as uq
from . import wba
from .errors import ParseError, UnsupportedShapeError, VerificationError

FORMAT_VERSION = "faceq/1"
COMMANDS = ("face", "verify", "coact", "uqsgd", "dual")
EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_SHAPE = 3


@dataclass
class JobConfig:
    command: str
    quiver_path: str
    relations_path: str = None
    side: str = "trans"
    max_degree: int = 4
    out_path: str = None
    human: bool = False

    def validate(self):
        if self.command not in COMMANDS:
            raise ParseError(f"unknown command {self.command!r}")
        if self.max_degree < 0:
            raise ParseError("--max-degree must be nonnegative")
        if self.command in ("uqsgd", "dual"):
            if self.relations_path is None:
                raise ParseError(f"{self.command} requires --relations")
            if self.max_degree < 2:
                raise ParseError(f"{self.command} requires --max-degree at least 2")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="faceq",
        description="Weak bialgebras of quivers and their quadratic quotients.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--quiver", required=True,
                        help="path to the quiver JSON document")
    common.add_argument("--relations",
                        help="path to a relations document (or a coaction document for coact)")
    common.add_argument("--side", choices=("left", "right", "trans"), default="trans",
                        help="which coaction side to build or verify")
    common.add_argument("--max-degree", type=int, default=4, dest="max_degree",
                        help="truncation degree for all graded computations")
    common.add_argument("--out", help="write the report to this file instead of stdout")
    common.add_argument("--human", action="store_true",
                        help="plain-text summary instead of JSON")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, text in (
        ("face", "present the face algebra of a quiver and check its axioms"),
        ("verify", "verify the canonical coactions, base isomorphisms and lemmas"),
        ("coact", "verify one coaction, canonical or given as a document"),
        ("uqsgd", "build and verify the quantum semigroupoid of a quadratic quotient"),
        ("dual", "present the quadratic dual and check the duality transports"),
    ):
        sub.add_parser(name, parents=[common], help=text)
    return parser


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from None


def _load_quiver(cfg):
    return qv.parse_quiver(_load_json(cfg.quiver_path))


def _load_ideal(cfg, q):
    doc = _load_json(cfg.relations_path)
    relations = pa.parse_relations(doc, q)
    try:
        return pa.HomogeneousIdeal(q, relations)
    except ValueError as exc:
        raise UnsupportedShapeError(str(exc)) from None


def _quiver_doc(q):
    return {
        "vertices": list(q.vertices),
        "arrows": [{"name": a.name, "source": q.vertices[a.source],
                    "target": q.vertices[a.target]} for a in q.arrows],
    }


def _coords_text(labels_d, coords):
    if not coords:
        return "0"
    return " + ".join(f"{coords[i]} * {labels_d[i]}" for i in sorted(coords))


def _subspace_text(labels_d, subspace):
    return [_coords_text(labels_d, row) for row in subspace.basis]


def _coaction_doc(cspec, host):
    return {
        "side": cspec.side,
        "coefficients": [
            [[_coords_text(host.labels[d], entry) for entry in row] for row in mat]
            for d, mat in enumerate(cspec.coefficients)
        ],
    }


def _base_iso_section(cspec, host):
    found = co.search_base_iso(cspec, host)
    if found is None:
        return {"found": False}, False
    verification = co.verify_base_iso(cspec, host, found)
    section = {
        "found": True,
        "images": [_coords_text(host.labels[0], v) for v in found],
        "verification": verification,
    }
    return section, verification["passed"]


def _coaction_section(cspec, host):
    comodule = co.check_comodule_algebra(cspec, host)
    lemmas = co.check_structure_lemmas(cspec, host)
    iso, iso_ok = _base_iso_section(cspec, host)
    passed = comodule["passed"] and lemmas["passed"] and iso_ok
    return {
        "comodule": comodule,
        "structureLemmas": lemmas,
        "baseIso": iso,
        "passed": passed,
    }


def run_face(cfg):
    q = _load_quiver(cfg)
    w = wba.from_face_algebra(q, cfg.max_degree)
    axioms = wba.check_axioms(w)
    counital = {}
    for side in ("source", "target"):
        sub = wba.counital_subalgebra(w, side)
        counital[side] = {"dim": sub.dim, "basis": _subspace_text(w.labels[0], sub)}
    idempotents = {
        side: [fc.format_element(e) for e in fc.face_idempotents(q, side)]
        for side in ("source", "target")
    }
    return {
        "formatVersion": FORMAT_VERSION,
        "command": "face",
        "quiver": _quiver_doc(q),
        "maxDegree": cfg.max_degree,
        "dims": w.dims(),
        "counital": counital,
        "faceIdempotents": idempotents,
        "axioms": axioms,
        "passed": axioms["passed"],
    }


def run_verify(cfg):
    q = _load_quiver(cfg)
    m = cfg.max_degree
    w = wba.from_face_algebra(q, m)
    axioms = wba.check_axioms(w)
    source_dim = wba.counital_subalgebra(w, "source").dim
    target_dim = wba.counital_subalgebra(w, "target").dim
    lam = co.canonical_coaction(q, "left", m)
    rho = co.canonical_coaction(q, "right", m)
    sections = {"left": _coaction_section(lam, w), "right": _coaction_section(rho, w)}
    transposed = co.check_transposed(lam, rho)
    passed = (axioms["passed"] and transposed
              and source_dim == target_dim == len(q.vertices)
              and all(s["passed"] for s in sections.values()))
    return {
        "formatVersion": FORMAT_VERSION,
        "command": "verify",
        "quiver": _quiver_doc(q),
        "maxDegree": m,
        "dims": w.dims(),
        "axioms": axioms,
        "counitalDims": {"source": source_dim, "target": target_dim},
        "coactions": sections,
        "transposed": transposed,
        "passed": passed,
    }


def _parse_coaction_doc(doc, q, cap):
    if not isinstance(doc, dict):
        raise ParseError("coaction document must be an object")
    side = doc.get("side")
    if side not in ("left", "right"):
        raise ParseError("coaction document needs a side of 'left' or 'right'")
    mats = doc.get("coefficients")
    if not isinstance(mats, list) or not mats:
        raise ParseError("coaction document needs a nonempty 'coefficients' list")
    window = min(len(mats) - 1, cap)
    algebra = wba.path_algebra_presentation(q, window)
    coefficients = []
    for d in range(window + 1):
        mat = mats[d]
        n = algebra.dim(d)
        if (not isinstance(mat, list) or len(mat) != n
                or any(not isinstance(row, list) or len(row) != n for row in mat)):
            raise ParseError(f"degree-{d} coefficient matrix must be {n}x{n}")
        face_index = {mono: i for i, mono in enumerate(fc.face_basis(q, d))}
        out = []
        for row in mat:
            out_row = []
            for cell in row:
                elem = fc.parse_element(q, cell)
                coords = {}
                for mono, coeff in elem.terms.items():
                    if fc.monomial_degree(mono) != d:
                        raise ParseError(
                            f"degree-{d} entry holds a degree-{fc.monomial_degree(mono)} term")
                    coords[face_index[mono]] = coeff
                out_row.append(coords)
            out.append(out_row)
        coefficients.append(out)
    endpoints = [(a.source, a.target) for a in q.arrows]
    return co.CoactionSpec(side, algebra, coefficients, endpoints), window


def run_coact(cfg):
    q = _load_quiver(cfg)
    if cfg.relations_path is not None:
        cspec, window = _parse_coaction_doc(_load_json(cfg.relations_path), q,
                                            cfg.max_degree)
        host = wba.from_face_algebra(q, window)
        sections = {cspec.side: _coaction_section(cspec, host)}
        transposed = None
        m = window
    else:
        m = cfg.max_degree
        host = wba.from_face_algebra(q, m)
        sides = ("left", "right") if cfg.side == "trans" else (cfg.side,)
        specs = {s: co.canonical_coaction(q, s, m) for s in sides}
        sections = {s: _coaction_section(specs[s], host) for s in sides}
        transposed = (co.check_transposed(specs["left"], specs["right"])
                      if cfg.side == "trans" else None)
    passed = all(s["passed"] for s in sections.values())
    if transposed is not None:
        passed = passed and transposed
    doc = {
        "formatVersion": FORMAT_VERSION,
        "command": "coact",
        "quiver": _quiver_doc(q),
        "maxDegree": m,
        "coactions": sections,
        "passed": passed,
    }
    if transposed is not None:
        doc["transposed"] = transposed
    return doc


def run_uqsgd(cfg):
    q = _load_quiver(cfg)
    ideal = _load_ideal(cfg, q)
    result = uq.build_uqsgd(q, ideal, cfg.side, cfg.max_degree)
    host = result.biideal.host
    gens = [_coords_text(host.labels[d], coords)
            for d, coords in result.biideal.generators]
    algebra_dims = [pa.quotient_dimension(ideal, d)
                    for d in range(cfg.max_degree + 1)]
    return {
        "formatVersion": FORMAT_VERSION,
        "command": "uqsgd",
        "quiver": _quiver_doc(q),
        "side": cfg.side,
        "maxDegree": cfg.max_degree,
        "relations": [pa.format_path_element(g) for g in ideal.generators],
        "biidealGenerators": gens,
        "quotientDims": result.quotient_dims,
        "algebraDims": algebra_dims,
        "inducedCoactions": {
            s: _coaction_doc(spec, result.quotient)
            for s, spec in result.induced_coactions.items()
        },
        "verification": result.verification,
        "passed": True,
    }


def run_dual(cfg):
    q = _load_quiver(cfg)
    ideal = _load_ideal(cfg, q)
    qd = pa.quadratic_data(ideal)
    qdual = pa.quadratic_dual(qd)
    opp = qdual.quiver
    paths2 = qv.enumerate_paths(opp, 2)
    dual_relations = [pa.format_path_element(pa.row_element(opp, row, paths2))
                      for row in qdual.relation_space.basis]
    dual_ideal = pa.quadratic_ideal(qdual)
    report = uq.check_quadratic_dualities(q, ideal, cfg.max_degree)
    return {
        "formatVersion": FORMAT_VERSION,
        "command": "dual",
        "quiver": _quiver_doc(q),
        "maxDegree": cfg.max_degree,
        "dualQuiver": _quiver_doc(opp),
        "dualRelations": dual_relations,
        "primalDims": [pa.quotient_dimension(ideal, d)
                       for d in range(cfg.max_degree + 1)],
        "dualDims": [pa.quotient_dimension(dual_ideal, d)
                     for d in range(cfg.max_degree + 1)],
        "dualities": report,
        "passed": report["passed"],
    }


RUNNERS = {
    "face": run_face,
    "verify": run_verify,
    "coact": run_coact,
    "uqsgd": run_uqsgd,
    "dual": run_dual,
}


def _human_text(doc):
    lines = [f"faceq {doc.get('command', '?')} report"]
    if "error" in doc:
        lines.append(f"error: {doc['error']}")
    for key in ("dims", "quotientDims", "algebraDims", "primalDims", "dualDims"):
        if key in doc:
            lines.append(f"{key}: {' '.join(str(n) for n in doc[key])}")
    if "transposed" in doc:
        lines.append(f"transposed: {'yes' if doc['transposed'] else 'no'}")

    def walk(node, path):
        if isinstance(node, dict):
            name = node.get("check", node.get("axiom"))
            if "status" in node and name is not None:
                lines.append(f"{path}{name}: {node['status']}")
                for w in node.get("witnesses", []):
                    lines.append(f"  witness: {json.dumps(w)}")
                return
            for k in sorted(node):
                walk(node[k], f"{path}{k}.")
        elif isinstance(node, list):
            for item in node:
                walk(item, path)

    walk({k: v for k, v in doc.items() if k not in ("quiver", "dualQuiver")}, "")
    lines.append(f"passed: {'yes' if doc.get('passed') else 'no'}")
    return "\n".join(lines) + "\n"


def _emit(cfg, doc):
    doc = _jsonable(doc)
    if cfg.human:
        text = _human_text(doc)
    else:
        text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if cfg.out_path:
        with open(cfg.out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _finish(cfg, doc, code):
    try:
        _emit(cfg, doc)
    except OSError as exc:
        sys.stderr.write(f"cannot write report: {exc}\n")
        return EXIT_PARSE
    return code


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    cfg = JobConfig(command=args.command, quiver_path=args.quiver,
                    relations_path=args.relations, side=args.side,
                    max_degree=args.max_degree, out_path=args.out,
                    human=args.human)
    base = {"formatVersion": FORMAT_VERSION, "command": cfg.command, "passed": False}
    try:
        cfg.validate()
        doc = RUNNERS[cfg.command](cfg)
    except ParseError as exc:
        return _finish(cfg, dict(base, error=str(exc)), EXIT_PARSE)
    except UnsupportedShapeError as exc:
        return _finish(cfg, dict(base, error=str(exc)), EXIT_SHAPE)
    except VerificationError as exc:
        doc = dict(base, error=str(exc))
        if exc.report is not None:
            doc["report"] = exc.report
        return _finish(cfg, doc, EXIT_FAIL)
    return _finish(cfg, doc, EXIT_PASS if doc["passed"] else EXIT_FAIL)


if __name__ == "__main__":
    sys.exit(main())
