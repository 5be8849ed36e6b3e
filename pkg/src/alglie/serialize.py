"""JSON encoding shared by every command.

Rationals travel as strings ("p/q", or "p" for integers) so nothing is
rounded in transit. Every ``*_to_json`` has a matching ``*_from_json``.
"""

from __future__ import annotations

import json
from typing import Any

from .algebraicity import Adjunction, HullReport, NilpotentDecomposition, Verdict, Witness
from .catalog import ComparisonReport, FiliformRep, RelationCheck
from .jordan import JordanPair
from .liealg import LieSubalgebra
from .ratlinalg import IntegerLattice, Q, QMatrix, QPoly, Rational, Subspace, rational_str
from .replica import ReplicaResult


class SchemaError(ValueError):
    """Input JSON does not match the expected shape."""


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def rational_from_json(s) -> Rational:
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise SchemaError(f"rational must be a string 'p/q' or an integer, got {s!r}")
    try:
        q = Q(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"bad rational {s!r}") from exc
    return q


def qmatrix_to_json(m: QMatrix) -> dict:
    return {"dim": m.dim, "entries": [[rational_str(v) for v in row] for row in m.rows]}


def qmatrix_from_json(d) -> QMatrix:
    try:
        n = d["dim"]
        entries = d["entries"]
    except (TypeError, KeyError) as exc:
        raise SchemaError("QMatrix needs 'dim' and 'entries'") from exc
    if not isinstance(n, int) or n < 1 or len(entries) != n or any(len(r) != n for r in entries):
        raise SchemaError(f"QMatrix entries must be a {n}x{n} grid")
    return QMatrix([[rational_from_json(v) for v in row] for row in entries])


def qpoly_to_json(p: QPoly) -> list[str]:
    return [rational_str(c) for c in p.coeffs]


def qpoly_from_json(d) -> QPoly:
    return QPoly(rational_from_json(c) for c in d)


def jordan_pair_to_json(jp: JordanPair) -> dict:
    return {"semisimple": qmatrix_to_json(jp.semisimple), "nilpotent": qmatrix_to_json(jp.nilpotent)}


def jordan_pair_from_json(d) -> tuple[QMatrix, QMatrix]:
    return qmatrix_from_json(d["semisimple"]), qmatrix_from_json(d["nilpotent"])


def basis_to_json(mats) -> list[dict]:
    return [qmatrix_to_json(m) for m in mats]


def lie_to_json(L: LieSubalgebra) -> dict:
    return {"dim": L.dim, "basis": basis_to_json(L.user_basis)}


def subspace_to_json(s: Subspace) -> dict:
    return {"dim": s.dim, "basis": basis_to_json(s.basis)}


def _basis_from_json(d) -> list[QMatrix]:
    try:
        basis = [qmatrix_from_json(m) for m in d["basis"]]
    except (TypeError, KeyError) as exc:
        raise SchemaError("expected an object with a 'basis' list") from exc
    if "dim" in d and d["dim"] != len(basis):
        raise SchemaError(f"'dim' is {d['dim']} but the basis has {len(basis)} elements")
    if basis and len({m.dim for m in basis}) != 1:
        raise SchemaError("basis matrices have different sizes")
    return basis


def lie_from_json(d, ambient_dim: int | None = None) -> LieSubalgebra:
    """Parse ``{"dim": k, "basis": [...]}``; raises NotClosed if not a subalgebra."""
    basis = _basis_from_json(d)
    if not basis and ambient_dim is None:
        raise SchemaError("an empty basis needs 'ambient_dim'")
    ambient_dim = ambient_dim or d.get("ambient_dim") or basis[0].dim
    space = Subspace.span(basis, ambient_dim)
    if space.dim != len(basis):
        raise SchemaError("basis matrices are linearly dependent")
    return LieSubalgebra(space, basis)


def subspace_from_json(d, ambient_dim: int | None = None) -> Subspace:
    basis = _basis_from_json(d)
    return Subspace.span(basis, ambient_dim or (basis[0].dim if basis else None))


def structure_constants_to_json(c) -> dict:
    return {"c": [[[rational_str(v) for v in row] for row in plane] for plane in c]}


def structure_constants_from_json(d) -> tuple:
    return tuple(tuple(tuple(rational_from_json(v) for v in row) for row in plane) for plane in d["c"])


def lattice_to_json(lat: IntegerLattice) -> list[list[int]]:
    return [list(map(int, b)) for b in lat.basis]


def replica_to_json(r: ReplicaResult) -> dict:
    return {
        "lattice": lattice_to_json(r.lattice),
        "semisimple_replica": basis_to_json(r.semisimple_replica.basis),
        "nilpotent_replica": basis_to_json(r.nilpotent_replica.basis),
        "total": basis_to_json(r.total.basis),
        "semisimple": qmatrix_to_json(r.semisimple),
        "nilpotent": qmatrix_to_json(r.nilpotent),
    }


def replica_from_json(d) -> ReplicaResult:
    xs = qmatrix_from_json(d["semisimple"])
    n = xs.dim
    spaces = [Subspace.span([qmatrix_from_json(m) for m in d[k]], n)
              for k in ("semisimple_replica", "nilpotent_replica", "total")]
    width = len(d["lattice"][0]) if d["lattice"] else 0
    lattice = IntegerLattice(width, tuple(tuple(int(x) for x in row) for row in d["lattice"]))
    return ReplicaResult(*spaces, lattice, xs, qmatrix_from_json(d["nilpotent"]))


def witness_to_json(w: Witness) -> dict:
    return {
        "element": qmatrix_to_json(w.element),
        "coords": [rational_str(c) for c in w.coords],
        "part": w.part,
        "failing_matrix": qmatrix_to_json(w.failing_matrix),
    }


def verdict_to_json(v: Verdict) -> dict:
    out = {"kind": v.kind}
    if v.witness is not None:
        out["witness"] = witness_to_json(v.witness)
    out.update({
        "samples": v.samples_checked,
        "seed": v.seed,
        "random_samples": v.samples,
        "bound": v.bound,
        "split_failures": list(v.split_failures),
    })
    return out


def verdict_from_json(d) -> Verdict:
    w = d.get("witness")
    witness = None
    if w is not None:
        witness = Witness(
            qmatrix_from_json(w["element"]),
            tuple(rational_from_json(c) for c in w["coords"]),
            w["part"],
            qmatrix_from_json(w["failing_matrix"]),
        )
    return Verdict(d["kind"], witness, d["samples"], d["seed"], d.get("random_samples", 32),
                   d.get("bound", 5), tuple(d.get("split_failures", ())))


def hull_to_json(r: HullReport) -> dict:
    return {
        "hull": lie_to_json(r.hull),
        "rounds": r.rounds,
        "valid": r.valid,
        "adjoined": [
            {"source": qmatrix_to_json(a.source), "adjoined": qmatrix_to_json(a.adjoined), "reason": a.reason}
            for a in r.adjoined
        ],
        "verdict": verdict_to_json(r.verdict) if r.verdict is not None else None,
    }


def hull_from_json(d) -> HullReport:
    adj = tuple(
        Adjunction(qmatrix_from_json(a["source"]), qmatrix_from_json(a["adjoined"]), a["reason"]) for a in d["adjoined"]
    )
    verdict = verdict_from_json(d["verdict"]) if d.get("verdict") is not None else None
    return HullReport(lie_from_json(d["hull"]), d["rounds"], adj, d["valid"], verdict)


def decomposition_to_json(dec: NilpotentDecomposition) -> dict:
    return {
        "nil_part": basis_to_json(dec.nil_part.basis),
        "semisimple_part": basis_to_json(dec.semisimple_part.basis),
        "valid": dec.valid,
        "reason": dec.reason,
        "reasons": list(dec.reasons),
    }


def decomposition_from_json(d, ambient_dim: int) -> NilpotentDecomposition:
    nil = Subspace.span([qmatrix_from_json(m) for m in d["nil_part"]], ambient_dim)
    ss = Subspace.span([qmatrix_from_json(m) for m in d["semisimple_part"]], ambient_dim)
    return NilpotentDecomposition(nil, ss, d["valid"], tuple(d.get("reasons", ())))


def comparison_report_to_json(r: ComparisonReport) -> dict:
    first = r.first_failure
    return {
        "n": r.n,
        "confirmed": r.confirmed,
        "first_failure": first.relation if first else None,
        "generated_dim": r.generated_dim,
        "checks": [{"relation": c.relation, "holds": c.holds, "detail": c.detail} for c in r.checks],
    }


def comparison_checks_from_json(d) -> tuple[RelationCheck, ...]:
    return tuple(RelationCheck(c["relation"], c["holds"], c["detail"]) for c in d["checks"])


def filiform_to_json(f: FiliformRep) -> dict:
    return {
        "X1": qmatrix_to_json(f.x1),
        "X2": qmatrix_to_json(f.x2),
        "generated": lie_to_json(f.generated),
        "comparison_report": comparison_report_to_json(f.report),
    }
