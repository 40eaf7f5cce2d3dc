"""Deduction engine: chains the exact rules into cited, replayable verdicts.

Every recorded step is the literal input/output of one exact operation, so a
certificate can be checked by re-running those operations (see :func:`replay`).
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from .bounds import (
    AngleRule,
    Threshold,
    gerzon_bound,
    lemmens_seidel_third,
    lrs_angles,
    neumann_angles,
    relative_bound,
)
from .designs import (
    Eigenspace,
    project_srg,
    shifted_lift,
    tight4_params,
    tight5_params,
    tight5_srg_family,
    c2_zeros,
)
from .exact import format_exact, parse_exact, simplify
from .frames import EtfSpec, complementary_etf, frame_potential_equiangular, welch_angle
from .srg import (
    NonIntegral,
    SpectrumError,
    SrgDatabase,
    SrgParams,
    Status,
    complement,
    default_database,
    feasible,
    fjg_ascend,
    fjg_descent,
    is_regular_two_graph,
    waldron_srg_of_etf,
)

__all__ = [
    "Rule",
    "Conclusion",
    "DeductionStep",
    "Verdict",
    "InvariantViolation",
    "lines_verdict",
    "srg_verdict",
    "table1_report",
    "tight5_report",
    "replay",
    "check_certificate",
    "structure_problems",
    "TABLE1_ROWS",
    "TIGHT5_NONEXISTENT_M",
]

MAX_HOPS = 2

TABLE1_ROWS = ((42, 288), (45, 540), (46, 736))

# m with no tight 5-design in R^((2m+1)^2 - 2); a prefix of a known infinite family
TIGHT5_NONEXISTENT_M = frozenset({3, 4, 6, 10, 12, 22, 30, 34, 38, 42, 46})
TIGHT5_NONEXISTENCE_SOURCE = "ban04, neb12"

LITERATURE_NOTES = {
    SrgParams(76, 30, 8, 14): "nonexistence was also shown independently in [bon14]",
    SrgParams(76, 45, 28, 24): "complement of srg(76,30,8,14); nonexistence also shown in [bon14]",
}


class InvariantViolation(RuntimeError):
    """The engine produced something its own operations do not reproduce."""


class Rule(enum.Enum):
    NEUMANN_ANGLES = "NeumannAngles"
    LRS_ANGLES = "LrsAngles"
    LEMMENS_SEIDEL_THIRD = "LemmensSeidelThird"
    RELATIVE_BOUND = "RelativeBound"
    GERZON_BOUND = "GerzonBound"
    WELCH_TIGHTNESS = "WelchTightness"
    WALDRON_CORRESPONDENCE = "WaldronCorrespondence"
    WALDRON_INTEGRALITY = "WaldronIntegrality"
    SRG_DATABASE = "SrgDatabase"
    SRG_FEASIBILITY = "SrgFeasibility"
    COMPLEMENT = "Complement"
    FJG_DESCENT = "FjgDescent"
    FJG_ASCEND = "FjgAscend"
    PROJECTION = "Projection"
    SHIFTED_LIFT = "ShiftedLift"
    COMPLEMENTARY_ETF = "ComplementaryEtf"
    TIGHT5_FAMILY = "Tight5Family"
    TIGHT4_PARAMS = "Tight4Params"
    MONOTONICITY = "Monotonicity"


class Conclusion(enum.Enum):
    NONEXISTENCE = "NonexistenceCertified"
    EXISTENCE = "ExistenceKnown"
    OPEN = "Open"


@dataclass
class DeductionStep:
    rule: Rule
    inputs: dict[str, Any]
    outputs: dict[str, Any]
    citation: str
    depth: int = 0
    branch: str = ""

    def to_dict(self) -> dict:
        return {
            "rule": self.rule.value,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "citation": self.citation,
            "depth": self.depth,
            "branch": self.branch,
        }

    @classmethod
    def from_dict(cls, d: dict) -> DeductionStep:
        return cls(
            Rule(d["rule"]), d["inputs"], d["outputs"], d["citation"], d.get("depth", 0), d.get("branch", "")
        )

    @property
    def refutes(self) -> bool:
        """Whether this step on its own closes a branch negatively."""
        out = self.outputs
        if self.rule in (Rule.GERZON_BOUND, Rule.LEMMENS_SEIDEL_THIRD, Rule.RELATIVE_BOUND):
            return bool(out["refutes"])
        if self.rule in (Rule.LRS_ANGLES, Rule.NEUMANN_ANGLES):
            return out.get("admitted") is False or ("admitted" not in out and not out["candidates"] and out["rule"] == "LRS")
        if self.rule is Rule.WELCH_TIGHTNESS:
            return bool(out["violated"])
        if self.rule is Rule.WALDRON_INTEGRALITY:
            return True
        if self.rule is Rule.SRG_FEASIBILITY:
            return not out["ok"]
        if self.rule is Rule.SRG_DATABASE:
            return out["status"] == "NOT_EXISTS"
        return False


@dataclass
class Verdict:
    query: dict[str, Any]
    conclusion: Conclusion
    steps: list[DeductionStep] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "query": self.query,
            "conclusion": self.conclusion.value,
            "steps": [s.to_dict() for s in self.steps],
            "notes": list(self.notes),
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, d: dict) -> Verdict:
        return cls(
            d["query"],
            Conclusion(d["conclusion"]),
            [DeductionStep.from_dict(s) for s in d["steps"]],
            list(d.get("notes", [])),
        )

    def rules(self) -> list[Rule]:
        return [s.rule for s in self.steps]

    def render_text(self) -> str:
        return render_verdict(self.to_dict())


def _fmt_value(value) -> str:
    if isinstance(value, list):
        return "[" + ", ".join(_fmt_value(v) for v in value) + "]"
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {_fmt_value(v)}" for k, v in value.items()) + "}"
    return str(value)


def _fmt_fields(d: dict) -> str:
    return " ".join(f"{k}={_fmt_value(v)}" for k, v in d.items())


def render_verdict(d: dict, indent: str = "") -> str:
    lines = [f"{indent}query: {_fmt_fields(d['query'])}", f"{indent}conclusion: {d['conclusion']}"]
    lines.append(f"{indent}steps:")
    for i, s in enumerate(d["steps"], 1):
        pad = indent + "  " * (s["depth"] + 1)
        label = f"  ({s['branch']})" if s.get("branch") else ""
        lines.append(f"{pad}[{i}] {s['rule']}{label}")
        lines.append(f"{pad}    inputs: {_fmt_fields(s['inputs'])}")
        lines.append(f"{pad}    outputs: {_fmt_fields(s['outputs'])}")
        lines.append(f"{pad}    citation: {s['citation']}")
    if d["notes"]:
        lines.append(f"{indent}notes:")
        lines.extend(f"{indent}  - {n}" for n in d["notes"])
    return "\n".join(lines)


# --- serialization helpers ----------------------------------------------------


def _ex(x) -> str:
    return format_exact(x)


def _srg(p: SrgParams) -> list[int]:
    return list(p.astuple())


def _P(x) -> SrgParams:
    return SrgParams(*x)


# --- operations: serialized inputs -> serialized outputs ----------------------


def _op_neumann(i, db):
    s = neumann_angles(i["n"], i["M"], i.get("cutoff", 4))
    out = {"rule": s.rule.value, "candidates": [_ex(c) for c in s.candidates]}
    if "angle" in i:
        out["admitted"] = s.admits(parse_exact(i["angle"]))
    return out


def _op_lrs(i, db):
    s = lrs_angles(i["n"], i["M"], Threshold(i["threshold"]))
    out = {"rule": s.rule.value, "candidates": [_ex(c) for c in s.candidates]}
    if "angle" in i:
        out["admitted"] = s.admits(parse_exact(i["angle"]))
    return out


def _op_lemmens(i, db):
    bound = lemmens_seidel_third(i["n"])
    return {"bound": bound, "refutes": bound is not None and i["M"] > bound}


def _op_relative(i, db):
    bound = relative_bound(i["n"], parse_exact(i["angle"]))
    return {
        "bound": None if bound is None else _ex(bound),
        "refutes": bound is not None and i["M"] > bound,
    }


def _op_gerzon(i, db):
    bound, angle = gerzon_bound(i["n"])
    return {"bound": bound, "attaining_angle": _ex(angle), "refutes": i["M"] > bound}


def _op_welch(i, db):
    n, M = i["n"], i["M"]
    fp = frame_potential_equiangular(n, M, parse_exact(i["angle"]))
    return {
        "fp": _ex(fp.fp),
        "floor": _ex(Fraction(M * M, n)),
        "tight": fp.tight,
        "violated": fp.violated,
    }


def _op_waldron(i, db):
    res = waldron_srg_of_etf(EtfSpec(i["n"], i["M"]))
    if isinstance(res, NonIntegral):
        return {"k": _ex(res.k), "reason": res.reason}
    k = res.primary.k
    return {"k": k, "primary": _srg(res.primary), "complementary": _srg(res.complementary)}


def _op_database(i, db):
    rec = (db or default_database()).lookup(_P(i["srg"]))
    return {"status": rec.status.name, "source": rec.source, "via_complement": rec.via_complement}


def _op_feasibility(i, db):
    ok, failures = feasible(_P(i["srg"]))
    return {"ok": ok, "failures": failures}


def _op_complement(i, db):
    return {"complement": _srg(complement(_P(i["srg"])))}


def _op_descent(i, db):
    return {"descended": _srg(fjg_descent(_P(i["srg"])))}


def _op_ascend(i, db):
    return {"sources": [_srg(p) for p in fjg_ascend(_P(i["srg"]))]}


def _op_projection(i, db):
    t = project_srg(_P(i["srg"]), Eigenspace(i["eigenspace"]))
    return {
        "dimension": t.dimension,
        "size": t.size,
        "inner_a": _ex(t.inner_a),
        "inner_b": _ex(t.inner_b),
        "equiangular": t.equiangular,
    }


def _op_lift(i, db):
    from .designs import TwoDistanceSpec

    t = TwoDistanceSpec(i["dimension"], i["size"], parse_exact(i["a"]), parse_exact(i["b"]), 2, True)
    lift = shifted_lift(t)
    return {
        "dimension": lift.lifted.dimension,
        "angle": _ex(lift.angle),
        "s2": _ex(lift.scale),
        "h2": _ex(lift.height),
        "tight": lift.lifted.tight_frame,
    }


def _op_complementary_etf(i, db):
    e = complementary_etf(EtfSpec(i["n"], i["M"]))
    return {"n": e.dimension, "M": e.count, "angle": _ex(e.angle)}


def _op_tight5(i, db):
    n, lines, angle = tight5_params(i["m"])
    fam = tight5_srg_family(i["m"])
    return {
        "n": n,
        "lines": lines,
        "angle": _ex(angle),
        "members": [_srg(p) for p in fam.members],
    }


def _op_tight4(i, db):
    n, size, a, b = tight4_params(i["m"])
    return {"n": n, "size": size, "inner_a": _ex(a), "inner_b": _ex(b)}


def _op_monotone(i, db):
    angle = parse_exact(i["angle"]) if "angle" in i else None
    sub = lines_verdict(i["n"], i["base"], angle, threshold=Threshold(i["threshold"]), db=db)
    return {"base_conclusion": sub.conclusion.value}


_OPS: dict[Rule, Callable[[dict, SrgDatabase | None], dict]] = {
    Rule.NEUMANN_ANGLES: _op_neumann,
    Rule.LRS_ANGLES: _op_lrs,
    Rule.LEMMENS_SEIDEL_THIRD: _op_lemmens,
    Rule.RELATIVE_BOUND: _op_relative,
    Rule.GERZON_BOUND: _op_gerzon,
    Rule.WELCH_TIGHTNESS: _op_welch,
    Rule.WALDRON_CORRESPONDENCE: _op_waldron,
    Rule.WALDRON_INTEGRALITY: _op_waldron,
    Rule.SRG_DATABASE: _op_database,
    Rule.SRG_FEASIBILITY: _op_feasibility,
    Rule.COMPLEMENT: _op_complement,
    Rule.FJG_DESCENT: _op_descent,
    Rule.FJG_ASCEND: _op_ascend,
    Rule.PROJECTION: _op_projection,
    Rule.SHIFTED_LIFT: _op_lift,
    Rule.COMPLEMENTARY_ETF: _op_complementary_etf,
    Rule.TIGHT5_FAMILY: _op_tight5,
    Rule.TIGHT4_PARAMS: _op_tight4,
    Rule.MONOTONICITY: _op_monotone,
}

_CITATIONS = {
    Rule.NEUMANN_ANGLES: "Neumann: more than 2n equiangular lines force angle 1/(2k-1) [lem73]",
    Rule.LRS_ANGLES: "Larman-Rogers-Seidel: two-distance sets with |S| > 2n+3 have b = (ka-1)/(k-1), 2 <= k <= (1+sqrt(2n))/2 [lar77]",
    Rule.LEMMENS_SEIDEL_THIRD: "Lemmens-Seidel Thm 4.5: at angle 1/3 with n >= 15 there are at most 2n-2 lines [lem73]",
    Rule.RELATIVE_BOUND: "relative bound M <= n(1-c^2)/(1-nc^2) when nc^2 < 1 [lem73]",
    Rule.GERZON_BOUND: "Gerzon: M <= n(n+1)/2 [lem73]",
    Rule.WELCH_TIGHTNESS: "frame potential FP >= M^2/n with equality iff tight frame [ben03, Thm 6.2]",
    Rule.WALDRON_CORRESPONDENCE: "ETF(n,M), M > n+1, exists iff srg(M-1,k,(3k-M)/2,k/2) exists, either orientation [wal09, Cor 5.6]",
    Rule.WALDRON_INTEGRALITY: "non-integral Waldron parameters exclude ETF(n,M) [wal09, Cor 5.6]",
    Rule.SRG_FEASIBILITY: "SRG necessary conditions: counting identity, multiplicity integrality, Krein, absolute bound",
    Rule.COMPLEMENT: "the complement of an SRG is an SRG",
    Rule.FJG_DESCENT: "srg with v = 4k-2lambda-2mu yields an srg on v-1 vertices [fjg15, Cor 4.5]",
    Rule.FJG_ASCEND: "sources on v+1 vertices solving the descent equations [fjg15, Cor 4.5]",
    Rule.PROJECTION: "eigenspace projection of an SRG is a spherical two-distance 2-design [car01, Thm 5.3, Prop 5.1]",
    Rule.SHIFTED_LIFT: "the shifted 2-design is a two-distance tight frame in one more dimension [bgoy15, Prop 3.1]",
    Rule.COMPLEMENTARY_ETF: "ETF(n,M) exists iff ETF(M-n,M) exists [cas13, Cor 3.2]",
    Rule.TIGHT5_FAMILY: "tight 5-designs have n(n+1) points with n = (2m+1)^2 - 2 [del77b, Thm 5.12]",
    Rule.TIGHT4_PARAMS: "tight 4-designs are two-distance sets with inner products (-1 +- sqrt(n+3))/(n+2) [del77b, Thm 5.11]",
    Rule.MONOTONICITY: "any subset of an equiangular line system is equiangular",
}


def _clean(inputs: dict) -> dict:
    out = {}
    for k, v in inputs.items():
        if v is None:
            continue
        if isinstance(v, SrgParams):
            v = _srg(v)
        elif isinstance(v, (Fraction,)) or type(v).__name__ == "QuadraticSurd":
            v = _ex(v)
        elif isinstance(v, enum.Enum):
            v = v.value
        out[k] = v
    return out


class _Proof:
    def __init__(self, db: SrgDatabase | None):
        self.db = db or default_database()
        self.steps: list[DeductionStep] = []
        self.notes: list[str] = []
        self.branch = ""

    def record(self, rule: Rule, depth: int, **inputs) -> dict:
        inputs = _clean(inputs)
        outputs = _OPS[rule](inputs, self.db)
        if rule is Rule.SRG_DATABASE:
            citation = f"database record [{outputs['source']}]"
            if outputs["via_complement"]:
                citation += " (status of the complement)"
        else:
            citation = _CITATIONS[rule]
        self.steps.append(DeductionStep(rule, inputs, outputs, citation, depth, self.branch))
        return outputs

    def splice(self, steps: list[DeductionStep], depth: int, prefix: str = ""):
        for s in steps:
            parts = [x for x in (prefix, s.branch) if x]
            self.steps.append(
                DeductionStep(s.rule, s.inputs, s.outputs, s.citation, s.depth + depth, "/".join(parts))
            )

    def note(self, text: str):
        if text not in self.notes:
            self.notes.append(text)


# --- equiangular lines ----------------------------------------------------------


def _combine(results: list[Conclusion]) -> Conclusion:
    if all(r is Conclusion.NONEXISTENCE for r in results):
        return Conclusion.NONEXISTENCE
    if any(r is Conclusion.EXISTENCE for r in results):
        return Conclusion.EXISTENCE
    return Conclusion.OPEN


def _angle_branch(proof: _Proof, n: int, M: int, c, depth: int) -> Conclusion:
    c = simplify(c)
    if c == Fraction(1, 3):
        bound = lemmens_seidel_third(n)
        if bound is not None and M > bound:
            proof.record(Rule.LEMMENS_SEIDEL_THIRD, depth, n=n, M=M)
            return Conclusion.NONEXISTENCE
    rb = relative_bound(n, c)
    if rb is not None and M > rb:
        proof.record(Rule.RELATIVE_BOUND, depth, n=n, M=M, angle=c)
        return Conclusion.NONEXISTENCE
    fp = proof.record(Rule.WELCH_TIGHTNESS, depth, n=n, M=M, angle=c)
    if fp["violated"]:
        return Conclusion.NONEXISTENCE
    if not fp["tight"]:
        proof.note(f"angle {_ex(c)}: frame potential {fp['fp']} exceeds {fp['floor']}, no rule decides")
        return Conclusion.OPEN
    if M <= n + 1:
        return Conclusion.OPEN
    pair = waldron_srg_of_etf(EtfSpec(n, M))
    if isinstance(pair, NonIntegral):
        proof.record(Rule.WALDRON_INTEGRALITY, depth, n=n, M=M)
        return Conclusion.NONEXISTENCE
    proof.record(Rule.WALDRON_CORRESPONDENCE, depth, n=n, M=M)
    ok, _ = feasible(pair.primary)
    if not ok:
        proof.record(Rule.SRG_FEASIBILITY, depth, srg=pair.primary)
        return Conclusion.NONEXISTENCE
    rec = proof.db.lookup(pair.primary)
    if rec.status is Status.NOT_EXISTS:
        proof.record(Rule.SRG_DATABASE, depth, srg=pair.primary)
        return Conclusion.NONEXISTENCE
    if rec.status is Status.EXISTS:
        proof.record(Rule.SRG_DATABASE, depth, srg=pair.primary)
        return Conclusion.EXISTENCE
    proof.note(f"angle {_ex(c)}: existence of {pair.primary} is open")
    return Conclusion.OPEN


def _lines(proof: _Proof, n: int, M: int, angle, threshold: Threshold, depth: int) -> Conclusion:
    bound, _ = gerzon_bound(n)
    if M > bound:
        proof.record(Rule.GERZON_BOUND, depth, n=n, M=M)
        return Conclusion.NONEXISTENCE
    lrs = lrs_angles(n, M, threshold)
    if lrs.rule is AngleRule.LRS:
        out = proof.record(Rule.LRS_ANGLES, depth, n=n, M=M, threshold=threshold, angle=angle)
        if angle is None:
            angles = list(lrs.candidates)
        elif out["admitted"]:
            angles = [angle]
        else:
            return Conclusion.NONEXISTENCE
    elif angle is None:
        proof.note(f"{M} lines in R^{n}: the angle is unconstrained below the LRS threshold")
        return Conclusion.OPEN
    else:
        if neumann_angles(n, M).rule is AngleRule.NEUMANN:
            out = proof.record(Rule.NEUMANN_ANGLES, depth, n=n, M=M, cutoff=4, angle=angle)
            if not out["admitted"]:
                return Conclusion.NONEXISTENCE
        angles = [angle]
    if not angles:
        return Conclusion.NONEXISTENCE
    results = []
    outer = proof.branch
    for c in angles:
        proof.branch = "/".join(x for x in (outer, f"angle {_ex(c)}") if x)
        results.append(_angle_branch(proof, n, M, c, depth + 1))
    proof.branch = outer
    return _combine(results)


def lines_verdict(
    n: int,
    M: int,
    angle=None,
    *,
    threshold: Threshold = Threshold.STRICT_2N3,
    monotone: bool = False,
    db: SrgDatabase | None = None,
) -> Verdict:
    """Decide whether M equiangular lines can exist in R^n (optionally at a fixed angle)."""
    if n < 2 or M < 1:
        raise ValueError(f"need n >= 2 and M >= 1, got n={n}, M={M}")
    if angle is not None:
        angle = simplify(angle)
        if not 0 < angle < 1:
            raise ValueError(f"angle must lie in (0, 1), got {angle}")
    proof = _Proof(db)
    query = {"kind": "lines", "n": n, "M": M}
    if angle is not None:
        query["angle"] = _ex(angle)
    conclusion = _lines(proof, n, M, angle, threshold, 0)
    if monotone and conclusion is Conclusion.OPEN:
        for base in range(1, M):
            sub = lines_verdict(n, base, angle, threshold=threshold, db=proof.db)
            if sub.conclusion is Conclusion.NONEXISTENCE:
                proof.steps.clear()
                proof.record(
                    Rule.MONOTONICITY, 0, n=n, M=M, base=base, threshold=threshold, angle=angle
                )
                proof.splice(sub.steps, 1, "monotone")
                proof.note(f"subsumed by the certificate for {base} lines in R^{n}")
                conclusion = Conclusion.NONEXISTENCE
                break
    return Verdict(query, conclusion, proof.steps, proof.notes)


# --- strongly regular graphs --------------------------------------------------


def _route_lines(proof: _Proof, n: int, M: int, c, depth: int) -> bool:
    """Try to refute M lines in R^n at angle c; splice the winning certificate."""
    if n < 2:
        return False
    for angle in (None, c):
        sub = lines_verdict(n, M, angle, db=proof.db)
        if sub.conclusion is Conclusion.NONEXISTENCE:
            proof.splice(sub.steps, depth)
            return True
    return False


def _projection_route(p: SrgParams, which: Eigenspace, depth: int, db) -> _Proof | None:
    route = _Proof(db)
    try:
        t = project_srg(p, which)
    except SpectrumError:
        return None
    route.record(Rule.PROJECTION, depth, srg=p, eigenspace=which)
    if t.equiangular:
        n2, c = t.dimension, t.inner_a
    else:
        try:
            lift = shifted_lift(t)
        except ValueError:
            return None
        route.record(
            Rule.SHIFTED_LIFT, depth, dimension=t.dimension, size=t.size, a=t.inner_a, b=t.inner_b
        )
        n2, c = lift.lifted.dimension, lift.angle
    M = p.v
    if _route_lines(route, n2, M, c, depth + 1):
        return route
    if M - n2 >= 2 and n2 >= 1 and welch_angle(n2, M) == c:
        route.record(Rule.COMPLEMENTARY_ETF, depth, n=n2, M=M)
        n3 = M - n2
        if _route_lines(route, n3, M, welch_angle(n3, M), depth + 1):
            return route
    return None


def _srg_search(proof: _Proof, p: SrgParams, depth: int, hops: int, seen: frozenset) -> Conclusion:
    ok, failures = feasible(p)
    if not ok:
        proof.record(Rule.SRG_FEASIBILITY, depth, srg=p)
        return Conclusion.NONEXISTENCE
    rec = proof.db.lookup(p)
    if rec.status is Status.NOT_EXISTS:
        proof.record(Rule.SRG_DATABASE, depth, srg=p)
        return Conclusion.NONEXISTENCE
    if rec.status is Status.EXISTS:
        proof.record(Rule.SRG_DATABASE, depth, srg=p)
        return Conclusion.EXISTENCE
    if p in LITERATURE_NOTES:
        proof.note(f"{p}: {LITERATURE_NOTES[p]}")
    if not p.primitive:
        return Conclusion.OPEN
    seen = seen | {p, complement(p)}
    refuted = False
    for which in Eigenspace:
        route = _projection_route(p, which, depth, proof.db)
        if route is not None:
            proof.splice(route.steps, 0, f"projection {which.value}")
            refuted = True
    if hops < MAX_HOPS and is_regular_two_graph(p):
        try:
            q = fjg_descent(p)
        except ValueError:
            q = None
        if q is not None and q not in seen:
            route = _Proof(proof.db)
            route.record(Rule.FJG_DESCENT, depth, srg=p)
            if _srg_search(route, q, depth + 1, hops + 1, seen) is Conclusion.NONEXISTENCE:
                proof.splice(route.steps, 0, "descent")
                proof.notes.extend(n for n in route.notes if n not in proof.notes)
                refuted = True
    return Conclusion.NONEXISTENCE if refuted else Conclusion.OPEN


def srg_verdict(p: SrgParams, db: SrgDatabase | None = None) -> Verdict:
    """Decide srg(v,k,lambda,mu) from feasibility, the database, and derived objects.

    Every independent refutation route that succeeds is kept in the certificate.
    """
    proof = _Proof(db)
    conclusion = _srg_search(proof, p, 0, 0, frozenset())
    routes = sum(1 for s in proof.steps if s.depth == 0 and s.rule in (Rule.PROJECTION, Rule.FJG_DESCENT))
    if conclusion is Conclusion.NONEXISTENCE and routes > 1:
        proof.note(f"{routes} independent refutation routes")
    return Verdict({"kind": "srg", "srg": _srg_list(p)}, conclusion, proof.steps, proof.notes)


def _srg_list(p: SrgParams) -> list[int]:
    return list(p.astuple())


# --- reports ------------------------------------------------------------------

_STATUS_FLAG = {
    Conclusion.NONEXISTENCE: "N",
    Conclusion.EXISTENCE: "E",
    Conclusion.OPEN: "o",
}


def _closure(params) -> list[SrgParams]:
    out = set()
    for p in params:
        out.add(p)
        try:
            out.add(complement(p))
        except ValueError:
            pass
    return sorted(out)


def table1_report(db: SrgDatabase | None = None) -> dict:
    """Graphs tied to the open maximal ETFs in dimensions 42, 45 and 46."""
    rows = []
    for n, M in TABLE1_ROWS:
        angle = welch_angle(n, M)
        pair = waldron_srg_of_etf(EtfSpec(n, M))
        if isinstance(pair, NonIntegral):
            raise InvariantViolation(f"ETF({n},{M}) unexpectedly has non-integral Waldron data")
        listed = [pair.primary, *fjg_ascend(pair.complementary)]
        family = _closure([*pair, *fjg_ascend(pair.primary), *fjg_ascend(pair.complementary)])
        entries = []
        notes = []
        for p in listed:
            v = srg_verdict(p, db)
            entries.append(
                {
                    "srg": _srg_list(p),
                    "flag": _STATUS_FLAG[v.conclusion],
                    "conclusion": v.conclusion.value,
                    "certificate": v.to_dict()["steps"],
                }
            )
            if v.conclusion is Conclusion.NONEXISTENCE:
                notes.append(
                    f"{p} does not exist, yet ETF({n},{M},{_ex(angle)}) stays undecided: "
                    "a missing graph on M vertices does not exclude the frame"
                )
        rows.append(
            {
                "n": n,
                "M": M,
                "angle": _ex(angle),
                "srgs": entries,
                "family": [_srg_list(p) for p in family],
                "notes": notes,
            }
        )
    return {"report": "table1", "rows": rows}


def tight5_report(m: int, db: SrgDatabase | None = None) -> dict:
    """Tight 5-design / ETF(n, n(n+1)/2) parameters and the graphs tied to them."""
    proof = _Proof(db)
    fam_out = proof.record(Rule.TIGHT5_FAMILY, 0, m=m)
    tight4 = proof.record(Rule.TIGHT4_PARAMS, 0, m=m)
    n, lines, angle = tight5_params(m)
    fam = tight5_srg_family(m)
    design_absent = m in TIGHT5_NONEXISTENT_M
    members = []
    for p in fam.members:
        rec = proof.db.lookup(p)
        v = srg_verdict(p, proof.db)
        entry = {
            "srg": _srg_list(p),
            "database": rec.status.name,
            "source": rec.source,
            "conclusion": v.conclusion.value,
            "certificate": v.to_dict()["steps"],
        }
        if design_absent:
            entry["implied"] = "NOT_EXISTS"
        members.append(entry)
    notes = list(fam.notes)
    if design_absent:
        notes.append(
            f"no tight 5-design exists in R^{n} [{TIGHT5_NONEXISTENCE_SOURCE}], so ETF({n},{lines},{_ex(angle)}) "
            "does not exist and neither does any graph in this family"
        )
    zeros = c2_zeros(n)
    return {
        "report": "tight5",
        "m": m,
        "n": n,
        "lines": lines,
        "design_size": n * (n + 1),
        "angle": _ex(angle),
        "c2_zeros": [_ex(z) for z in zeros],
        "tight4": tight4,
        "members": members,
        "family": fam_out["members"],
        "design_nonexistence_known": design_absent,
        "steps": [s.to_dict() for s in proof.steps],
        "notes": notes,
    }


# --- certificate replay ---------------------------------------------------------


def replay(steps, db: SrgDatabase | None = None) -> list[str]:
    """Re-run every step's operation; return a description of each mismatch."""
    if isinstance(steps, Verdict):
        steps = steps.steps
    problems = []
    for idx, step in enumerate(steps, 1):
        if isinstance(step, dict):
            step = DeductionStep.from_dict(step)
        try:
            got = _OPS[step.rule](step.inputs, db)
        except Exception as exc:  # noqa: BLE001 - any failure is a replay mismatch
            problems.append(f"step {idx} {step.rule.value}: {exc}")
            continue
        if got != step.outputs:
            problems.append(f"step {idx} {step.rule.value}: recorded {step.outputs}, replayed {got}")
        if step.rule is Rule.SRG_DATABASE and not step.outputs.get("source"):
            problems.append(f"step {idx}: database step without a source")
    return problems


def structure_problems(verdict: Verdict) -> list[str]:
    """For a nonexistence verdict, every innermost branch must end in a refutation."""
    if verdict.conclusion is not Conclusion.NONEXISTENCE:
        return []
    if not verdict.steps:
        return ["nonexistence verdict without steps"]
    labels = {s.branch for s in verdict.steps}
    leaves = [b for b in labels if not any(o.startswith(b + "/") or (b == "" and o) for o in labels)]
    problems = []
    for label in leaves:
        last = [s for s in verdict.steps if s.branch == label][-1]
        if not last.refutes:
            problems.append(f"branch {label or '(root)'} ends in {last.rule.value}, which does not refute")
    return problems


def check_certificate(verdict: Verdict, db: SrgDatabase | None = None) -> None:
    problems = replay(verdict, db) + structure_problems(verdict)
    if problems:
        raise InvariantViolation("; ".join(problems))
