"""Versioned JSON documents for AutReport and the CLI's analysis report.

Group orders are written as decimal strings because wreath-product orders
overflow 64-bit integers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .engine import AutReport, Method, NormalityCertificate, factorization_from_dict
from .transpositions import HypothesisReport

SCHEMA_VERSION = 1

_ORDER = {"type": "string", "pattern": "^[1-9][0-9]*$"}

FACTORIZATION_SCHEMA: dict[str, Any] = {
    "oneOf": [
        {
            "type": "object",
            "properties": {
                "type": {"const": "semidirect"},
                "normal_order": _ORDER,
                "complement_order": _ORDER,
            },
            "required": ["type", "normal_order", "complement_order"],
            "additionalProperties": False,
        },
        {
            "type": "object",
            "properties": {
                "type": {"const": "wreath"},
                "ell": _ORDER,
                "inner": {"$ref": "#/$defs/factorization"},
            },
            "required": ["type", "ell", "inner"],
            "additionalProperties": False,
        },
        {
            "type": "object",
            "properties": {"type": {"const": "unfactored"}, "order": _ORDER},
            "required": ["type", "order"],
            "additionalProperties": False,
        },
    ]
}

_AUT_REPORT_BODY: dict[str, Any] = {
    "type": "object",
    "properties": {
        "version": {"const": SCHEMA_VERSION},
        "order": _ORDER,
        "factorization": {"$ref": "#/$defs/factorization"},
        "vertex_generators": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        },
        "is_normal": {"enum": [True, False, "unknown"]},
        "method": {"enum": [m.value for m in Method]},
        "aut_hs_order": {"oneOf": [_ORDER, {"const": "unknown"}]},
    },
    "required": ["version", "order", "factorization", "vertex_generators", "is_normal", "method", "aut_hs_order"],
    "additionalProperties": False,
}

AUT_REPORT_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$defs": {"factorization": FACTORIZATION_SCHEMA, "aut_report": _AUT_REPORT_BODY},
    "$ref": "#/$defs/aut_report",
}

ANALYSIS_REPORT_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$defs": {"factorization": FACTORIZATION_SCHEMA, "aut_report": _AUT_REPORT_BODY},
    "type": "object",
    "properties": {
        "version": {"const": SCHEMA_VERSION},
        "spec": {"type": "string"},
        "transpositions": {"type": "string"},
        "hypotheses": {"type": "object"},
        "fast_path": {"oneOf": [{"$ref": "#/$defs/aut_report"}, {"type": "null"}]},
        "fast_path_refusal": {"type": ["string", "null"]},
        "brute_force": {"oneOf": [{"$ref": "#/$defs/aut_report"}, {"type": "null"}]},
        "brute_force_refusal": {"type": ["string", "null"]},
        "match": {"enum": [True, False, None]},
        "normal": {"enum": [True, False, "unknown"]},
        "certificate": {"type": "object"},
        "timings": {"type": "object", "additionalProperties": {"type": "number"}},
    },
    "required": [
        "version", "spec", "transpositions", "hypotheses", "fast_path", "fast_path_refusal",
        "brute_force", "brute_force_refusal", "match", "normal", "certificate", "timings",
    ],
    "additionalProperties": False,
}


def _tri(value: bool | None) -> bool | str:
    return "unknown" if value is None else value


def aut_report_to_dict(report: AutReport) -> dict[str, Any]:
    return {
        "version": SCHEMA_VERSION,
        "order": str(report.order),
        "factorization": report.factorization.to_dict(),
        "vertex_generators": [list(g) for g in report.vertex_generators],
        "is_normal": _tri(report.is_normal),
        "method": report.method.value,
        "aut_hs_order": "unknown" if report.aut_hs_order is None else str(report.aut_hs_order),
    }


def aut_report_from_dict(d: dict[str, Any]) -> AutReport:
    if d.get("version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported report version {d.get('version')!r}")
    return AutReport(
        order=int(d["order"]),
        factorization=factorization_from_dict(d["factorization"]),
        vertex_generators=tuple(tuple(g) for g in d["vertex_generators"]),
        is_normal=None if d["is_normal"] == "unknown" else bool(d["is_normal"]),
        method=Method(d["method"]),
        aut_hs_order=None if d["aut_hs_order"] == "unknown" else int(d["aut_hs_order"]),
    )


def dumps_aut_report(report: AutReport) -> str:
    return json.dumps(aut_report_to_dict(report), sort_keys=True)


def loads_aut_report(text: str) -> AutReport:
    return aut_report_from_dict(json.loads(text))


def certificate_summary(cert: NormalityCertificate | None, source: str) -> dict[str, Any]:
    if cert is None:
        return {"source": source}
    return {
        "source": source,
        "stabilizer_order": str(cert.stabilizer_order),
        "aut_hs_order": str(cert.aut_hs_order),
        "violating_element": None if cert.violating is None else list(cert.violating),
    }


@dataclass
class AnalysisReport:
    spec: str
    transpositions: str
    hypotheses: HypothesisReport
    fast: AutReport | None = None
    fast_refusal: str | None = None
    brute: AutReport | None = None
    brute_refusal: str | None = None
    certificate: dict[str, Any] = field(default_factory=dict)
    timings: dict[str, float] = field(default_factory=dict)

    @property
    def match(self) -> bool | None:
        if self.fast is None or self.brute is None:
            return None
        return (self.fast.order, self.fast.aut_hs_order) == (self.brute.order, self.brute.aut_hs_order)

    @property
    def normal(self) -> bool | None:
        if self.brute is not None:
            return self.brute.is_normal
        if self.fast is not None:
            return self.fast.is_normal
        return None

    def to_dict(self, include_timings: bool = True) -> dict[str, Any]:
        return {
            "version": SCHEMA_VERSION,
            "spec": self.spec,
            "transpositions": self.transpositions,
            "hypotheses": self.hypotheses.to_dict(),
            "fast_path": None if self.fast is None else aut_report_to_dict(self.fast),
            "fast_path_refusal": self.fast_refusal,
            "brute_force": None if self.brute is None else aut_report_to_dict(self.brute),
            "brute_force_refusal": self.brute_refusal,
            "match": self.match,
            "normal": _tri(self.normal),
            "certificate": self.certificate,
            "timings": dict(self.timings) if include_timings else {},
        }

    def to_json(self, include_timings: bool = True) -> str:
        return json.dumps(self.to_dict(include_timings), sort_keys=True)

    def to_text(self) -> str:
        lines = [f"spec: {self.spec}", f"S: {self.transpositions}"]
        h = self.hypotheses
        lines.append(
            f"girth: {h.to_dict()['girth_value']}  components: {h.component_count}  "
            f"isomorphic components: {h.components_isomorphic}  tree: {h.is_tree}"
        )
        if self.fast is not None:
            lines.append(
                f"fast path: order {self.fast.order} = {self.fast.factorization.to_dict()}"
                f"  |Aut(H,S)| = {self.fast.aut_hs_order}"
            )
        else:
            lines.append(f"fast path: refused ({self.fast_refusal})")
        if self.brute is not None:
            lines.append(f"brute force: order {self.brute.order}  |Aut(H,S)| = {self.brute.aut_hs_order}")
        elif self.brute_refusal:
            lines.append(f"brute force: skipped ({self.brute_refusal})")
        if self.match is not None:
            lines.append("match" if self.match else "MISMATCH")
        lines.append(f"normal: {_tri(self.normal)}")
        for phase, secs in self.timings.items():
            lines.append(f"time {phase}: {secs:.3f}s")
        return "\n".join(lines)
