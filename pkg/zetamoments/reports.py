from typing import Any, Dict, List, Optional, Union
import jsonschema
import mpmath
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field, model_validator

TAIL_CALIBRATION_NOTE = (
    "Tail bounds use the envelope |zeta(1/2+it)| <= 2.5 + 0.7 t, an empirical "
    "calibration rather than a proven bound."
)

_RATIONAL = {"type": "string", "pattern": r"^-?\d+/\d+$"}
_DECIMAL = {"type": "string", "pattern": r"^-?\d+(\.\d+)?([eE][-+]?\d+)?$"}
_SYMVAL = {
    "type": "object",
    "propertyNames": {"pattern": r"^(unit|log2pi|gamma|zeta\d+|pi\d+)$"},
    "additionalProperties": _RATIONAL,
}

MOMENT_RECORD_SCHEMA = {
    "type": "object",
    "properties": {
        "kind": {"const": "moment"},
        "N": {"type": "integer", "minimum": 0},
        "symbolic": _SYMVAL,
        "symbolic_text": {"type": "string"},
        "closed_decimal": _DECIMAL,
        "quadrature_decimal": _DECIMAL,
        "abs_err": _DECIMAL,
        "rel_err": _DECIMAL,
        "tol": {"type": "number", "exclusiveMinimum": 0},
        "pass": {"type": "boolean"},
    },
    "required": ["kind", "N", "symbolic", "closed_decimal", "quadrature_decimal", "abs_err", "rel_err", "tol", "pass"],
    "additionalProperties": False,
}

RESIDUAL_RECORD_SCHEMA = {
    "type": "object",
    "properties": {
        "kind": {"const": "residual"},
        "name": {"type": "string"},
        "params": {"type": "object"},
        "expected": {"type": ["string", "null"]},
        "observed": {"type": ["string", "null"]},
        "residual": _DECIMAL,
        "tol": {"type": "number", "minimum": 0},
        "pass": {"type": "boolean"},
    },
    "required": ["kind", "name", "params", "residual", "tol", "pass"],
    "additionalProperties": False,
}

REPORT_SCHEMA = {
    "type": "object",
    "properties": {
        "command": {"type": "string"},
        "parameters": {"type": "object"},
        "records": {"type": "array", "items": {"oneOf": [MOMENT_RECORD_SCHEMA, RESIDUAL_RECORD_SCHEMA]}},
        "pass": {"type": "boolean"},
        "wall_time": {"type": "number", "minimum": 0},
        "notes": {"type": "array", "items": {"type": "string"}},
    },
    "required": ["command", "parameters", "records", "pass", "wall_time"],
    "additionalProperties": False,
}

TABLE_SCHEMA = {
    "type": "object",
    "properties": {
        "command": {"type": "string"},
        "parameters": {"type": "object"},
        "columns": {"type": "array", "items": {"type": "string"}, "minItems": 1},
        "rows": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": {"type": ["string", "integer", "boolean", "object"]},
            },
        },
    },
    "required": ["command", "parameters", "columns", "rows"],
    "additionalProperties": False,
}


def decimal_str(x: Any, digits: int) -> str:
    return mpmath.nstr(mpmath.mpf(x), digits, strip_zeros=False, min_fixed=-4, max_fixed=12)


class MomentReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    kind: str = "moment"
    N: int
    symbolic: Dict[str, str]
    symbolic_text: str
    closed_decimal: str
    quadrature_decimal: str
    abs_err: str
    rel_err: str
    tol: float
    passed: bool = Field(alias="pass")

    @model_validator(mode="after")
    def pass_matches_tolerance(self) -> "MomentReport":
        if self.passed != (float(self.rel_err) <= self.tol):
            raise ValueError(f"pass={self.passed} inconsistent with rel_err={self.rel_err}, tol={self.tol}")
        return self

    @staticmethod
    def build(N: int, symbolic: Dict[str, str], text: str, closed: Any, quadrature: Any,
              tol: float, digits: int) -> "MomentReport":
        with mpmath.workdps(max(digits, 15) + 10):
            abs_err = abs(mpmath.mpf(closed) - mpmath.mpf(quadrature))
            rel_err = float(abs_err / abs(mpmath.mpf(closed)))
        # repr round-trips, so the stored string decides pass exactly
        return MomentReport(
            N=N,
            symbolic=symbolic,
            symbolic_text=text,
            closed_decimal=decimal_str(closed, digits),
            quadrature_decimal=decimal_str(quadrature, digits),
            abs_err=decimal_str(abs_err, 3),
            rel_err=repr(rel_err),
            tol=tol,
            passed=rel_err <= tol,
        )


class ResidualRecord(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    kind: str = "residual"
    name: str
    params: Dict[str, Any]
    expected: Optional[str] = None
    observed: Optional[str] = None
    residual: str
    tol: float
    passed: bool = Field(alias="pass")

    @staticmethod
    def build(name: str, params: Dict[str, Any], residual: Any, tol: float,
              expected: Optional[str] = None, observed: Optional[str] = None) -> "ResidualRecord":
        residual = mpmath.mpf(residual)
        return ResidualRecord(
            name=name,
            params=params,
            expected=expected,
            observed=observed,
            residual=decimal_str(residual, 3),
            tol=tol,
            passed=bool(residual <= tol),
        )

    @staticmethod
    def exact(name: str, params: Dict[str, Any], mismatches: int) -> "ResidualRecord":
        return ResidualRecord(
            name=name, params=params, residual=str(mismatches), tol=0, passed=mismatches == 0
        )


Record = Union[MomentReport, ResidualRecord]


class RunReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    command: str
    parameters: Dict[str, Any]
    records: List[Record]
    passed: bool = Field(alias="pass")
    wall_time: float
    notes: List[str] = []

    @model_validator(mode="after")
    def pass_matches_records(self) -> "RunReport":
        if self.passed != all(r.passed for r in self.records):
            raise ValueError("overall pass must equal the conjunction of record passes")
        return self

    def to_dict(self) -> Dict[str, Any]:
        return self.model_dump(by_alias=True)


def validate_document(document: Dict[str, Any], schema: Dict[str, Any]) -> bool:
    try:
        jsonschema.validate(document, schema)
        return True
    except jsonschema.exceptions.ValidationError as e:
        logger.error(f"Report failed schema validation: {e.message}")
        return False
