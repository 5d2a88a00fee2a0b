"""Data models for krw input and output

Pydantic models for everything that crosses the process boundary: replay
configuration, verification reports, map-definition files and the JSON
payloads of the command-line front end.
"""

import json
import logging
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from krw.errors import ConfigInvalidError
from krw.poly import MAX_PARAM_INDEX

logger = logging.getLogger(__name__)


class CheckStatus(Enum):
    """Outcome of a single replay check"""
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


def _rational_text(v: Any) -> str:
    text = str(v).strip()
    try:
        Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"'{text}' is not a rational number")
    return text


class ReplayConfig(BaseModel):
    """Parameters of a replay run

    eta is given by at most one of eta, eta_generic_degree, eta_coefficients;
    with none of them eta is generic of degree max_param_degree.
    """
    model_config = ConfigDict(extra="forbid")

    eta: Optional[str] = Field(None, description="eta(x) as an expression in x and c_i")
    eta_generic_degree: Optional[int] = Field(None, ge=0, le=MAX_PARAM_INDEX, description="Degree of generic eta")
    eta_coefficients: Optional[List[str]] = Field(None, min_length=1, description="Rational coefficients c0, c1, ...")
    c: Optional[str] = Field(None, description="Override of the constant coefficient of eta")
    relation_g: Optional[str] = Field(None, description="Override of the whole relation part g")
    max_param_degree: int = Field(8, ge=1, le=MAX_PARAM_INDEX)
    sample_count: int = Field(500, ge=1)
    max_sample_degree: int = Field(6, ge=1)
    coefficient_bound: int = Field(10, ge=1)
    rng_seed: int = Field(42, ge=0, lt=2 ** 64)

    @field_validator("eta_coefficients", mode="before")
    def normalize_coefficients(cls, v):
        """Accept numbers or strings; keep exact text"""
        if v is None:
            return v
        return [_rational_text(c) for c in v]

    @model_validator(mode="after")
    def single_eta_source(self):
        given = [n for n in ("eta", "eta_generic_degree", "eta_coefficients") if getattr(self, n) is not None]
        if len(given) > 1:
            raise ValueError(f"eta given more than once: {', '.join(given)}")
        return self

    @classmethod
    def load(cls, path: Optional[str] = None, overrides: Optional[Mapping[str, Any]] = None) -> "ReplayConfig":
        """Merge YAML defaults with overrides and validate

        Args:
            path: YAML file with ReplayConfig fields (missing file means no defaults)
            overrides: Values taking precedence over the file; None values are ignored

        Raises:
            ConfigInvalidError: unreadable file or invalid values
        """
        data: Dict[str, Any] = {}
        if path and Path(path).is_file():
            try:
                with open(path, "r", encoding="utf-8") as f:
                    data = yaml.safe_load(f) or {}
            except yaml.YAMLError as e:
                raise ConfigInvalidError(f"cannot read {path}: {e}") from None
            if not isinstance(data, dict):
                raise ConfigInvalidError(f"{path} must contain a mapping")
        elif path:
            logger.debug(f"Replay config {path} not found, using built-in defaults")
        explicit = {k: v for k, v in (overrides or {}).items() if v is not None}
        if explicit.keys() & {"eta", "eta_generic_degree", "eta_coefficients"}:
            for key in ("eta", "eta_generic_degree", "eta_coefficients"):
                data.pop(key, None)
        data.update(explicit)
        try:
            return cls(**data)
        except ValidationError as e:
            first = e.errors()[0]
            where = ".".join(str(p) for p in first["loc"]) or "config"
            raise ConfigInvalidError(f"invalid replay config: {where}: {first['msg']}") from None


class CheckRecord(BaseModel):
    """One named check in a verification report"""
    name: str = Field(..., min_length=1)
    status: CheckStatus
    details: str = ""
    witness: Optional[str] = Field(None, description="Counterexample or certificate expression")


class ReportSummary(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    passed: int = Field(0, alias="pass")
    fail: int = 0
    skipped: int = 0


class VerificationReport(BaseModel):
    """Checks sorted by name, with per-status counts and the config that produced them"""
    config: Dict[str, Any]
    checks: List[CheckRecord]
    summary: ReportSummary

    @property
    def ok(self) -> bool:
        return self.summary.fail == 0

    def to_json(self) -> str:
        payload = {
            "config": self.config,
            "checks": [c.model_dump(mode="json", exclude_none=True)
                       for c in sorted(self.checks, key=lambda c: c.name)],
            "summary": self.summary.model_dump(by_alias=True),
        }
        return json.dumps(payload, indent=2, ensure_ascii=False)


class MapDefinition(BaseModel):
    """Map-definition file: generator images in x, y, z, t, U"""
    model_config = ConfigDict(extra="forbid")

    x: str
    y: str
    z: str
    t: str


# --- command-line payloads --------------------------------------------------

class ExpressionOutput(BaseModel):
    input: str
    ring: str
    result: str


class DecompositionOutput(BaseModel):
    epsilon: int
    h: str
    pairs: List[Dict[str, str]]


class LeadingFormOutput(BaseModel):
    grading: str
    degree: Optional[int] = Field(None, description="None for the zero element")
    form: str
    graded_ring: Optional[str] = None


class MapCheckOutput(BaseModel):
    map: str
    well_defined: bool
    residue: str
    iterative: Optional[bool] = None
    iterative_generator: Optional[str] = None
    iterative_residue: Optional[str] = None


class FixedOutput(BaseModel):
    map: str
    fixed: bool
    index: Optional[int] = None
    witness: Optional[str] = None


class InducedOutput(BaseModel):
    map: str
    grading: str
    u_weight: str
    scale: int
    verified: bool
    images: Dict[str, str]
    failure: Optional[str] = None
