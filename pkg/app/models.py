"""
Pydantic models: SRG parameters, family specs and JSON reports
"""

from enum import Enum
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.core.config import REPORT_SCHEMA_VERSION


class SrgParams(BaseModel):
    """(v, k, lambda, mu) satisfying mu(v-k-1) = k(k-lambda-1)"""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    v: int = Field(ge=1)
    k: int = Field(ge=0)
    lam: int = Field(alias="lambda", ge=0)
    mu: int = Field(ge=0)

    @model_validator(mode="after")
    def check_feasible(self):
        if self.k >= self.v:
            raise ValueError(f"degree {self.k} must be below v={self.v}")
        if self.mu * (self.v - self.k - 1) != self.k * (self.k - self.lam - 1):
            raise ValueError(f"infeasible parameters {self.as_tuple()}: mu(v-k-1) != k(k-lambda-1)")
        return self

    def as_tuple(self):
        return (self.v, self.k, self.lam, self.mu)

    @property
    def edge_bound(self) -> int:
        """2k - lambda - 2, the size of an edge neighbourhood"""
        return 2 * self.k - self.lam - 2

    def __str__(self) -> str:
        return f"({self.v},{self.k},{self.lam},{self.mu})"


FamilyTag = Literal[
    "Triangular", "Lattice", "LatinSquare", "Paley", "Symplectic", "HyperbolicQuadric",
    "EllipticQuadric", "TwentySevenLines", "Schlafli", "Clebsch", "Shrikhande", "Chang",
    "Petersen", "ComplementOf",
]


class FamilySpec(BaseModel):
    """A named graph family with its integer parameters"""

    model_config = ConfigDict(frozen=True)

    family: FamilyTag
    m: Optional[int] = None
    n: Optional[int] = None
    q: Optional[int] = None
    r: Optional[int] = None
    index: Optional[int] = None
    latin_square: Optional[List[List[int]]] = None
    inner: Optional["FamilySpec"] = None

    @model_validator(mode="after")
    def check_fields(self):
        required = {
            "Triangular": ("m",), "Lattice": ("n",), "Paley": ("q",), "Symplectic": ("r", "q"),
            "HyperbolicQuadric": ("r",), "EllipticQuadric": ("r",), "Chang": ("index",),
            "ComplementOf": ("inner",),
        }
        for name in required.get(self.family, ()):
            if getattr(self, name) is None:
                raise ValueError(f"family {self.family} needs '{name}'")
        if self.family == "LatinSquare" and self.latin_square is None and self.n is None:
            raise ValueError("family LatinSquare needs 'latin_square' or 'n' (cyclic square)")
        return self

    def label(self) -> str:
        f = self.family
        if f == "Triangular":
            return f"T({self.m})"
        if f == "Lattice":
            return f"L2({self.n})"
        if f == "LatinSquare":
            return f"cayley_latin({self.n})" if self.latin_square is None else f"latin({len(self.latin_square)})"
        if f == "Paley":
            return f"Paley({self.q})"
        if f == "Symplectic":
            return f"Sp({2 * self.r},{self.q})"
        if f == "HyperbolicQuadric":
            return f"O+({2 * self.r},2)"
        if f == "EllipticQuadric":
            return f"O-({2 * self.r},2)"
        if f == "Chang":
            return f"Chang({self.index})"
        if f == "ComplementOf":
            return f"complement({self.inner.label()})"
        return {"TwentySevenLines": "27-lines", "Schlafli": "Schlafli", "Clebsch": "Clebsch",
                "Shrikhande": "Shrikhande", "Petersen": "Petersen"}[f]


FamilySpec.model_rebuild()


class VerdictStatus(str, Enum):
    OK_NO_VALID_CUT = "OK_NoValidCut"
    OK_EQUALITY = "OK_Equality"
    ABOVE_BOUND = "AboveBound"
    COUNTEREXAMPLE = "Counterexample"
    UNDECIDED = "Undecided"
    NOT_SRG = "NotSRG"


class ParamsModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    v: int
    k: int
    lam: int = Field(alias="lambda")
    mu: int


class SpectrumModel(BaseModel):
    theta2: str
    thetav: str
    f: int
    g: int


class Kappa2Model(BaseModel):
    value: Optional[int] = None
    closed: bool


class CertificateModel(BaseModel):
    A: List[str]
    S: List[str]
    B: List[str]


class RuleModel(BaseModel):
    rule: str
    holds: bool
    evidence: Dict[str, Any] = {}


class Report(BaseModel):
    """One decided graph, serialisable to the versioned JSON schema"""

    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(REPORT_SCHEMA_VERSION, alias="schema")
    id: str
    graph6: Optional[str] = None
    labels: Optional[List[str]] = None
    params: Optional[ParamsModel] = None
    spectrum: Optional[SpectrumModel] = None
    kappa: Optional[int] = None
    kappa2: Optional[Kappa2Model] = None
    verdict: Optional[VerdictStatus] = None
    rule: Optional[str] = None
    rules: List[RuleModel] = []
    certificate: Optional[CertificateModel] = None
    stats: Dict[str, Any] = {}
    timing_ms: Dict[str, float] = {}
    version: str = ""
    error: Optional[str] = None

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True)
