from enum import Enum
from fractions import Fraction
from operator import add
from typing import Annotated, Any, Dict, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, PositiveInt, field_validator, model_validator

from src.combinatorics.partitions import Partition


def format_rational(x: Fraction) -> str:
    """Exact values travel as "a/b" strings (integers as "a"), never as floats."""
    return str(Fraction(x))


# Helper for merging dictionaries in LangGraph state updates
def merge_dicts(a: Dict, b: Dict) -> Dict:
    return {**a, **b}


# Enums for standardized values
class EnsembleKind(str, Enum):
    GUE = "gue"
    HAAR_UNITARY = "haar"
    GINIBRE = "ginibre"
    NORMAL = "normal"


class VarianceConvention(str, Enum):
    # e^{-(N/2) tr H^2}: E[H_ij H_kl] = delta_il delta_jk / N
    INVERSE_N = "inverse-n"
    UNIT = "unit"


class ModelKind(str, Enum):
    HERMITIAN = "hermitian"
    NORMAL = "normal"


class Representation(str, Enum):
    MOMENT = "moment"
    SCHUR = "schur"
    HURWITZ = "hurwitz"
    SOURCE = "source"


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    PRETTY = "pretty"


class EnsembleConfig(BaseModel):
    """Everything a sampler needs; the same config always reproduces the same stream."""
    N: PositiveInt = Field(..., description="Matrix size")
    kind: EnsembleKind = Field(EnsembleKind.GUE)
    seed: int = Field(0, ge=0, lt=2 ** 64, description="64-bit seed of the Philox stream family")
    variance: VarianceConvention = Field(VarianceConvention.INVERSE_N)
    workers: PositiveInt = Field(1, description="Threads drawing chunks; does not affect results")
    chunk_size: PositiveInt = Field(10_000, description="Samples per RNG substream")

    @property
    def entry_variance(self) -> float:
        """E|H_ij|^2 for the Gaussian ensembles."""
        return 1.0 / self.N if self.variance == VarianceConvention.INVERSE_N else 1.0


class MCEstimate(BaseModel):
    """Sample mean, standard error and sample count of a Monte Carlo integral."""
    mean_real: float
    mean_imag: float = 0.0
    standard_error: float = Field(..., ge=0.0)
    samples: PositiveInt
    seed: int

    @property
    def mean(self) -> complex:
        return complex(self.mean_real, self.mean_imag)

    def deviation(self, exact: complex) -> float:
        return abs(self.mean - complex(exact))

    def agrees_with(self, exact: complex, sigmas: float = 4.0, atol: float = 1e-9) -> bool:
        # atol only matters when every sample is identical and the SE collapses to 0
        return self.deviation(exact) <= sigmas * self.standard_error + atol


class TraceWord(BaseModel):
    """The word W = H_1 C_1 ... H_n C_n; sources=None means every C_i is the identity."""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    n: PositiveInt
    sources: Optional[List[Any]] = Field(None, description="n fixed N x N matrices C_1..C_n")

    @field_validator("sources", mode="after")
    @classmethod
    def _as_arrays(cls, v: Optional[List[Any]]) -> Optional[List[np.ndarray]]:
        if v is None:
            return None
        arrays = [np.asarray(c, dtype=complex) for c in v]
        shapes = {a.shape for a in arrays}
        if len(shapes) != 1 or any(len(s) != 2 or s[0] != s[1] for s in shapes):
            raise ValueError(f"source matrices must share one square shape, got {shapes}")
        return arrays

    @model_validator(mode="after")
    def _check_count(self) -> "TraceWord":
        if self.sources is not None and len(self.sources) != self.n:
            raise ValueError(f"expected {self.n} source matrices, got {len(self.sources)}")
        return self


class MonomialSpec(BaseModel):
    """
    U_{a_1 b_1} ... U_{a_d b_d} (U^dag)_{b'_1 a'_1} ... (U^dag)_{b'_d' a'_d'} on U(N).
    Indices are 1-based.
    """
    a: List[int]
    b: List[int]
    a_prime: List[int] = Field(default_factory=list)
    b_prime: List[int] = Field(default_factory=list)
    N: PositiveInt

    @model_validator(mode="after")
    def _check_indices(self) -> "MonomialSpec":
        if len(self.a) != len(self.b) or len(self.a_prime) != len(self.b_prime):
            raise ValueError("index lists are not length-consistent")
        for idx in self.a + self.b + self.a_prime + self.b_prime:
            if not 1 <= idx <= self.N:
                raise ValueError(f"index {idx} outside 1..{self.N}")
        return self

    @property
    def d(self) -> int:
        return len(self.a)

    @property
    def d_prime(self) -> int:
        return len(self.a_prime)


class BranchProfile(BaseModel):
    """Ramification profiles over the branch points of a cover of a surface with Euler characteristic E."""
    partitions: List[Partition] = Field(..., min_length=1)
    euler: int = Field(2, description="Euler characteristic of the base surface")

    @property
    def degree(self) -> int:
        return self.partitions[0].weight


class NormalizationRule(BaseModel):
    """
    Exponent alpha(n, k, mu) = length_weight * l(mu) + beta(n, k) multiplying
    N^{l(kappa)} H(kappa, mu, (2^k)^n) in the Hurwitz form of the series.
    beta(n, k) is offsets["n,k"] when present and brick_weight * n * k otherwise.
    """
    length_weight: int = Field(1)
    brick_weight: int = Field(-1)
    offsets: Dict[str, int] = Field(default_factory=dict)

    @classmethod
    def printed(cls) -> "NormalizationRule":
        """The Hurwitz form exactly as printed: no extra power of N."""
        return cls(length_weight=0, brick_weight=0)

    def beta(self, n: int, k: int) -> int:
        return self.offsets.get(f"{n},{k}", self.brick_weight * n * k)

    def exponent(self, n: int, k: int, mu: Partition) -> int:
        return self.length_weight * mu.length + self.beta(n, k)


class ModelSpec(BaseModel):
    N: PositiveInt = Field(..., description="Matrix size")
    n: PositiveInt = Field(1, description="Number of random factors in the product")
    source_spectrum: Optional[List[Tuple[float, float]]] = Field(
        None, description="Eigenvalues of C = C_n ... C_1 as [re, im] pairs; None is the identity"
    )
    kind: ModelKind = Field(ModelKind.HERMITIAN)
    normalization: NormalizationRule = Field(default_factory=NormalizationRule)

    @model_validator(mode="after")
    def _check_spectrum(self) -> "ModelSpec":
        if self.source_spectrum is not None and len(self.source_spectrum) != self.N:
            raise ValueError(f"source spectrum needs {self.N} eigenvalues, got {len(self.source_spectrum)}")
        return self

    @property
    def is_identity(self) -> bool:
        return self.source_spectrum is None

    @property
    def spectrum(self) -> np.ndarray:
        if self.source_spectrum is None:
            return np.ones(self.N, dtype=complex)
        return np.array([complex(re, im) for re, im in self.source_spectrum])

    def with_N(self, N: int) -> "ModelSpec":
        if not self.is_identity:
            raise ValueError("a model with a source spectrum has a fixed N")
        return self.model_copy(update={"N": N})


class SeriesCoefficient(BaseModel):
    degree: int
    mu: Partition
    kappa: Optional[Partition] = None
    profiles: Optional[List[Partition]] = None
    value: str = Field(..., description="Exact rational a/b")
    repr: Representation
    outside_window: bool = False


class CalibrationEntry(BaseModel):
    n: int
    k: int
    N: int
    mu: Partition
    moment: str
    hurwitz_raw: str
    exponent: Optional[int] = Field(None, description="e with moment = N^e * hurwitz_raw; None if not a power of N")


class CalibrationReport(BaseModel):
    n: int
    max_k: int
    N_values: List[int]
    consistent: bool
    length_weight: Optional[int] = None
    offsets: Dict[str, int] = Field(default_factory=dict)
    hypothesis_confirmed: bool = Field(False, description="Whether beta(n, k) = -(n-1)k held with the printed form")
    table: List[CalibrationEntry] = Field(default_factory=list)

    def rule(self) -> NormalizationRule:
        return NormalizationRule(length_weight=self.length_weight or 0, brick_weight=0, offsets=self.offsets)


class NormalCoefficient(BaseModel):
    kappa: Partition
    mu: Partition
    ts: List[Partition]
    frobenius: str
    schur: str
    proportional: Optional[bool] = None


class NormalProportionalityReport(BaseModel):
    n: int
    k: int
    N: int
    proportional: bool
    constant: Optional[str] = None
    mismatches: List[NormalCoefficient] = Field(default_factory=list)


class SeriesDocument(BaseModel):
    model: ModelSpec
    coefficients: List[SeriesCoefficient] = Field(default_factory=list)
    calibration: Optional[CalibrationReport] = None


class RunConfig(BaseModel):
    """Resolved arguments of one CLI run; embedded verbatim in its output document."""
    subcommand: str
    arguments: Dict[str, Any] = Field(default_factory=dict)
    N: Optional[int] = None
    n: Optional[int] = None
    seed: Optional[int] = None
    samples: Optional[int] = None
    cap: Optional[int] = None
    workers: Optional[int] = None
    output: Optional[str] = None
    format: OutputFormat = OutputFormat.JSON


class OutputDocument(BaseModel):
    version: str
    config: RunConfig
    result: Dict[str, Any]


class CheckResult(BaseModel):
    name: str
    measured: str
    expected: str
    tolerance: str = "exact"
    passed: bool


class SuiteReport(BaseModel):
    suite: str
    passed: bool
    checks: List[CheckResult] = Field(default_factory=list)
    runtime_seconds: float = 0.0
    error: Optional[str] = None


class VerificationOptions(BaseModel):
    samples: PositiveInt = 100_000
    seed: int = 1
    workers: PositiveInt = 1
    cap: Optional[int] = None


class VerificationReport(BaseModel):
    version: str
    options: VerificationOptions
    suites: List[SuiteReport]
    passed: bool


class VerificationState(BaseModel):
    """The state object for the verification graph."""
    options: VerificationOptions = Field(default_factory=VerificationOptions)
    selected: List[str] = Field(default_factory=list)

    # Suites run in parallel and each writes its own key.
    suite_reports: Annotated[Dict[str, SuiteReport], merge_dicts] = Field(default_factory=dict)
    log: Annotated[List[str], add] = Field(default_factory=list)

    report: Optional[VerificationReport] = None
