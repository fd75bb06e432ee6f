"""Request and response models for the scoring service."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

MAX_SEED = (1 << 64) - 1

BackendName = Literal["builtin", "gzip"]


class RunParams(BaseModel):
    """Knobs shared by every analysis endpoint; defaults match the CLI."""

    seed: int = Field(default=42, ge=0, le=MAX_SEED)
    max_k: int = Field(default=20, ge=1)
    swap_divisor: int = Field(default=10, ge=1)
    plateau_start: int = Field(default=6, ge=0)
    threshold: float = 1.0
    backend: BackendName = "builtin"
    gzip_level: int = Field(default=6, ge=1, le=9)


class DocumentPayload(BaseModel):
    source_id: str
    content: str


class AnalyzeRequest(RunParams):
    content: str
    source_id: str = "<inline>"


class CurvePoint(BaseModel):
    k: int
    swaps: int
    bytes: int


class ChiReportModel(BaseModel):
    model_config = ConfigDict(from_attributes=True)

    chi: float
    v0: int
    plateau_mean: float
    plateau_k_start: int
    fluctuation_ratio: float
    verdict: str
    symbols: int
    threshold: float


class AnalyzeResponse(BaseModel):
    source_id: str
    report: ChiReportModel
    curve: list[CurvePoint]
    n_words: int
    run_config: dict


class CurveByLengthRequest(RunParams):
    content: str
    source_id: str = "<inline>"
    lengths: list[int] = Field(min_length=1)


class SeriesPoint(BaseModel):
    length: int
    chi: float


class CurveByLengthResponse(BaseModel):
    source_id: str
    series: list[SeriesPoint]
    run_config: dict


class GenerateRequest(BaseModel):
    vocab_size: int = Field(default=1000, ge=1)
    exponent: float = Field(default=1.0, gt=0)
    symbols: int = Field(default=10000, ge=13)
    seed: int = Field(default=42, ge=0, le=MAX_SEED)
    count: int = Field(default=1, ge=1)


class GeneratedDocument(BaseModel):
    source_id: str
    seed: int
    symbols: int
    content: str


class GenerateResponse(BaseModel):
    params: GenerateRequest
    documents: list[GeneratedDocument]


class BatchRequest(RunParams):
    documents: list[DocumentPayload] = Field(min_length=1)


class CorpusEntryModel(BaseModel):
    model_config = ConfigDict(from_attributes=True)

    source_id: str
    chi: Optional[float]
    symbols: int
    verdict: str


class CorpusReportModel(BaseModel):
    model_config = ConfigDict(from_attributes=True)

    entries: list[CorpusEntryModel]
    pass_fraction: float
    failing_mean_symbols: Optional[float]
    threshold: float
    run_config: dict


class CompareRequest(BaseModel):
    real: CorpusReportModel
    artificial: CorpusReportModel
    large_symbol_floor: int = Field(default=5000, ge=0)


class GroupSummaryModel(BaseModel):
    model_config = ConfigDict(from_attributes=True)

    count: int
    min_chi: float
    mean_chi: float
    max_chi: float


class CompareResponse(BaseModel):
    real: GroupSummaryModel
    artificial: GroupSummaryModel
    overlap: int
    min_real_chi_large: float
    large_symbol_floor: int


class HealthResponse(BaseModel):
    status: str
    version: str
