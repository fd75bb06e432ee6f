"""FastAPI service exposing the scoring pipeline to HTTP clients.

Documents travel in request bodies as decoded text; the service never touches
the filesystem, so one instance can score corpora for any number of clients.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..analysis import AnalysisOptions, analyze_document, chi_vs_length
from ..corpus import CorpusEntry, CorpusReport, analyze_corpus, compare_groups
from ..errors import IntermixError
from ..lz import Backend
from ..text import Document
from ..zipf import generate_document
from . import schemas

BACKEND_BY_NAME = {"builtin": Backend.BUILTIN_LZ, "gzip": Backend.GZIP_STREAM}


def _options(params: schemas.RunParams) -> AnalysisOptions:
    return AnalysisOptions(
        seed=params.seed,
        max_k=params.max_k,
        swap_divisor=params.swap_divisor,
        plateau_start=params.plateau_start,
        threshold=params.threshold,
        backend=BACKEND_BY_NAME[params.backend],
        gzip_level=params.gzip_level,
    )


def create_app() -> FastAPI:
    app = FastAPI(title="intermix", version=__version__)

    @app.exception_handler(IntermixError)
    async def domain_error(request: Request, exc: IntermixError) -> JSONResponse:
        return JSONResponse(
            status_code=400,
            content={"detail": str(exc), "error": type(exc).__name__},
        )

    @app.exception_handler(ValueError)
    async def value_error(request: Request, exc: ValueError) -> JSONResponse:
        return JSONResponse(
            status_code=422,
            content={"detail": str(exc), "error": type(exc).__name__},
        )

    @app.get("/health", response_model=schemas.HealthResponse)
    def health() -> schemas.HealthResponse:
        return schemas.HealthResponse(status="ok", version=__version__)

    @app.post("/analyze", response_model=schemas.AnalyzeResponse)
    def analyze(req: schemas.AnalyzeRequest) -> schemas.AnalyzeResponse:
        options = _options(req)
        doc = Document(content=req.content, source_id=req.source_id)
        report, curve = analyze_document(doc, options)
        return schemas.AnalyzeResponse(
            source_id=req.source_id,
            report=schemas.ChiReportModel.model_validate(report),
            curve=[
                schemas.CurvePoint(k=k, swaps=swaps, bytes=volume)
                for k, (swaps, volume) in enumerate(zip(curve.swap_counts, curve.volumes))
            ],
            n_words=curve.n_words,
            run_config=options.describe(),
        )

    @app.post("/curve-by-length", response_model=schemas.CurveByLengthResponse)
    def curve_by_length(req: schemas.CurveByLengthRequest) -> schemas.CurveByLengthResponse:
        options = _options(req)
        doc = Document(content=req.content, source_id=req.source_id)
        series = chi_vs_length(doc, req.lengths, options)
        return schemas.CurveByLengthResponse(
            source_id=req.source_id,
            series=[schemas.SeriesPoint(length=length, chi=value) for length, value in series],
            run_config=options.describe(),
        )

    @app.post("/generate", response_model=schemas.GenerateResponse)
    def generate(req: schemas.GenerateRequest) -> schemas.GenerateResponse:
        documents = []
        for i in range(req.count):
            seed = req.seed + i
            doc = generate_document(
                req.vocab_size, req.exponent, req.symbols, seed,
                source_id=f"zipf-{seed:05d}",
            )
            documents.append(
                schemas.GeneratedDocument(
                    source_id=doc.source_id,
                    seed=seed,
                    symbols=len(doc.content),
                    content=doc.content,
                )
            )
        return schemas.GenerateResponse(params=req, documents=documents)

    @app.post("/batch", response_model=schemas.CorpusReportModel)
    def batch(req: schemas.BatchRequest) -> schemas.CorpusReportModel:
        options = _options(req)
        docs = [Document(content=d.content, source_id=d.source_id) for d in req.documents]
        report = analyze_corpus(docs, base_seed=req.seed, options=options)
        return schemas.CorpusReportModel.model_validate(report)

    @app.post("/compare", response_model=schemas.CompareResponse)
    def compare(req: schemas.CompareRequest) -> schemas.CompareResponse:
        comparison = compare_groups(
            _report_from_model(req.real),
            _report_from_model(req.artificial),
            large_symbol_floor=req.large_symbol_floor,
        )
        return schemas.CompareResponse(
            real=schemas.GroupSummaryModel.model_validate(comparison.real),
            artificial=schemas.GroupSummaryModel.model_validate(comparison.artificial),
            overlap=comparison.overlap,
            min_real_chi_large=comparison.min_real_chi_large,
            large_symbol_floor=comparison.large_symbol_floor,
        )

    return app


def _report_from_model(model: schemas.CorpusReportModel) -> CorpusReport:
    return CorpusReport(
        entries=tuple(
            CorpusEntry(e.source_id, e.chi, e.symbols, e.verdict) for e in model.entries
        ),
        pass_fraction=model.pass_fraction,
        failing_mean_symbols=model.failing_mean_symbols,
        threshold=model.threshold,
        run_config=model.run_config,
    )


app = create_app()
