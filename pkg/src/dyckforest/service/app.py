"""HTTP service exposing the censuses and lookups.

Error contract: domain errors come back as 400 with a ``code`` of
``overflow`` or ``invalid_value``; malformed requests are FastAPI's
usual 422.  All successful payloads are deterministic for fixed inputs.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException, Query, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..core import WidthOverflowError, enumerate_terms, range_size
from ..forest import tree_level
from ..indexing import rank, term_at
from ..oeisdata import parse_bfile, verify_prefix
from ..primes import PrimeTripletRecord, prime_triplets_in_range, prime_triplets_in_tree
from ..triplets import lone_terms_in_range, triplets_in_range
from .schemas import (
    HealthResponse,
    PrimeTripletModel,
    RangePrimesResponse,
    RangeRow,
    RangesResponse,
    RankResponse,
    RootsResponse,
    TermAtResponse,
    TermsResponse,
    TreeLevelResponse,
    TreePrimesResponse,
    TripletModel,
    TripletsResponse,
    VerifyRequest,
    VerifyResponse,
)

# Service-side practicality bounds; the library itself accepts more.
MAX_ENUM_LIMIT = 1_000_000
MAX_CENSUS_RANGE = 26
MAX_TREE_DEPTH = 10


def _record_model(r: PrimeTripletRecord) -> PrimeTripletModel:
    low, mid, high = r.triplet.members()
    return PrimeTripletModel(
        low=low,
        mid=mid,
        high=high,
        low_prime=r.prime_mask[0],
        mid_prime=r.prime_mask[1],
        high_prime=r.prime_mask[2],
        gap=r.gap or "",
        masked=r.masked,
    )


def create_app() -> FastAPI:
    app = FastAPI(
        title="dyckforest",
        version=__version__,
        description="Ranges, triplets, ternary-tree forest and prime censuses "
        "of the binary suffix-dominant numbers (OEIS A036991).",
    )

    @app.exception_handler(WidthOverflowError)
    def _overflow(request: Request, exc: WidthOverflowError):
        return JSONResponse(status_code=400, content={"detail": str(exc), "code": "overflow"})

    @app.exception_handler(ValueError)
    def _bad_value(request: Request, exc: ValueError):
        return JSONResponse(status_code=400, content={"detail": str(exc), "code": "invalid_value"})

    @app.get("/health", response_model=HealthResponse)
    def health():
        return HealthResponse(status="ok", version=__version__)

    @app.get("/terms", response_model=TermsResponse)
    def terms(limit: int = Query(..., ge=1, le=MAX_ENUM_LIMIT)):
        return TermsResponse(limit=limit, terms=list(enumerate_terms(limit)))

    @app.get("/ranges", response_model=RangesResponse)
    def ranges(
        start: int = Query(..., alias="from", ge=1, le=MAX_CENSUS_RANGE),
        to: int = Query(..., ge=1, le=MAX_CENSUS_RANGE),
    ):
        if to < start:
            raise HTTPException(status_code=422, detail="'to' must be >= 'from'")
        rows = [
            RangeRow(
                range=n,
                size=range_size(n),
                triplets=len(triplets_in_range(n)),
                lone_terms=len(lone_terms_in_range(n)),
            )
            for n in range(start, to + 1)
        ]
        return RangesResponse(rows=rows)

    @app.get("/ranges/{n}/triplets", response_model=TripletsResponse)
    def range_triplets(n: int):
        _check_census_range(n)
        trips = [
            TripletModel(low=t.low, mid=t.mid, high=t.high)
            for t in triplets_in_range(n)
        ]
        return TripletsResponse(range=n, triplets=trips)

    @app.get("/ranges/{n}/roots", response_model=RootsResponse)
    def range_roots(n: int):
        _check_census_range(n)
        return RootsResponse(range=n, roots=lone_terms_in_range(n))

    @app.get("/ranges/{n}/primes", response_model=RangePrimesResponse)
    def range_primes(n: int):
        _check_census_range(n)
        records = prime_triplets_in_range(n)
        twins = sum(1 for r in records if r.gap == "twin")
        return RangePrimesResponse(
            range=n,
            records=[_record_model(r) for r in records],
            twins=twins,
            cousins=len(records) - twins,
        )

    @app.get("/tree", response_model=TreeLevelResponse)
    def tree(root: int = Query(..., ge=1), depth: int = Query(..., ge=0, le=MAX_TREE_DEPTH)):
        return TreeLevelResponse(root=root, depth=depth, nodes=tree_level(root, depth))

    @app.get("/tree/primes", response_model=TreePrimesResponse)
    def tree_primes(
        root: int = Query(..., ge=1),
        depth: int = Query(..., ge=0, le=MAX_TREE_DEPTH),
    ):
        records = prime_triplets_in_tree(root, depth)
        return TreePrimesResponse(
            root=root, depth=depth, records=[_record_model(r) for r in records]
        )

    @app.get("/rank/{value}", response_model=RankResponse)
    def rank_of(value: int):
        return RankResponse(value=value, rank=rank(value))

    @app.get("/term/{index}", response_model=TermAtResponse)
    def term(index: int):
        if index < 1:
            raise HTTPException(status_code=422, detail="index must be positive")
        return TermAtResponse(index=index, value=term_at(index))

    @app.post("/verify", response_model=VerifyResponse)
    def verify(request: VerifyRequest):
        report = verify_prefix(parse_bfile(request.text), request.sequence)
        return VerifyResponse(
            sequence=report.sequence,
            checked=report.checked,
            ok=report.ok,
            mismatch_index=report.mismatch_index,
            expected=report.expected,
            actual=report.actual,
        )

    return app


def _check_census_range(n: int) -> None:
    if n < 1 or n > MAX_CENSUS_RANGE:
        raise HTTPException(
            status_code=422,
            detail=f"range must be in 1..{MAX_CENSUS_RANGE}",
        )


app = create_app()
