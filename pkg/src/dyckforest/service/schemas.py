"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

from pydantic import BaseModel


class HealthResponse(BaseModel):
    status: str
    version: str


class TermsResponse(BaseModel):
    limit: int
    terms: list[int]


class RangeRow(BaseModel):
    range: int
    size: int
    triplets: int
    lone_terms: int


class RangesResponse(BaseModel):
    rows: list[RangeRow]


class TripletModel(BaseModel):
    low: int
    mid: int
    high: int


class TripletsResponse(BaseModel):
    range: int
    triplets: list[TripletModel]


class RootsResponse(BaseModel):
    range: int
    roots: list[int]


class PrimeTripletModel(BaseModel):
    low: int
    mid: int
    high: int
    low_prime: bool
    mid_prime: bool
    high_prime: bool
    gap: str
    masked: str


class RangePrimesResponse(BaseModel):
    range: int
    records: list[PrimeTripletModel]
    twins: int
    cousins: int


class TreeLevelResponse(BaseModel):
    root: int
    depth: int
    nodes: list[int]


class TreePrimesResponse(BaseModel):
    root: int
    depth: int
    records: list[PrimeTripletModel]


class RankResponse(BaseModel):
    value: int
    rank: int


class TermAtResponse(BaseModel):
    index: int
    value: int


class VerifyRequest(BaseModel):
    sequence: str
    text: str


class VerifyResponse(BaseModel):
    sequence: str
    checked: int
    ok: bool
    mismatch_index: int | None = None
    expected: int | None = None
    actual: int | None = None


class ErrorBody(BaseModel):
    detail: str
    code: str
