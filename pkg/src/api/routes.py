from typing import List, Optional

from fastapi import APIRouter, Depends, HTTPException
from pydantic import BaseModel, Field, PositiveInt

from src.combinatorics.characters import CharacterTable
from src.combinatorics.hurwitz import hurwitz_from_profiles
from src.combinatorics.partitions import Partition
from src.combinatorics.permutations import count_brickwork, count_factorizations
from src.config import HARD_ENUMERATION_LIMIT, get_settings
from src.exceptions import BrickworkError
from src.integrals.weingarten import monomial_integral, weingarten_value
from src.models.db import CharacterStore
from src.models.schemas import BranchProfile, ModelSpec, MonomialSpec, Representation, SeriesDocument, format_rational
from src.series.calibration import calibrate_normalization
from src.series.engine import build_series

router = APIRouter(prefix="/api")


# Dependency
def get_store() -> Optional[CharacterStore]:
    return CharacterStore.from_settings(get_settings())


# Request Models
class OracleRequest(BaseModel):
    kappa: Optional[Partition] = None
    mu: Optional[Partition] = None
    bricks: Optional[PositiveInt] = None
    profiles: Optional[List[Partition]] = Field(None, description="General profile list instead of a brickwork key")
    cap: Optional[int] = None


class WeingartenRequest(BaseModel):
    mu: Partition
    N: PositiveInt


class SeriesRequest(BaseModel):
    model: ModelSpec
    max_degree: int = Field(4, ge=0)
    reprs: List[Representation] = Field(default_factory=lambda: [Representation.MOMENT, Representation.SCHUR, Representation.HURWITZ])
    ignore_window: bool = False
    calibrate_k: Optional[PositiveInt] = Field(None, description="Calibrate the exponent rule up to this k first")


class ValueResponse(BaseModel):
    value: str


def _unprocessable(e: BrickworkError) -> HTTPException:
    return HTTPException(status_code=422, detail={"error": type(e).__name__, "message": str(e)})


@router.post("/hurwitz", response_model=ValueResponse)
def hurwitz_endpoint(req: BranchProfile):
    try:
        return ValueResponse(value=format_rational(hurwitz_from_profiles(req.partitions, req.euler)))
    except BrickworkError as e:
        raise _unprocessable(e)


@router.post("/oracle", response_model=ValueResponse)
def oracle_endpoint(req: OracleRequest):
    try:
        if req.profiles:
            value = count_factorizations(req.profiles, req.profiles[0].weight, cap=req.cap)
        elif req.kappa is not None and req.mu is not None and req.bricks:
            value = count_brickwork(req.kappa, req.mu, req.bricks, cap=req.cap)
        else:
            raise HTTPException(status_code=422, detail="give either profiles or kappa, mu and bricks")
        return ValueResponse(value=format_rational(value))
    except BrickworkError as e:
        raise _unprocessable(e)


@router.post("/weingarten", response_model=ValueResponse)
def weingarten_endpoint(req: WeingartenRequest):
    try:
        return ValueResponse(value=format_rational(weingarten_value(req.mu, req.N)))
    except BrickworkError as e:
        raise _unprocessable(e)


@router.post("/monomial", response_model=ValueResponse)
def monomial_endpoint(req: MonomialSpec):
    try:
        return ValueResponse(value=format_rational(monomial_integral(req)))
    except BrickworkError as e:
        raise _unprocessable(e)


@router.get("/characters/{degree}")
def characters_endpoint(degree: int, store: Optional[CharacterStore] = Depends(get_store)):
    if not 0 <= degree <= HARD_ENUMERATION_LIMIT:
        raise HTTPException(status_code=422, detail=f"degree must lie in 0..{HARD_ENUMERATION_LIMIT}")
    return CharacterTable.build(degree, store=store).to_json()


@router.post("/series", response_model=SeriesDocument)
def series_endpoint(req: SeriesRequest):
    try:
        model, calibration = req.model, None
        if req.calibrate_k:
            calibration = calibrate_normalization(model, req.calibrate_k)
            model = model.model_copy(update={"normalization": calibration.rule()})
        document = build_series(model, req.max_degree, req.reprs, req.ignore_window)
        document.calibration = calibration
        return document
    except BrickworkError as e:
        raise _unprocessable(e)
