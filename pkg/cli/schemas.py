from pydantic import BaseModel, Field, NonNegativeInt


class TermPayload(BaseModel):
    exp: list[NonNegativeInt] = Field(min_length=1)
    coeff: str


class PolyPayload(BaseModel):
    nvars: int = Field(ge=1)
    terms: list[TermPayload] = Field(default_factory=list)
    text: str | None = None


class ElementPayload(BaseModel):
    value: str
    mult: int = Field(default=1, ge=1)


class MultisetPayload(BaseModel):
    ring: str
    elements: list[ElementPayload] = Field(min_length=1)


class InterpolationValuePayload(BaseModel):
    value: str
    order: int = Field(ge=0)
    y: str


class InterpolationPayload(BaseModel):
    multiset: MultisetPayload
    values: list[InterpolationValuePayload]


class PlanePayload(BaseModel):
    a: list[str] = Field(min_length=1)
    b: str


class MultCoverPayload(BaseModel):
    grid: list[MultisetPayload] = Field(min_length=1)
    planes: list[PlanePayload] = Field(default_factory=list)


class CubeCoverPayload(BaseModel):
    ring: str
    n: int = Field(ge=1)
    planes: list[PlanePayload] = Field(default_factory=list)


class WitnessPayload(BaseModel):
    point: list[str]
    orders: list[int]
    value: str


class ErrorPayload(BaseModel):
    error: str
    message: str
