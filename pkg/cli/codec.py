from __future__ import annotations

from collections.abc import Sequence
from pathlib import Path
from typing import Any, TypeVar

import orjson
from pydantic import BaseModel, TypeAdapter, ValidationError

from applications.models import CoverInstance, Hyperplane
from cli.schemas import (
    CubeCoverPayload,
    InterpolationPayload,
    MultCoverPayload,
    MultisetPayload,
    PlanePayload,
    PolyPayload,
    TermPayload,
    WitnessPayload,
)
from core.errors import InputFormatError, RingMismatchError
from hermite.interpolation import InterpolationData
from multisets.models import Grid, Multiset
from nonvanishing.models import Witness
from polynomials.expansion import ExpansionTable
from polynomials.models import MultivarPoly
from rings.models import RingSpec

ModelT = TypeVar("ModelT", bound=BaseModel)

_GRID_ADAPTER = TypeAdapter(list[MultisetPayload])
_SETS_ADAPTER = TypeAdapter(list[list[str]])
_POOL_ADAPTER = TypeAdapter(list[PlanePayload])


def read_source(value: str) -> str:
    """Inline text, or the contents of a file when prefixed with @."""
    if not value.startswith("@"):
        return value
    path = Path(value[1:])
    try:
        return path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputFormatError(f"Cannot read {path}: {exc}", exc) from exc


def load_json(value: str) -> Any:
    text = read_source(value)
    if not value.startswith("@") and not text.lstrip().startswith(("[", "{")):
        # bare file name
        text = read_source(f"@{text}")
    try:
        return orjson.loads(text)
    except orjson.JSONDecodeError as exc:
        raise InputFormatError(f"Malformed JSON: {exc}", exc) from exc


def _validate(adapter: TypeAdapter[Any], data: Any) -> Any:
    try:
        return adapter.validate_python(data)
    except ValidationError as exc:
        raise InputFormatError(f"Invalid payload: {exc.error_count()} error(s); {exc.errors()[0]['msg']}", exc) from exc


def load_model(model: type[ModelT], value: str) -> ModelT:
    result: ModelT = _validate(TypeAdapter(model), load_json(value))
    return result


def dumps(payload: Any) -> bytes:
    if isinstance(payload, BaseModel):
        payload = payload.model_dump()
    return orjson.dumps(payload, option=orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS)


def _ring_of(text: str, expected: RingSpec | None) -> RingSpec:
    ring = RingSpec.parse(text)
    if expected is not None and ring != expected:
        raise RingMismatchError(f"Payload over {ring}, command over {expected}")
    return ring


def poly_to_payload(p: MultivarPoly) -> PolyPayload:
    return PolyPayload(
        nvars=p.nvars,
        terms=[TermPayload(exp=list(exp), coeff=str(coeff)) for exp, coeff in p.sorted_terms()],
        text=p.render(),
    )


def multiset_from_payload(payload: MultisetPayload, ring: RingSpec | None = None) -> Multiset:
    spec = _ring_of(payload.ring, ring)
    return Multiset.of(spec, [(spec.parse_element(item.value), item.mult) for item in payload.elements])


def load_grid(value: str, ring: RingSpec | None = None) -> Grid:
    payloads: list[MultisetPayload] = _validate(_GRID_ADAPTER, load_json(value))
    if not payloads:
        raise InputFormatError("A grid needs at least one multiset")
    return Grid(tuple(multiset_from_payload(item, ring) for item in payloads))


def load_sets(value: str, ring: RingSpec) -> list[Multiset]:
    raw: list[list[str]] = _validate(_SETS_ADAPTER, load_json(value))
    return [Multiset.plain(ring, [ring.parse_element(s) for s in elements]) for elements in raw]


def interpolation_from_payload(payload: InterpolationPayload, ring: RingSpec | None = None) -> InterpolationData:
    ms = multiset_from_payload(payload.multiset, ring)
    values = {(ms.ring.parse_element(item.value), item.order): ms.ring.parse_element(item.y) for item in payload.values}
    return InterpolationData(ms, values)


def plane_from_payload(payload: PlanePayload, ring: RingSpec) -> Hyperplane:
    return Hyperplane(tuple(ring.parse_element(a) for a in payload.a), ring.parse_element(payload.b))


def plane_to_payload(plane: Hyperplane) -> PlanePayload:
    return PlanePayload(a=[str(a) for a in plane.coeffs], b=str(plane.offset))


def load_pool(value: str, ring: RingSpec) -> list[Hyperplane]:
    payloads: list[PlanePayload] = _validate(_POOL_ADAPTER, load_json(value))
    return [plane_from_payload(item, ring) for item in payloads]


def mult_cover_from_payload(payload: MultCoverPayload, ring: RingSpec | None = None) -> CoverInstance:
    grid = Grid(tuple(multiset_from_payload(item, ring) for item in payload.grid))
    return CoverInstance(grid, tuple(plane_from_payload(item, grid.ring) for item in payload.planes))


def cube_cover_from_payload(
    payload: CubeCoverPayload, ring: RingSpec | None = None
) -> tuple[list[Hyperplane], RingSpec, int]:
    spec = _ring_of(payload.ring, ring)
    return [plane_from_payload(item, spec) for item in payload.planes], spec, payload.n


def witness_to_payload(witness: Witness) -> WitnessPayload:
    return WitnessPayload(
        point=[str(s) for s in witness.point],
        orders=list(witness.orders),
        value=str(witness.value),
    )


def expansion_to_dict(table: ExpansionTable) -> dict[str, str]:
    return {",".join(str(u_i) for u_i in u): str(coeff) for u, coeff in table.coeffs.items()}


def parse_int_list(value: str) -> list[int]:
    try:
        return [int(item) for item in value.split(",") if item.strip()]
    except ValueError as exc:
        raise InputFormatError(f"Expected a comma separated list of integers, got {value!r}", exc) from exc


def points_to_lists(points: Sequence[Sequence[object]]) -> list[list[str]]:
    return [[str(s) for s in point] for point in points]
