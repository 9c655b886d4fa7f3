"""
Reading and writing target, set and basis files
"""
import csv
import json
import logging
from pathlib import Path
from typing import Any, List, Tuple, Union

from pydantic import ValidationError

from basis_forge.exceptions import InvalidTargetError
from basis_forge.models.construction import ConstructionState
from basis_forge.models.integer_set import IntegerSet
from basis_forge.models.target import TargetFunction
from basis_forge.models.u_sequence import USequence
from basis_forge.schemas.basis_schema import BasisFile, PolicySchema, StepRecordSchema
from basis_forge.schemas.report_schema import GrowthRow
from basis_forge.schemas.target_schema import TargetSpecFile
from basis_forge.services import target_service
from basis_forge.services.u_sequence_service import extremal_target, spiral_sequence

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]

GROWTH_HEADER = ["x", "count", "bound_cubed_lhs", "bound_rhs", "pass"]


def _read_json(path: PathLike) -> Any:
    try:
        with open(path, encoding="utf-8") as f:
            return json.load(f)
    except OSError as e:
        raise InvalidTargetError(f"Cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise InvalidTargetError(f"{path} is not valid JSON: {e}") from e


def load_target(path: PathLike) -> Tuple[TargetFunction, USequence]:
    """Target function and its sequence U; {"extremal": delta} selects the extremal pair"""
    try:
        spec = TargetSpecFile.model_validate(_read_json(path))
    except ValidationError as e:
        raise InvalidTargetError(f"Invalid target file {path}: {e}") from e

    if spec.extremal is not None:
        if spec.default is not None or spec.overrides:
            raise InvalidTargetError("An extremal target takes no default or overrides")
        return extremal_target(spec.extremal)

    target = target_service.validate(spec)
    logger.debug(f"Loaded target from {path}: {target.to_spec()}")
    return target, spiral_sequence(target)


def load_set(path: PathLike) -> IntegerSet:
    """A JSON list of integers, or an object with an "elements" list"""
    data = _read_json(path)
    if isinstance(data, dict):
        data = data.get("elements")
    if not isinstance(data, list) or any(isinstance(v, bool) or not isinstance(v, int) for v in data):
        raise InvalidTargetError(f"{path} does not hold a list of integers")
    return IntegerSet.of(data)


def load_basis(path: PathLike) -> BasisFile:
    try:
        return BasisFile.model_validate(_read_json(path))
    except ValidationError as e:
        raise InvalidTargetError(f"Invalid basis file {path}: {e}") from e


def basis_from_state(state: ConstructionState) -> BasisFile:
    return BasisFile(
        order=state.order,
        restricted=state.restricted,
        c=state.c,
        delta=state.delta,
        K=state.k,
        policy=PolicySchema.from_policy(state.policy),
        elements=list(state.elements),
        steps=[StepRecordSchema.model_validate(r) for r in state.choice_log],
    )


def dump_basis(basis: BasisFile) -> str:
    """Deterministic JSON text: field order, indent 2, trailing newline"""
    return basis.model_dump_json(indent=2) + "\n"


def write_basis(path: PathLike, basis: BasisFile) -> None:
    Path(path).write_text(dump_basis(basis), encoding="utf-8")
    logger.info(f"Wrote basis with {len(basis.elements)} elements to {path}")


def write_growth_csv(stream, rows: List[GrowthRow]) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(GROWTH_HEADER)
    for row in rows:
        writer.writerow(row.csv_fields())
