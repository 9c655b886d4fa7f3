"""
Validation and evaluation of the target function f.
"""
import logging
import math
from typing import Any, Mapping, Union

from pydantic import ValidationError

from basis_forge.config import settings
from basis_forge.exceptions import InvalidTargetError
from basis_forge.models.integer_set import IntegerSet
from basis_forge.models.target import INFINITY, Multiplicity, TargetFunction, is_infinite
from basis_forge.schemas.target_schema import TargetSpecFile

logger = logging.getLogger(__name__)


def _check_value(value: Multiplicity, where: str) -> None:
    if is_infinite(value):
        return
    if value < 0:
        raise InvalidTargetError(f"Negative target value {value} at {where}")


def validate(spec: Union[TargetSpecFile, Mapping[str, Any]]) -> TargetFunction:
    """Build a checked TargetFunction from its external form"""
    if not isinstance(spec, TargetSpecFile):
        try:
            spec = TargetSpecFile.model_validate(spec)
        except ValidationError as e:
            raise InvalidTargetError(f"Malformed target: {e}") from e

    if spec.extremal is not None:
        raise InvalidTargetError("Extremal targets are built by u_sequence_service.extremal_target")
    if spec.default is None:
        raise InvalidTargetError("Target is missing its default value")

    default = spec.default_multiplicity()
    overrides = spec.override_multiplicities()

    _check_value(default, "default")
    if default == 0:
        raise InvalidTargetError("Target default 0 would give an infinite zero set")
    for n, value in overrides.items():
        _check_value(value, f"n={n}")

    target = TargetFunction(default_value=default, overrides=overrides)
    logger.debug(f"Validated target: delta={target.delta}, c={window_constant(target.delta)}")
    return target


def unit_target(value: Multiplicity = 1) -> TargetFunction:
    """f ≡ value"""
    if not is_infinite(value) and value < 1:
        raise InvalidTargetError("A constant target must be at least 1")
    return TargetFunction(default_value=value)


def evaluate(target: TargetFunction, n: int) -> Multiplicity:
    return target(n)


def zero_set(target: TargetFunction) -> IntegerSet:
    return target.zero_set


def delta(target: TargetFunction) -> int:
    return target.delta


def window_constant(delta_value: int, order: int = 2, block_total: int = 1) -> int:
    """
    c = 8 + [(delta+1)/2] for order 2.

    For order h >= 3 the base is raised to T h^(2h) / ((h-1)! h!), rounded up,
    with T the block coefficient total. That is the order-2 base scaled to the
    count of cross sums between one block element and an (h-1)-fold old sum
    that can land on an old h-fold sum.
    """
    if settings.WINDOW_CONSTANT is not None:
        return settings.WINDOW_CONSTANT
    base = settings.WINDOW_BASE
    if order > 2:
        scale = math.factorial(order - 1) * math.factorial(order)
        base = max(base, -(-block_total * order ** (2 * order) // scale))
    return base + (delta_value + 1) // 2


__all__ = [
    "INFINITY",
    "validate",
    "unit_target",
    "evaluate",
    "zero_set",
    "delta",
    "window_constant",
]
