"""Instance model, validation, and reductions between subset-sum variants.

Every value is exact: integers are Python ints, rationals are
:class:`fractions.Fraction`.  Multiplicities everywhere count *nonempty*
subsets, so a Natural instance with target 0 is always a "no".
"""
from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Any, Optional, Sequence

from .errors import (
    EmptyInstance,
    InstanceError,
    NonIntegerValue,
    NonNaturalValue,
    NonZeroTarget,
    VariantMismatch,
    ZeroDenominator,
)

JSON_SAFE_INT = 2**53 - 1


class Variant(enum.Enum):
    NATURAL = "natural"
    INTEGER = "integer"
    ZERO_SUM = "zero-sum"
    RATIONAL = "rational"


class Backend(enum.Enum):
    TAPE_COUNT = "tape-count"
    TAPE_BOOL = "tape-bool"
    GENFUNC = "genfunc"
    SPECTRAL_FOURIER = "spectral-fourier"
    SPECTRAL_CONV = "spectral-conv"
    DC_INTEGRAL = "dc-integral"
    DETECTOR = "detector"
    ORACLE = "oracle"


@dataclass(frozen=True)
class Instance:
    values: tuple
    target: Any = 0
    variant: Variant = Variant.NATURAL

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def total(self):
        """Sum of all values (the tape length S for Natural instances)."""
        return sum(self.values)

    @property
    def sum_range(self) -> tuple:
        """(lowest, highest) sum any subset, including the empty one, can reach."""
        lo = sum(v for v in self.values if v < 0)
        hi = sum(v for v in self.values if v > 0)
        return lo, hi

    def with_target(self, target) -> "Instance":
        return replace(self, target=target)


@dataclass(frozen=True)
class Answer:
    decision: bool
    multiplicity: Optional[int]
    backend: Backend

    def to_json(self) -> dict:
        d: dict = {"decision": self.decision, "backend": self.backend.value}
        if self.multiplicity is not None:
            d["multiplicity"] = str(self.multiplicity)
        return d


def _is_int(v) -> bool:
    return isinstance(v, int) and not isinstance(v, bool)


def validate(inst: Instance) -> Instance:
    """Return ``inst`` unchanged if it satisfies its variant's invariants."""
    if not inst.values:
        raise EmptyInstance("instance has no values")
    if inst.variant is Variant.RATIONAL:
        for v in (*inst.values, inst.target):
            if not isinstance(v, (Fraction, int)) or isinstance(v, bool):
                raise NonIntegerValue(f"rational entry {v!r} is not an exact rational")
        return inst
    for v in (*inst.values, inst.target):
        if not _is_int(v):
            raise NonIntegerValue(f"{v!r} is not an exact integer")
    if inst.variant is Variant.NATURAL:
        bad = [v for v in inst.values if v <= 0]
        if bad:
            raise NonNaturalValue(f"natural instance contains non-positive values {bad}")
    elif inst.variant is Variant.ZERO_SUM and inst.target != 0:
        raise NonZeroTarget(f"zero-sum instance has target {inst.target}")
    return inst


def rational(num: int, den: int) -> Fraction:
    if den == 0:
        raise ZeroDenominator(f"{num}/{den}")
    return Fraction(num, den)


def reduce_rational(inst: Instance) -> tuple[Instance, int]:
    """Clear denominators; returns the integer instance and the scale L (lcm of denominators)."""
    validate(inst)
    if inst.variant is not Variant.RATIONAL:
        raise VariantMismatch(f"expected a rational instance, got {inst.variant.value}")
    fracs = [Fraction(v) for v in inst.values]
    target = Fraction(inst.target)
    scale = math.lcm(*(f.denominator for f in fracs), target.denominator)
    values = tuple(int(f * scale) for f in fracs)
    return Instance(values, int(target * scale), Variant.INTEGER), scale


def scale_to_unit(inst: Instance) -> list[Fraction]:
    """Divide every value by the total so achievable subset sums land in (0, 1]."""
    validate(inst)
    if inst.variant is not Variant.NATURAL:
        raise VariantMismatch("scale_to_unit needs a natural instance")
    s = inst.total
    return [Fraction(v, s) for v in inst.values]


def promote(inst: Instance) -> Instance:
    """Validate and, for rational instances, reduce to an equivalent integer instance."""
    validate(inst)
    if inst.variant is Variant.RATIONAL:
        return reduce_rational(inst)[0]
    return inst


# -- JSON instance files ------------------------------------------------------

def _int_from_json(v) -> int:
    if isinstance(v, str):
        return int(v)
    if _is_int(v):
        return v
    raise NonIntegerValue(f"{v!r} is not an exact integer")


def _int_to_json(v: int):
    return str(v) if abs(v) > JSON_SAFE_INT else v


def _rational_from_json(v) -> Fraction:
    if isinstance(v, (list, tuple)):
        if len(v) != 2:
            raise InstanceError(f"rational entry {v!r} must be [num, den]")
        return rational(_int_from_json(v[0]), _int_from_json(v[1]))
    return Fraction(_int_from_json(v))


def instance_from_dict(d: dict) -> Instance:
    try:
        variant = Variant(d.get("variant", "natural"))
    except ValueError:
        raise InstanceError(f"unknown variant {d.get('variant')!r}") from None
    if "values" not in d:
        raise InstanceError("instance is missing 'values'")
    conv = _rational_from_json if variant is Variant.RATIONAL else _int_from_json
    values = tuple(conv(v) for v in d["values"])
    target = conv(d.get("target", 0))
    return validate(Instance(values, target, variant))


def instance_to_dict(inst: Instance) -> dict:
    if inst.variant is Variant.RATIONAL:
        def conv(f):
            f = Fraction(f)
            return [_int_to_json(f.numerator), _int_to_json(f.denominator)]
    else:
        conv = _int_to_json
    return {
        "variant": inst.variant.value,
        "values": [conv(v) for v in inst.values],
        "target": conv(inst.target),
    }


def load_instance(path) -> Instance:
    with open(path) as f:
        return instance_from_dict(json.load(f))


def dump_instance(inst: Instance, path) -> None:
    with open(path, "w") as f:
        json.dump(instance_to_dict(inst), f)


def counts_to_json(counts: dict) -> dict:
    """Sparse multiplicity map as JSON: {"sum": "count"}."""
    return {str(k): str(v) for k, v in sorted(counts.items())}


def counts_from_json(d: dict) -> dict:
    return {int(k): int(v) for k, v in d.items()}


def natural(*values: int, target: int = 0) -> Instance:
    return validate(Instance(tuple(values), target, Variant.NATURAL))


def integer(*values: int, target: int = 0) -> Instance:
    return validate(Instance(tuple(values), target, Variant.INTEGER))


def zero_sum(values: Sequence[int]) -> Instance:
    return validate(Instance(tuple(values), 0, Variant.ZERO_SUM))
