"""Hybrid role/scalar event templates.

An event is written as::

    (x ACT[manner] y) CAUSE ([value1]y -> [value2]y)

The left side is the manner slot, the right side a change of ``y`` between
two values on a single scale.  Manner verbs fill only the left slot, result
verbs only the right one.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Union

from .errors import EmptyManner, NoChange, ParticipantMismatch


@dataclass(frozen=True)
class OrdinalValue:
    """A label on an ordered scale such as ``("alive", "dead")``."""

    label: str
    scale: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "scale", tuple(self.scale))
        if self.label not in self.scale:
            raise ValueError(f"{self.label!r} is not on the scale {self.scale}")

    @property
    def rank(self) -> int:
        return self.scale.index(self.label)

    def to_dict(self):
        return {"label": self.label, "scale": list(self.scale)}


@dataclass(frozen=True)
class NumericValue:
    value: float
    unit: str

    def __post_init__(self):
        if not self.unit or not self.unit.strip():
            raise ValueError("numeric scale values need a unit")

    @property
    def rank(self) -> float:
        return self.value

    def to_dict(self):
        return {"value": self.value, "unit": self.unit}


ScaleValue = Union[OrdinalValue, NumericValue]


@dataclass(frozen=True)
class ScalarChange:
    dimension: str
    participant: str
    initial_value: ScaleValue
    final_value: ScaleValue

    def __post_init__(self):
        if not self.dimension or not self.dimension.strip():
            raise ValueError("scalar change needs a dimension")
        a, b = self.initial_value, self.final_value
        if type(a) is not type(b):
            raise ValueError("initial and final values must be of the same kind")
        if isinstance(a, OrdinalValue) and a.scale != b.scale:
            raise ValueError("initial and final labels must share one scale")
        if isinstance(a, NumericValue) and a.unit != b.unit:
            raise ValueError(f"unit mismatch: {a.unit!r} vs {b.unit!r}")
        if a == b:
            raise NoChange(f"{self.dimension}: initial and final values are equal")

    @property
    def direction(self) -> int:
        """+1 when moving up the scale, -1 when moving down."""
        return 1 if self.final_value.rank > self.initial_value.rank else -1

    def to_dict(self):
        return {
            "dimension": self.dimension,
            "participant": self.participant,
            "initial": self.initial_value.to_dict(),
            "final": self.final_value.to_dict(),
        }


class Side(str, enum.Enum):
    MANNER = "manner"
    RESULT = "result"
    BOTH = "both"


@dataclass(frozen=True)
class EventTemplate:
    agent: str
    patient: str
    manner: Optional[str] = None
    result: Optional[ScalarChange] = None

    def __post_init__(self):
        if self.manner is None and self.result is None:
            raise ValueError("an event template needs a manner, a result, or both")
        if self.manner is not None and not self.manner.strip():
            raise EmptyManner("manner must be non-empty")
        if self.result is not None and self.result.participant != self.patient:
            raise ParticipantMismatch(
                f"result changes {self.result.participant!r}, patient is {self.patient!r}"
            )

    def to_dict(self):
        return {
            "agent": self.agent,
            "patient": self.patient,
            "manner": self.manner,
            "result": self.result.to_dict() if self.result else None,
            "side": classify_side(self).value,
        }


def make_manner_event(agent: str, patient: str, manner: str) -> EventTemplate:
    if not manner or not manner.strip():
        raise EmptyManner("manner must be non-empty")
    return EventTemplate(agent, patient, manner=manner)


def make_result_event(agent: str, patient: str, change: ScalarChange) -> EventTemplate:
    if change.participant != patient:
        raise ParticipantMismatch(
            f"result changes {change.participant!r}, patient is {patient!r}"
        )
    return EventTemplate(agent, patient, result=change)


def classify_side(template: EventTemplate) -> Side:
    if template.manner is not None and template.result is not None:
        return Side.BOTH
    if template.manner is not None:
        return Side.MANNER
    return Side.RESULT


ALIVE_DEAD = ("alive", "dead")
INTACT_BROKEN = ("intact", "broken")


def demo_events() -> dict[str, EventTemplate]:
    """The stock examples: hit vs. break, kill, heating water, oil price."""
    return {
        "hit": make_manner_event("John", "fence", "hit"),
        "break": make_result_event(
            "x",
            "window",
            ScalarChange(
                "intact-broken",
                "window",
                OrdinalValue("intact", INTACT_BROKEN),
                OrdinalValue("broken", INTACT_BROKEN),
            ),
        ),
        "kill": make_result_event(
            "x",
            "y",
            ScalarChange(
                "alive-dead", "y", OrdinalValue("alive", ALIVE_DEAD), OrdinalValue("dead", ALIVE_DEAD)
            ),
        ),
        "heat-water": make_result_event(
            "x",
            "water",
            ScalarChange("temperature", "water", NumericValue(20.0, "degC"), NumericValue(80.0, "degC")),
        ),
        # 10% rise, price indexed to 100 before the change
        "oil-price": make_result_event(
            "-",
            "oil",
            ScalarChange("price", "oil", NumericValue(100.0, "index"), NumericValue(110.0, "index")),
        ),
    }
