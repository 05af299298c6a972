"""Single composition errors: inject one, enumerate all, or sample one.

An error keeps the corrupted substring's length but misreads one of its
symbols, so a composition ``(z, w)`` becomes ``(z-1, w+1)`` or
``(z+1, w-1)``.  Class cardinalities never change; exactly one class's
cumulative weight moves, by exactly one.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterator

import numpy as np

from .compositions import Composition, CompositionMultiset
from .errors import InvalidError, NoAdmissibleError


class ErrorDirection(Enum):
    ZERO_TO_ONE = "01"
    ONE_TO_ZERO = "10"


@dataclass(frozen=True)
class ErrorSpec:
    """One admissible corruption: which composition of which class, which way."""

    length: int
    target: Composition
    direction: ErrorDirection

    @property
    def result(self) -> Composition:
        if self.direction is ErrorDirection.ZERO_TO_ONE:
            return Composition(self.target.zeros - 1, self.target.ones + 1)
        return Composition(self.target.zeros + 1, self.target.ones - 1)

    def render(self) -> str:
        return (
            f"class={self.length} "
            f"from={self.target.zeros}^0{self.target.ones}^1 "
            f"dir={self.direction.value}"
        )


def apply_error(multiset: CompositionMultiset, spec: ErrorSpec) -> CompositionMultiset:
    """A copy of the multiset with one composition shifted per the spec."""
    counter = multiset.classes.get(spec.length, Counter())
    if counter.get(spec.target, 0) < 1:
        raise InvalidError(f"{spec.target} not present in class {spec.length}")
    if spec.direction is ErrorDirection.ZERO_TO_ONE and spec.target.zeros < 1:
        raise InvalidError(f"{spec.target} has no zero to misread")
    if spec.direction is ErrorDirection.ONE_TO_ZERO and spec.target.ones < 1:
        raise InvalidError(f"{spec.target} has no one to misread")
    corrupted = multiset.copy()
    klass = corrupted.classes[spec.length]
    klass[spec.target] -= 1
    klass[spec.result] += 1
    return CompositionMultiset(corrupted.n, corrupted.classes)


def enumerate_errors(
    multiset: CompositionMultiset,
) -> Iterator[tuple[ErrorSpec, CompositionMultiset]]:
    """Every admissible error, once per distinct (class, composition, direction)."""
    for length in sorted(multiset.classes):
        for comp in sorted(multiset.classes[length]):
            for direction in (ErrorDirection.ZERO_TO_ONE, ErrorDirection.ONE_TO_ZERO):
                if direction is ErrorDirection.ZERO_TO_ONE and comp.zeros < 1:
                    continue
                if direction is ErrorDirection.ONE_TO_ZERO and comp.ones < 1:
                    continue
                spec = ErrorSpec(length, comp, direction)
                yield spec, apply_error(multiset, spec)


def pick_error(
    choices: list[tuple[ErrorSpec, CompositionMultiset]], seed: int
) -> tuple[ErrorSpec, CompositionMultiset]:
    """Uniform choice from a prepared error list, deterministic in the seed.

    A counter-based generator keyed by the seed keeps independently seeded
    draws reproducible across parallel sweeps.
    """
    if not choices:
        raise NoAdmissibleError("multiset admits no single composition error")
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence(seed)))
    return choices[int(rng.integers(len(choices)))]


def random_error(
    multiset: CompositionMultiset, seed: int
) -> tuple[ErrorSpec, CompositionMultiset]:
    """Uniform choice among all admissible errors, deterministic in the seed."""
    return pick_error(list(enumerate_errors(multiset)), seed)
