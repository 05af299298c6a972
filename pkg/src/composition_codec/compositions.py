"""Compositions, composition multisets, and weight recovery.

An idealized mass-spectrometry readout of a binary string keeps, for every
substring, only its unordered content: how many zeros and how many ones.
``fragment`` produces the complete multiset of these compositions grouped
by substring length.  The weight machinery then turns a multiset back into
per-length cumulative weights and the per-pair weight sums (``sigma``)
that every decoder in this package starts from: ``sigma[i]`` is the joint
weight of the mirrored bit pair ``(s_i, s_{n+1-i})``, with the lone middle
bit as the final entry when the length is odd.

All values are plain immutable data; every function is pure.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    DimensionMismatch,
    InconsistentMultiset,
    InvalidMultiset,
    MalformedInput,
    SigmaOutOfRange,
    SymmetryViolation,
)


class Composition(NamedTuple):
    """Unordered content of one substring: a count of zeros and of ones."""

    zeros: int
    ones: int

    @property
    def length(self) -> int:
        return self.zeros + self.ones


def bits_of(s: str) -> tuple[int, ...]:
    """Validate an ASCII bit string and return it as a tuple of ints."""
    if not s:
        raise MalformedInput("empty bit string")
    if set(s) - {"0", "1"}:
        raise MalformedInput(f"bit string may contain only 0 and 1, got {s!r}")
    return tuple(1 if c == "1" else 0 for c in s)


@dataclass
class CompositionMultiset:
    """All substring compositions of one string, grouped by substring length.

    ``classes[l]`` is a Counter keyed by :class:`Composition`; a well-formed
    multiset for a length-``n`` string has ``n - l + 1`` compositions in
    class ``l``.  Construction does not validate cardinalities -- a parsed
    document may be structurally fine yet fail :meth:`validate`, and
    corrupted multisets produced by the error channel keep their
    cardinalities intact on purpose.
    """

    n: int
    classes: dict[int, Counter]

    def __post_init__(self) -> None:
        # normalize away zero counts so equality is multiset equality
        cleaned: dict[int, Counter] = {}
        for length, counter in self.classes.items():
            kept = Counter({c: k for c, k in counter.items() if k > 0})
            if kept:
                cleaned[length] = kept
        self.classes = cleaned

    def validate(self) -> "CompositionMultiset":
        """Check class cardinalities and composition shapes; return self."""
        if self.n < 1:
            raise InvalidMultiset("string length must be at least 1")
        for length in range(1, self.n + 1):
            counter = self.classes.get(length)
            if counter is None:
                raise InvalidMultiset(f"class {length} is missing")
            for comp, count in counter.items():
                if comp.zeros < 0 or comp.ones < 0 or comp.length != length:
                    raise InvalidMultiset(
                        f"composition {comp} does not belong in class {length}"
                    )
                if count < 1:
                    raise InvalidMultiset(f"non-positive count for {comp}")
            expected = self.n - length + 1
            if counter.total() != expected:
                raise InvalidMultiset(
                    f"class {length} holds {counter.total()} compositions, "
                    f"expected {expected}"
                )
        if set(self.classes) - set(range(1, self.n + 1)):
            raise InvalidMultiset("class index outside [1..n]")
        return self

    def total(self) -> int:
        """Number of compositions over all classes, with multiplicity."""
        return sum(c.total() for c in self.classes.values())

    def copy(self) -> "CompositionMultiset":
        return CompositionMultiset(
            self.n, {length: Counter(c) for length, c in self.classes.items()}
        )


@dataclass(frozen=True)
class WeightProfile:
    """Cumulative weights per class plus the derived pair weight sums."""

    n: int
    w: tuple[int, ...]
    sigma: tuple[int, ...]


def fragment(s: str) -> CompositionMultiset:
    """Break a string into the composition multiset of all its substrings."""
    bits = bits_of(s)
    n = len(bits)
    prefix = [0]
    for b in bits:
        prefix.append(prefix[-1] + b)
    classes: dict[int, Counter] = {}
    for length in range(1, n + 1):
        counter: Counter = Counter()
        for start in range(n - length + 1):
            ones = prefix[start + length] - prefix[start]
            counter[Composition(length - ones, ones)] += 1
        classes[length] = counter
    return CompositionMultiset(n, classes)


def cumulative_weights(multiset: CompositionMultiset) -> tuple[int, ...]:
    """Total number of ones in each class, indexed by class length.

    Raises InvalidMultiset when any class has the wrong cardinality.
    """
    multiset.validate()
    return tuple(
        sum(comp.ones * count for comp, count in multiset.classes[length].items())
        for length in range(1, multiset.n + 1)
    )


def sigma_from_weights(w: Sequence[int]) -> tuple[int, ...]:
    """Recover the pair weight sums from a symmetric cumulative-weight vector.

    The linear system tying weights to pair sums is triangular, so exact
    second differences solve it: ``sigma[i] = 2*w[i] - w[i-1] - w[i+1]``
    (``w[0] = 0``), and the final entry is whatever remains of ``w[1]``.
    Entries must land in {0,1,2} -- {0,1} for the odd-length middle bit.
    """
    n = len(w)
    if n < 1:
        raise InvalidMultiset("weight vector must be non-empty")
    for length in range(1, n + 1):
        if w[length - 1] != w[n - length]:
            raise SymmetryViolation(
                f"w[{length}] = {w[length - 1]} but w[{n + 1 - length}] = {w[n - length]}"
            )
    middle = (n + 1) // 2
    sigma = []
    for i in range(1, middle):
        left = w[i - 2] if i >= 2 else 0
        sigma.append(2 * w[i - 1] - left - w[i])
    sigma.append(w[0] - sum(sigma))
    for i, value in enumerate(sigma, start=1):
        top = 1 if (n % 2 and i == middle) else 2
        if not 0 <= value <= top:
            raise SigmaOutOfRange(f"sigma[{i}] = {value} outside [0..{top}]")
    return tuple(sigma)


def sigma_direct(s: str) -> tuple[int, ...]:
    """Pair weight sums read off the string itself (positional definition)."""
    bits = bits_of(s)
    n = len(bits)
    sigma = [bits[i - 1] + bits[n - i] for i in range(1, n // 2 + 1)]
    if n % 2:
        sigma.append(bits[n // 2])
    return tuple(sigma)


def weight_profile(multiset: CompositionMultiset) -> WeightProfile:
    """Cumulative weights and pair sums of a well-formed multiset."""
    w = cumulative_weights(multiset)
    return WeightProfile(multiset.n, w, sigma_from_weights(w))


def multiset_subtract(
    counter: Counter, remove: Iterable[Composition] | Counter
) -> Counter:
    """One class minus a batch of compositions, respecting multiplicity."""
    removal = remove if isinstance(remove, Counter) else Counter(remove)
    result = Counter(counter)
    for comp, count in removal.items():
        have = result.get(comp, 0)
        if have < count:
            raise InconsistentMultiset(
                f"cannot remove {count} x {comp}: only {have} present"
            )
        result[comp] = have - count
    return Counter({c: k for c, k in result.items() if k > 0})


def multiset_difference_size(
    first: CompositionMultiset, second: CompositionMultiset
) -> int:
    """How many compositions of ``first`` (with multiplicity) ``second`` lacks."""
    if first.n != second.n:
        raise DimensionMismatch(f"lengths differ: {first.n} vs {second.n}")
    total = 0
    for length in set(first.classes) | set(second.classes):
        a = first.classes.get(length, Counter())
        b = second.classes.get(length, Counter())
        total += (a - b).total()
    return total


# --- canonical serialization -------------------------------------------------
#
# Text form: header line "n=<int>", then one line per distinct composition:
# "<length> <zeros> <ones> <count>", sorted by (length, zeros).  The JSON
# mirror is {"version": 1, "n": N, "classes": [[l, [[z, w, count], ...]], ...]}.

FORMAT_VERSION = 1


def _sorted_classes(multiset: CompositionMultiset):
    for length in sorted(multiset.classes):
        counter = multiset.classes[length]
        yield length, sorted(counter.items(), key=lambda item: item[0].zeros)


def serialize(multiset: CompositionMultiset) -> str:
    lines = [f"n={multiset.n}"]
    for length, items in _sorted_classes(multiset):
        for comp, count in items:
            lines.append(f"{length} {comp.zeros} {comp.ones} {count}")
    return "\n".join(lines) + "\n"


def parse(text: str) -> CompositionMultiset:
    """Parse the canonical text form.  Structure only; call validate() after."""
    lines = text.splitlines()
    if not lines:
        raise MalformedInput("empty document")
    header = lines[0].strip()
    if not header.startswith("n="):
        raise MalformedInput("expected header of the form n=<int>", line=1)
    try:
        n = int(header[2:])
    except ValueError:
        raise MalformedInput(f"bad length in header {header!r}", line=1) from None
    if n < 1:
        raise MalformedInput("declared length must be positive", line=1)
    classes: dict[int, Counter] = {}
    for number, raw in enumerate(lines[1:], start=2):
        stripped = raw.strip()
        if not stripped:
            continue
        parts = stripped.split()
        if len(parts) != 4:
            raise MalformedInput(
                f"expected 4 integers, got {len(parts)} fields", line=number
            )
        try:
            length, zeros, ones, count = (int(p) for p in parts)
        except ValueError:
            raise MalformedInput(f"non-integer field in {stripped!r}", line=number) from None
        if not 1 <= length <= n:
            raise MalformedInput(f"class {length} outside [1..{n}]", line=number)
        if zeros < 0 or ones < 0 or zeros + ones != length:
            raise MalformedInput(
                f"composition {zeros}+{ones} does not have length {length}", line=number
            )
        if count < 1:
            raise MalformedInput("count must be positive", line=number)
        comp = Composition(zeros, ones)
        counter = classes.setdefault(length, Counter())
        if comp in counter:
            raise MalformedInput(f"duplicate composition line for {comp}", line=number)
        counter[comp] = count
    return CompositionMultiset(n, classes)


def serialize_json(multiset: CompositionMultiset) -> str:
    doc = {
        "version": FORMAT_VERSION,
        "n": multiset.n,
        "classes": [
            [length, [[comp.zeros, comp.ones, count] for comp, count in items]]
            for length, items in _sorted_classes(multiset)
        ],
    }
    return json.dumps(doc)


def parse_json(text: str) -> CompositionMultiset:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or doc.get("version") != FORMAT_VERSION:
        raise MalformedInput(f"expected a version {FORMAT_VERSION} document")
    n = doc.get("n")
    if not isinstance(n, int) or n < 1:
        raise MalformedInput("field 'n' must be a positive integer")
    classes: dict[int, Counter] = {}
    try:
        entries = list(doc["classes"])
    except (KeyError, TypeError):
        raise MalformedInput("field 'classes' missing or not a list") from None
    for entry in entries:
        try:
            length, items = entry
            counter = classes.setdefault(int(length), Counter())
            for zeros, ones, count in items:
                comp = Composition(int(zeros), int(ones))
                if comp in counter:
                    raise MalformedInput(f"duplicate composition {comp}")
                if comp.length != length or count < 1:
                    raise MalformedInput(f"bad entry {[zeros, ones, count]}")
                counter[comp] = int(count)
        except MalformedInput:
            raise
        except (TypeError, ValueError):
            raise MalformedInput(f"malformed class entry {entry!r}") from None
        if not 1 <= length <= n:
            raise MalformedInput(f"class {length} outside [1..{n}]")
    return CompositionMultiset(n, classes)
