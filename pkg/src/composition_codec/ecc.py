"""Single-composition-error-correcting codebook.

Take an inner reconstruction codeword of odd length ``n-2`` and stretch it
with two extra bits ("starred" bits, at positions 2 and ``n-1``); the
inner middle bit lands exactly at position ``(n+1)/2`` of the result.
Three constraints buy error correction:

* total weight is even -- fixes the middle bit, and lets the true string
  weight be told apart from a corrupted one;
* the sum of the first ``ceil(n/2)`` cumulative weights is 0 mod 3 -- the
  starred pair, restricted to (0,0), (0,1), (1,1), shifts that sum by a
  non-multiple of 3, so exactly one choice lands on residue 0;
* flipping the middle bit never changes the mod-3 sum (its contribution is
  a multiple of 3 whenever ``ceil(n/2)`` is), so the parity fix and the
  checksum fix cannot fight each other.

Lengths are restricted to ``n = 5 (mod 6)``: that makes ``ceil(n/2)`` a
multiple of 3 and keeps the starred-pair residue step invertible.  One
corrupted composition moves exactly one cumulative weight by one, so the
mirror symmetry of the weights, the weight parity, and the checksum
together locate the corrupted class and restore the exact weight vector;
the reconstruction walk then treats that one class as untrusted and global
verification picks the unique surviving codeword.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from . import ballot, codebook, reconstructor
from .compositions import (
    Composition,
    CompositionMultiset,
    bits_of,
    cumulative_weights,
    fragment,
    sigma_from_weights,
)
from .errors import (
    AmbiguousDecode,
    CapacityExceeded,
    InconsistentMultiset,
    InvalidMultiset,
    MalformedInput,
    NoValidPadding,
    NotACodeword,
    SigmaOutOfRange,
    TooLarge,
    Uncorrectable,
)

MIN_LENGTH = 11
ENUMERATION_GUARD = 23

_STARRED_CHOICES = ((0, 0), (0, 1), (1, 1))


@dataclass(frozen=True)
class CodeParams:
    """Code length for a message length: odd, 5 mod 6, minimal capacity fit."""

    k: int
    n: int
    m: int
    capacity: int

    @property
    def redundancy(self) -> int:
        return self.n - self.k


@dataclass(frozen=True)
class RepairReport:
    """Outcome of weight repair on a received multiset."""

    w: tuple[int, ...]
    sigma: tuple[int, ...]
    corrupted_class: int | None


@dataclass(frozen=True)
class DecodeDiagnostics:
    """What the decoder corrected, if anything."""

    corrupted_class: int | None
    received: Composition | None
    corrected: Composition | None


def params(k: int) -> CodeParams:
    if k < 1:
        raise ValueError("message length must be at least 1")
    need = 1 << k
    n = max(MIN_LENGTH, k + 5)
    n += (5 - n) % 6
    while ballot.count_sequences((n - 5) // 2) < need:
        n += 6
    return CodeParams(k, n, (n - 5) // 2, ballot.count_sequences((n - 5) // 2))


def _checksum_from_weights(w) -> int:
    half = (len(w) + 1) // 2
    return sum(w[:half]) % 3


def weight_checksum(s: str) -> int:
    """Sum of the first ceil(n/2) cumulative weights, mod 3."""
    return _checksum_from_weights(cumulative_weights(fragment(s)))


def _assemble(inner_even: list[int], middle: int, starred: tuple[int, int]) -> str:
    """Insert the middle bit and the starred pair into an even inner string."""
    half = len(inner_even) // 2
    inner = inner_even[:half] + [middle] + inner_even[half:]
    return "".join(
        map(str, [inner[0], starred[0], *inner[1:-1], starred[1], inner[-1]])
    )


def _codeword_for_rank(q: int, n: int) -> str:
    """Codeword whose inner pair sequence has rank ``q``."""
    m = (n - 5) // 2
    symbols = ballot.unrank(m, q)
    inner_even = [0] * (n - 3)
    inner_even[-1] = 1
    for offset, sym in enumerate(symbols):
        i = offset + 2
        first, second = sym.bits
        inner_even[i - 1] = first
        inner_even[n - 3 - i] = second
    weight = sum(inner_even)
    for starred in _STARRED_CHOICES:
        middle = (weight + starred[0] + starred[1]) % 2
        candidate = _assemble(inner_even, middle, starred)
        if weight_checksum(candidate) == 0:
            return candidate
    raise NoValidPadding(f"no starred-bit choice works at n={n}")


def encode(message: str) -> str:
    """Map a bit-string message to a codeword of the minimal admissible length."""
    message_bits = bits_of(message)
    p = params(len(message_bits))
    q = int(message, 2)
    if q >= p.capacity:
        raise CapacityExceeded(f"rank {q} exceeds capacity {p.capacity}")
    return _codeword_for_rank(q, p.n)


def is_codeword(s: str) -> bool:
    """All four membership constraints, on an admissible length."""
    try:
        bits = bits_of(s)
    except MalformedInput:
        return False
    n = len(bits)
    if n < MIN_LENGTH or n % 6 != 5:
        return False
    if sum(bits) % 2:
        return False
    if bits[1] > bits[n - 2]:
        return False
    inner = s[0] + s[2 : n - 2] + s[n - 1]
    if not codebook.is_codeword(inner):
        return False
    return weight_checksum(s) == 0


def message_of(s: str, k: int) -> str:
    """Recover the ``k``-bit message of a codeword; inverse of encode."""
    if not is_codeword(s):
        raise NotACodeword(f"{s!r} is not in the error-correcting codebook")
    bits = bits_of(s)
    n = len(bits)
    inner = [bits[0], *bits[2 : n - 2], bits[n - 1]]
    del inner[(n - 3) // 2]  # the middle bit is parity, not payload
    q = ballot.rank(codebook._pair_symbols(tuple(inner)))
    if q >= 1 << k:
        raise NotACodeword(f"codeword rank {q} does not fit in {k} message bits")
    return format(q, f"0{k}b")


def enumerate_codewords(n: int) -> list[str]:
    """Every codeword of length ``n``, in message-rank order."""
    if n > ENUMERATION_GUARD:
        raise TooLarge(f"refusing to enumerate length {n} > {ENUMERATION_GUARD}")
    if n < MIN_LENGTH or n % 6 != 5:
        return []
    return [
        _codeword_for_rank(q, n)
        for q in range(ballot.count_sequences((n - 5) // 2))
    ]


def repair_weights(multiset: CompositionMultiset) -> RepairReport:
    """Restore the true cumulative weights from an at-most-one-error multiset.

    Mirror classes must agree on their weight; at most one pair may differ.
    The true weight of the suspect class sits in a three-wide window pinned
    by the already-trusted pair sums, and the mod-3 checksum picks the one
    member with the right residue.  A disagreement at classes 1 and n is
    settled by the even total weight instead.
    """
    n = multiset.n
    if n % 2 == 0 or n % 6 != 5:
        raise InvalidMultiset(f"supported lengths are 5 mod 6, got {n}")
    observed = list(cumulative_weights(multiset))
    half = (n + 1) // 2

    def window_repair(j: int, trusted: list[int]) -> int:
        """True weight of class j from trusted w[1..j-1] and the checksum."""
        sigma_prefix = []
        for t in range(1, j - 1):
            left = trusted[t - 2] if t >= 2 else 0
            value = 2 * trusted[t - 1] - left - trusted[t]
            if not 0 <= value <= 2:
                raise Uncorrectable(
                    f"trusted weights give pair sum {value} at index {t}"
                )
            sigma_prefix.append(value)
        anchor = j * trusted[0] - sum(
            (j - t) * sigma_prefix[t - 1] for t in range(1, j - 1)
        )
        known = sum(trusted[i - 1] for i in range(1, half + 1) if i != j)
        residue = (-known) % 3
        for candidate in (anchor, anchor - 1, anchor - 2):
            if candidate % 3 == residue:
                return candidate
        raise Uncorrectable("no window candidate matches the checksum")

    mismatched = [
        j for j in range(1, n // 2 + 1) if observed[j - 1] != observed[n - j]
    ]
    if len(mismatched) > 1:
        raise Uncorrectable(f"weight mismatches in classes {mismatched}")

    repaired = list(observed)
    corrupted: int | None = None
    if mismatched and mismatched[0] == 1:
        first, last = observed[0], observed[-1]
        if abs(first - last) != 1:
            raise Uncorrectable("string weight reported twice, two apart")
        true_w1 = first if first % 2 == 0 else last
        corrupted = 1 if first != true_w1 else n
        repaired[0] = repaired[-1] = true_w1
        if _checksum_from_weights(repaired) != 0:
            raise Uncorrectable("checksum still wrong after weight repair")
    elif mismatched:
        j = mismatched[0]
        true_wj = window_repair(j, repaired)
        low, high = observed[j - 1], observed[n - j]
        if true_wj == low and abs(high - true_wj) == 1:
            corrupted = n + 1 - j
        elif true_wj == high and abs(low - true_wj) == 1:
            corrupted = j
        else:
            raise Uncorrectable(
                f"repaired weight {true_wj} matches neither reading of class {j}"
            )
        repaired[j - 1] = repaired[n - j] = true_wj
    elif _checksum_from_weights(observed) != 0:
        # every mirror pair agrees: only the self-mirrored middle class can hide
        true_mid = window_repair(half, repaired)
        if abs(true_mid - observed[half - 1]) != 1:
            raise Uncorrectable("middle-class repair moved the weight by more than 1")
        corrupted = half
        repaired[half - 1] = true_mid

    try:
        sigma = sigma_from_weights(repaired)
    except (SigmaOutOfRange,) as exc:
        raise Uncorrectable(f"repaired weights are not a valid profile: {exc}") from None
    if _checksum_from_weights(repaired) != 0:
        raise Uncorrectable("repaired weights fail the checksum")
    return RepairReport(tuple(repaired), sigma, corrupted)


def _discrepancy_matches(candidate, received, corrupted_class) -> bool:
    """The candidate's multiset must differ from the received one exactly as
    the repair predicted: nowhere, or by one +-1 composition in one class."""
    for length in range(1, received.n + 1):
        mine = candidate.classes.get(length, Counter())
        theirs = received.classes.get(length, Counter())
        if mine == theirs:
            if length == corrupted_class:
                return False
            continue
        if length != corrupted_class:
            return False
        restored = mine - theirs
        broken = theirs - mine
        if restored.total() != 1 or broken.total() != 1:
            return False
        (good,) = restored.keys()
        (bad,) = broken.keys()
        if abs(good.ones - bad.ones) != 1:
            return False
    return True


def decode(multiset: CompositionMultiset, k: int) -> tuple[str, DecodeDiagnostics]:
    """Message of a codeword from a multiset with at most one composition error.

    Runs weight repair, then the reconstruction walk with the corrupted
    class marked untrusted (at most two candidate strings), and keeps the
    one candidate that is a codeword and differs from the received multiset
    exactly where the repair said.
    """
    multiset.validate()
    report = repair_weights(multiset)
    try:
        candidates = reconstructor._codeword_walk(
            multiset,
            report.w[0],
            report.sigma,
            skip_class=report.corrupted_class,
            strict=False,
        )
    except InconsistentMultiset as exc:
        raise Uncorrectable(f"reconstruction failed: {exc}") from None
    survivors = []
    for candidate in candidates:
        if not is_codeword(candidate):
            continue
        if _discrepancy_matches(fragment(candidate), multiset, report.corrupted_class):
            survivors.append(candidate)
    if not survivors:
        raise Uncorrectable("no codeword is within one composition error")
    if len(survivors) > 1:
        raise AmbiguousDecode(f"{len(survivors)} codewords survived verification")
    winner = survivors[0]
    if report.corrupted_class is None:
        diagnostics = DecodeDiagnostics(None, None, None)
    else:
        length = report.corrupted_class
        mine = fragment(winner).classes[length]
        theirs = multiset.classes[length]
        (good,) = (mine - theirs).keys()
        (bad,) = (theirs - mine).keys()
        diagnostics = DecodeDiagnostics(length, bad, good)
    return message_of(winner, k), diagnostics
