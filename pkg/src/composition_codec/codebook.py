"""The unique-reconstruction codebook.

A codeword of length ``n`` starts with 0 and ends with 1; every interior
mirrored pair ``(i, n+1-i)`` for ``i = 2 .. n//2`` holds a pair symbol, and
the anti-symmetric symbols, read inward, must satisfy the ballot
condition.  For odd ``n`` the middle bit is free.  The payoff is that
every prefix is strictly lighter than the suffix of the same length, which
makes the inward reconstruction walk deterministic: a codeword is the only
codebook member with its composition multiset.

Messages are mapped to codewords by unranking the pair-symbol sequence;
for odd lengths the lowest-order message bit becomes the middle bit.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import ballot
from .compositions import CompositionMultiset, bits_of
from .errors import CapacityExceeded, MalformedInput, NotACodeword, TooLarge

ENUMERATION_GUARD = 24


@dataclass(frozen=True)
class CodeParams:
    """Chosen codeword length for a message length, plus the exact capacity."""

    k: int
    n: int
    capacity: int

    @property
    def redundancy(self) -> int:
        return self.n - self.k


def capacity(n: int) -> int:
    """Exact number of codewords of length ``n``."""
    if n < 2:
        return 0
    if n % 2 == 0:
        return ballot.count_sequences(n // 2 - 1)
    return 2 * ballot.count_sequences((n - 3) // 2)


def params(k: int) -> CodeParams:
    """Minimal codeword length (either parity) fitting ``2**k`` messages."""
    if k < 1:
        raise ValueError("message length must be at least 1")
    need = 1 << k
    n = max(2, k + 1)
    while capacity(n) < need:
        n += 1
    return CodeParams(k, n, capacity(n))


def _pair_symbols(bits: tuple[int, ...]) -> list[ballot.PairSymbol]:
    """Symbols of the interior pairs 2 .. n//2, outermost first."""
    n = len(bits)
    return [
        ballot.PairSymbol.from_bits(bits[i - 1], bits[n - i])
        for i in range(2, n // 2 + 1)
    ]


def _build_string(n: int, symbols, middle_bit: int | None) -> str:
    out = [0] * n
    out[0], out[n - 1] = 0, 1
    for offset, sym in enumerate(symbols):
        i = offset + 2
        first, second = sym.bits
        out[i - 1] = first
        out[n - i] = second
    if n % 2:
        out[n // 2] = middle_bit if middle_bit is not None else 0
    return "".join(map(str, out))


def is_codeword(s: str) -> bool:
    """Boundary bits plus the ballot condition over the interior pairs."""
    try:
        bits = bits_of(s)
    except MalformedInput:
        return False
    n = len(bits)
    if n < 2 or bits[0] != 0 or bits[-1] != 1:
        return False
    return ballot.is_valid_sequence(_pair_symbols(bits))


def encode(message: str) -> str:
    """Map a bit-string message to the codeword of the minimal-length code."""
    message_bits = bits_of(message)
    p = params(len(message_bits))
    r = int(message, 2)
    if r >= p.capacity:
        raise CapacityExceeded(f"rank {r} exceeds capacity {p.capacity}")
    if p.n % 2:
        q, middle = divmod(r, 2)
    else:
        q, middle = r, None
    symbols = ballot.unrank(p.n // 2 - 1, q)
    return _build_string(p.n, symbols, middle)


def message_of(s: str, k: int) -> str:
    """Recover the ``k``-bit message a codeword encodes; inverse of encode."""
    if not is_codeword(s):
        raise NotACodeword(f"{s!r} is not in the codebook")
    bits = bits_of(s)
    n = len(bits)
    q = ballot.rank(_pair_symbols(bits))
    r = 2 * q + bits[n // 2] if n % 2 else q
    if r >= 1 << k:
        raise NotACodeword(f"codeword rank {r} does not fit in {k} message bits")
    return format(r, f"0{k}b")


def enumerate_codewords(n: int) -> list[str]:
    """Every codeword of length ``n``, in message-rank order."""
    if n > ENUMERATION_GUARD:
        raise TooLarge(f"refusing to enumerate length {n} > {ENUMERATION_GUARD}")
    if n < 2:
        return []
    m = n // 2 - 1
    out = []
    for q in range(ballot.count_sequences(m)):
        symbols = ballot.unrank(m, q)
        if n % 2:
            out.append(_build_string(n, symbols, 0))
            out.append(_build_string(n, symbols, 1))
        else:
            out.append(_build_string(n, symbols, None))
    return out


def decode(multiset: CompositionMultiset, k: int) -> str:
    """Rebuild the codeword from its multiset and strip it back to a message."""
    from .reconstructor import reconstruct_codeword

    return message_of(reconstruct_codeword(multiset), k)
