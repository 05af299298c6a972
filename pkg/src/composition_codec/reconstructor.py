"""Rebuilding strings from their composition multisets.

Both decoders walk inward, settling one mirrored bit pair per step.  With
pairs 1..i placed, the class of length ``n-i-1`` splits into ``i``
compositions of windows that lie fully inside known-plus-middle territory
and exactly two boundary windows: one missing the innermost suffix bit,
one missing the innermost prefix bit.  Subtracting the interior
compositions exposes those two boundary weights, and comparing them with
the two possible orientations of the next pair settles it -- uniquely so
whenever the known prefix and suffix have different weights, which the
codebook guarantees.

``reconstruct_codeword`` runs that walk deterministically and fails rather
than guess.  ``backtrack_all`` explores every orientation consistent with
the multiset (branching where prefix and suffix weights tie), verifies each
completed string by re-fragmenting it, and therefore returns exactly the
set of strings sharing the input multiset.  It is the ground-truth oracle;
keep it to small lengths.
"""

from __future__ import annotations

from collections import Counter

from . import codebook
from .compositions import (
    Composition,
    CompositionMultiset,
    cumulative_weights,
    fragment,
    multiset_subtract,
    sigma_from_weights,
)
from .errors import InconsistentMultiset, TooLarge

ORACLE_GUARD = 25


def _interior_compositions(pre, suf_rev, n, total_ones, length):
    """Compositions of the i fully-determined windows in class ``length``.

    ``pre`` holds bits 1..i, ``suf_rev`` bits n..n+1-i (reversed).  Windows
    starting at 2..i+1 cover a known prefix tail, the whole unknown middle,
    and a known suffix head, so only the middle's total weight is needed.
    """
    i = len(pre)
    prefix_sums = [0]
    for b in pre:
        prefix_sums.append(prefix_sums[-1] + b)
    suffix_sums = [0]
    for b in suf_rev:
        suffix_sums.append(suffix_sums[-1] + b)
    middle_ones = total_ones - prefix_sums[i] - suffix_sums[i]
    middle_len = n - 2 * i
    if middle_ones < 0 or middle_ones > middle_len:
        raise InconsistentMultiset("boundary weights exceed the total weight")
    comps = []
    for start in range(2, i + 2):
        end = start + length - 1
        ones = (
            (prefix_sums[i] - prefix_sums[start - 1])
            + middle_ones
            + (suffix_sums[i] - suffix_sums[n - end])
        )
        comps.append(Composition(length - ones, ones))
    return comps


def _consistent_pairs(observed, sigma_next, total_ones, wt_pre, wt_suf):
    """Orientations of the next pair compatible with the two boundary weights.

    ``observed`` is the sorted pair of leftover class weights, or None when
    the class must not be consulted; then every orientation allowed by the
    pair weight sum survives.
    """
    if sigma_next == 0:
        options = [(0, 0)]
    elif sigma_next == 2:
        options = [(1, 1)]
    else:
        options = [(0, 1), (1, 0)]
    if observed is None:
        return options
    kept = []
    for first, second in options:
        predicted = sorted(
            (total_ones - wt_suf - second, total_ones - wt_pre - first)
        )
        if predicted == observed:
            kept.append((first, second))
    return kept


def _finish(pre, suf_rev, n, sigma):
    middle = [sigma[-1]] if n % 2 else []
    return "".join(map(str, pre + middle + suf_rev[::-1]))


def _codeword_walk(multiset, total_ones, sigma, skip_class=None, strict=True):
    """Inward walk assuming codeword boundary bits; returns completed strings.

    ``skip_class`` marks one class as untrusted: it is never consulted, and
    an orientation ambiguity there keeps both branches alive.  In strict
    mode any other ambiguity raises instead -- on codeword multisets the
    walk never branches.  States contradicting an observed class are
    dropped; losing every state raises InconsistentMultiset.
    """
    n = multiset.n
    if n < 2 or sigma[0] != 1:
        raise InconsistentMultiset("codewords pair an initial 0 with a final 1")
    states = [([0], [1])]
    for i in range(1, n // 2):
        length = n - i - 1
        sigma_next = sigma[i]
        successors = []
        for pre, suf_rev in states:
            wt_pre = sum(pre)
            wt_suf = sum(suf_rev)
            if length == skip_class:
                observed = None
            else:
                try:
                    interior = _interior_compositions(
                        pre, suf_rev, n, total_ones, length
                    )
                    remaining = multiset_subtract(
                        multiset.classes.get(length, Counter()), interior
                    )
                except InconsistentMultiset:
                    continue
                if remaining.total() != 2:
                    continue
                observed = sorted(c.ones for c in remaining.elements())
            options = _consistent_pairs(
                observed, sigma_next, total_ones, wt_pre, wt_suf
            )
            if strict and observed is not None and len(options) > 1:
                raise InconsistentMultiset(
                    f"ambiguous pair orientation at class {length} "
                    "(prefix and suffix weights tie)"
                )
            for first, second in options:
                successors.append((pre + [first], suf_rev + [second]))
        if not successors:
            raise InconsistentMultiset(f"no viable pair assignment at class {length}")
        if len(successors) > 64:
            raise InconsistentMultiset("walk state explosion; not a codeword multiset")
        states = successors
    return [_finish(pre, suf_rev, n, sigma) for pre, suf_rev in states]


def reconstruct_codeword(multiset: CompositionMultiset) -> str:
    """The unique codeword with this multiset, or InconsistentMultiset.

    The walk is fully forced for codebook members.  The result is accepted
    only if it re-fragments to the input and lies in the codebook, so
    non-codeword multisets are rejected even when the walk completes.
    """
    w = cumulative_weights(multiset)
    sigma = sigma_from_weights(w)
    candidates = _codeword_walk(multiset, w[0], sigma, strict=True)
    survivors = [
        s
        for s in candidates
        if fragment(s) == multiset and codebook.is_codeword(s)
    ]
    if len(survivors) != 1:
        raise InconsistentMultiset(
            "multiset does not reconstruct to a codeword"
            if not survivors
            else "multiset reconstructs to more than one codeword"
        )
    return survivors[0]


def backtrack_all(multiset: CompositionMultiset, max_n: int = ORACLE_GUARD) -> set[str]:
    """Every string whose composition multiset equals the input.

    Depth-first over pair orientations: orientations incompatible with the
    leftover class weights are pruned, weight ties branch, and every
    completed string is verified by re-fragmenting.  Exponential in the
    number of ties, hence the size guard.
    """
    n = multiset.n
    if n > max_n:
        raise TooLarge(f"oracle refuses length {n} > {max_n}")
    multiset.validate()
    w = cumulative_weights(multiset)
    sigma = sigma_from_weights(w)
    total_ones = w[0]
    found: set[str] = set()

    def extend(pre, suf_rev, i):
        if i == n // 2:
            candidate = _finish(pre, suf_rev, n, sigma)
            if fragment(candidate) == multiset:
                found.add(candidate)
            return
        length = n - i - 1
        try:
            interior = _interior_compositions(pre, suf_rev, n, total_ones, length)
            remaining = multiset_subtract(
                multiset.classes.get(length, Counter()), interior
            )
        except InconsistentMultiset:
            return
        if remaining.total() != 2:
            return
        observed = sorted(c.ones for c in remaining.elements())
        for first, second in _consistent_pairs(
            observed, sigma[i], total_ones, sum(pre), sum(suf_rev)
        ):
            extend(pre + [first], suf_rev + [second], i + 1)

    extend([], [], 0)
    return found


def is_unique_up_to_reversal(s: str, max_n: int = ORACLE_GUARD) -> bool:
    """True when no third string shares this string's composition multiset."""
    peers = backtrack_all(fragment(s), max_n=max_n)
    return peers <= {s, s[::-1]}
