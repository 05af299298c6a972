"""Shared brute-force oracles.

Everything here recomputes results from first principles (substring
slicing, exhaustive enumeration) so the package's prefix-sum and
dynamic-programming paths are checked against an independent route.
"""

from collections import Counter
from functools import lru_cache
from itertools import product


def all_strings(n):
    return ("".join(bits) for bits in product("01", repeat=n))


def brute_fragment(s):
    """Composition multiset via direct slicing; plain tuples as keys."""
    n = len(s)
    return {
        length: Counter(
            (length - s[i : i + length].count("1"), s[i : i + length].count("1"))
            for i in range(n - length + 1)
        )
        for length in range(1, n + 1)
    }


def brute_weights(s):
    """Cumulative weights by summing ones over raw substrings."""
    n = len(s)
    return tuple(
        sum(s[i : i + length].count("1") for i in range(n - length + 1))
        for length in range(1, n + 1)
    )


@lru_cache(maxsize=None)
def multiset_groups(n):
    """All length-n strings grouped by composition multiset."""
    groups = {}
    for s in all_strings(n):
        key = tuple(
            tuple(sorted(counter.items())) for _, counter in sorted(brute_fragment(s).items())
        )
        groups.setdefault(key, []).append(s)
    return list(groups.values())
