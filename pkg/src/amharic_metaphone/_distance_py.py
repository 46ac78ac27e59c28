"""Pure-Python Levenshtein kernel.

Fallback used when the compiled extension is unavailable. Costs are
unit insert/delete/substitute over Unicode scalars.
"""

from __future__ import annotations


def levenshtein(a: str, b: str) -> int:
    if a == b:
        return 0
    if not a:
        return len(b)
    if not b:
        return len(a)
    if len(a) > len(b):
        a, b = b, a
    previous = list(range(len(a) + 1))
    for j, cb in enumerate(b, start=1):
        current = [j]
        for i, ca in enumerate(a, start=1):
            cost = previous[i - 1] + (ca != cb)
            current.append(min(cost, previous[i] + 1, current[i - 1] + 1))
        previous = current
    return previous[-1]
