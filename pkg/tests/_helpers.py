"""Brute-force reference implementations shared by the tests.

Everything here works on plain text so it stays independent of the
package's bit-packed representation and interval tables.
"""

import itertools

SWAP = str.maketrans("ab", "ba")


def is_pal(t: str) -> bool:
    return t == t[::-1]


def is_anti(t: str) -> bool:
    return t == t[::-1].translate(SWAP)


def is_symmetric_text(t: str) -> bool:
    return is_pal(t) or is_anti(t)


def subsequences(s: str):
    for mask in range(1 << len(s)):
        yield "".join(c for i, c in enumerate(s) if (mask >> i) & 1)


def brute_lps(s: str) -> int:
    """Longest palindromic subsequence by full subset scan (small s only)."""
    return max(len(t) for t in subsequences(s) if is_pal(t))


def brute_las(s: str) -> int:
    """Longest antipalindromic subsequence by full subset scan."""
    return max(len(t) for t in subsequences(s) if is_anti(t))


def all_texts(n: int):
    for combo in itertools.product("ab", repeat=n):
        yield "".join(combo)
