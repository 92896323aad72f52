"""Binary words over the two-letter alphabet {a, b}.

A word is stored bit-packed in a single integer: the leftmost letter is the
most significant bit, a is 0 and b is 1.  Equal-length words therefore
compare lexicographically as plain integers, and the two symmetry
transforms (reversal and letter complement) are cheap bit operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import InvalidLetterError, LengthBudgetExceeded

# One word fits in a single machine word; everything this package computes
# needs far less.
MAX_LENGTH = 63

LETTERS = ("a", "b")
_COMPLEMENT = {"a": "b", "b": "a"}


def complement_letter(letter: str) -> str:
    """The other letter of the alphabet."""
    try:
        return _COMPLEMENT[letter]
    except KeyError:
        raise InvalidLetterError(1, letter) from None


class SymmetryClass(Enum):
    """How a word relates to its mirror image."""

    PALINDROME = "palindrome"
    ANTIPALINDROME = "antipalindrome"
    BOTH = "both"  # empty word only
    NEITHER = "neither"


def _mask(n: int) -> int:
    return (1 << n) - 1


def _reverse_bits(bits: int, n: int) -> int:
    out = 0
    for _ in range(n):
        out = (out << 1) | (bits & 1)
        bits >>= 1
    return out


@dataclass(frozen=True, slots=True)
class Word:
    """Immutable bit-packed word.

    ``bits`` holds the letter at 1-based position i (from the left) in bit
    ``length - i``; bits above ``length`` are always zero.
    """

    length: int
    bits: int

    def __post_init__(self) -> None:
        if not 0 <= self.length <= MAX_LENGTH:
            raise LengthBudgetExceeded(
                f"word length {self.length} outside 0..{MAX_LENGTH}"
            )
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("bits outside the low `length` positions")

    def __len__(self) -> int:
        return self.length

    def __str__(self) -> str:
        return "".join(
            LETTERS[(self.bits >> (self.length - i)) & 1]
            for i in range(1, self.length + 1)
        )

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def letter_at(self, position: int) -> str:
        """Letter at a 1-based position counted from the left."""
        if not 1 <= position <= self.length:
            raise IndexError(f"position {position} not in 1..{self.length}")
        return LETTERS[(self.bits >> (self.length - position)) & 1]

    def delete(self, position: int) -> Word:
        """A copy with the letter at a 1-based position removed."""
        if not 1 <= position <= self.length:
            raise IndexError(f"position {position} not in 1..{self.length}")
        low = self.length - position
        kept_low = self.bits & _mask(low)
        return Word(self.length - 1, ((self.bits >> (low + 1)) << low) | kept_low)

    def reverse(self) -> Word:
        return Word(self.length, _reverse_bits(self.bits, self.length))

    def complement(self) -> Word:
        return Word(self.length, self.bits ^ _mask(self.length))

    def orbit(self) -> frozenset[Word]:
        """Words reachable by reversal and complement; at most four."""
        rev = self.reverse()
        return frozenset((self, rev, self.complement(), rev.complement()))

    def canonical(self) -> Word:
        """The orbit element with the smallest packed encoding."""
        return min(self.orbit(), key=lambda w: w.bits)

    def is_canonical(self) -> bool:
        rev = _reverse_bits(self.bits, self.length)
        comp = self.bits ^ _mask(self.length)
        return self.bits <= min(rev, comp, rev ^ _mask(self.length))

    def symmetry_class(self) -> SymmetryClass:
        if self.length == 0:
            return SymmetryClass.BOTH
        rev = _reverse_bits(self.bits, self.length)
        if self.bits == rev:
            return SymmetryClass.PALINDROME
        if self.bits == rev ^ _mask(self.length):
            return SymmetryClass.ANTIPALINDROME
        return SymmetryClass.NEITHER

    def is_palindrome(self) -> bool:
        return self.symmetry_class() in (SymmetryClass.PALINDROME, SymmetryClass.BOTH)

    def is_antipalindrome(self) -> bool:
        return self.symmetry_class() in (
            SymmetryClass.ANTIPALINDROME,
            SymmetryClass.BOTH,
        )

    def is_symmetric(self) -> bool:
        """Palindrome or antipalindrome."""
        return self.symmetry_class() is not SymmetryClass.NEITHER


EMPTY = Word(0, 0)


def parse_word(text: str, allow_digits: bool = False) -> Word:
    """Parse a word from its text form.

    Letters are 'a' and 'b'; with ``allow_digits`` the aliases '0' (for a)
    and '1' (for b) are accepted as well.
    """
    if len(text) > MAX_LENGTH:
        raise LengthBudgetExceeded(
            f"word of length {len(text)} exceeds the {MAX_LENGTH}-letter limit"
        )
    bits = 0
    for position, char in enumerate(text, start=1):
        if char == "a" or (allow_digits and char == "0"):
            bit = 0
        elif char == "b" or (allow_digits and char == "1"):
            bit = 1
        else:
            raise InvalidLetterError(position, char)
        bits = (bits << 1) | bit
    return Word(len(text), bits)


def all_words(n: int):
    """All 2^n words of length n in ascending packed order."""
    for bits in range(1 << n):
        yield Word(n, bits)
