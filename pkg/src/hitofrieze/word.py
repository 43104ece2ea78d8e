"""Finite binary words: the encoding unit for stitch phase along a line."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator


class InvalidWord(ValueError):
    """Raised when a string or sequence is not a non-empty 0/1 word."""


@dataclass(frozen=True)
class BinaryWord:
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.bits) < 1:
            raise InvalidWord("a binary word needs at least one bit")
        if any(b not in (0, 1) for b in self.bits):
            raise InvalidWord(f"bits must be 0 or 1, got {self.bits!r}")

    @classmethod
    def parse(cls, text: str) -> BinaryWord:
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise InvalidWord(f"not a binary word: {text!r}")
        return cls(tuple(int(c) for c in text))

    @classmethod
    def of(cls, value: BinaryWord | str | tuple[int, ...] | list[int]) -> BinaryWord:
        if isinstance(value, BinaryWord):
            return value
        if isinstance(value, str):
            return cls.parse(value)
        return cls(tuple(int(b) for b in value))

    def __str__(self) -> str:
        return "".join(map(str, self.bits))

    def __repr__(self) -> str:
        return f"BinaryWord({str(self)!r})"

    def __len__(self) -> int:
        return len(self.bits)

    def __getitem__(self, i: int) -> int:
        return self.bits[i]

    def __iter__(self) -> Iterator[int]:
        return iter(self.bits)

    def __add__(self, other: BinaryWord) -> BinaryWord:
        return BinaryWord(self.bits + other.bits)

    def complement(self) -> BinaryWord:
        return complement(self)

    def reverse(self) -> BinaryWord:
        return reverse(self)

    def rotate(self, k: int) -> BinaryWord:
        return rotate(self, k)


def complement(z: BinaryWord) -> BinaryWord:
    """Flip every bit (written z^C)."""
    return BinaryWord(tuple(1 - b for b in z.bits))


def reverse(z: BinaryWord) -> BinaryWord:
    """Read the word backwards (written z^R)."""
    return BinaryWord(z.bits[::-1])


def rotate(z: BinaryWord, k: int) -> BinaryWord:
    """Cyclic left shift: ``result[i] = z[(i + k) mod |z|]``; any integer k."""
    k %= len(z)
    return BinaryWord(z.bits[k:] + z.bits[:k])


def all_words(length: int) -> Iterator[BinaryWord]:
    """Every word of the given length in lexicographic order."""
    for bits in product((0, 1), repeat=length):
        yield BinaryWord(bits)


def words_up_to(max_length: int, min_length: int = 1) -> Iterator[BinaryWord]:
    """Length-lexicographic enumeration of words with lengths in [min_length, max_length]."""
    for n in range(min_length, max_length + 1):
        yield from all_words(n)
