"""Partial words over small alphabets: the core value type and its relations.

A partial word is a finite sequence whose positions either carry a letter or
are holes (undefined positions, written ``.`` in ASCII or the lozenge ``◊``).
Symbols are stored as small integer codes: 0 is the hole and 1..k are the
letters ``a``..``z`` in order, so the numeric order of codes matches the
textual order ``◊ < a < b < ...`` used everywhere for enumeration.

Positions are 1-indexed in the public API, matching the usual stringology
convention; the underlying code arrays are plain 0-indexed numpy arrays.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List

import numpy as np

from .errors import (
    IncompatibleError,
    InvalidCharacterError,
    LetterOutsideAlphabetError,
    OutOfRangeError,
)

HOLE_CHAR = "."
HOLE_INPUT_CHARS = frozenset({".", "◊"})  # ASCII dot or lozenge
MAX_ALPHABET = 26
_LETTERS = "abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class Alphabet:
    """An ordered alphabet of the first ``size`` lowercase letters."""

    size: int

    def __post_init__(self):
        if not isinstance(self.size, int) or not 1 <= self.size <= MAX_ALPHABET:
            raise ValueError(f"alphabet size must be in 1..{MAX_ALPHABET}, got {self.size!r}")

    def letters(self) -> str:
        return _LETTERS[: self.size]

    def letter_char(self, code: int) -> str:
        """The character for letter code 1..size."""
        if not 1 <= code <= self.size:
            raise ValueError(f"letter code {code} outside 1..{self.size}")
        return _LETTERS[code - 1]


class PartialWord:
    """An immutable partial word: a code array plus its alphabet.

    Equality and hashing consider both the symbols and the alphabet size, so
    the same text over different alphabets gives distinct values (they have
    different root counts, for instance).
    """

    __slots__ = ("_codes", "_alphabet")

    def __init__(self, codes: Iterable[int] | np.ndarray, alphabet: Alphabet):
        arr = np.array(list(codes) if not isinstance(codes, np.ndarray) else codes,
                       dtype=np.int8).reshape(-1)
        if arr.size and (int(arr.min()) < 0 or int(arr.max()) > alphabet.size):
            raise ValueError("symbol code outside the alphabet's range")
        arr.setflags(write=False)
        self._codes = arr
        self._alphabet = alphabet

    @property
    def codes(self) -> np.ndarray:
        """Read-only int8 array; 0 is the hole, 1..k are letters."""
        return self._codes

    @property
    def alphabet(self) -> Alphabet:
        return self._alphabet

    @property
    def is_full(self) -> bool:
        """True when the word has no holes."""
        return bool(np.all(self._codes != 0))

    def defined_positions(self) -> tuple[int, ...]:
        """1-indexed positions carrying a letter."""
        return tuple(int(i) + 1 for i in np.flatnonzero(self._codes != 0))

    def hole_positions(self) -> tuple[int, ...]:
        """1-indexed undefined positions."""
        return tuple(int(i) + 1 for i in np.flatnonzero(self._codes == 0))

    def __len__(self) -> int:
        return int(self._codes.size)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PartialWord):
            return NotImplemented
        return (self._alphabet == other._alphabet
                and self._codes.shape == other._codes.shape
                and bool(np.all(self._codes == other._codes)))

    def __hash__(self) -> int:
        return hash((self._alphabet.size, self._codes.tobytes()))

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"PartialWord({format_word(self)!r}, k={self._alphabet.size})"


def parse_word(text: str, alphabet: Alphabet | None = None) -> PartialWord:
    """Parse ASCII/lozenge text into a partial word.

    Holes may be written ``.`` or ``◊``. When ``alphabet`` is omitted it is
    inferred as the largest letter index present (size 1 for words without
    letters, including the empty word).
    """
    codes: List[int] = []
    for position, ch in enumerate(text, start=1):
        if ch in HOLE_INPUT_CHARS:
            codes.append(0)
        elif "a" <= ch <= "z":
            code = ord(ch) - ord("a") + 1
            if alphabet is not None and code > alphabet.size:
                raise LetterOutsideAlphabetError(position, ch, alphabet.size)
            codes.append(code)
        else:
            raise InvalidCharacterError(position, ch)
    if alphabet is None:
        alphabet = Alphabet(max((c for c in codes if c), default=1))
    return PartialWord(codes, alphabet)


def format_word(w: PartialWord) -> str:
    """Canonical ASCII text: letters a..z, holes as '.'."""
    letters = w.alphabet.letters()
    return "".join(HOLE_CHAR if c == 0 else letters[c - 1] for c in w.codes)


def empty_word(alphabet: Alphabet | None = None) -> PartialWord:
    return PartialWord([], alphabet if alphabet is not None else Alphabet(1))


def factor(w: PartialWord, i: int, j: int) -> PartialWord:
    """The factor w[i..j], 1-indexed and inclusive; requires 1 <= i <= j <= |w|."""
    n = len(w)
    if not (isinstance(i, int) and isinstance(j, int) and 1 <= i <= j <= n):
        raise OutOfRangeError(f"factor bounds ({i},{j}) outside 1..{n}")
    return PartialWord(w.codes[i - 1 : j], w.alphabet)


def is_contained_in(v: PartialWord, w: PartialWord) -> bool:
    """True when w extends v: every defined position of v is defined in w
    with the same letter. Words of different length are never related."""
    if len(v) != len(w):
        return False
    vc, wc = v.codes, w.codes
    return bool(np.all((vc == 0) | (vc == wc)))


def is_compatible(u: PartialWord, v: PartialWord) -> bool:
    """True when u and v agree wherever both are defined (same length only)."""
    if len(u) != len(v):
        return False
    uc, vc = u.codes, v.codes
    return bool(np.all((uc == 0) | (vc == 0) | (uc == vc)))


def join(u: PartialWord, v: PartialWord) -> PartialWord:
    """Least upper bound of two compatible words: defined wherever either is."""
    if not is_compatible(u, v):
        raise IncompatibleError(f"words {format_word(u)!r} and {format_word(v)!r} are not compatible")
    codes = np.where(u.codes != 0, u.codes, v.codes)
    alphabet = u.alphabet if u.alphabet.size >= v.alphabet.size else v.alphabet
    return PartialWord(codes, alphabet)


def is_strong_periodic(w: PartialWord, p: int) -> bool:
    """True when all defined positions in each residue class mod p carry the
    same letter (positions i, j with i ≡ j mod p, 1-indexed)."""
    if not isinstance(p, int) or p < 1:
        raise ValueError(f"period must be a positive integer, got {p!r}")
    codes = w.codes
    n = codes.size
    for c in range(min(p, n)):
        cls = codes[c::p]
        cls = cls[cls != 0]
        if cls.size and bool(np.any(cls != cls[0])):
            return False
    return True


def strong_periods(w: PartialWord) -> list[int]:
    """All strong periods 1..|w| in increasing order ([] for the empty word)."""
    n = len(w)
    return [p for p in range(1, n + 1) if is_strong_periodic(w, p)]
