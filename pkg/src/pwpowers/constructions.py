"""Extremal word families with prescribed power behaviour.

Each builder returns a partial word whose power occurrences are known in
closed form; the verify module re-checks those claims by direct scan.
"""

from __future__ import annotations

from typing import List

from .errors import AlphabetTooSmallError, BadExponentError
from .words import MAX_ALPHABET, Alphabet, PartialWord, parse_word


def square_chain(k: int, alphabet: Alphabet | None = None) -> PartialWord:
    """Doubling family: w_0 = ◊ and w_{i+1} = w_i a_{i+1} w_i[2..].

    Step k yields a word of length 2^k over k letters whose only hole is at
    position 1 and whose squares are exactly the prefixes of length 2^j for
    1 <= j <= k, all starting at position 1.
    """
    if not isinstance(k, int) or k < 0:
        raise ValueError(f"chain index must be an integer >= 0, got {k!r}")
    if alphabet is None:
        if k > MAX_ALPHABET:
            raise AlphabetTooSmallError(f"chain index {k} needs {k} letters, only {MAX_ALPHABET} exist")
        alphabet = Alphabet(max(k, 1))
    if alphabet.size < k:
        raise AlphabetTooSmallError(
            f"chain index {k} needs {k} letters, alphabet has {alphabet.size}"
        )
    codes = [0]
    for i in range(1, k + 1):
        codes = codes + [i] + codes[1:]
    return PartialWord(codes, alphabet)


def prop2_word(r: int) -> PartialWord:
    """Binary word ◊^{r-1} a b a ◊^{r-2} of length 2r carrying exactly two
    r-th power occurrences, both starting at position 1."""
    if not isinstance(r, int) or r < 2:
        raise BadExponentError(f"exponent must be an integer >= 2, got {r!r}")
    codes = [0] * (r - 1) + [1, 2, 1] + [0] * (r - 2)
    return PartialWord(codes, Alphabet(2))


def prop3_word(r: int, unchecked: bool = False) -> PartialWord:
    """Binary word ◊^{r-1} a b a ◊^{r-2} b a a ◊^{r-3} of length 3r.

    For odd multiples of 3 (r = 3, 9, 15, ...) it carries exactly three
    r-th power occurrences, all starting at position 1. Other exponents are
    rejected unless `unchecked` is set, which emits the formula word for any
    r >= 3 without any claim about its occurrence profile.
    """
    if not isinstance(r, int) or r < 3:
        raise BadExponentError(f"exponent must be an integer >= 3, got {r!r}")
    if not unchecked and (r % 3 != 0 or r % 2 == 0):
        raise BadExponentError(
            f"exponent must be an odd multiple of 3 (3, 9, 15, ...), got {r}; "
            "pass unchecked=True to emit the formula word anyway"
        )
    codes = [0] * (r - 1) + [1, 2, 1] + [0] * (r - 2) + [2, 1, 1] + [0] * (r - 3)
    return PartialWord(codes, Alphabet(2))


def cube_examples() -> List[PartialWord]:
    """The two length-9 binary words with three cubes all starting at
    position 1; the first is prop3_word(3), the second differs only in its
    final symbol being a hole."""
    k2 = Alphabet(2)
    return [parse_word("..aba.baa", k2), parse_word("..aba.ba.", k2)]
