"""Brute-force verification of the package's structural claims on bounded
word spaces.

Each verifier enumerates every word up to a stated length (restricted to
canonical representatives where the claim is invariant under letter
renaming, which all of these are), checks the claim instance by instance,
and returns a VerificationReport. A failing report always carries a concrete
counterexample that can be re-checked through the public API. Enumerations
are capped by a check budget; exceeding it raises ResourceLimitError rather
than returning a verdict.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import _kernels
from .constructions import cube_examples, prop2_word, prop3_word, square_chain
from .errors import ResourceLimitError
from .powers import power_occurrences, power_profile
from .words import Alphabet, PartialWord, format_word

DEFAULT_CHECK_BUDGET = 10**8
_MAX_FINE_WILF_LEN = 60  # period sets are kept as bit masks in an int64


@dataclass(frozen=True)
class Counterexample:
    word: PartialWord
    context: dict

    def to_json_dict(self) -> dict:
        return {"word": format_word(self.word), "context": dict(self.context)}


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one bounded exhaustive check.

    `elapsed_seconds` is excluded from equality so identical runs compare
    equal regardless of wall-clock noise.
    """

    claim: str
    parameters: dict
    instances_checked: int
    outcome: str  # "pass" | "fail"
    counterexample: Optional[Counterexample]
    findings: dict = field(default_factory=dict)
    elapsed_seconds: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return self.outcome == "pass"

    def to_json_dict(self) -> dict:
        return {
            "claim": self.claim,
            "parameters": dict(self.parameters),
            "instancesChecked": self.instances_checked,
            "outcome": self.outcome,
            "counterexample": (
                None if self.counterexample is None else self.counterexample.to_json_dict()
            ),
            "findings": dict(self.findings),
            "elapsedSeconds": round(self.elapsed_seconds, 6),
        }


def _require_positive(name: str, value) -> None:
    if not isinstance(value, int) or value < 1:
        raise ValueError(f"{name} must be a positive integer, got {value!r}")


def _require_alphabet(k) -> None:
    if not isinstance(k, int) or not 1 <= k <= 26:
        raise ValueError(f"alphabet size must be in 1..26, got {k!r}")


def _budget_error(claim: str, enumerated: int, budget: int) -> ResourceLimitError:
    return ResourceLimitError(
        f"{claim}: enumeration exceeded the check budget "
        f"({enumerated} words produced, budget {budget})"
    )


def verify_fine_wilf(k: int, max_len: int, budget: int = DEFAULT_CHECK_BUDGET) -> VerificationReport:
    """Every full word of length up to max_len over k letters that has
    strong periods p and q with |w| >= p + q - gcd(p, q) also has strong
    period gcd(p, q)."""
    _require_alphabet(k)
    _require_positive("max_len", max_len)
    if max_len > _MAX_FINE_WILF_LEN:
        raise ValueError(f"max_len above {_MAX_FINE_WILF_LEN} is not supported")
    t0 = time.perf_counter()
    cex_buf = np.zeros(max_len, np.int8)
    status, checked, enumerated, cex_len, p, q = _kernels.fine_wilf_kernel(
        k, max_len, budget, cex_buf
    )
    if status == 2:
        raise _budget_error("fine-wilf", enumerated, budget)
    counterexample = None
    if status == 1:
        word = PartialWord(cex_buf[:cex_len], Alphabet(k))
        g = int(np.gcd(p, q))
        counterexample = Counterexample(word, {"p": int(p), "q": int(q), "gcd": g})
    return VerificationReport(
        claim="fine-wilf",
        parameters={"k": k, "maxLen": max_len},
        instances_checked=int(checked),
        outcome="pass" if status == 0 else "fail",
        counterexample=counterexample,
        findings={"wordsEnumerated": int(enumerated)},
        elapsed_seconds=time.perf_counter() - t0,
    )


def verify_corollary_full(r: int, k: int, max_len: int, budget: int = DEFAULT_CHECK_BUDGET) -> VerificationReport:
    """In every full word up to max_len over k letters, a position starting
    two or more r-th power occurrences is followed by a strictly later
    start. Equivalently: no full word has two occurrences sharing a unique
    start position."""
    if not isinstance(r, int) or r < 2:
        raise ValueError(f"exponent must be an integer >= 2, got {r!r}")
    _require_alphabet(k)
    _require_positive("max_len", max_len)
    t0 = time.perf_counter()
    cex_buf = np.zeros(max_len, np.int8)
    status, checked, enumerated, cex_len = _kernels.corollary_full_kernel(
        r, k, max_len, budget, cex_buf
    )
    if status == 2:
        raise _budget_error("corollary-full", enumerated, budget)
    counterexample = None
    if status == 1:
        word = PartialWord(cex_buf[:cex_len], Alphabet(k))
        profile = power_profile(word, r)
        last = max(o.start for o in profile.occurrences)
        counterexample = Counterexample(
            word,
            {
                "start": last,
                "occurrencesAtStart": sum(1 for o in profile.occurrences if o.start == last),
            },
        )
    return VerificationReport(
        claim="corollary-full",
        parameters={"r": r, "k": k, "maxLen": max_len},
        instances_checked=int(checked),
        outcome="pass" if status == 0 else "fail",
        counterexample=counterexample,
        findings={"wordsEnumerated": int(enumerated)},
        elapsed_seconds=time.perf_counter() - t0,
    )


def verify_lemma_h1(k: int, max_len: int, budget: int = DEFAULT_CHECK_BUDGET) -> VerificationReport:
    """Every word up to max_len over k letters with two or more squares all
    starting at the same position has exactly one hole, at position 1."""
    _require_alphabet(k)
    _require_positive("max_len", max_len)
    t0 = time.perf_counter()
    cex_buf = np.zeros(max_len, np.int8)
    status, checked, enumerated, cex_len = _kernels.lemma_h1_kernel(
        k, max_len, budget, cex_buf
    )
    if status == 2:
        raise _budget_error("lemma-h1", enumerated, budget)
    counterexample = None
    if status == 1:
        word = PartialWord(cex_buf[:cex_len], Alphabet(k))
        profile = power_profile(word, 2)
        counterexample = Counterexample(
            word,
            {
                "squares": len(profile.occurrences),
                "startPositions": list(profile.start_positions),
                "holes": list(word.hole_positions()),
            },
        )
    return VerificationReport(
        claim="lemma-h1",
        parameters={"k": k, "maxLen": max_len},
        instances_checked=int(checked),
        outcome="pass" if status == 0 else "fail",
        counterexample=counterexample,
        findings={"wordsEnumerated": int(enumerated)},
        elapsed_seconds=time.perf_counter() - t0,
    )


def _hole_prefix_pairs(k: int, max_u_len: int, budget: int, claim: str):
    """All (w, u_len, c) with w = ◊u'cu', u = ◊u' of length u_len <= max_u_len
    and c a letter: the joint shape behind the two interior-square lemmas."""
    alphabet = Alphabet(k)
    checked = 0
    for u_len in range(1, max_u_len + 1):
        for tail in itertools.product(range(1, k + 1), repeat=u_len - 1):
            for c in range(1, k + 1):
                checked += 1
                if checked > budget:
                    raise _budget_error(claim, checked, budget)
                codes = (0,) + tail + (c,) + tail
                yield PartialWord(codes, alphabet), u_len, c, tail


def verify_lemma_2k(k: int, max_u_len: int, budget: int = DEFAULT_CHECK_BUDGET) -> VerificationReport:
    """For w = ◊u'cu' (u = ◊u', v = cu' compatible with every completion of
    u): any square occurrence from position 1 that is longer than |u| but
    shorter than the whole word forces a square start strictly inside w."""
    if not isinstance(k, int) or not 2 <= k <= 26:
        raise ValueError(f"alphabet size must be in 2..26, got {k!r}")
    _require_positive("max_u_len", max_u_len)
    t0 = time.perf_counter()
    checked = 0
    counterexample = None
    outcome = "pass"
    for w, u_len, c, tail in _hole_prefix_pairs(k, max_u_len, budget, "lemma-2k"):
        checked += 1
        occs = power_occurrences(w, 2)
        has_interior_start = any(o.start > 1 for o in occs)
        for o in occs:
            if o.start == 1 and u_len < o.length < len(w) and not has_interior_start:
                counterexample = Counterexample(
                    w, {"uLen": u_len, "squareLength": o.length}
                )
                outcome = "fail"
                break
        if outcome == "fail":
            break
    return VerificationReport(
        claim="lemma-2k",
        parameters={"k": k, "maxULen": max_u_len},
        instances_checked=checked,
        outcome=outcome,
        counterexample=counterexample,
        findings={},
        elapsed_seconds=time.perf_counter() - t0,
    )


def verify_lemma_short(k: int, max_u_len: int, budget: int = DEFAULT_CHECK_BUDGET) -> VerificationReport:
    """For w = ◊u'cu' as above: any square occurrence w[1..2m] with
    2m <= |u| and w[m+1] equal to the first letter of v = cu' forces a
    square occurrence inside v itself."""
    if not isinstance(k, int) or not 2 <= k <= 26:
        raise ValueError(f"alphabet size must be in 2..26, got {k!r}")
    _require_positive("max_u_len", max_u_len)
    t0 = time.perf_counter()
    checked = 0
    counterexample = None
    outcome = "pass"
    alphabet = Alphabet(k)
    for w, u_len, c, tail in _hole_prefix_pairs(k, max_u_len, budget, "lemma-short"):
        checked += 1
        codes = w.codes
        for o in power_occurrences(w, 2):
            if o.start == 1 and o.length <= u_len:
                m = o.length // 2
                if int(codes[m]) == c:  # w[m+1] equals v[1]
                    v = PartialWord((c,) + tail, alphabet)
                    if not power_occurrences(v, 2):
                        counterexample = Counterexample(
                            w, {"uLen": u_len, "squareLength": o.length, "v": format_word(v)}
                        )
                        outcome = "fail"
                        break
        if outcome == "fail":
            break
    return VerificationReport(
        claim="lemma-short",
        parameters={"k": k, "maxULen": max_u_len},
        instances_checked=checked,
        outcome=outcome,
        counterexample=counterexample,
        findings={},
        elapsed_seconds=time.perf_counter() - t0,
    )


def verify_theorem_sq_bound(
    k: int,
    max_len: int,
    bound: Optional[int] = None,
    budget: int = DEFAULT_CHECK_BUDGET,
) -> VerificationReport:
    """Every word up to max_len over k letters whose squares all start at a
    single position has at most `bound` of them (default bound: k).

    Passing a smaller bound probes tightness: bound = k - 1 is expected to
    fail once max_len reaches 2^k, and the counterexample exhibits a word
    attaining k squares.
    """
    _require_alphabet(k)
    _require_positive("max_len", max_len)
    if bound is None:
        bound = k
    _require_positive("bound", bound)
    t0 = time.perf_counter()
    cex_buf = np.zeros(max_len, np.int8)
    wit_buf = np.zeros(max_len, np.int8)
    status, checked, enumerated, cex_len, best, wit_len = _kernels.theorem_sq_kernel(
        k, max_len, bound, budget, cex_buf, wit_buf
    )
    if status == 2:
        raise _budget_error("theorem-sq", enumerated, budget)
    counterexample = None
    if status == 1:
        word = PartialWord(cex_buf[:cex_len], Alphabet(k))
        profile = power_profile(word, 2)
        counterexample = Counterexample(
            word, {"squares": len(profile.occurrences), "bound": bound}
        )
    findings: dict = {"wordsEnumerated": int(enumerated), "maxSquares": int(best)}
    if wit_len >= 0:
        findings["maxWitness"] = format_word(PartialWord(wit_buf[:wit_len], Alphabet(k)))
    return VerificationReport(
        claim="theorem-sq",
        parameters={"k": k, "maxLen": max_len, "bound": bound},
        instances_checked=int(checked),
        outcome="pass" if status == 0 else "fail",
        counterexample=counterexample,
        findings=findings,
        elapsed_seconds=time.perf_counter() - t0,
    )


def verify_construction(name: str, k: Optional[int] = None, r: Optional[int] = None,
                        budget: int = DEFAULT_CHECK_BUDGET) -> VerificationReport:
    """Re-check a construction's claimed occurrence profile by direct scan.

    Names: square-chain (needs k >= 0), prop2 (needs r >= 2), prop3 (needs
    r an odd multiple of 3), cube-examples (no parameters).
    """
    t0 = time.perf_counter()
    targets: list[tuple[PartialWord, int, set[tuple[int, int]]]] = []
    if name == "square-chain":
        if k is None:
            raise ValueError("square-chain needs k")
        w = square_chain(k)
        expected = {(1, 2**j) for j in range(1, k + 1)}
        targets.append((w, 2, expected))
        parameters = {"name": name, "k": k}
    elif name == "prop2":
        if r is None:
            raise ValueError("prop2 needs r")
        w = prop2_word(r)
        targets.append((w, r, {(1, r), (1, 2 * r)}))
        parameters = {"name": name, "r": r}
    elif name == "prop3":
        if r is None:
            raise ValueError("prop3 needs r")
        w = prop3_word(r)
        targets.append((w, r, {(1, r), (1, 2 * r), (1, 3 * r)}))
        parameters = {"name": name, "r": r}
    elif name == "cube-examples":
        for w in cube_examples():
            targets.append((w, 3, {(1, 3), (1, 6), (1, 9)}))
        parameters = {"name": name}
    else:
        raise ValueError(f"unknown construction {name!r}")

    checked = 0
    counterexample = None
    outcome = "pass"
    for w, rr, expected in targets:
        checked += 1
        profile = power_profile(w, rr)
        got = {(o.start, o.length) for o in profile.occurrences}
        expected_unique = 1 if expected else None
        if got != expected or profile.unique_start != expected_unique:
            counterexample = Counterexample(
                w,
                {
                    "expected": sorted(expected),
                    "got": sorted(got),
                    "uniqueStart": profile.unique_start,
                },
            )
            outcome = "fail"
            break
    return VerificationReport(
        claim=f"construction:{name}",
        parameters=parameters,
        instances_checked=checked,
        outcome=outcome,
        counterexample=counterexample,
        findings={},
        elapsed_seconds=time.perf_counter() - t0,
    )
