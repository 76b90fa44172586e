"""Exhaustive search for words maximizing power occurrences under a cap on
distinct occurrence starts.

The search walks the tree of canonical words (letters first appear in
alphabetical order; holes are unaffected) by appending symbols, keeping
occurrence counts incrementally. Appending can only add occurrences, so a
prefix whose distinct starts already exceed the cap t can be cut without
losing any optimum; that and the canonicality restriction are the only
prunings.

Work is always split into the subtrees rooted at a fixed prefix depth, and
per-subtree node budgets are fixed up front, so results are byte-identical
for any choice of --jobs: the thread pool only changes who executes which
subtree, never what is explored.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from . import _kernels
from .words import Alphabet, PartialWord, format_word

DEFAULT_NODE_BUDGET = 10**9
_PARTITION_DEPTH = 4


def canonicalize(w: PartialWord) -> PartialWord:
    """Rename letters so that first occurrences appear in alphabetical
    order; holes stay put. Two words differ by a letter permutation exactly
    when their canonical forms are equal."""
    mapping = [0] * (w.alphabet.size + 1)
    nxt = 0
    out = np.empty(len(w), np.int8)
    for i, c in enumerate(w.codes):
        c = int(c)
        if c != 0 and mapping[c] == 0:
            nxt += 1
            mapping[c] = nxt
        out[i] = mapping[c]
    return PartialWord(out, w.alphabet)


def is_canonical(w: PartialWord) -> bool:
    """True when each letter's first occurrence index is at most one above
    the largest index used so far."""
    mu = 0
    for c in w.codes:
        c = int(c)
        if c > mu + 1:
            return False
        if c == mu + 1:
            mu = c
    return True


@dataclass(frozen=True)
class SearchQuery:
    """Parameters of one search: exponent r, alphabet size k, maximum word
    length, cap t on distinct occurrence starts, and the witness list cap."""

    exponent: int
    alphabet_size: int
    max_len: int
    max_start_positions: int = 1
    witness_cap: int = 16

    def __post_init__(self):
        if not isinstance(self.exponent, int) or self.exponent < 2:
            raise ValueError(f"exponent must be an integer >= 2, got {self.exponent!r}")
        if not isinstance(self.alphabet_size, int) or not 1 <= self.alphabet_size <= 26:
            raise ValueError(f"alphabet size must be in 1..26, got {self.alphabet_size!r}")
        if not isinstance(self.max_len, int) or self.max_len < 1:
            raise ValueError(f"max_len must be a positive integer, got {self.max_len!r}")
        if not isinstance(self.max_start_positions, int) or self.max_start_positions < 1:
            raise ValueError(
                f"max_start_positions must be a positive integer, got {self.max_start_positions!r}"
            )
        if not isinstance(self.witness_cap, int) or self.witness_cap < 1:
            raise ValueError(f"witness_cap must be a positive integer, got {self.witness_cap!r}")


@dataclass(frozen=True)
class SearchResult:
    best_count: int
    witnesses: tuple[PartialWord, ...]
    nodes_explored: int
    pruned_by_symmetry: int
    pruned_by_start_bound: int
    exhaustive: bool

    def to_json_dict(self) -> dict:
        return {
            "bestCount": self.best_count,
            "witnesses": [format_word(w) for w in self.witnesses],
            "nodesExplored": self.nodes_explored,
            "prunedBySymmetry": self.pruned_by_symmetry,
            "prunedByStartBound": self.pruned_by_start_bound,
            "exhaustive": self.exhaustive,
        }


def _occ_stats(codes: tuple[int, ...], r: int) -> tuple[int, int]:
    """Occurrence count and distinct start count of a short prefix."""
    arr = np.array(codes, np.int8)
    n = arr.size
    out = np.empty((_kernels.occurrence_capacity(n, r), 2), np.int32)
    cnt = _kernels.occurrence_scan(arr, r, out)
    starts = {int(out[j, 0]) for j in range(cnt)}
    return int(cnt), len(starts)


def _survey_prefixes(q: SearchQuery, depth: int, budget: int):
    """Walk the canonical tree down to `depth` symbols in pure Python.

    Returns (nodes, pruned_sym, pruned_start, candidates, partitions,
    budget_hit): candidates are (occurrence_count, codes) for every
    qualifying node of length <= depth, partitions the qualifying nodes of
    length exactly `depth`, whose subtrees remain for the kernel.
    """
    k, r, t, n = q.alphabet_size, q.exponent, q.max_start_positions, q.max_len
    nodes = 1  # the empty word
    pruned_sym = 0
    pruned_start = 0
    candidates: List[tuple[int, tuple[int, ...]]] = [(0, ())]
    partitions: List[tuple[int, ...]] = []
    budget_hit = False

    def expand(codes: tuple[int, ...], max_used: int):
        nonlocal nodes, pruned_sym, pruned_start, budget_hit
        limit = min(k, max_used + 1)
        pruned_sym += k - limit  # len(codes) < depth <= n, so children exist
        for s in range(limit + 1):
            if budget_hit:
                return
            if nodes >= budget:
                budget_hit = True
                return
            child = codes + (s,)
            nodes += 1
            occ, nstarts = _occ_stats(child, r)
            if nstarts > t:
                pruned_start += 1
                continue
            candidates.append((occ, child))
            new_mu = max(max_used, s)
            if len(child) == depth:
                partitions.append(child)
            else:
                expand(child, new_mu)

    if depth > 0:
        expand((), 0)
    return nodes, pruned_sym, pruned_start, candidates, partitions, budget_hit


def search_max_powers(
    query: SearchQuery,
    budget: int = DEFAULT_NODE_BUDGET,
    jobs: int = 1,
) -> SearchResult:
    """Maximize r-th power occurrences over words of length <= max_len with
    at most t distinct occurrence starts; ties among witnesses are resolved
    by shortest-then-lexicographic order and capped at witness_cap.

    When the node budget runs out the result still holds a valid lower
    bound, flagged exhaustive=False.
    """
    if not isinstance(budget, int) or budget < 1:
        raise ValueError(f"budget must be a positive integer, got {budget!r}")
    if not isinstance(jobs, int) or jobs < 1:
        raise ValueError(f"jobs must be a positive integer, got {jobs!r}")
    k, r, t, n = (
        query.alphabet_size,
        query.exponent,
        query.max_start_positions,
        query.max_len,
    )
    wcap = query.witness_cap
    depth = min(n, _PARTITION_DEPTH)

    nodes, pruned_sym, pruned_start, candidates, partitions, budget_hit = _survey_prefixes(
        query, depth, budget
    )

    part_results = []
    if not budget_hit and partitions:
        remaining = budget - nodes
        count = len(partitions)
        quotas = [
            remaining // count + (1 if i < remaining % count else 0)
            for i in range(count)
        ]

        def run(idx: int):
            prefix = np.array(partitions[idx], np.int8)
            wit_buf = np.zeros((wcap, n), np.int8)
            wit_lens = np.zeros(wcap, np.int32)
            res = _kernels.search_kernel(
                prefix, n, k, r, t, quotas[idx], wcap, wit_buf, wit_lens
            )
            return res, wit_buf, wit_lens

        if jobs == 1 or len(partitions) == 1:
            part_results = [run(i) for i in range(count)]
        else:
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                part_results = list(pool.map(run, range(count)))

    best = max(occ for occ, _ in candidates)
    exhaustive = not budget_hit
    for (status, p_nodes, p_sym, p_start, p_best, _n_wit), _, _ in part_results:
        nodes += int(p_nodes)
        pruned_sym += int(p_sym)
        pruned_start += int(p_start)
        if status != 0:
            exhaustive = False
        if p_best > best:
            best = int(p_best)

    witness_codes = {codes for occ, codes in candidates if occ == best}
    for (status, _pn, _ps, _pb, p_best, n_wit), wit_buf, wit_lens in part_results:
        if p_best == best:
            for j in range(int(n_wit)):
                m = int(wit_lens[j])
                witness_codes.add(tuple(int(c) for c in wit_buf[j, :m]))
    ordered = sorted(witness_codes, key=lambda c: (len(c), c))[:wcap]
    alphabet = Alphabet(k)
    witnesses = tuple(PartialWord(c, alphabet) for c in ordered)

    return SearchResult(
        best_count=int(best),
        witnesses=witnesses,
        nodes_explored=int(nodes),
        pruned_by_symmetry=int(pruned_sym),
        pruned_by_start_bound=int(pruned_start),
        exhaustive=exhaustive,
    )


def known_bound(r: int, k: int) -> Optional[tuple[int, bool]]:
    """Established value for the maximum, as (value, exact): exact k for
    squares; for r >= 3 and k >= 2 a lower bound of 3 when r is an odd
    multiple of 3, else 2. None when nothing established applies."""
    if r == 2:
        return (k, True)
    if k >= 2:
        return (3, False) if r % 6 == 3 else (2, False)
    return None


@dataclass(frozen=True)
class TableCell:
    exponent: int
    alphabet_size: int
    max_len: int
    result: SearchResult
    known: Optional[tuple[int, bool]]
    flag: str  # "" | "new" | "conflict"

    def to_json_dict(self) -> dict:
        known_value = None if self.known is None else self.known[0]
        known_exact = None if self.known is None else self.known[1]
        return {
            "r": self.exponent,
            "k": self.alphabet_size,
            "maxLen": self.max_len,
            "bestCount": self.result.best_count,
            "exhaustive": self.result.exhaustive,
            "knownBound": known_value,
            "knownExact": known_exact,
            "flag": self.flag,
            "witness": (
                format_word(self.result.witnesses[0]) if self.result.witnesses else None
            ),
        }


def lower_bound_table(
    r_values: Sequence[int],
    k_values: Sequence[int],
    max_len: int,
    t: int = 1,
    witness_cap: int = 4,
    budget: int = DEFAULT_NODE_BUDGET,
    jobs: int = 1,
) -> List[TableCell]:
    """One bounded search per (r, k) cell, annotated with the established
    bound and flagged when the search exceeds it: "conflict" against an
    exact value (a bug), "new" against a lower bound (an improvement)."""
    cells = []
    for r in r_values:
        for k in k_values:
            query = SearchQuery(
                exponent=r,
                alphabet_size=k,
                max_len=max_len,
                max_start_positions=t,
                witness_cap=witness_cap,
            )
            result = search_max_powers(query, budget=budget, jobs=jobs)
            known = known_bound(r, k)
            flag = ""
            if known is not None and result.best_count > known[0]:
                flag = "conflict" if known[1] else "new"
            cells.append(
                TableCell(
                    exponent=r,
                    alphabet_size=k,
                    max_len=max_len,
                    result=result,
                    known=known,
                    flag=flag,
                )
            )
    return cells
