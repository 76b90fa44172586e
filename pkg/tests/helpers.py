"""Shared pure-Python oracles and exhaustive law checks.

Everything here recomputes results from the definitions, as independently of
the package's optimized paths as practical: power membership by literally
trying every candidate full root, periods straight from the defining
quantifier, and so on. Tests freeze expected values by comparing the package
against these.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator

import numpy as np

from pwpowers import Alphabet, PartialWord, power_occurrences, parse_word
from pwpowers._kernels import NUMBA_ENABLED, compile_kernel, is_power_at


def word(text: str, k: int | None = None) -> PartialWord:
    return parse_word(text, Alphabet(k) if k is not None else None)


def to_word(codes: Iterable[int], k: int) -> PartialWord:
    return PartialWord(list(codes), Alphabet(k))


def codes_product(length: int, k: int, holes: bool = True) -> Iterator[tuple[int, ...]]:
    lo = 0 if holes else 1
    return itertools.product(range(lo, k + 1), repeat=length)


def all_code_tuples(max_len: int, k: int, holes: bool = True) -> Iterator[tuple[int, ...]]:
    """Every code tuple of length 0..max_len in length-then-lex order."""
    for n in range(max_len + 1):
        yield from codes_product(n, k, holes)


def brute_is_power(codes: tuple[int, ...], k: int, r: int) -> bool:
    """Literal definition: some full x with the word contained in x^r."""
    n = len(codes)
    if n == 0 or n % r != 0:
        return False
    p = n // r
    for x in itertools.product(range(1, k + 1), repeat=p):
        if all(c == 0 or c == x[i % p] for i, c in enumerate(codes)):
            return True
    return False


def brute_occurrences(codes: tuple[int, ...], k: int, r: int) -> list[tuple[int, int]]:
    """All (start, length) occurrence pairs, 0-indexed starts, via the
    literal root check on every window."""
    n = len(codes)
    found = []
    for i in range(n):
        for length in range(r, n - i + 1, r):
            if brute_is_power(codes[i : i + length], k, r):
                found.append((i, length))
    return found


def brute_strong_periods(codes: tuple[int, ...]) -> list[int]:
    """Periods from the defining quantifier over position pairs."""
    n = len(codes)
    periods = []
    for p in range(1, n + 1):
        ok = True
        for i in range(n):
            for j in range(i + p, n, p):
                if codes[i] != 0 and codes[j] != 0 and codes[i] != codes[j]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            periods.append(p)
    return periods


def is_canonical_codes(codes: tuple[int, ...]) -> bool:
    mu = 0
    for c in codes:
        if c > mu + 1:
            return False
        if c == mu + 1:
            mu = c
    return True


def canonicalize_codes(codes: tuple[int, ...]) -> tuple[int, ...]:
    mapping: dict[int, int] = {}
    out = []
    for c in codes:
        if c == 0:
            out.append(0)
            continue
        if c not in mapping:
            mapping[c] = len(mapping) + 1
        out.append(mapping[c])
    return tuple(out)


def occ_pairs(w: PartialWord, r: int) -> list[tuple[int, int]]:
    return [(o.start, o.length) for o in power_occurrences(w, r)]


def brute_search(r: int, k: int, max_len: int, t: int, cap: int = 16):
    """Reference for search_max_powers on tiny spaces: enumerate every word
    (canonical or not) for the best count, then collect canonical witnesses
    in shortest-then-lex order."""
    best = 0
    for codes in all_code_tuples(max_len, k):
        occs = brute_occurrences(codes, k, r)
        if len({s for s, _ in occs}) <= t and len(occs) > best:
            best = len(occs)
    wits = []
    for codes in all_code_tuples(max_len, k):
        if not is_canonical_codes(codes):
            continue
        occs = brute_occurrences(codes, k, r)
        if len({s for s, _ in occs}) <= t and len(occs) == best:
            wits.append(codes)
    wits.sort(key=lambda c: (len(c), c))
    return best, wits[:cap]


def unpruned_search(r: int, k: int, max_len: int, t: int, cap: int = 16):
    """Same optimum via plain filtering of every canonical word, with the
    package's occurrence scan but none of the search's pruning."""
    best = 0
    wits: list[tuple[int, ...]] = []
    alphabet = Alphabet(k)
    for codes in all_code_tuples(max_len, k):
        if not is_canonical_codes(codes):
            continue
        occs = occ_pairs(PartialWord(list(codes), alphabet), r)
        if len({s for s, _ in occs}) > t:
            continue
        if len(occs) > best:
            best = len(occs)
            wits = [codes]
        elif len(occs) == best:
            wits.append(codes)
    wits.sort(key=lambda c: (len(c), c))
    return best, wits[:cap]


# ---------------------------------------------------------------------------
# exhaustive law checks; each returns a violation count (0 expected).
# The acceptance suite re-runs these at the module-stated bounds.
# ---------------------------------------------------------------------------


def _contain_matrix(mats: np.ndarray) -> np.ndarray:
    V = mats[:, None, :]
    W = mats[None, :, :]
    return np.all((V == 0) | (V == W), axis=2)


def check_containment_laws(max_len: int, k: int) -> int:
    """Containment is a partial order on words of each fixed length."""
    from pwpowers import is_contained_in

    violations = 0
    for n in range(max_len + 1):
        tuples = list(codes_product(n, k))
        mats = np.array(tuples, dtype=np.int8).reshape(len(tuples), n)
        M = _contain_matrix(mats)
        N = len(tuples)
        violations += int(np.sum(~np.diag(M)))  # reflexivity
        violations += int(np.sum((M & M.T) != np.eye(N, dtype=bool)))  # antisymmetry
        P = (M.astype(np.int32) @ M.astype(np.int32)) > 0
        violations += int(np.sum(P & ~M))  # transitivity
        # the API agrees with the matrix on every pair
        alphabet = Alphabet(k)
        words = [PartialWord(list(c), alphabet) for c in tuples]
        for i in range(N):
            for j in range(N):
                if is_contained_in(words[i], words[j]) != bool(M[i, j]):
                    violations += 1
    return violations


def check_join_laws(max_len: int, k: int) -> int:
    """Compatibility is symmetric; join exists iff compatible, is an upper
    bound, and is the least one."""
    from pwpowers import IncompatibleError, is_compatible, join

    violations = 0
    for n in range(max_len + 1):
        tuples = list(codes_product(n, k))
        mats = np.array(tuples, dtype=np.int8).reshape(len(tuples), n)
        M = _contain_matrix(mats)
        N = len(tuples)
        index = {t: i for i, t in enumerate(tuples)}
        alphabet = Alphabet(k)
        words = [PartialWord(list(c), alphabet) for c in tuples]
        for i in range(N):
            for j in range(N):
                compat = bool(np.all((mats[i] == 0) | (mats[j] == 0) | (mats[i] == mats[j])))
                if is_compatible(words[i], words[j]) != compat:
                    violations += 1
                if is_compatible(words[j], words[i]) != compat:
                    violations += 1  # symmetry via the API
                if not compat:
                    try:
                        join(words[i], words[j])
                        violations += 1
                    except IncompatibleError:
                        pass
                    continue
                joined = join(words[i], words[j])
                jt = tuple(int(c) for c in joined.codes)
                expected = tuple(int(a) if a else int(b) for a, b in zip(tuples[i], tuples[j]))
                if jt != expected:
                    violations += 1
                ji = index[jt]
                if not (M[i, ji] and M[j, ji]):
                    violations += 1  # upper bound
                # least: any common upper bound w also sits above the join
                violations += int(np.sum(M[i] & M[j] & ~M[ji]))
    return violations


def check_permutation_invariance(max_len: int, max_k: int, rs=(2, 3)) -> int:
    """Occurrence sets are unchanged by renaming letters."""
    violations = 0
    for k in range(1, max_k + 1):
        alphabet = Alphabet(k)
        for perm in itertools.permutations(range(1, k + 1)):
            mapping = (0,) + perm
            for codes in all_code_tuples(max_len, k):
                permuted = tuple(mapping[c] for c in codes)
                w = PartialWord(list(codes), alphabet)
                pw = PartialWord(list(permuted), alphabet)
                for r in rs:
                    if occ_pairs(w, r) != occ_pairs(pw, r):
                        violations += 1
    return violations


def check_extension_monotonicity(max_len: int, k: int, r: int = 2) -> int:
    """Appending a symbol never removes an occurrence."""
    violations = 0
    alphabet = Alphabet(k)
    for codes in all_code_tuples(max_len, k):
        base = set(occ_pairs(PartialWord(list(codes), alphabet), r))
        for s in range(k + 1):
            ext = set(occ_pairs(PartialWord(list(codes + (s,)), alphabet), r))
            if not base <= ext:
                violations += 1
    return violations


def check_canonicalize_laws(max_len: int, max_k: int, r: int = 2) -> int:
    """canonicalize is idempotent, permutation-invariant, and preserves the
    occurrence profile."""
    from pwpowers import canonicalize, is_canonical

    violations = 0
    for k in range(1, max_k + 1):
        alphabet = Alphabet(k)
        perms = list(itertools.permutations(range(1, k + 1)))
        for codes in all_code_tuples(max_len, k):
            w = PartialWord(list(codes), alphabet)
            cw = canonicalize(w)
            if not is_canonical(cw):
                violations += 1
            if canonicalize(cw) != cw:
                violations += 1
            if is_canonical_codes(codes) != (cw == w):
                violations += 1
            if occ_pairs(w, r) != occ_pairs(cw, r):
                violations += 1
            for perm in perms:
                mapping = (0,) + perm
                pw = PartialWord([mapping[c] for c in codes], alphabet)
                if canonicalize(pw) != cw:
                    violations += 1
    return violations


@compile_kernel
def literal_power_mismatches(k, max_len, r):
    # for every word up to max_len, compare the residue-class power test
    # against a literal odometer over all k^p candidate roots
    mismatches = 0
    for n in range(r, max_len + 1, r):
        p = n // r
        w = np.zeros(n, np.int8)
        x = np.zeros(p, np.int8)
        while True:
            fast = is_power_at(w, 0, n, r)
            for i in range(p):
                x[i] = 1
            found = False
            while True:
                ok = True
                for i in range(n):
                    s = w[i]
                    if s != 0 and s != x[i % p]:
                        ok = False
                        break
                if ok:
                    found = True
                    break
                j = p - 1
                while j >= 0:
                    if x[j] < k:
                        x[j] += 1
                        break
                    x[j] = 1
                    j -= 1
                if j < 0:
                    break
            if fast != found:
                mismatches += 1
            j = n - 1
            while j >= 0:
                if w[j] < k:
                    w[j] += 1
                    break
                w[j] = 0
                j -= 1
            if j < 0:
                break
    return mismatches
