"""JIT-compiled inner loops for power detection, theorem checking, and search.

Every kernel is a plain Python function over numpy arrays, compiled with
numba when it is importable and the PWPOWERS_NO_NUMBA environment variable is
unset. Without numba the same functions run interpreted: identical results,
much slower. Symbol encoding throughout: 0 is the hole, 1..k are letters.
Positions inside kernels are 0-indexed; the public wrappers shift to the
1-indexed convention.

Word enumeration order in the verifier kernels is length first, then
lexicographic by symbol code (hole < a < b < ...), via a plain odometer on
the code array. Canonical representatives are words whose letters first
appear in alphabetical order; predicates checked here are invariant under
letter renaming, so skipping non-canonical words loses nothing.
"""

import os

import numpy as np

NUMBA_ENABLED = os.environ.get("PWPOWERS_NO_NUMBA", "").strip().lower() not in ("1", "true", "yes")
if NUMBA_ENABLED:
    try:
        import numba
    except ImportError:
        NUMBA_ENABLED = False

if NUMBA_ENABLED:
    def compile_kernel(func=None, **options):
        options.setdefault("cache", True)
        if func is None:
            return lambda f: numba.njit(**options)(f)
        return numba.njit(**options)(func)
else:
    def compile_kernel(func=None, **options):
        if func is None:
            return lambda f: f
        return func


def occurrence_capacity(n: int, r: int) -> int:
    """Upper bound on the number of r-th power occurrences in a length-n word."""
    return (n // r) * n + 1


@compile_kernel
def is_power_at(word, start, length, r):
    # window [start, start+length) contained in x^r for some full x of
    # length p = length // r  <=>  in each residue class mod p the defined
    # symbols all agree; `last` tracks the class's previous defined symbol
    p = length // r
    for c in range(p):
        last = 0
        idx = start + c
        while idx < start + length:
            s = word[idx]
            if s != 0:
                if last != 0 and s != last:
                    return False
                last = s
            idx += p
    return True


@compile_kernel
def occurrence_scan(word, r, out):
    # reference scan: test every candidate window directly
    n = word.shape[0]
    cnt = 0
    for start in range(n):
        length = r
        while start + length <= n:
            if is_power_at(word, start, length, r):
                out[cnt, 0] = start
                out[cnt, 1] = length
                cnt += 1
            length += r
    return cnt


@compile_kernel
def occurrence_scan_incremental(word, r, out):
    # append-driven scan: after each new symbol, only windows ending at the
    # new position can be new occurrences (this is what the search uses);
    # emits in (end, root) order, so the output is NOT sorted by start
    n = word.shape[0]
    cnt = 0
    for m in range(1, n + 1):
        p = 1
        while r * p <= m:
            i = m - r * p
            if is_power_at(word, i, r * p, r):
                out[cnt, 0] = i
                out[cnt, 1] = r * p
                cnt += 1
            p += 1
    return cnt


@compile_kernel
def occurrence_scan_sweep(word, r, out):
    # one left-to-right sweep per root length p. Two defined positions in
    # the same class mod p that are consecutive (only holes between them in
    # the class) and disagree form a break pair; a window is an occurrence
    # iff it contains no break pair, i.e. its start exceeds the largest
    # break left endpoint seen so far. O(n^2 / r) instead of O(n^3 / r).
    n = word.shape[0]
    cnt = 0
    for p in range(1, n // r + 1):
        length = r * p
        barrier = -1
        lastpos = np.full(p, -1, np.int64)
        for e in range(n):
            s = word[e]
            c = e % p
            if s != 0:
                lp = lastpos[c]
                if lp >= 0 and word[lp] != s and lp > barrier:
                    barrier = lp
                lastpos[c] = e
            i = e - length + 1
            if i >= 0 and barrier < i:
                out[cnt, 0] = i
                out[cnt, 1] = length
                cnt += 1
    # restore (start, length) order; keys are unique so stability is moot
    keys = np.empty(cnt, np.int64)
    for j in range(cnt):
        keys[j] = out[j, 0] * (n + 1) + out[j, 1]
    order = np.argsort(keys)
    tmp = np.empty((cnt, 2), np.int32)
    for j in range(cnt):
        tmp[j, 0] = out[order[j], 0]
        tmp[j, 1] = out[order[j], 1]
    for j in range(cnt):
        out[j, 0] = tmp[j, 0]
        out[j, 1] = tmp[j, 1]
    return cnt


@compile_kernel
def root_exists(word, start, length, k, r):
    # build an explicit full root x of length p by backtracking, letter by
    # letter; x[j] must match every defined symbol at start+j, start+j+p, ...
    # Never consults the residue-class predicate above.
    p = length // r
    x = np.zeros(p, np.int8)
    j = 0
    while True:
        found = False
        for letter in range(x[j] + 1, k + 1):
            ok = True
            idx = start + j
            while idx < start + length:
                s = word[idx]
                if s != 0 and s != letter:
                    ok = False
                    break
                idx += p
            if ok:
                x[j] = letter
                found = True
                break
        if found:
            j += 1
            if j == p:
                return True
        else:
            x[j] = 0
            j -= 1
            if j < 0:
                return False


@compile_kernel
def occurrence_scan_by_roots(word, k, r, out):
    # occurrence set computed purely through explicit root construction
    n = word.shape[0]
    cnt = 0
    for start in range(n):
        length = r
        while start + length <= n:
            if root_exists(word, start, length, k, r):
                out[cnt, 0] = start
                out[cnt, 1] = length
                cnt += 1
            length += r
    return cnt


# ---------------------------------------------------------------------------
# verifier kernels
#
# Shared return convention: status 0 = claim holds on the whole space,
# 1 = counterexample found (copied into `cex`), 2 = budget exhausted.
# `checked` counts canonical words actually tested, `enumerated` counts every
# word the odometer produced (canonical or not); the budget caps `enumerated`.
# ---------------------------------------------------------------------------


@compile_kernel
def _is_canonical_codes(w):
    mu = 0
    for i in range(w.shape[0]):
        s = w[i]
        if s > mu + 1:
            return False
        if s == mu + 1:
            mu = s
    return True


@compile_kernel
def fine_wilf_kernel(k, max_len, budget, cex):
    # full words; if p and q are both strong periods and the word is long
    # enough (|w| >= p + q - gcd(p,q)), gcd(p,q) must be a strong period too
    checked = 0
    enumerated = 0
    for n in range(1, max_len + 1):
        w = np.ones(n, np.int8)
        while True:
            enumerated += 1
            if enumerated > budget:
                return 2, checked, enumerated, 0, 0, 0
            if _is_canonical_codes(w):
                checked += 1
                mask = 0
                for p in range(1, n + 1):
                    periodic = True
                    for i in range(n - p):
                        if w[i] != w[i + p]:
                            periodic = False
                            break
                    if periodic:
                        mask |= 1 << (p - 1)
                for p in range(1, n + 1):
                    if mask & (1 << (p - 1)) == 0:
                        continue
                    for q in range(p, n + 1):
                        if mask & (1 << (q - 1)) == 0:
                            continue
                        a = p
                        b = q
                        while b:
                            a, b = b, a % b
                        if n >= p + q - a and mask & (1 << (a - 1)) == 0:
                            for i in range(n):
                                cex[i] = w[i]
                            return 1, checked, enumerated, n, p, q
            j = n - 1
            while j >= 0:
                if w[j] < k:
                    w[j] += 1
                    break
                w[j] = 1
                j -= 1
            if j < 0:
                break
    return 0, checked, enumerated, 0, 0, 0


@compile_kernel
def _distinct_starts(out, cnt):
    distinct = 0
    prev = -1
    for j in range(cnt):
        if out[j, 0] != prev:
            distinct += 1
            prev = out[j, 0]
    return distinct


@compile_kernel
def corollary_full_kernel(r, k, max_len, budget, cex):
    # full words: whenever some position starts two or more r-th power
    # occurrences, a strictly later position must start one as well.
    # Occurrences are sorted by start, so only the last start can violate.
    out = np.empty(((max_len // r) * max_len + 1, 2), np.int32)
    checked = 0
    enumerated = 0
    for n in range(1, max_len + 1):
        w = np.ones(n, np.int8)
        while True:
            enumerated += 1
            if enumerated > budget:
                return 2, checked, enumerated, 0
            if _is_canonical_codes(w):
                checked += 1
                cnt = occurrence_scan(w, r, out)
                if cnt > 0:
                    last = out[cnt - 1, 0]
                    same = 0
                    j = cnt - 1
                    while j >= 0 and out[j, 0] == last:
                        same += 1
                        j -= 1
                    if same >= 2:
                        for i in range(n):
                            cex[i] = w[i]
                        return 1, checked, enumerated, n
            j = n - 1
            while j >= 0:
                if w[j] < k:
                    w[j] += 1
                    break
                w[j] = 1
                j -= 1
            if j < 0:
                break
    return 0, checked, enumerated, 0


@compile_kernel
def lemma_h1_kernel(k, max_len, budget, cex):
    # words with two or more squares all starting at the same position must
    # have exactly one hole, located at position 1
    out = np.empty(((max_len // 2) * max_len + 1, 2), np.int32)
    checked = 0
    enumerated = 0
    for n in range(1, max_len + 1):
        w = np.zeros(n, np.int8)
        while True:
            enumerated += 1
            if enumerated > budget:
                return 2, checked, enumerated, 0
            if _is_canonical_codes(w):
                checked += 1
                cnt = occurrence_scan(w, 2, out)
                if cnt > 1 and _distinct_starts(out, cnt) == 1:
                    holes = 0
                    for i in range(n):
                        if w[i] == 0:
                            holes += 1
                    if w[0] != 0 or holes != 1:
                        for i in range(n):
                            cex[i] = w[i]
                        return 1, checked, enumerated, n
            j = n - 1
            while j >= 0:
                if w[j] < k:
                    w[j] += 1
                    break
                w[j] = 0
                j -= 1
            if j < 0:
                break
    return 0, checked, enumerated, 0


@compile_kernel
def theorem_sq_kernel(k, max_len, bound, budget, cex, wit):
    # words whose squares all start at one position carry at most `bound`
    # of them; also tracks the best count attained and its first witness
    out = np.empty(((max_len // 2) * max_len + 1, 2), np.int32)
    checked = 0
    enumerated = 0
    best = 0
    wit_len = -1
    for n in range(1, max_len + 1):
        w = np.zeros(n, np.int8)
        while True:
            enumerated += 1
            if enumerated > budget:
                return 2, checked, enumerated, 0, best, wit_len
            if _is_canonical_codes(w):
                checked += 1
                cnt = occurrence_scan(w, 2, out)
                if cnt > 0 and _distinct_starts(out, cnt) == 1:
                    if cnt > bound:
                        for i in range(n):
                            cex[i] = w[i]
                        return 1, checked, enumerated, n, best, wit_len
                    if cnt > best:
                        best = cnt
                        wit_len = n
                        for i in range(n):
                            wit[i] = w[i]
            j = n - 1
            while j >= 0:
                if w[j] < k:
                    w[j] += 1
                    break
                w[j] = 0
                j -= 1
            if j < 0:
                break
    return 0, checked, enumerated, 0, best, wit_len


# ---------------------------------------------------------------------------
# search kernel
# ---------------------------------------------------------------------------


@compile_kernel
def _word_less_than_row(word, m, wit_buf, wit_lens, j):
    # (length, lex) order; symbol codes already sort hole < a < b < ...
    jl = wit_lens[j]
    if m != jl:
        return m < jl
    for i in range(m):
        if word[i] != wit_buf[j, i]:
            return word[i] < wit_buf[j, i]
    return False


@compile_kernel
def _insert_witness(word, m, wit_buf, wit_lens, n_wit, wcap):
    pos = n_wit
    for j in range(n_wit):
        if _word_less_than_row(word, m, wit_buf, wit_lens, j):
            pos = j
            break
    if pos >= wcap:
        return n_wit
    j = n_wit if n_wit < wcap else wcap - 1
    while j > pos:
        wit_lens[j] = wit_lens[j - 1]
        for i in range(wit_lens[j]):
            wit_buf[j, i] = wit_buf[j - 1, i]
        j -= 1
    wit_lens[pos] = m
    for i in range(m):
        wit_buf[pos, i] = word[i]
    return n_wit + 1 if n_wit < wcap else wcap


@compile_kernel(nogil=True)
def search_kernel(prefix, max_len, k, r, t, node_budget, wcap, wit_buf, wit_lens):
    """Depth-first search over canonical extensions of `prefix`.

    Scores every strict extension (the prefix node itself belongs to the
    caller), maintaining occurrence and start-position counts incrementally
    and cutting any branch whose distinct power starts already exceed t
    (appending symbols never removes an occurrence, so the cut is sound).
    Returns (status, nodes, pruned_symmetry, pruned_start_bound, best, n_wit)
    where status 0 means the subtree was exhausted and 2 means the node
    budget ran out. best is -1 when no extension qualified.
    """
    n = max_len
    word = np.zeros(n + 1, np.int8)
    start_marked = np.zeros(n + 1, np.uint8)
    started_at = np.zeros(n + 1, np.int32)
    max_used = np.zeros(n + 2, np.int8)
    occ = np.zeros(n + 2, np.int64)
    nstarts = np.zeros(n + 2, np.int32)
    trial = np.zeros(n + 2, np.int8)

    d0 = prefix.shape[0]
    for i in range(d0):
        word[i] = prefix[i]
    for m in range(1, d0 + 1):
        s = word[m - 1]
        mu = max_used[m - 1]
        if s > mu:
            mu = s
        max_used[m] = mu
        occ[m] = occ[m - 1]
        nstarts[m] = nstarts[m - 1]
        p = 1
        while r * p <= m:
            i = m - r * p
            if is_power_at(word, i, r * p, r):
                occ[m] += 1
                if start_marked[i] == 0:
                    start_marked[i] = 1
                    started_at[i] = m
                    nstarts[m] += 1
            p += 1

    best = -1
    n_wit = 0
    nodes = 0
    pruned_sym = 0
    pruned_start = 0
    status = 0

    if d0 < n:
        # the prefix's own children are enumerated here, so the letters its
        # canonicality cap skips are accounted here as well
        lim0 = max_used[d0] + 1
        if lim0 > k:
            lim0 = k
        pruned_sym += k - lim0

    d = d0
    trial[d] = 0
    while True:
        advanced = False
        if d < n:
            s = trial[d]
            limit = max_used[d] + 1
            if limit > k:
                limit = k
            if s <= limit:
                advanced = True
                if nodes >= node_budget:
                    status = 2
                    break
                word[d] = s
                m = d + 1
                mu = max_used[d]
                if s > mu:
                    mu = s
                max_used[m] = mu
                occ[m] = occ[d]
                nstarts[m] = nstarts[d]
                p = 1
                while r * p <= m:
                    i = m - r * p
                    if is_power_at(word, i, r * p, r):
                        occ[m] += 1
                        if start_marked[i] == 0:
                            start_marked[i] = 1
                            started_at[i] = m
                            nstarts[m] += 1
                    p += 1
                nodes += 1
                if nstarts[m] > t:
                    pruned_start += 1
                    for i in range(m):
                        if start_marked[i] == 1 and started_at[i] == m:
                            start_marked[i] = 0
                    trial[d] += 1
                else:
                    c = occ[m]
                    if c > best:
                        best = c
                        n_wit = 0
                        n_wit = _insert_witness(word, m, wit_buf, wit_lens, n_wit, wcap)
                    elif c == best:
                        n_wit = _insert_witness(word, m, wit_buf, wit_lens, n_wit, wcap)
                    if m < n:
                        lim2 = mu + 1
                        if lim2 > k:
                            lim2 = k
                        pruned_sym += k - lim2
                        d = m
                        trial[d] = 0
                    else:
                        for i in range(m):
                            if start_marked[i] == 1 and started_at[i] == m:
                                start_marked[i] = 0
                        trial[d] += 1
        if not advanced:
            if d == d0:
                break
            m = d
            for i in range(m):
                if start_marked[i] == 1 and started_at[i] == m:
                    start_marked[i] = 0
            d -= 1
            trial[d] += 1
    return status, nodes, pruned_sym, pruned_start, best, n_wit
