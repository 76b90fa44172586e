import numpy as np
import pytest

from pwpowers import _kernels
from pwpowers.search import SearchQuery, search_max_powers
from pwpowers.verify import (
    verify_corollary_full,
    verify_fine_wilf,
    verify_lemma_h1,
    verify_theorem_sq_bound,
)


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # compile every jitted kernel once up front so per-test timing budgets
    # measure the algorithms rather than the JIT
    w = np.array([0, 1, 2, 1], np.int8)
    out = np.empty((_kernels.occurrence_capacity(4, 2), 2), np.int32)
    _kernels.occurrence_scan(w, 2, out)
    _kernels.occurrence_scan_incremental(w, 2, out)
    _kernels.occurrence_scan_sweep(w, 2, out)
    _kernels.occurrence_scan_by_roots(w, 2, 2, out)
    _kernels.root_exists(w, 0, 4, 2, 2)
    verify_fine_wilf(1, 2)
    verify_corollary_full(2, 1, 2)
    verify_lemma_h1(1, 2)
    verify_theorem_sq_bound(1, 2)
    search_max_powers(SearchQuery(exponent=2, alphabet_size=1, max_len=2))
