# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Todd-Coxeter core: the behavioural twin of ``_tc_py``.

Same HLT strategy, same definition order, same coincidence handling; the
test suite asserts both backends return identical tables.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memset

from ._tc_py import CapExceeded


cdef struct TC:
    int *table
    int *parent
    int *dead
    int ndead
    int ndef
    int ncols
    int cap
    int *deflog      # pairs (coset, column)
    int overflow


cdef int tc_find(TC *tc, int c) noexcept nogil:
    cdef int root = c, tmp
    while tc.parent[root] != root:
        root = tc.parent[root]
    while tc.parent[c] != root:
        tmp = tc.parent[c]
        tc.parent[c] = root
        c = tmp
    return root


cdef int tc_define(TC *tc, int alpha, int x) noexcept nogil:
    cdef int beta
    if tc.ndef >= tc.cap:
        tc.overflow = 1
        return -1
    tc.ndef += 1
    beta = tc.ndef
    tc.table[alpha * tc.ncols + x] = beta
    tc.table[beta * tc.ncols + (x ^ 1)] = alpha
    tc.deflog[2 * (beta - 2)] = alpha
    tc.deflog[2 * (beta - 2) + 1] = x
    return beta


cdef void tc_merge(TC *tc, int k, int l) noexcept nogil:
    k = tc_find(tc, k)
    l = tc_find(tc, l)
    if k == l:
        return
    if k > l:
        k, l = l, k
    tc.parent[l] = k
    tc.dead[tc.ndead] = l
    tc.ndead += 1


cdef void tc_coincidence(TC *tc, int alpha, int beta) noexcept nogil:
    cdef int gamma, grow, x, delta, mu, nu, murow
    tc_merge(tc, alpha, beta)
    while tc.ndead:
        tc.ndead -= 1
        gamma = tc.dead[tc.ndead]
        grow = gamma * tc.ncols
        for x in range(tc.ncols):
            delta = tc.table[grow + x]
            if not delta:
                continue
            tc.table[grow + x] = 0
            tc.table[delta * tc.ncols + (x ^ 1)] = 0
            mu = tc_find(tc, gamma)
            nu = tc_find(tc, delta)
            murow = mu * tc.ncols
            if tc.table[murow + x]:
                tc_merge(tc, nu, tc.table[murow + x])
            elif tc.table[nu * tc.ncols + (x ^ 1)]:
                tc_merge(tc, mu, tc.table[nu * tc.ncols + (x ^ 1)])
            else:
                tc.table[murow + x] = nu
                tc.table[nu * tc.ncols + (x ^ 1)] = mu


cdef int tc_scan_and_fill(TC *tc, int alpha, int *word, int wlen) noexcept nogil:
    cdef int f = alpha, i = 0
    cdef int b = alpha, j = wlen - 1
    while True:
        while i <= j and tc.table[f * tc.ncols + word[i]]:
            f = tc.table[f * tc.ncols + word[i]]
            i += 1
        if i > j:
            if f != b:
                tc_coincidence(tc, f, b)
            return 0
        while j >= i and tc.table[b * tc.ncols + (word[j] ^ 1)]:
            b = tc.table[b * tc.ncols + (word[j] ^ 1)]
            j -= 1
        if j < i:
            tc_coincidence(tc, f, b)
            return 0
        if j == i:
            tc.table[f * tc.ncols + word[i]] = b
            tc.table[b * tc.ncols + (word[i] ^ 1)] = f
            return 0
        f = tc_define(tc, f, word[i])
        if f < 0:
            return -1
        i += 1


def enumerate_core(int ncols, relators, subgroup_words, int cap):
    """Drop-in replacement for the pure-Python ``enumerate_core``."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    cdef TC tc
    cdef int nwords = len(relators) + len(subgroup_words)
    cdef int total = 0, k, i, x, alpha
    cdef list allwords = list(subgroup_words) + list(relators)
    for w in allwords:
        total += len(w)
    cdef int *wbuf = <int *> malloc(total * sizeof(int) if total else sizeof(int))
    cdef int *woff = <int *> malloc((nwords + 1) * sizeof(int))
    cdef int nsub = len(subgroup_words)
    if wbuf == NULL or woff == NULL:
        free(wbuf); free(woff)
        raise MemoryError
    k = 0
    woff[0] = 0
    for i in range(nwords):
        for x in allwords[i]:
            wbuf[k] = x
            k += 1
        woff[i + 1] = k

    tc.ncols = ncols
    tc.cap = cap
    tc.ndef = 1
    tc.ndead = 0
    tc.overflow = 0
    tc.table = <int *> malloc((<size_t> (cap + 2)) * ncols * sizeof(int))
    tc.parent = <int *> malloc((cap + 2) * sizeof(int))
    tc.dead = <int *> malloc((cap + 2) * sizeof(int))
    tc.deflog = <int *> malloc(2 * (<size_t> (cap + 2)) * sizeof(int))
    if tc.table == NULL or tc.parent == NULL or tc.dead == NULL or tc.deflog == NULL:
        free(tc.table); free(tc.parent); free(tc.dead); free(tc.deflog)
        free(wbuf); free(woff)
        raise MemoryError
    memset(tc.table, 0, (<size_t> (cap + 2)) * ncols * sizeof(int))
    for i in range(cap + 2):
        tc.parent[i] = i

    try:
        for i in range(nsub):
            if tc_scan_and_fill(&tc, 1, wbuf + woff[i], woff[i + 1] - woff[i]) < 0:
                raise CapExceeded

        alpha = 1
        while alpha <= tc.ndef:
            if tc_find(&tc, alpha) != alpha:
                alpha += 1
                continue
            for i in range(nsub, nwords):
                if tc_scan_and_fill(&tc, alpha, wbuf + woff[i],
                                    woff[i + 1] - woff[i]) < 0:
                    raise CapExceeded
                if tc_find(&tc, alpha) != alpha:
                    break
            if tc_find(&tc, alpha) == alpha:
                for x in range(ncols):
                    if not tc.table[alpha * ncols + x]:
                        if tc_define(&tc, alpha, x) < 0:
                            raise CapExceeded
            alpha += 1

        table = [tc.table[i] for i in range((tc.ndef + 1) * ncols)]
        parent = [tc.parent[i] for i in range(tc.ndef + 1)]
        deflog = [(tc.deflog[2 * i], tc.deflog[2 * i + 1])
                  for i in range(tc.ndef - 1)]
        return table, tc.ndef, parent, deflog
    finally:
        free(tc.table); free(tc.parent); free(tc.dead); free(tc.deflog)
        free(wbuf); free(woff)
