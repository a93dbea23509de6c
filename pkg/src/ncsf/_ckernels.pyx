# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled expansion kernels; same interface as ``ncsf._pykernels``.

Coefficients are accumulated in 64-bit integers.  ``MAX_WEIGHT`` bounds the
weight for which every numerator and denominator is known to fit.
"""

BACKEND = "cython"
MAX_WEIGHT = 15

M_TO_PSI = 0
F_TO_PSI = 1
PSI_TO_M = 2
S_TO_PSI = 0
PSI_TO_S = 1

cdef enum:
    MAXN = 16


cdef long long ipow(long long b, int e):
    cdef long long r = 1
    while e > 0:
        r *= b
        e -= 1
    return r


def coarsening_terms(int kind, tuple parts):
    cdef int ell = len(parts)
    cdef int n = 0
    cdef long long cuts[MAXN]
    cdef int bps[MAXN]
    cdef int t, k, s_len, prev, p
    cdef long long sub, mask, num, den
    cdef list out = []
    if ell == 0 or ell > MAXN:
        raise ValueError("composition length out of kernel range")
    for t in range(ell - 1):
        n += <int>parts[t]
        cuts[t] = 1LL << (n - 1)
    if kind < 0 or kind > 2:
        raise ValueError(f"unknown coarsening kind {kind}")
    for sub in range(1LL << (ell - 1)):
        mask = 0
        s_len = 0
        for t in range(ell - 1):
            if (sub >> t) & 1:
                mask |= cuts[t]
                bps[s_len] = t + 1
                s_len += 1
        bps[s_len] = ell
        s_len += 1
        num = 1
        den = 1
        if kind == 0:
            prev = 0
            for k in range(s_len):
                den *= ell - prev
                prev = bps[k]
            if (ell - s_len) & 1:
                num = -1
        elif kind == 1:
            for k in range(s_len):
                den *= bps[k]
        else:
            prev = 0
            for k in range(s_len):
                p = bps[k]
                num *= ipow(s_len - k, p - prev)
                prev = p
        out.append((mask, num, den))
    return out


def refinement_terms(int kind, tuple parts):
    cdef int ell = len(parts)
    cdef int free_pos[MAXN]
    cdef int free_off[MAXN]
    cdef int free_end[MAXN]
    cdef int starts[MAXN]
    cdef int block_of[MAXN]
    cdef int last_cut[MAXN]
    cdef int pv[MAXN]
    cdef int nfree = 0
    cdef int base = 0
    cdef int t, x, b, p, count
    cdef long long sub, mask, dmask = 0, num, den, prod_parts = 1
    cdef list out = []
    if ell == 0:
        raise ValueError("empty composition")
    for b in range(ell):
        p = <int>parts[b]
        pv[b] = p
        starts[b] = base
        prod_parts *= p
        for x in range(1, p):
            if nfree >= MAXN:
                raise ValueError("composition weight out of kernel range")
            free_pos[nfree] = base + x
            free_off[nfree] = x
            free_end[nfree] = base + p
            block_of[nfree] = b
            nfree += 1
        base += p
        if b < ell - 1:
            dmask |= 1LL << (base - 1)
    if kind < 0 or kind > 1:
        raise ValueError(f"unknown refinement kind {kind}")
    for sub in range(1LL << nfree):
        mask = dmask
        if kind == 0:
            den = prod_parts
            for t in range(nfree):
                if (sub >> t) & 1:
                    mask |= 1LL << (free_pos[t] - 1)
                    den *= free_off[t]
            out.append((mask, 1, den))
        else:
            for b in range(ell):
                last_cut[b] = starts[b]
            count = 0
            for t in range(nfree):
                if (sub >> t) & 1:
                    mask |= 1LL << (free_pos[t] - 1)
                    last_cut[block_of[t]] = free_pos[t]
                    count += 1
            num = 1
            for b in range(ell):
                num *= starts[b] + pv[b] - last_cut[b]
            if count & 1:
                num = -num
            out.append((mask, num, 1))
    return out
