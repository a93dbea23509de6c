"""Pure-Python expansion kernels.

Each kernel takes a composition (tuple of positive ints) and returns a list
of ``(mask, num, den)`` triples: the descent bitmask of an index ``J`` and
the coefficient ``num/den`` of ``J`` in the expansion.  The compiled module
``_ckernels`` exposes the same functions with identical output.
"""

BACKEND = "python"

# coarsening kinds (sum over J <= I)
M_TO_PSI = 0
F_TO_PSI = 1
PSI_TO_M = 2
# refinement kinds (sum over J >= I)
S_TO_PSI = 0
PSI_TO_S = 1


def coarsening_terms(kind, parts):
    ell = len(parts)
    cuts = []
    s = 0
    for p in parts[:-1]:
        s += p
        cuts.append(1 << (s - 1))
    out = []
    for sub in range(1 << (ell - 1)):
        mask = 0
        bps = []
        for t in range(ell - 1):
            if sub >> t & 1:
                mask |= cuts[t]
                bps.append(t + 1)
        bps.append(ell)
        s_len = len(bps)
        if kind == M_TO_PSI:
            den = 1
            prev = 0
            for p in bps:
                den *= ell - prev
                prev = p
            num = -1 if (ell - s_len) & 1 else 1
        elif kind == F_TO_PSI:
            num = 1
            den = 1
            for p in bps:
                den *= p
        elif kind == PSI_TO_M:
            num = 1
            den = 1
            prev = 0
            for k, p in enumerate(bps, 1):
                num *= (s_len - k + 1) ** (p - prev)
                prev = p
        else:
            raise ValueError(f"unknown coarsening kind {kind}")
        out.append((mask, num, den))
    return out


def refinement_terms(kind, parts):
    n = sum(parts)
    # block start (0-based offset) for each position 1..n-1 that is not a descent
    free = []
    base = 0
    for p in parts:
        for x in range(1, p):
            free.append((base + x, x))
        base += p
    dmask = 0
    s = 0
    for p in parts[:-1]:
        s += p
        dmask |= 1 << (s - 1)
    # block end for each free position
    ends = []
    base = 0
    for p in parts:
        ends.extend([base + p] * (p - 1))
        base += p
    nfree = len(free)
    out = []
    for sub in range(1 << nfree):
        mask = dmask
        if kind == S_TO_PSI:
            den = 1
            for p in parts:
                den *= p
            for t in range(nfree):
                if sub >> t & 1:
                    pos, off = free[t]
                    mask |= 1 << (pos - 1)
                    den *= off
            out.append((mask, 1, den))
        elif kind == PSI_TO_S:
            num = 1
            count = 0
            # last part of each block: end - last chosen cut inside it
            last_cut = {}
            for t in range(nfree):
                if sub >> t & 1:
                    pos, off = free[t]
                    mask |= 1 << (pos - 1)
                    last_cut[ends[t]] = pos
                    count += 1
            base = 0
            for p in parts:
                end = base + p
                num *= end - last_cut.get(end, base)
                base = end
            out.append((mask, -num if count & 1 else num, 1))
        else:
            raise ValueError(f"unknown refinement kind {kind}")
    return out
