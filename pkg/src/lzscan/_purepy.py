"""Pure-Python implementations of the hot kernels.

The compiled twin in ``_speedups.pyx`` mirrors these functions one for one;
``_backend`` picks whichever is available.  Everything here works on flat
``array``/``bytearray`` buffers and plain dicts so both backends share the
exact same call surface and data layout.
"""

from __future__ import annotations

from array import array

BACKEND = "pure"


# ---------------------------------------------------------------------------
# suffix array (SA-IS) and adjacent-lcp (Kasai)
# ---------------------------------------------------------------------------


def suffix_array(s, sigma: int) -> array:
    """SA-IS suffix sorting.  Requires ``s[-1]`` to be a unique minimum
    (sentinel); every code must lie in ``[0..sigma)``."""
    n = len(s)
    if n == 0:
        return array("i")
    if n == 1:
        return array("i", [0])
    sa = _sais(s, n, sigma)
    return array("i", sa)


def _sais(s, n, sigma):
    S_TYPE, L_TYPE = 1, 0
    types = bytearray(n)
    types[n - 1] = S_TYPE
    for i in range(n - 2, -1, -1):
        if s[i] < s[i + 1]:
            types[i] = S_TYPE
        elif s[i] == s[i + 1] and types[i + 1] == S_TYPE:
            types[i] = S_TYPE

    bkt = [0] * sigma
    for c in s:
        bkt[c] += 1

    def heads():
        out = [0] * sigma
        total = 0
        for c in range(sigma):
            out[c] = total
            total += bkt[c]
        return out

    def tails():
        out = [0] * sigma
        total = 0
        for c in range(sigma):
            total += bkt[c]
            out[c] = total - 1
        return out

    is_lms = bytearray(n)
    lms = []
    for i in range(1, n):
        if types[i] == S_TYPE and types[i - 1] == L_TYPE:
            is_lms[i] = 1
            lms.append(i)

    def induce(sa):
        h = heads()
        for i in range(n):
            j = sa[i] - 1
            if sa[i] > 0 and types[j] == L_TYPE:
                sa[h[s[j]]] = j
                h[s[j]] += 1
        t = tails()
        for i in range(n - 1, -1, -1):
            j = sa[i] - 1
            if sa[i] > 0 and types[j] == S_TYPE:
                sa[t[s[j]]] = j
                t[s[j]] -= 1

    # first pass: LMS suffixes in text order, then induce to sort LMS substrings
    sa = [-1] * n
    t = tails()
    for i in reversed(lms):
        sa[t[s[i]]] = i
        t[s[i]] -= 1
    induce(sa)

    # name LMS substrings in sorted order
    name_of = {}
    names = [-1] * n
    prev = -1
    counter = -1
    for pos in sa:
        if pos <= 0 or not is_lms[pos]:
            continue
        if prev < 0:
            counter += 1
        else:
            i, j = prev, pos
            same = True
            while True:
                if s[i] != s[j] or types[i] != types[j]:
                    same = False
                    break
                i += 1
                j += 1
                li, lj = (i < n and is_lms[i]), (j < n and is_lms[j])
                if li or lj:
                    same = li and lj and s[i] == s[j]
                    break
            if not same:
                counter += 1
        names[pos] = counter
        prev = pos

    reduced = [names[i] for i in lms]
    if counter + 1 == len(lms):
        order = [0] * len(lms)
        for idx, name in enumerate(reduced):
            order[name] = idx
    else:
        sub = _sais(reduced, len(reduced), counter + 1)
        order = sub

    # final pass: LMS suffixes in their true sorted order
    sa = [-1] * n
    t = tails()
    for k in range(len(lms) - 1, -1, -1):
        i = lms[order[k]]
        sa[t[s[i]]] = i
        t[s[i]] -= 1
    induce(sa)
    return sa


def lcp_adjacent(s, sa) -> array:
    """Kasai: ``out[k] = lcp(suffix sa[k-1], suffix sa[k])``; ``out[0] = 0``."""
    n = len(sa)
    rank = array("i", bytes(4 * n))
    for k in range(n):
        rank[sa[k]] = k
    out = array("i", bytes(4 * n))
    h = 0
    for i in range(n):
        k = rank[i]
        if k > 0:
            j = sa[k - 1]
            while i + h < n and j + h < n and s[i + h] == s[j + h]:
                h += 1
            out[k] = h
            if h:
                h -= 1
        else:
            h = 0
    return out


# ---------------------------------------------------------------------------
# brute-force oracle scans
# ---------------------------------------------------------------------------


def best_match(codes, n: int, q: int):
    """Longest earlier match at ``q``: returns ``(length, pos)`` with the
    leftmost maximal ``pos < q`` (overlap allowed), or ``(0, -1)``."""
    best_l = 0
    best_p = -1
    cq = codes[q]
    for j in range(1, q):
        if codes[j] != cq:
            continue
        l = 1
        while q + l < n and codes[j + l] == codes[q + l]:
            l += 1
        if l > best_l:
            best_l = l
            best_p = j
    return best_l, best_p


def naive_steps(codes, n: int):
    """Greedy factorization of ``codes[1..n)``: list of ``(length, pos)`` with
    ``pos = -1`` for literals."""
    out = []
    q = 1
    while q < n:
        l, p = best_match(codes, n, q)
        if l == 0:
            out.append((1, -1))
            q += 1
        else:
            out.append((l, p))
            q += l
    return out


# ---------------------------------------------------------------------------
# short-tier table maintenance
# ---------------------------------------------------------------------------


def short_scan(codes, n: int, cursor: int, upto: int, hr: int, lg: int, tables):
    """Scan positions ``[cursor..upto)``; wherever the top table misses the
    length-``hr`` packed context, record the position in every table."""
    if upto <= cursor:
        return cursor
    top = tables[hr - 1]
    mask = (1 << (lg * hr)) - 1
    # rolling packed word of the hr symbols starting at the scan position
    w = 0
    for k in range(cursor, cursor + hr):
        w = (w << lg) | (codes[k] if k < n else 0)
    for j in range(cursor, upto):
        if top[w] < 0:
            x = 0
            for i in range(hr):
                k = j + i
                x = (x << lg) | (codes[k] if k < n else 0)
                tables[i][x] = j
        nxt = j + hr
        w = ((w << lg) | (codes[nxt] if nxt < n else 0)) & mask
    return upto


# ---------------------------------------------------------------------------
# medium-tier window scan
# ---------------------------------------------------------------------------


def fill_scan(codes, n, p, bend, tausq, sigma, psi, leaf_by_rank, vparent,
              vdepth, links, hp_path, hp_pos, paths_flat, path_off, mlen,
              marked, subfl, resolve_long):
    """Run the per-block factor scan over text positions ``[p..bend]``.

    Walks the scan pointer ``f`` over the whole prefix feeding the reversed
    context automaton (prefix links + psi jumps + weighted-ancestor landing),
    marking visited vertices, and grows each factor while the grown string
    still has an occurrence ending before it.  Factors reaching ``tausq`` are
    delegated to ``resolve_long``.

    Returns ``(entries, long_map)`` where entries is a list of
    ``(start, length)`` and long_map maps overflow starts to
    ``(length, occurrence)``.
    """
    root = 0
    f = 0
    sv = root
    sm = 0
    entries = []
    long_map = {}
    lget = links.get

    def wa(v, wt):
        # ancestor of v with the minimal weight >= wt (weights = vdepth)
        while True:
            base = path_off[hp_path[v]]
            h = paths_flat[base]
            if vdepth[h] >= wt:
                pp = vparent[h]
                if pp >= 0 and vdepth[pp] >= wt:
                    v = pp
                    continue
            lo, hi = 0, hp_pos[v]
            while lo < hi:
                mid = (lo + hi) >> 1
                if vdepth[paths_flat[base + mid]] >= wt:
                    hi = mid
                else:
                    lo = mid + 1
            return paths_flat[base + lo]

    t = p
    while t <= bend:
        z = 0
        cur = root
        while True:
            # advance the scan so every position < t + z has been processed
            stop = t + z - 1
            while f <= stop:
                c = codes[f]
                v, m = sv, sm
                while True:
                    rk = lget(v * sigma + c, -1)
                    if rk >= 0:
                        m += 1
                        if m > tausq:
                            m = tausq
                        v = wa(leaf_by_rank[psi[rk]], m)
                        break
                    if v == root:
                        m = 0
                        break
                    v = vparent[v]
                    m = vdepth[v]
                sv, sm = v, m
                if m > 0:
                    u = vparent[v]
                    marked[u] = 1
                    w = u
                    while w >= 0 and not subfl[w]:
                        subfl[w] = 1
                        w = vparent[w]
                    dlt = vdepth[v] - m
                    if dlt < mlen[v]:
                        mlen[v] = dlt
                f += 1
            if z >= tausq:
                zl, occ = resolve_long(t)
                long_map[t] = (zl, occ)
                z = zl
                break
            if t + z >= n:
                break
            c = codes[t + z]
            rk = lget(cur * sigma + c, -1)
            if rk < 0:
                break
            w = wa(leaf_by_rank[psi[rk]], z + 1)
            if not subfl[w]:
                u = vparent[w]
                if not marked[u] or vdepth[w] - mlen[w] <= z:
                    break
            cur = w
            z += 1
        if z == 0:
            z = 1
        entries.append((t, z))
        t += z
    return entries, long_map


# ---------------------------------------------------------------------------
# multi-pattern first-occurrence scan (classical Aho-Corasick)
# ---------------------------------------------------------------------------


def ac_scan(codes, limit: int, sigma: int, goto, fail, tchain, first_end):
    """Feed ``codes[0..limit)`` through the automaton, recording the first end
    position of every pattern.  ``tchain[s]`` is the nearest terminal at or
    above ``s`` along failure links (-1 if none)."""
    gget = goto.get
    st = 0
    for e in range(limit):
        c = codes[e]
        while True:
            nxt = gget(st * sigma + c, -1)
            if nxt >= 0:
                st = nxt
                break
            if st == 0:
                break
            st = fail[st]
        tl = tchain[st]
        while tl >= 0 and first_end[tl] < 0:
            first_end[tl] = e
            tl = tchain[fail[tl]]
    return None
