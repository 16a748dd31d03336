"""Pure-Python kernels: the fallback used when the compiled module is absent.

Every function here has a twin in ``_ckernels.pyx`` with the same signature
and bit-identical results. Graphs arrive in CSR form (``indptr``,
``indices``) over vertex indices ``0..n-1``.
"""

from itertools import product

MASK = (1 << 64) - 1


def _mix(x):
    # splitmix64 finalizer, applied to non-negative color labels
    z = (x + 0x9E3779B97F4A7C15) & MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
    return z ^ (z >> 31)


def refine(indptr, indices, colors):
    """Stable color refinement with canonical labels.

    Each round replaces a vertex color by the rank of the pair
    (color, hash of the multiset of neighbor colors). Ranks are taken in
    sorted order, so the labels only depend on the isomorphism class of the
    colored graph. A hash collision can only merge cells, which keeps every
    use of the result sound.
    """
    n = len(colors)
    distinct = sorted(set(colors))
    rank = {c: i for i, c in enumerate(distinct)}
    c = [rank[x] for x in colors]
    ncls = len(distinct)
    while True:
        mixed = [_mix(x) for x in c]
        keys = []
        for v in range(n):
            acc = 0
            for j in range(indptr[v], indptr[v + 1]):
                acc += mixed[indices[j]]
            keys.append((c[v], acc & MASK))
        distinct = sorted(set(keys))
        if len(distinct) == ncls:
            return c
        rank = {k: i for i, k in enumerate(distinct)}
        c = [rank[k] for k in keys]
        ncls = len(distinct)


def search(indptr, indices, colp, colq, order, proj, cap):
    """Backtracking search for color-respecting isomorphisms.

    Finds bijections ``img`` with ``colq[img[x]] == colp[x]`` that preserve
    adjacency and non-adjacency. Vertices are assigned in ``order``; a
    vertex with an earlier neighbor (its anchor) only tries neighbors of
    the anchor's image. With ``proj < n`` each distinct assignment of the
    first ``proj`` vertices of ``order`` is reported once, together with
    one full extension. Stops after ``cap`` solutions.
    """
    n = len(order)
    if n == 0:
        return [()]
    rank = [0] * n
    for i, x in enumerate(order):
        rank[x] = i
    anchor = [-1] * n
    for x in range(n):
        best = -1
        for j in range(indptr[x], indptr[x + 1]):
            z = indices[j]
            if rank[z] < rank[x] and (best < 0 or rank[z] < rank[best]):
                best = z
        anchor[x] = best

    cells = {}
    for y in range(n):
        cells.setdefault(colq[y], []).append(y)

    img = [-1] * n
    used = [False] * n
    stamp = [0] * n
    token = 0
    cands = [None] * n
    cur = [0] * n
    out = []

    def candidates(i):
        x = order[i]
        a = anchor[x]
        if a >= 0:
            ya = img[a]
            return indices[indptr[ya]:indptr[ya + 1]]
        return cells.get(colp[x], ())

    i = 0
    cands[0] = candidates(0)
    cur[0] = 0
    while i >= 0:
        x = order[i]
        cx = colp[x]
        lst = cands[i]
        found = False
        while cur[i] < len(lst):
            y = lst[cur[i]]
            cur[i] += 1
            if used[y] or colq[y] != cx:
                continue
            token += 1
            cnty = 0
            for j in range(indptr[y], indptr[y + 1]):
                u = indices[j]
                stamp[u] = token
                if used[u]:
                    cnty += 1
            cntx = 0
            ok = True
            for j in range(indptr[x], indptr[x + 1]):
                z = indices[j]
                if rank[z] < i:
                    cntx += 1
                    if stamp[img[z]] != token:
                        ok = False
                        break
            if ok and cntx == cnty:
                img[x] = y
                used[y] = True
                found = True
                break
        if not found:
            i -= 1
            if i >= 0:
                z = order[i]
                used[img[z]] = False
                img[z] = -1
            continue
        if i == n - 1:
            out.append(tuple(img))
            if len(out) >= cap:
                break
            target = min(proj, n) - 1
            while i >= target:
                z = order[i]
                used[img[z]] = False
                img[z] = -1
                i -= 1
            i = target
            continue
        i += 1
        cands[i] = candidates(i)
        cur[i] = 0
    return out


def count_preserved(images, d):
    """Number of the d**n labelings ``c`` with ``c[images[v]] == c[v]``."""
    n = len(images)
    total = 0
    for c in product(range(d), repeat=n):
        for v in range(n):
            if c[images[v]] != c[v]:
                break
        else:
            total += 1
    return total


def preservation_table(perms, n, d):
    """For every labeling in mixed-radix order, how many of ``perms`` keep it.

    Labeling number ``t`` gives vertex ``v`` the digit of ``t`` of weight
    ``d**(n-1-v)`` (vertex 0 most significant).
    """
    table = []
    for c in product(range(d), repeat=n):
        hits = 0
        for p in perms:
            for v in range(n):
                if c[p[v]] != c[v]:
                    break
            else:
                hits += 1
        table.append(hits)
    return table
