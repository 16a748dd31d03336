# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Mirrors ``_pykernels`` function for function."""

import numpy as np

from libc.stdint cimport int64_t, uint64_t
from libc.stdlib cimport calloc, free, malloc


cdef inline uint64_t _mix(uint64_t x) nogil:
    cdef uint64_t z = x + 0x9E3779B97F4A7C15ULL
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL
    return z ^ (z >> 31)


def refine(const int64_t[:] indptr, const int64_t[:] indices, colors):
    cdef Py_ssize_t n = len(colors)
    distinct = sorted(set(colors))
    rank = {lab: i for i, lab in enumerate(distinct)}
    cdef int64_t[:] c = np.array([rank[x] for x in colors], dtype=np.int64)
    cdef Py_ssize_t ncls = len(distinct)
    cdef uint64_t[:] mixed = np.empty(n, dtype=np.uint64)
    cdef uint64_t[:] acc = np.empty(n, dtype=np.uint64)
    cdef int64_t[:] newc = np.empty(n, dtype=np.int64)
    cdef int64_t[:] perm
    cdef Py_ssize_t v, j, k, cnt
    cdef uint64_t a
    cdef int64_t pc
    cdef uint64_t pa
    while True:
        for v in range(n):
            mixed[v] = _mix(<uint64_t>c[v])
        for v in range(n):
            a = 0
            for j in range(indptr[v], indptr[v + 1]):
                a += mixed[indices[j]]
            acc[v] = a
        perm = np.lexsort((np.asarray(acc), np.asarray(c))).astype(np.int64)
        cnt = 0
        for k in range(n):
            v = perm[k]
            if k == 0 or c[v] != pc or acc[v] != pa:
                if k > 0:
                    cnt += 1
                pc = c[v]
                pa = acc[v]
            newc[v] = cnt
        if n > 0:
            cnt += 1
        if cnt == ncls:
            return [int(x) for x in c]
        c[:] = newc
        ncls = cnt


def search(const int64_t[:] indptr, const int64_t[:] indices,
           const int64_t[:] colp, const int64_t[:] colq,
           const int64_t[:] order, Py_ssize_t proj, Py_ssize_t cap):
    cdef Py_ssize_t n = order.shape[0]
    if n == 0:
        return [()]
    cdef Py_ssize_t i, j, x, y, z, u, a, best, target, ncol, lab
    cdef Py_ssize_t cntx, cnty
    cdef int64_t token = 0
    cdef bint found, ok
    cdef int64_t *rank = <int64_t *> malloc(n * sizeof(int64_t))
    cdef int64_t *anchor = <int64_t *> malloc(n * sizeof(int64_t))
    cdef int64_t *img = <int64_t *> malloc(n * sizeof(int64_t))
    cdef char *used = <char *> calloc(n, sizeof(char))
    cdef int64_t *stamp = <int64_t *> calloc(n, sizeof(int64_t))
    cdef int64_t *cbeg = <int64_t *> malloc(n * sizeof(int64_t))
    cdef int64_t *cend = <int64_t *> malloc(n * sizeof(int64_t))
    cdef int64_t *cur = <int64_t *> malloc(n * sizeof(int64_t))
    cdef int64_t *isnb = <int64_t *> malloc(n * sizeof(int64_t))
    # cells of colq: members listed by label, then by vertex index
    ncol = 0
    for y in range(n):
        if colq[y] + 1 > ncol:
            ncol = colq[y] + 1
    for y in range(n):
        if colp[y] + 1 > ncol:
            ncol = colp[y] + 1
    cdef int64_t *cstart = <int64_t *> calloc(ncol + 1, sizeof(int64_t))
    cdef int64_t *cmem = <int64_t *> malloc(n * sizeof(int64_t))
    cdef int64_t *cfill = <int64_t *> calloc(ncol + 1, sizeof(int64_t))
    out = []
    try:
        for i in range(n):
            rank[order[i]] = i
            img[i] = -1
        for x in range(n):
            best = -1
            for j in range(indptr[x], indptr[x + 1]):
                z = indices[j]
                if rank[z] < rank[x] and (best < 0 or rank[z] < rank[best]):
                    best = z
            anchor[x] = best
        for y in range(n):
            cstart[colq[y] + 1] += 1
        for lab in range(ncol):
            cstart[lab + 1] += cstart[lab]
        for y in range(n):
            lab = colq[y]
            cmem[cstart[lab] + cfill[lab]] = y
            cfill[lab] += 1

        i = 0
        x = order[0]
        cbeg[0] = cstart[colp[x]]
        cend[0] = cstart[colp[x] + 1]
        isnb[0] = 0
        cur[0] = cbeg[0]
        while i >= 0:
            x = order[i]
            found = False
            while cur[i] < cend[i]:
                if isnb[i]:
                    y = indices[cur[i]]
                else:
                    y = cmem[cur[i]]
                cur[i] += 1
                if used[y] or colq[y] != colp[x]:
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
                    used[y] = 1
                    found = True
                    break
            if not found:
                i -= 1
                if i >= 0:
                    z = order[i]
                    used[img[z]] = 0
                    img[z] = -1
                continue
            if i == n - 1:
                out.append(tuple([img[z] for z in range(n)]))
                if len(out) >= cap:
                    break
                target = (proj if proj < n else n) - 1
                while i >= target:
                    z = order[i]
                    used[img[z]] = 0
                    img[z] = -1
                    i -= 1
                i = target
                continue
            i += 1
            x = order[i]
            a = anchor[x]
            if a >= 0:
                isnb[i] = 1
                cbeg[i] = indptr[img[a]]
                cend[i] = indptr[img[a] + 1]
            else:
                isnb[i] = 0
                cbeg[i] = cstart[colp[x]]
                cend[i] = cstart[colp[x] + 1]
            cur[i] = cbeg[i]
    finally:
        free(rank)
        free(anchor)
        free(img)
        free(used)
        free(stamp)
        free(cbeg)
        free(cend)
        free(cur)
        free(isnb)
        free(cstart)
        free(cmem)
        free(cfill)
    return out


def count_preserved(const int64_t[:] images, int d):
    cdef Py_ssize_t n = images.shape[0]
    cdef Py_ssize_t v, pos
    cdef long long total = 0
    cdef bint keep
    cdef int64_t *c = <int64_t *> calloc(n if n > 0 else 1, sizeof(int64_t))
    try:
        while True:
            keep = True
            for v in range(n):
                if c[images[v]] != c[v]:
                    keep = False
                    break
            if keep:
                total += 1
            # odometer, vertex n-1 least significant
            pos = n - 1
            while pos >= 0:
                c[pos] += 1
                if c[pos] < d:
                    break
                c[pos] = 0
                pos -= 1
            if pos < 0:
                break
    finally:
        free(c)
    return total


def preservation_table(const int64_t[:, :] perms, Py_ssize_t n, int d):
    cdef Py_ssize_t m = perms.shape[0]
    cdef Py_ssize_t v, pos, p, t = 0
    cdef long long hits
    cdef bint keep
    total = 1
    for v in range(n):
        total *= d
    cdef int64_t[:] table = np.zeros(total, dtype=np.int64)
    cdef int64_t *c = <int64_t *> calloc(n if n > 0 else 1, sizeof(int64_t))
    try:
        while True:
            hits = 0
            for p in range(m):
                keep = True
                for v in range(n):
                    if c[perms[p, v]] != c[v]:
                        keep = False
                        break
                if keep:
                    hits += 1
            table[t] = hits
            t += 1
            pos = n - 1
            while pos >= 0:
                c[pos] += 1
                if c[pos] < d:
                    break
                c[pos] = 0
                pos -= 1
            if pos < 0:
                break
    finally:
        free(c)
    return [int(h) for h in table]
