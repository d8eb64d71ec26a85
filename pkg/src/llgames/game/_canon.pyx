# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled canonical codes; same contract as ``_canon_py.encode``."""

from libc.stdlib cimport malloc, free


def encode(int n, int root, int skip, list vlab, src, dst, lab, dict table):
    cdef int m = len(src)
    cdef int *deg = <int *> malloc((n + 1) * sizeof(int))
    cdef int *start = <int *> malloc((n + 1) * sizeof(int))
    cdef int *nb = <int *> malloc((2 * m + 1) * sizeof(int))
    cdef int *nd = <int *> malloc((2 * m + 1) * sizeof(int))
    cdef long *nl = <long *> malloc((2 * m + 1) * sizeof(long))
    cdef int *parent = <int *> malloc((n + 1) * sizeof(int))
    cdef int *order = <int *> malloc((n + 1) * sizeof(int))
    cdef long *code = <long *> malloc((n + 1) * sizeof(long))
    cdef char *seen = <char *> malloc((n + 1) * sizeof(char))
    cdef int k, s, d, x, y, head, tail, j, pos
    cdef long l, c
    try:
        for k in range(n + 1):
            deg[k] = 0
            seen[k] = 0
            parent[k] = -1
        for k in range(m):
            deg[<int> src[k]] += 1
            deg[<int> dst[k]] += 1
        pos = 0
        for k in range(n):
            start[k] = pos
            pos += deg[k]
            deg[k] = 0
        start[n] = pos
        for k in range(m):
            s = src[k]
            d = dst[k]
            l = lab[k]
            j = start[s] + deg[s]
            nb[j] = d
            nd[j] = 1
            nl[j] = l
            deg[s] += 1
            j = start[d] + deg[d]
            nb[j] = s
            nd[j] = 0
            nl[j] = l
            deg[d] += 1
        head = 0
        tail = 1
        order[0] = root
        seen[root] = 1
        if skip >= 0:
            seen[skip] = 1
        while head < tail:
            x = order[head]
            head += 1
            for j in range(start[x], start[x + 1]):
                y = nb[j]
                if not seen[y]:
                    seen[y] = 1
                    parent[y] = x
                    order[tail] = y
                    tail += 1
        for k in range(tail - 1, -1, -1):
            x = order[k]
            kids = []
            for j in range(start[x], start[x + 1]):
                y = nb[j]
                if parent[y] == x and y != skip:
                    kids.append((nd[j], nl[j], code[y]))
            kids.sort()
            key = (vlab[x], tuple(kids))
            got = table.get(key)
            if got is None:
                c = len(table)
                table[key] = c
            else:
                c = got
            code[x] = c
        return code[root]
    finally:
        free(deg)
        free(start)
        free(nb)
        free(nd)
        free(nl)
        free(parent)
        free(order)
        free(code)
        free(seen)


def tree_code(vertices, labels, edges, root, skip, dict table, dict vlabels):
    """Index the vertices and edges, then ``encode``; see ``canon.tree_code``."""
    cdef dict index = {}
    cdef int k = 0
    cdef list vl = []
    cdef list src = []
    cdef list dst = []
    cdef list lab = []
    for v in vertices:
        index[v] = k
        k += 1
        lv = labels[v]
        got = vlabels.get(lv)
        if got is None:
            got = len(vlabels)
            vlabels[lv] = got
        vl.append(got)
    for e in edges:
        src.append(index[e[0]])
        dst.append(index[e[1]])
        lab.append(e[2].uid)
    return encode(k, index[root], -1 if skip is None else index[skip], vl, src, dst, lab, table)
