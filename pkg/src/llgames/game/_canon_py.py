"""Pure-Python canonical codes for labelled trees (AHU style).

``encode`` roots the tree at ``root`` and returns an int that identifies
the rooted, vertex- and edge-labelled tree up to isomorphism.  Codes are
interned in ``table`` (a dict), so they are only comparable within one
table.
"""


def encode(n, root, skip, vlab, src, dst, lab, table):
    adj = [[] for _ in range(n)]
    for k in range(len(src)):
        s, d, l = src[k], dst[k], lab[k]
        adj[s].append((d, 1, l))
        adj[d].append((s, 0, l))
    parent = [-1] * n
    order = [root]
    seen = [False] * n
    seen[root] = True
    if skip >= 0:
        seen[skip] = True
    i = 0
    while i < len(order):
        x = order[i]
        i += 1
        for y, _, _ in adj[x]:
            if not seen[y]:
                seen[y] = True
                parent[y] = x
                order.append(y)
    code = [0] * n
    for x in reversed(order):
        kids = []
        for y, direction, l in adj[x]:
            if parent[y] == x and y != skip:
                kids.append((direction, l, code[y]))
        kids.sort()
        key = (vlab[x], tuple(kids))
        c = table.get(key)
        if c is None:
            c = len(table)
            table[key] = c
        code[x] = c
    return code[root]


def tree_code(vertices, labels, edges, root, skip, table, vlabels):
    index = {v: k for k, v in enumerate(vertices)}
    vl = []
    for v in vertices:
        lv = labels[v]
        got = vlabels.get(lv)
        if got is None:
            got = vlabels[lv] = len(vlabels)
        vl.append(got)
    src = [index[e[0]] for e in edges]
    dst = [index[e[1]] for e in edges]
    lab = [e[2].uid for e in edges]
    return encode(len(vertices), index[root], -1 if skip is None else index[skip], vl, src, dst, lab, table)
