"""Pure-Python kernels for the hot loops.

A compiled Cython twin of this module (powmon._core) may be selected at
import time by powmon.kernels.  Both backends must agree exactly: same
results, same visit order, same node counts.  Tables are flat row-major
lists of length n*n; subsets are int bitmasks over element indices.
"""


def assoc_witness(table, n):
    """Index of the first failing triple, encoded (a*n + b)*n + c, or -1.

    For large tables a vectorized pass is used when numpy is importable;
    the plain triple loop is the semantic reference.
    """
    if n >= 96:
        try:
            import numpy as np
        except ImportError:
            pass
        else:
            t = np.asarray(table, dtype=np.int64).reshape(n, n)
            for a in range(n):
                lhs = t[t[a], :]     # (a*b)*c indexed by (b, c)
                rhs = t[a, t]        # a*(b*c) indexed by (b, c)
                if not np.array_equal(lhs, rhs):
                    b, c = map(int, np.argwhere(lhs != rhs)[0])
                    return (a * n + b) * n + c
            return -1
    for a in range(n):
        an = a * n
        for b in range(n):
            abn = table[an + b] * n
            bn = b * n
            for c in range(n):
                if table[abn + c] != table[an + table[bn + c]]:
                    return (an + b) * n + c
    return -1


def setwise_product(table, n, x, y):
    """Bitmask of {a*b : a in x, b in y} for bitmask subsets x, y."""
    out = 0
    xi = x
    while xi:
        lsb = xi & -xi
        xi ^= lsb
        an = (lsb.bit_length() - 1) * n
        yi = y
        while yi:
            lsb = yi & -yi
            yi ^= lsb
            out |= 1 << table[an + lsb.bit_length() - 1]
    return out


def power_table(table, n, masks):
    """Carrier table over the given subset masks, flat row-major.

    Entry (i, j) is the position in masks of masks[i]*masks[j]; masks must
    be closed under setwise product.
    """
    m = len(masks)
    pos = {mask: i for i, mask in enumerate(masks)}
    out = [0] * (m * m)
    for i in range(m):
        xi = masks[i]
        row = i * m
        for j in range(m):
            out[row + j] = pos[setwise_product(table, n, xi, masks[j])]
    return out


def iso_search(t1, t2, n, c1, c2, var_order, budget, max_results):
    """Backtracking search for color-respecting isomorphisms t1 -> t2.

    c1, c2 assign each element a color id; a map may only send an element
    to one of the same color (the caller guarantees colors are isomorphism
    invariants).  Assigning a -> b forces map[x*y] = map[x]*map[y] for all
    settled pairs, so contradictions surface immediately.

    Returns (exhausted, maps, nodes): exhausted is False iff the node
    budget stopped the search early; maps holds up to max_results complete
    bijections in deterministic (smallest-image-first) order.
    """
    fwd = [-1] * n
    used = [False] * n
    assigned = []
    results = []
    nodes = 0
    exhausted = True

    def rollback(mark):
        while len(assigned) > mark:
            x = assigned.pop()
            used[fwd[x]] = False
            fwd[x] = -1

    def close(a, b):
        # Assign a -> b plus every forced consequence; -1 on conflict.
        mark = len(assigned)
        stack = [(a, b)]
        while stack:
            x, y = stack.pop()
            fx = fwd[x]
            if fx != -1:
                if fx != y:
                    rollback(mark)
                    return -1
                continue
            if used[y] or c1[x] != c2[y]:
                rollback(mark)
                return -1
            fwd[x] = y
            used[y] = True
            assigned.append(x)
            xn = x * n
            yn = y * n
            for p in assigned:
                fp = fwd[p]
                stack.append((t1[xn + p], t2[yn + fp]))
                stack.append((t1[p * n + x], t2[fp * n + y]))
        return len(assigned) - mark

    def rec(pos):
        nonlocal nodes, exhausted
        while pos < n and fwd[var_order[pos]] != -1:
            pos += 1
        if pos == n:
            results.append(list(fwd))
            return len(results) >= max_results
        a = var_order[pos]
        ca = c1[a]
        for b in range(n):
            if used[b] or c2[b] != ca:
                continue
            nodes += 1
            if nodes > budget:
                exhausted = False
                return True
            mark = len(assigned)
            if close(a, b) >= 0:
                if rec(pos + 1):
                    return True
                rollback(mark)
        return False

    rec(0)
    return exhausted, results, nodes


def enumerate_tables(n):
    """All Cayley tables of order-n monoids with identity fixed at 0.

    Backtracks over the (n-1)^2 free cells in growing-square order;
    every partial assignment is pruned against the associativity triples
    it completes.  Output is raw (not deduplicated by isomorphism), as a
    list of flat tuples in deterministic order.
    """
    t = [-1] * (n * n)
    for i in range(n):
        t[i] = i
        t[i * n] = i

    # complete the top-left (m+1)x(m+1) block before moving on
    cells = []
    for m in range(1, n):
        cells.extend((m, b) for b in range(1, m + 1))
        cells.extend((a, m) for a in range(1, m))

    def consistent(p, q, v):
        # check every triple whose last unknown cell was (p, q)
        pn = p * n
        qn = q * n
        vn = v * n
        for z in range(n):
            vz = t[vn + z]
            if vz >= 0:
                qz = t[qn + z]
                if qz >= 0:
                    l = t[pn + qz]
                    if l >= 0 and l != vz:
                        return False
        for x in range(n):
            xp = t[x * n + p]
            if xp >= 0:
                l = t[xp * n + q]
                r = t[x * n + v]
                if l >= 0 and r >= 0 and l != r:
                    return False
        for x in range(n):
            xn = x * n
            for y in range(n):
                w = t[xn + y]
                if w == p:
                    yq = t[y * n + q]
                    if yq >= 0:
                        r = t[xn + yq]
                        if r >= 0 and r != v:
                            return False
                if w == q:
                    px = t[pn + x]
                    if px >= 0:
                        l = t[px * n + y]
                        if l >= 0 and l != v:
                            return False
        return True

    out = []
    last = len(cells)

    def rec(d):
        if d == last:
            out.append(tuple(t))
            return
        p, q = cells[d]
        idx = p * n + q
        for v in range(n):
            t[idx] = v
            if consistent(p, q, v):
                rec(d + 1)
        t[idx] = -1

    if n == 1:
        return [(0,)]
    rec(0)
    return out
