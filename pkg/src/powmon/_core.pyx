# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels, the typed twin of powmon._pure.

Semantics must match _pure exactly: same results, same candidate visit
order, same node counts.  tests/test_kernels.py compares the two on
random inputs; the benchmark script compares their speed.
"""

from libc.stdlib cimport free, malloc

from . import _pure


cdef int* _copy_table(object table, Py_ssize_t size) except NULL:
    cdef int* buf = <int*> malloc(size * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(size):
        buf[i] = table[i]
    return buf


def assoc_witness(table, n):
    """Index of the first failing triple, encoded (a*n + b)*n + c, or -1."""
    cdef int cn = n
    cdef int* t = _copy_table(table, cn * cn)
    cdef int a, b, c, an, bn, abn
    try:
        for a in range(cn):
            an = a * cn
            for b in range(cn):
                abn = t[an + b] * cn
                bn = b * cn
                for c in range(cn):
                    if t[abn + c] != t[an + t[bn + c]]:
                        return (an + b) * cn + c
        return -1
    finally:
        free(t)


def setwise_product(table, n, x, y):
    """Bitmask of {a*b : a in x, b in y} for bitmask subsets x, y."""
    if n > 64:
        return _pure.setwise_product(table, n, x, y)
    cdef int cn = n
    cdef int* t = _copy_table(table, cn * cn)
    cdef unsigned long long cx = x, cy = y, out = 0
    cdef int a, b, an
    try:
        for a in range(cn):
            if not (cx >> a) & 1:
                continue
            an = a * cn
            for b in range(cn):
                if (cy >> b) & 1:
                    out |= 1ULL << t[an + b]
        return out
    finally:
        free(t)


def power_table(table, n, masks):
    """Carrier table over the given subset masks, flat row-major."""
    if n > 16:
        return _pure.power_table(table, n, masks)
    cdef int cn = n
    cdef Py_ssize_t m = len(masks), i, j
    cdef int* t = _copy_table(table, cn * cn)
    cdef unsigned int* cmasks = NULL
    cdef int* pos = NULL
    cdef unsigned int prod, xi
    cdef int a, b, an
    cdef list out = [0] * (m * m)
    try:
        cmasks = <unsigned int*> malloc(m * sizeof(unsigned int))
        pos = <int*> malloc((1 << cn) * sizeof(int))
        if cmasks == NULL or pos == NULL:
            raise MemoryError()
        for i in range(m):
            cmasks[i] = masks[i]
            pos[cmasks[i]] = <int> i
        for i in range(m):
            xi = cmasks[i]
            for j in range(m):
                prod = 0
                for a in range(cn):
                    if not (xi >> a) & 1:
                        continue
                    an = a * cn
                    for b in range(cn):
                        if (cmasks[j] >> b) & 1:
                            prod |= 1u << t[an + b]
                out[i * m + j] = pos[prod]
        return out
    finally:
        free(t)
        free(cmasks)
        free(pos)


def iso_search(t1, t2, n, c1, c2, var_order, budget, max_results):
    """Backtracking search for color-respecting isomorphisms t1 -> t2.

    Iterative version of _pure.iso_search; see there for the contract.
    """
    cdef int cn = n
    cdef long long cbudget = budget, cmax = max_results, nodes = 0
    cdef int* ct1 = NULL
    cdef int* ct2 = NULL
    cdef int* cc1 = NULL
    cdef int* cc2 = NULL
    cdef int* order = NULL
    cdef int* fwd = NULL
    cdef char* used = NULL
    cdef int* assigned = NULL
    cdef int* stk_x = NULL
    cdef int* stk_y = NULL
    cdef int* f_pos = NULL
    cdef int* f_b = NULL
    cdef int* f_mark = NULL
    cdef int alen = 0, depth = 0, sp, mark, i, p, a, b, x, y, fx, fp, xn, yn
    cdef bint exhausted = True, conflict
    cdef int stk_cap = 2 * cn * cn + 4 * cn + 8
    cdef list results = []

    # mode constants for the explicit search automaton
    cdef int ENTER = 0, NEXT = 1, POP = 2
    cdef int mode = ENTER

    try:
        ct1 = _copy_table(t1, cn * cn)
        ct2 = _copy_table(t2, cn * cn)
        cc1 = _copy_table(c1, cn)
        cc2 = _copy_table(c2, cn)
        order = _copy_table(var_order, cn)
        fwd = <int*> malloc(cn * sizeof(int))
        used = <char*> malloc(cn)
        assigned = <int*> malloc(cn * sizeof(int))
        stk_x = <int*> malloc(stk_cap * sizeof(int))
        stk_y = <int*> malloc(stk_cap * sizeof(int))
        f_pos = <int*> malloc((cn + 2) * sizeof(int))
        f_b = <int*> malloc((cn + 2) * sizeof(int))
        f_mark = <int*> malloc((cn + 2) * sizeof(int))
        if (fwd == NULL or used == NULL or assigned == NULL or stk_x == NULL
                or stk_y == NULL or f_pos == NULL or f_b == NULL or f_mark == NULL):
            raise MemoryError()
        for i in range(cn):
            fwd[i] = -1
            used[i] = 0
        f_pos[0] = 0

        while True:
            if mode == ENTER:
                p = f_pos[depth]
                while p < cn and fwd[order[p]] != -1:
                    p += 1
                f_pos[depth] = p
                if p == cn:
                    results.append([fwd[i] for i in range(cn)])
                    if len(results) >= cmax:
                        break
                    mode = POP
                    continue
                f_b[depth] = -1
                mode = NEXT
            elif mode == NEXT:
                a = order[f_pos[depth]]
                b = f_b[depth] + 1
                while b < cn and (used[b] or cc2[b] != cc1[a]):
                    b += 1
                if b == cn:
                    mode = POP
                    continue
                f_b[depth] = b
                nodes += 1
                if nodes > cbudget:
                    exhausted = False
                    break
                mark = alen
                f_mark[depth] = mark
                # close(a, b): assign plus all forced consequences
                conflict = False
                sp = 0
                stk_x[sp] = a
                stk_y[sp] = b
                sp += 1
                while sp > 0:
                    sp -= 1
                    x = stk_x[sp]
                    y = stk_y[sp]
                    fx = fwd[x]
                    if fx != -1:
                        if fx != y:
                            conflict = True
                            break
                        continue
                    if used[y] or cc1[x] != cc2[y]:
                        conflict = True
                        break
                    fwd[x] = y
                    used[y] = 1
                    assigned[alen] = x
                    alen += 1
                    xn = x * cn
                    yn = y * cn
                    for i in range(alen):
                        p = assigned[i]
                        fp = fwd[p]
                        stk_x[sp] = ct1[xn + p]
                        stk_y[sp] = ct2[yn + fp]
                        sp += 1
                        stk_x[sp] = ct1[p * cn + x]
                        stk_y[sp] = ct2[fp * cn + y]
                        sp += 1
                if conflict:
                    while alen > mark:
                        alen -= 1
                        x = assigned[alen]
                        used[fwd[x]] = 0
                        fwd[x] = -1
                    # stay in NEXT: try the following candidate
                else:
                    depth += 1
                    f_pos[depth] = f_pos[depth - 1] + 1
                    mode = ENTER
            else:  # POP: this frame is done, return False to the parent
                if depth == 0:
                    break
                depth -= 1
                mark = f_mark[depth]
                while alen > mark:
                    alen -= 1
                    x = assigned[alen]
                    used[fwd[x]] = 0
                    fwd[x] = -1
                mode = NEXT
        return exhausted, results, nodes
    finally:
        free(ct1); free(ct2); free(cc1); free(cc2); free(order)
        free(fwd); free(used); free(assigned)
        free(stk_x); free(stk_y); free(f_pos); free(f_b); free(f_mark)


def enumerate_tables(n):
    """All Cayley tables of order-n monoids with identity fixed at 0.

    Same growing-square backtracking as _pure.enumerate_tables.
    """
    if n == 1:
        return [(0,)]
    cdef int cn = n
    cdef int* t = <int*> malloc(cn * cn * sizeof(int))
    cdef int* cell_p = <int*> malloc(cn * cn * sizeof(int))
    cdef int* cell_q = <int*> malloc(cn * cn * sizeof(int))
    cdef list out = []
    if t == NULL or cell_p == NULL or cell_q == NULL:
        free(t); free(cell_p); free(cell_q)
        raise MemoryError()
    cdef int i, m, a, b, ncells = 0
    try:
        for i in range(cn * cn):
            t[i] = -1
        for i in range(cn):
            t[i] = i
            t[i * cn] = i
        for m in range(1, cn):
            for b in range(1, m + 1):
                cell_p[ncells] = m
                cell_q[ncells] = b
                ncells += 1
            for a in range(1, m):
                cell_p[ncells] = a
                cell_q[ncells] = m
                ncells += 1
        _enum_rec(t, cell_p, cell_q, cn, ncells, 0, out)
        return out
    finally:
        free(t); free(cell_p); free(cell_q)


cdef void _enum_rec(int* t, int* cell_p, int* cell_q, int cn, int ncells,
                    int d, list out):
    cdef int p, q, idx, v, cidx
    if d == ncells:
        out.append(tuple([t[cidx] for cidx in range(cn * cn)]))
        return
    p = cell_p[d]
    q = cell_q[d]
    idx = p * cn + q
    for v in range(cn):
        t[idx] = v
        if _consistent(t, cn, p, q, v):
            _enum_rec(t, cell_p, cell_q, cn, ncells, d + 1, out)
    t[idx] = -1


cdef bint _consistent(int* t, int cn, int p, int q, int v):
    # check every associativity triple whose last unknown cell was (p, q)
    cdef int pn = p * cn, qn = q * cn, vn = v * cn
    cdef int z, x, y, xn, w, vz, qz, l, r, xp, yq, px
    for z in range(cn):
        vz = t[vn + z]
        if vz >= 0:
            qz = t[qn + z]
            if qz >= 0:
                l = t[pn + qz]
                if l >= 0 and l != vz:
                    return False
    for x in range(cn):
        xp = t[x * cn + p]
        if xp >= 0:
            l = t[xp * cn + q]
            r = t[x * cn + v]
            if l >= 0 and r >= 0 and l != r:
                return False
    for x in range(cn):
        xn = x * cn
        for y in range(cn):
            w = t[xn + y]
            if w == p:
                yq = t[y * cn + q]
                if yq >= 0:
                    r = t[xn + yq]
                    if r >= 0 and r != v:
                        return False
            if w == q:
                px = t[pn + x]
                if px >= 0:
                    l = t[px * cn + y]
                    if l >= 0 and l != v:
                        return False
    return True
