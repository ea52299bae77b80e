"""Isomorphism search between finite monoids.

The search backtracks over element bijections, constrained by a joint
partition refinement: elements may only map within matching refinement
classes, and every assignment propagates the products it forces.  Classes
start from per-element invariants (order, idempotency, cancellativity,
unit status) and are refined by the coloring of row and column patterns,
so most non-isomorphic pairs are rejected before any search.

"Proven absent" and "budget exceeded" are distinct outcomes: absence is
only reported after an exhausted search (or an invariant mismatch, which
is a proof).
"""

from collections import Counter

from . import kernels
from .errors import SearchBudgetExceeded

DEFAULT_BUDGET = 5_000_000


class IsoWitness:
    """A certified isomorphism between two finite monoids.

    The map is re-validated on construction, independently of whatever
    search produced it: bijection, identity to identity, and
    map[a*b] == map[a]*map[b] for all pairs.
    """

    def __init__(self, source, target, mapping):
        mapping = tuple(mapping)
        n = source.n
        if target.n != n or len(mapping) != n:
            raise ValueError("witness size mismatch")
        if sorted(mapping) != list(range(n)):
            raise ValueError("witness map is not a bijection")
        if mapping[source.identity] != target.identity:
            raise ValueError("witness does not map identity to identity")
        ts, tt = source.table, target.table
        for a in range(n):
            ma = mapping[a]
            for b in range(n):
                if mapping[ts[a][b]] != tt[ma][mapping[b]]:
                    raise ValueError(f"witness is not a homomorphism at ({a}, {b})")
        self.source = source
        self.target = target
        self.map = mapping

    def apply(self, a):
        return self.map[a]

    def inverse(self):
        inv = [0] * len(self.map)
        for a, b in enumerate(self.map):
            inv[b] = a
        return IsoWitness(self.target, self.source, inv)

    def is_identity(self):
        return self.source is self.target and all(i == v for i, v in enumerate(self.map))

    def __repr__(self):
        return f"IsoWitness({self.source.name} -> {self.target.name}, {self.map})"


def element_invariants(m):
    """Label-invariant vector per element, the seed partition for refinement."""
    orders = m.orders()
    units = set(m.units())
    canc = set(m.cancellative_elements())
    out = []
    for a in range(m.n):
        row = m.table[a]
        col = tuple(r[a] for r in m.table)
        out.append((
            orders[a],
            row[a] == a,
            a in canc,
            a in units,
            len(set(row)),
            len(set(col)),
        ))
    return out


def refine_colors(monoids):
    """Jointly refine element colors across several monoids.

    Returns one color list per monoid; equal ids mean "not yet
    distinguished", comparable across the monoids because the id pool is
    shared.  Rounds split classes by the colors of products until stable.
    """
    pool = {}
    def intern(sig):
        if sig not in pool:
            pool[sig] = len(pool)
        return pool[sig]

    colors = [[intern(sig) for sig in element_invariants(m)] for m in monoids]
    total = len(pool)
    while True:
        pool.clear()
        nxt = []
        for m, cur in zip(monoids, colors):
            t = m.table
            rng = range(m.n)
            nxt.append([
                intern((cur[a], tuple(sorted((cur[b], cur[t[a][b]], cur[t[b][a]]) for b in rng))))
                for a in rng
            ])
        colors = nxt
        if len(pool) == total:
            return colors
        total = len(pool)


def _search(m1, m2, budget, max_results):
    if m1.n != m2.n:
        return True, [], 0
    c1, c2 = refine_colors([m1, m2])
    if Counter(c1) != Counter(c2):
        return True, [], 0
    sizes = Counter(c1)
    var_order = sorted(range(m1.n), key=lambda a: (sizes[c1[a]], a))
    return kernels.iso_search(m1.flat, m2.flat, m1.n, c1, c2, var_order, budget, max_results)


def find_isomorphism(m1, m2, budget=DEFAULT_BUDGET):
    """One isomorphism witness, or None once absence is proven.

    Raises SearchBudgetExceeded if the node budget ran out first; callers
    needing certainty (census experiments) must treat that as unknown.
    """
    exhausted, maps, nodes = _search(m1, m2, budget, 1)
    if maps:
        return IsoWitness(m1, m2, maps[0])
    if not exhausted:
        raise SearchBudgetExceeded(nodes)
    return None


def enumerate_isomorphisms(m1, m2, budget=DEFAULT_BUDGET, limit=None):
    """All isomorphisms m1 -> m2 (all automorphisms when m1 is m2).

    Raises SearchBudgetExceeded if the search could not be exhausted, so a
    returned list is always complete up to `limit`.
    """
    cap = limit if limit is not None else 1 << 62
    exhausted, maps, nodes = _search(m1, m2, budget, cap)
    if not exhausted:
        raise SearchBudgetExceeded(nodes)
    return [IsoWitness(m1, m2, mp) for mp in maps]
