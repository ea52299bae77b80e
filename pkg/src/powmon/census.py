"""Census of small monoids and groups, and the pairwise experiments.

Monoids are enumerated up to isomorphism by pruned backtracking over
Cayley tables with the identity fixed at index 0, then deduplicated by a
canonical key.  The group catalog is constructive (the classification of
groups of order <= 8 is classical), with deliberate isomorphic duplicates
kept as positive controls for the experiments.
"""

import time
from dataclasses import dataclass
from functools import lru_cache

from . import kernels
from .errors import SearchBudgetExceeded, SizeLimitExceeded
from .iso import DEFAULT_BUDGET, IsoWitness, element_invariants, find_isomorphism
from .monoid import FiniteMonoid
from .powerset import reduced_power_monoid
from .verify import cardinality_profile, extract_pullback, pullback_report

ENUMERATION_LIMIT = 5


@dataclass
class CensusEntry:
    monoid: FiniteMonoid
    canonical_key: bytes
    tags: dict
    control_of: str = None   # set on deliberate isomorphic catalog duplicates

    @property
    def name(self):
        return self.monoid.name


def _tags(m):
    return {
        "group": m.is_group(),
        "commutative": m.is_commutative(),
        "cancellative": m.is_cancellative(),
    }


def canonical_key(m):
    """Relabeling-invariant byte encoding of the Cayley table.

    Elements are partitioned by invariant vectors (the identity's class is
    always first since only it has order 1); candidate relabelings respect
    that partition, and the key is the lexicographically smallest
    relabeled table.  Two monoids get equal keys iff they are isomorphic.
    """
    from itertools import permutations, product

    n = m.n
    vecs = element_invariants(m)
    classes = {}
    for a in range(n):
        classes.setdefault(vecs[a], []).append(a)
    ordered = [classes[v] for v in sorted(classes)]
    best = None
    for choice in product(*(permutations(c) for c in ordered)):
        seq = [a for group in choice for a in group]
        pos = [0] * n
        for new, old in enumerate(seq):
            pos[old] = new
        flat = bytes(pos[m.table[a][b]] for a in seq for b in seq)
        if best is None or flat < best:
            best = flat
    return bytes([n]) + best


def _decode_key(key):
    n = key[0]
    flat = key[1:]
    return [list(flat[i * n:(i + 1) * n]) for i in range(n)]


@lru_cache(maxsize=None)
def enumerate_monoids(n):
    """All monoids of order n up to isomorphism, sorted by canonical key."""
    if n < 1:
        raise ValueError("order must be positive")
    if n > ENUMERATION_LIMIT:
        raise SizeLimitExceeded(f"monoid enumeration is limited to order {ENUMERATION_LIMIT}")
    keys = set()
    for flat in kernels.enumerate_tables(n):
        table = [list(flat[i * n:(i + 1) * n]) for i in range(n)]
        keys.add(canonical_key(FiniteMonoid(table)))
    out = []
    for idx, key in enumerate(sorted(keys)):
        m = FiniteMonoid(_decode_key(key), name=f"monoid{n}.{idx}")
        out.append(CensusEntry(m, key, _tags(m)))
    return out


def census_monoids(max_order):
    """Census entries of every order from 1 to max_order."""
    out = []
    for n in range(1, max_order + 1):
        out.extend(enumerate_monoids(n))
    return out


_CATALOG_SPECS = (
    (1, "cyclic 1", None),
    (2, "cyclic 2", None),
    (3, "cyclic 3", None),
    (4, "cyclic 4", None),
    (4, "klein", None),
    (5, "cyclic 5", None),
    (6, "cyclic 6", None),
    (6, "dihedral 3", None),
    (6, "direct_product(cyclic 2, cyclic 3)", "cyclic 6"),
    (7, "cyclic 7", None),
    (8, "cyclic 8", None),
    (8, "direct_product(cyclic 4, cyclic 2)", None),
    (8, "direct_product(cyclic 2, direct_product(cyclic 2, cyclic 2))", None),
    (8, "dihedral 4", None),
    (8, "quaternion8", None),
)


def groups_catalog(max_order, validate=True):
    """The standard groups of each order <= max_order (max 8).

    Entries tagged control_of are deliberate isomorphic duplicates (e.g.
    cyclic 2 x cyclic 3 alongside cyclic 6), kept so the experiments also
    confirm the easy direction of the biconditional.  With validate=True,
    non-control entries are checked pairwise non-isomorphic and every
    control is checked isomorphic to its target, by exhausted search.
    """
    if max_order > 8:
        raise SizeLimitExceeded("group catalog is limited to order 8")
    from .monoid import standard_group

    out = []
    for order, spec, control in _CATALOG_SPECS:
        if order > max_order:
            continue
        m = standard_group(spec)
        out.append(CensusEntry(m, canonical_key(m), _tags(m), control_of=control))
    if validate:
        canon = [e for e in out if e.control_of is None]
        for i in range(len(canon)):
            for j in range(i + 1, len(canon)):
                if find_isomorphism(canon[i].monoid, canon[j].monoid) is not None:
                    raise AssertionError(
                        f"catalog entries {canon[i].name} and {canon[j].name} are isomorphic")
        for e in out:
            if e.control_of is not None:
                target = next(c.monoid for c in canon if c.name == e.control_of)
                if find_isomorphism(e.monoid, target) is None:
                    raise AssertionError(f"control {e.name} is not isomorphic to {e.control_of}")
    return out


@dataclass
class PowerIsoResult:
    """Outcome of searching for an isomorphism of reduced power monoids."""
    status: str                 # "iso" | "absent" | "budget-exceeded"
    witness: IsoWitness = None
    pm_src: object = None
    pm_dst: object = None


def find_power_isomorphism(h, k, budget=DEFAULT_BUDGET):
    """Search P_fin,1(h) ~ P_fin,1(k); absence requires an exhausted search.

    Subset cardinality is deliberately not used as a search invariant
    (whether it is preserved is open); element order, idempotency and
    divisibility profiles of the carriers are.
    """
    pm_src = reduced_power_monoid(h)
    pm_dst = reduced_power_monoid(k)
    if pm_src.carrier is None or pm_dst.carrier is None:
        raise SizeLimitExceeded("power isomorphism search needs materialized carriers")
    try:
        w = find_isomorphism(pm_src.carrier, pm_dst.carrier, budget=budget)
    except SearchBudgetExceeded:
        return PowerIsoResult("budget-exceeded", pm_src=pm_src, pm_dst=pm_dst)
    if w is None:
        return PowerIsoResult("absent", pm_src=pm_src, pm_dst=pm_dst)
    return PowerIsoResult("iso", witness=w, pm_src=pm_src, pm_dst=pm_dst)


@dataclass
class ExperimentRecord:
    pair: tuple                 # (i, j) indices into the census
    names: tuple
    base_iso: str               # "yes" | "no" | "budget-exceeded"
    power_iso: str              # "yes" | "no" | "budget-exceeded"
    pullback_ok: bool = None    # None when there is no power iso to check
    cardinality_preserving: bool = None
    witness_map: tuple = None
    elapsed: float = 0.0

    def line(self):
        fmt = lambda v: "-" if v is None else (str(v).lower() if isinstance(v, bool) else str(v))
        return "\t".join((
            f"{self.pair[0]}:{self.pair[1]}", self.names[0], self.names[1],
            self.base_iso, self.power_iso, fmt(self.pullback_ok),
            fmt(self.cardinality_preserving), f"{self.elapsed:.3f}"))


@dataclass
class ExperimentSummary:
    mode: str
    pairs: int
    biconditional_holds: bool
    exceptions: list            # records violating "power iso <=> base iso"
    budget_exceeded: list
    pullback_failures: list
    cardinality_always_preserved: bool

    def lines(self):
        out = [
            f"mode: {self.mode}",
            f"pairs: {self.pairs}",
            f"power-iso-iff-base-iso: {'holds' if self.biconditional_holds else 'FAILS'}",
            f"exceptions: {len(self.exceptions)}",
        ]
        out.extend(f"  exception: {r.names[0]} vs {r.names[1]} "
                   f"(base_iso={r.base_iso}, power_iso={r.power_iso})"
                   for r in self.exceptions)
        out.append(f"budget-exceeded pairs: {len(self.budget_exceeded)}")
        out.extend(f"  budget-exceeded: {r.names[0]} vs {r.names[1]}" for r in self.budget_exceeded)
        out.append(f"pullback failures: {len(self.pullback_failures)}")
        out.extend(f"  pullback failure: {r.names[0]} vs {r.names[1]}" for r in self.pullback_failures)
        out.append("cardinality profile: all observed isomorphisms "
                   + ("preserve |X| (asserted nowhere; the question is open)"
                      if self.cardinality_always_preserved else "do NOT all preserve |X|"))
        return out


def _experiment_pair(args):
    ti, tj, name_i, name_j, i, j, budget = args
    h = FiniteMonoid(ti, name=name_i)
    k = FiniteMonoid(tj, name=name_j)
    t0 = time.perf_counter()
    try:
        base = find_isomorphism(h, k, budget=budget)
        base_iso = "yes" if base is not None else "no"
    except SearchBudgetExceeded:
        base_iso = "budget-exceeded"
    res = find_power_isomorphism(h, k, budget=budget)
    power_iso = {"iso": "yes", "absent": "no", "budget-exceeded": "budget-exceeded"}[res.status]
    pullback_ok = None
    card = None
    wmap = None
    if res.status == "iso":
        wmap = res.witness.map
        pb = extract_pullback(res.pm_src, res.pm_dst, res.witness)
        pullback_ok = not pullback_report(pb).gated_failures()
        card, _ = cardinality_profile(res.pm_src, res.pm_dst, res.witness)
    return ExperimentRecord((i, j), (name_i, name_j), base_iso, power_iso,
                            pullback_ok, card, wmap, time.perf_counter() - t0)


def run_experiment(entries, mode="groups", budget=DEFAULT_BUDGET, jobs=1):
    """Decide base and power isomorphism for every unordered census pair.

    Returns (records, summary).  Budget-exceeded pairs are reported, never
    silently dropped; records are sorted by pair id regardless of how the
    work was scheduled.
    """
    tasks = []
    for i in range(len(entries)):
        for j in range(i, len(entries)):
            tasks.append((entries[i].monoid.table, entries[j].monoid.table,
                          entries[i].name, entries[j].name, i, j, budget))
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_experiment_pair, tasks))
    else:
        records = [_experiment_pair(t) for t in tasks]
    records.sort(key=lambda r: r.pair)
    exceptions = [r for r in records
                  if "budget-exceeded" not in (r.base_iso, r.power_iso)
                  and r.base_iso != r.power_iso]
    budget_hit = [r for r in records if "budget-exceeded" in (r.base_iso, r.power_iso)]
    pb_fail = [r for r in records if r.pullback_ok is False]
    summary = ExperimentSummary(
        mode=mode,
        pairs=len(records),
        biconditional_holds=not exceptions and not budget_hit,
        exceptions=exceptions,
        budget_exceeded=budget_hit,
        pullback_failures=pb_fail,
        cardinality_always_preserved=all(r.cardinality_preserving is not False for r in records),
    )
    return records, summary
