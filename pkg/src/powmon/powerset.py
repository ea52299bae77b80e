"""Subsets of a finite monoid under setwise multiplication.

A subset is an int bitmask over element indices (bit i set iff element i
belongs).  Only non-empty subsets are elements of the power structures;
the reduced power monoid restricts further to subsets containing the
identity.  Carrier element indices are assigned in increasing bitmask
order, so carriers are reproducible across runs.
"""

from . import kernels
from .errors import SizeLimitExceeded
from .iso import IsoWitness
from .monoid import FiniteMonoid

MATERIALIZE_LIMIT = 10   # largest base order with a materialized carrier table
ONDEMAND_LIMIT = 16      # largest base order for memoized on-demand products


def mask_of(elements, n):
    """Bitmask for an iterable of element indices."""
    out = 0
    for e in elements:
        if not (0 <= e < n):
            raise ValueError(f"element {e} out of range [0, {n})")
        out |= 1 << e
    return out


def elements_of(mask):
    """Sorted element indices of a bitmask."""
    out = []
    while mask:
        lsb = mask & -mask
        out.append(lsb.bit_length() - 1)
        mask ^= lsb
    return out


def parse_subset(text, n):
    """Parse the CLI subset literal, comma-separated indices like '0,3'."""
    try:
        elems = [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise ValueError(f"bad subset literal {text!r}")
    if not elems:
        raise ValueError("empty subset literal")
    return mask_of(elems, n)


def format_subset(mask):
    return ",".join(str(e) for e in elements_of(mask))


def setwise_product(m, x, y):
    """Bitmask of {a*b : a in x, b in y}; both factors must be non-empty."""
    if x == 0 or y == 0:
        raise ValueError("setwise product of an empty subset")
    return kernels.setwise_product(m.flat, m.n, x, y)


def subset_power(m, x, k):
    """x^k under setwise product, with x^0 the singleton {identity}."""
    if x == 0:
        raise ValueError("power of an empty subset")
    acc = 1 << m.identity
    for _ in range(k):
        acc = kernels.setwise_product(m.flat, m.n, acc, x)
    return acc


class PowerMonoid:
    """A power structure of a base monoid, itself a finite monoid.

    kind "reduced" carries the 2^(n-1) subsets containing the identity;
    kind "full" carries all 2^n - 1 non-empty subsets.  Small instances
    materialize their carrier as a validated FiniteMonoid; larger ones
    (carrier is None) compute products on demand with set-once
    memoization, which behaves as if each product were computed exactly
    once and is safe for concurrent readers.
    """

    def __init__(self, base, kind, materialize_limit=MATERIALIZE_LIMIT,
                 ondemand_limit=ONDEMAND_LIMIT):
        if kind not in ("reduced", "full"):
            raise ValueError(f"unknown power monoid kind {kind!r}")
        n = base.n
        if n > ondemand_limit:
            raise SizeLimitExceeded(
                f"base order {n} exceeds the on-demand limit {ondemand_limit}")
        ebit = 1 << base.identity
        if kind == "reduced":
            masks = tuple(x for x in range(1, 1 << n) if x & ebit)
        else:
            masks = tuple(range(1, 1 << n))
        self.base = base
        self.kind = kind
        self.masks = masks
        self.index = {mask: i for i, mask in enumerate(masks)}
        self._memo = {}
        if n <= materialize_limit:
            m = len(masks)
            flat = kernels.power_table(base.flat, n, masks)
            table = [flat[i * m:(i + 1) * m] for i in range(m)]
            tag = "reduced power" if kind == "reduced" else "full power"
            self.carrier = FiniteMonoid(table, name=f"{tag}({base.name})")
            if self.masks[self.carrier.identity] != ebit:
                raise AssertionError("carrier identity is not the singleton {identity}")
        else:
            self.carrier = None

    def __len__(self):
        return len(self.masks)

    def subset_of(self, i):
        return self.masks[i]

    def index_of(self, mask):
        try:
            return self.index[mask]
        except KeyError:
            raise ValueError(f"subset {format_subset(mask)} is not a carrier element")

    def mask_product(self, x, y):
        """Setwise product of two carrier masks, as a mask."""
        return self.masks[self.product_index(self.index_of(x), self.index_of(y))]

    def product_index(self, i, j):
        if self.carrier is not None:
            return self.carrier.table[i][j]
        key = (i, j)
        got = self._memo.get(key)
        if got is None:
            got = self.index[kernels.setwise_product(
                self.base.flat, self.base.n, self.masks[i], self.masks[j])]
            self._memo[key] = got
        return got

    def identity_index(self):
        return self.index[1 << self.base.identity]

    def pair_index(self, x):
        """Carrier index of {identity, x}."""
        return self.index[(1 << self.base.identity) | (1 << x)]

    def __repr__(self):
        return f"PowerMonoid({self.kind}, base={self.base.name}, size={len(self.masks)})"


def reduced_power_monoid(base, **limits):
    """The reduced finitary power monoid of a finite base monoid."""
    return PowerMonoid(base, "reduced", **limits)


def full_power_semigroup(base, **limits):
    """The large power semigroup of a finite base monoid (all non-empty subsets).

    For a base monoid this is again a monoid, with identity {identity}.
    """
    return PowerMonoid(base, "full", **limits)


def augment(base_witness, pm_src=None, pm_dst=None):
    """Lift a base isomorphism h to subsets: X -> h[X], on reduced carriers.

    Returns a certified IsoWitness between the carriers of the reduced
    power monoids of the witness's source and target.
    """
    if pm_src is None:
        pm_src = reduced_power_monoid(base_witness.source)
    if pm_dst is None:
        pm_dst = reduced_power_monoid(base_witness.target)
    if pm_src.carrier is None or pm_dst.carrier is None:
        raise SizeLimitExceeded("augmentation needs materialized carriers")
    h = base_witness.map
    mapping = []
    for mask in pm_src.masks:
        img = 0
        for e in elements_of(mask):
            img |= 1 << h[e]
        mapping.append(pm_dst.index_of(img))
    return IsoWitness(pm_src.carrier, pm_dst.carrier, mapping)
