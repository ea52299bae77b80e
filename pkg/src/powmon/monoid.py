"""Finite monoids as validated Cayley tables.

Elements are dense indices 0..n-1.  The identity is detected from the
table, never declared, so input files cannot lie about it.  Instances are
immutable after construction and safe to share across threads.
"""

from . import kernels
from .errors import NoIdentity, NotAssociative, NotAUnit, UnknownName


class FiniteMonoid:
    """A finite monoid given by its full multiplication table.

    Construction validates all three structural invariants: entries in
    range, associativity (with a witness triple on failure), and a unique
    two-sided identity.
    """

    def __init__(self, table, name=None):
        rows = [tuple(row) for row in table]
        n = len(rows)
        if n == 0:
            raise NoIdentity("empty table has no identity")
        for row in rows:
            if len(row) != n:
                raise ValueError(f"table is not square: got a row of length {len(row)}, expected {n}")
            for v in row:
                if not (0 <= v < n):
                    raise ValueError(f"table entry {v} out of range [0, {n})")
        rng = range(n)
        identities = [e for e in rng
                      if all(rows[e][b] == b for b in rng) and all(rows[a][e] == a for a in rng)]
        if len(identities) != 1:
            # >1 is impossible for a genuine magma identity; treat as a
            # validation failure either way
            raise NoIdentity(f"found {len(identities)} two-sided identities, need exactly 1")
        flat = tuple(v for row in rows for v in row)
        w = kernels.assoc_witness(flat, n)
        if w >= 0:
            c = w % n
            ab = w // n
            raise NotAssociative(ab // n, ab % n, c)
        self.n = n
        self.table = tuple(rows)
        self.flat = flat
        self.identity = identities[0]
        self.name = name or f"monoid[{n}]"
        self._orders = None
        self._cancellative = None
        self._units = None

    def mul(self, a, b):
        return self.table[a][b]

    def power(self, a, k):
        """a^k, with a^0 the identity."""
        acc = self.identity
        for _ in range(k):
            acc = self.table[acc][a]
        return acc

    def element_order(self, a):
        """Size of the cyclic submonoid {a^0, a^1, ...} generated by a."""
        seen = {self.identity}
        x = a
        while x not in seen:
            seen.add(x)
            x = self.table[x][a]
        return len(seen)

    def orders(self):
        if self._orders is None:
            self._orders = tuple(self.element_order(a) for a in range(self.n))
        return self._orders

    def idempotents(self):
        return tuple(a for a in range(self.n) if self.table[a][a] == a)

    def is_cancellative_element(self, a):
        """True iff left and right multiplication by a are injective."""
        full = set(range(self.n))
        return set(self.table[a]) == full and {row[a] for row in self.table} == full

    def cancellative_elements(self):
        if self._cancellative is None:
            self._cancellative = tuple(a for a in range(self.n) if self.is_cancellative_element(a))
        return self._cancellative

    def is_cancellative(self):
        return len(self.cancellative_elements()) == self.n

    def units(self):
        """Elements with a two-sided inverse."""
        if self._units is None:
            e = self.identity
            self._units = tuple(
                u for u in range(self.n)
                if any(self.table[u][v] == e and self.table[v][u] == e for v in range(self.n))
            )
        return self._units

    def inverse(self, u):
        e = self.identity
        for v in range(self.n):
            if self.table[u][v] == e and self.table[v][u] == e:
                return v
        raise NotAUnit(f"element {u} of {self.name} has no two-sided inverse")

    def is_group(self):
        return len(self.units()) == self.n

    def is_commutative(self):
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.n) for b in range(a + 1, self.n))

    def __eq__(self, other):
        return isinstance(other, FiniteMonoid) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"FiniteMonoid({self.name}, n={self.n})"


def make_monoid(table, name=None):
    """Validate a Cayley table and return the monoid it defines."""
    return FiniteMonoid(table, name=name)


def cyclic_monoid(index, period, name=None):
    """Monogenic monoid with elements z^0 .. z^(index+period-1), z^(i+p) = z^i.

    index 0 gives the cyclic group of order `period`.
    """
    if index < 0 or period < 1:
        raise ValueError("need index >= 0 and period >= 1")
    n = index + period
    def reduce(c):
        while c >= n:
            c -= period
        return c
    table = [[reduce(a + b) for b in range(n)] for a in range(n)]
    return FiniteMonoid(table, name=name or f"cyclic_monoid({index},{period})")


def cyclic_group(n):
    return cyclic_monoid(0, n, name=f"cyclic {n}")


def direct_product(m1, m2, name=None):
    """Componentwise product monoid; element (a, b) has index a*|m2| + b."""
    n2 = m2.n
    table = [
        [m1.table[a1][b1] * n2 + m2.table[a2][b2]
         for b1 in range(m1.n) for b2 in range(n2)]
        for a1 in range(m1.n) for a2 in range(n2)
    ]
    return FiniteMonoid(table, name=name or f"({m1.name} x {m2.name})")


def dihedral_group(n):
    """Dihedral group of order 2n, realized as the maps x -> +-x + r on Z_n.

    Index f*n + r encodes the map x -> (-1)^f x + r; rotations come first.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    def mul(a, b):
        f1, r1 = divmod(a, n)
        f2, r2 = divmod(b, n)
        return (f1 ^ f2) * n + (r1 + (r2 if f1 == 0 else -r2)) % n
    table = [[mul(a, b) for b in range(2 * n)] for a in range(2 * n)]
    return FiniteMonoid(table, name=f"dihedral {n}")


def klein_group():
    return direct_product(cyclic_group(2), cyclic_group(2), name="klein")


def quaternion_group():
    """Quaternion group of order 8, elements [1, -1, i, -i, j, -j, k, -k]."""
    ax = {}
    for a in range(4):
        ax[0, a] = (a, 1)
        ax[a, 0] = (a, 1)
    for a in (1, 2, 3):
        ax[a, a] = (0, -1)
    for a, b, c in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
        ax[a, b] = (c, 1)
        ax[b, a] = (c, -1)
    def mul(x, y):
        xa, xs = divmod(x, 2)
        ya, ys = divmod(y, 2)
        axis, s = ax[xa, ya]
        neg = (xs + ys + (s < 0)) % 2
        return axis * 2 + neg
    table = [[mul(x, y) for y in range(8)] for x in range(8)]
    return FiniteMonoid(table, name="quaternion8")


def idempotent_monoid2():
    """The order-2 monoid with a non-identity idempotent: e*e = e."""
    return FiniteMonoid([[0, 1], [1, 1]], name="idem2")


def standard_group(spec):
    """Build a named group from a spec string.

    Grammar: ``cyclic N`` | ``dihedral N`` | ``klein`` | ``quaternion8`` |
    ``direct_product(A, B)`` with A, B specs themselves.
    """
    s = spec.strip()
    if s == "klein":
        return klein_group()
    if s == "quaternion8":
        return quaternion_group()
    if s.startswith("direct_product(") and s.endswith(")"):
        inner = s[len("direct_product("):-1]
        depth = 0
        for i, ch in enumerate(inner):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "," and depth == 0:
                return direct_product(standard_group(inner[:i]), standard_group(inner[i + 1:]))
        raise UnknownName(f"direct_product needs two comma-separated factors: {spec!r}")
    parts = s.split()
    if len(parts) == 2 and parts[0] in ("cyclic", "dihedral"):
        try:
            k = int(parts[1])
        except ValueError:
            k = 0
        if k < 1:
            raise UnknownName(f"{parts[0]} needs a positive order: {spec!r}")
        return cyclic_group(k) if parts[0] == "cyclic" else dihedral_group(k)
    raise UnknownName(f"unrecognized group spec: {spec!r}")


def parse_table_text(text, name=None):
    """Parse the Cayley-table text format and validate the monoid.

    Line 1 is n; the next n lines hold n space-separated 0-based indices,
    row a giving a*b for b = 0..n-1.  '#' starts a comment.
    """
    rows = []
    n = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise ValueError(f"line {lineno}: expected the order n, got {line!r}")
            if n < 1:
                raise ValueError(f"line {lineno}: order must be positive, got {n}")
            continue
        try:
            row = [int(tok) for tok in line.split()]
        except ValueError:
            raise ValueError(f"line {lineno}: row must be space-separated integers, got {line!r}")
        if len(row) != n:
            raise ValueError(f"line {lineno}: expected {n} entries, got {len(row)}")
        for v in row:
            if not (0 <= v < n):
                raise ValueError(f"line {lineno}: entry {v} out of range [0, {n})")
        rows.append(row)
        if len(rows) == n:
            break
    if n is None:
        raise ValueError("empty table file")
    if len(rows) != n:
        raise ValueError(f"expected {n} table rows, got {len(rows)}")
    return make_monoid(rows, name=name)


def parse_table_file(path):
    with open(path) as fh:
        return parse_table_text(fh.read(), name=str(path))


def format_table(m):
    """Inverse of parse_table_text (without comments)."""
    lines = [str(m.n)]
    lines.extend(" ".join(str(v) for v in row) for row in m.table)
    return "\n".join(lines) + "\n"
