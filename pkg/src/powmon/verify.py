"""One executable checker per verified statement.

Every checker returns a structured record carrying pass/fail status and
witnesses.  Hypothesis gating is explicit: a conclusion is only asserted
(can only flip status to "fail") when its stated hypotheses hold for the
inputs; outside them, observed violations are recorded as informative
findings.  That is how the known counterexamples surface without failing
a run.
"""

from dataclasses import dataclass, field

from .errors import NotCancellative, PreconditionViolated, TwoToTwoViolation
from .powerset import elements_of, format_subset, setwise_product, subset_power


@dataclass
class CheckResult:
    """Line-oriented checker outcome: pass, fail, or not-applicable."""
    checker: str
    subject: str
    status: str
    detail: str = ""
    findings: list = field(default_factory=list)

    def line(self):
        parts = [self.checker, self.subject, self.status, self.detail]
        if self.findings:
            parts.append("findings: " + "; ".join(self.findings))
        return "\t".join(parts)

    @property
    def failed(self):
        return self.status == "fail"


def _pair(m, x):
    return (1 << m.identity) | (1 << x)


def check_order_stabilization(m, z):
    """Least k >= 1 with {1,z}^k = {1,z}^(k-1) must equal the order of z."""
    ord_z = m.element_order(z)
    prev = 1 << m.identity
    k = 1
    while True:
        cur = setwise_product(m, prev, _pair(m, z))
        if cur == prev:
            break
        prev = cur
        k += 1
    ok = k == ord_z
    return CheckResult("order_stabilization", f"{m.name} z={z}",
                       "pass" if ok else "fail", f"k={k} ord={ord_z}")


def check_shifted_power(m, z, l, r, s_slack=2):
    """{1,z^l}{1,z}^r = {1,z}^(l+r) for r >= l-1; and never equals any
    {1,z}^s with r < l-1 <= s when z is cancellative and l <= ord(z).

    The inequality scan runs over all r' < l-1 and s in [l-1, ord+s_slack]
    regardless of hypotheses; without them its violations are findings,
    not failures.
    """
    if l < 1:
        raise PreconditionViolated("need l >= 1")
    ord_z = m.element_order(z)
    zl = 1 << m.identity | 1 << m.power(z, l)
    pair = _pair(m, z)
    applied = []
    failures = []
    findings = []
    if r >= l - 1:
        lhs = setwise_product(m, zl, subset_power(m, pair, r))
        rhs = subset_power(m, pair, l + r)
        applied.append("part1")
        if lhs != rhs:
            failures.append(f"part1: l={l} r={r} lhs={format_subset(lhs)} rhs={format_subset(rhs)}")
    part2_gated = m.is_cancellative_element(z) and l <= ord_z
    if part2_gated:
        applied.append("part2")
    for rp in range(0, l - 1):
        lhs = setwise_product(m, zl, subset_power(m, pair, rp))
        for s in range(l - 1, ord_z + s_slack + 1):
            if lhs == subset_power(m, pair, s):
                msg = f"l={l} r={rp} s={s}: sides equal"
                if part2_gated:
                    failures.append("part2: " + msg)
                else:
                    findings.append("non-cancellative violation of part 2: " + msg)
    if failures:
        status = "fail"
    elif applied:
        status = "pass"
    else:
        status = "n/a"
    detail = " ".join(applied) if not failures else "; ".join(failures)
    return CheckResult("shifted_power", f"{m.name} z={z} l={l} r={r}",
                       status, detail, findings)


def check_cross_relation(m, x, y, r, s):
    """Both product identities that follow from x^r = y^s.

    {1,x}^(r-1){1,xy}{1,y}^s   = {1,x}^r{1,y}^(s+1)
    {1,x}^r{1,xy}{1,y}^(s-1)   = {1,x}^(r+1){1,y}^s
    """
    if r < 1 or s < 1:
        raise PreconditionViolated("need r, s >= 1")
    if m.power(x, r) != m.power(y, s):
        raise PreconditionViolated(f"x^{r} != y^{s} for x={x}, y={y} in {m.name}")
    px, py = _pair(m, x), _pair(m, y)
    pxy = (1 << m.identity) | (1 << m.mul(x, y))
    def chain(*masks):
        acc = 1 << m.identity
        for mk in masks:
            acc = setwise_product(m, acc, mk)
        return acc
    bad = []
    lhs1 = chain(subset_power(m, px, r - 1), pxy, subset_power(m, py, s))
    rhs1 = chain(subset_power(m, px, r), subset_power(m, py, s + 1))
    if lhs1 != rhs1:
        bad.append(f"eq1: {format_subset(lhs1)} != {format_subset(rhs1)}")
    lhs2 = chain(subset_power(m, px, r), pxy, subset_power(m, py, s - 1))
    rhs2 = chain(subset_power(m, px, r + 1), subset_power(m, py, s))
    if lhs2 != rhs2:
        bad.append(f"eq2: {format_subset(lhs2)} != {format_subset(rhs2)}")
    return CheckResult("cross_relation", f"{m.name} x={x} y={y} r={r} s={s}",
                       "fail" if bad else "pass", "; ".join(bad))


@dataclass
class MinimalRelation:
    """Minimal exponents r, s, u, v with x^r = y^s and x^u = y^v.

    r is the least positive exponent of x equal to any positive power of
    y, and v the least positive exponent of y equal to any positive power
    of x.  Construction verifies the divisibility conclusion: whenever
    x^c = y^d on the exponent grid [1, ord(x)] x [1, ord(y)], r divides c
    and v divides d.  Powers of cancellative torsion elements cycle with
    period equal to the order, and (ord(x), ord(y)) is itself a solution,
    so the grid covers every integer solution.
    """
    r: int
    s: int
    u: int
    v: int


def minimal_relation(m, x, y):
    ox, oy = m.element_order(x), m.element_order(y)
    for a in (x, y):
        if not m.is_cancellative_element(a):
            raise NotCancellative(f"element {a} of {m.name} is not cancellative")
    sols = [(c, d) for c in range(1, ox + 1) for d in range(1, oy + 1)
            if m.power(x, c) == m.power(y, d)]
    r = min(c for c, _ in sols)
    s = min(d for c, d in sols if c == r)
    v = min(d for _, d in sols)
    u = min(c for c, d in sols if d == v)
    for c, d in sols:
        if c % r != 0 or d % v != 0:
            raise AssertionError(
                f"divisibility conclusion fails in {m.name}: x={x} y={y} "
                f"r={r} v={v} but x^{c} = y^{d}")
    return MinimalRelation(r, s, u, v)


def check_minimal_relation(m, x, y):
    subject = f"{m.name} x={x} y={y}"
    rel = minimal_relation(m, x, y)
    ox, oy = m.element_order(x), m.element_order(y)
    ok = (1 <= rel.r <= ox and 1 <= rel.u <= ox and 1 <= rel.s <= oy and 1 <= rel.v <= oy
          and m.power(x, rel.r) == m.power(y, rel.s)
          and m.power(x, rel.u) == m.power(y, rel.v))
    return CheckResult("minimal_relation", subject, "pass" if ok else "fail",
                       f"r={rel.r} s={rel.s} u={rel.u} v={rel.v}")


@dataclass
class SolutionCount:
    """Exhaustive count of subsets A with A*S = S^n over a chosen universe."""
    count: int
    solutions: list            # masks, ascending
    bound: int                 # 2^(|S|-1)
    bound_applies: bool        # full universe and n >= 3
    family: list               # the constructed solutions (S^(n-1) \ T)
    family_ok: bool


def count_equation_solutions(m, s_mask, n_exp, universe="full"):
    """Solutions A of A*S = S^n, plus the constructed family (S^(n-1) \\ T)*S = S^n.

    S must contain the identity.  The lower bound 2^(|S|-1) is asserted by
    callers only when it applies (universe "full", n >= 3); the family is
    checked for validity and pairwise distinctness whenever n >= 3.
    """
    ebit = 1 << m.identity
    if not s_mask & ebit:
        raise PreconditionViolated("S must contain the identity")
    if universe not in ("full", "reduced"):
        raise PreconditionViolated(f"unknown universe {universe!r}")
    if n_exp < 1:
        raise PreconditionViolated("need n >= 1")
    target = subset_power(m, s_mask, n_exp)
    if universe == "full":
        candidates = range(1, 1 << m.n)
    else:
        candidates = (a for a in range(1, 1 << m.n) if a & ebit)
    solutions = [a for a in candidates if setwise_product(m, a, s_mask) == target]
    k = bin(s_mask).count("1") - 1
    family = []
    family_ok = True
    if n_exp >= 3:
        base = subset_power(m, s_mask, n_exp - 1)
        rest = elements_of(s_mask & ~ebit)
        for t_bits in range(1 << k):
            t_mask = 0
            for i, e in enumerate(rest):
                if t_bits >> i & 1:
                    t_mask |= 1 << e
            q = base & ~t_mask
            family.append(q)
            if q == 0 or setwise_product(m, q, s_mask) != target:
                family_ok = False
        if len(set(family)) != len(family):
            family_ok = False
    return SolutionCount(len(solutions), solutions, 1 << k,
                         universe == "full" and n_exp >= 3, family, family_ok)


def check_solution_count(m, s_mask, n_exp, universe="full"):
    sc = count_equation_solutions(m, s_mask, n_exp, universe)
    bad = []
    if sc.bound_applies and sc.count < sc.bound:
        bad.append(f"count {sc.count} < bound {sc.bound}")
    if n_exp >= 3 and not sc.family_ok:
        bad.append("constructed family invalid or not pairwise distinct")
    status = "fail" if bad else ("pass" if (sc.bound_applies or n_exp >= 3) else "n/a")
    return CheckResult("equation_solutions",
                       f"{m.name} S={format_subset(s_mask)} n={n_exp} {universe}",
                       status, "; ".join(bad) or f"count={sc.count} bound={sc.bound}")


def check_two_to_two(pm_src, pm_dst, witness):
    """Images of the 2-element carrier sets {1, x} must have 2 elements."""
    bad = []
    for x in range(pm_src.base.n):
        if x == pm_src.base.identity:
            continue
        img = pm_dst.masks[witness.map[pm_src.pair_index(x)]]
        size = bin(img).count("1")
        if size != 2:
            bad.append(f"x={x} -> {format_subset(img)} (size {size})")
    return CheckResult("two_to_two", f"{pm_src.base.name} -> {pm_dst.base.name}",
                       "fail" if bad else "pass", "; ".join(bad))


class Pullback:
    """The bijection g: H -> K carried by a power-monoid isomorphism.

    g(x) is the unique non-identity element of f({1_H, x}); g(1_H) = 1_K.
    Construction re-checks the two-to-two property defensively and raises
    TwoToTwoViolation on a corrupted witness (impossible for a genuine
    isomorphism).
    """

    def __init__(self, pm_src, pm_dst, witness, mapping):
        self.pm_src = pm_src
        self.pm_dst = pm_dst
        self.witness = witness
        self.map = tuple(mapping)
        self.source = pm_src.base
        self.target = pm_dst.base

    def apply(self, x):
        return self.map[x]

    def inverse(self):
        return extract_pullback(self.pm_dst, self.pm_src, self.witness.inverse())

    def __repr__(self):
        return f"Pullback({self.source.name} -> {self.target.name}, {self.map})"


def extract_pullback(pm_src, pm_dst, witness):
    h, k = pm_src.base, pm_dst.base
    mapping = [0] * h.n
    mapping[h.identity] = k.identity
    kbit = 1 << k.identity
    for x in range(h.n):
        if x == h.identity:
            continue
        img = pm_dst.masks[witness.map[pm_src.pair_index(x)]]
        if bin(img).count("1") != 2 or not img & kbit:
            raise TwoToTwoViolation(
                f"f({{1,{x}}}) = {{{format_subset(img)}}} is not of the form {{1, y}}")
        mapping[x] = (img & ~kbit).bit_length() - 1
    if sorted(mapping) != list(range(h.n)):
        raise TwoToTwoViolation("extracted map is not a bijection")
    return Pullback(pm_src, pm_dst, witness, mapping)


@dataclass
class PullbackReport:
    """Observed pullback properties, with their gating hypotheses.

    Flags record what actually holds; `hypotheses` records which of the
    gating conditions the input pair satisfies.  A flag being False only
    counts as a failure when its gate is met (see gated_failures).
    torsion_hom and full_hom observe the same products on finite inputs
    (every element is torsion) but are gated differently.
    """
    subject: str
    order_preserving: bool
    bounded_power_image: bool
    power_compatible: bool
    product_dichotomy: bool
    involution_product: bool
    torsion_hom: bool
    full_hom: bool
    hypotheses: dict
    counterexamples: list

    GATES = (
        ("order_preserving", None),
        ("bounded_power_image", "target_cancellative"),
        ("power_compatible", "both_cancellative"),
        ("product_dichotomy", "both_cancellative"),
        ("involution_product", "both_cancellative"),
        ("torsion_hom", "both_cancellative"),
        ("full_hom", "both_groups"),
    )

    def gated_failures(self):
        out = []
        for flag, hyp in self.GATES:
            if (hyp is None or self.hypotheses[hyp]) and not getattr(self, flag):
                out.append(flag)
        return out

    def result(self):
        failures = self.gated_failures()
        ungated = [f for f, hyp in self.GATES
                   if hyp is not None and not self.hypotheses[hyp] and not getattr(self, f)]
        detail = "; ".join(
            f"{flag}={getattr(self, flag)}" for flag, _ in self.GATES)
        findings = [f"{flag} fails outside hypotheses: {cx}"
                    for flag, cx in self.counterexamples if flag in ungated]
        return CheckResult("pullback_report", self.subject,
                           "fail" if failures else "pass", detail, findings)


def pullback_report(pb):
    """Check the pullback against every order/power/product statement.

    Exponents range over [0, 2*ord(x)]; beyond that, powers of torsion
    elements only repeat earlier cases.
    """
    h, k, g = pb.source, pb.target, pb.map
    hyp = {
        "target_cancellative": k.is_cancellative(),
        "both_cancellative": h.is_cancellative() and k.is_cancellative(),
        "both_groups": h.is_group() and k.is_group(),
    }
    cx = []
    order_preserving = True
    bounded_img = True
    powercomp = True
    for x in range(h.n):
        ox = h.element_order(x)
        if ox != k.element_order(g[x]):
            order_preserving = False
            cx.append(("order_preserving",
                       f"x={x}: ord_H={ox} ord_K={k.element_order(g[x])}"))
        for kk in range(0, 2 * ox + 1):
            gxk = g[h.power(x, kk)]
            if gxk != k.power(g[x], kk):
                powercomp = False
                cx.append(("power_compatible",
                           f"x={x} k={kk}: g(x^k)={gxk} g(x)^k={k.power(g[x], kk)}"))
            if not any(gxk == k.power(g[x], l) for l in range(0, kk + 1)):
                bounded_img = False
                cx.append(("bounded_power_image", f"x={x} k={kk}: no l <= k with g(x^k)=g(x)^l"))
    dichotomy = True
    involution = True
    hom = True
    e = h.identity
    for x in range(h.n):
        for y in range(h.n):
            ghom = g[h.mul(x, y)] == k.mul(g[x], g[y])
            if not ghom:
                hom = False
                cx.append(("torsion_hom",
                           f"x={x} y={y}: g(xy)={g[h.mul(x, y)]} g(x)g(y)={k.mul(g[x], g[y])}"))
                if h.mul(h.power(x, 2), h.power(y, 2)) != e:
                    dichotomy = False
                    cx.append(("product_dichotomy", f"x={x} y={y}: g(xy)!=g(x)g(y) and x^2y^2 != 1"))
                if h.power(x, 2) == e or h.power(y, 2) == e:
                    involution = False
                    cx.append(("involution_product", f"x={x} y={y}: square hypothesis holds yet g(xy)!=g(x)g(y)"))
    return PullbackReport(
        subject=f"{h.name} -> {k.name}",
        order_preserving=order_preserving,
        bounded_power_image=bounded_img,
        power_compatible=powercomp,
        product_dichotomy=dichotomy,
        involution_product=involution,
        torsion_hom=hom,
        full_hom=hom,
        hypotheses=hyp,
        counterexamples=cx,
    )


def cardinality_profile(pm_src, pm_dst, witness):
    """Measure |X| vs |f(X)| over the carrier; asserted nowhere.

    Whether power-monoid isomorphisms must preserve cardinality is open;
    the census only reports what it sees.
    """
    pairs = sorted(
        (bin(pm_src.masks[i]).count("1"), bin(pm_dst.masks[witness.map[i]]).count("1"))
        for i in range(len(pm_src.masks)))
    preserving = all(a == b for a, b in pairs)
    return preserving, pairs
