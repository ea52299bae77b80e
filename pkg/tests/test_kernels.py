"""Backend parity: the compiled kernels must match the pure ones exactly,
including search visit order and node counts."""

import os
import random
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from powmon import _pure, kernels
from powmon.census import enumerate_monoids
from powmon.iso import refine_colors

try:
    from powmon import _core
except ImportError:
    _core = None

needs_core = pytest.mark.skipif(_core is None, reason="compiled kernels not built")


def test_backend_reports_itself():
    assert kernels.backend in ("pure", "compiled")
    forced_pure = os.environ.get("POWMON_PURE", "") in ("1", "true", "yes")
    if _core is not None and not forced_pure:
        assert kernels.backend == "compiled"
    if forced_pure:
        assert kernels.backend == "pure"


@needs_core
@settings(max_examples=300, deadline=None)
@given(data=st.data())
def test_assoc_witness_parity(data):
    n = data.draw(st.integers(1, 6))
    flat = data.draw(st.lists(st.integers(0, n - 1), min_size=n * n, max_size=n * n))
    assert _pure.assoc_witness(flat, n) == _core.assoc_witness(flat, n)


@needs_core
@settings(max_examples=200, deadline=None)
@given(data=st.data())
def test_setwise_parity(data, zoo):
    m = zoo[data.draw(st.sampled_from(("z6", "d4", "cm22")))]
    full = (1 << m.n) - 1
    x = data.draw(st.integers(1, full))
    y = data.draw(st.integers(1, full))
    assert _pure.setwise_product(m.flat, m.n, x, y) == \
        _core.setwise_product(m.flat, m.n, x, y)


@needs_core
def test_power_table_parity(zoo):
    for name in ("z4", "d3", "cm22"):
        m = zoo[name]
        masks = tuple(x for x in range(1, 1 << m.n) if x & 1)
        assert _pure.power_table(m.flat, m.n, masks) == _core.power_table(m.flat, m.n, masks)


@needs_core
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_enumerate_tables_parity(n):
    assert _pure.enumerate_tables(n) == _core.enumerate_tables(n)


@needs_core
def test_iso_search_parity_including_node_counts():
    rng = random.Random(3)
    entries = enumerate_monoids(4)
    compared = 0
    # self-pairs always survive the color pre-check; mix in random pairs
    picks = [(e, e) for e in entries[::4]]
    picks += [(rng.choice(entries), rng.choice(entries)) for _ in range(60)]
    for e1, e2 in picks:
        m1, m2 = e1.monoid, e2.monoid
        c1, c2 = refine_colors([m1, m2])
        if Counter(c1) != Counter(c2):
            continue
        sizes = Counter(c1)
        vo = sorted(range(m1.n), key=lambda a: (sizes[c1[a]], a))
        for budget, cap in ((10 ** 6, 1), (10 ** 6, 1 << 60), (2, 1)):
            got_p = _pure.iso_search(m1.flat, m2.flat, m1.n, c1, c2, vo, budget, cap)
            got_c = _core.iso_search(m1.flat, m2.flat, m1.n, c1, c2, vo, budget, cap)
            assert got_p == got_c
            compared += 1
    assert compared >= 30


@needs_core
def test_iso_search_parity_on_carriers(zoo):
    from powmon.powerset import reduced_power_monoid

    pm1 = reduced_power_monoid(zoo["z6"]).carrier
    pm2 = reduced_power_monoid(zoo["z2xz3"]).carrier
    c1, c2 = refine_colors([pm1, pm2])
    sizes = Counter(c1)
    vo = sorted(range(pm1.n), key=lambda a: (sizes[c1[a]], a))
    assert Counter(c1) == Counter(c2)
    got_p = _pure.iso_search(pm1.flat, pm2.flat, pm1.n, c1, c2, vo, 10 ** 6, 1)
    got_c = _core.iso_search(pm1.flat, pm2.flat, pm1.n, c1, c2, vo, 10 ** 6, 1)
    assert got_p == got_c and got_p[1]
