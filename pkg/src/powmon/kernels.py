"""Kernel backend selection.

The hot loops live in powmon._pure (always available) and, when built, in
the compiled twin powmon._core.  The compiled backend is preferred unless
POWMON_PURE=1 forces the fallback.  Both expose the same five functions
with identical semantics; tests/test_kernels.py holds them to that.
"""

import os

from . import _pure

backend = "pure"
_impl = _pure
if os.environ.get("POWMON_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _core
    except ImportError:
        pass
    else:
        _impl = _core
        backend = "compiled"

assoc_witness = _impl.assoc_witness
setwise_product = _impl.setwise_product
power_table = _impl.power_table
iso_search = _impl.iso_search
enumerate_tables = _impl.enumerate_tables
