import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from powmon.monoid import (cyclic_group, cyclic_monoid, dihedral_group,
                           direct_product, idempotent_monoid2, klein_group,
                           quaternion_group)


@pytest.fixture(scope="session")
def zoo():
    """Named small monoids used across the tests."""
    return {
        "triv": cyclic_group(1),
        "z2": cyclic_group(2),
        "z3": cyclic_group(3),
        "z4": cyclic_group(4),
        "z5": cyclic_group(5),
        "z6": cyclic_group(6),
        "z7": cyclic_group(7),
        "klein": klein_group(),
        "d3": dihedral_group(3),
        "d4": dihedral_group(4),
        "q8": quaternion_group(),
        "z2xz3": direct_product(cyclic_group(2), cyclic_group(3)),
        "idem2": idempotent_monoid2(),
        "cm22": cyclic_monoid(2, 2),
        "cm12": cyclic_monoid(1, 2),
    }
