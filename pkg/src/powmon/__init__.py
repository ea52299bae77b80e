"""Finite monoids, reduced finitary power monoids, and desk-scale
verification of their isomorphism behavior.

The hot loops (setwise products, carrier tables, isomorphism search,
monoid enumeration) run on a compiled extension when built, with a pure
Python fallback selected at import; `powmon.kernels.backend` names the
active one.
"""

from .errors import (NoIdentity, NotAssociative, NotAUnit, NotCancellative,
                     PowmonError, PreconditionViolated, SearchBudgetExceeded,
                     SizeLimitExceeded, TwoToTwoViolation, UnknownName)
from .iso import IsoWitness, enumerate_isomorphisms, find_isomorphism
from .kernels import backend
from .monoid import (FiniteMonoid, cyclic_group, cyclic_monoid, dihedral_group,
                     direct_product, format_table, idempotent_monoid2,
                     klein_group, make_monoid, parse_table_file,
                     parse_table_text, quaternion_group, standard_group)
from .powerset import (PowerMonoid, augment, elements_of, format_subset,
                       full_power_semigroup, mask_of, parse_subset,
                       reduced_power_monoid, setwise_product, subset_power)
from .census import (CensusEntry, ExperimentRecord, canonical_key,
                     census_monoids, enumerate_monoids, find_power_isomorphism,
                     groups_catalog, run_experiment)
from .verify import (CheckResult, MinimalRelation, Pullback, PullbackReport,
                     cardinality_profile, check_cross_relation,
                     check_minimal_relation, check_order_stabilization,
                     check_shifted_power, check_solution_count,
                     check_two_to_two, count_equation_solutions,
                     extract_pullback, minimal_relation, pullback_report)

__version__ = "0.1.0"
