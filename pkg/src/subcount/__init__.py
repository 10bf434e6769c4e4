"""Finite groups as multiplication tables, their cyclic and total subgroup
counts, structural classifiers, and a harness that checks count-based
criteria over a corpus of small groups.
"""

from .constructors import (alternating, cyclic, dihedral, direct_product, generalized_quaternion,
                           psl2, semidirect_cyclic, SemidirectSpec, sl2, squarefree_groups, symmetric)
from .dsl import group_from_spec, parse_group_spec
from .errors import GroupError
from .group import Group, SubgroupSet, cyclic_subgroups
from .invariants import (InvariantRecord, OrderSequence, cyc_by_enumeration, cyc_by_phi_sum,
                         dominates, invariant_record, order_sequence, strongly_dominates, sub_count)
from .isomorphism import is_isomorphic
from .lattice import all_subgroups
from .structure import is_nilpotent, is_solvable, is_supersolvable

__version__ = "0.1.0"

__all__ = [
    "Group", "SubgroupSet", "GroupError", "InvariantRecord", "OrderSequence", "SemidirectSpec",
    "all_subgroups", "alternating", "cyc_by_enumeration", "cyc_by_phi_sum", "cyclic", "cyclic_subgroups",
    "dihedral", "direct_product", "dominates", "generalized_quaternion", "group_from_spec",
    "invariant_record", "is_isomorphic", "is_nilpotent", "is_solvable", "is_supersolvable",
    "order_sequence", "parse_group_spec", "psl2", "semidirect_cyclic", "sl2", "squarefree_groups",
    "strongly_dominates", "sub_count", "symmetric",
]
