"""Exact character theory of finite permutation groups, with relative degree sets."""

from .config import Guards, set_guards
from .errors import (
    GroupFormatError,
    GuardExceeded,
    ImplementationDefect,
    NotABijectionError,
    NotASubgroupError,
    NotNormalError,
    RelcharError,
    UnknownGroupError,
)
from .group_core.permutation import Permutation, element_order
from .group_core.permgroup import PermGroup, enumerate_elements
from .group_core.quotient import Epimorphism, coset_action, quotient
from .group_core.builtins import builtin_group
from .group_core.io import emit, parse_group
from .structure.subgroup import SubgroupHandle, generated_subgroup, normal_closure, trivial_subgroup, whole_group
from .structure.series import derived_length, derived_series, fitting_height, fitting_subgroup, is_solvable
from .structure.lattice import chief_series, enumerate_subgroups, normal_subgroups
from .structure.sylow import has_normal_p_complement, o_p, o_p_residual, sylow_subgroup
from .characters.cyclotomic import CyclotomicValue
from .characters.dixon import character_table
from .characters.table import CharacterTable, ClassFunction, inner_product
from .characters.ops import det_order, induce, kernel_of, restrict, vanishing_off
from .reldeg import cd_rel_mod, irr_rel, reducing_sections, relative_degrees
from .corpus import CorpusEntry, builtin_corpus, corpus_entry, tagged_normals
from .verify.outcome import Status, SuiteReport, TheoremOutcome
from .verify.checks import THEOREM_IDS, check_theorem, check_thm_6_1_outcome as check_thm_6_1, check_thm_D_outcome as check_thm_D
from .verify.suite import hunt, run_suite
from .report import render_report

__version__ = "0.1.0"
