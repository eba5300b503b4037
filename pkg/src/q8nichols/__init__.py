"""Exact Yetter-Drinfeld modules, braidings and Nichols algebra verdicts over finite groups."""

from .braidlin import BraidingMatrix, check_braid_equation, detect_diagonal, diagonal_braiding
from .classify import Verdict, cartan_exponents, classify_diagonal, classify_rank1
from .cyclo import CycNum, cyc_arith, cyc_format, cyc_parse, root_order
from .groups import (
    Group,
    centralizer,
    conjugacy_classes,
    conjugate,
    coset_reps,
    cyclic_group,
    group_from_table,
    quaternion_group,
)
from .nichols import HilbertPrefix, hilbert_prefix, lift_permutation, symmetrizer
from .reps import Representation, character, cyclic_irreps, inner_product, q8_irreps, rep_apply, rep_from_matrices
from .ydmod import BraidOp, YDModule, braiding_operator, check_yd_compat, induce_yd

__version__ = "0.1.0"
