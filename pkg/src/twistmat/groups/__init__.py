"""The groups S_n^I(R) = U_n(R) x| T_I(R), their quotients and finite enumerations."""

from .element import (
    GroupElement,
    commutator,
    conjugate,
    diagonal_gen,
    elementary,
    from_matrix,
    identity,
    inverse_element,
    iterated_commutator,
    make_element,
    multiply,
    to_matrix,
)
from .finite import FiniteGroup, cyclic_group, enumerate_finite_group, kernel_elements
from .fingen import FinGenVerdict, is_finitely_generated
from .index_set import IndexSet, ng_condition
from .quotients import MOD_CENTER_U4, MOD_COMMUTATOR_U, NONE, QuotientElement, QuotientSpec, mod_ideal, project
