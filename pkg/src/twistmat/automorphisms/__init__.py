"""Automorphisms of S_n^I(R) and of its quotients."""

from .atoms import Abels3Phi, Abels3PhiV, DiagConj, Flip, Inner, RingInduced, SlotMap, SuperdiagonalMap
from .automorphism import (
    IDENTITY_AUT,
    Automorphism,
    abels3_phi,
    abels3_phi_v,
    apply,
    compose,
    diag_conj,
    flip,
    inner,
    inverse_atoms,
    psi_d2,
    ring_induced,
)
from .diagonal import DiagonalSplit, dc_star, split_diagonal
from .quotient import SuperdiagonalForm, check_superdiagonal_form, induce_on_quotient, superdiagonal_map_from_form
from .verify import HomomorphismCheck, sampler_for, verify_homomorphism
