"""Exact higher Stickelberger elements for abelian extensions of Q."""

from .bernoulli import bernoulli_number, bernoulli_poly
from .characters import DirichletCharacter, enumerate_characters, gen_bernoulli, l_value
from .cyclotomic import CyclotomicNumber
from .engine import (
    StickelbergerElement,
    character_eval,
    character_identity_check,
    congruence_check,
    delta,
    fourier_inversion,
    integrality_check,
    restriction_identity_check,
    theta,
)
from .groupring import (
    AbelianField,
    GroupRingElement,
    cyclotomic_field,
    gr_add,
    gr_mul,
    gr_restrict,
    make_field,
)
from .invariants import k_of_v, w_invariant
from .oracles import (
    annihilation_divisibility_check,
    birch_tate_order,
    minus_class_number,
    stickelberger_index,
)
from .tower import TowerSpec, build_theta_tower, theta_f0
from .zeta import PartialZetaProvider, euler_factor_split_check, partial_zeta_q

__all__ = [
    "AbelianField",
    "CyclotomicNumber",
    "DirichletCharacter",
    "GroupRingElement",
    "PartialZetaProvider",
    "StickelbergerElement",
    "TowerSpec",
    "annihilation_divisibility_check",
    "bernoulli_number",
    "bernoulli_poly",
    "birch_tate_order",
    "build_theta_tower",
    "character_eval",
    "character_identity_check",
    "congruence_check",
    "cyclotomic_field",
    "delta",
    "enumerate_characters",
    "euler_factor_split_check",
    "fourier_inversion",
    "gen_bernoulli",
    "gr_add",
    "gr_mul",
    "gr_restrict",
    "integrality_check",
    "k_of_v",
    "l_value",
    "make_field",
    "minus_class_number",
    "partial_zeta_q",
    "restriction_identity_check",
    "stickelberger_index",
    "theta",
    "theta_f0",
    "w_invariant",
]
