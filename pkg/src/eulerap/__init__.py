"""Certified Euler constants gamma(d, a) of primes in arithmetic progressions."""

from .arith import (
    CharacterGroup,
    DirichletCharacter,
    ResidueClass,
    char_power_order,
    character_group,
    first_exponent,
    mobius,
    multiplicative_order,
    primitive_lift,
    von_mangoldt,
)
from .errors import BudgetError, CertificationError, DomainError, PoleError
from .gamma_ap import (
    GammaResult,
    TruncationBudget,
    check_sum_identity,
    gamma1_da,
    gamma_da,
    gamma_da_closed_small,
    prime_power_resort,
    reduce_modulus,
    select_truncation,
)
from .lfun import LValue, lfun_logderiv, lfun_value
from .primesums import (
    Certified,
    PrimeSumSpec,
    alternating_log_sum,
    log_zeta_da,
    prime_sum,
    quad_residue_sum,
)
from .sieve import PrimeStream, prime_count_ap, primes_up_to

__all__ = [
    "BudgetError", "CertificationError", "Certified", "CharacterGroup", "DirichletCharacter",
    "DomainError", "GammaResult", "LValue", "PoleError", "PrimeStream", "PrimeSumSpec",
    "ResidueClass", "TruncationBudget", "alternating_log_sum", "char_power_order",
    "character_group", "check_sum_identity", "first_exponent", "gamma1_da", "gamma_da",
    "gamma_da_closed_small", "lfun_logderiv", "lfun_value", "log_zeta_da", "mobius",
    "multiplicative_order", "prime_count_ap", "prime_power_resort", "prime_sum", "primes_up_to",
    "primitive_lift", "quad_residue_sum", "reduce_modulus", "select_truncation", "von_mangoldt",
]
