"""Binomial Groebner bases, semigroup invariants and bound-verification campaigns
for simplicial toric rings generated by lattice points of a dilated simplex."""

from .groebner import (
    Binomial,
    BinomialBasis,
    BudgetExceeded,
    basis_membership,
    fiber_basis,
    format_basis,
    initial_ideal,
    parse_basis,
    reduced_groebner_basis,
    satisfies_buchberger_criterion,
    toric_basis,
    toric_ideal_by_elimination,
    toric_ideal_by_lattice,
    truncated_groebner,
)
from .harness import Campaign, CheckResult, enumerate_configs, example, report, run_campaign, sample_configs
from .invariants import (
    bounds,
    compute_report,
    face_analysis,
    gcm_check,
    is_normal,
    multiplicity,
    multiplicity_by_counting,
    reduction_number,
)
from .lattice_core import ConfigError, Configuration, Semigroup, in_group, m_alpha_d, semigroup_level, sumset, validate
from .order import TermOrder, Universe, compare

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
