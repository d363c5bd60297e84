"""Finite-dimensional Hopf algebras and their actions on deformation algebras."""
from .action import (ActionReport, FactorVerdict, HopfAction, InnerFaithfulVerdict, act,
                     annihilator, annihilator_mod_h, default_degree, factors_through_group,
                     inner_faithful, invariants, module_algebra_check, trivial_action)
from .hopf import (GrouplikeResult, HopfAlgebra, HopfReport, SubspaceOfH, algebra_radical,
                   cayley_table, cyclic_group, dual_algebra, gr_radical_hopf, group_algebra,
                   grouplikes, hopf_ideal_defects, hopf_verify, ideal_closure, largest_hopf_ideal,
                   quotient_hopf, radical, radical_powers, sweedler)

__all__ = [
    "HopfAlgebra", "HopfReport", "SubspaceOfH", "GrouplikeResult", "hopf_verify", "sweedler",
    "group_algebra", "cyclic_group", "radical", "radical_powers", "algebra_radical",
    "ideal_closure", "dual_algebra", "grouplikes", "cayley_table", "quotient_hopf",
    "largest_hopf_ideal", "hopf_ideal_defects", "gr_radical_hopf",
    "HopfAction", "ActionReport", "FactorVerdict", "InnerFaithfulVerdict", "act",
    "trivial_action", "module_algebra_check", "invariants", "annihilator", "annihilator_mod_h",
    "default_degree", "factors_through_group", "inner_faithful",
]
