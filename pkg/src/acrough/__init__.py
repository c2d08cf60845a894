"""Rough-object quotients of granular operator spaces, the lattice of their
maximal antichains, and a finite-algebra engine for ternary deductive systems."""

from .algebra import (CLASS_A, COMPLEMENT_KINDS, LIGHT, UU, ACAlgebra,
                      check_groupoid_theorem, check_modal_theorem,
                      check_range_reconstruction, check_reconstruction,
                      check_ve_diamond, enumerate_filters, find_delta_nonimplication)
from .antichains import (ac_leq, ac_m_lattice, build_ac_lattice,
                         enumerate_maximal_antichains, lower_shift,
                         maximum_sized_antichains)
from .deduction import (CongruenceRelation, DeductionConfig, FiniteAlgebra,
                        NotDifferenceSystem, Term, TermError, check_correspondence,
                        check_regularity, check_ternary_term_theorems, congruences,
                        eval_term, is_compatible, is_deductive_system,
                        is_g_difference_system, theta_relation)
from .io import format_space, load_space, parse_space
from .lattice import (BoundedLattice, BoundViolation, NotALattice,
                      ReconstructionMismatch, birkhoff_reconstruct, irreducible_data,
                      irreducible_reconstruct, is_distributive, join_irreducibles,
                      lattice_isomorphic, lattice_length, meet_irreducibles,
                      pseudo_complement)
from .poset import Poset, maximal_antichains
from .quotient import (QuotientError, QuotientPoset, RoughObject, build_quotient,
                       check_bounded_order, is_fluent, is_well_fluent)
from .report import CheckResult, Report
from .space import (CapExceeded, GranularOperatorSpace, SpaceError,
                    check_admissibility, check_space_axioms, lower, rough_equal,
                    rough_leq, upper)
from .verify import VerificationReport, verify

__version__ = "0.1.0"
