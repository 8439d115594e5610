"""Exact toolkit for finite-dimensional algebras with a Taft-algebra action.

Everything is computed over the cyclotomic field Q(zeta_m) with rational
coordinates — no floats, no tolerances.  The modules:

* ``cyclotomic`` / ``qcombinatorics`` — the scalar field and the Gaussian
  binomials that control the action's combinatorics;
* ``linalg`` — exact matrices, echelon bases, intertwiner spaces, and the
  prime-field reductions used as fast rank filters;
* ``taft_hopf`` — the Hopf algebra itself, with a full axiom battery;
* ``algebra_core`` — structure-constant algebras, radicals, gradings;
* ``hmodule`` — module-algebra verification, simplicity certificates,
  generic isomorphism search;
* ``constructions`` — the block-rotation semisimple family, the layered
  nilpotent extensions, their isomorphism and automorphism theory, and
  structure recovery;
* ``identities`` — multilinear identities and codimension growth;
* ``serialize`` / ``fixtures`` / ``cli`` — JSON formats, the example
  corpus, and the ``taft`` command.
"""

from .cyclotomic import CycNum, zeta_power
from .errors import BudgetExceeded, InputError
from .linalg import EchelonBasis, Matrix, Subspace, intertwiner_space
from .qcombinatorics import QBinomTable, q_binom, q_factorial, q_int
from .taft_hopf import HopfElement, TaftAlgebra, hopf_verify_axioms
from .algebra_core import (FinDimAlgebra, GradingDecomposition, direct_sum,
                           field_algebra, grading_from_c, ideal_generated_by,
                           jacobson_radical, matrix_algebra, nilpotency_index,
                           quotient_algebra, subalgebra_on, subspace_product,
                           trivial_grading, unital_hull)
from .hmodule import (CertifiedSimple, HmaReport, HModuleAlgebra,
                      Inconclusive, NotSimple, act, hma_isomorphic_generic,
                      hma_verify, is_h_simple, operator_span_dim,
                      verify_invariant_ideal)
from .constructions import (AutPair, GradedSimpleCertificate, IsoWitness,
                            NilpotentExtension, NilpotentExtensionSpec,
                            RecoveredStructure, SemisimpleSpec, aut_compose,
                            aut_identity, aut_inverse, aut_module_map,
                            aut_pair, build_nilpotent_extension,
                            build_semisimple, certify_graded_simple,
                            grid_spec, iso_block_map, iso_semisimple,
                            mutate_p_nonscalar, recover_structure,
                            semisimple_operators, v_power_closed_form)
from .identities import (CodimResult, GrowthRow, HMonomial, MultilinearHPoly,
                         alternate, codim_growth_report, codimension,
                         evaluate)
from .serialize import (FORMAT_TAG, algebra_to_json, dumps_canonical,
                        hma_to_json, json_to_algebra, json_to_hma,
                        json_to_nilext_spec, json_to_ss_spec, loads,
                        nilext_spec_to_json, ss_spec_to_json)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
