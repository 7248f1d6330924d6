"""Exact-arithmetic nondegeneracy orders for parabolic CR algebras."""

from .admissible import AdmissibleWitness, q_beta, verify_table
from .analysis import (AnalysisReport, InstanceSpec, analyze, build_instance,
                       enumerate_reports, parse_instance, serialize_instance)
from .chains import (INFINITE, ChainReport, PerRootOrder, contact_chains,
                     fundamental, is_finite, levi_chain, per_root_levi_order,
                     q_infinity, weakly_nondegenerate_criterion)
from .errors import (CROrderError, DoesNotPermuteRoots, InternalInconsistency,
                     InvalidInvolution, NotInvolutive, NotIsometry, ParseError)
from .extension import (LeeExtension, Sl2Module, build_lee_extension,
                        extension_cr_dim_codim)
from .involution import (CompactFixedSet, RootInvolution, conjugate,
                         enumerate_involutions, from_matrix,
                         from_signed_permutation, identity, minus_identity,
                         r_bullet)
from .liealg import (ExactLieAlgebra, generic_contact_chain, generic_levi_chain,
                     root_graded_algebra)
from .parabolic import (ParabolicCRAlgebra, build_pcr, cr_dim_codim,
                        minimal_type, minimal_type_criteria, xi)
from .roots import (Root, RootSystem, add_roots, additive_neighbors, build,
                    direct_sum, support)

__all__ = [name for name in dir() if not name.startswith("_")]
