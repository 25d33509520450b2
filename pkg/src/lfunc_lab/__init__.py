"""Exact Euler products for Artin, Dedekind and torus L-functions.

Typical use::

    from lfunc_lab import galois, artin, dirichlet
    K = galois.gaussian_field()
    zeta_K = artin.dedekind_handle(K, 1000)
    dirichlet.evaluate(zeta_K, 2, 1000).value
"""

from . import artin, core_arith, dirichlet, euler, galois, nctorus, primes, selberg
from .artin import (Representation, artin_euler_factor, artin_handle, dedekind_euler_factor,
                    dedekind_handle, literal_factorization_report, regular_rep_identity_check,
                    riemann_zeta_handle)
from .core_arith import (IntMatrix, IntPolynomial, PerronData, char_poly, mat_pow, perron_eigen,
                         poly_eval_rational, poly_mul)
from .dirichlet import (ComparisonReport, LFunctionHandle, Verdict, coeffs_from_euler, compare,
                        evaluate, product_handle)
from .euler import CycInt, EulerFactor, Rotation
from .galois import (ConjugacyClassId, FieldDescriptor, SplittingData, class_list,
                     frobenius_class, splitting_data)
from .nctorus import (CharCoeffs, Constant, OrderMod, TorusDescriptor, TraceMatch, is_so_mm_Z,
                      pi_of_p, torus_char_coeffs, torus_l_handle, torus_local_zeta)
from .primes import DegreePattern, cyclotomic, degree_pattern, multiplicative_order, sieve
from .selberg import LengthSpectrum, compare_spectra, selberg_zeta, spectrum_from_field

__version__ = "0.1.0"
