"""Exact arithmetic for asymptotic FLT over the cyclotomic Z_p-extension layers
Q_{n,p} and for general p-extensions.

Modules: ``arith`` (integer/rational polynomials, modular factoring, Sturm),
``cyclotomic`` (layer polynomials), ``numfield`` (Z[theta][1/2] arithmetic,
norms, 2-adic orders), ``sunits`` (bounded unit and S-unit search),
``verdict`` (Wieferich scan, verdicts, certifier), ``lmfdb`` (field records
and bulk filtering) and ``cli``.
"""

from .cyclotomic import LayerSpec, layer_polynomial, is_inert_by_congruence
from .numfield import NumberField, FieldElement, InertPrimeContext, RamifiedPrimeContext, splitting_pattern
from .sunits import SearchConfig, enumerate_unit_solutions, enumerate_sunit_solutions, check_theorem4_conditions
from .verdict import asymptotic_flt_verdict, certify_general_field, wieferich_scan

__version__ = "0.1.0"
