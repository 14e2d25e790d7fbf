"""Exact two-bridge knot invariants and zero-location certificates for
their Alexander polynomials.

The package is organized as a pipeline: a reduced fraction becomes an even
continued-fraction word (twobridge), the word becomes Seifert and companion
matrices and an exact Alexander polynomial (seifert), the polynomial's
zeros are located numerically with exact cross-checks (roots), and rational
Lyapunov certificates prove strip bounds on the zeros (stability).  The
constant-magnitude family has its own recurrence machinery (families).
Everything rests on the exact kernel (exactmath).
"""

from .exactmath import (
    IntPoly,
    PDVerdict,
    RatMatrix,
    Rational,
    SturmChain,
    ldlt_positive_definite,
    palindrome_sign,
    sturm_real_root_count,
    symmetric_fold,
    symmetric_unfold,
)
from .families import (
    FamilyReport,
    family_cf,
    fibonacci_poly,
    lambda_mu_polys,
    p_poly,
    q_poly,
    remark2_extremal,
    theorem5_verify,
)
from .roots import NoConvergenceError, ZeroReport, ZeroSet, find_zeros, zero_report
from .seifert import (
    NotApplicableError,
    alexander_poly,
    companion_matrix,
    normalized_alexander,
    seifert_matrix,
    symmetric_companion,
)
from .stability import (
    BlockReport,
    CertificateReport,
    lyapunov_certificate,
    positivity_lemma_check,
    theorem4_check,
    theorem_blocks,
)
from .twobridge import (
    CFWord,
    Classification,
    cf_to_fraction,
    classify,
    even_cf_expand,
    normalize_fraction,
    sign_runs,
)

__version__ = "0.1.0"
