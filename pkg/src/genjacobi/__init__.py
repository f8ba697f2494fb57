"""Generalized trigonometric functions, generalized Jacobi elliptic
functions with three parameters, their complete elliptic integrals, and a
numerical verification engine for the identities they satisfy."""

from .errors import DomainError, EvaluationError
from .gjef import (
    E_p1r,
    E_pqr,
    H_pqr,
    K_p1r,
    K_pqr,
    Modulus,
    ParamTriple,
    am_pqr,
    cn_pqr,
    dn_pqr,
    phi,
    sn_pqr,
    sn_with_complement,
    sncndn,
)
from .gtf import (
    F_pq,
    ParamPair,
    conjugate,
    cos_pq,
    pi_extended,
    pi_pq,
    sin_cos_pq,
    sin_pq,
    sin_with_complement,
)
from .quadrature import QuadratureResult, integrate_01, integrate_0x, integrate_x1
from .specfun import SeriesResult, appell_f1, beta, gamma, gauss_2f1, log_gamma, pochhammer

__version__ = "0.1.0"
