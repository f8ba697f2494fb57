"""Numerical verification of the integral formulas, the Legendre-type
relation, the differential equations and the binomial inequalities."""

from .integrals import (
    WallisMatrixState,
    power_integral_complete,
    power_integral_incomplete,
    power_integral_quadrature,
    recurrence_terms,
    sn_power_recurrence_residual,
    wallis_I,
    wallis_II_sn,
    wallis_matrix,
)
from .inequalities import INEQUALITIES, inequality_check, inequality_sides, mandated_sign
from .legendre import (
    derivative_pair,
    derivative_residuals,
    legendre_constant,
    legendre_L,
    wronskian_invariant,
    y_ode_residual,
)
from .ode import EQUATIONS, ode_residual, ode_sides
from .report import VerificationReport, make_report
from .suites import SUITES, TOLERANCES, SuiteRun, run_suite
