"""Per-point verification records."""

from __future__ import annotations

from dataclasses import dataclass

from ..gjef import ParamTriple

__all__ = ["VerificationReport", "make_report", "sort_key", "CSV_COLUMNS"]

CSV_COLUMNS = (
    "identity_id",
    "p",
    "q",
    "r",
    "k",
    "point",
    "lhs",
    "rhs",
    "abs_err",
    "rel_err",
    "pass",
    "tol",
)


@dataclass(frozen=True)
class VerificationReport:
    """One identity checked at one grid point.

    ``passed`` holds exactly when ``abs_err <= tol`` or ``rel_err <= tol``.
    """

    identity_id: str
    params: ParamTriple
    k: float
    point: float
    lhs: float
    rhs: float
    abs_err: float
    rel_err: float
    passed: bool
    tol: float

    def as_dict(self) -> dict:
        return {
            "identity_id": self.identity_id,
            "params": {"p": self.params.p, "q": self.params.q, "r": self.params.r},
            "k": self.k,
            "point": self.point,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "abs_err": self.abs_err,
            "rel_err": self.rel_err,
            "pass": self.passed,
            "tol": self.tol,
        }

    def as_row(self) -> tuple:
        return (
            self.identity_id,
            self.params.p,
            self.params.q,
            self.params.r,
            self.k,
            self.point,
            self.lhs,
            self.rhs,
            self.abs_err,
            self.rel_err,
            self.passed,
            self.tol,
        )


def make_report(
    identity_id: str, pt: ParamTriple, k: float, point: float, lhs: float, rhs: float, tol: float
) -> VerificationReport:
    """Build a report; ``rel_err`` is relative to the larger side, 0 when both vanish."""
    lhs, rhs = float(lhs), float(rhs)
    abs_err = abs(lhs - rhs)
    scale = max(abs(lhs), abs(rhs))
    if scale == 0.0:
        rel_err = 0.0
    else:
        rel_err = abs_err / scale
    # NaN compares false, so a NaN side never passes
    ok = abs_err <= tol or rel_err <= tol
    return VerificationReport(
        identity_id, pt, float(k), float(point), lhs, rhs, abs_err, rel_err, ok, tol
    )


def sort_key(rep: VerificationReport) -> tuple:
    pt = rep.params
    return (rep.identity_id, pt.p, pt.q, pt.r, rep.k, rep.point)
