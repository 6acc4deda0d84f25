"""Decomposition witnesses and their self-verification reports.

A quasipolar witness for a matrix A is an idempotent p commuting with
everything that commutes with A, such that A + p is a unit and A*p is
quasinilpotent.  A rad-clean witness is an idempotent e commuting with A
such that A - e is a unit and e*A*e lies in the radical of the corner
ring e*R*e.  Constructions in this package always return witnesses whose
defining identities have been re-checked; ``checks()`` re-runs those
identities and reports each one by name so callers (and the CLI) can
show exactly what was verified.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .matrices import ShapedMatrix
from .rings import QpolarError


class Comm2Evidence(Enum):
    """How double-commutant membership of the idempotent is known.

    FINITE_EXHAUSTIVE: checked against every commuting element of a
    finite carrier.  CASE_CONSTRUCTION: the idempotent was built by the
    triangular case table, whose defining equations force it to commute
    with the full commutant.  POLYNOMIAL_IN_A: the idempotent is a
    polynomial in A, so anything commuting with A commutes with it.
    """

    FINITE_EXHAUSTIVE = "finite-exhaustive"
    CASE_CONSTRUCTION = "case-construction"
    POLYNOMIAL_IN_A = "polynomial-in-a"


class CheckReport:
    """Named boolean checks, in a fixed order."""

    def __init__(self, entries):
        self.entries = tuple(entries)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.entries)

    @property
    def failed_names(self):
        return [name for name, ok in self.entries if not ok]

    def to_dict(self) -> dict:
        return {name: ok for name, ok in self.entries}

    def __repr__(self):
        state = "ok" if self.passed else "FAILED " + ",".join(self.failed_names)
        return f"CheckReport({state})"


def _radical_certificate(q: ShapedMatrix) -> bool:
    """A checkable reason for q being quasinilpotent.

    Zero is trivially quasinilpotent.  For triangular-type shapes a
    radical diagonal puts q in the radical of the shape ring, and radical
    elements are quasinilpotent in any ring.  For full 2x2 matrices over
    a commutative local ring, either all entries are radical (q is in the
    radical of M2) or trace and determinant both are, which is the
    quasinilpotence test for such matrices.
    """
    zero = ShapedMatrix.zero(q.ring, q.shape)
    if q == zero:
        return True
    if q.shape.unit_rule == "diag":
        return all(d.in_jacobson() for d in q.diagonal())
    if q.shape.unit_rule == "det2":
        if all(a.in_jacobson() for row in q.rows for a in row):
            return True
        return q.trace().in_jacobson() and q.det2().in_jacobson()
    return False


@dataclass(frozen=True)
class QuasipolarWitness:
    """p idempotent in the double commutant, A + p a unit, A*p quasinilpotent."""

    a: ShapedMatrix
    p: ShapedMatrix
    u: ShapedMatrix
    q: ShapedMatrix
    comm2_evidence: Comm2Evidence

    def checks(self) -> CheckReport:
        a, p, u, q = self.a, self.p, self.u, self.q
        return CheckReport(
            [
                ("p_idempotent", p * p == p),
                ("p_commutes_with_a", p * a == a * p),
                ("u_equals_a_plus_p", u == a + p),
                ("u_unit", u.is_unit()),
                ("q_equals_a_times_p", q == a * p),
                ("q_quasinilpotent_certificate", _radical_certificate(q)),
            ]
        )

    def to_dict(self) -> dict:
        report = self.checks()
        return {
            "a": self.a.to_json(),
            "p": self.p.to_json(),
            "u": self.u.to_json(),
            "q": self.q.to_json(),
            "comm2_evidence": self.comm2_evidence.value,
            "checks": report.to_dict(),
            "ok": report.passed,
        }


@dataclass(frozen=True)
class RadCleanWitness:
    """e idempotent commuting with A, A - e a unit, e*A*e radical in the corner."""

    a: ShapedMatrix
    e: ShapedMatrix
    v: ShapedMatrix
    corner_j: ShapedMatrix

    def checks(self) -> CheckReport:
        a, e, v, cj = self.a, self.e, self.v, self.corner_j
        return CheckReport(
            [
                ("e_idempotent", e * e == e),
                ("e_commutes_with_a", e * a == a * e),
                ("v_equals_a_minus_e", v == a - e),
                ("v_unit", v.is_unit()),
                ("corner_j_equals_eae", cj == e * a * e),
                ("corner_j_radical_diagonal", all(d.in_jacobson() for d in cj.diagonal())),
            ]
        )

    def to_dict(self) -> dict:
        report = self.checks()
        return {
            "a": self.a.to_json(),
            "e": self.e.to_json(),
            "v": self.v.to_json(),
            "corner_j": self.corner_j.to_json(),
            "checks": report.to_dict(),
            "ok": report.passed,
        }


class WitnessInvalid(QpolarError):
    """A constructed witness failed its own defining identities."""


def require_valid(witness) -> None:
    """Raise unless every named check passes; constructions call this."""
    report = witness.checks()
    if not report.passed:
        raise WitnessInvalid(
            f"witness checks failed: {', '.join(report.failed_names)} for {witness.a!r}"
        )
