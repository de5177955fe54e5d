"""Hypothesis checkers for the transform theorems.

Each checker emits one entry per quantified hypothesis instance, so a report
pinpoints exactly which piece of which point violates what.  The checkers
are grouped by consuming theorem: the standing eigenvalue assumptions, the
parabolic-sheaf conditions, and the stationary-phase conditions (regularity
plus the weight-separation condition on eigenvalue differences).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .data import ConnectionData, require_valid
from .scalars import DEFAULT_TOL, Cx, cx_eq, is_integer_scalar


@dataclass(frozen=True)
class AssumptionCheck:
    name: str
    path: str
    passed: bool
    message: str = ""


@dataclass
class AssumptionReport:
    checks: list[AssumptionCheck] = field(default_factory=list)

    def add(self, name: str, path: str, passed: bool, message: str = ""):
        self.checks.append(AssumptionCheck(name, path, passed, message))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[AssumptionCheck]:
        return [c for c in self.checks if not c.passed]

    def extend(self, other: "AssumptionReport") -> "AssumptionReport":
        self.checks.extend(other.checks)
        return self


def check_main_assumptions(data: ConnectionData, tol: float = DEFAULT_TOL) -> AssumptionReport:
    """Standing eigenvalue assumptions.

    (0) at infinity no graded-residue eigenvalue is an integer;
    (1) at finite points, weight-0 pieces have no nonzero integer eigenvalue
        and every zero-eigenvalue block has size 1 (the nilpotent part acts
        trivially on the generalized 0-eigenspace);
    (2) at finite points, positive-weight pieces have no integer eigenvalue.
    """
    require_valid(data)
    report = AssumptionReport()
    for g, grp in enumerate(data.infinity.groups):
        for j, piece in enumerate(grp.pieces):
            path = f"infinity.groups[{g}].pieces[{j}]"
            bad = [b.eigenvalue for b in piece.blocks if is_integer_scalar(b.eigenvalue, tol)]
            report.add("main-0-no-integer-eigenvalue-at-infinity", path, not bad,
                       "" if not bad else f"integer eigenvalue(s) {bad!r}")
    for i, pt in enumerate(data.log_points):
        for j, piece in enumerate(pt.pieces):
            path = f"logPoints[{i}].pieces[{j}]"
            if piece.weight == 0:
                bad = [b.eigenvalue for b in piece.blocks
                       if is_integer_scalar(b.eigenvalue, tol)
                       and not cx_eq(b.eigenvalue, 0, tol)]
                report.add("main-1-no-nonzero-integer-eigenvalue", path, not bad,
                           "" if not bad else f"nonzero integer eigenvalue(s) {bad!r}")
                fat = [b.size for b in piece.blocks
                       if cx_eq(b.eigenvalue, 0, tol) and b.size > 1]
                report.add("main-1-trivial-nilpotent-on-zero-eigenspace", path, not fat,
                           "" if not fat else f"zero-eigenvalue block of size {fat[0]}")
            else:
                bad = [b.eigenvalue for b in piece.blocks if is_integer_scalar(b.eigenvalue, tol)]
                report.add("main-2-no-integer-eigenvalue-positive-weight", path, not bad,
                           "" if not bad else f"integer eigenvalue(s) {bad!r}")
    return report


def check_parabolic_sheaf_conditions(data: ConnectionData,
                                     tol: float = DEFAULT_TOL) -> AssumptionReport:
    """Extra conditions making the refined extension family a parabolic sheaf.

    At infinity the piece weight must not be an eigenvalue of its graded
    residue; at finite points weight-0 pieces must have trivial nilpotent
    part on the generalized 0-eigenspace, and eigenvalues with nonzero real
    part must differ from the piece weight.
    """
    require_valid(data)
    report = AssumptionReport()
    for g, grp in enumerate(data.infinity.groups):
        for j, piece in enumerate(grp.pieces):
            path = f"infinity.groups[{g}].pieces[{j}]"
            hit = [b.eigenvalue for b in piece.blocks
                   if cx_eq(b.eigenvalue, piece.weight, tol)]
            report.add("sheaf-infinity-weight-not-eigenvalue", path, not hit,
                       "" if not hit else f"weight {piece.weight} is an eigenvalue")
    for i, pt in enumerate(data.log_points):
        for j, piece in enumerate(pt.pieces):
            path = f"logPoints[{i}].pieces[{j}]"
            if piece.weight == 0:
                fat = [b.size for b in piece.blocks
                       if cx_eq(b.eigenvalue, 0, tol) and b.size > 1]
                report.add("sheaf-finite-trivial-nilpotent-on-zero", path, not fat,
                           "" if not fat else f"zero-eigenvalue block of size {fat[0]}")
            else:
                hit = []
                for b in piece.blocks:
                    re = complex(b.eigenvalue).real
                    if abs(re) > tol and cx_eq(b.eigenvalue, piece.weight, tol):
                        hit.append(b.eigenvalue)
                report.add("sheaf-finite-weight-differs-from-eigenvalue", path, not hit,
                           "" if not hit else f"weight {piece.weight} equals eigenvalue")
    return report


def _check_point_conditions(pieces, path, report, tol):
    # condition (1): equal eigenvalue-minus-weight across blocks forces equal weight
    vectors = [(piece.weight, b.eigenvalue) for piece in pieces for b in piece.blocks]
    ok = True
    detail = ""
    for a in range(len(vectors)):
        for b in range(a + 1, len(vectors)):
            (w1, m1), (w2, m2) = vectors[a], vectors[b]
            d1 = m1 - w1
            d2 = m2 - w2
            if cx_eq(d1, d2, tol) and w1 != w2:
                ok = False
                detail = (f"eigenvalue-weight differences agree ({d1!r}) "
                          f"but weights {w1} != {w2}")
    report.add("stationary-1-difference-separates-weights", path, ok, detail)
    # condition (2): each graded piece regular, i.e. distinct block eigenvalues.
    # Repeated weight-0 size-1 zero-eigenvalue blocks are tolerated: they are
    # exactly the directions the transform drops, and transformed data
    # legitimately carry several of them.
    for j, piece in enumerate(pieces):
        eigs = []
        ok = True
        detail = ""
        for b in piece.blocks:
            if piece.weight == 0 and b.size == 1 and cx_eq(b.eigenvalue, 0, tol):
                continue
            for seen in eigs:
                if cx_eq(b.eigenvalue, seen, tol):
                    ok = False
                    detail = f"repeated block eigenvalue {b.eigenvalue!r}"
            eigs.append(b.eigenvalue)
        report.add("stationary-2-graded-residue-regular", f"{path}.pieces[{j}]", ok, detail)


def check_stationary_phase_conditions(data: ConnectionData,
                                      tol: float = DEFAULT_TOL,
                                      assume_generic: bool = False) -> AssumptionReport:
    """Per-point conditions for the singularity-transform theorems.

    The genericity of the constant term (nonvanishing corner entry of the
    local model) cannot be read off graded data; it is recorded as asserted
    or not, without failing the report.
    """
    require_valid(data)
    report = AssumptionReport()
    for i, pt in enumerate(data.log_points):
        _check_point_conditions(pt.pieces, f"logPoints[{i}]", report, tol)
    for g, grp in enumerate(data.infinity.groups):
        _check_point_conditions(grp.pieces, f"infinity.groups[{g}]", report, tol)
    report.add("genericity-flag", "datum", True,
               "asserted by caller" if assume_generic else
               "not verified; conclusions hold generically")
    return report


def check_all(data: ConnectionData, tol: float = DEFAULT_TOL,
              assume_generic: bool = False) -> AssumptionReport:
    report = check_main_assumptions(data, tol)
    report.extend(check_parabolic_sheaf_conditions(data, tol))
    report.extend(check_stationary_phase_conditions(data, tol, assume_generic))
    return report


class HypothesisError(RuntimeError):
    """An operation refused to run because hypothesis checks failed."""

    def __init__(self, report: AssumptionReport, message: str = "hypotheses fail"):
        self.report = report
        fails = ", ".join(f"{c.name}@{c.path}" for c in report.failures())
        super().__init__(f"{message}: {fails}")
