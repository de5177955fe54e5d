"""Singularity data of a parabolic connection on the projective line.

A datum records, point by point, the graded pieces of the parabolic
filtration together with the Jordan type of the graded residue acting on
each piece.  Logarithmic points sit at finite positions; the irregular
point at infinity carries one group per leading-term eigenvalue, each group
graded like a logarithmic point.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable, Iterator, Tuple

from .scalars import Cx, QQi, cx_eq, is_exact

DE_RHAM = "deRham"
DOLBEAULT = "dolbeault"


class InvalidDataError(ValueError):
    """Raised when an operation requires a valid datum and gets violations."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(f"{v.path}: {v.message}" for v in self.violations))


@dataclass(frozen=True)
class Violation:
    path: str
    message: str


@dataclass(frozen=True)
class JordanBlock:
    """One Jordan block of a graded residue: eigenvalue and dimension."""

    eigenvalue: Cx
    size: int

    def __post_init__(self):
        if self.size < 1:
            raise ValueError(f"Jordan block size must be >= 1, got {self.size}")


@dataclass(frozen=True)
class GradedResiduePiece:
    """A single parabolic weight level with the Jordan blocks of its residue."""

    weight: Fraction
    blocks: Tuple[JordanBlock, ...]

    def __post_init__(self):
        object.__setattr__(self, "weight", Fraction(self.weight))
        object.__setattr__(self, "blocks", tuple(self.blocks))

    @property
    def dimension(self) -> int:
        return sum(b.size for b in self.blocks)


@dataclass(frozen=True)
class LogPoint:
    """Logarithmic singularity at a finite position."""

    position: Cx
    pieces: Tuple[GradedResiduePiece, ...]

    def __post_init__(self):
        object.__setattr__(self, "pieces", tuple(self.pieces))

    @property
    def dimension(self) -> int:
        return sum(p.dimension for p in self.pieces)


@dataclass(frozen=True)
class IrregularGroup:
    """One eigenvalue group of the second-order term at infinity.

    ``leading_eigenvalue`` is the eigenvalue of the (semi-simple) leading
    term; ``pieces`` grade the residue block acting on that eigenspace.
    """

    leading_eigenvalue: Cx
    pieces: Tuple[GradedResiduePiece, ...]

    def __post_init__(self):
        object.__setattr__(self, "pieces", tuple(self.pieces))

    @property
    def dimension(self) -> int:
        return sum(p.dimension for p in self.pieces)


@dataclass(frozen=True)
class IrregularPoint:
    groups: Tuple[IrregularGroup, ...]

    def __post_init__(self):
        object.__setattr__(self, "groups", tuple(self.groups))

    @property
    def dimension(self) -> int:
        return sum(g.dimension for g in self.groups)


@dataclass(frozen=True)
class ConnectionData:
    """Full singularity datum: rank, degree, finite log points, infinity.

    ``side`` tags whether weights/eigenvalues are de Rham or Dolbeault
    parameters; the shape is identical.
    """

    rank: int
    degree: int
    log_points: Tuple[LogPoint, ...]
    infinity: IrregularPoint
    side: str = DE_RHAM

    def __post_init__(self):
        object.__setattr__(self, "log_points", tuple(self.log_points))

    def with_(self, **kw) -> "ConnectionData":
        return replace(self, **kw)

    def iter_finite_vectors(self) -> Iterator[tuple[int, Fraction, Cx, int]]:
        """Yield (point index, weight, eigenvalue, block size) per finite block."""
        for i, pt in enumerate(self.log_points):
            for piece in pt.pieces:
                for block in piece.blocks:
                    yield i, piece.weight, block.eigenvalue, block.size

    def iter_infinity_vectors(self) -> Iterator[tuple[int, Fraction, Cx, int]]:
        for g, grp in enumerate(self.infinity.groups):
            for piece in grp.pieces:
                for block in piece.blocks:
                    yield g, piece.weight, block.eigenvalue, block.size


def _validate_pieces(pieces, path, out, expect_dim=None, what="point"):
    prev = None
    for j, piece in enumerate(pieces):
        if not (0 <= piece.weight < 1):
            out.append(Violation(f"{path}.pieces[{j}]",
                                 f"weight {piece.weight} outside [0, 1)"))
        if prev is not None and piece.weight <= prev:
            out.append(Violation(f"{path}.pieces[{j}]", "weights not strictly increasing"))
        prev = piece.weight
        if not piece.blocks:
            out.append(Violation(f"{path}.pieces[{j}]", "piece has no blocks"))
        for k, block in enumerate(piece.blocks):
            if block.size < 1:
                out.append(Violation(f"{path}.pieces[{j}].blocks[{k}]",
                                     f"block size {block.size} < 1"))
    if expect_dim is not None:
        total = sum(p.dimension for p in pieces)
        if total != expect_dim:
            out.append(Violation(path, f"rank-sum mismatch: block sizes sum to {total}, "
                                       f"expected {expect_dim} for this {what}"))


def validate(data: ConnectionData) -> list[Violation]:
    """Check every structural invariant; empty list means the datum is valid."""
    out: list[Violation] = []
    if data.rank < 1:
        out.append(Violation("rank", f"rank must be positive, got {data.rank}"))
    if data.side not in (DE_RHAM, DOLBEAULT):
        out.append(Violation("side", f"unknown side tag {data.side!r}"))
    seen: list[Cx] = []
    for i, pt in enumerate(data.log_points):
        path = f"logPoints[{i}]"
        for other in seen:
            if cx_eq(pt.position, other, tol=0.0):
                out.append(Violation(path, f"duplicate log point position {pt.position!r}"))
        seen.append(pt.position)
        _validate_pieces(pt.pieces, path, out, expect_dim=data.rank, what="log point")
    leads: list[Cx] = []
    for g, grp in enumerate(data.infinity.groups):
        path = f"infinity.groups[{g}]"
        for other in leads:
            if cx_eq(grp.leading_eigenvalue, other, tol=0.0):
                out.append(Violation(path, "leading eigenvalues not pairwise distinct"))
        leads.append(grp.leading_eigenvalue)
        _validate_pieces(grp.pieces, path, out, expect_dim=grp.dimension, what="group")
    if data.infinity.groups and data.infinity.dimension != data.rank:
        out.append(Violation("infinity", f"rank-sum mismatch: group sizes sum to "
                                         f"{data.infinity.dimension}, expected {data.rank}"))
    return out


def require_valid(data: ConnectionData) -> None:
    violations = validate(data)
    if violations:
        raise InvalidDataError(violations)


def parabolic_degree(data: ConnectionData) -> Fraction:
    """degree + sum of weight * graded dimension over every parabolic point."""
    require_valid(data)
    total = Fraction(data.degree)
    for _, w, _, s in data.iter_finite_vectors():
        total += w * s
    for _, w, _, s in data.iter_infinity_vectors():
        total += w * s
    return total


def graded_dimensions(point) -> dict[Fraction, int]:
    """Map each weight of a log point or irregular group to its dimension."""
    out: dict[Fraction, int] = {}
    for piece in point.pieces:
        out[piece.weight] = out.get(piece.weight, 0) + piece.dimension
    return out


def direct_sum(a: ConnectionData, b: ConnectionData) -> ConnectionData:
    """Blockwise direct sum of two data with identical singular loci.

    Pieces at matching positions are concatenated and re-sorted by weight
    (merging equal weights); degrees and ranks add.  Used by tests for the
    additivity of the parabolic degree.
    """
    def merge_pieces(p1, p2):
        by_weight: dict[Fraction, list[JordanBlock]] = {}
        for piece in tuple(p1) + tuple(p2):
            by_weight.setdefault(piece.weight, []).extend(piece.blocks)
        return tuple(GradedResiduePiece(w, tuple(bs))
                     for w, bs in sorted(by_weight.items()))

    if len(a.log_points) != len(b.log_points):
        raise ValueError("direct sum needs matching log points")
    points = []
    for pa, pb in zip(a.log_points, b.log_points):
        if not cx_eq(pa.position, pb.position, tol=0.0):
            raise ValueError("direct sum needs matching log point positions")
        points.append(LogPoint(pa.position, merge_pieces(pa.pieces, pb.pieces)))
    by_lead: list[IrregularGroup] = []
    used = set()
    for grp in a.infinity.groups + b.infinity.groups:
        if id(grp) in used:
            continue
        partner = None
        for other in b.infinity.groups if grp in a.infinity.groups else ():
            if cx_eq(grp.leading_eigenvalue, other.leading_eigenvalue, tol=0.0):
                partner = other
        if partner is not None:
            used.add(id(partner))
            by_lead.append(IrregularGroup(grp.leading_eigenvalue,
                                          merge_pieces(grp.pieces, partner.pieces)))
        else:
            by_lead.append(grp)
    return ConnectionData(rank=a.rank + b.rank, degree=a.degree + b.degree,
                          log_points=tuple(points),
                          infinity=IrregularPoint(tuple(by_lead)),
                          side=a.side)
