"""Elementary modifications, refined lattices and minimal-extension descriptors.

Lattices are described by one integer twist per basis vector: the local
generator is (local coordinate)^twist times the flag vector, so a positive
twist shrinks the sheaf and each twist contributes -1 to the degree.  The
local coordinate is z - z_i at finite points and 1/z at infinity.

Basis vectors are ordered piece by piece (weights increasing), block by
block, and inside a block by increasing weight-filtration gradation index,
so the vectors with gradation index < -1 come first.  Only counts matter
for degrees; the fixed order makes specs comparable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Optional, Tuple

from .data import ConnectionData, JordanBlock, require_valid
from .scalars import DEFAULT_TOL, Cx, cx_eq, is_integer_scalar


def block_gradation(size: int) -> list[int]:
    """Gradation indices of a size-s Jordan block, centered at 0, ascending.

    A size-s nilpotent has weight-filtration gradation {s-1, s-3, ..., 1-s};
    vectors are stored ascending, so the k < -1 part comes first.
    """
    return [1 - size + 2 * t for t in range(size)]


def weight_filtration_split(size: int) -> tuple[int, int]:
    """(dimension with k < -1, dimension with k >= -1) for one Jordan block."""
    below = sum(1 for k in block_gradation(size) if k < -1)
    return below, size - below


@dataclass(frozen=True)
class LatticeSpec:
    """Integer twists per basis vector, grouped per parabolic point."""

    log_twists: Tuple[Tuple[int, ...], ...]
    infinity_twists: Tuple[int, ...]

    @property
    def degree_delta(self) -> int:
        return -(sum(sum(t) for t in self.log_twists) + sum(self.infinity_twists))


def _finite_target_twist(weight: Fraction, eigenvalue: Cx, k: int, tol: float) -> int:
    if weight == 0:
        return 0 if k < -1 else 1
    return 0


def _infinity_twist(weight: Fraction, eigenvalue: Cx, k: int, tol: float) -> int:
    if weight == 0:
        return 1 if k < -1 else 2
    return 1


def _finite_source_twist(weight: Fraction, eigenvalue: Cx, k: int, tol: float) -> int:
    if weight == 0:
        if cx_eq(eigenvalue, 0, tol):
            return 0
        return 0 if k < -1 else 1
    return 0


def _point_twists(pieces, rule, tol) -> Tuple[int, ...]:
    out = []
    for piece in pieces:
        for block in piece.blocks:
            for k in block_gradation(block.size):
                out.append(rule(piece.weight, block.eigenvalue, k, tol))
    return tuple(out)


def target_twists(data: ConnectionData, include_infinity_modification: bool = True,
                  tol: float = DEFAULT_TOL) -> LatticeSpec:
    """Twists of the target sheaf of the twisted de Rham complex."""
    require_valid(data)
    logs = tuple(_point_twists(pt.pieces, _finite_target_twist, tol)
                 for pt in data.log_points)
    if include_infinity_modification:
        inf = tuple(t for grp in data.infinity.groups
                    for t in _point_twists(grp.pieces, _infinity_twist, tol))
    else:
        inf = tuple(0 for grp in data.infinity.groups
                    for _ in _point_twists(grp.pieces, _infinity_twist, tol))
    return LatticeSpec(logs, inf)


def source_twists(data: ConnectionData, include_infinity_modification: bool = True,
                  tol: float = DEFAULT_TOL) -> LatticeSpec:
    """Twists of the source sheaf; agrees with the target sheaf at infinity."""
    require_valid(data)
    logs = tuple(_point_twists(pt.pieces, _finite_source_twist, tol)
                 for pt in data.log_points)
    target = target_twists(data, include_infinity_modification, tol)
    return LatticeSpec(logs, target.infinity_twists)


def refinement_shift(vector_weight: Fraction, level: Fraction) -> int:
    """The unique integer m with vector_weight + m - 1 < level <= vector_weight + m."""
    return ceil(Fraction(level) - Fraction(vector_weight))


def refine_twists(base: LatticeSpec, data: ConnectionData, level: Fraction,
                  tol: float = DEFAULT_TOL) -> LatticeSpec:
    """Shift twists to the level-refined lattice.

    Vectors whose weight and eigenvalue both vanish are untouched for every
    level; all others shift by the integer placing the vector weight just
    below the level.  At infinity the same rule applies in the coordinate
    1/z (every vector shifts; vanishing pairs cannot occur there under the
    standing assumptions).
    """
    require_valid(data)
    level = Fraction(level)
    logs = []
    for pt, twists in zip(data.log_points, base.log_twists):
        new = list(twists)
        idx = 0
        for piece in pt.pieces:
            for block in piece.blocks:
                for _ in range(block.size):
                    skip = piece.weight == 0 and cx_eq(block.eigenvalue, 0, tol)
                    if not skip:
                        new[idx] += refinement_shift(piece.weight, level)
                    idx += 1
        logs.append(tuple(new))
    inf = list(base.infinity_twists)
    idx = 0
    for grp in data.infinity.groups:
        for piece in grp.pieces:
            for block in piece.blocks:
                for _ in range(block.size):
                    inf[idx] += refinement_shift(piece.weight, level)
                    idx += 1
    return LatticeSpec(tuple(logs), tuple(inf))


def sheaf_degree(spec: LatticeSpec, bundle_degree: int) -> int:
    return bundle_degree + spec.degree_delta


def vector_count_nonzero(data: ConnectionData, tol: float = DEFAULT_TOL) -> int:
    """Number of finite basis vectors whose (weight, eigenvalue) is not (0, 0)."""
    n = 0
    for _, w, mu, s in data.iter_finite_vectors():
        if not (w == 0 and cx_eq(mu, 0, tol)):
            n += s
    return n


@dataclass(frozen=True)
class BlockExtension:
    """Minimal-extension shape of one Jordan block.

    ``meromorphic_vectors`` basis vectors keep full pole order; when the
    block eigenvalue is an integer n, the last vector instead generates the
    rank-one lattice with pole order exactly n (``lattice_pole_order = n``).
    """

    meromorphic_vectors: int
    lattice_pole_order: Optional[int] = None

    @property
    def size(self) -> int:
        return self.meromorphic_vectors + (0 if self.lattice_pole_order is None else 1)


@dataclass(frozen=True)
class MinimalExtensionSpec:
    log_blocks: Tuple[Tuple[BlockExtension, ...], ...]
    infinity_meromorphic: bool = True


def block_minimal_extension(block: JordanBlock, tol: float = DEFAULT_TOL) -> BlockExtension:
    if is_integer_scalar(block.eigenvalue, tol):
        n = int(round(complex(block.eigenvalue).real))
        return BlockExtension(meromorphic_vectors=block.size - 1, lattice_pole_order=n)
    return BlockExtension(meromorphic_vectors=block.size)


def minimal_extension(data: ConnectionData, tol: float = DEFAULT_TOL) -> MinimalExtensionSpec:
    """Per-block minimal-extension descriptors.

    Non-integer eigenvalues keep the meromorphic module; an integer
    eigenvalue n with block size s is meromorphic on the first s-1 vectors
    and a pole-order-n lattice on the last.  The irregular point is always
    meromorphic.  Integer eigenvalues with nontrivial nilpotent part are
    handled even though the standing assumptions exclude them: the operator
    oracle cross-checks outside that regime.
    """
    require_valid(data)
    logs = tuple(tuple(block_minimal_extension(b, tol)
                       for piece in pt.pieces for b in piece.blocks)
                 for pt in data.log_points)
    return MinimalExtensionSpec(log_blocks=logs, infinity_meromorphic=True)
