"""Conversion between de Rham (eigenvalue, weight) and Dolbeault parameters.

The dictionary is linear and exact: a de Rham residue eigenvalue ``mu`` with
parabolic weight ``beta`` corresponds to the Dolbeault weight ``Re mu`` and
Higgs residue eigenvalue ``(mu - beta) / 2``.  The irregular leading term
halves.  No normalization happens in the scalar maps; ``normalize_weight``
reduces a raw weight into [0, 1) and reports the integer shift.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .data import GradedResiduePiece, IrregularGroup, JordanBlock
from .scalars import Cx, QQi, real_part

Weight = Union[Fraction, float]


@dataclass(frozen=True)
class DolbeaultParams:
    weight: Weight          # raw, may fall outside [0, 1)
    eigenvalue: Cx


def de_rham_to_dolbeault(mu: Cx, beta: Fraction) -> DolbeaultParams:
    """(mu, beta) -> (Re mu, (mu - beta)/2), exact for exact input."""
    beta = Fraction(beta)
    if isinstance(mu, QQi):
        lam = (mu - beta) / QQi(2)
    else:
        lam = (complex(mu) - beta) / 2
    return DolbeaultParams(weight=real_part(mu), eigenvalue=lam)


def dolbeault_to_de_rham(alpha: Weight, lam: Cx) -> tuple[Cx, Weight]:
    """Invert the table: beta = alpha - 2 Re lam, mu = beta + 2 lam."""
    two_re = 2 * real_part(lam)
    beta = alpha - two_re
    if isinstance(lam, QQi) and isinstance(beta, Fraction):
        mu = QQi(2) * lam + beta
    else:
        mu = 2 * complex(lam) + beta
    return mu, beta


def normalize_weight(alpha: Weight) -> tuple[Weight, int]:
    """Reduce a raw weight into [0, 1); returns (normalized, integer shift)."""
    if isinstance(alpha, Fraction):
        shift = -(alpha.numerator // alpha.denominator)
        return alpha + shift, shift
    import math
    shift = -math.floor(alpha)
    return alpha + shift, shift


def irregular_group_to_dolbeault(group: IrregularGroup) -> IrregularGroup:
    """Convert one infinity group: leading term halves, pieces go through the
    table (block sizes preserved), converted weights normalized into [0, 1)."""
    if isinstance(group.leading_eigenvalue, QQi):
        lead = group.leading_eigenvalue / QQi(2)
    else:
        lead = complex(group.leading_eigenvalue) / 2
    converted: dict[Weight, list[JordanBlock]] = {}
    for piece in group.pieces:
        for block in piece.blocks:
            par = de_rham_to_dolbeault(block.eigenvalue, piece.weight)
            alpha, _ = normalize_weight(par.weight)
            converted.setdefault(alpha, []).append(JordanBlock(par.eigenvalue, block.size))
    pieces = tuple(GradedResiduePiece(w, tuple(bs)) for w, bs in sorted(converted.items()))
    return IrregularGroup(lead, pieces)


def irregular_group_to_de_rham(group: IrregularGroup) -> IrregularGroup:
    """Inverse of :func:`irregular_group_to_dolbeault`.

    The de Rham weight is recovered inside [0, 1) as (alpha - 2 Re lam) mod 1;
    since stored weights always live in [0, 1), the round trip is exact.
    """
    if isinstance(group.leading_eigenvalue, QQi):
        lead = group.leading_eigenvalue * QQi(2)
    else:
        lead = complex(group.leading_eigenvalue) * 2
    converted: dict[Weight, list[JordanBlock]] = {}
    for piece in group.pieces:
        for block in piece.blocks:
            _, beta_raw = dolbeault_to_de_rham(piece.weight, block.eigenvalue)
            beta, shift = normalize_weight(beta_raw)
            if isinstance(block.eigenvalue, QQi) and isinstance(beta, Fraction):
                mu = QQi(2) * block.eigenvalue + beta
            else:
                mu = 2 * complex(block.eigenvalue) + beta
            converted.setdefault(beta, []).append(JordanBlock(mu, block.size))
    pieces = tuple(GradedResiduePiece(w, tuple(bs)) for w, bs in sorted(converted.items()))
    return IrregularGroup(lead, pieces)
