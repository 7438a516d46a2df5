"""Exact linear algebra over Q for constant matrices, backed by sympy's DomainMatrix."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .errors import SingularMatrixError

__all__ = ["rational_rank", "rational_det", "rational_inverse", "rational_matmul", "rational_power", "rational_power_ranks", "to_fractions"]

Matrix = Sequence[Sequence[object]]


def _dm(a: Matrix) -> DomainMatrix:
    rows = len(a)
    cols = len(a[0]) if rows else 0
    elems = {}
    for i, r in enumerate(a):
        row = {j: QQ(Fraction(x).numerator, Fraction(x).denominator) for j, x in enumerate(r) if x}
        if row:
            elems[i] = row
    return DomainMatrix(elems, (rows, cols), QQ)


def _frac(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def to_fractions(a: Matrix) -> list[list[Fraction]]:
    return [[Fraction(x) for x in r] for r in a]


def rational_rank(a: Matrix) -> int:
    if not a or not len(a[0]):
        return 0
    return _dm(a).rank()


def rational_det(a: Matrix) -> Fraction:
    if not a:
        return Fraction(1)
    return _frac(_dm(a).to_dense().det())


def rational_inverse(a: Matrix) -> list[list[Fraction]]:
    if rational_det(a) == 0:
        raise SingularMatrixError("matrix is singular")
    inv = _dm(a).to_dense().inv()
    return [[_frac(x) for x in r] for r in inv.to_list()]


def rational_matmul(a: Matrix, b: Matrix) -> list[list[Fraction]]:
    if not a or not b:
        return [[] for _ in a]
    prod = (_dm(a) * _dm(b)).to_dense()
    return [[_frac(x) for x in r] for r in prod.to_list()]


def rational_power_ranks(a: Matrix, max_power: int) -> list[int]:
    """``[rank(a^0), rank(a^1), ..., rank(a^max_power)]``, stopping early at rank 0."""
    n = len(a)
    ranks = [n]
    base = _dm(a)
    power = base
    for _ in range(max_power):
        ranks.append(power.rank())
        if ranks[-1] == 0:
            break
        power = power * base
    return ranks


def rational_power(a: Matrix, k: int) -> list[list[Fraction]]:
    n = len(a)
    out = _dm([[int(i == j) for j in range(n)] for i in range(n)])
    base = _dm(a)
    for _ in range(k):
        out = out * base
    return [[_frac(x) for x in r] for r in out.to_dense().to_list()]
