"""Brute-force representability test by exact linear algebra.

Deliberately avoids the quotient-ring machinery: powers of ``cos t`` and
``sin t`` are expanded binomially in the exponential basis ``e^{imt}`` and the
resulting linear system is solved by Gaussian elimination over Q(i).
"""
from __future__ import annotations

from math import comb
from typing import Sequence

from .numkernel import ONE, ZERO, GaussRational, I
from .trigalg import TrigPoly

__all__ = ["solve_linear", "exponential_coefficients", "power_columns", "representability_oracle"]

HALF = GaussRational(1) / 2


def solve_linear(
    matrix: Sequence[Sequence[GaussRational]], rhs: Sequence[GaussRational]
) -> list[GaussRational] | None:
    """One exact solution of ``matrix @ sol = rhs`` or None if inconsistent.

    Free variables are set to zero. The inputs are copied, not modified.
    """
    rows = [list(row) + [b] for row, b in zip(matrix, rhs)]
    ncols = len(matrix[0]) if matrix else 0
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = ONE / rows[r][col]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    for row in rows[r:]:
        if row[-1]:
            return None
    sol = [ZERO] * ncols
    for i, col in enumerate(pivots):
        sol[col] = rows[i][-1]
    return sol


def exponential_coefficients(f: TrigPoly, k: int) -> list[GaussRational]:
    """Coefficients of ``e^{imt}`` for ``m = -k..k`` (index ``m + k``)."""
    out = [ZERO] * (2 * k + 1)
    out[k] = f.cos_coeff(0)
    for n in range(1, k + 1):
        a, b = f.cos_coeff(n), f.sin_coeff(n)
        # cos(nt) = (e+ + e-)/2, sin(nt) = (e+ - e-)/(2i)
        out[k + n] = a * HALF - I * b * HALF
        out[k - n] = a * HALF + I * b * HALF
    return out


def _power_expansion(n: int, k: int, sine: bool) -> list[GaussRational]:
    out = [ZERO] * (2 * k + 1)
    scale = ONE / (GaussRational(2) * I if sine else GaussRational(2)) ** n
    for j in range(n + 1):
        c = GaussRational(comb(n, j)) * scale
        if sine and j % 2:
            c = -c
        out[k + n - 2 * j] = out[k + n - 2 * j] + c
    return out


def power_columns(k: int) -> list[list[GaussRational]]:
    """Exponential-basis columns of cos^0..cos^k then sin^1..sin^k."""
    cols = [_power_expansion(n, k, sine=False) for n in range(k + 1)]
    cols += [_power_expansion(n, k, sine=True) for n in range(1, k + 1)]
    return cols


def representability_oracle(f: TrigPoly) -> bool:
    """True iff ``f = sum alpha_n cos^n t + sum beta_n sin^n t`` with n <= deg f."""
    k = f.degree
    cols = power_columns(k)
    matrix = [[col[row] for col in cols] for row in range(2 * k + 1)]
    return solve_linear(matrix, exponential_coefficients(f, k)) is not None
