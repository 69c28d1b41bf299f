"""Bidirectional transforms between the computational and spin pictures.

For a density on dims (d1, ..., db) the coefficient table s satisfies
rho = (1/N) sum_{j,k} s[j,k] S_{j,k} with N the total dimension, and is
obtained from the reindexed entries a[j,k] = rho[j, j (+) k] by the
conjugated factored Fourier transform s = F^* a (applied to the row
index, one factor at a time).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .composite import DimVector, composite_spin, decode, encode, flat_add_table
from .linalg import DensityMatrix
from .spin import fourier_matrix, spin_dagger, SpinLabel


@dataclass(frozen=True)
class SpinCoefficients:
    """Dense table of spin coefficients, indexed by flat labels (j, k)."""

    dims: DimVector
    table: np.ndarray

    def __post_init__(self):
        t = np.asarray(self.table, dtype=complex)
        n = self.dims.size
        if t.shape != (n, n):
            raise ValueError(f"table shape {t.shape} does not match size {n}")
        object.__setattr__(self, "table", t)


def _apply_factored(mats, table: np.ndarray, dims: DimVector) -> np.ndarray:
    """Apply (x)_i mats[i] to the row index of an (N, M) table, factor by factor."""
    n = dims.size
    x = table.reshape(tuple(dims) + (-1,))
    for axis, f in enumerate(mats):
        x = np.moveaxis(np.tensordot(f, x, axes=(1, axis)), 0, axis)
    return x.reshape(n, -1)


def _adjusted_table(matrix: np.ndarray, dims: DimVector) -> np.ndarray:
    add = flat_add_table(dims)
    n = dims.size
    return matrix[np.arange(n)[:, None], add]


def spin_table(matrix: np.ndarray, dims: DimVector) -> SpinCoefficients:
    """Spin coefficients of an arbitrary matrix (no density validation)."""
    matrix = np.asarray(matrix, dtype=complex)
    if matrix.shape != (dims.size, dims.size):
        raise ValueError(f"matrix shape {matrix.shape} does not match size {dims.size}")
    a = _adjusted_table(matrix, dims)
    mats = [fourier_matrix(d).conj() for d in dims]
    return SpinCoefficients(dims, _apply_factored(mats, a, dims))


def to_spin(rho: DensityMatrix) -> SpinCoefficients:
    """Spin coefficients of a density matrix; s[0,0] = 1."""
    return spin_table(rho.matrix, rho.dims)


def spin_table_by_trace(matrix: np.ndarray, dims: DimVector) -> SpinCoefficients:
    """Coefficients via N^2 trace inner products Tr(S_{j,k}^dag rho).

    Quartic-cost cross-check for the factored transform; intended for
    small dimensions.
    """
    matrix = np.asarray(matrix, dtype=complex)
    n = dims.size
    table = np.empty((n, n), dtype=complex)
    for j in range(n):
        jd = decode(dims, j)
        for k in range(n):
            kd = decode(dims, k)
            s = composite_spin(dims, jd, kd)
            table[j, k] = np.vdot(s, matrix)
    return SpinCoefficients(dims, table)


def from_spin(coeffs: SpinCoefficients) -> np.ndarray:
    """Reassemble the matrix (1/N) sum s[j,k] S_{j,k} from its table."""
    dims = coeffs.dims
    n = dims.size
    mats = [fourier_matrix(d) for d in dims]
    a = _apply_factored(mats, coeffs.table, dims) / n
    add = flat_add_table(dims)
    out = np.zeros((n, n), dtype=complex)
    out[np.arange(n)[:, None], add] = a
    return out


def spin_l1_norm(coeffs: SpinCoefficients) -> float:
    """Sum of coefficient moduli over every label except (0, 0)."""
    total = float(np.abs(coeffs.table).sum())
    return total - float(abs(coeffs.table[0, 0]))


def l2_identity_check(rho: DensityMatrix) -> tuple[float, float]:
    """Both sides of the Parseval-type identity sum|s|^2 = N sum|rho|^2."""
    coeffs = to_spin(rho)
    lhs = float((np.abs(coeffs.table) ** 2).sum())
    rhs = rho.dims.size * float((np.abs(rho.matrix) ** 2).sum())
    return lhs, rhs


def conjugate_label(dims: DimVector, j: int, k: int) -> tuple[int, int, complex]:
    """Partner label of (j, k) under conjugation symmetry.

    Returns (j', k', phase) with s[j', k'] = phase * conj(s[j, k]) for the
    table of any density; the phase is the product of the factor phases
    eta_i^(j_i * k_i).
    """
    jd = decode(dims, j)
    kd = decode(dims, k)
    phase = 1.0 + 0.0j
    cj, ck = [], []
    for d, ji, ki in zip(dims, jd, kd):
        ph, lab = spin_dagger(d, SpinLabel(ji, ki))
        phase *= ph.value()
        cj.append(lab.j)
        ck.append(lab.k)
    return encode(dims, cj), encode(dims, ck), phase
