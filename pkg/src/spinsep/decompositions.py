"""Convex decompositions into products of subsystem densities, and their
verification against a target density."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Optional

import numpy as np

from .composite import DimVector
from .linalg import (
    DEFAULT_TOLERANCE,
    DensityMatrix,
    InvalidDensityError,
    Tolerance,
    check_density,
)

if TYPE_CHECKING:
    from .projections import ProjectionSpec


@dataclass(frozen=True)
class ProductTerm:
    """One weighted product state: weight * factor_1 (x) ... (x) factor_b.

    ``factor_specs`` optionally records, per factor, which subgroup
    projection produced it (None for factors that are not subgroup
    projections, e.g. local maximally mixed states).
    """

    weight: float
    factors: tuple[np.ndarray, ...]
    factor_specs: Optional[tuple[Optional["ProjectionSpec"], ...]] = None

    def product(self) -> np.ndarray:
        out = np.ones((1, 1), dtype=complex)
        for f in self.factors:
            out = np.kron(out, f)
        return out


@dataclass(frozen=True)
class SeparableDecomposition:
    """Weighted mixture of product states over a fixed tensor decomposition."""

    dims: DimVector
    terms: tuple[ProductTerm, ...]

    def assemble(self) -> np.ndarray:
        """Sum of weight * tensor-product over all terms."""
        n = self.dims.size
        out = np.zeros((n, n), dtype=complex)
        for term in self.terms:
            out += term.weight * term.product()
        return out


@dataclass(frozen=True)
class VerificationResult:
    ok: bool
    failure: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_decomposition(
    dec: SeparableDecomposition,
    target: DensityMatrix,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> VerificationResult:
    """Check every decomposition invariant against the target.

    Weights non-negative and summing to one, every factor a valid local
    density, and the reassembled mixture matching the target entrywise
    within the reconstruction tolerance.  The first failure is named in
    the result.
    """
    if dec.dims != target.dims:
        raise ValueError(f"dims mismatch: {dec.dims.dims} vs {target.dims.dims}")
    total = 0.0
    for i, term in enumerate(dec.terms):
        if term.weight < -tol.abs_eps:
            return VerificationResult(False, f"term {i}: negative weight {term.weight:.3e}")
        total += term.weight
        if len(term.factors) != len(dec.dims):
            return VerificationResult(
                False, f"term {i}: {len(term.factors)} factors for {len(dec.dims)} subsystems"
            )
        for a, (factor, d) in enumerate(zip(term.factors, dec.dims)):
            try:
                check_density(factor, DimVector((d,)), tol)
            except (InvalidDensityError, ValueError) as err:
                return VerificationResult(False, f"term {i}, factor {a}: {err}")
    if abs(total - 1.0) > tol.abs_eps:
        return VerificationResult(False, f"weights sum to {total:.12g}, expected 1")
    defect = float(np.abs(dec.assemble() - target.matrix).max())
    if defect > tol.reconstruction_eps:
        return VerificationResult(False, f"reconstruction defect {defect:.3e}")
    return VerificationResult(True)
