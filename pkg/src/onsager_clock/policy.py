"""Shared numeric policy and library exceptions.

All tolerances used by the operator constructors, the verification suite
and the CLI live in one record so that tests and command-line runs agree.
"""

from __future__ import annotations

from dataclasses import dataclass, asdict


class OnsagerClockError(Exception):
    """Base class for library errors."""


class ContractViolationError(OnsagerClockError):
    """A precondition on an operation's input was violated."""


class CapacityError(OnsagerClockError):
    """Requested Hilbert-space dimension exceeds the configured cap."""


class SingularPointError(OnsagerClockError):
    """Construction refused at a singular skeleton point (some |b_k| = 1)."""


class GaplessError(OnsagerClockError):
    """The Laurent polynomial has a zero on (or hugging) the unit circle."""


class NumericError(OnsagerClockError):
    """A numerical routine failed to converge to the requested accuracy."""


class ConfigError(OnsagerClockError):
    """Invalid run configuration; the message names the failing field."""


@dataclass(frozen=True)
class NumericPolicy:
    """Tolerances and capacity limits shared across the library."""

    hermiticity_tol: float = 1e-10
    residual_tol: float = 1e-8
    orthonormality_tol: float = 1e-10
    algebra_tol: float = 1e-9          # Onsager relation residuals
    degeneracy_tol: float = 1e-8       # eigenvalue clustering threshold
    singular_bk_tol: float = 1e-8      # guard band around |b_k| = 1
    schur_breakdown_tol: float = 1e-12 # vanishing constant term in Algorithm 1
    circle_zero_tol: float = 1e-6      # root-on-unit-circle refusal window
    winding_min_modulus: float = 1e-8  # relative min |f| on the circle
    schmidt_tol: float = 1e-10         # relative singular-value cutoff
    quadrature_abs_tol: float = 1e-9
    max_operator_dim: int = 20_000
    max_state_dim: int = 300_000
    max_conjugation_dim: int = 4096

    def as_dict(self) -> dict:
        return asdict(self)


DEFAULT_POLICY = NumericPolicy()
