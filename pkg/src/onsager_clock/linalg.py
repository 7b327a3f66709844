"""Dense complex linear algebra primitives.

Operators are plain numpy arrays of shape (dim, dim); state vectors are
1-d arrays of length dim.  Basis convention: index = sum_j a_j N^(L-j),
i.e. site 1 is the most significant digit (kron of site 1 first).
"""

from __future__ import annotations

import numpy as np

from .policy import DEFAULT_POLICY, CapacityError, ContractViolationError, NumericPolicy


def hermiticity_defect(h: np.ndarray) -> float:
    """Relative Frobenius distance of h from its Hermitian part."""
    scale = np.linalg.norm(h)
    if scale == 0.0:
        return 0.0
    return np.linalg.norm(h - h.conj().T) / scale


def require_hermitian(h: np.ndarray, tol: float, what: str = "operator") -> None:
    defect = hermiticity_defect(h)
    if defect > tol:
        raise ContractViolationError(
            f"{what} is not Hermitian: relative defect {defect:.3e} > {tol:.1e}"
        )


def check_capacity(dim: int, policy: NumericPolicy = DEFAULT_POLICY, *, state: bool = False) -> None:
    cap = policy.max_state_dim if state else policy.max_operator_dim
    if dim > cap:
        kind = "state" if state else "operator"
        raise CapacityError(f"Hilbert dimension {dim} exceeds {kind} cap {cap}")


def kron(a: np.ndarray, b: np.ndarray, policy: NumericPolicy = DEFAULT_POLICY) -> np.ndarray:
    """Kronecker product with capacity gating."""
    check_capacity(a.shape[0] * b.shape[0], policy)
    return np.kron(a, b)


def kron_all(ops, policy: NumericPolicy = DEFAULT_POLICY) -> np.ndarray:
    out = ops[0]
    for op in ops[1:]:
        out = kron(out, op, policy)
    return out


def matexp_hermitian(
    h: np.ndarray, scale: complex, policy: NumericPolicy = DEFAULT_POLICY
) -> np.ndarray:
    """exp(scale * h) for Hermitian h via spectral decomposition.

    The spectral route keeps the inverse pair exp(+s h) exp(-s h) and the
    unitarity of exp(i theta h) exact to machine precision, which the
    layer-operator constructions rely on.
    """
    require_hermitian(h, policy.hermiticity_tol, "matexp input")
    w, v = np.linalg.eigh(h)
    scale = complex(scale)
    if scale.imag == 0.0 and not np.iscomplexobj(v):
        return (v * np.exp(scale.real * w)) @ v.T
    return (v * np.exp(scale * w)) @ v.conj().T


def eigh(h: np.ndarray, policy: NumericPolicy = DEFAULT_POLICY):
    """Eigensystem of a Hermitian operator: ascending values, orthonormal columns."""
    require_hermitian(h, policy.hermiticity_tol, "eigh input")
    return np.linalg.eigh(h)


def apply_local_gate(
    state: np.ndarray,
    gate: np.ndarray,
    sites,
    N: int,
    L: int,
) -> np.ndarray:
    """Apply a gate on a contiguous (cyclically wrapped) window of sites.

    ``sites`` lists 1-based consecutive site labels, e.g. (3, 4) or (L, 1)
    across the periodic boundary.  The gate must be N^w x N^w for a window
    of w sites; the remaining sites are untouched.
    """
    sites = tuple(int(s) for s in sites)
    w = len(sites)
    if gate.shape != (N**w, N**w):
        raise ContractViolationError(
            f"gate shape {gate.shape} does not match window of {w} sites at N={N}"
        )
    for a, b in zip(sites, sites[1:]):
        if (a % L) + 1 != b:
            raise ContractViolationError(f"sites {sites} are not cyclically consecutive")
    axes = [s - 1 for s in sites]
    rest = [ax for ax in range(L) if ax not in axes]
    tens = state.reshape((N,) * L)
    tens = np.transpose(tens, axes + rest)
    mat = tens.reshape(N**w, -1)
    mat = gate @ mat
    tens = mat.reshape((N,) * (w + len(rest)))
    inv = np.argsort(axes + rest)
    return np.transpose(tens, inv).reshape(-1)


def realify(m: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    """Drop a numerically negligible imaginary part; otherwise return unchanged."""
    if not np.iscomplexobj(m):
        return m
    scale = np.abs(m.real).max() if m.size else 0.0
    if np.abs(m.imag).max() <= tol * max(scale, 1.0):
        return np.ascontiguousarray(m.real)
    return m
