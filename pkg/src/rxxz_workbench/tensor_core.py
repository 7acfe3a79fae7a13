"""Dense complex linear algebra on chains of spin-1/2 sites.

Site 1 is the slowest-varying tensor index throughout, i.e. a chain state is
indexed by the bit string (s_1 s_2 ... s_N) read as a binary integer with s_1
most significant.  Everything is dense; the site count is capped (default
12, a 4096-dimensional space) so residual norms stay exact to double
precision.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

DENSE_SITE_CAP = 12

SIGMA_1 = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_3 = np.array([[1, 0], [0, -1]], dtype=complex)
SIGMA_PLUS = np.array([[0, 1], [0, 0]], dtype=complex)
SIGMA_MINUS = np.array([[0, 0], [1, 0]], dtype=complex)
IDENTITY_2 = np.eye(2, dtype=complex)

UP, DOWN = 0, 1  # basis index of a single site


def _check_cap(n_sites: int):
    if not 1 <= n_sites <= DENSE_SITE_CAP:
        raise ValueError(f"site count {n_sites} outside dense range 1..{DENSE_SITE_CAP}")


@dataclass(frozen=True)
class SpinState:
    """State vector on (C^2)^{tensor N}."""

    amplitudes: np.ndarray
    n_sites: int

    def __post_init__(self):
        _check_cap(self.n_sites)
        if self.amplitudes.shape != (2**self.n_sites,):
            raise ValueError("amplitude vector length must be 2**n_sites")


@dataclass(frozen=True)
class SiteOperator:
    """A single-site (2x2) operator."""

    entries: np.ndarray

    def __post_init__(self):
        if self.entries.shape != (2, 2):
            raise ValueError("site operator must be 2x2")
        if not np.all(np.isfinite(self.entries)):
            raise ValueError("site operator entries must be finite")


@dataclass(frozen=True)
class ChainOperator:
    """Dense operator on the full chain space."""

    entries: np.ndarray
    n_sites: int

    def __post_init__(self):
        _check_cap(self.n_sites)
        dim = 2**self.n_sites
        if self.entries.shape != (dim, dim):
            raise ValueError(f"chain operator must be {dim}x{dim} for N={self.n_sites}")

    @property
    def dim(self) -> int:
        return 2**self.n_sites


def kron_all(factors) -> np.ndarray:
    out = np.asarray(factors[0], dtype=complex)
    for m in factors[1:]:
        out = np.kron(out, m)
    return out


def embed(op: SiteOperator | np.ndarray, site: int, n_sites: int) -> ChainOperator:
    """Embed a 2x2 operator at a 1-based site, identity elsewhere."""
    _check_cap(n_sites)
    if not 1 <= site <= n_sites:
        raise ValueError(f"site {site} out of range 1..{n_sites}")
    mat = op.entries if isinstance(op, SiteOperator) else np.asarray(op, dtype=complex)
    factors = [IDENTITY_2] * n_sites
    factors[site - 1] = mat
    return ChainOperator(kron_all(factors), n_sites)


def embed_two_site(op4: np.ndarray, site: int, n_sites: int) -> ChainOperator:
    """Embed a 4x4 operator on the adjacent pair (site, site+1)."""
    _check_cap(n_sites)
    if not 1 <= site <= n_sites - 1:
        raise ValueError(f"pair index {site} out of range 1..{n_sites - 1}")
    op4 = np.asarray(op4, dtype=complex)
    if op4.shape != (4, 4):
        raise ValueError("two-site operator must be 4x4")
    left = np.eye(2 ** (site - 1), dtype=complex)
    right = np.eye(2 ** (n_sites - site - 1), dtype=complex)
    return ChainOperator(kron_all([left, op4, right]), n_sites)


def apply_two_site(op4: np.ndarray, site: int, state: SpinState) -> SpinState:
    """Apply a 4x4 operator to factors (site, site+1) of a state.

    Reshapes rather than building the full embedded matrix, so it also serves
    as the fast path for residual checks.
    """
    n = state.n_sites
    if not 1 <= site <= n - 1:
        raise ValueError(f"pair index {site} out of range 1..{n - 1}")
    op4 = np.asarray(op4, dtype=complex)
    if op4.shape != (4, 4):
        raise ValueError("two-site operator must be 4x4")
    left = 2 ** (site - 1)
    right = 2 ** (n - site - 1)
    amps = state.amplitudes.reshape(left, 4, right)
    out = np.einsum("ab,ibj->iaj", op4, amps).reshape(-1)
    return SpinState(out, n)


def commutator(a: ChainOperator, b: ChainOperator) -> ChainOperator:
    if a.n_sites != b.n_sites:
        raise ValueError("commutator requires operators on the same chain")
    return ChainOperator(a.entries @ b.entries - b.entries @ a.entries, a.n_sites)


def spectral_norm(m: np.ndarray | ChainOperator) -> float:
    mat = m.entries if isinstance(m, ChainOperator) else m
    return float(np.linalg.norm(mat, 2))


def frobenius_norm(m: np.ndarray | ChainOperator) -> float:
    mat = m.entries if isinstance(m, ChainOperator) else m
    return float(np.linalg.norm(mat))
