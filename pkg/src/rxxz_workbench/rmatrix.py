"""The trigonometric R-matrix family and its structural checks.

Conventions that matter and are easy to get wrong:

* Fractional powers of the deformation parameter q are always taken in
  exponent form, q**x := exp(2*pi*i*(nu + shift)*x) with shift = 1 by
  default.  The shift is invisible on integer powers but changes the sign of
  half-integer ones, and the constant-R decomposition of the gauged R-matrix
  only holds with the shifted branch.
* The scalar factor R0 is evaluated by quadrature on (0, inf); its integrand
  decays like exp(-pi*k) for real rapidity, so complex rapidities are only
  accepted inside a strip |Im beta| < strip_bound (default pi/2, well clear
  of the decay boundary at pi).
* The pole of the off-diagonal entries at beta = i*pi is reported as a
  structured PoleError carrying the vanishing factor, never as an overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .quadrature import QuadratureSpec, halfline
from .report import CheckReport
from .tensor_core import kron_all

PERMUTATION_4 = np.array(
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
)

DEFAULT_STRIP = np.pi / 2


class StripError(ValueError):
    """Rapidity outside the validity strip of a kernel integral."""


class PoleError(ArithmeticError):
    """Evaluation exactly at (or too close to) a pole of the R-matrix."""

    def __init__(self, message: str, factor: complex):
        super().__init__(message)
        self.factor = factor


@dataclass(frozen=True)
class Anisotropy:
    """Coupling bundle for the critical chain: nu in (0,1), Delta = cos(pi*nu).

    ``shift`` enters every fractional power of q through
    q**x = exp(2j*pi*(nu+shift)*x); integer powers are shift-independent.
    """

    nu: float
    shift: int = 1

    def __post_init__(self):
        if not 0.0 < self.nu < 1.0:
            raise ValueError(f"nu must lie in (0,1), got {self.nu}")

    @property
    def delta(self) -> float:
        return float(np.cos(np.pi * self.nu))

    @property
    def q(self) -> complex:
        return self.q_pow(1.0)

    def q_pow(self, x: float | complex) -> complex:
        return complex(np.exp(2j * np.pi * (self.nu + self.shift) * x))

    @property
    def dual_nu(self) -> float:
        """Coupling of the particle S-matrix, nu/(1-nu)."""
        return self.nu / (1.0 - self.nu)

    def dual(self) -> "Anisotropy":
        d = self.dual_nu
        if not 0.0 < d < 1.0:
            raise ValueError(f"dual coupling {d} outside (0,1); need nu < 1/2")
        return Anisotropy(d, self.shift)

    @property
    def qtilde(self) -> complex:
        """exp(2*pi*i/(1-nu)); equals the dual coupling's shifted q."""
        return complex(np.exp(2j * np.pi / (1.0 - self.nu)))

    def qtilde_pow(self, x: float | complex) -> complex:
        return complex(np.exp(2j * np.pi * x / (1.0 - self.nu)))


@dataclass(frozen=True)
class RMatrixValue:
    entries: np.ndarray
    a: complex
    b: complex
    c: complex


def _r0_kernel(nu: float, beta: complex):
    def f(k: np.ndarray) -> np.ndarray:
        num = np.sin(beta * k) * np.sinh(np.pi * k * (nu - 1) / (2 * nu))
        den = k * np.sinh(np.pi * k / (2 * nu)) * np.cosh(np.pi * k / 2)
        return num / den

    return f


def r0(beta: complex, nu: float, *, spec: QuadratureSpec | None = None,
       strip_bound: float = DEFAULT_STRIP) -> complex:
    """Scalar normalization factor of the R-matrix.

    Unit modulus for real beta; r0(0) = 1 and r0(beta) * r0(-beta) = 1.
    """
    if not 0.0 < nu < 1.0:
        raise ValueError(f"nu must lie in (0,1), got {nu}")
    beta = complex(beta)
    if abs(beta.imag) >= strip_bound:
        raise StripError(
            f"|Im beta| = {abs(beta.imag):.4f} outside strip < {strip_bound:.4f}"
        )
    if beta == 0:
        return 1.0 + 0.0j
    spec = spec or QuadratureSpec()
    rate = np.pi - abs(beta.imag)
    integral = halfline(_r0_kernel(nu, beta), rate, spec=spec).require(spec.tol * 100)
    return complex(np.exp(1j * integral))


def r_matrix(beta: complex, aniso: Anisotropy, *, spec: QuadratureSpec | None = None,
             strip_bound: float = DEFAULT_STRIP) -> RMatrixValue:
    """4x4 R-matrix: a on the corners, b on the inner diagonal, c on the inner
    antidiagonal."""
    nu = aniso.nu
    beta = complex(beta)
    den = np.sinh(nu * (np.pi * 1j - beta))
    if abs(den) < 1e-12:
        raise PoleError(f"sinh(nu*(i*pi - beta)) vanishes at beta = {beta}", complex(den))
    a = r0(beta, nu, spec=spec, strip_bound=strip_bound)
    b = a * np.sinh(nu * beta) / den
    c = a * np.sinh(nu * np.pi * 1j) / den
    m = np.array(
        [[a, 0, 0, 0], [0, b, c, 0], [0, c, b, 0], [0, 0, 0, a]], dtype=complex
    )
    return RMatrixValue(m, complex(a), complex(b), complex(c))


def constant_rq(q: complex | Anisotropy) -> np.ndarray:
    """Constant upper-triangular R-matrix with entries q^(1/2), 1, q^(1/2)-q^(-1/2).

    Passing an Anisotropy uses its exponent-form branch for the half powers;
    a bare complex q uses the principal square root.
    """
    if isinstance(q, Anisotropy):
        qh = q.q_pow(0.5)
    else:
        qh = complex(np.sqrt(complex(q)))
    d = qh - 1.0 / qh
    return np.array(
        [[qh, 0, 0, 0], [0, 1, d, 0], [0, 0, 1, 0], [0, 0, 0, qh]], dtype=complex
    )


def _sigma3_gauge(coef: complex) -> np.ndarray:
    return np.diag([np.exp(coef), np.exp(-coef)]).astype(complex)


def gauge_r(beta1: complex, beta2: complex, aniso: Anisotropy, *,
            form: str = "conjugation", nu_override: float | None = None,
            spec: QuadratureSpec | None = None) -> np.ndarray:
    """Gauge-transformed R-matrix on a rapidity pair.

    form="conjugation" conjugates R(beta1-beta2) by exp((nu/2) beta sigma3)
    factors; form="constant" evaluates the equivalent combination

        R0(beta)/(2 sinh(nu(i pi - beta))) *
            (exp(nu beta) R12(q)^(-1) - exp(-nu beta) R21(q))

    of the constant matrices, with R21 = P R12 P.  The index order in the
    constant combination is the one that reproduces the conjugated matrix
    entrywise (the transcription with 12 and 21 exchanged swaps the two
    off-diagonal gauge factors and is not the same matrix).  Both forms
    depend only on beta1-beta2 because the symmetric part of the gauge
    commutes with R.
    """
    nu = aniso.nu if nu_override is None else nu_override
    beta = complex(beta1) - complex(beta2)
    if form == "conjugation":
        sub = Anisotropy(nu, aniso.shift)
        r = r_matrix(beta, sub, spec=spec).entries
        g = kron_all([_sigma3_gauge(0.5 * nu * complex(beta1)),
                      _sigma3_gauge(0.5 * nu * complex(beta2))])
        ginv = kron_all([_sigma3_gauge(-0.5 * nu * complex(beta1)),
                         _sigma3_gauge(-0.5 * nu * complex(beta2))])
        return g @ r @ ginv
    if form == "constant":
        sub = Anisotropy(nu, aniso.shift)
        r0_val = r0(beta, nu, spec=spec)
        r12 = constant_rq(sub)
        r21 = PERMUTATION_4 @ r12 @ PERMUTATION_4
        pref = r0_val / (2 * np.sinh(nu * (np.pi * 1j - beta)))
        return pref * (np.exp(nu * beta) * np.linalg.inv(r12) - np.exp(-nu * beta) * r21)
    raise ValueError(f"unknown gauge form {form!r}")


def s_matrix(theta: complex, aniso: Anisotropy, *, gauged: bool = False,
             spec: QuadratureSpec | None = None) -> np.ndarray:
    """Particle S-matrix: the R-matrix at the dual coupling nu/(1-nu)."""
    dual = aniso.dual()
    if gauged:
        return gauge_r(theta, 0.0, dual, spec=spec)
    return r_matrix(theta, dual, spec=spec).entries


def _embed_r_on_pair(r4: np.ndarray, pair: tuple[int, int]) -> np.ndarray:
    """Embed a 4x4 matrix acting on two of three C^2 factors into C^8."""
    t = r4.reshape(2, 2, 2, 2)
    i, j = pair
    k = next(x for x in (0, 1, 2) if x not in pair)
    out = np.zeros((8, 8), dtype=complex)
    for r_ in range(8):
        bits_r = ((r_ >> 2) & 1, (r_ >> 1) & 1, r_ & 1)
        for c_ in range(8):
            bits_c = ((c_ >> 2) & 1, (c_ >> 1) & 1, c_ & 1)
            if bits_r[k] != bits_c[k]:
                continue
            out[r_, c_] = t[bits_r[i], bits_r[j], bits_c[i], bits_c[j]]
    return out


def ybe_residual(evaluator: Callable[[complex], np.ndarray],
                 b1: complex, b2: complex, b3: complex) -> float:
    """||R12(b1-b2) R13(b1-b3) R23(b2-b3) - R23 R13 R12|| on C^8."""
    r12 = _embed_r_on_pair(evaluator(b1 - b2), (0, 1))
    r13 = _embed_r_on_pair(evaluator(b1 - b3), (0, 2))
    r23 = _embed_r_on_pair(evaluator(b2 - b3), (1, 2))
    lhs = r12 @ r13 @ r23
    rhs = r23 @ r13 @ r12
    return float(np.linalg.norm(lhs - rhs, 2))


def check_ybe(evaluator: Callable[[complex], np.ndarray], *, samples: int = 100,
              seed: int = 0, tol: float = 1e-10, name: str = "ybe",
              span: float = 1.5) -> CheckReport:
    """Max Yang-Baxter residual over seeded random real rapidity triples."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    worst_triple = None
    for _ in range(samples):
        b1, b2, b3 = rng.uniform(-span, span, size=3)
        try:
            res = ybe_residual(evaluator, b1, b2, b3)
        except Exception as exc:
            raise RuntimeError(f"YBE evaluator failed at triple {(b1, b2, b3)}") from exc
        if res > worst:
            worst, worst_triple = res, (b1, b2, b3)
    return CheckReport(
        name=name,
        residual=worst,
        tolerance=tol,
        params={"samples": samples, "seed": seed, "span": span},
        diagnostics={"worst_triple": list(worst_triple) if worst_triple else None},
    )


def unitarity_residual(evaluator: Callable[[complex], np.ndarray], beta: float) -> float:
    """||R12(beta) R21(-beta) - 1|| with R21 = P R P."""
    r = evaluator(beta)
    rr = PERMUTATION_4 @ evaluator(-beta) @ PERMUTATION_4
    return float(np.linalg.norm(r @ rr - np.eye(4), 2))
