"""Transcendental kernel functions: phi, psi, chi, and the magnon dispersion.

Every function here is an exponential of a one-dimensional kernel integral
over (0, inf).  The integrands have removable 0/0 forms at k = 0 (the
quadrature never evaluates exactly at 0) and known exponential decay rates:

    phi : exp(-pi k / 2)   valid for |Im(alpha - beta)| < pi/2
    psi : exp(-pi k / 2)   valid for |Im(beta - theta + i pi)| < 3 pi/2
    chi : exp(-pi k)       valid for |Im alpha| < pi

Arguments outside the stated strip raise StripError rather than returning
garbage.  The half-period shifts used by the functional-equation checks stay
strictly inside the psi strip, which is why both psi equations can be probed
by direct evaluation.  Large-k kernel values are assembled in log space
(hyperbolic factors individually overflow long before the decaying ratio
does), switching from the direct form at a breakpoint chosen so the direct
branch never sees an argument beyond ~350.

The two psi functional equations hold for the normalization used here in the
calibrated form

    psi(b, t + 2 pi i) = -tanh((t - b + i pi/2)/2) * psi(b, t)
    psi(b, t) * psi(b, t + i pi) * (e^b - i e^t) = -(i/2) exp(-2 G / pi)

with G Catalan's constant; the sign and the constant are exposed as
PSI_SHIFT_SIGN and PSI_PRODUCT_CONSTANT so checks state them explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .quadrature import QuadratureSpec, halfline
from .rmatrix import StripError

_LOG2 = np.log(2.0)

CATALAN = 0.915_965_594_177_219_015_1
PSI_SHIFT_SIGN = -1.0
PSI_PRODUCT_CONSTANT = -0.5j * np.exp(-2.0 * CATALAN / np.pi)


def _logsinh(x: np.ndarray) -> np.ndarray:
    """log(sinh x) for x > 0, accurate for both tiny and huge x."""
    return x + np.log(-np.expm1(-2.0 * x)) - _LOG2


def _logcosh(x: np.ndarray) -> np.ndarray:
    return x + np.log1p(np.exp(-2.0 * x)) - _LOG2


def _masked(k: np.ndarray, k_break: float, direct, stable) -> np.ndarray:
    out = np.empty(k.shape, dtype=complex)
    low = k <= k_break
    if low.any():
        out[low] = direct(k[low])
    if (~low).any():
        out[~low] = stable(k[~low])
    return out


def _strip_check(name: str, im: float, bound: float):
    if abs(im) >= bound:
        raise StripError(f"{name}: |Im| = {abs(im):.4f} outside strip < {bound:.4f}")


def log_phi(alpha: complex, beta: complex, nu: float, *, spec: QuadratureSpec | None = None) -> complex:
    """Logarithm of the pairing weight phi(alpha, beta, nu)."""
    if not 0.0 < nu < 1.0:
        raise ValueError(f"nu must lie in (0,1), got {nu}")
    spec = spec or QuadratureSpec()
    alpha, beta = complex(alpha), complex(beta)
    z = alpha - beta
    _strip_check("phi", z.imag, np.pi / 2)
    c_plus = np.pi * (nu + 1) / (2 * nu)
    c_zero = np.pi / (2 * nu)
    k_break = min(1.0, 350.0 / c_plus)

    def direct(k):
        v = np.sinh(c_plus * k) / (k * np.sinh(c_zero * k) * np.sinh(np.pi * k))
        return 2.0 * np.sin(0.5 * z * k) ** 2 * v

    def stable(k):
        logv = _logsinh(c_plus * k) - np.log(k) - _logsinh(c_zero * k) - _logsinh(np.pi * k)
        one = np.exp(logv)
        cos_part = 0.5 * (np.exp(1j * z * k + logv) + np.exp(-1j * z * k + logv))
        return one - cos_part

    rate = np.pi / 2 - abs(z.imag)
    integral = halfline(lambda k: _masked(k, k_break, direct, stable), rate, spec=spec)
    return -(1 + nu) * 0.5 * (alpha + beta) - integral.require(spec.tol * 100)


def phi(alpha: complex, beta: complex, nu: float, *, spec: QuadratureSpec | None = None) -> complex:
    return complex(np.exp(log_phi(alpha, beta, nu, spec=spec)))


def log_psi(beta: complex, theta: complex, *, spec: QuadratureSpec | None = None) -> complex:
    """Logarithm of the mixed-system dressing factor psi(beta, theta)."""
    spec = spec or QuadratureSpec()
    beta, theta = complex(beta), complex(theta)
    z = beta - theta + np.pi * 1j
    _strip_check("psi", z.imag, 1.5 * np.pi)
    k_break = 1.0

    # integrand: [cosh(pi k) - cos(z k)] / (2 k sinh(pi k) cosh(pi k / 2))
    def direct(k):
        num = np.cosh(np.pi * k) - np.cos(z * k)
        return num / (2.0 * k * np.sinh(np.pi * k) * np.cosh(0.5 * np.pi * k))

    def stable(k):
        logq = -np.log(2.0 * k) - _logsinh(np.pi * k) - _logcosh(0.5 * np.pi * k)
        hyper = np.exp(_logcosh(np.pi * k) + logq)
        cos_part = 0.5 * (np.exp(1j * z * k + logq) + np.exp(-1j * z * k + logq))
        return hyper - cos_part

    rate = min(np.pi / 2, 1.5 * np.pi - abs(z.imag))
    integral = halfline(lambda k: _masked(k, k_break, direct, stable), rate, spec=spec)
    return -0.75 * _LOG2 - 0.25 * (beta + theta) - integral.require(spec.tol * 100)


def psi(beta: complex, theta: complex, *, spec: QuadratureSpec | None = None) -> complex:
    return complex(np.exp(log_psi(beta, theta, spec=spec)))


def _chi_log_abs_kernel(nu: float):
    """log |h| for h(k) = sinh(pi k (nu-1)/(2 nu)) / (sinh(pi k/(2 nu)) cosh(pi k/2)).

    h is negative on (0, inf) for nu in (0, 1); the sign is applied by the
    callers.
    """
    c_neg = np.pi * (1 - nu) / (2 * nu)
    c_zero = np.pi / (2 * nu)

    def logabs(k):
        return _logsinh(c_neg * k) - _logsinh(c_zero * k) - _logcosh(0.5 * np.pi * k)

    return logabs


def _chi_kernel_direct(nu: float):
    c_neg = np.pi * (1 - nu) / (2 * nu)
    c_zero = np.pi / (2 * nu)

    def h(k):
        return -np.sinh(c_neg * k) / (np.sinh(c_zero * k) * np.cosh(0.5 * np.pi * k))

    return h


def chi(alpha: complex, nu: float, *, spec: QuadratureSpec | None = None) -> complex:
    """Even function entering the correlator expansion, in integral form."""
    if not 0.0 < nu < 1.0:
        raise ValueError(f"nu must lie in (0,1), got {nu}")
    spec = spec or QuadratureSpec()
    alpha = complex(alpha)
    _strip_check("chi", alpha.imag, np.pi)
    h_direct = _chi_kernel_direct(nu)
    logabs = _chi_log_abs_kernel(nu)
    k_break = min(1.0, 350.0 * 2 * nu / np.pi)

    def direct(k):
        return np.cos(alpha * k) * h_direct(k)

    def stable(k):
        la = logabs(k)
        return -0.5 * (np.exp(1j * alpha * k + la) + np.exp(-1j * alpha * k + la))

    rate = np.pi - abs(alpha.imag)
    integral = halfline(lambda k: _masked(k, k_break, direct, stable), rate, spec=spec)
    return 1j * integral.require(spec.tol * 100)


def chi_log_ratio_part(alpha: complex, nu: float, *, spec: QuadratureSpec | None = None) -> complex:
    """Non-constant part of log(phi(alpha - i pi/2) / phi(alpha + i pi/2)).

    Subtracting the two phi exponents term by term inside the kernel integral
    leaves i * integral sin(alpha k) h(k) / k dk plus a piecewise constant (the
    linear-term constant and a sign-function multiple of i pi), both of which
    drop out of any derivative taken away from alpha = 0.
    """
    spec = spec or QuadratureSpec()
    alpha = complex(alpha)
    _strip_check("chi", alpha.imag, np.pi)
    h_direct = _chi_kernel_direct(nu)
    logabs = _chi_log_abs_kernel(nu)
    k_break = min(1.0, 350.0 * 2 * nu / np.pi)

    def direct(k):
        return np.sin(alpha * k) * h_direct(k) / k

    def stable(k):
        la = logabs(k) - np.log(k)
        return -(np.exp(1j * alpha * k + la) - np.exp(-1j * alpha * k + la)) / 2j

    rate = np.pi - abs(alpha.imag)
    integral = halfline(lambda k: _masked(k, k_break, direct, stable), rate, spec=spec)
    return 1j * integral.require(spec.tol * 100)


def chi_via_phi_ratio(alpha: complex, nu: float, *, eps: float = 1e-2,
                      spec: QuadratureSpec | None = None) -> complex:
    """chi evaluated as a numerical derivative of the phi boundary ratio.

    Fourth-order central difference of chi_log_ratio_part; an independent
    cross-representation of the chi integral.
    """
    pts = [alpha + 2 * eps, alpha + eps, alpha - eps, alpha - 2 * eps]
    vals = [chi_log_ratio_part(p, nu, spec=spec) for p in pts]
    return (-vals[0] + 8 * vals[1] - 8 * vals[2] + vals[3]) / (12 * eps)


@dataclass(frozen=True)
class ChiSeries:
    """Even Taylor data for chi: chi(alpha) = i * sum (-1)^m alpha^(2m) c_m / (2m)!.

    ``coefficients[m]`` is the kernel moment integral of k^(2m); ``radius``
    is the empirical convergence-radius estimate from coefficient ratios.
    """

    nu: float
    coefficients: tuple[float, ...]
    radius: float

    def __call__(self, alpha: complex) -> complex:
        import math

        total = 0.0 + 0.0j
        a2 = complex(alpha) ** 2
        power = 1.0 + 0.0j
        for m, c in enumerate(self.coefficients):
            total += power * ((-1) ** m) * c / math.factorial(2 * m)
            power *= a2
        return 1j * total


def chi_series(nu: float, m_max: int, *, spec: QuadratureSpec | None = None) -> ChiSeries:
    """Kernel moments of chi up to order 2*m_max."""
    if m_max > 20:
        raise ValueError("moment order capped at 20")
    if not 0.0 < nu < 1.0:
        raise ValueError(f"nu must lie in (0,1), got {nu}")
    spec = spec or QuadratureSpec()
    logabs = _chi_log_abs_kernel(nu)
    coeffs = []
    for m in range(m_max + 1):
        cutoff = 2 * m / np.pi + 30.0
        mom_spec = QuadratureSpec(rule=spec.rule, cutoff=cutoff, tol=spec.tol,
                                  max_depth=spec.max_depth)

        def f(k, _m=m):
            return -np.exp(2 * _m * np.log(k) + logabs(k))

        coeffs.append(float(np.real(halfline(f, np.pi, spec=mom_spec).require(spec.tol * 1e3))))
    import math

    ratios = [
        (abs(coeffs[m]) / math.factorial(2 * m)) ** (1.0 / (2 * m))
        for m in range(1, len(coeffs))
        if coeffs[m] != 0.0
    ]
    radius = 1.0 / max(ratios) if ratios else np.inf
    return ChiSeries(nu, tuple(coeffs), float(radius))


def dispersion(theta: complex) -> tuple[complex, complex]:
    """Magnon momentum p(theta) = log tanh((theta - i pi/2)/2) and its
    closed-form derivative e(theta) = 1/sinh(theta - i pi/2)."""
    theta = complex(theta)
    u = theta - 0.5j * np.pi
    s, c = np.sinh(0.5 * u), np.cosh(0.5 * u)
    if min(abs(s), abs(c)) < 1e-12:
        raise ArithmeticError(f"dispersion singular at theta = {theta}")
    p = complex(np.log(s / c))
    e = complex(1.0 / np.sinh(u))
    return p, e
