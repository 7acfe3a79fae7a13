"""Dev probe: pin down kernel-function identities before freezing tests."""
import numpy as np
import mpmath as mp

import sys
sys.path.insert(0, "/root/pkg/src")

from rxxz_workbench.rmatrix import (
    Anisotropy, r0, r_matrix, gauge_r, constant_rq, check_ybe, unitarity_residual,
    PERMUTATION_4,
)
from rxxz_workbench.special_functions import (
    phi, log_phi, psi, log_psi, chi, chi_series, chi_via_phi_ratio,
    chi_log_ratio_part, dispersion,
)

mp.mp.dps = 30

print("== r0 basics ==")
nu = 0.3
print("r0(0) =", r0(0, nu))
for b in (0.4, 1.1, -0.7):
    print(f"r0({b})*r0({-b}) - 1 =", abs(r0(b, nu) * r0(-b, nu) - 1))

# mpmath oracle for r0(0.7, 0.3)
def r0_mp(beta, nu):
    f = lambda k: mp.sin(beta * k) * mp.sinh(mp.pi * k * (nu - 1) / (2 * nu)) / (
        k * mp.sinh(mp.pi * k / (2 * nu)) * mp.cosh(mp.pi * k / 2))
    I = mp.quad(f, [0, 5, 20, 60])
    return mp.e ** (1j * I)

oracle = r0_mp(mp.mpf("0.7"), mp.mpf("0.3"))
ours = r0(0.7, 0.3)
print("r0(0.7,0.3) oracle:", mp.nstr(oracle, 17))
print("r0(0.7,0.3) ours  :", ours, " diff:", abs(complex(oracle) - ours))

print("\n== r_matrix at 0 is permutation ==")
rv = r_matrix(1e-30, Anisotropy(0.3))
print(np.round(rv.entries.real, 12))

print("\n== gauge_r: conjugation vs constant form ==")
an = Anisotropy(0.3)
rng = np.random.default_rng(1)
worst = 0.0
for _ in range(10):
    b1, b2 = rng.uniform(-1.2, 1.2, 2)
    m1 = gauge_r(b1, b2, an, form="conjugation")
    m2 = gauge_r(b1, b2, an, form="constant")
    worst = max(worst, np.abs(m1 - m2).max())
print("max entry diff:", worst)

print("\n== YBE ==")
for ev_name, ev in [
    ("r_matrix", lambda d: r_matrix(d, an).entries),
    ("gauge_diff", lambda d: gauge_r(d, 0.0, an)),
    ("const", lambda d: constant_rq(an)),
]:
    rep = check_ybe(ev, samples=15, seed=3, tol=1e-10, name=ev_name)
    print(ev_name, "residual:", rep.residual)

print("\n== unitarity ==")
print(max(unitarity_residual(lambda d: r_matrix(d, an).entries, b) for b in rng.uniform(-2, 2, 10)))

print("\n== psi functional equations ==")
rng = np.random.default_rng(7)
for trial in range(4):
    b, t = rng.uniform(-1, 1, 2)
    lhs1 = psi(b, t + 2j * np.pi) / psi(b, t)
    rhs1 = np.tanh(0.5 * (t - b + 0.5j * np.pi))
    print(f"eq1: lhs/rhs = {lhs1 / rhs1:.12g}   lhs={lhs1:.6g}")
    prod = psi(b, t) * psi(b, t + 1j * np.pi)
    tgt = 1.0 / (np.exp(b) - 1j * np.exp(t))
    print(f"eq2: prod*(e^b - i e^t) = {prod / tgt:.12g}")

print("\n== chi representations ==")
for nu_ in (0.2, 0.3, 0.5):
    cs = chi_series(nu_, 8)
    for a in (0.1, 0.25, 0.5):
        ci = chi(a, nu_)
        print(f"nu={nu_} a={a}: integral {ci:.10g}  series diff {abs(cs(a)-ci):.2e}",
              f" ratio-FD diff {abs(chi_via_phi_ratio(a, nu_) - ci):.2e}")

print("\n== chi log-ratio identity vs direct phi (inside strip) ==")
# log(phi(a - ic) / phi(a + ic)) for c < pi/2, two ways
nu_ = 0.3
for c in (0.3, 1.0, 1.4):
    a = 0.6
    direct = log_phi(a - 1j * c, 0.0, nu_) - log_phi(a + 1j * c, 0.0, nu_)
    # termwise kernel difference: i * int sin(a k) * g_c(k)/k dk, with
    # g_c(k) = sinh(pi k (nu+1)/(2nu)) * sinh-shift trick at height c:
    # sin^2((a-ic)k/2) - sin^2((a+ic)k/2) = -(1/2)[cos((a-ic)k) - cos((a+ic)k)]
    #                                     = -i sin(a k) sinh(c k)
    import rxxz_workbench.quadrature as q
    cp, c0 = np.pi * (nu_ + 1) / (2 * nu_), np.pi / (2 * nu_)
    f = lambda k: 2j * np.sin(a * k) * np.sinh(c * k) * np.sinh(cp * k) / (
        k * np.sinh(c0 * k) * np.sinh(np.pi * k))
    ker = q.halfline(f, np.pi / 2 - c + (np.pi / 2 if c < np.pi/2 else 0), spec=q.QuadratureSpec(tol=1e-12)).value
    print(f"c={c}: direct {direct:.10g} kernel {ker:.10g} diff {abs(direct-ker):.2e}")

print("\n== dispersion ==")
p, e = dispersion(1.2)
h = 1e-6
pp, _ = dispersion(1.2 + h)
pm, _ = dispersion(1.2 - h)
print("e vs FD:", abs(e - (pp - pm) / (2 * h)))
print("p(2.0), e(2.0) =", dispersion(2.0))
