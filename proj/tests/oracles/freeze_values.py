"""Independent extended-precision evaluation of the reference values frozen into the C++ tests.

Run with `python3 tests/oracles/freeze_values.py`; uses mpmath at 50 digits and never touches
the C++ implementation.
"""
from mpmath import mp, mpf, sqrt, pi, atan, tan, quad, findroot

mp.dps = 50


def scales(m, v0, L, hbar):
    alpha = pi / (2 * L)
    T = hbar**2 * alpha**2 / (2 * m)
    lam = sqrt(1 + 4 * v0 / T) - 1
    return alpha, T, lam


def energy(m, v0, L, hbar, n):
    _, T, lam = scales(m, v0, L, hbar)
    return T * n**2 + T * lam * (n - mpf(1) / 2)


def dE_dL(m, v0, L, hbar, n):
    return -mp.diff(lambda w: energy(m, v0, w, hbar, n), L)


def action(m, v0, L, hbar, E):
    alpha = pi / (2 * L)
    x0 = atan(sqrt(E / v0)) / alpha
    f = lambda x: sqrt(2 * m * (E - v0 * tan(alpha * x) ** 2))
    return 4 * quad(f, [0, x0])


def show(label, value):
    print(f"{label:48s} {mp.nstr(value, 20)}")


big = (1, mpf("0.5"), 50 * pi, 1)
unit = (1, mpf("0.375"), pi / 2, 1)

show("lambda(L=50pi)", scales(*big)[2])
show("hbar_omega(L=50pi)", scales(*big)[1] * scales(*big)[2])
show("E1(L=50pi)", energy(*big, 1))
show("E2(L=50pi)", energy(*big, 2))
show("P1 lambda=1", dE_dL(*unit, 1))
show("2.25/pi", mpf("2.25") / pi)
show("s_eff n=1 L=50pi", dE_dL(*big, 1) * big[2] / energy(*big, 1))
b500 = (1, mpf("0.5"), 500 * pi, 1)
show("s_eff n=1 L=500pi", dE_dL(*b500, 1) * b500[2] / energy(*b500, 1))
show("P1 L=50pi", dE_dL(*big, 1))

# FP expansion case
fp = (1, mpf("0.005"), pi / 2, 1)
lam_fp = scales(*fp)[2]
show("lambda exact x=0.04", lam_fp)
show("order1 error", abs(lam_fp - mpf("0.02")))
show("order2 error", abs(lam_fp - mpf("0.0198")))

# QC
for n in (1, 2, 5):
    alpha, T, _ = scales(*unit)
    qc = findroot(lambda E: action(*unit, E) - 2 * pi * (n - mpf(1) / 2), T * n**2)
    show(f"E_qc n={n} (root of quadrature)", qc)
show("x0 lambda=1 E=0.75", atan(sqrt(2)))
show("p(0.5, 0.75)", sqrt(2 * (mpf("0.75") - mpf("0.375") * tan(mpf("0.5")) ** 2)))
show("tan^2(0.1)", tan(mpf("0.1")) ** 2)
show("series k=2 at 0.1", mpf("0.01") + mpf(2) / 3 * mpf("1e-4"))
for n in (1, 2):
    _, T, lam = scales(*big)
    hwt = 2 * sqrt(big[1] * T)
    pert = hwt * (n - mpf(1) / 2) + T * (n * n - n + mpf(1) / 2)
    show(f"exact - perturbed n={n}", energy(*big, n) - pert)
