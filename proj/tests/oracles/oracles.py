"""Independent reference computations for values frozen into the C++ tests.

Run with: python3 tests/oracles/oracles.py
Uses numpy/scipy only; shares no code with the C++ implementation.
"""
import numpy as np
from scipy.integrate import solve_ivp


def fd(f, x, h=1e-4):
    return (f(x + h) - f(x - h)) / (2 * h)


def optical_u(x, chi_b, g2n=1.0, omega0=1.0, sigma=2.0):
    # U_j(x) = -g^2 N chi_j B / |Omega(x)|^2 with a Gaussian control profile
    return -g2n * chi_b / (omega0**2 * np.exp(-x**2 / sigma**2))


def first_order_rhs(t, y, d1, d2, dc, Gamma, gamma, Omega, g, e1, e2):
    s13, s14, s23, s24, s34 = y[0::2] + 1j * y[1::2]
    ds13 = (1j * d1 - Gamma) * s13 + 0.5j * g * e1 + 1j * Omega * s14
    ds14 = (1j * (d1 - dc) - gamma) * s14 + 1j * np.conj(Omega) * s13
    ds23 = (1j * d2 - Gamma) * s23 + 0.5j * g * e2 + 1j * Omega * s24
    ds24 = (1j * (d2 - dc) - gamma) * s24 + 1j * np.conj(Omega) * s23
    ds34 = -(1j * dc + Gamma) * s34
    out = np.array([ds13, ds14, ds23, ds24, ds34])
    r = np.empty(10)
    r[0::2] = out.real
    r[1::2] = out.imag
    return r


def split_step(x, psi, u, m, dt, steps):
    k = 2 * np.pi * np.fft.fftfreq(len(x), d=x[1] - x[0])
    half = np.exp(-1j * k**2 * dt / (4 * m))
    pot = np.exp(-1j * u * dt)
    for _ in range(steps):
        psi = np.fft.ifft(half * np.fft.fft(psi))
        psi = pot * psi
        psi = np.fft.ifft(half * np.fft.fft(psi))
    return psi


def main():
    np.set_printoptions(precision=17)
    # derive(): eta1 by finite differences of U_j at x = a = 1, sigma = 2, B = 0.5, chi = (-1, 1)
    for chi in (-1.0, 1.0):
        print("eta1 chi=%+g: %.15g" % (chi, fd(lambda x: optical_u(x, chi * 0.5), 1.0)))
    print("closed form 0.25*e^0.25 = %.15g" % (0.25 * np.exp(0.25)))

    # First-order coherence ODE: g=1, E1=1, d1=0.3, dc=0, Omega=2, Gamma=1, gamma=0
    args = (0.3, 0.0, 0.0, 1.0, 0.0, 2.0, 1.0, 1.0, 0.0)
    sol = solve_ivp(first_order_rhs, (0, 200), np.zeros(10), args=args,
                    rtol=1e-12, atol=1e-14, method="DOP853")
    y = sol.y[:, -1]
    print("ODE s13(t=200) = %.15g %+.15gi" % (y[0], y[1]))
    M = np.array([[1j * 0.3 - 1.0, 2j], [2j, 1j * 0.3]])
    fixed = np.linalg.solve(M, -np.array([0.5j, 0.0]))
    print("fixed point s13 = %.15g %+.15gi" % (fixed[0].real, fixed[0].imag))
    print("leading-order value = %.15g" % (0.3 / 8))

    # Optical exit center: a=1, sigma=2, B=0.5, chi=(-1,1), g^2N=1, Omega0=1, L=1, k=10, c=1, b=0.5
    n, hw = 2048, 8.0
    x = -hw + 2 * hw * np.arange(n) / n
    b, a, m = 0.5, 1.0, 10.0
    psi0 = (np.pi * b * b) ** -0.25 * np.exp(-(x - a) ** 2 / (2 * b * b))
    for chi in (-1.0, 1.0):
        psi = split_step(x, psi0.astype(complex), optical_u(x, chi * 0.5), m, 1e-3, 1000)
        rho = np.abs(psi) ** 2
        print("optical spectral center chi=%+g: %.15g" % (chi, np.sum(x * rho) / np.sum(rho)))
    print("closed-form optical shift magnitude = %.15g" % (0.5 * np.exp(0.25) / 40))


if __name__ == "__main__":
    main()
