"""Reference values for oracle_values.hpp.

Harmonic measure of the slit [-x, x] in Omega_0 = C minus (R \\ (-1, 1)),
seen from the pole conj(z0) = -i tan(alpha/2) at alpha = pi/2.

The Moebius map T(z) = 1/(z - c), c = (1 + x)/2, sends the four endpoints
+-1, +-x to real points e0 < e1 < e2 < e3. The harmonic measure of one of the
two gaps is then a ratio of elliptic integrals: the period across the gap
divided by the real period. Run with mpmath >= 1.2:

    python3 harmonic_measure_mp.py
"""

import mpmath as mp

mp.mp.dps = 30

ALPHA = mp.pi / 2
POLE = -1j * mp.tan(ALPHA / 2)


def slit_mass(p, x):
    c = (1 + x) / 2
    T = lambda z: 1 / (z - c)
    arc_ends = [T(mp.mpf(1)), T(mp.mpf(-1))]
    slit_ends = [T(x), T(-x)]
    e = sorted(mp.re(v) for v in arc_ends + slit_ends)
    P = T(p)

    # Integral of dt / sqrt(prod (t - e_k)) from e0 to P, with t = e0 + (P - e0) s^2.
    def along(s):
        t = e[0] + (P - e[0]) * s**2
        return 2 * mp.sqrt(P - e[0]) / (mp.sqrt(t - e[1]) * mp.sqrt(t - e[2]) * mp.sqrt(t - e[3]))

    partial = mp.quad(along, [0, 1])

    # Real period over [e1, e2], with t = e1 + (e2 - e1)(1 - cos th)/2.
    def period(th):
        t = e[1] + (e[2] - e[1]) * (1 - mp.cos(th)) / 2
        return 1 / mp.sqrt((t - e[0]) * (e[3] - t))

    full = mp.quad(period, [0, mp.pi])
    h = abs(mp.re(partial) / full)
    first_is_slit = abs(min(mp.re(v) for v in slit_ends) - e[0]) < mp.mpf("1e-20")
    return 1 - h if first_is_slit else h


def main():
    print("mass x=0.5 ", slit_mass(POLE, mp.mpf("0.5")))
    print("mass x=0.05", slit_mass(POLE, mp.mpf("0.05")))
    for n in (2, 4, 10):
        f = lambda lx: (n + 1) * slit_mass(POLE, mp.e**lx) - 1
        lx = mp.findroot(f, (mp.log(0.01), mp.log(0.5)), solver="anderson")
        print(f"x_{n}", mp.e**lx)


if __name__ == "__main__":
    main()
