"""Regenerate the frozen reference values in oracles.py.

Only mpmath is used here, never the package itself, so the frozen numbers are
an independent check.  Run `python tests/make_oracles.py > tests/oracles.py`.
"""
import mpmath as mp

mp.mp.dps = 40


def gr(s):
    return mp.pi ** (-s / 2) * mp.gamma(s / 2)


def c(z):
    z = complex(z)
    return complex(float(z.real), float(z.imag))


def barnes_lhs(a, b, cc, d):
    f = lambda t: gr(a + 1j * t) * gr(b + 1j * t) * gr(cc - 1j * t) * gr(d - 1j * t)
    return mp.quad(f, [-mp.inf, -10, 0, 10, mp.inf]) / (4 * mp.pi)


def mellin(f, s):
    return mp.quad(lambda y: f(y) * y ** (s - 1), [0, 1, mp.inf])


BARNES_ABCD = (0.7 + 0.3j, 1.1 - 0.5j, 0.4 + 0.2j, 0.9)
SO_POINT = (0.2 + 0.1j, 0.3 - 0.2j, 1.3 + 0.4j)
GL2_POINT = ((0.3 + 0.1j, -0.2), 0.7)

values = {
    "LOG_GAMMA": {z: c(mp.loggamma(z)) for z in (0.3 + 4j, -2.5 + 0.1j, 10 - 20j, 1e-3 + 1e-3j, 40 + 0.5j)},
    "BESSEL_K": {(nu, x): c(mp.besselk(nu, x)) for nu, x in
                 ((0, 1.0), (0.5, 1.0), (0.3 - 0.2j, 0.05), (3 + 2j, 2.0), (0.1j, 12.0))},
    "BARNES_ABCD": BARNES_ABCD,
    "BARNES_LHS": c(barnes_lhs(*BARNES_ABCD)),
    # 4 int_0^inf K_0(2 pi y) y^{s-1} dy at s = 1.5: zeta_gl at (2, 1), a = a' = 0
    "ZETA_GL21_S15": c(mellin(lambda y: 4 * mp.besselk(0, 2 * mp.pi * y), 1.5)),
    "SO_POINT": SO_POINT,
    # 2 int y^{a_1} 2 K_{b_1}(2 pi y) y^s dy / y: J_{0,1} by real-axis quadrature
    "ZETA_SO01": c(mellin(lambda y: 4 * y ** SO_POINT[0] * mp.besselk(SO_POINT[1], 2 * mp.pi * y),
                          SO_POINT[2])),
    "GL2_POINT": GL2_POINT,
    "W_GL2": c(2 * GL2_POINT[1] ** ((GL2_POINT[0][0] + GL2_POINT[0][1]) / 2)
               * mp.besselk((GL2_POINT[0][0] - GL2_POINT[0][1]) / 2, 2 * mp.pi * GL2_POINT[1])),
    "TWO_K0_2PI": c(2 * mp.besselk(0, 2 * mp.pi)),
}

if __name__ == "__main__":
    print('"""Frozen reference values produced by make_oracles.py (mpmath, 40 digits)."""')
    for k, v in values.items():
        print(f"{k} = {v!r}")
