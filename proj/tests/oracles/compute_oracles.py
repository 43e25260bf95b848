"""Independent high-precision oracles for frozen test values.

Every value here is computed with mpmath at 50 digits from first principles
(closed-form textbook expressions or direct root solves of M22 = 0), never by
calling the library. Run: python3 tests/oracles/compute_oracles.py
"""
import mpmath as mp

mp.mp.dps = 50


def textbook_m(E, V, d):
    """Standard Schrodinger rectangular barrier on (-d, d), 2m = hbar = 1.

    Built from interface continuity matrices; returns (M11, M12, M21, M22)
    with [A+, B+] = M [A-, B-].
    """
    k = mp.sqrt(E)
    K = mp.sqrt(E - V)

    def W(q, x):
        return mp.matrix([[mp.exp(1j * q * x), mp.exp(-1j * q * x)],
                          [1j * q * mp.exp(1j * q * x), -1j * q * mp.exp(-1j * q * x)]])

    M = W(k, d) ** -1 * W(K, d) * W(K, -d) ** -1 * W(k, -d)
    return M[0, 0], M[0, 1], M[1, 0], M[1, 1]


def fractional_m(E, V, d, alpha, hbar=1, mass=mp.mpf(1) / 2, u=1):
    D = mp.power(u, 2 - alpha) / (alpha * mp.power(mass, alpha - 1))
    k = mp.power(E / (D * hbar ** alpha), 1 / alpha)
    kap = mp.exp(mp.log((E - V) / (D * hbar ** alpha)) / alpha)
    eta = mp.exp((alpha - 1) * mp.log(k / kap))
    wp = (eta ** 2 + 1) / (2 * eta)
    wm = (eta ** 2 - 1) / (2 * eta)
    x = 2 * kap * d
    m11 = (mp.cos(x) + 1j * wp * mp.sin(x)) * mp.exp(-2j * k * d)
    m22 = (mp.cos(x) - 1j * wp * mp.sin(x)) * mp.exp(2j * k * d)
    return m11, -1j * wm * mp.sin(x), 1j * wm * mp.sin(x), m22


def show(name, v):
    print(f"{name:44s} {mp.nstr(v, 20)}")


show("cbrt(2)", mp.cbrt(2))
show("D(alpha=1.5, m=0.5, u=1)", 1 / (mp.mpf("1.5") * mp.sqrt(mp.mpf("0.5"))))
a = mp.mpf("1.8")
D18 = 1 / (a * mp.power(mp.mpf("0.5"), a - 1))
show("D(alpha=1.8, natural)", D18)
show("k_alpha(alpha=1.8, natural, E=1)", mp.power(1 / D18, 1 / a))
show("Omega(1.5; 0,1) re", mp.re(mp.power(mp.mpc(1, -1), mp.mpf(2) / 3)))
show("Omega(1.5; 0,1) im", mp.im(mp.power(mp.mpc(1, -1), mp.mpf(2) / 3)))
tau = 2 + 2 * mp.sqrt(2)
show("tau(0.5,0.5,2)", tau)
c = 1 / mp.sqrt(1 + tau)
Q = 2 * mp.pi - mp.acos(c)
show("Q_2^-(0.5,0.5,2) arccos arg", c)
show("Q_2^-(0.5,0.5,2)", Q)
H = Q / (2 * mp.power(mp.mpf("0.5"), mp.mpf(1) / 4) * mp.cos(mp.pi / 8))
show("H_2^-(0.5,0.5,2)", H)
show("p(2;0,1;kd=1)", 2 * mp.power(2, mp.mpf(1) / 4) * mp.sin(mp.pi / 8))
show("q(2;0,1;kd=1)", 2 * mp.power(2, mp.mpf(1) / 4) * mp.cos(mp.pi / 8))
show("|M22| alpha=2 E=1 V=2 d=1 (cosh 2)", abs(textbook_m(1, 2, 1)[3]))

m = fractional_m(mp.mpf(1), mp.mpf("0.5"), mp.mpf(1), mp.mpf("1.7"))
show("T(alpha=1.7,E=1,V=0.5,d=1)", abs(1 / m[3]) ** 2)
show("R(alpha=1.7,E=1,V=0.5,d=1)", abs(m[2] / m[3]) ** 2)

# SS crossing at rho = 0, alpha = 2, n = 2 straight from the textbook matrix:
# unknowns (sigma, kd); with d = 1, E = kd^2 and V = i sigma E.
def ss_system(sig, kd):
    E = kd ** 2
    m22 = textbook_m(E, 1j * sig * E, 1)[3]
    return [mp.re(m22), mp.im(m22)]

sig, kd = mp.findroot(ss_system, (mp.mpf("0.88"), mp.mpf("2.0")))
show("sigma*(rho=0, alpha=2, n=2)", sig)
show("H at sigma*", kd)

# Ray sigma = rho (ratio 1), alpha = 2, n = 2: unknowns (rho, kd).
def ray_system(rho, kd):
    E = kd ** 2
    m22 = textbook_m(E, (rho + 1j * rho) * E, 1)[3]
    return [mp.re(m22), mp.im(m22)]

rho, kd = mp.findroot(ray_system, (mp.mpf("0.42"), mp.mpf("3.2")))
show("ray rho*(ratio=1, alpha=2, n=2)", rho)
show("ray H*(ratio=1, alpha=2, n=2)", kd)
