"""Extended-precision reference values for the CGO test function.

Line integrals of r^l exp(sqrt(s r) zeta) (optionally weighted by sqrt(s/r))
and sector integrals of u0(s x) are computed with mpmath quadrature after the
substitution r = t^2, independently of any closed form. Output is Rust
array literals.
"""
from mpmath import mp, mpf, mpc, exp, sqrt, quad, pi, inf, diff, cos, sin

mp.dps = 40


def line(l, s, h, zeta, weighted):
    s, h = mpf(s), mpf(h)
    a = sqrt(h)
    if weighted:
        f = lambda t: t ** (2 * l) * exp(sqrt(s) * t * zeta) * sqrt(s) * 2
    else:
        f = lambda t: t ** (2 * l) * exp(sqrt(s) * t * zeta) * 2 * t
    pts = [0] + [a * mpf(2) ** (-k) for k in range(40, -1, -1)]
    return quad(f, pts)


def u0(s, r, th):
    return exp(-sqrt(s * r) * exp(1j * th / 2))


def sector(tm, tM, s):
    f = lambda t, th: u0(s, t * t, th) * t * t * 2 * t
    return quad(f, [0, 1, 10, inf], [tm, tM])


def fmt(z):
    return "({}, {})".format(mp.nstr(z.real, 20, min_fixed=-1, max_fixed=-1), mp.nstr(z.imag, 20, min_fixed=-1, max_fixed=-1))


def rf(x):
    s = mp.nstr(mpf(x), 20)
    return s if ("." in s or "e" in s) else s + ".0"


zetas = {"NEG_ONE": mpc(-1, 0), "THIRD": -exp(1j * pi / 6)}
print("/// (ell, s, h, weighted, zeta_re, zeta_im, value)")
print("pub const LINE: &[(usize, f64, f64, bool, f64, f64, (f64, f64))] = &[")
for name, z in zetas.items():
    for l in range(0, 7):
        for s in ["100.0", "1000.0", "10000.0"]:
            for w in [False, True]:
                v = line(l, mpf(s), 1, z, w)
                print("    ({}, {}, 1.0, {}, {}, {}, {}),".format(l, s, "true" if w else "false", rf(z.real), rf(z.imag), fmt(v)))
print("];")

print("/// (theta_m, theta_M, s, value) over the infinite sector")
print("pub const SECTOR: &[(f64, f64, f64, (f64, f64))] = &[")
for tm, tM, s in [(0, pi / 2, 10), (0, pi / 3, 100), (mpf("0.2"), mpf("2.5"), 1000)]:
    v = sector(mpf(tm), mpf(tM), mpf(s))
    print("    ({}, {}, {}, {}),".format(rf(tm), rf(tM), rf(s), fmt(v)))
print("];")

th, phi, s, r = mpf(0), -pi / 2, mpf(4), mpf(1)
g = lambda e: u0(s, sqrt((r * cos(th) + e * cos(phi)) ** 2 + (r * sin(th) + e * sin(phi)) ** 2), mp.atan2(r * sin(th) + e * sin(phi), r * cos(th) + e * cos(phi)))
d = diff(g, 0)
print("/// Directional derivative of u0(s x) at r = 1, theta = 0 along phi = -pi/2, s = 4")
print("pub const NORMAL_DERIVATIVE: (f64, f64) = {};".format(fmt(d)))
