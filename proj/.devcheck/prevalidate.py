#!/usr/bin/env python3
"""Pre-implementation numeric validation (dev scratch, not part of the artifact)."""
import cmath
import math

import mpmath as mp

mp.mp.dps = 40

# ---------------------------------------------------------------- Cayley table
# storage order: 1, e1, e2, e3, e12, e13, e23, e123
NAMES = ["1", "e1", "e2", "e3", "e12", "e13", "e23", "e123"]
MASKS = [0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111]
MASK_TO_IDX = {m: i for i, m in enumerate(MASKS)}


def blade_mul(a_mask, b_mask):
    # sign from counting transpositions to merge sorted products (e_i^2 = +1)
    a = a_mask >> 1
    swaps = 0
    while a:
        swaps += bin(a & b_mask).count("1")
        a >>= 1
    sign = -1 if (swaps & 1) else 1
    return sign, a_mask ^ b_mask


print("generated table (row x col):")
for r in range(8):
    cells = []
    for c in range(8):
        s, m = blade_mul(MASKS[r], MASKS[c])
        cells.append(("-" if s < 0 else "+") + NAMES[MASK_TO_IDX[m]])
    print(f"{NAMES[r]:>5}: " + " ".join(f"{x:>6}" for x in cells))

# my hand transcription of the paper table, for cross-check
TRANSCRIBED = [
    ["+1", "+e1", "+e2", "+e3", "+e12", "+e13", "+e23", "+e123"],
    ["+e1", "+1", "+e12", "+e13", "+e2", "+e3", "+e123", "+e23"],
    ["+e2", "-e12", "+1", "+e23", "-e1", "-e123", "+e3", "-e13"],
    ["+e3", "-e13", "-e23", "+1", "+e123", "-e1", "-e2", "+e12"],
    ["+e12", "-e2", "+e1", "+e123", "-1", "-e23", "+e13", "-e3"],
    ["+e13", "-e3", "-e123", "+e1", "+e23", "-1", "-e12", "+e2"],
    ["+e23", "+e123", "-e3", "+e2", "-e13", "+e12", "-1", "-e1"],
    ["+e123", "+e23", "-e13", "+e12", "-e3", "+e2", "-e1", "-1"],
]
ok = True
for r in range(8):
    for c in range(8):
        s, m = blade_mul(MASKS[r], MASKS[c])
        got = ("-" if s < 0 else "+") + NAMES[MASK_TO_IDX[m]]
        if got != TRANSCRIBED[r][c]:
            ok = False
            print("MISMATCH", NAMES[r], NAMES[c], got, TRANSCRIBED[r][c])
print("transcription matches generated:", ok)

# ------------------------------------------------- frozen values (high precision)
z0 = mp.pi / 4 + mp.pi / 3 * mp.j


def g(z):
    return mp.e**z / (mp.cos(z) ** 3 + mp.sin(z) ** 3)


def gprime(z):
    gg = g(z)
    num = 3 * (mp.sin(z) ** 2 * mp.cos(z) - mp.cos(z) ** 2 * mp.sin(z))
    return gg * (1 - num / (mp.cos(z) ** 3 + mp.sin(z) ** 3))


print("\nz0           =", mp.nstr(z0, 25))
print("g(z0)        =", mp.nstr(g(z0), 25))
print("g'(z0)       =", mp.nstr(gprime(z0), 25))
print("g''' / g'    =", mp.nstr(mp.diff(g, z0, 3) / gprime(z0), 8))
print("exp(0.5+0.2i)=", mp.nstr(mp.e ** (mp.mpf("0.5") + mp.mpf("0.2") * mp.j), 20))

# mpmath independent check of g' via high-order numerical differentiation
print("mp.diff g'   =", mp.nstr(mp.diff(g, z0, 1), 25))

# ------------------------------------------------- binary64 central difference
zf = complex(float(mp.re(z0)), float(mp.im(z0)))


def gf(z):
    return cmath.exp(z) / (cmath.cos(z) ** 3 + cmath.sin(z) ** 3)


ref = complex(gprime(z0))
print("\nbinary64 central-difference sweep (exact half-step stencil):")
best = (None, 1e99)
for k in range(1, 21):
    h = 10.0 ** (-k)
    est = (gf(zf + h / 2) - gf(zf - h / 2)) / h
    eps = abs(est - ref) / abs(ref)
    if eps < best[1]:
        best = (h, eps)
    print(f"  h=1e-{k:<3d} eps={eps:.3e}")
print("argmin:", best)

print("\nbinary64 BACKWARD difference f(x)-f(x-h) over h:")
best = (None, 1e99)
for k in range(1, 21):
    h = 10.0 ** (-k)
    est = (gf(zf) - gf(zf - h)) / h
    eps = abs(est - ref) / abs(ref)
    if eps < best[1]:
        best = (h, eps)
    print(f"  h=1e-{k:<3d} eps={eps:.3e}")
print("argmin:", best)

# ------------------------------------------------- bicomplex prototype
# w = z1 + q z2 with commuting pseudoscalar i; all ops on complex pairs


class BC:
    __slots__ = ("z1", "z2")

    def __init__(self, z1, z2=0j):
        self.z1 = complex(z1)
        self.z2 = complex(z2)

    def __add__(s, o):
        o = o if isinstance(o, BC) else BC(o)
        return BC(s.z1 + o.z1, s.z2 + o.z2)

    __radd__ = __add__

    def __sub__(s, o):
        o = o if isinstance(o, BC) else BC(o)
        return BC(s.z1 - o.z1, s.z2 - o.z2)

    def __rsub__(s, o):
        return BC(o) - s

    def __mul__(s, o):
        o = o if isinstance(o, BC) else BC(o)
        return BC(s.z1 * o.z1 - s.z2 * o.z2, s.z1 * o.z2 + s.z2 * o.z1)

    __rmul__ = __mul__

    def __repr__(s):
        return f"({s.z1!r}) + q*({s.z2!r})"


def bc_exp(w):
    e = cmath.exp(w.z1)
    return BC(e * cmath.cos(w.z2), e * cmath.sin(w.z2))


def bc_inverse(w):
    den = w.z1 * w.z1 + w.z2 * w.z2
    if den == 0:
        raise ZeroDivisionError("non-invertible")
    return BC(w.z1 / den, -w.z2 / den)


def bc_sin(w):
    return BC(cmath.sin(w.z1) * cmath.cosh(w.z2), cmath.cos(w.z1) * cmath.sinh(w.z2))


def bc_cos(w):
    return BC(cmath.cos(w.z1) * cmath.cosh(w.z2), -cmath.sin(w.z1) * cmath.sinh(w.z2))


def atan2_pv(y, x):
    r = math.atan2(y, x)
    if r == -math.pi:
        r = math.pi
    return r


def bc_polar(x):
    m0 = abs(x.z1) ** 2 + abs(x.z2) ** 2
    m1 = 2.0 * (x.z2 * x.z1.conjugate()).imag
    gn = abs(x.z1 + 1j * x.z2) * abs(x.z1 - 1j * x.z2)
    if gn == 0.0:
        raise ZeroDivisionError("non-invertible")
    den = math.sqrt(2.0 * (m0 + gn))
    s0, s1 = (m0 + gn) / den, m1 / den
    S = BC(s0, complex(0, s1))
    Sinv = BC(s0 / gn, complex(0, -s1 / gn))
    return x * Sinv, S


def bc_log(x):
    U, S = bc_polar(x)
    s0, s1 = S.z1.real, S.z2.imag
    a = 0.5 * math.log(s0 * s0 - s1 * s1)
    d = 0.5 * math.log((s0 + s1) / (s0 - s1))
    u0, u3 = U.z1.real, U.z1.imag
    u2, u1 = U.z2.real, U.z2.imag
    sin2c = 2.0 * (u0 * u2 + u1 * u3)
    cos2c = 2.0 * (u0 * u0 + u3 * u3) - 1.0
    c = 0.5 * atan2_pv(sin2c, cos2c)
    cc = math.cos(c)
    if abs(cc) > 1.0 / math.sqrt(2.0):
        sb, cb = u3 / cc, u0 / cc
    else:
        sc = math.sin(c)
        sb, cb = u1 / sc, u2 / sc
    b = atan2_pv(sb, cb)
    return BC(complex(a, b), complex(c, d))


def bc_sqrt(x):
    if x.z1 == 0 and x.z2 == 0:
        return BC(0)
    U, S = bc_polar(x)
    s0, s1 = S.z1.real, S.z2.imag
    gns = math.sqrt(s0 * s0 - s1 * s1)
    denS = math.sqrt(2.0 * (s0 + gns))
    sqS = BC((s0 + gns) / denS, complex(0, s1 / denS))
    P = BC(1) + U
    gnp = abs(P.z1 + 1j * P.z2) * abs(P.z1 - 1j * P.z2)
    if gnp == 0.0:
        half = bc_log(x)
        return bc_exp(BC(half.z1 * 0.5, half.z2 * 0.5))
    mp0 = abs(P.z1) ** 2 + abs(P.z2) ** 2
    mp1 = 2.0 * (P.z2 * P.z1.conjugate()).imag
    denP = math.sqrt(2.0 * (mp0 + gnp))
    sp0, sp1 = (mp0 + gnp) / denP, mp1 / denP
    SPinv = BC(sp0 / gnp, complex(0, -sp1 / gnp))
    sqU = P * SPinv
    return sqU * sqS


# QSD of lyness at z0, h=1e-20
h = 1e-20
w = BC(zf, h)
y = bc_exp(w) * bc_inverse(bc_cos(w) * bc_cos(w) * bc_cos(w) + bc_sin(w) * bc_sin(w) * bc_sin(w))
est = (y * BC(0, -1)).z1 / h
print("\nQSD lyness estimate:", est)
print("QSD lyness eps:", abs(est - ref) / abs(ref))

# QSD of Ln on the branch cut and near origin
for zz, name in [(-0.5 + 0j, "-0.5"), (1e-10 + 0j, "1e-10"), (-1e-10 + 0j, "-1e-10")]:
    w = BC(zz, h)
    y = bc_log(w)
    est = (y * BC(0, -1)).z1 / h
    refd = 1.0 / zz
    print(f"QSD ln at {name}: est={est}  eps={abs(est-refd)/abs(refd):.3e}")

# log/exp/sqrt roundtrip sanity on randoms
import random

random.seed(42)
worst_log = worst_sqrt = 0.0
for _ in range(2000):
    wv = BC(
        complex(random.uniform(-1, 1), random.uniform(-1, 1)),
        complex(random.uniform(-1, 1), random.uniform(-1, 1)),
    )
    mag = max(abs(wv.z1), abs(wv.z2), 1e-30)
    try:
        r = bc_exp(bc_log(wv))
        err = max(abs(r.z1 - wv.z1), abs(r.z2 - wv.z2)) / mag
        worst_log = max(worst_log, err)
        s = bc_sqrt(wv)
        r2 = s * s
        err2 = max(abs(r2.z1 - wv.z1), abs(r2.z2 - wv.z2)) / mag
        worst_sqrt = max(worst_sqrt, err2)
    except ZeroDivisionError:
        pass
print("\nworst exp(log(w)) rel err over 2000 randoms:", worst_log)
print("worst sqrt(w)^2 rel err over 2000 randoms:", worst_sqrt)

# specific appendix values
l = bc_log(BC(-1))
print("Ln(-1) =", l, " (want b=pi)")
l = bc_log(BC(0, 1j))  # i*q: z2 = i
print("Ln(iq) =", l, " (want b=pi/2, c=pi/2)")
s = bc_sqrt(BC(0, 1j))
e = bc_exp(BC(complex(0, math.pi / 4), complex(math.pi / 4, 0)))
print("sqrt(iq) =", s, "\nexp(pi/4(i+q)) =", e)
print("sqrt(-1) =", bc_sqrt(BC(-1)))
print("sqrt(4)  =", bc_sqrt(BC(4)))

# tiny-step fidelity
for name, f, fc in [
    ("exp", bc_exp, cmath.exp),
    ("log", bc_log, cmath.log),
    ("sqrt", bc_sqrt, cmath.sqrt),
    ("sin", bc_sin, cmath.sin),
]:
    zz = 0.7 + 0.3j
    r = f(BC(zz, 1e-200))
    print(f"tiny-step {name}: |complex_part - std| = {abs(r.z1 - fc(zz)):.3e}")
