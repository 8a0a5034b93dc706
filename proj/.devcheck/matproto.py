#!/usr/bin/env python3
"""Matrix-representation prototype: PAULI2/REAL4 QSD behavior (dev scratch)."""
import cmath
import math
import random

import mpmath as mp

mp.mp.dps = 40


def mat_id(n):
    return [[1.0 + 0j if i == j else 0j for j in range(n)] for i in range(n)]


def mat_add(A, B):
    return [[A[i][j] + B[i][j] for j in range(len(A))] for i in range(len(A))]


def mat_scale(A, s):
    return [[A[i][j] * s for j in range(len(A))] for i in range(len(A))]


def mat_mul(A, B):
    n = len(A)
    return [[sum(A[i][k] * B[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def mat_trace(A):
    return sum(A[i][i] for i in range(len(A)))


def mat_norm_inf(A):
    return max(sum(abs(x) for x in row) for row in A)


def mat_exp(A):
    n = len(A)
    nrm = mat_norm_inf(A)
    s = 0
    if nrm > 0.5:
        s = max(0, math.ceil(math.log2(nrm / 0.5)))
    B = mat_scale(A, 0.5**s)
    T = mat_id(n)
    term = mat_id(n)
    for k in range(1, 21):
        term = mat_scale(mat_mul(term, B), 1.0 / k)
        T = mat_add(T, term)
    for _ in range(s):
        T = mat_mul(T, T)
    return T


def mat_inv(A):
    n = len(A)
    M = [row[:] + iden[:] for row, iden in zip([r[:] for r in A], mat_id(n))]
    for col in range(n):
        p = max(range(col, n), key=lambda r: abs(M[r][col]))
        if M[p][col] == 0:
            raise ZeroDivisionError("singular")
        M[col], M[p] = M[p], M[col]
        piv = M[col][col]
        M[col] = [x / piv for x in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [a - f * b for a, b in zip(M[r], M[col])]
    return [row[n:] for row in M]


def mat_sin(A):
    iA = mat_scale(A, 1j)
    miA = mat_scale(A, -1j)
    E1, E2 = mat_exp(iA), mat_exp(miA)
    diff = mat_add(E1, mat_scale(E2, -1))
    return mat_scale(diff, -0.5j)


def mat_cos(A):
    iA = mat_scale(A, 1j)
    miA = mat_scale(A, -1j)
    return mat_scale(mat_add(mat_exp(iA), mat_exp(miA)), 0.5)


I2 = [[0, -1j], [-1j, 0]]
J2 = [[0, -1], [1, 0]]
K2 = [[-1j, 0], [0, 1j]]
I4 = [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]]
J4 = [[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]]
K4 = [[0, 0, 0, 1], [0, 0, 1, 0], [0, -1, 0, 0], [-1, 0, 0, 0]]


def qmat(ci, cj, ck, rep):
    I, J, K = (I2, J2, K2) if rep == 2 else (I4, J4, K4)
    n = len(I)
    return [
        [complex(ci * I[i][j] + cj * J[i][j] + ck * K[i][j]) for j in range(n)] for i in range(n)
    ]


def embed(z, h, Q):
    n = len(Q)
    A = mat_scale(mat_id(n), z)
    return mat_add(A, mat_scale(Q, h))


def lyness_mat(A):
    E = mat_exp(A)
    C, S = mat_cos(A), mat_sin(A)
    C3 = mat_mul(mat_mul(C, C), C)
    S3 = mat_mul(mat_mul(S, S), S)
    return mat_mul(E, mat_inv(mat_add(C3, S3)))


def qsd_mat(z, h, ci, cj, ck, rep, f=lyness_mat):
    Q = qmat(ci, cj, ck, rep)
    A = embed(z, h, Q)
    W = f(A)
    D = mat_mul(W, mat_scale(Q, -1))
    return mat_trace(D) / (len(Q) * h)


z0 = complex(float(mp.pi / 4), float(mp.pi / 3))


def gp(z):
    zz = mp.mpc(z)
    g = mp.e**zz / (mp.cos(zz) ** 3 + mp.sin(zz) ** 3)
    num = 3 * (mp.sin(zz) ** 2 * mp.cos(zz) - mp.cos(zz) ** 2 * mp.sin(zz))
    return complex(g * (1 - num / (mp.cos(zz) ** 3 + mp.sin(zz) ** 3)))


ref = gp(z0)
print("exact double repr of reference g'(z0):", repr(ref))

h = 1e-20
print("\nangular behavior (lyness, h=1e-20):")
for theta in [0.0, 0.3, math.pi / 2, math.pi - 0.3, math.pi]:
    for phi in [0.0, 2.0]:
        ci, cj, ck = math.sin(theta) * math.cos(phi), math.sin(theta) * math.sin(phi), math.cos(theta)
        e2 = abs(qsd_mat(z0, h, ci, cj, ck, 2) - ref) / abs(ref)
        e4 = abs(qsd_mat(z0, h, ci, cj, ck, 4) - ref) / abs(ref)
        print(f"  theta={theta:.3f} phi={phi:.1f}: pauli2 eps={e2:.2e}  real4 eps={e4:.2e}")

# ulp agreement between REAL4 matrix path and the closed-form bicomplex value
def ulps(a, b):
    import struct

    def o(x):
        i = struct.unpack("<q", struct.pack("<d", x))[0]
        return i if i >= 0 else (-9223372036854775808 - i) * -1 - (1 << 63) + ...  # unused

    # simpler: relative measure in units of eps
    scale = max(abs(a), abs(b), 1e-300)
    return abs(a - b) / (scale * 2.220446049250313e-16)


# bicomplex closed-form estimate for comparison
def bc_est(fname, z, h):
    class BC:
        def __init__(s, z1, z2=0j):
            s.z1, s.z2 = complex(z1), complex(z2)

        def __add__(s, o):
            o = o if isinstance(o, BC) else BC(o)
            return BC(s.z1 + o.z1, s.z2 + o.z2)

        __radd__ = __add__

        def __mul__(s, o):
            o = o if isinstance(o, BC) else BC(o)
            return BC(s.z1 * o.z1 - s.z2 * o.z2, s.z1 * o.z2 + s.z2 * o.z1)

        __rmul__ = __mul__

    def bexp(w):
        e = cmath.exp(w.z1)
        return BC(e * cmath.cos(w.z2), e * cmath.sin(w.z2))

    def bsin(w):
        return BC(cmath.sin(w.z1) * cmath.cosh(w.z2), cmath.cos(w.z1) * cmath.sinh(w.z2))

    def bcos(w):
        return BC(cmath.cos(w.z1) * cmath.cosh(w.z2), -cmath.sin(w.z1) * cmath.sinh(w.z2))

    def binv(w):
        den = w.z1 * w.z1 + w.z2 * w.z2
        return BC(w.z1 / den, -w.z2 / den)

    w = BC(z, h)
    if fname == "exp":
        y = bexp(w)
    elif fname == "sin":
        y = bsin(w)
    elif fname == "lyness":
        y = bexp(w) * binv(bcos(w) * bcos(w) * bcos(w) + bsin(w) * bsin(w) * bsin(w))
    return y.z2 / h


print("\nREAL4 vs bicomplex agreement (ulp-ish units of eps), random points:")
random.seed(7)
worst = {}
for fname, fm in [("exp", mat_exp), ("sin", mat_sin), ("lyness", lyness_mat)]:
    wu = 0.0
    for _ in range(50):
        z = complex(random.uniform(-1.5, 1.5), random.uniform(-1.5, 1.5))
        theta, phi = random.uniform(0.2, math.pi - 0.2), random.uniform(0, 2 * math.pi)
        ci, cj, ck = (
            math.sin(theta) * math.cos(phi),
            math.sin(theta) * math.sin(phi),
            math.cos(theta),
        )
        m = qsd_mat(z, 1e-20, ci, cj, ck, 4, fm)
        b = bc_est(fname, z, 1e-20)
        u = max(ulps(m.real, b.real), ulps(m.imag, b.imag))
        wu = max(wu, u)
    worst[fname] = wu
print(worst)

# explicit 3.3 example
z = 0.5 + 0.2j
Q = qmat(0, -1, 0, 2)  # direction -j gives the +h top-right layout
A = embed(z, 1e-100, Q)
print("\nA =", A)
W = mat_exp(A)
print("exp(A) =", W)
print("W01 / 1e-100 =", W[0][1] / 1e-100, " vs W00 =", W[0][0])
