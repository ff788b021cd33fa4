"""Benchmark functions written against the program builder."""

from __future__ import annotations

import math

import numpy as np

from .errors import UnknownTask
from .program import (
    Program,
    ProgramBuilder,
    absolute,
    arctan2,
    cos,
    dot,
    erf,
    exp,
    log,
    sin,
    sqrt,
    sum_reduce,
    tanh,
)

GAMMA = 1.4

# measured constants of the dipole system (MINPACK-2 test problem set)
HHD_SIGMA = {
    "mx": 0.485,
    "my": -0.0019,
    "A": -0.0581,
    "B": 0.015,
    "C": 0.105,
    "D": 0.0406,
    "E": 0.167,
    "F": -0.399,
}

PROPANE_K = {5: 0.193, 6: 0.002597, 7: 0.003448, 8: 1.799e-5, 9: 2.155e-4, 10: 3.846e-5}
PROPANE_R = 10.0
PROPANE_P = 40.0


def _scalars(b: ProgramBuilder, names):
    return [b.input(n) for n in names]


# -- Roe flux -----------------------------------------------------------------


def _p1d(u0, u1, u2):
    return (GAMMA - 1.0) * (u2 - u1 * u1 / (2.0 * u0))


def roeflux_1d() -> Program:
    b = ProgramBuilder()
    ul0, ul1, ul2, ur0, ur1, ur2 = _scalars(b, ["ul0", "ul1", "ul2", "ur0", "ur1", "ur2"])
    du0 = ul0 - ur0
    ulr0 = sqrt(ul0 * ur0)
    sl, sr = sqrt(ul0), sqrt(ur0)
    w1 = sl + sr

    vl = ul1 / ul0
    pl = _p1d(ul0, ul1, ul2)
    hl = (ul2 + pl) / ul0
    vr = ur1 / ur0
    pr = _p1d(ur0, ur1, ur2)
    hr = (ur2 + pr) / ur0

    dp = pl - pr
    dv = vl - vr
    u = (sl * vl + sr * vr) / w1
    h = (sl * hl + sr * hr) / w1
    q2 = u * u
    a2 = (GAMMA - 1.0) * (h - 0.5 * q2)
    a = sqrt(a2)
    n = ulr0 * a
    lp = absolute(u + a)
    lz = absolute(u)
    ln = absolute(u - a)

    c0 = (du0 - dp / a2) * lz
    c1 = (dv + dp / n) * lp
    c2 = (dv - dp / n) * ln

    fl = (ul1, pl + ul1 * ul1 / ul0, vl * (pl + ul2))
    fr = (ur1, pr + ur1 * ur1 / ur0, vr * (pr + ur2))
    alpha = ulr0 / (2.0 * a)
    ac1, ac2 = alpha * c1, alpha * c2
    ua = u * a
    df = (
        c0 + ac1 - ac2,
        c0 * u + ac1 * (u + a) - ac2 * (u - a),
        0.5 * c0 * q2 + ac1 * (h + ua) - ac2 * (h - ua),
    )
    phi = [0.5 * ((fl[i] + fr[i]) - df[i]) for i in range(3)]
    return b.build(*phi)


def roeflux_3d() -> Program:
    b = ProgramBuilder()
    names = [f"ul{i}" for i in range(5)] + [f"ur{i}" for i in range(5)]
    xs = _scalars(b, names)
    ul, ur = xs[:5], xs[5:]
    du = [ul[i] - ur[i] for i in range(5)]
    sl, sr = sqrt(ul[0]), sqrt(ur[0])
    w1 = sl + sr
    vl = [ul[i] / ul[0] for i in (1, 2, 3)]
    vr = [ur[i] / ur[0] for i in (1, 2, 3)]
    t = [(sl * vl[i] + sr * vr[i]) / w1 for i in range(3)]

    def p3d(u):
        usq = u[1] * u[1] + u[2] * u[2] + u[3] * u[3]
        return (GAMMA - 1.0) * (u[4] - usq / (2.0 * u[0]))

    pl, pr = p3d(ul), p3d(ur)
    hl = (ul[4] + pl) / ul[0]
    hr = (ur[4] + pr) / ur[0]
    h = (sl * hl + sr * hr) / w1
    q2 = t[0] * t[0] + t[1] * t[1] + t[2] * t[2]
    a2 = (GAMMA - 1.0) * (h - 0.5 * q2)
    a = sqrt(a2)
    t1, t2, t3 = t
    lp = t1 + a
    lz = t1
    lm = t1 - a

    tdu = t1 * du[1] + t2 * du[2] + t3 * du[3]
    c3 = lz * ((GAMMA - 1.0) / a2 * ((h - q2) * du[0] + tdu - du[4]))
    k1 = du[0] - c3
    k2 = (du[1] - t1 * du[0]) / a
    c0 = (k1 - k2) / 2.0 * lm
    c1 = lz * (du[2] / t2 - du[0])
    c2 = lz * (du[3] / t3 - du[1])
    c4 = (k1 + k2) / 2.0 * lp

    def flux(u, v, p):
        return (u[1], p + u[1] * v[0], u[2] * v[0], u[3] * v[0], v[0] * (p + u[4]))

    fl, fr = flux(ul, vl, pl), flux(ur, vr, pr)
    t1a = t1 * a
    df = (
        c0 + c3 + c4 * lp,
        c0 * lm + c3 * t1 + c4 * lp,
        c0 * t2 + c1 * t2 + c2 * t2 + c3 * t2 + c4 * t2,
        c0 * t3 + c2 * t3 + c3 * t3 + c4 * t3,
        c0 * (h - t1a) + c1 * (t2 * t2) + c2 * (t3 * t3) + c3 * q2 / 2.0 + c4 * (h + t1a),
    )
    phi = [0.5 * ((fl[i] + fr[i]) - df[i]) for i in range(5)]
    return b.build(*phi)


# -- robot arm ----------------------------------------------------------------


def robotarm_6dof() -> Program:
    b = ProgramBuilder()
    th = _scalars(b, [f"t{i}" for i in range(1, 7)])
    c = [None] + [cos(x) for x in th]
    s = [None] + [sin(x) for x in th]
    s23 = c[2] * s[3] + s[2] * c[3]
    c23 = c[2] * c[3] - s[2] * s[3]

    ax = s[5] * (c[1] * c23 * c[4] + s[1] * s[4]) + c[1] * s23 * c[5]
    ay = s[5] * (s[1] * c23 * c[4] - c[1] * s[4]) + s[1] * s23 * c[5]
    az = s23 * c[4] * s[5] - c23 * c[5]
    inner = c23 * s[5] + s23 * c[4] * c[5]
    nz = c[6] * inner - s23 * s[4] * s[6]
    oz = -s[6] * inner - s23 * s[4] * c[6]

    z = arctan2(ay, ax)
    yhat = arctan2(sqrt(1.0 - az * az), az)
    zhat = arctan2(-oz, nz)

    reach = 175.0 + 890.0 * c[2] + 50.0 * c23 + 1035.0 * s23
    px = 185.0 * ax + c[1] * reach
    y1 = 185.0 * (s[5] * (c[1] * c23 * c[4] + c[1] * s[4]) + s[1] * s23 * c[5])
    py = y1 + s[1] * reach
    pz = 575.0 + 890.0 * s[2] + 50.0 * s23 - 1035.0 * c23 + 185.0 * az
    return b.build(px, py, pz, z, yhat, zhat)


# -- MINPACK-2 systems --------------------------------------------------------


def humanheartdipole() -> Program:
    b = ProgramBuilder()
    x1, x2, x3, x4, x5, x6, x7, x8 = _scalars(b, [f"x{i}" for i in range(1, 9)])
    sg = HHD_SIGMA
    d57 = x5 * x5 - x7 * x7
    d68 = x6 * x6 - x8 * x8
    f1 = x1 + x2 - sg["mx"]
    f2 = x3 + x4 - sg["my"]
    f3 = x5 * x1 + x6 * x2 - x7 * x3 - x8 * x4 - sg["A"]
    f4 = x7 * x1 + x8 * x2 + x5 * x3 + x6 * x4 - sg["B"]
    f5 = x1 * d57 - 2.0 * x1 * x5 * x7 + x2 * d68 - 2.0 * x4 * x6 * x8 - sg["C"]
    f6 = x3 * d57 + 2.0 * x1 * x5 * x7 + x4 * d68 + 2.0 * x2 * x6 * x8 - sg["D"]
    q5 = x5 * x5 - 3.0 * x7 * x7
    q7 = x7 * x7 - 3.0 * x5 * x5
    q6 = x6 * x6 - 3.0 * x8 * x8
    q8 = x8 * x8 - 3.0 * x6 * x6
    f7 = x1 * x5 * q5 + x3 * x7 * q7 + x2 * x6 * q6 + x4 * x8 * q8 - sg["E"]
    f8 = x3 * x5 * q5 - x1 * x7 * q7 + x4 * x6 * q6 - x2 * x8 * q8 - sg["F"]
    return b.build(f1, f2, f3, f4, f5, f6, f7, f8)


def propanecombustion() -> Program:
    b = ProgramBuilder()
    x = [None] + _scalars(b, [f"x{i}" for i in range(1, 12)])
    K, R, p = PROPANE_K, PROPANE_R, PROPANE_P
    f1 = x[1] + x[4] - 3.0
    f2 = 2.0 * x[1] + x[2] + x[4] + x[7] + x[8] + x[9] + 2.0 * x[10] - R
    f3 = 2.0 * x[2] + 2.0 * x[5] + x[6] + x[7] - 8.0
    f4 = 2.0 * x[3] + x[9] - 4.0 * R
    f5 = K[5] * sqrt(x[2] * x[4]) + x[1] * x[5]
    p_over = p / x[11]
    sp = sqrt(p_over)
    s12 = sqrt(x[1] * x[2])
    s4x7sp = sqrt(x[4]) * x[7] * sp
    f6 = K[6] * s12 - s4x7sp
    f7 = K[7] * s12 - s4x7sp
    f8 = K[8] * x[1] - x[4] * x[8] * p_over
    f9 = K[9] * x[1] * sqrt(x[3]) - x[4] * x[9] * sp
    f10 = K[10] * x[1] * x[1] - x[4] * x[4] * x[10] * p_over
    f11 = x[11]
    for i in range(10, 0, -1):
        f11 = f11 - x[i]
    return b.build(f1, f2, f3, f4, f5, f6, f7, f8, f9, f10, f11)


# -- finance ------------------------------------------------------------------


def blackscholes() -> Program:
    b = ProgramBuilder()
    S, K, r, sigma, T = _scalars(b, ["S", "K", "r", "sigma", "T"])

    def cdf(v):
        return 0.5 * (1.0 + erf(v * (1.0 / math.sqrt(2.0))))

    rT = r * T
    F = exp(rT) * S
    sqT = sigma * sqrt(T)
    d1 = (log(F / K) + sigma * sigma * T / 2.0) / sqT
    d2 = d1 - sqT
    price = exp(-rT) * (F * cdf(d1) - K * cdf(d2))
    return b.build(price)


def worked_example() -> Program:
    """Two-input, two-output toy: y1 = log sin(x1 x2), y2 = x1 x2 - sin(x1 x2)."""
    b = ProgramBuilder()
    x1, x2 = _scalars(b, ["x1", "x2"])
    v1 = x1 * x2
    v2 = sin(v1)
    return b.build(log(v2), v1 - v2)


# -- neural network -----------------------------------------------------------


def mlp2(n_in: int = 4, hidden: int = 8, n_out: int = 4, eps: float = 1e-5) -> Program:
    b = ProgramBuilder()
    x = b.input("x", (n_in, 1))
    label = b.input("label", (n_out, 1))
    W1 = b.input("W1", (hidden, n_in))
    b1 = b.input("b1", (hidden, 1))
    gamma = b.input("gamma", (hidden, 1))
    beta = b.input("beta", (hidden, 1))
    W2 = b.input("W2", (n_out, hidden))
    b2 = b.input("b2", (n_out, 1))

    z = tanh(W1 @ x + b1)
    mu = sum_reduce(z) * (1.0 / hidden)
    d = z - mu
    var = sum_reduce(d * d) * (1.0 / hidden)
    normed = d / sqrt(var + eps)
    hnorm = gamma * normed + beta
    logits = tanh(W2 @ hnorm + b2)
    loss = log(sum_reduce(exp(logits))) - dot(label, logits)
    return b.build(loss)


TASKS = {
    "roeflux_1d": roeflux_1d,
    "roeflux_3d": roeflux_3d,
    "robotarm_6dof": robotarm_6dof,
    "humanheartdipole": humanheartdipole,
    "propanecombustion": propanecombustion,
    "blackscholes": blackscholes,
    "mlp2": mlp2,
}

# reference operation counts (forward, reverse, markowitz, best found) reported
# for a different, finer-grained trace of the same functions
REFERENCE_COUNTS = {
    "roeflux_1d": (620, 364, 407, 320),
    "robotarm_6dof": (397, 301, 288, 231),
    "humanheartdipole": (240, 172, 194, 149),
    "propanecombustion": (151, 90, 111, 88),
    "blackscholes": (545, 572, 350, 312),
    "roeflux_3d": (1556, 979, 938, 811),
    "mlp2": (10930, 392, 4796, 398),
}


def build_task(name: str) -> Program:
    try:
        return TASKS[name]()
    except KeyError:
        raise UnknownTask(f"unknown task {name!r}; choose from {', '.join(TASKS)}") from None


def task_point(name: str, seed: int = 0) -> list:
    """A point inside the domain of task ``name``."""
    rng = np.random.default_rng(seed)
    if name == "roeflux_1d":
        return [1.0, 0.1, 2.0, 1.1, 0.2, 2.2]
    if name == "roeflux_3d":
        return [1.0, 0.1, 0.2, 0.3, 2.5, 1.1, 0.2, 0.25, 0.35, 2.7]
    if name == "robotarm_6dof":
        return list(rng.uniform(0.1, 1.0, size=6))
    if name == "humanheartdipole":
        return list(rng.uniform(-1.0, 1.0, size=8))
    if name == "propanecombustion":
        return list(rng.uniform(0.5, 3.0, size=11))
    if name == "blackscholes":
        return [100.0, 95.0, 0.05, 0.2, 1.0]
    if name == "mlp2":
        p = build_task(name)
        out = []
        for nm, shape in p.inputs:
            if nm == "label":
                v = np.zeros(shape)
                v[rng.integers(shape[0])] = 1.0
            elif nm == "gamma":
                v = 1.0 + 0.1 * rng.normal(size=shape)
            else:
                v = rng.normal(scale=0.5, size=shape)
            out.append(v)
        return out
    raise UnknownTask(name)
