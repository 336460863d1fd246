"""Reference values for the C++ tests, computed with scipy independently of the library.

Run: python3 tests/oracles/generate.py > tests/oracles/oracle_values.hpp
"""
import math

import numpy as np
from scipy import integrate, special


def virial_1d():
    # 2 * int_0^1 x^3 exp(-2 x^2) (x^{-1/2} - 1) dx
    f = lambda x: x**3 * math.exp(-2 * x * x) * (x**-0.5 - 1.0)
    val, _ = integrate.quad(f, 0.0, 1.0, epsabs=1e-15, epsrel=1e-14, limit=200)
    return 2.0 * val


def weight_l1(kappa):
    # Algebraic-singularity rule for the x^{-kappa} endpoint.
    val, _ = integrate.quad(lambda x: 1.0, 0.0, 1.0, weight="alg", wvar=(-kappa, 0.0), epsabs=1e-15, epsrel=1e-14)
    return 2.0 * (val - 1.0)


def cole_hopf(a, t, x):
    # e^{a cos x} = I_0(a) + 2 sum_k I_k(a) cos(k x); heat flow damps mode k by e^{-k^2 t}.
    k = np.arange(1, 40)
    s = special.iv(0, a) + 2.0 * np.sum(special.iv(k, a) * np.exp(-k * k * t) * np.cos(k * x))
    return math.log(s)


def algebra_cos_cos_s2():
    two_l = 2.0 * math.pi
    norm_sq = lambda coeffs: two_l * sum((1.0 + k * k) ** 2 * abs(c) ** 2 for k, c in coeffs.items())
    cos = {1: 0.5, -1: 0.5}
    cos2 = {0: 0.5, 2: 0.25, -2: 0.25}
    return math.sqrt(norm_sq(cos2)) / norm_sq(cos)


def emit(name, value):
    print(f"inline constexpr double {name} = {value!r};")


print("#pragma once")
print("// Generated by tests/oracles/generate.py; do not edit.")
print()
print("namespace oracle {")
emit("kVirial1D", virial_1d())
for kappa in (0.1, 0.3, 0.5, 0.7, 0.9):
    emit(f"kWeightL1_{int(round(kappa * 10))}", weight_l1(kappa))
for t in (0.1, 0.25, 0.5):
    for label, x in (("0", 0.0), ("HalfPi", math.pi / 2), ("Pi", math.pi)):
        emit(f"kColeHopf_t{str(t).replace('.', 'p')}_x{label}", cole_hopf(0.1, t, x))
emit("kAlgebraCosCosS2", algebra_cos_cos_s2())
emit("kSmoothingMode1", math.exp(-1.0) * math.sqrt(2.0) / 2.0)
emit("kTanh1", math.tanh(1.0))
emit("kHalfLog3", 0.5 * math.log(3.0))
print("}  // namespace oracle")
