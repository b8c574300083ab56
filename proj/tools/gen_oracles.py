"""Regenerates tests/oracle_values.hpp from mpmath at 40 digits.

Run from the repository root: python3 tools/gen_oracles.py
"""
import pathlib

import mpmath as mp

mp.mp.dps = 40


def compositions(n, d):
    if n == 1:
        yield (d,)
        return
    for head in range(d + 1):
        for tail in compositions(n - 1, d - head):
            yield (head,) + tail


def ladder(ratio, degree):
    row = [mp.mpf(1)]
    for m in range(degree):
        row.append(row[-1] * ratio(m))
    return row


def fa_series(a, b, c, x, degree):
    n = len(b)
    rows = [ladder(lambda m, k=k: (b[k] + m) / ((c[k] + m) * (m + 1)) * mp.mpf(x[k]), degree) for k in range(n)]
    total = mp.mpf(0)
    for d in range(degree + 1):
        block = mp.fsum(mp.fprod(rows[k][m[k]] for k in range(n)) for m in compositions(n, d))
        total += mp.rf(a, d) * block
    return total


def fb_series(a, b, c, x, degree):
    n = len(a)
    rows = [ladder(lambda m, k=k: (a[k] + m) * (b[k] + m) / (m + 1) * mp.mpf(x[k]), degree) for k in range(n)]
    total = mp.mpf(0)
    for d in range(degree + 1):
        block = mp.fsum(mp.fprod(rows[k][m[k]] for k in range(n)) for m in compositions(n, d))
        total += block / mp.rf(c, d)
    return total


def lit(v):
    return mp.nstr(v, 20, min_fixed=-4, max_fixed=4)


entries = []


def add(name, value, note):
    entries.append((name, lit(value), note))


add("kGauss_03_07_11_at_04", mp.hyp2f1(0.3, 0.7, 1.1, 0.4), "2F1(0.3, 0.7; 1.1; 0.4)")
add("kGauss_05_025_15_at_m08", mp.hyp2f1(0.5, 0.25, 1.5, -0.8), "2F1(0.5, 0.25; 1.5; -0.8)")
add("kGauss_12_m04_23_at_095", mp.hyp2f1(1.2, -0.4, 2.3, 0.95), "2F1(1.2, -0.4; 2.3; 0.95)")
add("kGauss_07_12_03_at_m25", mp.hyp2f1(0.7, 1.2, 0.3, -25), "2F1(0.7, 1.2; 0.3; -25)")
add("kGaussAtOne_02_03_15", mp.hyp2f1(0.2, 0.3, 1.5, 1), "2F1(0.2, 0.3; 1.5; 1)")

add("kFa2", mp.appellf2(0.3, 0.2, 0.4, 0.7, 0.9, 0.1, 0.1), "F_A^(2)(0.3; 0.2, 0.4; 0.7, 0.9; 0.1, 0.1)")
add("kFa3", fa_series(0.25, [0.2, 0.3, 0.4], [0.9, 1.1, 1.3], [0.05, 0.07, 0.06], 40),
    "F_A^(3)(0.25; 0.2, 0.3, 0.4; 0.9, 1.1, 1.3; 0.05, 0.07, 0.06)")
add("kFa3Mixed", fa_series(1.3, [0.6, 1.1, 0.4], [0.8, 2.1, 1.6], [0.3, -0.2, 0.25], 140),
    "F_A^(3)(1.3; 0.6, 1.1, 0.4; 0.8, 2.1, 1.6; 0.3, -0.2, 0.25)")
add("kFb2", mp.appellf3(0.4, 0.5, 0.3, 0.6, 1.7, 0.2, 0.15), "F_B^(2)(0.4, 0.5; 0.3, 0.6; 1.7; 0.2, 0.15)")
add("kFb3", fb_series([0.3, 0.4, 0.5], [0.2, 0.3, 0.25], 2.2, [0.1, 0.08, 0.12], 40),
    "F_B^(3)(0.3, 0.4, 0.5; 0.2, 0.3, 0.25; 2.2; 0.1, 0.08, 0.12)")
add("kFb3Wide", fb_series([0.3, 0.4, 0.5], [0.2, 0.3, 0.25], 2.2, [0.5, -0.6, 0.7], 170),
    "F_B^(3)(0.3, 0.4, 0.5; 0.2, 0.3, 0.25; 2.2; 0.5, -0.6, 0.7)")

# summation identities: Gamma ratios
a, b = mp.mpf(2), [mp.mpf("0.3"), mp.mpf("0.4"), mp.mpf("0.5")]
fa_rhs = mp.gamma(a - sum(b)) * mp.gamma(a) ** (len(b) - 1) / mp.fprod(mp.gamma(a - bk) for bk in b)
add("kSumFaRhs", fa_rhs, "Gamma(a - sum b) Gamma(a)^(n-1) / prod Gamma(a - b_k), a = 2, b = (0.3, 0.4, 0.5)")
add("kSumFbRhs", 1 / fa_rhs, "reciprocal of the above")

# fundamental solution, m = 2, n = 1, alpha = 0.25, a = 1
alpha1 = mp.mpf("0.25")
alpha0 = alpha1
gamma0 = mp.mpf(2) ** (2 * alpha0 - 2) * mp.gamma(alpha0) / mp.pi * mp.gamma(alpha1) / mp.gamma(2 * alpha1)
x = [mp.mpf("0.6"), mp.mpf("0.3")]
xi = [mp.mpf("0.2"), mp.mpf("-0.4")]
r2 = (x[0] - xi[0]) ** 2 + (x[1] - xi[1]) ** 2
q0 = gamma0 * r2 ** (-alpha0) * mp.hyp2f1(alpha0, alpha1, 2 * alpha1, -4 * x[0] * xi[0] / r2)
add("kGamma0_m2_a025", gamma0, "gamma0 for m = 2, alpha = (0.25)")
add("kQ0_m2", q0, "q0 at x = (0.6, 0.3), xi = (0.2, -0.4), m = 2, alpha = (0.25)")
R0sq = xi[0] ** 2 + xi[1] ** 2
image = [v / R0sq for v in xi]
r2i = (x[0] - image[0]) ** 2 + (x[1] - image[1]) ** 2
q0i = gamma0 * r2i ** (-alpha0) * mp.hyp2f1(alpha0, alpha1, 2 * alpha1, -4 * x[0] * image[0] / r2i)
add("kG0_m2", q0 - (1 / R0sq) ** alpha0 * q0i, "G0 at the same points, radius 1")

for d in (4, 5):
    add(f"kSphere{d}", 2 * mp.pi ** (mp.mpf(d) / 2) / mp.gamma(mp.mpf(d) / 2), f"surface area of the unit sphere in R^{d}")

out = ["#pragma once", "", "// Generated by tools/gen_oracles.py (mpmath, 40 digits). Do not edit.", "",
       "namespace oracle {", ""]
for name, value, note in entries:
    out.append(f"// {note}")
    out.append(f"inline constexpr double {name} = {value};")
out += ["", "}  // namespace oracle", ""]
pathlib.Path("tests/oracle_values.hpp").write_text("\n".join(out))
print(f"wrote {len(entries)} values")
