#!/usr/bin/env python3
"""Independent sympy computation of the chart-level values frozen into the C++ tests.

Run: python3 tests/oracle/symbolic_oracle.py
Nothing here is imported by the C++ build; the printed numbers are copied into
tests/test_chart.cpp and tests/acceptance.cpp.
"""
import sympy as sp

x, y, z = sp.symbols("x y z")


def order(expr, var):
    num, den = sp.fraction(sp.factor(sp.together(expr)))
    return _ord(sp.expand(num), var) - _ord(sp.expand(den), var)


def _ord(poly, var):
    p = sp.Poly(poly, var)
    return min(m[0] for m in p.monoms())


def restrict(expr, var):
    n = order(expr, var)
    r = sp.factor(sp.together(expr / var**n))
    return n, sp.factor(r.subs(var, 0))


def chain(subs_list, expr):
    for s in subs_list:
        expr = expr.subs(s, simultaneous=True)
    return expr


# Blow-up charts written as simultaneous substitutions.
ex42 = [
    {x: x * z, y: y * z},          # E1: z
    {x: x * y, z: z * y},          # E2: y
    {y: y * x, z: z * x},          # E3: x
]

print("== Example 4.2 chart (E1 z, E2 y, E3 x)")
C1, C2 = x + y + z, x + y
Cp, Cpp = x + z**2, x - z**2
H1, H2 = x**2 + z**2 * y, x**2 * z + y**3
for name, f in [("C1", C1), ("C2", C2), ("C3'", Cp), ("H1", H1), ("H2", H2)]:
    g = chain(ex42, f)
    print(name, [order(g, v) for v in (z, y, x)])
h = Cp / Cpp * C1**2 * C2**4 / (H1 * H2)
g = chain(ex42, h)
print("h orders (E1,E2,E3):", [order(g, v) for v in (z, y, x)])
print("h restricted to E3:", restrict(g, x))

print("== Example 4.5 (adds Z4: x = y + 1 = 0, shear y <- y - 1, chart var y)")
C4 = x * z + y**2
C3 = 2 * x + z**2
f = Cp * C1**2 * C2**4
gg = Cpp * H1 * H2
ex45 = ex42 + [{y: y - 1}, {x: x * y}]
for name, p in [("C4", C4), ("f", f), ("g", gg)]:
    a = chain(ex42, p)
    b = chain(ex45, p)
    print(name, "nu1..3:", [order(a, v) for v in (z, y, x)], "nu4:", order(b, y))
k, l = 5, 13
h = f * C4**k / (gg * C4**k + C3**l)
a = chain(ex42, h)
b = chain(ex45, h)
print("h(k=5,l=13) N1..N4:", [order(a, v) for v in (z, y, x)] + [order(b, y)])
print("  restriction E3:", restrict(a, x))
print("  restriction E4:", restrict(b, y)[0])
h20 = f * C4**k / (gg * C4**k + C3**20)
b = chain(ex45, h20)
a = chain(ex42, h20)
print("h(k=5,l=20) N1..N4:", [order(a, v) for v in (z, y, x)] + [order(b, y)])
print("  restriction E4:", restrict(b, y))

print("== Example 4.4 (conic center, shear x <- x + y^2, chart var z)")
ex44 = [{x: x * z, y: y * z}, {x: x + y**2}, {x: x * z}]
Q = x * z - y**2
L1, L1p, L1pp = x + 2 * y + 3 * z, 2 * x - y + z, x + y - 2 * z
for kk, ll in [(1, 4), (2, 6)]:
    hq = L1p * Q**kk / (L1pp * Q**kk + L1**ll)
    e1 = chain(ex44[:1], hq)
    e2 = chain(ex44, hq)
    r1 = restrict(e1, z)
    r2 = restrict(e2, z)
    print(f"(k,l)=({kk},{ll}) N1={r1[0]} N2={r2[0]}")
    print("   E1 restriction:", r1[1])
    print("   E2 restriction:", r2[1], " depends on fiber x:", r2[1].has(x))
print("Q orders:", order(chain(ex44[:1], Q), z), order(chain(ex44, Q), z))
