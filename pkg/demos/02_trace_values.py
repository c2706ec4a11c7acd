"""Values of the extreme unipotent traces on conjugacy classes.

A trace of the infinite-matrix tower restricts to each finite group as a
non-negative combination of irreducible characters.  The extreme traces
are parameterized by two sequences (alpha, beta); their values on any
conjugacy class factor over the class's primary blocks, and each block
value is a specialized modified Hall-Littlewood function.
"""

from fractions import Fraction

from fqtraces import (
    Specialization,
    UNIT,
    family,
    trace_coefficients,
    unipotent_trace_value,
)

HALF = Fraction(1, 2)

trivial = Specialization.finite((1,), (), 1)
steinberg = Specialization.finite((), (1,), 1)
generic = Specialization.finite((HALF,), (Fraction(1, 4),), 1)

print("== the two degenerate corners ==")
for n in range(1, 5):
    identity = family((UNIT, 1, (1,) * n))
    print(
        f"  n={n}: trivial trace at identity = "
        f"{unipotent_trace_value(trivial, identity, 2)},  "
        f"one-column trace = {unipotent_trace_value(steinberg, identity, 2)}"
    )

print()
print("== multiplicativity over coprime blocks (q = 2) ==")
elliptic = family(("quadratic", 2, (1,)))
mixed = family((UNIT, 1, (2,)), ("quadratic", 2, (1,)))
unip = family((UNIT, 1, (2,)))
for sp, name in ((steinberg, "one-column"), (generic, "generic")):
    a = unipotent_trace_value(sp, unip, 2)
    b = unipotent_trace_value(sp, elliptic, 2)
    ab = unipotent_trace_value(sp, mixed, 2)
    print(f"  {name}: {a} * {b} = {ab}")
    assert a * b == ab

print()
print("== restriction coefficients over unipotent characters, n = 3 ==")
for sp, name in ((trivial, "alpha=(1)"), (steinberg, "beta=(1)"), (generic, "mixed")):
    coeffs = trace_coefficients(sp, 3)
    pretty = ", ".join(f"{lam}: {c}" for lam, c in coeffs.items())
    print(f"  {name:12s} -> {pretty}")
    assert all(c >= 0 for c in coeffs.values())
