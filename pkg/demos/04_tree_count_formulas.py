"""The tree-count recurrence and its closed form as alternating index-set sums."""

from sandpilegroups import (
    enumerate_C,
    eval_beta_prime,
    eval_gamma,
    f_recursive,
    g_closed_form,
    split_AB,
)
from sandpilegroups.formulas import closed_form_terms

# Index sets of size 3 in 1..7 with odd gaps and an even distance from the top.
A, B = split_AB(3, 7)
print("C(3,7):", enumerate_C(3, 7))
print("  without 7:", A)
print("  with 7:   ", B)


def show(sets):
    return " + ".join("".join(f"x{t}" for t in s) for s in sets)


print("\ngamma_{3,7} =", show(enumerate_C(3, 7)))

# The closed form for n = 6 alternates over every second gamma.
print("\nG_6 = " + " ".join(f"{'+' if s > 0 else '-'} gamma_{{{i},6}}" for s, i in closed_form_terms(6)))

x = [3, 6, 4, 6]
print(f"\nrecurrence F{tuple(x)} = {f_recursive(x)}")
print(f"closed form G{tuple(x)} = {g_closed_form(x)}")

# Both are polynomials, so any integers work, including values below 2.
for x in ([1, 1, 1], [0, 5, -2, 7], [9] * 8):
    print(x, f_recursive(x), g_closed_form(x))

# One step of the gamma recursion: gamma_{i,j} = x_j gamma_{i-1,j-1} + beta'_{i+1,j-1}.
x = [2, 3, 5, 7, 11, 13, 17]
lhs = eval_gamma(3, 7, x)
rhs = x[6] * eval_gamma(2, 6, x[:6]) + eval_beta_prime(4, 6, x[:5])
print(f"\ngamma_{{3,7}} = {lhs}, recursion gives {rhs}")

# Linear-time evaluation handles long chains.
print("\ndigits in F(5,...,5) with 1000 arguments:", len(str(f_recursive([5] * 1000))))
