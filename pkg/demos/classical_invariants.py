#!/usr/bin/env python3
"""Classical invariants across a small census.

The Alexander polynomial is computed twice (Seifert matrix determinant vs
Fox calculus) and the two results are compared on every knot; the
signature comes from an exact integer Sturm count on the symmetrized
Seifert form.
"""

from twobridge import (alexander, alexander_fox, delta2_at_1, determinant,
                       enumerate_knots, even_expansion, parse_knot,
                       seifert_matrix, signature, tau)

print(f"{'knot':<10} {'det':>4} {'sigma':>6} {'tau':>4} {'d2(1)':>6}  alexander")
for k in enumerate_knots(25):
    poly = alexander(k)
    assert poly == alexander_fox(k), f"routes disagree on {k}"
    print(f"{str(k):<10} {determinant(k):>4} {signature(k):>6} "
          f"{str(tau(k)):>4} {delta2_at_1(k):>6}  {poly}")

print()
k9_27 = parse_knot("9_27")
ev = even_expansion(k9_27)
print(f"Seifert matrix of {k9_27} from the even expansion {list(ev.entries)}:")
for row in seifert_matrix(ev):
    print("   ", row)
print("alexander:", alexander(k9_27))
print("delta''(1) =", delta2_at_1(k9_27), " determinant =", determinant(k9_27),
      " signature =", signature(k9_27), " tau =", tau(k9_27))
