#!/usr/bin/env python3
"""Walk through the surface enumeration on a few small knots.

Every essential spanning surface of a two-bridge knot comes from a
continued fraction expansion of one of its two fraction representatives.
This script prints the expansions, the derived surface data, and the
boundary-slope bookkeeping for the trefoil, the figure-eight and the
knot S(49,19).
"""

from twobridge import (boundary_count, cf_value, enumerate_expansions,
                       even_expansion, knot_fractions, parse_knot,
                       spanning_surfaces)

for name in ["S(3,1)", "S(5,2)", "9_27"]:
    k = parse_knot(name)
    f_pos, f_neg = knot_fractions(k)
    print(f"{name} = {k}:  fraction classes {f_pos} and {f_neg}")
    print(f"  all-even expansion {list(even_expansion(k).entries)} "
          f"(the Seifert surface, boundary slope 0)")

    for e in enumerate_expansions(k):
        print(f"  {str(e):>18} -> value {e.value},  "
              f"boundary circles {boundary_count(e.entries)}")

    print("  spanning surfaces, sorted by (genus, slope):")
    for d in spanning_surfaces(k):
        kind = "orientable" if d.orientable else "non-orientable"
        print(f"    genus {d.genus}  slope {str(d.boundary_slope):>5}  "
              f"chi {d.euler:>3}  {kind}")
    print()

# The minus convention pins the whole dictionary: [2,2] evaluates to 2/3
# (a trefoil fraction) and [2,-2] to 2/5 (a figure-eight fraction).
print("convention check: value([2,2]) =", cf_value([2, 2]),
      " value([2,-2]) =", cf_value([2, -2]))
