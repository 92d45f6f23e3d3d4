#!/usr/bin/env python3
"""End-to-end run of the obstruction on the pair K(10/3) vs K(-10/3)
for the knot 9_27 = S(49,19), with certificate verification.

Both surgered manifolds contain closed non-orientable surfaces (both
numerators are even), so the parity test alone says nothing.  The
classical filters say nothing either: delta''(1) = 0 disables the
Boyer-Lines criterion and the pair satisfies all three Ni-Wu necessary
conditions.  The minimal genus of a closed non-orientable surface tells
the two manifolds apart anyway:

  * K(-10/3) contains one of genus 5: the genus-4 spanning surface with
    boundary slope -4 sits at distance |(-4)*3 - (-10)*1| = 2 from the
    surgery slope, so a single Moebius band closes it up.
  * K(10/3) contains none of genus <= 5: genus-5 candidates would need
    boundary slope exactly 10/3 (impossible, slopes are even integers)
    and genus-4 candidates would need distance 2 from 10/3, while their
    slopes {-8, -4, 0} sit at distances {34, 22, 10}.
"""

import json

from twobridge import (boyer_lines_obstructs, check_payload, distinguish,
                       niwu_filter, parse_knot, parse_slope)
from twobridge.cli import _obstruct_payload

k = parse_knot("9_27")
r1, r2 = parse_slope("10/3"), parse_slope("-10/3")

print("Ni-Wu filter:", niwu_filter(k, r1, r2))
print("Boyer-Lines obstructs:", boyer_lines_obstructs(k))
print()

verdict = distinguish(k, r1, r2)
print("verdict:", verdict.kind)
print("reason: ", verdict.reason)
ub = verdict.upper
print(f"upper bound: base {list(ub.base.expansion.entries)} slope "
      f"{ub.base.boundary_slope} genus {ub.base.genus}, attachments "
      f"{ub.attachments} -> genus {ub.resulting_genus}")
print(f"exclusion: {len(verdict.exclusion.rulings)} candidates ruled out "
      f"through genus {verdict.exclusion.excluded_genus_max}")
for r in verdict.exclusion.rulings:
    print(f"   genus {r.surface.genus} slope {str(r.surface.boundary_slope):>5}: {r.why}")

# The emitted JSON payload carries every arithmetic fact; the independent
# checker re-derives all of them from the payload alone.
payload = json.loads(json.dumps(_obstruct_payload(k, r1, r2)))
problems = check_payload(payload)
print()
print("independent checker problems:", problems or "none")
assert problems == []
