"""Independent re-verification of emitted obstruction payloads.

This module deliberately re-derives every arithmetic fact from the JSON
payload alone: slopes are re-parsed from strings, distances and genus
bookkeeping are recomputed inline, and candidate coverage is compared
against the surface lists embedded in the payload.  Nothing here imports
the slope/surface/obstruction machinery, so a bug there cannot silently
vouch for itself.
"""

from __future__ import annotations


def _slope(text):
    num, den = text.split("/")
    num, den = int(num), int(den)
    if den < 0:
        raise ValueError(f"denormalized slope {text}")
    return num, den


def _dist(a, b):
    return abs(a[0] * b[1] - a[1] * b[0])


def _check_descriptor(d, problems, where):
    ent = d["expansion"]
    n = len(ent)
    if n < 1 or any(abs(a) < 2 for a in ent):
        problems.append(f"{where}: bad expansion {ent}")
        return
    if d["chi"] != 1 - n:
        problems.append(f"{where}: chi {d['chi']} != 1 - {n}")
    orientable = all(a % 2 == 0 for a in ent)
    if d["orientable"] != orientable:
        problems.append(f"{where}: orientability flag disagrees with entry parities")
    num, den = _slope(d["slope"])
    if den != 1 or num % 2 != 0:
        problems.append(f"{where}: boundary slope {d['slope']} is not an even integer")
    b = d["boundary_components"]
    if b not in (1, 2):
        problems.append(f"{where}: boundary_components {b}")
    expected_chi = 2 - 2 * d["genus"] - b if orientable else 2 - d["genus"] - b
    if d["chi"] != expected_chi:
        problems.append(f"{where}: genus {d['genus']} inconsistent with chi and b")


def _surface_key(d):
    return tuple(d["expansion"])


def check_payload(payload) -> list[str]:
    """Verify an obstruction payload; returns a list of problems (empty = ok)."""
    problems = []
    surfaces = payload.get("surfaces", {})
    spanning = surfaces.get("spanning", [])
    extra = surfaces.get("two_boundary", [])
    for i, d in enumerate(spanning):
        _check_descriptor(d, problems, f"spanning[{i}]")
        if d["boundary_components"] != 1:
            problems.append(f"spanning[{i}]: not single-boundary")
    for i, d in enumerate(extra):
        _check_descriptor(d, problems, f"two_boundary[{i}]")
        if d["boundary_components"] != 2:
            problems.append(f"two_boundary[{i}]: not two-boundary")

    verdict = payload.get("verdict")
    if verdict is None:
        problems.append("payload has no verdict")
        return problems

    kind = verdict.get("verdict")
    if kind not in ("distinguished", "inconclusive"):
        problems.append(f"unknown verdict kind {kind!r}")
        return problems

    if kind == "inconclusive":
        if verdict.get("upper_bound") and verdict.get("exclusion"):
            problems.append("inconclusive verdict carries a full certificate pair")
        return problems

    parity = verdict.get("parity")
    if parity is not None:
        ev, od = _slope(parity["even_slope"]), _slope(parity["odd_slope"])
        if ev[0] % 2 != 0:
            problems.append(f"parity certificate: {parity['even_slope']} has odd numerator")
        if od[0] % 2 == 0:
            problems.append(f"parity certificate: {parity['odd_slope']} has even numerator")
        return problems

    upper = verdict.get("upper_bound")
    exclusion = verdict.get("exclusion")
    if upper is None or exclusion is None:
        problems.append("distinguished verdict lacks certificates")
        return problems

    # Upper bound: base surface must be a real spanning surface and the
    # genus/distance arithmetic must hold.
    target = _slope(upper["target_slope"])
    if target[0] % 2 != 0 or target[1] == 0:
        problems.append(f"upper bound target {upper['target_slope']} inadmissible")
    base = upper["base_surface"]
    span_by_key = {_surface_key(d): d for d in spanning}
    if span_by_key.get(_surface_key(base)) != base:
        problems.append("upper bound base surface is not in the spanning list")
    if base["orientable"] or base["boundary_components"] != 1:
        problems.append("upper bound base surface must be non-orientable and spanning")
    d = _dist(_slope(base["slope"]), target)
    if d != upper["distance"] or d not in (0, 2):
        problems.append(f"upper bound distance {upper['distance']} wrong (recomputed {d})")
    if upper["attachments"] != d // 2:
        problems.append("upper bound attachments != distance/2")
    if upper["resulting_genus"] != base["genus"] + upper["attachments"]:
        problems.append("upper bound resulting genus arithmetic wrong")

    # Exclusion: bound must cover the construction, rulings must cover all
    # non-orientable spanning candidates in range, each with true arithmetic,
    # and the conservative guards must hold on the embedded lists.
    ex_target = _slope(exclusion["target_slope"])
    G = exclusion["excluded_genus_max"]
    if ex_target[0] % 2 != 0 or ex_target[1] == 0:
        problems.append(f"exclusion target {exclusion['target_slope']} inadmissible")
    if G < upper["resulting_genus"]:
        problems.append("exclusion bound below the constructed genus")
    if verdict.get("contains") != upper["target_slope"] or \
       verdict.get("excludes") != exclusion["target_slope"]:
        problems.append("verdict slopes disagree with certificate targets")

    expected = {_surface_key(d): d for d in spanning
                if not d["orientable"] and d["genus"] <= G}
    ruled = {}
    for i, r in enumerate(exclusion["rulings"]):
        key = _surface_key(r["surface"])
        if key in ruled:
            problems.append(f"ruling[{i}]: candidate {key} appears twice")
        if span_by_key.get(key) != r["surface"]:
            problems.append(f"ruling[{i}]: surface does not match the spanning list")
        ruled[key] = r
    if set(ruled) != set(expected):
        problems.append("rulings do not cover exactly the non-orientable spanning "
                        f"candidates of genus <= {G}")
    for key, r in ruled.items():
        s = r["surface"]
        d = _dist(_slope(s["slope"]), ex_target)
        if d != r["distance_to_target"]:
            problems.append(f"ruling {key}: recorded distance {r['distance_to_target']}, "
                            f"recomputed {d}")
        eq = _slope(s["slope"]) == ex_target
        if eq != r["slope_equals_target"] or eq:
            problems.append(f"ruling {key}: disk case not excluded")
        if s["genus"] <= G - 1 and d == 2:
            problems.append(f"ruling {key}: Moebius case not excluded")
    for d in extra:
        if 2 - d["chi"] <= G:
            problems.append("two-boundary candidate could close up within the genus bound")
        if _slope(d["slope"]) == ex_target and d["genus"] <= G:
            problems.append("two-boundary candidate matches the target slope in range")
    for d in spanning:
        if d["orientable"] and d["genus"] <= G - 1 and _dist(_slope(d["slope"]), ex_target) == 2:
            problems.append("orientable candidate at distance 2 inside the genus bound")
    return problems
