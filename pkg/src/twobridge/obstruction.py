"""Distinguishing surgered manifolds through closed non-orientable surfaces.

For a surgery slope with even numerator the surgered manifold contains a
closed non-orientable surface; the minimal genus of such a surface is a
homeomorphism invariant.  Two moves connect spanning surfaces of the knot
to closed surfaces in the surgered manifold:

  * cap off: a spanning surface whose boundary slope equals the surgery
    slope closes up with a disk (genus unchanged),
  * Moebius attachment: a spanning surface at distance exactly 2 from the
    surgery slope closes up after one Moebius band (genus + 1).

upper_bound_genus builds the cheapest such closed surface (the existence
certificate); exclusion_bound shows no closed non-orientable surface of
genus <= G exists by ruling out, for every candidate spanning surface, both
the disk case (slope would have to match exactly) and the Moebius case
(distance would have to be exactly 2).  distinguish combines the two
directions into a verdict.  Only single Moebius attachments are used, and
the exclusion conservatively refuses to certify past configurations the
case analysis does not cover (two-boundary candidates in range, orientable
candidates at distance 2).
"""

from __future__ import annotations

from dataclasses import dataclass

from .knots import TwoBridgeKnot
from .slopes import Slope, distance, has_even_numerator, is_meridian
from .surfaces import SurfaceDescriptor, descriptor_to_json, surface_table

__all__ = [
    "UpperBoundCertificate",
    "CandidateRuling",
    "ExclusionCertificate",
    "ExclusionFailure",
    "ParityCertificate",
    "Verdict",
    "admits_closed_nonorientable",
    "upper_bound_genus",
    "exclusion_bound",
    "distinguish",
]


def admits_closed_nonorientable(s: Slope) -> bool:
    """Whether K(s) contains a closed non-orientable surface (even numerator)."""
    if is_meridian(s):
        raise ValueError("meridian surgery returns the original manifold")
    return has_even_numerator(s)


@dataclass(frozen=True)
class UpperBoundCertificate:
    """A closed non-orientable surface of the stated genus exists in K(target)."""

    target: Slope
    base: SurfaceDescriptor
    attachments: int        # 0 = disk cap, 1 = one Moebius band
    resulting_genus: int
    distance: int           # distance(base slope, target), 0 or 2

    def to_json(self):
        return {
            "target_slope": str(self.target),
            "base_surface": descriptor_to_json(self.base),
            "distance": self.distance,
            "attachments": self.attachments,
            "resulting_genus": self.resulting_genus,
        }


@dataclass(frozen=True)
class CandidateRuling:
    """Why one candidate spanning surface produces no closed surface <= G."""

    surface: SurfaceDescriptor
    case: str               # "disk", "moebius" or "disk+moebius"
    why: str
    distance_to_target: int
    slope_equals_target: bool

    def to_json(self):
        return {
            "surface": descriptor_to_json(self.surface),
            "case": self.case,
            "why": self.why,
            "distance_to_target": self.distance_to_target,
            "slope_equals_target": self.slope_equals_target,
        }


@dataclass(frozen=True)
class ExclusionCertificate:
    """K(target) contains no closed non-orientable surface of genus <= G."""

    target: Slope
    excluded_genus_max: int
    rulings: tuple
    notes: tuple

    def to_json(self):
        return {
            "target_slope": str(self.target),
            "excluded_genus_max": self.excluded_genus_max,
            "rulings": [r.to_json() for r in self.rulings],
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class ExclusionFailure:
    """The exclusion could not rule out every candidate."""

    target: Slope
    genus_bound: int
    reason: str
    blocking: SurfaceDescriptor | None

    def to_json(self):
        return {
            "target_slope": str(self.target),
            "genus_bound": self.genus_bound,
            "reason": self.reason,
            "blocking_surface": descriptor_to_json(self.blocking) if self.blocking else None,
        }


@dataclass(frozen=True)
class ParityCertificate:
    """Numerator parities differ: only one manifold contains a closed
    non-orientable surface at all."""

    even_slope: Slope
    odd_slope: Slope

    def to_json(self):
        return {"even_slope": str(self.even_slope), "odd_slope": str(self.odd_slope)}


@dataclass(frozen=True)
class Verdict:
    distinguished: bool
    reason: str
    contains: Slope | None = None
    excludes: Slope | None = None
    upper: UpperBoundCertificate | None = None
    exclusion: ExclusionCertificate | None = None
    parity: ParityCertificate | None = None
    attempts: tuple = ()

    @property
    def kind(self):
        return "distinguished" if self.distinguished else "inconclusive"

    def to_json(self):
        return {
            "verdict": self.kind,
            "reason": self.reason,
            "contains": str(self.contains) if self.contains else None,
            "excludes": str(self.excludes) if self.excludes else None,
            "upper_bound": self.upper.to_json() if self.upper else None,
            "exclusion": self.exclusion.to_json() if self.exclusion else None,
            "parity": self.parity.to_json() if self.parity else None,
            "attempts": list(self.attempts),
        }


def upper_bound_genus(k: TwoBridgeKnot, s: Slope) -> UpperBoundCertificate | None:
    """Cheapest closed non-orientable surface in K(s) from a spanning surface.

    Scans the non-orientable spanning surfaces at distance 0 or 2 from s
    and minimizes genus + attachments.  Returns None when no construction
    applies (a value, not an error).
    """
    if is_meridian(s) or not has_even_numerator(s):
        raise ValueError(f"slope {s} is not an admissible surgery target here")
    best = None
    for f in surface_table(k)[0]:
        if f.orientable:
            continue
        d = distance(f.boundary_slope, s)
        if d in (0, 2):
            key = (f.genus + d // 2, f.genus, f.boundary_slope.num)
            if best is None or key < best[0]:
                best = (key, f, d)
    if best is None:
        return None
    _, f, d = best
    return UpperBoundCertificate(s, f, d // 2, f.genus + d // 2, d)


def exclusion_bound(k: TwoBridgeKnot, s: Slope, genus_max: int):
    """Rule out every closed non-orientable surface of genus <= genus_max in K(s).

    For each candidate non-orientable spanning surface F of genus g:
      * disk case (g <= genus_max): the closed surface would force
        slope(F) = s, impossible whenever slopes differ (always, for
        non-integral s);
      * Moebius case (g <= genus_max - 1): would force
        distance(slope(F), s) = 2.
    Conservative guards return a failure instead of a certificate whenever
    a two-boundary candidate could close up into the genus range (annulus
    pieces keep chi, so its closed genus is 2 - chi) or an orientable
    spanning surface of genus <= genus_max - 1 sits at distance 2.
    """
    if is_meridian(s) or not has_even_numerator(s):
        raise ValueError(f"slope {s} is not an admissible surgery target here")
    if genus_max < 1:
        raise ValueError("genus bound must be at least 1")
    spanning, extra = surface_table(k)

    for f in extra:
        closed_genus = 2 - f.euler
        if closed_genus <= genus_max or (f.boundary_slope == s and f.genus <= genus_max):
            return ExclusionFailure(s, genus_max,
                                    "inconclusive: multi-boundary candidate in range",
                                    f)
    for f in spanning:
        if f.orientable and f.genus <= genus_max - 1 and distance(f.boundary_slope, s) == 2:
            return ExclusionFailure(s, genus_max,
                                    "inconclusive: orientable candidate at distance 2 "
                                    "is outside the case analysis",
                                    f)

    notes = []
    if s.den != 1:
        notes.append(f"target slope {s} is non-integral; no spanning surface has a "
                     "non-integral boundary slope, so every disk case is vacuous")
    rulings = []
    for f in spanning:
        if f.orientable or f.genus > genus_max:
            continue
        d = distance(f.boundary_slope, s)
        eq = f.boundary_slope == s
        cases = ["disk"]
        why = [f"slope {f.boundary_slope} != {s}"]
        if eq:
            return ExclusionFailure(s, genus_max,
                                    "disk case not excluded: candidate has the target slope",
                                    f)
        if f.genus <= genus_max - 1:
            if d == 2:
                return ExclusionFailure(s, genus_max,
                                        "Moebius case not excluded: candidate at distance 2",
                                        f)
            cases.append("moebius")
            why.append(f"distance {d} != 2")
        rulings.append(CandidateRuling(f, "+".join(cases), "; ".join(why), d, eq))
    return ExclusionCertificate(s, genus_max, tuple(rulings), tuple(notes))


def distinguish(k: TwoBridgeKnot, r1: Slope, r2: Slope) -> Verdict:
    """Decide whether K(r1) and K(r2) are told apart by closed
    non-orientable surfaces of bounded genus."""
    if r1 == r2:
        raise ValueError("slopes must be distinct")
    if is_meridian(r1) or is_meridian(r2):
        raise ValueError("meridian surgery is trivial and excluded")

    even1, even2 = has_even_numerator(r1), has_even_numerator(r2)
    if even1 != even2:
        ev, od = (r1, r2) if even1 else (r2, r1)
        return Verdict(
            True,
            f"K({ev}) contains a closed non-orientable surface while K({od}) "
            "contains none (odd numerator gives a Z/2 homology sphere)",
            contains=ev, excludes=od, parity=ParityCertificate(ev, od))
    if not even1:
        return Verdict(False, "method inapplicable: both numerators are odd, "
                              "neither surgered manifold contains a closed "
                              "non-orientable surface")

    attempts = []
    for ra, rb in ((r1, r2), (r2, r1)):
        ub = upper_bound_genus(k, ra)
        if ub is None:
            attempts.append(f"K({ra}): no cap-off or Moebius-attachment construction found")
            continue
        exc = exclusion_bound(k, rb, ub.resulting_genus)
        if isinstance(exc, ExclusionCertificate):
            return Verdict(
                True,
                f"K({ra}) contains a closed non-orientable surface of genus "
                f"{ub.resulting_genus}; K({rb}) contains none of genus <= "
                f"{exc.excluded_genus_max}",
                contains=ra, excludes=rb, upper=ub, exclusion=exc,
                attempts=tuple(attempts))
        attempts.append(f"K({rb}) through genus {ub.resulting_genus}: {exc.reason} "
                        f"(blocked by {exc.blocking.boundary_slope if exc.blocking else 'n/a'})")
    return Verdict(False, "inconclusive: " + "; ".join(attempts), attempts=tuple(attempts))
