"""Essential spanning surfaces of two-bridge knots via continued fractions.

Every essential surface with boundary in the exterior of S(p, q) is carried
by a linear chain of plumbed twisted bands encoded by a continued fraction
expansion in the minus convention,

    value([a1, ..., an]) = 1 / (a1 - 1/(a2 - ... - 1/an)),   all |ai| >= 2,

so that [2, 2] -> 2/3 and [2, -2] -> 2/5.  For the knot S(p, q) (canonical
representative) the relevant targets are the two proper fractions q/p and
(q - p)/p; exactly one of them admits an all-even expansion, which encodes
the Seifert surface and serves as the origin for boundary slopes.

The surface for [a1, ..., an] is a chain of n bands, band i carrying ai
half-twists, consecutive bands plumbed along a square.  Derived data:

  * euler characteristic: 1 - n,
  * orientable iff every ai is even,
  * boundary slope: 2 * [(n+ - n-) - (e+ - e-)], counting positive/negative
    entries of the expansion and of the all-even expansion,
  * number of boundary circles: an explicit walk along the band edges
    (see boundary_count); surfaces with one boundary circle are the
    spanning surfaces, two-boundary ones are kept only as diagnostics.

Genus bookkeeping follows the crosscap convention for non-orientable
surfaces: chi = 2 - genus - boundary_count, while orientable surfaces use
chi = 2 - 2*genus - boundary_count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .knots import TwoBridgeKnot, canonical
from .slopes import Slope, make_slope

__all__ = [
    "DegenerateExpansionError",
    "CFExpansion",
    "SurfaceDescriptor",
    "cf_value",
    "expansion",
    "knot_fractions",
    "enumerate_expansions",
    "even_expansion",
    "boundary_slope",
    "boundary_count",
    "build_descriptor",
    "surface_table",
    "spanning_surfaces",
    "descriptor_to_json",
]


class DegenerateExpansionError(ValueError):
    """A continued fraction hit a zero intermediate denominator."""


def cf_value(entries) -> Fraction:
    """Evaluate a minus-convention continued fraction exactly.

    [a1, ..., an] |-> 1/(a1 - 1/(a2 - ... - 1/an)).  The |ai| >= 2
    restriction is not enforced here; enumeration enforces it.
    """
    if not entries:
        raise ValueError("empty continued fraction")
    val = Fraction(0)
    for a in reversed(list(entries)):
        d = a - val
        if d == 0:
            raise DegenerateExpansionError(f"zero intermediate denominator in {list(entries)}")
        val = 1 / Fraction(d)
    return val


@dataclass(frozen=True, order=True)
class CFExpansion:
    """A continued fraction expansion together with its exact value."""

    entries: tuple
    value: Fraction

    def __len__(self):
        return len(self.entries)

    def __str__(self):
        return "[" + ",".join(str(a) for a in self.entries) + "]"


def expansion(entries) -> CFExpansion:
    ent = tuple(int(a) for a in entries)
    return CFExpansion(ent, cf_value(ent))


def knot_fractions(k: TwoBridgeKnot) -> tuple[Fraction, Fraction]:
    """The two proper fractions of the canonical representative.

    q/p in (0, 1) and (q - p)/p in (-1, 0); both name the same knot and
    both get expanded, giving the complete surface list.
    """
    k = canonical(k)
    return Fraction(k.q, k.p), Fraction(k.q - k.p, k.p)


def _entry_window(value: Fraction):
    """The integers a with |a - 1/value| < 1 and |a| >= 2.

    Yields (a, rest) with rest = a - 1/value, so value = 1/(a - rest);
    rest == 0 means the expansion terminates at a.  There are at most two
    candidates (consecutive integers), which is what keeps the search tiny.
    """
    w = 1 / value
    lo = math.floor(w)
    for a in (lo, lo + 1):
        if abs(a) < 2:
            continue
        rest = a - w
        if abs(rest) < 1:
            yield a, rest


def _expansions_of(value: Fraction) -> list[tuple]:
    found = []

    def dfs(v, prefix):
        for a, rest in _entry_window(v):
            if rest == 0:
                found.append(tuple(prefix + [a]))
            else:
                # |num(rest)| < den(rest) <= den(v) keeps this finite.
                dfs(rest, prefix + [a])

    dfs(value, [])
    return found


def enumerate_expansions(k: TwoBridgeKnot) -> tuple[CFExpansion, ...]:
    """All |ai| >= 2 expansions of both fraction representatives of k.

    Deterministically ordered by (length, entries).
    """
    out = []
    for frac in knot_fractions(k):
        out.extend(CFExpansion(e, frac) for e in _expansions_of(frac))
    out.sort(key=lambda e: (len(e.entries), e.entries))
    return tuple(out)


@lru_cache(maxsize=None)
def even_expansion(k: TwoBridgeKnot) -> CFExpansion:
    """The unique all-even expansion among the knot's two fractions.

    Exactly one of q/p, (q-p)/p has an even numerator (p is odd) and only
    that one can carry an all-even expansion; the walk below lands it
    deterministically.  This expansion encodes the Seifert surface and the
    Seifert matrix.
    """
    fracs = knot_fractions(k)
    evens = [f for f in fracs if f.numerator % 2 == 0]
    if len(evens) != 1:
        raise RuntimeError(f"{k}: expected exactly one even-numerator fraction, got {fracs}")
    target = evens[0]
    entries = []
    v = target
    while True:
        cands = [(a, rest) for a, rest in _entry_window(v) if a % 2 == 0]
        if len(cands) != 1:
            raise RuntimeError(f"{k}: even-entry walk broke down at {v}")
        a, rest = cands[0]
        entries.append(a)
        if rest == 0:
            break
        v = rest
    exp = CFExpansion(tuple(entries), target)
    if len(entries) % 2 != 0:
        raise RuntimeError(f"{k}: all-even expansion has odd length {entries}")
    return exp


def _sign_counts(entries):
    plus = sum(1 for a in entries if a > 0)
    return plus, len(entries) - plus


def boundary_slope(e: CFExpansion, even: CFExpansion) -> Slope:
    """Boundary slope of the surface for e, relative to the Seifert origin.

    2 * [(n+ - n-) - (e+ - e-)]: each sign agreement/disagreement with the
    all-even expansion contributes a full twist.  Always an even integer
    slope.
    """
    n_plus, n_minus = _sign_counts(e.entries)
    e_plus, e_minus = _sign_counts(even.entries)
    return make_slope(2 * ((n_plus - n_minus) - (e_plus - e_minus)), 1)


def boundary_count(entries) -> int:
    """Number of boundary circles of the chain-of-bands surface.

    The chain is modelled as a ribbon structure: plumbing square i (between
    bands i and i+1) is a vertex where band i passes horizontally (west and
    east flaps) and band i+1 vertically (south and north flaps).  Band
    edges run between flaps; crossing a band's twist region swaps the two
    edge sides iff its entry is odd.  At each square the four reflex
    corners join flap edge-ends in the pattern W.r-S.l, S.r-E.l, E.r-N.l,
    N.r-W.l.  Walking the resulting involutions and counting closed walks
    counts the boundary circles.  Only entry parities matter.
    """
    entries = list(entries)
    n = len(entries)
    if n == 0:
        raise ValueError("empty expansion")
    if n == 1:
        return 1 if entries[0] % 2 else 2
    twists = [abs(a) % 2 for a in entries]

    # Edges: (flap_a, flap_b, twisted); flaps are (square, letter).
    edges = [((0, "W"), (0, "E"), twists[0])]
    for i in range(1, n - 1):
        edges.append(((i - 1, "N"), (i, "W"), twists[i]))
        edges.append(((i, "E"), (i - 1, "S"), 0))
    edges.append(((n - 2, "N"), (n - 2, "S"), twists[n - 1]))

    side = {}
    for fa, fb, twisted in edges:
        if twisted:
            pairs = ((fa + ("r",), fb + ("r",)), (fa + ("l",), fb + ("l",)))
        else:
            pairs = ((fa + ("r",), fb + ("l",)), (fa + ("l",), fb + ("r",)))
        for x, y in pairs:
            side[x] = y
            side[y] = x

    corner = {}
    for s in range(n - 1):
        for (fx, sx), (fy, sy) in ((("W", "r"), ("S", "l")), (("S", "r"), ("E", "l")),
                                   (("E", "r"), ("N", "l")), (("N", "r"), ("W", "l"))):
            x, y = (s, fx, sx), (s, fy, sy)
            corner[x] = y
            corner[y] = x

    unseen = set(side)
    circles = 0
    while unseen:
        circles += 1
        start = next(iter(unseen))
        port = start
        while True:
            mate = side[port]
            unseen.discard(port)
            unseen.discard(mate)
            port = corner[mate]
            if port == start:
                break
    return circles


@dataclass(frozen=True)
class SurfaceDescriptor:
    """One carried surface: expansion plus all derived invariants."""

    expansion: CFExpansion
    boundary_slope: Slope
    euler: int
    orientable: bool
    boundary_count: int
    genus: int


def build_descriptor(e: CFExpansion, even: CFExpansion) -> SurfaceDescriptor:
    n = len(e.entries)
    chi = 1 - n
    orientable = all(a % 2 == 0 for a in e.entries)
    b = boundary_count(e.entries)
    slope = boundary_slope(e, even)
    if slope.num % 2 != 0:
        raise RuntimeError(f"odd boundary slope {slope} for {e}")
    if orientable:
        g2 = 2 - chi - b
        if g2 % 2 != 0:
            raise RuntimeError(f"non-integral orientable genus for {e}")
        genus = g2 // 2
    else:
        genus = 2 - chi - b
    if genus < 0:
        raise RuntimeError(f"negative genus for {e}")
    return SurfaceDescriptor(e, slope, chi, orientable, b, genus)


@lru_cache(maxsize=None)
def surface_table(k: TwoBridgeKnot):
    """(spanning, two_boundary) descriptor lists for k.

    Spanning surfaces are the single-boundary ones, sorted by
    (genus, slope, entries); two-boundary descriptors are diagnostics only
    (multi-sheeted carried surfaces are out of scope).
    """
    even = even_expansion(k)
    descs = [build_descriptor(e, even) for e in enumerate_expansions(k)]
    key = lambda d: (d.genus, d.boundary_slope.num, d.expansion.entries)
    spanning = sorted((d for d in descs if d.boundary_count == 1), key=key)
    extra = sorted((d for d in descs if d.boundary_count == 2), key=key)
    return tuple(spanning), tuple(extra)


def spanning_surfaces(k: TwoBridgeKnot) -> tuple[SurfaceDescriptor, ...]:
    """All essential spanning surfaces (one boundary circle), fully populated."""
    return surface_table(k)[0]


def descriptor_to_json(d: SurfaceDescriptor) -> dict:
    return {
        "expansion": list(d.expansion.entries),
        "slope": str(d.boundary_slope),
        "chi": d.euler,
        "orientable": d.orientable,
        "boundary_components": d.boundary_count,
        "genus": d.genus,
    }
