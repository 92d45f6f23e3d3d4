"""Two-bridge (rational) knots in Schubert normal form S(p, q).

S(p, q) needs p odd (even p gives a two-component link), 0 < q < p and
gcd(p, q) = 1.  Unoriented equivalence is the classical one:
S(p, q) = S(p, q') iff q' = q or q*q' = 1 (mod p).  The mirror image is
S(p, p - q); mirrors are deliberately NOT identified, since surgery slopes
change sign under mirroring.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# Static name lookup; no general diagram-to-Schubert conversion is attempted.
ROLFSEN_ALIASES = {"9_27": (49, 19)}


@dataclass(frozen=True, order=True)
class TwoBridgeKnot:
    p: int
    q: int

    def __str__(self):
        return f"S({self.p},{self.q})"


def make_knot(p: int, q: int) -> TwoBridgeKnot:
    """Build S(p, q), reducing q mod p into (0, p).

    Rejects even or small p and non-coprime pairs.
    """
    if p < 3 or p % 2 == 0:
        raise ValueError(f"S({p},{q}): p must be an odd integer >= 3")
    q = q % p
    if q == 0 or math.gcd(p, q) != 1:
        raise ValueError(f"S({p},{q}): p and q must be coprime with q != 0 mod p")
    return TwoBridgeKnot(p, q)


def parse_knot(text: str) -> TwoBridgeKnot:
    """Parse "S(p,q)", "p/q", or a table alias such as "9_27"."""
    text = text.strip()
    if text in ROLFSEN_ALIASES:
        return make_knot(*ROLFSEN_ALIASES[text])
    try:
        if text.upper().startswith("S(") and text.endswith(")"):
            a, b = text[2:-1].split(",")
            return make_knot(int(a), int(b))
        if "/" in text:
            a, b = text.split("/")
            return make_knot(int(a), int(b))
    except ValueError as exc:
        raise ValueError(f"cannot parse knot {text!r}") from exc
    raise ValueError(f"cannot parse knot {text!r}: expected S(p,q), p/q or a known alias")


def inverse_rep(k: TwoBridgeKnot) -> TwoBridgeKnot:
    """The representative S(p, q^-1 mod p) of the same knot."""
    return TwoBridgeKnot(k.p, pow(k.q, -1, k.p))


def canonical(k: TwoBridgeKnot) -> TwoBridgeKnot:
    """Canonical representative: the smaller of q and q^-1 mod p."""
    return min(k, inverse_rep(k))


def same_knot(a: TwoBridgeKnot, b: TwoBridgeKnot) -> bool:
    """Unoriented equivalence of Schubert forms."""
    return a.p == b.p and (a.q == b.q or (a.q * b.q) % a.p == 1)


def mirror_knot(k: TwoBridgeKnot) -> TwoBridgeKnot:
    return make_knot(k.p, k.p - k.q)


def is_amphicheiral(k: TwoBridgeKnot) -> bool:
    """True iff the knot equals its own mirror image."""
    return same_knot(k, mirror_knot(k))


def enumerate_knots(p_max: int) -> list[TwoBridgeKnot]:
    """All two-bridge knots with p <= p_max, one canonical representative each.

    Mirror pairs stay separate (chirality matters for surgery); amphicheiral
    knots appear once.  Sorted by (p, q).
    """
    if p_max < 3:
        raise ValueError("p_max must be at least 3")
    knots = []
    for p in range(3, p_max + 1, 2):
        for q in range(1, p):
            if math.gcd(p, q) != 1:
                continue
            if q <= pow(q, -1, p):
                knots.append(TwoBridgeKnot(p, q))
    return knots
