"""Classical obstructions: Alexander polynomial, signature, tau, filters.

Two independent routes compute the Alexander polynomial:

  * alexander(k): det(V - t*V^T) for the Seifert matrix V read off the
    all-even continued fraction expansion [2c1, ..., 2cn]; the matrix is
    tridiagonal so the determinant is a three-term recurrence.
  * alexander_fox(k): Fox calculus on the two-bridge group presentation
    <a, b | a w = w b> with w = b^e1 a^e2 ... a^e(p-1), e_i = (-1)^floor(i*q/p)
    taken for the odd representative of q mod p, abelianized at a, b -> t.

Both land in the canonical normalization: symmetric under t -> 1/t and
value +1 at t = 1.  The signature is computed exactly from the integer
Sturm sequence of the tridiagonal form V + V^T; tau uses the alternating
shortcut tau = -sigma/2 (every two-bridge knot is alternating).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .knots import TwoBridgeKnot, canonical
from .slopes import Slope, is_meridian
from .surfaces import CFExpansion, even_expansion


class LaurentPolynomial:
    """Integer Laurent polynomial in one variable, stored sparsely."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {int(k): int(c) for k, c in (coeffs or {}).items() if c != 0}

    @classmethod
    def term(cls, c, k=0):
        return cls({k: c})

    def __eq__(self, other):
        return isinstance(other, LaurentPolynomial) and self.coeffs == other.coeffs

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return LaurentPolynomial(out)

    def __neg__(self):
        return LaurentPolynomial({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = {}
        for k1, c1 in self.coeffs.items():
            for k2, c2 in other.coeffs.items():
                k = k1 + k2
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentPolynomial(out)

    def shift(self, m):
        """Multiply by t^m."""
        return LaurentPolynomial({k + m: c for k, c in self.coeffs.items()})

    def __call__(self, x):
        """Exact evaluation; x may be an int or Fraction (nonzero)."""
        x = Fraction(x)
        val = sum((c * x ** k for k, c in self.coeffs.items()), Fraction(0))
        return int(val) if val.denominator == 1 else val

    def derivative(self):
        return LaurentPolynomial({k - 1: k * c for k, c in self.coeffs.items() if k != 0})

    def is_symmetric(self):
        return all(self.coeffs.get(-k, 0) == c for k, c in self.coeffs.items())

    def to_json(self):
        return {str(k): c for k, c in sorted(self.coeffs.items(), reverse=True)}

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs, reverse=True):
            c = self.coeffs[k]
            mono = "1" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if k == 0:
                parts.append(f"{c:+d}")
            elif abs(c) == 1:
                parts.append(("+" if c > 0 else "-") + mono)
            else:
                parts.append(f"{c:+d}*{mono}")
        out = " ".join(parts)
        return out[1:] if out.startswith("+") else out

    __repr__ = __str__


def normalize_alexander(poly: LaurentPolynomial) -> LaurentPolynomial:
    """Multiply by +-t^m so the polynomial is symmetric with value 1 at t=1."""
    if not poly.coeffs:
        raise ValueError("zero polynomial cannot be an Alexander polynomial")
    lo, hi = min(poly.coeffs), max(poly.coeffs)
    if (hi - lo) % 2 != 0:
        raise RuntimeError(f"odd exponent span in {poly}")
    out = poly.shift(-(hi + lo) // 2)
    at_one = out(1)
    if at_one == -1:
        out = -out
    elif at_one != 1:
        raise RuntimeError(f"Alexander normalization failed: value {at_one} at t=1")
    if not out.is_symmetric():
        raise RuntimeError(f"normalized polynomial not symmetric: {out}")
    return out


def seifert_matrix(even: CFExpansion | tuple | list) -> list[list[int]]:
    """Seifert matrix of the all-even expansion [2c1, ..., 2cn].

    Chain-plumbing form: V[i][i] = c_i, V[i][i+1] = 1, zero elsewhere.
    """
    entries = even.entries if isinstance(even, CFExpansion) else tuple(even)
    if any(a % 2 for a in entries):
        raise ValueError(f"expansion {list(entries)} has odd entries")
    n = len(entries)
    V = [[0] * n for _ in range(n)]
    for i, a in enumerate(entries):
        V[i][i] = a // 2
        if i + 1 < n:
            V[i][i + 1] = 1
    return V


@lru_cache(maxsize=None)
def alexander(k: TwoBridgeKnot) -> LaurentPolynomial:
    """Alexander polynomial via det(V - t*V^T), canonically normalized.

    V - t*V^T is tridiagonal with diagonal c_i*(1-t), superdiagonal 1 and
    subdiagonal -t, so successive leading minors satisfy
    D_i = c_i*(1-t)*D_{i-1} + t*D_{i-2}.
    """
    cs = [a // 2 for a in even_expansion(canonical(k)).entries]
    one_minus_t = LaurentPolynomial({0: 1, 1: -1})
    t = LaurentPolynomial({1: 1})
    d_prev, d = LaurentPolynomial(), LaurentPolynomial({0: 1})
    for c in cs:
        d_prev, d = d, LaurentPolynomial.term(c) * one_minus_t * d + t * d_prev
    return normalize_alexander(d)


@lru_cache(maxsize=None)
def alexander_fox(k: TwoBridgeKnot) -> LaurentPolynomial:
    """Independent Alexander computation by Fox calculus.

    Uses the representative's odd residue (q or q-p) for the exponent
    sequence; the relator derivative abelianizes to 1 + (t-1) * g(t) with
    g collecting one monomial per a-letter of w.  Kept deliberately free
    of the Seifert-matrix route: the polynomial arithmetic below is plain
    dicts.
    """
    p, q = k.p, k.q
    if q % 2 == 0:
        q -= p
    g = {}
    s = 0
    for i in range(1, p):
        eps = 1 if (i * q) // p % 2 == 0 else -1
        if i % 2 == 0:  # a-letters sit in the even positions of w
            if eps > 0:
                g[s] = g.get(s, 0) + 1
            else:
                g[s - 1] = g.get(s - 1, 0) - 1
        s += eps
    # f = 1 + (t - 1) * g
    f = {0: 1}
    for e, c in g.items():
        f[e + 1] = f.get(e + 1, 0) + c
        f[e] = f.get(e, 0) - c
    return normalize_alexander(LaurentPolynomial(f))


def delta2_at_1(k: TwoBridgeKnot) -> int:
    """Second derivative of the normalized Alexander polynomial at t = 1."""
    return sum(c * e * (e - 1) for e, c in alexander(k).coeffs.items())


def determinant(k: TwoBridgeKnot) -> int:
    """|Delta(-1)|; equals p for S(p, q)."""
    return abs(alexander(k)(-1))


def _tridiagonal_negative_count(diag) -> int:
    """Negative eigenvalue count of the symmetric tridiagonal matrix with
    the given diagonal and unit off-diagonal, by Sturm sign changes of the
    leading principal minors.  Intermediate zero minors inherit the
    previous sign (their neighbours have opposite signs, so exactly one
    change gets counted); the full determinant must be nonzero.
    """
    d_prev, d = 0, 1
    neg = 0
    prev_sign = 1
    for a in diag:
        d_prev, d = d, a * d - d_prev
        sign = (d > 0) - (d < 0) or prev_sign
        if sign != prev_sign:
            neg += 1
        prev_sign = sign
    if d == 0:
        raise RuntimeError("singular symmetrized Seifert form")
    return neg


@lru_cache(maxsize=None)
def signature(k: TwoBridgeKnot) -> int:
    """Knot signature: signature of V + V^T, computed exactly."""
    diag = list(even_expansion(canonical(k)).entries)  # V + V^T diagonal is 2*c_i = a_i
    neg = _tridiagonal_negative_count(diag)
    return len(diag) - 2 * neg


def tau(k: TwoBridgeKnot) -> Fraction:
    """Ozsvath-Szabo tau via the alternating-knot identity tau = -sigma/2."""
    return Fraction(-signature(k), 2)


@dataclass(frozen=True)
class NiWuReport:
    """The three necessary conditions for a purely cosmetic pair."""

    opposite_slopes: bool    # r1 = -r2
    square_condition: bool   # q^2 = -1 (mod p) for r1 = p/q, p taken positive
    tau_zero: bool           # tau(K) = 0

    @property
    def survives(self):
        return self.opposite_slopes and self.square_condition and self.tau_zero

    def to_json(self):
        return {
            "r1_equals_minus_r2": self.opposite_slopes,
            "square_condition": self.square_condition,
            "tau_zero": self.tau_zero,
            "survives": self.survives,
        }


def niwu_filter(k: TwoBridgeKnot, r1: Slope, r2: Slope) -> NiWuReport:
    """Check a slope pair against the Ni-Wu conditions."""
    if r1 == r2:
        raise ValueError("slope pair must be distinct")
    if is_meridian(r1) or is_meridian(r2):
        raise ValueError("meridian surgery is trivial and excluded")
    m = abs(r1.num)
    square = m > 0 and (r1.den * r1.den + 1) % m == 0
    return NiWuReport(r1 == -r2, square, tau(k) == 0)


def boyer_lines_obstructs(k: TwoBridgeKnot) -> bool:
    """True iff Delta''(1) != 0, which already rules out cosmetic surgeries."""
    return delta2_at_1(k) != 0


def invariant_summary(k: TwoBridgeKnot) -> dict:
    """JSON-ready summary of the classical invariants."""
    t = tau(k)
    return {
        "alexander": alexander(k).to_json(),
        "delta2": delta2_at_1(k),
        "det": determinant(k),
        "signature": signature(k),
        "tau": int(t) if t.denominator == 1 else str(t),
    }
