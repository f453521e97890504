"""Closed-form sheaf cohomology on the scroll X_e.

Two families of sheaves are covered exactly:

* line bundles O(a*xi + b*f), via pushforward to P² and the splitting of
  Sym^a(O + O(e)) into line bundles, plus Serre duality for a <= -2;
* twists of the pulled-back cotangent bundle of P², written
  OmegaTwist(a, b) for pi^* Omega^1_{P²} ⊗ O(a*xi + b*f), via the Bott
  numbers on P² and the identification (pi^* Omega^1)^dual = pi^* Omega^1 (3f).

On top of the closed forms sit formal direct sums with multiplicities
(``FormalSheaf``), Euler-characteristic identities for the four structural
exact sequences of the scroll, and a deliberately conservative long-exact-
sequence chase that never guesses connecting-map ranks.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import NamedTuple, Optional, Sequence, Union

from . import chow
from .chow import ChernData, ChowClass
from .errors import ChaseUnsupported

LINE = "line"
OMEGA = "omega"


class Summand(NamedTuple):
    """One indecomposable summand: a line bundle or an Omega twist."""

    kind: str  # "line" | "omega"
    a: int
    b: int

    def rank(self) -> int:
        return 1 if self.kind == LINE else 2

    def total_chern(self, e: int) -> ChowClass:
        d = chow.divisor(e, self.a, self.b)
        if self.kind == LINE:
            return chow.unit(e) + d
        # c(pi^* Omega^1) = 1 - 3f + 3f^2, twisted by O(d) at rank 2.
        m3f = ChowClass(e, f=-3)
        c2 = ChowClass(e, ff=3) + m3f * d + d * d
        return chow.unit(e) + (m3f + 2 * d) + c2

    def render(self, ascii_only: bool = False) -> str:
        om = "Omega" if ascii_only else "Ω"
        tw = _twist_str(self.a, self.b, ascii_only)
        if self.kind == LINE:
            return "O" if tw == "" else f"O({tw})"
        return om if tw == "" else f"{om}({tw})"


def line(a: int, b: int) -> Summand:
    return Summand(LINE, a, b)


def omega(a: int, b: int) -> Summand:
    return Summand(OMEGA, a, b)


def _twist_str(a: int, b: int, ascii_only: bool) -> str:
    xi = "xi" if ascii_only else "ξ"
    parts = []
    if a != 0:
        parts.append(xi if a == 1 else ("-" + xi if a == -1 else f"{a}{xi}"))
    if b != 0:
        mono = "f" if b == 1 else ("-f" if b == -1 else f"{b}f")
        if parts and not mono.startswith("-"):
            parts.append("+" + mono)
        else:
            parts.append(mono)
    return "".join(parts)


class CohVector(NamedTuple):
    """Dimensions (h0, h1, h2, h3) of the four cohomology groups."""

    h0: int
    h1: int
    h2: int
    h3: int

    @property
    def chi(self) -> int:
        return self.h0 - self.h1 + self.h2 - self.h3


@dataclass(frozen=True)
class FormalSheaf:
    """A finite direct sum of summands with positive multiplicities on X_e."""

    e: int
    terms: tuple  # tuple[tuple[Summand, int], ...]

    @staticmethod
    def of(e, terms) -> "FormalSheaf":
        """Build from (summand, multiplicity) pairs, merging duplicates.

        Zero multiplicities are dropped; negative ones are rejected.
        """
        merged: dict = {}
        for s, m in terms:
            if m < 0:
                raise ValueError(f"negative multiplicity {m} for {s}")
            if m:
                merged[s] = merged.get(s, 0) + m
        return FormalSheaf(e, tuple(sorted(merged.items())))

    def rank(self) -> int:
        return sum(m * s.rank() for s, m in self.terms)

    def total_chern(self) -> ChowClass:
        out = chow.unit(self.e)
        for s, m in self.terms:
            out = out * _power(s.total_chern(self.e), m)
        return out

    def chern_data(self) -> ChernData:
        if self.rank() == 0:
            raise ValueError("the zero sheaf has no Chern data record")
        c = self.total_chern()
        return ChernData(
            self.rank(),
            c.homogeneous_part(1),
            c.homogeneous_part(2),
            c.homogeneous_part(3),
        )

    def h(self, i: int) -> int:
        return sum(m * h_summand(self.e, i, s) for s, m in self.terms)

    def coh_vector(self) -> CohVector:
        return CohVector(self.h(0), self.h(1), self.h(2), self.h(3))

    def chi(self) -> int:
        return self.coh_vector().chi

    def render(self, ascii_only: bool = False) -> str:
        if not self.terms:
            return "0"
        bits = []
        # Omega summands first, echoing the usual monad displays.
        shown = sorted(self.terms, key=lambda t: (t[0].kind != OMEGA, t[0].a, t[0].b))
        for s, m in shown:
            base = s.render(ascii_only)
            bits.append(base if m == 1 else f"{base}^{m}")
        sep = " + " if ascii_only else " ⊕ "
        return sep.join(bits)

    def to_dict(self) -> dict:
        return {
            "e": self.e,
            "terms": [
                {"kind": s.kind, "a": s.a, "b": s.b, "mult": m} for s, m in self.terms
            ],
        }

    @staticmethod
    def from_dict(data: dict) -> "FormalSheaf":
        return FormalSheaf.of(
            int(data["e"]),
            [
                (Summand(t["kind"], int(t["a"]), int(t["b"])), int(t["mult"]))
                for t in data["terms"]
            ],
        )


def _power(x: ChowClass, n: int) -> ChowClass:
    out = chow.unit(x.e)
    base = x
    while n:
        if n & 1:
            out = out * base
        base = base * base
        n >>= 1
    return out


# ---------------------------------------------------------------------------
# Closed forms on P²


def h_line_p2(i: int, d: int) -> int:
    """h^i(P², O(d)): binomial count of sections, Serre-dual for d <= -3."""
    if i == 0:
        return comb(d + 2, 2) if d >= 0 else 0
    if i == 2:
        return comb(-d - 1, 2) if d <= -3 else 0
    return 0


def h_omega_p2(i: int, k: int) -> int:
    """h^i(P², Omega^1(k)), the Bott numbers.

    h0 = k²-1 for k >= 2, h1 = 1 exactly at k = 0, h2 = k²-1 for k <= -2,
    everything else vanishes.
    """
    if i == 0:
        return k * k - 1 if k >= 2 else 0
    if i == 1:
        return 1 if k == 0 else 0
    if i == 2:
        return k * k - 1 if k <= -2 else 0
    return 0


# ---------------------------------------------------------------------------
# Closed forms on X_e


def h_line(e: int, i: int, a: int, b: int) -> int:
    """h^i(X_e, O(a*xi + b*f)).

    a >= 0:  pushforward splits as the sum of O(j*e + b) over j = 0..a.
    a = -1:  all direct images vanish, so every group is zero.
    a <= -2: Serre duality back into the first branch.
    """
    if not 0 <= i <= 3:
        return 0
    if a >= 0:
        if i == 3:
            return 0
        return sum(h_line_p2(i, j * e + b) for j in range(a + 1))
    if a == -1:
        return 0
    return sum(h_line_p2(3 - i, j * e + e - b - 3) for j in range(-a - 1))


def h_omega_twist(e: int, i: int, a: int, b: int) -> int:
    """h^i(X_e, pi^* Omega^1_{P²} ⊗ O(a*xi + b*f)).

    Same three branches as ``h_line``; the a <= -2 branch dualizes with
    (pi^* Omega^1)^dual = pi^* Omega^1 (3f), giving the twist (-2-a, e-b).
    """
    if not 0 <= i <= 3:
        return 0
    if a >= 0:
        if i == 3:
            return 0
        return sum(h_omega_p2(i, j * e + b) for j in range(a + 1))
    if a == -1:
        return 0
    return h_omega_twist(e, 3 - i, -2 - a, e - b)


def h_summand(e: int, i: int, s: Summand) -> int:
    if s.kind == LINE:
        return h_line(e, i, s.a, s.b)
    return h_omega_twist(e, i, s.a, s.b)


def h_formal(sheaf: FormalSheaf, i: int) -> int:
    return sheaf.h(i)


def coh_vector(sheaf: FormalSheaf) -> CohVector:
    return sheaf.coh_vector()


def chi_formal(sheaf: FormalSheaf) -> int:
    return sheaf.chi()


def chi_line(e: int, a: int, b: int) -> int:
    return sum((-1) ** i * h_line(e, i, a, b) for i in range(4))


def chi_omega_twist(e: int, a: int, b: int) -> int:
    return sum((-1) ** i * h_omega_twist(e, i, a, b) for i in range(4))


def serre_dual_twist(i: int, a: int, b: int) -> tuple:
    """Serre-dual bookkeeping for instanton twists, in (xi, f) coordinates.

    For a rank-2 bundle E with E^dual = E(-(e-1)f) one gets
    h^i(E(a xi + b f)) = h^{3-i}(E((-a-2) xi + (-b-2) f)); the scroll
    parameter cancels, so the map is (i, a, b) -> (3-i, -a-2, -b-2),
    an involution.  The twist -xi - f (= -H) is the self-dual point.
    """
    return (3 - i, -a - 2, -b - 2)


# ---------------------------------------------------------------------------
# Structural exact sequences, as lists of formal sheaves
#
# Twisting by O(a*xi + b*f) throughout; each list is exact in the given order.


def seq_euler(e: int, a: int = 0, b: int = 0):
    """0 -> Omega -> O(-f)^3 -> O -> 0 (pullback of the Euler sequence)."""
    return [
        FormalSheaf.of(e, [(omega(a, b), 1)]),
        FormalSheaf.of(e, [(line(a, b - 1), 3)]),
        FormalSheaf.of(e, [(line(a, b), 1)]),
    ]


def seq_euler_dual(e: int, a: int = 0, b: int = 0):
    """0 -> O(-3f) -> O(-2f)^3 -> Omega -> 0 (pullback of the dualized Euler sequence)."""
    return [
        FormalSheaf.of(e, [(line(a, b - 3), 1)]),
        FormalSheaf.of(e, [(line(a, b - 2), 3)]),
        FormalSheaf.of(e, [(omega(a, b), 1)]),
    ]


def seq_koszul(e: int, a: int = 0, b: int = 0):
    """0 -> O(-3f) -> O(-2f)^3 -> O(-f)^3 -> O -> 0 (spliced Euler Koszul complex)."""
    return [
        FormalSheaf.of(e, [(line(a, b - 3), 1)]),
        FormalSheaf.of(e, [(line(a, b - 2), 3)]),
        FormalSheaf.of(e, [(line(a, b - 1), 3)]),
        FormalSheaf.of(e, [(line(a, b), 1)]),
    ]


def seq_relative_euler(e: int, a: int = 0, b: int = 0):
    """0 -> O(-2xi+ef) -> O(-xi) + O(-xi+ef) -> O -> 0 (relative Euler sequence)."""
    return [
        FormalSheaf.of(e, [(line(a - 2, b + e), 1)]),
        FormalSheaf.of(e, [(line(a - 1, b), 1), (line(a - 1, b + e), 1)]),
        FormalSheaf.of(e, [(line(a, b), 1)]),
    ]


NAMED_SEQUENCES = {
    "euler": seq_euler,
    "euler-dual": seq_euler_dual,
    "koszul": seq_koszul,
    "relative-euler": seq_relative_euler,
}


def chi_alternating(entries: Sequence[FormalSheaf]) -> int:
    """Alternating Euler-characteristic sum; zero on every exact sequence."""
    return sum((-1) ** i * s.chi() for i, s in enumerate(entries))


# ---------------------------------------------------------------------------
# Long-exact-sequence chase


class ChaseResult(NamedTuple):
    kind: str  # "zero" | "exact" | "upper_bound"
    value: Optional[int]

    @property
    def is_zero(self) -> bool:
        return self.kind == "zero" or (self.kind == "exact" and self.value == 0)


Entry = Union[FormalSheaf, CohVector, None]


def _entry_h(entry: Entry, i: int) -> int:
    if not 0 <= i <= 3:
        return 0
    if isinstance(entry, FormalSheaf):
        return entry.h(i)
    return entry[i]


def les_chase(entries: Sequence[Entry], target_position: int, i: int) -> ChaseResult:
    """Bound h^i of the unknown entry of a short exact sequence.

    ``entries`` has length 3; the slot at ``target_position`` is the unknown
    (pass ``None`` there, or anything — it is ignored).  The other two slots
    must be computable: a ``FormalSheaf`` or an explicit ``CohVector``
    (the latter lets hypothesized vanishing enter a chase).

    Returns ``zero`` when both groups flanking the target in the long exact
    sequence vanish, ``exact`` when vanishing one step further out pins the
    target to a single neighboring group, and ``upper_bound`` (with the sum
    of the flanking dimensions) otherwise.  Connecting-map ranks are never
    guessed.
    """
    if len(entries) != 3:
        raise ChaseUnsupported("only three-term exact sequences are chased")
    if not 0 <= target_position <= 2:
        raise ChaseUnsupported(f"bad target position {target_position}")
    known = [x for p, x in enumerate(entries) if p != target_position]
    if any(x is None for x in known):
        raise ChaseUnsupported("sequence has more than one non-computable entry")

    sub, mid, quot = entries
    # Neighbors of H^i(target) in the long exact sequence, outward in both
    # directions: ... -> prev2 -> prev -> H^i(target) -> next -> next2 -> ...
    if target_position == 0:
        cells = [(mid, i - 1), (quot, i - 1), (mid, i), (quot, i)]
    elif target_position == 1:
        cells = [(quot, i - 1), (sub, i), (quot, i), (sub, i + 1)]
    else:
        cells = [(sub, i), (mid, i), (sub, i + 1), (mid, i + 1)]
    prev2, prev, nxt, nxt2 = (_entry_h(x, d) for x, d in cells)

    if prev == 0 and nxt == 0:
        return ChaseResult("zero", 0)
    if prev == 0 and nxt2 == 0:
        return ChaseResult("exact", nxt)
    if prev2 == 0 and nxt == 0:
        return ChaseResult("exact", prev)
    return ChaseResult("upper_bound", prev + nxt)
