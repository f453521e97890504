"""Exceptional collections, their dual orthogonality, and instanton monads.

X_e carries three dual pairs of full exceptional collections built from
line bundles and Omega twists.  Writing s_i = 2 for the three entries of
the geometric side that are shifted and s_i = 0 otherwise, the pairing is

    Ext^k(E_i, F_j) = H^(k - s_i)(E_i ⊗ F_j) = C  iff  i = j = k,

which ``orthogonality_check`` verifies cell by cell through the closed
cohomology forms.  A cohomology table against a pair then degenerates, for
an instanton, to a three-term monad; the surviving first-page entries live
in the h^1 row and their dimensions are minus the twisted Euler
characteristic.  Three monad variants are produced (one per pair; the third
needs alpha = 0 and is a pullback from the plane), plus the non-earnest
monad in which the h^2 groups enter as free parameters.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from . import chow, cohomology, instanton
from .chow import ChowClass
from .cohomology import (
    FormalSheaf,
    Summand,
    les_chase,
    line,
    omega,
    seq_euler_dual,
)
from .errors import Inadmissible, OrthogonalityFailure, StrongnessFailure

GEOMETRIC_SHIFTS = (0, 0, 0, 2, 2, 2)  # s_i for entries E_0..E_5 of every pair

DUAL_PAIRS = {1: (1, 2), 2: (3, 4), 3: (5, 6)}


@dataclass(frozen=True)
class Collection:
    """One of the six built-in collections, entries listed as E_0..E_5."""

    e: int
    index: int
    objects: tuple  # tuple[Summand, ...], position i holds E_i
    shifts: tuple  # tuple[int, ...]

    @property
    def is_geometric_side(self) -> bool:
        return self.index % 2 == 1


def collection(e: int, index: int) -> Collection:
    """The six standard collections, numbered as the three dual pairs
    (1, 2), (3, 4), (5, 6); odd indices carry the shifted entries."""
    if index == 1:
        objs = (
            line(0, -(e - 1)),
            line(0, -e),
            line(0, -(e + 1)),
            line(-1, 1),
            line(-1, 0),
            line(-1, -1),
        )
    elif index == 2:
        objs = (
            line(0, e - 1),
            omega(0, e),
            line(0, e - 2),
            line(-1, e - 1),
            omega(-1, e),
            line(-1, e - 2),
        )
    elif index == 3:
        objs = (
            line(0, -e),
            omega(0, -(e - 1)),
            line(0, -(e + 1)),
            line(-1, 0),
            omega(-1, 1),
            line(-1, -1),
        )
    elif index == 4:
        objs = (
            line(0, e),
            line(0, e - 1),
            line(0, e - 2),
            line(-1, e),
            line(-1, e - 1),
            line(-1, e - 2),
        )
    elif index == 5:
        objs = (
            line(0, -(e + 1)),
            omega(0, -e),
            line(0, -(e + 2)),
            line(-1, 0),
            omega(-1, 1),
            line(-1, -1),
        )
    elif index == 6:
        objs = (
            line(0, e + 1),
            line(0, e),
            line(0, e - 1),
            line(-1, e),
            line(-1, e - 1),
            line(-1, e - 2),
        )
    else:
        raise ValueError(f"collection index must be 1..6, got {index}")
    shifts = GEOMETRIC_SHIFTS if index % 2 == 1 else (0,) * 6
    return Collection(e, index, objs, shifts)


def tensor_summands(x: Summand, y: Summand) -> Summand:
    if x.kind == cohomology.OMEGA and y.kind == cohomology.OMEGA:
        raise ValueError("Omega ⊗ Omega products have no closed form here")
    kind = cohomology.OMEGA if cohomology.OMEGA in (x.kind, y.kind) else cohomology.LINE
    return Summand(kind, x.a + y.a, x.b + y.b)


@dataclass(frozen=True)
class OrthogonalityReport:
    e: int
    pair: tuple
    cells: dict  # (i, j, m) -> dimension of H^m(E_i ⊗ F_j)
    violations: tuple  # tuple of (i, j, m, got, expected)

    @property
    def ok(self) -> bool:
        return not self.violations


def orthogonality_report(ecoll: Collection, fcoll: Collection) -> OrthogonalityReport:
    """Compute every group H^m(E_i ⊗ F_j), m = 0..3, against the expected
    delta pattern, without raising."""
    e = ecoll.e
    cells = {}
    violations = []
    for i in range(6):
        si = ecoll.shifts[i]
        for j in range(6):
            prod = tensor_summands(ecoll.objects[i], fcoll.objects[j])
            for m in range(4):
                got = cohomology.h_summand(e, m, prod)
                want = 1 if (i == j and m == i - si) else 0
                cells[(i, j, m)] = got
                if got != want:
                    violations.append((i, j, m, got, want))
    return OrthogonalityReport(e, (ecoll.index, fcoll.index), cells, tuple(violations))


def orthogonality_check(e: int, pair: int) -> OrthogonalityReport:
    """Verify the dual orthogonality of pair 1, 2 or 3; raise on any bad cell."""
    ei, fi = DUAL_PAIRS[pair]
    report = orthogonality_report(collection(e, ei), collection(e, fi))
    if not report.ok:
        raise OrthogonalityFailure(report.violations)
    return report


# ---------------------------------------------------------------------------
# Strongness of the mixed dual collection
#
# The fifteen forward Ext groups between members of the second collection,
# each reduced to a single cohomology group on X_e.  Line-bundle groups are
# closed-form; Omega-twist groups are chased along the dualized Euler
# sequence at the appropriate twist (with Omega^dual = Omega(3f)); the one
# End(Omega)-type group is reachable only by the chase.


class StrongnessItem(NamedTuple):
    source: str
    target: str
    group: str
    route: str  # "closed-form" | "chase" | "chase-only"
    vanishing: dict  # i -> True/False for i = 1..3
    ok: bool


def _line_item(e, src, tgt, a, b):
    vals = {i: cohomology.h_line(e, i, a, b) == 0 for i in (1, 2, 3)}
    return StrongnessItem(
        src, tgt, line(a, b).render(), "closed-form", vals, all(vals.values())
    )


def _omega_item(e, src, tgt, a, b):
    # Dual route: the chase along the dualized Euler sequence twisted to end
    # at Omega(a xi + b f), cross-checked against the closed form.
    seq = seq_euler_dual(e, a, b)
    vals = {}
    for i in (1, 2, 3):
        chased = les_chase(seq, 2, i)
        vals[i] = chased.is_zero and cohomology.h_omega_twist(e, i, a, b) == 0
    return StrongnessItem(
        src, tgt, omega(a, b).render(), "chase", vals, all(vals.values())
    )


def _end_omega_item(e, src, tgt):
    # Ext^i(Omega(-xi+ef), Omega(ef)) = H^i(Omega^dual ⊗ Omega(xi)); with
    # Omega^dual = Omega(3f) this is the cokernel of the dualized Euler
    # sequence tensored by Omega(xi + 3f):
    #     0 -> Omega(xi) -> Omega(xi+f)^3 -> Omega^dual ⊗ Omega(xi) -> 0.
    F = FormalSheaf.of
    seq = [
        F(e, [(omega(1, 0), 1)]),
        F(e, [(omega(1, 1), 3)]),
        None,
    ]
    vals = {i: les_chase(seq, 2, i).is_zero for i in (1, 2, 3)}
    label = "Ω^∨⊗Ω(ξ)"
    return StrongnessItem(src, tgt, label, "chase-only", vals, all(vals.values()))


@dataclass(frozen=True)
class StrongnessReport:
    e: int
    items: tuple

    @property
    def ok(self) -> bool:
        return all(it.ok for it in self.items)


def strongness_check(e: int) -> StrongnessReport:
    """Verify Ext^i = 0 (i > 0) between all forward pairs of the mixed
    collection of the first dual pair; raise on any failure."""
    coll = collection(e, 2)
    names = [s.render() for s in coll.objects]
    items = []
    # (source index, target index, reduced group): the Ext between F_i and
    # F_j, i > j in collection order, equals H^*(F_i^dual ⊗ F_j).
    for i in range(5, 0, -1):
        for j in range(i - 1, -1, -1):
            src, tgt = coll.objects[i], coll.objects[j]
            if src.kind == cohomology.LINE and tgt.kind == cohomology.LINE:
                items.append(
                    _line_item(e, names[i], names[j], tgt.a - src.a, tgt.b - src.b)
                )
            elif src.kind == cohomology.LINE:
                items.append(
                    _omega_item(e, names[i], names[j], tgt.a - src.a, tgt.b - src.b)
                )
            elif tgt.kind == cohomology.LINE:
                # Omega^dual(D) = Omega(D + 3f)
                items.append(
                    _omega_item(
                        e, names[i], names[j], tgt.a - src.a, tgt.b - src.b + 3
                    )
                )
            else:
                items.append(_end_omega_item(e, names[i], names[j]))
    report = StrongnessReport(e, tuple(items))
    if not report.ok:
        raise StrongnessFailure([it for it in report.items if not it.ok])
    return report


# ---------------------------------------------------------------------------
# h^1 values of the twisted instanton
#
# At every table twist the defining vanishing (plus the earnestness chain)
# kills h^0, h^2, h^3, so h^1 = -chi there; chi comes from the twisted
# Riemann-Roch closed form, and Omega-twisted values follow by Euler-sequence
# additivity:  chi(Omega ⊗ E(a, b)) = 3 chi(E(a, b-1)) - chi(E(a, b)).


def h1_line_candidate(e: int, alpha: int, beta: int, a: int, b: int) -> int:
    return -chow.chi_instanton(e, alpha, beta, a, b)


def h1_omega_candidate(e: int, alpha: int, beta: int, a: int, b: int) -> int:
    return 3 * h1_line_candidate(e, alpha, beta, a, b - 1) - h1_line_candidate(
        e, alpha, beta, a, b
    )


class TableTwist(NamedTuple):
    """One table column: the twist of E, its label, and the matching dual
    sheaf with its position in the monad (-1 = A, 0 = B, +1 = C)."""

    label: str
    is_omega: bool
    a: int
    b: int
    dual: Summand
    position: int


def _variant_twists(e: int, variant: int):
    if variant == 1:
        return [
            TableTwist("-xi", False, -1, 0, omega(-1, e), -1),
            TableTwist("-xi+f", False, -1, 1, line(-1, e - 1), 0),
            TableTwist("-(e+1)f", False, 0, -(e + 1), line(0, e - 2), -1),
            TableTwist("-ef", False, 0, -e, omega(0, e), 0),
            TableTwist("-(e-1)f", False, 0, -(e - 1), line(0, e - 1), 1),
        ]
    if variant == 2:
        return [
            TableTwist("omega(-xi+f)", True, -1, 1, line(-1, e - 1), -1),
            TableTwist("-xi", False, -1, 0, line(-1, e), 0),
            TableTwist("-(e+1)f", False, 0, -(e + 1), line(0, e - 2), -1),
            TableTwist("omega(-(e-1)f)", True, 0, -(e - 1), line(0, e - 1), 0),
            TableTwist("-ef", False, 0, -e, line(0, e), 1),
        ]
    if variant == 3:
        return [
            TableTwist("omega(-xi+f)", True, -1, 1, line(-1, e - 1), -1),
            TableTwist("-xi", False, -1, 0, line(-1, e), 0),
            TableTwist("-(e+2)f", False, 0, -(e + 2), line(0, e - 1), -1),
            TableTwist("omega(-ef)", True, 0, -e, line(0, e), 0),
            TableTwist("-(e+1)f", False, 0, -(e + 1), line(0, e + 1), 1),
        ]
    raise ValueError(f"variant must be 1, 2 or 3, got {variant}")


def h1_values(e: int, alpha: int, beta: int, variant: int = 1) -> dict:
    """The five h^1 dimensions populating the table of the given variant,
    keyed by twist label (in column order).

    These are exactly the multiplicities of the variant's monad. A negative
    candidate means no earnest instanton with these parameters exists, and
    is reported as ``Inadmissible`` carrying the violated bound.
    """
    if variant == 3 and alpha != 0:
        raise Inadmissible(
            f"the pullback variant requires alpha = 0, got alpha = {alpha}",
            bound="alpha == 0",
        )
    out = {}
    for tw in _variant_twists(e, variant):
        cand = (h1_omega_candidate if tw.is_omega else h1_line_candidate)(
            e, alpha, beta, tw.a, tw.b
        )
        if cand < 0:
            raise Inadmissible(
                f"h1 at twist {tw.label} is {cand} < 0 for "
                f"(e, alpha, beta) = ({e}, {alpha}, {beta})",
                bound=f"h1[{tw.label}] >= 0",
            )
        out[tw.label] = cand
    return out


def is_admissible(e: int, alpha: int, beta: int, variant: int) -> bool:
    try:
        h1_values(e, alpha, beta, variant)
    except Inadmissible:
        return False
    return True


# ---------------------------------------------------------------------------
# The cohomology table


class Cell(NamedTuple):
    kind: str  # "star" | "value" | "zero" | "unknown"
    value: Optional[int] = None
    tag: Optional[str] = None

    def render(self, ascii_only: bool = False) -> str:
        if self.kind == "star":
            return "*"
        if self.kind == "zero":
            return "0"
        if self.kind == "value":
            return str(self.value)
        return self.tag or "?"


STAR = Cell("star")


@dataclass(frozen=True)
class BeilinsonTable:
    """The 6x6 first-page table of an instanton against a dual pair.

    Rows follow the displayed staircase: shifted columns stack H^3..H^0 in
    rows 0..3, unshifted ones in rows 2..5, stars elsewhere.  Column c
    corresponds to collection index i = 5 - c, so the leftmost column is
    the twist by -H that the instanton condition kills outright.
    """

    e: int
    alpha: int
    beta: int
    variant: int
    gamma_zero: bool
    top_labels: tuple  # dual-side sheaf per column
    bottom_labels: tuple  # geometric-side twist per column
    shifts: tuple  # per column
    cells: tuple  # 6 rows x 6 columns of Cell

    def value_positions(self):
        return tuple(
            (r, c)
            for r in range(6)
            for c in range(6)
            if self.cells[r][c].kind == "value"
        )

    def render(self, ascii_only: bool = False, raw: bool = False) -> str:
        grid = []
        for r in range(6):
            row = []
            for c in range(6):
                if raw:
                    cell = self.cells[r][c]
                    if cell.kind == "star":
                        row.append("*")
                    else:
                        m = (3 - r) if self.shifts[c] else (5 - r)
                        row.append(f"H{m}")
                else:
                    row.append(self.cells[r][c].render(ascii_only))
            grid.append(row)
        top = [s.render(ascii_only) for s in self.top_labels]
        bottom = [s.render(ascii_only) for s in self.bottom_labels]
        widths = [
            max(len(top[c]), len(bottom[c]), *(len(grid[r][c]) for r in range(6)))
            for c in range(6)
        ]
        def fmt(cells):
            return "| " + " | ".join(s.center(w) for s, w in zip(cells, widths)) + " |"
        sep = "+" + "+".join("-" * (w + 2) for w in widths) + "+"
        lines = [sep, fmt(top), sep]
        for row in grid:
            lines.append(fmt(row))
        lines += [sep, fmt(bottom), sep]
        return "\n".join(lines)


def beilinson_table(
    e: int, alpha: int, beta: int, variant: int = 1, gamma_zero: bool = True
) -> BeilinsonTable:
    """Populate the table for the given variant.

    With ``gamma_zero`` (the earnest case) every non-star cell resolves to a
    symbolic zero with the rule that kills it, or to an h^1 value; exactly
    five value cells survive, in the fixed staircase positions.  With
    ``gamma_zero=False`` (first variant only) the three h^2 cells of the
    unshifted block become the free parameters gamma, eta, delta and the
    h^1 cells below them hold the base values still owed their corrections.
    """
    if not gamma_zero and variant != 1:
        raise ValueError("the non-earnest table is only laid out for variant 1")
    if gamma_zero:
        values = h1_values(e, alpha, beta, variant)
    else:
        if alpha < 0:
            raise Inadmissible("alpha must be non-negative", bound="alpha >= 0")
        values = {
            tw.label: (h1_omega_candidate if tw.is_omega else h1_line_candidate)(
                e, alpha, beta, tw.a, tw.b
            )
            for tw in _variant_twists(e, variant)
        }

    twists = _variant_twists(e, variant)
    ei, fi = DUAL_PAIRS[variant]
    ecoll, fcoll = collection(e, ei), collection(e, fi)
    top = tuple(fcoll.objects[5 - c] for c in range(6))
    bottom = tuple(ecoll.objects[5 - c] for c in range(6))
    shifts = tuple(ecoll.shifts[5 - c] for c in range(6))

    h2_symbols = {2: "gamma", 1: "eta", 0: "delta"}  # by collection index
    cells = [[STAR] * 6 for _ in range(6)]
    for c in range(6):
        i = 5 - c
        si = shifts[c]
        rows = range(0, 4) if si else range(2, 6)
        if i == 5:
            for r in rows:
                cells[r][c] = Cell("zero", tag="minus-h")
            continue
        tw = twists[4 - i]
        kind = instanton.OMEGA_TENSOR if tw.is_omega else instanton.BUNDLE
        for r in rows:
            m = (3 - r) if si else (5 - r)
            if m == 1:
                cells[r][c] = Cell("value", value=values[tw.label])
                continue
            tag = instanton.forced_vanishing(e, kind, m, tw.a, tw.b)
            if tag is None and m == 0:
                # Lone low-e boundary cells (only e = 0 reaches here, where
                # the region predicates stop short of b = 1).
                tag = "h0-small-e"
            if tag is None and m == 2:
                if variant == 3:
                    tag = "alpha-zero-chain"
                elif not gamma_zero:
                    cells[r][c] = Cell("unknown", tag=h2_symbols[i])
                    continue
                else:
                    tag = "gamma-hypothesis" if tw.b == -(e + 1) else "gamma-chain"
            cells[r][c] = Cell("zero", tag=tag)
    return BeilinsonTable(
        e,
        alpha,
        beta,
        variant,
        gamma_zero,
        top,
        bottom,
        shifts,
        tuple(tuple(row) for row in cells),
    )


# ---------------------------------------------------------------------------
# Monads


@dataclass(frozen=True)
class Monad:
    """A three-term complex A -> B -> C with the instanton as middle
    cohomology.  For the non-earnest variant C is the kernel of a surjection
    C -> C1 of sheaves, stored as the pair (C, C1); plain monads have
    ``c_tail`` None.  ``extra`` carries (gamma, delta, eta) when present.
    """

    e: int
    alpha: int
    beta: int
    variant: Optional[int]
    A: FormalSheaf
    B: FormalSheaf
    C: FormalSheaf
    c_tail: Optional[FormalSheaf] = None
    extra: Optional[tuple] = None

    def render(self, ascii_only: bool = False) -> str:
        arrow = "->" if ascii_only else "→"
        tail = (
            ""
            if self.c_tail is None or not self.c_tail.terms
            else f" [{arrow} {self.c_tail.render(ascii_only)}]"
        )
        return (
            f"0 {arrow} {self.A.render(ascii_only)} {arrow} "
            f"{self.B.render(ascii_only)} {arrow} {self.C.render(ascii_only)}"
            f"{tail} {arrow} 0"
        )

    def to_dict(self) -> dict:
        out = {
            "e": self.e,
            "alpha": self.alpha,
            "beta": self.beta,
            "variant": self.variant,
            "A": self.A.to_dict()["terms"],
            "B": self.B.to_dict()["terms"],
            "C": self.C.to_dict()["terms"],
        }
        if self.c_tail is not None:
            out["C1"] = self.c_tail.to_dict()["terms"]
        if self.extra is not None:
            out["gamma"], out["delta"], out["eta"] = self.extra
        rep = monad_consistency(self)
        out["checks"] = {
            "rank": rep.rank_ok,
            "c1": rep.c1_ok,
            "c2": rep.c2_ok,
            "chi": rep.chi_ok,
        }
        return out

    @staticmethod
    def from_dict(data: dict) -> "Monad":
        e = int(data["e"])
        def sheaf(key):
            if key not in data:
                return None
            return FormalSheaf.from_dict({"e": e, "terms": data[key]})
        extra = None
        if "gamma" in data:
            extra = (int(data["gamma"]), int(data["delta"]), int(data["eta"]))
        return Monad(
            e,
            int(data["alpha"]),
            int(data["beta"]),
            data.get("variant"),
            sheaf("A"),
            sheaf("B"),
            sheaf("C"),
            sheaf("C1"),
            extra,
        )


def monad_shape(e: int, alpha: int, beta: int, variant: int = 1) -> Monad:
    """The variant's monad, multiplicities taken from ``h1_values`` (the
    Riemann-Roch route), never from display strings."""
    values = h1_values(e, alpha, beta, variant)
    buckets = {-1: [], 0: [], 1: []}
    for tw in _variant_twists(e, variant):
        buckets[tw.position].append((tw.dual, values[tw.label]))
    return Monad(
        e,
        alpha,
        beta,
        variant,
        FormalSheaf.of(e, buckets[-1]),
        FormalSheaf.of(e, buckets[0]),
        FormalSheaf.of(e, buckets[1]),
    )


def monad_general(
    e: int, alpha: int, beta: int, gamma: int, delta: int, eta: int
) -> Monad:
    """The monad of a (possibly non-earnest) instanton with prescribed
    h^2 values gamma, eta, delta at the twists -(e+1)f, -ef, -(e-1)f.

    Each h^2 group bumps the h^1 exponent in its own column by the same
    amount and reappears as a summand one position later, so every
    correction cancels out of the rank, Chern and chi defects.  At
    gamma = delta = eta = 0 this degenerates to the first variant.
    """
    for name, val in (("gamma", gamma), ("delta", delta), ("eta", eta)):
        if val < 0:
            raise Inadmissible(f"{name} = {val} < 0", bound=f"{name} >= 0")
    if alpha < 0:
        raise Inadmissible(f"alpha = {alpha} < 0", bound="alpha >= 0")
    bumps = {"-(e+1)f": gamma, "-ef": eta, "-(e-1)f": delta}
    exponents = {}
    for tw in _variant_twists(e, 1):
        cand = h1_line_candidate(e, alpha, beta, tw.a, tw.b) + bumps.get(tw.label, 0)
        if cand < 0:
            raise Inadmissible(
                f"exponent at twist {tw.label} is {cand} < 0",
                bound=f"h1[{tw.label}] >= 0",
            )
        exponents[tw.label] = cand
    a_terms = [(omega(-1, e), exponents["-xi"]), (line(0, e - 2), exponents["-(e+1)f"])]
    b_terms = [
        (line(-1, e - 1), exponents["-xi+f"]),
        (omega(0, e), exponents["-ef"]),
        (line(0, e - 2), gamma),
    ]
    c_terms = [(line(0, e - 1), exponents["-(e-1)f"]), (omega(0, e), eta)]
    tail = [(line(0, e - 1), delta)]
    return Monad(
        e,
        alpha,
        beta,
        None,
        FormalSheaf.of(e, a_terms),
        FormalSheaf.of(e, b_terms),
        FormalSheaf.of(e, c_terms),
        FormalSheaf.of(e, tail),
        (gamma, delta, eta),
    )


@dataclass(frozen=True)
class ConsistencyReport:
    rank_defect: int
    c1_defect: ChowClass
    c2_defect: ChowClass
    chi_defect: int
    expected_c1: ChowClass
    expected_c2: ChowClass
    expected_chi: int

    @property
    def rank_ok(self) -> bool:
        return self.rank_defect == 2

    @property
    def c1_ok(self) -> bool:
        return self.c1_defect == self.expected_c1

    @property
    def c2_ok(self) -> bool:
        return self.c2_defect == self.expected_c2

    @property
    def chi_ok(self) -> bool:
        return self.chi_defect == self.expected_chi

    @property
    def ok(self) -> bool:
        return self.rank_ok and self.c1_ok and self.c2_ok and self.chi_ok


def monad_consistency(m: Monad) -> ConsistencyReport:
    """Check that the middle cohomology of the monad has instanton data:
    rank 2, c1 = (e-1)f, c2 = alpha xi f + beta f^2 (by total-Chern
    quotient), and the right Euler characteristic."""
    e = m.e
    tail = m.c_tail if m.c_tail is not None else FormalSheaf.of(e, [])
    rank = m.B.rank() + tail.rank() - m.A.rank() - m.C.rank()
    total = (
        m.B.total_chern()
        * tail.total_chern()
        * m.A.total_chern().inverse()
        * m.C.total_chern().inverse()
    )
    chi = m.B.chi() + tail.chi() - m.A.chi() - m.C.chi()
    return ConsistencyReport(
        rank_defect=rank,
        c1_defect=total.homogeneous_part(1),
        c2_defect=total.homogeneous_part(2),
        chi_defect=chi,
        expected_c1=chow.divisor(e, 0, e - 1),
        expected_c2=ChowClass(e, xif=m.alpha, ff=m.beta),
        expected_chi=chow.chi_instanton(e, m.alpha, m.beta, 0, 0),
    )
