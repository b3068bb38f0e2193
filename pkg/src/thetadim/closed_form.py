"""Closed-form metric bases for ``C_{p,q,r}`` graphs via case dispatch.

Every valid (p, q, r) falls into exactly one case family, keyed by how the
middle count q compares with the outer counts p and r (after at most one
outer swap, since ``C_{p,q,r}`` and ``C_{r,q,p}`` are isomorphic):

    ZeroPath  one outer path is empty (r = 0, or p = 0 after a swap)
    T1        middle strictly dominant: q > p > r
    T2        middle ties an outer: p = q (or r = q before the swap)
    T3        an outer strictly dominant: p > q and p > r
    T4        equal outers: p = r

Each family splits into parts on q - r, giving 15 tags total.  A part
carries a landmark-set formula W, a partition of the vertices into index
ranges, and per-range distance-vector formulas.  The dimension is 3 exactly
for tags T2-P2 and T4-P1; every other part has dimension 2.

The tables are transcribed literally and treated as claims: BFS distances
are ground truth, and the verification sweep records any divergence as a
table discrepancy instead of trusting the formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .theta import InvalidParamsError, _require_valid, swap_isomorphism

CASE_TAGS: tuple[str, ...] = (
    "ZeroPath-P1",
    "ZeroPath-P2",
    "T1-P1",
    "T1-P2",
    "T1-P3",
    "T2-P1",
    "T2-P2",
    "T2-P3",
    "T3-P1",
    "T3-P2",
    "T3-P3",
    "T4-P1",
    "T4-P2",
    "T4-P3a",
    "T4-P3b",
)

#: Tags whose closed-form basis has three landmarks; all others have two.
DIMENSION_THREE_TAGS = frozenset({"T2-P2", "T4-P1"})


@dataclass(frozen=True)
class TheoremCase:
    """Dispatch outcome: the governing tag, and whether the outer paths were
    swapped (formulas then run in ``C_{r,q,p}`` labels and pull back)."""

    tag: str
    swapped: bool


@dataclass(frozen=True)
class ClosedFormResult:
    """Formula-produced basis in the caller's labeling, with its case."""

    case: TheoremCase
    basis: tuple[int, ...]
    dimension: int


class TableLookupError(LookupError):
    """A vertex falls outside the case table, or inside conflicting cells.

    Both situations are table defects surfaced by the sweep, not faults of
    the caller; ``reason`` is ``"uncovered"`` or ``"ambiguous"``.
    """

    def __init__(self, reason: str, vertex: int, tag: str):
        super().__init__(f"vertex {vertex} is {reason} in the {tag} table")
        self.reason = reason
        self.vertex = vertex
        self.tag = tag


def _fl(a: int) -> int:
    """Mathematical floor of a/2 (negative-safe)."""
    return a // 2


def _ce(a: int) -> int:
    """Mathematical ceiling of a/2 (negative-safe)."""
    return -((-a) // 2)


def _dispatch(p: int, q: int, r: int) -> tuple[str, tuple[int, int, int], bool]:
    """Tag, parameters in dispatch labeling, and whether a swap happened."""
    _require_valid(p, q, r)
    if r == 0 or p == 0:
        swapped = p == 0
        pp, rr = (r, p) if swapped else (p, r)
        return ("ZeroPath-P1" if pp == 1 else "ZeroPath-P2"), (pp, q, rr), swapped
    if p == r:
        d = q - r
        if d in (2, 4):
            tag = "T4-P1"
        elif d > 2:
            tag = "T4-P2"
        elif d == 1:
            tag = "T4-P3a"
        else:
            tag = "T4-P3b"
        return tag, (p, q, r), False
    if p == q or r == q:
        swapped = r == q
        pp, rr = (r, p) if swapped else (p, r)
        d = q - rr
        tag = "T2-P1" if d < 2 else ("T2-P2" if d == 2 else "T2-P3")
        return tag, (pp, q, rr), swapped
    swapped = r > p
    pp, rr = (r, p) if swapped else (p, r)
    if q > pp:
        if q - rr == 2:
            tag = "T1-P1"
        elif pp - rr == 1:
            tag = "T1-P2"
        else:
            tag = "T1-P3"
        return tag, (pp, q, rr), swapped
    d = q - rr
    tag = "T3-P1" if d < 2 else ("T3-P2" if d == 2 else "T3-P3")
    return tag, (pp, q, rr), swapped


def dispatch_case(p: int, q: int, r: int) -> TheoremCase:
    """Map a valid triple to the single case tag governing it."""
    tag, _, swapped = _dispatch(p, q, r)
    return TheoremCase(tag=tag, swapped=swapped)


def _case_basis(tag: str, p: int, q: int, r: int) -> tuple[int, ...]:
    """Landmark formula of a case, in dispatch labeling and coordinate order."""
    if tag == "ZeroPath-P1":
        return (1, 2)
    if tag == "ZeroPath-P2":
        return (1, _fl(p) + 1)
    if tag in ("T1-P1", "T3-P2", "T4-P2"):
        return (1, p + 2)
    if tag in ("T1-P2", "T1-P3", "T2-P3", "T3-P3"):
        return (1, _fl(p + r) + 1)
    if tag == "T2-P1":
        return (1, p)
    if tag == "T2-P2":
        return (1, 2, p + 2)
    if tag == "T3-P1":
        return (1, _fl(p + q))
    if tag in ("T4-P3a", "T4-P3b"):
        second = _fl(p + q)
        if second == 1:
            # C_{1,2,1} is the one triple where v_floor((p+q)/2) collapses
            # onto v_1; the hub v_{p+1} is the size-2 completion that stays
            # resolving there.
            second = p + 1
        return (1, second)
    if tag == "T4-P1":
        return (1, 2, _fl(q - r) + p + 1)
    raise ValueError(f"unknown case tag {tag!r}")


def case_landmarks(p: int, q: int, r: int) -> tuple[int, ...]:
    """Formula landmarks in the caller's labeling, in coordinate order.

    The coordinate order is the order the case tables use, so distance
    vectors computed against this list are comparable with
    :func:`formula_representation`.
    """
    tag, (pp, qq, rr), swapped = _dispatch(p, q, r)
    basis = _case_basis(tag, pp, qq, rr)
    if not swapped:
        return basis
    inverse = {w: v for v, w in swap_isomorphism(p, q, r).items()}
    return tuple(inverse[w] for w in basis)


def closed_form_basis(p: int, q: int, r: int) -> ClosedFormResult:
    """Closed-form metric basis for ``C_{p,q,r}`` in the caller's labeling."""
    landmarks = case_landmarks(p, q, r)
    return ClosedFormResult(
        case=dispatch_case(p, q, r),
        basis=tuple(sorted(landmarks)),
        dimension=len(landmarks),
    )


def dimension_formula(p: int, q: int, r: int) -> int:
    """Predicted metric dimension (2 or 3) from the case dispatch."""
    tag, _, _ = _dispatch(p, q, r)
    return 3 if tag in DIMENSION_THREE_TAGS else 2


def dimension_by_path_lengths(p: int, q: int, r: int) -> int:
    """Redundant dimension predicate on hub-to-hub path lengths.

    Dimension 3 exactly when the three path lengths are all equal, or two
    are equal and the third exceeds them by exactly 2.  Kept independent of
    the case dispatch so a transcription slip in either one shows up as a
    disagreement between the two.
    """
    _require_valid(p, q, r)
    a, b, c = sorted((p + 1, q - 1, r + 1))
    return 3 if (a == b == c) or (a == b and c == a + 2) else 2


_Cell = tuple[int, int, Callable[[int], tuple[int, ...]]]


def _case_table(tag: str, p: int, q: int, r: int) -> list[_Cell]:
    """Partition cells ``(lo, hi, formula)`` of a case, in dispatch labeling.

    Ranges are inclusive and taken literally; a range with lo > hi is empty.
    The formulas substitute the vertex index for A.
    """
    if tag == "ZeroPath-P1":
        return [
            (p, p, lambda A: (1 - A, 2 - A)),
            (p + 1, p + 1, lambda A: (A - 1, 2 - A)),
            (p + 2, p + _ce(q), lambda A: (A - 1, A - 2)),
            (p + _ce(q) + 1, p + _ce(q) + 1, lambda A: (p + q + 1 - A, A - 2)),
            (p + _ce(q) + 2, p + q, lambda A: (p + q + 1 - A, p + q + 1 - A)),
        ]
    if tag == "ZeroPath-P2":
        h = _fl(p)
        return [
            (1, h + 1, lambda A: (A - 1, h + 1 - A)),
            (h + 2, h + 2, lambda A: (A - 1, A - h - 1)),
            (h + 3, p, lambda A: (p + 3 - A, A - h - 1)),
            (p + 1, p + _fl(q), lambda A: (A - p, A + h - p)),
            (p + _ce(q), p + _ce(q), lambda A: (A - p, 2 * p + q - A - h)),
            (p + _ce(q) + 1, p + q, lambda A: (p + q + 2 - A, 2 * p + q - A - h)),
        ]
    if tag == "T1-P1":
        return [
            (1, p - 1, lambda A: (A - 1, A + 1)),
            (p, p, lambda A: (A - 1, p + q - (A + 1))),
            (p + 1, p + 2, lambda A: (A - p, p + 2 - A)),
            (p + 3, p + q - 1, lambda A: (A - p, A - (p + 2))),
            (p + q, p + q, lambda A: (2 * p + q - A, A - (p + 2))),
            (p + q + 1, p + q + r, lambda A: (A + 1 - (p + q), A + 1 - (p + q))),
        ]
    if tag == "T1-P2":
        h = _fl(q - r)
        return [
            (1, p, lambda A: (A - 1, p - A)),
            (p + 1, p + h, lambda A: (A - p, A - 1)),
            (p + 1 + h, p + q - h, lambda A: (A - p, p + q + 1 - A)),
            (p + q + 1 - h, p + q, lambda A: (2 * p + q - A, p + q + 1 - A)),
            (p + q + 1, p + q + r, lambda A: (A + 1 - (p + q), p + q + r + 2 - A)),
        ]
    if tag in ("T1-P3", "T3-P3"):
        m = _fl(p + r)
        h = _fl(q - r)
        k = _fl(p - r)
        return [
            (1, m + 1, lambda A: (A - 1, m + 1 - A)),
            (m + 2, p + 1 - k, lambda A: (A - 1, A - m - 1)),
            (p + 2 - k, p, lambda A: (p + r + 3 - A, A - m - 1)),
            (p + 1, p + h, lambda A: (A - p, A + m - p)),
            (p + 1 + h, p + q - h, lambda A: (A - p, 2 * p + q - m - A)),
            (p + q + 1 - h, p + q, lambda A: (p + q + r + 2 - A, 2 * p + q - m - A)),
            (p + q + 1, p + q + r, lambda A: (A + 1 - (p + q), 2 * p + q + r + 1 - m - A)),
        ]
    if tag == "T2-P1":
        c = _ce(r - q)
        return [
            (1, p, lambda A: (A - 1, p - A)),
            (p + 1, p + q, lambda A: (A - p, p + q + 1 - A)),
            (p + q + 1, p + q + c, lambda A: (A + 1 - (p + q), A - q)),
            (p + q + 1 + c, p + q + r - c, lambda A: (A + 1 - (p + q), p + q + r + 2 - A)),
            (p + q + r + 1 - c, p + q + r, lambda A: (2 * p + q + r + 1 - A, p + q + r + 2 - A)),
        ]
    if tag == "T2-P2":
        return [
            (1, 1, lambda A: (A - 1, 2 - A, A + 1)),
            (2, p - 1, lambda A: (A - 1, A - 2, A + 1)),
            (p, p, lambda A: (A - 1, A - 2, A - 1)),
            (p + 1, p + 1, lambda A: (A - p, A + 1 - p, p + 2 - A)),
            (p + 2, p + q - 1, lambda A: (A - p, A + 1 - p, A - (p + 2))),
            (p + q, p + q, lambda A: (A - p, A - (1 + p), A - (p + 2))),
            (p + q + 1, p + q + r, lambda A: (A + 1 - (p + q), A + 2 - (p + q), A + 1 - (p + q))),
        ]
    if tag == "T2-P3":
        m = _fl(p + r)
        h = _fl(q - r)
        k = _fl(p - r)
        return [
            (1, m + 1, lambda A: (A - 1, 1 + m - A)),
            (m + 2, p + 1 - k, lambda A: (A - 1, A - (1 + m))),
            (p + 2 - k, p, lambda A: (p + r + 3 - A, A - (1 + m))),
            (p + 1, p + k, lambda A: (A - p, A + m - p)),
            (p + 1 + h, p + q - h, lambda A: (A - p, 3 * p - (m + A))),
            (p + q + 1 - h, p + q, lambda A: (p + q + r + 2 - A, 3 * p - (m + A))),
            (p + q + 1, p + q + r, lambda A: (A + 1 - (p + q), 2 * p + q + r + 1 - (m + A))),
        ]
    if tag == "T3-P1":
        m = _fl(p + q)
        return [
            (1, m, lambda A: (A - 1, m - A)),
            (m + 1, p - _ce(p - q), lambda A: (A - 1, A - m)),
            (p + 1 - _ce(p - q), p, lambda A: (p + q + 1 - A, A - m)),
            (p + 1, p + 1, lambda A: (A - p, m)),
            (p + 2, p + q, lambda A: (A - p, 2 * p + q - m - A)),
            (p + q + 1, p + q + 1 + _fl(r - q), lambda A: (A + 1 - (p + q), A + m - (p + q))),
            (p + q + 2 + _fl(r - q), p + q + r - _ce(r - q),
             lambda A: (A + 1 - (p + q), 2 * p + q + r + 2 - (A + m))),
            (p + q + r + 1 - _ce(r - q), p + q + r,
             lambda A: (p + 2 * q + r + 1 - A, 2 * p + q + r + 2 - (A + m))),
        ]
    if tag == "T3-P2":
        m = _fl(p + q)
        k = _fl(p - q)
        return [
            (1, m - 1, lambda A: (A - 1, A + 1)),
            (m, p - k, lambda A: (A - 1, p + q - (A + 1))),
            (p + 1 - k, p, lambda A: (p + q + 1 - A, p + q - (A + 1))),
            (p + 1, p + 1, lambda A: (A - p, p + 2 - A)),
            (p + 2, p + q, lambda A: (A - p, A - (p + 2))),
            (p + q + 1, p + q + r, lambda A: (A + 1 - (p + q), A + 1 - (p + q))),
        ]
    if tag == "T4-P1":
        h = _fl(q - p)
        return [
            (1, 1, lambda A: (A - 1, 2 - A, A + h)),
            (2, p, lambda A: (A - 1, A - 2, A + h)),
            (p + 1, p + 1 + h, lambda A: (A - p, A + 1 - p, p + 1 + h - A)),
            (p + 2 + h, p + q - 1 - h, lambda A: (A - p, A + 1 - p, A - (p + 1 + h))),
            (p + q - h, p + q, lambda A: (2 * p + q - A, 2 * p + q - 1 - A, A - (p + 1 + h))),
            (p + q + 1, p + q + r - 1,
             lambda A: (A + 1 - (p + q), A + 2 - (p + q), A + h - (p + q))),
            (p + q + r, p + q + r,
             lambda A: (A + 1 - (p + q), A - (p + q), A + h - (p + q))),
        ]
    if tag == "T4-P2":
        c = _ce(q - r)
        b = _ce(q - p - 2)
        return [
            (1, p, lambda A: (A - 1, A + 1)),
            (p + 1, p + 1, lambda A: (A - p, p + 2 - A)),
            (p + 2, p + q - c, lambda A: (A - p, A - (p + 2))),
            (p + q + 1 - c, 2 * p + 2 + b, lambda A: (2 * p + q - A, A - (p + 2))),
            (2 * p + 3 + b, p + q, lambda A: (2 * p + q - A, 2 * p + q + 2 - A)),
            (p + q + 1, p + q + r, lambda A: (A + 1 - (p + q), A + 1 - (p + q))),
        ]
    if tag == "T4-P3a":
        return [
            (1, p, lambda A: (A - 1, p - A)),
            (p + 1, p + 1, lambda A: (A - p, p)),
            (p + 2, p + q - 1, lambda A: (A - p, p + q + 1 - A)),
            (p + q, p + q, lambda A: (p, p + q + 1 - A)),
            (p + q + 1, p + q + r, lambda A: (A + 1 - (p + q), p + q + r + 2 - A)),
        ]
    if tag == "T4-P3b":
        m = _fl(p + q)
        k = _fl(p - q)
        return [
            (1, m, lambda A: (A - 1, m - A)),
            (m + 1, p - k, lambda A: (A - 1, A - m)),
            (p + 1 - k, p, lambda A: (p + q + 1 - A, A - m)),
            (p + 1, p + 1, lambda A: (A - p, m)),
            (p + 2, p + q, lambda A: (A - p, p + q + r + 1 - m - A)),
            (p + q + 1, p + q + 1 + _ce(r - q), lambda A: (A + 1 - (p + q), A + m - (p + q))),
            (p + q + 2 + _ce(r - q), p + q + r - _ce(r - q),
             lambda A: (A + 1 - (p + q), 2 * p + q + r + 2 - (A + m))),
            (p + q + r + 1 - _ce(r - q), p + q + r,
             lambda A: (p + 2 * q + r + 1 - A, 2 * p + q + r + 2 - (A + m))),
        ]
    raise ValueError(f"unknown case tag {tag!r}")


def _check_case(p: int, q: int, r: int, case: TheoremCase) -> tuple[str, tuple[int, int, int], bool]:
    dispatched = _dispatch(p, q, r)
    tag, _, swapped = dispatched
    if case.tag != tag or case.swapped != swapped:
        raise InvalidParamsError(
            f"case {case.tag} (swapped={case.swapped}) does not govern "
            f"({p}, {q}, {r}); dispatch gives {tag} (swapped={swapped})"
        )
    return dispatched


def partition_index(p: int, q: int, r: int, case: TheoremCase, v: int) -> int:
    """1-based index of the unique partition cell containing vertex ``v``.

    Raises ``TableLookupError`` when the literal table leaves ``v``
    uncovered or puts it in more than one cell; both defects are recorded
    by the sweep rather than silently patched here.
    """
    tag, (pp, qq, rr), swapped = _check_case(p, q, r, case)
    if not 1 <= v <= p + q + r:
        raise ValueError(f"vertex {v} outside 1..{p + q + r}")
    a = swap_isomorphism(p, q, r)[v] if swapped else v
    hits = [l for l, (lo, hi, _) in enumerate(_case_table(tag, pp, qq, rr), start=1) if lo <= a <= hi]
    if not hits:
        raise TableLookupError("uncovered", v, tag)
    if len(hits) > 1:
        raise TableLookupError("ambiguous", v, tag)
    return hits[0]


def formula_representation(p: int, q: int, r: int, case: TheoremCase, v: int) -> tuple[int, ...]:
    """Table-claimed distance vector of ``v`` to the case landmarks.

    Claims from overlapping cells are accepted when they agree; conflicting
    or missing claims raise ``TableLookupError``.  Compare the result with
    BFS distances to :func:`case_landmarks` — BFS is authoritative.
    """
    tag, (pp, qq, rr), swapped = _check_case(p, q, r, case)
    if not 1 <= v <= p + q + r:
        raise ValueError(f"vertex {v} outside 1..{p + q + r}")
    a = swap_isomorphism(p, q, r)[v] if swapped else v
    claims = {fn(a) for lo, hi, fn in _case_table(tag, pp, qq, rr) if lo <= a <= hi}
    if not claims:
        raise TableLookupError("uncovered", v, tag)
    if len(claims) > 1:
        raise TableLookupError("ambiguous", v, tag)
    return claims.pop()
