"""Non-increasing triples and sets over ordered-color pair colorings, the
derived coloring chi, the reduction from triple colorings, and exact
computation of the forcing threshold f(s;q).

A triple u < v < w is non-increasing when chi(u,v) = chi(u,w) >= chi(v,w)
or chi(u,v) >= chi(v,w) = chi(u,w); a set is non-increasing when all its
triples are.  Colors are plain integers compared by natural order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .coloring import (
    BLUE_TIGHT_PATH,
    RED,
    RED_CLIQUE,
    OrderedColoring,
    Witness,
    pair_rank,
)
from .detect import longest_blue_tight_path


@dataclass(frozen=True)
class DerivedColoring:
    """Pair coloring with totally ordered integer colors (not necessarily
    1..q), e.g. the chi table produced from a triple coloring."""

    n: int
    values: tuple[int, ...]
    provenance: str | None = None

    def __post_init__(self):
        if len(self.values) != self.n * (self.n - 1) // 2:
            raise ValueError("value table size does not match vertex count")

    def pair_color(self, u: int, v: int) -> int:
        return self.values[(v - 1) * (v - 2) // 2 + (u - 1)]

    def color_set(self) -> list[int]:
        return sorted(set(self.values))

    def as_ordered_coloring(self) -> OrderedColoring:
        """Shift colors to 1..q (q = max - 1 for chi tables, where the
        minimum value 2 maps to 1)."""
        lo = min(self.values) if self.values else 1
        shifted = tuple(v - lo + 1 for v in self.values)
        q = max(shifted) if shifted else 1
        return OrderedColoring(2, self.n, q, shifted)


def is_nonincreasing_triple(c_uv: int, c_uw: int, c_vw: int) -> bool:
    return (c_uv == c_uw and c_uv >= c_vw) or (c_uv >= c_vw and c_vw == c_uw)


def is_nonincreasing_set(col, S) -> bool:
    """True iff every triple of S is non-increasing (|S| <= 2 is vacuous).

    col is anything with a pair_color(u, v) method.
    """
    verts = sorted(S)
    pc = col.pair_color
    for u, v, w in combinations(verts, 3):
        if not is_nonincreasing_triple(pc(u, v), pc(u, w), pc(v, w)):
            return False
    return True


def find_max_nonincreasing_set(col, target: int | None = None) -> tuple[int, ...] | None:
    """Exact branch-and-bound for a maximum non-increasing set.

    With a target size, returns the lexicographically first set of that size
    (or None).  Without, returns a maximum set (the lexicographically first
    among maximums under the ascending search order).
    """
    N = col.n
    pc = col.pair_color
    if target is not None and target <= 0:
        raise ValueError("target size must be positive")
    best: list[int] = []

    def fits(chosen: list[int], w: int) -> bool:
        k = len(chosen)
        for i in range(k):
            u = chosen[i]
            cuw = pc(u, w)
            for j in range(i + 1, k):
                v = chosen[j]
                if not is_nonincreasing_triple(pc(u, v), cuw, pc(v, w)):
                    return False
        return True

    def grow(chosen: list[int], start: int) -> bool:
        nonlocal best
        if target is not None:
            if len(chosen) == target:
                best = chosen[:]
                return True
        elif len(chosen) > len(best):
            best = chosen[:]
        for w in range(start, N + 1):
            if target is None and len(chosen) + (N - w + 1) <= len(best):
                break  # not enough room left to beat the incumbent
            if fits(chosen, w):
                if grow(chosen + [w], w + 1):
                    return True
        return False

    grow([], 1)
    if target is not None:
        return tuple(best) if len(best) == target else None
    return tuple(best)


def verify_lemma_order(col, S) -> bool:
    """Check the three ordering consequences on a non-increasing set
    S = {v_1 < ... < v_s}:

      (1) chi(v_i, v_j) >= chi(v_j, v_l)   for i < j < l,
      (2) chi(v_{j-1}, v_j) <= chi(v_i, v_j) for i < j,
      (3) chi(v_j, v_{j+1}) >= chi(v_j, v_l) for l > j.
    """
    verts = sorted(S)
    if not is_nonincreasing_set(col, verts):
        raise ValueError("set is not non-increasing")
    pc = col.pair_color
    s = len(verts)
    for j in range(s):
        for i in range(j):
            for l in range(j + 1, s):
                if pc(verts[i], verts[j]) < pc(verts[j], verts[l]):
                    return False
        if j >= 1:
            prev = pc(verts[j - 1], verts[j])
            for i in range(j):
                if prev > pc(verts[i], verts[j]):
                    return False
        if j + 1 < s:
            nxt = pc(verts[j], verts[j + 1])
            for l in range(j + 1, s):
                if nxt < pc(verts[j], verts[l]):
                    return False
    return True


def derive_chi(col: OrderedColoring, provenance: str | None = None) -> DerivedColoring:
    """Pair table of longest-blue-tight-path sizes ending at each pair."""
    if col.k != 3:
        raise ValueError("chi derives from triple colorings")
    if col.q != 2:
        raise ValueError("chi derives from red/blue colorings")
    res = longest_blue_tight_path(col)
    return DerivedColoring(col.n, res.chi, provenance)


def reduce_extract(col: OrderedColoring, s: int, n: int) -> Witness | None:
    """Blue tight path of size n if one exists; otherwise a red triple clique
    found through a non-increasing s-set of the derived chi.

    None means N is below the guarantee threshold, not a failure.
    """
    if col.k != 3 or col.q != 2:
        raise ValueError("reduce extraction needs a red/blue triple coloring")
    if s < 1 or n < 1:
        raise ValueError("pattern sizes must be >= 1")
    res = longest_blue_tight_path(col)
    if res.length >= n:
        return Witness(BLUE_TIGHT_PATH, res.vertices[:n])
    chi = DerivedColoring(col.n, res.chi)
    found = find_max_nonincreasing_set(chi, target=s)
    if found is None:
        return None
    # the guarantee says every triple inside is red; never trust, re-check
    for u, v, w in combinations(found, 3):
        if col.triple_color(u, v, w) != RED:
            raise AssertionError(
                f"non-increasing set {found} has a non-red triple ({u},{v},{w})"
            )
    return Witness(RED_CLIQUE, found)


@dataclass(frozen=True)
class FExactResult:
    """Outcome of the exact f(s;q) computation."""

    status: str  # "resolved" | "unresolved"
    value: int | None
    certificate: OrderedColoring | None  # extremal coloring on value-1 vertices
    nodes: int
    searched_up_to: int

    @property
    def resolved(self) -> bool:
        return self.status == "resolved"


def _avoiding_coloring(N: int, s: int, q: int, budget) -> tuple[tuple[int, ...] | None, int, bool]:
    """Backtracking search for a q-coloring of pairs of [N] with no
    non-increasing s-set.  Returns (colors or None, nodes used, exhausted)."""
    npairs = N * (N - 1) // 2
    order = [(u, v) for v in range(2, N + 1) for u in range(1, v)]  # colex
    col = [0] * npairs
    nodes = 0
    limit = budget if budget is not None else -1

    def completes_forbidden(u: int, v: int) -> bool:
        vbase = (v - 1) * (v - 2) // 2 - 1
        c = col[vbase + u]
        for x in range(1, u):
            a = col[(u - 1) * (u - 2) // 2 + x - 1]  # chi(x, u)
            b = col[vbase + x]  # chi(x, v)
            if not ((a == b and a >= c) or (a >= c and c == b)):
                continue
            if s == 3:
                return True
            if _extend_noninc(col, [x, u, v], u - 1, s - 3, x):
                return True
        return False

    def rec(i: int) -> tuple[bool, bool]:
        """Returns (found, within_budget)."""
        nonlocal nodes
        if i == npairs:
            return True, True
        u, v = order[i]
        base = (v - 1) * (v - 2) // 2 - 1
        for c in range(1, q + 1):
            nodes += 1
            if limit >= 0 and nodes > limit:
                return False, False
            col[base + u] = c
            if not completes_forbidden(u, v):
                found, ok = rec(i + 1)
                if found or not ok:
                    return found, ok
            col[base + u] = 0
        return False, True

    found, ok = rec(0)
    if found:
        return tuple(col), nodes, True
    return None, nodes, ok


def _extend_noninc(col, members: list[int], top: int, need: int, skip: int) -> bool:
    """Can `members` (all pairwise-complete in col) be extended by `need`
    vertices from 1..top (excluding skip) keeping every triple non-increasing?"""
    if need == 0:
        return True
    for w in range(top, 0, -1):
        if w == skip or w in members:
            continue
        ok = True
        ms = sorted(members + [w])
        for a, b, c in combinations(ms, 3):
            if w not in (a, b, c):
                continue
            ca = col[(b - 1) * (b - 2) // 2 + a - 1]
            cb = col[(c - 1) * (c - 2) // 2 + a - 1]
            cc = col[(c - 1) * (c - 2) // 2 + b - 1]
            if not ((ca == cb and ca >= cc) or (ca >= cc and cc == cb)):
                ok = False
                break
        if ok and _extend_noninc(col, members + [w], w - 1, need - 1, skip):
            return True
    return False


def f_exact(s: int, q: int, n_max: int, budget: int | None = None) -> FExactResult:
    """Least N <= n_max forcing a non-increasing s-set in every q-coloring
    of the pairs of [N], with an extremal certificate at N-1.

    Unresolved (budget or n_max exhausted) is a first-class outcome.
    """
    if s < 3:
        raise ValueError("set size must be >= 3")
    if q < 1:
        raise ValueError("need at least one color")
    total_nodes = 0
    certificate: OrderedColoring | None = None
    for N in range(max(s - 1, 2), n_max + 1):
        remaining = None if budget is None else budget - total_nodes
        if remaining is not None and remaining <= 0:
            return FExactResult("unresolved", None, certificate, total_nodes, N - 1)
        colors, nodes, exhausted = _avoiding_coloring(N, s, q, remaining)
        total_nodes += nodes
        if colors is not None:
            certificate = OrderedColoring(2, N, q, colors)
            continue
        if not exhausted:
            return FExactResult("unresolved", None, certificate, total_nodes, N - 1)
        return FExactResult("resolved", N, certificate, total_nodes, N)
    return FExactResult("unresolved", None, certificate, total_nodes, n_max)
