"""Constructive witness extractors: the layered increasing-path argument for
cliques vs. paths, two recursive clique-vs-power-path extractors, and the
universal witness validator.

Extractors return None ("not found") only below the scale where the
corresponding guarantee applies; with the brute-force fallback active they
find a witness whenever one exists at all.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

from .coloring import (
    BLUE,
    BLUE_POWER_PATH,
    BLUE_TIGHT_PATH,
    NONINCREASING_SET,
    RED,
    RED_CLIQUE,
    OrderedColoring,
    PatternSpec,
    Witness,
)
from .detect import clique_vertices, detect_power_path, detect_red_clique
from .nonincreasing import is_nonincreasing_set

# below this many vertices the recursive extractors just run the exact
# detectors; affects performance only, never validity
BRUTE_FORCE_CUTOFF = 24


def validate_witness(col, spec: PatternSpec, w: Witness) -> bool:
    """Check the witness invariants against the coloring and pattern spec.

    Accepts any coloring exposing pair_color / triple_color as appropriate
    for the witness kind; every extractor output must pass this.
    """
    verts = w.vertices
    if not verts:
        return False
    if any(not (1 <= v <= col.n) for v in verts):
        return False
    if any(verts[i] >= verts[i + 1] for i in range(len(verts) - 1)):
        return False

    if w.kind == RED_CLIQUE:
        if len(verts) < spec.s:
            return False
        if getattr(col, "k", None) == 3:
            return all(col.triple_color(u, v, x) == RED for u, v, x in combinations(verts, 3))
        return all(col.pair_color(u, v) == RED for u, v in combinations(verts, 2))

    if w.kind == BLUE_POWER_PATH:
        if spec.k != 2 or getattr(col, "k", None) != 2:
            return False
        if w.t is not None and w.t != spec.t:
            return False
        if len(verts) < spec.n:
            return False
        t = spec.t
        for i in range(len(verts)):
            for j in range(i + 1, min(i + t, len(verts) - 1) + 1):
                if col.pair_color(verts[i], verts[j]) != BLUE:
                    return False
        return True

    if w.kind == BLUE_TIGHT_PATH:
        if spec.k != 3 or getattr(col, "k", None) != 3:
            return False
        if len(verts) < spec.n:
            return False
        return all(
            col.triple_color(verts[i], verts[i + 1], verts[i + 2]) == BLUE
            for i in range(len(verts) - 2)
        )

    if w.kind == NONINCREASING_SET:
        if len(verts) < spec.s:
            return False
        if getattr(col, "k", 2) == 3:
            return False
        return is_nonincreasing_set(col, verts)

    return False


def _brute(col: OrderedColoring, s: int, n: int, t: int) -> Witness | None:
    """Exact fallback: red clique first, then blue power path."""
    w = detect_red_clique(col, s)
    if w is not None:
        return w
    return detect_power_path(col, n, t, BLUE)


def extract_dilworth(col: OrderedColoring, s: int, n: int) -> Witness | None:
    """Layered extractor for red K_s vs. blue increasing path P_n (t = 1).

    Computes L(v) = size of the longest blue increasing path ending at v.
    Either some L reaches n (blue path, reconstructed by back-pointers) or
    the <= n-1 level classes partition the vertices; levels are pairwise
    red, so a class of size >= s is a red clique.  Never returns None for
    N >= (s-1)(n-1)+1.
    """
    if col.k != 2 or col.q != 2:
        raise ValueError("needs a red/blue pair coloring")
    if s < 1 or n < 1:
        raise ValueError("pattern sizes must be >= 1")
    N = col.n
    blue_below = col._below_masks[BLUE]

    L = [0] * (N + 1)
    for v in range(1, N + 1):
        best = 0
        m = blue_below[v]
        while m:
            u = (m & -m).bit_length()
            m &= m - 1
            if L[u] > best:
                best = L[u]
        L[v] = best + 1

    if max(L[1:], default=0) >= n:
        # smallest endpoint then smallest predecessors
        v = next(x for x in range(1, N + 1) if L[x] == n)
        path = [v]
        need = n - 1
        while need:
            m = blue_below[path[0]]
            while m:
                u = (m & -m).bit_length()
                m &= m - 1
                if L[u] == need:
                    path.insert(0, u)
                    break
            need -= 1
        return Witness(BLUE_POWER_PATH, tuple(path), 1)

    classes: dict[int, list[int]] = {}
    for v in range(1, N + 1):
        classes.setdefault(L[v], []).append(v)
    for level in sorted(classes):
        members = classes[level]
        # two vertices on one level cannot share a blue edge
        for u, v in combinations(members, 2):
            if col.pair_color(u, v) != RED:
                raise AssertionError(f"level {level} vertices {u},{v} not red")
        if len(members) >= s:
            return Witness(RED_CLIQUE, tuple(members[:s]))
    return None


def _map_back(w: Witness, orig: tuple[int, ...]) -> Witness:
    return Witness(w.kind, tuple(orig[v - 1] for v in w.vertices), w.t)


def extract_main1(
    col: OrderedColoring, s: int, n: int, t: int, brute_cutoff: int = BRUTE_FORCE_CUTOFF
) -> Witness | None:
    """Recursive clique-vs-power-path extractor (midpoint split).

    Finds a blue t-clique in a block U of binom(s+t, t) vertices after the
    midpoint (or a red K_s there), prunes vertices red-adjacent to the
    clique, recurses into red neighborhoods with clique target s-1 and into
    both pruned halves with path target floor(n/2), and concatenates
    half-paths around the blue clique.  All candidates are validated; on
    failure the exact detectors take over.
    """
    if col.k != 2 or col.q != 2:
        raise ValueError("needs a red/blue pair coloring")
    if t < 1 or s < 1 or n < 1:
        raise ValueError("pattern sizes must be >= 1")
    if t > s:
        raise ValueError("power must not exceed the clique size")
    N = col.n
    spec = PatternSpec(2, s, n, t)
    u_block = comb(s + t, t)
    if s <= 2 or n <= t + 1 or N <= brute_cutoff or N // 2 + u_block >= N:
        return _brute(col, s, n, t)

    half = N // 2
    block = list(range(half + 1, half + u_block + 1))
    sub_u, orig_u = col.induced(block)

    red_in_u = detect_red_clique(sub_u, s)
    if red_in_u is not None:
        cand = _map_back(red_in_u, orig_u)
        if validate_witness(col, spec, cand):
            return cand
        return _brute(col, s, n, t)

    blue_clique = clique_vertices(sub_u, t, BLUE)
    if blue_clique is None:
        # cannot happen for |U| = binom(s+t,t) > r(K_s, K_t); stay safe
        return _brute(col, s, n, t)
    anchors = [orig_u[v - 1] for v in blue_clique]

    # red neighborhoods: a red K_{s-1} inside one of them closes a red K_s
    for a in anchors:
        nbrs = [v for v in range(1, N + 1) if v != a
                and col.pair_color(min(a, v), max(a, v)) == RED]
        if len(nbrs) < s - 1:
            continue
        sub_r, orig_r = col.induced(nbrs)
        if t <= s - 1:
            got = extract_main1(sub_r, s - 1, n, t, brute_cutoff)
        else:
            got = _brute(sub_r, s - 1, n, t)
        if got is None:
            continue
        if got.kind == RED_CLIQUE:
            verts = sorted(orig_r[v - 1] for v in got.vertices[: s - 1])
            cand = Witness(RED_CLIQUE, tuple(sorted(verts + [a])))
            if validate_witness(col, spec, cand):
                return cand
        else:
            cand = _map_back(got, orig_r)
            if validate_witness(col, spec, cand):
                return cand

    pruned = set()
    for a in anchors:
        for v in range(1, N + 1):
            if v != a and col.pair_color(min(a, v), max(a, v)) == RED:
                pruned.add(v)

    halves = []
    for lo, hi in ((1, half), (half + u_block + 1, N)):
        part = [v for v in range(lo, hi + 1) if v not in pruned]
        if not part:
            return _brute(col, s, n, t)
        sub_h, orig_h = col.induced(part)
        got = extract_main1(sub_h, s, n // 2, t, brute_cutoff)
        if got is None:
            return _brute(col, s, n, t)
        if got.kind == RED_CLIQUE:
            cand = _map_back(got, orig_h)
            if validate_witness(col, spec, cand):
                return cand
            return _brute(col, s, n, t)
        halves.append([orig_h[v - 1] for v in got.vertices])

    combined = halves[0] + anchors + halves[1]
    cand = Witness(BLUE_POWER_PATH, tuple(combined), t)
    # the concatenation must be blue on every within-window pair; check, not hope
    if validate_witness(col, spec, cand):
        return cand
    return _brute(col, s, n, t)


def extract_main2(
    col: OrderedColoring, s: int, n: int, t: int, brute_cutoff: int = BRUTE_FORCE_CUTOFF
) -> Witness | None:
    """Recursive extractor keyed on middle sets of blue (t+1)-cliques (t >= 2).

    Buckets blue K_{t+1} copies by their middle t-1 vertices Y, picks the
    most popular Y, and recurses on the first-vertex and last-vertex sets
    (all edges to Y blue) with path target floor(n/2)+1.  The two half-paths
    are joined around Y; the single window-t pair crossing the Y block is
    not guaranteed blue, so the join is repaired by trimming path ends until
    a blue crossing pair appears (the extra length buys the slack).  Falls
    back to the exact detectors when the join cannot be repaired.
    """
    if col.k != 2 or col.q != 2:
        raise ValueError("needs a red/blue pair coloring")
    if t < 2:
        raise ValueError("power must be >= 2 here (t = 1 belongs to the layered extractor)")
    if s < 1 or n < 1:
        raise ValueError("pattern sizes must be >= 1")
    N = col.n
    spec = PatternSpec(2, s, n, t)
    if s <= 2 or n <= t + 1 or N <= brute_cutoff:
        return _brute(col, s, n, t)

    red_w = detect_red_clique(col, s)
    if red_w is not None:
        return red_w

    # enumerate blue (t+1)-cliques, bucketed by middle (t-1)-set
    above_blue = col._above_masks[BLUE]
    buckets: dict[tuple[int, ...], tuple[set[int], set[int], int]] = {}

    def collect(chosen: list[int], cand: int):
        if len(chosen) == t + 1:
            mid = tuple(chosen[1:-1])
            firsts, lasts, cnt = buckets.get(mid, (set(), set(), 0))
            firsts.add(chosen[0])
            lasts.add(chosen[-1])
            buckets[mid] = (firsts, lasts, cnt + 1)
            return
        m = cand
        while m:
            v = (m & -m).bit_length()
            m &= m - 1
            collect(chosen + [v], cand & above_blue[v])

    collect([], (1 << N) - 1)
    if not buckets:
        return _brute(col, s, n, t)

    mid = max(buckets, key=lambda y: (buckets[y][2], tuple(-x for x in y)))
    firsts, lasts, _ = buckets[mid]
    target = n // 2 + 1

    halves = []
    for part in (sorted(firsts), sorted(lasts)):
        sub_h, orig_h = col.induced(part)
        got = extract_main2(sub_h, s, target, t, brute_cutoff)
        if got is None:
            return _brute(col, s, n, t)
        if got.kind == RED_CLIQUE:
            cand = _map_back(got, orig_h)
            if validate_witness(col, spec, cand):
                return cand
            return _brute(col, s, n, t)
        halves.append([orig_h[v - 1] for v in got.vertices])

    p1, p2 = halves
    y = list(mid)
    # only the pair (last kept of p1, first kept of p2) sits at window
    # distance exactly t; trim until that crossing pair is blue
    max_trim = len(p1) + len(p2) + t - 1 - n
    for total in range(0, max_trim + 1):
        for i in range(0, total + 1):
            j = total - i
            if i >= len(p1) or j >= len(p2):
                continue
            a = p1[len(p1) - 1 - i]
            b = p2[j]
            if col.pair_color(a, b) != BLUE:
                continue
            combined = p1[: len(p1) - i] + y + p2[j:]
            cand = Witness(BLUE_POWER_PATH, tuple(combined), t)
            if validate_witness(col, spec, cand):
                return cand
    return _brute(col, s, n, t)
