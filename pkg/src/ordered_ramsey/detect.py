"""Deterministic detectors: monotone subsequences, ordered cliques, blue
power paths, and the longest blue monotone tight path with its pair table.

Every detector returns the lexicographically smallest witness under the
documented tie-break, so outputs are stable across runs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import (
    BLUE,
    BLUE_POWER_PATH,
    BLUE_TIGHT_PATH,
    RED,
    RED_CLIQUE,
    OrderedColoring,
    Witness,
    pair_rank,
)


def es_monotone_subsequence(seq) -> tuple[list, list]:
    """Maximum-length increasing and decreasing subsequences of a sequence
    of distinct values (earliest-index witnesses).

    On inputs of length (m-1)^2 + 1 the longer of the two has length >= m;
    this is asserted.
    """
    vals = list(seq)
    if len(set(vals)) != len(vals):
        raise ValueError("entries must be distinct")
    m = len(vals)
    if m == 0:
        return [], []

    def longest(greater) -> list:
        ln = [1] * m
        back = [-1] * m
        for i in range(m):
            for j in range(i):
                if greater(vals[i], vals[j]) and ln[j] + 1 > ln[i]:
                    ln[i] = ln[j] + 1
                    back[i] = j
        best = max(range(m), key=lambda i: (ln[i], -i))
        out = []
        while best != -1:
            out.append(vals[best])
            best = back[best]
        out.reverse()
        return out

    inc = longest(lambda a, b: a > b)
    dec = longest(lambda a, b: a < b)
    # length (r-1)^2 + 1 forces a monotone run of r
    side = 1
    while (side - 1) ** 2 + 1 < m:
        side += 1
    if (side - 1) ** 2 + 1 == m:
        assert max(len(inc), len(dec)) >= side
    return inc, dec


def clique_vertices(col: OrderedColoring, s: int, color: int) -> tuple[int, ...] | None:
    """Lexicographically smallest s-clique in the given color class (k = 2)."""
    if col.k != 2:
        raise ValueError("clique detection needs a pair coloring")
    if s < 1:
        raise ValueError("clique size must be >= 1")
    n = col.n
    if s > n:
        return None
    above = col._above_masks[color]
    all_mask = (1 << n) - 1

    def grow(chosen: list[int], cand: int) -> tuple[int, ...] | None:
        if len(chosen) == s:
            return tuple(chosen)
        if len(chosen) + cand.bit_count() < s:
            return None
        m = cand
        while m:
            v = (m & -m).bit_length()
            m &= m - 1
            got = grow(chosen + [v], cand & above[v])
            if got is not None:
                return got
            if len(chosen) + m.bit_count() < s:
                return None
        return None

    return grow([], all_mask)


def detect_red_clique(col: OrderedColoring, s: int) -> Witness | None:
    """Smallest red s-clique, or None (s > N is simply 'none')."""
    found = clique_vertices(col, s, RED)
    if found is None:
        return None
    return Witness(RED_CLIQUE, found)


def detect_power_path(col: OrderedColoring, n: int, t: int, color: int = BLUE) -> Witness | None:
    """Lexicographically smallest monochromatic copy of the power path P_n^t.

    DFS over increasing vertex sequences; the state (window of the last
    min(t, len) vertices, remaining length) determines extendability, so
    failed states are memoized.
    """
    if n < 1:
        raise ValueError("path size must be >= 1")
    if t < 1:
        raise ValueError("power must be >= 1")
    if col.k != 2:
        raise ValueError("power paths live in pair colorings")
    N = col.n
    if n > N:
        return None
    if n == 1:
        # no edges: any single vertex works
        return Witness(BLUE_POWER_PATH, (1,), t)
    above = col._above_masks[color]
    dead: set[tuple[tuple[int, ...], int]] = set()

    def ext(seq: list[int]) -> list[int] | None:
        if len(seq) == n:
            return seq
        window = tuple(seq[-t:])
        key = (window, len(seq))
        if key in dead:
            return None
        cand = (1 << N) - 1 if not seq else ((1 << N) - 1) ^ ((1 << seq[-1]) - 1)
        for p in window:
            cand &= above[p]
        m = cand
        while m:
            w = (m & -m).bit_length()
            m &= m - 1
            got = ext(seq + [w])
            if got is not None:
                return got
        dead.add(key)
        return None

    found = ext([])
    if found is None:
        return None
    return Witness(BLUE_POWER_PATH, tuple(found), t)


def detect_blue_power_path(col: OrderedColoring, n: int, t: int) -> Witness | None:
    return detect_power_path(col, n, t, BLUE)


@dataclass(frozen=True)
class TightPathResult:
    """Longest monochromatic monotone tight path in a triple coloring.

    chi[pair_rank(u, v)] is the vertex count of the longest such path whose
    last two vertices are (u, v); a bare pair counts as 2.
    """

    length: int
    vertices: tuple[int, ...]
    chi: tuple[int, ...]

    def chi_of(self, u: int, v: int) -> int:
        return self.chi[pair_rank(u, v)]


def longest_tight_path(col: OrderedColoring, color: int = BLUE) -> TightPathResult:
    """DP over ordered pairs; ties broken by the smallest last pair and the
    smallest predecessor, so the witness is reproducible."""
    if col.k != 3:
        raise ValueError("tight paths live in triple colorings")
    if col.n < 2:
        raise ValueError("need at least two vertices")
    N = col.n
    npairs = N * (N - 1) // 2
    chi = [2] * npairs
    back = [0] * npairs
    cols = col.colors
    for v in range(2, N + 1):
        vbase = (v - 1) * (v - 2) // 2 - 1
        tbase = (v - 1) * (v - 2) * (v - 3) // 6  # comb(v-1, 3)
        for u in range(2, v):
            ubase = (u - 1) * (u - 2) // 2 - 1
            pidx = vbase + u
            tribase = tbase + (u - 1) * (u - 2) // 2 - 1
            best = 2
            bp = 0
            for x in range(1, u):
                if cols[tribase + x] == color:
                    cand = chi[ubase + x] + 1
                    if cand > best:
                        best = cand
                        bp = x
            chi[pidx] = best
            back[pidx] = bp

    best_len = 2
    best_pair = (1, 2)
    for u in range(1, N + 1):
        for v in range(u + 1, N + 1):
            c = chi[pair_rank(u, v)]
            if c > best_len:
                best_len = c
                best_pair = (u, v)

    path = [best_pair[0], best_pair[1]]
    u, v = best_pair
    while True:
        x = back[pair_rank(u, v)]
        if x == 0:
            break
        path.insert(0, x)
        u, v = x, u
    return TightPathResult(best_len, tuple(path), tuple(chi))


def longest_blue_tight_path(col: OrderedColoring) -> TightPathResult:
    return longest_tight_path(col, BLUE)


def tight_path_witness(res: TightPathResult, n: int) -> Witness:
    """First n vertices of a tight-path result of length >= n."""
    if res.length < n:
        raise ValueError("result is shorter than requested")
    return Witness(BLUE_TIGHT_PATH, res.vertices[:n])
