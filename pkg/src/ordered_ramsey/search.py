"""Exact small-case ordered Ramsey computation, extremal generators, CNF
export, and closed-form bound evaluators.

decide_avoidable answers "is there a red/blue coloring of the k-subsets of
[N] avoiding both patterns?" by colex backtracking with incremental pattern
checks.  Avoidable answers always carry a detector-verified certificate;
Unavoidable means the (soundly pruned) tree was exhausted; Unresolved means
the node budget ran out.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, factorial

from .coloring import (
    BLUE,
    RED,
    OrderedColoring,
    PatternSpec,
    pair_rank,
    subset_rank,
)
from .detect import clique_vertices, detect_power_path, longest_tight_path

AVOIDABLE = "avoidable"
UNAVOIDABLE = "unavoidable"
UNRESOLVED = "unresolved"

DEFAULT_N_MAX = 50


@dataclass(frozen=True)
class Decision:
    status: str
    certificate: OrderedColoring | None
    nodes: int


@dataclass
class SearchOutcome:
    """Per-N verdicts for one pattern spec plus the bracketed exact value."""

    spec: PatternSpec
    verdicts: dict[int, Decision]
    exact_value: int | None


class _BudgetExceeded(Exception):
    pass


# -- pattern presence ------------------------------------------------------


def hyperclique_vertices(col: OrderedColoring, s: int, color: int) -> tuple[int, ...] | None:
    """Lexicographically smallest s-set with every triple in the given color."""
    if col.k != 3:
        raise ValueError("needs a triple coloring")
    N = col.n
    if s > N:
        return None
    if s <= 2:
        return tuple(range(1, s + 1))

    def grow(chosen: list[int], start: int) -> tuple[int, ...] | None:
        if len(chosen) == s:
            return tuple(chosen)
        for w in range(start, N + 1):
            if len(chosen) + (N - w + 1) < s:
                return None
            ok = True
            for a, b in combinations(chosen, 2):
                if col.triple_color(a, b, w) != color:
                    ok = False
                    break
            if ok:
                got = grow(chosen + [w], w + 1)
                if got is not None:
                    return got
        return None

    return grow([], 1)


def coloring_avoids(spec: PatternSpec, col: OrderedColoring) -> bool:
    """True iff the coloring contains neither the red nor the blue pattern."""
    if col.k != spec.k:
        raise ValueError("coloring uniformity does not match the spec")
    N = col.n
    s, n, t = spec.s, spec.n, spec.t
    if spec.k == 2:
        if spec.red == "clique":
            if clique_vertices(col, s, RED) is not None:
                return False
        else:
            if detect_power_path(col, s, t, RED) is not None:
                return False
        if detect_power_path(col, n, t, BLUE) is not None:
            return False
        return True
    # k == 3
    if spec.red == "clique":
        if s <= 2:
            if N >= s:
                return False
        elif hyperclique_vertices(col, s, RED) is not None:
            return False
    else:
        if s <= 2:
            if N >= s:
                return False
        elif N >= 2 and longest_tight_path(col, RED).length >= s:
            return False
    if n <= 2:
        if N >= n:
            return False
    elif N >= 2 and longest_tight_path(col, BLUE).length >= n:
        return False
    return True


# -- extremal generators ---------------------------------------------------


@lru_cache(maxsize=None)
def gen_extremal_block(s: int, n: int) -> OrderedColoring:
    """Blocked coloring on (s-1)(n-1) vertices: s-1 consecutive blocks of
    n-1 vertices, pairs blue inside a block and red across blocks.

    Pigeonhole puts two clique vertices in one (blue) block, and blue edges
    never leave a block of n-1 vertices, so neither pattern appears; the
    postcondition is verified, not assumed.
    """
    if s < 2 or n < 2:
        raise ValueError("need s, n >= 2")
    N = (s - 1) * (n - 1)
    colors = []
    for v in range(2, N + 1):
        for u in range(1, v):
            same = (u - 1) // (n - 1) == (v - 1) // (n - 1)
            colors.append(BLUE if same else RED)
    col = OrderedColoring(2, N, 2, tuple(colors))
    if not coloring_avoids(PatternSpec(2, s, n, 1), col):
        raise AssertionError(f"block construction for ({s},{n}) failed verification")
    return col


def _stacked_points(a: int, b: int) -> list[tuple[int, int]]:
    """Integer point set with no a-cup and no b-cap, of size C(a+b-4, a-2).

    Base chains are parabola arcs; the recursive step places the (a, b-1)
    set right of and far above the (a-1, b) set so that every cross slope
    exceeds every slope inside either part.  Then a cup crossing the parts
    keeps at most one right point and a cap at most one left point.
    """
    if a == 3:
        return [(i, -i * i) for i in range(b - 1)]
    if b == 3:
        return [(i, i * i) for i in range(a - 1)]
    left = _stacked_points(a - 1, b)
    right = _stacked_points(a, b - 1)

    def slopes(pts):
        out = []
        for (x1, y1), (x2, y2) in combinations(pts, 2):
            out.append(Fraction(y2 - y1, x2 - x1))
        return out

    all_slopes = slopes(left) + slopes(right)
    slope_cap = max(all_slopes) if all_slopes else Fraction(0)
    dx = left[-1][0] - right[0][0] + 1  # right part starts one unit past the left
    width = left[-1][0] + dx + (right[-1][0] - right[0][0]) - left[0][0]
    max_y_left = max(y for _, y in left)
    min_y_right = min(y for _, y in right)
    dy = math.floor(slope_cap * width) + 1 + max_y_left - min_y_right
    shifted = [(x + dx, y + dy) for x, y in right]
    return left + shifted


@lru_cache(maxsize=None)
def gen_extremal_cupscaps(s: int, n: int) -> OrderedColoring:
    """Triple coloring on C(s+n-4, s-2) vertices with no red monotone tight
    path of size s and no blue one of size n.

    Vertices are points of a classical no-cup/no-cap set in x-order; a
    triple is red when it forms a cup (middle point below the chord) and
    blue when a cap.  A monotone sequence whose consecutive triples are all
    cups is a cup outright, so the detector-verified postcondition follows
    from the point set.  Any exact coordinate scheme would do.
    """
    if s < 3 or n < 3:
        raise ValueError("need s, n >= 3")
    pts = _stacked_points(s, n)
    N = len(pts)
    if N != comb(s + n - 4, s - 2):
        raise AssertionError("point set has the wrong size")
    colors = []
    for w in range(2, N):
        for v in range(1, w):
            for u in range(0, v):
                x1, y1 = pts[u]
                x2, y2 = pts[v]
                x3, y3 = pts[w]
                cross = (x2 - x1) * (y3 - y1) - (y2 - y1) * (x3 - x1)
                if cross == 0:
                    raise AssertionError(f"collinear points {u + 1},{v + 1},{w + 1}")
                colors.append(RED if cross > 0 else BLUE)
    col = OrderedColoring(3, N, 2, tuple(colors))
    if not coloring_avoids(PatternSpec(3, s, n, red="path"), col):
        raise AssertionError(f"cups-caps construction for ({s},{n}) failed verification")
    return col


# -- the exact decision procedure -------------------------------------------


def _pattern_edge_free(spec: PatternSpec, side: str) -> bool:
    """Does the red/blue pattern have no edges (present on any vertex set)?

    Both K_s and P_s on s vertices have their first edge at s = k.
    """
    return (spec.s if side == "red" else spec.n) < spec.k


def _seed_colorings(spec: PatternSpec, N: int):
    """Cheap construction-based candidates for the avoidable side."""
    s, n = spec.s, spec.n
    if spec.k == 2 and spec.red == "clique" and s >= 2 and n >= 2:
        base = gen_extremal_block(s, n)
        if base.n >= N:
            yield base.induced(range(1, N + 1))[0]
    if spec.k == 3 and s >= 3 and n >= 3:
        base = gen_extremal_cupscaps(s, n)
        if base.n >= N:
            yield base.induced(range(1, N + 1))[0]


def _mask_clique(mask: int, size: int, above: list[int]) -> bool:
    """Does `mask` contain `size` vertices that are pairwise adjacent
    (adjacency given by per-vertex above-masks)?"""
    if size == 0:
        return True
    if mask.bit_count() < size:
        return False
    m = mask
    while m:
        v = (m & -m).bit_length()
        m &= m - 1
        if _mask_clique(mask & above[v], size - 1, above):
            return True
        if m.bit_count() < size:
            return False
    return False


def _search_k2(spec: PatternSpec, N: int, budget: int | None) -> Decision:
    s, n, t = spec.s, spec.n, spec.t
    red_is_path = spec.red == "path"
    M = N * (N - 1) // 2
    order = [(u, v) for v in range(2, N + 1) for u in range(1, v)]
    colors = [0] * M
    below = {RED: [0] * (N + 1), BLUE: [0] * (N + 1)}
    above = {RED: [0] * (N + 1), BLUE: [0] * (N + 1)}
    nodes = 0

    # per-color monotone path state; target size per color (None = clique side)
    path_target = {BLUE: n, RED: s if red_is_path else None}
    lvals = {c: [0] * (N + 1) for c in (RED, BLUE)}  # t == 1
    lp = {c: [0] * M for c in (RED, BLUE)}  # t == 2

    def completes_clique(u: int, v: int, color: int) -> bool:
        if s == 2:
            return True
        cand = below[color][u] & below[color][v]
        return _mask_clique(cand, s - 2, above[color])

    def path_value_t2(u: int, v: int, color: int) -> int:
        best = 2
        m = below[color][u] & below[color][v]
        table = lp[color]
        ubase = (u - 1) * (u - 2) // 2 - 1
        while m:
            x = (m & -m).bit_length()
            m &= m - 1
            val = table[ubase + x] + 1
            if val > best:
                best = val
        return best

    def prefix_power_path(v: int, color: int, target: int) -> bool:
        # exact check on the fully colored prefix [1..v]; used for t >= 3
        dead: set[tuple[tuple[int, ...], int]] = set()
        ab = above[color]
        full = (1 << v) - 1

        def ext(seq: tuple[int, ...]) -> bool:
            if len(seq) == target:
                return True
            window = seq[-t:]
            key = (window, len(seq))
            if key in dead:
                return False
            cand = full if not seq else full ^ ((1 << seq[-1]) - 1)
            for p in window:
                cand &= ab[p]
            m = cand
            while m:
                w = (m & -m).bit_length()
                m &= m - 1
                if ext(seq + (w,)):
                    return True
            dead.add(key)
            return False

        return ext(())

    def assign(i: int) -> bool:
        nonlocal nodes
        if i == M:
            return True
        u, v = order[i]
        ubit = 1 << (u - 1)
        vbit = 1 << (v - 1)
        completes_vertex = u == v - 1  # last pair ending at v
        for c in (RED, BLUE):
            nodes += 1
            if budget is not None and nodes > budget:
                raise _BudgetExceeded
            # incremental checks: does this color complete a forbidden copy?
            if path_target[c] is None:
                if completes_clique(u, v, c):
                    continue
            elif t == 2:
                val = path_value_t2(u, v, c)
                if val >= path_target[c]:
                    continue
                lp[c][i] = val
            colors[i] = c
            below[c][v] |= ubit
            above[c][u] |= vbit
            bad = False
            if completes_vertex:
                for pc, target in path_target.items():
                    if target is None:
                        continue
                    if t == 1:
                        best = 0
                        m = below[pc][v]
                        lv = lvals[pc]
                        while m:
                            x = (m & -m).bit_length()
                            m &= m - 1
                            if lv[x] > best:
                                best = lv[x]
                        lvals[pc][v] = best + 1
                        if best + 1 >= target:
                            bad = True
                            break
                    elif t >= 3:
                        if prefix_power_path(v, pc, target):
                            bad = True
                            break
            if not bad and assign(i + 1):
                return True
            colors[i] = 0
            below[c][v] &= ~ubit
            above[c][u] &= ~vbit
            if t == 2:
                lp[c][i] = 0
            if completes_vertex:
                lvals[RED][v] = 0
                lvals[BLUE][v] = 0
        return False

    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * M + 100))
    try:
        found = assign(0)
    except _BudgetExceeded:
        return Decision(UNRESOLVED, None, nodes)
    if not found:
        return Decision(UNAVOIDABLE, None, nodes)
    cert = OrderedColoring(2, N, 2, tuple(colors))
    if not coloring_avoids(spec, cert):
        raise AssertionError("search produced a certificate that fails detector verification")
    return Decision(AVOIDABLE, cert, nodes)


def _search_k3(spec: PatternSpec, N: int, budget: int | None) -> Decision:
    s, n = spec.s, spec.n
    red_is_path = spec.red == "path"
    M = comb(N, 3)
    order = [(u, v, w) for w in range(3, N + 1) for v in range(2, w) for u in range(1, v)]
    colors = [0] * M
    npairs = N * (N - 1) // 2
    chi = {RED: [2] * npairs, BLUE: [2] * npairs}
    path_target = {BLUE: n, RED: s if red_is_path else None}
    nodes = 0

    def triple_color_local(a: int, b: int, c: int) -> int:
        return colors[comb(c - 1, 3) + (b - 1) * (b - 2) // 2 + (a - 1)]

    def completes_hyperclique(u: int, v: int, w: int, color: int) -> bool:
        # a monochromatic s-set completes exactly when its top triple is
        # assigned; the remaining s-3 vertices all sit below u
        if s <= 3:
            return s == 3

        def grow(members: list[int], top: int, need: int) -> bool:
            if need == 0:
                return True
            if top < need:
                return False
            for x in range(top, 0, -1):
                ok = True
                for a, b in combinations(members, 2):
                    xs = tuple(sorted((x, a, b)))
                    if triple_color_local(*xs) != color:
                        ok = False
                        break
                if ok and grow(sorted(members + [x]), x - 1, need - 1):
                    return True
            return False

        return grow([u, v, w], u - 1, s - 3)

    def assign(i: int) -> bool:
        nonlocal nodes
        if i == M:
            return True
        u, v, w = order[i]
        p_uv = (v - 1) * (v - 2) // 2 + (u - 1)
        p_vw = (w - 1) * (w - 2) // 2 + (v - 1)
        for c in (RED, BLUE):
            nodes += 1
            if budget is not None and nodes > budget:
                raise _BudgetExceeded
            colors[i] = c
            bad = False
            touched = None
            target = path_target[c]
            if target is not None:
                cand = chi[c][p_uv] + 1
                if cand >= target and target >= 3:
                    bad = True
                elif cand > chi[c][p_vw]:
                    touched = chi[c][p_vw]
                    chi[c][p_vw] = cand
            if not bad and target is None and completes_hyperclique(u, v, w, c):
                bad = True
            if not bad and assign(i + 1):
                return True
            if touched is not None:
                chi[c][p_vw] = touched
            colors[i] = 0
        return False

    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * M + 100))
    try:
        found = assign(0)
    except _BudgetExceeded:
        return Decision(UNRESOLVED, None, nodes)
    if not found:
        return Decision(UNAVOIDABLE, None, nodes)
    cert = OrderedColoring(3, N, 2, tuple(colors))
    if not coloring_avoids(spec, cert):
        raise AssertionError("search produced a certificate that fails detector verification")
    return Decision(AVOIDABLE, cert, nodes)


def decide_avoidable(
    spec: PatternSpec,
    N: int,
    budget: int | None = None,
    use_seeds: bool = True,
    use_bound_rules: bool = True,
) -> Decision:
    """Decide whether some red/blue coloring of the k-subsets of [N] avoids
    both patterns of the spec.

    use_seeds tries the extremal constructions as instant certificates;
    use_bound_rules applies the sound layered counting bound for (k=2, t=1)
    cliques-vs-paths.  Both affect speed only, never the verdict.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    s, n = spec.s, spec.n
    # patterns without edges are present on any large enough vertex set
    if _pattern_edge_free(spec, "red") and N >= s:
        return Decision(UNAVOIDABLE, None, 0)
    if _pattern_edge_free(spec, "blue") and N >= n:
        return Decision(UNAVOIDABLE, None, 0)
    if (
        use_bound_rules
        and spec.k == 2
        and spec.t == 1
        and spec.red == "clique"
        and N > (s - 1) * (n - 1)
    ):
        # layering by longest-blue-path-length partitions any avoiding
        # coloring into <= n-1 pairwise-red classes of size <= s-1
        return Decision(UNAVOIDABLE, None, 0)
    if use_seeds:
        for cand in _seed_colorings(spec, N):
            if coloring_avoids(spec, cand):
                return Decision(AVOIDABLE, cand, 0)
    if spec.k == 2:
        return _search_k2(spec, N, budget)
    return _search_k3(spec, N, budget)


def ramsey_exact(
    spec: PatternSpec,
    n_max: int = DEFAULT_N_MAX,
    budget: int | None = None,
    use_seeds: bool = True,
    use_bound_rules: bool = True,
) -> SearchOutcome:
    """Run decide_avoidable for ascending N; stop at the first Unavoidable.

    exact_value is the least unavoidable N (bracketed by an avoidable N-1
    whenever N > 1); Unresolved verdicts propagate and leave it unset.
    """
    verdicts: dict[int, Decision] = {}
    exact = None
    for N in range(1, n_max + 1):
        d = decide_avoidable(spec, N, budget, use_seeds, use_bound_rules)
        verdicts[N] = d
        if d.status == UNRESOLVED:
            break
        if d.status == UNAVOIDABLE:
            exact = N
            break
    return SearchOutcome(spec, verdicts, exact)


# -- CNF export -------------------------------------------------------------


def export_cnf(spec: PatternSpec, N: int) -> str:
    """DIMACS encoding: variable i+1 is the k-subset at colex rank i, true
    means blue.  s-subsets contribute positive clauses (not all red) and
    increasing n-sequences negative clauses over their required edges (not
    all blue).  Satisfiable iff decide_avoidable says Avoidable.
    """
    k, s, n, t = spec.k, spec.s, spec.n, spec.t
    nvars = comb(N, k)
    clauses: list[list[int]] = []
    red_size = s
    for S in combinations(range(1, N + 1), red_size):
        if spec.red == "clique":
            edges = list(combinations(S, k))
        elif k == 2:
            edges = [
                (S[i], S[j])
                for i in range(len(S))
                for j in range(i + 1, min(i + t, len(S) - 1) + 1)
            ]
        else:
            edges = [S[i : i + 3] for i in range(len(S) - 2)]
        clauses.append([subset_rank(e) + 1 for e in edges])
    for S in combinations(range(1, N + 1), n):
        if k == 2:
            edges = [
                (S[i], S[j])
                for i in range(len(S))
                for j in range(i + 1, min(i + t, len(S) - 1) + 1)
            ]
        else:
            edges = [S[i : i + 3] for i in range(len(S) - 2)]
        clauses.append([-(subset_rank(e) + 1) for e in edges])
    lines = [f"p cnf {nvars} {len(clauses)}"]
    for cl in clauses:
        lines.append(" ".join(str(x) for x in cl) + " 0")
    return "\n".join(lines) + "\n"


def cnf_satisfiable(text: str) -> tuple[bool, tuple[int, ...] | None]:
    """Plain backtracking satisfiability for the exported instances.

    Returns (satisfiable, model) with the model as the tuple of true
    variables.  No external solver involved.
    """
    nvars = 0
    clauses: list[list[int]] = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            nvars = int(parts[2])
            continue
        lits = [int(x) for x in line.split()]
        if lits and lits[-1] == 0:
            lits.pop()
        clauses.append(lits)

    if any(len(cl) == 0 for cl in clauses):
        return False, None

    by_var: dict[int, list[int]] = {v: [] for v in range(1, nvars + 1)}
    for idx, cl in enumerate(clauses):
        for lit in cl:
            by_var[abs(lit)].append(idx)

    assign = [0] * (nvars + 1)  # 0 unknown, 1 true, -1 false
    unsat_lit_count = [0] * len(clauses)
    sat_count = [0] * len(clauses)

    def ok_clause(idx: int) -> bool:
        # still satisfiable: some literal true or some unassigned
        return sat_count[idx] > 0 or unsat_lit_count[idx] < len(clauses[idx])

    def set_var(v: int, val: int) -> list[int]:
        assign[v] = val
        touched = []
        for idx in by_var[v]:
            for lit in clauses[idx]:
                if abs(lit) != v:
                    continue
                if (lit > 0) == (val == 1):
                    sat_count[idx] += 1
                else:
                    unsat_lit_count[idx] += 1
            touched.append(idx)
        return touched

    def unset_var(v: int, val: int):
        assign[v] = 0
        for idx in by_var[v]:
            for lit in clauses[idx]:
                if abs(lit) != v:
                    continue
                if (lit > 0) == (val == 1):
                    sat_count[idx] -= 1
                else:
                    unsat_lit_count[idx] -= 1

    def solve(v: int) -> bool:
        if v > nvars:
            return True
        for val in (-1, 1):
            touched = set_var(v, val)
            if all(ok_clause(i) for i in touched) and solve(v + 1):
                return True
            unset_var(v, val)
        return False

    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * nvars + 100))
    if not solve(1):
        return False, None
    return True, tuple(v for v in range(1, nvars + 1) if assign[v] == 1)


def decode_cnf_model(spec: PatternSpec, N: int, model) -> OrderedColoring:
    """Turn a DIMACS model (iterable of true variables) into a coloring."""
    true_vars = set(model)
    m = comb(N, spec.k)
    colors = tuple(BLUE if (i + 1) in true_vars else RED for i in range(m))
    return OrderedColoring(spec.k, N, 2, colors)


# -- bound formulas ----------------------------------------------------------

BOUND_IDS = ("quasipoly", "f_bound", "main1", "main1_proof_N", "main2", "diagonal_lower")


@dataclass(frozen=True)
class BoundFormula:
    id: str
    s: int | None
    n: int | None
    t: int | None
    value_log2: object  # int | Fraction | float
    exact: bool


def _log2_int(x: int):
    """log2 of a positive integer: exact int for powers of two, else float
    (safe for arbitrarily large integers)."""
    if x <= 0:
        raise ValueError("log of non-positive value")
    if x & (x - 1) == 0:
        return x.bit_length() - 1
    if x.bit_length() <= 900:
        return math.log2(x)
    top = x.bit_length() - 1
    return top + math.log2(x / (1 << top))


def eval_bounds(bound_id: str, s: int | None = None, n: int | None = None, t: int | None = None) -> BoundFormula:
    """Closed-form bound values, reported as log2 to avoid overflow.

    Logs are base 2 throughout.  Values are exact (int/Fraction) whenever
    every log involved lands on an integer, float otherwise.
    """
    if bound_id not in BOUND_IDS:
        raise ValueError(f"unknown bound id {bound_id!r}; know {BOUND_IDS}")

    def need(**kw):
        for name, val in kw.items():
            if val is None:
                raise ValueError(f"bound {bound_id!r} needs parameter {name}")

    if bound_id in ("quasipoly", "f_bound"):
        need(s=s, n=n)
        if s < 3 or n < 2:
            raise ValueError("domain: s >= 3 and n >= 2")
        c = 5**s * factorial(s)
        ln = _log2_int(n)
        exp = s - 1 if bound_id == "quasipoly" else s - 2
        value = c * ln**exp
        return BoundFormula(bound_id, s, n, t, value, not isinstance(value, float))

    if bound_id in ("main1", "main1_proof_N"):
        need(s=s, n=n, t=t)
        if s < 2 or n < 2 or t < 1 or t > s:
            raise ValueError("domain: s >= 2, n >= 2, 1 <= t <= s")
        ln = _log2_int(n)
        if bound_id == "main1":
            value = 4 * s * _log2_int(t) + ln
        else:
            value = 3 + t * _log2_int(s) + ln
        if s > 2:
            if isinstance(ln, int):
                if ln <= 0:
                    raise ValueError("domain: log n must be positive")
                value = value + (s - 2) * _log2_int(ln)
            else:
                value = value + (s - 2) * math.log2(ln)
        return BoundFormula(bound_id, s, n, t, value, not isinstance(value, float))

    if bound_id == "main2":
        need(s=s, n=n, t=t)
        if s < 2 or n < 2 or t < 1:
            raise ValueError("domain: s >= 2, n >= 2, t >= 1")
        ln = _log2_int(n)
        l2s = _log2_int(2 * s)
        value = t * (t + 1) * ln * l2s
        return BoundFormula(bound_id, s, n, t, value, not isinstance(value, float))

    # diagonal_lower: the binomial lower bound for the diagonal triple case
    need(n=n)
    if n < 2:
        raise ValueError("domain: n >= 2")
    value = _log2_int(comb(2 * n - 4, n - 2))
    return BoundFormula(bound_id, s, n, t, value, not isinstance(value, float))
