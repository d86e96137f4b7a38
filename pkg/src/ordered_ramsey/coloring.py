"""Ordered colorings of pairs/triples, pattern specs, witnesses, and file I/O.

Vertices are {1..N} and every k-subset (k = 2 or 3) carries one color in
{1..q}, stored in a flat array indexed by colexicographic rank.  For
red/blue instances the convention is fixed: red = 1, blue = 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb

RED = 1
BLUE = 2

RED_CLIQUE = "RedClique"
BLUE_POWER_PATH = "BluePowerPath"
BLUE_TIGHT_PATH = "BlueTightPath"
NONINCREASING_SET = "NonIncreasingSet"

_WITNESS_KINDS = (RED_CLIQUE, BLUE_POWER_PATH, BLUE_TIGHT_PATH, NONINCREASING_SET)


def pair_rank(u: int, v: int) -> int:
    """Colex rank of the pair {u < v}: (1,2)->0, (1,3)->1, (2,3)->2, (1,4)->3, ..."""
    return (v - 1) * (v - 2) // 2 + (u - 1)


def triple_rank(u: int, v: int, w: int) -> int:
    """Colex rank of the triple {u < v < w}."""
    return comb(w - 1, 3) + (v - 1) * (v - 2) // 2 + (u - 1)


def subset_rank(subset) -> int:
    """Colex rank of a strictly increasing k-tuple of vertices."""
    return sum(comb(x - 1, i + 1) for i, x in enumerate(subset))


def rank_to_subset(r: int, k: int) -> tuple[int, ...]:
    """Inverse of subset_rank: the k-subset at colex position r."""
    out = []
    for i in range(k, 0, -1):
        # largest x with C(x-1, i) <= r
        x = i
        while comb(x, i) <= r:
            x += 1
        out.append(x)
        r -= comb(x - 1, i)
    out.reverse()
    return tuple(out)


class ColoringFormatError(ValueError):
    """Malformed coloring/witness file; carries a 1-based line number."""

    def __init__(self, message: str, line: int = 0):
        super().__init__(message)
        self.line = line


@dataclass(frozen=True)
class PatternSpec:
    """One Ramsey question: forbid a red clique/path of size s and a blue
    path of size n (power t applies to k = 2 only)."""

    k: int
    s: int
    n: int
    t: int = 1
    red: str = "clique"  # "clique" or "path" (monotone path as red target)

    def __post_init__(self):
        if self.k not in (2, 3):
            raise ValueError(f"uniformity must be 2 or 3, got {self.k}")
        if self.s < 1 or self.n < 1:
            raise ValueError("pattern sizes must be >= 1")
        if self.t < 1:
            raise ValueError("power t must be >= 1")
        if self.red not in ("clique", "path"):
            raise ValueError(f"red pattern must be 'clique' or 'path', got {self.red!r}")


@dataclass(frozen=True)
class Witness:
    """A verified certificate: a red clique, blue (power/tight) path, or
    non-increasing set, as a strictly increasing vertex tuple."""

    kind: str
    vertices: tuple[int, ...]
    t: int | None = None

    def __post_init__(self):
        if self.kind not in _WITNESS_KINDS:
            raise ValueError(f"unknown witness kind {self.kind!r}")
        vs = tuple(self.vertices)
        object.__setattr__(self, "vertices", vs)
        if any(vs[i] >= vs[i + 1] for i in range(len(vs) - 1)):
            raise ValueError("witness vertices must be strictly increasing")

    def line(self) -> str:
        body = ",".join(str(v) for v in self.vertices)
        if self.t is not None:
            return f"witness {self.kind} t={self.t} v={body}"
        return f"witness {self.kind} v={body}"


def parse_witness_line(line: str, lineno: int = 0) -> Witness:
    parts = line.split()
    if len(parts) < 3 or parts[0] != "witness":
        raise ColoringFormatError(f"bad witness record: {line!r}", lineno)
    kind = parts[1]
    if kind not in _WITNESS_KINDS:
        raise ColoringFormatError(f"unknown witness kind {kind!r}", lineno)
    t = None
    vfield = None
    for p in parts[2:]:
        if p.startswith("t="):
            t = int(p[2:])
        elif p.startswith("v="):
            vfield = p[2:]
        else:
            raise ColoringFormatError(f"unknown witness field {p!r}", lineno)
    if vfield is None:
        raise ColoringFormatError("witness record missing v= field", lineno)
    try:
        verts = tuple(int(x) for x in vfield.split(","))
    except ValueError:
        raise ColoringFormatError(f"bad vertex list {vfield!r}", lineno) from None
    try:
        return Witness(kind, verts, t)
    except ValueError as e:
        raise ColoringFormatError(str(e), lineno) from None


@dataclass(frozen=True)
class OrderedColoring:
    """Total coloring of the k-subsets of {1..n} with colors {1..q}."""

    k: int
    n: int
    q: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if self.k not in (2, 3):
            raise ValueError(f"uniformity must be 2 or 3, got {self.k}")
        if self.n < 1:
            raise ValueError("need at least one vertex")
        if self.q < 1:
            raise ValueError("need at least one color")
        cols = tuple(self.colors)
        object.__setattr__(self, "colors", cols)
        want = comb(self.n, self.k)
        if len(cols) != want:
            raise ValueError(f"expected {want} colors for k={self.k}, n={self.n}, got {len(cols)}")
        if any(not (1 <= c <= self.q) for c in cols):
            raise ValueError("colors must lie in 1..q")

    # -- lookups ---------------------------------------------------------

    def pair_color(self, u: int, v: int) -> int:
        return self.colors[(v - 1) * (v - 2) // 2 + (u - 1)]

    def triple_color(self, u: int, v: int, w: int) -> int:
        return self.colors[comb(w - 1, 3) + (v - 1) * (v - 2) // 2 + (u - 1)]

    def subset_color(self, subset) -> int:
        return self.colors[subset_rank(subset)]

    @cached_property
    def _below_masks(self) -> dict[int, list[int]]:
        """For k=2: per color, mask[v] has bit (u-1) set iff u < v gets that color."""
        masks = {c: [0] * (self.n + 1) for c in range(1, self.q + 1)}
        i = 0
        for v in range(2, self.n + 1):
            for u in range(1, v):
                masks[self.colors[i]][v] |= 1 << (u - 1)
                i += 1
        return masks

    @cached_property
    def _above_masks(self) -> dict[int, list[int]]:
        """For k=2: per color, mask[u] has bit (v-1) set iff v > u gets that color."""
        masks = {c: [0] * (self.n + 1) for c in range(1, self.q + 1)}
        i = 0
        for v in range(2, self.n + 1):
            for u in range(1, v):
                masks[self.colors[i]][u] |= 1 << (v - 1)
                i += 1
        return masks

    def below_mask(self, v: int, color: int) -> int:
        return self._below_masks[color][v]

    def above_mask(self, u: int, color: int) -> int:
        return self._above_masks[color][u]

    # -- derived colorings -----------------------------------------------

    def induced(self, vertices) -> tuple["OrderedColoring", tuple[int, ...]]:
        """Subcoloring on the given vertices (relabeled 1..m, order kept).

        Returns (subcoloring, original_vertices); original_vertices[i-1] maps
        relabeled vertex i back to the original.
        """
        vs = tuple(sorted(vertices))
        if any(not (1 <= v <= self.n) for v in vs):
            raise ValueError("induced vertices out of range")
        m = len(vs)
        cols = []
        if self.k == 2:
            for b in range(2, m + 1):
                for a in range(1, b):
                    cols.append(self.pair_color(vs[a - 1], vs[b - 1]))
        else:
            for c in range(3, m + 1):
                for b in range(2, c):
                    for a in range(1, b):
                        cols.append(self.triple_color(vs[a - 1], vs[b - 1], vs[c - 1]))
        return OrderedColoring(self.k, m, self.q, tuple(cols)), vs


# -- text format -----------------------------------------------------------
#
# Normative layout:   k <2|3>
#                     n <N>
#                     q <q>
#                     e u v [w] c     (one line per k-subset, any order)
# or, for q = 2, a single  `bits <hex>`  line instead of the e-lines:
# bit i of the integer (LSB first) is 1 iff the subset at colex rank i is blue.
# Lines starting with '#' are comments.


def format_coloring(col: OrderedColoring, compact: bool = False, comments=()) -> str:
    lines = [f"# {c}" for c in comments]
    lines += [f"k {col.k}", f"n {col.n}", f"q {col.q}"]
    if compact:
        if col.q != 2:
            raise ValueError("bits format requires q = 2")
        value = 0
        for i, c in enumerate(col.colors):
            if c == BLUE:
                value |= 1 << i
        lines.append(f"bits {value:x}")
    else:
        for i, c in enumerate(col.colors):
            subset = rank_to_subset(i, col.k)
            lines.append("e " + " ".join(str(x) for x in subset) + f" {c}")
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> OrderedColoring:
    k = n = q = None
    colors: list[int | None] = []
    seen_body = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        key = parts[0]
        if key in ("k", "n", "q"):
            if seen_body:
                raise ColoringFormatError(f"header line {key!r} after subset lines", lineno)
            if len(parts) != 2:
                raise ColoringFormatError(f"bad header line: {line!r}", lineno)
            try:
                val = int(parts[1])
            except ValueError:
                raise ColoringFormatError(f"bad integer in header: {line!r}", lineno) from None
            if key == "k":
                k = val
            elif key == "n":
                n = val
            else:
                q = val
        elif key == "e":
            if k is None or n is None or q is None:
                raise ColoringFormatError("subset line before complete header", lineno)
            if not seen_body:
                colors = [None] * comb(n, k)
                seen_body = True
            if len(parts) != k + 2:
                raise ColoringFormatError(f"expected {k} vertices and a color: {line!r}", lineno)
            try:
                verts = [int(x) for x in parts[1:-1]]
                c = int(parts[-1])
            except ValueError:
                raise ColoringFormatError(f"bad integer on subset line: {line!r}", lineno) from None
            if any(not (1 <= x <= n) for x in verts):
                raise ColoringFormatError(f"vertex out of range 1..{n}: {line!r}", lineno)
            if any(verts[i] >= verts[i + 1] for i in range(k - 1)):
                raise ColoringFormatError(f"vertices must be strictly increasing: {line!r}", lineno)
            if not (1 <= c <= q):
                raise ColoringFormatError(f"color out of range 1..{q}: {line!r}", lineno)
            r = subset_rank(verts)
            if colors[r] is not None:
                raise ColoringFormatError(f"duplicate subset: {line!r}", lineno)
            colors[r] = c
        elif key == "bits":
            if k is None or n is None or q is None:
                raise ColoringFormatError("bits line before complete header", lineno)
            if q != 2:
                raise ColoringFormatError("bits format requires q = 2", lineno)
            if seen_body:
                raise ColoringFormatError("bits line mixed with subset lines", lineno)
            if len(parts) != 2:
                raise ColoringFormatError(f"bad bits line: {line!r}", lineno)
            try:
                value = int(parts[1], 16)
            except ValueError:
                raise ColoringFormatError(f"bad hex value: {line!r}", lineno) from None
            m = comb(n, k)
            if value >> m:
                raise ColoringFormatError(f"bits value has more than {m} bits", lineno)
            colors = [BLUE if (value >> i) & 1 else RED for i in range(m)]
            seen_body = True
        else:
            raise ColoringFormatError(f"unrecognized line: {line!r}", lineno)
    if k is None or n is None or q is None:
        raise ColoringFormatError("missing header (need k, n, q lines)", 0)
    if not seen_body:
        colors = [None] * comb(n, k)
    missing = [i for i, c in enumerate(colors) if c is None]
    if missing:
        subset = rank_to_subset(missing[0], k)
        raise ColoringFormatError(
            f"{len(missing)} subsets missing a color, first is {subset}", 0
        )
    try:
        return OrderedColoring(k, n, q, tuple(colors))
    except ValueError as e:
        raise ColoringFormatError(str(e), 0) from None


def read_coloring(path) -> OrderedColoring:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_coloring(fh.read())


def write_coloring(col: OrderedColoring, path, compact: bool = False, comments=()) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_coloring(col, compact=compact, comments=comments))


def all_colorings(k: int, n: int, q: int = 2):
    """Yield every q-coloring of the k-subsets of [n] (exhaustive; tiny n only)."""
    m = comb(n, k)
    total = q**m
    for code in range(total):
        cols = []
        x = code
        for _ in range(m):
            cols.append(1 + x % q)
            x //= q
        yield OrderedColoring(k, n, q, tuple(cols))
