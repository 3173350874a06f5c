"""Permutations and pipe dreams.

A pipe dream of size n is a set of cross tiles (row, col), both 1-based,
inside the staircase row + col <= n; every other tile is an elbow. Pipe i
enters row i from the west and leaves through the top of column w(i).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import permutations as _iter_permutations


# permutations, one-line notation as tuples

def permutation(entries):
    w = tuple(int(x) for x in entries)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a permutation in one-line notation: {w}")
    return w


def parse_permutation(text):
    """Parse ``"13524"`` (single digits) or ``"1,3,10,2,..."``."""
    text = text.strip()
    if "," in text:
        entries = [t for t in text.split(",") if t.strip()]
    else:
        entries = list(text)
    try:
        return permutation(int(t) for t in entries)
    except ValueError as err:
        raise ValueError(f"cannot parse permutation {text!r}: {err}") from None


def format_permutation(w):
    if len(w) <= 9:
        return "".join(map(str, w))
    return ",".join(map(str, w))


def identity(n):
    return tuple(range(1, n + 1))


def longest_element(n):
    return tuple(range(n, 0, -1))


def all_permutations(n):
    return [tuple(p) for p in _iter_permutations(range(1, n + 1))]


def inversions(w):
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def lehmer_code(w):
    return tuple(sum(1 for j in range(i + 1, len(w)) if w[j] < w[i]) for i in range(len(w)))


def from_lehmer_code(code):
    unused = list(range(1, len(code) + 1))
    w = []
    for i, c in enumerate(code):
        if c > len(unused) - 1:
            raise ValueError(f"invalid Lehmer code {code} at position {i + 1}")
        w.append(unused.pop(c))
    return tuple(w)


def descents(w):
    """1-based positions i with w(i) > w(i+1)."""
    return [i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1]]


def inverse(w):
    out = [0] * len(w)
    for i, x in enumerate(w):
        out[x - 1] = i + 1
    return tuple(out)


def embed(w, n):
    """View ``w`` in S_n by appending fixed points."""
    if n < len(w):
        raise ValueError(f"cannot embed S_{len(w)} into S_{n}")
    return tuple(w) + tuple(range(len(w) + 1, n + 1))


def apply_simple(w, i):
    """Right multiplication by s_i: swap positions i and i+1 (1-based)."""
    w = list(w)
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


# pipe tracing

@lru_cache(maxsize=None)
def _sweep_order(n):
    """Tiles (r, c) with r + c <= n + 1 ordered by increasing c - r.

    Pipes only travel north or east, so c - r strictly increases along each
    pipe and tiles on a common diagonal never feed each other.
    """
    tiles = [(r, c) for r in range(1, n + 1) for c in range(1, n + 2 - r)]
    tiles.sort(key=lambda t: (t[1] - t[0], t[0]))
    return tuple(tiles)


def _trace(n, crosses, reduce):
    """Run the pipes through the tiling.

    With ``reduce`` a cross whose two pipes have already crossed acts as an
    elbow. Returns ``(exit column by pipe, crosses that acted as crosses)``.
    """
    west = {(r, 1): r for r in range(1, n + 1)}
    south = {}
    crossed = set()
    kept = set()
    exits = {}
    for r, c in _sweep_order(n):
        p = west.get((r, c))
        q = south.get((r, c))
        act = (r, c) in crosses
        if act and reduce:
            pair = (p, q) if p < q else (q, p)
            if pair in crossed:
                act = False
            else:
                crossed.add(pair)
        if act:
            kept.add((r, c))
            north_out, east_out = q, p
        else:
            north_out, east_out = p, q
        if r == 1:
            if north_out is not None:
                exits[north_out] = c
        else:
            south[(r - 1, c)] = north_out
        if r + c + 1 <= n + 1:
            west[(r, c + 1)] = east_out
    return exits, frozenset(kept)


@dataclass(frozen=True)
class PipeDream:
    n: int
    crosses: frozenset

    def __post_init__(self):
        crosses = frozenset((int(r), int(c)) for r, c in self.crosses)
        for r, c in crosses:
            if r < 1 or c < 1 or r + c > self.n:
                raise ValueError(f"cross {(r, c)} outside the size-{self.n} staircase")
        object.__setattr__(self, "crosses", crosses)

    @classmethod
    def of(cls, n, crosses=()):
        return cls(n, frozenset(crosses))

    def rows(self):
        """``{row: sorted list of cross columns}`` for nonempty rows."""
        out = {}
        for r, c in sorted(self.crosses):
            out.setdefault(r, []).append(c)
        return out

    @cached_property
    def _reduced_trace(self):
        return _trace(self.n, self.crosses, reduce=True)

    def reduct(self):
        return PipeDream(self.n, self._reduced_trace[1])

    def is_reduced(self):
        return len(self._reduced_trace[1]) == len(self.crosses)

    @property
    def permutation(self):
        exits = self._reduced_trace[0]
        return tuple(exits[i] for i in range(1, self.n + 1))

    @property
    def excess(self):
        return len(self.crosses) - len(self._reduced_trace[1])

    @property
    def weight(self):
        wt = [0] * self.n
        for r, _ in self.crosses:
            wt[r - 1] += 1
        return tuple(wt)

    def is_quasi_yamanouchi(self):
        rows = self.rows()
        for r, cols in rows.items():
            west = cols[0]
            if west == 1:
                continue
            below = rows.get(r + 1)
            if below is None or west > below[-1]:
                return False
        return True

    def render(self):
        lines = [f"n={self.n}"]
        for r in range(1, self.n):
            lines.append("".join("+" if (r, c) in self.crosses else "." for c in range(1, self.n - r + 1)))
        return "\n".join(lines)

    @classmethod
    def parse(cls, text):
        lines = [ln.strip() for ln in text.strip().splitlines()]
        if not lines or not lines[0].startswith("n="):
            raise ValueError("pipe dream text must start with an 'n=' header")
        n = int(lines[0][2:])
        crosses = set()
        for r, line in enumerate(lines[1:], start=1):
            for c, ch in enumerate(line, start=1):
                if ch == "+":
                    crosses.add((r, c))
                elif ch != ".":
                    raise ValueError(f"unexpected character {ch!r} in pipe dream row {r}")
        return cls(n, frozenset(crosses))

    def __str__(self):
        return self.render()


def permutation_of(P):
    return P.permutation


def reduct(P):
    return P.reduct()


def excess(P):
    return P.excess


def weight(P):
    return P.weight


def is_quasi_yamanouchi(P):
    return P.is_quasi_yamanouchi()


def bottom_pipe_dream(w):
    """The reduced pipe dream with L(w)_i crosses left-justified in row i."""
    code = lehmer_code(w)
    return PipeDream(len(w), frozenset((i + 1, c) for i, k in enumerate(code) for c in range(1, k + 1)))


def _dst_step(rows, r):
    """Shift row r southwest if allowed; returns True when something moved."""
    upper = rows.get(r)
    if not upper or upper[0] == 1:
        return False
    lower = rows.get(r + 1, [])
    if lower and upper[0] <= lower[-1]:
        return False
    merged = sorted(set(lower) | {c - 1 for c in upper})
    rows[r + 1] = merged
    del rows[r]
    return True


def destandardize(P):
    """Apply southwest row shifts, top to bottom, until no row qualifies."""
    rows = {r: list(cols) for r, cols in P.rows().items()}
    changed = True
    while changed:
        changed = False
        for r in range(1, P.n):
            if _dst_step(rows, r):
                changed = True
    return PipeDream(P.n, frozenset((r, c) for r, cols in rows.items() for c in cols))


def _pd_search(w):
    """All pipe dreams of size len(w) whose reduction has permutation w.

    Depth-first over tiles in sweep order, choosing cross or elbow where the
    staircase allows; a pipe never moves west, so a pipe sitting east of its
    target column is a dead branch.
    """
    n = len(w)
    target = dict(zip(range(1, n + 1), w))
    tiles = _sweep_order(n)
    west = {(r, 1): r for r in range(1, n + 1)}
    south = {}
    crossed = set()
    chosen = []
    out = []

    def route(r, c, north_out, east_out):
        if north_out is not None:
            if r == 1:
                if target[north_out] != c:
                    return False
            elif target[north_out] < c:
                return False
        if east_out is not None and r + c + 1 <= n + 1 and target[east_out] < c + 1:
            return False
        if r > 1:
            south[(r - 1, c)] = north_out
        if r + c + 1 <= n + 1:
            west[(r, c + 1)] = east_out
        return True

    def rec(t):
        if t == len(tiles):
            out.append(PipeDream(n, frozenset(chosen)))
            return
        r, c = tiles[t]
        p = west.get((r, c))
        q = south.get((r, c))
        if route(r, c, p, q):
            rec(t + 1)
        if r + c <= n:
            pair = (p, q) if p < q else (q, p)
            chosen.append((r, c))
            if pair in crossed:
                if route(r, c, p, q):
                    rec(t + 1)
            else:
                crossed.add(pair)
                if route(r, c, q, p):
                    rec(t + 1)
                crossed.discard(pair)
            chosen.pop()

    rec(0)
    return out


@lru_cache(maxsize=None)
def _enumerate_pd_cached(w):
    return tuple(sorted(_pd_search(w), key=lambda P: sorted(P.crosses)))


def enumerate_pd(w):
    return list(_enumerate_pd_cached(permutation(w)))


def enumerate_pd_bruteforce(w):
    """Reference enumeration over every subset of staircase cells."""
    w = permutation(w)
    n = len(w)
    cells = [(r, c) for r in range(1, n) for c in range(1, n - r + 1)]
    out = []
    for mask in range(1 << len(cells)):
        P = PipeDream(n, frozenset(cell for i, cell in enumerate(cells) if mask >> i & 1))
        if P.permutation == w:
            out.append(P)
    return out


def enumerate_qpd(w):
    return [P for P in enumerate_pd(w) if P.is_quasi_yamanouchi()]
