"""Set-valued tableaux and the symmetric (Grassmannian) case.

Tableaux are English-notation: row 1 on top. Boxes are addressed (row, col),
1-based. Rows weakly increase left to right (max of a box <= min of the box
to its right) and columns strictly increase downward.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .basis import GlideIndex
from .composition import reverse
from .pipedream import PipeDream, descents, from_lehmer_code, lehmer_code, permutation
from .polyring import PolyZB


def partition(parts):
    lam = tuple(int(p) for p in parts if int(p) != 0)
    if any(p < 0 for p in lam) or any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"not a partition: {parts}")
    return lam


def boxes(lam):
    return [(r, c) for r, length in enumerate(lam, start=1) for c in range(1, length + 1)]


@dataclass(frozen=True)
class SetValuedTableau:
    shape: tuple
    cells: tuple  # one frozenset per box, in row-reading order

    def __post_init__(self):
        if len(self.cells) != sum(self.shape):
            raise ValueError("cell count does not match shape")
        cells = tuple(frozenset(s) for s in self.cells)
        if any(not s for s in cells):
            raise ValueError("every box needs a nonempty set")
        object.__setattr__(self, "cells", cells)

    def box_map(self):
        return dict(zip(boxes(self.shape), self.cells))

    def is_valid(self):
        m = self.box_map()
        for (r, c), s in m.items():
            right = m.get((r, c + 1))
            if right is not None and min(right) < max(s):
                return False
            below = m.get((r + 1, c))
            if below is not None and min(below) <= max(s):
                return False
        return True

    @property
    def size(self):
        """|T|: total number of labels."""
        return sum(len(s) for s in self.cells)

    def weight(self, n):
        wt = [0] * n
        for s in self.cells:
            for x in s:
                wt[x - 1] += 1
        return tuple(wt)

    def is_quasi_yamanouchi(self):
        return is_qy_svt(self)

    def render(self):
        rows = []
        m = self.box_map()
        for r, length in enumerate(self.shape, start=1):
            rows.append("".join("{" + ",".join(map(str, sorted(m[(r, c)]))) + "}" for c in range(1, length + 1)))
        return " / ".join(rows)

    @classmethod
    def parse(cls, text):
        shape, cells = [], []
        for row in text.split("/"):
            row = row.strip()
            if not row:
                continue
            count = 0
            for chunk in row.split("}"):
                chunk = chunk.strip()
                if not chunk:
                    continue
                if not chunk.startswith("{"):
                    raise ValueError(f"bad tableau box {chunk!r}")
                cells.append(frozenset(int(x) for x in chunk[1:].split(",")))
                count += 1
            shape.append(count)
        T = cls(partition(shape), tuple(cells))
        if not T.is_valid():
            raise ValueError(f"not a set-valued tableau: {text!r}")
        return T

    def __str__(self):
        return self.render()


def enumerate_svt(lam, n):
    """All set-valued tableaux of shape ``lam`` with labels in {1..n}."""
    return list(_svt_cached(partition(lam), n))


@lru_cache(maxsize=None)
def _svt_cached(lam, n):
    cells = boxes(lam)
    filled = {}
    out = []

    def rec(t):
        if t == len(cells):
            out.append(SetValuedTableau(lam, tuple(filled[b] for b in cells)))
            return
        r, c = cells[t]
        lo = 1
        left = filled.get((r, c - 1))
        if left is not None:
            lo = max(lo, max(left))
        up = filled.get((r - 1, c))
        if up is not None:
            lo = max(lo, max(up) + 1)
        # each later box in this column needs a strictly larger label
        hi = n - (sum(1 for length in lam[r:] if length >= c))
        for first in range(lo, hi + 1):
            rest = list(range(first + 1, hi + 1))
            for k in range(len(rest) + 1):
                for extra in combinations(rest, k):
                    filled[(r, c)] = frozenset((first,) + extra)
                    rec(t + 1)
        filled.pop((r, c), None)

    rec(0)
    return tuple(out)


def is_qy_svt(T):
    """Each label i > 1 has an instance weakly left of some i - 1 in a different box."""
    positions = {}
    for (r, c), s in T.box_map().items():
        for x in s:
            positions.setdefault(x, []).append((r, c))
    for i in positions:
        if i == 1:
            continue
        lower = positions.get(i - 1, [])
        if not any(b1 != b2 and b1[1] <= b2[1] for b1 in positions[i] for b2 in lower):
            return False
    return True


def enumerate_qsvt(lam, n):
    return [T for T in enumerate_svt(lam, n) if is_qy_svt(T)]


def buch_poly(lam, n):
    """Sum of beta^(|T| - |lam|) x^wt(T) over set-valued tableaux."""
    lam = partition(lam)
    return PolyZB.from_flat(n, ((T.weight(n), T.size - sum(lam), 1) for T in enumerate_svt(lam, n)))


def grassmannian_of(lam, n, size=None):
    """The permutation with a single descent at n whose Lehmer code reverses ``lam``."""
    lam = partition(lam)
    if len(lam) > n:
        raise ValueError(f"partition {lam} has more than {n} parts")
    N = n + (lam[0] if lam else 0)
    if size is not None:
        if size < N:
            raise ValueError(f"size {size} too small for {lam} with n={n}")
        N = size
    code = [0] * N
    for j, part in enumerate(lam, start=1):
        code[n - j] = part
    return from_lehmer_code(code)


def partition_of(w):
    """Inverse of :func:`grassmannian_of`: returns ``(lam, n)``.

    The identity maps to ``((), len(w))``.
    """
    w = permutation(w)
    ds = descents(w)
    if len(ds) > 1:
        raise ValueError(f"{w} has more than one descent")
    if not ds:
        return (), len(w)
    code = lehmer_code(w)
    n = ds[0]
    return tuple(reversed([c for c in code if c])), n


def phi(T, n):
    """Map a set-valued tableau to a pipe dream of its Grassmannian permutation.

    Box (j, k) sits over cell (n + 1 - j, k) after flipping; a label i there
    moves i - j steps northeast, landing in row n + 1 - i.
    """
    lam = T.shape
    N = n + (lam[0] if lam else 0)
    crosses = set()
    for (j, k), s in T.box_map().items():
        for i in s:
            cell = (n + 1 - i, k + i - j)
            if cell in crosses:
                raise AssertionError(f"two labels landed on {cell}")
            crosses.add(cell)
    return PipeDream(N, frozenset(crosses))


def phi_inverse(P, lam, n):
    """Recover the tableau from a pipe dream in the image of :func:`phi`.

    A cross in row r carries label n + 1 - r and stays on its box's content
    diagonal; labels along a diagonal increase down it, so every candidate is a
    split of the sorted diagonal labels into consecutive groups. Exactly one
    split may form a valid tableau.
    """
    lam = partition(lam)
    cells = boxes(lam)
    diag_boxes = {}
    for r, c in cells:
        diag_boxes.setdefault(c - r, []).append((r, c))
    labels = {}
    for r, c in P.crosses:
        i = n + 1 - r
        content = c - i
        labels.setdefault(content, []).append(i)
    if set(labels) - set(diag_boxes):
        raise ValueError("pipe dream has crosses off the tableau diagonals")

    def splits(seq, k):
        if k == 1:
            if seq:
                yield [seq]
            return
        for cut in range(1, len(seq) - k + 2):
            for rest in splits(seq[cut:], k - 1):
                yield [seq[:cut]] + rest

    per_diag = []
    for d, bs in diag_boxes.items():
        options = list(splits(sorted(labels.get(d, [])), len(bs)))
        per_diag.append((bs, options))

    found = []

    def rec(t, assign):
        if t == len(per_diag):
            T = SetValuedTableau(lam, tuple(frozenset(assign[b]) for b in cells))
            if T.is_valid() and phi(T, n) == P:
                found.append(T)
            return
        bs, options = per_diag[t]
        for option in options:
            for b, group in zip(bs, option):
                assign[b] = group
            rec(t + 1, assign)

    rec(0, {})
    if len(found) != 1:
        raise ValueError(f"expected exactly one preimage, found {len(found)}")
    return found[0]


def symmetric_glide_expansion(lam, n):
    """``{GlideIndex(|T| - |lam|, rev(wt(T))): count}`` over quasi-Yamanouchi tableaux."""
    lam = partition(lam)
    counts = Counter(
        GlideIndex(T.size - sum(lam), reverse(T.weight(n))) for T in enumerate_qsvt(lam, n)
    )
    return dict(counts)
