"""Weak and strong compositions, colored kompositions, and glides.

Weak compositions are plain tuples of nonnegative ints (length matters);
strong compositions are tuples of positive ints. A :class:`Komposition`
additionally colors each positive entry black or red.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product


def weak_composition(entries):
    a = tuple(int(e) for e in entries)
    if any(e < 0 for e in a):
        raise ValueError(f"weak composition has a negative entry: {a}")
    return a


def strong_composition(entries):
    a = tuple(int(e) for e in entries)
    if any(e <= 0 for e in a):
        raise ValueError(f"strong composition entries must be positive: {a}")
    return a


def flatten(a):
    """Drop zero entries: ``(0, 1, 0, 2) -> (1, 2)``."""
    return tuple(e for e in a if e)


def reverse(a):
    return tuple(reversed(a))


def pad(a, n):
    if len(a) > n:
        raise ValueError(f"cannot pad {a} to length {n}")
    return tuple(a) + (0,) * (n - len(a))


def dominates(b, a):
    """Prefix-sum dominance ``b >= a``; the shorter argument is padded with zeros."""
    n = max(len(a), len(b))
    sb = sa = 0
    for i in range(n):
        sb += b[i] if i < len(b) else 0
        sa += a[i] if i < len(a) else 0
        if sb < sa:
            return False
    return True


def refines(b, a):
    """True iff ``a`` is obtained by summing consecutive entries of ``b``."""
    if sum(b) != sum(a):
        return False
    it = iter(b)
    for target in a:
        s = 0
        while s < target:
            s += next(it)
        if s != target:
            return False
    return True


def leading_zero_count(a):
    """Number of zeros that have some nonzero entry to their right."""
    last = max((i for i, e in enumerate(a) if e), default=0)
    return sum(1 for e in a[:last] if e == 0)


def zero_count(a):
    return sum(1 for e in a if e == 0)


def prepend_zeros(a, m):
    return (0,) * m + tuple(a)


def weak_compositions(total, n):
    """All weak compositions of ``total`` with ``n`` parts, lexicographically decreasing."""
    if n == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in weak_compositions(total - first, n - 1):
            yield (first,) + rest


def strong_compositions(total):
    """All strong compositions of ``total``."""
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in strong_compositions(total - first):
            yield (first,) + rest


@dataclass(frozen=True, order=True)
class Komposition:
    """A weak composition whose positive entries are colored; ``red[i]`` marks red."""

    values: tuple
    red: tuple

    def __post_init__(self):
        if len(self.values) != len(self.red):
            raise ValueError("values and colors differ in length")
        for v, r in zip(self.values, self.red):
            if v < 0:
                raise ValueError(f"negative entry in komposition {self.values}")
            if r and v == 0:
                raise ValueError("zero entries must be black")

    @classmethod
    def black(cls, values):
        values = tuple(values)
        return cls(values, (False,) * len(values))

    @classmethod
    def parse(cls, text):
        """Parse ``"1,1r,0,2r"``; an ``r`` suffix marks a red entry."""
        values, red = [], []
        text = text.strip()
        if not text:
            return cls((), ())
        for tok in text.split(","):
            tok = tok.strip()
            is_red = tok.endswith("r")
            if is_red:
                tok = tok[:-1]
            if not tok.isdigit():
                raise ValueError(f"bad komposition entry {tok!r}")
            values.append(int(tok))
            red.append(is_red)
        return cls(tuple(values), tuple(red))

    def __str__(self):
        return ",".join(f"{v}r" if r else str(v) for v, r in zip(self.values, self.red))

    def __len__(self):
        return len(self.values)

    @property
    def excess(self):
        return sum(self.red)

    @property
    def plain(self):
        """The underlying weak composition with colors forgotten."""
        return self.values

    def flat(self):
        return flatten(self.values)

    def nonzero_black_count(self):
        return sum(1 for v, r in zip(self.values, self.red) if v and not r)


def _block_ok(values, red, lo, hi, target):
    """Check one glide block b[lo:hi] against a target flat entry."""
    seg = values[lo:hi]
    total = sum(seg)
    reds = sum(red[lo:hi])
    if total != target + reds:
        return False
    for v, r in zip(seg, red[lo:hi]):
        if v:
            return not r
    return False


def is_glide(b, a):
    """Definitional glide test by depth-first search over breakpoint sequences.

    ``b`` is a :class:`Komposition`, ``a`` a weak composition of the same length.
    Blocks must cover every nonzero entry of ``b``; the first nonzero entry of
    each block must be black.
    """
    n = len(a)
    if len(b) != n:
        return False
    positions = [i + 1 for i, e in enumerate(a) if e]
    flat_a = flatten(a)
    values, red = b.values, b.red
    ell = len(flat_a)
    if ell == 0:
        return not any(values)

    def search(j, start):
        # block j occupies positions start+1 .. stop (1-based)
        if j == ell:
            return not any(values[start:])
        for stop in range(start + 1, positions[j] + 1):
            if _block_ok(values, red, start, stop, flat_a[j]) and search(j + 1, stop):
                return True
        return False

    return search(0, 0)


@lru_cache(maxsize=None)
def _blocks(length, target):
    """Colored sequences of ``length`` entries forming one legal glide block.

    Yields ``(values, red)`` tuple pairs whose values sum to ``target`` plus the
    number of red entries, with the first nonzero entry black.
    """

    def rec(pos, remaining, seen_nonzero):
        if pos == length:
            if remaining == 0 and seen_nonzero:
                yield (), ()
            return
        for rest_v, rest_r in rec(pos + 1, remaining, seen_nonzero):
            yield (0,) + rest_v, (False,) + rest_r
        for v in range(1, remaining + 1):
            for rest_v, rest_r in rec(pos + 1, remaining - v, True):
                yield (v,) + rest_v, (False,) + rest_r
        if seen_nonzero:
            for v in range(1, remaining + 2):
                for rest_v, rest_r in rec(pos + 1, remaining - v + 1, True):
                    yield (v,) + rest_v, (True,) + rest_r

    return tuple(rec(0, target, False))


@lru_cache(maxsize=None)
def _glides_cached(a):
    n = len(a)
    positions = [i + 1 for i, e in enumerate(a) if e]
    flat_a = flatten(a)
    ell = len(flat_a)
    out = set()

    def rec(j, start, values, red):
        if j == ell:
            tail = n - start
            out.add(Komposition(values + (0,) * tail, red + (False,) * tail))
            return
        for stop in range(start + 1, positions[j] + 1):
            for bv, br in _blocks(stop - start, flat_a[j]):
                rec(j + 1, stop, values + bv, red + br)

    rec(0, 0, (), ())
    return frozenset(out)


def enumerate_glides(a):
    """Every glide of the weak composition ``a``, each komposition once."""
    return _glides_cached(weak_composition(a))


def enumerate_glides_bruteforce(a):
    """Reference enumeration: test every colored vector under the degree bound."""
    a = weak_composition(a)
    n = len(a)
    bound = sum(a) + leading_zero_count(a)
    out = set()
    for total in range(sum(a), bound + 1):
        for values in weak_compositions(total, n):
            slots = [i for i, v in enumerate(values) if v]
            for mask in product((False, True), repeat=len(slots)):
                red = [False] * n
                for i, r in zip(slots, mask):
                    red[i] = r
                b = Komposition(values, tuple(red))
                if is_glide(b, a):
                    out.add(b)
    return frozenset(out)


def is_unsplit(b, a):
    if b.nonzero_black_count() != sum(1 for e in a if e):
        return False
    seen_nonzero = False
    for v in b.values:
        if v:
            seen_nonzero = True
        elif seen_nonzero:
            return False
    return True


def enumerate_unsplit_glides(a):
    a = weak_composition(a)
    return frozenset(b for b in enumerate_glides(a) if is_unsplit(b, a))
