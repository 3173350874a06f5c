"""Glide, slide, fundamental quasisymmetric and multi-fundamental polynomials,
plus change of basis into glide polynomials."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import NamedTuple

from .composition import (
    dominates,
    enumerate_glides,
    enumerate_unsplit_glides,
    flatten,
    leading_zero_count,
    prepend_zeros,
    refines,
    strong_composition,
    weak_composition,
    weak_compositions,
    zero_count,
)
from .polyring import PolyZB


class GlideIndex(NamedTuple):
    """The basis element beta^beta_power * G_shape."""

    beta_power: int
    shape: tuple

    def __str__(self):
        shape = "".join(map(str, self.shape)) if all(e < 10 for e in self.shape) else ",".join(map(str, self.shape))
        if self.beta_power == 0:
            return f"G_{shape}"
        if self.beta_power == 1:
            return f"β G_{shape}"
        return f"β^{self.beta_power} G_{shape}"


def glide_order_key(beta_power, shape):
    """Sort key realizing the total order used for basis extraction.

    Larger key means larger in the order: more zeros first, then
    reverse-lexicographic on the shape (the later entry decides), then
    the larger beta power.
    """
    return (zero_count(shape), tuple(reversed(shape)), beta_power)


@lru_cache(maxsize=None)
def _glide_poly(a):
    return PolyZB.from_flat(len(a), ((b.values, b.excess, 1) for b in enumerate_glides(a)))


def glide_poly(a):
    """The glide polynomial: sum of beta^ex(b) x^b over glides b of ``a``."""
    return _glide_poly(weak_composition(a))


def slide_poly(a):
    """Fundamental slide polynomial, summed directly over dominating refinements."""
    a = weak_composition(a)
    flat_a = flatten(a)
    terms = {}
    for b in weak_compositions(sum(a), len(a)):
        if dominates(b, a) and refines(flatten(b), flat_a):
            terms[b] = 1
    return PolyZB(len(a), terms)


def fundamental_qs(a, n):
    """Gessel's fundamental quasisymmetric polynomial F_a(x_1..x_n)."""
    a = strong_composition(a)
    if len(a) > n:
        return PolyZB.zero(n)
    terms = {b: 1 for b in weak_compositions(sum(a), n) if refines(flatten(b), a)}
    return PolyZB(n, terms)


def _chains(a, m):
    """Chains of nonempty subsets of {1..m}, strict exactly where a prefix sum of ``a`` ends."""
    size = sum(a)
    strict_after = set()
    s = 0
    for part in a[:-1]:
        s += part
        strict_after.add(s)

    def subsets_from(lo):
        # nonempty subsets with minimum >= lo
        for first in range(lo, m + 1):
            rest = list(range(first + 1, m + 1))
            for mask in range(1 << len(rest)):
                yield (first,) + tuple(x for i, x in enumerate(rest) if mask >> i & 1)

    def rec(i, prev_max, acc):
        if i == size:
            yield tuple(acc)
            return
        if i == 0:
            lo = 1
        elif i in strict_after:
            lo = prev_max + 1
        else:
            lo = prev_max
        for s in subsets_from(lo):
            acc.append(s)
            yield from rec(i + 1, s[-1], acc)
            acc.pop()

    yield from rec(0, 0, [])


def multifundamental_chains(a, m):
    return list(_chains(strong_composition(a), m))


def multifundamental_truncated(a, m):
    """Multi-fundamental quasisymmetric function in x_1..x_m (other variables zero)."""
    a = strong_composition(a)
    flat = []
    for chain in _chains(a, m):
        exp = [0] * m
        for s in chain:
            for x in s:
                exp[x - 1] += 1
        flat.append((exp, 0, 1))
    return PolyZB.from_flat(m, flat)


def quasisym_glide(a, n):
    """Quasisymmetric glide: the glide polynomial of ``a`` with n - len(a) leading zeros."""
    a = strong_composition(a)
    if len(a) > n:
        return PolyZB.zero(n)
    return glide_poly(prepend_zeros(a, n - len(a)))


def expand_unsplit(a, n):
    """Fundamental expansion of a quasisymmetric glide.

    Returns ``{(flat composition, beta power): multiplicity}``.
    """
    a = strong_composition(a)
    if len(a) > n:
        return {}
    counts = Counter()
    for b in enumerate_unsplit_glides(prepend_zeros(a, n - len(a))):
        counts[(b.flat(), b.excess)] += 1
    return dict(counts)


def reassemble_fundamental(expansion, n):
    total = PolyZB.zero(n)
    for (comp, k), c in expansion.items():
        total += fundamental_qs(comp, n).times_beta(k) * c
    return total


def _peel(p, basis_poly):
    remaining = {}
    for exp, k, c in p.flat_terms():
        remaining[(k, exp)] = c
    result = {}
    while remaining:
        k, a = max(remaining, key=lambda t: glide_order_key(*t))
        c = remaining[(k, a)]
        result[GlideIndex(k, a)] = c
        for exp, kk, cc in basis_poly(a).flat_terms():
            key = (kk + k, exp)
            v = remaining.get(key, 0) - c * cc
            if v:
                remaining[key] = v
            else:
                remaining.pop(key, None)
        if (k, a) in remaining:
            raise AssertionError(f"leading term {(k, a)} not cancelled; ordering is broken")
    return result


def expand_in_glide(p):
    """Write ``p`` as an integer combination of beta^k G_a.

    Repeatedly peels off the leading monomial under :func:`glide_order_key`;
    the leading monomial of beta^k G_a is beta^k x^a, so each step removes
    the current leader and only introduces smaller monomials.
    """
    return _peel(p, glide_poly)


def expand_in_slide(p):
    """Same extraction against fundamental slides; beta powers ride along unchanged."""
    return _peel(p, slide_poly)


def reassemble_glide(expansion, n):
    """Sum of c * beta^k * G_a over an expansion map."""
    total = PolyZB.zero(n)
    for idx, c in expansion.items():
        k, a = idx
        if len(a) != n:
            raise ValueError(f"shape {a} does not have length {n}")
        total += glide_poly(a).times_beta(k) * c
    return total


def stable_limit_check(a, m):
    """Finite truncation of the stable-limit identity at beta = 1."""
    a = weak_composition(a)
    lhs = glide_poly(prepend_zeros(a, m)).specialize_beta(1).truncate_variables(m)
    rhs = multifundamental_truncated(flatten(a), m)
    return lhs == rhs


def glide_degree_bounds(a):
    """(min, max) total degree predicted for G_a."""
    return sum(a), sum(a) + leading_zero_count(a)
