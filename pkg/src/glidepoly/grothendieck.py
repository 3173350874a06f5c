"""beta-Grothendieck and Schubert polynomials.

Two independent constructions are provided: the pipe-dream generating
function and the isobaric divided-difference recursion from the longest
permutation. They must agree exactly.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .basis import GlideIndex, expand_in_glide, reassemble_glide
from .pipedream import (
    apply_simple,
    descents,
    enumerate_pd,
    enumerate_qpd,
    inversions,
    longest_element,
    permutation,
)
from .polyring import BetaInt, PolyZB


@lru_cache(maxsize=None)
def _grothendieck(w):
    return PolyZB.from_flat(len(w), ((P.weight, P.excess, 1) for P in enumerate_pd(w)))


def grothendieck_poly(w):
    """Sum of beta^ex(P) x^wt(P) over all pipe dreams of ``w``."""
    return _grothendieck(permutation(w))


def schubert_poly(w):
    return grothendieck_poly(w).specialize_beta(0)


class DivisionError(ArithmeticError):
    """Raised when a divided difference leaves a nonzero remainder."""


def divide_by_difference(f, i):
    """Exact quotient of ``f`` by (x_i - x_{i+1}), via synthetic division in x_i."""
    n = f.nvars
    i0 = i - 1
    # group terms by the exponent of x_i
    slices = {}
    for exp, coeff in f.terms().items():
        rest = exp[:i0] + (0,) + exp[i0 + 1:]
        slices.setdefault(exp[i0], {})[rest] = coeff
    if not slices:
        return PolyZB.zero(n)
    top = max(slices)
    shift = [0] * n
    shift[i0 + 1] = 1
    shift = tuple(shift)

    def times_next(terms):
        return {tuple(a + b for a, b in zip(e, shift)): c for e, c in terms.items()}

    def add(x, y):
        out = dict(x)
        for e, c in y.items():
            s = out[e] + c if e in out else c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return out

    # dividing by (x_i - t) with t = x_{i+1}: q_{d-1} = g_d, q_{k-1} = g_k + t*q_k
    quotient = {}
    carry = {}
    for d in range(top, 0, -1):
        carry = add(slices.get(d, {}), times_next(carry))
        for e, c in carry.items():
            e = list(e)
            e[i0] = d - 1
            quotient[tuple(e)] = c
    remainder = add(slices.get(0, {}), times_next(carry))
    if remainder:
        raise DivisionError(f"division by x{i} - x{i + 1} left a remainder")
    return PolyZB(n, quotient)


def isobaric_divided_difference(f, i):
    """pi_i f = d_i((1 + beta x_{i+1}) f)."""
    n = f.nvars
    shift = [0] * n
    shift[i] = 1
    factor = PolyZB(n, {(0,) * n: 1, tuple(shift): BetaInt((0, 1))})
    g = factor * f
    return divide_by_difference(g - g.swap_variables(i), i)


def descent_path(w, choose="smallest"):
    """Simple transpositions taking the longest element down to ``w``.

    Returns indices i_1, i_2, ... with w = w0 s_{i_1} s_{i_2} ..., each step
    lowering length by one. ``choose`` picks which ascent of the current target
    to undo first when walking upward from ``w``.
    """
    w = permutation(w)
    n = len(w)
    up = []
    v = w
    while v != longest_element(n):
        ascents = [i for i in range(1, n) if v[i - 1] < v[i]]
        i = ascents[0] if choose == "smallest" else ascents[-1]
        up.append(i)
        v = apply_simple(v, i)
    return list(reversed(up))


def grothendieck_via_divided_difference(w, choose="smallest"):
    w = permutation(w)
    n = len(w)
    f = PolyZB.monomial(tuple(range(n - 1, -1, -1)))
    for i in descent_path(w, choose):
        f = isobaric_divided_difference(f, i)
    return f


@dataclass(frozen=True)
class GrothendieckResult:
    permutation: tuple
    poly: PolyZB
    glide_terms: dict


def glide_expansion(w):
    """``{GlideIndex(ex(Q), wt(Q)): count}`` over quasi-Yamanouchi pipe dreams Q of ``w``."""
    w = permutation(w)
    counts = Counter(GlideIndex(Q.excess, Q.weight) for Q in enumerate_qpd(w))
    return dict(counts)


def grothendieck_result(w):
    w = permutation(w)
    return GrothendieckResult(w, grothendieck_poly(w), glide_expansion(w))


def reassemble(expansion, n):
    return reassemble_glide(expansion, n)


def glide_expansion_via_basis(w):
    """Glide coefficients of K_w found by leading-term extraction (no pipe dream structure)."""
    return expand_in_glide(grothendieck_poly(w))


def dst_is_injective(w):
    from .pipedream import destandardize

    images = [destandardize(P) for P in enumerate_pd(w)]
    return len(set(images)) == len(images)


def descent_criterion(w):
    """True iff w has no descent at or after the position of 1."""
    w = permutation(w)
    m = w.index(1) + 1
    return all(d < m for d in descents(w))


def min_degree_is_length(w):
    return grothendieck_poly(w).min_degree() == inversions(w)
