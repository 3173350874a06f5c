"""Identity suites run by ``glidepoly verify``.

Each suite returns a :class:`SuiteResult`; a suite passes only if every
instance in its grid satisfies the identity exactly.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .basis import (
    expand_in_glide,
    expand_in_slide,
    expand_unsplit,
    fundamental_qs,
    glide_degree_bounds,
    glide_poly,
    quasisym_glide,
    reassemble_fundamental,
    reassemble_glide,
    slide_poly,
    stable_limit_check,
)
from .composition import (
    dominates,
    enumerate_glides,
    flatten,
    refines,
    strong_compositions,
    weak_compositions,
)
from .genomic import gss, gss_length_bound, lr_coefficients, reassemble_product
from .grothendieck import (
    descent_criterion,
    dst_is_injective,
    glide_expansion,
    grothendieck_poly,
    grothendieck_via_divided_difference,
    schubert_poly,
)
from .pipedream import all_permutations, destandardize, enumerate_pd, enumerate_qpd, inversions
from .polyring import PolyZB, is_quasisymmetric
from .tableau import buch_poly, grassmannian_of, partition, symmetric_glide_expansion

THREADS_ENV = "GLIDEPOLY_THREADS"


@dataclass
class SuiteResult:
    name: str
    checked: int
    failures: list

    @property
    def passed(self):
        return not self.failures

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        extra = "" if self.passed else f"  first failure: {self.failures[0]}"
        return f"[{status}] {self.name} ({self.checked} cases){extra}"


def _suite(name, cases, check):
    failures = []
    count = 0
    for case in cases:
        count += 1
        if not check(case):
            failures.append(case)
    return SuiteResult(name, count, failures)


def fiber_identity_holds(w):
    """For each quasi-Yamanouchi Q, the dst-fiber generating function equals G_wt(Q)."""
    n = len(w)
    fibers = {}
    for P in enumerate_pd(w):
        fibers.setdefault(destandardize(P), []).append(P)
    if set(fibers) != set(enumerate_qpd(w)):
        return False
    for Q, Ps in fibers.items():
        lhs = PolyZB.from_flat(n, ((P.weight, P.excess - Q.excess, 1) for P in Ps))
        if lhs != glide_poly(Q.weight):
            return False
    return True


def partitions_inside(outer):
    def rec(i, cap):
        if i == len(outer):
            yield ()
            return
        for p in range(min(cap, outer[i]), -1, -1):
            for rest in rec(i + 1, p):
                yield (p,) + rest

    return sorted({partition(lam) for lam in rec(0, outer[0] if outer else 0)})


def suites(level):
    perms = all_permutations(level)
    comps = [a for n in range(1, level + 1) for t in range(level + 1) for a in weak_compositions(t, n)]
    small = [a for t in range(4) for a in weak_compositions(t, min(level, 3))]

    def glide_char(a):
        for b in enumerate_glides(a):
            if b.excess == 0 and not (dominates(b.values, a) and refines(flatten(b.values), flatten(a))):
                return False
        lo, hi = glide_degree_bounds(a)
        G = glide_poly(a)
        return G.min_degree() == lo and G.max_degree() == hi

    def quasi(case):
        a, n = case
        G = quasisym_glide(a, n)
        return (
            is_quasisymmetric(G)
            and G.specialize_beta(0) == fundamental_qs(a, n)
            and reassemble_fundamental(expand_unsplit(a, n), n) == G
        )

    def symmetric(case):
        lam, n = case
        if len(lam) > n:
            return True
        K = buch_poly(lam, n)
        w = grassmannian_of(lam, n)
        return (
            K.pad_variables(len(w)) == grothendieck_poly(w)
            and reassemble_glide(symmetric_glide_expansion(lam, n), n) == K
        )

    def product_case(case):
        a, b = case
        if reassemble_product(a, b) != glide_poly(a) * glide_poly(b):
            return False
        return all(len(C) <= gss_length_bound(a, b) for C in gss(a, b, maxlen=gss_length_bound(a, b) + 1))

    def lr_case(case):
        u, v = case
        n = max(len(u), len(v))
        lhs = reassemble_glide(lr_coefficients(u, v), n)
        return lhs == grothendieck_poly(u) * grothendieck_poly(v)

    qcases = [(a, n) for n in range(1, min(level, 4) + 1) for t in range(1, 6) for a in strong_compositions(t) if len(a) <= n]
    lam_cases = [(lam, n) for lam in partitions_inside((3, 2, 1)) for n in range(1, min(level, 4) + 1)]
    lr_perms = all_permutations(min(level, 3))

    return [
        ("pipe dreams vs divided differences", perms,
         lambda w: grothendieck_poly(w) == grothendieck_via_divided_difference(w)),
        ("glide expansion of K_w reassembles", perms,
         lambda w: reassemble_glide(glide_expansion(w), len(w)) == grothendieck_poly(w)),
        ("glide expansion agrees with leading-term extraction", perms,
         lambda w: expand_in_glide(grothendieck_poly(w)) == glide_expansion(w)),
        ("beta 0 part is the slide expansion of the Schubert polynomial", perms,
         lambda w: {i: c for i, c in glide_expansion(w).items() if i.beta_power == 0}
         == expand_in_slide(schubert_poly(w))),
        ("dst fibers generate glide polynomials", perms, fiber_identity_holds),
        ("dst injective iff no late descent", perms, lambda w: dst_is_injective(w) == descent_criterion(w)),
        ("lowest degree of K_w is inv(w)", perms, lambda w: grothendieck_poly(w).min_degree() == inversions(w)),
        ("slide = glide at beta 0", comps, lambda a: slide_poly(a) == glide_poly(a).specialize_beta(0)),
        ("glide degree bounds and slide characterization", comps, glide_char),
        ("glide basis round trip", comps, lambda a: expand_in_glide(glide_poly(a)) == {(0, a): 1}),
        ("quasisymmetric glides", qcases, quasi),
        ("stable limit truncations", [(a, m) for a in [(3,), (1, 2), (2, 1), (1, 1, 1)] for m in (2, 3, 4)],
         lambda c: stable_limit_check(*c)),
        ("set-valued tableaux vs pipe dreams", lam_cases, symmetric),
        ("glide structure constants", [(a, b) for a in small for b in small], product_case),
        ("Littlewood-Richardson reassembly", [(u, v) for u in lr_perms for v in lr_perms], lr_case),
    ]


def run(level, threads=None):
    if threads is None:
        threads = int(os.environ.get(THREADS_ENV, "1"))
    plan = suites(level)
    if threads <= 1:
        return [_suite(name, cases, check) for name, cases, check in plan]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(_suite, name, cases, check) for name, cases, check in plan]
        return [f.result() for f in futures]
