"""Shuffles, genomic shuffles, and the glide product.

Letters of the superscripted alphabet are ``Letter(base, sup)`` and compare
lexicographically. Plain words are tuples of ints; genomic words are tuples
of letters.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import combinations, product
from typing import NamedTuple

from .basis import GlideIndex, glide_poly
from .composition import dominates, leading_zero_count, weak_composition
from .pipedream import embed, enumerate_qpd, inversions, permutation
from .polyring import PolyZB


class Letter(NamedTuple):
    base: int
    sup: int

    def __str__(self):
        return f"{self.base}^{self.sup}"


class InvariantViolation(RuntimeError):
    """A uniqueness or existence claim about the glide product failed."""


def format_word(C):
    return " ".join(map(str, C))


def parse_word(text):
    """Parse ``"3^1 3^2 6^1"``."""
    out = []
    for tok in text.split():
        base, _, sup = tok.partition("^")
        if not sup:
            raise ValueError(f"letter {tok!r} needs a superscript")
        out.append(Letter(int(base), int(sup)))
    return tuple(out)


def _base(x):
    return x.base if isinstance(x, Letter) else x


# classical shuffle

def _check_disjoint(A, B):
    common = set(A) & set(B)
    if common:
        raise ValueError(f"alphabets overlap on {sorted(common)}")


def shuffle(A, B):
    """All interleavings of ``A`` and ``B`` as a set of tuples."""
    A, B = tuple(A), tuple(B)
    _check_disjoint(A, B)
    n = len(A) + len(B)
    out = set()
    for slots in combinations(range(n), len(A)):
        word = [None] * n
        ia = iter(A)
        ib = iter(B)
        chosen = set(slots)
        for k in range(n):
            word[k] = next(ia) if k in chosen else next(ib)
        out.add(tuple(word))
    return out


def superscripted(A):
    """Mark the j-th occurrence of each letter i as i^j."""
    seen = Counter()
    out = []
    for x in A:
        seen[x] += 1
        out.append(Letter(x, seen[x]))
    return tuple(out)


# genotypes

def _instances(C):
    where = {}
    for pos, x in enumerate(C):
        where.setdefault(x, []).append(pos)
    return where


def genotype_selections(C):
    """Every choice of kept positions, one instance per distinct letter."""
    where = _instances(C)
    letters = list(where)
    for choice in product(*(where[x] for x in letters)):
        yield frozenset(choice)


def genotypes_of_word(C):
    """Genotypes of a genomic word, superscripts removed."""
    return {tuple(C[p].base for p in sorted(keep)) for keep in genotype_selections(C)}


def is_genomic_member(C, A, B):
    """Definitional membership of ``C`` in the genomic shuffle of ``A`` and ``B``."""
    A, B = tuple(A), tuple(B)
    Ag, Bg = superscripted(A), superscripted(B)
    alpha = set(A)
    for x, y in zip(C, C[1:]):
        if x == y:
            return False
    last_sup = {}
    for x in C:
        if last_sup.get(x.base, 0) > x.sup:
            return False
        last_sup[x.base] = x.sup
    if set(C) != set(Ag) | set(Bg):
        return False
    for keep in genotype_selections(C):
        sub = [C[p] for p in sorted(keep)]
        if tuple(x for x in sub if x.base in alpha) != Ag:
            return False
        if tuple(x for x in sub if x.base not in alpha) != Bg:
            return False
    return True


def runs(C):
    """Split into maximal strictly increasing runs."""
    if not C:
        return ()
    out = [[C[0]]]
    for x in C[1:]:
        if x > out[-1][-1]:
            out[-1].append(x)
        else:
            out.append([x])
    return tuple(tuple(seg) for seg in out)


def genotypes_of_runs(S):
    """Genotypes of a run sequence: sequences of (possibly empty) plain words."""
    flat = [(i, x) for i, seg in enumerate(S) for x in seg]
    word = tuple(x for _, x in flat)
    out = set()
    for keep in genotype_selections(word):
        segs = [[] for _ in S]
        for p in sorted(keep):
            i, x = flat[p]
            segs[i].append(x.base)
        out.add(tuple(tuple(s) for s in segs))
    return out


def rightmost_genotype(S):
    """The genotype keeping the rightmost instance of each letter."""
    flat = [(i, x) for i, seg in enumerate(S) for x in seg]
    last = {}
    for p, (_, x) in enumerate(flat):
        last[x] = p
    segs = [[] for _ in S]
    for p in sorted(last.values()):
        i, x = flat[p]
        segs[i].append(x.base)
    return tuple(tuple(s) for s in segs)


def comp(S, keep=None):
    """Count letters per segment, optionally only those whose base passes ``keep``."""
    if keep is None:
        return tuple(len(seg) for seg in S)
    return tuple(sum(1 for x in seg if keep(_base(x))) for seg in S)


def is_odd(i):
    return i % 2 == 1


def is_even(i):
    return i % 2 == 0


# genomic shuffle generation

def genomic_shuffle(A, B, maxlen, max_runs=None):
    """Words of length <= ``maxlen`` in the genomic shuffle of ``A`` and ``B``.

    Candidates are grown left to right: the A-letters (and B-letters) of a
    member appear in the order of A^gen with each letter repeated in a block,
    so each step either repeats the current A or B letter or starts the next
    one. Every emitted word is re-checked against the definition.
    """
    A, B = tuple(A), tuple(B)
    _check_disjoint(A, B)
    Ag, Bg = superscripted(A), superscripted(B)
    p, q = len(Ag), len(Bg)
    out = []
    word = []

    def rec(i, j, nruns):
        if i == p and j == q:
            C = tuple(word)
            if not is_genomic_member(C, A, B):
                raise InvariantViolation(f"generator produced non-member {format_word(C)}")
            out.append(C)
        if len(word) >= maxlen:
            return
        prev = word[-1] if word else None
        options = []
        if i > 0:
            options.append((Ag[i - 1], i, j))
        if i < p:
            options.append((Ag[i], i + 1, j))
        if j > 0:
            options.append((Bg[j - 1], i, j))
        if j < q:
            options.append((Bg[j], i, j + 1))
        for letter, ni, nj in options:
            if letter == prev:
                continue
            runs_now = nruns + (1 if prev is None or not letter > prev else 0)
            if max_runs is not None and runs_now > max_runs:
                continue
            if len(word) + 1 + (p - ni) + (q - nj) > maxlen:
                continue
            word.append(letter)
            rec(ni, nj, runs_now)
            word.pop()

    rec(0, 0, 0)
    return out


def genomic_shuffle_bruteforce(A, B, maxlen):
    """Reference: test every word over the letters of A^gen and B^gen."""
    letters = sorted(set(superscripted(A)) | set(superscripted(B)))
    out = []
    for length in range(len(letters), maxlen + 1):
        for C in product(letters, repeat=length):
            if is_genomic_member(C, A, B):
                out.append(C)
    return out


# genomic shuffle set and glide product

def glide_words(a, b):
    """The plain words A = (2n-1)^a_1 ... 1^a_n and B = (2n)^b_1 ... 2^b_n."""
    n = len(a)
    A = tuple(x for i, k in enumerate(a) for x in [2 * (n - i) - 1] * k)
    B = tuple(x for i, k in enumerate(b) for x in [2 * (n - i)] * k)
    return A, B


def gss_length_bound(a, b):
    return sum(a) + sum(b) + leading_zero_count(a) + leading_zero_count(b)


def _pad(c, n):
    return c + (0,) * (n - len(c))


def _genotype_ok(G, a, b):
    n = len(a)
    if len(G) > n:
        return False
    return dominates(_pad(comp(G, is_odd), n), a) and dominates(_pad(comp(G, is_even), n), b)


def satisfies_dominance(S, a, b, rule="all"):
    if len(S) > len(a):
        return False
    if rule == "all":
        return all(_genotype_ok(G, a, b) for G in genotypes_of_runs(S))
    if rule == "rightmost":
        return _genotype_ok(rightmost_genotype(S), a, b)
    raise ValueError(f"unknown genotype rule {rule!r}")


def gss(a, b, rule="all", maxlen=None):
    """The genomic shuffle set of two weak compositions of a common length."""
    a, b = weak_composition(a), weak_composition(b)
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {a} vs {b}")
    return list(_gss_cached(a, b, rule, maxlen))


@lru_cache(maxsize=None)
def _gss_cached(a, b, rule, maxlen):
    n = len(a)
    if maxlen is None:
        maxlen = gss_length_bound(a, b)
    A, B = glide_words(a, b)
    return tuple(
        C
        for C in genomic_shuffle(A, B, maxlen, max_runs=n)
        if satisfies_dominance(runs(C), a, b, rule)
    )


def bump_runs(C, a, b):
    """Insert empty runs so the run sequence has length n, dominance-minimally.

    All placements of the nonempty runs among n slots are tried; the valid
    ones must have a unique dominance-minimal composition.
    """
    n = len(a)
    R = runs(C)
    valid = []
    for slots in combinations(range(n), len(R)):
        S = [()] * n
        for s, seg in zip(slots, R):
            S[s] = seg
        S = tuple(S)
        if satisfies_dominance(S, a, b):
            valid.append(S)
    if not valid:
        raise InvariantViolation(f"no valid run insertion for {format_word(C)}")
    comps = {S: comp(S) for S in valid}
    minimal = [
        S for S in valid
        if not any(T != S and comps[T] != comps[S] and dominates(comps[S], comps[T]) for T in valid)
    ]
    if len(minimal) != 1:
        raise InvariantViolation(
            f"{len(minimal)} dominance-minimal insertions for {format_word(C)}"
        )
    return minimal[0]


def glide_product(a, b):
    """Multiset (Counter) of Comp(BumpRuns(C)) over C in the genomic shuffle set."""
    a, b = weak_composition(a), weak_composition(b)
    return Counter(comp(bump_runs(C, a, b)) for C in gss(a, b))


def glide_product_expansion(a, b):
    """``{GlideIndex(|c| - |a| - |b|, c): multiplicity}``."""
    shift = sum(a) + sum(b)
    return {GlideIndex(sum(c) - shift, c): m for c, m in glide_product(a, b).items()}


def reassemble_product(a, b):
    n = len(a)
    total = PolyZB.zero(n)
    for (k, c), m in glide_product_expansion(a, b).items():
        total += glide_poly(c).times_beta(k) * m
    return total


def lr_coefficients(u, v):
    """Glide coefficients of K_u K_v, keyed by ``GlideIndex(|a| - inv(u) - inv(v), a)``."""
    u, v = permutation(u), permutation(v)
    n = max(len(u), len(v))
    u, v = embed(u, n), embed(v, n)
    shift = inversions(u) + inversions(v)
    out = Counter()
    for P in enumerate_qpd(u):
        for Q in enumerate_qpd(v):
            for c, m in glide_product(P.weight, Q.weight).items():
                out[GlideIndex(sum(c) - shift, c)] += m
    return dict(out)


# shifts of a bumped run sequence, used to check the monomial partition

def shift_set(S):
    """Words obtained from a barred word by repeating letters and moving bars right.

    ``S`` is a run sequence of length n; its barred word has n - 1 bars. Each
    result is returned as its run sequence (segments between bars). Every
    letter may be repeated; bars only move right; letters that end up adjacent
    must strictly increase.
    """
    letters = [x for seg in S for x in seg]
    # bar k sits after this many letters originally
    bar_pos = []
    count = 0
    for seg in S[:-1]:
        count += len(seg)
        bar_pos.append(count)
    nbars = len(bar_pos)
    out = set()
    for mult in product(range(1, nbars + 2), repeat=len(letters)):
        expanded = [x for x, m in zip(letters, mult) for _ in range(m)]
        ends = []
        total = 0
        for m in mult:
            total += m
            ends.append(total)
        lower = [ends[p - 1] if p else 0 for p in bar_pos]

        def place(k, prev, acc):
            if k == nbars:
                cuts = [0] + acc + [len(expanded)]
                segs = tuple(tuple(expanded[cuts[t]:cuts[t + 1]]) for t in range(nbars + 1))
                if all(all(s[t] < s[t + 1] for t in range(len(s) - 1)) for s in segs):
                    out.add(segs)
                return
            for pos in range(max(lower[k], prev), len(expanded) + 1):
                place(k + 1, pos, acc + [pos])

        place(0, 0, [])
    return out


def shift_monomial(D, a_alphabet=is_odd):
    """Monomial (exponent, beta power) of a shifted word.

    A letter counts as red in a segment when it already occurred in an earlier
    segment; each red entry of either factor contributes one beta.
    """
    seen = set()
    exp = []
    reds = 0
    for seg in D:
        exp.append(len(seg))
        red_a = red_b = False
        for x in seg:
            if x in seen:
                if a_alphabet(x.base):
                    red_a = True
                else:
                    red_b = True
        reds += red_a + red_b
        seen.update(seg)
    return tuple(exp), reds
