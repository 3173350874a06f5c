import pytest

from glidepoly.basis import glide_poly, reassemble_glide
from glidepoly.composition import dominates, weak_compositions
from glidepoly.genomic import (
    Letter,
    bump_runs,
    comp,
    genomic_shuffle,
    genomic_shuffle_bruteforce,
    genotypes_of_runs,
    genotypes_of_word,
    glide_product,
    glide_words,
    gss,
    gss_length_bound,
    is_genomic_member,
    is_even,
    lr_coefficients,
    parse_word,
    format_word,
    reassemble_product,
    runs,
    shift_monomial,
    shift_set,
    shuffle,
)
from glidepoly.grothendieck import grothendieck_poly
from glidepoly.pipedream import all_permutations
from glidepoly.polyring import PolyZB
from oracles import GENOMIC_COUNTS, GENOMIC_LENGTH6, GSS_021_101, SHUFFLE_331_62

A, B = (3, 3, 1), (6, 2)
GRID = [a for t in range(4) for a in weak_compositions(t, 3)]
PAIRS = [(a, b) for a in GRID for b in GRID]


def test_plain_shuffle():
    got = {"".join(map(str, w)) for w in shuffle(A, B)}
    assert got == set(SHUFFLE_331_62)
    with pytest.raises(ValueError):
        shuffle((1, 2), (2,))


def test_genomic_counts():
    words = genomic_shuffle(A, B, 8)
    counts = {}
    for C in words:
        counts[len(C)] = counts.get(len(C), 0) + 1
    assert counts == GENOMIC_COUNTS


def test_length6_table():
    words = {C for C in genomic_shuffle(A, B, 6) if len(C) == 6}
    assert words == {parse_word(w) for w in GENOMIC_LENGTH6}


def test_generator_matches_definition():
    assert set(genomic_shuffle(A, B, 7)) == set(genomic_shuffle_bruteforce(A, B, 7))
    for C in genomic_shuffle(A, B, 6):
        assert is_genomic_member(C, A, B)


def test_genotypes_example():
    C = parse_word("6^1 3^1 2^1 3^1 3^2 1^1")
    assert genotypes_of_word(C) == {(6, 3, 2, 3, 1), (6, 2, 3, 3, 1)}


def test_runs_example():
    C = parse_word("6^1 3^1 6^1 3^2 1^1 2^1")
    S = runs(C)
    assert [format_word(s) for s in S] == ["6^1", "3^1 6^1", "3^2", "1^1 2^1"]
    assert comp(S) == (1, 2, 1, 2)
    G = genotypes_of_runs(S)
    assert G == {((6,), (3,), (3,), (1, 2)), ((), (3, 6), (3,), (1, 2))}
    assert {comp(g, is_even) for g in G} == {(1, 0, 0, 1), (0, 1, 0, 1)}


def test_word_parse_round_trip():
    C = parse_word("3^1 3^2 6^1 1^1 2^1")
    assert C[1] == Letter(3, 2)
    assert format_word(C) == "3^1 3^2 6^1 1^1 2^1"
    with pytest.raises(ValueError):
        parse_word("3 3^2")


def test_gss_example():
    assert glide_words((0, 2, 1), (1, 0, 1)) == (A, B)
    got = gss((0, 2, 1), (1, 0, 1))
    assert set(got) == {parse_word(w) for w in GSS_021_101}
    assert len(got) == 17


def test_bump_runs_example():
    C = parse_word("3^1 3^2 6^1 1^1 2^1")
    S = bump_runs(C, (0, 2, 1), (1, 0, 1))
    assert [format_word(s) for s in S] == ["3^1 3^2 6^1", "", "1^1 2^1"]
    assert comp(S) == (3, 0, 2)


def test_shift_set_example():
    C = parse_word("3^1 3^2 6^1 1^1 2^1")
    D = shift_set(bump_runs(C, (0, 2, 1), (1, 0, 1)))
    assert len(D) == 5
    monos = sorted(shift_monomial(x) for x in D)
    assert monos == [((3, 0, 2), 0), ((3, 1, 1), 0), ((3, 1, 2), 1), ((3, 2, 0), 0), ((3, 2, 1), 1)]
    total = PolyZB.from_flat(3, ((e, k, 1) for e, k in monos))
    assert total.specialize_beta(1) == glide_poly((3, 0, 2)).specialize_beta(1)


def test_rightmost_rule_on_example():
    assert set(gss((0, 2, 1), (1, 0, 1), rule="rightmost")) == set(gss((0, 2, 1), (1, 0, 1)))


@pytest.mark.parametrize("a,b", PAIRS)
def test_structure_constants(a, b):
    assert reassemble_product(a, b) == glide_poly(a) * glide_poly(b)


@pytest.mark.parametrize("a,b", PAIRS)
def test_gss_length_bound_and_interval(a, b):
    bound = gss_length_bound(a, b)
    words = gss(a, b, maxlen=bound + 1)
    assert all(len(C) <= bound for C in words)
    lo = sum(a) + sum(b)
    sizes = {sum(c) for c in glide_product(a, b)}
    assert all(lo <= s <= bound for s in sizes)
    # every size above the minimum has its predecessor present
    assert all(s - 1 in sizes for s in sizes if s > lo)
    if a[-1] and b[-1]:
        assert max(len(C) for C in words) == bound


@pytest.mark.parametrize("a,b", PAIRS)
def test_rightmost_genotype_rule_agrees(a, b):
    assert set(gss(a, b, rule="rightmost")) == set(gss(a, b))


@pytest.mark.parametrize("a,b", PAIRS)
def test_product_commutes(a, b):
    assert reassemble_product(a, b) == reassemble_product(b, a)


def test_product_shapes_have_length_n():
    for a, b in PAIRS[::13]:
        for c in glide_product(a, b):
            assert len(c) == 3


@pytest.mark.parametrize("u", all_permutations(3))
@pytest.mark.parametrize("v", all_permutations(3))
def test_lr_rule(u, v):
    exp = lr_coefficients(u, v)
    assert reassemble_glide(exp, 3) == grothendieck_poly(u) * grothendieck_poly(v)
    assert all(c > 0 for c in exp.values())


def test_lr_identity():
    assert lr_coefficients((1,), (1,)) == {(0, (0,)): 1}
