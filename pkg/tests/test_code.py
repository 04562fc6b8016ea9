"""Code parsing, encoding and canonical forms."""

import random

import pytest

import oracles
from gemcensus import (
    CodeError,
    ColoredGraph,
    GemCode,
    canonical_code,
    decode,
    encode_labeled,
)
from gemcensus.tables import KNOT16_CODES


def test_decode_permutation_reading():
    g = decode("CABCBABCA")
    assert g.order == 6
    p = 3
    # color 0 joins i to p+i
    assert all(g.matchings[0][i] == p + i for i in range(p))
    # rows CAB / CBA / BCA as 1-based permutations (1,2,3) -> images
    assert [g.matchings[1][i] - p + 1 for i in range(p)] == [3, 1, 2]
    assert [g.matchings[2][i] - p + 1 for i in range(p)] == [3, 2, 1]
    assert [g.matchings[3][i] - p + 1 for i in range(p)] == [2, 3, 1]


def test_decode_encode_roundtrip(catalog_rows):
    for row in catalog_rows:
        assert encode_labeled(decode(row.code)) == row.code


def test_code_text_errors():
    with pytest.raises(CodeError):
        decode("CABCBABC")        # length not divisible by 3
    with pytest.raises(CodeError) as err:
        decode("CABCCABCA")       # row 1 repeats C
    assert err.value.row == 1
    with pytest.raises(CodeError):
        decode("Abc")             # mixed case
    with pytest.raises(CodeError):
        decode("ABABAB")          # valid rows but a disconnected graph
    with pytest.raises(CodeError):
        decode("")


def test_gemcode_order():
    assert GemCode("CABCBABCA").order == 6
    assert GemCode("CABCBABCA").bipartite


def test_canonical_idempotent(catalog_rows):
    for row in catalog_rows[:8]:
        g = decode(row.code)
        canon = canonical_code(g)
        assert canonical_code(decode(canon)) == canon


def test_canonical_invariance_random():
    rng = random.Random(41)
    for text in ("CABCBABCA", "DABCCDABBCDA"):
        g = decode(text)
        canon = canonical_code(g).text
        for _ in range(50):
            perm = list(range(g.order))
            rng.shuffle(perm)
            sigma = list(range(4))
            rng.shuffle(sigma)
            ms = oracles.recolor(oracles.relabel(g.matchings, perm), sigma)
            assert canonical_code(ColoredGraph.from_matchings(ms)).text == canon


def test_two_knot16_codes_not_isomorphic():
    a, b = (canonical_code(decode(c)) for c in KNOT16_CODES)
    assert a != b
    assert not oracles.brute_iso(*(decode(c).matchings for c in KNOT16_CODES))


def test_nonbipartite_code_roundtrip():
    rng = random.Random(43)
    for _ in range(10):
        ms = oracles.random_graph(rng, 8)
        g = ColoredGraph.from_matchings(ms)
        canon = canonical_code(g)
        h = decode(canon)
        assert oracles.brute_iso(g.matchings, h.matchings)
        assert canonical_code(h) == canon
        from gemcensus import is_bipartite
        assert canon.text.isupper() == is_bipartite(g)


def test_canonical_agrees_with_brute_iso():
    rng = random.Random(47)
    graphs = [oracles.random_graph(rng, 8) for _ in range(12)]
    graphs += [oracles.random_graph(rng, 8, bipartite=True) for _ in range(6)]
    codes = [canonical_code(ColoredGraph.from_matchings(ms)).text
             for ms in graphs]
    for i in range(len(graphs)):
        for j in range(i + 1, len(graphs)):
            assert (codes[i] == codes[j]) == oracles.brute_iso(
                graphs[i], graphs[j])


def test_code_order_cap():
    # beyond the 26-letter alphabet for vertex labels
    rng = random.Random(1)
    g = ColoredGraph.from_matchings(oracles.random_graph(rng, 60))
    with pytest.raises(ValueError):
        canonical_code(g)
