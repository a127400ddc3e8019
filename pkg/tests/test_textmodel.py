import pytest
from array import array

from hypothesis import given, settings
from hypothesis import strategies as st

from lzscan.textmodel import ContractViolation, Factor, PackedText, Parse, ingest


def test_ingest_basic():
    text, alpha = ingest(b"aab")
    assert list(text.codes) == [0, 1, 1, 2]
    assert text.sigma == 4
    assert text.n == 4
    assert text.r == 1
    assert alpha.code_of[ord("a")] == 1
    assert alpha.code_of[ord("b")] == 2
    assert alpha.decode(2) == ord("b")


def test_ingest_empty():
    text, alpha = ingest(b"")
    assert list(text.codes) == [0]
    assert text.n == 1


def test_ingest_many_distinct():
    data = bytes(range(255))
    text, alpha = ingest(data)
    assert text.sigma == 256
    data = bytes(range(256))
    text, alpha = ingest(data)
    assert text.sigma == 512
    # round trip
    assert bytes(alpha.decode(c) for c in text.codes[1:]) == data


def test_sigma_bounds():
    for k in range(1, 40):
        text, alpha = ingest(bytes(range(k)) * 2)
        distinct = k
        assert text.sigma >= distinct + 1
        assert text.sigma <= 2 * (distinct + 1)
        assert text.sigma & (text.sigma - 1) == 0


def test_pack_digit_order():
    # sigma=4, codes [1,2] at position 1 -> 1*4+2
    text = PackedText(array("h", [0, 1, 2, 1, 1, 2, 3, 1, 2, 1, 1, 2, 3, 2, 1, 2, 3]), 4)
    assert text.r >= 2
    assert text.pack(1, 2) == 6
    assert text.pack(1, 0) == 0


def test_pack_tail_padding():
    text = PackedText(array("h", [0, 1, 2, 3]), 4)
    n = text.n
    assert text.pack(n - 1, 1) == 3
    # one symbol then sentinel padding
    if text.r >= 2:
        assert text.pack(n - 1, 2) == 3 * 4


def test_pack_radix_guard():
    text, _ = ingest(b"aab")
    with pytest.raises(ContractViolation):
        text.pack(0, text.r + 1)


def _ref_lcp(codes, n, i, j, maxlen):
    def at(k):
        return codes[k] if 0 <= k < n else 0
    l = 0
    while l < maxlen and at(i + l) == at(j + l):
        l += 1
    if l == maxlen:
        return l, 0
    a, b = at(i + l), at(j + l)
    return l, (-1 if a < b else 1)


def test_lcp_compare_identity():
    text, _ = ingest(b"abracadabra")
    assert text.lcp_compare(3, 3, 7) == (7, 0)


def test_lcp_compare_example():
    text, _ = ingest(b"abbabbc")
    # suffixes at internal 1 and 4: "abbabbc" vs "abbc", diverge at offset 3
    lcp, order = text.lcp_compare(1, 4, 6)
    assert lcp == 3
    assert order == -1  # 'a' < 'c'


def test_lcp_compare_first_symbol_differs():
    text, _ = ingest(b"ab")
    lcp, order = text.lcp_compare(1, 2, 5)
    assert lcp == 0
    assert order == -1


@settings(max_examples=300, deadline=None)
@given(
    data=st.lists(st.integers(min_value=0, max_value=3), min_size=0, max_size=60),
    seed=st.integers(min_value=0, max_value=10**6),
)
def test_lcp_compare_property(data, seed):
    text, _ = ingest(bytes(data))
    n = text.n
    import random

    rng = random.Random(seed)
    for _ in range(5):
        i = rng.randrange(0, n + 3)
        j = rng.randrange(0, n + 3)
        maxlen = rng.randrange(0, n + 4)
        got = text.lcp_compare(i, j, maxlen)
        assert got == _ref_lcp(text.codes, n, i, j, maxlen)


@settings(max_examples=200, deadline=None)
@given(data=st.lists(st.integers(min_value=0, max_value=5), min_size=2, max_size=50))
def test_pack_preserves_order(data):
    text, _ = ingest(bytes(data))
    n, r = text.n, text.r
    for length in range(1, r + 1):
        for i in range(n):
            for j in range(n):
                u = [text.code_at(i + k) for k in range(length)]
                v = [text.code_at(j + k) for k in range(length)]
                assert (text.pack(i, length) < text.pack(j, length)) == (u < v)


def test_factor_model():
    lit = Factor.literal(3)
    assert lit.is_literal and lit.length == 1
    ref = Factor.reference(4, 0)
    assert not ref.is_literal
    with pytest.raises(ContractViolation):
        Factor(2, lit=1)
    with pytest.raises(ContractViolation):
        Factor(1)
    p = Parse([Factor.literal(1), Factor.reference(3, 0)])
    assert p.starts() == [0, 1]
    assert p.lengths() == [1, 3]
    assert p.total_length() == 4
