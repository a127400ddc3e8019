import random
from itertools import product

import pytest

from lzscan.oracle import naive_parse, verify_parse
from lzscan.textmodel import Factor, Parse, ingest


def test_paper_example():
    text, _ = ingest(b"abbabbabbcabab")
    parse = naive_parse(text)
    assert parse.lengths() == [1, 1, 1, 6, 1, 2, 2]
    z4 = parse[3]
    assert not z4.is_literal
    assert z4.pos == 0


def test_overlapping_self_reference():
    text, _ = ingest(b"aaaa")
    parse = naive_parse(text)
    assert parse.lengths() == [1, 3]
    assert parse[0].is_literal
    assert parse[1].pos == 0


def test_all_distinct():
    text, _ = ingest(b"abc")
    parse = naive_parse(text)
    assert parse.lengths() == [1, 1, 1]
    assert all(f.is_literal for f in parse)


def test_verify_accepts_oracle_exhaustive():
    for length in range(0, 11):
        for tup in product((0, 1), repeat=length):
            text, _ = ingest(bytes(tup))
            assert verify_parse(text, naive_parse(text))
    for length in range(0, 7):
        for tup in product((0, 1, 2), repeat=length):
            text, _ = ingest(bytes(tup))
            assert verify_parse(text, naive_parse(text))


def test_verify_accepts_oracle_randomized():
    rng = random.Random(1234)
    for _ in range(200):
        n = rng.randrange(0, 300)
        sigma = rng.choice([2, 3, 4, 16])
        data = bytes(rng.randrange(sigma) for _ in range(n))
        text, _ = ingest(data)
        assert verify_parse(text, naive_parse(text))


def test_verify_rejects_shortened_factor():
    text, _ = ingest(b"abbabbabbcabab")
    parse = naive_parse(text)
    mutated = Parse(list(parse.factors))
    mutated.factors[3] = Factor.reference(5, parse[3].pos)
    verdict = verify_parse(text, mutated)
    assert not verdict.ok
    assert verdict.clause == "maximality"
    assert verdict.factor_index == 3


def test_verify_rejects_bad_position():
    text, _ = ingest(b"abbabbabbcabab")
    parse = naive_parse(text)
    mutated = Parse(list(parse.factors))
    mutated.factors[3] = Factor.reference(6, 1)
    verdict = verify_parse(text, mutated)
    assert not verdict.ok
    assert verdict.clause == "occurrence"
    assert verdict.factor_index == 3


def test_verify_rejects_incomplete_cover():
    text, _ = ingest(b"abab")
    parse = naive_parse(text)
    mutated = Parse(parse.factors[:-1])
    verdict = verify_parse(text, mutated)
    assert not verdict.ok
    assert verdict.clause == "reconstruction"


def test_factor_lengths_deterministic():
    rng = random.Random(99)
    for _ in range(50):
        data = bytes(rng.randrange(3) for _ in range(rng.randrange(1, 120)))
        text, _ = ingest(data)
        a = naive_parse(text).lengths()
        b = naive_parse(text).lengths()
        assert a == b


def test_empty_text():
    text, _ = ingest(b"")
    parse = naive_parse(text)
    assert len(parse) == 0
    assert verify_parse(text, parse)
