import pytest

from absquares.families import (
    fici_block,
    fici_block_distinct_bound,
    generate,
    kucherov,
    named,
    power,
    thue_morse,
)
from absquares.words import render_word


def test_power():
    assert render_word(power(4)) == "aaaa"
    assert len(power(0)) == 0


def test_kucherov_base_and_recurrence():
    assert render_word(kucherov(1)) == "ab"
    assert render_word(kucherov(2)) == "abaabb"
    for k in range(2, 8):
        prev = kucherov(k - 1).letters
        cur = kucherov(k).letters
        assert cur[: len(prev)] == prev
        assert cur[len(prev):] == (0,) * k + (1,) * k


def test_kucherov_length():
    for k in range(1, 10):
        assert len(kucherov(k)) == k * (k + 1)


def test_fici_block():
    assert render_word(fici_block(1)) == "ababaa"
    assert render_word(fici_block(2)) == "aabaabaaaa"
    for k in range(1, 13):
        assert len(fici_block(k)) == 4 * k + 2


def test_fici_block_distinct_bound_value():
    assert fici_block_distinct_bound(4) == 23


def test_thue_morse_prefix():
    assert render_word(thue_morse(16), "digits") == "0110100110010110"


def test_thue_morse_recurrence():
    t = thue_morse(512).letters
    for i in range(256):
        assert t[2 * i] == t[i]
        assert t[2 * i + 1] == 1 - t[i]


def test_named_words():
    assert len(named("appendix")) == 2034
    assert render_word(named("ternary-0")) == "abacaba"
    assert render_word(named("binary-1")) == "aaabaaa"
    assert render_word(named("xdl-8")) == "aabbaabb"
    assert render_word(named("mtl-11")) == "ababbaaabaa"
    with pytest.raises(KeyError):
        named("no-such-word")


def test_generate_dispatch():
    assert render_word(generate("kucherov", 2)) == "abaabb"
    assert render_word(generate("power", "5")) == "aaaaa"
    assert len(generate("named", "appendix")) == 2034
    with pytest.raises(KeyError):
        generate("unknown", 1)


def test_family_parameter_validation():
    for builder in (fici_block, kucherov):
        with pytest.raises(ValueError):
            builder(0)
    with pytest.raises(ValueError):
        thue_morse(-1)
