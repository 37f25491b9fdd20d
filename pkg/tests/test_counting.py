import random
from collections import Counter
from itertools import product

import pytest

from absquares.counting import (
    Occurrence,
    census,
    census_record,
    count_distinct_ordinary_squares,
    enumerate_abelian_squares,
    enumerate_k_abelian_squares,
    is_abelian_power,
    k_equivalent,
    min_factor_square_mass,
    occurrence_factors,
    verify_restricted_abelian_squares,
)
from absquares.families import fici_block, fici_block_distinct_bound, kucherov, named, power, thue_morse
from absquares.words import Word, complement, render_word, reverse, word


def brute_occurrences(w):
    """Blind oracle: recount both halves from scratch for every (i, l)."""
    n = len(w)
    seq = w.letters + w.letters if w.circular else w.letters
    out = []
    for l in range(1, n // 2 + 1):
        top = n if w.circular else n - 2 * l + 1
        for a in range(top):
            if Counter(seq[a : a + l]) == Counter(seq[a + l : a + 2 * l]):
                out.append(Occurrence(a + 1, l))
    return out


def brute_census(w):
    occ = brute_occurrences(w)
    seq = w.letters + w.letters if w.circular else w.letters
    strings = {seq[o.start - 1 : o.start - 1 + 2 * o.half_length] for o in occ}
    vectors = {
        tuple(sorted(Counter(seq[o.start - 1 : o.start - 1 + o.half_length]).items()))
        for o in occ
    }
    return len(occ), len(strings), len(vectors)


def test_no_abelian_squares_in_ab():
    assert list(enumerate_abelian_squares(word("ab"))) == []


def test_worked_example_occurrence_multiset():
    w = word("ababbaaabaa")
    factors = [render_word(Word(f, 2)) for _, f in occurrence_factors(w)]
    assert len(factors) == 7
    assert Counter(factors) == Counter(
        {"aa": 3, "bb": 1, "abab": 1, "abba": 1, "baaaba": 1}
    )


def test_circular_power_occurrences():
    w = word("aaaa", circular=True)
    assert len(list(enumerate_abelian_squares(w))) == 8


def test_occurrence_order_is_half_length_then_start():
    w = word("aabbaabb")
    occ = list(enumerate_abelian_squares(w))
    assert occ == sorted(occ, key=lambda o: (o.half_length, o.start))


def test_census_examples():
    c = census(word("aabbaabb"))
    assert c.total >= 7 and c.distinct == 7 and c.nonequivalent == 6
    assert census(kucherov(4)).nonequivalent == 13
    c = census(word("aaaa"))
    assert (c.total, c.distinct, c.nonequivalent) == (4, 2, 2)
    assert census(word("aaaaa", circular=True)).distinct == 2


def test_census_keeps_occurrences_on_request():
    c = census(word("abab"), keep_occurrences=True)
    assert c.occurrences == (Occurrence(1, 2),)
    assert census(word("abab")).occurrences is None


def test_census_record_field_names():
    w = word("abab")
    record = census_record(w, census(w, keep_occurrences=True))
    assert record == {
        "word": "abab",
        "topology": "linear",
        "n": 4,
        "total": 1,
        "distinct": 1,
        "nonequivalent": 1,
        "occurrences": [[1, 2]],
    }


def test_circular_distinct_by_rotation_flag():
    w = word("aaaa", circular=True)
    assert census(w).distinct == 2
    assert census(w, circular_distinct_by_rotation=True).distinct == 8


def test_agreement_with_blind_oracle_binary():
    for n in range(15):
        for bits in range(2 ** n):
            letters = tuple((bits >> i) & 1 for i in range(n))
            for circular in (False, True):
                w = Word(letters, 2, circular)
                assert list(enumerate_abelian_squares(w)) == brute_occurrences(w)


def test_agreement_with_blind_oracle_ternary():
    for n in range(10):
        for letters in product(range(3), repeat=n):
            w = Word(letters, 3)
            assert list(enumerate_abelian_squares(w)) == brute_occurrences(w)


def test_census_matches_blind_census_random_topologies():
    rng = random.Random(5)
    for _ in range(300):
        n = rng.randrange(0, 22)
        t = rng.randrange(1, 5)
        circular = rng.random() < 0.5
        w = Word(tuple(rng.randrange(t) for _ in range(n)), t, circular)
        c = census(w)
        assert (c.total, c.distinct, c.nonequivalent) == brute_census(w)


def test_vectorized_scan_matches_python_scan():
    # Same word above and below the vectorisation threshold must agree.
    rng = random.Random(17)
    letters = tuple(rng.randrange(3) for _ in range(400))
    for circular in (False, True):
        big = Word(letters, 3, circular)
        occ = list(enumerate_abelian_squares(big))
        assert occ == brute_occurrences(big)


def test_chain_inequality_random():
    rng = random.Random(23)
    for _ in range(500):
        n = rng.randrange(0, 30)
        t = rng.randrange(2, 5)
        circular = rng.random() < 0.5
        w = Word(tuple(rng.randrange(t) for _ in range(n)), t, circular)
        c = census(w)
        assert c.total >= c.distinct >= c.nonequivalent >= 0


def test_circular_census_dominates_linear():
    rng = random.Random(29)
    for _ in range(300):
        n = rng.randrange(1, 24)
        t = rng.randrange(2, 4)
        letters = tuple(rng.randrange(t) for _ in range(n))
        lin = census(Word(letters, t, False))
        circ = census(Word(letters, t, True))
        assert circ.total >= lin.total
        assert circ.distinct >= lin.distinct
        assert circ.nonequivalent >= lin.nonequivalent


def test_power_word_closed_forms_up_to_64():
    for n in range(65):
        lin = census(Word((0,) * n, 2, False))
        assert lin.total == (n // 2) * ((n + 1) // 2)
        circ = census(Word((0,) * n, 2, True))
        assert circ.total == n * (n // 2)


def test_census_invariant_under_reverse_and_permutation():
    rng = random.Random(31)
    for _ in range(300):
        n = rng.randrange(0, 20)
        t = rng.randrange(2, 4)
        circular = rng.random() < 0.5
        letters = tuple(rng.randrange(t) for _ in range(n))
        w = Word(letters, t, circular)
        base = census(w)
        rev = census(reverse(w))
        perm = tuple(reversed(range(t)))
        permuted = census(Word(tuple(perm[c] for c in letters), t, circular))
        for other in (rev, permuted):
            assert (base.total, base.distinct, base.nonequivalent) == (
                other.total, other.distinct, other.nonequivalent)


def test_is_abelian_power():
    assert is_abelian_power(word("aaa"), 3)
    assert is_abelian_power(word("abbaab"), 3)
    assert not is_abelian_power(word("ababab"), 4)
    assert not is_abelian_power(word("aab"), 2)
    with pytest.raises(ValueError):
        is_abelian_power(word("aa"), 1)


def test_k_equivalent_examples():
    assert k_equivalent(word("abab"), word("abab"), 3)
    assert k_equivalent(word("ab"), word("ba"), 1)
    assert k_equivalent(word("aabab"), word("abaab"), 2)
    assert not k_equivalent(word("aabab"), word("abaab"), 3)
    assert not k_equivalent(word("ab"), word("abc"), 1)
    with pytest.raises(ValueError):
        k_equivalent(word("a"), word("a"), 0)


def test_k_equivalent_oracle_tabulates_two_grams():
    # Independent check of the (aabab, abaab) example: every 1- and 2-gram
    # occurs equally often in both halves.
    x, y = word("aabab").letters, word("abaab").letters
    for length in (1, 2):
        cx = Counter(x[i : i + length] for i in range(len(x) - length + 1))
        cy = Counter(y[i : i + length] for i in range(len(y) - length + 1))
        assert cx == cy


def test_k_equivalence_one_is_parikh_equality():
    rng = random.Random(37)
    for _ in range(200):
        n = rng.randrange(0, 10)
        x = Word(tuple(rng.randrange(2) for _ in range(n)), 2)
        y = Word(tuple(rng.randrange(2) for _ in range(n)), 2)
        parikh_equal = Counter(x.letters) == Counter(y.letters)
        assert k_equivalent(x, y, 1) == parikh_equal


def test_enumerate_k_abelian_squares_examples():
    assert Occurrence(1, 2) in list(enumerate_k_abelian_squares(word("abab"), 2))
    w = word("aabababaab")
    assert w.letters == (0, 0, 1, 0, 1, 0, 1, 0, 0, 1)
    assert Occurrence(1, 5) in list(enumerate_k_abelian_squares(w, 2))
    assert Occurrence(1, 1) in list(enumerate_k_abelian_squares(word("aa"), 5))


def test_k_abelian_hierarchy():
    # Every ordinary square is a k-abelian square for all k; every k-abelian
    # square (k >= 1) is an abelian square.
    rng = random.Random(41)
    for _ in range(120):
        n = rng.randrange(0, 14)
        circular = rng.random() < 0.3
        w = Word(tuple(rng.randrange(2) for _ in range(n)), 2, circular)
        abelian = set(enumerate_abelian_squares(w))
        seq = w.letters + w.letters if w.circular else w.letters
        for k in (1, 2, 3):
            k_occ = set(enumerate_k_abelian_squares(w, k))
            assert k_occ <= abelian
            ordinary = {
                Occurrence(a + 1, l)
                for l in range(1, n // 2 + 1)
                for a in range(n if circular else n - 2 * l + 1)
                if seq[a : a + l] == seq[a + l : a + 2 * l]
            }
            assert ordinary <= k_occ
        assert set(enumerate_k_abelian_squares(w, 1)) == abelian


def test_count_distinct_ordinary_squares_examples():
    assert count_distinct_ordinary_squares(word("aba")) == 0
    assert count_distinct_ordinary_squares(word("aaabaaa")) == 1
    assert count_distinct_ordinary_squares(word("abaabbaaabbbaabbab")) == 2


def test_min_factor_square_mass():
    assert min_factor_square_mass(power(10, alphabet_size=2), 4) == 4
    assert min_factor_square_mass(word("ab" + "a" * 8 + "b"), 2) == 0
    with pytest.raises(ValueError):
        min_factor_square_mass(word("ab"), 3)


def test_min_factor_square_mass_thue_morse_regression():
    # Frozen from an independent per-window recount; the probe behind the
    # quadratic-density claim stays positive on the Thue-Morse prefix.
    assert min_factor_square_mass(thue_morse(1024), 16) == 23


def test_verify_restricted_examples():
    ok, violation = verify_restricted_abelian_squares(word("abab"), 2)
    assert not ok and violation == (2, 1)
    assert verify_restricted_abelian_squares(word("abc"), 2) == (True, None)
    with pytest.raises(ValueError):
        verify_restricted_abelian_squares(word("abc"), 3)


def test_verify_restricted_appendix_word():
    ok, violation = verify_restricted_abelian_squares(named("appendix"), 2)
    assert ok and violation is None


def test_verify_restricted_reports_least_violation():
    rng = random.Random(43)
    for _ in range(100):
        n = rng.randrange(2, 18)
        w = Word(tuple(rng.randrange(2) for _ in range(n)), 2)
        bound = 2 * rng.randrange(0, 4)
        ok, violation = verify_restricted_abelian_squares(w, bound)
        long_occ = [
            (o.half_length, o.start)
            for o in enumerate_abelian_squares(w)
            if 2 * o.half_length > bound
        ]
        if long_occ:
            assert not ok and violation == min(long_occ)
        else:
            assert ok and violation is None


def test_fici_block_distinct_lower_bound():
    for k in range(1, 13):
        assert census(fici_block(k)).distinct >= fici_block_distinct_bound(k)
