import random

import pytest

from absquares.counting import census
from absquares.search import (
    ProblemSpec,
    SearchBudgetExceeded,
    problem_grid,
    solve,
    solve_blind,
)
from absquares.words import Word, render_word, word


def test_problem_spec_validation():
    with pytest.raises(ValueError):
        ProblemSpec("best", "total", "linear", 4, 2)
    with pytest.raises(ValueError):
        ProblemSpec("max", "total", "linear", 0, 2)
    with pytest.raises(ValueError):
        ProblemSpec("max", "total", "linear", 4, 1)
    assert ProblemSpec("max", "total", "linear", 4, 2).shorthand() == "XTL(4)"
    assert ProblemSpec("min", "noneq", "circular", 6, 2).shorthand() == "MNC(6)"


def test_solve_max_distinct_example():
    result = solve(ProblemSpec("max", "distinct", "linear", 8, 2))
    assert result.value == 7
    assert word("aabbaabb").letters in {w.letters for w in result.canonical_witnesses}


def test_solve_min_total_example():
    result = solve(ProblemSpec("min", "total", "linear", 12, 2))
    assert result.value == 8
    assert result.witness_count == 2


def test_solve_min_total_trivial():
    result = solve(ProblemSpec("min", "total", "linear", 1, 2))
    assert result.value == 0
    assert result.witness_count == 2


def test_solve_min_noneq_attaining_set():
    result = solve(ProblemSpec("min", "noneq", "linear", 7, 2))
    assert result.value == 1
    expected = {
        word("aaabaaa").letters,
        word("bbbabbb").letters,
        word("abababa").letters,
        word("bababab").letters,
    }
    assert result.attaining_words() == expected


def test_closed_forms_small():
    for n in range(1, 11):
        lin = solve(ProblemSpec("max", "total", "linear", n, 2))
        assert lin.value == (n // 2) * ((n + 1) // 2)
        assert (0,) * n in {w.letters for w in lin.canonical_witnesses}
        circ = solve(ProblemSpec("max", "total", "circular", n, 2))
        assert circ.value == n * (n // 2)


def _same_outcome(a, b):
    return (
        a.value == b.value
        and a.witness_count == b.witness_count
        and a.attaining_words() == b.attaining_words()
        and {w.letters for w in a.canonical_witnesses}
        == {w.letters for w in b.canonical_witnesses}
    )


@pytest.mark.parametrize("n", [1, 2, 5, 8])
def test_grid_matches_blind_oracle_binary(n):
    for problem in problem_grid(n, 2):
        assert _same_outcome(solve(problem), solve_blind(problem))


@pytest.mark.parametrize("n", [3, 6])
def test_grid_matches_blind_oracle_ternary(n):
    for problem in problem_grid(n, 3):
        assert _same_outcome(solve(problem), solve_blind(problem))


def test_extension_monotonicity_exhaustive():
    # Appending a letter never decreases any census mode (linear words);
    # this is the property that justifies min-search pruning.
    for n in range(0, 9):
        for bits in range(2 ** n):
            letters = tuple((bits >> i) & 1 for i in range(n))
            base = census(Word(letters, 2))
            for c in range(2):
                ext = census(Word(letters + (c,), 2))
                assert ext.total >= base.total
                assert ext.distinct >= base.distinct
                assert ext.nonequivalent >= base.nonequivalent


def test_extension_monotonicity_random_ternary():
    rng = random.Random(47)
    for _ in range(300):
        n = rng.randrange(0, 12)
        letters = tuple(rng.randrange(3) for _ in range(n))
        base = census(Word(letters, 3))
        ext = census(Word(letters + (rng.randrange(3),), 3))
        assert ext.total >= base.total
        assert ext.distinct >= base.distinct
        assert ext.nonequivalent >= base.nonequivalent


def test_witness_cap_keeps_count_exact():
    capped = solve(ProblemSpec("min", "total", "linear", 5, 2), witness_cap=2)
    full = solve(ProblemSpec("min", "total", "linear", 5, 2))
    assert capped.value == full.value == 2
    assert capped.witness_count == full.witness_count == 18
    assert capped.witness_capped
    assert len(capped.reduced_witnesses) == 2
    with pytest.raises(RuntimeError):
        capped.attaining_words()


def test_task_depth_and_threads_do_not_change_results():
    problem = ProblemSpec("max", "noneq", "linear", 10, 2)
    base = solve(problem)
    for task_depth in (0, 3, 9):
        assert _same_outcome(base, solve(problem, task_depth=task_depth))
    threaded = solve(problem, threads=2)
    assert _same_outcome(base, threaded)
    assert base.to_dict() == threaded.to_dict()


def test_budget_error_names_problem():
    with pytest.raises(SearchBudgetExceeded) as info:
        solve(ProblemSpec("max", "distinct", "linear", 14, 2), node_budget=100)
    assert "n=14" in str(info.value)
    assert info.value.nodes >= 100


def test_checkpoint_resume_continues_exactly(tmp_path):
    problem = ProblemSpec("max", "distinct", "linear", 11, 2)
    state = tmp_path / "state.json"
    with pytest.raises(SearchBudgetExceeded):
        solve(problem, node_budget=300, state_path=state)
    assert state.exists()
    resumed = solve(problem, state_path=state)
    assert _same_outcome(resumed, solve(problem))


def test_checkpoint_rejects_different_problem(tmp_path):
    state = tmp_path / "state.json"
    with pytest.raises(SearchBudgetExceeded):
        solve(ProblemSpec("max", "distinct", "linear", 11, 2),
              node_budget=300, state_path=state)
    with pytest.raises(ValueError):
        solve(ProblemSpec("max", "distinct", "linear", 12, 2), state_path=state)


def test_circular_witnesses_are_rotation_closed():
    result = solve(ProblemSpec("min", "distinct", "circular", 5, 2))
    assert result.value == 2
    attain = result.attaining_words()
    for letters in attain:
        for r in range(len(letters)):
            assert letters[r:] + letters[:r] in attain
    reps = {render_word(w) for w in result.canonical_witnesses}
    assert reps == {"aaaaa", "aaaab"}
