import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from palsym import (
    GameSolver,
    GameState,
    LengthBudgetExceeded,
    Player,
    TerminalStateError,
    all_words,
    engine_move,
    game_value,
    legal_moves,
    max_game_value,
    mirror_move,
    opening_word,
    parse_word,
    replay,
    sd,
    transcript,
)


def test_legal_moves():
    state = GameState(parse_word("aab"), Player.MINIMIZER)
    assert legal_moves(state) == [1, 2, 3]
    assert legal_moves(GameState(parse_word("aaba"), Player.MAXIMIZER)) == [
        1,
        2,
        3,
        4,
    ]
    with pytest.raises(TerminalStateError):
        legal_moves(GameState(parse_word("ab"), Player.MINIMIZER))


def test_game_value_examples():
    assert game_value(parse_word("ab")).value == 0
    assert game_value(parse_word("ab")).principal_line == ()
    assert game_value(parse_word("aab")).value == 1
    assert game_value(parse_word("aabbbb")).value >= 2


def test_game_value_guard():
    with pytest.raises(LengthBudgetExceeded):
        game_value(parse_word("a" * 21))


def test_replay_principal_line():
    for text in ("aab", "aabab", "aabbbb", "babbaab"):
        word = parse_word(text)
        outcome = game_value(word)
        records = replay(word, outcome.principal_line)
        assert len(records) == outcome.value
        final = records[-1].result if records else word
        assert final.is_symmetric()
        if records:
            assert all(not r.result.is_symmetric() for r in records[:-1])


def test_replay_validates_moves():
    with pytest.raises(TerminalStateError):
        replay(parse_word("ab"), [1])
    with pytest.raises(IndexError):
        replay(parse_word("aab"), [4])


def test_mover_alternation_starts_with_minimizer():
    records = replay(parse_word("aabab"), game_value(parse_word("aabab")).principal_line)
    expected = [Player.MINIMIZER, Player.MAXIMIZER] * 3
    assert [r.mover for r in records] == expected[: len(records)]


def test_termination_bound_exhaustive():
    """Every game ends within length - 2 moves (all words <= 8)."""
    solver = GameSolver()
    for n in range(9):
        for w in all_words(n):
            assert solver.value(w) <= max(0, n - 2)


def test_memo_agrees_with_plain_recursion():
    """Memoized values equal a memo-free reference (all words <= 6; the
    acceptance suite extends this to 8)."""

    def plain(word, mover):
        if word.is_symmetric():
            return 0
        child = (
            plain(word.delete(p), mover.other) for p in range(1, len(word) + 1)
        )
        best = min(child) if mover is Player.MINIMIZER else max(child)
        return 1 + best

    solver = GameSolver()
    for n in range(7):
        for w in all_words(n):
            assert solver.value(w) == plain(w, Player.MINIMIZER)


def test_max_game_value_small():
    assert max_game_value(2) == (0, parse_word("aa"))
    value, word = max_game_value(3)
    assert value == 1
    assert not word.is_symmetric()


def test_max_game_value_guard():
    with pytest.raises(LengthBudgetExceeded):
        max_game_value(15)
    with pytest.raises(ValueError):
        max_game_value(0)


def test_max_game_value_is_maximum():
    solver = GameSolver()
    for n in (4, 6, 7):
        value, word = max_game_value(n)
        assert value == max(solver.value(w) for w in all_words(n))
        assert solver.value(word) == value


def test_opening_word_examples():
    assert str(opening_word(6)) == "aabbbb"
    assert str(opening_word(7)) == "aabbbbb"
    assert len(opening_word(11)) == 11
    with pytest.raises(ValueError):
        opening_word(5)


def test_opening_word_guarantee_small():
    for n in range(6, 11):
        assert game_value(opening_word(n)).value >= n - 4


def test_mirror_move():
    assert mirror_move(parse_word("abbb"), "a") == 2
    assert mirror_move(parse_word("bbb"), "b") == 1
    with pytest.raises(TerminalStateError):
        mirror_move(parse_word("ab"), "a")


def test_engine_move_exact():
    state = GameState(parse_word("aab"), Player.MINIMIZER)
    assert engine_move(state, "exact") == 1
    with pytest.raises(TerminalStateError):
        engine_move(GameState(parse_word("ab"), Player.MINIMIZER), "exact")


def test_engine_move_exact_is_optimal():
    solver = GameSolver()
    for text in ("aabab", "aabbbb", "abaab"):
        word = parse_word(text)
        for mover in Player:
            state = GameState(word, mover)
            pos = engine_move(state, "exact")
            value = solver.value(word, mover)
            assert solver.value(word.delete(pos), mover.other) == value - 1


def test_engine_move_heuristic_mirror():
    state = GameState(parse_word("aabbbb"), Player.MAXIMIZER)
    pos = engine_move(state, "heuristic", last_deleted="a")
    assert state.word.letter_at(pos) == "b"
    assert pos == 3  # leftmost b


def test_engine_move_heuristic_minimizer_resolves_fast():
    state = GameState(parse_word("aab"), Player.MINIMIZER)
    pos = engine_move(state, "heuristic")
    assert game_value(state.word.delete(pos)).value == 0


def test_engine_move_rejects_unknown_mode():
    with pytest.raises(ValueError):
        engine_move(GameState(parse_word("aab"), Player.MINIMIZER), "mystery")


def test_transcript_from_principal_line():
    word = parse_word("aabab")
    outcome = game_value(word)
    data = transcript(word, outcome.principal_line)
    assert data["initial"] == "aabab"
    assert data["move_count"] == outcome.value
    assert data["final_class"] in ("palindrome", "antipalindrome", "both")
    assert len(data["moves"]) == outcome.value
    assert data["moves"][0]["player"] == "second"


@given(st.text(alphabet="ab", min_size=1, max_size=9))
@settings(max_examples=60, deadline=None)
def test_value_matches_principal_line_length(text):
    word = parse_word(text)
    outcome = game_value(word)
    assert len(outcome.principal_line) == outcome.value
    assert outcome.value <= max(0, len(word) - 2)
    # the game ends at a symmetric word, so its length is a deletion set
    assert sd(word).value <= outcome.value
    if not word.is_symmetric():
        assert outcome.value >= 1
