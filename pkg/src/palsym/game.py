"""Adversarial single-deletion game on a binary word.

Two players alternately delete one letter; the game stops as soon as the
word is a palindrome or an antipalindrome, and the score is the total
number of moves made.  The player who owns the starting word wants a long
game (the maximizer), the opponent wants a short one (the minimizer), and
the minimizer moves first.  Values are exact minimax counts memoized per
(word, mover).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .deletions import sd
from .errors import LengthBudgetExceeded, TerminalStateError
from .words import SymmetryClass, Word, complement_letter, parse_word

# All subsequences of the start word are potential states.
GAME_MAX_LENGTH = 20
# Full scan over starting words shares one memo table.
SCAN_MAX_LENGTH = 14


class Player(Enum):
    MINIMIZER = "minimizer"  # the second player; moves first
    MAXIMIZER = "maximizer"  # owns the starting word

    @property
    def other(self) -> "Player":
        return Player.MAXIMIZER if self is Player.MINIMIZER else Player.MINIMIZER


@dataclass(frozen=True, slots=True)
class GameState:
    word: Word
    mover: Player

    def is_terminal(self) -> bool:
        return self.word.is_symmetric()


@dataclass(frozen=True, slots=True)
class GameOutcome:
    """Exact move count under optimal play plus one optimal line.

    ``principal_line`` holds 1-based positions into the successively
    shorter words; replaying it from the start reaches a symmetric word in
    exactly ``value`` moves.
    """

    value: int
    principal_line: tuple[int, ...]


def legal_moves(state: GameState) -> list[int]:
    """Every deletable position, 1-based."""
    if state.is_terminal():
        raise TerminalStateError(f"word {state.word} is already symmetric")
    return list(range(1, len(state.word) + 1))


class GameSolver:
    """Memoized minimax solver; one instance may serve many words."""

    def __init__(self) -> None:
        self._memo: dict[tuple[Word, Player], int] = {}

    def value(self, word: Word, mover: Player = Player.MINIMIZER) -> int:
        """Moves remaining under optimal play from this state."""
        if word.is_symmetric():
            return 0
        key = (word, mover)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        opponent = mover.other
        children = (
            self.value(word.delete(pos), opponent)
            for pos in range(1, len(word) + 1)
        )
        best = min(children) if mover is Player.MINIMIZER else max(children)
        result = 1 + best
        self._memo[key] = result
        return result

    def best_move(self, state: GameState) -> int:
        """Lowest position whose successor preserves the minimax value."""
        if state.is_terminal():
            raise TerminalStateError(f"word {state.word} is already symmetric")
        target = self.value(state.word, state.mover) - 1
        opponent = state.mover.other
        for pos in range(1, len(state.word) + 1):
            if self.value(state.word.delete(pos), opponent) == target:
                return pos
        raise AssertionError("some move must attain the minimax value")

    def outcome(self, word: Word, mover: Player = Player.MINIMIZER) -> GameOutcome:
        total = self.value(word, mover)
        line = []
        current, to_move = word, mover
        while not current.is_symmetric():
            pos = self.best_move(GameState(current, to_move))
            line.append(pos)
            current = current.delete(pos)
            to_move = to_move.other
        return GameOutcome(total, tuple(line))


def game_value(word: Word, solver: GameSolver | None = None) -> GameOutcome:
    """Exact minimax outcome with the minimizer to move first."""
    if len(word) > GAME_MAX_LENGTH:
        raise LengthBudgetExceeded(
            f"game solver supports at most {GAME_MAX_LENGTH} letters, got {len(word)}"
        )
    solver = solver if solver is not None else GameSolver()
    return solver.outcome(word)


def max_game_value(n: int) -> tuple[int, Word]:
    """Best achievable game value over all starting words of length n.

    Returns the value and the lexicographically least word attaining it.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > SCAN_MAX_LENGTH:
        raise LengthBudgetExceeded(
            f"full scan supports at most {SCAN_MAX_LENGTH} letters, got {n}"
        )
    solver = GameSolver()
    best_value, best_word = -1, None
    for bits in range(1 << n):
        word = Word(n, bits)
        value = solver.value(word)
        if value > best_value:
            best_value, best_word = value, word
    assert best_word is not None
    return best_value, best_word


def opening_word(n: int) -> Word:
    """A two-block opening for the maximizer, defined for n >= 6.

    a^k b^(k+2) for even n and a^k b^(k+3) for odd n; paired with the
    mirror reply it forces at least n - 4 moves.
    """
    if n < 6:
        raise ValueError(f"opening word defined for n >= 6, got {n}")
    if n % 2 == 0:
        k = (n - 2) // 2
        return parse_word("a" * k + "b" * (k + 2))
    k = (n - 3) // 2
    return parse_word("a" * k + "b" * (k + 3))


def mirror_move(current: Word, opponent_deleted: str) -> int:
    """Delete the leftmost letter complementary to the opponent's choice.

    Falls back to position 1 when no complementary letter remains; this is
    checked before the terminal guard because a one-letter-kind word is
    always a palindrome, so the fallback could never fire otherwise.
    """
    wanted = complement_letter(opponent_deleted)
    found = str(current).find(wanted)
    if found < 0:
        return 1
    if current.is_symmetric():
        raise TerminalStateError(f"word {current} is already symmetric")
    return found + 1


def engine_move(
    state: GameState,
    mode: str = "exact",
    last_deleted: str | None = None,
) -> int:
    """Choose a move for ``state.mover``.

    ``exact`` follows a principal line of the minimax solver.  ``heuristic``
    plays the mirror rule for the maximizer (position 1 when the opponent
    has not moved yet) and, for the minimizer, greedily picks the move whose
    successor resolves fastest, scoring successors exactly when they fit the
    solver guard and by their sd value otherwise.  Ties go to the leftmost
    position.
    """
    if state.is_terminal():
        raise TerminalStateError(f"word {state.word} is already symmetric")
    if mode == "exact":
        if len(state.word) > GAME_MAX_LENGTH:
            raise LengthBudgetExceeded(
                f"exact engine supports at most {GAME_MAX_LENGTH} letters"
            )
        return GameSolver().best_move(state)
    if mode != "heuristic":
        raise ValueError(f"unknown engine mode {mode!r}")

    if state.mover is Player.MAXIMIZER:
        if last_deleted is None:
            return 1
        return mirror_move(state.word, last_deleted)

    solver = GameSolver()
    best_pos, best_score = 1, None
    for pos in range(1, len(state.word) + 1):
        successor = state.word.delete(pos)
        if len(successor) <= GAME_MAX_LENGTH:
            score = solver.value(successor, Player.MAXIMIZER)
        else:
            score = sd(successor).value
        if best_score is None or score < best_score:
            best_pos, best_score = pos, score
    return best_pos


@dataclass(frozen=True, slots=True)
class MoveRecord:
    mover: Player
    position: int
    letter: str
    result: Word


def replay(word: Word, positions) -> list[MoveRecord]:
    """Apply a move list from the start, validating game legality."""
    records = []
    current, mover = word, Player.MINIMIZER
    for pos in positions:
        if current.is_symmetric():
            raise TerminalStateError(
                f"move past the end of the game at {current}"
            )
        letter = current.letter_at(pos)
        current = current.delete(pos)
        records.append(MoveRecord(mover, pos, letter, current))
        mover = mover.other
    return records


def transcript(word: Word, positions) -> dict:
    """JSON-ready transcript of a finished or partial game."""
    records = replay(word, positions)
    final = records[-1].result if records else word
    return {
        "initial": str(word),
        "moves": [
            {
                "player": "second" if r.mover is Player.MINIMIZER else "first",
                "position": r.position,
                "letter": r.letter,
                "result": str(r.result),
            }
            for r in records
        ],
        "final_class": final.symmetry_class().value,
        "move_count": len(records),
    }
