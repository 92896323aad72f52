"""Command line front end.

Subcommands: ``sd`` (deletion distance of given words), ``table`` (exact
maximum per length), ``construct`` (extremal family words), ``verify``
(named self-check suites), ``game`` (solve, scan, or play the deletion
game).  Exit codes: 0 success, 1 failed verification or table mismatch,
2 usage or guard errors.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from . import bounds as bounds_mod
from . import deletions, game, search, words
from .errors import (
    InvalidLetterError,
    InvalidPairError,
    LengthBudgetExceeded,
    TerminalStateError,
)

_ORACLE_SAMPLES = 200
_ORACLE_SEED = 20240
_EXHAUSTIVE_ORACLE_MAX = 14

_SUITES = ("lemma4", "bounds", "oracle", "peeling", "invariance", "game")
_SUITE_DEFAULT_MAX_N = {
    "lemma4": 4,
    "bounds": 14,
    "oracle": 10,
    "peeling": 12,
    "invariance": 10,
    "game": 10,
}
_SUITE_GUARD = {
    "lemma4": 7,
    "bounds": search.MAX_SEARCH_LENGTH,
    "oracle": deletions.ORACLE_MAX_LENGTH,
    "peeling": 16,
    "invariance": 14,
    "game": game.SCAN_MAX_LENGTH,
}


def _default_jobs() -> int:
    env = os.environ.get("PALSYM_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _parse(text: str, allow_digits: bool) -> words.Word:
    return words.parse_word(text, allow_digits=allow_digits)


# ---------------------------------------------------------------- sd


def _sd_report(word: words.Word, with_witness: bool) -> dict:
    result = deletions.sd(word)
    report = {
        "word": str(word),
        "length": len(word),
        "class": word.symmetry_class().value,
        "lps": result.lps,
        "las": result.las,
        "sd": result.value,
    }
    if with_witness:
        witness = deletions.sd_witness(word)
        report["witness"] = {
            "deleted_positions": list(witness.deleted_positions),
            "target": witness.target.value,
            "residual": str(witness.residual),
        }
    return report


def _print_sd_text(report: dict) -> None:
    line = (
        f"{report['word'] or '(empty)'} length={report['length']} "
        f"class={report['class']} lps={report['lps']} las={report['las']} "
        f"sd={report['sd']}"
    )
    if "witness" in report:
        w = report["witness"]
        deleted = ",".join(str(p) for p in w["deleted_positions"]) or "-"
        line += (
            f" deleted={deleted} target={w['target']}"
            f" residual={w['residual'] or '(empty)'}"
        )
    print(line)


def _cmd_sd(args) -> int:
    texts = list(args.words)
    if args.stdin:
        texts.extend(line.strip() for line in sys.stdin if line.strip())
    if not texts:
        print("no words given; pass words or use --stdin", file=sys.stderr)
        return 2
    for text in texts:
        report = _sd_report(_parse(text, args.digits), args.witness)
        if args.format == "json":
            print(json.dumps(report))
        else:
            _print_sd_text(report)
    return 0


# ---------------------------------------------------------------- table


def _cmd_table(args) -> int:
    config = search.SearchConfig(
        worker_count=args.jobs if args.jobs else _default_jobs(),
        extremal_limit=args.extremal_limit,
        progress_interval=args.progress,
    )
    rows = search.compute_table(args.from_n, args.to_n, config)
    if args.format == "csv":
        print(search.CSV_HEADER)
        for row in rows:
            print(search.row_to_csv(row))
    elif args.format == "json":
        for row in rows:
            print(search.row_to_json(row))
    else:
        for row in rows:
            sample = " ".join(str(w) for w in row.extremal)
            print(
                f"n={row.n} sd={row.sd} lower={row.lower} upper={row.upper} "
                f"scanned={row.words_scanned} extremal={sample}"
            )
    if args.compare_paper:
        mismatches = search.compare_with_known(rows)
        if mismatches:
            for m in mismatches:
                print(
                    f"MISMATCH n={m.n}: computed {m.computed}, "
                    f"reference {m.expected}",
                    file=sys.stderr,
                )
            return 1
        print(
            "all computed rows match the reference table", file=sys.stderr
        )
    return 0


# ---------------------------------------------------------------- construct


def _cmd_construct(args) -> int:
    params = bounds_mod.ConstructionParams(args.n, args.alpha, args.beta)
    word = bounds_mod.build_word(params)
    bound = bounds_mod.family_bound(params)
    computed = deletions.sd(word).value
    if args.format == "json":
        print(
            json.dumps(
                {
                    "word": str(word),
                    "length": len(word),
                    "bound": bound,
                    "sd": computed,
                }
            )
        )
    else:
        print(f"word={word} length={len(word)} bound={bound} sd={computed}")
    return 0


# ---------------------------------------------------------------- verify

Check = tuple[str, bool, str]


def _suite_lemma4(max_n: int) -> list[Check]:
    checks = []
    for c in bounds_mod.verify_family(max_n, check_equality=True):
        p = c.params
        checks.append(
            (
                f"family n={p.n} alpha={p.alpha} beta={p.beta}",
                c.ok,
                f"length={len(c.word)} sd={c.computed} expected={c.bound}",
            )
        )
    return checks


def _suite_bounds(max_n: int, jobs: int) -> list[Check]:
    config = search.SearchConfig(worker_count=jobs)
    checks = []
    for row in search.compute_table(2, max_n, config):
        checks.append(
            (
                f"range n={row.n}",
                row.lower <= row.sd <= row.upper,
                f"lower={row.lower} sd={row.sd} upper={row.upper}",
            )
        )
        if row.n <= 20:
            expected = search.KNOWN_MAX_SD[row.n]
            checks.append(
                (
                    f"exact n={row.n}",
                    row.sd == row.lower == expected,
                    f"sd={row.sd} lower={row.lower} reference={expected}",
                )
            )
    return checks


def _suite_oracle(max_n: int) -> list[Check]:
    rng = random.Random(_ORACLE_SEED)
    checks = []
    for n in range(1, max_n + 1):
        if n <= _EXHAUSTIVE_ORACLE_MAX:
            pool = words.all_words(n)
            label = f"oracle n={n} exhaustive"
            count = 1 << n
        else:
            pool = (
                words.Word(n, rng.randrange(1 << n))
                for _ in range(_ORACLE_SAMPLES)
            )
            label = f"oracle n={n} sampled"
            count = _ORACLE_SAMPLES
        bad = None
        for w in pool:
            if deletions.sd(w).value != deletions.brute_force_sd(w):
                bad = w
                break
        checks.append(
            (
                label,
                bad is None,
                f"{count} words agree" if bad is None else f"mismatch at {bad}",
            )
        )
    return checks


def _suite_peeling(max_n: int) -> list[Check]:
    checks = []
    for n in range(2, max_n + 1):
        bad = None
        for w in words.all_words(n):
            s = str(w)
            inner = words.parse_word(s[1:-1])
            if s[0] == s[-1]:
                ok = deletions.lps_length(w) == 2 + deletions.lps_length(inner)
            else:
                ok = deletions.las_length(w) == 2 + deletions.las_length(inner)
            if not ok:
                bad = w
                break
        checks.append(
            (
                f"peeling n={n}",
                bad is None,
                "both identities hold" if bad is None else f"fails at {bad}",
            )
        )
    return checks


def _suite_invariance(max_n: int, jobs: int) -> list[Check]:
    checks = []
    for n in range(1, max_n + 1):
        bad = None
        for w in words.all_words(n):
            value = deletions.sd(w).value
            if (
                deletions.sd(w.reverse()).value != value
                or deletions.sd(w.complement()).value != value
            ):
                bad = w
                break
        checks.append(
            (
                f"group invariance n={n}",
                bad is None,
                "sd constant on orbits" if bad is None else f"fails at {bad}",
            )
        )
    config = search.SearchConfig(worker_count=jobs)
    for n in range(1, min(max_n, 12) + 1):
        pruned = search.sd_max(n, config).sd
        full = search.sd_max(n, config, prune=False).sd
        checks.append(
            (
                f"pruning n={n}",
                pruned == full,
                f"canonical-only max {pruned}, full-scan max {full}",
            )
        )
    return checks


def _suite_game(max_n: int) -> list[Check]:
    checks = []
    for n in range(6, max_n + 1):
        value, word = game.max_game_value(n)
        checks.append(
            (
                f"game value n={n}",
                value >= n - 4,
                f"best={value} (word {word}) needs >= {n - 4}",
            )
        )
    solver = game.GameSolver()
    for n in range(1, min(max_n, 10) + 1):
        bad = None
        for w in words.all_words(n):
            if solver.value(w) > max(0, n - 2):
                bad = w
                break
        checks.append(
            (
                f"game termination n={n}",
                bad is None,
                f"all values <= {max(0, n - 2)}"
                if bad is None
                else f"fails at {bad}",
            )
        )
    return checks


def _cmd_verify(args) -> int:
    suite = args.suite
    max_n = args.max_n if args.max_n is not None else _SUITE_DEFAULT_MAX_N[suite]
    guard = _SUITE_GUARD[suite]
    if max_n < 0 or max_n > guard:
        print(
            f"--max-n {max_n} outside 0..{guard} for suite {suite}",
            file=sys.stderr,
        )
        return 2
    jobs = args.jobs if args.jobs else _default_jobs()
    if suite == "lemma4":
        checks = _suite_lemma4(max_n)
    elif suite == "bounds":
        checks = _suite_bounds(max_n, jobs)
    elif suite == "oracle":
        checks = _suite_oracle(max_n)
    elif suite == "peeling":
        checks = _suite_peeling(max_n)
    elif suite == "invariance":
        checks = _suite_invariance(max_n, jobs)
    else:
        checks = _suite_game(max_n)

    failures = 0
    for name, ok, detail in checks:
        print(f"{'ok  ' if ok else 'FAIL'} {name}: {detail}")
        failures += 0 if ok else 1
    print(
        f"suite {suite}: {len(checks) - failures}/{len(checks)} checks passed"
    )
    return 0 if failures == 0 else 1


# ---------------------------------------------------------------- game


def _cmd_game_solve(args) -> int:
    word = _parse(args.word, args.digits)
    outcome = game.game_value(word)
    if args.format == "json":
        payload = game.transcript(word, outcome.principal_line)
        payload["value"] = outcome.value
        print(json.dumps(payload))
    else:
        line = ",".join(str(p) for p in outcome.principal_line) or "-"
        records = game.replay(word, outcome.principal_line)
        final = records[-1].result if records else word
        print(
            f"word={word} value={outcome.value} line={line} "
            f"final={final or '(empty)'} class={final.symmetry_class().value}"
        )
    return 0


def _cmd_game_best(args) -> int:
    value, word = game.max_game_value(args.n)
    if args.format == "json":
        print(json.dumps({"n": args.n, "value": value, "word": str(word)}))
    else:
        print(f"n={args.n} value={value} word={word}")
    return 0


def _read_position(word: words.Word) -> int | None:
    n = len(word)
    width = len(str(n))
    print("word:", " ".join(f"{c:>{width}}" for c in str(word)))
    print(" pos:", " ".join(f"{p:>{width}}" for p in range(1, n + 1)))
    while True:
        print(f"delete which position (1-{n})? ", end="", flush=True)
        line = sys.stdin.readline()
        if line == "":
            return None
        line = line.strip()
        try:
            pos = int(line)
        except ValueError:
            print(f"not a number: {line!r}")
            continue
        if 1 <= pos <= n:
            return pos
        print(f"position out of range 1-{n}")


def _cmd_game_play(args) -> int:
    word = _parse(args.word, args.digits)
    if args.engine == "exact" and len(word) > game.GAME_MAX_LENGTH:
        print(
            f"exact engine supports words up to {game.GAME_MAX_LENGTH} "
            "letters; use --engine heuristic",
            file=sys.stderr,
        )
        return 2
    human_is_minimizer = args.side == "second"
    mover = game.Player.MINIMIZER
    moves: list[int] = []
    last_letter: str | None = None
    initial = word

    if word.is_symmetric():
        print(f"{word or '(empty)'} is already symmetric; no moves to play")
    while not word.is_symmetric():
        human_turn = (mover is game.Player.MINIMIZER) == human_is_minimizer
        if human_turn:
            pos = _read_position(word)
            if pos is None:
                print("input closed before the game ended", file=sys.stderr)
                return 2
            actor = "you"
        else:
            pos = game.engine_move(
                game.GameState(word, mover), args.engine, last_letter
            )
            actor = "engine"
        letter = word.letter_at(pos)
        word = word.delete(pos)
        moves.append(pos)
        last_letter = letter
        print(
            f"{actor} delete position {pos} (letter {letter}) -> "
            f"{word or '(empty)'}"
        )
        mover = mover.other

    print(
        f"game over after {len(moves)} moves; final word "
        f"'{word}' ({word.symmetry_class().value})"
    )
    if args.format == "json":
        print(json.dumps(game.transcript(initial, moves)))
    return 0


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="palsym",
        description=(
            "Deletion distance to palindromes and antipalindromes for "
            "binary words, exhaustive extremal search, bound checks, and "
            "an adversarial deletion game."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sd = sub.add_parser("sd", help="deletion distance of given words")
    p_sd.add_argument("words", nargs="*", help="words over {a,b}")
    p_sd.add_argument(
        "--witness", action="store_true", help="also print a minimal deletion set"
    )
    p_sd.add_argument(
        "--stdin", action="store_true", help="read one word per line from stdin"
    )
    p_sd.add_argument(
        "--digits", action="store_true", help="accept 0/1 as aliases for a/b"
    )
    p_sd.add_argument("--format", choices=("text", "json"), default="text")
    p_sd.set_defaults(func=_cmd_sd)

    p_table = sub.add_parser(
        "table", help="exact maximum sd for each length in a range"
    )
    p_table.add_argument("--from", dest="from_n", type=int, required=True)
    p_table.add_argument("--to", dest="to_n", type=int, required=True)
    p_table.add_argument(
        "--format", choices=("text", "json", "csv"), default="text"
    )
    p_table.add_argument(
        "--jobs", type=int, default=None, help="workers (default: PALSYM_JOBS or CPU count)"
    )
    p_table.add_argument(
        "--compare-paper",
        action="store_true",
        help="exit 1 unless rows with n <= 20 match the reference table",
    )
    p_table.add_argument("--extremal-limit", type=int, default=8)
    p_table.add_argument(
        "--progress", type=float, default=None, help="progress period in seconds"
    )
    p_table.set_defaults(func=_cmd_table)

    p_con = sub.add_parser(
        "construct", help="build a word of the extremal four-block family"
    )
    p_con.add_argument("n", type=int)
    p_con.add_argument("alpha", type=int)
    p_con.add_argument("beta", type=int)
    p_con.add_argument("--format", choices=("text", "json"), default="text")
    p_con.set_defaults(func=_cmd_construct)

    p_ver = sub.add_parser("verify", help="run a named self-check suite")
    p_ver.add_argument("--suite", choices=_SUITES, required=True)
    p_ver.add_argument("--max-n", type=int, default=None)
    p_ver.add_argument("--jobs", type=int, default=None)
    p_ver.set_defaults(func=_cmd_verify)

    p_game = sub.add_parser("game", help="deletion game: solve, scan, or play")
    game_sub = p_game.add_subparsers(dest="game_command", required=True)

    g_solve = game_sub.add_parser("solve", help="exact value of one word")
    g_solve.add_argument("word")
    g_solve.add_argument("--digits", action="store_true")
    g_solve.add_argument("--format", choices=("text", "json"), default="text")
    g_solve.set_defaults(func=_cmd_game_solve)

    g_best = game_sub.add_parser(
        "best", help="best starting word of a given length"
    )
    g_best.add_argument("n", type=int)
    g_best.add_argument("--format", choices=("text", "json"), default="text")
    g_best.set_defaults(func=_cmd_game_best)

    g_play = game_sub.add_parser("play", help="interactive game against the engine")
    g_play.add_argument("word")
    g_play.add_argument(
        "--side",
        choices=("first", "second"),
        required=True,
        help="which player you are; the second player moves first",
    )
    g_play.add_argument(
        "--engine", choices=("exact", "heuristic"), default="exact"
    )
    g_play.add_argument("--digits", action="store_true")
    g_play.add_argument("--format", choices=("text", "json"), default="text")
    g_play.set_defaults(func=_cmd_game_play)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (
        InvalidLetterError,
        InvalidPairError,
        LengthBudgetExceeded,
        TerminalStateError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())
