import io
import json

import pytest

from palsym.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_sd_basic(capsys):
    code, out, _ = run_cli(capsys, "sd", "bbabbbbaaa")
    assert code == 0
    assert "sd=4" in out
    assert "lps=6" in out
    assert "las=6" in out
    assert "class=neither" in out


def test_sd_symmetric_word(capsys):
    code, out, _ = run_cli(capsys, "sd", "ab")
    assert code == 0
    assert "sd=0" in out
    assert "class=antipalindrome" in out


def test_sd_parse_failure_exits_2(capsys):
    code, _, err = run_cli(capsys, "sd", "axb")
    assert code == 2
    assert "position 2" in err


def test_sd_witness(capsys):
    code, out, _ = run_cli(capsys, "sd", "aab", "--witness")
    assert code == 0
    assert "deleted=3" in out
    assert "residual=aa" in out


def test_sd_json_round_trip(capsys):
    code, out, _ = run_cli(capsys, "sd", "aab", "--witness", "--format", "json")
    assert code == 0
    line = out.strip()
    parsed = json.loads(line)
    assert json.dumps(parsed) == line
    assert parsed["sd"] == 1
    assert parsed["witness"]["deleted_positions"] == [3]


def test_sd_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("aab\nabba\n\n"))
    code, out, _ = run_cli(capsys, "sd", "--stdin")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 2
    assert "sd=1" in lines[0]
    assert "sd=0" in lines[1]


def test_sd_digits(capsys):
    code, out, _ = run_cli(capsys, "sd", "0110", "--digits")
    assert code == 0
    assert "abba" in out
    assert "class=palindrome" in out


def test_sd_no_words(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(""))
    code, _, err = run_cli(capsys, "sd")
    assert code == 2


def test_table_json(capsys):
    code, out, _ = run_cli(
        capsys, "table", "--from", "10", "--to", "10", "--format", "json",
        "--jobs", "1",
    )
    assert code == 0
    row = json.loads(out.strip())
    assert row == {
        "n": 10,
        "sd": 4,
        "lower": 4,
        "upper": 5,
        "extremal": ["aaabbbbabb"],
    }


def test_table_compare_reference_ok(capsys):
    code, out, err = run_cli(
        capsys, "table", "--from", "1", "--to", "10", "--compare-paper",
        "--jobs", "1",
    )
    assert code == 0
    assert "match" in err


def test_table_guard_exit_2(capsys):
    code, _, err = run_cli(capsys, "table", "--from", "1", "--to", "64")
    assert code == 2
    assert "error" in err


def test_table_csv(capsys):
    code, out, _ = run_cli(
        capsys, "table", "--from", "3", "--to", "4", "--format", "csv",
        "--jobs", "1",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,sd,lower,upper,extremal"
    assert lines[1] == "3,1,1,1,aab"
    assert lines[2].startswith("4,1,1,2,")


def test_jobs_env_fallback(capsys, monkeypatch):
    monkeypatch.setenv("PALSYM_JOBS", "1")
    code, out, _ = run_cli(capsys, "table", "--from", "6", "--to", "6")
    assert code == 0
    assert "sd=2" in out


def test_construct(capsys):
    code, out, _ = run_cli(capsys, "construct", "1", "0", "0")
    assert code == 0
    assert "word=bbabbbbaaa" in out
    assert "bound=4" in out
    assert "sd=4" in out


def test_construct_longer(capsys):
    code, out, _ = run_cli(capsys, "construct", "2", "4", "2", "--format", "json")
    assert code == 0
    parsed = json.loads(out.strip())
    assert parsed["length"] == 23
    assert parsed["bound"] == 9


def test_construct_invalid_pair(capsys):
    code, _, err = run_cli(capsys, "construct", "1", "5", "5")
    assert code == 2
    assert "alpha" in err


def test_verify_lemma4(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "lemma4", "--max-n", "1")
    assert code == 0
    assert "14/14 checks passed" in out


def test_verify_oracle_small(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--suite", "oracle", "--max-n", "7"
    )
    assert code == 0
    assert "7/7 checks passed" in out


def test_verify_peeling_small(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--suite", "peeling", "--max-n", "6"
    )
    assert code == 0


def test_verify_invariance_small(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--suite", "invariance", "--max-n", "6", "--jobs", "1"
    )
    assert code == 0


def test_verify_bounds_small(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--suite", "bounds", "--max-n", "10", "--jobs", "1"
    )
    assert code == 0
    assert "exact n=10" in out


def test_verify_game_small(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "game", "--max-n", "8")
    assert code == 0
    assert "game value n=8" in out


def test_verify_guard_exit_2(capsys):
    code, _, err = run_cli(
        capsys, "verify", "--suite", "oracle", "--max-n", "23"
    )
    assert code == 2


def test_game_solve(capsys):
    code, out, _ = run_cli(capsys, "game", "solve", "aab")
    assert code == 0
    assert "value=1" in out


def test_game_solve_json(capsys):
    code, out, _ = run_cli(
        capsys, "game", "solve", "aabab", "--format", "json"
    )
    assert code == 0
    parsed = json.loads(out.strip())
    assert parsed["move_count"] == parsed["value"]
    assert parsed["initial"] == "aabab"
    assert parsed["final_class"] in ("palindrome", "antipalindrome", "both")


def test_game_best(capsys):
    code, out, _ = run_cli(capsys, "game", "best", "6", "--format", "json")
    assert code == 0
    parsed = json.loads(out.strip())
    assert parsed["value"] >= 2


def test_game_best_guard(capsys):
    code, _, err = run_cli(capsys, "game", "best", "15")
    assert code == 2


def test_game_play_transcript_replays(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("3\n1\n9\n1\n"))
    code, out, _ = run_cli(
        capsys, "game", "play", "aabab", "--side", "second",
        "--engine", "exact", "--format", "json",
    )
    assert code == 0
    lines = out.strip().splitlines()
    data = json.loads(lines[-1])
    assert data["initial"] == "aabab"
    assert data["move_count"] == len(data["moves"])
    # replay the transcript through the library and confirm it is legal
    from palsym import parse_word, replay

    records = replay(
        parse_word(data["initial"]), [m["position"] for m in data["moves"]]
    )
    assert str(records[-1].result) == data["moves"][-1]["result"]
    assert records[-1].result.symmetry_class().value == data["final_class"]


def test_game_play_reprompts_on_bad_input(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("zero\n99\n3\n1\n9\n1\n"))
    code, out, _ = run_cli(
        capsys, "game", "play", "aabab", "--side", "second",
    )
    assert code == 0
    assert "not a number" in out
    assert "out of range" in out
    assert "game over" in out


def test_game_play_eof_exits_2(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(""))
    code, _, err = run_cli(
        capsys, "game", "play", "aabab", "--side", "second"
    )
    assert code == 2


def test_game_play_human_first_engine_opens(capsys, monkeypatch):
    # the engine is the second player (minimizer) and must move first;
    # aabbbb has game value 3, so the game survives the opening move
    monkeypatch.setattr("sys.stdin", io.StringIO("1\n1\n1\n1\n1\n"))
    code, out, _ = run_cli(
        capsys, "game", "play", "aabbbb", "--side", "first",
    )
    assert code == 0
    assert out.index("engine delete") < out.index("you delete")


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["table", "--from", "1"])
    assert exc.value.code == 2
