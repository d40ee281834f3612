import gzip
import io

import pytest

from checksieve.main import main
from checksieve.mutate import flip_bit
from checksieve.postnet import encode_message, format_bits
from checksieve.properties import lookup
from checksieve.proptest import run_property, summary_from_json


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_verify(capsys):
    assert run(capsys, "verify", "--scheme", "airline", "--digits", "123456789012340")[:2] == (0, "VALID\n")
    assert run(capsys, "verify", "--scheme", "routing", "--digits", "100000000")[:2] == (1, "INVALID\n")
    assert run(capsys, "verify", "--scheme", "isbn10", "--digits", "0-306-40615-2")[0] == 0
    assert run(capsys, "verify", "--scheme", "luhn", "--digits", "0000 0000 0000 0005")[0] == 1


def test_verify_reports_input_errors(capsys):
    status, out, err = run(capsys, "verify", "--scheme", "airline", "--digits", "12a4")
    assert status == 2
    assert out == ""
    assert "position 2" in err
    assert run(capsys, "verify", "--scheme", "airline", "--digits", "1234")[0] == 2


def test_verify_reads_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("12345|67890|12340\n"))
    assert run(capsys, "verify", "--scheme", "airline", "--digits", "-")[:2] == (0, "VALID\n")


def test_complete(capsys):
    assert run(capsys, "complete", "--scheme", "airline", "--digits", "12345678901234")[1] == "123456789012340\n"
    assert run(capsys, "complete", "--scheme", "isbn10", "--digits", "000000001")[1] == "000000001X\n"
    assert run(capsys, "complete", "--scheme", "routing", "--digits", "1")[0] == 2


def test_mutate(capsys):
    status, out, _ = run(capsys, "mutate", "--op", "substitute", "--pos", "11", "--digit", "7",
                         "--digits", "420000000000000")
    assert (status, out) == (0, "420000000007000\n")
    assert run(capsys, "mutate", "--op", "transpose", "--pos", "0", "--digits", "71")[1] == "17\n"
    assert run(capsys, "mutate", "--op", "flipbit", "--pos", "0", "--bits", "00111")[1] == "10111\n"


def test_mutate_errors(capsys):
    assert run(capsys, "mutate", "--op", "substitute", "--pos", "0", "--digits", "12")[0] == 2
    assert run(capsys, "mutate", "--op", "transpose", "--pos", "1", "--digits", "12")[0] == 2
    status, _, err = run(capsys, "mutate", "--op", "transpose", "--pos", "0", "--digits", "55")
    assert status == 0
    assert "did not change" in err


def test_postnet_commands(capsys):
    status, out, _ = run(capsys, "postnet", "encode", "--digits", "1234", "--grouped")
    assert status == 0
    assert out.strip().split("|")[-1] == "00111"
    assert len(out.strip().split("|")) == 5
    assert run(capsys, "postnet", "decode", "--bits", out.strip())[1] == "1234\n"
    status, out, _ = run(capsys, "postnet", "correct", "--bits", out.strip())
    assert (status, out) == (0, "Clean: 1234\n")


def test_postnet_correct_repairs_a_flip(capsys):
    bits = format_bits(flip_bit(encode_message((1, 2, 3, 4)), 2))
    status, out, _ = run(capsys, "postnet", "correct", "--bits", bits)
    assert status == 0
    assert out == "CorrectedDigit: block 0 11000 -> 1: 1234\n"
    status, out, _ = run(capsys, "postnet", "decode", "--bits", bits)
    assert status == 1
    assert out.startswith("INVALID: ")


def test_postnet_correct_gives_up_on_two_flips(capsys):
    bits = format_bits(flip_bit(flip_bit(encode_message((1, 2, 3, 4)), 2), 7))
    status, out, _ = run(capsys, "postnet", "correct", "--bits", bits)
    assert status == 1
    assert out.startswith("Uncorrectable: ")
    assert run(capsys, "postnet", "decode", "--bits", "0110110")[0] == 2


def test_prop_list(capsys):
    status, out, _ = run(capsys, "prop", "list")
    assert status == 0
    lines = out.splitlines()
    assert len(lines) == 12
    assert lines[0].startswith("C1 ")
    assert "ExpectCounterexample" in lines[3]


def test_prop_run_finds_airline_counterexample(capsys):
    status, out, _ = run(capsys, "prop", "run", "--name", "C1", "--trials", "2000", "--seed", "42",
                         "--format", "cgen")
    assert status == 1
    lines = out.splitlines()
    assert lines[0] == "**Summary of Cgen/testing**"
    assert lines[1].startswith("We tested 2000 examples")
    assert lines[-1] == "Test? found a counterexample."


def test_prop_run_json_round_trips(capsys):
    status, out, _ = run(capsys, "prop", "run", "--name", "C1", "--trials", "2000", "--seed", "42",
                         "--format", "json", "--workers", "4")
    assert status == 1
    assert summary_from_json(out) == run_property(lookup("C1").property, trials=2000, seed=42)


def test_prop_run_success(capsys):
    status, out, _ = run(capsys, "prop", "run", "--name", "routing-substitution", "--trials", "500")
    assert status == 0
    assert out.splitlines()[-1] == "Test? succeeded. No counterexamples were found."


def test_prop_exhaustive(capsys):
    status, out, _ = run(capsys, "prop", "exhaustive", "--name", "C4", "--sample-size", "50", "--show", "2")
    assert status == 1
    assert "We tested 400 examples" in out
    assert " -- ... and " in out
    assert run(capsys, "prop", "exhaustive", "--name", "C8", "--sample-size", "50")[0] == 0


def test_prop_unknown_name(capsys):
    status, _, err = run(capsys, "prop", "run", "--name", "C42")
    assert status == 2
    assert "C42" in err


def test_corpus(capsys, tmp_path):
    path = tmp_path / "tickets.txt"
    path.write_text("# tickets\n123456789012340\n\n123456789012341\n12x\n")
    status, out, _ = run(capsys, "corpus", "--scheme", "airline", "--path", str(path))
    assert status == 1
    lines = out.splitlines()
    assert lines[0] == "2: VALID"
    assert lines[1] == "4: INVALID"
    assert lines[2].startswith("5: ERROR(NonDigitCharacter")
    assert lines[-1] == "1/3 valid"


def test_corpus_all_valid_and_compressed(capsys, tmp_path):
    path = tmp_path / "tickets.txt.gz"
    with gzip.open(path, "wt", encoding="utf-8") as f:
        f.write("123456789012340\n420000000000000\n")
    status, out, _ = run(capsys, "corpus", "--scheme", "airline", "--path", str(path))
    assert (status, out) == (0, "1: VALID\n2: VALID\n2/2 valid\n")


def test_corpus_reads_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("123456789012340\n# note\n123456789012341\n"))
    status, out, _ = run(capsys, "corpus", "--scheme", "airline", "--path", "-")
    assert (status, out) == (1, "1: VALID\n3: INVALID\n1/2 valid\n")


def test_corpus_edge_cases(capsys, tmp_path):
    empty = tmp_path / "empty.txt"
    empty.write_text("")
    assert run(capsys, "corpus", "--scheme", "luhn", "--path", str(empty))[:2] == (0, "0/0 valid\n")
    assert run(capsys, "corpus", "--scheme", "luhn", "--path", str(tmp_path / "missing.txt"))[0] == 2


@pytest.mark.parametrize("argv", [
    [],
    ["verify", "--scheme", "bogus", "--digits", "1"],
    ["verify", "--scheme", "airline"],
    ["prop", "run"],
    ["mutate", "--op", "rotate", "--pos", "0", "--digits", "12"],
])
def test_usage_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as excinfo:
        main(argv)
    assert excinfo.value.code == 2
    assert "usage:" in capsys.readouterr().err
