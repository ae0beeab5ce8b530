"""Command line behaviour: output shapes, input handling, exit codes."""

from __future__ import annotations

import io
import json
import shutil
import subprocess
from types import SimpleNamespace

import pytest

import helpers
from vlgmatch.cli import InputDocument, ingest_fasta, run

EXAMPLE = helpers.EXAMPLE_TEXT.decode()


@pytest.fixture
def example_file(tmp_path):
    path = tmp_path / "text.txt"
    path.write_bytes(helpers.EXAMPLE_TEXT + b"\n")
    return str(path)


def _run(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_match_golden_output(capsys, example_file):
    code, out, err = _run(capsys, [
        "match", "-p", helpers.EXAMPLE_PATTERN, "-t", example_file])
    assert (code, err) == (0, "")
    assert out == "17\n28\n31\n"


@pytest.mark.parametrize("tail", [b"", b"\n", b"\r\n"])
def test_trailing_newline_stripped_once(capsys, tmp_path, tail):
    path = tmp_path / "t.txt"
    path.write_bytes(helpers.EXAMPLE_TEXT + tail)
    code, out, _ = _run(capsys, [
        "match", "-p", helpers.EXAMPLE_PATTERN, "-t", str(path)])
    assert code == 0
    assert out == "17\n28\n31\n"


def test_inner_newlines_are_text_characters(capsys, tmp_path):
    path = tmp_path / "t.txt"
    path.write_bytes(b"GT\nGT\n")
    code, out, _ = _run(capsys, ["match", "-p", "GT", "-t", str(path)])
    assert code == 0
    assert out == "2\n5\n"


def test_match_json_output(capsys, example_file):
    code, out, _ = _run(capsys, [
        "match", "-p", helpers.EXAMPLE_PATTERN, "-t", example_file,
        "--format", "json"])
    assert code == 0
    assert [json.loads(line) for line in out.splitlines()] == [
        {"end": 17}, {"end": 28}, {"end": 31}]


def test_match_nothing_is_success(capsys, example_file):
    code, out, err = _run(capsys, ["match", "-p", "AAAA", "-t", example_file])
    assert (code, out, err) == (0, "", "")


def test_unbounded_pattern_can_match(capsys, example_file):
    code, out, _ = _run(capsys, [
        "match", "-p", "A.{2,*}GT", "-t", example_file])
    assert code == 0
    assert out == "17\n23\n28\n31\n"


def _parse_combo_lines(out):
    return sorted(tuple(map(int, line.split(","))) for line in out.splitlines())


def test_combos_both_engines_agree_with_oracle(capsys, example_file):
    outputs = {}
    for label, extra in (
        ("onthefly", ["--engine", "onthefly"]),
        ("chunked", ["--engine", "chunked"]),
        ("chunked-min", ["--engine", "chunked", "--chunk-len", "21"]),
    ):
        code, out, _ = _run(capsys, [
            "combos", "-p", helpers.COMBO_PATTERN, "-t", example_file] + extra)
        assert code == 0
        outputs[label] = _parse_combo_lines(out)
    code, oracle_out, _ = _run(capsys, [
        "oracle", "combos", "-p", helpers.COMBO_PATTERN, "-t", example_file])
    assert code == 0
    expected = _parse_combo_lines(oracle_out)
    # the oracle prints in sorted tuple order already
    assert [tuple(map(int, line.split(",")))
            for line in oracle_out.splitlines()] == expected
    for label, combos in outputs.items():
        assert combos == expected, label
    assert len(expected) == 17
    assert (5, 9, 12, 17) in expected


def test_combos_json_round_trip(capsys, example_file):
    code, out, _ = _run(capsys, [
        "combos", "-p", helpers.COMBO_PATTERN, "-t", example_file,
        "--format", "json"])
    assert code == 0
    combos = {tuple(json.loads(line)["ends"]) for line in out.splitlines()}
    assert helpers.COMBO_FIVE <= combos and len(combos) == 17


def test_match_ends_are_distinct_combo_finals(capsys, example_file):
    _, match_out, _ = _run(capsys, [
        "match", "-p", helpers.COMBO_PATTERN, "-t", example_file])
    _, combos_out, _ = _run(capsys, [
        "combos", "-p", helpers.COMBO_PATTERN, "-t", example_file])
    finals = {line.rsplit(",", 1)[1] for line in combos_out.splitlines()}
    assert sorted(finals, key=int) == match_out.split()


def test_oracle_match_mirrors_match(capsys, example_file):
    _, fast, _ = _run(capsys, [
        "match", "-p", helpers.EXAMPLE_PATTERN, "-t", example_file])
    _, slow, _ = _run(capsys, [
        "oracle", "match", "-p", helpers.EXAMPLE_PATTERN, "-t", example_file])
    assert fast == slow == "17\n28\n31\n"


def test_graph_golden_dump(capsys, tmp_path):
    path = tmp_path / "t.txt"
    path.write_bytes(b"AB")
    code, out, _ = _run(capsys, ["graph", "-p", "A.{0,0}B", "-t", str(path)])
    assert code == 0
    assert out == "N 1 1\nN 2 2\nE 2 2 1 1\n"
    code, out, _ = _run(capsys, [
        "graph", "-p", "A.{0,0}B", "-t", str(path), "--format", "json"])
    assert code == 0
    assert [json.loads(line) for line in out.splitlines()] == [
        {"type": "node", "layer": 1, "end": 1},
        {"type": "node", "layer": 2, "end": 2},
        {"type": "edge", "layer": 2, "end": 2, "pred_layer": 1, "pred_end": 1},
    ]


def test_stats_golden_output(capsys, example_file):
    code, out, _ = _run(capsys, [
        "stats", "-p", helpers.EXAMPLE_PATTERN, "-t", example_file])
    assert code == 0
    assert out == (
        "n 31\nm 5\nk 3\nA 8\nB 13\nalpha 14\n"
        "layer_occurrences 5,5,4\nmatches 3\nbeta 4\npeak_ranges 3,1\n")


def test_stats_json_types(capsys, example_file):
    code, out, _ = _run(capsys, [
        "stats", "-p", helpers.EXAMPLE_PATTERN, "-t", example_file,
        "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload == {
        "n": 31, "m": 5, "k": 3, "A": 8, "B": 13, "alpha": 14,
        "layer_occurrences": [5, 5, 4], "matches": 3, "beta": 4,
        "peak_ranges": [3, 1]}


def test_stats_unbounded_fields(capsys, example_file):
    code, out, _ = _run(capsys, [
        "stats", "-p", "A.{2,*}GT", "-t", example_file])
    assert code == 0
    lines = out.splitlines()
    assert "B unbounded" in lines
    assert "beta unavailable" in lines
    code, out, _ = _run(capsys, [
        "stats", "-p", "A.{2,*}GT", "-t", example_file, "--format", "json"])
    payload = json.loads(out)
    assert payload["B"] is None and payload["beta"] is None


def test_bad_pattern_exits_2(capsys, example_file):
    code, out, err = _run(capsys, [
        "match", "-p", "A.{5,2}B", "-t", example_file])
    assert code == 2
    assert out == ""
    assert err.startswith("vlgmatch: ")


def test_missing_file_exits_2(capsys, tmp_path):
    code, _, err = _run(capsys, [
        "match", "-p", "A", "-t", str(tmp_path / "nope.txt")])
    assert code == 2
    assert err.startswith("vlgmatch: ")


def test_unbounded_gaps_rejected_for_combos_and_graph(capsys, example_file):
    for argv in (["combos", "-p", "A.{2,*}GT", "-t", example_file],
                 ["graph", "-p", "A.{2,*}GT", "-t", example_file],
                 ["oracle", "combos", "-p", "A.{2,*}GT", "-t", example_file]):
        code, out, err = _run(capsys, argv)
        assert code == 2, argv
        assert out == ""
        assert "bounded" in err


def test_chunk_len_too_small_exits_2(capsys, example_file):
    code, _, err = _run(capsys, [
        "combos", "-p", helpers.COMBO_PATTERN, "-t", example_file,
        "--engine", "chunked", "--chunk-len", "3"])
    assert code == 2
    assert "shorter than the match span bound" in err


def test_usage_errors_exit_2(capsys):
    assert run(["bogus"]) == 2
    assert run(["match", "-p", "A"]) == 2  # missing -t
    capsys.readouterr()


def test_help_exits_0(capsys):
    assert run(["--help"]) == 0
    assert "variable-length gaps" in capsys.readouterr().out


def test_stdin_input(capsys, monkeypatch):
    monkeypatch.setattr(
        "sys.stdin", SimpleNamespace(buffer=io.BytesIO(helpers.EXAMPLE_TEXT)))
    code, out, _ = _run(capsys, [
        "match", "-p", helpers.EXAMPLE_PATTERN, "-t", "-"])
    assert code == 0
    assert out == "17\n28\n31\n"


FASTA_SAMPLE = (b">seq1 first record\n"
                b"ATCGGCTCCA\n"
                b"GACCAGTACC CGTTCCGTGGT\n"
                b">hollow\n"
                b"\n"
                b">seq2\nGTGT\n")


def test_fasta_records_searched_independently(capsys, tmp_path):
    path = tmp_path / "r.fa"
    path.write_bytes(FASTA_SAMPLE)
    code, out, err = _run(capsys, ["match", "-p", "GT", "-t", str(path)])
    assert code == 0
    assert out == "seq1:17\nseq1:23\nseq1:28\nseq1:31\nseq2:2\nseq2:4\n"
    assert "hollow" in err and "empty sequence" in err


def test_fasta_json_carries_record_ids(capsys, tmp_path):
    path = tmp_path / "r.fa"
    path.write_bytes(FASTA_SAMPLE)
    code, out, _ = _run(capsys, [
        "match", "-p", helpers.EXAMPLE_PATTERN, "-t", str(path),
        "--format", "json"])
    assert code == 0
    assert [json.loads(line) for line in out.splitlines()] == [
        {"record": "seq1", "end": 17}, {"record": "seq1", "end": 28},
        {"record": "seq1", "end": 31}]


def test_fasta_flag_forces_parsing(capsys, tmp_path):
    path = tmp_path / "r.txt"
    path.write_bytes(b"ACGT\n")  # no header but --fasta demands one
    code, _, err = _run(capsys, ["match", "-p", "A", "-t", str(path), "--fasta"])
    assert code == 2
    assert "before the first FASTA header" in err


def test_fasta_stats_names_record(capsys, tmp_path):
    path = tmp_path / "r.fa"
    path.write_bytes(b">only\n" + helpers.EXAMPLE_TEXT + b"\n")
    code, out, _ = _run(capsys, [
        "stats", "-p", helpers.EXAMPLE_PATTERN, "-t", str(path)])
    assert code == 0
    assert out.startswith("record only\nn 31\n")


def test_ingest_fasta_basics():
    docs = list(ingest_fasta(io.BytesIO(FASTA_SAMPLE)))
    assert docs == [
        InputDocument("seq1", helpers.EXAMPLE_TEXT),
        InputDocument("seq2", b"GTGT"),
    ]
    assert list(ingest_fasta(io.BytesIO(b""))) == []
    assert list(ingest_fasta(io.BytesIO(b">lonely header\n"))) == []
    with pytest.raises(ValueError):
        list(ingest_fasta(io.BytesIO(b"ACGT\n>late\nACGT\n")))


def test_ingest_fasta_headerless_id():
    docs = list(ingest_fasta(io.BytesIO(b">\nAC\n")))
    assert docs == [InputDocument("", b"AC")]


def test_console_script_entry_point(tmp_path):
    exe = shutil.which("vlgmatch")
    assert exe is not None, "console script not installed"
    path = tmp_path / "t.txt"
    path.write_bytes(helpers.EXAMPLE_TEXT)
    result = subprocess.run(
        [exe, "match", "-p", helpers.EXAMPLE_PATTERN, "-t", str(path)],
        capture_output=True, text=True, timeout=60)
    assert result.returncode == 0
    assert result.stdout == "17\n28\n31\n"
