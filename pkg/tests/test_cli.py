import json

import pytest

from prefixcodes.cli import main, parse_source_text
from prefixcodes.errors import ParseError
from conftest import FIXTURES


def fx(name):
    return str(FIXTURES / name)


class TestParsers:
    def test_weights_normalized(self):
        src = parse_source_text("x 3\ny 1\n")
        assert str(src.prob("x")) == "3/4"

    def test_fractions_and_comments(self):
        src = parse_source_text("# header\na 1/2\nb 1/2  # trailing\n")
        assert src.symbols == ("a", "b")

    def test_bad_line(self):
        with pytest.raises(ParseError):
            parse_source_text("a 1/2 extra\nb 1/2\n")

    def test_bad_sum(self):
        with pytest.raises(ParseError):
            parse_source_text("a 1/2\nb 1/3\n")


class TestHuffmanCommand:
    def test_expected_length_line(self, capsys):
        assert main(["huffman", fx("ex3.src")]) == 0
        out = capsys.readouterr().out
        assert "expected length 15/8" in out

    def test_all_count(self, capsys):
        assert main(["huffman", fx("ex1.src"), "--all"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("8 Huffman trees")
        assert len(out.strip().splitlines()) == 9

    def test_json(self, capsys):
        assert main(["huffman", fx("ex1.src"), "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["expected_length"] == "7/4"
        assert sorted(data["lengths"].values()) == [1, 2, 3, 3]

    def test_dot(self, capsys):
        assert main(["huffman", fx("ex1.src"), "--dot"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("digraph")
        assert '[label="0"]' in out and '[label="1"]' in out

    def test_missing_file(self, capsys):
        assert main(["huffman", "/nonexistent.src"]) == 2

    def test_bad_source(self, tmp_path, capsys):
        bad = tmp_path / "bad.src"
        bad.write_text("a 1/2\nb 1/3\n")
        assert main(["huffman", str(bad)]) == 2
        assert "error:" in capsys.readouterr().err

    def test_cap_guard(self, capsys):
        assert main(["huffman", fx("ex4.src"), "--all", "--cap", "1"]) == 3


class TestCheckCommand:
    def test_optimal_code(self, capsys):
        assert main(["check", fx("ex3.src"), fx("ex3_h.code")]) == 0
        assert "optimal             True" in capsys.readouterr().out

    def test_suboptimal_code(self, capsys):
        assert main(["check", fx("ex3.src"), fx("ex3_c.code")]) == 1
        out = capsys.readouterr().out
        assert "strongly monotone   False" in out
        assert "violation: A={c,d} B={a} i=1 j=2" in out

    def test_json_witness(self, capsys):
        assert main(["check", fx("ex3.src"), fx("ex3_c.code"),
                     "--json"]) == 1
        data = json.loads(capsys.readouterr().out)
        assert data["witness"] == {"A": ["c", "d"], "B": ["a"],
                                   "i": 1, "j": 2}
        assert data["expected_length"] == "2"
        assert data["huffman_length"] == "15/8"

    def test_alphabet_mismatch(self, capsys):
        assert main(["check", fx("ex3.src"), fx("ex5_h1.code")]) == 2


class TestSwapsCommand:
    def test_certificate(self, capsys):
        assert main(["swaps", fx("ex4.src"),
                     "--from", fx("ex4_h1.code"),
                     "--to", fx("ex4_h2.code"),
                     "--kinds", "parent,prob"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines
        for line in lines:
            kind, rest = line.split(None, 1)
            assert kind in ("parent", "row", "prob")
            assert len(rest.split()) == 4

    def test_not_equivalent(self, capsys):
        assert main(["swaps", fx("ex4.src"),
                     "--from", fx("ex4_h1.code"),
                     "--to", fx("ex4_h2.code"),
                     "--kinds", "row"]) == 1
        assert "NOT EQUIVALENT" in capsys.readouterr().out

    def test_closure_listing(self, capsys):
        assert main(["swaps", fx("ex1.src"),
                     "--from", fx("ex1_h1.code"),
                     "--kinds", "parent"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("closure size 8")

    def test_closure_json(self, capsys):
        assert main(["swaps", fx("ex1.src"),
                     "--from", fx("ex1_h1.code"),
                     "--kinds", "parent", "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["size"] == 8
        assert not data["truncated"]

    def test_bad_kind(self, capsys):
        assert main(["swaps", fx("ex1.src"),
                     "--from", fx("ex1_h1.code"),
                     "--kinds", "bogus"]) == 2

    def test_cap_guard(self, capsys):
        assert main(["swaps", fx("ex4.src"),
                     "--from", fx("ex4_h1.code"),
                     "--to", fx("ex4_c.code"),
                     "--kinds", "parent,prob", "--cap", "2"]) == 3


class TestSyncCommand:
    def test_witness(self, capsys):
        assert main(["sync", fx("ex1.src"), fx("ex1_h1.code")]) == 0
        assert capsys.readouterr().out.strip() == "0"

    def test_none(self, capsys):
        assert main(["sync", fx("ex2.src"), fx("ex2_h2.code")]) == 1
        assert capsys.readouterr().out.strip() == "NONE"

    def test_json(self, capsys):
        assert main(["sync", fx("ex1.src"), fx("ex1_h2.code"),
                     "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data == {"exists": True, "string": "00",
                        "explored_subsets": data["explored_subsets"]}

    def test_incomplete_code(self, tmp_path, capsys):
        src = tmp_path / "s.src"
        src.write_text("a 1/2\nb 1/2\n")
        code = tmp_path / "c.code"
        code.write_text("a 0\nb 10\n")
        assert main(["sync", str(src), str(code)]) == 2


class TestVerifyCommand:
    def test_single_source(self, capsys):
        assert main(["verify", fx("ex4.src")]) == 0
        out = capsys.readouterr().out
        assert "FAIL" not in out
        assert "PASS" in out

    def test_json(self, capsys):
        assert main(["verify", fx("ex1.src"), "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data[0]["all_passed"]
        assert any(c["name"] == "huffman-achieves-minimum"
                   for c in data[0]["checks"])

    def test_too_many_symbols(self, tmp_path, capsys):
        src = tmp_path / "big.src"
        src.write_text("".join("s%d 1\n" % i for i in range(10)))
        assert main(["verify", str(src)]) == 3

    def test_needs_input(self, capsys):
        assert main(["verify"]) == 2
