"""
Tests for the fan-trees command-line tool and the interactive menu.
"""
import io
import time

import pytest

from cli.fan_main import main
from cli.menu import run_menu
from fan.codec import serialize_tree
from fan.recursive import last_tree


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGenCommand:
    """Test cases for the gen subcommand."""

    def test_gen_3_trees(self, capsys):
        """Test LIST(3) is printed one tree per line."""
        code, out, _ = run_cli(capsys, "gen", "3", "--format", "trees")
        assert code == 0
        assert out == "2,3;2,inf\n2,inf;3,inf\n2,3;3,inf\n"

    def test_gen_2(self, capsys):
        """Test F_2 prints its single tree."""
        code, out, _ = run_cli(capsys, "gen", "2")
        assert code == 0
        assert out == "2,inf\n"

    def test_gen_moves(self, capsys):
        """Test LIST(5) has 20 move lines."""
        code, out, _ = run_cli(capsys, "gen", "5", "--format", "moves")
        lines = out.splitlines()
        assert code == 0
        assert len(lines) == 20
        assert lines[15] == "-4,3 +4,5"

    def test_gen_both(self, capsys):
        """Test 'both' prints the first tree, then a move and tree per step."""
        _, out, _ = run_cli(capsys, "gen", "3", "--format", "both")
        assert out.splitlines() == [
            "2,3;2,inf",
            "-3,2 +3,inf",
            "2,inf;3,inf",
            "-2,inf +2,3",
            "2,3;3,inf",
        ]

    def test_gen_reverse(self, capsys):
        """Test --reverse prints LIST(n) backwards."""
        _, forward, _ = run_cli(capsys, "gen", "6")
        _, backward, _ = run_cli(capsys, "gen", "6", "--reverse")
        assert backward.splitlines() == forward.splitlines()[::-1]

    def test_engines_agree(self, capsys):
        """Test both engines print byte-identical streams."""
        for n in range(2, 9):
            for fmt in ("trees", "moves"):
                _, recursive, _ = run_cli(capsys, "gen", str(n), "--format", fmt)
                _, greedy, _ = run_cli(capsys, "gen", str(n), "--format", fmt, "--engine", "greedy")
                assert recursive == greedy

    def test_greedy_reverse(self, capsys):
        """Test the greedy engine's --reverse starts from L_n."""
        _, recursive, _ = run_cli(capsys, "gen", "6", "--reverse")
        _, greedy, _ = run_cli(capsys, "gen", "6", "--reverse", "--engine", "greedy")
        assert recursive == greedy

    def test_gen_limit(self, capsys):
        """Test --limit stops early."""
        _, out, _ = run_cli(capsys, "gen", "8", "--limit", "5")
        assert len(out.splitlines()) == 5

    def test_last_line_is_top_rank(self, capsys):
        """Test the last listed tree is unrank(n, t_n)."""
        for n in range(2, 11):
            _, listed, _ = run_cli(capsys, "gen", str(n))
            _, count, _ = run_cli(capsys, "count", str(n))
            _, top, _ = run_cli(capsys, "unrank", str(n), count.strip())
            assert listed.splitlines()[-1] == top.strip()

    def test_gen_small_n(self, capsys):
        """Test n < 2 exits 2 with the error code on stderr."""
        code, out, err = run_cli(capsys, "gen", "1")
        assert code == 2
        assert out == ""
        assert "NTooSmall" in err


class TestRankCommands:
    """Test cases for rank, unrank and count."""

    def test_rank(self, capsys):
        """Test the worked F_7 tree ranks 24."""
        code, out, _ = run_cli(capsys, "rank", "7", "--tree", "2,3;3,4;4,5;5,inf;6,7;6,inf")
        assert code == 0
        assert out == "24\n"

    def test_rank_small(self, capsys):
        """Test the F_2 tree ranks 1 and L_5 ranks 21."""
        assert run_cli(capsys, "rank", "2", "--tree", "2,inf")[1] == "1\n"
        assert run_cli(capsys, "rank", "5", "--tree", serialize_tree(last_tree(5)))[1] == "21\n"

    def test_rank_bad_tree(self, capsys):
        """Test invalid tree text exits 2."""
        code, _, err = run_cli(capsys, "rank", "5", "--tree", "2,4;2,inf;3,inf;4,inf")
        assert code == 2
        assert "NotAnEdge" in err
        code, _, err = run_cli(capsys, "rank", "4", "--tree", "2,3;2,inf;3,inf")
        assert code == 2
        assert "NotASpanningTree" in err

    def test_unrank(self, capsys):
        """Test unranking the worked example and the endpoints."""
        assert run_cli(capsys, "unrank", "7", "24")[1] == "2,3;3,4;4,5;5,inf;6,7;6,inf\n"
        assert run_cli(capsys, "unrank", "2", "1")[1] == "2,inf\n"
        assert run_cli(capsys, "unrank", "6", "55")[1] == serialize_tree(last_tree(6)) + "\n"

    def test_unrank_out_of_range(self, capsys):
        """Test ranks past t_n exit 2."""
        code, out, err = run_cli(capsys, "unrank", "5", "22")
        assert code == 2
        assert out == ""
        assert "RankOutOfRange" in err

    def test_count(self, capsys):
        """Test tree counts."""
        assert run_cli(capsys, "count", "6")[1] == "55\n"
        assert run_cli(capsys, "count", "20")[1] == "39088169\n"
        assert run_cli(capsys, "count", "1")[0] == 2


class TestVerifyAndBench:
    """Test cases for verify and bench."""

    def test_verify(self, capsys):
        """Test LIST(8) verifies with exit 0."""
        code, out, _ = run_cli(capsys, "verify", "8")
        assert code == 0
        assert "trees=377" in out
        assert "pivot_ok=True" in out

    def test_verify_greedy(self, capsys):
        """Test the greedy engine verifies."""
        assert run_cli(capsys, "verify", "6", "--engine", "greedy")[0] == 0

    def test_verify_out_of_range(self, capsys):
        """Test n past the oracle range exits 2."""
        code, _, err = run_cli(capsys, "verify", "15")
        assert code == 2
        assert "OracleRangeExceeded" in err

    def test_verify_range_checked_before_listing(self, capsys):
        """Test n far past the oracle range exits 2 without listing F_n."""
        started = time.perf_counter()
        code, out, err = run_cli(capsys, "verify", "30")
        assert time.perf_counter() - started < 5
        assert code == 2
        assert out == ""
        assert "OracleRangeExceeded" in err
        assert run_cli(capsys, "verify", "20", "--engine", "greedy")[0] == 2

    def test_bench(self, capsys):
        """Test bench reports the tree count."""
        code, out, _ = run_cli(capsys, "bench", "8", "--repeat", "2")
        assert code == 0
        assert out.startswith("trees=377 ")
        assert "trees_per_second=" in out
        assert run_cli(capsys, "bench", "6", "--engine", "greedy")[1].startswith("trees=55 ")


class TestUsage:
    """Test cases for argument handling."""

    def test_no_command(self, capsys):
        """Test a bare invocation exits 2."""
        assert main([]) == 2

    def test_bad_arguments(self, capsys):
        """Test argparse errors exit 2."""
        with pytest.raises(SystemExit) as exc:
            main(["gen", "five"])
        assert exc.value.code == 2
        with pytest.raises(SystemExit) as exc:
            main(["gen", "5", "--format", "dot"])
        assert exc.value.code == 2


class TestMenu:
    """Test cases for the interactive menu."""

    @staticmethod
    def answers(*replies):
        it = iter(replies)

        def read(_prompt):
            try:
                return next(it)
            except StopIteration:
                raise EOFError from None

        return read

    def test_menu_unrank(self):
        """Test choice 3 prints the tree at a rank."""
        out = io.StringIO()
        assert run_menu(read=self.answers("3", "7", "24"), out=out) == 0
        assert "Tree #24: 2,3;3,4;4,5;5,inf;6,7;6,inf" in out.getvalue()

    def test_menu_rank(self):
        """Test choice 2 reads edges with n + 1 as the hub."""
        out = io.StringIO()
        assert run_menu(read=self.answers("2", "4", "2 3", "3 4", "4 5"), out=out) == 0
        assert "is #8" in out.getvalue()

    def test_menu_gen(self):
        """Test choice 1 lists and counts the trees."""
        out = io.StringIO()
        assert run_menu(read=self.answers("1", "3"), out=out) == 0
        text = out.getvalue()
        assert "Number of spanning trees of F_3: 3" in text
        assert "Move #1: -3,2 +3,inf" in text

    def test_menu_invalid(self):
        """Test bad choices and early end of input return 2."""
        assert run_menu(read=self.answers("4"), out=io.StringIO()) == 2
        assert run_menu(read=self.answers("3", "5", "99"), out=io.StringIO()) == 2
        assert run_menu(read=self.answers("1"), out=io.StringIO()) == 2
