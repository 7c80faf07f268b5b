"""
Interactive three-choice menu: list, rank or unrank the trees of F_n.

Prompts go to the output stream and answers come from input(), one question
at a time. Vertex n+1 is accepted as another name for the hub.
"""

import sys
from typing import Callable, Optional, TextIO

from fan.codec import parse_vertex, serialize_tree
from fan.graph import HUB, check_n
from fan.ranking import rank, tree_count, unrank
from fan.recursive import iter_steps
from fan.tree import SpanningTree
from shared.errors import FanGraphError, MalformedTokenError


MENU_TEXT = (
    "  1. GEN\n"
    "  2. Ranking of GEN\n"
    "  3. Unranking of GEN\n"
)


class MenuSession:
    """One pass through the menu."""

    def __init__(
        self,
        read: Callable[[str], str] = input,
        out: Optional[TextIO] = None,
    ):
        self.read = read
        self.out = out or sys.stdout

    def ask(self, prompt: str) -> str:
        self.out.write(prompt)
        self.out.flush()
        return self.read("").strip()

    def ask_int(self, prompt: str) -> int:
        answer = self.ask(prompt)
        try:
            return int(answer)
        except ValueError:
            raise MalformedTokenError(f"expected an integer, got '{answer}'") from None

    def run(self) -> int:
        """
        Show the menu, serve one choice and return an exit code.

        Returns:
            0 on success, 2 on invalid input
        """
        self.out.write(MENU_TEXT)
        try:
            choice = self.ask_int("  Enter selection: ")
            if choice not in (1, 2, 3):
                self.out.write("Error: Invalid choice.\n")
                return 2
            n = self.ask_int("Input n: ")
            check_n(n)
            if choice == 1:
                self.list_trees(n)
            elif choice == 2:
                self.rank_tree(n)
            else:
                self.unrank_tree(n)
        except FanGraphError as e:
            self.out.write(f"Error: {e}\n")
            return 2
        except EOFError:
            self.out.write("\n")
            return 2
        return 0

    def list_trees(self, n: int) -> None:
        self.out.write("\n##### GEN ####\n")
        count = 0
        for move, tree in iter_steps(n):
            count += 1
            if move is not None:
                self.out.write(f"Move #{count - 1}: {move}\n")
            self.out.write(f"{serialize_tree(tree)}\n")
        self.out.write(f"Number of spanning trees of F_{n}: {count}\n")

    def rank_tree(self, n: int) -> None:
        self.out.write(
            "Enter the edges of the spanning tree in format 'v1 v2'. "
            f"Use inf or {n + 1} for the hub.\n"
        )
        edges = []
        for i in range(1, n):
            tokens = self.ask(f"Edge {i}: ").split()
            if len(tokens) != 2:
                raise MalformedTokenError(f"expected two vertices, got '{' '.join(tokens)}'")
            edges.append(tuple(self._vertex(n, token) for token in tokens))
        tree = SpanningTree.from_edges(n, edges)
        self.out.write(f"Rank of inputted tree in listing for GEN is #{rank(n, tree)}\n")

    def unrank_tree(self, n: int) -> None:
        r = self.ask_int(f"Enter rank (between 1 and {tree_count(n)}): ")
        tree = unrank(n, r)
        self.out.write(f"\nTree #{r}: {serialize_tree(tree)}\n")

    @staticmethod
    def _vertex(n: int, token: str) -> int:
        v = parse_vertex(token)
        return HUB if v == n + 1 else v


def run_menu(read: Callable[[str], str] = input, out: Optional[TextIO] = None) -> int:
    """Run the interactive menu once."""
    return MenuSession(read=read, out=out).run()
