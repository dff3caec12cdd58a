import tempfile
import unittest
from pathlib import Path

from tdcontract.errors import GraphFormatError
from tdcontract.graph import (
    Graph,
    cycle,
    format_edge_list,
    parse_edge_list,
    read_graph,
    write_graph,
)


class EdgeListTest(unittest.TestCase):
    def test_parse(self):
        text = """
# a path on three vertices
3 2
0 1

1 2
"""
        assert parse_edge_list(text) == Graph(3, [(0, 1), (1, 2)])

    def test_format(self):
        assert format_edge_list(cycle(3)) == "3 3\n0 1\n0 2\n1 2\n"

    def test_empty_graph(self):
        assert parse_edge_list("0 0\n") == Graph(0)
        assert parse_edge_list("2 0").n == 2

    def test_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            file = Path(tmp) / "c5.el"
            write_graph(cycle(5), file)
            assert read_graph(file) == cycle(5)

    def test_errors(self):
        cases = {
            "": None,
            "3\n": 1,
            "3 1\n0 0\n": 2,
            "3 1\n0 3\n": 2,
            "3 2\n0 1\n1 0\n": 3,
            "3 1\n0 x\n": 2,
            "3 2\n0 1\n": None,
        }
        for text, line in cases.items():
            with self.assertRaises(GraphFormatError) as context:
                parse_edge_list(text)
            if line is not None:
                assert context.exception.line == line, text
                assert str(context.exception).startswith(f"line {line}:")
