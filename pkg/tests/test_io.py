import pytest

from hnp import Hypergraph, InputError, read_edge_list, write_edge_list


def test_round_trip(tmp_path):
    h = Hypergraph(4, [(0, 1), (1, 2, 3)])
    path = tmp_path / "h.edges"
    write_edge_list(h, str(path))
    back = read_edge_list(str(path)).hypergraph
    # token order is first-seen, which here matches canonical edge order
    assert len(back.edges) == 2
    assert sorted(len(e) for e in back.edges) == [2, 3]


def test_dedup_and_token_mapping(tmp_path):
    path = tmp_path / "toy.edges"
    path.write_text("a b\nb a\na b c\n", encoding="utf-8")
    parsed = read_edge_list(str(path))
    assert parsed.hypergraph.n == 3
    assert parsed.duplicate_edges == 1
    assert sorted(len(e) for e in parsed.hypergraph.edges) == [2, 3]
    assert parsed.token_to_id == {"a": 0, "b": 1, "c": 2}


def test_comments_and_blank_lines(tmp_path):
    path = tmp_path / "c.edges"
    path.write_text("# header\n\na b\n  \n# trailing\nb c\n", encoding="utf-8")
    parsed = read_edge_list(str(path))
    assert parsed.hypergraph.n == 3
    assert len(parsed.hypergraph.edges) == 2


def test_repeated_token_rejected_with_line_number(tmp_path):
    path = tmp_path / "bad.edges"
    path.write_text("a b\nx y x\n", encoding="utf-8")
    with pytest.raises(InputError, match=r":2"):
        read_edge_list(str(path))


def test_oversize_dropped_and_counted(tmp_path):
    path = tmp_path / "big.edges"
    path.write_text("a b\np q r s t u\n", encoding="utf-8")
    parsed = read_edge_list(str(path), max_edge_size=5)
    assert parsed.dropped_oversize == 1
    assert parsed.oversize_examples == [2]
    assert parsed.hypergraph.n == 2  # tokens of the dropped line get no ids


def test_empty_file(tmp_path):
    path = tmp_path / "empty.edges"
    path.write_text("", encoding="utf-8")
    parsed = read_edge_list(str(path))
    assert parsed.hypergraph == Hypergraph(0)
    assert parsed.duplicate_edges == 0
