import pytest
from hypothesis import given, strategies as st

from artin_garside.coxeter import (
    EMPTY_GRAPH, CatalogId, CoxeterGraph, DomainError, GraphEmbedding, GraphParseError,
    catalog_graph, catalog_id_of, catalog_parts, disjoint_union, expected_length,
    expected_reflection_count, find_embedding, inclusion_chain, parse_graph,
    parse_graph_arg, relabel_word, standard_ids,
)


def test_catalog_labelings():
    e6 = catalog_graph("E6")
    assert e6.edges() == [(1, 2, 3), (2, 3, 3), (3, 4, 3), (3, 5, 3), (5, 6, 3)]
    assert catalog_graph("F4").edges() == [(1, 2, 3), (2, 3, 4), (3, 4, 3)]
    assert catalog_graph("B3").edges() == [(1, 2, 4), (2, 3, 3)]
    assert catalog_graph("H4").edges() == [(1, 2, 5), (2, 3, 3), (3, 4, 3)]
    assert catalog_graph("D5").edges() == [(1, 2, 3), (2, 3, 3), (3, 4, 3), (3, 5, 3)]
    assert catalog_graph("I2(7)").m(1, 2) == 7
    assert catalog_graph("G2").m(2, 1) == 6
    assert catalog_graph("A4").m(1, 3) == 2


def test_d3_is_a3_in_disguise():
    assert find_embedding(catalog_graph("D3"), catalog_graph("A3")) is not None
    assert expected_reflection_count("D3") == 6


@pytest.mark.parametrize("bad", ["E9", "E5", "H5", "F3", "G3", "I2(6)", "I2(4)", "B1", "D2", "A0", "Z3", "I2"])
def test_catalog_rejects_out_of_range(bad):
    with pytest.raises(DomainError):
        CatalogId.parse(bad)


def test_catalog_id_round_trip():
    for cid in standard_ids():
        assert CatalogId.parse(str(cid)) == cid
        assert catalog_graph(cid).rank == cid.rank
        assert catalog_id_of(catalog_graph(cid)) == cid


@pytest.mark.parametrize("name,count", [
    ("A1", 1), ("A5", 15), ("A8", 36), ("B2", 4), ("B8", 64), ("D4", 12), ("D8", 56),
    ("E6", 36), ("E7", 63), ("E8", 120), ("F4", 24), ("G2", 6), ("H3", 15), ("H4", 60),
    ("I2(5)", 5), ("I2(12)", 12),
])
def test_reflection_counts(name, count):
    assert expected_reflection_count(name) == count


def test_matrix_validation():
    with pytest.raises(DomainError):
        CoxeterGraph(((1, 3), (4, 1)))
    with pytest.raises(DomainError):
        CoxeterGraph(((1, 1), (1, 1)))
    with pytest.raises(DomainError):
        CoxeterGraph.from_edges(2, [(1, 3, 3)])


def test_label_does_not_affect_equality():
    assert catalog_graph("A2") == CoxeterGraph.from_edges(2, [(1, 2, 3)])


def test_parse_graph():
    g = parse_graph("# B3\nrank 3\nedge 1 2 4  # doubled\nedge 2 3 3\n")
    assert g == catalog_graph("B3")
    assert parse_graph(g.to_text()) == g
    # m = 2 is accepted and simply means no edge
    assert parse_graph("rank 2\nedge 1 2 2\n").edges() == []


@pytest.mark.parametrize("text,line", [
    ("rank 2\nedge 1 2 inf\n", 2),
    ("rank 3\nedge 1 2 3\nedge 2 1 4\n", 3),
    ("rank 2\nedge 1 1 3\n", 2),
    ("rank 2\nedge 1 2 1\n", 2),
    ("edge 1 2 3\n", 1),
    ("rank 2\nvertex 1\n", 2),
    ("rank 2\nedge 1 2 x\n", 2),
])
def test_parse_graph_errors(text, line):
    with pytest.raises(GraphParseError) as info:
        parse_graph(text)
    assert info.value.line_no == line


def test_parse_graph_arg(tmp_path):
    p = tmp_path / "g.txt"
    p.write_text("rank 2\nedge 1 2 5\n")
    assert parse_graph_arg(f"@{p}") == catalog_graph("I2(5)")
    u = parse_graph_arg("A1xA1")
    assert u.rank == 2 and u.edges() == [] and u.label == "A1xA1"
    assert parse_graph_arg("I2(5)").label == "I2(5)"


def test_disjoint_union():
    g, e1, e2 = disjoint_union(catalog_graph("A2"), catalog_graph("B2"))
    assert g.edges() == [(1, 2, 3), (3, 4, 4)]
    assert e2.vertex_map == (3, 4)
    assert catalog_parts(g) == [CatalogId("A", 2), CatalogId("B", 2)]
    assert expected_length(g) == 3 + 4
    assert disjoint_union(EMPTY_GRAPH, g)[0] == g


def test_embedding_must_preserve_labels():
    with pytest.raises(DomainError):
        GraphEmbedding(catalog_graph("A2"), catalog_graph("A3"), (1, 3))
    with pytest.raises(DomainError):
        GraphEmbedding(catalog_graph("A2"), catalog_graph("A3"), (1, 1))
    e = GraphEmbedding(catalog_graph("A2"), catalog_graph("A3"), (3, 2))
    assert relabel_word((1, 2, 1), e) == (3, 2, 3)
    assert e.new_vertices == [1]


def test_compose():
    a = GraphEmbedding.identity_prefix(catalog_graph("A1"), catalog_graph("A2"))
    b = GraphEmbedding(catalog_graph("A2"), catalog_graph("A3"), (3, 2))
    assert a.compose(b).vertex_map == (3,)


def test_find_embedding():
    e = find_embedding(parse_graph_arg("A1xA1"), catalog_graph("A3"))
    assert e.vertex_map == (1, 3)
    assert find_embedding(catalog_graph("B2"), catalog_graph("A5")) is None
    assert find_embedding(catalog_graph("A3"), catalog_graph("A2")) is None


@pytest.mark.parametrize("cid", [str(c) for c in standard_ids()])
def test_inclusion_chains(cid):
    chain = inclusion_chain(cid)
    assert chain[0].embedding.source == EMPTY_GRAPH
    assert chain[-1].graph == catalog_graph(cid)
    for k, step in enumerate(chain):
        assert step.graph.rank == k + 1
        assert len(step.embedding.new_vertices) == 1
        if k:
            assert step.embedding.source == chain[k - 1].graph
            assert expected_reflection_count(chain[k - 1].id) < expected_reflection_count(step.id)


def test_specific_chains():
    assert [str(s.id) for s in inclusion_chain("E8")] == \
        ["A1", "A2", "A3", "A4", "D5", "E6", "E7", "E8"]
    assert [str(s.id) for s in inclusion_chain("H4")] == ["A1", "I2(5)", "H3", "H4"]
    f4 = inclusion_chain("F4")[-1]
    assert str(f4.embedding.source) == "B3" and f4.embedding.vertex_map == (3, 2, 1)
    assert f4.embedding.new_vertices == [4]


@given(st.permutations(range(1, 5)), st.lists(st.integers(1, 4), max_size=8))
def test_relabeling_is_an_isomorphism(perm, w):
    g = catalog_graph("D4")
    h, e = g.relabeled(perm)
    assert h.rank == 4
    assert sorted(m for *_, m in h.edges()) == sorted(m for *_, m in g.edges())
    assert relabel_word(w, e) == tuple(perm[a - 1] for a in w)
