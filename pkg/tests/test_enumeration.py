"""Generation streams, graph6 I/O, fat families, sum composition."""

import itertools

import networkx as nx
import pytest

from hoffline.core import HoffmanGraph, canonical_form, find_embedding
from hoffline.enumeration import (
    EMPTY_GRAPH,
    FatConstraints,
    MalformedHeader,
    NonCanonicalPadding,
    TruncatedPayload,
    all_slim_graphs,
    connected_slim_graphs,
    enumerate_sums,
    fat_hoffman_graphs,
    parse_graph6,
    read_graph6_lines,
    sum_graphs,
    write_graph6,
)
from hoffline.families import family_graph
from hoffline.sums import validate_sum

CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}
ALL_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156}


def test_connected_counts():
    for n, want in CONNECTED_COUNTS.items():
        assert sum(1 for _ in connected_slim_graphs(n)) == want


def test_all_graph_counts():
    for n, want in ALL_COUNTS.items():
        assert sum(1 for _ in all_slim_graphs(n)) == want


def test_streams_have_no_isomorphic_duplicates():
    for n in range(1, 7):
        forms = [canonical_form(g) for g in connected_slim_graphs(n)]
        assert len(forms) == len(set(forms))


def test_generation_matches_labeled_bruteforce():
    # quotient of all labeled graphs by isomorphism, for small n
    for n in range(1, 6):
        labeled = set()
        pairs = list(itertools.combinations(range(n), 2))
        for bits in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if (bits >> i) & 1]
            g = HoffmanGraph.slim(n, edges)
            labeled.add(canonical_form(g))
        got = {canonical_form(g) for g in all_slim_graphs(n)}
        assert got == labeled
        conn = {
            canonical_form(g) for g in all_slim_graphs(n) if g.is_connected()
        }
        assert conn == {canonical_form(g) for g in connected_slim_graphs(n)}


def test_generation_is_deterministic():
    first = [write_graph6(g) for g in connected_slim_graphs(6)]
    second = [write_graph6(g) for g in connected_slim_graphs(6)]
    assert first == second


def test_generation_agrees_with_published_atlas():
    # the networkx graph atlas is an independently curated collection of
    # all graphs with up to 7 vertices; ingesting it must give exactly
    # the canonical-form sets of native generation
    from networkx.generators.atlas import graph_atlas_g

    atlas = {n: set() for n in range(1, 8)}
    for ag in graph_atlas_g()[1:]:
        n = ag.number_of_nodes()
        if n == 0:
            continue
        relabel = {v: i for i, v in enumerate(sorted(ag.nodes()))}
        g = HoffmanGraph.slim(n, [(relabel[u], relabel[v]) for u, v in ag.edges()])
        if g.is_connected():
            atlas[n].add(canonical_form(g))
    for n in range(1, 8):
        native = {canonical_form(g) for g in connected_slim_graphs(n)}
        assert native == atlas[n]


# -- graph6 --------------------------------------------------------------


def test_graph6_round_trip_all_small():
    for n in range(1, 8):
        for g in connected_slim_graphs(n):
            assert parse_graph6(write_graph6(g)) == g


def test_graph6_agrees_with_networkx():
    for n in range(1, 7):
        for g in connected_slim_graphs(n):
            line = write_graph6(g)
            ng = nx.from_graph6_bytes(line.encode())
            assert set(ng.nodes()) == set(range(g.slim_count))
            assert {frozenset(e) for e in ng.edges()} == {
                frozenset(e) for e in g.edges()
            }


def test_graph6_parses_networkx_output():
    g = nx.petersen_graph()
    line = nx.to_graph6_bytes(g, header=False).decode().strip()
    mine = parse_graph6(line)
    assert mine.slim_count == 10 and mine.edge_count() == 15


def test_graph6_optional_header():
    k3 = write_graph6(HoffmanGraph.slim(3, [(0, 1), (1, 2), (0, 2)]))
    assert parse_graph6(">>graph6<<" + k3).edge_count() == 3


def test_graph6_malformed_header():
    with pytest.raises(MalformedHeader):
        parse_graph6("")
    with pytest.raises(MalformedHeader):
        parse_graph6(" \n")
    with pytest.raises(MalformedHeader):
        parse_graph6("~~~")  # long form unsupported


def test_graph6_truncated_payload():
    line = write_graph6(next(iter(connected_slim_graphs(7))))
    with pytest.raises(TruncatedPayload):
        parse_graph6(line[:-1])


def test_graph6_noncanonical_padding():
    line = write_graph6(HoffmanGraph.slim(5, [(0, 1)]))
    with pytest.raises(NonCanonicalPadding):
        parse_graph6(line + "?")
    # flip a padding bit: 5 vertices -> 10 bits, 2 pad bits
    bad = line[:-1] + chr(((ord(line[-1]) - 63) | 1) + 63)
    with pytest.raises(NonCanonicalPadding):
        parse_graph6(bad)


def test_read_graph6_lines_skips_blanks():
    lines = ["", write_graph6(HoffmanGraph.slim(2, [(0, 1)])), "  ", "D?{"]
    graphs = list(read_graph6_lines(lines))
    assert len(graphs) == 2


# -- constrained fat graphs ----------------------------------------------


def test_two_slim_bundle_yields_exactly_f1_f3_f4():
    out = list(
        fat_hoffman_graphs(
            FatConstraints(
                slim_min=2, slim_max=2, fat_max=4, max_fat_degree=2,
                nonadjacent_slim_pair=True, non_line=True,
            )
        )
    )
    got = {canonical_form(g) for g in out}
    want = {canonical_form(family_graph(n)) for n in ("F1", "F3", "F4")}
    assert got == want


def test_pivot_bundle_yields_exactly_f2_f5_f8():
    out = list(
        fat_hoffman_graphs(
            FatConstraints(
                slim_min=3, slim_max=4, fat_max=2,
                pivot_structure=True, non_line=True,
            )
        )
    )
    got = {canonical_form(g) for g in out}
    want = {canonical_form(family_graph(n)) for n in ("F2", "F5", "F8")}
    assert got == want


def test_hub_bundle_members_contain_f6_f7_f9():
    targets = [family_graph(n) for n in ("F6", "F7", "F9")]
    out = list(
        fat_hoffman_graphs(
            FatConstraints(
                slim_min=3, slim_max=6, fat_min=1, fat_max=1,
                exact_fat_degree=1, overlapping_cover_pair=True, non_line=True,
            )
        )
    )
    assert out
    for g in out:
        assert any(find_embedding(t, g) is not None for t in targets)


def test_fat_stream_is_unique_and_satisfies_constraints():
    c = FatConstraints(slim_min=2, slim_max=3, fat_min=1, fat_max=2, connected=True)
    forms = set()
    for g in fat_hoffman_graphs(c):
        f = canonical_form(g)
        assert f not in forms
        forms.add(f)
        assert 2 <= g.slim_count <= 3
        assert 1 <= g.fat_count <= 2
        assert g.is_connected()


# -- sums ------------------------------------------------------------------


def test_sum_stream_outputs_valid_sums():
    for g, parts in sum_graphs(3):
        ok, why = validate_sum(g, parts)
        assert ok, why


def test_sum_component_filter():
    for k in (2, 3):
        for c in (1, 2):
            for g, _ in sum_graphs(k, component_count=c):
                assert len(g.connected_components()) == c


def test_enumerate_sums_empty_f_gives_plain_sums():
    plain = {canonical_form(g) for g, _ in sum_graphs(2, component_count=1)}
    composed = {
        canonical_form(g)
        for g in enumerate_sums(EMPTY_GRAPH, 2, component_count_k=1)
    }
    assert composed == plain


def test_enumerate_sums_f7_row():
    f7 = family_graph("F7")
    out = list(enumerate_sums(f7, 2, component_count_k=1))
    assert out
    for g in out:
        assert g.is_connected()
        assert g.slim_count == f7.slim_count + 2
        # the fat set of F7 lands inside the fat set of K, so the composed
        # graph keeps the same fat count as K
        assert find_embedding(f7, g) is not None


def test_enumerate_sums_are_valid_two_part_sums():
    f1 = family_graph("F1")
    count = 0
    for g in enumerate_sums(f1, 2, component_count_k=1):
        count += 1
        emb = find_embedding(f1, g)
        assert emb is not None
    assert count > 0
