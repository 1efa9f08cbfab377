import dataclasses
import itertools

import networkx as nx
import pytest

import ntk
from ntk.catalog import _s3_times_cyclic, builtin_catalog
from ntk.errors import DuplicateCell, TooLarge
from ntk.graphs import COLUMN, ROW, SYMBOL, WitnessShape
from ntk.groups import CYCLIC_NONTRIVIAL


def witness_for(group):
    return ntk.build_witness(ntk.decompose(group))


def cyclic_nontrivial_groups(max_order):
    return [e.group for e in builtin_catalog(max_order)
            if ntk.sylow2(e.group).classification == CYCLIC_NONTRIVIAL]


# ---------------------------------------------------------------------------
# induced subgraphs

def test_all_four_cells_of_z2_form_a_clique():
    square = ntk.cayley_square(ntk.cyclic(2))
    graph = ntk.induced_subgraph(square, list(itertools.product(range(2), range(2))))
    assert len(graph.vertices) == 4
    assert len(graph.edges) == 6
    # each pair shares exactly one of row/column/symbol
    per_label = {lab: len(graph.edges_with_label(lab)) for lab in (ROW, COLUMN, SYMBOL)}
    assert per_label == {ROW: 2, COLUMN: 2, SYMBOL: 2}


def test_single_cell_graph():
    square = ntk.cayley_square(ntk.cyclic(4))
    graph = ntk.induced_subgraph(square, [(2, 3)])
    assert len(graph.vertices) == 1 and not graph.edges


def test_duplicate_cell_rejected():
    square = ntk.cayley_square(ntk.cyclic(3))
    with pytest.raises(DuplicateCell):
        ntk.induced_subgraph(square, [(0, 0), (0, 0)])


def test_z6_witness_graph_is_cubic():
    group = ntk.cyclic(6)
    witness = witness_for(group)
    graph = ntk.induced_subgraph(ntk.cayley_square(group), witness.all_cells)
    assert len(graph.vertices) == 12 and len(graph.edges) == 18
    masks = graph.adjacency_masks()
    assert all(m.bit_count() == 3 for m in masks)


def test_row_and_column_labels_never_coincide():
    group = ntk.symmetric(3)
    square = ntk.cayley_square(group)
    cells = list(itertools.product(range(6), range(6)))[:20]
    graph = ntk.induced_subgraph(square, cells)
    seen = {}
    for u, v, lab in graph.edges:
        key = (u, v)
        seen.setdefault(key, set()).add(lab)
    for labels in seen.values():
        assert not ({ROW, COLUMN} <= labels)
        assert len(labels) == 1  # in a latin square each pair shares one class


def test_witness_graphs_are_cubic_with_expected_symbol_counts():
    for group in cyclic_nontrivial_groups(40):
        witness = witness_for(group)
        square = ntk.cayley_square(group)
        shape = WitnessShape.of(witness)
        ladder = ntk.induced_subgraph(square, witness.ladder_cells)
        assert len(ladder.edges_with_label(SYMBOL)) == shape.ladder_size
        if witness.prism_cells:
            prisms = ntk.induced_subgraph(square, witness.prism_cells)
            assert len(prisms.edges_with_label(SYMBOL)) == shape.k * (shape.l - shape.m)
        whole = ntk.induced_subgraph(square, witness.all_cells)
        assert all(m.bit_count() == 3 for m in whole.adjacency_masks())


# ---------------------------------------------------------------------------
# structural checks

def test_separation_passes():
    for group in (ntk.cyclic(6), _s3_times_cyclic(3)):
        report = ntk.check_separation(ntk.cayley_square(group), witness_for(group))
        assert report.passed and report.overlap == 0


def test_separation_detects_moved_row_fault():
    group = _s3_times_cyclic(3)
    witness = witness_for(group)
    # drag one prism cell into a ladder row
    (key, (r, c)) = next(iter(witness.prism_diag.items()))
    t_row = witness.ladder_diag[0][0]
    tampered_diag = dict(witness.prism_diag)
    tampered_diag[key] = (t_row, c)
    tampered = dataclasses.replace(witness, prism_diag=tampered_diag)
    report = ntk.check_separation(ntk.cayley_square(group), tampered)
    assert not report.passed
    assert report.cross_edges[ROW] >= 1


def test_mobius_certificates():
    cases = {
        2: ntk.cyclic(2),       # rim 4 + 2 chords: complete graph on 4 vertices
        6: ntk.cyclic(6),       # rim 12 + 6 antipodal chords
    }
    for km, group in cases.items():
        report = ntk.check_mobius(ntk.cayley_square(group), witness_for(group))
        assert report.passed
        assert report.rim_length == 2 * km
        assert report.chord_offsets == (km,)


def test_mobius_order18():
    group = _s3_times_cyclic(3)
    report = ntk.check_mobius(ntk.cayley_square(group), witness_for(group))
    assert report.passed and report.rim_length == 12


def test_mobius_detects_shifted_cell():
    group = ntk.cyclic(6)
    witness = witness_for(group)
    dec = witness.dec
    g = dec.group
    # recompute one shifted-family cell with the fixed-part index off by one
    powers = dec.gen_powers
    i = 2
    h_wrong = witness.ordering[(i + 2) % dec.fixed_order]
    row = g.mul(powers[i % dec.sylow_order], witness.ordering[i % dec.fixed_order])
    bad_cell = (row, g.mul(h_wrong, powers[(i + 1) % dec.sylow_order]))
    shift = list(witness.ladder_shift)
    shift[i] = bad_cell
    tampered = dataclasses.replace(witness, ladder_shift=tuple(shift))
    report = ntk.check_mobius(ntk.cayley_square(group), tampered)
    assert not report.passed


def test_prism_certificates():
    z6_report = ntk.check_prisms(ntk.cayley_square(ntk.cyclic(6)),
                                 witness_for(ntk.cyclic(6)))
    assert z6_report.passed and z6_report.prism_count == 0

    group = _s3_times_cyclic(3)
    report = ntk.check_prisms(ntk.cayley_square(group), witness_for(group))
    assert report.passed
    assert report.prism_count == 3 and report.cycle_count == 6
    assert report.matching_offset == 2

    s3 = ntk.symmetric(3)
    report = ntk.check_prisms(ntk.cayley_square(s3), witness_for(s3))
    assert report.passed and report.prism_count == 1


def test_full_witness_check_catalog():
    for group in cyclic_nontrivial_groups(100):
        square = ntk.cayley_square(group)
        report = ntk.check_witness(square, witness_for(group))
        assert report.passed, group.label


def test_witness_report_json_keys():
    group = ntk.cyclic(6)
    report = ntk.check_witness(ntk.cayley_square(group), witness_for(group))
    data = report.to_json()
    assert set(data) == {"claim1", "mobius", "prisms", "independentSetSize", "passed"}
    assert set(data["mobius"]) >= {"rimLength", "chordOffsets"}
    assert set(data["prisms"]) >= {"cycleCount", "matchingOffset"}
    assert data["independentSetSize"] == 5


# ---------------------------------------------------------------------------
# exact independent sets

def _complete_graph_on_z2():
    square = ntk.cayley_square(ntk.cyclic(2))
    return ntk.induced_subgraph(square, list(itertools.product(range(2), range(2))))


def test_mis_on_complete_graph():
    size, witness = ntk.max_independent_set(_complete_graph_on_z2())
    assert size == 1 and len(witness) == 1


def test_mis_on_mobius_and_prism():
    group = ntk.cyclic(6)
    witness = witness_for(group)
    square = ntk.cayley_square(group)
    ladder = ntk.induced_subgraph(square, witness.ladder_cells)
    size, _ = ntk.max_independent_set(ladder)
    assert size == 5  # km - 1 with km = 6

    s18 = _s3_times_cyclic(3)
    w18 = witness_for(s18)
    sq18 = ntk.cayley_square(s18)
    prisms = ntk.induced_subgraph(sq18, w18.prism_cells)
    size, chosen = ntk.max_independent_set(prisms)
    assert size == 12  # three prisms on 8 vertices, alpha = 4 each
    ok, _ = ntk.is_partial_transversal(sq18, chosen)
    assert ok


def test_mis_guard():
    group = _s3_times_cyclic(7)  # |W| = 2n = 84 > 60
    witness = witness_for(group)
    graph = ntk.induced_subgraph(ntk.cayley_square(group), witness.all_cells)
    with pytest.raises(TooLarge):
        ntk.max_independent_set(graph)
    size, _ = ntk.max_independent_set(graph, guard=100)
    assert size == group.n - 1


def test_mis_matches_brute_force_on_small_graphs():
    import itertools as it
    group = ntk.symmetric(3)
    square = ntk.cayley_square(group)
    cells = [(r, c) for r in range(6) for c in range(6) if (r + c) % 3 != 1][:12]
    graph = ntk.induced_subgraph(square, cells)
    size, chosen = ntk.max_independent_set(graph)
    adj = {i: set() for i in range(len(graph.vertices))}
    for u, v, _ in graph.edges:
        adj[u].add(v)
        adj[v].add(u)
    best = 0
    for r in range(len(graph.vertices), 0, -1):
        for combo in it.combinations(range(len(graph.vertices)), r):
            if all(v not in adj[u] for u, v in it.combinations(combo, 2)):
                best = r
                break
        if best:
            break
    assert size == best
    chosen_idx = [graph.vertices.index(cell) for cell in chosen]
    assert all(v not in adj[u] for u, v in it.combinations(chosen_idx, 2))


# ---------------------------------------------------------------------------
# generic isomorphism cross-validation (small cases only)

def _nx_from_labeled(graph):
    g = nx.Graph()
    g.add_nodes_from(range(len(graph.vertices)))
    g.add_edges_from((u, v) for u, v, _ in graph.edges)
    return g


def test_ladder_subgraphs_match_reference_generators():
    for group in (ntk.cyclic(2), ntk.cyclic(4), ntk.symmetric(3), ntk.cyclic(6)):
        witness = witness_for(group)
        shape = WitnessShape.of(witness)
        if 2 * shape.ladder_size > 16:
            continue
        ladder = _nx_from_labeled(
            ntk.induced_subgraph(ntk.cayley_square(group), witness.ladder_cells))
        reference = nx.circulant_graph(2 * shape.ladder_size, [1, shape.ladder_size])
        assert nx.is_isomorphic(ladder, reference)


def test_prism_components_match_reference_generators():
    for group in (ntk.symmetric(3), _s3_times_cyclic(3)):
        witness = witness_for(group)
        shape = WitnessShape.of(witness)
        whole = ntk.induced_subgraph(ntk.cayley_square(group), witness.prism_cells)
        g = _nx_from_labeled(whole)
        components = list(nx.connected_components(g))
        assert len(components) == shape.prism_count
        reference = nx.circular_ladder_graph(shape.cycle_length)
        for comp in components:
            assert nx.is_isomorphic(g.subgraph(comp), reference)
