import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import ntk
from ntk.catalog import builtin_catalog
from ntk.errors import InvalidInput, NotLatin, NotPermutation, OrderTooLarge
from ntk.latin import ROLES


def test_cayley_square_examples():
    one = ntk.cayley_square(ntk.cyclic(1))
    assert one.n == 1 and one.cells == ((0,),)
    z2 = ntk.cayley_square(ntk.cyclic(2))
    assert z2.cells == ((0, 1), (1, 0))


def test_cayley_squares_are_latin():
    for entry in builtin_catalog(12):
        square = ntk.cayley_square(entry.group)
        ntk.latin_square(square.cells)  # would raise on a bad row/column


def test_latin_square_rejects_bad_rows():
    with pytest.raises(NotLatin):
        ntk.latin_square([[0, 1], [0, 1]])


# ---------------------------------------------------------------------------
# partial transversal predicate

def test_empty_set_is_partial_transversal():
    square = ntk.cayley_square(ntk.cyclic(4))
    ok, violation = ntk.is_partial_transversal(square, ())
    assert ok and violation is None


def test_symbol_clash_reported():
    square = ntk.cayley_square(ntk.cyclic(2))
    ok, violation = ntk.is_partial_transversal(square, [(0, 0), (1, 1)])
    assert not ok
    assert violation.kind == "symbol"
    assert violation.first == (0, 0) and violation.second == (1, 1)


def test_z3_diagonal_is_transversal():
    square = ntk.cayley_square(ntk.cyclic(3))
    ok, _ = ntk.is_partial_transversal(square, [(0, 0), (1, 1), (2, 2)])
    assert ok


def test_out_of_bounds_cell_rejected():
    square = ntk.cayley_square(ntk.cyclic(3))
    with pytest.raises(InvalidInput):
        ntk.is_partial_transversal(square, [(0, 3)])


# ---------------------------------------------------------------------------
# brute-force oracles (expected values computed by these same oracles and
# frozen after cross-checking small cases by hand)

def test_brute_force_z3_lexicographically_first():
    square = ntk.cayley_square(ntk.cyclic(3))
    assert ntk.brute_force_transversal(square) == ((0, 0), (1, 1), (2, 2))


def test_brute_force_absent_for_even_cyclic():
    for n in (2, 4, 6):
        square = ntk.cayley_square(ntk.cyclic(n))
        assert ntk.brute_force_transversal(square) is None


def test_transversal_counts():
    expected = {1: 1, 2: 0, 3: 3, 4: 0, 5: 15, 6: 0, 7: 133}
    for n, count in expected.items():
        square = ntk.cayley_square(ntk.cyclic(n))
        assert ntk.count_transversals(square) == count


def test_max_partial_sizes():
    expected = {2: 1, 4: 3, 6: 5}
    for n, size in expected.items():
        square = ntk.cayley_square(ntk.cyclic(n))
        got, witness = ntk.max_partial_transversal(square)
        assert got == size
        ok, _ = ntk.is_partial_transversal(square, witness)
        assert ok and len(witness) == size


def test_transversal_presence_matches_sylow_class_to_order_10():
    from ntk.groups import CYCLIC_NONTRIVIAL
    for entry in builtin_catalog(10):
        square = ntk.cayley_square(entry.group)
        present = ntk.brute_force_transversal(square) is not None
        cyclic_sylow = ntk.sylow2(entry.group).classification == CYCLIC_NONTRIVIAL
        assert present == (not cyclic_sylow), entry.label


def test_constructed_near_transversals_non_extendable_to_order_10():
    for entry in builtin_catalog(10):
        square = ntk.cayley_square(entry.group)
        if ntk.brute_force_transversal(square) is not None:
            continue
        cells = ntk.near_transversal(entry.group).cells
        assert not ntk.is_extendable(square, cells), entry.label


def test_guards_raise():
    big = ntk.cayley_square(ntk.cyclic(16))
    with pytest.raises(OrderTooLarge):
        ntk.brute_force_transversal(big)
    with pytest.raises(OrderTooLarge):
        ntk.count_transversals(big)
    with pytest.raises(OrderTooLarge):
        ntk.max_partial_transversal(big)


def test_guard_override_allows_larger():
    square = ntk.cayley_square(ntk.cyclic(11))
    assert ntk.count_transversals(square, guard=11) > 0


def test_guard_env_override(monkeypatch):
    square = ntk.cayley_square(ntk.cyclic(11))
    monkeypatch.setenv("NTK_GUARD_N", "11")
    assert ntk.count_transversals(square) > 0
    monkeypatch.setenv("NTK_GUARD_N", "3")
    with pytest.raises(OrderTooLarge):
        ntk.count_transversals(square)


# ---------------------------------------------------------------------------
# extendability

def test_empty_is_extendable():
    square = ntk.cayley_square(ntk.cyclic(3))
    assert ntk.is_extendable(square, ())


def test_every_two_cell_partial_of_z3_extends():
    square = ntk.cayley_square(ntk.cyclic(3))
    for cells in itertools.combinations(itertools.product(range(3), range(3)), 2):
        ok, _ = ntk.is_partial_transversal(square, cells)
        if ok:
            assert ntk.is_extendable(square, cells)


def test_constructed_near_transversal_not_extendable():
    group = ntk.cyclic(6)
    square = ntk.cayley_square(group)
    result = ntk.near_transversal(group)
    assert not ntk.is_extendable(square, result.cells)


def test_is_extendable_rejects_invalid_input():
    square = ntk.cayley_square(ntk.cyclic(2))
    with pytest.raises(InvalidInput):
        ntk.is_extendable(square, [(0, 0), (1, 1)])


# ---------------------------------------------------------------------------
# isotopies

def test_identity_isotopy():
    square = ntk.cayley_square(ntk.cyclic(4))
    same = ntk.apply_isotopy(square, range(4), range(4), range(4))
    assert same.cells == square.cells


def test_row_swap_z2():
    square = ntk.cayley_square(ntk.cyclic(2))
    swapped = ntk.apply_isotopy(square, [1, 0], [0, 1], [0, 1])
    assert swapped.cells == ((1, 0), (0, 1))


def test_isotopy_rejects_non_permutation():
    square = ntk.cayley_square(ntk.cyclic(3))
    with pytest.raises(NotPermutation):
        ntk.apply_isotopy(square, [0, 0, 1], range(3), range(3))


@settings(max_examples=40)
@given(st.data())
def test_isotopy_maps_near_transversal_to_near_transversal(data):
    entries = [e for e in builtin_catalog(8)]
    entry = data.draw(st.sampled_from(entries))
    group = entry.group
    n = group.n
    rp = data.draw(st.permutations(range(n)))
    cp = data.draw(st.permutations(range(n)))
    sp = data.draw(st.permutations(range(n)))
    square = ntk.cayley_square(group)
    cells = ntk.near_transversal(group).cells
    image_square = ntk.apply_isotopy(square, rp, cp, sp)
    image_cells = ntk.map_cells(cells, rp, cp)
    ok, violation = ntk.is_partial_transversal(image_square, image_cells)
    assert ok, violation
    assert len(image_cells) == n - 1


# ---------------------------------------------------------------------------
# conjugates

def test_identity_conjugate():
    square = ntk.cayley_square(ntk.cyclic(5))
    same = ntk.conjugate_square(square, ROLES)
    assert same.cells == square.cells


def test_row_column_swap_is_transpose():
    square = ntk.cayley_square(ntk.symmetric(3))
    transposed = ntk.conjugate_square(square, ("column", "row", "symbol"))
    for r in range(6):
        for c in range(6):
            assert transposed.cells[r][c] == square.cells[c][r]


def test_conjugates_preserve_transversal_counts():
    for entry in builtin_catalog(7):
        square = ntk.cayley_square(entry.group)
        baseline = ntk.count_transversals(square)
        for perm in itertools.permutations(ROLES):
            conj = ntk.conjugate_square(square, perm)
            assert ntk.count_transversals(conj) == baseline


def test_conjugate_cells_stay_partial_transversals():
    group = ntk.cyclic(6)
    square = ntk.cayley_square(group)
    cells = ntk.near_transversal(group).cells
    for perm in itertools.permutations(ROLES):
        conj = ntk.conjugate_square(square, perm)
        image = ntk.conjugate_cells(square, cells, perm)
        ok, violation = ntk.is_partial_transversal(conj, image)
        assert ok, (perm, violation)


# ---------------------------------------------------------------------------
# serialization surfaces

def test_square_text_round_trip(tmp_path):
    square = ntk.cayley_square(ntk.dihedral(3))
    path = tmp_path / "d3.txt"
    ntk.save_square(square, path)
    assert ntk.load_square(path).cells == square.cells


def test_cells_json_round_trip():
    group = ntk.cyclic(6)
    square = ntk.cayley_square(group)
    cells = ntk.near_transversal(group).cells
    data = ntk.cells_to_json(square, cells)
    assert data == sorted(data)  # row-sorted triples
    assert all(len(item) == 3 for item in data)
    back = ntk.cells_from_json(data, square)
    assert set(back) == set(cells)


def test_cells_json_symbol_mismatch_rejected():
    square = ntk.cayley_square(ntk.cyclic(3))
    with pytest.raises(InvalidInput):
        ntk.cells_from_json([[0, 0, 1]], square)
