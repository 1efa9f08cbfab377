import ntk
from ntk.catalog import builtin_catalog


def test_entries_sorted_and_within_bound():
    entries = builtin_catalog(30)
    orders = [e.group.n for e in entries]
    assert orders == sorted(orders)
    assert all(n <= 30 for n in orders)


def test_labels_unique():
    entries = builtin_catalog(200)
    labels = [e.label for e in entries]
    assert len(labels) == len(set(labels))


def test_expected_members_present():
    labels = {e.label for e in builtin_catalog(200)}
    for expected in ("Z1", "Z200", "D99", "Dic49", "S3", "S4", "S3xZ3",
                     "S3xZ33", "A4", "F20", "Z7:Z3", "He3", "Z8:Z17", "Z16:Z3"):
        assert expected in labels, expected


def test_heisenberg_has_exponent_three():
    he3 = next(e.group for e in builtin_catalog(27) if e.label == "He3")
    assert he3.n == 27
    assert ntk.order_signature(he3) == ((1, 1), (3, 26))


def test_order21_entry_is_nonabelian():
    g = next(e.group for e in builtin_catalog(21) if e.label == "Z7:Z3")
    assert any(g.mul(a, b) != g.mul(b, a) for a in g.elements() for b in g.elements())


def test_twist_variety_across_catalog():
    # the catalog must exercise trivial twists, fixed-point-free twists and
    # generator orders beyond 2
    seen_m_equals_l = False
    seen_m_equals_1 = False
    seen_big_k = False
    for e in builtin_catalog(200):
        if ntk.sylow2(e.group).classification != "cyclic-nontrivial":
            continue
        dec = ntk.decompose(e.group)
        if dec.fixed_order == dec.odd_order and dec.odd_order > 1:
            seen_m_equals_l = True
        if dec.fixed_order == 1 and dec.odd_order > 1:
            seen_m_equals_1 = True
        if dec.sylow_order >= 8:
            seen_big_k = True
    assert seen_m_equals_l and seen_m_equals_1 and seen_big_k
