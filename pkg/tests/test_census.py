"""Tests for brace enumeration and isomorphism search."""

import pytest

from skewbrace import (
    OrderBoundExceeded,
    brace_isomorphic,
    braces_with_additive_group,
    census,
    census_oracle,
    check_brace_invariants,
    cyclic_group,
    direct_product,
    group_catalog,
    make_brace,
    trivial_brace,
)

EXPECTED_COUNTS = {
    1: 1,
    2: 1,
    3: 1,
    4: 4,
    5: 1,
    6: 6,
    7: 1,
    8: 47,
    9: 4,
    10: 6,
    11: 1,
    12: 38,
}

EXPECTED_SPLITS = {
    4: {"C2xC2": 2, "C4": 2},
    6: {"C6": 2, "S3": 4},
    8: {"C2xC2xC2": 8, "C4xC2": 14, "C8": 5, "D8": 12, "Q8": 8},
    9: {"C3xC3": 2, "C9": 2},
    10: {"C10": 2, "D10": 4},
    12: {"A4": 8, "C12": 5, "C6xC2": 5, "D12": 10, "Dic3": 10},
}


def test_counts_up_to_twelve():
    for n, expected in EXPECTED_COUNTS.items():
        assert census(n).count() == expected, n


def test_counts_by_additive_group():
    for n, split in EXPECTED_SPLITS.items():
        assert census(n).count_by_additive() == split, n


def test_census_agrees_with_pair_table_oracle():
    for n in range(2, 9):
        assert census(n).count() == census_oracle(n), n


def test_every_entry_passes_invariants(medium_entries):
    for entry in medium_entries:
        assert check_brace_invariants(entry.brace), entry.brace.name


def test_census_is_deterministic():
    first = census(6)
    second = census(6)
    assert [e.additive_label for e in first.entries] == [
        e.additive_label for e in second.entries
    ]
    assert [e.brace.tables() for e in first.entries] == [
        e.brace.tables() for e in second.entries
    ]


def test_census_label_order():
    labels = [
        (e.additive_label, e.multiplicative_label) for e in census(6).entries
    ]
    assert labels == [
        ("C6", "C6"),
        ("C6", "S3"),
        ("S3", "C6"),
        ("S3", "C6"),
        ("S3", "S3"),
        ("S3", "S3"),
    ]


def test_entries_are_pairwise_non_isomorphic_order6():
    entries = census(6).entries
    for i in range(len(entries)):
        for j in range(i + 1, len(entries)):
            assert brace_isomorphic(entries[i].brace, entries[j].brace) is None


def test_entries_are_pairwise_non_isomorphic_order8_cyclic_additive():
    entries = [e for e in census(8).entries if e.additive_label == "C8"]
    assert len(entries) == 5
    for i in range(len(entries)):
        for j in range(i + 1, len(entries)):
            assert brace_isomorphic(entries[i].brace, entries[j].brace) is None


def test_brace_isomorphic_finds_identity():
    b = trivial_brace(cyclic_group(4))
    assert brace_isomorphic(b, b) == list(range(4))


def test_brace_isomorphic_rejects_different_additive_groups():
    v4 = direct_product(cyclic_group(2), cyclic_group(2))
    assert brace_isomorphic(trivial_brace(cyclic_group(4)), trivial_brace(v4)) is None


def test_relabeled_brace_is_isomorphic(worked_examples):
    b = worked_examples["ex8"].brace
    perm = [0] * 8
    for i in range(4):
        for j in range(2):
            perm[2 * i + j] = 2 * ((3 * i) % 4) + j
    add = [[0] * 8 for _ in range(8)]
    mul = [[0] * 8 for _ in range(8)]
    for x in range(8):
        for y in range(8):
            add[perm[x]][perm[y]] = perm[b.add(x, y)]
            mul[perm[x]][perm[y]] = perm[b.mul(x, y)]
    relabeled = make_brace(add, mul)
    assert brace_isomorphic(b, relabeled) is not None


def test_worked_examples_appear_in_census(worked_examples):
    hits8 = [
        (e.additive_label, e.multiplicative_label)
        for e in census(8).entries
        if brace_isomorphic(worked_examples["ex8"].brace, e.brace) is not None
    ]
    assert hits8 == [("C4xC2", "D8")]
    hits12 = [
        (e.additive_label, e.multiplicative_label)
        for e in census(12).entries
        if brace_isomorphic(worked_examples["ex12"].brace, e.brace) is not None
    ]
    assert hits12 == [("C12", "D12")]


def test_prime_orders_have_one_brace():
    for p in (2, 3, 5, 7, 11):
        result = census(p)
        assert result.count() == 1
        assert result.entries[0].brace.is_trivial()


def test_braces_with_single_additive_group():
    c6 = cyclic_group(6)
    found = braces_with_additive_group(c6)
    assert len(found) == 2
    for b in found:
        assert check_brace_invariants(b)


def test_extended_bound_pins():
    c16 = cyclic_group(16)
    assert len(braces_with_additive_group(c16, order_bound=16)) == 8
    c4x4 = direct_product(cyclic_group(4), cyclic_group(4))
    assert len(braces_with_additive_group(c4x4, order_bound=16)) == 83


def test_extended_census_on_doubled_primes():
    r14 = census(14, order_bound=16)
    assert r14.count() == 6
    assert r14.count_by_additive() == {"C14": 2, "D14": 4}
    r15 = census(15, order_bound=16)
    assert r15.count() == 1


def test_order_bounds_raise():
    with pytest.raises(OrderBoundExceeded):
        census(13)
    with pytest.raises(OrderBoundExceeded):
        census_oracle(9)
    with pytest.raises(OrderBoundExceeded):
        braces_with_additive_group(cyclic_group(16))
    with pytest.raises(OrderBoundExceeded):
        group_catalog(16)


def test_group_catalog_shapes():
    assert [lbl for lbl, _ in group_catalog(8)] == [
        "C8",
        "C4xC2",
        "C2xC2xC2",
        "D8",
        "Q8",
    ]
    assert [len(group_catalog(n)) for n in range(1, 16)] == [
        1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1,
    ]
    for n in (6, 8, 12):
        for lbl, g in group_catalog(n):
            assert g.order == n, lbl
