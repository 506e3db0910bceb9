"""Tests for socle, central, nilpotency, and solubility series."""

import pytest

from skewbrace import (
    NotAnIdeal,
    SkewBraceError,
    b_central_series,
    chief_series,
    classify_subset,
    cyclic_group,
    derived_ideal,
    fitting,
    group_catalog,
    ideal_chain,
    is_b_centrally_nilpotent,
    is_centrally_nilpotent,
    is_left_nilpotent,
    is_right_nilpotent,
    is_soluble,
    left_series,
    lower_central_series,
    multipermutation_level,
    preimage,
    quotient_with_map,
    right_series,
    socle,
    socle_series,
    sub_brace,
    trivial_brace,
    upper_central_series,
    zeta,
)


def catalog_group(n, label):
    for lbl, g in group_catalog(n):
        if lbl == label:
            return g
    raise AssertionError(f"no group labeled {label} of order {n}")


FROZEN = {
    "ex8": {
        "socle": (1,),
        "mp": None,
        "lower": (8, 4),
        "upper": (1,),
        "left": [8, 4, 2, 1],
        "right": [8, 4],
        "derived": [0, 1, 4, 5],
        "fitting": [0, 1, 4, 5],
        "chief": (4, 2),
        "cn": False,
        "ln": True,
        "rn": False,
    },
    "ex12": {
        "socle": (1, 3, 6, 12),
        "mp": 3,
        "lower": (12, 6, 3),
        "upper": (1,),
        "left": [12, 6, 3],
        "right": [12, 6, 3, 1],
        "derived": [0, 2, 4, 6, 8, 10],
        "fitting": [0, 4, 8],
        "chief": (3, 2, 2),
        "cn": False,
        "ln": False,
        "rn": True,
    },
    "ex24": {
        "socle": (1, 3, 6, 24),
        "mp": 3,
        "lower": (24, 6, 3),
        "upper": (1,),
        "left": [24, 6, 3],
        "right": [24, 6, 3, 1],
        "derived": [0, 4, 8, 12, 16, 20],
        "fitting": [0, 8, 16],
        "chief": (3, 2, 2, 2),
        "cn": False,
        "ln": False,
        "rn": True,
    },
    "ex32": {
        "socle": (1,),
        "mp": None,
        "lower": (32, 8),
        "upper": (1,),
        "left": [32, 8, 2, 1],
        "right": [32, 8],
        "derived": [0, 7, 10, 13, 16, 23, 26, 29],
        "fitting": [0, 7, 10, 13, 16, 23, 26, 29],
        "chief": (8, 2, 2),
        "cn": False,
        "ln": True,
        "rn": False,
    },
}


def test_frozen_series_values(worked_examples):
    for name, expect in FROZEN.items():
        b = worked_examples[name].brace
        assert socle_series(b).orders() == expect["socle"], name
        assert multipermutation_level(b) == expect["mp"], name
        assert lower_central_series(b).orders() == expect["lower"], name
        assert upper_central_series(b).orders() == expect["upper"], name
        assert [len(t) for t in left_series(b)] == expect["left"], name
        assert [len(t) for t in right_series(b)] == expect["right"], name
        if expect["derived"] is not None:
            assert sorted(derived_ideal(b)) == expect["derived"], name
        assert sorted(fitting(b).elements) == expect["fitting"], name
        assert chief_series(b).factor_orders() == expect["chief"], name
        assert is_centrally_nilpotent(b) == expect["cn"], name
        assert is_left_nilpotent(b) == expect["ln"], name
        assert is_right_nilpotent(b) == expect["rn"], name


def test_socle_and_zeta_are_ideals(small_pool):
    for b in small_pool:
        for subset in (socle(b), zeta(b)):
            assert classify_subset(b, subset).is_ideal


def test_socle_of_trivial_brace_is_group_center():
    assert socle(trivial_brace(catalog_group(6, "S3"))) == (0,)
    assert sorted(socle(trivial_brace(cyclic_group(6)))) == list(range(6))


def test_trivial_brace_on_centerless_group_has_no_level():
    b = trivial_brace(catalog_group(6, "S3"))
    assert socle_series(b).orders() == (1,)
    assert multipermutation_level(b) is None
    assert not is_centrally_nilpotent(b)


def test_trivial_abelian_brace_is_multipermutation_level_one():
    b = trivial_brace(cyclic_group(4))
    assert multipermutation_level(b) == 1
    assert upper_central_series(b).orders() == (1, 4)
    assert lower_central_series(b).orders() == (4, 1)
    assert is_centrally_nilpotent(b)


def test_zero_brace_degenerate_series():
    b = trivial_brace(cyclic_group(1))
    assert multipermutation_level(b) == 0
    assert lower_central_series(b).orders() == (1,)
    assert is_centrally_nilpotent(b)
    assert is_soluble(b)[0]


def test_socle_series_factors_sit_in_quotient_socle(worked_examples):
    chain = socle_series(worked_examples["ex24"].brace)
    assert all(f.in_socle_of_quotient for f in chain.factors)


def test_lower_and_upper_termination_agree(full_pool, worked_examples):
    braces = full_pool + [ex.brace for ex in worked_examples.values()]
    for b in braces:
        lower = lower_central_series(b)
        upper = upper_central_series(b)
        lower_terminates = len(lower.terms[-1]) == 1
        upper_terminates = len(upper.terms[-1]) == b.order
        assert lower_terminates == upper_terminates
        if lower_terminates:
            assert len(lower.terms) == len(upper.terms)


def test_left_and_right_nilpotency_meet_at_central(small_pool):
    from skewbrace import is_nilpotent_group

    for b in small_pool:
        if not is_nilpotent_group(b.add_group):
            continue
        both = is_left_nilpotent(b) and is_right_nilpotent(b)
        assert both == is_centrally_nilpotent(b)


def test_embedded_ideal_is_centrally_nilpotent_as_brace(worked_examples):
    ex32 = worked_examples["ex32"]
    inner = sub_brace(ex32.brace, ex32.subsets["L"])
    assert is_centrally_nilpotent(inner)
    assert multipermutation_level(inner) is not None


def test_b_central_nilpotency(worked_examples):
    ex12 = worked_examples["ex12"]
    assert is_b_centrally_nilpotent(ex12.brace, (0,))
    assert is_b_centrally_nilpotent(ex12.brace, ex12.subsets["socle"])
    chain = b_central_series(ex12.brace, ex12.subsets["socle"])
    assert [len(t) for t in chain.terms] == [1, 3]
    ex24 = worked_examples["ex24"]
    assert not is_b_centrally_nilpotent(ex24.brace, ex24.subsets["I"])


def test_fitting_inside_embedded_ideal(worked_examples):
    ex24 = worked_examples["ex24"]
    inner = sub_brace(ex24.brace, ex24.subsets["I"])
    inner_fit = fitting(inner).elements
    positions = tuple(sorted(ex24.subsets["I"][k] for k in inner_fit))
    assert positions == tuple(sorted(ex24.subsets["fit_I"]))


def test_fitting_of_supersoluble_examples_is_centrally_nilpotent(worked_examples):
    for name in ("ex12", "ex24"):
        b = worked_examples[name].brace
        fit = sorted(fitting(b).elements)
        assert is_centrally_nilpotent(sub_brace(b, fit))


def test_chief_series_of_prime_order_brace():
    chain = chief_series(trivial_brace(cyclic_group(5)))
    assert chain.orders() == (1, 5)
    assert chain.factor_orders() == (5,)
    assert all(f.is_prime_order for f in chain.factors)


def test_chief_series_validates_and_covers(worked_examples):
    for ex in worked_examples.values():
        chain = chief_series(ex.brace)
        assert chain.orders()[0] == 1
        assert chain.orders()[-1] == ex.brace.order


def test_solubility_of_examples_and_pool(small_pool):
    for b in small_pool:
        ok, chain = is_soluble(b)
        assert ok
        assert chain.orders()[-1] == b.order


def test_ideal_chain_rejects_non_ideal_terms(worked_examples):
    b = worked_examples["ex12"].brace
    with pytest.raises(NotAnIdeal):
        ideal_chain(b, [(0,), (0, 6), tuple(range(12))])


def test_ideal_chain_rejects_non_nested_terms(worked_examples):
    b = worked_examples["ex12"].brace
    with pytest.raises(SkewBraceError):
        ideal_chain(b, [(0, 4, 8), (0,), tuple(range(12))])


def test_quotient_with_map_and_preimage(worked_examples):
    ex24 = worked_examples["ex24"]
    q, proj = quotient_with_map(ex24.brace, ex24.subsets["socle"])
    assert q.order == 8
    back = preimage(proj, [0])
    assert tuple(sorted(back)) == tuple(sorted(ex24.subsets["socle"]))
    full = preimage(proj, range(q.order))
    assert len(full) == 24


def test_derived_ideal_of_trivial_brace_is_zero():
    assert derived_ideal(trivial_brace(cyclic_group(6))) == (0,)
