"""Closed-form evaluators against frozen values and enumeration oracles."""

import pytest

from defset.closed_form import (BClass, CaseTag, G_even, GGbar_odd, classify,
                                lemma8_value, lemma9_B, lemma10_N0a,
                                lemma11_counts, lemma12_V, lemma16_uc, lemma17_vc,
                                lemma_Nb_predicted, oracle, predicted_distribution,
                                predicted_length, realized_b_classes)
from defset.codes import brute_weight_distribution, count_Nb, defining_set
from defset.cyclotomic import CycInt, gauss_sum_exact
from defset.errors import CaseMismatch, NonIntegralTableEntry
from defset.fields import field


@pytest.mark.parametrize("p,m,tag", [
    (3, 6, CaseTag.EVEN_DIVIDES),
    (3, 4, CaseTag.EVEN_COPRIME),
    (5, 3, CaseTag.ODD_COPRIME),
    (3, 3, CaseTag.ODD_DIVIDES),
    (5, 5, CaseTag.ODD_DIVIDES),
    (3, 8, CaseTag.EVEN_COPRIME),
    (3, 2, CaseTag.EVEN_COPRIME),
])
def test_classify(p, m, tag):
    assert classify(p, m) is tag


def test_G_even_values():
    assert G_even(3, 6) == 27
    assert G_even(3, 4) == -9
    assert G_even(3, 2) == 3
    # cross-check against the exact character sum over F_9
    assert gauss_sum_exact(field(3, 2)) == CycInt.from_int(3, G_even(3, 2))
    with pytest.raises(CaseMismatch):
        G_even(3, 3)


def test_GGbar_odd_values():
    assert GGbar_odd(3, 5) == -27
    assert GGbar_odd(5, 3) == 25
    assert GGbar_odd(3, 3) == 9
    with pytest.raises(CaseMismatch):
        GGbar_odd(3, 4)


@pytest.mark.parametrize("p,m,n", [(3, 6, 260), (5, 5, 624), (3, 5, 71),
                                   (3, 4, 29), (3, 3, 8), (5, 3, 19), (7, 3, 55)])
def test_predicted_length(p, m, n):
    assert predicted_length(p, m) == n


@pytest.mark.parametrize("p,m,rows", [
    (3, 6, {162: 98, 171: 324, 180: 306}),
    (5, 3, {14: 36, 15: 24, 16: 60, 19: 4}),
    (3, 3, {4: 6, 5: 6, 6: 8, 7: 6}),
])
def test_predicted_distribution_golden(p, m, rows):
    pred = predicted_distribution(p, m)
    assert dict(pred.rows) == rows


def test_four_weight_degenerations():
    # odd m with p | m collapses to four weights exactly when p = m = 3
    assert len(predicted_distribution(3, 3).rows) == 4
    assert len(predicted_distribution(5, 5).rows) == 5
    # m = 3 with p = 2 mod 3 drops the (p-1)p^(m-2) row
    assert len(predicted_distribution(5, 3).rows) == 4
    assert len(predicted_distribution(7, 3).rows) == 5


@pytest.mark.parametrize("p", [5, 11])
def test_table5_closed_form(p):
    # the pruned five-weight table at m = 3, p = 2 mod 3 equals the explicit
    # four-weight table in p
    assert p % 3 == 2
    pred = dict(predicted_distribution(p, 3).rows)
    explicit = {
        p * p - 2 * p: p * p - 1,
        p * p - 2 * p + 1: p * (p * p - 1) // 2,
        p * p - 2 * p - 1: (p - 2) * (p * p - 1) // 2,
        p * p - p - 1: p - 1,
    }
    assert pred == explicit


def test_table_totals_and_integrality():
    for p, m in [(3, 3), (3, 4), (3, 5), (3, 6), (3, 8), (5, 3), (5, 4), (5, 5),
                 (7, 3), (7, 4), (11, 3), (13, 3), (3, 2), (5, 2)]:
        pred = predicted_distribution(p, m)
        assert sum(a for _, a in pred.rows) == p ** m - 1
        assert all(a >= 1 for _, a in pred.rows)
        assert len({w for w, _ in pred.rows}) == len(pred.rows)
        # both power moments hold for every predicted table
        assert sum(w * a for w, a in pred.rows) == p ** (m - 1) * (p - 1) * pred.n


def test_tables_reject_m1():
    with pytest.raises((NonIntegralTableEntry, CaseMismatch)):
        predicted_distribution(3, 1)


def test_lemma8_examples_and_oracle():
    assert lemma8_value(3, 6) == 54
    assert lemma8_value(3, 3) == 0
    assert lemma8_value(3, 5) == -27
    for p, m in [(3, 2), (3, 3), (3, 4), (3, 5), (3, 6), (5, 2), (5, 3), (7, 2)]:
        assert lemma8_value(p, m) == oracle("lemma8", p, m)


def test_lemma9_examples():
    assert lemma9_B(3, 4, BClass(0, 1, False)) == -9
    assert lemma9_B(3, 6, BClass(0, 0, True)) == 108
    # the two-term grouping in the odd-odd regime, fixed by the oracle
    ctx = field(5, 3)
    classes = realized_b_classes(ctx)
    checked = 0
    for cls, b in classes.items():
        if cls.t2 != 0 and cls.t1 == 0:
            assert lemma9_B(5, 3, cls) == oracle("lemma9", 5, 3, b=b)
            checked += 1
    assert checked >= 2


@pytest.mark.parametrize("p,m", [(3, 3), (3, 4), (5, 2), (5, 3), (7, 2)])
def test_lemma9_oracle_all_classes(p, m):
    ctx = field(p, m)
    for cls, b in realized_b_classes(ctx).items():
        assert lemma9_B(p, m, cls) == oracle("lemma9", p, m, b=b), (cls, b)


def test_lemma10_examples_and_oracle():
    assert lemma10_N0a(3, 6, 1) == 81
    assert lemma10_N0a(3, 4, 0) == 9
    assert lemma10_N0a(3, 5, 0) == 21
    for p, m in [(3, 3), (3, 4), (3, 5), (5, 3), (7, 2)]:
        for a in range(p):
            assert lemma10_N0a(p, m, a) == oracle("lemma10", p, m, a=a)


def test_lemma11_examples_and_oracle():
    assert lemma11_counts(3, 6)[2] == 144
    assert lemma11_counts(3, 4)[0] == 12
    for p, m in [(3, 3), (3, 4), (3, 6), (5, 3), (7, 2)]:
        counts = lemma11_counts(p, m)
        assert counts == oracle("lemma11", p, m)
        # the three counts plus |N(0,0)| partition F_q
        assert sum(counts) + lemma10_N0a(p, m, 0) == p ** m


def test_lemma12_examples_and_oracle():
    assert lemma12_V(3, 4) == 18
    assert lemma12_V(3, 5) == 42
    assert lemma12_V(5, 3) == 4
    for p, m in [(3, 4), (3, 5), (5, 2), (5, 3), (7, 2)]:
        assert lemma12_V(p, m) == oracle("lemma12", p, m)
    with pytest.raises(CaseMismatch):
        lemma12_V(3, 3)


def test_lemma_Nb_examples():
    assert lemma_Nb_predicted(3, 6, BClass(0, 0, True)) == 99
    assert lemma_Nb_predicted(3, 3, BClass(1, 1, False)) == 4
    assert lemma_Nb_predicted(3, 5, BClass(0, 0, True)) == 18


@pytest.mark.parametrize("p,m", [(3, 3), (3, 4), (3, 5), (3, 6), (5, 3)])
def test_lemma_Nb_oracle_all_classes(p, m):
    ctx = field(p, m)
    for cls, b in realized_b_classes(ctx).items():
        assert lemma_Nb_predicted(p, m, cls) == count_Nb(ctx, b), (cls, b)


def test_lemma16_examples_and_oracle():
    assert lemma16_uc(3, 3, 0) == 9
    assert lemma16_uc(3, 3, 1) == 6
    assert lemma16_uc(5, 3, 2) == 20
    for p, m in [(3, 3), (3, 5), (5, 3), (7, 3), (5, 5)]:
        for c in range(p):
            assert lemma16_uc(p, m, c) == oracle("lemma16", p, m, c=c)
        assert sum(lemma16_uc(p, m, c) for c in range(p)) == p ** m
    with pytest.raises(CaseMismatch):
        lemma16_uc(3, 4, 1)


def test_lemma17_examples_and_oracle():
    assert lemma17_vc(3, 3, 1) == 0
    assert lemma17_vc(3, 3, 2) == 6
    for p, m in [(3, 3), (5, 5)]:
        for c in range(1, p):
            assert lemma17_vc(p, m, c) == oracle("lemma17", p, m, c=c)
    with pytest.raises(CaseMismatch):
        lemma17_vc(3, 4, 1)
    with pytest.raises(CaseMismatch):
        lemma17_vc(3, 5, 1)
    with pytest.raises(CaseMismatch):
        lemma17_vc(3, 3, 0)


def test_bclass_from_element():
    ctx = field(3, 4)
    for b in range(1, ctx.q):
        cls = BClass.from_element(ctx, b)
        assert cls.t2 == ctx.trace(ctx.square(b))
        assert cls.t1 == ctx.trace(b)
        assert cls.disc == ((cls.t1 ** 2 - ctx.m * cls.t2) % ctx.p == 0)


def test_realized_classes_partition():
    ctx = field(3, 5)
    classes = realized_b_classes(ctx)
    seen = set()
    for b in range(1, ctx.q):
        seen.add(BClass.from_element(ctx, b))
    assert seen == set(classes)


def test_oracle_unknown_kind():
    with pytest.raises(ValueError):
        oracle("lemma99", 3, 3)


@pytest.mark.parametrize("p,m", [(3, 4), (5, 3), (3, 6)])
def test_prediction_matches_enumeration(p, m):
    ds = defining_set(field(p, m))
    assert predicted_distribution(p, m).with_zero_word() == brute_weight_distribution(ds)
