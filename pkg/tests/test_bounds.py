import random
from fractions import Fraction

import pytest

import frozen as F
from circuitrank import bounds, families
from circuitrank.bounds import (
    BoundCase,
    GraphProfile,
    check_2nullity_bounds,
    check_lem8,
    check_lemnull,
    check_lemtau_propmain,
    check_prior_bound,
    check_table1,
    check_thethm,
    table1_row,
)
from circuitrank.exact import DomainError, multiplicity_alpha
from circuitrank.graph import Graph, make_even


def by_id(reports):
    return {r.case.id if r.case.id.startswith(("THM", "INQ", "LEMTAU", "PROP", "PRIOR")) else str(r.case): r
            for r in reports}


def test_unknown_case_rejected():
    with pytest.raises(ValueError):
        BoundCase("THM_NOPE")


@pytest.mark.parametrize(
    "g, kind, lam, case, lhs, rhs",
    [
        (families.cycle(4), "A", 0, "THETHM_A_EVEN", 2, 2),
        (families.complete(5), "L", 5, "THETHM_LQ_ODD", 4, 4),
        (families.h_tree(), "A", 1, "THETHM_A_ODD", 1, 1),
    ],
    ids=["C4", "K5", "H"],
)
def test_integer_eigenvalue_bound_examples(g, kind, lam, case, lhs, rhs):
    r = check_thethm(g, kind, lam)
    assert (r.case.id, r.lhs, r.rhs, r.holds, r.equality, r.tau_exact) == (case, lhs, rhs, True, True, True)


def test_2nullity_examples():
    c3 = by_id(check_2nullity_bounds(families.cycle(3)))
    assert "INQ_ODD" not in c3
    assert (c3["THMMAIN"].lhs, c3["THMMAIN"].rhs, c3["THMMAIN"].equality) == (1, 1, True)
    c5 = by_id(check_2nullity_bounds(families.cycle(5)))
    assert (c5["INQ_EVEN"].lhs, c5["INQ_EVEN"].rhs, c5["INQ_EVEN"].equality) == (F.F2_NULLITY_A["C5"], 1, True)
    k5 = by_id(check_2nullity_bounds(families.complete(5)))
    assert (k5["THMTIRT"].lhs, k5["THMTIRT"].rhs, k5["THMTIRT"].equality) == (F.F2_NULLITY_J[5], 4, True)
    h = by_id(check_2nullity_bounds(families.h_tree()))
    assert "INQ_ODD" in h and "INQ_EVEN" not in h


def test_parity_table_examples():
    r = check_table1(families.cycle(4), "1/2", 1)
    assert r.case.id == "TABLE1_ROW5" and r.lhs == 2 and r.holds
    assert "secondary=2" in r.notes
    for g in (families.cycle(4), families.complete(5), families.h_tree()):
        r = check_table1(g, "1/3", "1/2")
        assert r.case.id == "TABLE1_ROW6" and r.lhs == 0 and r.rhs == 0
    r = check_table1(families.path(3), 1, 0)
    assert (r.case.id, r.lhs, r.rhs, r.holds) == ("TABLE1_ROW3", 0, 1, True)
    with pytest.raises(DomainError):
        check_table1(families.path(3), "4/3", 0)


def test_parity_table_uncovered_case():
    r = check_table1(families.cycle(4), "1/2", "1/2")
    assert r.case.id == "TABLE1_UNCOVERED" and r.rhs == 4 and "no nontrivial bound" in r.notes


@pytest.mark.parametrize(
    "alpha, lam, row",
    [
        ("1/3", "1", "TABLE1_ROW1"), ("2/3", "1", "TABLE1_ROW2"), ("1", "0", "TABLE1_ROW3"),
        ("0", "2", "TABLE1_ROW4"), ("1/2", "3", "TABLE1_ROW5"), ("1/2", "0", "TABLE1_ROW5"),
        ("1/3", "1/2", "TABLE1_ROW6"), ("2/3", "3/4", "TABLE1_ROW6"), ("1/2", "1/2", "TABLE1_UNCOVERED"),
    ],
)
def test_parity_table_row_selection(alpha, lam, row):
    assert table1_row(Fraction(alpha), Fraction(lam)) == row


def test_even_lambda_denominator_never_eigenvalue():
    r = random.Random(31)
    for _ in range(40):
        g = families.random_graph(r, r.randint(1, 7))
        for alpha in ("0", "1/3", "2/3", "1", "2/5"):
            for lam in ("1/2", "-3/2", "5/4"):
                assert multiplicity_alpha(g, alpha, lam) == 0


def test_bicycle_and_packing_examples():
    for spec, beta, theta_minus_tau in ((F.C4, 1, 1), (F.BOWTIE, 0, 0), (F.K4, 2, 2)):
        g = Graph.from_edges(*spec)
        d = by_id(check_lemtau_propmain(g))
        assert (d["LEMTAU"].lhs, d["LEMTAU"].rhs, d["LEMTAU"].equality) == (beta, theta_minus_tau, True)
        assert d["PROPMAIN_EQ"].holds and d["PROPMAIN_EQ"].lhs == beta + 1


def test_prior_bound_examples():
    r = check_prior_bound(families.cycle(4))
    assert (r.lhs, r.rhs, r.holds) == (2, 2, True)
    r = check_prior_bound(families.complete(5))
    assert (r.lhs, r.rhs) == (0, 12) and "new bound tighter" in r.notes
    r = check_prior_bound(families.star(4))
    assert (r.lhs, r.rhs, r.holds) == (3, 4, True)
    r = check_prior_bound(Graph(3, ((0, 1),)))
    assert r.holds is None and r.status == "inapplicable"


def test_completion_identity_examples():
    p3 = check_lem8(families.path(3))
    ii = next(r for r in p3 if r.case.id == "LEM8_II")
    assert (ii.lhs, ii.rhs, ii.holds) == (1, 1, True)
    for g in (families.cycle(4), families.cycle(3), families.path(3), families.complete(4)):
        for r in check_lem8(g):
            assert r.holds is not False, str(r.case)
    c4 = check_lem8(families.cycle(4))
    assert all(r.lhs == r.rhs for r in c4 if r.case.id in ("LEM8_II", "LEM8_III", "LEM8_IV"))
    viii = next(r for r in check_lem8(families.cycle(3)) if r.case.id == "LEM8_VIII")
    assert (viii.lhs, viii.rhs, viii.holds) == (1, 1, True)


def test_deletion_rows_for_parity_matrix_inapplicable():
    rows = [r for r in check_lem8(families.complete(4)) if r.case.id == "LEM8_I"]
    p = {dict(r.case.params)["M"]: r for r in rows}
    assert p["A"].holds is True and p["A+I"].holds is True
    assert p["P"].status == "inapplicable" and "violated" in p["P"].notes


def test_mod2_reduction_bound_examples():
    r = check_lemnull(families.cycle(4), "A", 0)
    assert (r.case.id, r.lhs, r.rhs) == ("LEMNULL_EVEN", 2, 2)
    r = check_lemnull(families.complete(5), "Q", 3)
    assert (r.case.id, r.lhs, r.rhs) == ("LEMNULL_ODD", 4, 4)


def test_inexact_tau_is_not_falsifiable():
    p = GraphProfile(families.complete(6), tau_mode="greedy")
    rep = check_thethm(p, "L", 6)
    assert rep.case.id == "THETHM_LQ_EVEN" and not rep.tau_exact
    assert rep.holds is None and rep.status == "not_falsifiable"
    # odd L/Q bound does not involve tau
    assert check_thethm(p, "L", 5).tau_exact


def test_inexact_violation_is_still_failure():
    # lower-bounding tau only enlarges the rhs, so lhs > rhs stays a failure
    p = GraphProfile(families.cycle(4), tau_mode="greedy")
    rep = bounds._report(p, BoundCase("THMMAIN"), 5, 2, uses_tau=True)
    assert rep.holds is False and rep.status == "failure"


def test_even_completion_is_even():
    r = random.Random(33)
    for _ in range(50):
        g = families.random_graph(r, r.randint(0, 8))
        ge = make_even(g)
        assert ge.is_even()
