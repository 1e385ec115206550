import pytest
from hypothesis import given, strategies as st

from oddflip.errors import FormatError, ReductionError
from oddflip.reductions.formula import (EXISTS, FORALL, QuantifiedFormula, SetCoverInstance,
                                        parse_formula, parse_setcover)

FIG_TEXT = "p cnf 4 2\na 1 2 0\ne 3 4 0\n1 -2 3 0\n2 3 -4 0\n"


def test_parse_forall_exists():
    phi = parse_formula(FIG_TEXT)
    assert phi.prefix == ((FORALL, 2), (EXISTS, 2))
    assert phi.clauses == ((1, -2, 3), (2, 3, -4))
    assert phi.shape == "ae" and phi.K == 2 and phi.num_vars == 4
    assert phi.to_text() == FIG_TEXT


def test_parse_renumbers_in_prefix_order():
    phi = parse_formula("p cnf 3 1\ne 3 0\na 1 0\ne 2 0\n-3 1 2 0\n")
    assert phi.prefix == ((EXISTS, 1), (FORALL, 1), (EXISTS, 1))
    # 3 -> 1, 1 -> 2, 2 -> 3
    assert phi.clauses == ((-1, 2, 3),)


def test_parse_merges_repeated_blocks():
    phi = parse_formula("p cnf 2 1\na 1 0\na 2 0\n1 2 0\n")
    assert phi.prefix == ((FORALL, 2),)


def test_clause_normalization():
    phi = QuantifiedFormula.forall_exists(1, 1, [(2, -1, 2)])
    assert phi.clauses == ((-1, 2),)
    taut = QuantifiedFormula.forall_exists(1, 1, [(1, -1)])
    assert taut.clauses == ((1, -1),)


@pytest.mark.parametrize("text, line", [
    ("p cnf 2 1\na 1 0\n1 3 0\n", 3),
    ("p cnf 2 1\na 1 0\n1 2\n", 3),
    ("p cnf 2 1\na 1 1 0\n", 2),
    ("p cnf 2 1\n1 2 0\na 1 0\n", 2),
    ("p cnf 2 1\na 1 0\n1 0\ne 2 0\n", 4),
    ("p cnf 2 1\na 3 0\n", 2),
    ("p qbf 2 1\n", 1),
])
def test_formula_errors(text, line):
    with pytest.raises(FormatError) as exc:
        parse_formula(text)
    assert exc.value.line == line


def test_formula_structural_errors():
    with pytest.raises(FormatError):
        parse_formula("p cnf 2 2\na 1 0\ne 2 0\n1 2 0\n")
    with pytest.raises(ReductionError):
        QuantifiedFormula(((FORALL, 1), (FORALL, 1)), ((1,),))
    with pytest.raises(ReductionError):
        QuantifiedFormula.forall_exists(1, 1, [])
    with pytest.raises(ReductionError):
        QuantifiedFormula.forall_exists(1, 1, [(3,)])


def test_locate_and_var_id():
    psi = QuantifiedFormula.exists_forall_exists(2, 1, 3, [(1,)])
    assert psi.locate(1) == (0, 0) and psi.locate(3) == (1, 0) and psi.locate(6) == (2, 2)
    assert [psi.var_id(2, i) for i in range(3)] == [4, 5, 6]


clause_lists = st.lists(st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), min_size=1,
                                 max_size=3), min_size=1, max_size=4)


@given(clause_lists)
def test_formula_round_trip(clauses):
    psi = QuantifiedFormula.exists_forall_exists(1, 1, 1, clauses)
    again = parse_formula(psi.to_text())
    assert again == psi and again.digest() == psi.digest()


def test_setcover_parse():
    sc = parse_setcover("p setcover 3 2\ns 1 2 0\ns 3 2 0\n")
    assert sc.n == 3 and sc.t == 2 and sc.sets == (frozenset({1, 2}), frozenset({2, 3}))
    assert sc.to_text() == "p setcover 3 2\ns 1 2 0\ns 2 3 0\n"
    assert parse_setcover(sc.to_text()) == sc


@pytest.mark.parametrize("text", [
    "p setcover 2 1\ns 1 0\n",
    "p setcover 2 2\ns 1 2 0\n",
    "p setcover 2 1\ns 1 3 0\n",
    "p setcover 2 2\ns 1 2 0\ns 0\n",
    "p setcover 2 1\nt 1 2 0\n",
])
def test_setcover_errors(text):
    with pytest.raises(FormatError):
        parse_setcover(text)
