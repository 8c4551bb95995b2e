import random

import pytest
from hypothesis import given, settings, strategies as st

from latprim.constructors import zn_ideal_lattice
from latprim.lattice import Lattice, validate


def chain2():
    return Lattice(["0", "1"], [[1, 1], [0, 1]], [[0, 0], [0, 1]])


def test_two_chain_is_valid():
    L = chain2()
    assert validate(L).ok
    assert (L.top, L.bottom) == (1, 0)


def test_tampered_z6_product_not_below_meet():
    L = zn_ideal_lattice(6)
    i, j = L.index("(2)"), L.index("(3)")
    mul = [list(r) for r in L.mul_table]
    mul[i][j] = L.index("(1)")
    report = validate(Lattice(L.names, L.leq_table, mul, L.top, L.bottom))
    assert not report.ok
    by_axiom = {f.axiom: f.witness_names for f in report.failures}
    assert by_axiom["ab ≤ a∧b"] == ("(2)", "(3)")


def test_structural_failure_short_circuits():
    L = Lattice(["0", "1"], [[1, 1], [0, 1]], [[0, 0], [0, 7]])
    report = validate(L)
    assert report.axioms() == ["structure"]
    L = Lattice(["0", "1"], [[1, 1], [0, 1]], [[0, 0]])
    assert validate(L).axioms() == ["structure"]


def test_non_lattice_order_reported():
    # two incomparable atoms with no join: not a lattice
    names = ["0", "a", "b"]
    leq = [[1, 1, 1], [0, 1, 0], [0, 0, 1]]
    mul = [[0, 0, 0], [0, 1, 0], [0, 0, 2]]
    report = validate(Lattice(names, leq, mul, top=1, bottom=0))
    assert "join-exists" in report.axioms() or "top-greatest" in report.axioms()
    assert not report.ok


def test_leq_examples(z24):
    g = z24.index
    assert z24.leq(g("(8)"), g("(2)"))
    assert not z24.leq(g("(2)"), g("(3)"))
    assert all(z24.leq(z24.bottom, x) for x in z24.elements)


def test_join_meet_examples(z24):
    g = z24.index
    assert z24.join([g("(8)"), g("(12)")]) == g("(4)")
    assert z24.meet([g("(4)"), g("(6)")]) == g("(12)")
    assert z24.join([]) == z24.bottom
    assert z24.meet([]) == z24.top
    for x in z24.elements:
        assert z24.join([x]) == x


def test_mul_and_power_examples(z24, z8):
    g = z24.index
    assert z24.mul(g("(2)"), g("(6)")) == g("(12)")
    assert z24.mul(g("(4)"), g("(4)")) == g("(8)")
    assert z24.power(g("(4)"), 2) == g("(8)")
    assert z8.power(z8.index("(2)"), 3) == z8.index("(0)")
    for x in z24.elements:
        assert z24.mul(z24.top, x) == x
    for n in range(1, 6):
        assert z24.power(z24.top, n) == z24.top
    with pytest.raises(ValueError):
        z24.power(g("(2)"), 0)


def test_power_matches_repeated_multiplication(z24):
    for a in z24.elements:
        x = a
        for n in range(1, 12):
            assert z24.power(a, n) == x
            x = z24.mul(x, a)


def test_is_proper(z24):
    assert z24.is_proper(z24.index("(4)"))
    assert not z24.is_proper(z24.top)
    assert z24.is_proper(z24.bottom)


ns = st.integers(min_value=2, max_value=120)


@settings(max_examples=60, deadline=None)
@given(ns, st.data())
def test_lattice_laws_on_zn(n, data):
    L = zn_ideal_lattice(n)
    el = st.integers(min_value=0, max_value=L.order - 1)
    a, b, c = data.draw(el), data.draw(el), data.draw(el)
    assert L.leq(a, b) == (L.join([a, b]) == b) == (L.meet([a, b]) == a)
    assert L.mul(a, L.join([b, c])) == L.join([L.mul(a, b), L.mul(a, c)])
    assert L.leq(L.mul(a, b), L.meet([a, b]))
    if L.leq(a, b):
        assert L.leq(L.mul(a, c), L.mul(b, c))


def _perturbed(L, rng):
    i, j = rng.randrange(L.order), rng.randrange(L.order)
    k = rng.choice([v for v in L.elements if v != L.mul_table[i][j]])
    mul = [list(r) for r in L.mul_table]
    mul[i][j] = k
    return Lattice(L.names, L.leq_table, mul, L.top, L.bottom)


@pytest.mark.parametrize("n", [6, 12, 24, 30, 36])
def test_perturbed_tables_always_rejected(n):
    L = zn_ideal_lattice(n)
    rng = random.Random(n)
    for _ in range(50):
        report = validate(_perturbed(L, rng))
        assert not report.ok
        assert all(f.witness for f in report.failures)


def _accepted_perturbations(L, symmetric):
    accepted = set()
    for i in L.elements:
        for j in L.elements:
            for k in L.elements:
                if k == L.mul_table[i][j]:
                    continue
                mul = [list(r) for r in L.mul_table]
                mul[i][j] = k
                if symmetric:
                    mul[j][i] = k
                if validate(Lattice(L.names, L.leq_table, mul, L.top, L.bottom)).ok:
                    accepted.add((L.names[i], L.names[j], L.names[k]))
    return accepted


def test_z8_perturbations_only_accept_other_chain_multiplications():
    # The chain (0) < (4) < (2) < (1) also carries the multiplications with
    # (2)(2) = (2) or (2)(2) = (0); every other change breaks an axiom.
    L = zn_ideal_lattice(8)
    expected = {("(2)", "(2)", "(2)"), ("(2)", "(2)", "(0)")}
    assert _accepted_perturbations(L, symmetric=True) == expected
    assert _accepted_perturbations(L, symmetric=False) == expected


def test_every_single_cell_perturbation_of_z24_rejected(z24):
    assert _accepted_perturbations(z24, symmetric=False) == set()


def test_order_perturbation_rejected(z24):
    leq = [list(r) for r in z24.leq_table]
    leq[z24.index("(2)")][z24.index("(3)")] = True
    assert not validate(Lattice(z24.names, leq, z24.mul_table, z24.top, z24.bottom)).ok


def test_equality_and_pickle(z24):
    import pickle

    again = pickle.loads(pickle.dumps(z24))
    assert again == z24 and hash(again) == hash(z24)
    assert again.join_table == z24.join_table
