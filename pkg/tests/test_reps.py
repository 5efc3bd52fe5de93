from collections import Counter
from fractions import Fraction as F

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from smallk.errors import CapExceeded, DomainError, NotGenuine
from smallk.reps import (
    Irrep,
    branch_to_spin3,
    branch_to_spin3_character,
    freudenthal_multiplicities,
    pin_restrict,
    spin,
    spin_dim_closed_form,
    tensor_decompose,
    weyl_dim,
)
from smallk.roots import FUND, Weight

H = F(1, 2)


def su2(x):
    return Irrep("SU", 2, Weight((F(x),)))


def test_weyl_dim_examples():
    assert weyl_dim(spin(9, [H] * 4)) == 16
    assert weyl_dim(spin(16, [H] * 8)) == 128
    assert weyl_dim(spin(7, [0, 0, 0])) == 1
    assert weyl_dim(Irrep("SU", 5, Weight((0,) * 5))) == 1


@pytest.mark.parametrize("n", range(3, 13))
def test_spin_closed_form_matches_general_formula(n):
    k = n // 2
    for w in ([H] * k, [F(3, 2)] + [H] * (k - 1), [2] + [1] * (k - 1), [F(5, 2), F(3, 2)] + [H] * (k - 2)):
        if len(w) != k:
            continue
        assert spin_dim_closed_form(n, w) == weyl_dim(spin(n, w))


def test_freudenthal_examples():
    m = freudenthal_multiplicities(su2(F(5, 2)))
    assert sorted(w.coords[0] for w in m) == [F(k, 2) for k in range(-5, 6, 2)]
    assert set(m.values()) == {1}
    m = freudenthal_multiplicities(spin(5, [H, H]))
    assert {w.coords for w in m} == {(a, b) for a in (H, -H) for b in (H, -H)}
    assert set(m.values()) == {1}
    m = freudenthal_multiplicities(spin(7, [1, 0, 0]))
    assert sum(m.values()) == 7
    assert m[Weight((0, 0, 0))] == 1
    assert all(m[Weight(tuple(s * int(i == j) for j in range(3)))] == 1 for i in range(3) for s in (1, -1))


def test_spin16_halfspin_by_freudenthal():
    assert sum(freudenthal_multiplicities(spin(16, [H] * 8)).values()) == 128


def test_cap():
    with pytest.raises(CapExceeded):
        freudenthal_multiplicities(spin(16, [H] * 8), cap=100)


def test_cap_from_environment(monkeypatch):
    monkeypatch.setenv("PXI_DIM_CAP", "10")
    with pytest.raises(CapExceeded):
        freudenthal_multiplicities(spin(9, [H] * 4))


def test_non_dominant_rejected():
    with pytest.raises(DomainError):
        spin(5, [H, F(3, 2)])
    with pytest.raises(DomainError):
        spin(5, [1, H])


def test_tensor_examples():
    for p in range(1, 8):
        out = tensor_decompose(su2(F(p, 2)), su2(H))
        assert out.multiplicity(su2(F(p + 1, 2))) == 1
        assert out.multiplicity(su2(F(p - 1, 2))) == 1
        assert len(out) == 2
    s = spin(5, [H, H])
    out = tensor_decompose(s, s)
    assert out.total_dim == 16
    assert {r.highest_weight.coords for r, _ in out.constituents} == {(1, 1), (1, 0), (0, 0)}
    triv = spin(7, [0, 0, 0])
    a = spin(7, [F(3, 2), H, H])
    assert tensor_decompose(a, triv).constituents == ((a, 1),)


def test_tensor_group_mismatch():
    with pytest.raises(DomainError):
        tensor_decompose(spin(5, [H, H]), spin(7, [H, H, H]))


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_integer_weight_times_spin_is_multiplicity_free(n):
    k = n // 2
    tau = spin(n, [H] * k)
    for gamma in ([1] + [0] * (k - 1), [2] + [0] * (k - 1), [1] * k if n % 2 else [1] * (k - 1) + [0], [2, 1] + [0] * (k - 2)):
        if len(gamma) != k:
            continue
        g = spin(n, gamma)
        if weyl_dim(g) * weyl_dim(tau) > 5000:
            continue
        out = tensor_decompose(g, tau)
        assert out.total_dim == weyl_dim(g) * weyl_dim(tau)
        assert all(m == 1 for _, m in out.constituents)


def test_branch_examples():
    assert branch_to_spin3(spin(3, [F(7, 2)])) == [7]
    assert branch_to_spin3(spin(5, [H, H])) == [1, 1]
    with pytest.raises(NotGenuine):
        branch_to_spin3(spin(5, [1, 0]))


def test_spin4_base_case():
    for a, b in [(H, H), (H, -H), (F(3, 2), H), (F(5, 2), F(-3, 2))]:
        r = spin(4, [a, b])
        js = branch_to_spin3(r)
        assert sum(j + 1 for j in js) == weyl_dim(r)
        assert js == branch_to_spin3_character(r)


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_branching_agrees_with_character_on_spinor_irreps(n):
    k = n // 2
    checked = 0
    for top in range(1, 8, 2):
        for tail in range(1, top + 1, 2):
            w = [F(top, 2)] + [F(tail, 2)] * (k - 1)
            r = spin(n, w)
            if weyl_dim(r) > 512:
                continue
            js = branch_to_spin3(r)
            assert js == branch_to_spin3_character(r)
            assert all(j % 2 for j in js)
            assert sum(j + 1 for j in js) == weyl_dim(r)
            checked += 1
    assert checked


def test_pin_restrict():
    odd = Irrep("Pin", 5, Weight((F(3, 2), H)), 1)
    assert pin_restrict(odd).constituents == ((spin(5, [F(3, 2), H]), 1),)
    two = pin_restrict(Irrep("Pin", 4, Weight((F(3, 2), H))))
    assert {r.highest_weight.coords for r, _ in two.constituents} == {(F(3, 2), H), (F(3, 2), -H)}
    one = pin_restrict(Irrep("Pin", 6, Weight((1, 1, 0)), 1))
    assert one.constituents == ((spin(6, [1, 1, 0]), 1),)


def test_pin_epsilon_validation():
    with pytest.raises(DomainError):
        Irrep("Pin", 5, Weight((H, H)))
    with pytest.raises(DomainError):
        Irrep("Pin", 4, Weight((H, H)), 1)
    with pytest.raises(DomainError):
        Irrep("Pin", 4, Weight((1, 0)))
    with pytest.raises(DomainError):
        Irrep("Pin", 2, Weight((H,)), None)
    with pytest.raises(DomainError):
        Irrep("Spin", 5, Weight((H, H)), 1)


GROUPS = [("SU", 4), ("SU", 5), ("Spin", 7), ("Spin", 8), ("Sp", 3), ("Spin", 9)]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(GROUPS), st.data())
def test_freudenthal_total_equals_weyl_dim(group, data):
    g, n = group
    rank = {"SU": n - 1, "Spin": n // 2, "Sp": n}[g]
    labels = tuple(data.draw(st.lists(st.integers(0, 2), min_size=rank, max_size=rank)))
    r = Irrep(g, n, Weight(labels, FUND))
    if weyl_dim(r) > 20000:
        return
    assert sum(freudenthal_multiplicities(r).values()) == weyl_dim(r)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([("SU", 3), ("Spin", 5), ("Spin", 6), ("Sp", 2)]), st.data())
def test_tensor_dimension_conserved(group, data):
    g, n = group
    rank = {"SU": n - 1, "Spin": n // 2, "Sp": n}[g]
    a = Irrep(g, n, Weight(tuple(data.draw(st.lists(st.integers(0, 2), min_size=rank, max_size=rank))), FUND))
    b = Irrep(g, n, Weight(tuple(data.draw(st.lists(st.integers(0, 2), min_size=rank, max_size=rank))), FUND))
    assume(weyl_dim(a) * weyl_dim(b) <= 20000)
    assert tensor_decompose(a, b).total_dim == weyl_dim(a) * weyl_dim(b)


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 9), st.data())
def test_branching_conserves_dimension(n, data):
    k = n // 2
    parts = sorted(data.draw(st.lists(st.integers(0, 3), min_size=k, max_size=k)), reverse=True)
    w = [F(2 * x + 1, 2) for x in parts]
    if n % 2 == 0 and data.draw(st.booleans()):
        w[-1] = -w[-1]
    r = spin(n, w)
    js = branch_to_spin3(r)
    assert all(j % 2 == 1 for j in js)
    assert sum(j + 1 for j in js) == weyl_dim(r)
    assert Counter(js) == Counter(branch_to_spin3(r))
