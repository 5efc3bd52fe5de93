from collections import Counter
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from smallk.errors import DomainError, NotGenuine
from smallk.exact import Gaussian
from smallk.pxi import (
    FactoredPolynomial,
    assemble_product,
    evaluate,
    n_xi,
    pxi_type_a,
    q_factors,
    spin_tau_weight,
    type_a_data,
    type_a_root_system,
)
from smallk.reps import spin, weyl_dim
from smallk.roots import build
from smallk.small_k import classify
from smallk.roots import LieType

H = F(1, 2)


def test_q_factor_lists():
    assert q_factors(1) == []
    assert q_factors(3) == [H]
    assert q_factors(5) == [H, F(3, 2)]
    assert q_factors(7) == [H, H, F(3, 2), F(5, 2)]
    assert q_factors(9) == [H, H, F(3, 2), F(3, 2), F(5, 2), F(7, 2)]
    with pytest.raises(DomainError):
        q_factors(4)


def _brute_q(m):
    # product over l of prod_{j<l}(nu+2j+1/2)(nu+2j+3/2), plus the 4 | m-3 tail
    out = []
    top = (m - 1) // 4 if m % 4 == 1 else (m - 3) // 4
    for l in range(top + 1):
        out += [2 * j + H for j in range(l)] + [2 * j + F(3, 2) for j in range(l)]
    if m % 4 == 3:
        out += [2 * k + H for k in range(top + 1)]
    return Counter(out)


@pytest.mark.parametrize("m", range(1, 40, 2))
def test_q_degree(m):
    assert Counter(q_factors(m)) == _brute_q(m)
    top = (m - 1) // 4 if m % 4 == 1 else (m - 3) // 4
    assert len(q_factors(m)) == top * (top + 1) + (top + 1 if m % 4 == 3 else 0)


def test_pxi_spin3_example():
    p = pxi_type_a(3, [F(5, 2)])
    assert p.degree == 6
    rs = p.root_system
    for i in range(3):
        assert sorted(p.per_root()[i].elements()) == [H, F(3, 2)]
    assert p.evaluate(rs.rho.coords) == F(7875, 64)
    assert evaluate(p, rs.rho.coords) == F(7875, 64)


def test_pxi_trivial_for_smallest_weight():
    for n in (3, 4, 5, 6):
        k = n // 2
        p = pxi_type_a(n, [H] * k)
        assert p.degree == 0
        assert p.evaluate([0] * n) == 1


def test_tau_weight():
    assert spin_tau_weight(4, [F(3, 2), H]).coords == (H, -H)
    assert spin_tau_weight(4, [F(3, 2), -H]).coords == (H, H)
    assert spin_tau_weight(6, [F(3, 2), H, -H]).coords == (H, H, H)
    assert spin_tau_weight(5, [F(3, 2), H]).coords == (H, H)


def test_rejections():
    with pytest.raises(NotGenuine):
        type_a_data(5, [1, 0])
    with pytest.raises(DomainError):
        type_a_data(2, [H])
    with pytest.raises(DomainError):
        pxi_type_a(5, [H, F(3, 2)])


def test_n_xi():
    (tau,) = classify(LieType("A", 4))
    assert n_xi(spin(5, [F(3, 2), H]), tau) == 4
    with pytest.raises(NotGenuine):
        n_xi(spin(5, [1, 0]), tau)


def test_vanishing_and_complex_evaluation():
    p = pxi_type_a(3, [F(5, 2)])
    rs = p.root_system
    nu = [F(-1, 4), F(1, 4), 0]  # coroot of the first simple root is -1/2
    assert p.evaluate(nu) == 0
    assert (0, H) in p.vanishing_factors(nu)
    z = p.evaluate([Gaussian(0, 1), 0, Gaussian(0, -1)])
    assert isinstance(z, Gaussian)
    with pytest.raises(ValueError):
        p.evaluate([0, 0])


def test_assemble_and_divides():
    rs = build("A2")
    a = assemble_product(rs, {rs.positive_roots[0]: [H, (F(3, 2), 2)]})
    b = assemble_product(rs, {rs.positive_roots[0]: [H, F(3, 2), F(3, 2), F(5, 2)], rs.positive_roots[1]: [H]})
    assert a.degree == 3 and a.divides(b) and not b.divides(a)
    with pytest.raises(DomainError):
        assemble_product(rs, {build("A3").positive_roots[-1]: [H]})


def test_expand_matches_evaluate():
    p = pxi_type_a(4, [F(3, 2), H])
    names = tuple(f"x{k + 1}" for k in range(4))
    pt = [F(1, 3), F(-2, 5), F(7, 4), F(1, 2)]
    assert p.expand().evaluate(dict(zip(names, pt))) == p.evaluate(pt)
    assert p.expand().degree == p.degree


def test_to_dict_schema():
    d = pxi_type_a(3, [F(5, 2)]).to_dict()
    assert d["scalar"] == "1"
    assert {tuple(f["root"]) for f in d["factors"]} == {(1, 0), (0, 1), (1, 1)}
    assert all(f["mult"] == 1 for f in d["factors"])


def test_canonical_merging():
    rs = build("A2")
    a = FactoredPolynomial(rs, ((1, H, 1), (0, H, 1), (1, H, 2)))
    assert a.factors == ((0, H, 1), (1, H, 3))
    with pytest.raises(ValueError):
        FactoredPolynomial(rs, ((0, H, 0),))


weights = st.integers(3, 7).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.integers(0, 3), min_size=n // 2, max_size=n // 2).map(lambda xs: sorted(xs, reverse=True)),
        st.booleans(),
    )
)


def _weight(n, parts, flip):
    w = [F(2 * x + 1, 2) for x in parts]
    if n % 2 == 0 and flip:
        w[-1] = -w[-1]
    return w


@settings(max_examples=40, deadline=None)
@given(weights)
def test_degree_additivity_and_weyl_constancy(data):
    n, parts, flip = data
    w = _weight(n, parts, flip)
    xi, tau, js = type_a_data(n, w)
    p = pxi_type_a(n, w)
    rs = type_a_root_system(n)
    total = sum(len(q_factors(j)) for j in js) * 2
    assert total % weyl_dim(tau) == 0
    assert p.degree == len(rs.positive_roots) * total // weyl_dim(tau)
    per = p.per_root()
    assert len({tuple(sorted(c.items())) for c in per.values()}) == 1
