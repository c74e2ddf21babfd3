from collections import Counter
from itertools import combinations_with_replacement
from math import comb

import pytest

from hkbetti import examples
from hkbetti.diamond import BidegreeMap
from hkbetti.llv import (MODULES, LlvInconsistencyError, MultiplicityTuple, extract_multiplicities,
                         extract_primitive_b4, module_layout, predicted_betti, subring_layout,
                         sym_subring_dim, sym_subring_hodge, verify_even_decomposition)


def brute_force_sym(b2, k):
    """Count degree-k monomials in a basis of H^2 by bidegree."""
    basis = [(2, 0)] + [(1, 1)] * (b2 - 2) + [(0, 2)]
    counts = Counter()
    for mono in combinations_with_replacement(range(len(basis)), k):
        p = sum(basis[i][0] for i in mono)
        q = sum(basis[i][1] for i in mono)
        counts[p, q] += 1
    return dict(counts)


@pytest.mark.parametrize("b2", range(3, 9))
@pytest.mark.parametrize("k", range(4))
def test_sym_hodge_matches_brute_force(b2, k):
    assert sym_subring_hodge(b2, k).nonzero() == brute_force_sym(b2, k)


def test_sym_dim_values():
    assert sym_subring_dim(23, 2) == 276
    assert sym_subring_dim(23, 3) == 2300
    assert sym_subring_dim(17, 0) == 1


def test_sym_hodge_frozen_values():
    assert sym_subring_hodge(23, 2)[2, 2] == comb(22, 2) + 1 == 232
    assert sym_subring_hodge(23, 3)[3, 3] == comb(23, 3) + 21 == 1792
    assert sym_subring_hodge(11, 1).nonzero() == {(2, 0): 1, (1, 1): 9, (0, 2): 1}


@pytest.mark.parametrize("b2", [3, 10, 23])
def test_sym_hodge_total(b2):
    for k in range(4):
        assert sym_subring_hodge(b2, k).total() == sym_subring_dim(b2, k)


def test_sym_hodge_limits():
    with pytest.raises(ValueError):
        sym_subring_hodge(5, 4)
    with pytest.raises(ValueError):
        sym_subring_hodge(2, 1)
    with pytest.raises(ValueError):
        sym_subring_hodge(5, 3, n=2)


def test_subring_layout_hilb2_is_whole_diamond():
    # Hilb^2 K3 has b3 = b4' = 0, so its cohomology is the subring
    d = examples.load_diamond("Hilb2-K3")
    assert subring_layout(23, 2) == BidegreeMap(2, d.table)


def test_v2_layout_display_values():
    v2 = module_layout("V2", 23)
    assert v2[3, 3] == (529 - 115 + 10) // 2 == 212
    assert v2.degree_sum(4) == 23
    assert (v2[4, 2], v2[2, 4]) == (21, 21)


def test_v3_layout_degree6():
    v3 = module_layout("V3", 7)
    assert (v3[4, 2], v3[3, 3], v3[2, 4]) == (1, 5, 1)
    assert v3.degree_sum(6) == 7


def test_v5_layout():
    assert module_layout("V5", 12).nonzero() == {(3, 3): 1}


def test_unknown_module():
    with pytest.raises(ValueError):
        module_layout("V1", 5)


@pytest.mark.parametrize("mid", sorted(MODULES))
@pytest.mark.parametrize("b2", [3, 4, 7, 8, 23, 57])
def test_layouts_consistent_with_table(mid, b2):
    spec = MODULES[mid]
    lay = module_layout(mid, b2)
    assert lay.is_symmetric()
    assert lay.total() == spec.total_dim(b2)
    for k in (4, 6, 8):
        assert lay.degree_sum(k) == spec.degree_contribution(b2, k)
    assert sum(spec.degree_contribution(b2, k) for k in (4, 6, 8)) == spec.total_dim(b2)
    hp, hq = spec.highest_weight
    assert lay[hp, hq] >= 1 and all(lay[p, q] == 0 for p in range(7) for q in range(7)
                                    if p + q < hp + hq)


def test_predicted_betti_examples():
    assert predicted_betti(23, 1, 0, 0) == (299, 2554)
    assert predicted_betti(7, 1, 16, 240) == (51, 458)
    assert predicted_betti(8, 6, 115, 290) == (199, 1504)


@pytest.mark.parametrize("name,expected", [
    ("Hilb3-K3", (1, 0, 0)),
    ("Kummer-3", (1, 16, 240)),
    ("OGrady-6", (6, 115, 290)),
])
def test_extract(name, expected):
    d = examples.load_diamond(name)
    mult = extract_multiplicities(d)
    assert mult == expected
    b = d.degree_sums()
    assert predicted_betti(d.b2, *mult) == (b[4], b[6])
    assert verify_even_decomposition(d).nonzero() == {}


def test_hilb3_middle_entry_per_bidegree(hilb3):
    sym3 = sym_subring_hodge(23, 3)[3, 3]
    assert sym3 + 1 * module_layout("V2", 23)[3, 3] == hilb3[3, 3] == 2004


def test_extract_requires_sixfold():
    with pytest.raises(ValueError):
        extract_multiplicities(examples.load_diamond("Hilb2-K3"))


def test_lowered_h22_is_rejected(hilb3):
    d = hilb3.with_entry(2, 2, 252).with_entry(4, 4, 252)
    with pytest.raises(LlvInconsistencyError, match="inconsistent with LLV"):
        extract_multiplicities(d)


def test_d_routes_must_agree(hilb3):
    # d(h22) - d(b4) = 2 - 2 h^{4,0}, so the routes split only when h^{4,0} != 1
    d = hilb3
    for p, q in ((4, 0), (0, 4), (6, 2), (2, 6)):
        d = d.with_entry(p, q, 2)
    with pytest.raises(LlvInconsistencyError, match="d from h22"):
        extract_multiplicities(d)


def test_single_entry_perturbation_detected(hilb3):
    bumped = hilb3.with_entry(2, 2, 254)
    with pytest.raises(LlvInconsistencyError):
        extract_multiplicities(bumped)
    residual = verify_even_decomposition(bumped, MultiplicityTuple(1, 0, 0))
    assert residual.nonzero() == {(2, 2): 1}


def test_residual_ignores_odd_degrees():
    d = examples.load_diamond("Kummer-3")
    res = verify_even_decomposition(d)
    assert all(v == 0 for v in res.degree_sums())
    assert d.degree_sum(3) == 8  # odd part exists but is not modelled


def test_primitive_b4():
    assert extract_primitive_b4(23, 276) == 0
    assert extract_primitive_b4(7, 108) == 80
    with pytest.raises(LlvInconsistencyError):
        extract_primitive_b4(7, 27)
