import itertools

import pytest
from hypothesis import given, settings, strategies as st

from liemult import (
    LieType, dominant_representative, dominant_weights_below,
    reflect, root_coordinates, root_system, subdominant_weights, weyl_group_order,
    weyl_orbit_size,
)
from liemult.weights import precedes

SMALL = ["A1", "A2", "A3", "A4", "B2", "C2", "B3", "C3", "D4", "G2", "B4", "C4", "F4"]


def orbit(rs, w):
    """Weyl orbit by brute-force closure under simple reflections."""
    seen = {tuple(w)}
    stack = [tuple(w)]
    while stack:
        v = stack.pop()
        for i in range(rs.rank):
            u = tuple(x - v[i] * a for x, a in zip(v, rs.cartan[i]))
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return seen


def box_subdominant(rs, lam):
    """Dominant mu < lam found by scanning a coordinate box (independent of the
    root-subtraction search): lam - mu must be a non-negative integer
    root combination, which bounds each coordinate of mu by the level of lam."""
    bound = 2 * sum(lam) + 2
    out = []
    for mu in itertools.product(range(bound + 1), repeat=rs.rank):
        if mu != tuple(lam) and root_coordinates(rs, lam, mu) is not None:
            out.append(mu)
    return sorted(out)


def test_root_coordinates_examples():
    a2, c2 = root_system("A2"), root_system("C2")
    assert root_coordinates(a2, (1, 1), (0, 0)) == (1, 1)
    for a in range(3):
        for b in range(1, 4):
            assert root_coordinates(c2, (a, b), (a, b - 1)) == (1, 1)
    assert root_coordinates(a2, (1, 0), (0, 1)) is None
    assert root_coordinates(a2, (0, 1), (1, 0)) is None
    with pytest.raises(ValueError):
        root_coordinates(a2, (1, 0), (1, 0, 0))


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_subdominant_examples_type_a(n):
    rs = root_system(f"A{n}")

    def om(*pairs):
        w = [0] * n
        for i, a in pairs:
            w[i - 1] += a
        return tuple(w)

    assert subdominant_weights(rs, om((1, 1), (2, 1))) == [om((3, 1))]
    assert subdominant_weights(rs, om((2, 2))) == sorted([om((1, 1), (3, 1)), om((4, 1))])
    assert subdominant_weights(rs, (0,) * n) == []


def test_non_dominant_rejected():
    with pytest.raises(ValueError):
        subdominant_weights(root_system("A2"), (1, -1))
    with pytest.raises(ValueError):
        weyl_orbit_size(root_system("A2"), (-1, 0))


@pytest.mark.parametrize("name", ["A2", "A3", "B2", "C2", "B3", "C3", "G2", "D4"])
def test_subdominant_matches_box_oracle(name):
    rs = root_system(name)
    levels = 4 if rs.rank <= 3 else 2
    for lam in itertools.product(range(levels + 1), repeat=rs.rank):
        if sum(lam) <= levels:
            assert subdominant_weights(rs, lam) == box_subdominant(rs, lam), lam


@pytest.mark.parametrize("name", SMALL)
def test_dominance_partial_order_and_downward_closed(name):
    rs = root_system(name)
    lam = tuple([2] + [1] * (rs.rank - 1)) if rs.rank <= 3 else (1,) + (0,) * (rs.rank - 2) + (1,)
    ws = dominant_weights_below(rs, lam)
    assert ws[0] == lam and len(set(ws)) == len(ws)
    below = set(ws)
    for u, v in itertools.permutations(ws, 2):
        if precedes(rs, u, v):
            assert not precedes(rs, v, u)
            for w in ws:
                if precedes(rs, v, w):
                    assert precedes(rs, u, w)
    # every dominant weight between a member and lam is a member
    for mu in ws:
        for nu in subdominant_weights(rs, lam):
            if precedes(rs, mu, nu):
                assert nu in below


def test_dominant_representative_examples():
    assert dominant_representative(root_system("A1"), (-3,)) == (3,)
    assert dominant_representative(root_system("A2"), (-1, 2)) == (1, 1)
    assert dominant_representative(root_system("C3"), (1, 0, 2)) == (1, 0, 2)


@pytest.mark.parametrize("name", SMALL)
def test_dominant_representative_over_orbit(name):
    rs = root_system(name)
    w = (1,) * rs.rank
    for v in orbit(rs, w):
        assert dominant_representative(rs, v) == w


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(["A3", "B3", "C3", "G2", "D4", "F4"]), st.data())
def test_dominant_representative_idempotent_and_invariant(name, data):
    rs = root_system(name)
    w = tuple(data.draw(st.lists(st.integers(-4, 4), min_size=rs.rank, max_size=rs.rank)))
    d = dominant_representative(rs, w)
    assert min(d) >= 0
    assert dominant_representative(rs, d) == d
    for i in range(1, rs.rank + 1):
        assert dominant_representative(rs, reflect(rs, w, i)) == d


def test_reflect():
    a2 = root_system("A2")
    assert reflect(a2, (1, 0), 1) == (-1, 1)
    assert reflect(a2, reflect(a2, (3, -2), 2), 2) == (3, -2)
    with pytest.raises(IndexError):
        reflect(a2, (1, 0), 3)


def test_orbit_size_examples():
    a2 = root_system("A2")
    assert weyl_orbit_size(a2, (1, 1)) == 6
    for k in range(5):
        assert weyl_orbit_size(a2, (k + 1, 0)) == 3
    for name in ["A1", "G2", "F4", "E6"]:
        rs = root_system(name)
        assert weyl_orbit_size(rs, (0,) * rs.rank) == 1


@pytest.mark.parametrize("name", SMALL)
def test_orbit_size_matches_enumeration(name):
    rs = root_system(name)
    for w in itertools.product(range(2), repeat=rs.rank):
        assert weyl_orbit_size(rs, w) == len(orbit(rs, w)), w


def test_weyl_group_orders():
    assert weyl_group_order(LieType("A", 2)) == 6
    assert weyl_group_order(LieType("C", 3)) == 48
    assert weyl_group_order(LieType("F", 4)) == 1152
    # orbit-stabilizer: the orbit of a regular weight has size |W|
    for name in ["A2", "A3", "B3", "C3", "D4", "G2", "F4"]:
        rs = root_system(name)
        assert len(orbit(rs, rs.rho)) == weyl_group_order(rs.type)
    # omega_1 orbit of C3 has 6 elements, stabilizer C2 of order 8
    assert len(orbit(root_system("C3"), (1, 0, 0))) * 8 == 48


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_a_type_orbit_duality(n):
    rs = root_system(f"A{n}")
    for w in itertools.product(range(2), repeat=n):
        assert weyl_orbit_size(rs, w) == weyl_orbit_size(rs, w[::-1])
