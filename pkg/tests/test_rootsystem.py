import json
from fractions import Fraction

import pytest

from liemult import (
    LieType, a_type_orthogonal_coords, build_root_system, coroot_pairing,
    inner_product, root_system,
)
from liemult.rootsystem import recognize
from liemult.lemmas import types_up_to_rank

ALL_TYPES = types_up_to_rank(8)


def closure_roots(cartan):
    """Positive roots as the orbit of the simple roots under simple reflections,
    in simple-root coordinates; s_i(beta) = beta - <beta, alpha_i^vee> alpha_i."""
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    stack = list(simple)
    while stack:
        b = stack.pop()
        for i in range(n):
            p = sum(b[k] * cartan[k][i] for k in range(n))
            r = tuple(x - (p if k == i else 0) for k, x in enumerate(b))
            if r not in seen:
                seen.add(r)
                stack.append(r)
    return {r for r in seen if all(x >= 0 for x in r)}


CLASSICAL_COUNTS = {"A": lambda n: n * (n + 1) // 2, "B": lambda n: n * n,
                    "C": lambda n: n * n, "D": lambda n: n * (n - 1)}
EXCEPTIONAL_COUNTS = {("E", 6): 36, ("E", 7): 63, ("E", 8): 120, ("F", 4): 24, ("G", 2): 6}


def det(m):
    m = [[Fraction(x) for x in row] for row in m]
    n, d = len(m), Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            d = -d
        d *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return d


@pytest.mark.parametrize("t", ALL_TYPES, ids=str)
def test_positive_roots_match_closure_oracle(t):
    rs = build_root_system(t)
    oracle = closure_roots(rs.cartan)
    assert set(rs.positive_roots) == oracle
    assert len(rs.positive_roots) == len(set(rs.positive_roots))
    f, n = t.family, t.rank
    expected = CLASSICAL_COUNTS[f](n) if f in CLASSICAL_COUNTS else EXCEPTIONAL_COUNTS[(f, n)]
    assert len(rs.positive_roots) == expected


@pytest.mark.parametrize("t", ALL_TYPES, ids=str)
def test_structural_invariants(t):
    rs = build_root_system(t)
    n = rs.rank
    for i in range(n):
        assert rs.cartan[i][i] == 2
        for j in range(n):
            if i != j:
                assert rs.cartan[i][j] in (0, -1, -2, -3)
                assert rs.cartan[i][j] * rs.symmetrizer[j] == rs.cartan[j][i] * rs.symmetrizer[i]
    assert rs.rho == (1,) * n
    # sum of positive roots is 2 rho
    total = tuple(sum(r[i] for r in rs.positive_roots) for i in range(n))
    assert rs.to_fundamental(total) == (2,) * n
    # gram symmetric positive definite (leading minors)
    g = rs.gram
    assert all(g[i][j] == g[j][i] for i in range(n) for j in range(n))
    assert all(det([row[:k] for row in g[:k]]) > 0 for k in range(1, n + 1))
    # ordering: height, then lexicographic
    keys = [(sum(r), r) for r in rs.positive_roots]
    assert keys == sorted(keys)


@pytest.mark.parametrize("t", ALL_TYPES, ids=str)
def test_fundamental_weights_dual_to_coroots(t):
    rs = build_root_system(t)
    n = rs.rank
    for i in range(n):
        om = tuple(int(k == i) for k in range(n))
        for j in range(n):
            a = rs.simple_root(j + 1)
            pairing = 2 * inner_product(rs, om, a) / inner_product(rs, a, a)
            assert pairing == (1 if i == j else 0)


@pytest.mark.parametrize("t", ALL_TYPES, ids=str)
def test_long_roots_have_norm_two(t):
    rs = build_root_system(t)
    norms = [inner_product(rs, rs.simple_root(i), rs.simple_root(i)) for i in range(1, rs.rank + 1)]
    assert max(norms) == 2
    assert all(x > 0 for x in norms)


def test_closure_idempotent():
    for t in ALL_TYPES:
        rs = build_root_system(t)
        roots = set(rs.positive_roots)
        # reflecting a positive root at alpha_i stays in the root set up to sign
        for b in roots:
            for i in range(rs.rank):
                p = sum(b[k] * rs.cartan[k][i] for k in range(rs.rank))
                r = tuple(x - (p if k == i else 0) for k, x in enumerate(b))
                assert r in roots or tuple(-x for x in r) in roots


def test_inner_product_examples():
    a2 = root_system("A2")
    assert inner_product(a2, (1, 0), (1, 0)) == Fraction(2, 3)
    assert inner_product(a2, (1, 0), (0, 1)) == Fraction(1, 3)
    for t in ("G2", "F4", "C3"):
        rs = root_system(t)
        assert inner_product(rs, (0,) * rs.rank, (1,) * rs.rank) == 0
    with pytest.raises(ValueError):
        inner_product(a2, (1, 0), (1, 0, 0))


def test_short_roots_have_expected_ratio():
    assert inner_product(root_system("G2"), (2, -1), (2, -1)) == Fraction(2, 3)
    b3, c3 = root_system("B3"), root_system("C3")
    assert inner_product(b3, b3.simple_root(3), b3.simple_root(3)) == 1
    assert inner_product(c3, c3.simple_root(3), c3.simple_root(3)) == 2
    assert inner_product(c3, c3.simple_root(1), c3.simple_root(1)) == 1


def test_coroot_pairing():
    a2 = root_system("A2")
    assert coroot_pairing(a2, (1, 3), 2) == 3
    g2 = root_system("G2")
    assert coroot_pairing(g2, (0, 0), 1) == 0 and coroot_pairing(g2, (0, 0), 2) == 0
    d5 = root_system("D5")
    for j in range(1, 6):
        om = tuple(int(k == j - 1) for k in range(5))
        for i in range(1, 6):
            assert coroot_pairing(d5, om, i) == int(i == j)
    with pytest.raises(IndexError):
        coroot_pairing(a2, (1, 1), 3)
    with pytest.raises(IndexError):
        coroot_pairing(a2, (1, 1), 0)


def test_orthogonal_coords():
    a2 = root_system("A2")
    for a in range(4):
        for b in range(4):
            assert a_type_orthogonal_coords(a2, (a, b)) == (a + b, b, 0)
    a5 = root_system("A5")
    assert a_type_orthogonal_coords(a5, (0, 2, 0, 0, 0)) == (2, 2, 0, 0, 0, 0)
    assert a_type_orthogonal_coords(a5, (0,) * 5) == (0,) * 6
    with pytest.raises(ValueError):
        a_type_orthogonal_coords(root_system("B2"), (1, 0))


@pytest.mark.parametrize("bad", ["A0", "B1", "C1", "D3", "E5", "E9", "F3", "G3", "H2", "A", "2A"])
def test_invalid_types_rejected(bad):
    with pytest.raises(ValueError):
        LieType.parse(bad)


def test_rank_diagnostic_names_constraint():
    with pytest.raises(ValueError, match="D"):
        LieType("D", 3)


def test_b2_c2_built_independently():
    b2, c2 = root_system("B2"), root_system("C2")
    assert b2.cartan == ((2, -2), (-1, 2))
    assert c2.cartan == ((2, -1), (-2, 2))
    assert b2.cartan == tuple(tuple(r) for r in zip(*c2.cartan))
    assert b2 is not c2


def test_recognize_subdiagrams():
    f4 = root_system("F4")
    [(t, order)] = recognize(f4.cartan, [0, 1, 2])
    assert str(t) == "B3" and order == (0, 1, 2)
    c3 = root_system("C3")
    [(t, order)] = recognize(c3.cartan, [1, 2])
    assert str(t) == "C2" and order == (1, 2)
    b4 = root_system("B4")
    types = sorted(str(t) for t, _ in recognize(b4.cartan, [0, 2, 3]))
    assert types == ["A1", "B2"]
    e8 = root_system("E8")
    [(t, _)] = recognize(e8.cartan)
    assert str(t) == "E8"


def test_json_dump():
    rs = root_system("B2")
    doc = json.loads(rs.to_json())
    assert doc["cartan"] == [[2, -2], [-1, 2]]
    assert len(doc["positive_roots"]) == 4
    gram = [[Fraction(*x) for x in row] for row in doc["gram"]]
    assert gram == [list(r) for r in rs.gram]


def test_rank_mismatch_and_non_integer_weights():
    rs = root_system("A3")
    with pytest.raises(ValueError):
        rs.check((1, 2))
