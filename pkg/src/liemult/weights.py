"""Dominance order, dominant weights below a highest weight, Weyl orbits."""
from __future__ import annotations

import functools
from math import factorial, prod

from .rootsystem import LieType, RootSystem, recognize


def is_dominant(w) -> bool:
    return all(x >= 0 for x in w)


def _require_dominant(w, what="weight"):
    if not is_dominant(w):
        raise ValueError(f"{what} {tuple(w)} is not dominant")


def reflect(rs: RootSystem, w, i: int) -> tuple:
    """Simple reflection ``s_i(w) = w - w_i alpha_i`` (``i`` 1-based)."""
    w = rs.check(w)
    c = w[i - 1]
    if not c:
        return w
    a = rs.cartan[i - 1]
    return tuple(x - c * y for x, y in zip(w, a))


def root_coordinates(rs: RootSystem, v, w):
    """``b`` with ``v - w = sum b_i alpha_i`` if all ``b_i`` are non-negative
    integers (that is, ``w`` lies below ``v``), otherwise ``None``."""
    v, w = rs.check(v), rs.check(w)
    c = rs.to_root_coords(tuple(x - y for x, y in zip(v, w)))
    if all(x.denominator == 1 and x >= 0 for x in c):
        return tuple(int(x) for x in c)
    return None


def precedes(rs: RootSystem, w, v) -> bool:
    """``w`` ⪯ ``v`` in the dominance order."""
    return root_coordinates(rs, v, w) is not None


def same_coset(rs: RootSystem, v, w) -> bool:
    """Whether ``v - w`` lies in the root lattice."""
    c = rs.to_root_coords(tuple(x - y for x, y in zip(v, w)))
    return all(x.denominator == 1 for x in c)


def dominant_representative(rs: RootSystem, w) -> tuple:
    """The dominant weight in the Weyl orbit of ``w``.

    Reflects at the lowest negative coordinate until none is left.
    """
    w = list(rs.check(w))
    cartan = rs.cartan
    n = len(w)
    while True:
        for i in range(n):
            c = w[i]
            if c < 0:
                a = cartan[i]
                for j in range(n):
                    w[j] -= c * a[j]
                break
        else:
            return tuple(w)


@functools.lru_cache(maxsize=4096)
def _dominant_levels(rs: RootSystem, lam: tuple):
    """Dominant weights below ``lam`` grouped by depth (height of ``lam - mu``).

    Dominance between dominant weights is generated by positive roots: if
    ``mu < lam`` are dominant there is a chain of dominant weights from
    ``lam`` down to ``mu`` whose steps are positive roots.  So a search that
    subtracts positive roots and keeps dominant results finds all of them.
    """
    roots = list(zip(rs.positive_roots_fund, (sum(r) for r in rs.positive_roots)))
    depth = {lam: 0}
    frontier = [lam]
    while frontier:
        nxt = []
        for mu in frontier:
            dmu = depth[mu]
            for a, h in roots:
                nu = tuple(x - y for x, y in zip(mu, a))
                if min(nu) >= 0 and nu not in depth:
                    depth[nu] = dmu + h
                    nxt.append(nu)
        frontier = nxt
    levels = {}
    for mu, d in depth.items():
        levels.setdefault(d, []).append(mu)
    return tuple((d, tuple(sorted(levels[d]))) for d in sorted(levels))


def subdominant_weights(rs: RootSystem, lam) -> list:
    """All dominant ``mu`` strictly below ``lam``, sorted lexicographically."""
    lam = rs.check(lam)
    _require_dominant(lam, "highest weight")
    return sorted(mu for _, lvl in _dominant_levels(rs, lam) for mu in lvl if mu != lam)


def dominant_weights_below(rs: RootSystem, lam) -> list:
    """``lam`` together with its subdominant weights, highest first by depth."""
    lam = rs.check(lam)
    _require_dominant(lam, "highest weight")
    return [mu for _, lvl in _dominant_levels(rs, lam) for mu in lvl]


_EXCEPTIONAL_ORDERS = {
    ("E", 6): 51840,
    ("E", 7): 2903040,
    ("E", 8): 696729600,
    ("F", 4): 1152,
    ("G", 2): 12,
}


def weyl_group_order(t: LieType) -> int:
    f, n = t.family, t.rank
    if f == "A":
        return factorial(n + 1)
    if f in "BC":
        return 2 ** n * factorial(n)
    if f == "D":
        return 2 ** (n - 1) * factorial(n)
    return _EXCEPTIONAL_ORDERS[(f, n)]


@functools.lru_cache(maxsize=None)
def parabolic_order(rs: RootSystem, nodes: frozenset) -> int:
    """Order of the subgroup of W generated by simple reflections in ``nodes``
    (0-based); typed component by component from the restricted Cartan matrix."""
    if not nodes:
        return 1
    return prod(weyl_group_order(t) for t, _ in recognize(rs.cartan, nodes))


def weyl_orbit_size(rs: RootSystem, w) -> int:
    w = rs.check(w)
    _require_dominant(w)
    zeros = frozenset(i for i, x in enumerate(w) if x == 0)
    return weyl_group_order(rs.type) // parabolic_order(rs, zeros)
