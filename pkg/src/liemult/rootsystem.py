"""Root systems of the simple Lie algebras in Bourbaki numbering.

Weights are plain tuples of integers in fundamental-weight coordinates and
roots are tuples of integers in simple-root coordinates.  All arithmetic is
exact (``int`` and ``fractions.Fraction``); there is no floating point here.

The Cartan matrix is stored row-wise as ``cartan[i][j] = <alpha_i, alpha_j^vee>``
so that row ``i`` is the simple root ``alpha_i`` written in fundamental
coordinates.  The invariant form is normalized so that long roots have
squared length 2.
"""
from __future__ import annotations

import functools
import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

FAMILIES = "ABCDEFG"

Weight = tuple  # tuple[int, ...] in fundamental coordinates


class InternalConsistencyError(RuntimeError):
    """An exact computation produced a value that violates a hard invariant."""


@dataclass(frozen=True, order=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self):
        f, n = self.family, self.rank
        if f not in FAMILIES:
            raise ValueError(f"unknown family {f!r}; expected one of {FAMILIES}")
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"rank must be a positive integer, got {n!r}")
        bad = {
            "A": n < 1 and "A_n needs n >= 1",
            "B": n < 2 and "B_n needs n >= 2",
            "C": n < 2 and "C_n needs n >= 2",
            "D": n < 4 and "D_n needs n >= 4",
            "E": n not in (6, 7, 8) and "E_n needs n in {6, 7, 8}",
            "F": n != 4 and "F_n needs n = 4",
            "G": n != 2 and "G_n needs n = 2",
        }[f]
        if bad:
            raise ValueError(f"invalid rank for {f}{n}: {bad}")

    @classmethod
    def parse(cls, text: str) -> "LieType":
        m = re.fullmatch(r"\s*([A-Ga-g])_?(\d+)\s*", text)
        if not m:
            raise ValueError(f"cannot parse Lie type {text!r} (expected e.g. 'C3')")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.family}{self.rank}"


def _edges(t: LieType):
    """Bonds of the Dynkin diagram as (i, j, cartan[i][j], cartan[j][i]), 0-based."""
    f, n = t.family, t.rank
    chain = [(i, i + 1, -1, -1) for i in range(n - 1)]
    if f == "A":
        return chain
    if f == "B":
        # alpha_n short
        return chain[:-1] + [(n - 2, n - 1, -2, -1)]
    if f == "C":
        # alpha_n long
        return chain[:-1] + [(n - 2, n - 1, -1, -2)]
    if f == "D":
        return chain[:-1] + [(n - 3, n - 1, -1, -1)]
    if f == "E":
        # 1-3-4-5-...-n with 2 attached to 4
        return [(0, 2, -1, -1), (1, 3, -1, -1)] + [
            (i, i + 1, -1, -1) for i in range(2, n - 1)
        ]
    if f == "F":
        # alpha_1, alpha_2 long; alpha_3, alpha_4 short
        return [(0, 1, -1, -1), (1, 2, -2, -1), (2, 3, -1, -1)]
    # G2: alpha_1 short, alpha_2 long
    return [(0, 1, -1, -3)]


def cartan_matrix(t: LieType):
    n = t.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j, aij, aji in _edges(t):
        a[i][j], a[j][i] = aij, aji
    return tuple(tuple(r) for r in a)


def symmetrizer(cartan):
    """Positive integers ``d`` with ``cartan[i][j] * d[j]`` symmetric.

    ``d[i]`` is proportional to the squared length of ``alpha_i``; the
    shortest root in each connected component gets 1.
    """
    n = len(cartan)
    d = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and cartan[i][j] and d[j] is None:
                    d[j] = d[i] * cartan[j][i] / cartan[i][j]
                    stack.append(j)
    for comp in components(cartan):
        low = min(d[i] for i in comp)
        for i in comp:
            d[i] /= low
    if any(x.denominator != 1 for x in d):
        raise ValueError("Cartan matrix is not symmetrizable over the integers")
    return tuple(int(x) for x in d)


def components(cartan, nodes=None):
    """Connected components of the Dynkin graph on ``nodes`` (sorted lists)."""
    nodes = sorted(range(len(cartan)) if nodes is None else nodes)
    left = set(nodes)
    out = []
    for s in nodes:
        if s not in left:
            continue
        left.discard(s)
        comp, stack = [s], [s]
        while stack:
            i = stack.pop()
            for j in list(left):
                if cartan[i][j]:
                    left.discard(j)
                    comp.append(j)
                    stack.append(j)
        out.append(sorted(comp))
    return out


def invert(mat):
    """Exact inverse of a square rational matrix by Gauss-Jordan elimination."""
    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(mat)]
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return tuple(tuple(row[n:]) for row in a)


def _positive_roots(cartan):
    """Positive roots by root-string closure, generated height by height.

    For a positive root beta and simple alpha_i, the alpha_i-string through
    beta runs from beta - p alpha_i to beta + q alpha_i with
    p - q = <beta, alpha_i^vee>.
    """
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                pairing = sum(beta[k] * cartan[k][i] for k in range(n))
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in found:
                        p += 1
                    else:
                        break
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        layer = nxt
    return tuple(sorted(found, key=lambda r: (sum(r), r)))


@dataclass(frozen=True, eq=False)
class RootSystem:
    type: LieType
    cartan: tuple
    symmetrizer: tuple
    positive_roots: tuple
    gram: tuple
    rho: tuple
    # derived, exact
    inverse_cartan: tuple = field(repr=False)
    root_norms: tuple = field(repr=False)
    positive_roots_fund: tuple = field(repr=False)
    # gram scaled to integers: gram_int = gram_scale * gram
    gram_scale: int = field(repr=False)
    gram_int: tuple = field(repr=False)

    @property
    def rank(self):
        return self.type.rank

    def simple_root(self, i: int) -> Weight:
        """``alpha_i`` (1-based) in fundamental coordinates."""
        return self.cartan[_index(self, i)]

    def to_fundamental(self, root_coords) -> Weight:
        n = self.rank
        out = [sum(root_coords[k] * self.cartan[k][j] for k in range(n)) for j in range(n)]
        return tuple(out)

    def to_root_coords(self, w) -> tuple:
        n = self.rank
        return tuple(
            sum((w[k] * self.inverse_cartan[k][j] for k in range(n)), Fraction(0))
            for j in range(n)
        )

    def check(self, w) -> tuple:
        w = tuple(w)
        if len(w) != self.rank:
            raise ValueError(
                f"weight {w} has length {len(w)}, expected rank {self.rank} for {self.type}"
            )
        return w

    def to_dict(self):
        return {
            "type": str(self.type),
            "cartan": [list(r) for r in self.cartan],
            "symmetrizer": list(self.symmetrizer),
            "positive_roots": [list(r) for r in self.positive_roots],
            "gram": [[[x.numerator, x.denominator] for x in r] for r in self.gram],
            "rho": list(self.rho),
        }

    def to_json(self, **kw):
        return json.dumps(self.to_dict(), **kw)


def _index(rs, i):
    if not isinstance(i, int) or not 1 <= i <= rs.rank:
        raise IndexError(f"simple root index {i!r} out of range 1..{rs.rank} for {rs.type}")
    return i - 1


@functools.lru_cache(maxsize=None)
def build_root_system(t: LieType) -> RootSystem:
    if isinstance(t, str):
        t = LieType.parse(t)
    a = cartan_matrix(t)
    n = t.rank
    d = symmetrizer(a)
    dmax = max(d)
    norms = tuple(Fraction(2 * x, dmax) for x in d)
    inv = invert(a)
    # <omega_i, omega_j> = inv[i][j] * |alpha_j|^2 / 2
    gram = tuple(tuple(inv[i][j] * norms[j] / 2 for j in range(n)) for i in range(n))
    scale = lcm(*(x.denominator for r in gram for x in r))
    gram_int = tuple(tuple(int(x * scale) for x in r) for r in gram)
    roots = _positive_roots(a)
    rs = RootSystem(
        type=t,
        cartan=a,
        symmetrizer=d,
        positive_roots=roots,
        gram=gram,
        rho=(1,) * n,
        inverse_cartan=inv,
        root_norms=norms,
        positive_roots_fund=(),
        gram_scale=scale,
        gram_int=gram_int,
    )
    object.__setattr__(rs, "positive_roots_fund", tuple(rs.to_fundamental(r) for r in roots))
    return rs


def root_system(name) -> RootSystem:
    """Convenience: ``root_system("C3")`` or ``root_system(LieType("C", 3))``."""
    t = LieType.parse(name) if isinstance(name, str) else name
    return build_root_system(t)


def coroot_pairing(rs: RootSystem, w, i: int) -> int:
    """``<w, alpha_i^vee>``; in fundamental coordinates this is ``w[i-1]``."""
    w = rs.check(w)
    return w[_index(rs, i)]


def inner_product(rs: RootSystem, v, w) -> Fraction:
    v, w = rs.check(v), rs.check(w)
    n = rs.rank
    return sum(
        (v[i] * rs.gram[i][j] * w[j] for i in range(n) for j in range(n) if v[i] and w[j]),
        Fraction(0),
    )


def inner_product_int(rs: RootSystem, v, w) -> int:
    """``gram_scale * <v, w>`` as an exact integer (fast path for the recursions)."""
    g = rs.gram_int
    n = len(v)
    return sum(v[i] * sum(g[i][j] * w[j] for j in range(n)) for i in range(n) if v[i])


def a_type_orthogonal_coords(rs: RootSystem, w) -> tuple:
    """Coordinates ``(l_1, ..., l_{n+1})`` on the standard basis e_1..e_{n+1}.

    Uses the convention ``l_{n+1} = 0`` so ``l_i - l_{i+1} = w_i``.
    """
    if rs.type.family != "A":
        raise ValueError(f"orthogonal coordinates are only defined here for type A, got {rs.type}")
    w = rs.check(w)
    out = [0]
    for x in reversed(w):
        out.append(out[-1] + x)
    return tuple(reversed(out))


# -- Dynkin type recognition -------------------------------------------------

def _isomorphisms(target, source, nodes):
    """Yield maps ``m`` (target index -> source node) with target == source∘m.

    Depth-first with candidates in ascending order, so the first result is
    the lexicographically smallest map.
    """
    k = len(target)
    m = []
    used = set()

    def rec(t):
        if t == k:
            yield tuple(m)
            return
        for s in nodes:
            if s in used or source[s][s] != target[t][t]:
                continue
            if all(source[s][m[u]] == target[t][u] and source[m[u]][s] == target[u][t]
                   for u in range(t)):
                m.append(s)
                used.add(s)
                yield from rec(t + 1)
                m.pop()
                used.discard(s)

    yield from rec(0)


def _candidate_types(size):
    out = [LieType("A", size)]
    if size >= 2:
        out += [LieType("B", size), LieType("C", size)]
    if size >= 4:
        out.append(LieType("D", size))
    if size in (6, 7, 8):
        out.append(LieType("E", size))
    if size == 4:
        out.append(LieType("F", 4))
    if size == 2:
        out.append(LieType("G", 2))
    return out


def recognize_component(cartan, nodes):
    """Type of the connected sub-diagram on ``nodes`` and its Bourbaki order.

    Returns ``(LieType, order)`` where ``order[k]`` is the node of ``cartan``
    playing the role of the ``k``-th Bourbaki simple root.  Among all valid
    identifications the lexicographically smallest order wins, so a subset
    that is already in Bourbaki order keeps its labels.
    """
    nodes = sorted(nodes)
    best = None
    for t in _candidate_types(len(nodes)):
        m = next(_isomorphisms(cartan_matrix(t), cartan, nodes), None)
        if m is not None and (best is None or m < best[1]):
            best = (t, m)
    if best is None:
        raise ValueError(f"nodes {nodes} do not form a Dynkin diagram of finite type")
    return best


def recognize(cartan, nodes=None):
    """Recognize every connected component; list of ``(LieType, order)``."""
    return [recognize_component(cartan, comp) for comp in components(cartan, nodes)]
