"""Weight multiplicities, dimensions and weight-count profiles.

Multiplicities come from Freudenthal's recursion

    (|lam + rho|^2 - |mu + rho|^2) m(mu) = 2 sum_{a > 0} sum_{k >= 1} m(mu + k a) <mu + k a, a>

run top-down over the dominant weights below ``lam``; every other weight
is looked up through its dominant representative.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .rootsystem import InternalConsistencyError, RootSystem, a_type_orthogonal_coords
from .weights import (
    _dominant_levels,
    _require_dominant,
    dominant_representative,
    same_coset,
    weyl_orbit_size,
)


def weyl_dimension(rs: RootSystem, lam) -> int:
    """prod over positive roots of <lam + rho, a> / <rho, a>, exactly."""
    lam = rs.check(lam)
    _require_dominant(lam, "highest weight")
    # <w, a> for a = sum c_k alpha_k is sum c_k w_k |alpha_k|^2 / 2; the
    # common factor cancels, so the symmetrizer suffices.
    d = rs.symmetrizer
    num = den = 1
    for a in rs.positive_roots:
        num *= sum(c * (x + 1) * dk for c, x, dk in zip(a, lam, d))
        den *= sum(c * dk for c, dk in zip(a, d))
    q, r = divmod(num, den)
    if r:
        raise InternalConsistencyError(f"non-integral dimension {Fraction(num, den)} for {lam}")
    return q


def a_type_dimension_product(rs: RootSystem, lam) -> int:
    """Type A dimension as prod_{i<j} (l_i - l_j + j - i) / (j - i)."""
    if rs.type.family != "A":
        raise ValueError(f"product formula is for type A only, got {rs.type}")
    lam = rs.check(lam)
    _require_dominant(lam, "highest weight")
    ell = a_type_orthogonal_coords(rs, lam)
    m = len(ell)
    num = den = 1
    for i in range(m):
        for j in range(i + 1, m):
            num *= ell[i] - ell[j] + j - i
            den *= j - i
    q, r = divmod(num, den)
    if r:
        raise InternalConsistencyError(f"non-integral dimension {Fraction(num, den)} for {lam}")
    return q


class _CapExceeded(Exception):
    def __init__(self, value):
        self.value = value


def _freudenthal(rs: RootSystem, lam, cap=None):
    """Multiplicities of all dominant weights below ``lam`` (dict, top-down).

    With ``cap`` set, raises ``_CapExceeded`` at the first multiplicity above it.
    """
    n = rs.rank
    g = rs.gram_int
    roots = [(a, tuple(sum(g[i][j] * a[j] for j in range(n)) for i in range(n)))
             for a in rs.positive_roots_fund]

    def norm(v):
        return sum(v[i] * sum(g[i][j] * v[j] for j in range(n)) for i in range(n))

    top = norm(tuple(x + 1 for x in lam))
    mult = {}
    dom_cache = {}
    for depth, level in _dominant_levels(rs, lam):
        if depth == 0:
            mult[lam] = 1
            continue
        for mu in level:
            total = 0
            for a, ga in roots:
                nu = tuple(x + y for x, y in zip(mu, a))
                while True:
                    d = dom_cache.get(nu)
                    if d is None:
                        d = dom_cache[nu] = dominant_representative(rs, nu)
                    m = mult.get(d)
                    if not m:
                        break
                    total += m * sum(x * y for x, y in zip(nu, ga))
                    nu = tuple(x + y for x, y in zip(nu, a))
            gap = top - norm(tuple(x + 1 for x in mu))
            q, r = divmod(2 * total, gap)
            if r or q < 1:
                raise InternalConsistencyError(
                    f"Freudenthal quotient {Fraction(2 * total, gap)} at {mu} for "
                    f"{rs.type} {lam} is not a positive integer"
                )
            mult[mu] = q
            if cap is not None and q > cap:
                raise _CapExceeded(q)
    return mult


# memo of complete tables keyed by (root system, highest weight)
_TABLES: dict = {}


def _table(rs: RootSystem, lam: tuple):
    t = _TABLES.get((rs, lam))
    if t is None:
        t = _TABLES[(rs, lam)] = _freudenthal(rs, lam)
    return t


def freudenthal_multiplicity(rs: RootSystem, lam, mu) -> int:
    """Multiplicity of ``mu`` in the irreducible module of highest weight ``lam``."""
    lam, mu = rs.check(lam), rs.check(mu)
    _require_dominant(lam, "highest weight")
    if not same_coset(rs, lam, mu):
        return 0
    return _table(rs, lam).get(dominant_representative(rs, mu), 0)


def _sorted_items(d):
    return dict(sorted(d.items()))


@dataclass(frozen=True)
class WeightProfile:
    """Number of weights (counted over full Weyl orbits) of each multiplicity."""
    dim: int
    counts: dict  # multiplicity -> number of weights

    def __post_init__(self):
        if sum(m * c for m, c in self.counts.items()) != self.dim:
            raise InternalConsistencyError(
                f"profile {self.counts} does not add up to dimension {self.dim}"
            )

    def n(self, m: int) -> int:
        return self.counts.get(m, 0)

    @property
    def max_multiplicity(self) -> int:
        return max(self.counts)

    def to_dict(self):
        return {"dim": self.dim, "counts": {str(m): c for m, c in sorted(self.counts.items())}}

    @classmethod
    def from_dict(cls, d):
        return cls(d["dim"], {int(m): c for m, c in d["counts"].items()})


@dataclass(frozen=True)
class MultiplicityTable:
    type: object
    highest: tuple
    entries: dict = field(repr=False)  # dominant mu -> multiplicity, lexicographic order

    def __getitem__(self, mu):
        return self.entries[tuple(mu)]

    def __iter__(self):
        return iter(self.entries.items())

    def __len__(self):
        return len(self.entries)

    @property
    def max_multiplicity(self) -> int:
        return max(self.entries.values())

    def weights_with(self, m: int) -> list:
        return [mu for mu, x in self.entries.items() if x == m]

    def to_dict(self):
        return {
            "type": str(self.type),
            "highest": list(self.highest),
            "entries": [[list(mu), m] for mu, m in self.entries.items()],
        }


def multiplicity_table(rs: RootSystem, lam) -> MultiplicityTable:
    lam = rs.check(lam)
    _require_dominant(lam, "highest weight")
    return MultiplicityTable(rs.type, lam, _sorted_items(_table(rs, lam)))


def weight_count_profile(rs: RootSystem, lam) -> WeightProfile:
    table = multiplicity_table(rs, lam)
    counts = Counter()
    for mu, m in table:
        counts[m] += weyl_orbit_size(rs, mu)
    return WeightProfile(weyl_dimension(rs, lam), dict(sorted(counts.items())))


def max_multiplicity(rs: RootSystem, lam, stop_above=None) -> int:
    """Largest weight multiplicity of the module with highest weight ``lam``.

    With ``stop_above=k`` the computation may stop at the first multiplicity
    exceeding ``k`` and return it; the result is then only known to be > k.
    """
    lam = rs.check(lam)
    _require_dominant(lam, "highest weight")
    if stop_above is None or (rs, lam) in _TABLES:
        return max(_table(rs, lam).values())
    try:
        return max(_freudenthal(rs, lam, cap=stop_above).values())
    except _CapExceeded as e:
        return e.value
