"""Slow, independent multiplicity oracle via Kostant's partition function.

    m_lam(mu) = sum over w in W of sign(w) * P(w(lam + rho) - (mu + rho))

where ``P(beta)`` counts the ways of writing ``beta`` as a non-negative
integer combination of positive roots.  Everything here is rebuilt from
the Cartan matrix alone: positive roots come from the Weyl orbit of the
simple roots, W from the orbit of the regular weight ``lam + rho``.  It
deliberately shares nothing with the Freudenthal engine beyond the Cartan
matrix, and refuses inputs outside a small scale.
"""
from __future__ import annotations

import functools
from fractions import Fraction

from .rootsystem import RootSystem, invert

MAX_RANK = 3
MAX_LEVEL = 4


def _reflect(cartan, w, i):
    c = w[i]
    return tuple(x - c * y for x, y in zip(w, cartan[i]))


@functools.lru_cache(maxsize=None)
def _positive_roots_by_reflection(cartan):
    """Positive roots in simple-root coordinates: orbit of the simple roots
    under simple reflections, keeping the non-negative vectors."""
    n = len(cartan)

    def s(beta, i):
        pairing = sum(beta[k] * cartan[k][i] for k in range(n))
        out = list(beta)
        out[i] -= pairing
        return tuple(out)

    seen = {tuple(int(i == j) for j in range(n)) for i in range(n)}
    stack = list(seen)
    while stack:
        beta = stack.pop()
        for i in range(n):
            g = s(beta, i)
            if g not in seen and all(x >= 0 for x in g):
                seen.add(g)
                stack.append(g)
    return tuple(sorted(seen))


def signed_orbit(cartan, v):
    """Weyl orbit of a regular weight with the sign of the element reaching it.

    For a regular weight the orbit is in bijection with W, and every simple
    reflection flips the sign, so the parity of any path is the sign.
    """
    sign = {tuple(v): 1}
    stack = [tuple(v)]
    while stack:
        u = stack.pop()
        for i in range(len(cartan)):
            x = _reflect(cartan, u, i)
            if x not in sign:
                sign[x] = -sign[u]
                stack.append(x)
    return sign


@functools.lru_cache(maxsize=None)
def partition_count(roots, beta):
    """Number of ways to write ``beta`` as a non-negative combination of ``roots``."""
    if not roots:
        return int(not any(beta))
    first, rest = roots[0], roots[1:]
    total = 0
    cur = beta
    while all(x >= 0 for x in cur):
        total += partition_count(rest, cur)
        cur = tuple(x - y for x, y in zip(cur, first))
    return total


def kostant_multiplicity_oracle(rs: RootSystem, lam, mu) -> int:
    lam, mu = rs.check(lam), rs.check(mu)
    if min(lam) < 0:
        raise ValueError(f"highest weight {lam} is not dominant")
    if rs.rank > MAX_RANK or sum(lam) > MAX_LEVEL:
        raise ValueError(
            f"oracle limited to rank <= {MAX_RANK} and coordinate sum <= {MAX_LEVEL}; "
            f"got {rs.type} with {lam}"
        )
    cartan = rs.cartan
    n = len(cartan)
    inv = invert(cartan)
    roots = _positive_roots_by_reflection(cartan)
    target = tuple(m + 1 for m in mu)
    total = 0
    for v, sgn in signed_orbit(cartan, tuple(x + 1 for x in lam)).items():
        diff = [a - b for a, b in zip(v, target)]
        beta = [sum((diff[k] * inv[k][j] for k in range(n)), Fraction(0)) for j in range(n)]
        if any(x.denominator != 1 or x < 0 for x in beta):
            continue
        total += sgn * partition_count(roots, tuple(int(x) for x in beta))
    return total
