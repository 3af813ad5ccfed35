"""Executable multiplicity inequalities and reductions, with sweeps.

Each ``check_*`` returns a :class:`Witness` carrying the multiplicities it
compared, so a failing case can be diagnosed from the report alone.
Precondition violations come back as ``applicable=False`` rather than as
failures.  Simple-root indices are 1-based throughout, as in ``omega_i``.
"""
from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass, field
from math import prod

from .multiplicity import freudenthal_multiplicity, max_multiplicity, multiplicity_table
from .rootsystem import LieType, RootSystem, build_root_system, recognize
from .weights import dominant_weights_below, is_dominant, root_coordinates


@dataclass(frozen=True)
class Witness:
    check: str
    case: dict
    applicable: bool
    holds: bool | None = None
    values: dict = field(default_factory=dict)
    failures: tuple = ()

    def to_dict(self):
        return asdict(self)


def _skip(check, case, why):
    return Witness(check, case, False, None, {"reason": why})


# -- coordinatewise domination ----------------------------------------------

def check_coordinatewise_domination(rs: RootSystem, om, mu, nu) -> Witness:
    """If mu < om are dominant with om >= mu coordinatewise and nu < mu,
    then m_om(nu) >= m_mu(nu)."""
    om, mu, nu = rs.check(om), rs.check(mu), rs.check(nu)
    case = {"type": str(rs.type), "om": om, "mu": mu, "nu": nu}
    name = "coordinatewise_domination"
    if not (is_dominant(om) and is_dominant(mu) and is_dominant(nu)):
        return _skip(name, case, "weights must be dominant")
    if mu == om or root_coordinates(rs, om, mu) is None:
        return _skip(name, case, "mu is not strictly below om")
    if any(a < b for a, b in zip(om, mu)):
        return _skip(name, case, "om does not dominate mu coordinatewise")
    if nu == mu or root_coordinates(rs, mu, nu) is None:
        return _skip(name, case, "nu is not strictly below mu")
    big = freudenthal_multiplicity(rs, om, nu)
    small = freudenthal_multiplicity(rs, mu, nu)
    return Witness(name, case, True, big >= small, {"m_om(nu)": big, "m_mu(nu)": small})


# -- monotonicity along the dominance order ----------------------------------

def check_dominance_monotonicity(rs: RootSystem, lam) -> Witness:
    """m_lam(mu) >= m_lam(nu) for every pair of dominant mu < nu <= lam."""
    lam = rs.check(lam)
    table = multiplicity_table(rs, lam)
    weights = list(table.entries)
    pairs = 0
    failures = []
    for mu, nu in itertools.permutations(weights, 2):
        if root_coordinates(rs, nu, mu) is None:
            continue
        pairs += 1
        if table[mu] < table[nu]:
            failures.append({"mu": mu, "nu": nu, "m(mu)": table[mu], "m(nu)": table[nu]})
    return Witness("dominance_monotonicity", {"type": str(rs.type), "lam": lam}, True,
                   not failures, {"pairs": pairs}, tuple(failures))


# -- reduction by shifting fundamental weights --------------------------------

def shift_reduce(rs: RootSystem, om, mu, J):
    """Lower ``om`` and ``mu`` by sum_{j in J} (a_j - c_j) omega_j.

    Here ``om - mu = sum c_i alpha_i``.  The multiplicity of the shifted
    ``mu`` in the module of the shifted ``om`` is unchanged; the shifted
    ``mu`` need not be dominant.
    """
    om, mu = rs.check(om), rs.check(mu)
    c = root_coordinates(rs, om, mu)
    if c is None:
        raise ValueError(f"{mu} is not below {om} for {rs.type}")
    J = sorted(set(J))
    for j in J:
        if not 1 <= j <= rs.rank:
            raise IndexError(f"index {j} out of range 1..{rs.rank}")
        if c[j - 1] > om[j - 1]:
            raise ValueError(
                f"index {j}: root coefficient {c[j - 1]} exceeds coordinate {om[j - 1]} of {om}"
            )
    shift = [0] * rs.rank
    for j in J:
        shift[j - 1] = om[j - 1] - c[j - 1]
    return (tuple(x - s for x, s in zip(om, shift)), tuple(x - s for x, s in zip(mu, shift)))


def check_shift_reduction(rs: RootSystem, om, mu, J) -> Witness:
    om, mu = rs.check(om), rs.check(mu)
    case = {"type": str(rs.type), "om": om, "mu": mu, "J": tuple(sorted(J))}
    try:
        om2, mu2 = shift_reduce(rs, om, mu, J)
    except ValueError as e:
        return _skip("shift_reduction", case, str(e))
    a = freudenthal_multiplicity(rs, om, mu)
    b = freudenthal_multiplicity(rs, om2, mu2)
    return Witness("shift_reduction", case, True, a == b,
                   {"om'": om2, "mu'": mu2, "m_om(mu)": a, "m_om'(mu')": b})


# -- restriction to Levi and subsystem subgroups --------------------------------

@dataclass(frozen=True)
class RestrictedComponent:
    type: LieType
    nodes: tuple    # 1-based labels (simple roots or base positions) in Bourbaki order
    weight: tuple   # restricted coordinates in that order


@dataclass(frozen=True)
class Restriction:
    components: tuple

    def restrict(self, pairings):
        """Split pairings (a mapping keyed by the 1-based ``nodes`` labels) per component."""
        return tuple(tuple(pairings[i] for i in c.nodes) for c in self.components)

    def multiplicity(self, parts) -> int:
        return prod(
            freudenthal_multiplicity(build_root_system(c.type), c.weight, p)
            for c, p in zip(self.components, parts)
        )

    def max_multiplicity(self) -> int:
        return prod(max_multiplicity(build_root_system(c.type), c.weight) for c in self.components)

    def to_dict(self):
        return [{"type": str(c.type), "nodes": list(c.nodes), "weight": list(c.weight)}
                for c in self.components]


def levi_restriction(rs: RootSystem, om, S) -> Restriction:
    """Restrict ``om`` to the subsystem spanned by the simple roots in ``S``."""
    om = rs.check(om)
    S = sorted(set(S))
    if not S or len(S) >= rs.rank:
        raise ValueError(f"S must be a non-empty proper subset of 1..{rs.rank}, got {S}")
    if any(not 1 <= i <= rs.rank for i in S):
        raise IndexError(f"S {S} out of range 1..{rs.rank}")
    comps = []
    for t, order in recognize(rs.cartan, [i - 1 for i in S]):
        nodes = tuple(i + 1 for i in order)
        comps.append(RestrictedComponent(t, nodes, tuple(om[i - 1] for i in nodes)))
    return Restriction(tuple(comps))


def check_levi_multiplicity(rs: RootSystem, om, mu, S) -> Witness:
    """For dominant mu = om - sum_{alpha in S} c_alpha alpha, the multiplicity
    of mu equals that of mu restricted to the Levi subsystem on S."""
    om, mu = rs.check(om), rs.check(mu)
    S = sorted(set(S))
    case = {"type": str(rs.type), "om": om, "mu": mu, "S": tuple(S)}
    c = root_coordinates(rs, om, mu)
    if c is None or not is_dominant(mu):
        return _skip("levi_multiplicity", case, "mu is not a dominant weight below om")
    if any(c[i] for i in range(rs.rank) if i + 1 not in S):
        return _skip("levi_multiplicity", case, "om - mu is not supported on S")
    res = levi_restriction(rs, om, S)
    # pairings with simple coroots are the coordinates; relabel to 1-based
    full = {i + 1: x for i, x in enumerate(mu)}
    parts = res.restrict(full)
    a = freudenthal_multiplicity(rs, om, mu)
    b = res.multiplicity(parts)
    return Witness("levi_multiplicity", case, True, a == b,
                   {"restricted": res.to_dict(), "mu'": parts, "m_V(mu)": a, "m_V'(mu')": b})


def _dot_d(rs, u, v):
    """Symmetrized pairing sum_k u_k v_k d_k (proportional to the invariant form)."""
    return sum(x * y * d for x, y, d in zip(u, v, rs.symmetrizer))


def coroot_pairing_root(rs: RootSystem, w, beta) -> int:
    """``<w, beta^vee>`` for a weight ``w`` and a root ``beta`` in simple-root coordinates."""
    num = 2 * _dot_d(rs, beta, w)
    den = _dot_d(rs, beta, rs.to_fundamental(beta))
    q, r = divmod(num, den)
    if r:
        raise ValueError(f"<{w}, {beta}^vee> is not an integer")
    return q


@dataclass(frozen=True)
class SubsystemBase:
    roots: tuple           # positive roots of the ambient system, simple-root coordinates
    induced_cartan: tuple  # <beta_i, beta_j^vee>
    components: tuple      # (LieType, order); order holds 1-based positions in ``roots``

    @property
    def induced_type(self):
        return tuple(t for t, _ in self.components)


def subsystem_base(rs: RootSystem, roots) -> SubsystemBase:
    """Validate a candidate subsystem base and type it.

    Every entry must be a positive root of ``rs``, and the pairings must
    form a Cartan matrix of finite type.
    """
    roots = tuple(tuple(r) for r in roots)
    known = set(rs.positive_roots)
    for r in roots:
        if len(r) != rs.rank:
            raise ValueError(f"root {r} has wrong length for {rs.type}")
        if r not in known:
            raise ValueError(f"{r} is not a positive root of {rs.type}")
    if len(set(roots)) != len(roots):
        raise ValueError("repeated root in base")
    fund = [rs.to_fundamental(r) for r in roots]
    cartan = tuple(
        tuple(coroot_pairing_root(rs, fund[i], roots[j]) for j in range(len(roots)))
        for i in range(len(roots))
    )
    for i, row in enumerate(cartan):
        for j, x in enumerate(row):
            if i != j and (x > 0 or (x == 0) != (cartan[j][i] == 0)):
                raise ValueError(f"pairings {cartan} are not a Cartan matrix")
    comps = tuple((t, tuple(i + 1 for i in order)) for t, order in recognize(cartan))
    return SubsystemBase(roots, cartan, comps)


def subsystem_restrict(rs: RootSystem, om, base: SubsystemBase) -> Restriction:
    """Restrict ``om`` to the subsystem: coordinates ``<om, beta_i^vee>``."""
    om = rs.check(om)
    pair = [coroot_pairing_root(rs, om, b) for b in base.roots]
    return Restriction(tuple(
        RestrictedComponent(t, order, tuple(pair[i - 1] for i in order))
        for t, order in base.components
    ))


def check_subsystem_bound(rs: RootSystem, om, base: SubsystemBase, k: int) -> Witness:
    """If every weight of V_om has multiplicity <= k, the restricted highest
    weight of the subsystem also has maximal multiplicity <= k."""
    om = rs.check(om)
    case = {"type": str(rs.type), "om": om, "base": base.roots, "k": k}
    m = max_multiplicity(rs, om)
    res = subsystem_restrict(rs, om, base)
    if m > k:
        return Witness("subsystem_bound", case, False, None,
                       {"reason": f"max multiplicity {m} exceeds k", "max": m})
    sub = res.max_multiplicity()
    return Witness("subsystem_bound", case, True, sub <= k,
                   {"restricted": res.to_dict(), "max": m, "restricted_max": sub})


# -- support width in type A --------------------------------------------------

def check_support_width_bound(rs: RootSystem, om) -> Witness:
    """Type A: if om is supported on j..k with nonzero ends (j < k), some
    weight has multiplicity at least k - j."""
    om = rs.check(om)
    case = {"type": str(rs.type), "om": om}
    if rs.type.family != "A":
        return _skip("support_width", case, "type A only")
    support = [i + 1 for i, x in enumerate(om) if x]
    if len(support) < 2:
        return _skip("support_width", case, "needs nonzero coordinates at two positions j < k")
    j, k = support[0], support[-1]
    m = max_multiplicity(rs, om)
    return Witness("support_width", case, True, m >= k - j, {"bound": k - j, "max": m})


# -- sweeps --------------------------------------------------------------------

def types_up_to_rank(max_rank: int, families="ABCDEFG") -> list:
    out = []
    for f in families:
        for n in range(1, max_rank + 1):
            try:
                out.append(LieType(f, n))
            except ValueError:
                pass
    return sorted(out)


def dominant_weights(rank: int, max_level: int):
    """Dominant weights of the given rank with coordinate sum <= max_level."""
    for w in itertools.product(range(max_level + 1), repeat=rank):
        if sum(w) <= max_level:
            yield w


def sweep_monotonicity(max_rank=4, max_level=4):
    for t in types_up_to_rank(max_rank):
        rs = build_root_system(t)
        for lam in dominant_weights(t.rank, max_level):
            yield check_dominance_monotonicity(rs, lam)


def sweep_shift_reduction(max_rank=4, max_level=4):
    for t in types_up_to_rank(max_rank):
        rs = build_root_system(t)
        for om in dominant_weights(t.rank, max_level):
            for mu in dominant_weights_below(rs, om):
                c = root_coordinates(rs, om, mu)
                allowed = [j + 1 for j in range(t.rank) if c[j] <= om[j]]
                for r in range(len(allowed) + 1):
                    for J in itertools.combinations(allowed, r):
                        yield check_shift_reduction(rs, om, mu, J)


def sweep_levi(max_rank=5, max_level=3):
    for t in types_up_to_rank(max_rank):
        rs = build_root_system(t)
        subsets = [S for r in range(1, t.rank) for S in itertools.combinations(range(1, t.rank + 1), r)]
        for om in dominant_weights(t.rank, max_level):
            for mu in dominant_weights_below(rs, om):
                c = root_coordinates(rs, om, mu)
                needed = {i + 1 for i in range(t.rank) if c[i]}
                for S in subsets:
                    if needed <= set(S):
                        yield check_levi_multiplicity(rs, om, mu, S)


def sweep_support_width(max_rank=5, max_level=3):
    for n in range(1, max_rank + 1):
        rs = build_root_system(LieType("A", n))
        for om in dominant_weights(n, max_level):
            w = check_support_width_bound(rs, om)
            if w.applicable:
                yield w


def sweep_coordinatewise(max_rank=3, max_level=4):
    for t in types_up_to_rank(max_rank):
        rs = build_root_system(t)
        for om in dominant_weights(t.rank, max_level):
            below = dominant_weights_below(rs, om)
            for mu in below:
                if mu == om or any(a < b for a, b in zip(om, mu)):
                    continue
                for nu in dominant_weights_below(rs, mu):
                    if nu != mu:
                        yield check_coordinatewise_domination(rs, om, mu, nu)


def summarize(witnesses) -> dict:
    """Case counts and failing witnesses for one sweep."""
    cases = applicable = 0
    failures = []
    for w in witnesses:
        cases += 1
        if w.applicable:
            applicable += 1
            if not w.holds:
                failures.append(w.to_dict())
    return {"cases": cases, "applicable": applicable, "failures": failures}


def lemma_suite(quick=False) -> dict:
    """Run every sweep; JSON-ready report keyed by check name."""
    scale = (2, 2) if quick else None
    return {
        "dominance_monotonicity": summarize(sweep_monotonicity(*(scale or (4, 4)))),
        "shift_reduction": summarize(sweep_shift_reduction(*(scale or (4, 4)))),
        "levi_multiplicity": summarize(sweep_levi(*(scale or (5, 3)))),
        "support_width": summarize(sweep_support_width(*(scale or (5, 3)))),
        "coordinatewise_domination": summarize(sweep_coordinatewise(*(scale or (3, 4)))),
    }

