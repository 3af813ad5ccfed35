"""Bounded search for modules of small maximal weight multiplicity, and
comparison against the published reference tables.

``omega_k`` is the set of dominant highest weights whose modules have no
weight of multiplicity above ``k``; ``omega2_prime`` is omega_2 minus
omega_1.  Everything is verified only within a coordinate-sum bound.
"""
from __future__ import annotations

import ast
import json
import operator
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from .multiplicity import freudenthal_multiplicity, max_multiplicity, weight_count_profile
from .lemmas import dominant_weights
from .rootsystem import LieType, RootSystem, build_root_system
from .weights import root_coordinates

SUPPORTED_K = (1, 2)


def load_reference_tables():
    text = resources.files("liemult").joinpath("data/reference_tables.json").read_text()
    return json.loads(text)


# -- tiny arithmetic evaluator for the formulas in the data file --------------

_OPS = {
    ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul,
    ast.Div: operator.truediv, ast.Pow: operator.pow,
}


def evaluate(expr: str, env: dict) -> Fraction:
    """Evaluate an arithmetic formula (+ - * / ** and names) exactly."""
    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return Fraction(node.value)
        if isinstance(node, ast.Name):
            return Fraction(env[node.id])
        if isinstance(node, ast.BinOp) and type(node.op) in _OPS:
            return _OPS[type(node.op)](ev(node.left), ev(node.right))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -ev(node.operand)
        raise ValueError(f"unsupported expression {expr!r}")
    return ev(ast.parse(str(expr), mode="eval"))


def _int(expr, env):
    v = evaluate(expr, env)
    if v.denominator != 1:
        raise ValueError(f"{expr!r} is not integral at {env}")
    return int(v)


def _row_applies(row, t: LieType):
    if row["family"] != t.family:
        return False
    if "rank" in row:
        return row["rank"] == t.rank
    return t.rank >= row["min_rank"]


def _weight(raw, env, rank):
    if isinstance(raw, list):
        return tuple(raw)
    w = [0] * rank
    for k, v in raw.items():
        w[_int(k, env) - 1] = _int(v, env)
    return tuple(w)


def _param_envs(row, t: LieType, bound: int):
    """All parameter assignments of a row, limited so coordinates stay <= bound."""
    envs = [{"n": t.rank}]
    for name, low in row.get("params", {}).items():
        envs = [dict(e, **{name: a}) for e in envs for a in range(low, bound + 1)]
    for name, (lo, hi) in row.get("range", {}).items():
        envs = [dict(e, **{name: i}) for e in envs
                for i in range(_int(lo, e), _int(hi, e) + 1)]
    return envs


@dataclass(frozen=True)
class TableEntry:
    weight: tuple
    n1: int
    n2: int
    dim: int
    annotation: dict | None = None
    env: dict = field(default_factory=dict)


def table1_entries(t: LieType, bound: int, tables=None) -> list:
    """Published max-multiplicity-2 entries for ``t`` with coordinate sum <= bound."""
    tables = tables or load_reference_tables()
    out = {}
    for row in tables["max_multiplicity_two"]:
        if not _row_applies(row, t):
            continue
        for env in _param_envs(row, t, bound):
            for e in row["entries"]:
                w = _weight(e["weight"], env, t.rank)
                if sum(w) > bound or w in out:
                    continue
                out[w] = TableEntry(w, _int(e["n1"], env), _int(e["n2"], env),
                                    _int(e["dim"], env), e.get("annotation"), env)
    return [out[w] for w in sorted(out)]


def table2_weights(t: LieType, bound: int, tables=None) -> list:
    """Published multiplicity-free highest weights (with 0) within the bound."""
    tables = tables or load_reference_tables()
    out = {(0,) * t.rank}
    for row in tables["multiplicity_free"]:
        if not _row_applies(row, t):
            continue
        for env in _param_envs(row, t, bound):
            for raw in row["weights"]:
                w = _weight(raw, env, t.rank)
                if sum(w) <= bound:
                    out.add(w)
    return sorted(out)


# -- search -------------------------------------------------------------------

@dataclass
class OmegaSearch:
    type: LieType
    k: int
    bound: int
    maxima: dict   # weight -> max multiplicity (a lower bound > k when pruned or cut)
    pruned: set

    def omega(self, j: int) -> list:
        """Weights with no multiplicity above ``j`` (``j <= k``)."""
        if j > self.k:
            raise ValueError(f"search only resolved multiplicities up to {self.k}")
        return sorted(w for w, m in self.maxima.items() if m <= j)

    def omega_prime(self, j: int) -> list:
        return sorted(set(self.omega(j)) - set(self.omega(j - 1))) if j > 1 else self.omega(1)


def omega_search(rs: RootSystem, k: int, bound: int, prune: bool = True) -> OmegaSearch:
    """Maximal multiplicity class of every dominant weight with coordinate sum <= bound.

    Pruning: if a dominant ``mu`` strictly below ``om`` with ``mu <= om``
    coordinatewise already has a weight of multiplicity above ``k``, so does
    ``om``, and ``om`` is skipped.
    """
    if k not in SUPPORTED_K:
        raise ValueError(f"k must be one of {SUPPORTED_K}, got {k}")
    if bound < 1:
        raise ValueError("bound must be >= 1")
    maxima = {}
    pruned = set()
    failing = []
    for om in sorted(dominant_weights(rs.rank, bound), key=lambda w: (sum(w), w)):
        if prune:
            witness = next((mu for mu in failing
                            if all(a >= b for a, b in zip(om, mu))
                            and root_coordinates(rs, om, mu) is not None), None)
            if witness is not None:
                maxima[om] = maxima[witness]
                pruned.add(om)
                failing.append(om)
                continue
        m = max_multiplicity(rs, om, stop_above=k)
        maxima[om] = m
        if m > k:
            failing.append(om)
    return OmegaSearch(rs.type, k, bound, maxima, pruned)


# -- reports --------------------------------------------------------------------

def _w(w):
    return "(" + ",".join(map(str, w)) + ")"


@dataclass
class ClassificationReport:
    type: LieType
    bound: int
    omega1: list
    omega2_prime: list
    profiles: dict
    diffs: list
    conflicts: list = field(default_factory=list)

    @property
    def unannotated(self):
        return [d for d in self.diffs if not d.get("annotated")]

    def to_dict(self):
        return {
            "type": str(self.type),
            "bound": self.bound,
            "omega1": [list(w) for w in self.omega1],
            "omega2_prime": [list(w) for w in self.omega2_prime],
            "profiles": {_w(w): p.to_dict() for w, p in sorted(self.profiles.items())},
            "diffs": self.diffs,
            "conflicts": self.conflicts,
        }


@dataclass
class VerificationReport:
    suite: str
    bound: int
    reports: list
    notes: list = field(default_factory=list)

    @property
    def unannotated_diffs(self):
        return [dict(d, type=str(r.type)) for r in self.reports for d in r.unannotated]

    @property
    def ok(self):
        return not self.unannotated_diffs

    def to_dict(self):
        return {
            "suite": self.suite,
            "bound": self.bound,
            "statement": f"verified within coordinate-sum bound {self.bound} only",
            "reports": [r.to_dict() for r in self.reports],
            "notes": self.notes,
            "unannotated_diffs": self.unannotated_diffs,
            "ok": self.ok,
        }


DEFAULT_TYPES = (
    [LieType("A", n) for n in range(2, 7)]
    + [LieType("B", n) for n in range(2, 6)]
    + [LieType("C", n) for n in range(2, 7)]
    + [LieType("D", n) for n in range(4, 7)]
    + [LieType("G", 2), LieType("F", 4)]
)
EXTENDED_TYPES = (LieType("E", 6), LieType("E", 7))


@dataclass(frozen=True)
class SearchConfig:
    types: tuple = tuple(DEFAULT_TYPES)
    bound: int = 4
    extended: bool = False
    extended_bound: int = 2

    def plan(self):
        out = [(t, self.bound) for t in self.types]
        if self.extended:
            out += [(t, self.extended_bound) for t in EXTENDED_TYPES]
        return out


def _membership_diffs(kind, computed, expected):
    diffs = []
    for w in sorted(set(computed) - set(expected)):
        diffs.append({"entry": _w(w), "field": kind, "table_value": "absent",
                      "computed_value": "present", "annotated": False})
    for w in sorted(set(expected) - set(computed)):
        diffs.append({"entry": _w(w), "field": kind, "table_value": "present",
                      "computed_value": "absent", "annotated": False})
    return diffs


def _entry_diffs(entry: TableEntry, profile):
    computed = {"n1": profile.n(1), "n2": profile.n(2), "dim": profile.dim}
    diffs = []
    ann = entry.annotation or {}
    for f in ("n1", "n2", "dim"):
        table_value = getattr(entry, f)
        if table_value == computed[f]:
            continue
        d = {"entry": _w(entry.weight), "field": f, "table_value": table_value,
             "computed_value": computed[f], "annotated": ann.get("field") == f}
        if d["annotated"]:
            d["note"] = ann["note"]
            if "alternative" in ann:
                alt = _int(ann["alternative"], entry.env)
                d["alternative_value"] = alt
                d["matches"] = "alternative" if alt == computed[f] else "neither"
        diffs.append(d)
    return diffs


def classify_type(t: LieType, bound: int, tables=None) -> ClassificationReport:
    """Search one type and diff against both reference tables."""
    tables = tables or load_reference_tables()
    rs = build_root_system(t)
    search = omega_search(rs, 2, bound)
    omega1 = search.omega(1)
    omega2p = search.omega_prime(2)
    profiles = {w: weight_count_profile(rs, w) for w in omega2p}
    entries = table1_entries(t, bound, tables)
    diffs = _membership_diffs("omega2_prime", omega2p, [e.weight for e in entries])
    diffs += _membership_diffs("omega1", omega1, table2_weights(t, bound, tables))
    for e in entries:
        prof = profiles.get(e.weight) or weight_count_profile(rs, e.weight)
        profiles[e.weight] = prof
        diffs += _entry_diffs(e, prof)
    conflicts = []
    for claim in tables.get("claims", []):
        if _row_applies(claim, t):
            claimed = {tuple(w) for w in claim["omega2_prime"]}
            if set(omega2p) != claimed:
                conflicts.append({"claim": claim["note"],
                                  "claimed_omega2_prime": sorted(map(list, claimed)),
                                  "computed_omega2_prime": [list(w) for w in omega2p]})
    return ClassificationReport(t, bound, omega1, omega2p, profiles, diffs, conflicts)


def verify_table1(config: SearchConfig = SearchConfig()) -> VerificationReport:
    tables = load_reference_tables()
    reports = [classify_type(t, b, tables) for t, b in config.plan()]
    notes = [dict(c, type=str(r.type)) for r in reports for c in r.conflicts]
    b2 = next((r for r in reports if r.type == LieType("B", 2)), None)
    c2 = next((r for r in reports if r.type == LieType("C", 2)), None)
    if b2 and c2:
        swapped = sorted(tuple(reversed(w)) for w in b2.omega2_prime)
        notes.append({"check": "B2/C2 coordinate swap",
                      "holds": swapped == c2.omega2_prime})
    return VerificationReport("table1", config.bound, reports, notes)


def verify_table2(config: SearchConfig = SearchConfig()) -> VerificationReport:
    """Every published multiplicity-free weight within the bound is multiplicity
    free, and the search finds no multiplicity-free weight missing from the table."""
    tables = load_reference_tables()
    reports = []
    for t, b in config.plan():
        rs = build_root_system(t)
        listed = table2_weights(t, b, tables)
        diffs = []
        for w in listed:
            m = max_multiplicity(rs, w)
            if m != 1:
                diffs.append({"entry": _w(w), "field": "max_multiplicity", "table_value": 1,
                              "computed_value": m, "annotated": False})
        omega1 = omega_search(rs, 1, b).omega(1)
        diffs += _membership_diffs("omega1", omega1, listed)
        reports.append(ClassificationReport(t, b, omega1, [], {}, diffs))
    return VerificationReport("table2", config.bound, reports)


def a2_family_check(a_max: int = 20, grid_max: int = 6) -> dict:
    """The A2 series (1, a), (a, 1) and the multiplicity-3 weight of (a, b), a, b >= 2.

    Returns a JSON-ready report with an overall ``ok`` flag.
    """
    if a_max < 3:
        raise ValueError("a_max must be >= 3")
    rs = build_root_system(LieType("A", 2))
    series = []
    for a in range(1, a_max + 1):
        expected = {"n1": 3 * a + 3, "n2": a * (a + 1) // 2, "dim": (a + 1) * (a + 3)}
        for w in {(1, a), (a, 1)}:
            p = weight_count_profile(rs, w)
            got = {"n1": p.n(1), "n2": p.n(2), "dim": p.dim}
            series.append({"weight": list(w), "expected": expected, "computed": got,
                           "max": p.max_multiplicity,
                           "ok": got == expected and p.max_multiplicity == 2})
    grid = []
    for a in range(2, grid_max + 1):
        for b in range(2, grid_max + 1):
            # alpha_1 + alpha_2 = omega_1 + omega_2 in type A2
            mu = (a - 2, b - 2)
            m = freudenthal_multiplicity(rs, (a, b), mu)
            grid.append({"weight": [a, b], "mu": list(mu), "multiplicity": m, "ok": m == 3})
    return {"series": series, "grid": grid,
            "ok": all(s["ok"] for s in series) and all(g["ok"] for g in grid)}

