"""Command-line front end.

    liemult mult --type C3 --highest 0,1,0 --weight 0,0,0
    liemult dim --type F4 --highest 0,0,0,1
    liemult profile --type A3 --highest 0,3,0 --format json
    liemult verify table1 --bound 4

Exit status: 0 success, 1 verification found unannotated differences or
failing checks, 2 usage error, 3 internal consistency failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import classification as cl
from . import lemmas
from .multiplicity import (
    WeightProfile,
    freudenthal_multiplicity,
    multiplicity_table,
    weight_count_profile,
    weyl_dimension,
)
from .rootsystem import InternalConsistencyError, LieType, build_root_system
from .weights import dominant_representative, weyl_orbit_size

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(ValueError):
    pass


def parse_weight(text: str, rank: int) -> tuple:
    try:
        w = tuple(int(x) for x in text.replace(" ", "").strip("()").split(","))
    except ValueError:
        raise UsageError(f"malformed weight {text!r}; expected comma-separated integers") from None
    if len(w) != rank:
        raise UsageError(f"weight {text!r} has {len(w)} coordinates, rank is {rank}")
    return w


def _type(text):
    try:
        return LieType.parse(text)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _dominant(w, what):
    if min(w) < 0:
        raise UsageError(f"{what} {w} is not dominant")
    return w


def fmt_weight(w):
    return "(" + ",".join(map(str, w)) + ")"


def _table_text(header, rows):
    cols = [header] + [[str(x) for x in r] for r in rows]
    widths = [max(len(r[i]) for r in cols) for i in range(len(header))]
    lines = ["  ".join(c.rjust(w) if i else c.ljust(w) for i, (c, w) in enumerate(zip(r, widths)))
             for r in cols]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _csv(header, rows):
    buf = io.StringIO()
    wr = csv.writer(buf, lineterminator="\n")
    wr.writerow(header)
    wr.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _json(obj):
    return json.dumps(obj, indent=2, default=lambda o: list(o) if isinstance(o, tuple) else str(o))


def _profile_row(t, w, p: WeightProfile):
    return [str(t), fmt_weight(w), p.n(1), p.n(2), p.dim]


PROFILE_HEADER = ["type", "weight", "n1", "n2", "dim"]


def render_profile(doc: dict, fmt: str) -> str:
    """Render a profile document (as produced by ``profile --format json``)."""
    p = WeightProfile.from_dict(doc["profile"])
    if fmt == "json":
        return _json(doc)
    row = [doc["type"], fmt_weight(doc["highest"]), p.n(1), p.n(2), p.dim]
    extra = [f"n{m}={c}" for m, c in sorted(p.counts.items()) if m > 2]
    if fmt == "csv":
        return _csv(PROFILE_HEADER, [row])
    text = _table_text(["type", "highest weight", "n1", "n2", "dimension"], [row])
    return text + ("\n" + " ".join(extra) if extra else "")


# -- verbs ----------------------------------------------------------------------

def cmd_mult(a):
    t = _type(a.type)
    rs = build_root_system(t)
    lam = _dominant(parse_weight(a.highest, t.rank), "highest weight")
    if a.weight is not None:
        mu = parse_weight(a.weight, t.rank)
        m = freudenthal_multiplicity(rs, lam, mu)
        if a.format == "json":
            return _json({"type": str(t), "highest": lam, "weight": mu, "multiplicity": m})
        if a.format == "csv":
            return _csv(["type", "highest", "weight", "multiplicity"],
                        [[str(t), fmt_weight(lam), fmt_weight(mu), m]])
        return str(m)
    table = multiplicity_table(rs, lam)
    if a.format == "json":
        return _json(table.to_dict())
    rows = [[fmt_weight(mu), m, weyl_orbit_size(rs, mu)] for mu, m in table]
    header = ["dominant weight", "multiplicity", "orbit size"]
    return _csv(header, rows) if a.format == "csv" else _table_text(header, rows)


def cmd_dim(a):
    t = _type(a.type)
    lam = _dominant(parse_weight(a.highest, t.rank), "highest weight")
    d = weyl_dimension(build_root_system(t), lam)
    if a.format == "json":
        return _json({"type": str(t), "highest": lam, "dim": d})
    if a.format == "csv":
        return _csv(["type", "highest", "dim"], [[str(t), fmt_weight(lam), d]])
    return str(d)


def cmd_profile(a):
    t = _type(a.type)
    lam = _dominant(parse_weight(a.highest, t.rank), "highest weight")
    p = weight_count_profile(build_root_system(t), lam)
    return render_profile({"type": str(t), "highest": list(lam), "profile": p.to_dict()}, a.format)


def cmd_orbit(a):
    t = _type(a.type)
    rs = build_root_system(t)
    w = parse_weight(a.weight, t.rank)
    d = dominant_representative(rs, w)
    size = weyl_orbit_size(rs, d)
    if a.format == "json":
        return _json({"type": str(t), "weight": w, "dominant": d, "orbit_size": size})
    if a.format == "csv":
        return _csv(["type", "weight", "dominant", "orbit_size"],
                    [[str(t), fmt_weight(w), fmt_weight(d), size]])
    return str(size)


def cmd_restrict(a):
    t = _type(a.type)
    rs = build_root_system(t)
    om = _dominant(parse_weight(a.highest, t.rank), "highest weight")
    if (a.levi is None) == (a.base is None):
        raise UsageError("give exactly one of --levi or --base")
    try:
        if a.levi is not None:
            res = lemmas.levi_restriction(rs, om, [int(x) for x in a.levi.split(",")])
        else:
            roots = [parse_weight(r, t.rank) for r in a.base.split(";")]
            res = lemmas.subsystem_restrict(rs, om, lemmas.subsystem_base(rs, roots))
    except (ValueError, IndexError) as e:
        raise UsageError(str(e)) from None
    comps = res.to_dict()
    for c, comp in zip(comps, res.components):
        c["max_multiplicity"] = lemmas.Restriction((comp,)).max_multiplicity()
    if a.format == "json":
        return _json({"type": str(t), "highest": om, "components": comps})
    rows = [[c["type"], fmt_weight(c["nodes"]), fmt_weight(c["weight"]), c["max_multiplicity"]]
            for c in comps]
    header = ["component", "labels", "restricted weight", "max multiplicity"]
    return _csv(header, rows) if a.format == "csv" else _table_text(header, rows)


def _report_rows(report):
    return [_profile_row(r.type, w, r.profiles[w]) for r in report.reports for w in sorted(r.profiles)]


def cmd_classify(a):
    t = _type(a.type)
    rs = build_root_system(t)
    search = cl.omega_search(rs, a.k, a.bound)
    levels = {f"omega{j}": [list(w) for w in search.omega(j)] for j in range(1, a.k + 1)}
    primes = {f"omega{j}_prime": [list(w) for w in search.omega_prime(j)] for j in range(2, a.k + 1)}
    if a.format == "json":
        return _json({"type": str(t), "k": a.k, "bound": a.bound,
                      "statement": f"within coordinate-sum bound {a.bound}", **levels, **primes})
    rows = [[str(t), fmt_weight(w), j] for j in range(1, a.k + 1) for w in search.omega_prime(j)]
    header = ["type", "weight", "max multiplicity"]
    if a.format == "csv":
        return _csv(header, rows)
    return f"{t}, coordinate sum <= {a.bound}\n" + _table_text(header, rows)


def cmd_verify(a):
    config = cl.SearchConfig(bound=a.bound, extended=a.extended)
    if a.suite in ("table1", "table2"):
        report = cl.verify_table1(config) if a.suite == "table1" else cl.verify_table2(config)
        status = EXIT_OK if report.ok else EXIT_FAILED
        if a.format == "json":
            return _json(report.to_dict()), status
        if a.format == "csv":
            return _csv(PROFILE_HEADER, _report_rows(report)), status
        lines = [f"{a.suite}: verified within coordinate-sum bound {a.bound}"]
        if a.suite == "table1":
            lines.append(_table_text(PROFILE_HEADER, _report_rows(report)))
        for r in report.reports:
            for d in r.diffs:
                tag = "annotated" if d["annotated"] else "DIFF"
                lines.append(f"{tag}: {r.type} {d['entry']} {d['field']}: "
                             f"table {d['table_value']}, computed {d['computed_value']}")
        for n in report.notes:
            lines.append(f"note: {json.dumps(n, default=str)}")
        lines.append("ok" if report.ok else f"{len(report.unannotated_diffs)} unannotated differences")
        return "\n".join(lines), status
    if a.suite == "a2":
        rep = cl.a2_family_check(a.a_max, a.grid_max)
        status = EXIT_OK if rep["ok"] else EXIT_FAILED
        if a.format == "json":
            return _json(rep), status
        rows = [["A2", fmt_weight(s["weight"]), s["computed"]["n1"], s["computed"]["n2"],
                 s["computed"]["dim"]] for s in rep["series"]]
        body = _csv(PROFILE_HEADER, rows) if a.format == "csv" else _table_text(PROFILE_HEADER, rows)
        return body + ("" if a.format == "csv" else "\n" + ("ok" if rep["ok"] else "FAILED")), status
    rep = lemmas.lemma_suite(quick=a.quick)
    status = EXIT_OK if all(not v["failures"] for v in rep.values()) else EXIT_FAILED
    if a.format == "json":
        return _json(rep), status
    rows = [[k, v["cases"], v["applicable"], len(v["failures"])] for k, v in rep.items()]
    header = ["check", "cases", "applicable", "failures"]
    return (_csv(header, rows) if a.format == "csv" else _table_text(header, rows)), status


def build_parser():
    p = argparse.ArgumentParser(prog="liemult", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="verb", required=True)

    def common(sp, highest=True):
        sp.add_argument("--type", required=True, help="Lie type, e.g. A3, C5, F4")
        if highest:
            sp.add_argument("--highest", required=True, help="highest weight, e.g. 0,1,0")
        sp.add_argument("--format", choices=("text", "json", "csv"), default="text")

    sp = sub.add_parser("mult", help="weight multiplicity (or full table without --weight)")
    common(sp)
    sp.add_argument("--weight")
    sp.set_defaults(func=cmd_mult)

    sp = sub.add_parser("dim", help="Weyl dimension")
    common(sp)
    sp.set_defaults(func=cmd_dim)

    sp = sub.add_parser("profile", help="counts of weights by multiplicity")
    common(sp)
    sp.set_defaults(func=cmd_profile)

    sp = sub.add_parser("orbit", help="Weyl orbit size of a weight")
    common(sp, highest=False)
    sp.add_argument("--weight", required=True)
    sp.set_defaults(func=cmd_orbit)

    sp = sub.add_parser("restrict", help="restrict a highest weight to a subsystem")
    common(sp)
    sp.add_argument("--levi", help="simple-root labels, e.g. 1,2,3")
    sp.add_argument("--base", help="roots in simple-root coordinates separated by ';'")
    sp.set_defaults(func=cmd_restrict)

    sp = sub.add_parser("classify", help="bounded search for small maximal multiplicity")
    common(sp, highest=False)
    sp.add_argument("--k", type=int, default=2, choices=cl.SUPPORTED_K)
    sp.add_argument("--bound", type=int, default=4)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("suite", choices=("table1", "table2", "a2", "lemmas"))
    sp.add_argument("--bound", type=int, default=4)
    sp.add_argument("--extended", action="store_true", help="add E6 and E7 at bound 2")
    sp.add_argument("--a-max", type=int, default=20)
    sp.add_argument("--grid-max", type=int, default=6)
    sp.add_argument("--quick", action="store_true", help="small lemma sweeps")
    sp.add_argument("--format", choices=("text", "json", "csv"), default="text")
    sp.set_defaults(func=cmd_verify)
    return p


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        out = args.func(args)
    except (UsageError, ValueError, IndexError) as e:
        print(f"liemult {args.verb}: error: {e}", file=stderr)
        return EXIT_USAGE
    except InternalConsistencyError as e:
        print(f"liemult {args.verb}: internal consistency failure: {e}", file=stderr)
        return EXIT_INTERNAL
    status = EXIT_OK
    if isinstance(out, tuple):
        out, status = out
    print(out, file=stdout)
    return status


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
