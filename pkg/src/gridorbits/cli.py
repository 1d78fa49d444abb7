"""Command-line front end.

Every command reads/writes JSON (CSV and DOT where noted) and is
deterministic given its flags.  Exit codes: 0 success, 1 usage error,
2 domain error (bad input data, infeasible sizes, invalid arrays).
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import sys
from dataclasses import dataclass

from .decomposition import decompose, flat_intersections, rank_vector
from .degeneration_lab import DEFAULT_BUDGET, DEFAULT_QS, flat_scan, hom_report
from .fields import is_prime_power
from .grid_quiver import (
    GridQuiverError,
    GridShape,
    assemble_canonical,
    identity_tuple,
    zero_tuple,
)
from .orbit_poset import build_poset, count_report, enumerate_orbits, export_dot
from .parametrizations import (
    degenerates,
    reconstruct,
    same_orbit,
    sw_array,
    validate_array_inequalities,
)
from .schubert import e_grid, is_smooth, length, r_grid
from .serialize import (
    decomposition_to_json,
    map_tuple_from_json,
    map_tuple_to_json,
    rank_vector_to_json,
    sw_array_from_json,
    sw_array_to_json,
)


@dataclass
class RunConfig:
    command: str
    n: int | None = None
    w: tuple | None = None
    qs: tuple = DEFAULT_QS
    budget: int = DEFAULT_BUDGET
    threads: int = 1
    seed: int = 0
    format: str = "json"
    out: str | None = None

    def __post_init__(self):
        if self.budget <= 0:
            raise ValueError("budget must be positive")
        if len(set(self.qs)) != len(self.qs) or not all(is_prime_power(q) for q in self.qs):
            raise ValueError("qs must be distinct prime powers")


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the interface reserves 2 for domain
    # errors, so usage problems exit 1 instead
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(1)


def _read_json(path):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise GridQuiverError(
            f"{path}: JSON parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj):
    return json.dumps(obj, indent=2) + "\n"


def _parse_w(text):
    return tuple(int(x) for x in text.split(","))


def _parse_qs(text):
    return tuple(int(x) for x in text.split(","))


def _orbit_by_id(shape, token):
    if token == "identity":
        return identity_tuple(shape)
    if token == "zero":
        return zero_tuple(shape)
    decs = enumerate_orbits(shape)
    idx = int(token)
    if not (1 <= idx <= len(decs)):
        raise GridQuiverError(f"orbit id {idx} out of range 1..{len(decs)}")
    return assemble_canonical(decs[idx - 1])


def _cmd_rank_vector(args):
    point = map_tuple_from_json(_read_json(args.input))
    rv = rank_vector(point)
    if point.shape.n == 2:
        flat = flat_intersections(rv)
        _emit("(" + ",".join(str(x) for x in flat) + ")\n", args.out)
    else:
        _emit(_dump(rank_vector_to_json(rv)), args.out)


def _cmd_sw_array(args):
    point = map_tuple_from_json(_read_json(args.input))
    _emit(_dump(sw_array_to_json(sw_array(point))), args.out)


def _cmd_decompose(args):
    point = map_tuple_from_json(_read_json(args.input))
    _emit(_dump(decomposition_to_json(decompose(point))), args.out)


def _cmd_canonical(args):
    point = map_tuple_from_json(_read_json(args.input))
    _emit(_dump(map_tuple_to_json(assemble_canonical(decompose(point)))), args.out)


def _cmd_same_orbit(args):
    f = map_tuple_from_json(_read_json(args.first))
    g = map_tuple_from_json(_read_json(args.second))
    _emit(("true" if same_orbit(f, g) else "false") + "\n", args.out)


def _cmd_degenerates(args):
    f = map_tuple_from_json(_read_json(args.first))
    g = map_tuple_from_json(_read_json(args.second))
    _emit(("true" if degenerates(f, g) else "false") + "\n", args.out)


def _orbit_records(shape):
    records = []
    for idx, dec in enumerate(enumerate_orbits(shape), start=1):
        point = assemble_canonical(dec)
        rv = rank_vector(point)
        arr = sw_array(point)
        digest = hashlib.sha256(
            json.dumps(sw_array_to_json(arr), sort_keys=True).encode()
        ).hexdigest()
        records.append(
            {
                "id": idx,
                "decomposition": str(dec),
                "rank_vector": list(flat_intersections(rv)),
                "sw_array_hash": digest,
                "maps": map_tuple_to_json(point)["maps"],
            }
        )
    return records


def _cmd_orbits(args):
    shape = GridShape(args.n)
    if args.format == "dot":
        _emit(export_dot(build_poset(shape)), args.out)
        return
    records = _orbit_records(shape)
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["id", "decomposition", "rank_vector", "sw_array_hash"])
        for r in records:
            rv = "(" + " ".join(str(x) for x in r["rank_vector"]) + ")"
            writer.writerow([r["id"], r["decomposition"], rv, r["sw_array_hash"]])
        _emit(buf.getvalue(), args.out)
    else:
        _emit(_dump(records), args.out)


def _cmd_poset(args):
    poset = build_poset(GridShape(args.n))
    if args.format == "dot":
        _emit(export_dot(poset), args.out)
    else:
        obj = {
            "nodes": [
                {"id": node.id, "decomposition": str(node.decomposition)}
                for node in poset.nodes
            ],
            "edges": [[u, v] for u, v in poset.edges],
            "maximal": poset.maximal(),
            "minimal": poset.minimal(),
        }
        _emit(_dump(obj), args.out)


def _cmd_schubert(args):
    w = _parse_w(args.w)
    obj = {
        "w": list(w),
        "length": length(w),
        "smooth": is_smooth(w),
        "r_grid": [list(row) for row in r_grid(w)],
        "e_grid": [list(row) for row in e_grid(w)],
    }
    _emit(_dump(obj), args.out)


def _cmd_flat_scan(args):
    w = _parse_w(args.w)
    qs = _parse_qs(args.qs) if args.qs else DEFAULT_QS
    cfg = RunConfig("flat-scan", w=w, qs=qs, budget=args.budget, threads=args.threads)
    result = flat_scan(w, qs=cfg.qs, budget=cfg.budget)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(
        ["orbit_id", "decomposition"]
        + [f"count_q{q}" for q in qs]
        + ["fitted_poly", "est_dim", "target_dim", "flat_candidate"]
    )
    for row in result.rows:
        counts = row.counts.as_dict()
        poly = " ".join(str(c) for c in row.estimate.coefficients)
        writer.writerow(
            [row.orbit_id, str(row.decomposition)]
            + [counts[q] for q in qs]
            + [poly, row.estimate.degree, result.target_dim, str(row.flat_candidate).lower()]
        )
    _emit(buf.getvalue(), args.out)


def _cmd_hom_report(args):
    w = _parse_w(args.w)
    qs = _parse_qs(args.qs) if args.qs else DEFAULT_QS
    cfg = RunConfig("hom-report", w=w, qs=qs, budget=args.budget, seed=args.seed)
    shape = GridShape(len(w) - 1)
    point = _orbit_by_id(shape, args.orbit)
    report = hom_report(w, point, qs=cfg.qs, seed=cfg.seed, budget=cfg.budget)
    obj = {
        "dim_G": report.dim_G,
        "dim_Gr": report.dim_Gr,
        "dim_Hom0": report.dim_Hom0,
        "dim_V": report.dim_V,
        "dim_Re": report.dim_Re,
        "codim": report.codim,
        "indep_eqs": report.indep_eqs,
        "lci": report.lci,
        "per_point_ranks": list(report.per_point_ranks),
    }
    _emit(_dump(obj), args.out)


def _cmd_validate_array(args):
    arr = sw_array_from_json(_read_json(args.input))
    ok, violations = validate_array_inequalities(arr)
    realizable = True
    detail = None
    try:
        reconstruct(arr)
    except GridQuiverError as exc:
        realizable = False
        detail = str(exc)
    obj = {"inequalities_ok": ok, "violations": violations, "realizable": realizable}
    if detail:
        obj["reconstruct_error"] = detail
    _emit(_dump(obj), args.out)


def _cmd_count_report(args):
    rep = count_report(GridShape(args.n))
    obj = {
        "enumerated": rep.enumerated,
        "f2_distinct": rep.f2_distinct,
        "paper_formula": rep.paper_formula,
    }
    _emit(_dump(obj), args.out)


def build_parser():
    parser = _Parser(prog="gridorbits", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt=("json",)):
        p.add_argument("--out", default=None)
        p.add_argument("--threads", type=int, default=1)
        if fmt:
            p.add_argument("--format", choices=fmt, default=fmt[0])

    p = sub.add_parser("rank-vector", help="rank vector of a point (JSON file or - for stdin)")
    p.add_argument("input")
    common(p, fmt=None)
    p.set_defaults(func=_cmd_rank_vector)

    p = sub.add_parser("sw-array", help="south-west array of a point")
    p.add_argument("input")
    common(p, fmt=None)
    p.set_defaults(func=_cmd_sw_array)

    p = sub.add_parser("decompose", help="decomposition into indecomposables")
    p.add_argument("input")
    common(p, fmt=None)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("canonical", help="canonical orbit representative")
    p.add_argument("input")
    common(p, fmt=None)
    p.set_defaults(func=_cmd_canonical)

    p = sub.add_parser("same-orbit", help="whether two points share an orbit")
    p.add_argument("first")
    p.add_argument("second")
    common(p, fmt=None)
    p.set_defaults(func=_cmd_same_orbit)

    p = sub.add_parser("degenerates", help="whether the first orbit degenerates to the second")
    p.add_argument("first")
    p.add_argument("second")
    common(p, fmt=None)
    p.set_defaults(func=_cmd_degenerates)

    p = sub.add_parser("orbits", help="orbit census for a shape")
    p.add_argument("--n", type=int, required=True)
    common(p, fmt=("json", "csv", "dot"))
    p.set_defaults(func=_cmd_orbits)

    p = sub.add_parser("poset", help="degeneration poset")
    p.add_argument("--n", type=int, required=True)
    common(p, fmt=("json", "dot"))
    p.set_defaults(func=_cmd_poset)

    p = sub.add_parser("schubert", help="permutation data: length, smoothness, grids")
    p.add_argument("--w", required=True)
    common(p, fmt=None)
    p.set_defaults(func=_cmd_schubert)

    p = sub.add_parser("flat-scan", help="flat-locus scan over all orbits (CSV)")
    p.add_argument("--w", required=True)
    p.add_argument("--qs", default=None)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--seed", type=int, default=0)
    common(p, fmt=None)
    p.set_defaults(func=_cmd_flat_scan)

    p = sub.add_parser("hom-report", help="Hom-scheme complete-intersection audit")
    p.add_argument("--w", required=True)
    p.add_argument("--orbit", required=True, help="orbit id, or 'identity' / 'zero'")
    p.add_argument("--qs", default=None)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--seed", type=int, default=0)
    common(p, fmt=None)
    p.set_defaults(func=_cmd_hom_report)

    p = sub.add_parser("validate-array", help="check a candidate south-west array")
    p.add_argument("input")
    common(p, fmt=None)
    p.set_defaults(func=_cmd_validate_array)

    p = sub.add_parser("count-report", help="orbit counts from independent oracles")
    p.add_argument("--n", type=int, required=True)
    common(p, fmt=None)
    p.set_defaults(func=_cmd_count_report)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except (GridQuiverError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
