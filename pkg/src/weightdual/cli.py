"""Command-line front end.

Subcommands cover the whole pipeline: weight-system reduction and dual
search, magic-square certificates, the polytope constructions, K3 rank
invariants, and batch verification of the bundled tables.  Everything
prints UTF-8 text by default and JSON with --json.

Exit codes: 0 success, 1 a requested check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .catalog import format_monomial, parse_monomial, table_ids, verify_table
from .duality import (
    DualityCertificate,
    dual_weights,
    is_self_dual,
)
from .errors import (
    GraphUnavailableError,
    InputError,
    InvalidLatticeError,
    UnsupportedCaseError,
)
from .k3 import check_identities, picard_dual_graph
from .polytopes import (
    LatticePolytope,
    all_lattice_points,
    are_lattice_equivalent,
    check_dual_correspondence,
    decompose_point,
    full_newton_polytope,
    is_reflexive,
    lattice_points,
    monomials_to_polytope,
    polar_dual,
    polytope_from_json_dict,
    polytope_to_json_dict,
    weighted_simplex,
)
from .weights import (
    WeightSystem,
    parse_weight_system,
    reduce_weights,
    weight_system_from_json,
)

_LOWER_NAMES = ("x", "y", "z", "u", "v")


# ---------------------------------------------------------------------------
# argument helpers


def _weight_arg(text: str) -> WeightSystem:
    """A weight system from "2,3,6;12", inline JSON, or a JSON file."""
    text = text.strip()
    if text.startswith("{"):
        return weight_system_from_json(text)
    if ";" not in text and Path(text).is_file():
        return weight_system_from_json(Path(text).read_text())
    return parse_weight_system(text)


def _load_polytope(source: str) -> LatticePolytope:
    """A polytope from a JSON file, or stdin when source is "-"."""
    if source == "-":
        raw = sys.stdin.read()
    else:
        raw = Path(source).read_text()
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise InputError(f"bad polytope JSON in {source}: {exc}") from None
    return polytope_from_json_dict(data)


def _vars_arg(spec: str | None) -> tuple[str, ...] | None:
    if spec is None:
        return None
    names = tuple(s.strip() for s in spec.split(","))
    if any(not s for s in names):
        raise InputError(f"bad variable list {spec!r}")
    return names


def _parse_monomial_list(text: str, w: WeightSystem, names) -> list[tuple[int, ...]]:
    parts = [s.strip() for s in text.split(";") if s.strip()]
    if not parts:
        raise InputError("empty monomial list")
    return [parse_monomial(s, w, names) for s in parts]


def _emit(args, payload, text_lines) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _square_rows_text(cert: DualityCertificate) -> list[str]:
    rows = cert.square.matrix.entries
    n = len(rows)
    lines = []
    for row in rows:
        line = "  " + " ".join(f"{x:3d}" for x in row)
        if n <= len(_LOWER_NAMES):
            exps = (0,) + tuple(row)  # rows carry no X_0 factor
            line += "   " + format_monomial(exps, ("?",) + _LOWER_NAMES[:n])
        lines.append(line)
    return lines


def _cert_json(cert: DualityCertificate, verbose: bool) -> dict:
    d = cert.square.partner.to_json_dict()
    d["primitive"] = cert.primitive
    d["strongly_dual"] = cert.strongly_dual
    if verbose:
        d["multiplicity"] = cert.multiplicity
        d["square"] = [list(r) for r in cert.square.matrix.entries]
    return d


def _matching_certs(w: WeightSystem, partner_text: str | None):
    certs = dual_weights(w)
    if partner_text is None:
        return certs
    p = _weight_arg(partner_text)
    want = (tuple(sorted(p.weights)), p.degree)
    return tuple(
        c
        for c in certs
        if (tuple(sorted(c.square.partner.weights)), c.square.partner.degree) == want
    )


# ---------------------------------------------------------------------------
# subcommands


def _cmd_reduce(args) -> int:
    w = reduce_weights(_weight_arg(args.weights))
    _emit(args, w.to_json_dict(), [str(w)])
    return 0


def _cmd_dual(args) -> int:
    w = _weight_arg(args.weights)
    certs = dual_weights(w)
    payload = [_cert_json(c, args.verbose) for c in certs]
    lines = []
    if not certs:
        lines.append("no dual weight systems")
    for c in certs:
        tags = ["strong" if c.strongly_dual else "weak"]
        if not c.primitive:
            tags.append("non-primitive")
        if args.verbose:
            tags.append(f"multiplicity {c.multiplicity}")
        lines.append(f"{c.square.partner}  [{', '.join(tags)}]")
    _emit(args, payload, lines)
    return 0


def _cmd_selfdual(args) -> int:
    w = _weight_arg(args.weights)
    ok = is_self_dual(w)
    _emit(
        args,
        {"weights": list(w.weights), "degree": w.degree, "self_dual": ok},
        [f"{w} self-dual: {'yes' if ok else 'no'}"],
    )
    return 0 if ok else 1


def _cmd_magic(args) -> int:
    w = _weight_arg(args.weights)
    certs = _matching_certs(w, args.partner)
    if not certs:
        print("no matching certificate", file=sys.stderr)
        return 1
    payload = [_cert_json(c, True) for c in certs]
    lines = []
    for c in certs:
        tags = ["strong" if c.strongly_dual else "weak"]
        if not c.primitive:
            tags.append("non-primitive")
        lines.append(f"partner {c.square.partner}  [{', '.join(tags)}]")
        lines.extend(_square_rows_text(c))
    _emit(args, payload, lines)
    return 0


def _polytope_out(args, p: LatticePolytope) -> int:
    d = polytope_to_json_dict(p)
    lines = [f"dim {p.dim}, {len(p.vertices)} vertices"]
    lines += ["  " + " ".join(str(x) for x in v) for v in d["vertices"]]
    _emit(args, d, lines)
    return 0


def _cmd_simplex(args) -> int:
    w = _weight_arg(args.weights)
    p, _ = weighted_simplex(w)
    return _polytope_out(args, p)


def _cmd_newton(args) -> int:
    w = _weight_arg(args.weights)
    if args.monomials is None:
        p = full_newton_polytope(w)
    else:
        names = _vars_arg(args.vars)
        exps = _parse_monomial_list(args.monomials, w, names)
        p = monomials_to_polytope(exps, w)
    return _polytope_out(args, p)


def _cmd_polar(args) -> int:
    p = _load_polytope(args.polytope)
    return _polytope_out(args, polar_dual(p))


def _cmd_reflexive(args) -> int:
    p = _load_polytope(args.polytope)
    rep = is_reflexive(p)
    detail = "" if rep.reason is None else f": {rep.reason}"
    _emit(
        args,
        {"reflexive": rep.reflexive, "reason": rep.reason},
        [f"reflexive: {'yes' if rep.reflexive else 'no'}{detail}"],
    )
    return 0 if rep.reflexive else 1


def _cmd_points(args) -> int:
    p = _load_polytope(args.polytope)
    fc = lattice_points(p)
    by_dim = {}
    for f in fc.faces:
        by_dim.setdefault(f.dim, [0, 0])
        by_dim[f.dim][0] += 1
        by_dim[f.dim][1] += f.l_star
    payload = {
        "total": fc.l,
        "interior": fc.l_star,
        "faces": [
            {"dim": d, "count": c, "interior_points": ip}
            for d, (c, ip) in sorted(by_dim.items())
        ],
    }
    lines = [f"{fc.l} lattice points, {fc.l_star} interior"]
    for d, (c, ip) in sorted(by_dim.items()):
        lines.append(f"  dim {d}: {c} faces, {ip} face-interior points")
    if args.verbose:
        pts = all_lattice_points(p)
        payload["points"] = [list(pt) for pt in pts]
        lines += ["  " + " ".join(str(x) for x in pt) for pt in pts]
    _emit(args, payload, lines)
    return 0


def _cmd_ranks(args) -> int:
    p = _load_polytope(args.polytope)
    rep = check_identities(p)
    r = rep.ranks
    payload = {
        "lg": r.rk_lg,
        "ld": r.rk_ld,
        "l0": r.rk_l0,
        "total": r.total,
        "edge_sum": rep.edge_sum,
        "sum20": rep.sums_to_20,
        "sum24": rep.sums_to_24,
    }
    lines = [
        f"lg={r.rk_lg} ld={r.rk_ld} l0={r.rk_l0} total={r.total}"
        f" edge_sum={rep.edge_sum}"
    ]
    if not rep.ok:
        lines.append("identity check failed")
    _emit(args, payload, lines)
    return 0 if rep.ok else 1


def _cmd_graph(args) -> int:
    p = _load_polytope(args.polytope)
    g = picard_dual_graph(p)
    lines = [
        f"{len(g.nodes)} nodes (total multiplicity {g.total_multiplicity}),"
        f" {len(g.edges)} edges"
    ]
    for i, node in enumerate(g.nodes):
        pt = ",".join(str(x) for x in node.point)
        lines.append(f"  {i}: ({pt}) x{node.multiplicity}")
    lines.append(
        "  edges: " + " ".join(f"{a}-{b}" for a, b in g.edges)
        if g.edges
        else "  no edges"
    )
    _emit(args, g.to_json_dict(), lines)
    return 0


def _cmd_equiv(args) -> int:
    p = _load_polytope(args.first)
    q = _load_polytope(args.second)
    u = are_lattice_equivalent(p, q)
    if u is None:
        _emit(args, {"equivalent": False, "matrix": None}, ["not equivalent"])
        return 1
    rows = [list(r) for r in u.entries]
    lines = ["equivalent, transform:"]
    lines += ["  " + " ".join(f"{x:3d}" for x in row) for row in rows]
    _emit(args, {"equivalent": True, "matrix": rows}, lines)
    return 0


def _cmd_decompose(args) -> int:
    p = _load_polytope(args.polytope)
    try:
        target = tuple(int(s) for s in args.point.split(","))
    except ValueError:
        raise InputError(f"bad point {args.point!r}") from None
    parts = decompose_point(p, args.k, target)
    if parts is None:
        _emit(args, {"summands": None}, ["no decomposition"])
        return 1
    payload = {"summands": [list(pt) for pt in parts]}
    lines = [" + ".join("(" + ",".join(str(x) for x in pt) + ")" for pt in parts)]
    _emit(args, payload, lines)
    return 0


def _cmd_correspond(args) -> int:
    w = _weight_arg(args.weights)
    certs = _matching_certs(w, args.partner)
    if not certs:
        print("no matching certificate", file=sys.stderr)
        return 1
    payload = []
    lines = []
    all_ok = True
    for c in certs:
        wb = c.square.partner
        rep = check_dual_correspondence(w, wb, c.square)
        failed = rep.failed()
        all_ok = all_ok and not failed
        checks = {
            name: name not in failed
            for name in rep.__dataclass_fields__
        }
        payload.append(
            {"partner": wb.to_json_dict(), "ok": rep.ok, "checks": checks}
        )
        status = "ok" if rep.ok else "FAIL " + ",".join(failed)
        lines.append(f"partner {wb}: {status}")
        if args.verbose:
            lines += [
                f"  {name}: {'ok' if good else 'FAIL'}"
                for name, good in checks.items()
            ]
    _emit(args, payload, lines)
    return 0 if all_ok else 1


def _cmd_verify(args) -> int:
    if args.table_pos and args.table and args.table_pos != args.table:
        raise InputError(
            f"conflicting tables {args.table_pos!r} and {args.table!r}"
        )
    chosen = args.table_pos or args.table
    ids = (chosen,) if chosen else table_ids()
    reports = [verify_table(tid) for tid in ids]
    payload = [
        {
            "table": rep.table_id,
            "ok": rep.ok,
            "rows": [
                {
                    "label": row.label,
                    "status": row.status,
                    "failed": list(row.failed()),
                }
                for row in rep.rows
            ],
        }
        for rep in reports
    ]
    lines = []
    for rep in reports:
        lines.append(rep.render())
    _emit(args, payload, lines)
    return 0 if all(rep.ok for rep in reports) else 1


# ---------------------------------------------------------------------------
# parser


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weightdual",
        description="Dual weight systems, magic squares, and reflexive polytopes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.add_argument(
            "--verbose", action="store_true", help="include extra detail"
        )
        return p

    p = add("reduce", _cmd_reduce, "reduce a weight system to lowest terms")
    p.add_argument("weights", help='compact form "2,3,6;12" or JSON')

    p = add("dual", _cmd_dual, "list dual weight systems up to equivalence")
    p.add_argument("weights")

    p = add("selfdual", _cmd_selfdual, "test whether a weight system is self-dual")
    p.add_argument("weights")

    p = add("magic", _cmd_magic, "print certificate squares for each dual")
    p.add_argument("weights")
    p.add_argument("partner", nargs="?", help="restrict to this partner system")

    p = add("simplex", _cmd_simplex, "weighted simplex in the monomial lattice")
    p.add_argument("weights")

    p = add("newton", _cmd_newton, "Newton polytope of degree-h monomials")
    p.add_argument("weights")
    p.add_argument(
        "monomials",
        nargs="?",
        help='semicolon-separated monomials, e.g. "W^12;X^2Y^2" (default: all)',
    )
    p.add_argument("--vars", help="comma-separated variable names (default W,X,Y,Z)")

    p = add("polar", _cmd_polar, "polar dual of a polytope")
    p.add_argument("polytope", help='polytope JSON file, or "-" for stdin')

    p = add("reflexive", _cmd_reflexive, "test reflexivity")
    p.add_argument("polytope")

    p = add("points", _cmd_points, "lattice point census by face")
    p.add_argument("polytope")

    p = add("ranks", _cmd_ranks, "K3 rank triple and the 20/24 identities")
    p.add_argument("polytope")

    p = add("graph", _cmd_graph, "divisor graph on the dual 1-skeleton")
    p.add_argument("polytope")

    p = add("equiv", _cmd_equiv, "search for a lattice equivalence")
    p.add_argument("first")
    p.add_argument("second")

    p = add("decompose", _cmd_decompose, "write a point of k*P as k points of P")
    p.add_argument("polytope")
    p.add_argument("k", type=int)
    p.add_argument("point", help='comma-separated coordinates, e.g. "1,0,-2"')

    p = add("correspond", _cmd_correspond, "run the dual-correspondence checks")
    p.add_argument("weights")
    p.add_argument("partner", nargs="?")

    p = add("verify", _cmd_verify, "verify bundled tables against recomputation")
    p.add_argument(
        "table_pos",
        nargs="?",
        metavar="table",
        help=f"one of: {', '.join(table_ids())} (default: all)",
    )
    p.add_argument("--table", help="alternative way to name the table")

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GraphUnavailableError as exc:
        print(f"graph unavailable: {exc}", file=sys.stderr)
        return 1
    except (InputError, InvalidLatticeError, UnsupportedCaseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
