"""Command-line interface.

Reads a JSON run configuration, computes the requested invariants, and prints
a report as text, JSON (schema 1), or Graphviz DOT (graded root only).

Exit codes: 0 success, 2 invalid input or configuration, 3 internal
verification failure (a cross-check or certified identity did not hold).
"""

from __future__ import annotations

import argparse
import json
import sys

from .curves import Curve, by_name
from .hilbert import (
    hilbert_from_alexander,
    hilbert_table,
    motivic_pm,
    poincare_P,
    weight_table,
)
from .lattice import Rectangle
from .lattice_homology import (
    GradedRoot,
    euler_characteristic,
    graded_root,
    hat_homology,
    lattice_homology,
)
from .semigroup import (
    ValueSemigroup,
    delta,
    explicit_semigroup,
    from_numerical_generators,
    is_gorenstein,
    wedge,
)
from .series import parse_poly
from .spectral import (
    FilteredPages,
    bold_pe1,
    hfl_ranks,
    k_table,
    pe_series,
    working_rectangle,
)

SCHEMA_VERSION = 1

EMIT_SECTIONS = (
    "semigroup",
    "hilbert",
    "homology",
    "root",
    "hat",
    "pages",
    "pe",
    "bold",
    "motivic",
    "poincare",
    "hfl",
)


class InputError(Exception):
    pass


def load_semigroup(cfg: dict) -> ValueSemigroup:
    kind = cfg.get("type")
    if kind == "named":
        try:
            return by_name(cfg["name"]).semigroup
        except KeyError as e:
            raise InputError(f"unknown curve name {cfg.get('name')!r}") from e
    if kind == "numerical":
        gens = cfg.get("generators")
        if not isinstance(gens, list) or not gens:
            raise InputError("'numerical' input needs a generators list")
        try:
            return from_numerical_generators(gens)
        except ValueError as e:
            raise InputError(str(e)) from e
    if kind == "semigroup":
        try:
            return explicit_semigroup(
                int(cfg["r"]),
                cfg["conductor"],
                cfg["box"],
                bool(cfg.get("plane", False)),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise InputError(f"bad explicit semigroup: {e}") from e
    if kind == "wedge":
        parts = cfg.get("parts")
        if not isinstance(parts, list) or len(parts) < 2:
            raise InputError("'wedge' input needs at least two parts")
        return wedge([load_semigroup(p) for p in parts])
    if kind == "plane_alexander":
        try:
            r = int(cfg["r"])
            tvars = tuple(f"t{i + 1}" for i in range(r))
            dpoly = parse_poly(cfg["delta"], tvars)
            inter = cfg.get("intersections", [[0] * r] * r)
            hi = tuple(cfg.get("rect", [12] * r))
            _, S = hilbert_from_alexander(
                dpoly, inter, Rectangle((0,) * r, hi)
            )
            return S
        except (KeyError, TypeError, ValueError) as e:
            raise InputError(f"bad Alexander input: {e}") from e
    raise InputError(f"unknown input type {kind!r}")


def root_to_dot(root: GradedRoot) -> str:
    lines = ["digraph graded_root {", "  rankdir=BT;"]
    for n, k in root.vertices:
        rep = root.component_points[(n, k)]
        lines.append(
            f'  "v_{n}_{k}" [label="n={n} rep={list(rep)}"];'
        )
    for (n1, k1), (n2, k2) in root.edges:
        lines.append(f'  "v_{n1}_{k1}" -> "v_{n2}_{k2}";')
    lines.append("}")
    return "\n".join(lines)


def run(
    cfg: dict,
    n_max: int,
    t_max: int | None,
    weights=None,
    emit=("all",),
    check_only: bool = False,
) -> dict:
    S = load_semigroup(cfg)
    r = S.r
    if weights is not None:
        if len(weights) != r or any(x <= 0 for x in weights):
            raise InputError(
                f"--weights needs {r} positive integers for this input"
            )
    wanted = set(EMIT_SECTIONS) if "all" in emit else set(emit)
    unknown = wanted - set(EMIT_SECTIONS)
    if unknown:
        raise InputError(f"unknown emit sections: {sorted(unknown)}")
    pad = max(2, n_max + 2)
    rect = Rectangle((0,) * r, tuple(x + pad for x in S.conductor))
    h = hilbert_table(S, rect)
    w = weight_table(h)
    report: dict = {
        "schema": SCHEMA_VERSION,
        "n_max": n_max,
        "weights": list(weights) if weights else [1] * r,
        "sections": {},
    }
    sec = report["sections"]
    if "semigroup" in wanted:
        sec["semigroup"] = {
            "r": r,
            "conductor": list(S.conductor),
            "delta": delta(S, h),
            "gorenstein": is_gorenstein(S, h),
            "plane": S.plane,
            "box": sorted(sorted(map(list, S.box_elements))),
        }
    if "hilbert" in wanted:
        box = S.box_rectangle()
        sec["hilbert"] = {
            "points": [
                {"l": list(l), "h": h(l), "w": w(l)} for l in box.points()
            ],
            "m_w": w.m_w,
        }
    if "homology" in wanted:
        lh = lattice_homology(w, n_max)
        eu, _ = euler_characteristic(w, lh)
        sec["homology"] = {
            "modules": [str(m) for m in lh.modules],
            "stabilized": lh.stabilized,
            "euler": eu,
            "torsion": [
                {"b": b, "n": n, "factors": list(t)}
                for b, n, t in lh.torsion_report
            ],
        }
    if "root" in wanted:
        root = graded_root(w, n_max)
        sec["root"] = {
            "m_w": root.m_w,
            "component_counts": {
                str(n): c for n, c in sorted(root.component_counts.items())
            },
            "dot": root_to_dot(root),
        }
    if "hat" in wanted:
        hat = hat_homology(w)
        sec["hat"] = {
            "ranks": [
                {"b": b, "n": n, "rank": rk}
                for (b, n), rk in sorted(hat.ranks.items())
            ],
            "euler": hat.euler(),
        }
    if "pages" in wanted:
        wrect = working_rectangle(w, n_max)
        out = []
        for n in range(w.m_w, n_max + 1):
            fp = FilteredPages(w, n, wrect, weights)
            out.append(
                {
                    "n": n,
                    "E1": _page_json(fp.page(1)),
                    "Einf": _page_json(fp.infinity()),
                    "k": fp.k_invariant(),
                }
            )
        sec["pages"] = out
    if "pe" in wanted:
        pe1 = pe_series(w, n_max, k=1, weights=weights)
        peinf = pe_series(w, n_max, k=None, weights=weights)
        sec["pe"] = {
            "PE1": str(pe1.reduce()),
            "PEinf": str(peinf.reduce()),
            "truncated": pe1.truncated or peinf.truncated,
            "k_by_level": {
                str(n): k
                for n, k in k_table(w, w.m_w, n_max, weights).items()
            },
        }
    if "bold" in wanted:
        sec["bold"] = {"PE1": str(bold_pe1(w, h).reduce())}
    if "motivic" in wanted:
        sec["motivic"] = {"Pm": str(motivic_pm(h))}
    if "poincare" in wanted:
        sec["poincare"] = {"P": str(poincare_P(h))}
    if "hfl" in wanted:
        cap = t_max if t_max is not None else sum(S.conductor)
        tables = []
        for l in Rectangle((0,) * r, S.conductor).points():
            if sum(l) > cap:
                continue
            t = hfl_ranks(w, h, l)
            if t["ranks"]:
                tables.append(
                    {
                        "l": list(l),
                        "label": t["label"],
                        "ranks": {str(m): rk for m, rk in t["ranks"].items()},
                    }
                )
        sec["hfl"] = tables
    if check_only:
        report["sections"] = {}
        report["checked"] = sorted(wanted)
    return report


def _page_json(page: dict) -> list[dict]:
    return [
        {"p": p, "q": q, "rank": rk}
        for (p, q), rk in sorted(page.items())
    ]


def render_text(report: dict) -> str:
    lines = [f"schema {report['schema']}  n_max={report['n_max']}"]
    for name, data in report.get("sections", {}).items():
        lines.append(f"[{name}]")
        lines.append(json.dumps(data, indent=2, sort_keys=True))
    if "checked" in report:
        lines.append("checks passed: " + ", ".join(report["checked"]))
    return "\n".join(lines)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(
        prog="curvelattice",
        description=(
            "Filtered lattice homology of isolated curve singularities "
            "from combinatorial input"
        ),
    )
    ap.add_argument("--input", required=True, help="JSON run configuration")
    ap.add_argument("--n-max", type=int, default=4, dest="n_max")
    ap.add_argument("--t-max", type=int, default=None, dest="t_max")
    ap.add_argument(
        "--weights", default=None, help="comma-separated filtration weights"
    )
    ap.add_argument(
        "--emit",
        default="all",
        help="comma-separated sections: " + ", ".join(EMIT_SECTIONS),
    )
    ap.add_argument("--format", choices=("text", "json", "dot"), default="text")
    ap.add_argument("--check-only", action="store_true", dest="check_only")
    args = ap.parse_args(argv)

    try:
        with open(args.input, "r", encoding="utf-8") as fh:
            cfg = json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        print(f"error: cannot read input: {e}", file=sys.stderr)
        return 2

    weights = None
    if args.weights:
        try:
            weights = tuple(int(x) for x in args.weights.split(","))
        except ValueError:
            print("error: --weights must be comma-separated integers",
                  file=sys.stderr)
            return 2
    emit = tuple(x.strip() for x in args.emit.split(",") if x.strip())
    if args.format == "dot" and "root" not in emit and "all" not in emit:
        print("error: --format dot requires the root section", file=sys.stderr)
        return 2

    try:
        report = run(
            cfg, args.n_max, args.t_max, weights, emit, args.check_only
        )
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (AssertionError, ArithmeticError) as e:
        print(f"verification failure: {e}", file=sys.stderr)
        return 3

    if args.format == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
    elif args.format == "dot":
        dot = report["sections"].get("root", {}).get("dot")
        if dot is None:
            print("error: no root section in report", file=sys.stderr)
            return 2
        print(dot)
    else:
        print(render_text(report))
    return 0


if __name__ == "__main__":
    sys.exit(main())
