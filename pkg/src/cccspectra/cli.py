"""Command-line front end.

    cccspectra spectra  --family d2n --n 5 --matrix A
    cccspectra energies --family sd8n --n 2
    cccspectra verify   --families all --max-n 40 --max-m 15
    cccspectra table    --family d2n --n-from 3 --n-to 14 --format md
    cccspectra graph    --family q4m --m 6 --export edges

Exit codes: 0 success/agreement, 2 invalid input, 3 brute force disagrees
with the closed forms.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .ccc import AbelianGroup, build_ccc, complete_union_shape
from .closed_forms import (Matrix, UnsupportedParams, classify_closed, classify_from_energies,
                           closed_energies, closed_spectrum, energy_ordering, ordering_of)
from .groups import Family, GroupSpec, InvalidParameters
from .spectra import energy_report, format_rational, spectra_of_union
from .verify import sweep

EXIT_OK, EXIT_INVALID, EXIT_DISAGREE = 0, 2, 3
FORMATS = ("json", "csv", "md", "text")


class CliError(Exception):
    pass


def _spec(family: str, n, m) -> GroupSpec:
    try:
        return GroupSpec(Family.parse(family), n=n, m=m)
    except (ValueError, InvalidParameters) as exc:
        raise CliError(str(exc)) from None


def _graph(spec: GroupSpec):
    try:
        return build_ccc(spec)
    except AbelianGroup as exc:
        raise CliError(str(exc)) from None


def _approx(q) -> str:
    return f"{float(q):.6f}"


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def _csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _md(header: list[str], rows: list[list]) -> str:
    esc = lambda s: str(s).replace("|", "\\|")
    out = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    out += ["| " + " | ".join(esc(c) for c in row) + " |" for row in rows]
    return "\n".join(out) + "\n"


def _text(header: list[str], rows: list[list]) -> str:
    return "\n".join("\t".join(str(c) for c in r) for r in [header] + rows) + "\n"


def _render_rows(fmt: str, header: list[str], rows: list[list]) -> str:
    if fmt == "json":
        return _dump([dict(zip(header, r)) for r in rows]) + "\n"
    return {"csv": _csv, "md": _md, "text": _text}[fmt](header, rows)


# --- commands ----------------------------------------------------------------

def cmd_spectra(args) -> tuple[str, int]:
    spec = _spec(args.family, args.n, args.m)
    shape = complete_union_shape(_graph(spec))
    brute = dict(zip(Matrix, spectra_of_union(shape)))
    wanted = [Matrix(args.matrix)] if args.matrix else list(Matrix)
    rows, agree_all = [], True
    for w in wanted:
        try:
            closed = closed_spectrum(spec, w)
        except UnsupportedParams as exc:
            raise CliError(str(exc)) from None
        agree = closed == brute[w]
        agree_all &= agree
        rows.append((w, brute[w], closed, agree))
    code = EXIT_OK if agree_all else EXIT_DISAGREE

    if args.format == "json":
        doc = {"group": spec.label, "shape": str(shape), "spectra": {
            w.value: {"brute": b.to_json_obj(), "closed": c.to_json_obj(), "agree": ok}
            for w, b, c, ok in rows}}
        if args.approx:
            for w, b, _, _ in rows:
                doc["spectra"][w.value]["approximate"] = [
                    {"value": _approx(v), "mult": k} for v, k in b.entries]
        return _dump(doc) + "\n", code

    def line(w, b, c, ok):
        body = f"{b} | AGREE" if ok else f"{b} | {c} | DISAGREE"
        if args.approx:
            body += " | approx " + ", ".join(f"{_approx(v)}^{k}" for v, k in b.entries)
        return body

    if args.format == "text":
        if len(rows) == 1:
            return line(*rows[0]) + "\n", code
        return "".join(f"{w.value}: {line(w, b, c, ok)}\n" for w, b, c, ok in rows), code
    header = ["group", "matrix", "brute", "closed", "verdict"]
    table = [[spec.label, w.value, str(b), str(c), "AGREE" if ok else "DISAGREE"]
             for w, b, c, ok in rows]
    return _render_rows(args.format, header, table), code


def _energy_fields(spec: GroupSpec, shape) -> dict:
    r = energy_report(shape)
    order = ordering_of(r)
    return {
        "group": spec.label,
        "shape": str(shape),
        "vertices": r.vertex_count,
        "edges": r.edge_count,
        "E": format_rational(r.E),
        "LE": format_rational(r.LE),
        "LE_plus": format_rational(r.LE_plus),
        "ordering": order.code if order else "unpatterned",
        "classification": str(classify_from_energies(r)),
    }, r


def _closed_verdict(spec: GroupSpec, r) -> list[str]:
    """Which closed-form statements the brute-force report contradicts."""
    bad = []
    if closed_energies(spec) != r:
        bad.append("energies")
    try:
        if energy_ordering(spec) != ordering_of(r):
            bad.append("ordering")
    except UnsupportedParams:
        bad.append("ordering")
    try:
        if classify_closed(spec) != classify_from_energies(r):
            bad.append("classification")
    except UnsupportedParams:
        bad.append("classification")
    return bad


def cmd_energies(args) -> tuple[str, int]:
    spec = _spec(args.family, args.n, args.m)
    shape = complete_union_shape(_graph(spec))
    doc, r = _energy_fields(spec, shape)
    bad = _closed_verdict(spec, r)
    doc["closed_forms"] = "AGREE" if not bad else "DISAGREE: " + ", ".join(bad)
    if args.approx:
        doc["E_approx"], doc["LE_approx"], doc["LE_plus_approx"] = (
            _approx(r.E), _approx(r.LE), _approx(r.LE_plus))
    code = EXIT_DISAGREE if bad else EXIT_OK
    if args.format == "json":
        return _dump(doc) + "\n", code
    if args.format == "text":
        labels = {"vertices": "|V|", "edges": "|E|", "LE_plus": "LE+"}
        return "".join(f"{labels.get(k, k)}: {v}\n" for k, v in doc.items()), code
    return _render_rows(args.format, list(doc), [list(doc.values())]), code


def _families(text: str) -> list[Family]:
    if text.strip().lower() == "all":
        return list(Family)
    try:
        return [Family.parse(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise CliError(str(exc)) from None


def cmd_verify(args) -> tuple[str, int]:
    fams = _families(args.families)
    if not fams:
        raise CliError("no families given")
    if args.max_n < 2 or (args.max_m is not None and args.max_m < 2):
        raise CliError("--max-n and --max-m must be at least 2")
    rep = sweep(fams, args.max_n, args.max_m, args.include_u_m2, args.workers)
    code = EXIT_OK if rep.ok else EXIT_DISAGREE
    if args.format == "json":
        return rep.to_json() + "\n", code
    if args.format == "text":
        return rep.to_text(), code
    header = ["group", "category", "detail"]
    rows = [[m.spec.label, m.category.value, m.detail] for m in rep.mismatches]
    return _render_rows(args.format, header, rows), code


def _table_specs(args) -> list[GroupSpec]:
    fam = Family.parse(args.family)
    n_rng = range(args.n_from, args.n_to + 1) if args.n_from is not None else None
    m_rng = range(args.m_from, args.m_to + 1) if args.m_from is not None else None
    if fam is Family.DICYCLIC:
        if m_rng is None:
            raise CliError("q4m needs --m-from and --m-to")
        specs = [(None, m) for m in m_rng]
    elif fam is Family.UMETA:
        if n_rng is None or m_rng is None:
            raise CliError("u needs --n-from/--n-to and --m-from/--m-to")
        specs = [(n, m) for n in n_rng for m in m_rng]
    else:
        if n_rng is None:
            raise CliError(f"{fam.value} needs --n-from and --n-to")
        specs = [(n, None) for n in n_rng]
    if not specs:
        raise CliError("empty parameter range")
    return [_spec(args.family, n, m) for n, m in specs]


def cmd_table(args) -> tuple[str, int]:
    try:
        Family.parse(args.family)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    header = ["group", "n", "m", "shape", "spectrum_A", "spectrum_L", "spectrum_Q",
              "vertices", "edges", "E", "LE", "LE_plus", "ordering", "classification",
              "closed_forms"]
    if args.approx:
        header += ["E_approx", "LE_approx", "LE_plus_approx"]
    rows = []
    for spec in _table_specs(args):
        shape = complete_union_shape(_graph(spec))
        A, L, Q = spectra_of_union(shape)
        doc, r = _energy_fields(spec, shape)
        bad = _closed_verdict(spec, r)
        if any(closed_spectrum(spec, w) != s for w, s in zip(Matrix, (A, L, Q))):
            bad.insert(0, "spectra")
        row = [spec.label, spec.n if spec.n is not None else "", spec.m if spec.m is not None else "",
               str(shape), str(A), str(L), str(Q), r.vertex_count, r.edge_count,
               doc["E"], doc["LE"], doc["LE_plus"], doc["ordering"], doc["classification"],
               "AGREE" if not bad else "DISAGREE: " + ", ".join(bad)]
        if args.approx:
            row += [_approx(r.E), _approx(r.LE), _approx(r.LE_plus)]
        rows.append(row)
    return _render_rows(args.format, header, rows), EXIT_OK


def cmd_graph(args) -> tuple[str, int]:
    g = _graph(_spec(args.family, args.n, args.m))
    if args.export == "edges":
        return g.to_edge_list(), EXIT_OK
    return g.to_adjacency_json() + "\n", EXIT_OK


# --- argument parsing ----------------------------------------------------------

def _add_group_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", required=True, help="d2n, q4m, u, v8n or sd8n")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cccspectra",
        description="Spectra and energies of commuting conjugacy class graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectra", help="brute-force and closed-form spectra side by side")
    _add_group_args(p)
    p.add_argument("--matrix", choices=[w.value for w in Matrix])
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--approx", action="store_true", help="append decimal values marked approximate")
    p.set_defaults(func=cmd_spectra)

    p = sub.add_parser("energies", help="|V|, |E|, E, LE, LE+, ordering and classification")
    _add_group_args(p)
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--approx", action="store_true")
    p.set_defaults(func=cmd_energies)

    p = sub.add_parser("verify", help="sweep brute force against every closed form")
    p.add_argument("--families", default="all", help="comma-separated family names or 'all'")
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--max-m", type=int, default=12)
    p.add_argument("--include-u-m2", action="store_true",
                   help="also check the abelian U(n,2) rows and report them")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="one row per parameter value")
    p.add_argument("--family", required=True)
    p.add_argument("--n-from", type=int)
    p.add_argument("--n-to", type=int)
    p.add_argument("--m-from", type=int)
    p.add_argument("--m-to", type=int)
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--approx", action="store_true")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("graph", help="export the CCC graph")
    _add_group_args(p)
    p.add_argument("--export", choices=("json", "edges"), default="json")
    p.set_defaults(func=cmd_graph)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "n_from", None) is not None and args.n_to is None:
        args.n_to = args.n_from
    if getattr(args, "m_from", None) is not None and args.m_to is None:
        args.m_to = args.m_from
    try:
        out, code = args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
