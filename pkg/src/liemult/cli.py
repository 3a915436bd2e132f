"""Command-line interface.

Commands: check, series, multiplier, psi, lemma-test, verify-bound,
verify-thm13, catalog, report.  Machine-format output is JSON with sorted
keys and no timestamps, so identical inputs give byte-identical reports.

Exit codes: 0 success / all verdicts hold, 1 input or usage error,
2 a violated verdict (or a theorem-contradiction diagnostic), 3 a resource
guard refused the computation.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import algfile, bounds, catalog
from .algebra import LieAlgebra
from .errors import LieError, ResourceLimit
from .fields import QQ, parse_field_spec
from .homology import multiplier_dim
from .words import lemma_defect, psi_image_dim, psi_image_dims

REPORT_FORMAT = "liemult-report-v1"

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VIOLATION = 2
EXIT_RESOURCE = 3


class _Parser(argparse.ArgumentParser):
    """argparse defaults to exit code 2 on usage errors; the contract here
    reserves 2 for violated verdicts, so usage errors exit 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="liemult", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input_args(p, family_ok=False):
        p.add_argument("--file", help="algebra definition file")
        p.add_argument("--name", help="catalog name")
        if family_ok:
            p.add_argument("--family", choices=["filiform", "abelian"])
            p.add_argument("--max-dim", type=int, default=8)
            p.add_argument("--min-dim", type=int, default=3)
        p.add_argument("--field", default=None, help="field for --name/--family (Q or GF(p))")
        p.add_argument("--unsafe-char-2", action="store_true")

    def add_output_args(p):
        p.add_argument("--format", choices=["human", "machine"], default="human")
        p.add_argument("--out", help="write the report here instead of stdout")

    p = sub.add_parser("check", help="parse and validate an algebra definition")
    add_input_args(p)
    add_output_args(p)

    p = sub.add_parser("series", help="lower central series dimensions")
    add_input_args(p)
    add_output_args(p)

    p = sub.add_parser("multiplier", help="dimension of the Schur multiplier")
    add_input_args(p)
    add_output_args(p)

    p = sub.add_parser("psi", help="image dimension of the degree-i tensor map")
    add_input_args(p)
    add_output_args(p)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--mode", choices=["exact", "generators"], default="exact")

    p = sub.add_parser("lemma-test", help="randomized check of the bracket identity")
    add_input_args(p)
    add_output_args(p)
    p.add_argument("--i", type=int, default=None, help="single word degree (default: sweep)")
    p.add_argument("--tuples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("verify-bound", help="evaluate all multiplier bounds")
    add_input_args(p, family_ok=True)
    add_output_args(p)
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("verify-thm13", help="central-ideal inequality over all central ideals")
    add_input_args(p)
    add_output_args(p)

    p = sub.add_parser("catalog", help="list built-in algebras")
    add_output_args(p)

    p = sub.add_parser("report", help="per-dimension bound table for a family")
    add_input_args(p, family_ok=True)
    add_output_args(p)
    p.add_argument("--jobs", type=int, default=1)

    return parser


def _resolve_field(args):
    if getattr(args, "field", None):
        return parse_field_spec(args.field, allow_char_two=args.unsafe_char_2)
    return QQ


def _load_algebra(args) -> tuple[LieAlgebra, str]:
    if getattr(args, "file", None):
        with open(args.file, "r", encoding="utf-8") as fh:
            text = fh.read()
        return algfile.parse_algebra(text, allow_char_two=args.unsafe_char_2), args.file
    if getattr(args, "name", None):
        entry = catalog.get(args.name)
        algebra = entry.algebra
        field = _resolve_field(args)
        if field != QQ:
            algebra = _rebuild_over(algebra, field)
        return algebra, entry.name
    raise LieError("one of --file or --name is required")


def _rebuild_over(L: LieAlgebra, field) -> LieAlgebra:
    from .algebra import build

    consts = [
        (i, j, k, field.element(c.numerator) / field.element(c.denominator))
        for (i, j, k, c) in L.structure_constants()
    ]
    return build(L.n, consts, field=field, labels=L.labels)


def _family_algebra(family: str, n: int, field):
    if family == "filiform":
        return catalog.standard_filiform(n, field=field)
    return catalog.abelian(n, field=field)


def _emit(args, human_text: str, machine_doc) -> None:
    if args.format == "machine":
        payload = json.dumps(machine_doc, sort_keys=True, indent=2) + "\n"
    else:
        payload = human_text if human_text.endswith("\n") else human_text + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def _table(headers: list[str], rows: list[list]) -> str:
    cells = [headers] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = []
    for idx, r in enumerate(cells):
        lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
        if idx == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines)


# -- command handlers ---------------------------------------------------------


def _cmd_check(args) -> int:
    L, name = _load_algebra(args)
    series = L.lower_central_series()
    doc = {
        "format": REPORT_FORMAT,
        "command": "check",
        "algebra": name,
        "field": str(L.field),
        "n": L.n,
        "nilpotent": series.nilpotent,
        "class": series.nilpotency_class,
        "series_dims": list(series.dims()),
        "brackets": len(L.structure_constants()),
    }
    human = (
        f"ok: {name}: dim {L.n} over {L.field}, "
        + (f"nilpotent of class {series.nilpotency_class}" if series.nilpotent else "not nilpotent")
    )
    _emit(args, human, doc)
    return EXIT_OK


def _cmd_series(args) -> int:
    L, name = _load_algebra(args)
    series = L.lower_central_series()
    doc = {
        "format": REPORT_FORMAT,
        "command": "series",
        "algebra": name,
        "dims": list(series.dims()),
        "nilpotent": series.nilpotent,
        "class": series.nilpotency_class,
    }
    human = " ".join(str(d) for d in series.dims())
    if not series.nilpotent:
        human += "  (stabilized: not nilpotent)"
    _emit(args, human, doc)
    return EXIT_OK


def _cmd_multiplier(args) -> int:
    L, name = _load_algebra(args)
    dim = multiplier_dim(L)
    doc = {
        "format": REPORT_FORMAT,
        "command": "multiplier",
        "algebra": name,
        "field": str(L.field),
        "dim_multiplier": dim,
    }
    _emit(args, str(dim), doc)
    return EXIT_OK


def _cmd_psi(args) -> int:
    L, name = _load_algebra(args)
    image = psi_image_dim(L, args.i, mode=args.mode)
    doc = {
        "format": REPORT_FORMAT,
        "command": "psi",
        "algebra": name,
        "i": image.i,
        "dim": image.dim,
        "exact": image.exact,
        "mode": image.mode,
        "tuples_examined": image.tuples_examined,
    }
    kind = "exact" if image.exact else "lower bound"
    _emit(args, f"dim im psi_{image.i} = {image.dim} ({kind}, {image.mode} mode)", doc)
    return EXIT_OK


def _random_vector(L: LieAlgebra, rng: random.Random):
    if L.field is QQ or L.field == QQ:
        return [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(L.n)]
    return [L.field.element(rng.randrange(L.field.characteristic)) for _ in range(L.n)]


def _cmd_lemma_test(args) -> int:
    L, name = _load_algebra(args)
    c = L.nilpotency_class()
    if args.i is not None:
        degrees = [args.i]
    else:
        top = min(c if c is not None else 6, 6)
        degrees = [i for i in range(3, top + 1)]
    rng = random.Random(args.seed)
    checked = 0
    for i in degrees:
        for _ in range(args.tuples):
            xs = [_random_vector(L, rng) for _ in range(i + 1)]
            defect = lemma_defect(L, xs)
            checked += 1
            if any(defect):
                doc = {
                    "format": REPORT_FORMAT,
                    "command": "lemma-test",
                    "algebra": name,
                    "holds": False,
                    "i": i,
                    "counterexample_defect": [str(e) for e in defect],
                }
                _emit(args, f"FAIL: nonzero defect at degree {i}: {defect}", doc)
                return EXIT_VIOLATION
    doc = {
        "format": REPORT_FORMAT,
        "command": "lemma-test",
        "algebra": name,
        "holds": True,
        "degrees": degrees,
        "tuples_per_degree": args.tuples,
        "checked": checked,
    }
    _emit(args, f"ok: defect identically zero on {checked} random tuples (degrees {degrees})", doc)
    return EXIT_OK


def _report_to_row(rep: bounds.BoundReport) -> list:
    def cell(key):
        value, verdict = rep.bounds[key]
        return f"{value} ({verdict})" if value is not None else verdict

    return [
        rep.algebra_id,
        rep.n,
        rep.dim_multiplier,
        cell("main_theorem"),
        cell("nminus2"),
        cell("derived_subalgebra"),
        cell("moneyhun"),
    ]


def _bound_report_for(spec) -> dict:
    family, n, field_spec, allow2, with_ideals = spec
    field = parse_field_spec(field_spec, allow_char_two=allow2)
    L = _family_algebra(family, n, field)
    doc = bounds.bound_report(L, algebra_id=f"{family}-{n}").to_dict()
    if with_ideals:
        doc["central_ideal_records"] = [
            bounds.verify_central_quotient_bound(L, K).to_dict()
            for K in L.central_ideals()
        ]
    return doc


def _sweep_reports(args, with_ideals: bool = False) -> list[dict]:
    field = _resolve_field(args)
    specs = [
        (args.family, n, str(field), args.unsafe_char_2, with_ideals)
        for n in range(max(args.min_dim, 3 if args.family == "filiform" else 1), args.max_dim + 1)
    ]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            return list(pool.map(_bound_report_for, specs))
    return [_bound_report_for(s) for s in specs]


def _dicts_to_reports_exit(docs: list[dict]) -> int:
    for doc in docs:
        for item in doc["bounds"].values():
            if item["verdict"] == bounds.VIOLATED:
                return EXIT_VIOLATION
    return EXIT_OK


def _cmd_verify_bound(args) -> int:
    if getattr(args, "family", None):
        docs = _sweep_reports(args)
        headers = ["algebra", "n", "dim M", "parity bound", "n-2", "derived", "quadratic"]
        rows = []
        for d in docs:
            def cell(key):
                item = d["bounds"][key]
                if item["value"] is None:
                    return item["verdict"]
                return f"{item['value']} ({item['verdict']})"

            rows.append([d["algebra"], d["n"], d["dim_multiplier"], cell("main_theorem"),
                         cell("nminus2"), cell("derived_subalgebra"), cell("moneyhun")])
        doc = {"format": REPORT_FORMAT, "command": "verify-bound", "reports": docs}
        _emit(args, _table(headers, rows), doc)
        return _dicts_to_reports_exit(docs)
    L, name = _load_algebra(args)
    rep = bounds.bound_report(L, algebra_id=name)
    doc = {"format": REPORT_FORMAT, "command": "verify-bound", "reports": [rep.to_dict()]}
    headers = ["algebra", "n", "dim M", "parity bound", "n-2", "derived", "quadratic"]
    _emit(args, _table(headers, [_report_to_row(rep)]), doc)
    return EXIT_VIOLATION if rep.has_violation else EXIT_OK


def _cmd_verify_thm13(args) -> int:
    L, name = _load_algebra(args)
    records = []
    ok = True
    for K in L.central_ideals():
        rec = bounds.verify_central_quotient_bound(L, K)
        records.append(rec)
        ok = ok and rec.holds
    doc = {
        "format": REPORT_FORMAT,
        "command": "verify-thm13",
        "algebra": name,
        "records": [r.to_dict() for r in records],
        "holds": ok,
    }
    headers = ["dim K", "lhs", "rhs", "verdict"]
    rows = [
        [r.dim_k, r.lhs, r.rhs, "holds" + (" (equality)" if r.equality else "") if r.holds else "VIOLATED"]
        for r in records
    ]
    _emit(args, _table(headers, rows), doc)
    return EXIT_OK if ok else EXIT_VIOLATION


def _cmd_catalog(args) -> int:
    rows = []
    docs = []
    for entry in catalog.entries():
        L = entry.algebra
        rows.append([
            entry.name,
            ", ".join(entry.aliases) or "-",
            L.n,
            L.nilpotency_class(),
            entry.known_multiplier_dim if entry.known_multiplier_dim is not None else "-",
        ])
        docs.append({
            "name": entry.name,
            "aliases": list(entry.aliases),
            "n": L.n,
            "class": L.nilpotency_class(),
            "known_multiplier_dim": entry.known_multiplier_dim,
            "provenance": entry.provenance,
        })
    doc = {"format": REPORT_FORMAT, "command": "catalog", "entries": docs}
    _emit(args, _table(["name", "aliases", "n", "class", "known dim M"], rows), doc)
    return EXIT_OK


def _cmd_report(args) -> int:
    if not getattr(args, "family", None):
        args.family = "filiform"
    docs = _sweep_reports(args, with_ideals=True)
    columns = ["n", "dim_multiplier", "main_theorem_bound", "attained", "margin"]
    rows = []
    for d in docs:
        item = d["bounds"]["main_theorem"]
        value = item["value"]
        attained = item["verdict"] == bounds.ATTAINED
        margin = None if value is None else value - d["dim_multiplier"]
        rows.append([d["n"], d["dim_multiplier"],
                     value if value is not None else "-",
                     "yes" if attained else "no",
                     margin if margin is not None else "-"])
    doc = {
        "format": REPORT_FORMAT,
        "command": "report",
        "family": args.family,
        "field": str(_resolve_field(args)),
        "columns": columns,
        "rows": [
            [d["n"], d["dim_multiplier"], d["bounds"]["main_theorem"]["value"],
             d["bounds"]["main_theorem"]["verdict"] == bounds.ATTAINED,
             None if d["bounds"]["main_theorem"]["value"] is None
             else d["bounds"]["main_theorem"]["value"] - d["dim_multiplier"]]
            for d in docs
        ],
        "reports": docs,
    }
    _emit(args, _table(columns, rows), doc)
    return _dicts_to_reports_exit(docs)


_HANDLERS = {
    "check": _cmd_check,
    "series": _cmd_series,
    "multiplier": _cmd_multiplier,
    "psi": _cmd_psi,
    "lemma-test": _cmd_lemma_test,
    "verify-bound": _cmd_verify_bound,
    "verify-thm13": _cmd_verify_thm13,
    "catalog": _cmd_catalog,
    "report": _cmd_report,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    try:
        return _HANDLERS[args.command](args)
    except ResourceLimit as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except LieError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
