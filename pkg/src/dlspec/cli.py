"""Command-line front end.

    dlspec spectrum kite:n=6
    dlspec spectrum --graph6 A_ --format json
    dlspec verify dl1 --n 6..9
    dlspec verify theorem --n 3..10 --format table
    dlspec enumerate --n 8 --shards 4 --out u8.g6
    dlspec plotdata --n 4..10 > gaps.csv

Exit codes: 0 all PASS, 1 any FAIL, 2 any INCONCLUSIVE (no FAIL), 3 usage or
parse error.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .config import DEFAULT_TOLERANCES, Tolerances, enumeration_ceiling
from .enumeration import enumerate_unicyclic, partitioned_enumerate
from .errors import DLSpecError, Disconnected, ParseError, TooLarge, UnknownLemma
from .families import FamilySpec, make_h_graph, make_kite
from .graph import Graph, is_connected
from .graph6 import decode_graph6, encode_graph6
from .lemmas import (
    DEFAULT_SEED,
    LemmaVerdict,
    Status,
    aggregate,
    check_algebraic_connectivity_analogue,
    check_c4_family,
    check_h_vs_kite,
    check_transmission_bound,
    clique_shift_sweep,
    edge_addition_suite,
    extremal_search,
    path_shift_sweep,
    sig12,
)
from .spectra import (
    apsp,
    cycle_radius_closed_form,
    eigen_residual,
    kite_submatrix_bound,
    spectrum,
    write_matrix_csv,
)

EXIT_PASS, EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_USAGE = 0, 1, 2, 3
FORMATS = ("json", "csv", "graph6", "table", "jsonl")


class UsageError(DLSpecError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with status 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    command: str
    n_range: list[int] = field(default_factory=list)
    family: str | None = None
    shards: int = 1
    workers: int = 1
    tolerances: Tolerances = DEFAULT_TOLERANCES
    out: str | None = None
    fmt: str = "table"

    def __post_init__(self) -> None:
        if self.fmt not in FORMATS:
            raise UsageError(f"unknown format {self.fmt!r}")
        ceiling = enumeration_ceiling()
        if any(n > ceiling for n in self.n_range):
            raise TooLarge(f"n range {self.n_range[0]}..{self.n_range[-1]} exceeds ceiling {ceiling}")
        if self.shards < 1 or self.workers < 1:
            raise UsageError("shards and workers must be >= 1")


def parse_range(text: str) -> list[int]:
    """``"6..9"`` -> [6, 7, 8, 9]; ``"7"`` -> [7]."""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError as exc:
        raise ParseError(f"bad n range {text!r}") from exc
    if lo > hi:
        raise ParseError(f"empty n range {text!r}")
    return list(range(lo, hi + 1))


def _graph_from_input(args) -> tuple[Graph, str]:
    if args.graph6:
        return decode_graph6(args.graph6), args.graph6
    if not args.input:
        raise UsageError("give a family spec or --graph6")
    spec = FamilySpec.parse(args.input)
    return spec.build()[0], str(spec)


# -- spectrum ------------------------------------------------------------------


def cmd_spectrum(args, cfg: RunConfig) -> int:
    g, label = _graph_from_input(args)
    if not is_connected(g):
        raise Disconnected(f"{label} is disconnected")
    s = spectrum(g)
    tr = apsp(g).transmissions
    report = s.to_json()
    report["residual"] = max(report["residual"], eigen_residual(g, s.radius, s.vector(0)))
    report.update({"input": label, "graph6": encode_graph6(g).decode("ascii"), "n": g.n,
                   "transmissions": list(tr)})
    out = _open_out(cfg)
    if cfg.fmt == "json":
        out.write(json.dumps(sig12(report)) + "\n")
    elif cfg.fmt == "csv":
        write_matrix_csv(s.matrix, out)
    elif cfg.fmt == "graph6":
        out.write(report["graph6"] + "\n")
    else:
        out.write(f"input         {label}  (n={g.n}, graph6 {report['graph6']})\n")
        out.write(f"radius        {s.radius:.12g}\n")
        out.write("eigenvalues   " + " ".join(f"{x:.10g}" for x in s.eigenvalues) + "\n")
        out.write("transmissions " + " ".join(map(str, tr)) + "\n")
        out.write(f"residual      {report['residual']:.3e}\n")
    _close_out(out)
    return EXIT_PASS


# -- verify --------------------------------------------------------------------


def _per_n(fn: Callable[[int], LemmaVerdict], ns: Iterable[int]) -> list[LemmaVerdict]:
    return [fn(n) for n in ns]


def _bound_for_n(n: int, tol: Tolerances) -> LemmaVerdict:
    graphs = enumerate_unicyclic(n).decoded()
    return aggregate("bound", f"n={n}", [check_transmission_bound(g, tol) for g in graphs])


def _theorem_for_n(n: int, tol: Tolerances) -> LemmaVerdict:
    verdict, cert = extremal_search(n, tol)
    verdict.details["certificate"] = cert.to_json()
    return verdict


def _path_shift_for_n(n: int, tol: Tolerances) -> LemmaVerdict:
    return aggregate("path-shift", f"n={n}", path_shift_sweep([n - 3], tol=tol))


def _clique_shift_for_n(n: int, tol: Tolerances) -> LemmaVerdict:
    parts = clique_shift_sweep([n - 3], bases=("C3",), tol=tol)
    if n - 4 >= 2:
        parts += clique_shift_sweep([n - 4], bases=("K4",), tol=tol)
    return aggregate("clique-shift", f"n={n}", parts)


LEMMAS = {
    # id: (default n range, minimum n)
    "bound": ("3..10", 3),
    "edge-add": ("3..9", 3),
    "path-shift": ("5..11", 5),
    "clique-shift": ("5..9", 5),
    "dl1": ("6..12", 6),
    "dl2": ("4..10", 4),
    "theorem": ("3..10", 3),
    "lambda-n-1": ("3..6", 3),
}


def run_lemma(lemma: str, ns: Sequence[int], tol: Tolerances,
              seed: int = DEFAULT_SEED, trials: int = 200) -> list[LemmaVerdict]:
    if lemma not in LEMMAS:
        raise UnknownLemma(f"unknown lemma {lemma!r}; expected one of {sorted(LEMMAS)}")
    low = LEMMAS[lemma][1]
    if ns and min(ns) < low:
        raise UsageError(f"{lemma} needs n >= {low}")
    if lemma == "edge-add":
        return [edge_addition_suite(trials, seed, ns, tol)]
    table = {
        "bound": lambda n: _bound_for_n(n, tol),
        "path-shift": lambda n: _path_shift_for_n(n, tol),
        "clique-shift": lambda n: _clique_shift_for_n(n, tol),
        "dl1": lambda n: check_h_vs_kite(n, tol),
        "dl2": lambda n: check_c4_family(n, tol),
        "theorem": lambda n: _theorem_for_n(n, tol),
        "lambda-n-1": lambda n: check_algebraic_connectivity_analogue(n, tol),
    }
    return _per_n(table[lemma], ns)


def exit_status(verdicts: Iterable[LemmaVerdict]) -> int:
    statuses = {v.status for v in verdicts}
    if Status.FAIL in statuses:
        return EXIT_FAIL
    if Status.INCONCLUSIVE in statuses:
        return EXIT_INCONCLUSIVE
    return EXIT_PASS


def render_table(verdicts: Sequence[LemmaVerdict]) -> str:
    rows = [("lemma", "instance", "instances", "min margin", "status")]
    for v in verdicts:
        rows.append((v.lemma, v.instance, str(v.instances), f"{v.margin:.6g}", v.status.value))
    widths = [max(len(r[i]) for r in rows) for i in range(5)]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows) + "\n"


def cmd_verify(args, cfg: RunConfig) -> int:
    verdicts = run_lemma(args.lemma, cfg.n_range, cfg.tolerances, args.seed, args.trials)
    out = _open_out(cfg)
    if cfg.fmt == "table":
        out.write(render_table(verdicts))
    else:
        for v in verdicts:
            out.write(json.dumps(v.to_json()) + "\n")
    _close_out(out)
    if cfg.out and cfg.fmt != "table":
        sys.stdout.write(render_table(verdicts))
    return exit_status(verdicts)


# -- enumerate -------------------------------------------------------------------


def cmd_enumerate(args, cfg: RunConfig) -> int:
    if len(cfg.n_range) != 1:
        raise UsageError("enumerate takes a single n")
    report = partitioned_enumerate(cfg.n_range[0], cfg.shards, cfg.workers)
    if cfg.fmt == "json":
        out = _open_out(cfg)
        out.write(json.dumps(sig12(report.to_json())) + "\n")
        _close_out(out)
    elif cfg.out:
        with open(cfg.out, "wb") as fh:
            fh.write(report.graph6_lines())
    else:
        sys.stdout.write(report.graph6_lines().decode("ascii"))
    sys.stderr.write(f"{report.count} unicyclic graphs of order {report.n}\n")
    return EXIT_PASS


# -- plotdata ------------------------------------------------------------------------

PLOT_COLUMNS = ("n", "lambda_kite", "lambda_h", "lambda_cycle_closed_form",
                "submatrix_bound", "max_over_enumeration")


def plot_rows(ns: Iterable[int]) -> list[dict]:
    rows = []
    for n in ns:
        if n < 3:
            raise UsageError("plotdata needs n >= 3")
        best = max(spectrum(g).radius for g in enumerate_unicyclic(n).decoded())
        rows.append({
            "n": n,
            "lambda_kite": spectrum(make_kite(n)[0]).radius,
            "lambda_h": spectrum(make_h_graph(n)[0]).radius if n >= 6 else None,
            "lambda_cycle_closed_form": cycle_radius_closed_form(n),
            "submatrix_bound": kite_submatrix_bound(n) if n >= 4 else None,
            "max_over_enumeration": best,
        })
    return rows


def cmd_plotdata(args, cfg: RunConfig) -> int:
    out = _open_out(cfg)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(PLOT_COLUMNS)
    for row in plot_rows(cfg.n_range):
        writer.writerow(["" if row[c] is None else
                         (row[c] if isinstance(row[c], int) else f"{row[c]:.12g}")
                         for c in PLOT_COLUMNS])
    _close_out(out)
    return EXIT_PASS


# -- plumbing -------------------------------------------------------------------------


def _open_out(cfg: RunConfig):
    return open(cfg.out, "w", newline="") if cfg.out else sys.stdout


def _close_out(fh) -> None:
    if fh is not sys.stdout:
        fh.close()


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="dlspec", description="Distance Laplacian spectra of graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, fmt_default):
        sp.add_argument("--format", dest="fmt", default=fmt_default, choices=FORMATS)
        sp.add_argument("--out", "-o", default=None)
        sp.add_argument("--strict", type=float, default=None, help="strict-gap threshold")
        sp.add_argument("--nonstrict", type=float, default=None, help="slack for non-strict bounds")
        sp.add_argument("--residual", type=float, default=None)

    sp = sub.add_parser("spectrum", help="eigenvalues, radius, transmissions")
    sp.add_argument("input", nargs="?", help="family spec, e.g. kite:n=6")
    sp.add_argument("--graph6", default=None)
    common(sp, "table")

    sp = sub.add_parser("verify", help="run a lemma sweep")
    sp.add_argument("lemma", help=", ".join(LEMMAS))
    sp.add_argument("--n", default=None, help="order or range a..b")
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sp.add_argument("--trials", type=int, default=200)
    common(sp, "jsonl")

    sp = sub.add_parser("enumerate", help="unicyclic graphs of order n as graph6 lines")
    sp.add_argument("--n", required=True)
    sp.add_argument("--shards", type=int, default=1)
    sp.add_argument("--workers", type=int, default=1)
    common(sp, "graph6")

    sp = sub.add_parser("plotdata", help="CSV of kite/H/cycle radii per n")
    sp.add_argument("--n", default="4..10")
    common(sp, "csv")
    return p


COMMANDS = {
    "spectrum": cmd_spectrum,
    "verify": cmd_verify,
    "enumerate": cmd_enumerate,
    "plotdata": cmd_plotdata,
}


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        n_text = getattr(args, "n", None)
        if args.command == "verify" and n_text is None:
            n_text = LEMMAS.get(args.lemma, ("3",))[0]
        cfg = RunConfig(
            command=args.command,
            n_range=parse_range(n_text) if n_text else [],
            family=getattr(args, "input", None),
            shards=getattr(args, "shards", 1),
            workers=getattr(args, "workers", 1),
            tolerances=DEFAULT_TOLERANCES.with_overrides(
                strict=args.strict, nonstrict=args.nonstrict, residual=args.residual
            ),
            out=args.out,
            fmt=args.fmt,
        )
        return COMMANDS[args.command](args, cfg)
    except (DLSpecError, ValueError, OSError) as exc:
        sys.stderr.write(f"dlspec {args.command}: {type(exc).__name__}: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
