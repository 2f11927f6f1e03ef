"""Command-line front end: enumeration, exponents, tables, fits, guessing.

Every subcommand is a thin adapter over the library and writes CSV or JSON
to stdout (or a file); identical inputs produce byte-identical output.
Exit codes: 0 success, 1 validation or usage error, 2 resource-budget abort.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .bijection import generate_ballot_walks, map_walk_3to2
from .classify import search_triples
from .enumeration import (
    DEFAULT_CELL_BUDGET,
    count_ballot_3d,
    count_endpoint,
    count_excursions,
    count_walks_total,
)
from .errors import BudgetExceededError, NonConvergenceError, ValidationError
from .exponent import exponent_report
from .fit import MAX_RICHARDSON_LEVELS, estimate_alpha
from .guess import guess_recurrence, searched_grid
from .models import (
    BallotModel,
    TandemModel,
    ballot_to_tandem,
    parse_model,
    tandem_step_set,
    tandem_to_ballot,
)

SCHEMA_VERSION = 1

# ballot models of the 15-row exponent table, in row order
TABLE1_BALLOT_TRIPLES = (
    (1, 1, 1), (1, 2, 2), (1, 1, 2), (1, 3, 3), (2, 3, 6),
    (2, 3, 3), (1, 1, 3), (2, 2, 3), (1, 4, 4), (1, 2, 4),
    (3, 4, 12), (3, 4, 6), (3, 4, 4), (1, 1, 4), (3, 3, 4),
)


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; the contract wants 1."""

    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    return value


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a fraction like 1/4, got {text!r}") from None


def _pair(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected i,j with two integers, got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected i,j with two integers, got {text!r}") from None


def _ballot(text: str) -> BallotModel:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected a,b,c with three integers, got {text!r}")
    try:
        triple = tuple(int(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a,b,c with three integers, got {text!r}") from None
    try:
        return BallotModel(*triple)
    except ValidationError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _model(text: str) -> TandemModel:
    try:
        return parse_model(text)
    except ValidationError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _write(path: str | None, payload: str) -> None:
    if path is None:
        sys.stdout.write(payload)
        return
    try:
        with open(path, "w") as fh:
            fh.write(payload)
    except OSError as exc:
        raise ValidationError(f"cannot write {path}: {exc}") from None


def _emit_json(path: str | None, obj) -> None:
    _write(path, json.dumps(obj, indent=2) + "\n")


def _model_meta(m: TandemModel) -> dict:
    b = tandem_to_ballot(m)
    return {"A": m.A, "B": m.B, "C": m.C, "a": b.a, "b": b.b, "c": b.c, "period": m.period}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tandemwalks", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="count walks of one model, exactly or in log-floats")
    p.add_argument("--model", type=_model, required=True,
                   help="tandem triple A,B,C or ballot:a,b,c")
    p.add_argument("--what", choices=("excursions", "total", "endpoint"), default="excursions",
                   help="which counting sequence to produce")
    p.add_argument("--n-max", type=_nonneg_int, required=True, help="largest walk length")
    p.add_argument("--mode", choices=("exact", "logfloat"), default="exact",
                   help="exact big integers or rescaled float64 logs")
    p.add_argument("--target", type=_pair, default=None, help="endpoint i,j (endpoint only)")
    p.add_argument("--format", choices=("csv", "json"), default="csv", help="output format")
    p.add_argument("--output", default=None, help="output path (default stdout)")
    p.add_argument("--cell-budget", type=_positive_int, default=DEFAULT_CELL_BUDGET,
                   help="abort if the sweep would exceed this many cells")
    p.add_argument("--threads", type=_positive_int, default=1,
                   help="worker threads (results never depend on this)")

    p = sub.add_parser("exponent", help="growth constant and critical exponent of one model")
    p.add_argument("--model", type=_model, required=True,
                   help="tandem triple A,B,C or ballot:a,b,c")
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p.add_argument("--output", default=None, help="output path (default stdout)")

    p = sub.add_parser("table1", help="the 15-model exponent table as CSV")
    p.add_argument("--output", default=None, help="output path (default stdout)")

    p = sub.add_parser("table2", help="models with rational exponent, by exceptional class")
    p.add_argument("--bound", type=_positive_int, default=50, help="search bound on A, B, C")
    p.add_argument("--output", default=None, help="output path (default stdout)")

    p = sub.add_parser("classify", help="search triples with a prescribed gamma^2")
    p.add_argument("--gamma-sq", type=_fraction, required=True, help="target gamma^2 as num/den")
    p.add_argument("--bound", type=_positive_int, required=True, help="search bound on A, B, C")
    p.add_argument("--output", default=None, help="output path (default stdout)")

    p = sub.add_parser("fit", help="estimate alpha and mu from enumerated excursions")
    p.add_argument("--model", type=_model, required=True,
                   help="tandem triple A,B,C or ballot:a,b,c")
    p.add_argument("--m-max", type=_positive_int, required=True,
                   help="largest subsequence index m (walk length p*m)")
    p.add_argument("--richardson", type=_nonneg_int, default=MAX_RICHARDSON_LEVELS,
                   help="extrapolation levels")
    p.add_argument("--mode", choices=("logfloat", "exact"), default="logfloat",
                   help="enumeration mode feeding the fit")
    p.add_argument("--plot", default=None, help="write an SVG convergence chart here")
    p.add_argument("--format", choices=("csv", "json"), default="csv",
                   help="csv: m,alpha_hat table; json: summary")
    p.add_argument("--output", default=None, help="output path (default stdout)")
    p.add_argument("--cell-budget", type=_positive_int, default=DEFAULT_CELL_BUDGET,
                   help="abort if the sweep would exceed this many cells")
    p.add_argument("--threads", type=_positive_int, default=1,
                   help="worker threads (results never depend on this)")

    p = sub.add_parser("guess", help="guess a P-recursive recurrence from a series file")
    p.add_argument("--series", required=True,
                   help="CSV file: one integer or num/den rational per line")
    p.add_argument("--max-order", type=_positive_int, required=True, help="largest order tried")
    p.add_argument("--max-degree", type=_nonneg_int, required=True, help="largest degree tried")
    p.add_argument("--output", default=None, help="output path (default stdout)")

    p = sub.add_parser("bijection-check", help="compare 3D ballot counts with 2D excursions")
    p.add_argument("--ballot", type=_ballot, required=True, help="ballot triple a,b,c")
    p.add_argument("--rounds", type=_positive_int, required=True, help="rounds to check")
    p.add_argument("--walk-cap", type=_positive_int, default=2000,
                   help="walk-level bijection check only when counts stay below this")
    p.add_argument("--output", default=None, help="output path (default stdout)")

    return parser


def _cmd_enumerate(args) -> None:
    s = tandem_step_set(args.model)
    if args.what == "endpoint":
        if args.target is None:
            raise ValidationError("--what endpoint requires --target i,j")
        seq = count_endpoint(s, args.n_max, args.target, args.mode, args.cell_budget)
    else:
        if args.target is not None:
            raise ValidationError("--target is only valid with --what endpoint")
        counter = count_excursions if args.what == "excursions" else count_walks_total
        seq = counter(s, args.n_max, args.mode, args.cell_budget)

    if args.format == "csv":
        header = "n,count" if args.mode == "exact" else "n,log_count"
        lines = [header]
        for n, v in enumerate(seq.values):
            lines.append(f"{n},{v}" if args.mode == "exact" else f"{n},{_fmt(v)}")
        _write(args.output, "\n".join(lines) + "\n")
    else:
        _emit_json(args.output, {
            "schema_version": SCHEMA_VERSION,
            "command": "enumerate",
            "model": _model_meta(args.model),
            "what": args.what,
            "mode": args.mode,
            "n_max": args.n_max,
            "target": list(args.target) if args.target else None,
            "metadata": {"cell_budget": args.cell_budget, "threads": args.threads},
            "terms": list(seq.values),
        })


def _report_dict(m: TandemModel) -> dict:
    rep = exponent_report(m)
    return {
        "model": _model_meta(m),
        "x": rep.x,
        "y": rep.y,
        "mu": rep.mu,
        "gamma": rep.gamma,
        "gamma_sq": f"{rep.gamma_sq.numerator}/{rep.gamma_sq.denominator}",
        "alpha": rep.alpha,
        "alpha_exact": None if rep.alpha_exact is None else int(rep.alpha_exact),
        "alpha_closed_form": rep.alpha_closed_form,
        "rationality": rep.rationality,
        "verdict": rep.dfiniteness,
    }


def _cmd_exponent(args) -> None:
    info = _report_dict(args.model)
    if args.json:
        info = {"schema_version": SCHEMA_VERSION, "command": "exponent", **info}
        _emit_json(args.output, info)
        return
    m = args.model
    lines = [
        f"model: ({m.A},{m.B},{m.C})  ballot ({info['model']['a']},{info['model']['b']},{info['model']['c']})  period {info['model']['period']}",
        f"critical point: X = {_fmt(info['x'])}, Y = {_fmt(info['y'])}",
        f"mu = {_fmt(info['mu'])}",
        f"gamma^2 = {info['gamma_sq']}  (gamma = {_fmt(info['gamma'])})",
        f"alpha = {_fmt(info['alpha'])}  [{info['alpha_closed_form']}]",
        f"rationality: {info['rationality']}",
        f"verdict: {info['verdict']}",
    ]
    _write(args.output, "\n".join(lines) + "\n")


def _cmd_table1(args) -> None:
    lines = ["a,b,c,A,B,C,gamma_sq,alpha,alpha_closed_form,verdict"]
    for triple in TABLE1_BALLOT_TRIPLES:
        ballot = BallotModel(*triple)
        m = ballot_to_tandem(ballot)
        info = _report_dict(m)
        lines.append(
            f"{ballot.a},{ballot.b},{ballot.c},{m.A},{m.B},{m.C},"
            f"{info['gamma_sq']},{_fmt(info['alpha'])},{info['alpha_closed_form']},{info['verdict']}"
        )
    _write(args.output, "\n".join(lines) + "\n")


def _cmd_table2(args) -> None:
    lines = ["gamma_sq,A,B,C,alpha"]
    for target in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)):
        for m in search_triples(target, args.bound):
            info = _report_dict(m)
            lines.append(f"{target.numerator}/{target.denominator},{m.A},{m.B},{m.C},{_fmt(info['alpha'])}")
    _write(args.output, "\n".join(lines) + "\n")


def _cmd_classify(args) -> None:
    lines = ["A,B,C,alpha"]
    for m in search_triples(args.gamma_sq, args.bound):
        info = _report_dict(m)
        lines.append(f"{m.A},{m.B},{m.C},{_fmt(info['alpha'])}")
    _write(args.output, "\n".join(lines) + "\n")


def _svg_chart(result, reference: float | None) -> str:
    """Minimal line chart: level-0 estimates vs m, plus a reference rule."""
    width, height = 640, 400
    ml, mr, mt, mb = 60, 20, 20, 40
    xs = list(result.ms)
    ys = list(result.alpha_estimates)
    y_all = ys + ([reference] if reference is not None else [])
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(y_all), max(y_all)
    if x_hi == x_lo:
        x_hi += 1
    pad = 0.05 * (y_hi - y_lo) or 0.5
    y_lo, y_hi = y_lo - pad, y_hi + pad

    def px(x):
        return ml + (x - x_lo) / (x_hi - x_lo) * (width - ml - mr)

    def py(y):
        return height - mb - (y - y_lo) / (y_hi - y_lo) * (height - mt - mb)

    points = " ".join(f"{px(x):.2f},{py(y):.2f}" for x, y in zip(xs, ys))
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{ml}" y1="{height - mb}" x2="{width - mr}" y2="{height - mb}" stroke="black"/>',
        f'<line x1="{ml}" y1="{mt}" x2="{ml}" y2="{height - mb}" stroke="black"/>',
        f'<polyline points="{points}" fill="none" stroke="steelblue" stroke-width="1.5"/>',
    ]
    if reference is not None:
        ry = py(reference)
        parts.append(
            f'<line x1="{ml}" y1="{ry:.2f}" x2="{width - mr}" y2="{ry:.2f}" '
            f'stroke="crimson" stroke-dasharray="6 4"/>'
        )
        parts.append(
            f'<text x="{width - mr - 4}" y="{ry - 6:.2f}" text-anchor="end" '
            f'font-size="12" fill="crimson">alpha = {reference:.6g}</text>'
        )
    parts.append(
        f'<text x="{(ml + width - mr) / 2}" y="{height - 8}" text-anchor="middle" font-size="12">m</text>'
    )
    parts.append(
        f'<text x="16" y="{(mt + height - mb) / 2}" font-size="12" '
        f'transform="rotate(-90 16 {(mt + height - mb) / 2})">alpha_hat</text>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _cmd_fit(args) -> None:
    m = args.model
    p = m.period
    rep = exponent_report(m)
    s = tandem_step_set(m)
    n_max = p * (args.m_max + 1)
    seq = count_excursions(s, n_max, args.mode, args.cell_budget)
    result = estimate_alpha(
        seq, p, max_levels=args.richardson, model=m, alpha_reference=rep.alpha
    )
    if args.plot is not None:
        _write(args.plot, _svg_chart(result, rep.alpha))
    if args.format == "csv":
        lines = ["m,alpha_hat"]
        for mm, v in zip(result.ms, result.alpha_estimates):
            lines.append(f"{mm},{_fmt(v)}")
        _write(args.output, "\n".join(lines) + "\n")
    else:
        _emit_json(args.output, {
            "schema_version": SCHEMA_VERSION,
            "command": "fit",
            "model": _model_meta(m),
            "mode": args.mode,
            "m_range": list(result.m_range),
            "metadata": {
                "m_max": args.m_max,
                "n_max": n_max,
                "richardson": args.richardson,
                "cell_budget": args.cell_budget,
                "threads": args.threads,
            },
            "level_used": result.level_used,
            "alpha_final": result.alpha_final,
            "mu_final": result.mu_final,
            "alpha_reference": result.alpha_reference,
            "mu_reference": rep.mu,
            "deviation": result.deviation,
        })


def _read_series(path: str) -> list[Fraction]:
    try:
        with open(path) as fh:
            raw = fh.read()
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from None
    terms = []
    for k, line in enumerate(raw.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        try:
            terms.append(Fraction(line))
        except (ValueError, ZeroDivisionError):
            raise ValidationError(f"{path}:{k}: not an integer or num/den rational: {line!r}") from None
    return terms


def _cmd_guess(args) -> None:
    terms = _read_series(args.series)
    rec = guess_recurrence(terms, args.max_order, args.max_degree)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "guess",
        "n_terms": len(terms),
        "found": rec is not None,
        "order": None if rec is None else rec.order,
        "degree": None if rec is None else rec.degree,
        "coefficients": None if rec is None else [[str(c) for c in poly] for poly in rec.coefficients],
        "searched_grid": [list(cell) for cell in searched_grid(args.max_order, args.max_degree)],
    }
    _emit_json(args.output, payload)


def _cmd_bijection_check(args) -> None:
    ballot = args.ballot
    tandem = ballot_to_tandem(ballot)
    p = ballot.period
    seq3 = count_ballot_3d(ballot, args.rounds)
    seq2 = count_excursions(tandem_step_set(tandem), p * args.rounds)
    lines = []
    for n in range(1, args.rounds + 1):
        c3 = seq3.values[n]
        c2 = seq2.values[p * n]
        if c3 != c2:
            raise ValidationError(
                f"count mismatch at round {n}: 3d gives {c3}, 2d gives {c2}"
            )
        note = ""
        if c3 <= args.walk_cap:
            walks3 = generate_ballot_walks(ballot, n)
            images = {map_walk_3to2(w).steps for w in walks3}
            if len(walks3) != c3 or len(images) != c3:
                raise ValidationError(
                    f"walk-level bijection failed at round {n}: "
                    f"{len(walks3)} walks, {len(images)} distinct images, count {c3}"
                )
            note = ",mapped"
        lines.append(f"round {n}: count {c3} ok{note}")
    _write(args.output, "\n".join(lines) + "\n")


_COMMANDS = {
    "enumerate": _cmd_enumerate,
    "exponent": _cmd_exponent,
    "table1": _cmd_table1,
    "table2": _cmd_table2,
    "classify": _cmd_classify,
    "fit": _cmd_fit,
    "guess": _cmd_guess,
    "bijection-check": _cmd_bijection_check,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _COMMANDS[args.command](args)
    except ValidationError as exc:
        print(f"tandemwalks: error: {exc}", file=sys.stderr)
        return 1
    except (BudgetExceededError, NonConvergenceError) as exc:
        print(f"tandemwalks: aborted: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    return 0


def main() -> None:
    sys.exit(run())
