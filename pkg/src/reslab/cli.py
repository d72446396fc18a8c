"""Command-line front end: ``reslab {count,verify,decompose,betti,table}``.

Exit status: 0 success, 1 disagreement between methods, 2 malformed input,
3 brute-force budget exhausted.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from dataclasses import dataclass, field

from . import cohom
from .algebra import BoundExceeded, FieldError, PointedMap, factor_prime_power, make_field, parse_poly, prime_powers
from .calculus import NotReducedError, cf_decompose, resultant_from_decomposition
from .count import (
    CountQuery,
    brute_force_count,
    count_convolution_form,
    count_divisor_form,
    count_Mn,
    count_value_x,
    count_Xn,
    default_budget,
    structured_count,
    verify_point,
)
from .resultant import pointed_resultant

EXIT_OK, EXIT_DISAGREE, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3
METHODS = ("divisor", "convolution", "structured", "lefschetz", "brute")


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    n: int | None = None
    n_max: int | None = None
    q: int | None = None
    q_max: int | None = None
    method: str = "all"
    variety: str = "res"
    x: str | None = None
    fmt: str = "text"
    budget: int = field(default_factory=default_budget)
    workers: int = 1
    num: str | None = None
    den: str | None = None

    def __post_init__(self):
        if self.budget < 0:
            raise UsageError("budget must be >= 0")
        if self.workers < 1:
            raise UsageError("workers must be >= 1")


def parse_q(text: str) -> int:
    """Accept ``9``, ``3^2`` or ``3,2``."""
    text = text.strip()
    for sep in ("^", ","):
        if sep in text:
            p, d = (int(t) for t in text.split(sep))
            return make_field(p, d).q
    q = int(text)
    factor_prime_power(q)
    return q


# --- count ------------------------------------------------------------------------

def _count_methods(cfg: RunConfig) -> dict[str, object]:
    """Method name -> thunk for the requested variety/target."""
    n, q = cfg.n, cfg.q
    F = make_field(*factor_prime_power(q))
    x = F.parse_element(cfg.x) if cfg.x is not None else None
    if x is not None and x.value == 0:
        raise UsageError("--x must be a unit")
    target = "one" if x is None or x.value == 1 else x
    v = cfg.variety

    def brute():
        query = CountQuery(n, F, v, "nonzero" if v == "mn" else target)
        return brute_force_count(query, budget=cfg.budget, workers=cfg.workers)

    table: dict[str, object] = {}
    if v in ("res", "fn"):
        if target == "one":
            table["divisor"] = lambda: count_divisor_form(n, q)
            table["convolution"] = lambda: count_convolution_form(n, q)
            table["structured"] = lambda: structured_count(n, q)
            if math.gcd(q, n) == 1:
                table["lefschetz"] = lambda: cohom.lefschetz_count(n, q)
        else:
            table["convolution"] = lambda: count_value_x(n, x)
    elif v == "mn":
        table["convolution"] = lambda: count_Mn(n, q)
    elif v == "xn":
        if target != "one":
            raise UsageError("X_n counts are for resultant 1 only")
        table["convolution"] = lambda: count_Xn(n, q)
    table["brute"] = brute
    return table


def cmd_count(cfg: RunConfig, out) -> int:
    if cfg.n is None or cfg.q is None:
        raise UsageError("count needs --n and --q")
    table = _count_methods(cfg)
    if cfg.method == "all":
        chosen = list(table)
    elif cfg.method in table:
        chosen = [cfg.method]
    else:
        raise UsageError(f"method {cfg.method!r} does not apply to variety {cfg.variety!r} here")
    results, notes = {}, []
    for name in chosen:
        try:
            results[name] = table[name]()
        except BoundExceeded as exc:
            if cfg.method != "all":
                raise
            notes.append(f"brute skipped: {exc}")
    agree = len(set(results.values())) <= 1
    if cfg.fmt == "json":
        rec = {
            "variety": cfg.variety,
            "n": cfg.n,
            "q": cfg.q,
            "x": cfg.x,
            "methods": {k: str(v) for k, v in results.items()},
            "agree": agree,
            "notes": "; ".join(notes),
        }
        out.write(json.dumps(rec) + "\n")
    elif cfg.fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["n", "q", "method", "count"])
        for k, v in results.items():
            w.writerow([cfg.n, cfg.q, k, v])
    else:
        label = {"res": "Res", "mn": "M", "xn": "X", "fn": "F"}[cfg.variety]
        target = "" if cfg.x is None else f" (resultant = {cfg.x})"
        out.write(f"|{label}_{cfg.n}(F_{cfg.q})|{target}\n")
        for k, v in results.items():
            out.write(f"  {k:<12} {v}\n")
        for note in notes:
            out.write(f"  note: {note}\n")
        out.write(f"agree={'true' if agree else 'false'}\n")
    return EXIT_OK if agree else EXIT_DISAGREE


# --- verify / table -----------------------------------------------------------------

def _grid(cfg: RunConfig) -> tuple[list[int], list[int]]:
    ns = [cfg.n] if cfg.n is not None else list(range(1, (cfg.n_max or 6) + 1))
    qs = [cfg.q] if cfg.q is not None else prime_powers(2, cfg.q_max or 16)
    if not ns or not qs:
        raise UsageError("empty (n, q) grid")
    return ns, qs


def cmd_verify(cfg: RunConfig, out) -> int:
    ns, qs = _grid(cfg)
    ok = True
    for n in ns:
        for q in qs:
            rec = verify_point(n, q, budget=cfg.budget, workers=cfg.workers)
            ok &= rec["agree"]
            out.write(json.dumps(rec) + "\n")
    return EXIT_OK if ok else EXIT_DISAGREE


def cmd_table(cfg: RunConfig, out) -> int:
    ns, qs = _grid(cfg)
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["n", "q", "method", "count"])
    ok = True
    for n in ns:
        for q in qs:
            rec = verify_point(n, q, budget=cfg.budget, workers=cfg.workers)
            ok &= rec["agree"]
            for k, v in rec["methods"].items():
                if cfg.method in ("all", k):
                    w.writerow([n, q, k, v])
    return EXIT_OK if ok else EXIT_DISAGREE


# --- decompose / betti ----------------------------------------------------------------

def cmd_decompose(cfg: RunConfig, out) -> int:
    if cfg.q is None or cfg.num is None or cfg.den is None:
        raise UsageError("decompose needs --q, --num and --den")
    F = make_field(*factor_prime_power(cfg.q))
    f = PointedMap(parse_poly(F, cfg.num), parse_poly(F, cfg.den))
    d = cf_decompose(f)
    via_parts = resultant_from_decomposition(d)
    syl = pointed_resultant(f, "sylvester")
    euc = pointed_resultant(f, "euclid")
    agree = via_parts == syl == euc
    if cfg.fmt == "json":
        rec = json.loads(d.to_json())
        rec["resultant"] = {"decomposition": str(via_parts), "sylvester": str(syl), "euclid": str(euc)}
        rec["agree"] = agree
        out.write(json.dumps(rec) + "\n")
    else:
        out.write(f"A/B = ({f.A}) / ({f.B}) over {F}\n")
        for i, part in enumerate(d.parts, 1):
            out.write(f"  P_{i} = {part.poly}   a_{i} = {part.unit}\n")
        out.write(f"composition = {d.composition}\n")
        out.write(f"epsilon = {d.epsilon:+d}\n")
        out.write(f"resultant: decomposition={via_parts} sylvester={syl} euclid={euc}\n")
        out.write(f"agree={'true' if agree else 'false'}\n")
    return EXIT_OK if agree else EXIT_DISAGREE


def cmd_betti(cfg: RunConfig, out) -> int:
    if cfg.n is None or cfg.n < 1:
        raise UsageError("betti needs --n >= 1")
    if cfg.q is not None and math.gcd(cfg.q, cfg.n) != 1:
        raise UsageError("Frobenius data needs gcd(q, n) = 1")
    if cfg.fmt == "json":
        out.write(cohom.table_json(cfg.n, cfg.q) + "\n")
    else:
        out.write(cohom.table_text(cfg.n, cfg.q) + "\n")
    return EXIT_OK


COMMANDS = {
    "count": cmd_count,
    "verify": cmd_verify,
    "decompose": cmd_decompose,
    "betti": cmd_betti,
    "table": cmd_table,
}


def run_command(cfg: RunConfig, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        return COMMANDS[cfg.command](cfg, out)
    except BoundExceeded as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, FieldError, NotReducedError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="reslab", description="Point counts and cohomology data for Res_n over finite fields.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int)
    common.add_argument("--n-max", type=int)
    common.add_argument("--q", type=parse_q, help="prime power: 9, 3^2 or 3,2")
    common.add_argument("--q-max", type=int)
    common.add_argument("--method", default="all", choices=METHODS + ("all",))
    common.add_argument("--variety", default="res", choices=("res", "mn", "xn", "fn"))
    common.add_argument("--x", help="target resultant as an element literal, e.g. 2 or 1:1")
    common.add_argument("--format", dest="fmt", default="text", choices=("text", "json", "csv"))
    common.add_argument("--budget", type=int, default=None, help="max brute-force enumeration size")
    common.add_argument("--workers", type=int, default=1)
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("count", parents=[common], help="count points by one or all methods")
    sub.add_parser("verify", parents=[common], help="sweep a grid, emit JSON lines")
    dec = sub.add_parser("decompose", parents=[common], help="continued-fraction decomposition of A/B")
    dec.add_argument("--num", required=True, help="A, monic, as a polynomial literal")
    dec.add_argument("--den", required=True, help="B, deg B < deg A")
    sub.add_parser("betti", parents=[common], help="Betti table and Frobenius traces")
    sub.add_parser("table", parents=[common], help="CSV of counts over an (n, q) grid")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    opts = vars(args)
    if opts["budget"] is None:
        opts["budget"] = default_budget()
    try:
        cfg = RunConfig(**opts)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return run_command(cfg)


if __name__ == "__main__":
    sys.exit(main())
