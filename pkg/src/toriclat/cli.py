"""Command-line front end.

Subcommands: codewords, gens, distance, tessellate, params, compare,
interleave, simulate, tables, verify.  Exit codes: 0 success, 1 property
violation, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import interleaving, tables
from .codes import codewords, generator_set
from .distance import distance_report, min_distance_closed_form
from .lattice import TorusLattice
from .params import (CodeParams, RateGain, bmd_params, compare,
                     interleaved_params, kitaev_params, rate_gain,
                     toric_code_params)
from .tessellation import (Polyomino, canonical_polyomino, lee_sphere,
                           render_ascii, render_svg, tessellate)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_IO = 3


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _json(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _lattice(q: int) -> TorusLattice:
    try:
        return TorusLattice(q)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


class UsageError(Exception):
    pass


def _parse_q_range(text: str) -> list[int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"expected start:stop:step, got {text!r}")
    try:
        start, stop, step = (int(p) for p in parts)
    except ValueError as exc:
        raise UsageError(f"non-integer q-range {text!r}") from exc
    if step <= 0:
        raise UsageError("q-range step must be positive")
    return list(range(start, stop + 1, step))  # stop is inclusive


def _rg_payload(params: CodeParams, rg: RateGain, precision: int) -> dict:
    return {
        "family": params.family,
        "n": params.n,
        "k": params.k,
        "d": params.d,
        "t": params.t,
        "rate": round(float(rg.rate), precision),
        "rate_exact": str(rg.rate),
        "gain": round(float(rg.gain), precision),
        "gain_exact": str(rg.gain),
        "gain_db": round(rg.gain_db, precision),
    }


def _csv_param_row(q: int, params: CodeParams, rg: RateGain,
                   precision: int) -> str:
    d = "" if params.d is None else str(params.d)
    return (f"{q},{params.family},{params.n},{params.k},{d},{params.t},"
            f"{float(rg.rate):.{precision}f},{float(rg.gain):.{precision}f},"
            f"{rg.gain_db:.{precision}f}")


# ---------------------------------------------------------------- commands


def cmd_codewords(args) -> int:
    lattice = _lattice(args.q)
    code = codewords(lattice)
    if args.format == "json":
        text = _json({"q": args.q, "generator": list(lattice.generator),
                      "codewords": [list(c) for c in code.codewords]})
    else:
        listing = " ".join(f"({x},{y})" for x, y in code.codewords)
        text = (tables.render_grid(args.q)
                + f"codewords (k*(1,{lattice.g}) for k = 0..{args.q - 1}): "
                + listing + "\n")
    _emit(text, args.out)
    return EXIT_OK


def cmd_gens(args) -> int:
    lattice = _lattice(args.q)
    vectors = sorted(generator_set(lattice).vectors)
    if args.format == "json":
        text = _json({"q": args.q, "count": len(vectors),
                      "generators": [list(v) for v in vectors]})
    else:
        pairs = ", ".join(f"({c},{d})" for c, d in vectors)
        text = f"q={args.q}: {len(vectors)} generators: {pairs}\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_distance(args) -> int:
    lattice = _lattice(args.q)
    payload: dict = {"q": args.q, "method": args.method}
    lines = [f"q = {args.q}"]
    report = None
    if args.method in ("brute", "both"):
        report = distance_report(lattice)
        payload["brute"] = {
            "distance": report.distance,
            "achieving_vector": list(report.achieving_vector),
            "candidates": [{"vector": list(v), "weight": w}
                           for v, w in report.candidate_weights],
        }
        lines.append(f"distance (brute force) = {report.distance}")
        lines.append("achieved by codeword vector "
                     f"({report.achieving_vector[0]},{report.achieving_vector[1]})")
        cands = "; ".join(f"({v[0]},{v[1]}) weight {w}"
                          for v, w in report.candidate_weights)
        lines.append(f"move-vector candidates: {cands}")
    if args.method in ("closed", "both"):
        closed = min_distance_closed_form(lattice)
        payload["closed"] = {"distance": closed}
        lines.append(f"distance (closed form) = {closed}")
    if args.method == "both":
        agree = report is not None and report.distance == payload["closed"]["distance"]
        payload["agree"] = agree
        lines.append(f"methods agree: {agree}")
        if not agree:
            _emit(_json(payload) if args.format == "json"
                  else "\n".join(lines) + "\n", args.out)
            return EXIT_VIOLATION
    text = _json(payload) if args.format == "json" else "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def _load_shape(selector: str, lattice: TorusLattice) -> Polyomino:
    if selector == "canonical":
        return canonical_polyomino(lattice)
    if selector == "lee":
        if lattice.q != 5:
            raise UsageError("the radius-1 Lee sphere only tiles q = 5")
        return lee_sphere(1)
    if selector.startswith("file:"):
        path = Path(selector[len("file:"):])
        cells = []
        for line in path.read_text(encoding="utf-8").splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            x, y = line.split()
            cells.append((int(x), int(y)))
        try:
            return Polyomino.from_cells(cells)
        except ValueError as exc:
            raise UsageError(f"bad shape file {path}: {exc}") from exc
    raise UsageError(f"unknown shape {selector!r}")


def cmd_tessellate(args) -> int:
    lattice = _lattice(args.q)
    shape = _load_shape(args.shape, lattice)
    try:
        tiling = tessellate(codewords(lattice), shape)
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_VIOLATION
    if args.format == "svg":
        text = render_svg(tiling)
    else:  # ascii / text
        text = render_ascii(tiling)
    _emit(text, args.out)
    return EXIT_OK


def cmd_params(args) -> int:
    lattice = _lattice(args.q)
    entries = [toric_code_params(lattice), interleaved_params(lattice),
               kitaev_params(args.q), bmd_params(args.q)]
    rows = [(p, rate_gain(p)) for p in entries]
    p = args.precision
    if args.format == "json":
        text = _json({"q": args.q,
                      "codes": [_rg_payload(cp, rg, p) for cp, rg in rows]})
    elif args.format == "csv":
        lines = ["q,family,n,k,d,t,rate,gain,gain_db"]
        lines += [_csv_param_row(args.q, cp, rg, p) for cp, rg in rows]
        text = "\n".join(lines) + "\n"
    else:
        lines = [f"{'family':<12} {'n':>6} {'k':>4} {'d':>3} {'t':>4} "
                 f"{'rate':>10} {'gain':>10} {'gain_db':>9}"]
        for cp, rg in rows:
            d = "-" if cp.d is None else str(cp.d)
            lines.append(
                f"{cp.family:<12} {cp.n:>6} {cp.k:>4} {d:>3} {cp.t:>4} "
                f"{tables.format_ratio(rg.rate, p):>10} "
                f"{tables.format_ratio(rg.gain, p):>10} "
                f"{rg.gain_db:>9.{p}f}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_compare(args) -> int:
    qs = [q for q in _parse_q_range(args.q_range) if q >= 5 and q % 2 == 1]
    if not qs:
        raise UsageError(f"q-range {args.q_range!r} selects no odd q >= 5")
    rows = [compare(q) for q in qs]
    p = args.precision
    if args.format == "json":
        payload = []
        for row in rows:
            payload.append({
                "q": row.q,
                "interleaved": _rg_payload(*row.interleaved, p),
                "kitaev": _rg_payload(*row.kitaev, p),
                "bmd": _rg_payload(*row.bmd, p),
                "interleaved_dominates": row.dominates,
            })
        text = _json(payload)
    elif args.format == "csv":
        lines = ["q,family,n,k,d,t,rate,gain,gain_db"]
        for row in rows:
            for cp, rg in (row.interleaved, row.kitaev, row.bmd):
                lines.append(_csv_param_row(row.q, cp, rg, p))
        text = "\n".join(lines) + "\n"
    else:
        lines = [f"{'q':>5} {'family':<12} {'rate':>12} {'gain':>12} "
                 f"{'dominated by interleaved':>26}"]
        for row in rows:
            for cp, rg in (row.interleaved, row.kitaev, row.bmd):
                flag = ("-" if cp.family == "interleaved"
                        else "yes" if row.dominates else "NO")
                lines.append(f"{row.q:>5} {cp.family:<12} "
                             f"{tables.format_ratio(rg.rate, p):>12} "
                             f"{tables.format_ratio(rg.gain, p):>12} {flag:>26}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    if not all(row.dominates for row in rows):
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_interleave(args) -> int:
    lattice = _lattice(args.q)
    mapping = interleaving.build_interleaver(lattice)
    payload = {"q": args.q,
               "map": [[i, e.x, e.y, e.slot]
                       for i, e in enumerate(mapping.stream_to_edge)]}
    _emit(_json(payload), args.out)
    return EXIT_OK


def _stats_payload(stats: interleaving.SimulationStats) -> dict:
    return {
        "q": stats.q,
        "model": stats.model,
        "seed": stats.seed,
        "trials": stats.trials,
        "correctable": stats.correctable,
        "failures": stats.failures,
        "failure_rate": stats.failures / stats.trials,
        "exemplars": [
            {"trial": ex.trial,
             "anchor": list(ex.cluster.anchor),
             "errors": [[e.x, e.y, e.slot] for e in ex.cluster.errored_edges]}
            for ex in stats.exemplars],
    }


def cmd_simulate(args) -> int:
    lattice = _lattice(args.q)
    try:
        stats = interleaving.simulate(lattice, args.trials, args.seed,
                                      model=args.model, workers=args.workers)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "csv":
        text = ("q,model,seed,trials,correctable,failures\n"
                f"{stats.q},{stats.model},{stats.seed},{stats.trials},"
                f"{stats.correctable},{stats.failures}\n")
    else:
        text = _json(_stats_payload(stats))
    _emit(text, args.out)
    return EXIT_OK


def cmd_tables(args) -> int:
    ids = list(tables.TABLE_IDS) if args.which == "all" else [args.which]
    if args.format == "json":
        payload = []
        for tid in ids:
            data = tables.table_data(tid)
            payload.append(_jsonable(data))
        text = _json(payload if len(payload) > 1 else payload[0])
    else:
        text = "\n".join(tables.render_table(tid, args.precision)
                         for tid in ids)
    _emit(text, args.out)
    return EXIT_OK


def _jsonable(value):
    if isinstance(value, Fraction):
        return {"exact": str(value), "value": float(value)}
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


# ----------------------------------------------------------------- verify


def _verify_distance(q_max: int, report) -> bool:
    ok = True
    for q in range(5, q_max + 1, 2):
        lattice = TorusLattice(q)
        brute = distance_report(lattice)
        closed = min_distance_closed_form(lattice)
        if brute.distance != closed:
            report(f"FAIL distance q={q}: brute {brute.distance} != closed {closed}")
            ok = False
            continue
        if lattice.n >= 3:
            cand = min(w for _, w in brute.candidate_weights)
            if cand != brute.distance:
                report(f"FAIL distance q={q}: move-vector minimum {cand} "
                       f"!= distance {brute.distance}")
                ok = False
    if ok:
        report(f"ok distance: brute force == closed form for odd q in [5, {q_max}]")
    return ok


def _verify_tiling(q_max: int, report) -> bool:
    from .tessellation import is_fundamental_region
    ok = True
    for q in range(5, q_max + 1, 2):
        lattice = TorusLattice(q)
        shape = canonical_polyomino(lattice)
        if shape.area != q:
            report(f"FAIL tiling q={q}: shape has {shape.area} cells")
            ok = False
            continue
        good, witness = is_fundamental_region(codewords(lattice), shape)
        if not good:
            report(f"FAIL tiling q={q}: cells {witness} share a coset")
            ok = False
    if ok:
        report(f"ok tiling: canonical shapes tile all odd q in [5, {q_max}]")
    return ok


def _verify_interleaver(q_max: int, report) -> bool:
    ok = True
    for q in range(5, q_max + 1, 2):
        lattice = TorusLattice(q)
        mapping = interleaving.build_interleaver(lattice)
        if len(set(mapping.stream_to_edge)) != 2 * q * q:
            report(f"FAIL interleaver q={q}: stream map is not a bijection")
            ok = False
    if ok:
        report(f"ok interleaver: bijection on 2q^2 edges for odd q in [5, {q_max}]")
    for q in (5, 7, 9):
        if q > q_max:
            continue
        cases, failures, witness = interleaving.burst_exhaustive_report(
            TorusLattice(q))
        if failures:
            report(f"FAIL burst q={q}: {failures} of {cases} patterns "
                   f"uncorrectable, first witness {witness}")
            ok = False
        else:
            report(f"ok burst q={q}: {cases} cluster patterns all correctable")
    if q_max >= 5:
        if interleaving.double_slot_uncorrectable_exhaustive(TorusLattice(5)):
            report("ok negative control q=5: doubled cells always flagged")
        else:
            report("FAIL negative control q=5: a doubled cell went unflagged")
            ok = False
    return ok


def cmd_verify(args) -> int:
    if args.q_max < 5 or args.q_max % 2 == 0:
        raise UsageError(f"--q-max must be odd and >= 5, got {args.q_max}")
    lines: list[str] = []
    ok = True
    if args.scope in ("distance", "all"):
        ok &= _verify_distance(args.q_max, lines.append)
    if args.scope in ("tiling", "all"):
        ok &= _verify_tiling(args.q_max, lines.append)
    if args.scope in ("interleaver", "all"):
        ok &= _verify_interleaver(min(args.q_max, 41), lines.append)
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if ok else EXIT_VIOLATION


# ------------------------------------------------------------------ parser


def _add_common(parser, formats, default_format="text"):
    parser.add_argument("--format", choices=formats, default=default_format)
    parser.add_argument("--out", default=None, help="write output to a file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toriclat",
        description="Cyclic lattice codes on q x q torus grids: distances, "
                    "tessellations, and burst-error interleaving.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("codewords", help="list the code's cells")
    p.add_argument("--q", type=int, required=True)
    _add_common(p, ("text", "json"))
    p.set_defaults(func=cmd_codewords)

    p = sub.add_parser("gens", help="list all generating vectors")
    p.add_argument("--q", type=int, required=True)
    _add_common(p, ("text", "json"))
    p.set_defaults(func=cmd_gens)

    p = sub.add_parser("distance", help="minimum Mannheim distance")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--method", choices=("brute", "closed", "both"),
                   default="both")
    _add_common(p, ("text", "json"))
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("tessellate", help="tile the torus with a polyomino")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--shape", default="canonical",
                   help="canonical, lee, or file:<path> of 'x y' lines")
    _add_common(p, ("ascii", "text", "svg"), default_format="ascii")
    p.set_defaults(func=cmd_tessellate)

    p = sub.add_parser("params", help="code parameters for all families")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--precision", type=int, default=5)
    _add_common(p, ("text", "json", "csv"))
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("compare", help="interleaved code vs baselines")
    p.add_argument("--q-range", default="5:17:2",
                   help="start:stop:step, stop inclusive")
    p.add_argument("--precision", type=int, default=5)
    _add_common(p, ("text", "json", "csv"))
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("interleave", help="emit the stream-to-edge map")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_interleave)

    p = sub.add_parser("simulate", help="seeded cluster-error simulation")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--model",
                   choices=(interleaving.MODEL_ONE_PER_CELL,
                            interleaving.MODEL_UNIFORM_CLUSTER),
                   default=interleaving.MODEL_ONE_PER_CELL)
    p.add_argument("--workers", type=int, default=1)
    _add_common(p, ("json", "csv"), default_format="json")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("tables", help="regenerate the reference tables")
    p.add_argument("which", choices=tables.TABLE_IDS + ("all",))
    p.add_argument("--precision", type=int, default=5)
    _add_common(p, ("text", "json"))
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("verify", help="run the invariant sweeps")
    p.add_argument("--scope",
                   choices=("distance", "tiling", "interleaver", "all"),
                   default="all")
    p.add_argument("--q-max", type=int, default=41)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except OSError as exc:
        sys.stderr.write(f"i/o error: {exc}\n")
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
