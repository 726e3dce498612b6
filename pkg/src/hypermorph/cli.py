"""Command-line interface.

Four subcommands: ``filter`` (one filter at one scale), ``sweep``
(error-vs-scale curve for one family), ``bench`` (the full noise-level
x family comparison table), ``ops`` (apply a single vertex operator,
for debugging).  Every command is deterministic given its flags and
seed, and all file outputs are written atomically.

``HYPERMORPH_THREADS`` caps the worker threads ``bench`` uses for its
independent (noise level, family) jobs.
"""

import argparse
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .denoising import (
    DEFAULT_LAMBDA_MAX,
    DEFAULT_WINDOWS,
    NoiseSpec,
    SweepReport,
    add_salt_pepper,
    asf_denoise,
    median_filter,
    mse_percent,
    run_sweep,
)
from .grid import GridKind, grid_for_image
from .hypergraph import Hypergraph
from .morphology import (
    FilterFamily,
    vertex_close1,
    vertex_dilate,
    vertex_erode,
    vertex_halfclose,
    vertex_halfopen,
    vertex_open1,
)
from .pnm import atomic_write_bytes, read_image, write_image

BENCH_NOISE_PERCENTS = (5, 10, 15, 20)
BENCH_FAMILIES = (FilterFamily.MEDIAN, FilterFamily.GRAPH_ASF, FilterFamily.HYPERGRAPH_ASF)

_VERTEX_OPS = {
    "dilate": vertex_dilate,
    "erode": vertex_erode,
    "open": vertex_open1,
    "close": vertex_close1,
    "halfopen": vertex_halfopen,
    "halfclose": vertex_halfclose,
}


def _family(value: str) -> FilterFamily:
    try:
        return FilterFamily(value)
    except ValueError:
        names = ", ".join(f.value for f in FilterFamily)
        raise argparse.ArgumentTypeError(f"unknown family {value!r} (choose from {names})")


def _window_list(value: str) -> tuple[int, ...]:
    try:
        windows = tuple(int(tok) for tok in value.split(",") if tok)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad window list {value!r}")
    if not windows:
        raise argparse.ArgumentTypeError("window list is empty")
    return windows


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypermorph",
        description="Morphological denoising of binary images on grid graphs "
        "and 2x2-block hypergraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, output=False, reference=False, noise=False, sweep=False):
        p.add_argument("--input", required=True, help="input image (PBM/PGM)")
        if output:
            p.add_argument("--output", required=True, help="output image path (PBM P4)")
        if reference:
            p.add_argument("--reference", help="clean reference image")
        if noise:
            p.add_argument(
                "--noise-ratio",
                type=float,
                default=0.0,
                help="per-pixel flip probability in [0,1] (default 0)",
            )
            p.add_argument("--seed", type=int, default=0, help="noise generator seed")
        if sweep:
            p.add_argument(
                "--lambda-max",
                type=int,
                default=DEFAULT_LAMBDA_MAX,
                dest="lambda_max",
                help=f"largest ASF scale to sweep (default {DEFAULT_LAMBDA_MAX})",
            )
            p.add_argument(
                "--window",
                type=_window_list,
                default=DEFAULT_WINDOWS,
                help="comma-separated median windows (default 3,5,7)",
            )
            p.add_argument("--report", help="write the CSV report here")
            p.add_argument(
                "--format",
                choices=("csv", "text"),
                default="text",
                help="stdout format (default text)",
            )

    p = sub.add_parser("filter", help="apply one filter at one scale")
    add_common(p, output=True, reference=True)
    p.add_argument("--family", type=_family, required=True)
    p.add_argument("--lambda", type=int, default=1, dest="lam", help="ASF scale (default 1)")
    p.add_argument("--window", type=int, default=3, help="median window (default 3)")

    p = sub.add_parser("sweep", help="error-vs-scale sweep for one family")
    add_common(p, reference=True, noise=True, sweep=True)
    p.add_argument("--family", type=_family, required=True)

    p = sub.add_parser("bench", help="noise-level x family comparison table")
    add_common(p, noise=True, sweep=True)

    p = sub.add_parser("ops", help="apply a single vertex operator (debugging)")
    add_common(p, output=True)
    p.add_argument("--op", choices=sorted(_VERTEX_OPS), required=True)
    p.add_argument(
        "--family",
        type=_family,
        default=FilterFamily.HYPERGRAPH_ASF,
        help="structure to run on: graph-asf or hypergraph-asf "
        "(default hypergraph-asf)",
    )
    return parser


def _structure_for(img, family: FilterFamily) -> Hypergraph:
    kinds = {
        FilterFamily.HYPERGRAPH_ASF: GridKind.FOUR_UNIFORM_BLOCKS,
        FilterFamily.GRAPH_ASF: GridKind.TWO_UNIFORM_ADJACENCY,
    }
    if family not in kinds:
        raise ValueError(f"{family.value} does not define a grid structure")
    return grid_for_image(img, kinds[family])


def cmd_filter(args) -> int:
    img = read_image(args.input)
    if args.family is FilterFamily.MEDIAN:
        out = median_filter(img, args.window)
        scale = f"{args.window}x{args.window}"
    else:
        out = asf_denoise(img, args.family, args.lam)
        scale = str(args.lam)
    write_image(out, args.output)
    print(f"wrote {args.output} ({args.family.value}, scale {scale})")
    if args.reference:
        ref = read_image(args.reference)
        print(f"mse_percent={mse_percent(ref, out):.6f}")
    return 0


def _load_clean_and_noisy(args):
    img = read_image(args.input)
    if getattr(args, "reference", None):
        # input is already noisy; measure against the provided clean image
        return read_image(args.reference), img
    if args.noise_ratio > 0:
        return img, add_salt_pepper(img, NoiseSpec(args.noise_ratio, args.seed))
    return img, img


def cmd_sweep(args) -> int:
    clean, noisy = _load_clean_and_noisy(args)
    report = run_sweep(clean, noisy, args.family, args.lambda_max, args.window)
    if args.report:
        atomic_write_bytes(args.report, report.to_csv().encode("ascii"))
    if args.format == "csv":
        sys.stdout.write(report.to_csv())
    else:
        best = report.best
        print(
            f"best: family={args.family.value} scale={best.scale} "
            f"mse_percent={best.mse_percent:.6f}"
        )
    return 0


def _worker_count(n_jobs: int) -> int:
    env = os.environ.get("HYPERMORPH_THREADS", "")
    if env.strip():
        cap = int(env)
        if cap < 1:
            raise ValueError("HYPERMORPH_THREADS must be a positive integer")
    else:
        cap = os.cpu_count() or 1
    return max(1, min(cap, n_jobs))


def _bench_rows(clean, seed: int, lambda_max: int, windows) -> list[dict]:
    noisy = {
        pct: add_salt_pepper(clean, NoiseSpec(pct / 100.0, seed + i))
        for i, pct in enumerate(BENCH_NOISE_PERCENTS)
    }
    jobs = [(pct, fam) for pct in BENCH_NOISE_PERCENTS for fam in BENCH_FAMILIES]

    def run(job) -> SweepReport:
        pct, fam = job
        return run_sweep(clean, noisy[pct], fam, lambda_max, windows)

    with ThreadPoolExecutor(max_workers=_worker_count(len(jobs))) as pool:
        reports = dict(zip(jobs, pool.map(run, jobs)))

    rows = []
    for pct in BENCH_NOISE_PERCENTS:
        row = {"noise_percent": pct}
        for fam in BENCH_FAMILIES:
            best = reports[(pct, fam)].best
            row[fam] = (best.mse_percent, best.scale)
        rows.append(row)
    return rows


def _bench_csv(rows) -> str:
    lines = [
        "noise_percent,median_mse,median_window,graph_asf_mse,graph_asf_lambda,"
        "hypergraph_asf_mse,hypergraph_asf_lambda"
    ]
    for row in rows:
        cells = [str(row["noise_percent"])]
        for fam in BENCH_FAMILIES:
            mse, scale = row[fam]
            cells += [f"{mse:.6f}", str(scale)]
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def _bench_text(rows) -> str:
    def cell(fam, row):
        mse, scale = row[fam]
        label = f"{scale}x{scale}" if fam is FilterFamily.MEDIAN else str(scale)
        return f"{mse:.2f} ({label})"

    header = ["noise%", "median", "graph-asf", "hypergraph-asf"]
    table = [header] + [
        [str(row["noise_percent"])] + [cell(fam, row) for fam in BENCH_FAMILIES]
        for row in rows
    ]
    widths = [max(len(r[c]) for r in table) for c in range(len(header))]
    return "\n".join(
        "  ".join(cell.ljust(width) for cell, width in zip(r, widths)).rstrip()
        for r in table
    ) + "\n"


def cmd_bench(args) -> int:
    clean = read_image(args.input)
    rows = _bench_rows(clean, args.seed, args.lambda_max, args.window)
    if args.report:
        atomic_write_bytes(args.report, _bench_csv(rows).encode("ascii"))
    sys.stdout.write(_bench_csv(rows) if args.format == "csv" else _bench_text(rows))
    return 0


def cmd_ops(args) -> int:
    img = read_image(args.input)
    h = _structure_for(img, args.family)
    out = _VERTEX_OPS[args.op](h, img.ravel())
    write_image(out.reshape(img.shape), args.output)
    print(f"wrote {args.output} ({args.op} on {args.family.value})")
    return 0


_COMMANDS = {
    "filter": cmd_filter,
    "sweep": cmd_sweep,
    "bench": cmd_bench,
    "ops": cmd_ops,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except Exception as exc:  # one-line diagnostic, nonzero exit
        print(f"hypermorph {args.command}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
