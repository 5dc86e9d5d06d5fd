"""Command-line surface: compress tables, run evaluations, sweep configs.

Subcommands: compress, eval (wordsim|cat|sts|classify|knn), sweep, info.
Every run prints a reproducibility header (version, seed, resolved config)
to stderr; machine-readable results go to stdout or --report files.
Exit code 0 means at least one successful result row and no fatal error.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import __version__
from .dwt import PaddingMode
from .errors import WavepressError
from .filters import WaveletFamily, get_filters, supported_wavelets
from .io import (
    load_any_table,
    load_categorization,
    load_labeled,
    load_pairs,
    load_wordsim,
    save_matrix,
    sniff_matrix_format,
)
from .probe import BaselineSpec, MlpConfig, apply_variant, run_task
from .reports import EvalReport, render_json_lines, render_table, render_tsv
from .selection import CompressionConfig, Selector, compress_table
from .semantic import eval_categorization, eval_sts, eval_word_similarity, knn


def _header(args: argparse.Namespace) -> None:
    resolved = " ".join(
        f"{k}={v}" for k, v in sorted(vars(args).items()) if k != "func" and v is not None
    )
    print(
        f"# wavepress {__version__} | seed={getattr(args, 'seed', 42)} | {resolved}",
        file=sys.stderr,
    )


def _parse_selectors(text: str) -> list[Selector]:
    return [Selector.parse(part) for part in text.split(",") if part.strip()]


def _parse_baselines(args) -> list[BaselineSpec]:
    specs = []
    for raw in args.baseline or []:
        for entry in raw.split(","):
            entry = entry.strip()
            if not entry:
                continue
            if ":" in entry:
                kind, amount = entry.split(":", 1)
                specs.append(BaselineSpec(kind=kind.strip().lower(), amount=float(amount)))
            elif entry.lower() == "pca":
                if args.k is None:
                    raise WavepressError("--baseline pca needs --k")
                specs.append(BaselineSpec(kind="pca", amount=float(args.k)))
            elif entry.lower() == "dct":
                if args.keep is None:
                    raise WavepressError("--baseline dct needs --keep")
                specs.append(BaselineSpec(kind="dct", amount=float(args.keep)))
            else:
                raise WavepressError(f"unrecognized baseline {entry!r}")
    return specs


def _dwt_variants(args) -> list[CompressionConfig]:
    wavelet = WaveletFamily.parse(args.wavelet)
    mode = PaddingMode.parse(args.mode)
    names = getattr(args, "select", None) or getattr(args, "variants", None) or ""
    configs = []
    for part in names.split(","):
        part = part.strip()
        if not part or part.lower() == "base":
            continue
        configs.append(
            CompressionConfig(wavelet=wavelet, mode=mode, selector=Selector.parse(part))
        )
    return configs


def _emit(reports: list[EvalReport], args) -> None:
    if getattr(args, "report", None):
        with open(args.report, "w") as fh:
            fh.write(render_tsv(reports))
        print(f"# wrote {len(reports)} rows to {args.report}", file=sys.stderr)
    if getattr(args, "json", False):
        sys.stdout.write(render_json_lines(reports))
    else:
        sys.stdout.write(render_table(reports))
    sys.stdout.flush()


# ----------------------------------------------------------------------
# compress
# ----------------------------------------------------------------------


def cmd_compress(args) -> int:
    table = load_any_table(args.input)
    config = CompressionConfig(
        wavelet=WaveletFamily.parse(args.wavelet),
        mode=PaddingMode.parse(args.mode),
        selector=Selector.parse(args.select),
    )
    t0 = time.perf_counter()
    out = compress_table(table, config)
    elapsed = time.perf_counter() - t0
    save_matrix(out, args.output)
    rate = len(table) / elapsed if elapsed > 0 else float("inf")
    print(
        f"rows={len(table)} dim={table.dim} -> {out.dim} "
        f"ratio={out.dim / table.dim:.4f} transform_s={elapsed:.3f} rows_per_s={rate:,.0f}"
    )
    return 0


# ----------------------------------------------------------------------
# eval subcommands
# ----------------------------------------------------------------------


def _eval_variant_list(args) -> list:
    variants: list = []
    names = getattr(args, "variants", None) or "base"
    if "base" in [v.strip().lower() for v in names.split(",")]:
        variants.append("base")
    variants.extend(_dwt_variants(args))
    variants.extend(_parse_baselines(args))
    return variants


def _run_semantic_eval(args, evaluator, loader) -> int:
    table = load_any_table(args.emb)
    dataset = loader(args.data)
    reports: list[EvalReport] = []
    failures = 0
    for variant in _eval_variant_list(args):
        try:
            vtable, label, meta = apply_variant(table, variant)
            kwargs = {"variant": label, "metadata": meta}
            if evaluator is eval_categorization:
                reports.append(evaluator(vtable, dataset, seed=args.seed, **kwargs))
            else:
                reports.append(evaluator(vtable, dataset, **kwargs))
        except WavepressError as exc:
            failures += 1
            print(f"# error [{variant}]: {exc}", file=sys.stderr)
    _emit(reports, args)
    if failures or not reports:
        return 1
    return 0


def cmd_eval_wordsim(args) -> int:
    return _run_semantic_eval(args, eval_word_similarity, load_wordsim)


def cmd_eval_cat(args) -> int:
    return _run_semantic_eval(args, eval_categorization, load_categorization)


def cmd_eval_sts(args) -> int:
    return _run_semantic_eval(args, eval_sts, load_pairs)


def cmd_eval_classify(args) -> int:
    table = load_any_table(args.emb)
    dataset = load_labeled(args.data)
    config = MlpConfig(
        hidden_units=args.hidden,
        l2=args.l2,
        batch_size=args.batch_size,
        max_epochs=args.max_epochs,
        patience=args.patience,
        learning_rate=args.lr,
        seed=args.seed,
    )
    reports = run_task(table, dataset, config, _eval_variant_list(args))
    _emit(reports, args)
    return 0 if reports else 1


def cmd_eval_knn(args) -> int:
    table = load_any_table(args.emb)
    neighbors = knn(table, args.query, args.k, include_self=not args.exclude_self)
    for rank, (key, sim) in enumerate(neighbors, 1):
        print(f"{rank}\t{key}\t{sim:.6f}")
    return 0


# ----------------------------------------------------------------------
# sweep
# ----------------------------------------------------------------------


def cmd_sweep(args) -> int:
    wavelets = [WaveletFamily.parse(w) for w in args.wavelets.split(",") if w.strip()]
    selectors = _parse_selectors(args.selectors)
    modes = [PaddingMode.parse(m) for m in args.modes.split(",") if m.strip()]
    if not wavelets or not selectors or not modes:
        raise WavepressError("sweep needs nonempty wavelet, selector and mode lists")
    cells = [
        CompressionConfig(wavelet=w, mode=m, selector=s)
        for s in selectors
        for w in wavelets
        for m in modes
    ]
    print(f"# sweep over {len(cells)} cells "
          f"({len(wavelets)} wavelets x {len(selectors)} selectors x {len(modes)} modes)",
          file=sys.stderr)

    table = load_any_table(args.emb)
    if args.task == "wordsim":
        dataset = load_wordsim(args.data)
        evaluator = lambda t: eval_word_similarity(t, dataset)
    elif args.task == "cat":
        dataset = load_categorization(args.data)
        evaluator = lambda t: eval_categorization(t, dataset, seed=args.seed)
    elif args.task == "sts":
        dataset = load_pairs(args.data)
        evaluator = lambda t: eval_sts(t, dataset)
    else:
        raise WavepressError(f"sweep does not support task {args.task!r}")

    def run_cell(config: CompressionConfig):
        try:
            vtable, _, _ = apply_variant(table, config)
            report = evaluator(vtable)
            return config, report, None
        except WavepressError as exc:
            return config, None, str(exc)

    jobs = int(os.environ.get("WAVEPRESS_JOBS", args.jobs))
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run_cell, cells))
    else:
        results = [run_cell(c) for c in cells]

    lines = ["task\twavelet\tmode\tselector\tdim\tvalue\tstatus"]
    best: dict[Selector, tuple] = {}
    ok = 0
    for config, report, error in results:
        if report is None:
            lines.append(
                f"{args.task}\t{config.wavelet.name}\t{config.mode.value}\t"
                f"{config.selector.value}\t-\t-\terror: {error}"
            )
            continue
        ok += 1
        lines.append(
            f"{report.task}\t{config.wavelet.name}\t{config.mode.value}\t"
            f"{config.selector.value}\t{report.dim}\t{report.value:.4f}\tok"
        )
        # best per selector: max value, then smaller dim, then wavelet name
        key = (-report.value, report.dim, config.wavelet.name)
        if config.selector not in best or key < best[config.selector][0]:
            best[config.selector] = (key, config, report)
    for selector in sorted(best, key=lambda s: s.value):
        _, config, report = best[selector]
        lines.append(
            f"# best {selector.value}: {config.wavelet.name}/{config.mode.value} "
            f"dim={report.dim} value={report.value:.4f}"
        )
    text = "\n".join(lines) + "\n"
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(text)
        print(f"# wrote sweep results to {args.report}", file=sys.stderr)
    sys.stdout.write(text)
    sys.stdout.flush()
    return 0 if ok else 1


# ----------------------------------------------------------------------
# info
# ----------------------------------------------------------------------


def cmd_info(args) -> int:
    if args.path:
        kind = sniff_matrix_format(args.path)
        table = load_any_table(args.path)
        print(f"format={kind} rows={len(table)} dim={table.dim}")
        preview = ", ".join(table.keys[:5])
        print(f"keys: {preview}{', ...' if len(table) > 5 else ''}")
        return 0
    print(f"wavepress {__version__}")
    print("wavelet  filter_len  cA_len(d=300, per)")
    for w in supported_wavelets():
        pair = get_filters(w)
        print(f"{w.name:<8} {len(pair):>9}  {150:>18}")
    print("selectors:", ", ".join(s.value for s in Selector))
    print("modes:", ", ".join(m.value for m in PaddingMode))
    return 0


# ----------------------------------------------------------------------
# argument wiring
# ----------------------------------------------------------------------


def _add_variant_flags(p: argparse.ArgumentParser, select_flag: bool = False) -> None:
    if select_flag:
        p.add_argument("--select", default="", help="comma list of selectors (cA,cAA,...)")
    else:
        p.add_argument(
            "--variants", default="base",
            help="comma list: base and/or selectors (base,cA,cD,cA+cDA)",
        )
    p.add_argument("--wavelet", default="coif3", help="haar | dbN | symN | coifN")
    p.add_argument("--mode", default="per", help="per | sym | zero")
    p.add_argument("--baseline", action="append", default=[],
                   help="pca | dct | pca:K | dct:FRACTION (repeatable)")
    p.add_argument("--k", type=int, default=None, help="PCA output dims")
    p.add_argument("--keep", type=float, default=None, help="DCT keep fraction")


def _add_output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--report", default=None, help="write TSV rows to this path")
    p.add_argument("--json", action="store_true", help="JSON lines on stdout")
    p.add_argument("--seed", type=int, default=42)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wavepress", description=__doc__)
    parser.add_argument("--version", action="version", version=f"wavepress {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compress", help="compress a word-vector or EMB1 table")
    p.add_argument("input")
    p.add_argument("output")
    p.add_argument("--wavelet", default="coif3")
    p.add_argument("--mode", default="per")
    p.add_argument("--select", default="cA")
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(func=cmd_compress)

    ev = sub.add_parser("eval", aliases=["evaluate"], help="run an evaluation task")
    evsub = ev.add_subparsers(dest="task", required=True)

    p = evsub.add_parser("wordsim", help="word similarity (Spearman x100)")
    p.add_argument("--emb", required=True)
    p.add_argument("--data", required=True)
    _add_variant_flags(p)
    _add_output_flags(p)
    p.set_defaults(func=cmd_eval_wordsim)

    p = evsub.add_parser("cat", help="concept categorization (k-means purity)")
    p.add_argument("--emb", required=True)
    p.add_argument("--data", required=True)
    _add_variant_flags(p)
    _add_output_flags(p)
    p.set_defaults(func=cmd_eval_cat)

    p = evsub.add_parser("sts", help="sentence-pair similarity (Spearman x100)")
    p.add_argument("--emb", required=True)
    p.add_argument("--data", required=True)
    _add_variant_flags(p)
    _add_output_flags(p)
    p.set_defaults(func=cmd_eval_sts)

    p = evsub.add_parser("classify", help="train/evaluate the MLP probe")
    p.add_argument("--emb", required=True)
    p.add_argument("--data", required=True)
    _add_variant_flags(p, select_flag=True)
    _add_output_flags(p)
    p.add_argument("--hidden", type=int, default=50)
    p.add_argument("--l2", type=float, default=1e-4)
    p.add_argument("--batch-size", type=int, default=64)
    p.add_argument("--max-epochs", type=int, default=200)
    p.add_argument("--patience", type=int, default=5)
    p.add_argument("--lr", type=float, default=1e-3)
    p.set_defaults(func=cmd_eval_classify)

    p = evsub.add_parser("knn", help="nearest neighbors by cosine")
    p.add_argument("--emb", required=True)
    p.add_argument("--query", required=True)
    p.add_argument("--k", type=int, default=5)
    p.add_argument("--exclude-self", action="store_true")
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(func=cmd_eval_knn)

    p = sub.add_parser("sweep", help="cross-product sweep with best-per-selector summary")
    p.add_argument("--task", required=True, choices=["wordsim", "cat", "sts"])
    p.add_argument("--emb", required=True)
    p.add_argument("--data", required=True)
    p.add_argument("--wavelets", required=True, help="comma list (haar,db2,sym4,...)")
    p.add_argument("--selectors", required=True, help="comma list (cA,cD,...)")
    p.add_argument("--modes", default="per")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--report", default=None)
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("info", help="package info, or inspect a table file")
    p.add_argument("path", nargs="?", default=None)
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(func=cmd_info)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    _header(args)
    try:
        return args.func(args)
    except WavepressError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
