"""
Командная строка SnpSA.

Использование:
  python run.py build  --schema F --matrix F | --align F  --out IDX [--stride g|auto] [--json]
  python run.py query  IDX --rank i [--rank j ...] | --range a:b
  python run.py locate IDX --pattern S [--count-only | --rows]
  python run.py stats  IDX [--json]
  python run.py gen    --n N --k K --m M [--sigma CHARS] [--min-gap G] [--seed S] --out-prefix P
  python run.py verify IDX | --schema F --matrix F  [--patterns N] [--json]

Результаты — в stdout (строки с табуляциями или JSON), диагностика — в stderr.
Коды выхода: 0 — успех, 1 — ошибка ввода-вывода, 2 — доменная ошибка.
"""
import argparse
import json
import logging
import sys
import time
from pathlib import Path
from typing import Optional

logger = logging.getLogger("snpsa.cli")

EXIT_OK = 0
EXIT_IO = 1
EXIT_DOMAIN = 2


def _make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="python run.py",
        description="SnpSA — сжатый суффиксный массив для баз k-SSNP",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    # Общие флаги
    parser.add_argument("--config", metavar="PATH", help="Путь к config.yaml")
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        default=None,
        help="Уровень логирования (иначе SSNPSA_LOG / config.yaml)",
    )

    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("build", help="Построить индекс из схемы+матрицы или выравнивания")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--schema", metavar="F", help="Файл схемы (вместе с --matrix)")
    src.add_argument("--align", metavar="F", help="Выравнивание: строки или FASTA")
    p.add_argument("--matrix", metavar="F", help="Файл матрицы генотипов")
    p.add_argument("--rows", type=int, metavar="M", help="Число слов при k = 0")
    p.add_argument("--out", required=True, metavar="IDX", help="Куда записать индекс")
    p.add_argument("--stride", metavar="G", help="Шаг якорей: целое >= 1 или auto")
    p.add_argument("--json", action="store_true", help="Сводка в JSON")

    p = sub.add_parser("query", help="Значения SA по рангам")
    p.add_argument("index", metavar="IDX")
    sel = p.add_mutually_exclusive_group(required=True)
    sel.add_argument("--rank", type=int, action="append", metavar="I", help="Ранг (можно повторять)")
    sel.add_argument("--range", metavar="A:B", help="Диапазон рангов включительно")

    p = sub.add_parser("locate", help="Найти вхождения образца")
    p.add_argument("index", metavar="IDX")
    p.add_argument("--pattern", required=True, metavar="S")
    out = p.add_mutually_exclusive_group()
    out.add_argument("--count-only", action="store_true", help="Только число вхождений")
    out.add_argument("--rows", action="store_true", help="Печатать позицию, строку и колонку")

    p = sub.add_parser("stats", help="Разбивка памяти индекса")
    p.add_argument("index", metavar="IDX")
    p.add_argument("--json", action="store_true", help="JSON со стабильными ключами")

    p = sub.add_parser("gen", help="Сгенерировать случайный экземпляр")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--sigma", default="acgt", metavar="CHARS", help="Алфавит (по умолчанию acgt)")
    p.add_argument("--min-gap", type=int, default=None, help="Минимальный шаг между сайтами")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out-prefix", required=True, metavar="P", help="Пишет P.schema и P.matrix")

    p = sub.add_parser("verify", help="Сверить индекс с наивным оракулом")
    p.add_argument("index", nargs="?", metavar="IDX")
    p.add_argument("--schema", metavar="F")
    p.add_argument("--matrix", metavar="F")
    p.add_argument("--rows", type=int, metavar="M", help="Число слов при k = 0")
    p.add_argument("--stride", metavar="G", help="Шаг якорей при построении из файлов")
    p.add_argument("--patterns", type=int, default=None, metavar="N", help="Сколько образцов проверить")
    p.add_argument("--seed", type=int, default=None, help="Seed выборки образцов")
    p.add_argument("--json", action="store_true", help="Отчёт в JSON")

    return parser


def _load_app(args):
    """Загружает конфиг и настраивает логирование."""
    from app.config import load_config
    from app.logger import setup_logger

    overrides = {}
    if args.log_level:
        overrides["log_level"] = args.log_level
    if getattr(args, "stride", None):
        overrides["stride"] = args.stride

    cfg = load_config(config_file=args.config, overrides=overrides)
    setup_logger(cfg.log_level, cfg.log_dir)
    return cfg


def _emit(lines) -> None:
    for line in lines:
        print(line)


def _emit_json(data: dict) -> None:
    print(json.dumps(data, indent=2))


def _read_text(path: str) -> str:
    from app.errors import MalformedInput

    try:
        return Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise MalformedInput(f"{path}: not valid UTF-8 ({e.reason} at byte {e.start})") from None


def _read_instance(schema_path: str, matrix_path: Optional[str], rows: Optional[int], cfg):
    from app.errors import MalformedInput
    from app.model import VirtualText, parse_matrix, parse_schema

    schema = parse_schema(_read_text(schema_path), placeholder=cfg.placeholder)
    if matrix_path is None:
        if schema.k:
            raise MalformedInput("--matrix is required when the schema has sites")
        text = ""
    else:
        text = _read_text(matrix_path)
    return VirtualText(schema, parse_matrix(text, schema, rows=rows))


def _show_progress(cfg) -> bool:
    return cfg.show_progress and sys.stderr.isatty()


# ─── команды ─────────────────────────────────────────────────

def cmd_build(args, cfg) -> int:
    from app.index import build, save
    from app.model import VirtualText, infer_from_alignment, read_alignment

    if args.align:
        words = read_alignment(_read_text(args.align))
        vt = VirtualText(*infer_from_alignment(words, placeholder=cfg.placeholder))
    else:
        vt = _read_instance(args.schema, args.matrix, args.rows, cfg)

    started = time.perf_counter()
    csa = build(vt, stride=cfg.stride, max_group_bits=cfg.max_group_bits)
    size = save(csa, args.out)
    elapsed = time.perf_counter() - started

    summary = {
        "n": csa.n,
        "k": csa.k,
        "m": csa.m,
        "g": csa.g,
        "bytes": size,
        "build_sec": round(elapsed, 6),
    }
    if args.json:
        _emit_json(summary)
    else:
        _emit(f"{key}\t{value}" for key, value in summary.items())
    return EXIT_OK


def _parse_range(text: str) -> tuple[int, int]:
    from app.errors import IndexOutOfRange

    first, sep, last = text.partition(":")
    try:
        if not sep:
            raise ValueError(text)
        return int(first), int(last)
    except ValueError:
        raise IndexOutOfRange(f"range must look like A:B, got {text!r}") from None


def cmd_query(args, cfg) -> int:
    from app.index import load

    csa = load(args.index)
    if args.range:
        first, last = _parse_range(args.range)
        ranks = range(first, last + 1)
        values = csa.sa_range(first, last)
    else:
        ranks = args.rank
        values = [csa.sa_access(rank) for rank in ranks]
    _emit(f"{rank}\t{value}" for rank, value in zip(ranks, values))
    return EXIT_OK


def cmd_locate(args, cfg) -> int:
    from app.index import load

    csa = load(args.index)
    if args.count_only:
        print(csa.count(args.pattern))
    elif args.rows:
        _emit(f"{pos}\t{row}\t{col}" for pos, row, col in csa.locate_hits(args.pattern))
    else:
        _emit(str(pos) for pos in csa.locate(args.pattern))
    return EXIT_OK


def cmd_stats(args, cfg) -> int:
    from app.index import load

    report = load(args.index).space_report()
    if args.json:
        _emit_json(report.as_json())
    else:
        _emit(f"{name}\t{value}" for name, value in report.rows())
    return EXIT_OK


def cmd_gen(args, cfg) -> int:
    from app.model import GeneratorParams, format_matrix, format_schema, generate

    params = GeneratorParams(
        n=args.n,
        k=args.k,
        m=args.m,
        alphabet=args.sigma,
        min_gap=args.min_gap if args.min_gap is not None else cfg.gen_min_gap,
        seed=args.seed,
        max_retries=cfg.gen_max_retries,
        placeholder=cfg.placeholder,
    )
    schema, matrix = generate(params)

    prefix = Path(args.out_prefix)
    schema_path = prefix.with_name(prefix.name + ".schema")
    matrix_path = prefix.with_name(prefix.name + ".matrix")
    schema_path.write_text(format_schema(schema), encoding="utf-8")
    matrix_path.write_text(format_matrix(matrix), encoding="utf-8")
    _emit([f"schema\t{schema_path}", f"matrix\t{matrix_path}"])
    if schema.k == 0:
        print(f"k = 0: pass --rows {matrix.m} to build/verify", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args, cfg) -> int:
    from app.errors import MalformedInput
    from app.index import load
    from app.oracle import full_compare

    if args.index:
        if args.schema or args.matrix:
            raise MalformedInput("give either an index file or --schema/--matrix, not both")
        csa = load(args.index)
        vt = csa.text
    elif args.schema:
        csa = None
        vt = _read_instance(args.schema, args.matrix, args.rows, cfg)
    else:
        raise MalformedInput("verify needs an index file or --schema/--matrix")

    report = full_compare(
        vt,
        stride=cfg.stride,
        csa=csa,
        patterns=args.patterns if args.patterns is not None else cfg.verify_patterns,
        seed=args.seed if args.seed is not None else cfg.verify_seed,
        max_length=cfg.oracle_max_length,
        max_group_bits=cfg.max_group_bits,
        show_progress=_show_progress(cfg),
    )
    if args.json:
        _emit_json(report.as_json())
    else:
        _emit(report.render())
    return EXIT_OK if report.ok else EXIT_DOMAIN


COMMANDS = {
    "build": cmd_build,
    "query": cmd_query,
    "locate": cmd_locate,
    "stats": cmd_stats,
    "gen": cmd_gen,
    "verify": cmd_verify,
}


def main(argv: Optional[list] = None) -> int:
    from app.config import validate_config
    from app.errors import SnpsaError, UniquenessViolation

    parser = _make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        cfg = _load_app(args)
        errors = validate_config(cfg)
        if errors:
            for e in errors:
                print(f"config: {e}", file=sys.stderr)
            return EXIT_DOMAIN

        return COMMANDS[args.command](args, cfg)
    except UniquenessViolation as e:
        print(f"error: {e}", file=sys.stderr)
        if e.report is not None:
            for line in e.report.render():
                print(line, file=sys.stderr)
        return EXIT_DOMAIN
    except SnpsaError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        logger.debug("I/O failure", exc_info=True)
        return EXIT_IO
