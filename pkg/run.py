#!/usr/bin/env python3
"""
SnpSA — главная точка входа.

Использование:
  python run.py gen --n 40 --k 3 --m 8 --seed 1 --out-prefix demo
  python run.py build --schema demo.schema --matrix demo.matrix --out demo.idx
  python run.py query demo.idx --range 1:10
  python run.py locate demo.idx --pattern acg
  python run.py stats demo.idx --json
  python run.py verify demo.idx

Подробнее: python run.py <команда> --help
"""
import sys


def _bootstrap():
    """Проверяет Python-версию."""
    if sys.version_info < (3, 10):
        print(
            f"Ошибка: требуется Python 3.10+, у тебя {sys.version}",
            file=sys.stderr,
        )
        sys.exit(1)


if __name__ == "__main__":
    _bootstrap()
    from app.cli import main
    sys.exit(main())
