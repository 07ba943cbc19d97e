"""
Настройка логирования: консоль (stderr) + опциональный файл.
"""
import logging
import os
import sys
from pathlib import Path

ROOT = "snpsa"


def setup_logger(log_level: str = "INFO", log_dir: str = "") -> logging.Logger:
    """
    Настраивает корневой логгер приложения.
    Выводит в stderr; если задан log_dir — ещё и в файл <log_dir>/snpsa.log.
    """
    level = getattr(logging, str(log_level).upper(), logging.INFO)

    logger = logging.getLogger(ROOT)
    logger.setLevel(level)

    if logger.handlers:
        return logger  # уже настроен

    fmt = logging.Formatter(
        "%(asctime)s | %(levelname)-8s | %(name)s | %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )

    # stdout занят результатами команд
    console = logging.StreamHandler(sys.stderr)
    console.setFormatter(fmt)
    logger.addHandler(console)

    if log_dir:
        Path(log_dir).mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(os.path.join(log_dir, "snpsa.log"), encoding="utf-8")
        file_handler.setFormatter(fmt)
        logger.addHandler(file_handler)

    return logger


def get_logger(name: str) -> logging.Logger:
    """Возвращает дочерний логгер."""
    return logging.getLogger(f"{ROOT}.{name}")
