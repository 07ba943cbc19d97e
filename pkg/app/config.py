"""
Единый загрузчик конфигурации.
Приоритет: CLI аргументы > ENV vars > config.yaml > defaults
"""
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

try:
    from dotenv import load_dotenv
    load_dotenv()
except ImportError:
    pass  # первый запуск до pip install

try:
    import yaml
    _HAS_YAML = True
except ImportError:
    _HAS_YAML = False


SENTINEL = "#"

# таблица C упакованной группы занимает 2^p + 1 целых
MAX_GROUP_BITS_LIMIT = 16

# SSNPSA_LOG принимает короткие имена уровней
_LOG_ALIASES = {
    "quiet": "WARNING",
    "info": "INFO",
    "debug": "DEBUG",
}


@dataclass
class Config:
    # ─── Index ───────────────────────────────────────────────
    stride: str = "auto"              # "auto" | целое >= 1
    max_group_bits: int = 16          # предел p для упакованной группы

    # ─── Model ───────────────────────────────────────────────
    placeholder: str = "?"            # символ SNP-сайта в строке ref=

    # ─── Generator ───────────────────────────────────────────
    gen_max_retries: int = 64
    gen_min_gap: int = 2

    # ─── Oracle / verify ─────────────────────────────────────
    oracle_max_length: int = 1 << 20
    verify_patterns: int = 20
    verify_seed: int = 0

    # ─── Logging / UI ────────────────────────────────────────
    log_level: str = "INFO"
    log_dir: str = ""                 # пусто — без файла лога
    show_progress: bool = True

    # ошибки разбора ENV/YAML, их отдаёт validate_config
    load_errors: list = field(default_factory=list, repr=False)


def _yaml_value(data: dict, *keys):
    """Получить вложенное значение из YAML dict по цепочке ключей."""
    for key in keys:
        if not isinstance(data, dict):
            return None
        data = data.get(key)
    return data


def _as_bool(value) -> bool:
    return value not in (False, "false", "False", "0", 0, "no", "off")


def load_config(
    config_file: Optional[str] = None,
    overrides: Optional[dict] = None,
) -> Config:
    """
    Загружает конфигурацию с приоритетом:
    CLI overrides > ENV > config.yaml > defaults

    Args:
        config_file: путь к config.yaml (None — ищет ./config.yaml)
        overrides: словарь CLI-аргументов (только те, что реально переданы)
    """
    cfg = Config()
    overrides = overrides or {}

    # ── Шаг 1: YAML ──────────────────────────────────────────
    yaml_data: dict = {}
    if _HAS_YAML:
        yaml_path = config_file or "config.yaml"
        if Path(yaml_path).exists():
            try:
                with open(yaml_path, encoding="utf-8") as f:
                    yaml_data = yaml.safe_load(f) or {}
            except (yaml.YAMLError, UnicodeDecodeError) as e:
                cfg.load_errors.append(f"cannot parse {yaml_path}: {e}")
                yaml_data = {}
            if not isinstance(yaml_data, dict):
                cfg.load_errors.append(f"{yaml_path}: top level must be a mapping")
                yaml_data = {}

    def y(*keys):
        return _yaml_value(yaml_data, *keys)

    # ── Шаг 2: ENV > YAML > default ──────────────────────────
    def get(env_key: str, yaml_val, default):
        """ENV → YAML → default"""
        env = os.getenv(env_key)
        if env is not None:
            return env
        if yaml_val is not None:
            return yaml_val
        return default

    def get_int(name: str, env_key: str, yaml_val, default: int) -> int:
        raw = get(env_key, yaml_val, default)
        try:
            return int(raw)
        except (TypeError, ValueError):
            cfg.load_errors.append(f"{name} must be an integer, got {raw!r}")
            return default

    cfg.stride         = str(get("SSNPSA_STRIDE", y("index", "stride"), cfg.stride)).strip()
    cfg.max_group_bits = get_int("max_group_bits", "SSNPSA_MAX_GROUP_BITS", y("index", "max_group_bits"), cfg.max_group_bits)

    cfg.placeholder    = str(get("SSNPSA_PLACEHOLDER", y("model", "placeholder"), cfg.placeholder))

    cfg.gen_max_retries = get_int("generator max_retries", "SSNPSA_GEN_RETRIES", y("generator", "max_retries"), cfg.gen_max_retries)
    cfg.gen_min_gap     = get_int("generator min_gap",     "SSNPSA_GEN_MIN_GAP", y("generator", "min_gap"),     cfg.gen_min_gap)

    cfg.oracle_max_length = get_int("oracle_max_length", "SSNPSA_ORACLE_MAX",      y("oracle", "max_text_length"), cfg.oracle_max_length)
    cfg.verify_patterns   = get_int("verify patterns",   "SSNPSA_VERIFY_PATTERNS", y("oracle", "patterns"),        cfg.verify_patterns)
    cfg.verify_seed       = get_int("verify seed",       "SSNPSA_VERIFY_SEED",     y("oracle", "seed"),            cfg.verify_seed)

    # SSNPSA_LOG (quiet/info/debug) важнее общего LOG_LEVEL
    level = get("LOG_LEVEL", y("logging", "level"), cfg.log_level)
    short = os.getenv("SSNPSA_LOG")
    if short is not None:
        level = _LOG_ALIASES.get(short.strip().lower(), short)
    cfg.log_level     = str(level).upper()
    cfg.log_dir       = str(get("SSNPSA_LOG_DIR", y("logging", "dir"), cfg.log_dir) or "")
    cfg.show_progress = _as_bool(get("SSNPSA_PROGRESS", y("ui", "progress"), cfg.show_progress))

    # ── Шаг 3: CLI overrides (наивысший приоритет) ───────────
    for key, val in overrides.items():
        if val is not None and hasattr(cfg, key):
            setattr(cfg, key, val)

    if cfg.log_dir:
        cfg.log_dir = str(Path(cfg.log_dir).expanduser())

    return cfg


def validate_config(cfg: Config) -> list:
    """
    Проверяет конфигурацию. Возвращает список ошибок (пустой = OK).
    """
    errors = list(cfg.load_errors)

    stride = str(cfg.stride).strip().lower()
    if stride != "auto":
        try:
            if int(stride) < 1:
                errors.append(f"stride must be >= 1 or 'auto', got {cfg.stride!r}")
        except ValueError:
            errors.append(f"stride must be an integer or 'auto', got {cfg.stride!r}")

    if len(cfg.placeholder) != 1 or cfg.placeholder.isspace():
        errors.append(f"placeholder must be a single visible character, got {cfg.placeholder!r}")
    elif cfg.placeholder == SENTINEL:
        errors.append(f"placeholder must differ from the sentinel {SENTINEL!r}")

    if not 1 <= cfg.max_group_bits <= MAX_GROUP_BITS_LIMIT:
        errors.append(f"max_group_bits must be in 1..{MAX_GROUP_BITS_LIMIT}, got {cfg.max_group_bits}")

    if cfg.oracle_max_length < 1:
        errors.append(f"oracle_max_length must be positive, got {cfg.oracle_max_length}")

    if cfg.gen_min_gap < 2:
        errors.append(f"generator min_gap must be >= 2, got {cfg.gen_min_gap}")

    if cfg.log_level not in ("DEBUG", "INFO", "WARNING", "ERROR"):
        errors.append(f"unknown log level {cfg.log_level!r}")

    return errors
