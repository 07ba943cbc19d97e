"""
Retry-декоратор для повторяемых попыток (например, пересэмплирования).
"""
import functools
import logging
import time
from typing import Callable, Optional, Tuple, Type

logger = logging.getLogger("snpsa.retry")


def retry(
    max_attempts: int = 3,
    exceptions: Tuple[Type[Exception], ...] = (Exception,),
    give_up: Optional[Type[Exception]] = None,
    on_retry: Optional[Callable] = None,
    backoff_sec: float = 0.0,
):
    """
    Декоратор: повторяет вызов функции при исключении.

    Args:
        max_attempts: максимальное количество попыток
        exceptions:   какие исключения перехватывать
        give_up:      класс исключения, которым заменяется последняя ошибка
                      (None — пробросить её как есть)
        on_retry:     callback(attempt, exc) при каждой повторной попытке
        backoff_sec:  базовая пауза (удваивается с каждой попыткой), 0 — без пауз
    """
    if max_attempts < 1:
        raise ValueError(f"max_attempts must be >= 1, got {max_attempts}")

    def decorator(fn: Callable) -> Callable:
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            for attempt in range(1, max_attempts + 1):
                try:
                    return fn(*args, **kwargs)
                except exceptions as exc:
                    if attempt == max_attempts:
                        if give_up is None:
                            raise
                        raise give_up(
                            f"{fn.__name__}: {max_attempts} attempts failed, last error: {exc}"
                        ) from exc
                    logger.debug("Attempt %d/%d failed: %s", attempt, max_attempts, exc)
                    if on_retry:
                        on_retry(attempt, exc)
                    if backoff_sec > 0:
                        time.sleep(backoff_sec * (2 ** (attempt - 1)))
        return wrapper
    return decorator
