from functools import wraps
from typing import Any, Callable, Iterable, Tuple
import inspect
import time

import pandas as pd


class RuntimeHelper:

    @staticmethod
    def timed(func: Callable[..., Any]) -> Callable[..., Tuple[Any, float]]:
        """
        Decorator measuring wall-clock time of a function (sync or async).

        - If the function is async, awaits the result.
        - The wrapper returns `(result, elapsed_seconds)`.
        """

        @wraps(func)
        async def async_wrapper(*args, **kwargs):
            start = time.perf_counter()
            result = await func(*args, **kwargs)
            return result, time.perf_counter() - start

        @wraps(func)
        def sync_wrapper(*args, **kwargs):
            start = time.perf_counter()
            result = func(*args, **kwargs)
            return result, time.perf_counter() - start

        if inspect.iscoroutinefunction(func):
            return async_wrapper
        else:
            return sync_wrapper

    @staticmethod
    def to_df(records: Iterable[Any]) -> pd.DataFrame:
        """
        Convert records exposing `to_dict()` (or plain dicts) to a DataFrame.
        """
        rows = [
            record if isinstance(record, dict) else record.to_dict()
            for record in records
        ]
        return pd.DataFrame(rows)
