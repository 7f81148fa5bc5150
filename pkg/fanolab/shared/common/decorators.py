import functools
from asyncio import iscoroutinefunction
from time import perf_counter
from typing import Callable

from fanolab.shared.utils.logger import logger


def timer_func(func: Callable):
    """
    Logs the wall time of the wrapped callable, sync or async.

    :param func: function to time
    :return: wrapped function
    """

    @functools.wraps(func)
    async def async_wrapper(*args, **kwargs):
        t1 = perf_counter()
        result = await func(*args, **kwargs)
        t2 = perf_counter()
        logger.info(f"Function {func.__qualname__!r} executed in {(t2 - t1):.4f}s")
        return result

    @functools.wraps(func)
    def sync_wrapper(*args, **kwargs):
        t1 = perf_counter()
        result = func(*args, **kwargs)
        t2 = perf_counter()
        logger.info(f"Function {func.__qualname__!r} executed in {(t2 - t1):.4f}s")
        return result

    return async_wrapper if iscoroutinefunction(func) else sync_wrapper
