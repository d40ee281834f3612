import functools
import time
from itertools import islice
from typing import Callable, Iterable, Iterator, TypeVar

from .global_names import logger

T = TypeVar("T")


def profile(func: Callable[..., T]) -> Callable[..., T]:
    @functools.wraps(func)
    def wrapper(*args, **kwargs) -> T:
        start = time.time()
        result = func(*args, **kwargs)
        logger.debug(f"{func.__name__} took {time.time() - start:.4f} seconds")
        return result
    return wrapper


def chunked(items: Iterable[T], size: int) -> Iterator[list[T]]:
    "Split an iterable into lists of at most size items"
    iterator = iter(items)
    while chunk := list(islice(iterator, size)):
        yield chunk
