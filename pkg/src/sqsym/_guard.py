"""Size limits for the exhaustive enumerations and the library's error types."""

import os
from contextlib import contextmanager

DEFAULT_MAX_VERTICES = 6
FRAME_CIRCUIT_MAX_VERTICES = 8

_override = None


class SqsymError(ValueError):
    """Base class for every input error raised by the library."""


class InvalidInput(SqsymError):
    pass


class SizeGuardError(SqsymError):
    def __init__(self, what, d, bound):
        super().__init__(
            f"{what}: refusing d={d}, configured bound is {bound} "
            "(raise it with --max-vertices or SQSYM_MAX_VERTICES)"
        )
        self.d = d
        self.bound = bound


def max_vertices():
    if _override is not None:
        return _override
    env = os.environ.get("SQSYM_MAX_VERTICES")
    if env:
        return int(env)
    return DEFAULT_MAX_VERTICES


def set_max_vertices(n):
    global _override
    _override = None if n is None else int(n)


@contextmanager
def vertex_limit(n):
    global _override
    saved = _override
    _override = int(n)
    try:
        yield
    finally:
        _override = saved


def check_size(what, d, bound=None):
    limit = max_vertices() if bound is None else bound
    if d > limit:
        raise SizeGuardError(what, d, limit)
