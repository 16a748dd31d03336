"""Backend selection for the hot kernels.

The compiled module ``_ckernels`` is used when it was built; otherwise, or
when the environment variable ``SYMBREAK_PURE_PYTHON`` is set to a
non-empty value, the pure-Python ``_pykernels`` is used. Both expose the
same four functions and produce identical results.
"""

from __future__ import annotations

import os
from types import ModuleType

import numpy as np

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None


class Backend:
    """Uniform call surface over one kernel implementation."""

    def __init__(self, name: str, impl: ModuleType):
        self.name = name
        self._impl = impl
        self._compiled = impl is not _pykernels

    def _arr(self, seq):
        if self._compiled:
            return np.ascontiguousarray(seq, dtype=np.int64)
        return list(seq) if not isinstance(seq, list) else seq

    def refine(self, indptr, indices, colors) -> list[int]:
        return self._impl.refine(self._arr(indptr), self._arr(indices), [int(c) for c in colors])

    def search(self, indptr, indices, colp, colq, order, proj: int, cap: int) -> list[tuple[int, ...]]:
        if cap < 1:
            raise ValueError("cap must be >= 1")
        n = len(order)
        proj = n if proj <= 0 or proj > n else proj
        return self._impl.search(
            self._arr(indptr), self._arr(indices), self._arr(colp), self._arr(colq),
            self._arr(order), proj, cap,
        )

    def count_preserved(self, images, d: int) -> int:
        return int(self._impl.count_preserved(self._arr(images), d))

    def preservation_table(self, perms, n: int, d: int) -> list[int]:
        if self._compiled:
            arr = np.ascontiguousarray(perms, dtype=np.int64).reshape(len(perms), n)
            return self._impl.preservation_table(arr, n, d)
        return self._impl.preservation_table([tuple(p) for p in perms], n, d)

    def __repr__(self):
        return f"Backend({self.name!r})"


def available() -> list[str]:
    return ["python"] + (["cython"] if _ckernels is not None else [])


def load(name: str) -> Backend:
    if name == "python":
        return Backend("python", _pykernels)
    if name == "cython":
        if _ckernels is None:
            raise ImportError("compiled kernels are not built; run `pip install -e .`")
        return Backend("cython", _ckernels)
    raise ValueError(f"unknown kernel backend {name!r}")


def _select() -> Backend:
    if os.environ.get("SYMBREAK_PURE_PYTHON") or _ckernels is None:
        return load("python")
    return load("cython")


backend = _select()
BACKEND = backend.name
