"""Kernel dispatch: the compiled extension when importable, pure Python otherwise."""

from __future__ import annotations

from types import ModuleType

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # pragma: no cover - depends on the build
    _ckernels = None

_active: ModuleType = _ckernels if _ckernels is not None else _pykernels

rows_from_code = _pykernels.rows_from_code
rows_from_pairs = _pykernels.rows_from_pairs
CODE_MAX_ORDER = _pykernels.CODE_MAX_ORDER


def compiled_available() -> bool:
    return _ckernels is not None


def backend_name() -> str:
    return "compiled" if _active is _ckernels else "python"


def use_backend(name: str) -> str:
    """Select ``"compiled"`` or ``"python"``; returns the previous backend name."""
    global _active
    previous = backend_name()
    if name == "python":
        _active = _pykernels
    elif name == "compiled":
        if _ckernels is None:
            raise RuntimeError("compiled kernels are not built")
        _active = _ckernels
    else:
        raise ValueError(f"unknown backend {name!r}")
    return previous


def inertia_counts(rows, n: int) -> tuple[int, int, int]:
    return _active.inertia_counts(rows, n)


def canonical_code(rows, n: int) -> int:
    return _active.canonical_code(rows, n)


def labelled_codes(n: int):
    return _active.labelled_codes(n)
