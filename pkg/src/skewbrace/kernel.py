"""Selection of the enumeration kernel backend.

The compiled backend is preferred when its extension module is importable;
the pure-Python twin is always available. Set SKEWBRACE_KERNEL=py or
SKEWBRACE_KERNEL=cy to force a choice.
"""

from __future__ import annotations

import os

from . import _regular_py

ENV_KERNEL = "SKEWBRACE_KERNEL"

try:
    from . import _regular_cy  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover - depends on the build
    _regular_cy = None

_BACKENDS = {"py": _regular_py, "cy": _regular_cy}


def available_kernels() -> list[str]:
    return [name for name, mod in _BACKENDS.items() if mod is not None]


def get_kernel(name: str | None = None):
    """Resolve a kernel module by name, env override, or best available."""
    name = name or os.environ.get(ENV_KERNEL)
    if name is None:
        name = "cy" if _regular_cy is not None else "py"
    mod = _BACKENDS.get(name)
    if mod is None:
        raise ValueError(
            f"kernel {name!r} not available; choose from {available_kernels()}"
        )
    return mod
