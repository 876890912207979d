"""Kernel selection.

Prefers the compiled extension, falls back to pure Python.  Set
BSFOUR_PURE_KERNEL=1 to force the fallback (used by the benchmark and
to cross-check the two implementations).
"""

import os

if os.environ.get("BSFOUR_PURE_KERNEL"):
    from . import _pure as _impl
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _pure as _impl

backend_name = "compiled" if _impl.__name__.endswith("_speedups") else "pure"

bs_reduce = _impl.bs_reduce
bs_mul = _impl.bs_mul
bs_inv = _impl.bs_inv
eval_word = _impl.eval_word
ring_mul = _impl.ring_mul
ring_addmul = _impl.ring_addmul
ring_involute = _impl.ring_involute
